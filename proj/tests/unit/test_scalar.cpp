#include <gtest/gtest.h>

#include "hopfkit/errors.hpp"
#include "hopfkit/matrix.hpp"

using namespace hopfkit;

TEST(Scalar, RationalParseIsCanonical) {
  const Field q = Field::rationals();
  EXPECT_EQ(q.parse("6/4").str(), "3/2");
  EXPECT_EQ(q.parse("-6/4").str(), "-3/2");
  EXPECT_EQ(q.parse("+5").str(), "5");
  EXPECT_EQ(q.parse("0/7").str(), "0");
  EXPECT_EQ(q.parse("10/5").str(), "2");
}

TEST(Scalar, MalformedScalarsThrow) {
  const Field q = Field::rationals();
  for (const char* bad : {"1/0", "", "1/", "/2", "1.5", "a", "1/-2", "--1", "1 "}) {
    EXPECT_THROW(q.parse(bad), ValidationError) << bad;
  }
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Field f = Field::prime(7);
  const Scalar three = f.from_int(3);
  EXPECT_EQ((three * three).str(), "2");
  EXPECT_EQ(f.from_int(-1).str(), "6");
  EXPECT_EQ((three.inverse() * three), f.one());
  EXPECT_EQ(f.parse("1/3"), three.inverse());
  EXPECT_EQ(f.parse("-2").str(), "5");
}

TEST(Scalar, InverseOfZeroThrows) {
  EXPECT_THROW(Field::rationals().zero().inverse(), std::domain_error);
  EXPECT_THROW(Field::prime(5).zero().inverse(), std::domain_error);
}

TEST(Scalar, FieldMismatchIsStructural) {
  EXPECT_THROW(Field::rationals().one() + Field::prime(3).one(), StructuralError);
}

TEST(Scalar, NonPrimeCharacteristicRejected) {
  EXPECT_THROW(Field::prime(4), ValidationError);
  EXPECT_THROW(Field::prime(1), ValidationError);
  EXPECT_NO_THROW(Field::prime(1000003));
}

TEST(Scalar, FieldNames) {
  EXPECT_EQ(Field::rationals().name(), "Q");
  EXPECT_EQ(Field::prime(5).name(), "Fp:5");
}

TEST(Scalar, FermatInverseMatchesParse) {
  const Field f = Field::prime(1000003);
  for (long long v = 1; v < 50; ++v) EXPECT_EQ(f.from_int(v) * f.from_int(v).inverse(), f.one());
}

TEST(Matrix, KronIndexConvention) {
  const Field q = Field::rationals();
  const Vector a{q.from_int(1), q.from_int(2)};
  const Vector b{q.from_int(3), q.from_int(5), q.from_int(7)};
  const Vector ab = kron(a, b);
  ASSERT_EQ(ab.size(), 6u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(ab[i * 3 + j], a[i] * b[j]);
}

TEST(Matrix, MixedProductProperty) {
  const Field q = Field::rationals();
  const Matrix a = Matrix::from_ints({{1, 2}, {0, -1}}, q);
  const Matrix b = Matrix::from_ints({{2, 0, 1}, {1, 1, 0}, {0, 3, 1}}, q);
  const Matrix c = Matrix::from_ints({{0, 1}, {1, 1}}, q);
  const Matrix d = Matrix::from_ints({{1, 0, 0}, {2, 1, 0}, {0, 0, 4}}, q);
  EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
}

TEST(Matrix, ApplyMatchesProduct) {
  const Field q = Field::rationals();
  const Matrix a = Matrix::from_ints({{1, 2, 3}, {4, 5, 6}}, q);
  const Vector x{q.from_int(1), q.from_int(-1), q.from_int(2)};
  const Matrix col = Matrix::from_columns({x}, 3, q);
  EXPECT_EQ((a * col).column(0), a.apply(x));
}

TEST(Matrix, ShapeErrors) {
  const Field q = Field::rationals();
  const Matrix a = Matrix::from_ints({{1, 2}}, q);
  EXPECT_THROW(a * a, StructuralError);
  EXPECT_THROW(a.apply({q.one()}), StructuralError);
  EXPECT_THROW(Matrix::from_rows({{q.one()}}, 2, q), StructuralError);
}

TEST(Matrix, TransposeInvolution) {
  const Field f = Field::prime(5);
  const Matrix a = Matrix::from_ints({{1, 2, 3}, {4, 5, 6}}, f);
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(a.transpose()(2, 1).str(), "1");
}
