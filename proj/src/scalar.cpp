#include "hopfkit/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "hopfkit/errors.hpp"

namespace hopfkit {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin; these witnesses are exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 62) || !is_prime(p)) {
    throw ValidationError("field modulus " + std::to_string(p) + " is not a supported prime");
  }
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    s.q_ = static_cast<long>(v);
  } else {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Field::from_rational(const mpq_class& q) const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }
  std::uint64_t den = reduce(q.get_den(), p_);
  if (den == 0) throw ValidationError("denominator vanishes modulo " + std::to_string(p_));
  s.r_ = mulmod(reduce(q.get_num(), p_), powmod(den, p_ - 2, p_), p_);
  return s;
}

Scalar Field::parse(std::string_view text) const {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!den.empty() && (den[0] == '-' || den[0] == '+')) {
      throw ValidationError("malformed scalar \"" + std::string(text) + "\"");
    }
  }
  if (!valid_integer(num) || !valid_integer(den)) {
    throw ValidationError("malformed scalar \"" + std::string(text) + "\"");
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  const mpz_class d{std::string(den)};
  if (sgn(d) == 0) throw ValidationError("zero denominator in scalar \"" + std::string(text) + "\"");
  mpq_class q{mpz_class{n}, d};
  q.canonicalize();
  return from_rational(q);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Field Scalar::field() const { return Field(p_); }

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) {
    throw StructuralError("field mismatch between scalars (" + std::to_string(p_) + " vs " +
                          std::to_string(o.p_) + ")");
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (p_ == 0) {
    q_ -= o.q_;
  } else {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + (p_ - o.r_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (p_ == 0) {
    q_ *= o.q_;
  } else {
    r_ = mulmod(r_, o.r_, p_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  check_same_field(a);
  check_same_field(b);
  if (p_ == 0) {
    if (sgn(a.q_) == 0 || sgn(b.q_) == 0) return;
    q_ += a.q_ * b.q_;
  } else {
    r_ += mulmod(a.r_, b.r_, p_);
    if (r_ >= p_) r_ -= p_;
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = p_ - r_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = mpq_class(1) / q_;
  } else {
    s.r_ = powmod(r_, p_ - 2, p_);
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::str() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hopfkit
