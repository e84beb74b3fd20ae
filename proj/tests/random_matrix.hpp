#pragma once

#include <random>

#include "hopfkit/matrix.hpp"

namespace testrand {

/// Entries in [-range, range], roughly `density` of them nonzero.
inline hopfkit::Matrix matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, const hopfkit::Field& f,
                              int range = 3, double density = 0.6) {
  std::uniform_int_distribution<int> value(-range, range);
  std::bernoulli_distribution keep(density);
  hopfkit::Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m(r, c) = f.from_int(value(rng));
  return m;
}

inline hopfkit::Vector vector(std::mt19937& rng, std::size_t n, const hopfkit::Field& f, int range = 3) {
  std::uniform_int_distribution<int> value(-range, range);
  hopfkit::Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.from_int(value(rng)));
  return v;
}

inline std::vector<hopfkit::Field> fields() {
  return {hopfkit::Field::rationals(), hopfkit::Field::prime(2), hopfkit::Field::prime(7),
          hopfkit::Field::prime(1000003)};
}

}  // namespace testrand
