#pragma once

#include <random>
#include <string>
#include <vector>

#include "hopfkit/bialgebra.hpp"

namespace testmut {

struct Mutation {
  std::string where;
  hopfkit::Bialgebra b;
};

/// Every structure constant of b as (tensor, row, col) with tensor 0 = mult,
/// 1 = comult, 2 = unit, 3 = counit.
inline std::vector<std::array<std::size_t, 3>> sites(const hopfkit::Bialgebra& b) {
  std::vector<std::array<std::size_t, 3>> out;
  const std::size_t n = b.dim();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n * n; ++c) out.push_back({0, r, c});
  for (std::size_t r = 0; r < n * n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.push_back({1, r, c});
  for (std::size_t i = 0; i < n; ++i) out.push_back({2, i, 0});
  for (std::size_t i = 0; i < n; ++i) out.push_back({3, i, 0});
  return out;
}

inline Mutation mutate(const hopfkit::Bialgebra& b, const std::array<std::size_t, 3>& site) {
  using namespace hopfkit;
  Matrix mult = b.mult(), comult = b.comult();
  Vector unit = b.unit(), counit = b.counit();
  const Scalar one = b.field().one();
  static const char* names[] = {"mult", "comult", "unit", "counit"};
  switch (site[0]) {
    case 0: mult(site[1], site[2]) += one; break;
    case 1: comult(site[1], site[2]) += one; break;
    case 2: unit[site[1]] += one; break;
    default: counit[site[1]] += one; break;
  }
  std::string where = std::string(names[site[0]]) + "(" + std::to_string(site[1]);
  if (site[0] < 2) where += "," + std::to_string(site[2]);
  where += ")";
  return {where, Bialgebra::unchecked(b.field(), b.labels(), mult, unit, comult, counit)};
}

/// 20 mutations: all of them when b has exactly 20 constants, otherwise a
/// fixed-seed sample without repetition.
inline std::vector<Mutation> twenty(const hopfkit::Bialgebra& b, unsigned seed = 20240917) {
  auto all = sites(b);
  if (all.size() > 20) {
    std::mt19937 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(20);
  }
  std::vector<Mutation> out;
  for (const auto& s : all) out.push_back(mutate(b, s));
  return out;
}

}  // namespace testmut
