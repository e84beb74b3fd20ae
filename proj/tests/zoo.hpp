#pragma once

#include <string>
#include <vector>

#include "hopfkit/bialgebra.hpp"

namespace testzoo {

struct Member {
  std::string name;
  hopfkit::Bialgebra b;
};

/// The Hopf algebras of the acceptance suite.
inline std::vector<Member> positives() {
  using namespace hopfkit;
  const Field q = Field::rationals();
  return {{"QC2", zoo::cyclic_group(2, q)},
          {"QC3", zoo::cyclic_group(3, q)},
          {"QS3", zoo::symmetric_group(3, q)},
          {"F2[x]/(x^2)", zoo::divided_power_char_p(2, Field::prime(2))},
          {"H4", zoo::sweedler_h4(q)}};
}

inline Member negative() { return {"idempotent monoid", hopfkit::zoo::idempotent_monoid(hopfkit::Field::rationals())}; }

}  // namespace testzoo
