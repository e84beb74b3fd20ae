#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "hopfkit/matrix.hpp"

namespace hopfkit {

/// Outcome of one identity checked over all basis tuples.
struct Check {
  std::string name;
  bool pass = true;
  /// First violating basis-index tuple; empty when the check passed.
  std::vector<std::size_t> tuple;
  Vector lhs;
  Vector rhs;
  std::string detail;
};

class Report {
 public:
  Check& add(std::string name);
  /// Records a failure on `check` unless it already failed.
  static void fail(Check& check, std::vector<std::size_t> tuple, Vector lhs, Vector rhs, std::string detail = {});
  /// Shorthand: records the comparison lhs == rhs on `check`.
  static bool expect(Check& check, const std::vector<std::size_t>& tuple, const Vector& lhs, const Vector& rhs,
                     const std::string& detail = {});

  bool ok() const;
  const std::deque<Check>& checks() const { return checks_; }
  /// Throws std::out_of_range for an unknown name.
  const Check& at(const std::string& name) const;
  const Check* first_failure() const;
  void merge(const Report& other, const std::string& prefix = {});

  std::string str() const;

 private:
  std::deque<Check> checks_;
};

std::string vector_str(const Vector& v);
/// Linear combination of `labels`, e.g. "x - gx" or "1/2*g".
std::string element_str(const Vector& v, const std::vector<std::string>& labels);

}  // namespace hopfkit
