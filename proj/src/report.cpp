#include "hopfkit/report.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfkit {

Check& Report::add(std::string name) {
  Check c;
  c.name = std::move(name);
  checks_.push_back(std::move(c));
  return checks_.back();
}

void Report::fail(Check& check, std::vector<std::size_t> tuple, Vector lhs, Vector rhs, std::string detail) {
  if (!check.pass) return;
  check.pass = false;
  check.tuple = std::move(tuple);
  check.lhs = std::move(lhs);
  check.rhs = std::move(rhs);
  check.detail = std::move(detail);
}

bool Report::expect(Check& check, const std::vector<std::size_t>& tuple, const Vector& lhs, const Vector& rhs,
                    const std::string& detail) {
  if (lhs == rhs) return true;
  fail(check, tuple, lhs, rhs, detail);
  return false;
}

bool Report::ok() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

const Check& Report::at(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return c;
  throw std::out_of_range("Report: no check named " + name);
}

const Check* Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.pass) return &c;
  return nullptr;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

std::string vector_str(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string Report::str() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.pass) {
      os << " at (";
      for (std::size_t i = 0; i < c.tuple.size(); ++i) os << (i ? "," : "") << c.tuple[i];
      os << ')';
      if (!c.detail.empty()) os << ' ' << c.detail;
      if (!c.lhs.empty() || !c.rhs.empty()) os << " lhs=" << vector_str(c.lhs) << " rhs=" << vector_str(c.rhs);
    }
    os << '\n';
  }
  return os.str();
}

std::string element_str(const Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].str();
    const bool negative = c[0] == '-';
    if (negative) c = c.substr(1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += c == "1" ? labels.at(i) : c + "*" + labels.at(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace hopfkit
