#include "symtoep/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace symtoep {

void Report::add(CheckResult c) {
  verdict = verdict && c.passed;
  checks.push_back(std::move(c));
}

const CheckResult& Report::get(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("report '" + check + "' has no check named '" + name + "'");
}

bool Report::has(const std::string& name) const {
  return std::any_of(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
}

double Report::failure_margin() const {
  double m = 0.0;
  for (const auto& c : checks)
    if (!c.passed && !c.exact) m = std::max(m, c.residual - c.tol);
  return m;
}

CheckResult exact_zero_check(Report& r, const std::string& name, const MatrixWindow& m) {
  CheckResult c{name, m.is_zero(), true, m.is_zero() ? 0.0 : 1.0, 0.0, {}};
  if (auto w = first_nonzero(m, name)) {
    c.note = std::to_string(m.entries.size()) + " nonzero entries";
    r.witnesses.push_back(*w);
  }
  return c;
}

CheckResult tol_check(const std::string& name, double residual, double tol, std::string note) {
  return CheckResult{name, residual <= tol, false, residual, tol, std::move(note)};
}

}  // namespace symtoep
