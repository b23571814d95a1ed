#pragma once

#include <map>
#include <string>
#include <vector>

#include "symtoep/matrix_window.hpp"

namespace symtoep {

/// One named verdict inside a report. Exact checks carry residual 0 or 1
/// (zero / nonzero) and ignore tol; toleranced checks pass iff residual <= tol.
struct CheckResult {
  std::string name;
  bool passed = true;
  bool exact = false;
  double residual = 0.0;
  double tol = 0.0;
  std::string note;
};

struct Report {
  std::string check;
  bool verdict = true;
  std::vector<CheckResult> checks;
  std::vector<Witness> witnesses;
  std::vector<double> norms;
  std::map<std::string, double> values;
  std::map<std::string, std::string> info;

  /// Appends c and folds it into the overall verdict.
  void add(CheckResult c);
  /// Check by name; throws std::out_of_range if absent.
  const CheckResult& get(const std::string& name) const;
  bool has(const std::string& name) const;
  /// Largest residual - tol over failing toleranced checks (0 if none fail).
  double failure_margin() const;
};

/// Exact zero/nonzero verdict on a window matrix; a nonzero matrix adds its
/// first nonzero entry to the report's witnesses.
CheckResult exact_zero_check(Report& r, const std::string& name, const MatrixWindow& m);

/// Toleranced verdict residual <= tol.
CheckResult tol_check(const std::string& name, double residual, double tol, std::string note = {});

}  // namespace symtoep
