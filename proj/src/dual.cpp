#include "symtoep/dual.hpp"

#include <algorithm>

#include "symtoep/error.hpp"
#include "symtoep/hardy.hpp"

namespace symtoep {

Window dual_window(int d, int max_top, int min_bottom) {
  if (min_bottom >= 0) throw DomainError("dual window needs minBottom < 0");
  return Window::enumerate(d, max_top, min_bottom).restricted(Space::NonAnalytic);
}

Scalar dual_entry(const Symbol& phi, const Partition& q, const Partition& p) {
  return Operator::dual_toeplitz(phi).entry(q, p);
}

std::vector<Operator> conjugate_coordinate_tuple(int d) {
  std::vector<Operator> tuple;
  for (int i = 1; i <= d; ++i) tuple.push_back(Operator::dual_toeplitz(conjugate(Symbol::elementary(d, i))));
  return tuple;
}

std::vector<MatrixWindow> dual_bh_residuals(const Operator& t, const Window& window) {
  Window w = window.restricted(Space::NonAnalytic);
  std::vector<MatrixWindow> out;
  for (const auto& op : brown_halmos_operators(conjugate_coordinate_tuple(t.d()), t)) out.push_back(assemble(op, w));
  return out;
}

Report block_decomposition_check(const Symbol& phi, const Window& full_window) {
  const int d = phi.d();
  const int margin = std::max(phi.height(), 1);
  if (full_window.min_bottom() > -margin || full_window.max_top() < d - 1 + margin)
    throw MarginError("block_decomposition_check: window needs minBottom <= " + std::to_string(-margin) +
                      " and maxTop >= " + std::to_string(d - 1 + margin));
  Window an = full_window.restricted(Space::Analytic);
  Window non = full_window.restricted(Space::NonAnalytic);
  MatrixWindow lw = assemble(Operator::laurent(phi), full_window);

  struct Block {
    const char* name;
    const Window* rows;
    const Window* cols;
    Operator op;
  };
  std::vector<Block> blocks{
      {"T", &an, &an, Operator::toeplitz(phi)},
      {"H", &non, &an, Operator::hankel(phi)},
      {"H*", &an, &non, Operator::hankel(conjugate(phi)).adjoint()},
      {"DT", &non, &non, Operator::dual_toeplitz(phi)},
  };
  Report r;
  r.check = "block";
  for (const auto& b : blocks) {
    MatrixWindow sub;
    sub.rows = *b.rows;
    sub.cols = *b.cols;
    for (const auto& [ij, v] : lw.entries) {
      auto qi = b.rows->index_of(lw.row_index(ij.first));
      auto pi = b.cols->index_of(lw.col_index(ij.second));
      if (qi && pi) sub.entries[{*qi, *pi}] = v;
    }
    r.values[std::string("nonzeros_") + b.name] = static_cast<double>(sub.entries.size());
    r.add(exact_zero_check(r, b.name, subtract(sub, assemble(b.op, *b.rows, *b.cols))));
  }
  return r;
}

}  // namespace symtoep
