#include "symtoep/matrix_window.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "symtoep/error.hpp"

namespace symtoep {

Scalar MatrixWindow::at(std::size_t i, std::size_t j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? Scalar() : it->second;
}

Eigen::SparseMatrix<std::complex<double>> MatrixWindow::to_sparse() const {
  std::vector<Eigen::Triplet<std::complex<double>>> trip;
  trip.reserve(entries.size());
  for (const auto& [ij, v] : entries)
    trip.emplace_back(static_cast<Eigen::Index>(ij.first), static_cast<Eigen::Index>(ij.second), v.to_complex());
  Eigen::SparseMatrix<std::complex<double>> m(static_cast<Eigen::Index>(n_rows()), static_cast<Eigen::Index>(n_cols()));
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

Eigen::MatrixXcd MatrixWindow::to_dense() const { return Eigen::MatrixXcd(to_sparse()); }

std::optional<Witness> first_nonzero(const MatrixWindow& m, std::string label) {
  if (m.entries.empty()) return std::nullopt;
  const auto& [ij, v] = *m.entries.begin();
  return Witness{std::move(label), m.row_index(ij.first), m.col_index(ij.second), v};
}

unsigned worker_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SYMTOEP_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && n >= 1) return static_cast<unsigned>(std::min<long>(n, hw));
  }
  return hw;
}

namespace {

void check_window(const Window& w, Space s, int d, const char* what) {
  if (w.empty()) return;
  if (w.d() != d) throw DimensionError(std::string("assemble: ") + what + " window has wrong dimension");
  for (const auto& p : w.members())
    if (!p.in(s))
      throw DomainError(std::string("assemble: ") + what + " window contains " + to_string(p) +
                        ", outside the operator's index set");
}

// Column j of every block column b; fills blocks of rows.
void fill(const std::vector<std::vector<Operator>>& blocks, const Window& rows, const Window& cols, MatrixWindow& out) {
  const std::size_t nc = cols.size();
  const std::size_t jobs = nc * blocks.front().size();
  std::vector<std::vector<std::pair<MatrixWindow::Index, Scalar>>> per_job(jobs);
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&](std::size_t job) {
    std::size_t b = job / nc, j = job % nc;
    const Partition& p = cols.members()[j];
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      SparseVector col = blocks[a][b].column(p);
      for (const auto& [q, v] : col) {
        auto i = rows.index_of(q);
        if (i) per_job[job].push_back({{a * rows.size() + *i, b * nc + j}, v});
      }
    }
  };
  unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(worker_threads(), jobs));
  if (nthreads <= 1) {
    for (std::size_t job = 0; job < jobs; ++job) work(job);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t job = t; job < jobs; job += nthreads) work(job);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  for (auto& v : per_job)
    for (auto& [ij, x] : v) out.entries.emplace(ij, std::move(x));
}

}  // namespace

MatrixWindow assemble_blocks(const std::vector<std::vector<Operator>>& blocks, const Window& rows, const Window& cols) {
  if (blocks.empty() || blocks.front().empty()) throw DomainError("assemble_blocks: no blocks");
  for (const auto& row : blocks) {
    if (row.size() != blocks.front().size()) throw DomainError("assemble_blocks: ragged block layout");
    for (const auto& op : row) {
      check_window(rows, op.codomain(), op.d(), "row");
      check_window(cols, op.domain(), op.d(), "column");
    }
  }
  MatrixWindow out{rows, cols, static_cast<int>(blocks.size()), static_cast<int>(blocks.front().size()), {}, true};
  if (!rows.empty() && !cols.empty()) fill(blocks, rows, cols, out);
  return out;
}

MatrixWindow assemble(const Operator& op, const Window& rows, const Window& cols) {
  return assemble_blocks({{op}}, rows, cols);
}

MatrixWindow subtract(const MatrixWindow& a, const MatrixWindow& b) {
  if (a.n_rows() != b.n_rows() || a.n_cols() != b.n_cols()) throw DimensionError("subtract: shape mismatch");
  MatrixWindow out = a;
  out.exact = a.exact && b.exact;
  for (const auto& [ij, v] : b.entries) {
    auto [it, inserted] = out.entries.try_emplace(ij, -v);
    if (!inserted) {
      it->second -= v;
      if (it->second.is_zero()) out.entries.erase(it);
    }
  }
  return out;
}

}  // namespace symtoep
