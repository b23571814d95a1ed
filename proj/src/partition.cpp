#include "symtoep/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "symtoep/error.hpp"

namespace symtoep {

Partition::Partition(Tuple entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("partition must have at least one entry");
  for (std::size_t k = 1; k < entries_.size(); ++k)
    if (entries_[k - 1] <= entries_[k])
      throw DomainError("partition entries must be strictly decreasing: " + to_string(entries_));
}

std::string to_string(const Tuple& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(t[k]);
  }
  return out + ")";
}

std::string to_string(const Partition& p) { return to_string(p.entries()); }

OrbitRep::OrbitRep(Tuple entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("orbit representative must have at least one entry");
  for (std::size_t k = 1; k < entries_.size(); ++k)
    if (entries_[k - 1] < entries_[k])
      throw DomainError("orbit representative must be weakly decreasing: " + to_string(entries_));
}

OrbitRep OrbitRep::of(Tuple t) {
  std::sort(t.begin(), t.end(), std::greater<>());
  return OrbitRep(std::move(t));
}

int OrbitRep::height() const {
  int h = 0;
  for (int e : entries_) h = std::max(h, std::abs(e));
  return h;
}

SignedPartition antisymmetrize(std::span<const int> t, int d) {
  if (static_cast<int>(t.size()) != d)
    throw DimensionError("expected a " + std::to_string(d) + "-tuple, got length " + std::to_string(t.size()));
  Tuple v(t.begin(), t.end());
  // insertion sort, counting transpositions
  int swaps = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] < v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      ++swaps;
    }
  }
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k - 1] == v[k]) return {};
  return {swaps % 2 == 0 ? 1 : -1, Partition(std::move(v))};
}

std::vector<Tuple> orbit_permutations(const OrbitRep& m) {
  std::vector<Tuple> out;
  Tuple v = m.entries();  // already in decreasing order = last permutation
  do {
    out.push_back(v);
  } while (std::prev_permutation(v.begin(), v.end()));
  return out;
}

Partition shift_diag(const Partition& p, int r) {
  Tuple t = p.entries();
  for (int& e : t) e += r;
  return Partition(std::move(t));
}

Regraded regrade(const Partition& p) {
  int q = p.bottom();
  return {q, shift_diag(p, -q)};
}

Tuple ones_prefix(int d, int j) {
  Tuple f(static_cast<std::size_t>(d), 0);
  for (int k = 0; k < j && k < d; ++k) f[static_cast<std::size_t>(k)] = 1;
  return f;
}

namespace {

// Appends strictly decreasing tails below `bound` with entries >= lo,
// in lexicographically increasing order.
void extend(Tuple& prefix, int remaining, int lo, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  int hi = prefix.back() - 1;
  // the smallest admissible value for this slot leaves room for the rest
  for (int v = lo + remaining - 1; v <= hi; ++v) {
    prefix.push_back(v);
    extend(prefix, remaining - 1, lo, out);
    prefix.pop_back();
  }
}

}  // namespace

Window Window::enumerate(int d, int max_top, int min_bottom) {
  if (d < 2) throw DimensionError("windows need d >= 2, got " + std::to_string(d));
  Window w;
  w.d_ = d;
  w.max_top_ = max_top;
  w.min_bottom_ = min_bottom;
  for (int top = min_bottom + d - 1; top <= max_top; ++top) {
    Tuple prefix{top};
    extend(prefix, d - 1, min_bottom, w.members_);
  }
  for (std::size_t k = 0; k < w.members_.size(); ++k) w.index_.emplace(w.members_[k], k);
  return w;
}

Window Window::restricted(Space s) const {
  Window w;
  w.d_ = d_;
  w.max_top_ = max_top_;
  w.min_bottom_ = min_bottom_;
  w.space_ = s;
  for (const auto& p : members_)
    if (p.in(s)) w.members_.push_back(p);
  for (std::size_t k = 0; k < w.members_.size(); ++k) w.index_.emplace(w.members_[k], k);
  return w;
}

std::optional<std::size_t> Window::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace symtoep
