#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symtoep {

/// Plain integer exponent tuple (not necessarily ordered).
using Tuple = std::vector<int>;

/// Which part of the antisymmetric L2 basis an index set lives in.
/// Analytic means last entry >= 0 (the H2 side), NonAnalytic last entry < 0.
enum class Space { Analytic, NonAnalytic, All };

/// Strictly decreasing integer d-tuple labelling the basis vector e_p.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless entries are strictly decreasing and d >= 1.
  explicit Partition(Tuple entries);
  Partition(std::initializer_list<int> entries) : Partition(Tuple(entries)) {}

  int d() const { return static_cast<int>(entries_.size()); }
  int operator[](int k) const { return entries_[static_cast<std::size_t>(k)]; }
  const Tuple& entries() const { return entries_; }
  int top() const { return entries_.front(); }
  int bottom() const { return entries_.back(); }
  bool is_analytic() const { return bottom() >= 0; }
  bool in(Space s) const {
    return s == Space::All || (s == Space::Analytic) == is_analytic();
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Tuple entries_;
};

std::string to_string(const Partition& p);
std::string to_string(const Tuple& t);

/// Result of sorting an exponent tuple: sign of the sorting permutation and
/// the sorted strict partition, or sign 0 (no partition) on a repeated entry.
struct SignedPartition {
  int sign = 0;
  std::optional<Partition> partition;
};

/// Weakly decreasing d-tuple naming one symmetric-group orbit of exponents.
class OrbitRep {
 public:
  OrbitRep() = default;
  explicit OrbitRep(Tuple entries);
  OrbitRep(std::initializer_list<int> entries) : OrbitRep(Tuple(entries)) {}

  /// Sorts an arbitrary tuple into its orbit representative.
  static OrbitRep of(Tuple t);

  int d() const { return static_cast<int>(entries_.size()); }
  int operator[](int k) const { return entries_[static_cast<std::size_t>(k)]; }
  const Tuple& entries() const { return entries_; }
  /// max |entry|
  int height() const;

  friend auto operator<=>(const OrbitRep&, const OrbitRep&) = default;
  friend bool operator==(const OrbitRep&, const OrbitRep&) = default;

 private:
  Tuple entries_;
};

/// Finite truncation of the strict partitions of length d:
/// minBottom <= last entry, first entry <= maxTop, optionally restricted to
/// one side of the analytic split. Members are in graded lexicographic order.
class Window {
 public:
  /// Every strict partition within bounds. d < 2 is a DimensionError; an
  /// empty bound range yields an empty window.
  static Window enumerate(int d, int max_top, int min_bottom);

  /// Same bounds, members filtered to one space.
  Window restricted(Space s) const;

  int d() const { return d_; }
  int max_top() const { return max_top_; }
  int min_bottom() const { return min_bottom_; }
  Space space() const { return space_; }
  const std::vector<Partition>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool all_analytic() const { return space_ == Space::Analytic || min_bottom_ >= 0; }

  std::optional<std::size_t> index_of(const Partition& p) const;
  bool contains(const Partition& p) const { return index_of(p).has_value(); }

 private:
  int d_ = 0;
  int max_top_ = 0;
  int min_bottom_ = 0;
  Space space_ = Space::All;
  std::vector<Partition> members_;
  std::map<Partition, std::size_t> index_;
};

/// Sorts t into decreasing order and reports the parity of the sort.
/// Throws DimensionError if t.size() != d.
SignedPartition antisymmetrize(std::span<const int> t, int d);

/// Each distinct permutation of m exactly once, in lexicographically
/// decreasing order.
std::vector<Tuple> orbit_permutations(const OrbitRep& m);

/// p + (r, ..., r).
Partition shift_diag(const Partition& p, int r);

/// Splits p into (last entry q, p - (q,...,q)); inverse of shift_diag.
struct Regraded {
  int q;
  Partition base;
};
Regraded regrade(const Partition& p);

/// f_j = (1,...,1,0,...,0) with j ones, length d.
Tuple ones_prefix(int d, int j);

}  // namespace symtoep
