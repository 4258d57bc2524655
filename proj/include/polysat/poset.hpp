#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polysat/error.hpp"

namespace polysat {

// Subsets of a poset with at most 64 elements. Every exhaustive search in the
// library works on masks; the relation itself also supports larger posets.
using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask full_mask(int n) {
  return n >= kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1;
}

using Edge = std::pair<int, int>;

// A finite strict partial order on elements 0..n-1.
//
// Elements are always stored in a topological indexing: less(x, y) implies
// x < y. Every constructor closes the given relation transitively and
// relabels when needed, so downstream code may scan elements in index order
// and treat that as a linear extension.
class Poset {
 public:
  Poset() = default;

  struct Labeled;

  // Closes `relation` (any acyclic pair list) and relabels into topological
  // indexing with a stable Kahn order, so an input that is already
  // topologically indexed keeps its labels.
  static Labeled from_relation(int n, const std::vector<Edge>& relation,
                               std::vector<std::string> names = {});

  static Poset chain(int n);
  static Poset antichain(int n);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool less(int x, int y) const { return test(up_, x, y); }
  bool comparable(int x, int y) const { return less(x, y) || less(y, x); }

  // Strict up-set / down-set of x. Requires size() <= 64.
  Mask above(int x) const { return up_[x][0]; }
  Mask below(int x) const { return down_[x][0]; }
  bool fits_mask() const { return n_ <= kMaskBits; }

  int up_count(int x) const;
  int down_count(int x) const;

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(int x) const;
  // Index of the element with the given name, if any.
  std::optional<int> find(const std::string& name) const;

  // Pairs (x, y) with x < y, sorted.
  std::vector<Edge> relations() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.up_ == b.up_;
  }

 private:
  using Row = std::vector<std::uint64_t>;

  static bool test(const std::vector<Row>& rows, int x, int y) {
    return (rows[x][y / 64] >> (y % 64)) & 1u;
  }

  int n_ = 0;
  std::vector<Row> up_;
  std::vector<Row> down_;
  std::vector<std::string> names_;
};

struct Poset::Labeled {
  Poset poset;
  // index_of[input label] = internal index.
  std::vector<int> index_of;
};

struct Chain {
  std::vector<int> elems;  // strictly increasing indices
  int size() const { return static_cast<int>(elems.size()); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

struct Antichain {
  std::vector<int> elems;
  int size() const { return static_cast<int>(elems.size()); }
};

Poset::Labeled from_covers(int n, const std::vector<Edge>& covers,
                           std::vector<std::string> names = {});

// Transitive reduction, sorted lexicographically.
std::vector<Edge> cover_relations(const Poset& p);

int height(const Poset& p);
// Longest chain, bottom to top.
Chain longest_chain(const Poset& p);

// Dilworth width via maximum matching on the split bipartite graph.
int width(const Poset& p);
// Maximum antichain by subset enumeration; n <= 24.
int width_bruteforce(const Poset& p);
Antichain maximum_antichain(const Poset& p);

bool is_chain(const Poset& p, const std::vector<int>& elems);
bool is_antichain(const Poset& p, const std::vector<int>& elems);
int induced_height(const Poset& p, Mask subset);

// P's elements keep their indices; Q's are shifted by |P|. No relation
// between the parts. Throws EmptyPoset if either side is empty.
Poset disjoint_union(const Poset& p, const Poset& q);

// Rank classes bottom-up if a rank function exists that increases by one
// along every cover. Each connected component is normalized so that its
// lowest rank is 0.
std::optional<std::vector<std::vector<int>>> ranks(const Poset& p);

// Order isomorphism by invariant refinement plus backtracking.
// Throws SizeLimitExceeded when either side exceeds max_n.
bool isomorphic(const Poset& p, const Poset& q, int max_n = 10);

// Relabeled copy; perm[old] = new. The result must still be topologically
// indexed, otherwise from_relation reorders it.
Poset relabel(const Poset& p, const std::vector<int>& perm);

// Canonical key: equal iff isomorphic. Exhaustive within refined colour
// classes, so intended for n <= 8.
std::vector<std::uint8_t> canonical_key(const Poset& p);

// One representative per isomorphism class of n-element posets, in a fixed
// order. n <= 6.
std::vector<Poset> enumerate_posets(int n);
// Streaming form; the callback returns false to stop early.
void for_each_poset(int n, const std::function<bool(const Poset&)>& visit);

}  // namespace polysat
