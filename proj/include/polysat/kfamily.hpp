#pragma once

#include <vector>

#include "polysat/poset.hpp"

namespace polysat {

// d_1..d_c for a poset of height c.
struct DSequence {
  std::vector<int> values;
  friend bool operator==(const DSequence&, const DSequence&) = default;
};

// Difference sequence with the convention that the first entry is d_1.
struct DeltaSequence {
  std::vector<int> values;

  int length() const { return static_cast<int>(values.size()); }
  int sum() const;
  friend bool operator==(const DeltaSequence&, const DeltaSequence&) = default;
};

DeltaSequence difference(const DSequence& d);
DSequence partial_sums(const DeltaSequence& b);

// Largest k-family: the largest subset whose induced height is at most k
// (a set is a union of k antichains iff it has no chain of k+1 elements).
// Branch and bound in index order. Requires n <= 64.
int dk(const Poset& p, int k);
// The maximizing subset found by dk.
Mask max_k_family(const Poset& p, int k);

// Independent oracle: folds antichains into k-fold unions over all subsets,
// never using the chain characterization. n <= 10.
int dk_oracle(const Poset& p, int k);

DSequence d_sequence(const Poset& p);
DeltaSequence delta_sequence(const Poset& p);

// Throws NotRanked when ranks(p) is absent.
bool is_strong_sperner(const Poset& p);

}  // namespace polysat
