#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "polysat/kfamily.hpp"
#include "polysat/poset.hpp"

namespace polysat {

struct ChainPartition {
  std::vector<Chain> chains;

  // Chains sorted by their lowest element; each chain already ascending.
  ChainPartition normalized() const;
  friend bool operator==(const ChainPartition&, const ChainPartition&) = default;
};

// Throws PartitionMismatch unless cp partitions p into chains.
void validate_partition(const Poset& p, const ChainPartition& cp);

// k-norm: sum over chains of min(k, |C|).
int mk(const ChainPartition& cp, int k);
// Number of chains with at least k elements (the k-th difference of m).
int chains_at_least(const ChainPartition& cp, int k);

bool is_k_saturated(const Poset& p, const ChainPartition& cp, int k);

// Every chain partition exactly once: take the lowest uncovered element and
// extend its chain upward through uncovered comparable elements. The callback
// returns false to stop.
void for_each_chain_partition(const Poset& p,
                              const std::function<bool(const ChainPartition&)>& visit,
                              const SearchLimits& limits = {});
std::vector<ChainPartition> enumerate_chain_partitions(const Poset& p,
                                                       const SearchLimits& limits = {});

struct NormResult {
  int value = 0;
  ChainPartition partition;
};

// Minimum of sum_{k in ks} m_k over all chain partitions, with a minimizer.
//
// Exact: memoized search over the set of uncovered elements. The chain that
// covers the lowest uncovered element is chosen among all chains inside the
// uncovered set, so every partition is reachable and the optimum over a
// given uncovered set is shared between all branches that reach it.
NormResult min_total_norm(const Poset& p, const std::vector<int>& ks,
                          const SearchLimits& limits = {});

NormResult min_norm(const Poset& p, int k, const SearchLimits& limits = {});
NormResult min_joint_norm(const Poset& p, int k, int l,
                          const SearchLimits& limits = {});

// A partition saturated for every k in ks, if one exists.
std::optional<ChainPartition> find_saturated(const Poset& p,
                                             const std::vector<int>& ks,
                                             const SearchLimits& limits = {});

struct NoJointPartition {
  int min_joint_norm = 0;
};
struct Witness {
  ChainPartition partition;
};

struct PairVerdict {
  int k = 0;
  int l = 0;
  int dk = 0;
  int dl = 0;
  std::variant<NoJointPartition, Witness> verdict;

  bool unsaturated() const {
    return std::holds_alternative<NoJointPartition>(verdict);
  }
};

struct PolyunsatReport {
  int height = 0;
  std::vector<int> d;  // d_1..d_height
  std::vector<PairVerdict> pairs;  // lexicographic in (k, l)
  bool polyunsaturated = true;
};

// Checks every pair k < l < height with l >= k + 2. Pairs are independent
// searches and run on up to `threads` workers (0 picks POLYSAT_THREADS or
// the hardware count); the report is identical for any thread count.
PolyunsatReport is_polyunsaturated(const Poset& p, const SearchLimits& limits = {},
                                   unsigned threads = 0);

// Worker count from POLYSAT_THREADS, else hardware concurrency.
unsigned default_threads();

}  // namespace polysat
