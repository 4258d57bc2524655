#pragma once

#include <string>
#include <vector>

#include "polysat/graphdual.hpp"
#include "polysat/kfamily.hpp"
#include "polysat/poset.hpp"
#include "polysat/saturation.hpp"

namespace polysat {

// Named elements of P_j. T[0] = {u}; Q[i] = T[i] + {s[i], r[i]}.
// Vectors are 0-based: s[0] is s_1.
struct PjLabels {
  int u = 0;
  std::vector<int> s;
  std::vector<int> r;
  std::vector<std::vector<int>> T;
  std::vector<std::vector<int>> Q;
};

struct BuiltPoset {
  Poset poset;
  Realizer realizer;
};

struct Pj {
  Poset poset;
  PjLabels labels;
};

// P_1 is the 3-chain u < s1 < r1. P_j adds a chain Q_j of j+1 elements
// (T_j, then s_j, then its top r_j) and the single cover s_{j-1} < s_j.
// Element names: u, s<i>, r<i>, t<i>.<m>.
Pj build_pj(int j);

// The two linear extensions
//   T_1 s_1 r_1  T_2 s_2 r_2 ... T_j s_j r_j
//   T_j ... T_1  s_1 ... s_j  r_j ... r_1
// with each T_i ascending.
Realizer pj_realizer(int j);

// The partition C_k of P_j: the chain {u, s_1..s_k, r_k} and the non-empty
// remainders Q_i \ C for every i. Both k- and k+1-saturated.
ChainPartition ck_partition(int j, int k);

// Throws InvalidDelta unless b is a nonincreasing positive sequence whose
// interior b_2 > ... > b_{c-1} strictly decreases.
void check_delta(const DeltaSequence& b);

// Polyunsaturated poset of height c = |b| with delta_sequence == b,
// together with a 2-realizer.
BuiltPoset from_delta(const DeltaSequence& b);

// (c-2, c-2, c-3, ..., 2, 1, 1) and (a, a, a-1, ..., a-c+3, a-c+3).
DeltaSequence lower_bounds(int c);
DeltaSequence upper_bounds(int c, int a);

struct FeasibilityVerdict {
  bool feasible = true;
  std::vector<std::string> failed_conditions;
};

inline constexpr const char* kCondWidth = "a_ge_c_minus_2";
inline constexpr const char* kCondLower = "n_lower";
inline constexpr const char* kCondUpper = "n_upper";

long long binom(int n, int k);

// Polyunsaturated posets with n elements, height c and width a exist iff
// a >= c-2, n >= a+1+C(c-1,2) and n <= ca+1-C(c-1,2). Requires c >= 3.
FeasibilityVerdict feasible_nca(int n, int c, int a);

// Greedy sequence: lower bounds with b_1 = a, then raise b_2, b_3, ... in
// turn to their upper bounds until the sum reaches n.
DeltaSequence sequence_for(int n, int c, int a);

bool feasible_ca(int c, int a);
bool feasible_nc(int n, int c);

// Antichain-partition duals: the primal conditions with the roles of height
// and width exchanged. Requires a >= 3.
FeasibilityVerdict feasible_dual_nac(int n, int a, int c);

}  // namespace polysat
