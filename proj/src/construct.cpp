#include "polysat/construct.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace polysat {

Pj build_pj(int j) {
  if (j < 1) throw Error(ErrorCode::BadParameters, "build_pj needs j >= 1");
  // Elements are laid out in the order T_1 s_1 r_1 T_2 s_2 r_2 ..., which is
  // a linear extension, so from_covers keeps these indices.
  std::vector<std::string> names;
  std::vector<Edge> covers;
  PjLabels labels;
  for (int i = 1; i <= j; ++i) {
    std::vector<int> t;
    if (i == 1) {
      t.push_back(static_cast<int>(names.size()));
      names.emplace_back("u");
    } else {
      for (int m = 1; m <= i - 1; ++m) {
        t.push_back(static_cast<int>(names.size()));
        names.push_back("t" + std::to_string(i) + "." + std::to_string(m));
      }
    }
    int s = static_cast<int>(names.size());
    names.push_back("s" + std::to_string(i));
    int r = static_cast<int>(names.size());
    names.push_back("r" + std::to_string(i));

    for (std::size_t m = 0; m + 1 < t.size(); ++m) covers.emplace_back(t[m], t[m + 1]);
    covers.emplace_back(t.back(), s);
    covers.emplace_back(s, r);
    if (i > 1) covers.emplace_back(labels.s.back(), s);

    std::vector<int> q = t;
    q.push_back(s);
    q.push_back(r);
    labels.T.push_back(std::move(t));
    labels.Q.push_back(std::move(q));
    labels.s.push_back(s);
    labels.r.push_back(r);
  }
  labels.u = 0;
  const int n = static_cast<int>(names.size());
  auto built = from_covers(n, covers, std::move(names));
  for (int x = 0; x < n; ++x) {
    if (built.index_of[x] != x) throw std::logic_error("build_pj: layout is not topological");
  }
  Pj out{std::move(built.poset), std::move(labels)};
  if (out.poset.size() != binom(j + 2, 2)) {
    throw std::logic_error("build_pj: wrong cardinality");
  }
  return out;
}

Realizer pj_realizer(int j) {
  Pj pj = build_pj(j);
  const auto& L = pj.labels;
  Realizer r;
  for (int i = 0; i < j; ++i) {
    r.ext1.insert(r.ext1.end(), L.T[i].begin(), L.T[i].end());
    r.ext1.push_back(L.s[i]);
    r.ext1.push_back(L.r[i]);
  }
  for (int i = j - 1; i >= 0; --i) r.ext2.insert(r.ext2.end(), L.T[i].begin(), L.T[i].end());
  for (int i = 0; i < j; ++i) r.ext2.push_back(L.s[i]);
  for (int i = j - 1; i >= 0; --i) r.ext2.push_back(L.r[i]);
  return r;
}

ChainPartition ck_partition(int j, int k) {
  if (k < 1 || k > j) {
    throw Error(ErrorCode::BadK, "ck_partition needs 1 <= k <= j, got k=" +
                                     std::to_string(k) + ", j=" + std::to_string(j));
  }
  Pj pj = build_pj(j);
  const auto& L = pj.labels;
  Chain c;
  c.elems.push_back(L.u);
  for (int i = 0; i < k; ++i) c.elems.push_back(L.s[i]);
  c.elems.push_back(L.r[k - 1]);
  std::sort(c.elems.begin(), c.elems.end());

  ChainPartition cp;
  cp.chains.push_back(c);
  for (const auto& q : L.Q) {
    Chain rest;
    for (int x : q)
      if (!std::binary_search(c.elems.begin(), c.elems.end(), x)) rest.elems.push_back(x);
    if (!rest.elems.empty()) cp.chains.push_back(std::move(rest));
  }
  return cp.normalized();
}

void check_delta(const DeltaSequence& b) {
  const auto& v = b.values;
  if (v.empty()) throw Error(ErrorCode::InvalidDelta, "empty sequence");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1) throw Error(ErrorCode::InvalidDelta, "entries must be positive");
    if (i > 0 && v[i] > v[i - 1]) {
      throw Error(ErrorCode::InvalidDelta, "sequence must be nonincreasing");
    }
  }
  // b_2 > b_3 > ... > b_{c-1}, i.e. 0-based indices 1..c-2.
  for (std::size_t i = 2; i + 1 < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) {
      throw Error(ErrorCode::InvalidDelta,
                  "interior must strictly decrease: b_" + std::to_string(i) +
                      " = b_" + std::to_string(i + 1) + " = " + std::to_string(v[i]));
    }
  }
}

namespace {

BuiltPoset named_chain(int size, const std::string& prefix) {
  std::vector<Edge> covers;
  std::vector<std::string> names;
  for (int m = 0; m < size; ++m) {
    names.push_back(prefix + std::to_string(m + 1));
    if (m > 0) covers.emplace_back(m - 1, m);
  }
  return {from_covers(size, covers, std::move(names)).poset, chain_realizer(size)};
}

BuiltPoset join(const BuiltPoset& a, const BuiltPoset& b) {
  return {disjoint_union(a.poset, b.poset),
          union_realizer(a.realizer, a.poset.size(), b.realizer)};
}

}  // namespace

BuiltPoset from_delta(const DeltaSequence& b) {
  check_delta(b);
  const int c = b.length();
  if (c < 3) {
    // Chain sizes are the conjugate of b read as a partition.
    std::vector<int> sizes;
    for (int i = 1; i <= b.values[0]; ++i) {
      int count = static_cast<int>(
          std::count_if(b.values.begin(), b.values.end(), [i](int v) { return v >= i; }));
      sizes.push_back(count);
    }
    std::optional<BuiltPoset> out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      auto part = named_chain(sizes[i], "c" + std::to_string(i + 1) + ".");
      out = out ? join(*out, part) : part;
    }
    return *out;
  }

  const DeltaSequence lower = lower_bounds(c);
  std::vector<int> current = b.values;
  std::vector<int> added;  // chain sizes, innermost last
  while (current != lower.values) {
    int t = 0;
    for (int i = 0; i < c; ++i)
      if (current[i] > lower.values[i]) t = i + 1;
    for (int i = 0; i < t; ++i) --current[i];
    added.push_back(t);
  }
  Pj base = build_pj(c - 2);
  BuiltPoset out{std::move(base.poset), pj_realizer(c - 2)};
  int label = 1;
  for (auto it = added.rbegin(); it != added.rend(); ++it, ++label) {
    out = join(out, named_chain(*it, "c" + std::to_string(label) + "."));
  }
  return out;
}

long long binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

DeltaSequence lower_bounds(int c) {
  if (c < 3) throw Error(ErrorCode::BadParameters, "lower_bounds needs c >= 3");
  DeltaSequence b;
  b.values.push_back(c - 2);
  for (int i = 2; i <= c - 1; ++i) b.values.push_back(c - i);
  b.values.push_back(1);
  return b;
}

DeltaSequence upper_bounds(int c, int a) {
  if (c < 3) throw Error(ErrorCode::BadParameters, "upper_bounds needs c >= 3");
  if (a < c - 2) throw Error(ErrorCode::BadParameters, "upper_bounds needs a >= c - 2");
  DeltaSequence b;
  b.values.push_back(a);
  for (int i = 2; i <= c - 1; ++i) b.values.push_back(a - i + 2);
  b.values.push_back(a - c + 3);
  return b;
}

FeasibilityVerdict feasible_nca(int n, int c, int a) {
  if (c < 3) throw Error(ErrorCode::BadParameters, "feasible_nca needs c >= 3");
  if (n < 1 || a < 1) throw Error(ErrorCode::BadParameters, "n and a must be positive");
  FeasibilityVerdict v;
  const long long tri = binom(c - 1, 2);
  if (a < c - 2) v.failed_conditions.emplace_back(kCondWidth);
  if (n < a + 1 + tri) v.failed_conditions.emplace_back(kCondLower);
  if (n > static_cast<long long>(c) * a + 1 - tri) v.failed_conditions.emplace_back(kCondUpper);
  v.feasible = v.failed_conditions.empty();
  return v;
}

DeltaSequence sequence_for(int n, int c, int a) {
  FeasibilityVerdict v = feasible_nca(n, c, a);
  if (!v.feasible) {
    std::string why;
    for (const auto& f : v.failed_conditions) why += (why.empty() ? "" : ", ") + f;
    throw Error(ErrorCode::Infeasible, "no sequence for (n=" + std::to_string(n) +
                                           ", c=" + std::to_string(c) + ", a=" +
                                           std::to_string(a) + "): " + why);
  }
  DeltaSequence b = lower_bounds(c);
  b.values[0] = a;
  const DeltaSequence upper = upper_bounds(c, a);
  int remaining = n - b.sum();
  for (int i = 1; i < c && remaining > 0; ++i) {
    int raise = std::min(upper.values[i] - b.values[i], remaining);
    b.values[i] += raise;
    remaining -= raise;
  }
  return b;
}

bool feasible_ca(int c, int a) {
  if (c < 1 || a < 1) throw Error(ErrorCode::BadParameters, "c and a must be positive");
  return c <= 2 || a >= c - 2;
}

bool feasible_nc(int n, int c) {
  if (n < 1 || c < 1) throw Error(ErrorCode::BadParameters, "n and c must be positive");
  if (c <= 2) return n >= c;
  return n >= binom(c, 2);
}

FeasibilityVerdict feasible_dual_nac(int n, int a, int c) {
  if (a < 3) throw Error(ErrorCode::BadParameters, "feasible_dual_nac needs a >= 3");
  FeasibilityVerdict v = feasible_nca(n, a, c);
  for (auto& f : v.failed_conditions)
    if (f == kCondWidth) f = "c_ge_a_minus_2";
  return v;
}

}  // namespace polysat
