#include "polysat/kfamily.hpp"

#include <algorithm>
#include <numeric>

namespace polysat {

int DeltaSequence::sum() const {
  return std::accumulate(values.begin(), values.end(), 0);
}

DeltaSequence difference(const DSequence& d) {
  DeltaSequence b;
  for (std::size_t i = 0; i < d.values.size(); ++i)
    b.values.push_back(i == 0 ? d.values[0] : d.values[i] - d.values[i - 1]);
  return b;
}

DSequence partial_sums(const DeltaSequence& b) {
  DSequence d;
  int acc = 0;
  for (int v : b.values) d.values.push_back(acc += v);
  return d;
}

namespace {

// Greedy chain cover of `subset`: peel off a longest chain until empty.
std::vector<int> greedy_chain_sizes(const Poset& p, Mask subset) {
  std::vector<int> sizes;
  while (subset) {
    int level[kMaskBits];
    int prev[kMaskBits];
    int best = -1;
    for (Mask m = subset; m; m &= m - 1) {
      int x = lowest(m);
      level[x] = 1;
      prev[x] = -1;
      for (Mask b = p.below(x) & subset; b; b &= b - 1) {
        int y = lowest(b);
        if (level[y] + 1 > level[x]) {
          level[x] = level[y] + 1;
          prev[x] = y;
        }
      }
      if (best < 0 || level[x] > level[best]) best = x;
    }
    sizes.push_back(level[best]);
    for (int x = best; x >= 0; x = prev[x]) subset &= ~bit(x);
  }
  return sizes;
}

class KFamilySearch {
 public:
  KFamilySearch(const Poset& p, int k) : p_(p), k_(k), n_(p.size()) {
    suffix_bound_.assign(n_ + 1, 0);
    for (int i = 0; i < n_; ++i) {
      int bound = 0;
      for (int s : greedy_chain_sizes(p, full_mask(n_) & ~full_mask(i)))
        bound += std::min(k, s);
      suffix_bound_[i] = bound;
    }
  }

  Mask run() {
    visit(0, 0, 0);
    return best_;
  }

 private:
  void visit(int i, Mask kept, int count) {
    if (count + suffix_bound_[i] <= best_count_) return;
    if (i == n_) {
      best_ = kept;
      best_count_ = count;
      return;
    }
    int l = 1;
    for (Mask b = p_.below(i) & kept; b; b &= b - 1)
      l = std::max(l, level_[lowest(b)] + 1);
    if (l <= k_) {
      level_[i] = l;
      visit(i + 1, kept | bit(i), count + 1);
    }
    visit(i + 1, kept, count);
  }

  const Poset& p_;
  int k_;
  int n_;
  std::vector<int> suffix_bound_;
  int level_[kMaskBits] = {};
  Mask best_ = 0;
  int best_count_ = -1;
};

}  // namespace

Mask max_k_family(const Poset& p, int k) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be at least 1");
  if (!p.fits_mask()) {
    throw Error(ErrorCode::SizeLimitExceeded, "dk needs n <= 64");
  }
  if (k >= height(p)) return full_mask(p.size());
  return KFamilySearch(p, k).run();
}

int dk(const Poset& p, int k) { return popcount(max_k_family(p, k)); }

int dk_oracle(const Poset& p, int k) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be at least 1");
  const int n = p.size();
  if (n > 10) {
    throw Error(ErrorCode::SizeLimitExceeded, "dk_oracle supports n <= 10");
  }
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<std::uint32_t> antichains;
  for (std::uint32_t s = 0; s < total; ++s) {
    bool ok = true;
    for (std::uint32_t m = s; m && ok; m &= m - 1) {
      int x = std::countr_zero(m);
      if ((p.above(x) | p.below(x)) & s) ok = false;
    }
    if (ok) antichains.push_back(s);
  }
  // reach[S]: S is a union of the current number of antichains.
  std::vector<char> reach(total, 0);
  for (auto a : antichains) reach[a] = 1;
  for (int round = 1; round < k; ++round) {
    std::vector<char> next(total, 0);
    for (std::uint32_t s = 0; s < total; ++s) {
      if (!reach[s]) continue;
      for (auto a : antichains) next[s | a] = 1;
    }
    if (next == reach) break;
    reach = std::move(next);
  }
  int best = 0;
  for (std::uint32_t s = 0; s < total; ++s)
    if (reach[s]) best = std::max(best, std::popcount(s));
  return best;
}

DSequence d_sequence(const Poset& p) {
  DSequence d;
  const int c = height(p);
  for (int k = 1; k <= c; ++k) d.values.push_back(dk(p, k));
  return d;
}

DeltaSequence delta_sequence(const Poset& p) {
  return difference(d_sequence(p));
}

bool is_strong_sperner(const Poset& p) {
  auto classes = ranks(p);
  if (!classes) throw Error(ErrorCode::NotRanked, "poset has no rank function");
  std::vector<int> sizes;
  for (const auto& c : *classes) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  int acc = 0;
  for (std::size_t k = 1; k <= sizes.size(); ++k) {
    acc += sizes[k - 1];
    if (acc != dk(p, static_cast<int>(k))) return false;
  }
  return true;
}

}  // namespace polysat
