#include "polysat/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace polysat {

namespace {

int word_count(int n) { return std::max(1, (n + 63) / 64); }

void set_bit(std::vector<std::uint64_t>& row, int y) {
  row[y / 64] |= std::uint64_t{1} << (y % 64);
}

}  // namespace

Poset::Labeled Poset::from_relation(int n, const std::vector<Edge>& relation,
                                    std::vector<std::string> names) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative element count");
  if (!names.empty() && static_cast<int>(names.size()) != n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "names has " + std::to_string(names.size()) +
                    " entries for " + std::to_string(n) + " elements");
  }
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (auto [x, y] : relation) {
    if (x < 0 || y < 0 || x >= n || y >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "pair (" + std::to_string(x) + "," + std::to_string(y) +
                      ") outside 0.." + std::to_string(n - 1));
    }
    if (x == y) {
      throw Error(ErrorCode::CycleDetected,
                  "element " + std::to_string(x) + " related to itself");
    }
    succ[x].push_back(y);
    ++indeg[y];
  }

  // Stable Kahn: smallest available label first.
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push(x);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int x = ready.top();
    ready.pop();
    order.push_back(x);
    for (int y : succ[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::CycleDetected, "relation contains a directed cycle");
  }

  Labeled out;
  out.index_of.assign(n, 0);
  for (int i = 0; i < n; ++i) out.index_of[order[i]] = i;

  Poset& p = out.poset;
  p.n_ = n;
  const int words = word_count(n);
  p.up_.assign(n, Row(words, 0));
  p.down_.assign(n, Row(words, 0));
  // Closure in reverse topological order.
  for (int i = n - 1; i >= 0; --i) {
    Row& row = p.up_[i];
    for (int y : succ[order[i]]) {
      int j = out.index_of[y];
      set_bit(row, j);
      for (int w = 0; w < words; ++w) row[w] |= p.up_[j][w];
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (test(p.up_, x, y)) set_bit(p.down_[y], x);

  if (!names.empty()) {
    p.names_.resize(n);
    for (int i = 0; i < n; ++i) p.names_[out.index_of[i]] = std::move(names[i]);
  }
  return out;
}

Poset Poset::chain(int n) {
  std::vector<Edge> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return from_relation(n, covers).poset;
}

Poset Poset::antichain(int n) { return from_relation(n, {}).poset; }

int Poset::up_count(int x) const {
  int c = 0;
  for (auto w : up_[x]) c += std::popcount(w);
  return c;
}

int Poset::down_count(int x) const {
  int c = 0;
  for (auto w : down_[x]) c += std::popcount(w);
  return c;
}

std::string Poset::name(int x) const {
  return names_.empty() ? std::to_string(x) : names_[x];
}

std::optional<int> Poset::find(const std::string& name) const {
  for (int x = 0; x < n_; ++x)
    if (this->name(x) == name) return x;
  return std::nullopt;
}

std::vector<Edge> Poset::relations() const {
  std::vector<Edge> out;
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (less(x, y)) out.emplace_back(x, y);
  return out;
}

Poset::Labeled from_covers(int n, const std::vector<Edge>& covers,
                           std::vector<std::string> names) {
  return Poset::from_relation(n, covers, std::move(names));
}

std::vector<Edge> cover_relations(const Poset& p) {
  const int n = p.size();
  std::vector<Edge> out;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!p.less(x, y)) continue;
      bool cover = true;
      for (int z = x + 1; z < y && cover; ++z)
        if (p.less(x, z) && p.less(z, y)) cover = false;
      if (cover) out.emplace_back(x, y);
    }
  }
  return out;
}

Chain longest_chain(const Poset& p) {
  const int n = p.size();
  std::vector<int> len(n, 1), prev(n, -1);
  int best = -1;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < y; ++x) {
      if (p.less(x, y) && len[x] + 1 > len[y]) {
        len[y] = len[x] + 1;
        prev[y] = x;
      }
    }
    if (best < 0 || len[y] > len[best]) best = y;
  }
  Chain c;
  for (int x = best; x >= 0; x = prev[x]) c.elems.push_back(x);
  std::reverse(c.elems.begin(), c.elems.end());
  return c;
}

int height(const Poset& p) { return longest_chain(p).size(); }

int width(const Poset& p) {
  // Konig: minimum chain cover = n - maximum matching of x -> y (x < y).
  const int n = p.size();
  std::vector<int> match_right(n, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int x) {
    for (int y = x + 1; y < n; ++y) {
      if (!p.less(x, y) || seen[y]) continue;
      seen[y] = 1;
      if (match_right[y] < 0 || augment(match_right[y])) {
        match_right[y] = x;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int x = 0; x < n; ++x) {
    seen.assign(n, 0);
    if (augment(x)) ++matched;
  }
  return n - matched;
}

namespace {

void best_antichain(const Poset& p, Mask candidates, Mask current, Mask& best) {
  if (popcount(current) + popcount(candidates) <= popcount(best)) return;
  if (candidates == 0) {
    best = current;
    return;
  }
  int x = lowest(candidates);
  Mask rest = candidates & ~bit(x);
  best_antichain(p, rest & ~p.above(x) & ~p.below(x), current | bit(x), best);
  best_antichain(p, rest, current, best);
}

}  // namespace

Antichain maximum_antichain(const Poset& p) {
  if (!p.fits_mask()) {
    throw Error(ErrorCode::SizeLimitExceeded, "maximum_antichain needs n <= 64");
  }
  Mask best = 0;
  best_antichain(p, full_mask(p.size()), 0, best);
  Antichain a;
  for (Mask m = best; m; m &= m - 1) a.elems.push_back(lowest(m));
  return a;
}

int width_bruteforce(const Poset& p) {
  if (p.size() > 24) {
    throw Error(ErrorCode::SizeLimitExceeded, "width_bruteforce needs n <= 24");
  }
  const int n = p.size();
  int best = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    int c = std::popcount(s);
    if (c <= best) continue;
    bool ok = true;
    for (std::uint32_t m = s; m && ok; m &= m - 1) {
      int x = std::countr_zero(m);
      if ((p.above(x) | p.below(x)) & s) ok = false;
    }
    if (ok) best = c;
  }
  return best;
}

bool is_chain(const Poset& p, const std::vector<int>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!p.comparable(elems[i], elems[j])) return false;
  return true;
}

bool is_antichain(const Poset& p, const std::vector<int>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (elems[i] == elems[j] || p.comparable(elems[i], elems[j]))
        return false;
  return true;
}

int induced_height(const Poset& p, Mask subset) {
  int level[kMaskBits] = {};
  int best = 0;
  for (Mask m = subset; m; m &= m - 1) {
    int x = lowest(m);
    int l = 1;
    for (Mask b = p.below(x) & subset; b; b &= b - 1)
      l = std::max(l, level[lowest(b)] + 1);
    level[x] = l;
    best = std::max(best, l);
  }
  return best;
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  if (p.empty() || q.empty()) {
    throw Error(ErrorCode::EmptyPoset, "disjoint_union of an empty poset");
  }
  const int off = p.size();
  std::vector<Edge> rel = p.relations();
  for (auto [x, y] : q.relations()) rel.emplace_back(x + off, y + off);
  std::vector<std::string> names;
  if (p.has_names() || q.has_names()) {
    for (int x = 0; x < p.size(); ++x) names.push_back(p.name(x));
    for (int x = 0; x < q.size(); ++x) names.push_back(q.name(x));
  }
  return Poset::from_relation(p.size() + q.size(), rel, std::move(names)).poset;
}

std::optional<std::vector<std::vector<int>>> ranks(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<std::pair<int, int>>> nbr(n);  // (other, +1/-1)
  auto covers = cover_relations(p);
  for (auto [x, y] : covers) {
    nbr[x].emplace_back(y, +1);
    nbr[y].emplace_back(x, -1);
  }
  std::vector<int> rank(n, 0);
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> component{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < component.size(); ++i) {
      int x = component[i];
      for (auto [y, step] : nbr[x]) {
        if (seen[y]) {
          if (rank[y] != rank[x] + step) return std::nullopt;
          continue;
        }
        seen[y] = 1;
        rank[y] = rank[x] + step;
        component.push_back(y);
      }
    }
    int low = rank[root];
    for (int x : component) low = std::min(low, rank[x]);
    for (int x : component) rank[x] -= low;
  }
  int top = n == 0 ? -1 : *std::max_element(rank.begin(), rank.end());
  std::vector<std::vector<int>> classes(top + 1);
  for (int x = 0; x < n; ++x) classes[rank[x]].push_back(x);
  return classes;
}

Poset relabel(const Poset& p, const std::vector<int>& perm) {
  std::vector<Edge> rel;
  for (auto [x, y] : p.relations()) rel.emplace_back(perm[x], perm[y]);
  std::vector<std::string> names;
  if (p.has_names()) {
    names.resize(p.size());
    for (int x = 0; x < p.size(); ++x) names[perm[x]] = p.name(x);
  }
  return Poset::from_relation(p.size(), rel, std::move(names)).poset;
}

namespace {

// Colour refinement on the order: start from (down-set size, up-set size)
// and repeatedly split by the colour multisets of the strict down- and
// up-sets. Colour ids are ranks of sorted signatures, so they are invariant
// under isomorphism.
std::vector<int> refine_colours(const Poset& p) {
  const int n = p.size();
  std::vector<int> colour(n);
  {
    std::vector<std::pair<int, int>> sig(n);
    for (int x = 0; x < n; ++x) sig[x] = {p.down_count(x), p.up_count(x)};
    std::vector<std::pair<int, int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int x = 0; x < n; ++x)
      colour[x] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[x]) -
          sorted.begin());
  }
  int classes = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int x = 0; x < n; ++x) {
      std::vector<int> down, up;
      for (int y = 0; y < n; ++y) {
        if (p.less(y, x)) down.push_back(colour[y]);
        if (p.less(x, y)) up.push_back(colour[y]);
      }
      std::sort(down.begin(), down.end());
      std::sort(up.begin(), up.end());
      sig[x].push_back(colour[x]);
      sig[x].insert(sig[x].end(), down.begin(), down.end());
      sig[x].push_back(-1);
      sig[x].insert(sig[x].end(), up.begin(), up.end());
    }
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int x = 0; x < n; ++x)
      colour[x] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[x]) -
          sorted.begin());
    int next = static_cast<int>(sorted.size());
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

bool extend_iso(const Poset& p, const Poset& q, const std::vector<int>& order,
                const std::vector<int>& cp, const std::vector<int>& cq,
                std::vector<int>& map, std::vector<char>& used,
                std::size_t depth) {
  if (depth == order.size()) return true;
  int v = order[depth];
  for (int w = 0; w < q.size(); ++w) {
    if (used[w] || cq[w] != cp[v]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      int u = order[i];
      int fu = map[u];
      if (p.less(u, v) != q.less(fu, w) || p.less(v, u) != q.less(w, fu))
        ok = false;
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (extend_iso(p, q, order, cp, cq, map, used, depth + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

bool isomorphic(const Poset& p, const Poset& q, int max_n) {
  if (p.size() > max_n || q.size() > max_n) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "isomorphic supports posets up to " + std::to_string(max_n) +
                    " elements");
  }
  if (p.size() != q.size()) return false;
  if (p.relations().size() != q.relations().size()) return false;
  // Colour ids are isomorphism invariant, so an isomorphism preserves them.
  auto cp = refine_colours(p);
  auto cq = refine_colours(q);
  std::vector<int> hp = cp, hq = cq;
  std::sort(hp.begin(), hp.end());
  std::sort(hq.begin(), hq.end());
  if (hp != hq) return false;
  std::map<int, int> class_size;
  for (int c : cp) ++class_size[c];
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return class_size[cp[a]] < class_size[cp[b]];
  });
  std::vector<int> map(p.size(), -1);
  std::vector<char> used(q.size(), 0);
  return extend_iso(p, q, order, cp, cq, map, used, 0);
}

std::vector<std::uint8_t> canonical_key(const Poset& p) {
  const int n = p.size();
  auto colour = refine_colours(p);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return colour[a] != colour[b] ? colour[a] < colour[b] : a < b;
  });
  // Class boundaries inside `order`.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> key(static_cast<std::size_t>(n) * n + n);
  auto encode = [&] {
    for (int i = 0; i < n; ++i) key[i] = static_cast<std::uint8_t>(colour[order[i]]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        key[n + i * n + j] = p.less(order[i], order[j]) ? 1 : 0;
    if (best.empty() || key < best) best = key;
  };
  // Odometer over per-block permutations.
  std::function<void(std::size_t)> walk = [&](std::size_t b) {
    if (b == blocks.size()) {
      encode();
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      walk(b + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  walk(0);
  if (n == 0) return {};
  return best;
}

void for_each_poset(int n, const std::function<bool(const Poset&)>& visit) {
  if (n < 1 || n > 6) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "enumerate_posets supports 1 <= n <= 6");
  }
  // Naturally labelled posets: element i picks a down-closed set of
  // predecessors among 0..i-1.
  std::vector<Mask> down(n, 0);
  std::set<std::vector<std::uint8_t>> seen;
  bool stop = false;
  std::function<void(int)> grow = [&](int i) {
    if (stop) return;
    if (i == n) {
      std::vector<Edge> rel;
      for (int y = 0; y < n; ++y)
        for (Mask m = down[y]; m; m &= m - 1) rel.emplace_back(lowest(m), y);
      Poset p = Poset::from_relation(n, rel).poset;
      if (seen.insert(canonical_key(p)).second && !visit(p)) stop = true;
      return;
    }
    for (Mask d = 0; d < bit(i); ++d) {
      bool closed = true;
      for (Mask m = d; m && closed; m &= m - 1)
        if ((down[lowest(m)] & ~d) != 0) closed = false;
      if (!closed) continue;
      down[i] = d;
      grow(i + 1);
      if (stop) return;
    }
  };
  grow(0);
}

std::vector<Poset> enumerate_posets(int n) {
  std::vector<Poset> out;
  for_each_poset(n, [&](const Poset& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace polysat
