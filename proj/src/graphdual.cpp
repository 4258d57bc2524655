#include "polysat/graphdual.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polysat {

void Graph::add_edge(int x, int y) {
  if (x == y) throw Error(ErrorCode::BadParameters, "loops are not allowed");
  adj_[x] |= bit(y);
  adj_[y] |= bit(x);
}

int Graph::edge_count() const {
  int twice = 0;
  for (Mask m : adj_) twice += popcount(m);
  return twice / 2;
}

Graph comparability_graph(const Poset& p) {
  Graph g(p.size());
  for (auto [x, y] : p.relations()) g.add_edge(x, y);
  return g;
}

Graph complement(const Graph& g) {
  Graph h(g.size());
  for (int x = 0; x < g.size(); ++x)
    for (int y = x + 1; y < g.size(); ++y)
      if (!g.adjacent(x, y)) h.add_edge(x, y);
  return h;
}

int alpha_k(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be at least 1");
  const int n = g.size();
  if (n > 16) throw Error(ErrorCode::SizeLimitExceeded, "alpha_k supports n <= 16");
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<char> independent(total, 0);
  independent[0] = 1;
  for (std::uint32_t s = 1; s < total; ++s) {
    int x = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    independent[s] = independent[rest] && (g.neighbours(x) & rest) == 0;
  }
  // colours[S] = chromatic number of the induced subgraph on S.
  std::vector<std::uint8_t> colours(total, 0);
  int best = 0;
  for (std::uint32_t s = 1; s < total; ++s) {
    int x = std::countr_zero(s);
    std::uint32_t pool = s & ~(std::uint32_t{1} << x) &
                         ~static_cast<std::uint32_t>(g.neighbours(x));
    int c = n + 1;
    // Colour class of x: x plus an independent subset of its non-neighbours.
    for (std::uint32_t t = pool;; t = (t - 1) & pool) {
      if (independent[t]) {
        std::uint32_t cls = t | (std::uint32_t{1} << x);
        c = std::min(c, 1 + colours[s & ~cls]);
      }
      if (t == 0) break;
    }
    colours[s] = static_cast<std::uint8_t>(c);
    if (c <= k) best = std::max(best, std::popcount(s));
  }
  return best;
}

int omega_k(const Graph& g, int k) { return alpha_k(complement(g), k); }

bool is_linear_extension(const Poset& p, const std::vector<int>& order) {
  const int n = p.size();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int x = order[i];
    if (x < 0 || x >= n || pos[x] >= 0) return false;
    pos[x] = i;
  }
  for (auto [x, y] : p.relations())
    if (pos[x] > pos[y]) return false;
  return true;
}

namespace {

std::vector<int> positions(const std::vector<int>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return pos;
}

}  // namespace

bool verify_realizer(const Poset& p, const Realizer& r) {
  if (!is_linear_extension(p, r.ext1) || !is_linear_extension(p, r.ext2)) return false;
  auto pos1 = positions(r.ext1);
  auto pos2 = positions(r.ext2);
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (x == y) continue;
      bool both = pos1[x] < pos1[y] && pos2[x] < pos2[y];
      if (both != p.less(x, y)) return false;
    }
  return true;
}

Realizer chain_realizer(int n) {
  Realizer r;
  r.ext1.resize(n);
  std::iota(r.ext1.begin(), r.ext1.end(), 0);
  r.ext2 = r.ext1;
  return r;
}

Realizer union_realizer(const Realizer& rp, int p_size, const Realizer& rq) {
  Realizer r;
  r.ext1 = rp.ext1;
  for (int x : rq.ext1) r.ext1.push_back(x + p_size);
  for (int x : rq.ext2) r.ext2.push_back(x + p_size);
  r.ext2.insert(r.ext2.end(), rp.ext2.begin(), rp.ext2.end());
  return r;
}

Conjugate conjugate(const Poset& p, const Realizer& r) {
  if (!verify_realizer(p, r)) {
    throw Error(ErrorCode::InvalidRealizer, "the two orders do not realize the poset");
  }
  const int n = p.size();
  auto pos1 = positions(r.ext1);
  auto pos2 = positions(r.ext2);
  std::vector<Edge> rel;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && pos1[x] < pos1[y] && pos2[x] > pos2[y])
        rel.emplace_back(pos1[x], pos1[y]);
  std::vector<std::string> names;
  if (p.has_names()) {
    names.resize(n);
    for (int x = 0; x < n; ++x) names[pos1[x]] = p.name(x);
  }

  Conjugate out;
  auto built = Poset::from_relation(n, rel, std::move(names));
  out.poset = std::move(built.poset);
  out.index_of.resize(n);
  for (int x = 0; x < n; ++x) out.index_of[x] = built.index_of[pos1[x]];
  for (int i = 0; i < n; ++i) out.realizer.ext1.push_back(out.index_of[r.ext1[i]]);
  for (int i = n - 1; i >= 0; --i) out.realizer.ext2.push_back(out.index_of[r.ext2[i]]);

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (p.comparable(x, y) == out.poset.comparable(out.index_of[x], out.index_of[y]))
        throw std::logic_error("conjugate: comparability graph is not the complement");
  return out;
}

PolyunsatReport is_co_polyunsaturated(const Poset& p, const Realizer& r,
                                      const SearchLimits& limits, unsigned threads) {
  return is_polyunsaturated(conjugate(p, r).poset, limits, threads);
}

}  // namespace polysat
