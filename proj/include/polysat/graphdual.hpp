#pragma once

#include <vector>

#include "polysat/poset.hpp"
#include "polysat/saturation.hpp"

namespace polysat {

// Simple undirected graph on at most 64 vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, 0) {
    if (n > kMaskBits) throw Error(ErrorCode::SizeLimitExceeded, "Graph needs n <= 64");
  }

  int size() const { return n_; }
  bool adjacent(int x, int y) const { return (adj_[x] >> y) & 1u; }
  Mask neighbours(int x) const { return adj_[x]; }
  void add_edge(int x, int y);
  int edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> adj_;
};

// Two linear extensions whose intersection is the order.
struct Realizer {
  std::vector<int> ext1;
  std::vector<int> ext2;
  friend bool operator==(const Realizer&, const Realizer&) = default;
};

Graph comparability_graph(const Poset& p);
Graph complement(const Graph& g);

// Largest union of k independent sets (k cliques for omega_k), found from
// the minimum colouring of every vertex subset. n <= 16.
int alpha_k(const Graph& g, int k);
int omega_k(const Graph& g, int k);

bool is_linear_extension(const Poset& p, const std::vector<int>& order);
bool verify_realizer(const Poset& p, const Realizer& r);

// Chain realizer (both extensions equal) and the antichain one (an order and
// its reverse).
Realizer chain_realizer(int n);

// Realizer of disjoint_union(p, q) from realizers of the parts: q's block is
// appended in the first extension and prepended in the second.
Realizer union_realizer(const Realizer& rp, int p_size, const Realizer& rq);

struct Conjugate {
  Poset poset;
  Realizer realizer;       // ext1 and reversed ext2, in the new indexing
  std::vector<int> index_of;  // index_of[element of p] = element of poset
};

// x below y iff x precedes y in ext1 and follows it in ext2. The result is
// reindexed along ext1 so that it stays topologically indexed.
Conjugate conjugate(const Poset& p, const Realizer& r);

PolyunsatReport is_co_polyunsaturated(const Poset& p, const Realizer& r,
                                      const SearchLimits& limits = {},
                                      unsigned threads = 0);

}  // namespace polysat
