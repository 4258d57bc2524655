#include "polysat/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>

namespace polysat {

ChainPartition ChainPartition::normalized() const {
  ChainPartition out = *this;
  for (auto& c : out.chains) std::sort(c.elems.begin(), c.elems.end());
  std::sort(out.chains.begin(), out.chains.end(),
            [](const Chain& a, const Chain& b) { return a.elems < b.elems; });
  return out;
}

void validate_partition(const Poset& p, const ChainPartition& cp) {
  std::vector<int> hits(p.size(), 0);
  for (const auto& c : cp.chains) {
    if (c.elems.empty()) {
      throw Error(ErrorCode::PartitionMismatch, "empty chain in partition");
    }
    for (int x : c.elems) {
      if (x < 0 || x >= p.size()) {
        throw Error(ErrorCode::PartitionMismatch,
                    "element " + std::to_string(x) + " not in poset");
      }
      ++hits[x];
    }
    if (!is_chain(p, c.elems)) {
      throw Error(ErrorCode::PartitionMismatch, "block is not a chain");
    }
  }
  for (int x = 0; x < p.size(); ++x) {
    if (hits[x] != 1) {
      throw Error(ErrorCode::PartitionMismatch,
                  "element " + p.name(x) + " covered " +
                      std::to_string(hits[x]) + " times");
    }
  }
}

int mk(const ChainPartition& cp, int k) {
  int total = 0;
  for (const auto& c : cp.chains) total += std::min(k, c.size());
  return total;
}

int chains_at_least(const ChainPartition& cp, int k) {
  return static_cast<int>(std::count_if(
      cp.chains.begin(), cp.chains.end(),
      [k](const Chain& c) { return c.size() >= k; }));
}

bool is_k_saturated(const Poset& p, const ChainPartition& cp, int k) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be at least 1");
  validate_partition(p, cp);
  return mk(cp, k) == dk(p, k);
}

namespace {

Chain chain_of(Mask m) {
  Chain c;
  for (; m; m &= m - 1) c.elems.push_back(lowest(m));
  return c;
}

}  // namespace

void for_each_chain_partition(
    const Poset& p, const std::function<bool(const ChainPartition&)>& visit,
    const SearchLimits& limits) {
  require_size(p.size(), limits, "enumerate_chain_partitions");
  Deadline deadline(limits.budget_seconds);
  ChainPartition current;
  bool stop = false;

  // `open` is the chain under construction, `last` its top element.
  std::function<void(Mask, Mask, int)> walk = [&](Mask uncovered, Mask open,
                                                 int last) {
    if (stop) return;
    deadline.poll();
    if (open == 0) {
      if (uncovered == 0) {
        if (!visit(current)) stop = true;
        return;
      }
      int x = lowest(uncovered);
      walk(uncovered & ~bit(x), bit(x), x);
      return;
    }
    // Close the chain here.
    current.chains.push_back(chain_of(open));
    walk(uncovered, 0, -1);
    current.chains.pop_back();
    // Or extend it.
    for (Mask m = uncovered & p.above(last); m && !stop; m &= m - 1) {
      int y = lowest(m);
      walk(uncovered & ~bit(y), open | bit(y), y);
    }
  };
  walk(full_mask(p.size()), 0, -1);
}

std::vector<ChainPartition> enumerate_chain_partitions(const Poset& p,
                                                       const SearchLimits& limits) {
  std::vector<ChainPartition> out;
  for_each_chain_partition(
      p,
      [&](const ChainPartition& cp) {
        out.push_back(cp);
        return true;
      },
      limits);
  return out;
}

namespace {

class NormSearch {
 public:
  NormSearch(const Poset& p, const std::vector<int>& ks, const SearchLimits& limits)
      : p_(p), deadline_(limits.budget_seconds) {
    cost_.assign(p.size() + 1, 0);
    for (int s = 0; s <= p.size(); ++s)
      for (int k : ks) cost_[s] += std::min(k, s);
  }

  NormResult solve() {
    NormResult out;
    Mask u = full_mask(p_.size());
    out.value = best(u);
    while (u) {
      Mask c = memo_.at(u).chain;
      out.partition.chains.push_back(chain_of(c));
      u &= ~c;
    }
    return out;
  }

 private:
  struct Entry {
    int value;
    Mask chain;
  };

  int best(Mask uncovered) {
    if (uncovered == 0) return 0;
    if (auto it = memo_.find(uncovered); it != memo_.end()) return it->second.value;
    deadline_.poll();
    int x = lowest(uncovered);
    Entry e{std::numeric_limits<int>::max(), 0};
    extend(uncovered, bit(x), x, 1, e);
    memo_.emplace(uncovered, e);
    return e.value;
  }

  void extend(Mask uncovered, Mask chain, int last, int size, Entry& e) {
    int v = cost_[size] + best(uncovered & ~chain);
    if (v < e.value) e = {v, chain};
    for (Mask m = uncovered & p_.above(last); m; m &= m - 1) {
      int y = lowest(m);
      extend(uncovered, chain | bit(y), y, size + 1, e);
    }
  }

  const Poset& p_;
  Deadline deadline_;
  std::vector<int> cost_;
  std::unordered_map<Mask, Entry> memo_;
};

}  // namespace

NormResult min_total_norm(const Poset& p, const std::vector<int>& ks,
                          const SearchLimits& limits) {
  for (int k : ks)
    if (k < 1) throw Error(ErrorCode::BadK, "k must be at least 1");
  require_size(p.size(), limits, "chain partition search");
  return NormSearch(p, ks, limits).solve();
}

NormResult min_norm(const Poset& p, int k, const SearchLimits& limits) {
  NormResult r = min_total_norm(p, {k}, limits);
  if (r.value != dk(p, k)) {
    throw std::logic_error("min_norm: minimum k-norm " + std::to_string(r.value) +
                           " differs from d_k " + std::to_string(dk(p, k)));
  }
  return r;
}

NormResult min_joint_norm(const Poset& p, int k, int l, const SearchLimits& limits) {
  if (!(k < l)) throw Error(ErrorCode::BadK, "min_joint_norm needs k < l");
  return min_total_norm(p, {k, l}, limits);
}

std::optional<ChainPartition> find_saturated(const Poset& p,
                                             const std::vector<int>& ks,
                                             const SearchLimits& limits) {
  NormResult r = min_total_norm(p, ks, limits);
  int target = 0;
  for (int k : ks) target += dk(p, k);
  if (r.value != target) return std::nullopt;
  return r.partition;
}

unsigned default_threads() {
  if (const char* env = std::getenv("POLYSAT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

PolyunsatReport is_polyunsaturated(const Poset& p, const SearchLimits& limits,
                                   unsigned threads) {
  require_size(p.size(), limits, "is_polyunsaturated");
  PolyunsatReport report;
  report.height = height(p);
  report.d = d_sequence(p).values;
  const int c = report.height;
  for (int k = 1; k < c; ++k)
    for (int l = k + 2; l < c; ++l) {
      PairVerdict v;
      v.k = k;
      v.l = l;
      v.dk = report.d[k - 1];
      v.dl = report.d[l - 1];
      report.pairs.push_back(v);
    }

  if (threads == 0) threads = default_threads();
  threads = std::max(1u, std::min<unsigned>(threads, report.pairs.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next++) < report.pairs.size();) {
      PairVerdict& v = report.pairs[i];
      try {
        NormResult r = min_joint_norm(p, v.k, v.l, limits);
        if (r.value == v.dk + v.dl) {
          v.verdict = Witness{std::move(r.partition)};
        } else {
          v.verdict = NoJointPartition{r.value};
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = report.pairs.size();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  report.polyunsaturated = std::all_of(report.pairs.begin(), report.pairs.end(),
                                       [](const PairVerdict& v) { return v.unsaturated(); });
  return report;
}

}  // namespace polysat
