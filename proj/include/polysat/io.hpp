#pragma once

#include <optional>
#include <string>

#include "polysat/construct.hpp"
#include "polysat/graphdual.hpp"
#include "polysat/poset.hpp"
#include "polysat/saturation.hpp"

namespace polysat {

// Poset interchange document:
//   {"n": 3, "covers": [[0,1],[1,2]], "names": ["u","s1","r1"],
//    "realizer": [[0,1,2],[0,1,2]]}
// "names" and "realizer" are optional. The reader accepts any acyclic pair
// list under "covers" and closes it; the writer emits the transitive
// reduction. Realizer entries use the same element indices as "covers".
struct PosetDocument {
  Poset poset;
  std::optional<Realizer> realizer;
};

PosetDocument read_poset_json(const std::string& text);
// Canonical form: compact, keys in the order n, covers, names, realizer,
// trailing newline. read followed by write reproduces canonical input.
std::string write_poset_json(const Poset& p, const std::optional<Realizer>& r = std::nullopt);

std::string report_json(const Poset& p, const PolyunsatReport& report);
std::string partition_json(const Poset& p, const ChainPartition& cp);
std::string feasibility_json(const FeasibilityVerdict& v);

// Hasse diagram, bottom to top, one rank per row when ranks exist.
std::string export_dot(const Poset& p);

}  // namespace polysat
