#include "polysat/io.hpp"

#include <sstream>

#include "json.hpp"

namespace polysat {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<int> read_permutation(const json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw Error(ErrorCode::ParseError, std::string(what) + " must list all " +
                                           std::to_string(n) + " elements");
  }
  return j.get<std::vector<int>>();
}

}  // namespace

PosetDocument read_poset_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "expected an object with integer \"n\"");
  }
  const int n = j["n"].get<int>();
  std::vector<Edge> covers;
  try {
    if (j.contains("covers")) {
      for (const auto& pair : j["covers"]) {
        if (!pair.is_array() || pair.size() != 2) {
          throw Error(ErrorCode::ParseError, "covers entries must be [i, j] pairs");
        }
        covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
      }
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();

    auto labeled = from_covers(n, covers, std::move(names));
    PosetDocument doc{std::move(labeled.poset), std::nullopt};
    if (j.contains("realizer")) {
      const auto& r = j["realizer"];
      if (!r.is_array() || r.size() != 2) {
        throw Error(ErrorCode::ParseError, "realizer must hold two permutations");
      }
      Realizer real;
      for (int x : read_permutation(r[0], n, "realizer[0]")) {
        if (x < 0 || x >= n) throw Error(ErrorCode::IndexOutOfRange, "realizer entry");
        real.ext1.push_back(labeled.index_of[x]);
      }
      for (int x : read_permutation(r[1], n, "realizer[1]")) {
        if (x < 0 || x >= n) throw Error(ErrorCode::IndexOutOfRange, "realizer entry");
        real.ext2.push_back(labeled.index_of[x]);
      }
      doc.realizer = std::move(real);
    }
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string write_poset_json(const Poset& p, const std::optional<Realizer>& r) {
  ordered_json j;
  j["n"] = p.size();
  ordered_json covers = ordered_json::array();
  for (auto [x, y] : cover_relations(p)) covers.push_back({x, y});
  j["covers"] = std::move(covers);
  if (p.has_names()) j["names"] = p.names();
  if (r) j["realizer"] = {r->ext1, r->ext2};
  return j.dump() + "\n";
}

namespace {

ordered_json chains_json(const Poset& p, const ChainPartition& cp) {
  ordered_json out = ordered_json::array();
  for (const auto& c : cp.normalized().chains) {
    ordered_json chain = ordered_json::array();
    for (int x : c.elems) chain.push_back(p.name(x));
    out.push_back(std::move(chain));
  }
  return out;
}

}  // namespace

std::string report_json(const Poset& p, const PolyunsatReport& report) {
  ordered_json j;
  j["n"] = p.size();
  j["height"] = report.height;
  j["d"] = report.d;
  ordered_json pairs = ordered_json::array();
  for (const auto& v : report.pairs) {
    ordered_json e;
    e["k"] = v.k;
    e["l"] = v.l;
    e["d_k_plus_d_l"] = v.dk + v.dl;
    if (const auto* none = std::get_if<NoJointPartition>(&v.verdict)) {
      e["verdict"] = "NoJointPartition";
      e["min_joint_norm"] = none->min_joint_norm;
    } else {
      e["verdict"] = "Witness";
      e["chains"] = chains_json(p, std::get<Witness>(v.verdict).partition);
    }
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  j["polyunsaturated"] = report.polyunsaturated;
  return j.dump(2) + "\n";
}

std::string partition_json(const Poset& p, const ChainPartition& cp) {
  return chains_json(p, cp).dump() + "\n";
}

std::string feasibility_json(const FeasibilityVerdict& v) {
  ordered_json j;
  j["feasible"] = v.feasible;
  j["failed_conditions"] = v.failed_conditions;
  return j.dump() + "\n";
}

std::string export_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int x = 0; x < p.size(); ++x) {
    std::string label;
    for (char ch : p.name(x)) {
      if (ch == '"' || ch == '\\') label += '\\';
      label += ch;
    }
    out << "  n" << x << " [label=\"" << label << "\"];\n";
  }
  if (auto classes = ranks(p)) {
    for (const auto& cls : *classes) {
      out << "  { rank=same;";
      for (int x : cls) out << " n" << x << ";";
      out << " }\n";
    }
  }
  for (auto [x, y] : cover_relations(p)) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace polysat
