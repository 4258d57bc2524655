#include "polysat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polysat/construct.hpp"
#include "polysat/graphdual.hpp"
#include "polysat/io.hpp"
#include "polysat/kfamily.hpp"
#include "polysat/saturation.hpp"

namespace polysat {

namespace {

struct InputOptions {
  std::string path;
  std::string inline_json;

  void attach(CLI::App* cmd) {
    auto* file = cmd->add_option("-i,--input", path, "poset JSON file ('-' for stdin)");
    auto* text = cmd->add_option("--inline", inline_json, "poset JSON given inline");
    file->excludes(text);
  }

  PosetDocument load(std::istream& in) const {
    std::string text;
    if (!inline_json.empty()) {
      text = inline_json;
    } else if (!path.empty() && path != "-") {
      std::ifstream f(path);
      if (!f) throw Error(ErrorCode::ParseError, "cannot open " + path);
      text.assign(std::istreambuf_iterator<char>(f), {});
    } else {
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return read_poset_json(text);
  }
};

std::vector<int> parse_permutation(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad realizer entry '" + item + "'");
    }
  }
  return out;
}

void print_dk_table(const Poset& p, bool csv, std::ostream& out) {
  DSequence d = d_sequence(p);
  DeltaSequence b = difference(d);
  if (csv) {
    out << "k,d_k,delta_d_k\n";
    for (std::size_t i = 0; i < d.values.size(); ++i)
      out << i + 1 << ',' << d.values[i] << ',' << b.values[i] << '\n';
    return;
  }
  out << std::setw(4) << "k" << std::setw(8) << "d_k" << std::setw(10) << "delta"
      << '\n';
  for (std::size_t i = 0; i < d.values.size(); ++i)
    out << std::setw(4) << i + 1 << std::setw(8) << d.values[i] << std::setw(10)
        << b.values[i] << '\n';
}

int print_report(const Poset& p, const PolyunsatReport& report, std::ostream& out) {
  out << report_json(p, report);
  return report.polyunsaturated ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact k-families, saturated chain partitions and polyunsaturated posets",
               "polysat"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  SearchLimits limits;
  app.add_option("--limit-n", limits.max_n, "largest poset the exhaustive searches accept")
      ->capture_default_str();
  app.add_option("--budget-seconds", limits.budget_seconds, "wall-clock budget per search")
      ->capture_default_str();

  int status = kExitOk;

  // construct
  auto* construct = app.add_subcommand("construct", "build a poset");
  construct->require_subcommand(1, 1);
  bool dot = false;
  construct->add_flag("--dot", dot, "emit the Hasse diagram as DOT instead of JSON");
  auto emit = [&](const Poset& p, const Realizer& r) {
    out << (dot ? export_dot(p) : write_poset_json(p, r));
  };
  int j = 0;
  auto* pj = construct->add_subcommand("pj", "the minimal polyunsaturated poset P_j");
  pj->add_option("--j", j, "index j >= 1")->required();
  pj->callback([&] { emit(build_pj(j).poset, pj_realizer(j)); });

  std::vector<int> b;
  auto* delta = construct->add_subcommand("delta", "realize a difference sequence");
  delta->add_option("--b", b, "comma-separated sequence, e.g. 3,3,2,1")
      ->required()
      ->delimiter(',');
  delta->callback([&] {
    BuiltPoset built = from_delta(DeltaSequence{b});
    emit(built.poset, built.realizer);
  });

  int n = 0, c = 0, a = 0;
  auto* nca = construct->add_subcommand("nca", "n elements, height c, width a");
  nca->add_option("--n", n)->required();
  nca->add_option("--c", c)->required();
  nca->add_option("--a", a)->required();
  nca->callback([&] {
    BuiltPoset built = from_delta(sequence_for(n, c, a));
    emit(built.poset, built.realizer);
  });
  for (auto* sub : {pj, delta, nca}) sub->fallthrough();

  // dk-table
  auto* table = app.add_subcommand("dk-table", "print k, d_k and the difference sequence");
  InputOptions table_in;
  table_in.attach(table);
  bool csv = false;
  table->add_flag("--csv", csv, "CSV output");
  table->callback([&] { print_dk_table(table_in.load(in).poset, csv, out); });

  // certify
  auto* certify = app.add_subcommand("certify", "exhaustive polyunsaturation report");
  InputOptions certify_in;
  certify_in.attach(certify);
  certify->callback([&] {
    Poset p = certify_in.load(in).poset;
    status = print_report(p, is_polyunsaturated(p, limits), out);
  });

  // saturate
  auto* saturate = app.add_subcommand("saturate", "find a partition saturated for all given k");
  InputOptions saturate_in;
  saturate_in.attach(saturate);
  std::vector<int> ks;
  saturate->add_option("--ks", ks, "comma-separated k values")->required()->delimiter(',');
  saturate->callback([&] {
    Poset p = saturate_in.load(in).poset;
    NormResult best = min_total_norm(p, ks, limits);
    int target = 0;
    for (int k : ks) target += dk(p, k);
    nlohmann::ordered_json j;
    j["ks"] = ks;
    j["target"] = target;
    j["min_total_norm"] = best.value;
    j["saturated"] = best.value == target;
    j["chains"] = nlohmann::ordered_json::parse(partition_json(p, best.partition));
    out << j.dump() << '\n';
    status = best.value == target ? kExitOk : kExitNegative;
  });

  // dual
  auto* dual = app.add_subcommand("dual", "certify or tabulate the conjugate poset");
  InputOptions dual_in;
  dual_in.attach(dual);
  std::vector<std::string> realizer_text;
  dual->add_option("--realizer", realizer_text,
                   "two comma-separated permutations (default: the file's realizer)")
      ->expected(2);
  std::string mode = "certify";
  dual->add_option("--mode", mode, "certify or dk-table")
      ->check(CLI::IsMember({"certify", "dk-table"}))
      ->capture_default_str();
  dual->add_flag("--csv", csv, "CSV output for dk-table mode");
  dual->callback([&] {
    PosetDocument doc = dual_in.load(in);
    Realizer r;
    if (!realizer_text.empty()) {
      r.ext1 = parse_permutation(realizer_text[0]);
      r.ext2 = parse_permutation(realizer_text[1]);
    } else if (doc.realizer) {
      r = *doc.realizer;
    } else {
      throw Error(ErrorCode::InvalidRealizer,
                  "no realizer: pass --realizer or use a file that carries one");
    }
    Conjugate conj = conjugate(doc.poset, r);
    if (mode == "dk-table") {
      print_dk_table(conj.poset, csv, out);
    } else {
      status = print_report(conj.poset, is_polyunsaturated(conj.poset, limits), out);
    }
  });

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "one poset per isomorphism class");
  int enum_n = 0;
  bool count_only = false;
  enumerate->add_option("--n", enum_n, "element count, 1..6")->required();
  enumerate->add_flag("--count", count_only, "print only the number of classes");
  enumerate->callback([&] {
    long long count = 0;
    for_each_poset(enum_n, [&](const Poset& p) {
      ++count;
      if (!count_only) out << write_poset_json(p);
      return true;
    });
    if (count_only) out << count << '\n';
  });

  // feasible
  auto* feasible = app.add_subcommand(
      "feasible", "existence of polyunsaturated posets with given n, height c, width a");
  int fn = 0, fc = 0, fa = 0;
  bool dual_mode = false;
  auto* opt_n = feasible->add_option("--n", fn, "element count");
  feasible->add_option("--c", fc, "height")->required();
  auto* opt_a = feasible->add_option("--a", fa, "width");
  feasible->add_flag("--dual", dual_mode,
                     "antichain-partition version: a is the height of the conjugate");
  feasible->callback([&] {
    nlohmann::ordered_json j;
    bool ok = false;
    if (opt_n->count() && opt_a->count()) {
      FeasibilityVerdict v = dual_mode ? feasible_dual_nac(fn, fa, fc) : feasible_nca(fn, fc, fa);
      j["feasible"] = v.feasible;
      j["failed_conditions"] = v.failed_conditions;
      if (v.feasible && !dual_mode) j["sequence"] = sequence_for(fn, fc, fa).values;
      ok = v.feasible;
    } else if (opt_a->count()) {
      ok = feasible_ca(fc, fa);
      j["feasible"] = ok;
    } else if (opt_n->count()) {
      ok = feasible_nc(fn, fc);
      j["feasible"] = ok;
    } else {
      throw Error(ErrorCode::BadParameters, "feasible needs --n and/or --a");
    }
    out << j.dump() << '\n';
    status = ok ? kExitOk : kExitNegative;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "polysat: " << e.what() << '\n';
    return kExitError;
  } catch (const Error& e) {
    err << "polysat: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "polysat: internal error: " << e.what() << '\n';
    return kExitError;
  }
  return status;
}

}  // namespace polysat
