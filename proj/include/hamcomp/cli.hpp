// Copyright 2026 The hamcomp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The hamcomp command line: generate, verify, kappa, landau, draw, tracks,
// lcf and cayley. Exit codes: 0 success, 1 verification failure, 2 usage
// or input error.

#pragma once

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamcomp/bounds.hpp"
#include "hamcomp/cayley.hpp"
#include "hamcomp/cube.hpp"
#include "hamcomp/io.hpp"
#include "hamcomp/johnson.hpp"
#include "hamcomp/kappa.hpp"
#include "hamcomp/landau.hpp"
#include "hamcomp/perm.hpp"
#include "hamcomp/svg.hpp"
#include "hamcomp/verify.hpp"

namespace hamcomp {

namespace cli {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

inline int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(what + ": expected an integer, got '" + s + "'");
  return v;
}

inline std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(parse_int(part, what));
  if (out.empty()) throw Error(what + ": empty list");
  return out;
}

inline void require_params(const std::string& family, const std::vector<std::string>& p, std::size_t n,
                           const char* usage) {
  if (p.size() != n) throw Error(family + ": expected parameters " + usage);
}

// Graph from "<family> <params...>".
inline Graph make_graph(const std::string& family, const std::vector<std::string>& p) {
  if (family == "hypercube") {
    require_params(family, p, 1, "<n>");
    return Graph::hypercube(parse_int(p[0], "n"));
  }
  if (family == "johnson") {
    require_params(family, p, 2, "<n> <k>");
    return Graph::johnson(parse_int(p[0], "n"), parse_int(p[1], "k"));
  }
  if (family == "middle") {
    require_params(family, p, 1, "<n> (for M_{2n+1})");
    return Graph::middle_levels(parse_int(p[0], "n"));
  }
  if (family == "permutahedron") {
    require_params(family, p, 1, "<n>");
    return Graph::permutahedron(parse_int(p[0], "n"));
  }
  if (family == "permutahedron_plus") {
    require_params(family, p, 1, "<n>");
    return Graph::permutahedron_plus(parse_int(p[0], "n"));
  }
  if (family == "cayley") {
    require_params(family, p, 2, "<group> <generators>, e.g. Z3xZ5 \"(1,0),(0,1)\"");
    std::vector<int> moduli = parse_group(p[0]);
    return Graph::abelian_cayley(moduli, parse_elements(p[1], moduli));
  }
  if (family == "explicit") {
    require_params(family, p, 1, "<graph-file>");
    return read_explicit_graph_file(p[0]);
  }
  throw Error("unknown family '" + family +
              "' (hypercube, johnson, middle, permutahedron, permutahedron_plus, cayley, explicit)");
}

struct GenerateOptions {
  std::string construction = "auto";
  int m = 0;
  std::string parts;
  std::string composition;
  SearchBudget budget;
};

inline HamCycle cayley_cycle(const Graph& g, std::string construction, const SearchBudget& budget) {
  AbelianGroup grp(g.moduli());
  if (construction == "auto") {
    if (grp.size() % 2 == 0 && grp.size() >= 4) {
      construction = "comp2";
    } else if (grp.size() % 2) {
      construction = "odd";
    } else {
      construction = "filtration";
    }
  }
  if (construction == "filtration") return abelian_ham_cycle(g.moduli(), g.generators());
  if (construction == "comp2") return comp2_cycle(g.moduli(), g.generators(), budget.max_nodes);
  if (construction == "odd") {
    OddClassification r = odd_order_classify(g.moduli(), g.generators(), budget);
    if (r.witness) return *r.witness;
    return abelian_ham_cycle(g.moduli(), g.generators());
  }
  throw Error("cayley: unknown construction '" + construction + "' (auto, filtration, comp2, odd)");
}

inline HamCycle generate(const std::string& family, const std::vector<std::string>& p, const GenerateOptions& opt) {
  Graph g = make_graph(family, p);
  const std::string& c = opt.construction;
  auto unknown = [&](const char* known) {
    return Error(family + ": unknown construction '" + c + "' (" + known + ")");
  };
  switch (g.family()) {
    case Family::kHypercube: {
      int n = g.n();
      if (c == "auto" || c == "optimal") return optimal_cube_cycle(n);
      if (c == "brgc") return brgc(n);
      if (c == "shifted" || c == "two_track") {
        if (opt.m <= 0) throw Error(c + ": needs --m; the cycle lives in Q_{n+m}");
        return c == "shifted" ? shifted_product_cycle(n, opt.m) : two_track_cycle(n, opt.m);
      }
      if (c == "t_track") {
        if (opt.parts.empty()) throw Error("t_track: needs --parts m1,...; the cycle lives in Q_{n+m1+...}");
        return t_track_cycle(n, parse_int_list(opt.parts, "--parts"));
      }
      throw unknown("optimal, brgc, shifted, two_track, t_track");
    }
    case Family::kJohnson:
      if (c == "auto" || c == "general") return general_cycle(g.n(), g.k(), opt.budget);
      if (c == "coprime") return coprime_cycle(g.n(), g.k(), opt.budget);
      throw unknown("auto, coprime, general");
    case Family::kMiddleLevels:
      if (c == "auto" || c == "shift") return middle_levels_cycle(g.k(), opt.budget);
      if (c == "ten") {
        if (g.k() != 3) throw Error("ten: only defined on M_7 (middle 3)");
        return middle_levels_cycle(3, middle7_ten(), opt.budget);
      }
      throw unknown("shift, ten");
    case Family::kPermutahedron:
      if (c == "auto" || c == "best") return best_perm_cycle(g.n(), opt.budget);
      if (c == "sjt") return sjt(g.n());
      if (c == "pin") {
        if (opt.composition.empty()) throw Error("pin: needs --composition a1,a2,...");
        Composition a = parse_int_list(opt.composition, "--composition");
        if (composition_sum(a) != g.n()) throw Error("pin: composition must sum to n");
        return pin_cycle(a, opt.budget);
      }
      throw unknown("best, sjt, pin");
    case Family::kPermutahedronPlus:
      if (c == "auto" || c == "one_track") return plus_one_track(g.n(), opt.budget);
      throw unknown("one_track");
    case Family::kAbelianCayley:
      return cayley_cycle(g, c, opt.budget);
    case Family::kExplicit: {
      if (c != "auto" && c != "search") throw unknown("search");
      LiftResult r = lifted_cycle_search(g, Automorphism::identity(g), opt.budget);
      if (!r.found()) throw Error("explicit: no Hamilton cycle found (" + status_name(r.status) + ")");
      r.cycle->construction = "search";
      return *r.cycle;
    }
  }
  throw Error("generate: unsupported family");
}

struct Style {
  bool color = false;
  std::string pass() const { return color ? "\033[32mPASS\033[0m" : "PASS"; }
  std::string fail() const { return color ? "\033[31mFAIL\033[0m" : "FAIL"; }
};

struct VerifyReport {
  bool ok = false;
  std::vector<std::pair<std::string, std::string>> lines;
};

inline VerifyReport verify_cycle(const HamCycle& c) {
  VerifyReport r;
  r.lines.emplace_back("graph", c.graph.describe());
  r.lines.emplace_back("vertices", std::to_string(c.size()));
  if (!c.construction.empty()) r.lines.emplace_back("construction", c.construction);
  CycleReport v = validate_cycle(c);
  if (!v) {
    r.lines.emplace_back("valid", "no: " + v.reason + " (break index " + std::to_string(v.index) + ")");
    return r;
  }
  r.lines.emplace_back("valid", "yes");
  std::uint64_t k = cycle_compression(c);
  r.lines.emplace_back("compression", std::to_string(k));
  r.ok = true;
  if (c.claimed_k) {
    r.lines.emplace_back("claimed_k", std::to_string(*c.claimed_k));
    bool divides = *c.claimed_k > 0 && c.size() % *c.claimed_k == 0;
    bool covered = divides && k >= *c.claimed_k && k % *c.claimed_k == 0;
    if (!covered) r.ok = false;
    if (c.automorphism && divides) {
      bool sym = check_symmetric(c, *c.automorphism, *c.claimed_k);
      r.lines.emplace_back("symmetric", sym ? "yes" : "no");
      if (!sym) r.ok = false;
    }
  }
  if (auto bound = family_upper_bound(c.graph)) {
    r.lines.emplace_back("family_bound", std::to_string(*bound));
    if (k > *bound) r.ok = false;
  }
  return r;
}

inline Json landau_json(int max) {
  auto num = [](const BigInt& v) -> Json {
    if (v > BigInt(std::uint64_t{1} << 53)) return v.str();
    return v.convert_to<std::uint64_t>();
  };
  Json rows = Json::array();
  for (int n = 1; n <= max; ++n) {
    IntPartition l = landau(n), l0 = landau0(n), l2 = landau2(n);
    Json row{{"n", n},
             {"lambda", num(l.value)},
             {"lambda_parts", l.parts_string()},
             {"lambda0", num(l0.value)},
             {"lambda0_parts", l0.parts_string()},
             {"lambda2", l2.defined ? num(l2.value) : Json("-inf")},
             {"lambda2_parts", l2.defined ? l2.parts_string() : "--"}};
    row["lambda/lambda0"] = ratio_string(l.value, l0.value);
    row["lambda/lambda2"] = l2.defined ? ratio_string(l.value, l2.value) : "--";
    row["2lambda0/lambda2"] = l2.defined ? ratio_string(2 * l0.value, l2.value) : "--";
    rows.push_back(row);
  }
  return rows;
}

inline std::string landau_table(int max) {
  std::ostringstream s;
  s << "n\tlambda\tlambda0\tlambda2\tlambda/lambda0\tlambda/lambda2\t2lambda0/lambda2\n";
  for (int n = 1; n <= max; ++n) {
    IntPartition l = landau(n), l0 = landau0(n), l2 = landau2(n);
    s << n << '\t' << l.value << '\t' << l0.value << '\t' << l2.value_string() << '\t'
      << ratio_string(l.value, l0.value) << '\t' << (l2.defined ? ratio_string(l.value, l2.value) : "--") << '\t'
      << (l2.defined ? ratio_string(2 * l0.value, l2.value) : "--") << '\n';
  }
  return s.str();
}

// The three rows of the first-values table: values with witness parts.
inline std::string landau_rows(int max) {
  std::ostringstream s;
  auto row = [&](const char* name, auto fn) {
    s << name;
    for (int n = 1; n <= max; ++n) {
      IntPartition p = fn(n);
      std::string parts;
      for (int a : p.parts) parts += (parts.empty() ? "" : ",") + std::to_string(a);
      s << '\t' << p.value_string() << " [" << (p.defined ? parts : "--") << "]";
    }
    s << '\n';
  };
  s << "n";
  for (int n = 1; n <= max; ++n) s << '\t' << n;
  s << '\n';
  row("lambda", [](int n) { return landau(n); });
  row("lambda0", [](int n) { return landau0(n); });
  row("lambda2", [](int n) { return landau2(n); });
  return s.str();
}

inline void emit_cycle(const HamCycle& c, const std::string& path, bool text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << (text ? cycle_to_text(c) : cycle_to_json(c).dump(1) + "\n");
    return;
  }
  write_cycle_file(c, path, text);
  out << "wrote " << path << ": " << c.graph.describe() << ", " << c.size() << " vertices, construction "
      << c.construction;
  if (c.claimed_k) out << ", claimed_k " << *c.claimed_k;
  out << "\n";
}

}  // namespace cli

// Runs the command line on args (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace cli;
  Style style;
  style.color = std::getenv("NO_COLOR") == nullptr && &out == &std::cout && isatty(fileno(stdout));

  CLI::App app{"Hamilton cycles with rotational symmetry: construct, verify, measure compression.", "hamcomp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hamcomp 1.0.0");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Accepted and ignored; constructions are deterministic");

  std::string family;
  std::vector<std::string> params;
  GenerateOptions gen;
  std::string output;
  bool text = false;
  auto* g_cmd = app.add_subcommand("generate", "Construct a Hamilton cycle");
  g_cmd->add_option("family", family, "hypercube, johnson, middle, permutahedron, permutahedron_plus, cayley, explicit")
      ->required();
  g_cmd->add_option("params", params, "Family parameters");
  g_cmd->add_option("--construction", gen.construction, "Construction name (default: the best available)");
  g_cmd->add_option("--m", gen.m, "Second factor dimension for shifted/two_track hypercube cycles");
  g_cmd->add_option("--parts", gen.parts, "Group sizes m1,... for t_track hypercube cycles");
  g_cmd->add_option("--composition", gen.composition, "Composition a1,... for pin permutahedron cycles");
  g_cmd->add_option("--budget", gen.budget.max_nodes, "Search node budget");
  g_cmd->add_option("-o,--output", output, "Output file (default: stdout)");
  g_cmd->add_flag("--text", text, "Write the plain text format instead of JSON");

  std::string file;
  auto* v_cmd = app.add_subcommand("verify", "Verify a cycle file");
  v_cmd->add_option("cycle-file", file, "JSON or text cycle file")->required();

  std::vector<std::string> kappa_args;
  std::vector<std::string> automorphisms;
  KappaOptions kopt;
  kopt.budget.max_nodes = 10'000'000;
  bool kappa_json = false;
  auto* k_cmd = app.add_subcommand("kappa", "Exact Hamilton compression by lifted search");
  k_cmd->add_option("graph", kappa_args, "<family> <params...> or explicit <graph-file>")->required();
  k_cmd->add_option("--budget", kopt.budget.max_nodes, "Node budget per candidate automorphism");
  k_cmd->add_option("--seconds", kopt.budget.max_seconds, "Wall-clock budget per candidate (0: none)");
  k_cmd->add_option("--automorphism", automorphisms, "Extra automorphism as an index table 'i0,i1,...'");
  k_cmd->add_flag("--json", kappa_json, "JSON output");
  k_cmd->add_flag("--no-bounds", [&](std::int64_t) { kopt.use_bounds = false; }, "Do not prune by family bounds");

  int landau_max = 20;
  std::string landau_format = "table";
  auto* l_cmd = app.add_subcommand("landau", "Landau function tables");
  l_cmd->add_option("--max", landau_max, "Largest n")->check(CLI::Range(1, 200));
  l_cmd->add_option("--format", landau_format, "table, rows or json")
      ->check(CLI::IsMember({"table", "rows", "json"}));

  std::string svg_out;
  bool rings = false, graph_mode = false;
  auto* d_cmd = app.add_subcommand("draw", "Circular SVG drawing of a cycle");
  d_cmd->add_option("cycle-file", file, "JSON or text cycle file")->required();
  d_cmd->add_option("-o,--output", svg_out, "SVG output file")->required();
  auto* rings_flag = d_cmd->add_flag("--rings", rings, "One ring per word coordinate");
  d_cmd->add_flag("--graph", graph_mode, "Draw all graph edges as chords")->excludes(rings_flag);

  auto* t_cmd = app.add_subcommand("tracks", "Track count of a cycle");
  t_cmd->add_option("cycle-file", file, "JSON or text cycle file")->required();

  auto* f_cmd = app.add_subcommand("lcf", "LCF distance sequence of a cycle");
  f_cmd->add_option("cycle-file", file, "JSON or text cycle file")->required();

  std::string group, gens, cayley_construction = "auto";
  auto* c_cmd = app.add_subcommand("cayley", "Classify and construct cycles in an abelian Cayley graph");
  c_cmd->add_option("--group", group, "Group, e.g. Z3xZ5")->required();
  c_cmd->add_option("--gens", gens, "Generators, e.g. \"(1,0),(0,1)\"")->required();
  c_cmd->add_option("--construction", cayley_construction, "auto, filtration, comp2 or odd");
  c_cmd->add_option("--budget", gen.budget.max_nodes, "Search node budget");
  c_cmd->add_option("-o,--output", output, "Write the cycle to this file");
  c_cmd->add_flag("--text", text, "Write the plain text format instead of JSON");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g_cmd) {
      HamCycle c = generate(family, params, gen);
      require_valid(c);
      emit_cycle(c, output, text, out);
      return kOk;
    }
    if (*v_cmd) {
      VerifyReport r = verify_cycle(read_cycle_file(file));
      for (const auto& [k, v] : r.lines) out << k << ": " << v << "\n";
      out << "result: " << (r.ok ? style.pass() : style.fail()) << "\n";
      return r.ok ? kOk : kFailed;
    }
    if (*k_cmd) {
      std::vector<std::string> p(kappa_args.begin() + 1, kappa_args.end());
      Graph g = make_graph(kappa_args[0], p);
      for (const std::string& a : automorphisms) {
        std::vector<int> img = parse_int_list(a, "--automorphism");
        kopt.extra.push_back(Automorphism::table(std::vector<Index>(img.begin(), img.end())));
      }
      KappaResult r = kappa_exact(g, kopt);
      if (kappa_json) {
        Json j{{"graph", g.describe()}, {"kappa", r.kappa}, {"upper", r.upper}, {"certified", r.certified}};
        Json att = Json::array();
        for (const KappaAttempt& a : r.attempts) {
          att.push_back({{"automorphism", a.label}, {"k", a.k}, {"outcome", a.outcome}, {"nodes", a.nodes}});
        }
        j["attempts"] = att;
        if (r.witness) j["witness"] = cycle_to_json(*r.witness);
        out << j.dump(1) << "\n";
      } else {
        out << "graph: " << g.describe() << "\n";
        for (const KappaAttempt& a : r.attempts) {
          out << "  k=" << a.k << " " << a.outcome << " nodes=" << a.nodes << " " << a.label << "\n";
        }
        out << "kappa: " << r.kappa;
        if (r.upper > r.kappa) out << " (upper " << r.upper << ")";
        out << (r.certified ? " certified" : " not certified") << "\n";
      }
      return kOk;
    }
    if (*l_cmd) {
      if (landau_format == "json") out << landau_json(landau_max).dump(1) << "\n";
      else if (landau_format == "rows") out << landau_rows(landau_max);
      else out << landau_table(landau_max);
      return kOk;
    }
    if (*d_cmd) {
      HamCycle c = read_cycle_file(file);
      DrawOptions opt;
      opt.mode = rings ? DrawMode::kRings : graph_mode ? DrawMode::kGraph : DrawMode::kCycle;
      std::ofstream svg(svg_out);
      if (!svg) throw Error("cannot write " + svg_out);
      svg << render_svg(c, opt);
      out << "wrote " << svg_out << "\n";
      return kOk;
    }
    if (*t_cmd) {
      HamCycle c = read_cycle_file(file);
      require_valid(c);
      Tracks t = track_count(c);
      out << "tracks: " << t.count << "\n";
      for (std::size_t j = 0; j < t.class_of.size(); ++j) {
        out << "  column " << j + 1 << ": class " << t.class_of[j] + 1 << ", shift " << t.shift[j] << "\n";
      }
      BalanceStats b = balance_stats(c);
      out << "changes:";
      for (std::size_t i = 0; i < b.changes.size(); ++i) out << " " << b.labels[i] << "=" << b.changes[i];
      out << "\nbalanced: " << (b.balanced() ? "yes" : "no") << "\n";
      return kOk;
    }
    if (*f_cmd) {
      HamCycle c = read_cycle_file(file);
      Lcf l = lcf(c);
      out << "lcf: " << l.to_string() << "\nperiod: " << l.period << "\n";
      return kOk;
    }
    if (*c_cmd) {
      std::vector<int> moduli = parse_group(group);
      Graph g = Graph::abelian_cayley(moduli, parse_elements(gens, moduli));
      AbelianGroup grp(moduli);
      if (!grp.generates(encode_all(grp, g.generators()))) {
        throw Error("cayley: generators do not generate " + group_string(moduli));
      }
      out << "graph: " << g.describe() << ", " << grp.size() << " vertices\n";
      if (grp.size() % 2 == 1) {
        OddClassification r = odd_order_classify(moduli, g.generators(), gen.budget);
        out << "odd order: " << (r.incompressible ? "kappa = 1" : "kappa >= " + std::to_string(r.lower))
            << (r.certified ? " (certified)" : " (not certified)") << "\n  " << r.reason << "\n";
      } else if (grp.size() >= 4) {
        out << "even order: kappa >= 2\n";
      }
      HamCycle c = cayley_cycle(g, cayley_construction, gen.budget);
      require_valid(c);
      out << "cycle: construction " << c.construction << ", compression " << cycle_compression(c) << "\n";
      if (!output.empty()) emit_cycle(c, output, text, out);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

inline int run(int argc, char** argv) { return run(std::vector<std::string>(argv, argv + argc)); }

}  // namespace hamcomp
