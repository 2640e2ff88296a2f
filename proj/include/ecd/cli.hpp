#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecd/analysis.hpp"
#include "ecd/blocks_file.hpp"
#include "ecd/constructions.hpp"
#include "ecd/design.hpp"
#include "ecd/ec.hpp"
#include "ecd/graph.hpp"
#include "ecd/report.hpp"
#include "ecd/verify.hpp"

namespace ecd {

/// Everything a command invocation produced: exit code, the structured
/// report, and the exact stdout/stderr payloads.
///
/// Exit codes: 0 success or property holds, 1 property fails (invalid design,
/// closure check fails, nothing found), 2 usage or input errors.
struct CommandResult {
  int exit_code = 0;
  Report report;
  std::string output;
  std::string error;
};

namespace detail {

inline CyclicDevelopment parse_cyclic_spec(const std::string& spec) {
  // cyclic:<v>:<p,p,p>[:<p,p,p>...]
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t colon = spec.find(':', pos);
    parts.push_back(colon == std::string::npos ? spec.substr(pos)
                                               : spec.substr(pos, colon - pos));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  if (parts.size() < 3 || parts[0] != "cyclic")
    throw Error("cyclic spec must look like cyclic:<v>:<p,p,..>[:<p,p,..>...]");
  int v = 0;
  try {
    std::size_t used = 0;
    v = std::stoi(parts[1], &used);
    if (used != parts[1].size()) throw Error("");
  } catch (...) {
    throw Error("cyclic spec: bad modulus '" + parts[1] + "'");
  }
  std::vector<Block> bases;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    Block b;
    std::size_t start = 0;
    const std::string& body = parts[i];
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      std::string tok =
          comma == std::string::npos ? body.substr(start) : body.substr(start, comma - start);
      try {
        std::size_t used = 0;
        b.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw Error("");
      } catch (...) {
        throw Error("cyclic spec: bad point '" + tok + "'");
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    bases.push_back(std::move(b));
  }
  return develop_cyclic(v, bases);
}

/// Catalog names resolve first, then cyclic specs, then file paths.
inline Design resolve_design(const std::string& input, std::uint64_t seed) {
  if (is_builtin_name(input)) return builtin(input, seed);
  if (input.rfind("cyclic:", 0) == 0) return parse_cyclic_spec(input).design;
  return load_blocks_file(input);
}

inline Report design_summary(const Design& d) {
  Report r;
  r["v"] = d.point_count();
  r["b"] = d.block_count();
  return r;
}

inline Graph select_graph(const Design& d, const std::string& mode, const std::vector<int>& s,
                          Report& graph_report) {
  graph_report["mode"] = mode;
  if (mode == "big") return build_big(d);
  if (s.empty()) throw Error("sbig mode requires --s with at least one intersection size");
  std::set<int> ss;
  for (int x : s) {
    if (x < 0) throw Error("--s entries must be non-negative");
    ss.insert(x);
  }
  graph_report["s"] = std::vector<int>(ss.begin(), ss.end());
  return build_s_big(d, ss);
}

inline std::string render_verify_human(const Report& rep) {
  std::string out = "verify-paper (seed " + rep["seed"].dump() +
                    (rep["fast"].get<bool>() ? ", fast" : "") + ")\n";
  int passed = 0;
  for (const auto& c : rep["checks"]) {
    bool pass = c["pass"].get<bool>();
    passed += pass ? 1 : 0;
    std::string name = c["name"].get<std::string>();
    out += (pass ? "PASS " : "FAIL ") + name;
    out.append(name.size() < 36 ? 36 - name.size() : 1, ' ');
    out += c["detail"].get<std::string>() + " (" + c["time_ms"].dump() + " ms)\n";
  }
  out += std::to_string(passed) + "/" + std::to_string(rep["checks"].size()) +
         " checks passed\n";
  return out;
}

}  // namespace detail

/// Parses and executes one CLI invocation (argv without the program name).
inline CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult res;

  CLI::App app{"block designs, their intersection graphs, and existential closure checks", "ecd"};
  app.require_subcommand(1);

  bool json_out = false;
  std::uint64_t seed = kDefaultSeed;
  app.add_flag("--json", json_out, "emit the report as JSON instead of text");
  app.add_option("--seed", seed, "seed for randomized searches")->capture_default_str();

  std::string c_name;
  auto* cmd_construct =
      app.add_subcommand("construct", "build a design and print it in the blocks file format");
  cmd_construct->fallthrough();
  cmd_construct->add_option("name", c_name, "catalog name or cyclic:<v>:<p,p,..>[:<p,p,..>...]")
      ->required();

  std::string v_input, v_k;
  int v_t = 2;
  long long v_lambda = 1;
  auto* cmd_validate = app.add_subcommand("validate", "check t-design or PBD axioms");
  cmd_validate->fallthrough();
  cmd_validate->add_option("--t", v_t, "strength t")->required();
  cmd_validate->add_option("--k", v_k, "block size, or comma list of sizes (t=2 only)")
      ->required();
  cmd_validate->add_option("--lambda", v_lambda, "index lambda")->required();
  cmd_validate->add_option("input", v_input, "blocks file or catalog name")->required();

  std::string g_input, g_mode = "big";
  std::vector<int> g_s;
  bool g_adj = false;
  auto* cmd_graph = app.add_subcommand("graph", "build a block intersection graph");
  cmd_graph->fallthrough();
  cmd_graph->add_option("--mode", g_mode, "big or sbig")
      ->check(CLI::IsMember({"big", "sbig"}));
  cmd_graph->add_option("--s", g_s, "intersection sizes for sbig")->delimiter(',');
  cmd_graph->add_flag("--adjacency", g_adj, "include adjacency rows in the report");
  cmd_graph->add_option("input", g_input, "blocks file or catalog name")->required();

  std::string e_input, e_mode = "big";
  std::vector<int> e_s;
  int e_n = 0;
  auto* cmd_ec = app.add_subcommand("ec", "decide n-existential closure");
  cmd_ec->fallthrough();
  cmd_ec->add_option("--n", e_n, "closure level n")->required();
  cmd_ec->add_option("--graph-mode", e_mode, "big or sbig")
      ->check(CLI::IsMember({"big", "sbig"}));
  cmd_ec->add_option("--s", e_s, "intersection sizes for sbig")->delimiter(',');
  cmd_ec->add_option("input", e_input, "blocks file or catalog name")->required();

  std::string x_input, x_mode = "big";
  std::vector<int> x_s;
  int x_cap = 4;
  auto* cmd_xi = app.add_subcommand("xi", "compute the existential closure number");
  cmd_xi->fallthrough();
  cmd_xi->add_option("--cap", x_cap, "largest level to test")->capture_default_str();
  cmd_xi->add_option("--graph-mode", x_mode, "big or sbig")
      ->check(CLI::IsMember({"big", "sbig"}));
  cmd_xi->add_option("--s", x_s, "intersection sizes for sbig")->delimiter(',');
  cmd_xi->add_option("input", x_input, "blocks file or catalog name")->required();

  std::string d_input;
  auto* cmd_dom = app.add_subcommand(
      "dominate", "find two blocks whose union meets every block");
  cmd_dom->fallthrough();
  cmd_dom->add_option("input", d_input, "blocks file or catalog name")->required();

  std::string s_input;
  int s_w = 0, s_k = 0;
  long long s_lambda = 1;
  auto* cmd_sub = app.add_subcommand("subsys", "search for an interior sub-design");
  cmd_sub->fallthrough();
  cmd_sub->add_option("--w", s_w, "sub-design order")->required();
  cmd_sub->add_option("--k", s_k, "sub-design block size")->required();
  cmd_sub->add_option("--lambda", s_lambda, "sub-design index")->required();
  cmd_sub->add_option("input", s_input, "blocks file or catalog name")->required();

  bool p_fast = false;
  std::vector<std::string> p_extra;
  auto* cmd_verify =
      app.add_subcommand("verify-paper", "run the full reproduction suite");
  cmd_verify->fallthrough();
  cmd_verify->add_flag("--fast", p_fast, "skip the order-32 stress check");
  cmd_verify->add_option("--extra", p_extra,
                         "name=path block lists (sqs14, sqs10, ts12_2)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ecd");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    CLI::App* deepest = &app;
    while (!deepest->get_subcommands().empty()) deepest = deepest->get_subcommands().front();
    res.output = deepest->help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.error = std::string(e.what()) + "\n";
    res.exit_code = 2;
    return res;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ms = [&t0] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };

  Report rep;
  rep["seed"] = seed;
  auto finish = [&](int code) {
    rep["time_ms"] = elapsed_ms();
    res.report = rep;
    res.exit_code = code;
    res.output = json_out ? rep.dump(2) + "\n" : human_render(rep);
    return res;
  };

  try {
    if (cmd_construct->parsed()) {
      rep = Report{};
      rep["command"] = "construct";
      rep["seed"] = seed;
      rep["name"] = c_name;
      std::vector<int> orbit_lengths;
      Design d = [&] {
        if (c_name.rfind("cyclic:", 0) == 0) {
          auto dev = detail::parse_cyclic_spec(c_name);
          orbit_lengths = dev.orbit_lengths;
          return dev.design;
        }
        return builtin(c_name, seed);
      }();
      if (!json_out) {
        res.output = write_blocks_file(d);
        res.report = rep;
        return res;
      }
      rep["design"] = detail::design_summary(d);
      rep["simple"] = is_simple(d);
      if (!orbit_lengths.empty()) rep["orbit_lengths"] = orbit_lengths;
      rep["blocks"] = d.blocks();
      return finish(0);
    }

    if (cmd_validate->parsed()) {
      rep = Report{};
      rep["command"] = "validate";
      rep["seed"] = seed;
      rep["input"] = v_input;
      Design d = detail::resolve_design(v_input, seed);
      rep["design"] = detail::design_summary(d);
      std::set<int> ks;
      std::size_t start = 0;
      while (start <= v_k.size()) {
        std::size_t comma = v_k.find(',', start);
        std::string tok = comma == std::string::npos ? v_k.substr(start)
                                                     : v_k.substr(start, comma - start);
        try {
          std::size_t used = 0;
          ks.insert(std::stoi(tok, &used));
          if (used != tok.size()) throw Error("");
        } catch (...) {
          throw Error("bad --k value '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      rep["t"] = v_t;
      rep["k"] = std::vector<int>(ks.begin(), ks.end());
      rep["lambda"] = v_lambda;
      ValidationReport vr;
      if (ks.size() == 1) {
        vr = validate_t_design(d, v_t, *ks.begin(), v_lambda);
      } else {
        if (v_t != 2) throw Error("block size lists are only supported with --t 2");
        vr = validate_pbd(d, ks, v_lambda);
      }
      rep["validation"] = to_report(vr);
      return finish(vr.ok ? 0 : 1);
    }

    if (cmd_graph->parsed()) {
      rep = Report{};
      rep["command"] = "graph";
      rep["seed"] = seed;
      rep["input"] = g_input;
      Design d = detail::resolve_design(g_input, seed);
      rep["design"] = detail::design_summary(d);
      Report gr;
      Graph g = detail::select_graph(d, g_mode, g_s, gr);
      auto stats = degree_stats(g);
      gr["n"] = stats.n;
      gr["edges"] = g.edge_count();
      gr["min_degree"] = stats.min_degree;
      gr["max_degree"] = stats.max_degree;
      gr["is_connected"] = stats.is_connected;
      rep["graph"] = std::move(gr);
      if (g_adj) {
        std::vector<std::string> rows;
        rows.reserve(static_cast<std::size_t>(g.n));
        for (int u = 0; u < g.n; ++u) {
          std::string row(static_cast<std::size_t>(g.n), '0');
          for (int v = 0; v < g.n; ++v)
            if (g.has_edge(u, v)) row[static_cast<std::size_t>(v)] = '1';
          rows.push_back(std::move(row));
        }
        rep["adjacency"] = rows;
      }
      return finish(0);
    }

    if (cmd_ec->parsed()) {
      rep = Report{};
      rep["command"] = "ec";
      rep["seed"] = seed;
      rep["input"] = e_input;
      Design d = detail::resolve_design(e_input, seed);
      rep["design"] = detail::design_summary(d);
      Report gr;
      Graph g = detail::select_graph(d, e_mode, e_s, gr);
      gr["n"] = g.n;
      rep["graph"] = std::move(gr);
      rep["n"] = e_n;
      ECResult r;
      if (e_n == 2) {
        rep["method"] = "pair_identities";
        r = is_2_ec_fast(g);
      } else {
        rep["method"] = "exhaustive";
        r = is_n_ec(g, e_n);
      }
      rep["result"] = to_report(r);
      return finish(r.holds ? 0 : 1);
    }

    if (cmd_xi->parsed()) {
      rep = Report{};
      rep["command"] = "xi";
      rep["seed"] = seed;
      rep["input"] = x_input;
      Design d = detail::resolve_design(x_input, seed);
      rep["design"] = detail::design_summary(d);
      Report gr;
      Graph g = detail::select_graph(d, x_mode, x_s, gr);
      gr["n"] = g.n;
      rep["graph"] = std::move(gr);
      rep["cap"] = x_cap;
      auto x = xi(g, x_cap);
      rep["xi"] = x.value;
      rep["at_least"] = x.at_least;
      return finish(0);
    }

    if (cmd_dom->parsed()) {
      rep = Report{};
      rep["command"] = "dominate";
      rep["seed"] = seed;
      rep["input"] = d_input;
      Design d = detail::resolve_design(d_input, seed);
      rep["design"] = detail::design_summary(d);
      auto pair = find_dominating_union_pair(d);
      rep["found"] = pair.has_value();
      if (pair) {
        rep["pair"] = std::vector<int>{pair->first, pair->second};
        rep["blocks"] = std::vector<Block>{d.block(pair->first), d.block(pair->second)};
      } else {
        rep["pair"] = nullptr;
      }
      return finish(pair ? 0 : 1);
    }

    if (cmd_sub->parsed()) {
      rep = Report{};
      rep["command"] = "subsys";
      rep["seed"] = seed;
      rep["input"] = s_input;
      Design d = detail::resolve_design(s_input, seed);
      rep["design"] = detail::design_summary(d);
      rep["w"] = s_w;
      rep["k"] = s_k;
      rep["lambda"] = s_lambda;
      auto h = find_sub_system(d, s_w, s_k, s_lambda);
      rep["found"] = h.has_value();
      rep["points"] = h ? Report(*h) : Report(nullptr);
      return finish(h ? 0 : 1);
    }

    // verify-paper
    rep = Report{};
    rep["command"] = "verify-paper";
    rep["seed"] = seed;
    rep["fast"] = p_fast;
    std::map<std::string, std::string> extras;
    for (const auto& entry : p_extra) {
      auto eq = entry.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size())
        throw Error("--extra expects name=path, got '" + entry + "'");
      extras[entry.substr(0, eq)] = entry.substr(eq + 1);
    }
    auto suite = verify_paper_suite(p_fast, seed, extras);
    Report checks = Report::array();
    for (const auto& c : suite.checks) {
      Report item;
      item["name"] = c.name;
      item["pass"] = c.pass;
      item["detail"] = c.detail;
      item["time_ms"] = c.time_ms;
      checks.push_back(std::move(item));
    }
    rep["checks"] = std::move(checks);
    rep["all_pass"] = suite.all_pass;
    rep["time_ms"] = elapsed_ms();
    res.report = rep;
    res.exit_code = suite.all_pass ? 0 : 1;
    res.output = json_out ? rep.dump(2) + "\n" : detail::render_verify_human(rep);
    return res;
  } catch (const Error& e) {
    res.error = std::string(e.what()) + "\n";
    res.exit_code = 2;
    return res;
  }
}

}  // namespace ecd
