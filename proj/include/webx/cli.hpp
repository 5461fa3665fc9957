#pragma once

#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "webx/bound.hpp"
#include "webx/certificate.hpp"
#include "webx/certify.hpp"
#include "webx/extraction.hpp"
#include "webx/graph_io.hpp"
#include "webx/oracle.hpp"
#include "webx/web.hpp"
#include "webx/web_io.hpp"

namespace webx::cli {

enum Exit : int { ok = 0, failed = 1, inconclusive = 2, input_error = 3 };

// "-len" and friends are accepted as long flags.
inline std::vector<std::string> normalise_flags(std::vector<std::string> args) {
  static const std::regex single_dash_long("^-[A-Za-z][A-Za-z_-]+(=.*)?$");
  for (auto& a : args) {
    if (std::regex_match(a, single_dash_long)) a = "-" + a;
  }
  return args;
}

inline Budget parse_budget_flag(const std::string& s) { return webx::detail::parse_budget(s); }

// "L" for uniform length L, "lo-hi" for per-path lengths drawn from the seed.
inline LengthMap parse_lengths(const std::string& spec, std::size_t k, std::uint64_t seed) {
  static const std::regex uniform("^([0-9]+)$");
  static const std::regex range("^([0-9]+)-([0-9]+)$");
  std::smatch m;
  if (std::regex_match(spec, m, uniform)) {
    const auto len = std::stoull(m[1]);
    if (len == 0) throw InputError("path length must be at least 1");
    return uniform_lengths(k, len);
  }
  if (std::regex_match(spec, m, range)) {
    const auto lo = std::stoull(m[1]), hi = std::stoull(m[2]);
    if (lo == 0 || lo > hi) throw InputError("bad length range '" + spec + "'");
    return random_lengths(k, lo, hi, seed);
  }
  throw InputError("bad length spec '" + spec + "' (expected L or lo-hi)");
}

inline json bound_json(const BigBound& b) {
  if (b.is_overflow()) return {{"overflow", true}, {"expr", b.expr()}};
  return b.value().str();
}

inline json bounds_json(const BoundChain& c) {
  return {{"r", c.r},
          {"s", c.s},
          {"t", c.t},
          {"xi", {{"args", {{"m", std::to_string(c.xi_set_size)},
                            {"palette", bound_json(c.xi_palette)},
                            {"arity", "2"},
                            {"target", bound_json(c.xi_target)}}},
                  {"value", bound_json(c.xi)}}},
          {"sigma", {{"args", {{"c", bound_json(c.sigma_c)},
                               {"s", std::to_string(c.s)},
                               {"palette", "32768"},
                               {"arity", "4"},
                               {"target", bound_json(c.sigma_target)}}},
                     {"value", bound_json(c.sigma)}}},
          {"tau", {{"args", {{"a", bound_json(c.tau_a)},
                             {"b", bound_json(c.tau_b)},
                             {"s", bound_json(c.tau_s)},
                             {"palette", "8"},
                             {"arity", "3"},
                             {"target", bound_json(c.tau_target)}}},
                   {"value", bound_json(c.theta)}}},
          {"theta", {{"args", {{"a", bound_json(c.xi)}, {"b", bound_json(c.xi)}, {"c", bound_json(c.xi)},
                               {"s", std::to_string(c.s)}}},
                     {"value", bound_json(c.theta)}}},
          {"omega", {{"args", {{"xi", bound_json(c.xi)}, {"s", std::to_string(c.s)}}}, {"value", bound_json(c.omega)}}}};
}

struct Io {
  std::ostream& out;
  std::ostream& err;
};

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

inline int cmd_gen(std::size_t k, const std::string& len, double noise, std::uint64_t seed,
                   const std::string& graph_out, const std::string& web_out, const std::string& format, Io io) {
  if (k == 0) throw InputError("k must be positive");
  if (!(noise >= 0.0 && noise <= 1.0)) throw InputError("noise must lie in [0, 1]");
  const auto inst = plant_subdivision(k, parse_lengths(len, k, seed), noise, seed);
  emit(graph_out, format_graph(inst.graph, parse_graph_format(format)), io.out);
  emit(web_out, format_web(inst.web), io.out);
  return ok;
}

inline int cmd_find_web(const std::string& graph, std::size_t r, std::size_t w, const std::string& budget,
                        const std::string& web_out, Io io) {
  const Graph g = load_graph(graph);
  const auto res = find_web(g, r, w, parse_budget_flag(budget));
  if (res.found()) {
    emit(web_out, format_web(*res.witness), io.out);
    return ok;
  }
  if (res.absent()) {
    io.err << "no (" << r << "," << w << ")-web exists (exhaustive)\n";
    return failed;
  }
  io.err << "inconclusive: step budget exhausted after " << res.steps << " steps\n";
  return inconclusive;
}

inline int cmd_extract(const std::string& graph, const std::string& web_file, const std::string& op,
                       const ExtractionParams& params, const std::string& out_path, Io io) {
  const Graph g = load_graph(graph);
  const Web web = parse_web(read_text_file(web_file));
  if (const auto rep = validate_web(g, web); !rep.valid()) {
    io.err << "invalid web:\n" << rep.describe();
    return input_error;
  }
  Certificate cert;
  if (op == "main") {
    cert = main_extract(g, web, params);
  } else if (op == "pinned") {
    cert = lemma_pinned(g, web, params);
  } else if (op == "interior") {
    cert = lemma_clean_interior(g, web, params);
  } else if (op == "combined") {
    cert = theorem_combined(g, web, params);
  } else {
    throw InputError("unknown operation '" + op + "'");
  }
  emit(out_path, format_certificate(cert), io.out);
  if (cert.inconclusive()) {
    io.err << "inconclusive: " << cert.as<Inconclusive>().reason << "\n";
    return inconclusive;
  }
  return ok;
}

inline int cmd_verify(const std::string& graph, const std::string& web_file, const std::string& cert_file, Io io) {
  const Graph g = load_graph(graph);
  const Web web = parse_web(read_text_file(web_file));
  const Certificate cert = parse_certificate(read_text_file(cert_file));
  const auto v = certify::verify_certificate(g, web, cert);
  if (v) {
    io.out << "ok: " << to_string(cert.kind()) << "\n";
    return ok;
  }
  io.out << "FAIL: " << v.clause << "\n";
  return failed;
}

inline int cmd_bounds(std::uint64_t r, std::uint64_t s, std::uint64_t t, Io io) {
  io.out << bounds_json(bound_chain(r, s, t)).dump(2) << "\n";
  return ok;
}

template <class T>
int oracle_exit(const oracle::OracleResult<T>& res, Io io) {
  if (res.answer == oracle::Answer::refused) {
    io.err << "refused: " << res.note << "\n";
    return inconclusive;
  }
  return res.found() ? ok : failed;
}

inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Io io{out, err};
  args = normalise_flags(std::move(args));
  CLI::App app{"webx: webs, clean sets and induced K_t / K_{t,t} certificates", "webx"};
  app.require_subcommand(1);

  std::string graph, web_file, cert_file, out_path, budget = "unlimited", mode = "exact", op = "main";
  std::string len = "2", graph_out = "graph.txt", web_out = "web.json", format = "edge_list", level = "full";
  std::size_t k = 0, r = 0, w = 0;
  std::uint64_t s = 1, t = 1, a = 1, b = 1, c = 1, seed = 0;
  std::size_t f = 2, arity = 2, n = 3, max_ground = 12;
  double noise = 0.0;
  unsigned workers = 1;

  auto* gen = app.add_subcommand("gen", "plant a subdivided K_k and write graph + web files");
  gen->add_option("-k", k, "number of branch vertices")->required();
  gen->add_option("--len", len, "path length L, or range lo-hi drawn per path");
  gen->add_option("--noise", noise, "probability of each allowed noise edge");
  gen->add_option("--seed", seed);
  gen->add_option("--graph-out", graph_out);
  gen->add_option("--web-out", web_out);
  gen->add_option("--format", format, "edge_list or graph6");

  auto* fw = app.add_subcommand("find-web", "search for an (r,w)-web");
  fw->add_option("--graph", graph)->required();
  fw->add_option("-r", r)->required();
  fw->add_option("-w", w)->required();
  fw->add_option("--budget", budget);
  fw->add_option("--web-out", out_path);

  auto* ex = app.add_subcommand("extract", "extract a certificate");
  ex->add_option("--graph", graph)->required();
  ex->add_option("--web", web_file)->required();
  ex->add_option("-r", r);
  ex->add_option("-s", s);
  ex->add_option("-t", t);
  ex->add_option("-a", a);
  ex->add_option("-b", b);
  ex->add_option("-c", c);
  ex->add_option("--op", op, "main, pinned, interior or combined");
  ex->add_option("--mode", mode, "exact or constructive");
  ex->add_option("--budget", budget);
  ex->add_option("--workers", workers);
  ex->add_option("--out", out_path);

  auto* ve = app.add_subcommand("verify", "check a certificate against graph and web");
  ve->add_option("--graph", graph)->required();
  ve->add_option("--web", web_file)->required();
  ve->add_option("--cert", cert_file)->required();

  auto* bo = app.add_subcommand("bounds", "print the bound chain as JSON");
  bo->add_option("-r", r)->required();
  bo->add_option("-s", s)->required();
  bo->add_option("-t", t)->required();

  auto* orc = app.add_subcommand("oracle", "brute-force ground truth");
  orc->group("");
  orc->require_subcommand(1);
  auto* o_ramsey = orc->add_subcommand("ramsey");
  o_ramsey->add_option("-f", f);
  o_ramsey->add_option("--arity", arity);
  o_ramsey->add_option("-n", n);
  o_ramsey->add_option("--max-ground", max_ground);
  auto* o_clean = orc->add_subcommand("clean-set");
  o_clean->add_option("--graph", graph)->required();
  o_clean->add_option("--web", web_file)->required();
  o_clean->add_option("-s", s);
  o_clean->add_option("--level", level);
  auto* o_induced = orc->add_subcommand("induced");
  o_induced->add_option("--graph", graph)->required();
  o_induced->add_option("-t", t);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return input_error;
  }

  try {
    if (*gen) return cmd_gen(k, len, noise, seed, graph_out, web_out, format, io);
    if (*fw) return cmd_find_web(graph, r, w, budget, out_path, io);
    if (*ex) {
      ExtractionParams p;
      p.r = r;
      p.s = s;
      p.t = t;
      p.a = a;
      p.b = b;
      p.c = c;
      p.mode = parse_search_mode(mode);
      p.budget = parse_budget_flag(budget);
      return cmd_extract(graph, web_file, op, p, out_path, io);
    }
    if (*ve) return cmd_verify(graph, web_file, cert_file, io);
    if (*bo) return cmd_bounds(r, s, t, io);
    if (*o_ramsey) {
      const auto res = oracle::brute_ramsey_min(f, arity, n, max_ground);
      out << json{{"answer", res.found() ? json(*res.witness) : json(nullptr)}}.dump() << "\n";
      return oracle_exit(res, io);
    }
    if (*o_clean) {
      const Graph g = load_graph(graph);
      const Web web = parse_web(read_text_file(web_file));
      require_valid_web(g, web);
      const auto lvl = webx::detail::parse_level(level);
      const auto res = oracle::brute_clean_set(g, web, s, lvl);
      out << json{{"S", res.found() ? json(*res.witness) : json(nullptr)}}.dump() << "\n";
      return oracle_exit(res, io);
    }
    if (*o_induced) {
      const auto res = oracle::brute_induced(load_graph(graph), t);
      json j = json::object();
      if (res.witness) {
        j["clique"] = res.witness->clique ? json(*res.witness->clique) : json(nullptr);
        j["biclique"] = res.witness->biclique
                            ? json{{"left", res.witness->biclique->left}, {"right", res.witness->biclique->right}}
                            : json(nullptr);
      }
      out << j.dump() << "\n";
      return oracle_exit(res, io);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const ContractViolation& e) {
    err << "precondition violated: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args));
}

}  // namespace webx::cli
