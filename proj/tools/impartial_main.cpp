// Command-line front end: verdict routes, census, RBM generation, recursive
// cutting, Sub_F, density evaluation, and the extremum probe.
//
// Exit codes: 0 success, 1 negative mathematical verdict, 2 usage/parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "impartial/impartial.hpp"

namespace {

using nlohmann::json;
using namespace impartial;

constexpr int kExitImpartial = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int resolve_threads(int flag_value) {
  if (const char* env = std::getenv("IMPARTIAL_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  if (flag_value >= 1) return flag_value;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

const char* route_name(Route r) {
  switch (r) {
    case Route::structural: return "structural";
    case Route::sign_sum: return "signsum";
    case Route::census: return "census";
  }
  return "?";
}

json edges_json(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (auto [u, v] : edges) arr.push_back(json::array({u, v}));
  return arr;
}

json witness_json(const Verdict& v) {
  if (std::holds_alternative<std::monostate>(v.witness)) return nullptr;
  if (const auto* c = std::get_if<ComponentWitness>(&v.witness)) {
    json orig = json::array();
    for (auto [u, w] : c->component.edges())
      orig.push_back(json::array({c->vertices[u], c->vertices[w]}));
    return {{"kind", "component"}, {"vertices", c->vertices}, {"edges", orig}};
  }
  if (const auto* f = std::get_if<UndirectedGraph>(&v.witness))
    return {{"kind", "even-subgraph"}, {"n", f->order()}, {"edges", edges_json(f->edges())}};
  const auto& cw = std::get<CensusWitness>(v.witness);
  return {{"kind", "census"},
          {"n", cw.first.order()},
          {"first", {{"bits", cw.first.bits()}, {"count", cw.count_first}}},
          {"second", {{"bits", cw.second.bits()}, {"count", cw.count_second}}}};
}

void print_verdict_text(const Verdict& v) {
  std::cout << (v.impartial ? "impartial" : "not impartial") << "\n";
  std::cout << "route: " << route_name(v.route) << "\n";
  if (const auto* c = std::get_if<ComponentWitness>(&v.witness)) {
    std::cout << "witness: component {";
    for (std::size_t i = 0; i < c->vertices.size(); ++i)
      std::cout << (i ? "," : "") << c->vertices[i];
    std::cout << "} is not recursively bridge-mirrored\n";
  } else if (const auto* f = std::get_if<UndirectedGraph>(&v.witness)) {
    std::cout << "witness: even spanning subgraph with edges {";
    for (std::size_t i = 0; i < f->edges().size(); ++i)
      std::cout << (i ? ", " : "") << f->edges()[i].first << " " << f->edges()[i].second;
    std::cout << "} has nonzero sign sum\n";
  } else if (const auto* cw = std::get_if<CensusWitness>(&v.witness)) {
    std::cout << "witness: tournament bits " << cw->first.bits() << " has " << cw->count_first
              << " copies, bits " << cw->second.bits() << " has " << cw->count_second << "\n";
  }
}

struct CommonArgs {
  std::string file;
  bool as_json = false;
  int threads = 0;
};

int run_recognize(const CommonArgs& common, const std::string& route, std::uint64_t samples,
                  std::uint64_t seed) {
  Digraph h = parse_digraph(slurp(common.file));
  Verdict v;
  if (route == "structural") {
    v = is_impartial(h);
  } else if (route == "signsum") {
    v = is_forest(underlying(h)) ? sign_sum_check(h) : is_impartial(h);
  } else if (route == "census") {
    const int n = std::max(1, h.order());
    v = exact_census_feasible(n)
            ? census_verdict_exact(h, n, resolve_threads(common.threads))
            : census_verdict_sampled(h, n, samples, seed);
  } else {
    std::cerr << "unknown route: " << route << "\n";
    return kExitError;
  }
  if (common.as_json)
    std::cout << json{{"impartial", v.impartial},
                      {"route", route_name(v.route)},
                      {"witness", witness_json(v)}}
                     .dump()
              << "\n";
  else
    print_verdict_text(v);
  return v.impartial ? kExitImpartial : kExitNegative;
}

int run_census(const CommonArgs& common, int n, bool exact, std::optional<std::uint64_t> samples,
               std::uint64_t seed) {
  Digraph h = parse_digraph(slurp(common.file));
  if (n == 0) n = std::max(1, h.order());
  if (n < h.order()) {
    std::cerr << "census: --n must be at least |V(h)| = " << h.order() << "\n";
    return kExitError;
  }
  CensusReport report;
  if (samples && !exact) {
    report = census_sampled(h, n, *samples, seed);
  } else if (exact_census_feasible(n)) {
    report = census_exact(h, n, resolve_threads(common.threads));
  } else {
    std::cerr << "census: n = " << n
              << " is out of exact range (C(n,2) > 28); pass --samples K for sampled mode\n";
    return kExitError;
  }
  if (common.as_json) {
    std::cout << report.to_json().dump() << "\n";
  } else {
    std::cout << "census of " << common.file << " at n = " << report.n << " ("
              << (report.mode == CensusMode::exact ? "exact" : "sampled") << ")\n";
    for (auto [count, freq] : report.distribution)
      std::cout << "  " << count << " copies: " << freq << " tournaments\n";
    std::cout << (report.constant() ? "constant" : "not constant") << "\n";
  }
  return kExitImpartial;
}

int run_generate(int k, bool undirected, bool as_json) {
  if (k < 0 || k > 4) {
    std::cerr << "generate: --k must be in [0,4]\n";
    return kExitError;
  }
  if (as_json) {
    json arr = json::array();
    if (undirected)
      for (const auto& g : generate_rbm_undirected(k))
        arr.push_back({{"n", g.order()}, {"edges", edges_json(g.edges())}});
    else
      for (const auto& d : generate_rbm(k))
        arr.push_back({{"n", d.order()}, {"edges", edges_json(d.edges())}});
    std::cout << json{{"k", k}, {"count", arr.size()}, {"digraphs", arr}}.dump() << "\n";
    return kExitImpartial;
  }
  std::size_t count = 0;
  if (undirected) {
    auto all = generate_rbm_undirected(k);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i) std::cout << "---\n";
      std::cout << all[i].to_text();
    }
    count = all.size();
  } else {
    auto all = generate_rbm(k);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i) std::cout << "---\n";
      std::cout << all[i].to_text();
    }
    count = all.size();
  }
  std::cout << "count: " << count << "\n";
  return kExitImpartial;
}

int run_cut(const CommonArgs& common) {
  auto [dg, ug] = parse_any(slurp(common.file));
  UndirectedGraph g = dg ? underlying(*dg) : *ug;
  std::cout << format_cut_trace(recursive_cutting(g));
  return kExitImpartial;
}

int run_subf(const std::string& hfile, const std::string& ffile, bool as_json) {
  Digraph h = parse_digraph(slurp(hfile));
  UndirectedGraph f = parse_graph(slurp(ffile));
  auto members = enumerate_sub_F(h, f);
  const bool even = is_even(f);
  std::vector<int> signs;
  if (even && !members.empty()) {
    for (const auto& m : members) signs.push_back(sgn_even_pair(members.front(), m));
  }
  if (as_json) {
    json arr = json::array();
    for (std::size_t i = 0; i < members.size(); ++i) {
      json entry{{"edges", edges_json(members[i].edges())}};
      if (even) entry["sign"] = signs[i];
      arr.push_back(entry);
    }
    json out{{"count", members.size()}, {"subgraphs", arr}};
    if (even) {
      long long sum = 0;
      for (int s : signs) sum += s;
      out["sign_sum"] = sum;
    }
    std::cout << out.dump() << "\n";
    return kExitImpartial;
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) std::cout << "---\n";
    std::cout << members[i].to_text();
    if (even) std::cout << "sign: " << signs[i] << "\n";
  }
  std::cout << "count: " << members.size() << "\n";
  if (even) {
    long long sum = 0;
    for (int s : signs) sum += s;
    std::cout << "sign-sum: " << sum << "\n";
  }
  return kExitImpartial;
}

int run_density(const CommonArgs& common, const std::string& tourneyon_file) {
  Digraph h = parse_digraph(slurp(common.file));
  StepTourneyon w = tourneyon_file.empty()
                        ? StepTourneyon::constant(1)
                        : StepTourneyon::from_json(json::parse(slurp(tourneyon_file)));
  const double density = t_density(h, w);
  if (common.as_json)
    std::cout << json{{"density", density}, {"edges", h.size()}}.dump() << "\n";
  else
    std::cout << fmt_double(density) << "\n";
  return kExitImpartial;
}

int run_probe(const CommonArgs& common, const ProbeOptions& opts) {
  Digraph h = parse_digraph(slurp(common.file));
  ProbeReport report = probe_extrema(h, opts);
  if (common.as_json) {
    std::cout << report.to_json().dump() << "\n";
  } else {
    std::cout << (opts.direction == ProbeDirection::minimize ? "min" : "max")
              << " density estimate: " << fmt_double(report.best_value) << "\n";
    std::cout << "constant-tourneyon density: " << fmt_double(std::ldexp(1.0, -h.size()))
              << "\n";
    std::cout << "gradient norm at best: " << fmt_double(report.gradient_norm_at_best) << "\n";
  }
  return kExitImpartial;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"impartial digraph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonArgs common;
  app.add_option("--threads", common.threads, "worker threads (env IMPARTIAL_THREADS overrides)");

  auto* rec = app.add_subcommand("recognize", "decide impartiality of a digraph file");
  std::string route = "structural";
  std::uint64_t rec_samples = 10000, rec_seed = 0;
  rec->add_option("file", common.file)->required();
  rec->add_option("--route", route, "structural|signsum|census")
      ->check(CLI::IsMember({"structural", "signsum", "census"}));
  rec->add_option("--samples", rec_samples, "sampled-census draws when exact is infeasible");
  rec->add_option("--seed", rec_seed);
  rec->add_flag("--json", common.as_json);

  auto* cen = app.add_subcommand("census", "copy-count distribution over tournaments");
  int census_n = 0;
  bool census_exact_flag = false;
  std::optional<std::uint64_t> census_samples;
  std::uint64_t census_seed = 0;
  cen->add_option("file", common.file)->required();
  cen->add_option("--n", census_n, "tournament order (default |V(h)|)");
  cen->add_flag("--exact", census_exact_flag);
  cen->add_option("--samples", census_samples);
  cen->add_option("--seed", census_seed);
  cen->add_flag("--json", common.as_json);

  auto* gen = app.add_subcommand("generate", "all RBM digraphs on 2^k vertices");
  int gen_k = 0;
  bool gen_undirected = false;
  gen->add_option("--k", gen_k)->required();
  gen->add_flag("--undirected", gen_undirected);
  gen->add_flag("--json", common.as_json);

  auto* cut = app.add_subcommand("cut", "recursive-cutting trace of a forest");
  cut->add_option("file", common.file)->required();

  auto* ss = app.add_subcommand("signsum", "sign-sum certificate route");
  ss->add_option("file", common.file)->required();
  ss->add_flag("--json", common.as_json);

  auto* subf = app.add_subcommand("subf", "Sub_F members and signs");
  std::string ffile;
  subf->add_option("hfile", common.file)->required();
  subf->add_option("ffile", ffile)->required();
  subf->add_flag("--json", common.as_json);

  auto* den = app.add_subcommand("density", "t(h, W) against a step tourneyon");
  std::string tourneyon_file;
  den->add_option("file", common.file)->required();
  den->add_option("--tourneyon", tourneyon_file, "StepTourneyon JSON file (default: constant)");
  den->add_flag("--json", common.as_json);

  auto* probe = app.add_subcommand("probe", "projected-gradient density extremum probe");
  ProbeOptions popts;
  std::string direction = "min";
  probe->add_option("file", common.file)->required();
  probe->add_option("--blocks", popts.blocks);
  probe->add_option("--restarts", popts.restarts);
  probe->add_option("--iters", popts.iters);
  probe->add_option("--step", popts.step);
  probe->add_option("--seed", popts.seed);
  probe->add_option("--direction", direction)->check(CLI::IsMember({"min", "max"}));
  probe->add_flag("--json", common.as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (rec->parsed()) return run_recognize(common, route, rec_samples, rec_seed);
    if (cen->parsed())
      return run_census(common, census_n, census_exact_flag, census_samples, census_seed);
    if (gen->parsed()) return run_generate(gen_k, gen_undirected, common.as_json);
    if (cut->parsed()) return run_cut(common);
    if (ss->parsed()) {
      Digraph h = parse_digraph(slurp(common.file));
      Verdict v = is_forest(underlying(h)) ? sign_sum_check(h) : is_impartial(h);
      if (common.as_json)
        std::cout << json{{"impartial", v.impartial},
                          {"route", route_name(v.route)},
                          {"witness", witness_json(v)}}
                         .dump()
                  << "\n";
      else
        print_verdict_text(v);
      return v.impartial ? kExitImpartial : kExitNegative;
    }
    if (subf->parsed()) return run_subf(common.file, ffile, common.as_json);
    if (den->parsed()) return run_density(common, tourneyon_file);
    if (probe->parsed()) {
      popts.direction = direction == "min" ? ProbeDirection::minimize : ProbeDirection::maximize;
      return run_probe(common, popts);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
