// Command-line surface: invariant reports, structural recognition, greedy
// traces, family generators, the counterexample table, and corpus scan
// suites. Graphs are read as graph6 or edge lists (sniffed), complexes as
// facet lists.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "edgeideal/edgeideal.hpp"

using namespace edgeideal;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-" || path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
  std::string text = read_input(path);
  if (format == "g6") {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) return from_graph6(line);
    throw parse_error("no graph6 record found", 1, 0);
  }
  if (format == "edges") return from_edge_list(text);
  return parse_graph(text);
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

std::string render_certificate(const TreeCertificate& cert,
                               const std::vector<std::string>& labels) {
  std::ostringstream out;
  if (cert.accepted) {
    out << "accepted: (";
    for (size_t i = 0; i < cert.sizes.size(); ++i)
      out << (i ? "," : "") << cert.sizes[i];
    out << ")-tree\n";
    for (size_t i = 0; i < cert.facets.size(); ++i) {
      out << "  F" << (i + 1) << " = "
          << format_vertex_set(labels, cert.facets[i]);
      if (i == 0)
        out << "  (base clique)\n";
      else
        out << "  adds " << labels[cert.new_vertex[i]] << " onto F"
            << (cert.host[i] + 1) << "\n";
    }
  } else {
    out << "rejected: " << to_string(cert.reason) << "\n";
    if (!cert.detail.empty()) out << "  " << cert.detail << "\n";
    if (!cert.cycle_witness.empty()) {
      out << "  induced cycle:";
      for (int v : cert.cycle_witness) out << " " << labels[v];
      out << "\n";
    }
  }
  return out.str();
}

std::string render_trace(const MaxProcessTrace& t, const Graph& g) {
  std::ostringstream out;
  out << "step  pick  degree  residual\n";
  for (size_t i = 0; i < t.order.size(); ++i) {
    out << "  " << (i + 1) << "    " << g.labels[t.order[i]] << "     "
        << t.degrees[i] << "     "
        << format_vertex_set(g.labels, t.residuals[i]) << "\n";
  }
  VertexSet f = set_of(t.order);
  out << "F = " << format_vertex_set(g.labels, f)
      << (t.maximal ? "  (maximal independent set)\n" : "\n");
  return out.str();
}

int cmd_invariants(const std::string& in, const std::string& format,
                   std::uint32_t field, bool json, bool verify, int cap,
                   bool use_complement) {
  Graph g = load_graph(in, format);
  if (use_complement) g = complement(g);
  ReportOptions opt;
  opt.field = FieldSpec::of(field);
  opt.betti_cap = cap;
  opt.force_hochster = verify;
  InvariantReport r = build_report(g, opt);
  if (json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << render_text(r);
  return 0;
}

int cmd_recognize(const std::string& in, const std::string& format,
                  bool use_complement, bool json) {
  Graph g = load_graph(in, format);
  if (use_complement) g = complement(g);
  TreeCertificate cert = recognize_dq_tree(g);
  if (json)
    std::cout << to_json(cert, g.labels).dump(2) << "\n";
  else
    std::cout << render_certificate(cert, g.labels);
  return cert.accepted ? 0 : 1;
}

int cmd_maxprocess(const std::string& in, const std::string& format,
                   const std::string& tie, int first) {
  Graph g = load_graph(in, format);
  if (tie == "all") {
    auto traces = max_process_all_branches(g);
    std::cout << traces.size() << " branches\n";
    for (const auto& t : traces) std::cout << render_trace(t, g);
    return 0;
  }
  TieBreak tb = first >= 0 ? TieBreak::first_choice(first - 1)
                           : TieBreak::lowest_index();
  std::cout << render_trace(max_process(g, tb), g);
  return 0;
}

int cmd_generate(const std::string& family, const std::string& params,
                 std::uint64_t seed, bool exhaustive, const std::string& out,
                 const std::string& format) {
  std::vector<int> p = parse_int_list(params);
  auto need = [&](size_t k) {
    if (p.size() != k)
      throw std::invalid_argument(family + " needs " + std::to_string(k) +
                                  " parameter(s)");
  };
  std::vector<Graph> graphs;
  if (family == "barbell") {
    need(1);
    graphs.push_back(barbell(p[0]));
  } else if (family == "wheel") {
    need(1);
    graphs.push_back(wheel(p[0]));
  } else if (family == "complete") {
    need(1);
    graphs.push_back(complete_graph(p[0]));
  } else if (family == "cycle") {
    need(1);
    graphs.push_back(cycle_graph(p[0]));
  } else if (family == "path") {
    need(1);
    graphs.push_back(path_graph(p[0]));
  } else if (family == "star-complete") {
    graphs.push_back(star_complete(p));
  } else if (family == "gmr") {
    need(2);
    graphs.push_back(gmr(p[0], p[1]));
  } else if (family == "gmi") {
    if (p.size() < 2) throw std::invalid_argument("gmi needs m,i_1..i_m");
    int m = p[0];
    graphs.push_back(gmi(m, std::vector<int>(p.begin() + 1, p.end())));
  } else if (family == "dqtree") {
    if (exhaustive)
      graphs = dq_tree_exhaustive(p);
    else
      graphs.push_back(dq_tree_random(p, seed));
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  std::ostringstream buf;
  for (const Graph& g : graphs) {
    if (format == "edges")
      buf << to_edge_list(g);
    else
      buf << to_graph6(g) << "\n";
  }
  write_output(out, buf.str());
  return 0;
}

int cmd_counterexample(int rmin, int rmax, bool json, bool verify) {
  if (rmin < 3 || rmax < rmin || 2 * rmax > 16)
    throw std::invalid_argument("need 3 <= rmin <= rmax <= 8");
  nlohmann::json rows = nlohmann::json::array();
  std::cout << "  r  pdim  maxdeg  gap  depth  degP  h_{r-1}\n";
  for (int r = rmin; r <= rmax; ++r) {
    Graph g = complement(barbell(r));
    HilbertData hd = hilbert_data(g);
    // Pipeline: co-chordal => the residual of the degree inequality is 0,
    // so depth = dim - degP + reg with reg = 1, then pdim = n - depth.
    if (!is_co_chordal(g)) throw std::logic_error("barbell must be chordal");
    int depth_pipeline = hd.krull_dim - hd.h_degree + 1;
    int pdim_pipeline = g.n - depth_pipeline;
    int maxdeg = max_degree(g).value;
    std::int64_t h_top = hd.h.h[r - 1];
    if (verify) {
      BettiTable t = betti_table(g, {}, 16, default_jobs());
      if (t.pdim() != pdim_pipeline || t.depth() != depth_pipeline)
        throw std::logic_error("pipeline disagrees with the Betti table");
    }
    std::printf("  %d   %2d      %d     %d     %d     %d    %lld\n", r,
                pdim_pipeline, maxdeg, pdim_pipeline - maxdeg, depth_pipeline,
                hd.h_degree, static_cast<long long>(h_top));
    rows.push_back({{"r", r},
                    {"pdim", pdim_pipeline},
                    {"maxdeg", maxdeg},
                    {"gap", pdim_pipeline - maxdeg},
                    {"depth", depth_pipeline},
                    {"h_degree", hd.h_degree},
                    {"h_top", h_top}});
  }
  if (json) std::cout << rows.dump(2) << "\n";
  return 0;
}

int cmd_scan(int n, const std::string& file, const std::string& suite,
             std::uint32_t field, int jobs, bool json, bool include_disconnected) {
  std::vector<Graph> corpus;
  if (!file.empty()) {
    std::string text = read_input(file);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      corpus.push_back(from_graph6(line, lineno));
    }
  } else {
    for (int k = 1; k <= n; ++k) {
      std::vector<Graph> level = include_disconnected
                                     ? graphs_up_to_iso(k)
                                     : connected_graphs_up_to_iso(k);
      for (Graph& g : level) corpus.push_back(std::move(g));
    }
  }
  std::vector<std::string> suites;
  if (suite == "all")
    suites = suite_names();
  else
    suites.push_back(suite);
  bool all_ok = true;
  nlohmann::json out = nlohmann::json::array();
  for (const std::string& name : suites) {
    SuiteResult res = run_suite(name, corpus, FieldSpec::of(field), jobs);
    all_ok = all_ok && res.ok();
    if (json) {
      nlohmann::json j;
      j["suite"] = res.suite;
      j["checked"] = res.checked;
      j["applicable"] = res.applicable;
      nlohmann::json viols = nlohmann::json::array();
      for (const auto& v : res.violations)
        viols.push_back({{"graph6", v.graph6}, {"detail", v.detail}});
      j["violations"] = viols;
      j["notes"] = res.notes;
      out.push_back(j);
    } else {
      std::cout << name << ": checked " << res.checked << ", applicable "
                << res.applicable << ", violations " << res.violations.size()
                << "\n";
      for (const auto& v : res.violations)
        std::cout << "  " << v.graph6 << "  " << v.detail << "\n";
      for (const auto& note : res.notes) std::cout << "  note: " << note << "\n";
    }
  }
  if (json) std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_cx_report(const std::string& in, std::uint32_t field) {
  SimplicialComplex d = from_facet_list(read_input(in));
  std::cout << "vertices=" << popcount(d.vertex_set()) << " facets="
            << d.facets.size() << " dim=" << d.dim() << "\n";
  FVector f = f_vector(d);
  HVector h = h_vector(f);
  std::cout << "f=(";
  for (size_t i = 0; i < f.counts.size(); ++i)
    std::cout << (i ? "," : "") << f.counts[i];
  std::cout << ") h=(";
  for (size_t i = 0; i < h.h.size(); ++i) std::cout << (i ? "," : "") << h.h[i];
  std::cout << ")\n";
  HomologyRanks ranks = reduced_homology_ranks(d, FieldSpec::of(field));
  std::cout << "reduced homology ranks:";
  for (int k = -1; k <= d.dim(); ++k) std::cout << " H~" << k << "=" << ranks.rank(k);
  std::cout << "\n";
  if (popcount(d.vertex_set()) <= kDefaultBettiCap) {
    auto vd = is_vertex_decomposable(d);
    std::cout << "vertex-decomposable: " << (vd.holds ? "yes" : "no") << "\n";
  }
  if (d.facets.size() <= 12) {
    auto sh = is_shellable(d);
    std::cout << "shellable: " << (sh.holds ? "yes" : "no");
    if (sh.holds) {
      std::cout << "  order:";
      for (VertexSet fct : sh.order)
        std::cout << " " << format_vertex_set(d.labels, fct);
    }
    std::cout << "\n";
  }
  auto qf = quasi_forest_leaf_order(d);
  std::cout << "quasi-forest: " << (qf.holds ? "yes" : "no");
  if (qf.holds) {
    std::cout << "  leaf order:";
    for (VertexSet fct : qf.order)
      std::cout << " " << format_vertex_set(d.labels, fct);
  }
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homological invariants of edge ideals of graphs"};
  app.require_subcommand(1);

  std::string in = "-", format = "auto", out = "-";
  std::uint32_t field = 0;
  bool json = false, verify = false;
  int cap = kDefaultBettiCap;

  auto* inv = app.add_subcommand("invariants", "full invariant report");
  inv->add_option("--in", in, "input file (default stdin)");
  inv->add_option("--format", format, "g6 | edges | auto");
  inv->add_option("--field", field, "characteristic (0 or prime)");
  inv->add_option("--cap", cap, "Betti vertex cap");
  inv->add_flag("--json", json, "JSON output");
  inv->add_flag("--verify", verify, "force the Hochster cross-check");

  bool use_complement = false;
  inv->add_flag("--complement", use_complement, "report on the complement");
  auto* rec = app.add_subcommand("recognize", "(d_1,...,d_q)-tree certificate");
  rec->add_option("--in", in, "input file (default stdin)");
  rec->add_option("--format", format, "g6 | edges | auto");
  rec->add_flag("--complement", use_complement, "recognize the complement");
  rec->add_flag("--json", json, "JSON output");

  std::string tie = "lowest";
  int first = -1;
  auto* mp = app.add_subcommand("maxprocess", "greedy max-degree peeling trace");
  mp->add_option("--in", in, "input file (default stdin)");
  mp->add_option("--format", format, "g6 | edges | auto");
  mp->add_option("--tie-break", tie, "lowest | all");
  mp->add_option("--first", first, "force the first pick (1-based index)");

  std::string family, params;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  auto* gen = app.add_subcommand("generate", "named graph families");
  gen->add_option("family", family,
                  "barbell|wheel|complete|cycle|path|star-complete|gmr|gmi|dqtree")
      ->required();
  gen->add_option("params", params, "comma-separated integers")->required();
  gen->add_option("--seed", seed, "seed for random dqtree");
  gen->add_flag("--exhaustive", exhaustive, "all dqtree members up to isomorphism");
  gen->add_option("--out", out, "output file (default stdout)");
  gen->add_option("--format", format, "g6 | edges");

  int rmin = 3, rmax = 6;
  auto* ce = app.add_subcommand("counterexample",
                                "barbell-complement gap table");
  ce->add_option("--rmin", rmin, "smallest r");
  ce->add_option("--rmax", rmax, "largest r");
  ce->add_flag("--json", json, "JSON output");
  ce->add_flag("--verify", verify, "cross-check against the Betti table");

  int n = 6, jobs = default_jobs();
  std::string g6file, suite = "all";
  bool include_disconnected = false;
  auto* sc = app.add_subcommand("scan", "theorem suites over a corpus");
  sc->add_option("--n", n, "corpus: all connected graphs up to this order");
  sc->add_option("--graph6-file", g6file, "corpus: one graph6 record per line");
  sc->add_option("--suite", suite, "suite name or 'all'");
  sc->add_option("--jobs", jobs, "worker threads");
  sc->add_option("--field", field, "characteristic (0 or prime)");
  sc->add_flag("--json", json, "JSON output");
  sc->add_flag("--include-disconnected", include_disconnected,
               "scan disconnected graphs too");

  auto* cx = app.add_subcommand("cx-report", "facet-list complex report");
  cx->add_option("--in", in, "facet list file (default stdin)");
  cx->add_option("--field", field, "characteristic (0 or prime)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inv)
      return cmd_invariants(in, format, field, json, verify, cap, use_complement);
    if (*rec) return cmd_recognize(in, format, use_complement, json);
    if (*mp) return cmd_maxprocess(in, format, tie, first);
    if (*gen) return cmd_generate(family, params, seed, exhaustive, out, format);
    if (*ce) return cmd_counterexample(rmin, rmax, json, verify);
    if (*sc) return cmd_scan(n, g6file, suite, field, jobs, json, include_disconnected);
    if (*cx) return cmd_cx_report(in, field);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
