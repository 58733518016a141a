#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edgeideal/betti.hpp"
#include "edgeideal/connectivity.hpp"
#include "edgeideal/decompose.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/io.hpp"
#include "edgeideal/parallel.hpp"
#include "edgeideal/recognition.hpp"

namespace edgeideal {

struct Violation {
  std::string graph6;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t checked = 0;
  std::uint64_t applicable = 0;  // graphs the suite's hypothesis applied to
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
};

namespace detail {

// Per-graph check: returns violation text, or nullopt; may push notes.
using SuiteCheck = std::function<std::optional<std::string>(
    const Graph&, FieldSpec, bool& applicable, std::vector<std::string>& notes)>;

inline std::optional<std::string> check_pdim_max(const Graph& g, FieldSpec f,
                                                 bool& app,
                                                 std::vector<std::string>&) {
  app = true;
  int p = betti_table(g, f).pdim();
  int b = bight(g);
  int m = max_degree(g).value;
  if (p >= b && b >= m) return std::nullopt;
  return "pdim=" + std::to_string(p) + " bight=" + std::to_string(b) +
         " maxdeg=" + std::to_string(m);
}

inline std::optional<std::string> check_full_vertex(const Graph& g, FieldSpec f,
                                                    bool& app,
                                                    std::vector<std::string>&) {
  if (!has_full_vertex(g)) return std::nullopt;
  app = true;
  int p = betti_table(g, f).pdim();
  if (p == g.n - 1) return std::nullopt;
  return "full vertex but pdim=" + std::to_string(p) +
         " != " + std::to_string(g.n - 1);
}

inline std::optional<std::string> check_dtree_vd(const Graph& g, FieldSpec,
                                                 bool& app,
                                                 std::vector<std::string>&) {
  if (!is_co_chordal(g)) return std::nullopt;
  app = true;
  SimplicialComplex dg = independence_complex(g);
  bool accepted = recognize_dq_tree(complement(g)).accepted;
  bool qf = quasi_forest_leaf_order(dg).holds;
  bool vd = is_vertex_decomposable(dg).holds;
  bool sh = is_shellable(dg).holds;
  bool lhs = vd && qf;
  bool rhs = sh && qf;
  if (accepted == lhs && lhs == rhs) return std::nullopt;
  return std::string("accepted=") + (accepted ? "1" : "0") + " vd=" +
         (vd ? "1" : "0") + " shellable=" + (sh ? "1" : "0") + " qf=" +
         (qf ? "1" : "0");
}

inline std::optional<std::string> check_dtree_pdim(const Graph& g, FieldSpec f,
                                                   bool& app,
                                                   std::vector<std::string>&) {
  if (!is_connected(g)) return std::nullopt;
  TreeCertificate cert = recognize_dq_tree(complement(g));
  if (!cert.accepted) return std::nullopt;
  app = true;
  int p = betti_table(g, f).pdim();
  if (p != max_degree(g).value)
    return "accepted complement but pdim=" + std::to_string(p) +
           " != maxdeg=" + std::to_string(max_degree(g).value);
  return std::nullopt;
}

inline std::optional<std::string> check_k_connected(const Graph& g, FieldSpec,
                                                    bool& app,
                                                    std::vector<std::string>&) {
  // Here the scanned graph itself plays the tree role.
  if (!is_connected(g)) return std::nullopt;
  TreeCertificate cert = recognize_dq_tree(g);
  if (!cert.accepted || cert.sizes.size() < 2) return std::nullopt;
  app = true;
  int dq = cert.sizes.back();
  EdgeConnectivity ec = edge_connectivity(g);
  if (ec.value == dq - 1) return std::nullopt;
  return "lambda=" + std::to_string(ec.value) +
         " != d_q-1=" + std::to_string(dq - 1);
}

inline std::optional<std::string> check_screens(const Graph& g, FieldSpec,
                                                bool& app,
                                                std::vector<std::string>&) {
  TreeCertificate cert = recognize_dq_tree(complement(g));
  if (!cert.accepted) return std::nullopt;
  ScreenReport rep = necessary_screens(g);
  if (!rep.applicable) return std::nullopt;
  app = true;
  if (rep.pass()) return std::nullopt;
  return "accepted certificate with failing screen";
}

inline std::optional<std::string> check_froberg(const Graph& g, FieldSpec f,
                                                bool& app,
                                                std::vector<std::string>&) {
  app = true;
  bool lin = has_2linear_resolution(g, f);
  bool cochordal = is_co_chordal(g);
  if (lin == cochordal) return std::nullopt;
  return std::string("2-linear=") + (lin ? "1" : "0") + " co-chordal=" +
         (cochordal ? "1" : "0");
}

inline std::optional<std::string> check_eq1_suite(const Graph& g, FieldSpec f,
                                                  bool& app,
                                                  std::vector<std::string>&) {
  app = true;
  std::int64_t residual = check_eq1(g, f);
  if (residual < 0) return "negative residual " + std::to_string(residual);
  if (is_co_chordal(g) && residual != 0)
    return "co-chordal with residual " + std::to_string(residual);
  return std::nullopt;
}

inline std::optional<std::string> check_depth_remark(const Graph& g, FieldSpec f,
                                                     bool& app,
                                                     std::vector<std::string>&) {
  TreeCertificate cert = recognize_dq_tree(complement(g));
  if (!cert.accepted) return std::nullopt;
  app = true;
  int d = betti_table(g, f).depth();
  if (d == cert.sizes.back()) return std::nullopt;
  return "depth=" + std::to_string(d) +
         " != d_q=" + std::to_string(cert.sizes.back());
}

// The disconnected shortcut under test claims pdim = maxdeg + (number of
// isolated vertices) once the connected component's complement is a
// recognized tree. The isolated-vertex term is wrong: isolated vertices are
// free ring variables, they raise depth and leave pdim unchanged (see the
// exact computation). The suite checks the formula as stated and reports
// the corrected comparison as a note.
inline std::optional<std::string> check_disconnected_formula(
    const Graph& g, FieldSpec f, bool& app, std::vector<std::string>& notes) {
  VertexSet iso = isolated_vertices(g);
  VertexSet rest = g.vertices() & ~iso;
  if (iso == 0 || rest == 0) return std::nullopt;
  Graph comp = induced_subgraph(g, rest);
  if (!is_connected(comp)) return std::nullopt;
  if (!recognize_dq_tree(complement(comp)).accepted) return std::nullopt;
  app = true;
  int p = betti_table(g, f).pdim();
  int m = max_degree(g).value;
  int k = popcount(iso);
  if (p == m)
    notes.push_back(to_graph6(g) + ": pdim = maxdeg = " + std::to_string(p) +
                    " (isolated vertices leave pdim unchanged)");
  if (p != m + k)
    return "pdim=" + std::to_string(p) + " != maxdeg+isolated=" +
           std::to_string(m + k);
  return std::nullopt;
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "thm-pdim-max",   "thm-full-vertex",  "thm-dtree-vd",
      "thm-dtree-pdim", "lemma-k-connected", "prop-screens",
      "froberg",        "eq1",               "depth-remark",
      "disconnected-formula"};
  return names;
}

inline detail::SuiteCheck suite_check(const std::string& name) {
  if (name == "thm-pdim-max") return detail::check_pdim_max;
  if (name == "thm-full-vertex") return detail::check_full_vertex;
  if (name == "thm-dtree-vd") return detail::check_dtree_vd;
  if (name == "thm-dtree-pdim") return detail::check_dtree_pdim;
  if (name == "lemma-k-connected") return detail::check_k_connected;
  if (name == "prop-screens") return detail::check_screens;
  if (name == "froberg") return detail::check_froberg;
  if (name == "eq1") return detail::check_eq1_suite;
  if (name == "depth-remark") return detail::check_depth_remark;
  if (name == "disconnected-formula") return detail::check_disconnected_formula;
  throw std::invalid_argument("unknown suite: " + name);
}

// The disconnected-formula suite extends the corpus with up to three
// isolated vertices per graph (total order capped at 9); other suites scan
// the corpus as given.
inline std::vector<Graph> suite_corpus(const std::string& name,
                                       const std::vector<Graph>& base) {
  if (name != "disconnected-formula") return base;
  std::vector<Graph> out;
  for (const Graph& g : base)
    for (int k = 1; k <= 3 && g.n + k <= 9; ++k) {
      Graph h(g.n + k);
      for (auto [u, v] : g.edges()) h.add_edge(u, v);
      out.push_back(h);
    }
  return out;
}

inline SuiteResult run_suite(const std::string& name,
                             const std::vector<Graph>& base, FieldSpec field,
                             int jobs = 1) {
  SuiteResult res;
  res.suite = name;
  detail::SuiteCheck check = suite_check(name);
  std::vector<Graph> corpus = suite_corpus(name, base);
  struct Part {
    std::uint64_t applicable = 0;
    std::vector<Violation> violations;
    std::vector<std::string> notes;
  };
  Part total = parallel_reduce<Part>(
      0, corpus.size(), jobs, 4, Part{},
      [&](std::uint64_t lo, std::uint64_t hi, Part& acc) {
        for (std::uint64_t i = lo; i < hi; ++i) {
          bool app = false;
          auto bad = check(corpus[i], field, app, acc.notes);
          if (app) ++acc.applicable;
          if (bad) acc.violations.push_back({to_graph6(corpus[i]), *bad});
        }
      },
      [](Part& a, const Part& b) {
        a.applicable += b.applicable;
        a.violations.insert(a.violations.end(), b.violations.begin(),
                            b.violations.end());
        a.notes.insert(a.notes.end(), b.notes.begin(), b.notes.end());
      });
  res.checked = corpus.size();
  res.applicable = total.applicable;
  res.violations = std::move(total.violations);
  res.notes = std::move(total.notes);
  std::sort(res.violations.begin(), res.violations.end(),
            [](const Violation& a, const Violation& b) {
              return a.graph6 < b.graph6 ||
                     (a.graph6 == b.graph6 && a.detail < b.detail);
            });
  std::sort(res.notes.begin(), res.notes.end());
  return res;
}

}  // namespace edgeideal
