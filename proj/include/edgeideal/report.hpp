#pragma once

#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edgeideal/betti.hpp"
#include "edgeideal/connectivity.hpp"
#include "edgeideal/io.hpp"
#include "edgeideal/recognition.hpp"

namespace edgeideal {

// Everything the `invariants` command prints for one graph. All numbers are
// exact integers; the JSON rendering is the documented stable schema.
struct InvariantReport {
  std::string id;
  int n = 0;
  std::vector<std::string> labels;
  int edge_count = 0;
  std::vector<int> degrees;
  int max_degree = 0;
  std::vector<int> max_degree_vertices;
  bool connected = false;
  int isolated_count = 0;
  bool chordal = false;
  bool co_chordal = false;
  int bight_value = 0;
  int pdim_value = 0;
  std::string pdim_method;
  int depth_value = 0;
  int reg_value = 0;
  std::vector<std::int64_t> f_vector;
  std::vector<std::int64_t> h_vector;
  int h_degree = 0;
  int a_invariant = 0;
  std::int64_t eq1_residual = 0;
  bool two_linear = false;
  std::uint32_t field_characteristic = 0;
  bool verified_against_hochster = false;

  TreeCertificate complement_certificate;
  ScreenReport screens;
  MaxProcessTrace max_process_trace;
  BettiTable table;  // populated when the exact table was computed
  bool has_table = false;
};

struct ReportOptions {
  FieldSpec field = {};
  int betti_cap = kDefaultBettiCap;
  bool force_hochster = false;  // --verify: cross-check fast paths
};

inline InvariantReport build_report(const Graph& g, const ReportOptions& opt = {}) {
  InvariantReport r;
  r.n = g.n;
  r.labels = g.labels;
  r.edge_count = g.edge_count();
  for (int v = 0; v < g.n; ++v) r.degrees.push_back(g.degree(v));
  MaxDegree md = max_degree(g);
  r.max_degree = md.value;
  r.max_degree_vertices = members(md.attaining);
  r.connected = is_connected(g);
  r.isolated_count = popcount(isolated_vertices(g));
  r.chordal = is_chordal(g).chordal;
  r.co_chordal = is_co_chordal(g);
  r.bight_value = bight(g);
  r.field_characteristic = opt.field.characteristic;

  HilbertData hd = hilbert_data(g);
  r.f_vector = hd.f.counts;
  r.h_vector = hd.h.h;
  r.h_degree = hd.h_degree;
  r.a_invariant = hd.a_invariant;

  std::optional<FastPdim> fast = pdim_fast_rules(g);
  bool need_table = !fast || opt.force_hochster || !r.co_chordal;
  if (need_table) {
    r.table = betti_table(g, opt.field, opt.betti_cap);
    r.has_table = true;
  }
  if (fast) {
    r.pdim_value = fast->value;
    r.pdim_method = fast->method;
    if (r.has_table && r.table.pdim() != fast->value)
      throw std::logic_error("fast pdim disagrees with the Betti table");
    r.verified_against_hochster = r.has_table;
  } else {
    r.pdim_value = r.table.pdim();
    r.pdim_method = "hochster";
    r.verified_against_hochster = true;
  }
  // Regularity: from the table when present; co-chordal graphs have a
  // 2-linear resolution, so reg is 1 for a nonzero ideal.
  if (r.has_table)
    r.reg_value = r.table.regularity();
  else
    r.reg_value = r.edge_count == 0 ? 0 : 1;
  r.depth_value = g.n - r.pdim_value;
  r.eq1_residual =
      (hd.krull_dim - r.depth_value) - (hd.h_degree - r.reg_value);
  r.two_linear = r.has_table ? has_2linear_resolution(r.table) : r.co_chordal;

  r.complement_certificate = recognize_dq_tree(complement(g));
  r.screens = necessary_screens(g);
  r.max_process_trace = max_process(g);
  return r;
}

inline nlohmann::json to_json(const TreeCertificate& c,
                              const std::vector<std::string>& labels) {
  nlohmann::json j;
  j["accepted"] = c.accepted;
  if (c.accepted) {
    j["sequence"] = c.sizes;
    nlohmann::json facets = nlohmann::json::array();
    for (VertexSet f : c.facets) facets.push_back(format_vertex_set(labels, f));
    j["facets"] = facets;
    nlohmann::json glue = nlohmann::json::array();
    for (size_t i = 1; i < c.facets.size(); ++i)
      glue.push_back({{"new_vertex", labels[c.new_vertex[i]]},
                      {"host_facet", c.host[i]}});
    j["glue"] = glue;
  } else {
    j["reason"] = to_string(c.reason);
    j["detail"] = c.detail;
    if (!c.cycle_witness.empty()) {
      nlohmann::json cyc = nlohmann::json::array();
      for (int v : c.cycle_witness) cyc.push_back(labels[v]);
      j["cycle"] = cyc;
    }
  }
  return j;
}

inline nlohmann::json to_json(const InvariantReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["labels"] = r.labels;
  j["edge_count"] = r.edge_count;
  j["degrees"] = r.degrees;
  j["max_degree"] = r.max_degree;
  j["max_degree_vertices"] = r.max_degree_vertices;
  j["connected"] = r.connected;
  j["isolated_count"] = r.isolated_count;
  j["chordal"] = r.chordal;
  j["co_chordal"] = r.co_chordal;
  j["bight"] = r.bight_value;
  j["pdim"] = r.pdim_value;
  j["pdim_method"] = r.pdim_method;
  j["depth"] = r.depth_value;
  j["reg"] = r.reg_value;
  j["f_vector"] = r.f_vector;
  j["h_vector"] = r.h_vector;
  j["h_degree"] = r.h_degree;
  j["a_invariant"] = r.a_invariant;
  j["eq1_residual"] = r.eq1_residual;
  j["two_linear"] = r.two_linear;
  j["field_characteristic"] = r.field_characteristic;
  j["verified"] = r.verified_against_hochster;
  j["complement_dq_tree"] = to_json(r.complement_certificate, r.labels);
  j["screens"] = {{"applicable", r.screens.applicable},
                  {"free_and_shedding_ok", r.screens.free_and_shedding_ok},
                  {"max_degree_adjacent_ok", r.screens.max_degree_adjacent_ok}};
  {
    nlohmann::json mp;
    nlohmann::json order = nlohmann::json::array();
    for (int v : r.max_process_trace.order) order.push_back(r.labels[v]);
    mp["order"] = order;
    mp["degrees"] = r.max_process_trace.degrees;
    mp["maximal"] = r.max_process_trace.maximal;
    j["max_process"] = mp;
  }
  if (r.has_table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [ij, rank] : r.table.entries)
      entries.push_back({{"i", ij.first}, {"j", ij.second}, {"rank", rank}});
    j["betti"] = entries;
  }
  return j;
}

inline std::string render_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "n=" << r.n << " edges=" << r.edge_count
      << " maxdeg=" << r.max_degree << (r.connected ? " connected" : " disconnected");
  if (r.isolated_count) out << " isolated=" << r.isolated_count;
  out << "\nchordal=" << (r.chordal ? "yes" : "no")
      << " co-chordal=" << (r.co_chordal ? "yes" : "no")
      << " 2-linear=" << (r.two_linear ? "yes" : "no") << "\n";
  out << "pdim=" << r.pdim_value << " (" << r.pdim_method << ")"
      << " depth=" << r.depth_value << " reg=" << r.reg_value
      << " bight=" << r.bight_value << "\n";
  out << "f=(";
  for (size_t i = 0; i < r.f_vector.size(); ++i)
    out << (i ? "," : "") << r.f_vector[i];
  out << ") h=(";
  for (size_t i = 0; i < r.h_vector.size(); ++i)
    out << (i ? "," : "") << r.h_vector[i];
  out << ") s=" << r.h_degree << " a=" << r.a_invariant
      << " eq1-residual=" << r.eq1_residual << "\n";
  const TreeCertificate& c = r.complement_certificate;
  out << "complement dq-tree: " << (c.accepted ? "accepted (" : "rejected (");
  if (c.accepted) {
    for (size_t i = 0; i < c.sizes.size(); ++i)
      out << (i ? "," : "") << c.sizes[i];
  } else {
    out << to_string(c.reason);
  }
  out << ")\n";
  if (r.has_table) {
    out << "betti:";
    for (const auto& [ij, rank] : r.table.entries)
      out << " b(" << ij.first << "," << ij.second << ")=" << rank;
    out << "\n";
  }
  return out.str();
}

}  // namespace edgeideal
