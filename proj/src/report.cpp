#include "robustham/report.hpp"

namespace robustham {

json edges_json(const Graph& g) {
  json out = json::array();
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

json arcs_json(const Digraph& d) {
  json out = json::array();
  for (const Arc& a : d.arcs()) out.push_back({a.tail, a.head});
  return out;
}

namespace {

json edge_list(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json arc_list(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

}  // namespace

json to_json(const DirBound& b) {
  return {{"n", b.n},
          {"delta", b.delta},
          {"indicator", b.indicator},
          {"radicand", b.radicand},
          {"r_star", b.r_star()},
          {"f", b.f}};
}

json to_json(const UndirBound& b) {
  return {{"n", b.n},
          {"delta", b.delta},
          {"radicand", b.radicand},
          {"g", b.g()},
          {"g_even", b.g_even},
          {"g_prime_even", b.g_prime_even}};
}

json to_json(const BinResults& b) {
  return {{"ratio_ok", b.ratio_ok},
          {"point_lower_ok", b.point_lower_ok},
          {"tail_upper_ok", b.tail_upper_ok},
          {"ratio", b.ratio},
          {"ratio_bound", b.ratio_bound},
          {"point", b.point},
          {"point_bound", b.point_bound},
          {"tail", b.tail},
          {"tail_bound", b.tail_bound}};
}

const char* to_string(FactorStatus s) {
  switch (s) {
    case FactorStatus::Found: return "found";
    case FactorStatus::Infeasible: return "infeasible";
    case FactorStatus::TriviallyInfeasible: return "trivially_infeasible";
  }
  return "";
}

json to_json(const CutWitness& c) {
  return {{"U", c.U}, {"W", c.W}, {"capacity", c.capacity}, {"required", c.required}};
}

json to_json(const DigraphFactor& f) {
  json out = {{"status", to_string(f.status)}, {"r", f.r}};
  if (f.status == FactorStatus::Found) {
    out["factor_edges"] = arcs_json(f.factor);
  } else {
    out["reason"] = f.reason;
  }
  if (f.cut) out["cut_witness"] = to_json(*f.cut);
  return out;
}

json to_json(const GraphFactor& f) {
  json out = {{"status", f.found ? "found" : "infeasible"}};
  if (f.found) {
    out["factor_edges"] = edges_json(f.factor);
  } else {
    out["reason"] = f.reason;
  }
  return out;
}

json to_json(const MatchingsResult& m) {
  json trace = json::array();
  for (const auto& s : m.trace) {
    trace.push_back({{"max_degree", s.max_degree},
                     {"min_degree", s.min_degree},
                     {"max_class", s.max_class},
                     {"min_class", s.min_class}});
  }
  return {{"n", m.n},
          {"delta", m.delta},
          {"max_degree", m.max_deg},
          {"s", m.s},
          {"t", m.t},
          {"regular_input", m.regular_input},
          {"factor_degree", m.factor_degree},
          {"factor_edges", edges_json(m.factor)},
          {"matching", edge_list(m.matching)},
          {"iterations", m.trace.empty() ? 0 : static_cast<int>(m.trace.size()) - 1},
          {"trace", trace}};
}

json to_json(const OrientationResult& o) {
  return {{"n", o.digraph.order()},
          {"edges", edge_list(o.edges)},
          {"arcs", arc_list(o.arcs)},
          {"out_degree", o.out_degree},
          {"in_degree", o.in_degree}};
}

json to_json(const SwitchTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"path", s.path}, {"disc_before", s.disc_before}, {"disc_after", s.disc_after}});
  }
  json hist = json::object();
  for (const auto& [len, count] : t.path_length_histogram) hist[std::to_string(len)] = count;
  return {{"steps", steps}, {"path_length_histogram", hist}};
}

json to_json(const BalanceResult& b) {
  return {{"orientation", to_json(b.orientation)}, {"trace", to_json(b.trace)}};
}

json to_json(const RegularOrientation& r) {
  json out = {{"pipeline", r.pipeline == OrientationPipeline::Euler ? "euler" : "expander_slice"},
              {"orientation", to_json(r.orientation)},
              {"attempts", r.attempts}};
  if (r.slice) {
    out["slice_degree"] = r.slice_degree;
    out["slice_arcs"] = arcs_json(*r.slice);
  }
  return out;
}

json rational_json(const Rational& r) { return to_string(r); }

json to_json(const ExpansionParams& p) { return {{"nu", rational_json(p.nu)}, {"tau", rational_json(p.tau)}}; }

json to_json(const ExpansionVerdict& v) {
  json out = {{"verdict", to_string(v.kind)}, {"params", to_json(v.params)}};
  switch (v.kind) {
    case VerdictKind::Certified:
      out["method"] = to_string(*v.method);
      break;
    case VerdictKind::Refuted:
      out["witness"] = v.witness;
      out["rn_size"] = v.rn_size;
      out["required"] = rational_json(v.required);
      if (v.trials > 0) out["trial"] = v.trials;
      break;
    case VerdictKind::NoViolationFound:
      out["trials"] = v.trials;
      break;
    case VerdictKind::NotApplicable:
      out["reason"] = v.reason;
      break;
  }
  if (!v.diagnostics.empty()) out["diagnostics"] = v.diagnostics;
  return out;
}

json to_json(const SpectralData& s) {
  return {{"n", s.n}, {"d", s.d}, {"lambda", s.lambda}, {"residual", s.residual}, {"tolerance", s.tolerance}};
}

json to_json(const MixingReport& m) {
  json out = {{"holds", m.holds}, {"exhaustive", m.exhaustive}, {"pairs", m.pairs}, {"worst_margin", m.worst_margin}};
  if (!m.holds) out["violation"] = {{"A", m.violating_a}, {"B", m.violating_b}};
  return out;
}

json to_json(const HamiltonResult& h) {
  json out = {{"status", to_string(h.status)}, {"nodes", h.nodes}, {"heuristic", h.heuristic}};
  if (h.status == SearchStatus::Found) out["cycle"] = h.cycle;
  return out;
}

json to_json(const HamiltonPacking& p) {
  return {{"directed", p.directed}, {"n", p.n}, {"cycles", p.cycles}, {"complete", p.complete}};
}

json to_json(const PackResult& p) {
  return {{"status", to_string(p.status)}, {"packing", to_json(p.packing)}, {"nodes", p.nodes}};
}

json to_json(const HamVsReg& h) {
  return {{"directed", h.directed},
          {h.directed ? "reg" : "reg_even", h.reg},
          {"bound", h.bound},
          {"ham_lower", h.ham_lower},
          {"equality_observed", h.equality},
          {"packed_factor", h.packed_factor},
          {"status", to_string(h.status)},
          {"packing", to_json(h.packing)}};
}

json to_json(const ExtremalConstruction& c) {
  return {{"n", c.n},
          {"delta", c.delta},
          {"Delta", c.Delta},
          {"a_size", c.a_size},
          {"b_size", c.b_size},
          {"b_degree", c.b_degree},
          {"complete", c.complete}};
}

json to_json(const TrialReport& r, bool include_runtime) {
  json out = {{"model", r.model},
              {"seed", r.seed},
              {"trial", r.trial},
              {"params", r.params},
              {"counts", r.counts},
              {"values", r.values},
              {"conditions", r.conditions}};
  if (include_runtime) out["runtime_seconds"] = r.runtime_seconds;
  return out;
}

}  // namespace robustham
