#pragma once

#include "grouprings/dsl.hpp"
#include "grouprings/ndlab.hpp"
#include "grouprings/sl2z.hpp"

#include <json.hpp>

namespace gring {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kArtifactVersion = "1.0.0";

inline std::string fingerprint_hex(const CayleyGroup& g) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fingerprint(g));
  return buf;
}

/// AlgElement as a JSON map element-name -> "num/den" (exact, zero
/// coefficients omitted).
inline json alg_to_json(const AlgElement& x) {
  json j = json::object();
  for (int i = 0; i < x.g->order; ++i)
    if (!x.c[i].is_zero()) j[x.g->element_names[i]] = rat_string(x.c[i]);
  return j;
}

inline json subgroup_to_json(const Subgroup& s) {
  json j = json::array();
  for (int e : s.elems) j.push_back(s.parent->element_names[e]);
  return j;
}

inline json wedderburn_to_json(const WedderburnReport& rep) {
  json comps = json::array();
  for (auto& c : rep.components) {
    json jc;
    jc["dim"] = c.dim_q;
    jc["kernel"] = subgroup_to_json(c.kernel);
    jc["classification"] = classification_name(c.classification);
    jc["reduced_degree_lower_bound"] = c.reduced_degree_lower_bound;
    jc["pair"] = {{"H_order", c.provenance.h.order()}, {"K_order", c.provenance.k.order()}};
    comps.push_back(std::move(jc));
  }
  json j;
  j["components"] = std::move(comps);
  j["component_count"] = rep.components.size();
  j["covered"] = rep.covered;
  j["matrix_count_min"] = rep.matrix_count_min;
  j["matrix_count_max"] = rep.matrix_count_max;
  j["cyclic_subgroup_class_count"] = rep.cyclic_class_count;
  j["residual_dim"] = rep.residual_dim;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

inline json nd_verdict_to_json(const NdVerdict& v) {
  json j;
  j["status"] = nd_status_name(v.status);
  j["basis"] = v.basis;
  if (v.witness) {
    json w;
    w["n"] = alg_to_json(v.witness->n);
    w["e"] = alg_to_json(v.witness->e);
    if (v.witness->offending_index >= 0) {
      w["offending_element"] = v.witness->n.g->element_names[v.witness->offending_index];
      w["offending_coefficient"] = rat_string(v.witness->offending_coeff);
    }
    w["note"] = v.witness->note;
    w["reverified"] = reverify_witness(*v.witness);
    j["witness"] = std::move(w);
  }
  return j;
}

struct PropertyReport {
  bool sn = false, sn_via_hats = false, ssn = false, dedekind = false;
  bool nilpotent = false, solvable = false, supersolvable = false;
  DkResult dk;
  NdVerdict bicyclic_resistant;
  NdVerdict nd;
};

/// Full analysis of one group; deterministic for a fixed fingerprint.
struct AnalysisRecord {
  std::string expr;
  std::string fingerprint;
  int order = 0;
  WedderburnReport wedderburn;
  PropertyReport props;
};

inline json analysis_to_json(const AnalysisRecord& rec) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["artifact_version"] = kArtifactVersion;
  j["expr"] = rec.expr;
  j["fingerprint"] = rec.fingerprint;
  j["order"] = rec.order;
  j["wedderburn"] = wedderburn_to_json(rec.wedderburn);
  json p;
  p["sn"] = rec.props.sn;
  p["sn_via_hats"] = rec.props.sn_via_hats;
  p["ssn"] = rec.props.ssn;
  p["dedekind"] = rec.props.dedekind;
  p["nilpotent"] = rec.props.nilpotent;
  p["solvable"] = rec.props.solvable;
  p["supersolvable"] = rec.props.supersolvable;
  p["dk"] = {{"verdict", rec.props.dk.verdict},
             {"nonzero_epsilon_count", rec.props.dk.nonzero_epsilon_count},
             {"cyclic_class_count", rec.props.dk.cyclic_class_count}};
  p["bicyclic_resistant"] = nd_verdict_to_json(rec.props.bicyclic_resistant);
  p["nd"] = nd_verdict_to_json(rec.props.nd);
  j["properties"] = std::move(p);
  return j;
}

inline AnalysisRecord analyze_group(const std::string& expr, const CayleyGroup& G,
                                    const std::vector<Subgroup>& lattice) {
  AnalysisRecord rec;
  rec.expr = expr;
  rec.fingerprint = fingerprint_hex(G);
  rec.order = G.order;
  rec.wedderburn = pci_set(G, lattice);
  auto sn = sn_check(G, lattice);
  rec.props.sn = sn.direct;
  rec.props.sn_via_hats = sn.via_hats;
  rec.props.ssn = ssn_check(G, lattice);
  rec.props.dedekind = is_dedekind_direct(G, lattice);
  rec.props.nilpotent = is_nilpotent_group(G);
  rec.props.solvable = is_solvable_group(G);
  rec.props.supersolvable = is_supersolvable_group(G);
  rec.props.dk = dk_check(G, lattice);
  rec.props.bicyclic_resistant = bicyclic_resistant(G, lattice, &rec.wedderburn);
  rec.props.nd = nd_report(G, &lattice).verdict;
  return rec;
}

} // namespace gring
