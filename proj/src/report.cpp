#include "unigraph/report.hpp"

namespace unigraph {

namespace {

Json paired_json(const PairedDegreeSequence& ps) {
  Json j;
  j["k"] = to_string(ps.k_part);
  j["s"] = to_string(ps.s_part);
  return j;
}

Json component_list(const std::vector<PairedDegreeSequence>& list) {
  Json arr = Json::array();
  for (const auto& ps : list) arr.push_back(paired_json(ps));
  return arr;
}

std::string paren(const PairedDegreeSequence& ps) { return "(" + to_string(ps) + ")"; }

}  // namespace

Json decomposition_to_json(const Decomposition& d) {
  Json j;
  j["components"] = component_list(d.components);
  j["tail"] = to_string(d.tail);
  return j;
}

Json compact_to_json(const CompactDecomposition& c) {
  Json j;
  j["components"] = component_list(c.components);
  j["tail"] = c.tail ? Json(to_string(*c.tail)) : Json(nullptr);
  return j;
}

Json split_to_json(const SplitClass& sc) {
  Json j;
  j["kind"] = std::string(to_string(sc.kind));
  if (sc.paired) {
    j["k"] = to_string(sc.paired->k_part);
    j["s"] = to_string(sc.paired->s_part);
  }
  return j;
}

Json unigraph_report_to_json(const UnigraphReport& r) {
  Json j;
  j["isUnigraph"] = r.is_unigraph;
  Json types = Json::array();
  for (const auto& t : r.component_types) types.push_back(to_string(t));
  j["components"] = std::move(types);
  j["failureIndex"] = r.failure_index ? Json(*r.failure_index) : Json(nullptr);
  return j;
}

Json params_to_json(const ParamSet& p) {
  Json j;
  j["omega"] = p.omega;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["chi"] = p.chi;
  j["fix"] = p.fix;
  j["dist"] = p.dist;
  j["perfect"] = p.perfect;
  return j;
}

std::string decomposition_to_text(const Decomposition& d) {
  std::string out;
  for (const auto& c : d.components) out += paren(c) + " o ";
  return out + "(" + to_string(d.tail) + ")";
}

std::string compact_to_text(const CompactDecomposition& c) {
  std::string out;
  for (const auto& ps : c.components) {
    if (!out.empty()) out += " o ";
    out += paren(ps);
  }
  if (c.tail) {
    if (!out.empty()) out += " o ";
    out += "(" + to_string(*c.tail) + ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace unigraph
