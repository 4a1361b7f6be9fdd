#include "clawdec/report.hpp"

#include <algorithm>
#include <cstdio>

namespace clawdec {

Json vertex_set_json(const VertexSet& s) { return Json(s.members()); }

VertexSet vertex_set_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::MalformedFile, "vertex set must be an array");
  VertexSet s;
  for (const Json& v : j) {
    if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= kMaxVertices)
      throw Error(Errc::MalformedFile, "vertex set entry out of range");
    s.insert(v.get<int>());
  }
  return s;
}

Json decision_json(const Graph& g, const Decision& d) {
  Json j;
  if (const auto* dec = std::get_if<StarDecomposition>(&d)) {
    j["decision"] = "decomposable";
    j["k"] = dec->k;
    Json stars = Json::array();
    for (const Star& s : dec->stars) {
      Json edges = Json::array();
      for (int e : s.edges) edges.push_back({g.edge(e).u, g.edge(e).v});
      stars.push_back({{"center", s.center}, {"edges", edges}});
    }
    j["stars"] = stars;
    return j;
  }
  const auto& c = std::get<NonDecomposabilityCertificate>(d);
  j["decision"] = "not-decomposable";
  j["k"] = c.k;
  Json cert;
  cert["kind"] = certificate_kind_name(c.kind);
  cert["witness"] = vertex_set_json(c.witness);
  cert["required"] = c.required;
  cert["candidates_examined"] = c.candidates_examined;
  Json failing = Json::array();
  for (const VertexSet& s : c.failing_examples) failing.push_back(vertex_set_json(s));
  cert["failing_examples"] = failing;
  j["certificate"] = cert;
  return j;
}

Decision decision_from_json(const Graph& g, const Json& j) {
  try {
    const std::string decision = j.at("decision").get<std::string>();
    const int k = j.at("k").get<int>();
    if (decision == "decomposable") {
      StarDecomposition dec;
      dec.k = k;
      std::vector<bool> used(g.size(), false);
      for (const Json& s : j.at("stars")) {
        Star star;
        star.center = s.at("center").get<int>();
        for (const Json& e : s.at("edges")) {
          const int u = e.at(0).get<int>(), v = e.at(1).get<int>();
          int found = -1;
          if (u >= 0 && u < g.order() && v >= 0 && v < g.order())
            for (int idx : g.incident_edges(u))
              if (!used[idx] && g.edge(idx).other(u) == v) {
                found = idx;
                break;
              }
          if (found < 0)
            throw Error(Errc::MalformedFile, "star edge " + std::to_string(u) + "-" + std::to_string(v) +
                                                 " is not an unused edge of the graph");
          used[found] = true;
          star.edges.push_back(found);
        }
        std::sort(star.edges.begin(), star.edges.end());
        dec.stars.push_back(std::move(star));
      }
      return dec;
    }
    if (decision == "not-decomposable") {
      const Json& cj = j.at("certificate");
      NonDecomposabilityCertificate c;
      c.k = k;
      const std::string kind = cj.at("kind").get<std::string>();
      if (kind == certificate_kind_name(CertificateKind::IndependenceBound))
        c.kind = CertificateKind::IndependenceBound;
      else if (kind == certificate_kind_name(CertificateKind::CriterionExhausted))
        c.kind = CertificateKind::CriterionExhausted;
      else
        throw Error(Errc::MalformedFile, "unknown certificate kind '" + kind + "'");
      c.witness = vertex_set_from_json(cj.at("witness"));
      c.required = cj.at("required").get<int>();
      c.candidates_examined = cj.value("candidates_examined", std::int64_t{0});
      if (cj.contains("failing_examples"))
        for (const Json& s : cj.at("failing_examples")) c.failing_examples.push_back(vertex_set_from_json(s));
      return c;
    }
    throw Error(Errc::MalformedFile, "unknown decision '" + decision + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::MalformedFile, std::string("decision report: ") + e.what());
  }
}

Json orientation_json(const Orientation& o) {
  Json arcs = Json::array();
  const Graph& g = o.graph();
  for (int e = 0; e < g.size(); ++e) arcs.push_back({o.tail(e), o.head(e)});
  return {{"result", "orientation"}, {"arcs", arcs}, {"text", o.to_text()}};
}

Json violating_set_json(const ViolatingSet& s) {
  return {{"result", "violating-set"}, {"members", vertex_set_json(s.members)}, {"excess", s.excess}};
}

Json cut_json(const CutCertificate& c) {
  return {{"kind", cut_kind_name(c.kind)},
          {"side", vertex_set_json(c.side)},
          {"size", c.size},
          {"shares_common_vertex", c.shares_common_vertex}};
}

Json property_report_json(const PropertyReport& r) {
  Json claims = Json::array();
  for (const Claim& c : r.claims)
    claims.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
  Json j{{"subject", r.subject}, {"all_pass", r.all_pass()}, {"claims", claims}};
  if (r.certificate) {
    const auto& c = *r.certificate;
    j["certificate"] = {{"kind", certificate_kind_name(c.kind)},
                        {"k", c.k},
                        {"required", c.required},
                        {"witness", vertex_set_json(c.witness)}};
  }
  return j;
}

Json survey_report_json(const SurveyReport& r) {
  char checksum[17];
  std::snprintf(checksum, sizeof checksum, "%016llx", static_cast<unsigned long long>(r.checksum));
  return {{"n", r.n},
          {"d", r.d},
          {"k", r.k},
          {"total_generated", r.total_generated},
          {"non_decomposable", r.non_decomposable},
          {"rejected_by_independence", r.rejected_by_independence},
          {"witnesses", r.witnesses},
          {"checksum", checksum},
          {"subtrees", r.subtrees},
          {"subtrees_resumed", r.subtrees_resumed},
          {"wall_seconds", r.wall_seconds}};
}

Json run_report(const std::string& command, Json inputs, Json outcome, double wall_seconds) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"outcome", std::move(outcome)},
          {"versions", {{"report", kReportVersion}, {"json", "nlohmann " + std::to_string(NLOHMANN_JSON_VERSION_MAJOR) +
                                                                 "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR)}}},
          {"wall_seconds", wall_seconds}};
}

}  // namespace clawdec
