#include "clawdec/known_graphs.hpp"

#include <cstdlib>
#include <filesystem>

#include "clawdec/canonical.hpp"
#include "clawdec/connectivity.hpp"
#include "clawdec/graph_io.hpp"
#include "clawdec/independent.hpp"

namespace clawdec {
namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

const char* kBlockFile = "blocks/fig4-block.txt";

void add_planarity(PropertyReport& report, const NamedGraphFile& f) {
  if (!f.rotation) {
    report.add("planar (genus 0)", "0", "no rotation in data file", false);
    return;
  }
  try {
    const auto genus = genus_from_rotation(f.graph, *f.rotation);
    report.add("planar (genus 0)", "0", std::to_string(genus.genus), genus.genus == 0);
  } catch (const Error& e) {
    report.add("planar (genus 0)", "0", e.what(), false);
  }
}

void add_alpha(PropertyReport& report, const Graph& g, int expected) {
  const VertexSet mis = max_independent_set(g);
  report.add("independence number", std::to_string(expected), std::to_string(mis.count()),
             mis.count() == expected);
  const int required = g.order() / 3;
  if (mis.count() < required) {
    NonDecomposabilityCertificate cert;
    cert.kind = CertificateKind::IndependenceBound;
    cert.k = 3;
    cert.required = required;
    cert.witness = mis;
    report.certificate = cert;
  }
}

// Both deciders must say "no"; the exact cover only runs on small graphs.
void add_no_claw(PropertyReport& report, const Graph& g) {
  if (!g.is_regular(4) || g.size() % 3 != 0) {
    report.add("no claw-decomposition", "certificate", "hypotheses fail", false);
    return;
  }
  const Decision d = decide_claw_4regular(g);
  const bool negative = !decomposable(d);
  report.add("no claw-decomposition", "certificate",
             negative ? certificate_kind_name(std::get<NonDecomposabilityCertificate>(d).kind) : "decomposition found",
             negative);
  if (negative && !report.certificate) report.certificate = std::get<NonDecomposabilityCertificate>(d);
  if (g.size() <= 36) {
    const bool oracle_negative = std::holds_alternative<NotFound>(exact_cover_oracle(g, 3));
    report.add("exact cover agrees", yes_no(negative), yes_no(oracle_negative), oracle_negative == negative);
  }
}

}  // namespace

const std::vector<KnownGraphInfo>& known_graph_registry() {
  static const std::vector<KnownGraphInfo> registry{
      {"fig1-12-a", "known/fig1-12-a.txt", "order-12 connected 4-regular graph without a claw decomposition"},
      {"fig1-12-b", "known/fig1-12-b.txt", "order-12 connected 4-regular graph without a claw decomposition"},
      {"fig1-12-c", "known/fig1-12-c.txt", "order-12 connected 4-regular graph without a claw decomposition"},
      {"fig1-12-d", "known/fig1-12-d.txt", "order-12 connected 4-regular graph without a claw decomposition"},
      {"fig1-jaeger-12", "known/fig1-jaeger-12.txt",
       "the 4-edge-connected member of the order-12 quadruple"},
      {"fig2-planar-18", "known/fig2-planar-18.txt", "planar 2-connected 4-regular graph of order 18"},
      {"fig3-left-21", "known/fig3-left-21.txt", "planar 3-connected 4-regular graph of order 21, one size-7 orbit"},
      {"fig3-right-21", "known/fig3-right-21.txt", "planar 3-connected 4-regular graph of order 21, alpha 6"},
  };
  return registry;
}

std::string data_directory() {
  if (const char* env = std::getenv("CLAWDEC_DATA_DIR"); env && *env) return env;
  return CLAWDEC_DATA_DIR;
}

KnownGraph load_known_graph(const std::string& name) {
  for (const KnownGraphInfo& info : known_graph_registry()) {
    if (info.name != name) continue;
    const std::filesystem::path path = std::filesystem::path(data_directory()) / info.file;
    if (!std::filesystem::exists(path))
      throw Error(Errc::TranscriptionMissing, name + ": no data file at " + path.string());
    return {info, parse_named_graph(read_text_file(path.string()))};
  }
  throw Error(Errc::InvalidArgument, "unknown graph name '" + name + "'");
}

PropertyReport verify_known(const std::string& name) {
  const KnownGraph known = load_known_graph(name);
  const Graph& g = known.file.graph;
  PropertyReport report;
  report.subject = name;

  const bool fig1 = name.rfind("fig1-", 0) == 0;
  const int order = fig1 ? 12 : (name == "fig2-planar-18" ? 18 : 21);
  report.add("order", std::to_string(order), std::to_string(g.order()), g.order() == order);
  report.add("simple", "yes", yes_no(g.is_simple()), g.is_simple());
  report.add("4-regular", "yes", yes_no(g.is_regular(4)), g.is_regular(4));
  report.add("connected", "yes", yes_no(g.is_connected()), g.is_connected());
  if (!g.is_simple() || !g.is_connected()) return report;

  if (fig1) {
    if (name == "fig1-jaeger-12") {
      const int lambda = edge_connectivity(g).value;
      report.add("edge connectivity", ">= 4", std::to_string(lambda), lambda >= 4);
    }
    add_no_claw(report, g);
  } else if (name == "fig2-planar-18") {
    report.add("2-connected", "yes", yes_no(is_two_connected(g)), is_two_connected(g));
    add_planarity(report, known.file);
    add_alpha(report, g, 5);
    add_no_claw(report, g);
  } else if (name == "fig3-right-21") {
    const int kappa = vertex_connectivity(g).value;
    report.add("3-connected", ">= 3", std::to_string(kappa), kappa >= 3);
    add_planarity(report, known.file);
    add_alpha(report, g, 6);
    add_no_claw(report, g);
  } else if (name == "fig3-left-21") {
    const int kappa = vertex_connectivity(g).value;
    report.add("3-connected", ">= 3", std::to_string(kappa), kappa >= 3);
    add_planarity(report, known.file);
    const auto orbits = independent_set_orbits(g, 7);
    report.add("size-7 independent sets up to automorphism", "1", std::to_string(orbits.size()), orbits.size() == 1);
    if (orbits.size() == 1) {
      // Removing the set must leave a component with at least two cycles.
      const Graph rest = g.induced(VertexSet::range(g.order()) - orbits.front());
      int excess = -1;
      for (const VertexSet& comp : connected_components(rest))
        excess = std::max(excess, rest.edges_within(comp) - comp.count());
      report.add("component with two cycles after removal", "edges >= vertices + 1",
                 "max edges - vertices = " + std::to_string(excess), excess >= 1);
    }
    add_no_claw(report, g);
  }
  return report;
}

BlockSpec load_known_block() {
  const std::filesystem::path path = std::filesystem::path(data_directory()) / kBlockFile;
  if (!std::filesystem::exists(path))
    throw Error(Errc::TranscriptionMissing, "g48n block: no data file at " + path.string());
  return block_from_file(parse_named_graph(read_text_file(path.string())));
}

}  // namespace clawdec
