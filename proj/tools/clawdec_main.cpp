// clawdec: command-line front end. Reports go to stdout as JSON; errors go
// to stderr. Exit status 0 = success, 2 = verified negative, 1 = error.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "clawdec/canonical.hpp"
#include "clawdec/connectivity.hpp"
#include "clawdec/families.hpp"
#include "clawdec/graph_io.hpp"
#include "clawdec/known_graphs.hpp"
#include "clawdec/regular_generator.hpp"
#include "clawdec/report.hpp"
#include "clawdec/star_decomposition.hpp"
#include "clawdec/survey.hpp"

using namespace clawdec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int default_workers() {
  if (const char* env = std::getenv("CLAWDEC_WORKERS"); env && *env) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

std::string trimmed(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  return s.substr(start);
}

Graph load_graph(const std::string& path) {
  const std::string text = read_text_file(path);
  switch (detect_format(text)) {
    case GraphFormat::EdgeList: return parse_edge_list(text);
    case GraphFormat::Named: return parse_named_graph(text).graph;
    case GraphFormat::Graph6: break;
  }
  return parse_graph6(trimmed(text));
}

std::vector<int> load_ints(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<int> out;
  for (std::string tok; in >> tok;) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(Errc::MalformedFile, path + ": expected integers, got '" + tok + "'");
    }
  }
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
  int workers = default_workers();

  std::string graph_path;
  int k = 3;

  std::string mode = "hakimi";
  std::string p_path;

  int essential = 0;

  std::string family;
  std::string block_path;
  int n = 1;

  int d = 4;
  bool all_graphs = false;
  bool count_only = false;

  bool allow_large = false;
  std::string checkpoint;
  int split_row = 4;

  std::string name;
  std::string to = "graph6";
  std::string report_path;
};

int run_decide(const Options& o) {
  const auto t = Clock::now();
  const Graph g = load_graph(o.graph_path);
  const Decision d = decide_star_decomposition(g, o.k);
  emit(run_report("decide", {{"graph", o.graph_path}, {"k", o.k}}, decision_json(g, d), seconds_since(t)));
  return decomposable(d) ? kExitOk : kExitNegative;
}

int run_check(const Options& o) {
  const auto t = Clock::now();
  const Graph g = load_graph(o.graph_path);
  Json report = Json::parse(read_text_file(o.report_path));
  const Json& payload = report.contains("outcome") ? report["outcome"] : report;
  const Decision d = decision_from_json(g, payload);
  Json outcome;
  bool ok = false;
  if (const auto* dec = std::get_if<StarDecomposition>(&d)) {
    const auto check = verify_decomposition(g, *dec);
    ok = check.ok;
    outcome = {{"payload", "decomposition"}, {"valid", ok}, {"violations", check.violations}};
  } else {
    ok = verify_certificate(g, std::get<NonDecomposabilityCertificate>(d));
    outcome = {{"payload", "certificate"}, {"valid", ok}};
  }
  emit(run_report("check", {{"graph", o.graph_path}, {"report", o.report_path}}, outcome, seconds_since(t)));
  return ok ? kExitOk : kExitError;
}

int run_orient(const Options& o) {
  const auto t = Clock::now();
  const Graph g = load_graph(o.graph_path);
  const std::vector<int> p = load_ints(o.p_path);
  if (static_cast<int>(p.size()) != g.order())
    throw Error(Errc::MalformedFile, "--p file has " + std::to_string(p.size()) + " values for " +
                                         std::to_string(g.order()) + " vertices");
  Json inputs{{"graph", o.graph_path}, {"mode", o.mode}, {"p", o.p_path}};
  if (o.mode == "hakimi") {
    const auto r = hakimi_orient(g, p);
    if (const auto* orient = std::get_if<Orientation>(&r)) {
      emit(run_report("orient", inputs, orientation_json(*orient), seconds_since(t)));
      return kExitOk;
    }
    emit(run_report("orient", inputs, violating_set_json(std::get<ViolatingSet>(r)), seconds_since(t)));
    return kExitNegative;
  }
  inputs["k"] = o.k;
  const auto r = mod_k_orientation(g, o.k, p);
  if (const auto* orient = std::get_if<Orientation>(&r)) {
    emit(run_report("orient", inputs, orientation_json(*orient), seconds_since(t)));
    return kExitOk;
  }
  emit(run_report("orient", inputs,
                  {{"result", "not-found"}, {"nodes", std::get<NotFound>(r).nodes}}, seconds_since(t)));
  return kExitNegative;
}

int run_connectivity(const Options& o) {
  const auto t = Clock::now();
  const Graph g = load_graph(o.graph_path);
  const auto policy = o.workers > 1 ? std::launch::async : std::launch::deferred;
  auto edge = std::async(policy, [&] { return edge_connectivity(g); });
  auto vertex = std::async(policy, [&] { return vertex_connectivity(g); });
  std::future<std::optional<CutCertificate>> essential;
  if (o.essential > 0) essential = std::async(policy, [&] { return essential_edge_connectivity_check(g, o.essential); });

  Json outcome;
  const auto e = edge.get();
  const auto v = vertex.get();
  outcome["edge_connectivity"] = {{"value", e.value}, {"cut", cut_json(e.cut)}};
  outcome["vertex_connectivity"] = {{"value", v.value}, {"cut", cut_json(v.cut)}};
  int status = kExitOk;
  if (o.essential > 0) {
    const auto cut = essential.get();
    Json ess{{"lambda", o.essential}, {"pass", !cut.has_value()}};
    if (cut) {
      ess["cut"] = cut_json(*cut);
      status = kExitNegative;
    }
    outcome["essential"] = ess;
  }
  Json inputs{{"graph", o.graph_path}};
  if (o.essential > 0) inputs["essential"] = o.essential;
  emit(run_report("connectivity", inputs, outcome, seconds_since(t)));
  return status;
}

int run_family(const Options& o) {
  const auto t = Clock::now();
  Json inputs{{"family", o.family}, {"n", o.n}};
  Graph g;
  PropertyReport report;
  if (o.family == "g48n") {
    BlockSpec spec;
    if (o.block_path.empty()) {
      spec = load_known_block();
    } else {
      spec = block_from_file(parse_named_graph(read_text_file(o.block_path)));
      inputs["block"] = o.block_path;
    }
    const BuiltGraph built = build_g48n(spec, o.n);
    g = built.graph;
    report = verify_g48n(g, built.rotation, o.n);
  } else if (o.family == "product") {
    inputs["k"] = o.k;
    g = build_product_family(o.k, o.n);
    report = verify_product_family(g, o.k, o.n);
  } else {
    throw Error(Errc::InvalidArgument, "unknown family '" + o.family + "' (g48n or product)");
  }
  Json outcome{{"graph6", write_graph6(g)}, {"order", g.order()}, {"size", g.size()},
               {"report", property_report_json(report)}};
  emit(run_report("family", inputs, outcome, seconds_since(t)));
  if (!report.all_pass()) {
    std::cerr << "error: ClaimFailed: a verification claim did not hold\n";
    return kExitError;
  }
  return kExitNegative;
}

int run_enumerate(const Options& o) {
  const auto t = Clock::now();
  const RegularGenerator gen(o.n, o.d, !o.all_graphs);
  const auto roots = gen.roots(o.split_row);
  std::vector<std::vector<std::string>> out(roots.size());
  std::vector<std::int64_t> counts(roots.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < roots.size();)
      counts[i] = gen.run_subtree(roots[i], [&](const CompactGraph& cg) {
        if (!o.count_only) out[i].push_back(write_graph6(cg.to_graph()));
      });
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::max(1, o.workers); ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::int64_t total = 0;
  for (auto c : counts) total += c;
  if (o.count_only) {
    emit(run_report("enumerate", {{"n", o.n}, {"d", o.d}, {"connected_only", !o.all_graphs}},
                    {{"count", total}}, seconds_since(t)));
  } else {
    for (const auto& chunk : out)
      for (const auto& line : chunk) std::cout << line << '\n';
  }
  return kExitOk;
}

int run_survey(const Options& o) {
  SurveyOptions opts;
  opts.workers = o.workers;
  opts.allow_large = o.allow_large;
  opts.checkpoint_path = o.checkpoint;
  opts.split_row = o.split_row;
  const SurveyReport r = survey_claw(o.n, opts);
  Json inputs{{"n", o.n}, {"workers", o.workers}};
  if (!o.checkpoint.empty()) inputs["checkpoint"] = o.checkpoint;
  emit(run_report("survey", inputs, survey_report_json(r), r.wall_seconds));
  return kExitOk;
}

int run_verify_known(const Options& o) {
  const auto t = Clock::now();
  const PropertyReport r = verify_known(o.name);
  emit(run_report("verify-known", {{"name", o.name}}, property_report_json(r), seconds_since(t)));
  if (!r.all_pass()) {
    std::cerr << "error: ClaimFailed: " << o.name << " does not satisfy its recorded claims\n";
    return kExitError;
  }
  return r.certificate ? kExitNegative : kExitOk;
}

int run_convert(const Options& o) {
  const Graph g = load_graph(o.graph_path);
  if (o.to == "graph6")
    std::cout << write_graph6(g) << '\n';
  else if (o.to == "edge-list")
    std::cout << write_edge_list(g);
  else if (o.to == "dot")
    std::cout << write_dot(g);
  else
    throw Error(Errc::InvalidArgument, "unknown target format '" + o.to + "'");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star decompositions, orientations and connectivity certificates for graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--workers", o.workers, "Worker threads (default from CLAWDEC_WORKERS, else 1)")
      ->check(CLI::PositiveNumber);

  auto* decide = app.add_subcommand("decide", "Find a k-star-decomposition or a certificate that none exists");
  decide->add_option("graph", o.graph_path, "Graph file (graph6, edge list or named)")->required();
  decide->add_option("--k", o.k, "Star size")->check(CLI::Range(1, 1000));

  auto* check = app.add_subcommand("check", "Re-verify a decide report against its graph");
  check->add_option("graph", o.graph_path)->required();
  check->add_option("report", o.report_path, "JSON written by decide")->required();

  auto* orient = app.add_subcommand("orient", "Budgeted or modulo-k orientation");
  orient->add_option("graph", o.graph_path)->required();
  orient->add_option("--mode", o.mode)->check(CLI::IsMember({"hakimi", "modk"}));
  orient->add_option("--p", o.p_path, "One integer per vertex")->required();
  orient->add_option("--k", o.k, "Modulus for --mode modk")->check(CLI::Range(1, 1000));

  auto* conn = app.add_subcommand("connectivity", "Edge and vertex connectivity with cut certificates");
  conn->add_option("graph", o.graph_path)->required();
  conn->add_option("--essential", o.essential, "Also test essential lambda-edge-connectivity")
      ->check(CLI::PositiveNumber);

  auto* family = app.add_subcommand("family", "Build and verify a counterexample family member");
  family->add_option("family", o.family, "g48n or product")->required()->check(CLI::IsMember({"g48n", "product"}));
  family->add_option("--block", o.block_path, "Block data file (default: registered block)");
  family->add_option("--n,--kn-cycles", o.n, "Family parameter n")->check(CLI::PositiveNumber);
  family->add_option("--k", o.k, "Star size for the product family");

  auto* enumerate = app.add_subcommand("enumerate", "Regular graphs up to isomorphism, one graph6 per line");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--d", o.d)->required();
  enumerate->add_flag("--all", o.all_graphs, "Include disconnected graphs");
  enumerate->add_flag("--count", o.count_only, "Print only the count, as JSON");
  enumerate->add_option("--split-row", o.split_row, "Depth at which the search is divided")
      ->check(CLI::Range(0, 32));

  auto* survey = app.add_subcommand("survey", "Claw-decomposability of all connected 4-regular graphs of order n");
  survey->add_option("--n", o.n)->required();
  survey->add_flag("--allow-large", o.allow_large, "Permit n >= 18");
  survey->add_option("--checkpoint", o.checkpoint, "Resume file of completed subtrees");
  survey->add_option("--split-row", o.split_row)->check(CLI::Range(0, 32));

  auto* known = app.add_subcommand("verify-known", "Re-check the claims attached to a registered graph");
  known->add_option("--name", o.name)->required();

  auto* convert = app.add_subcommand("convert", "Rewrite a graph file");
  convert->add_option("graph", o.graph_path)->required();
  convert->add_option("--to", o.to)->check(CLI::IsMember({"graph6", "edge-list", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*decide) return run_decide(o);
    if (*check) return run_check(o);
    if (*orient) return run_orient(o);
    if (*conn) return run_connectivity(o);
    if (*family) return run_family(o);
    if (*enumerate) return run_enumerate(o);
    if (*survey) return run_survey(o);
    if (*known) return run_verify_known(o);
    if (*convert) return run_convert(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
