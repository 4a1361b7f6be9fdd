#include "clawdec/families.hpp"

#include <charconv>
#include <future>
#include <sstream>

#include "clawdec/connectivity.hpp"
#include "clawdec/independent.hpp"

namespace clawdec {
namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

int to_int(const std::string& tok, std::size_t line) {
  int value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw Error(Errc::MalformedFile, "line " + std::to_string(line + 1) + ": expected integer, got '" + tok + "'",
                static_cast<long>(line + 1));
  return value;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

NamedGraphFile parse_named_graph(std::string_view text) {
  const auto ls = split_lines(text);
  if (ls.size() < 2) throw Error(Errc::MalformedFile, "graph file needs a name line and an \"n m\" line");
  NamedGraphFile file;
  const auto name = words(ls[0]);
  if (name.size() != 1) throw Error(Errc::MalformedFile, "line 1: expected a single name token", 1);
  file.name = name[0];
  const auto header = words(ls[1]);
  if (header.size() != 2) throw Error(Errc::MalformedFile, "line 2: expected \"n m\"", 2);
  const int n = to_int(header[0], 1), m = to_int(header[1], 1);
  if (n < 0 || m < 0 || static_cast<std::size_t>(m) + 2 > ls.size())
    throw Error(Errc::MalformedFile, "line 2: bad counts", 2);
  std::vector<Edge> edges;
  for (int e = 0; e < m; ++e) {
    const auto w = words(ls[2 + e]);
    if (w.size() != 2) throw Error(Errc::MalformedFile, "line " + std::to_string(3 + e) + ": expected \"u v\"", 3 + e);
    edges.push_back({to_int(w[0], 2 + e), to_int(w[1], 2 + e)});
  }
  file.graph = Graph::from_edge_list(n, edges);
  RotationSystem rot;
  std::vector<bool> has_rot;
  for (std::size_t i = 2 + m; i < ls.size(); ++i) {
    const auto w = words(ls[i]);
    if (w.empty()) continue;
    if (w[0] == "label" && w.size() == 3) {
      file.labels.emplace_back(w[1], to_int(w[2], i));
    } else if (w[0] == "ext" && w.size() == 3) {
      file.external_positions.emplace_back(w[1], to_int(w[2], i));
    } else if (w[0] == "rot" && w.size() >= 2 && w[1].back() == ':') {
      if (rot.empty()) {
        rot.assign(n, {});
        has_rot.assign(n, false);
      }
      const int v = to_int(w[1].substr(0, w[1].size() - 1), i);
      if (v < 0 || v >= n || has_rot[v])
        throw Error(Errc::MalformedFile, "line " + std::to_string(i + 1) + ": bad rotation vertex", static_cast<long>(i + 1));
      has_rot[v] = true;
      for (std::size_t j = 2; j < w.size(); ++j) rot[v].push_back(to_int(w[j], i));
    } else {
      throw Error(Errc::MalformedFile, "line " + std::to_string(i + 1) + ": unrecognised '" + ls[i] + "'",
                  static_cast<long>(i + 1));
    }
  }
  if (!has_rot.empty()) {
    for (int v = 0; v < n; ++v)
      if (!has_rot[v]) throw Error(Errc::MalformedFile, "rotation missing for vertex " + std::to_string(v), v);
    file.rotation = std::move(rot);
  }
  for (const auto& [role, v] : file.labels)
    if (v < 0 || v >= n) throw Error(Errc::VertexOutOfRange, "label " + role + " -> " + std::to_string(v), v);
  return file;
}

std::string write_named_graph(const NamedGraphFile& file) {
  std::ostringstream out;
  out << file.name << '\n' << file.graph.order() << ' ' << file.graph.size() << '\n';
  for (const Edge& e : file.graph.edges()) out << e.u << ' ' << e.v << '\n';
  for (const auto& [role, v] : file.labels) out << "label " << role << ' ' << v << '\n';
  for (const auto& [role, pos] : file.external_positions) out << "ext " << role << ' ' << pos << '\n';
  if (file.rotation) {
    for (std::size_t v = 0; v < file.rotation->size(); ++v) {
      out << "rot " << v << ':';
      for (int e : (*file.rotation)[v]) out << ' ' << e;
      out << '\n';
    }
  }
  return out.str();
}

const char* link_end_name(LinkEnd end) {
  switch (end) {
    case LinkEnd::ZNext: return "z+";
    case LinkEnd::ZPrev: return "z-";
    case LinkEnd::X: return "x";
    case LinkEnd::A: return "a";
    case LinkEnd::Y: return "y";
    case LinkEnd::B: return "b";
  }
  return "?";
}

BlockSpec block_from_file(const NamedGraphFile& file) {
  BlockSpec spec;
  spec.block = file.graph;
  spec.rotation = file.rotation;
  for (const auto& [role, v] : file.labels) {
    if (role == "z") spec.z = v;
    else if (role == "x") spec.x = v;
    else if (role == "a") spec.a = v;
    else if (role == "y") spec.y = v;
    else if (role == "b") spec.b = v;
    else throw Error(Errc::BlockInvariantViolated, "unknown boundary label '" + role + "'");
  }
  for (const auto& [role, pos] : file.external_positions) {
    bool known = false;
    for (LinkEnd end : kLinkEnds)
      if (role == link_end_name(end)) {
        spec.insert_at[end] = pos;
        known = true;
      }
    if (!known) throw Error(Errc::BlockInvariantViolated, "unknown link end '" + role + "'");
  }
  return spec;
}

NamedGraphFile block_to_file(const BlockSpec& spec, const std::string& name) {
  NamedGraphFile file;
  file.name = name;
  file.graph = spec.block;
  file.labels = {{"z", spec.z}, {"x", spec.x}, {"a", spec.a}, {"y", spec.y}, {"b", spec.b}};
  for (LinkEnd end : kLinkEnds) {
    auto it = spec.insert_at.find(end);
    if (it != spec.insert_at.end()) file.external_positions.emplace_back(link_end_name(end), it->second);
  }
  file.rotation = spec.rotation;
  return file;
}

void check_block(const BlockSpec& spec) {
  auto fail = [](const std::string& why) { throw Error(Errc::BlockInvariantViolated, why); };
  const Graph& g = spec.block;
  if (g.order() != kBlockOrder) fail("block has " + std::to_string(g.order()) + " vertices, expected 16");
  if (!g.is_simple()) fail("block is not simple");
  const std::array<std::pair<const char*, int>, 5> roles{
      {{"z", spec.z}, {"x", spec.x}, {"a", spec.a}, {"y", spec.y}, {"b", spec.b}}};
  VertexSet boundary;
  for (const auto& [role, v] : roles) {
    if (v < 0 || v >= g.order()) fail(std::string("label ") + role + " missing or out of range");
    if (boundary.contains(v)) fail(std::string("label ") + role + " reuses a vertex");
    boundary.insert(v);
    const int want = std::string(role) == "z" ? 2 : 3;
    if (g.degree(v) != want)
      fail(std::string("deg(") + role + ") = " + std::to_string(g.degree(v)) + ", expected " + std::to_string(want));
  }
  for (int v = 0; v < g.order(); ++v)
    if (!boundary.contains(v) && g.degree(v) != 4)
      fail("interior vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
  if (!g.is_connected()) fail("block is disconnected");
  if (spec.rotation) {
    try {
      validate_rotation(g, *spec.rotation);
    } catch (const Error& e) {
      fail(std::string("block rotation: ") + e.what());
    }
    for (LinkEnd end : kLinkEnds) {
      auto it = spec.insert_at.find(end);
      if (it == spec.insert_at.end()) fail(std::string("insertion slot for ") + link_end_name(end) + " missing");
      const int final_degree = 4;
      if (it->second < 0 || it->second >= final_degree)
        fail(std::string("insertion slot for ") + link_end_name(end) + " out of range");
    }
    if (spec.insert_at.at(LinkEnd::ZNext) == spec.insert_at.at(LinkEnd::ZPrev))
      fail("z+ and z- share an insertion slot");
  }
}

BuiltGraph build_g48n(const BlockSpec& spec, int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive", n);
  check_block(spec);
  const int copies = 3 * n;
  if (copies * kBlockOrder > kMaxVertices)
    throw Error(Errc::UniverseExceeded, "G_48n with n = " + std::to_string(n), copies * kBlockOrder);
  const Graph& block = spec.block;
  const int m = block.size();
  auto at = [](int copy, int v) { return copy * kBlockOrder + v; };

  std::vector<Edge> edges;
  for (int i = 0; i < copies; ++i)
    for (const Edge& e : block.edges()) edges.push_back({at(i, e.u), at(i, e.v)});
  const int link_base = copies * m;
  for (int i = 0; i < copies; ++i) {
    const int j = (i + 1) % copies;
    edges.push_back({at(i, spec.z), at(j, spec.z)});
    edges.push_back({at(i, spec.x), at(j, spec.a)});
    edges.push_back({at(i, spec.y), at(j, spec.b)});
  }
  BuiltGraph built{Graph::from_edge_list(copies * kBlockOrder, edges), std::nullopt};

  if (spec.rotation) {
    RotationSystem rot(copies * kBlockOrder);
    for (int i = 0; i < copies; ++i) {
      const int prev = (i + copies - 1) % copies;
      auto link = [&](int copy, int which) { return link_base + 3 * copy + which; };
      // Link ends owned by each boundary vertex of copy i.
      std::map<int, std::vector<std::pair<int, int>>> slots;  // vertex -> (slot, edge)
      slots[spec.z].push_back({spec.insert_at.at(LinkEnd::ZNext), link(i, 0)});
      slots[spec.z].push_back({spec.insert_at.at(LinkEnd::ZPrev), link(prev, 0)});
      slots[spec.x].push_back({spec.insert_at.at(LinkEnd::X), link(i, 1)});
      slots[spec.a].push_back({spec.insert_at.at(LinkEnd::A), link(prev, 1)});
      slots[spec.y].push_back({spec.insert_at.at(LinkEnd::Y), link(i, 2)});
      slots[spec.b].push_back({spec.insert_at.at(LinkEnd::B), link(prev, 2)});
      for (int v = 0; v < kBlockOrder; ++v) {
        std::vector<int> inner;
        for (int e : (*spec.rotation)[v]) inner.push_back(i * m + e);
        std::vector<int> final_order(inner.size() + slots[v].size(), -1);
        for (const auto& [slot, e] : slots[v]) final_order[slot] = e;
        std::size_t next = 0;
        for (int& e : final_order)
          if (e < 0) e = inner[next++];
        rot[at(i, v)] = std::move(final_order);
      }
    }
    built.rotation = std::move(rot);
  }
  return built;
}

PropertyReport verify_g48n(const Graph& g, const std::optional<RotationSystem>& rot, int n) {
  PropertyReport report;
  report.subject = "G_" + std::to_string(48 * n);
  const int order = 48 * n;

  auto connectivity = std::async(std::launch::async, [&] {
    return g.is_connected() ? vertex_connectivity(g).value : 0;
  });
  auto essential = std::async(std::launch::async, [&]() -> std::optional<CutCertificate> {
    if (!is_two_connected(g)) return CutCertificate{CutKind::EssentialEdgeCut, {}, -1, false};
    return essential_edge_connectivity_check(g, 6);
  });

  report.add("simple", "yes", yes_no(g.is_simple()), g.is_simple());
  report.add("order", std::to_string(order), std::to_string(g.order()), g.order() == order);
  report.add("4-regular", "yes", yes_no(g.is_regular(4)), g.is_regular(4));
  report.add("size divisible by 3", std::to_string(96 * n),
             std::to_string(g.size()), g.size() == 96 * n && g.size() % 3 == 0);
  if (rot) {
    try {
      const auto genus = genus_from_rotation(g, *rot);
      report.add("genus", "0", std::to_string(genus.genus), genus.genus == 0);
    } catch (const Error& e) {
      report.add("genus", "0", e.what(), false);
    }
  } else {
    report.add("genus", "0", "no rotation supplied", false);
  }

  int block_sum = 0;
  bool blocks_ok = g.order() == order;
  std::string per_block;
  for (int i = 0; blocks_ok && i < 3 * n; ++i) {
    VertexSet copy;
    for (int v = 0; v < kBlockOrder; ++v) copy.insert(i * kBlockOrder + v);
    const int alpha = max_independent_set(g, copy).count();
    block_sum += alpha;
    if (alpha > 5) blocks_ok = false;
    per_block += (per_block.empty() ? "" : ",") + std::to_string(alpha);
  }
  report.add("independence per block <= 5", "<= 5", per_block, blocks_ok);
  const bool bound = blocks_ok && block_sum < 16 * n;
  report.add("independence bound < |V|/3", "< " + std::to_string(16 * n), std::to_string(block_sum), bound);

  const int kappa = connectivity.get();
  report.add("vertex connectivity", "4", std::to_string(kappa), kappa == 4);
  const auto cut = essential.get();
  if (cut && cut->size < 0) {
    report.add("essentially 6-edge-connected", "pass", "not 2-connected", false);
  } else {
    report.add("essentially 6-edge-connected", "pass",
               cut ? "cut of size " + std::to_string(cut->size) : "pass", !cut);
  }

  if (bound) {
    // Any claw decomposition needs |V|/3 independent non-centres.
    NonDecomposabilityCertificate cert;
    cert.kind = CertificateKind::IndependenceBound;
    cert.k = 3;
    cert.required = 16 * n;
    if (g.order() <= 64) cert.witness = max_independent_set(g);
    report.certificate = cert;
  }
  report.add("no claw-decomposition", "certificate", bound ? "IndependenceBound" : "none", bound);
  return report;
}

Graph build_product_family(int k, int n) {
  if (k < 4)
    throw Error(Errc::KTooSmall, "k = " + std::to_string(k) + " < 4; for k = 3 use the g48n block family", k);
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive", n);
  const long order = static_cast<long>(k) * n * (2 * k - 3);
  if (order > kMaxVertices) throw Error(Errc::UniverseExceeded, "product family order " + std::to_string(order), order);
  return cartesian_product(cycle_graph(k * n), complete_graph(2 * k - 3));
}

PropertyReport verify_product_family(const Graph& g, int k, int n) {
  PropertyReport report;
  report.subject = "C_" + std::to_string(k * n) + " x K_" + std::to_string(2 * k - 3);
  const int fiber = 2 * k - 3;
  const int order = k * n * fiber;
  const int degree = 2 * k - 2;

  auto connectivity = std::async(std::launch::async, [&] { return vertex_connectivity(g).value; });
  auto essential = std::async(std::launch::async, [&] { return essential_edge_connectivity_check(g, 4 * k - 6); });

  report.add("order", std::to_string(order), std::to_string(g.order()), g.order() == order);
  report.add("simple", "yes", yes_no(g.is_simple()), g.is_simple());
  report.add(std::to_string(degree) + "-regular", "yes", yes_no(g.is_regular(degree)), g.is_regular(degree));
  report.add("size (k-1)|V| divisible by k", std::to_string((k - 1) * order), std::to_string(g.size()),
             g.size() == (k - 1) * order && g.size() % k == 0);

  // Fibres {(c, h) : h} are cliques partitioning V, so an independent set
  // meets each at most once.
  bool fibers_are_cliques = g.order() == order;
  for (int c = 0; fibers_are_cliques && c < k * n; ++c)
    for (int h = 0; h < fiber; ++h)
      for (int h2 = h + 1; h2 < fiber; ++h2)
        if (!g.adjacent(c * fiber + h, c * fiber + h2)) fibers_are_cliques = false;
  const int fiber_bound = k * n;
  report.add("fibre bound alpha <= |V|/(2k-3)", "<= " + std::to_string(order / fiber),
             fibers_are_cliques ? std::to_string(fiber_bound) : "fibres are not cliques", fibers_are_cliques);

  const int required = order / k;
  std::optional<VertexSet> exact;
  if (g.order() <= 40) {
    exact = max_independent_set(g);
    report.add("exact alpha <= |V|/(2k-3)", "<= " + std::to_string(order / fiber), std::to_string(exact->count()),
               exact->count() <= order / fiber);
  }
  const int alpha_bound = exact ? exact->count() : fiber_bound;
  const bool certified = fibers_are_cliques && alpha_bound < required;
  if (certified) {
    NonDecomposabilityCertificate cert;
    cert.kind = CertificateKind::IndependenceBound;
    cert.k = k;
    cert.required = required;
    if (exact) cert.witness = *exact;
    report.certificate = cert;
  }
  report.add("no k-star-decomposition", "alpha < " + std::to_string(required),
             certified ? std::to_string(alpha_bound) + " < " + std::to_string(required) : "not certified", certified);

  const int kappa = connectivity.get();
  report.add("vertex connectivity", std::to_string(degree), std::to_string(kappa), kappa == degree);
  const auto cut = essential.get();
  report.add("essentially " + std::to_string(4 * k - 6) + "-edge-connected", "pass",
             cut ? "cut of size " + std::to_string(cut->size) : "pass", !cut);
  return report;
}

}  // namespace clawdec
