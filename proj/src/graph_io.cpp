#include "clawdec/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace clawdec {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view tok, long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size())
      throw Error(Errc::MalformedGraph6, "truncated at byte " + std::to_string(i), static_cast<long>(i));
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw Error(Errc::MalformedGraph6, "byte " + std::to_string(i) + " out of range", static_cast<long>(i));
    return c - 63;
  };
  long n = 0;
  if (pos < text.size() && text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw Error(Errc::MalformedGraph6, "order too large for this universe", static_cast<long>(pos));
    for (int i = 1; i <= 3; ++i) n = (n << 6) | byte_at(pos + i);
    if (n < 63)
      throw Error(Errc::MalformedGraph6, "non-minimal size header", static_cast<long>(pos));
    pos += 4;
  } else {
    n = byte_at(pos);
    pos += 1;
  }
  if (n > kMaxVertices)
    throw Error(Errc::UniverseExceeded, "graph6 order " + std::to_string(n), n);
  const long bits = n * (n - 1) / 2;
  const long nbytes = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != nbytes)
    throw Error(Errc::MalformedGraph6,
                "expected " + std::to_string(nbytes) + " data bytes, got " +
                    std::to_string(text.size() - pos),
                static_cast<long>(text.size() < pos + nbytes ? text.size() : pos + nbytes));
  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (k % 6 != 0) {
    const int chunk = byte_at(pos + k / 6);
    if (chunk & ((1 << (6 - k % 6)) - 1))
      throw Error(Errc::MalformedGraph6, "nonzero padding bits", static_cast<long>(pos + k / 6));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  if (!g.is_simple()) throw Error(Errc::NotSimple, "graph6 encodes simple graphs only");
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  const auto ls = lines(text);
  std::size_t li = 0;
  auto next_content = [&]() -> std::vector<std::string_view> {
    while (li < ls.size()) {
      auto t = tokens(ls[li++]);
      if (!t.empty()) return t;
    }
    return {};
  };
  auto header = next_content();
  long n = 0, m = 0;
  if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m) || n < 0 || m < 0)
    throw Error(Errc::MalformedFile, "edge list header must be \"n m\"", static_cast<long>(li));
  std::vector<Edge> edges;
  for (long e = 0; e < m; ++e) {
    auto t = next_content();
    long u = 0, v = 0;
    if (t.size() != 2 || !parse_int(t[0], u) || !parse_int(t[1], v))
      throw Error(Errc::MalformedFile, "bad edge line " + std::to_string(li), static_cast<long>(li));
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (!next_content().empty())
    throw Error(Errc::MalformedFile, "trailing content after " + std::to_string(m) + " edges",
                static_cast<long>(li));
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string write_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

GraphFormat detect_format(std::string_view text) {
  std::vector<std::vector<std::string_view>> content;
  for (auto line : lines(text)) {
    auto t = tokens(line);
    if (!t.empty()) content.push_back(t);
    if (content.size() == 2) break;
  }
  auto is_pair = [](const std::vector<std::string_view>& t) {
    long a = 0, b = 0;
    return t.size() == 2 && parse_int(t[0], a) && parse_int(t[1], b);
  };
  if (!content.empty() && is_pair(content[0])) return GraphFormat::EdgeList;
  if (content.size() == 2 && content[0].size() == 1 && is_pair(content[1])) return GraphFormat::Named;
  return GraphFormat::Graph6;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::MalformedFile, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace clawdec
