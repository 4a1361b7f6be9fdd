#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clawdec/graph.hpp"
#include "clawdec/property_report.hpp"
#include "clawdec/rotation.hpp"

namespace clawdec {

// Plain-text graph data file:
//
//   <name>
//   n m
//   u v                  (m lines)
//   label <role> <v>     (optional)
//   ext <role> <pos>     (optional, blocks only)
//   rot <v>: e1 e2 ...   (optional, one per vertex, clockwise)
//
// write_named_graph(parse_named_graph(t)) == t for every file this writer
// produced.
struct NamedGraphFile {
  std::string name;
  Graph graph;
  std::vector<std::pair<std::string, int>> labels;
  std::vector<std::pair<std::string, int>> external_positions;
  std::optional<RotationSystem> rotation;
};

NamedGraphFile parse_named_graph(std::string_view text);
std::string write_named_graph(const NamedGraphFile& file);

// Roles of the six inter-block edge-ends at the boundary vertices.
enum class LinkEnd { ZNext, ZPrev, X, A, Y, B };
inline constexpr std::array<LinkEnd, 6> kLinkEnds{LinkEnd::ZNext, LinkEnd::ZPrev, LinkEnd::X,
                                                  LinkEnd::A,     LinkEnd::Y,     LinkEnd::B};
const char* link_end_name(LinkEnd end);  // "z+", "z-", "x", "a", "y", "b"

// The 16-vertex building block with boundary vertices z, x, a, y, b.
// `insert_at` gives, for each link end, its index in the final clockwise
// rotation of its boundary vertex once the inter-block edges are attached.
struct BlockSpec {
  Graph block;
  int z = -1, x = -1, a = -1, y = -1, b = -1;
  std::optional<RotationSystem> rotation;
  std::map<LinkEnd, int> insert_at;
};

inline constexpr int kBlockOrder = 16;

BlockSpec block_from_file(const NamedGraphFile& file);
NamedGraphFile block_to_file(const BlockSpec& spec, const std::string& name);

// Throws BlockInvariantViolated naming the failed condition.
void check_block(const BlockSpec& spec);

struct BuiltGraph {
  Graph graph;
  std::optional<RotationSystem> rotation;
};

// 3n copies of the block; copy i occupies vertices 16i..16i+15. For every
// i in Z_3n adds z_i z_{i+1}, x_i a_{i+1}, y_i b_{i+1}. The rotation, when
// the block carries one, splices the link ends in at their insert_at slots.
BuiltGraph build_g48n(const BlockSpec& spec, int n);

PropertyReport verify_g48n(const Graph& g, const std::optional<RotationSystem>& rot, int n);

// C_{kn} x K_{2k-3}. Throws KTooSmall for k < 4 (k = 3 is the block family),
// UniverseExceeded.
Graph build_product_family(int k, int n);

PropertyReport verify_product_family(const Graph& g, int k, int n);

}  // namespace clawdec
