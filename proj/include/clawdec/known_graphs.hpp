#pragma once

#include <string>
#include <vector>

#include "clawdec/families.hpp"
#include "clawdec/property_report.hpp"

namespace clawdec {

struct KnownGraphInfo {
  std::string name;
  std::string file;  // relative to the data directory
  std::string description;
};

// Registered names, in a fixed order.
const std::vector<KnownGraphInfo>& known_graph_registry();

// CLAWDEC_DATA_DIR from the environment, else the configured default.
std::string data_directory();

struct KnownGraph {
  KnownGraphInfo info;
  NamedGraphFile file;
};

// Throws InvalidArgument for an unregistered name, TranscriptionMissing when
// the data file is absent.
KnownGraph load_known_graph(const std::string& name);

// Re-checks every claim attached to the name. A failed claim points at the
// data file, not the code.
PropertyReport verify_known(const std::string& name);

// The 16-vertex block used by build_g48n. Throws TranscriptionMissing.
BlockSpec load_known_block();

}  // namespace clawdec
