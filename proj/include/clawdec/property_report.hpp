#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clawdec/star_decomposition.hpp"

namespace clawdec {

struct Claim {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

// Per-claim verification outcome for a family member or registered graph.
struct PropertyReport {
  std::string subject;
  std::vector<Claim> claims;
  std::optional<NonDecomposabilityCertificate> certificate;

  void add(std::string name, std::string expected, std::string observed, bool pass) {
    claims.push_back({std::move(name), std::move(expected), std::move(observed), pass});
  }
  bool all_pass() const {
    for (const Claim& c : claims)
      if (!c.pass) return false;
    return true;
  }
  const Claim* find(const std::string& name) const {
    for (const Claim& c : claims)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace clawdec
