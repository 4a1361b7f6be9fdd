#pragma once

#include <span>
#include <vector>

#include "clawdec/graph.hpp"

namespace clawdec {

// Clockwise cyclic order of incident edge indices at every vertex.
using RotationSystem = std::vector<std::vector<int>>;

// Throws InvalidRotation unless every vertex lists each incident edge once.
void validate_rotation(const Graph& g, const RotationSystem& rot);

struct EmbeddingGenus {
  int faces = 0;
  int genus = 0;  // orientable genus g from V - E + F = 2 - 2g
};

// Traces faces (from edge e into w, continue with the rotation successor of e
// at w) and applies Euler's formula. Genus 0 certifies planarity.
// Throws InvalidRotation, Disconnected.
EmbeddingGenus genus_from_rotation(const Graph& g, const RotationSystem& rot);

// Rotation of a straight-line drawing: incident edges sorted clockwise by
// angle around each vertex.
RotationSystem rotation_from_coordinates(const Graph& g, std::span<const double> x,
                                         std::span<const double> y);

// The rotation of the relabelled graph g.relabeled(perm).
RotationSystem relabel_rotation(const RotationSystem& rot, std::span<const int> perm);

}  // namespace clawdec
