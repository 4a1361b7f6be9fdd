#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "clawdec/graph.hpp"
#include "clawdec/orientation.hpp"

namespace clawdec {

enum class CertificateKind { IndependenceBound, CriterionExhausted };

// Evidence that a graph has no k-star-decomposition.
//
// IndependenceBound: `witness` is a maximum independent set, smaller than the
// `required` number of non-centres |V| - |E|/k.
// CriterionExhausted: every one of the `candidates_examined` independent sets
// of the required size failed the orientation test; the first few are kept.
struct NonDecomposabilityCertificate {
  CertificateKind kind = CertificateKind::IndependenceBound;
  int k = 0;
  int required = 0;
  VertexSet witness;
  std::int64_t candidates_examined = 0;
  std::vector<VertexSet> failing_examples;
};

inline constexpr std::size_t kKeptFailingSets = 10;

const char* certificate_kind_name(CertificateKind kind);

using Decision = std::variant<StarDecomposition, NonDecomposabilityCertificate>;

inline bool decomposable(const Decision& d) { return std::holds_alternative<StarDecomposition>(d); }

// Independent-set criterion for graphs with max degree <= 2k-1.
//
// For each independent S of size |V| - |E|/k (lexicographic order), the
// vertices outside S must all be centres of out-degree k. That holds iff
// G - S has exactly sum (d(v)-k) edges and can be oriented with in-degree
// at most d(v)-k; the orientation is completed by pointing every S-edge
// into S. The first S that passes wins.
//
// Throws SizeNotDivisible or MaxDegreeTooLarge when the hypotheses fail.
Decision decide_star_decomposition(const Graph& g, int k);

// Claw case for 4-regular graphs: S of size |V|/3 works iff every component
// of G - S is unicyclic. Throws NotFourRegular / SizeNotDivisible.
Decision decide_claw_4regular(const Graph& g);

struct ExactCoverOptions {
  std::int64_t node_limit = 50'000'000;
};

// Plain backtracking exact cover of the edge set by k-stars; the independent
// ground truth for the criterion. Throws SizeNotDivisible, BudgetExceeded.
std::variant<StarDecomposition, NotFound> exact_cover_oracle(const Graph& g, int k,
                                                             const ExactCoverOptions& options = {});

struct DecompositionCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks partition of E, centre incidence, star sizes and, when
// max degree <= 2k-1, that the non-centres are independent.
DecompositionCheck verify_decomposition(const Graph& g, const StarDecomposition& d);

// Re-derives a certificate's claims: the witness is independent and truly
// maximum (IndependenceBound), or the candidate count recounts.
bool verify_certificate(const Graph& g, const NonDecomposabilityCertificate& c);

}  // namespace clawdec
