#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairdist/graph.hpp"
#include "fairdist/group_fairness.hpp"
#include "fairdist/pricing.hpp"
#include "fairdist/rational.hpp"
#include "fairdist/set_system.hpp"

namespace fairdist {

// Uniform maximizes the common coverage probability p with every element
// covered with probability exactly p; Rawlsian maximizes the minimum coverage
// probability (every element covered with probability at least p).
enum class FairnessMeasure { Uniform, Rawlsian };

std::string to_string(FairnessMeasure m);
FairnessMeasure fairness_measure_from_string(const std::string& name);

struct DistributionEntry {
    std::vector<int> member;  // sorted ground-element ids
    Rational probability;     // strictly positive
};

// Probability distribution over family members; support is sorted by member
// and probabilities sum to 1.
struct Distribution {
    std::vector<DistributionEntry> support;
};

// Dual certificate of optimality: one price per ground element summing to -1,
// plus the normalization dual. Every family member m satisfies
// sum_{a in m} alpha_a + beta >= 0, with equality obtainable, so the optimal
// value equals beta against LP duality. Rawlsian prices are nonpositive.
struct DualPrices {
    std::vector<Rational> alpha;
    Rational beta;
};

struct FairnessResult {
    FairnessMeasure measure = FairnessMeasure::Uniform;
    Rational value;
    Distribution distribution;
    std::vector<Rational> coverage;  // per ground element, from the distribution
    int columns_generated = 0;       // columns added by pricing (0 for explicit solves)
    DualPrices certificate;
};

// Solves the fairness LP over the fully enumerated family. Throws
// InfeasibleError when no distribution attains uniform coverage (possible
// only for restricted families) and ModelError on an empty family.
FairnessResult solve_explicit(const ExplicitSetSystem& s, FairnessMeasure measure);

// Column generation: starts from initial_columns, alternates restricted
// master solves with pricing, and terminates exactly when the best reduced
// cost is nonnegative. An infeasible restricted master (uniform measure over
// a family without the empty member) is priced against its infeasibility
// certificate with the same oracle, which either makes progress or proves the
// full problem infeasible (InfeasibleError). Supported kinds: matching-edges,
// matching-vertices, independent-set; constraints only with
// matching-vertices, where the oracle must be the group-fair one. Throws
// std::logic_error mentioning "oracle violation" when the oracle returns a
// non-member and "no progress" when it repeats a column at negative reduced
// cost.
FairnessResult solve_colgen(const Graph& g, ProblemKind kind, FairnessMeasure measure,
                            const PricingOracle& oracle,
                            const GroupConstraints* constraints = nullptr);

// Warm-start columns: the empty member (when feasible) plus, for every ground
// element, one feasible member containing it (the least incident edge for the
// matching kinds, the singleton for independent sets, a constrained optimum
// probe under group constraints). Throws ModelError "element uncoverable:
// <label>" when some element lies in no feasible member and "empty restricted
// family" when constraints eliminate every member.
std::vector<std::vector<int>> initial_columns(const Graph& g, ProblemKind kind,
                                              const GroupConstraints* constraints = nullptr);

// Reversal transform for complement-closed families (vertex covers from
// independent sets): value becomes 1 - value, every support member is
// replaced by its complement in the ground set (same probability), coverage
// flips to 1 - coverage. The dual certificate of the underlying solve is
// carried unchanged.
FairnessResult transform_reversed(const FairnessResult& base, std::size_t ground_size);

// Draws `count` members independently from d using exact rejection sampling
// on a mt19937_64 stream, so results are identical across platforms. Throws
// ParseError when probabilities are negative or do not sum to exactly 1.
std::vector<std::vector<int>> sample(const Distribution& d, std::uint64_t seed, int count);

enum class SolveMethod { Auto, Exact, Colgen };

SolveMethod solve_method_from_string(const std::string& name);

struct ComputeOptions {
    SolveMethod method = SolveMethod::Auto;
    std::size_t cap = 100000;  // member cap for explicit enumeration
};

// Front door used by the CLI: routes vertex-cover through the complement
// transform of independent-set and clique through the complement graph,
// applies group constraints (matching kinds only; matching-edges only with
// explicit enumeration), and picks the method. Auto selects column generation
// for the matching kinds and for independence-system grounds with more than
// 20 vertices, explicit enumeration otherwise.
FairnessResult compute_fairness(const Graph& g, ProblemKind kind, FairnessMeasure measure,
                                const GroupConstraints* constraints = nullptr,
                                const ComputeOptions& opts = {});

}  // namespace fairdist
