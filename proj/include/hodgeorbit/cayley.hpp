#pragma once

#include "hodgeorbit/grading.hpp"
#include "hodgeorbit/reps.hpp"
#include "hodgeorbit/rootdata.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hodgeorbit {

// Ordered list of pairwise strongly orthogonal roots with beta(E) = 1.
using Sos = std::vector<Coords>;

std::string format_sos(const Sos& B);
// Sorted by height, then coordinates.
Sos canonical_sos(Sos B);

// Empty result means B is valid.
std::vector<std::string> validate_sos(const RootSystem& rs, const GradingElement& E, const Sos& B);

struct SosSearchResult {
    std::vector<Sos> maximal;  // maximal under inclusion among sets of size <= max_len
    int max_found = 0;
};

SosSearchResult search_sos(const RootSystem& rs, const GradingElement& E, int max_len);
// Every nonempty valid B up to reordering, in canonical form.
std::vector<Sos> enumerate_sos(const RootSystem& rs, const GradingElement& E);

// Largest pairwise strongly orthogonal set of roots with odd E-value.
int real_rank(const RootSystem& rs, const GradingElement& E);
// One maximizing set, for display.
Sos real_rank_witness(const RootSystem& rs, const GradingElement& E);

struct HodgeDeligneDiamond {
    std::map<std::pair<int, int>, int> entries;  // (p, q) -> dim; Cartan folded into (0, 0)
    int cartan_at_origin = 0;

    int at(int p, int q) const;
    int total() const;
    friend bool operator==(const HodgeDeligneDiamond&, const HodgeDeligneDiamond&) = default;
    friend bool operator<(const HodgeDeligneDiamond& a, const HodgeDeligneDiamond& b) { return a.entries < b.entries; }
};

// Throws InvalidSOS.
HodgeDeligneDiamond bigrading(const RootSystem& rs, const GradingElement& E, const Sos& B);
// (p, q) of a root: p = alpha(E), p + q = alpha(sum_j H^{beta_j}).
std::pair<int, int> root_bidegree(const RootSystem& rs, const GradingElement& E, const Sos& B, const Coords& alpha);
// Roots with p >= 1 and q >= 1.
std::vector<Coords> plus_plus_roots(const RootSystem& rs, const GradingElement& E, const Sos& B);

struct OrbitInvariants {
    int codim = 0;
    std::optional<int> k_dim;
    std::optional<int> mu;
    std::string lmhs_type;
};

// Template matching against the type I-IV patterns. Family is needed to split II into IIa/IIb.
std::string lmhs_type(const LieType& t, const HodgeDeligneDiamond& d);

OrbitInvariants orbit_invariants(const RootSystem& rs, const GradingElement& E, const Sos& B);

// Among singletons {beta} with beta(E) = 1 exactly one W(g^0)-orbit gives c = 1 and it contains alpha_i.
bool codim_one_uniqueness_check(const RootSystem& rs, int i);

struct WeightGradingReport {
    std::vector<int> h_in_S;        // H^{alpha_i} in the S basis
    std::map<int, int> h_dims;      // l -> dim g_l (H^{alpha_i}-eigenspaces, Cartan at 0)
    std::map<int, int> e_dims;      // p -> dim g^p for E = S^i
    bool flip_holds = false;        // dim g_l == dim g^{-l} for all l
};

// Throws NotFundamentalAdjoint.
WeightGradingReport weight_grading_dims(const RootSystem& rs, int i);

// Simple-reflection indices (1-based), applied left to right, carrying -alpha_i to the highest root.
// Throws LengthMismatch.
std::vector<int> weyl_flip(const RootSystem& rs, int i);
Coords apply_word(const RootSystem& rs, const std::vector<int>& word, Coords alpha);
// Checks that the flip maps {alpha(H^{alpha_i}) = l} onto {alpha(S^i) = -l} for every l.
bool weyl_flip_bijection_holds(const RootSystem& rs, int i);

struct EnhancedSl2Descriptor {
    std::vector<Coords> gamma_roots;           // Delta(Gamma_B), all signs
    std::vector<DiagramComponent> gamma_type;  // nodes index gamma_simple
    std::vector<Coords> gamma_simple;
    int dim_X = 0;
    bool horizontal = false;
};

EnhancedSl2Descriptor enhanced_sl2_descriptor(const RootSystem& rs, const GradingElement& E, const Sos& B);

// lambda(H^beta).
Rational restriction_pairing(const RootSystem& rs, const Weight& lambda, const Coords& beta);

struct CensusEntry {
    Sos representative;
    HodgeDeligneDiamond diamond;
    OrbitInvariants invariants;
    int inequivalent_count = 0;  // W(g^0)-classes of B realizing this diamond
};

// Requires a fundamental adjoint node. Sorted by c, then mu.
std::vector<CensusEntry> boundary_census(const RootSystem& rs, int i);

}  // namespace hodgeorbit
