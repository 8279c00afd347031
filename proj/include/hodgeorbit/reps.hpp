#pragma once

#include "hodgeorbit/grading.hpp"
#include "hodgeorbit/rootdata.hpp"

#include <map>
#include <vector>

namespace hodgeorbit {

// Integral weight in fundamental-weight coordinates.
using IntWeight = std::vector<int>;

struct Weight {
    std::vector<Rational> fund;

    static Weight from_ints(const IntWeight& w);
    bool is_integral() const;
    bool is_dominant() const;
    IntWeight to_ints() const;  // requires is_integral()
    // Simple-root coordinates: fund * A^{-1}.
    std::vector<Rational> root_coords(const RootSystem& rs) const;
    friend bool operator==(const Weight&, const Weight&) = default;
};

std::string format_weight(const Weight& w);

// (A^{-1})_{ij}, so omega_i = sum_j (A^{-1})_{ij} alpha_j.
std::vector<std::vector<Rational>> inverse_cartan(const RootSystem& rs);

std::vector<Weight> fundamental_weights(const RootSystem& rs);
Weight sum_of_fundamentals(const RootSystem& rs, const std::vector<int>& I);

// lambda(T) for a grading element T.
Rational evaluate(const RootSystem& rs, const Weight& lambda, const GradingElement& T);

// Fundamental coordinates of a root: alpha(H^{alpha_j}).
IntWeight root_to_weight(const RootSystem& rs, const Coords& alpha);
IntWeight dominant_representative(const RootSystem& rs, IntWeight w);
// lambda* = -w_0 lambda.
Weight dual_weight(const RootSystem& rs, const Weight& lambda);

// Dominant integral lambda with lambda(E) = 1. Requires E = sum_{i in I} S^i with I nonempty.
std::vector<Weight> weights_with_E_value_one(const RootSystem& rs, const GradingElement& E);

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

// HODGEORBIT_DIM_CAP if set, else 10^6.
long long dimension_cap();

struct WeightMultiset {
    Weight highest;
    std::map<IntWeight, long long> dominant;  // dominant weights only
    std::map<IntWeight, long long> entries;   // every weight
    long long total = 0;
};

// Throws NotDominant or DimensionCapExceeded. cap < 0 means dimension_cap().
WeightMultiset freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda, long long cap = -1);

// Eigenvalue of E -> dimension of the eigenspace in V_lambda.
std::map<Rational, long long> rep_hodge_numbers(const RootSystem& rs, const Weight& lambda,
                                                const GradingElement& E);
// The dimensions listed from the top eigenvalue down.
std::vector<long long> hodge_sequence(const std::map<Rational, long long>& h);

struct EmbeddingDegree {
    int n = 0;
    BigInt d;
    BigInt N;
};

// Closed product formula; cross-checked against a Hilbert-polynomial fit (Internal error on mismatch).
EmbeddingDegree embedding_degree(const RootSystem& rs, const std::vector<int>& I);
BigInt degree_by_product(const RootSystem& rs, const Weight& mu, int n);
// n-th finite difference at 0 of k -> dim V(k mu), which is n! times the leading coefficient.
BigInt degree_by_hilbert_fit(const RootSystem& rs, const Weight& mu, int n);

}  // namespace hodgeorbit
