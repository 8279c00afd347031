#pragma once

#include "hodgeorbit/rootdata.hpp"

#include <map>
#include <vector>

namespace hodgeorbit {

// T = sum_i c_i S^i with S^i dual to the simple roots.
struct GradingElement {
    std::vector<int> coeffs;

    int operator()(const Coords& alpha) const;
    // E = sum_{i in I} S^i for a 1-based index set.
    static GradingElement from_index_set(int rank, const std::vector<int>& I);
    friend bool operator==(const GradingElement&, const GradingElement&) = default;
};

// Sorted, deduplicated, range-checked 1-based index set. Throws IndexOutOfRange.
std::vector<int> normalize_index_set(const RootSystem& rs, std::vector<int> I);

struct ParabolicData {
    std::vector<int> index_set;
    GradingElement grading_element;
    std::map<int, int> eigen_dims;  // p -> dim g^p, Cartan included at p = 0
    int cartan_part = 0;            // rank contribution to g^0
    int root_part = 0;              // #{alpha : alpha(E) = 0}
    int flag_dim = 0;
};

ParabolicData parabolic(const RootSystem& rs, const std::vector<int>& I);

// True iff I = {i} and the highest root equals omega_i. Also checks that
// highest_root - alpha_j is a root exactly for j = i.
bool is_fundamental_adjoint(const RootSystem& rs, const std::vector<int>& I);

// Node i with highest root = omega_i, or 0 if none.
int fundamental_adjoint_node(const RootSystem& rs);

struct Compactness {
    std::vector<Coords> compact;
    std::vector<Coords> noncompact;
};

Compactness classify_root_compactness(const RootSystem& rs, const GradingElement& E);

// #{alpha : alpha(S^i) = 1, alpha(T_w) <= 0}.
int schubert_dim_from_grading(const RootSystem& rs, int i, const GradingElement& Tw);

}  // namespace hodgeorbit
