#include "hodgeorbit/grading.hpp"

#include "hodgeorbit/error.hpp"

#include <algorithm>

namespace hodgeorbit {

int GradingElement::operator()(const Coords& alpha) const {
    int s = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) s += coeffs[j] * alpha[j];
    return s;
}

GradingElement GradingElement::from_index_set(int rank, const std::vector<int>& I) {
    GradingElement E{std::vector<int>(rank, 0)};
    for (int i : I) {
        if (i < 1 || i > rank) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
        E.coeffs[i - 1] = 1;
    }
    return E;
}

std::vector<int> normalize_index_set(const RootSystem& rs, std::vector<int> I) {
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    if (I.empty()) throw Error(ErrorCode::IndexOutOfRange, "empty index set");
    for (int i : I)
        if (i < 1 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
    return I;
}

ParabolicData parabolic(const RootSystem& rs, const std::vector<int>& I) {
    ParabolicData pd;
    pd.index_set = normalize_index_set(rs, I);
    pd.grading_element = GradingElement::from_index_set(rs.rank(), pd.index_set);
    pd.cartan_part = rs.rank();
    pd.eigen_dims[0] = rs.rank();
    for (const auto& a : rs.roots()) {
        int p = pd.grading_element(a);
        pd.eigen_dims[p] += 1;
        if (p == 0) ++pd.root_part;
        if (p > 0) ++pd.flag_dim;
    }
    return pd;
}

bool is_fundamental_adjoint(const RootSystem& rs, const std::vector<int>& I) {
    if (I.size() != 1) return false;
    const int i = I[0];
    if (i < 1 || i > rs.rank()) return false;
    const Coords& top = rs.highest_root();
    for (int j = 1; j <= rs.rank(); ++j)
        if (rs.pairing(top, rs.simple_root(j)) != (j == i ? 1 : 0)) return false;
    for (int j = 1; j <= rs.rank(); ++j)
        if (rs.is_root(top - rs.simple_root(j)) != (j == i))
            throw Error(ErrorCode::Internal, "highest root property fails at node " + std::to_string(j));
    return true;
}

int fundamental_adjoint_node(const RootSystem& rs) {
    for (int i = 1; i <= rs.rank(); ++i)
        if (is_fundamental_adjoint(rs, {i})) return i;
    return 0;
}

Compactness classify_root_compactness(const RootSystem& rs, const GradingElement& E) {
    Compactness c;
    for (const auto& a : rs.roots()) {
        if (E(a) % 2 == 0)
            c.compact.push_back(a);
        else
            c.noncompact.push_back(a);
    }
    return c;
}

int schubert_dim_from_grading(const RootSystem& rs, int i, const GradingElement& Tw) {
    if (i < 1 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
    int count = 0;
    for (const auto& a : rs.roots())
        if (a[i - 1] == 1 && Tw(a) <= 0) ++count;
    return count;
}

}  // namespace hodgeorbit
