#include "hodgeorbit/lines.hpp"

#include "hodgeorbit/error.hpp"
#include "hodgeorbit/reps.hpp"

#include <algorithm>

namespace hodgeorbit {

namespace {

int single_node(const RootSystem& rs, const std::vector<int>& I) {
    if (I.size() != 1) throw Error(ErrorCode::NotMaximalParabolic, "expected a single node");
    return normalize_index_set(rs, I)[0];
}

std::string known_name(const RootSystem& rs, int i, int dim) {
    const LieType& t = rs.lie_type();
    if (fundamental_adjoint_node(rs) != i) return "";
    switch (t.family) {
        case Family::B:
        case Family::D: return "P1 x Q" + std::to_string(dim - 1);
        case Family::E:
            if (t.rank == 6) return "Gr(3,6)";
            if (t.rank == 7) return "S6";
            return "E7/P7";
        case Family::F: return "LG(3,6)";
        case Family::G: return "v3(P1)";
        default: return "";
    }
}

}  // namespace

std::vector<int> lines_parabolic(const RootSystem& rs, const std::vector<int>& I) {
    const int i = single_node(rs, I);
    std::vector<int> out;
    for (int j = 1; j <= rs.rank(); ++j)
        if (j != i && rs.cartan()[i - 1][j - 1] != 0) out.push_back(j);
    return out;
}

std::vector<FlagDescriptor> co_descriptors(const RootSystem& rs, const std::vector<int>& I0) {
    const std::vector<int> I = normalize_index_set(rs, I0);
    std::vector<int> rest;
    for (int j = 1; j <= rs.rank(); ++j)
        if (!std::binary_search(I.begin(), I.end(), j)) rest.push_back(j);
    std::vector<std::vector<int>> sub(rest.size(), std::vector<int>(rest.size()));
    for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = 0; b < rest.size(); ++b) sub[a][b] = rs.cartan()[rest[a] - 1][rest[b] - 1];
    std::vector<DiagramComponent> comps = classify_cartan(sub);
    for (auto& c : comps)
        for (int& n : c.nodes) n = rest[n - 1];
    const auto sub_roots = positive_roots_from_cartan(sub);

    std::vector<FlagDescriptor> out;
    for (int i : I) {
        FlagDescriptor fd;
        fd.node = i;
        fd.subdiagram = comps;
        for (int j : rest)
            if (rs.cartan()[i - 1][j - 1] != 0) fd.marked_nodes.push_back(j);
        for (const auto& a : sub_roots) {
            int v = 0;
            for (std::size_t k = 0; k < rest.size(); ++k)
                if (std::binary_search(fd.marked_nodes.begin(), fd.marked_nodes.end(), rest[k])) v += a[k];
            if (v != 0) ++fd.dimension;
        }
        if (I.size() == 1) fd.display_name = known_name(rs, i, fd.dimension);
        if (fd.display_name.empty()) {
            fd.display_name = format_components(comps) + "/P{";
            for (std::size_t k = 0; k < fd.marked_nodes.size(); ++k)
                fd.display_name += (k ? "," : "") + std::to_string(fd.marked_nodes[k]);
            fd.display_name += "}";
        }
        out.push_back(std::move(fd));
    }
    return out;
}

FlagDescriptor co_descriptor(const RootSystem& rs, const std::vector<int>& I) {
    single_node(rs, I);
    return co_descriptors(rs, I).front();
}

bool cone_horizontal(const RootSystem& rs, const std::vector<int>& I) {
    const int i = single_node(rs, I);
    return rs.is_long(rs.simple_root(i));
}

bool co_membership_root_direction(const RootSystem& rs, const std::vector<int>& I, const Coords& beta) {
    const std::vector<int> idx = normalize_index_set(rs, I);
    if (!rs.is_root(beta)) throw Error(ErrorCode::NotARoot, "(" + format_coords(beta) + ") is not a root");
    const GradingElement E = GradingElement::from_index_set(rs.rank(), idx);
    if (E(beta) != 1) throw Error(ErrorCode::NotDegreeOne, "beta(E) = " + std::to_string(E(beta)));
    const Weight mu = sum_of_fundamentals(rs, idx);
    return coroot_pairing(rs, mu.root_coords(rs), beta) <= 1;
}

}  // namespace hodgeorbit
