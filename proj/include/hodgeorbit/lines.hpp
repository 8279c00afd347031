#pragma once

#include "hodgeorbit/grading.hpp"
#include "hodgeorbit/rootdata.hpp"

#include <string>
#include <vector>

namespace hodgeorbit {

struct FlagDescriptor {
    int node = 0;                                // the i in I this component belongs to
    std::vector<DiagramComponent> subdiagram;    // nodes are 1-based indices of the ambient diagram
    std::vector<int> marked_nodes;
    int dimension = 0;
    std::string display_name;                    // classical name when known, else homogeneous data
};

// Simple roots adjacent to alpha_i. Throws NotMaximalParabolic unless |I| = 1.
std::vector<int> lines_parabolic(const RootSystem& rs, const std::vector<int>& I);

// Variety of lines through a point of G/P for a maximal parabolic. Throws NotMaximalParabolic.
FlagDescriptor co_descriptor(const RootSystem& rs, const std::vector<int>& I);
// One descriptor per i in I for arbitrary I.
std::vector<FlagDescriptor> co_descriptors(const RootSystem& rs, const std::vector<int>& I);

// True iff alpha_i is a long root. Throws NotMaximalParabolic.
bool cone_horizontal(const RootSystem& rs, const std::vector<int>& I);

// For beta(E) = 1: true iff mu(H^beta) <= 1 with mu = sum_{i in I} omega_i. Throws NotDegreeOne.
bool co_membership_root_direction(const RootSystem& rs, const std::vector<int>& I, const Coords& beta);

}  // namespace hodgeorbit
