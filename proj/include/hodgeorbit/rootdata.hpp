#pragma once

#include "hodgeorbit/rational.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace hodgeorbit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
    Family family = Family::A;
    int rank = 1;

    std::string name() const;
    bool simply_laced() const;
    friend bool operator==(const LieType&, const LieType&) = default;
};

// Parses names such as "G2", "e8", "B5". Throws InvalidType or InvalidRank.
LieType parse_lie_type(const std::string& text);
void check_rank(const LieType& t);

// Simple-root coordinates of a root or of an element of the root lattice.
using Coords = std::vector<int>;

struct CoordsHash {
    std::size_t operator()(const Coords& c) const noexcept;
};

Coords operator+(const Coords& a, const Coords& b);
Coords operator-(const Coords& a, const Coords& b);
Coords operator-(const Coords& a);
Coords operator*(int k, const Coords& a);
int height(const Coords& a);
std::string format_coords(const Coords& a, const char* sep = ",");

// Positive roots generated from a Cartan matrix with A[i][j] = alpha_i(H^{alpha_j}),
// sorted by height and then lexicographically.
std::vector<Coords> positive_roots_from_cartan(const std::vector<std::vector<int>>& cartan);

// A connected piece of a Dynkin diagram; nodes are 1-based positions in the input system.
struct DiagramComponent {
    LieType type;
    std::vector<int> nodes;
};

// Splits a Cartan matrix into connected components and names each one.
std::vector<DiagramComponent> classify_cartan(const std::vector<std::vector<int>>& cartan);
// "A1+B2" style label, components by decreasing rank; "0" for the empty diagram.
std::string format_components(const std::vector<DiagramComponent>& comps);

class RootSystem {
public:
    explicit RootSystem(const LieType& t);

    const LieType& lie_type() const { return type_; }
    int rank() const { return type_.rank; }
    // cartan()[i][j] = alpha_i(H^{alpha_j}), 0-based.
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    // (alpha_j, alpha_j) = 2 d_j, short roots have d = 1.
    const std::vector<int>& lengths() const { return d_; }
    const std::vector<Coords>& positive_roots() const { return positive_; }
    // Positive roots followed by their negatives in the same order.
    const std::vector<Coords>& roots() const { return roots_; }
    const Coords& highest_root() const { return highest_; }
    int num_positive() const { return static_cast<int>(positive_.size()); }
    int dim() const { return rank() + static_cast<int>(roots_.size()); }

    bool is_root(const Coords& c) const { return index_.count(c) != 0; }
    // Index into roots(), or -1.
    int index_of(const Coords& c) const;
    Coords simple_root(int i) const;  // 1-based

    // Symmetric form on the root lattice, (alpha_i, alpha_j) = d_j A_ij.
    long inner(const Coords& a, const Coords& b) const;
    // (alpha_i, v) for each i, i.e. d_i times the i-th fundamental coordinate of v.
    long inner_simple(int i, const Coords& v) const;
    bool is_long(const Coords& alpha) const;
    // beta(H^alpha) for beta in the root lattice; throws NotARoot when alpha is not a root.
    int pairing(const Coords& beta, const Coords& alpha) const;
    // H^alpha in the basis S^1..S^r dual to the simple roots.
    std::vector<int> coroot_in_S(const Coords& alpha) const;

private:
    LieType type_;
    std::vector<std::vector<int>> gram_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> d_;
    std::vector<Coords> positive_;
    std::vector<Coords> roots_;
    Coords highest_;
    std::unordered_map<Coords, int, CoordsHash> index_;
};

RootSystem build_root_system(const LieType& t);

// 2(beta, alpha)/(alpha, alpha) for a rational vector beta in simple-root coordinates.
Rational coroot_pairing(const RootSystem& rs, const std::vector<Rational>& beta, const Coords& alpha);
int coroot_pairing(const RootSystem& rs, const Coords& beta, const Coords& alpha);

// r_alpha(beta) = beta - beta(H^alpha) alpha.
Coords reflect(const RootSystem& rs, const Coords& alpha, const Coords& beta);

// Neither a+b nor a-b is a root and a(H^b) = 0.
bool strongly_orthogonal(const RootSystem& rs, const Coords& a, const Coords& b);

// -alpha + sum_i alpha(H^{beta_i}) beta_i. Throws NotStronglyOrthogonal.
Coords conjugate_root(const RootSystem& rs, const Coords& alpha, const std::vector<Coords>& B);

}  // namespace hodgeorbit
