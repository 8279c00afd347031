#pragma once

#include "hodgeorbit/grading.hpp"
#include "hodgeorbit/rational.hpp"
#include "hodgeorbit/rootdata.hpp"

#include <array>
#include <map>
#include <vector>

namespace hodgeorbit {

// Sparse element of g in the Chevalley basis. Index k < |Delta| is x^{roots()[k]};
// index |Delta| + j is H^{alpha_{j+1}}.
template <class T>
using Element = std::map<int, T>;

template <class T>
void add_scaled(Element<T>& acc, const Element<T>& x, const T& c) {
    for (const auto& [k, v] : x) {
        T& slot = acc[k];
        slot += c * v;
        if (slot == T(0)) acc.erase(k);
    }
}

class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& rs);

    const RootSystem& root_system() const { return rs_; }
    int dim() const { return rs_.dim(); }
    int num_roots() const { return static_cast<int>(rs_.roots().size()); }
    int root_index(const Coords& alpha) const;  // throws NotARoot
    int cartan_index(int j) const { return num_roots() + j - 1; }  // 1-based j
    bool is_cartan(int k) const { return k >= num_roots(); }

    // N_{alpha,beta} for root indices; 0 when alpha + beta is not a root.
    int N(int a, int b) const { return n_[a][b]; }
    int N(const Coords& a, const Coords& b) const { return n_[root_index(a)][root_index(b)]; }

    // [e_a, e_b] for basis indices, integer coefficients.
    const Element<long>& bracket_basis(int a, int b) const { return table_[a][b]; }

    template <class T>
    Element<T> bracket(const Element<T>& x, const Element<T>& y) const {
        Element<T> out;
        for (const auto& [a, xa] : x)
            for (const auto& [b, yb] : y) {
                const T c = xa * yb;
                for (const auto& [k, v] : table_[a][b]) {
                    T& slot = out[k];
                    slot += c * T(static_cast<int>(v));
                    if (slot == T(0)) out.erase(k);
                }
            }
        return out;
    }

    template <class T>
    Element<T> basis(int k) const {
        return Element<T>{{k, T(1)}};
    }

private:
    int compute_N(const Coords& a, const Coords& b, std::map<std::pair<int, int>, int>& memo) const;
    int special(int a, int b, std::map<std::pair<int, int>, int>& memo) const;

    RootSystem rs_;
    std::vector<std::vector<int>> n_;
    std::vector<std::vector<Element<long>>> table_;
};

StructureConstants structure_constants(const RootSystem& rs);

// Dense dim x dim matrix of ad(xi); column k holds [xi, e_k].
std::vector<std::vector<long>> adjoint_matrix(const StructureConstants& sc, const Element<long>& xi);

// tr(ad x ad y).
Gaussian killing_form(const StructureConstants& sc, const Element<Gaussian>& x, const Element<Gaussian>& y);

// Sum of the three Jacobi terms for basis indices.
Element<long> jacobi_residual(const StructureConstants& sc, int a, int b, int c);

struct RationalFormBasis {
    struct Vector {
        Element<Gaussian> coords;
        bool in_k = false;  // k when true, k-perp otherwise
        std::string label;  // "h1", "u(0,1)", "v(0,1)"
    };
    GradingElement T;
    std::vector<Vector> basis;

    int dim_k() const;
    int dim_k_perp() const;
};

// h^j = i H^{alpha_j}; u^alpha, v^alpha for alpha > 0 as fixed by the parity of alpha(T).
RationalFormBasis rational_form(const StructureConstants& sc, const GradingElement& T);

// Coefficients of x with respect to the basis of rational_form.
std::vector<Gaussian> rational_coordinates(const StructureConstants& sc, const RationalFormBasis& rf,
                                           const Element<Gaussian>& x);

// theta = (-1)^{alpha(T)} on root spaces, identity on the Cartan.
Element<Gaussian> cartan_involution(const StructureConstants& sc, const GradingElement& T, const Element<Gaussian>& x);

struct StandardTriple {
    Element<Gaussian> y_plus;   // y^beta
    Element<Gaussian> neutral;  // H'
    Element<Gaussian> y_minus;  // y^{-beta}
};

// Throws CompactRoot when beta(T) is even.
StandardTriple cayley_standard_triple(const StructureConstants& sc, const GradingElement& T, const Coords& beta);

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    const std::size_t n = a.size(), m = b.front().size(), k = b.size();
    Matrix<T> c(n, std::vector<T>(m, T(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == T(0)) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

template <class T>
Matrix<T> mat_commutator(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> ab = mat_mul(a, b), ba = mat_mul(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab[i].size(); ++j) ab[i][j] -= ba[i][j];
    return ab;
}

// A matrix representation: one matrix per Chevalley basis element.
struct Representation {
    std::vector<Coords> weights;          // weight of each basis vector, simple-root coordinates
    std::vector<Matrix<Rational>> basis;  // indexed like the Chevalley basis

    template <class T>
    Matrix<T> image(const Element<T>& x) const {
        const std::size_t n = weights.size();
        Matrix<T> m(n, std::vector<T>(n, T(0)));
        for (const auto& [k, c] : x)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (basis[k][i][j] != 0) m[i][j] += c * T(basis[k][i][j]);
        return m;
    }
};

// Checks [rho(e_a), rho(e_b)] = rho([e_a, e_b]) for all basis pairs.
bool is_representation(const StructureConstants& sc, const Representation& rep);

// Defining representation of sl2 on C^2: x = E_12, x^- = E_21, H = diag(1,-1).
Representation a1_defining_rep(const StructureConstants& sc);

// The 7-dimensional representation of g2 in a weight basis ordered by decreasing height.
// Throws Internal if no sign assignment satisfies the defining relations.
Representation g2_seven_dim_rep(const StructureConstants& sc);

// xi = xi0 x^{-a2} + xi1 x^{-a1-a2} + xi2 x^{-2a1-a2} + xi3 x^{-3a1-a2}.
using G2Xi = std::array<Rational, 4>;

Element<Rational> g2_xi_element(const StructureConstants& sc, const G2Xi& xi);
// xi^2 from the E = S^2 eigenvalue 1 part of V7 to the eigenvalue -1 part.
Matrix<Rational> g2_yukawa_matrix(const StructureConstants& sc, const Representation& v7, const G2Xi& xi);
// (ad xi)^2 x^{3a1+2a2}, coordinates on x^{a1}, x^{-a1}, H^{a1}, H^{a2}.
std::array<Rational, 4> g2_second_fundamental_form(const StructureConstants& sc, const G2Xi& xi);
// s^3 exp((t/s) ad x^{-a1}) x^{-a2}, homogenized so s = 0 is allowed.
G2Xi g2_cone_point(const StructureConstants& sc, const Rational& s, const Rational& t);

// |z|^2 for exp(i t y^{-alpha}) applied to (1 : i) in the sl2 model, z the disc coordinate.
Rational a1_disc_modulus_squared(const Rational& t);

}  // namespace hodgeorbit
