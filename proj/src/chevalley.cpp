#include "hodgeorbit/chevalley.hpp"

#include "hodgeorbit/error.hpp"
#include "hodgeorbit/reps.hpp"

#include <algorithm>
#include <functional>

namespace hodgeorbit {

namespace {

int exact_div(const Rational& num, const std::string& what) {
    if (!is_integer(num)) throw Error(ErrorCode::Internal, "non-integral structure constant in " + what);
    return static_cast<int>(boost::multiprecision::numerator(num));
}

}  // namespace

StructureConstants::StructureConstants(const RootSystem& rs) : rs_(rs) {
    const int n2 = num_roots();
    const auto& roots = rs_.roots();
    n_.assign(n2, std::vector<int>(n2, 0));
    std::map<std::pair<int, int>, int> memo;
    for (int a = 0; a < n2; ++a)
        for (int b = 0; b < n2; ++b) n_[a][b] = compute_N(roots[a], roots[b], memo);

    const int r = rs_.rank();
    const int total = dim();
    table_.assign(total, std::vector<Element<long>>(total));
    for (int a = 0; a < n2; ++a) {
        const long da = rs_.inner(roots[a], roots[a]) / 2;
        for (int b = 0; b < n2; ++b) {
            const Coords s = roots[a] + roots[b];
            if (std::all_of(s.begin(), s.end(), [](int x) { return x == 0; })) {
                for (int j = 0; j < r; ++j) {
                    const long c = roots[a][j] * static_cast<long>(rs_.lengths()[j]);
                    if (c % da != 0) throw Error(ErrorCode::Internal, "non-integral coroot");
                    if (c != 0) table_[a][b][n2 + j] = c / da;
                }
            } else if (n_[a][b] != 0) {
                table_[a][b][rs_.index_of(s)] = n_[a][b];
            }
        }
        for (int j = 0; j < r; ++j) {
            const int v = rs_.pairing(roots[a], rs_.simple_root(j + 1));
            if (v != 0) {
                table_[n2 + j][a][a] = v;
                table_[a][n2 + j][a] = -v;
            }
        }
    }
}

int StructureConstants::root_index(const Coords& alpha) const {
    const int k = rs_.index_of(alpha);
    if (k < 0) throw Error(ErrorCode::NotARoot, "(" + format_coords(alpha) + ") is not a root");
    return k;
}

int StructureConstants::compute_N(const Coords& a, const Coords& b, std::map<std::pair<int, int>, int>& memo) const {
    const Coords s = a + b;
    if (!rs_.is_root(s)) return 0;
    const bool ap = height(a) > 0, bp = height(b) > 0;
    if (ap && bp) {
        const int ia = rs_.index_of(a), ib = rs_.index_of(b);
        return ia < ib ? special(ia, ib, memo) : -special(ib, ia, memo);
    }
    if (!ap && !bp) return -compute_N(-a, -b, memo);
    // a + b + c = 0 gives N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
    const Coords c = -s;
    const long aa = rs_.inner(a, a), bb = rs_.inner(b, b), cc = rs_.inner(c, c);
    Rational v;
    if (height(c) > 0) {
        v = ap ? Rational(cc * compute_N(c, a, memo)) / bb : Rational(cc * compute_N(b, c, memo)) / aa;
    } else {
        v = ap ? Rational(-cc * compute_N(-b, -c, memo)) / aa : Rational(-cc * compute_N(-c, -a, memo)) / bb;
    }
    return exact_div(v, "cyclic relation");
}

int StructureConstants::special(int ia, int ib, std::map<std::pair<int, int>, int>& memo) const {
    auto it = memo.find({ia, ib});
    if (it != memo.end()) return it->second;
    const auto& pos = rs_.positive_roots();
    const Coords& a = pos[ia];
    const Coords& b = pos[ib];
    const Coords xi = a + b;
    int e1 = 0;
    while (!rs_.is_root(xi - pos[e1]) || height(xi - pos[e1]) <= 0) ++e1;
    int value;
    if (e1 == ia) {
        int p = 0;
        while (rs_.is_root(b - (p + 1) * a)) ++p;
        value = p + 1;
    } else {
        const Coords& r1 = pos[e1];
        const Coords s1 = xi - r1;
        const int n_extra = special(e1, rs_.index_of(s1), memo);
        Rational acc = 0;
        if (rs_.is_root(b - r1))
            acc += Rational(compute_N(b, -r1, memo) * compute_N(a, -s1, memo)) / rs_.inner(b - r1, b - r1);
        if (rs_.is_root(a - r1))
            acc += Rational(compute_N(-r1, a, memo) * compute_N(b, -s1, memo)) / rs_.inner(a - r1, a - r1);
        value = exact_div(acc * rs_.inner(xi, xi) / n_extra, "special pair");
    }
    memo[{ia, ib}] = value;
    return value;
}

StructureConstants structure_constants(const RootSystem& rs) { return StructureConstants(rs); }

std::vector<std::vector<long>> adjoint_matrix(const StructureConstants& sc, const Element<long>& xi) {
    const int n = sc.dim();
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int k = 0; k < n; ++k)
        for (const auto& [row, v] : sc.bracket(xi, sc.basis<long>(k))) m[row][k] = v;
    return m;
}

Gaussian killing_form(const StructureConstants& sc, const Element<Gaussian>& x, const Element<Gaussian>& y) {
    Gaussian tr;
    for (int k = 0; k < sc.dim(); ++k) {
        const Element<Gaussian> img = sc.bracket(x, sc.bracket(y, sc.basis<Gaussian>(k)));
        auto it = img.find(k);
        if (it != img.end()) tr += it->second;
    }
    return tr;
}

Element<long> jacobi_residual(const StructureConstants& sc, int a, int b, int c) {
    const auto ea = sc.basis<long>(a), eb = sc.basis<long>(b), ec = sc.basis<long>(c);
    Element<long> out = sc.bracket(ea, sc.bracket(eb, ec));
    add_scaled(out, sc.bracket(eb, sc.bracket(ec, ea)), 1L);
    add_scaled(out, sc.bracket(ec, sc.bracket(ea, eb)), 1L);
    return out;
}

int RationalFormBasis::dim_k() const {
    return static_cast<int>(std::count_if(basis.begin(), basis.end(), [](const Vector& v) { return v.in_k; }));
}

int RationalFormBasis::dim_k_perp() const { return static_cast<int>(basis.size()) - dim_k(); }

RationalFormBasis rational_form(const StructureConstants& sc, const GradingElement& T) {
    const RootSystem& rs = sc.root_system();
    const Gaussian I = Gaussian::i();
    RationalFormBasis rf;
    rf.T = T;
    for (int j = 1; j <= rs.rank(); ++j)
        rf.basis.push_back({Element<Gaussian>{{sc.cartan_index(j), I}}, true, "h" + std::to_string(j)});
    const int np = rs.num_positive();
    for (int a = 0; a < np; ++a) {
        const Coords& alpha = rs.positive_roots()[a];
        const bool even = T(alpha) % 2 == 0;
        const std::string tag = "(" + format_coords(alpha) + ")";
        Element<Gaussian> u, v;
        if (even) {
            u = {{a, Gaussian(1)}, {a + np, Gaussian(-1)}};
            v = {{a, I}, {a + np, I}};
        } else {
            u = {{a, I}, {a + np, -I}};
            v = {{a, Gaussian(1)}, {a + np, Gaussian(1)}};
        }
        rf.basis.push_back({u, even, "u" + tag});
        rf.basis.push_back({v, even, "v" + tag});
    }
    return rf;
}

std::vector<Gaussian> rational_coordinates(const StructureConstants& sc, const RationalFormBasis& rf,
                                           const Element<Gaussian>& x) {
    const RootSystem& rs = sc.root_system();
    const Gaussian I = Gaussian::i();
    const int r = rs.rank(), np = rs.num_positive();
    auto get = [&](int k) {
        auto it = x.find(k);
        return it == x.end() ? Gaussian() : it->second;
    };
    std::vector<Gaussian> c;
    for (int j = 1; j <= r; ++j) c.push_back(get(sc.cartan_index(j)) / I);
    for (int a = 0; a < np; ++a) {
        const Gaussian zp = get(a), zm = get(a + np);
        const bool even = rf.T(rs.positive_roots()[a]) % 2 == 0;
        if (even) {
            c.push_back((zp - zm) / Gaussian(2));
            c.push_back((zp + zm) / (Gaussian(2) * I));
        } else {
            c.push_back((zp - zm) / (Gaussian(2) * I));
            c.push_back((zp + zm) / Gaussian(2));
        }
    }
    return c;
}

Element<Gaussian> cartan_involution(const StructureConstants& sc, const GradingElement& T, const Element<Gaussian>& x) {
    Element<Gaussian> out;
    for (const auto& [k, v] : x) {
        if (sc.is_cartan(k) || T(sc.root_system().roots()[k]) % 2 == 0)
            out[k] = v;
        else
            out[k] = -v;
    }
    return out;
}

StandardTriple cayley_standard_triple(const StructureConstants& sc, const GradingElement& T, const Coords& beta) {
    const int b = sc.root_index(beta);
    if (T(beta) % 2 == 0) throw Error(ErrorCode::CompactRoot, "(" + format_coords(beta) + ") has even T-value");
    const int mb = sc.root_index(-beta);
    Element<Gaussian> h = sc.bracket(sc.basis<Gaussian>(b), sc.basis<Gaussian>(mb));
    const Gaussian half_i(0, Rational(1, 2));
    Element<Gaussian> base{{mb, half_i}, {b, -half_i}};  // (i/2)(x^{-beta} - x^beta)
    StandardTriple st;
    st.y_plus = base;
    add_scaled(st.y_plus, h, half_i);
    st.y_minus = base;
    add_scaled(st.y_minus, h, -half_i);
    st.neutral = {{b, Gaussian(1)}, {mb, Gaussian(1)}};
    return st;
}

bool is_representation(const StructureConstants& sc, const Representation& rep) {
    const int n = sc.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Matrix<Rational> lhs = mat_commutator(rep.basis[a], rep.basis[b]);
            Element<Rational> br;
            for (const auto& [k, v] : sc.bracket_basis(a, b)) br[k] = Rational(v);
            if (lhs != rep.image(br)) return false;
        }
    return true;
}

namespace {

// Builds x^{gamma} for every root from the simple-root operators using x^{a+b} = [x^a, x^b]/N_{a,b}.
void fill_root_operators(const StructureConstants& sc, Representation& rep) {
    const RootSystem& rs = sc.root_system();
    const int np = rs.num_positive();
    for (int sign : {1, -1}) {
        for (int a = 0; a < np; ++a) {
            const Coords gamma = sign * rs.positive_roots()[a];
            const int g = sc.root_index(gamma);
            if (height(rs.positive_roots()[a]) == 1) continue;
            for (int j = 1; j <= rs.rank(); ++j) {
                const Coords sj = sign * rs.simple_root(j);
                if (!rs.is_root(gamma - sj)) continue;
                const int n = sc.N(sj, gamma - sj);
                Matrix<Rational> m = mat_commutator(rep.basis[sc.root_index(sj)], rep.basis[sc.root_index(gamma - sj)]);
                for (auto& row : m)
                    for (auto& x : row) x /= n;
                rep.basis[g] = m;
                break;
            }
        }
    }
    for (int j = 1; j <= rs.rank(); ++j) {
        const int k = sc.root_index(rs.simple_root(j));
        rep.basis[sc.cartan_index(j)] = mat_commutator(rep.basis[k], rep.basis[sc.root_index(-rs.simple_root(j))]);
    }
}

}  // namespace

Representation a1_defining_rep(const StructureConstants& sc) {
    if (sc.root_system().lie_type() != LieType{Family::A, 1})
        throw Error(ErrorCode::InvalidType, "defining representation is implemented for A1 only");
    Representation rep;
    rep.weights = {{1}, {-1}};
    const Matrix<Rational> zero(2, std::vector<Rational>(2, Rational(0)));
    rep.basis.assign(sc.dim(), zero);
    rep.basis[sc.root_index({1})][0][1] = 1;
    rep.basis[sc.root_index({-1})][1][0] = 1;
    fill_root_operators(sc, rep);
    return rep;
}

Representation g2_seven_dim_rep(const StructureConstants& sc) {
    const RootSystem& rs = sc.root_system();
    if (rs.lie_type() != LieType{Family::G, 2}) throw Error(ErrorCode::InvalidType, "expected G2");
    const WeightMultiset wm = freudenthal_multiplicities(rs, Weight::from_ints({1, 0}));
    Representation rep;
    for (const auto& [w, m] : wm.entries) {
        if (m != 1) throw Error(ErrorCode::Internal, "V7 is expected to be multiplicity free");
        std::vector<Rational> rc = Weight::from_ints(w).root_coords(rs);
        Coords c;
        for (const auto& x : rc) c.push_back(static_cast<int>(boost::multiprecision::numerator(x)));
        rep.weights.push_back(c);
    }
    std::sort(rep.weights.begin(), rep.weights.end(), [](const Coords& a, const Coords& b) {
        if (height(a) != height(b)) return height(a) > height(b);
        return a > b;
    });
    const int n = static_cast<int>(rep.weights.size());
    auto pos = [&](const Coords& w) {
        auto it = std::find(rep.weights.begin(), rep.weights.end(), w);
        return it == rep.weights.end() ? -1 : static_cast<int>(it - rep.weights.begin());
    };

    // Lowering edges v_w -> v_{w - alpha_i}; e_i is then fixed on each string by [e_i, f_i] = h_i.
    struct Edge {
        int simple, from, to;
        Rational raise;  // e_i v_to = raise * v_from when f_i v_from = v_to
    };
    std::vector<Edge> edges;
    for (int i = 1; i <= 2; ++i) {
        const Coords ai = rs.simple_root(i);
        for (int k = 0; k < n; ++k) {
            if (pos(rep.weights[k] + ai) >= 0) continue;  // not the top of its string
            const int m = rs.pairing(rep.weights[k], ai);
            Coords w = rep.weights[k];
            for (int step = 1; step <= m; ++step) {
                Coords next = w - ai;
                edges.push_back({i, pos(w), pos(next), Rational(step * (m - step + 1))});
                w = next;
            }
        }
    }
    const Matrix<Rational> zero(n, std::vector<Rational>(n, Rational(0)));
    rep.basis.assign(sc.dim(), zero);
    const std::size_t ne = edges.size();
    for (unsigned mask = 0; mask < (1u << ne); ++mask) {
        for (auto& m : rep.basis) m = zero;
        for (std::size_t e = 0; e < ne; ++e) {
            const Rational s = (mask >> e) & 1u ? Rational(-1) : Rational(1);
            const Edge& ed = edges[e];
            rep.basis[sc.root_index(-rs.simple_root(ed.simple))][ed.to][ed.from] = s;
            rep.basis[sc.root_index(rs.simple_root(ed.simple))][ed.from][ed.to] = ed.raise / s;
        }
        fill_root_operators(sc, rep);
        if (is_representation(sc, rep)) return rep;
    }
    throw Error(ErrorCode::Internal, "no consistent sign assignment for V7");
}

Element<Rational> g2_xi_element(const StructureConstants& sc, const G2Xi& xi) {
    const Coords dirs[4] = {{0, -1}, {-1, -1}, {-2, -1}, {-3, -1}};
    Element<Rational> out;
    for (int k = 0; k < 4; ++k)
        if (xi[k] != 0) out[sc.root_index(dirs[k])] = xi[k];
    return out;
}

Matrix<Rational> g2_yukawa_matrix(const StructureConstants& sc, const Representation& v7, const G2Xi& xi) {
    const Matrix<Rational> x = v7.image(g2_xi_element(sc, xi));
    const Matrix<Rational> x2 = mat_mul(x, x);
    std::vector<int> top, bottom;
    for (std::size_t k = 0; k < v7.weights.size(); ++k) {
        if (v7.weights[k][1] == 1) top.push_back(static_cast<int>(k));
        if (v7.weights[k][1] == -1) bottom.push_back(static_cast<int>(k));
    }
    Matrix<Rational> out(bottom.size(), std::vector<Rational>(top.size()));
    for (std::size_t i = 0; i < bottom.size(); ++i)
        for (std::size_t j = 0; j < top.size(); ++j) out[i][j] = x2[bottom[i]][top[j]];
    return out;
}

std::array<Rational, 4> g2_second_fundamental_form(const StructureConstants& sc, const G2Xi& xi) {
    const Element<Rational> x = g2_xi_element(sc, xi);
    const Element<Rational> v = sc.basis<Rational>(sc.root_index({3, 2}));
    const Element<Rational> out = sc.bracket(x, sc.bracket(x, v));
    const int slots[4] = {sc.root_index({1, 0}), sc.root_index({-1, 0}), sc.cartan_index(1), sc.cartan_index(2)};
    std::array<Rational, 4> c{};
    for (const auto& [k, val] : out) {
        const int* hit = std::find(slots, slots + 4, k);
        if (hit == slots + 4) throw Error(ErrorCode::Internal, "second fundamental form left g^0");
        c[hit - slots] = val;
    }
    return c;
}

G2Xi g2_cone_point(const StructureConstants& sc, const Rational& s, const Rational& t) {
    const Element<Rational> n = sc.basis<Rational>(sc.root_index({-1, 0}));
    Element<Rational> term = sc.basis<Rational>(sc.root_index({0, -1}));
    G2Xi c{};
    for (int k = 0; !term.empty(); ++k) {
        if (k > 3) throw Error(ErrorCode::Internal, "ad x^{-a1} is not nilpotent on g^{-1}");
        c[k] = term.at(sc.root_index({-k, -1}));
        term = sc.bracket(n, term);
        for (auto& [idx, v] : term) v /= (k + 1);
    }
    G2Xi xi;
    for (int k = 0; k < 4; ++k) {
        Rational m = c[k];
        for (int e = 0; e < 3 - k; ++e) m *= s;
        for (int e = 0; e < k; ++e) m *= t;
        xi[k] = m;
    }
    return xi;
}

Rational a1_disc_modulus_squared(const Rational& t) {
    const RootSystem rs(LieType{Family::A, 1});
    const StructureConstants sc(rs);
    const Representation rep = a1_defining_rep(sc);
    const GradingElement T{{1}};
    const StandardTriple st = cayley_standard_triple(sc, T, {1});
    Matrix<Gaussian> m = rep.image(st.y_minus);
    for (auto& row : m)
        for (auto& x : row) x *= Gaussian(0, t);
    // exp(m) by its series; m is nilpotent.
    Matrix<Gaussian> result(2, std::vector<Gaussian>(2));
    result[0][0] = result[1][1] = Gaussian(1);
    Matrix<Gaussian> power = result;
    for (int k = 1;; ++k) {
        power = mat_mul(power, m);
        bool zero = true;
        for (auto& row : power)
            for (auto& x : row) {
                x /= Gaussian(k);
                if (!x.is_zero()) zero = false;
            }
        if (zero) break;
        if (k > 2) throw Error(ErrorCode::Internal, "expected a nilpotent matrix");
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) result[i][j] += power[i][j];
    }
    const Gaussian v0 = result[0][0] + result[0][1] * Gaussian::i();
    const Gaussian v1 = result[1][0] + result[1][1] * Gaussian::i();
    return (v1 / v0).norm();
}

}  // namespace hodgeorbit
