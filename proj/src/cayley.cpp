#include "hodgeorbit/cayley.hpp"

#include "hodgeorbit/error.hpp"

#include <algorithm>
#include <bitset>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace hodgeorbit {

std::string format_sos(const Sos& B) {
    std::string s;
    for (std::size_t k = 0; k < B.size(); ++k) {
        if (k) s += "|";
        s += format_coords(B[k]);
    }
    return s;
}

Sos canonical_sos(Sos B) {
    std::sort(B.begin(), B.end(), [](const Coords& a, const Coords& b) {
        int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return B;
}

std::vector<std::string> validate_sos(const RootSystem& rs, const GradingElement& E, const Sos& B) {
    std::vector<std::string> v;
    bool all_roots = true;
    for (const auto& b : B) {
        if (static_cast<int>(b.size()) != rs.rank()) {
            v.push_back("(" + format_coords(b) + ") has wrong length");
            all_roots = false;
            continue;
        }
        if (!rs.is_root(b)) {
            v.push_back("(" + format_coords(b) + ") is not a root");
            all_roots = false;
            continue;
        }
        if (E(b) != 1) v.push_back("(" + format_coords(b) + ") has E-value " + std::to_string(E(b)) + ", expected 1");
    }
    if (!all_roots) return v;
    for (std::size_t a = 0; a < B.size(); ++a)
        for (std::size_t b = a + 1; b < B.size(); ++b) {
            const std::string pair = "(" + format_coords(B[a]) + ") and (" + format_coords(B[b]) + ")";
            if (B[a] == B[b]) {
                v.push_back(pair + " repeat");
                continue;
            }
            if (rs.is_root(B[a] + B[b])) v.push_back(pair + ": sum (" + format_coords(B[a] + B[b]) + ") is a root");
            if (rs.is_root(B[a] - B[b]))
                v.push_back(pair + ": difference (" + format_coords(B[a] - B[b]) + ") is a root");
            if (rs.pairing(B[a], B[b]) != 0) v.push_back(pair + ": pairing is nonzero");
        }
    return v;
}

namespace {

struct Candidates {
    std::vector<Coords> roots;
    std::vector<std::vector<bool>> compatible;
};

Candidates degree_one_candidates(const RootSystem& rs, const GradingElement& E) {
    Candidates c;
    for (const auto& a : rs.positive_roots())
        if (E(a) == 1) c.roots.push_back(a);
    const std::size_t n = c.roots.size();
    c.compatible.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            c.compatible[a][b] = c.compatible[b][a] = strongly_orthogonal(rs, c.roots[a], c.roots[b]);
    return c;
}

void require_valid(const RootSystem& rs, const GradingElement& E, const Sos& B) {
    const auto v = validate_sos(rs, E, B);
    if (!v.empty()) throw Error(ErrorCode::InvalidSOS, v.front());
}

}  // namespace

SosSearchResult search_sos(const RootSystem& rs, const GradingElement& E, int max_len) {
    const Candidates c = degree_one_candidates(rs, E);
    const std::size_t n = c.roots.size();
    SosSearchResult out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        out.max_found = std::max(out.max_found, static_cast<int>(chosen.size()));
        bool extendable = false;
        if (static_cast<int>(chosen.size()) < max_len) {
            for (std::size_t k = 0; k < n && !extendable; ++k) {
                if (std::find(chosen.begin(), chosen.end(), k) != chosen.end()) continue;
                extendable = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t x) { return c.compatible[x][k]; });
            }
            for (std::size_t k = start; k < n; ++k) {
                if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t x) { return c.compatible[x][k]; }))
                    continue;
                chosen.push_back(k);
                rec(k + 1);
                chosen.pop_back();
            }
        }
        if (!extendable && !chosen.empty()) {
            Sos B;
            for (std::size_t k : chosen) B.push_back(c.roots[k]);
            out.maximal.push_back(B);
        }
    };
    rec(0);
    return out;
}

std::vector<Sos> enumerate_sos(const RootSystem& rs, const GradingElement& E) {
    const Candidates c = degree_one_candidates(rs, E);
    const std::size_t n = c.roots.size();
    std::vector<Sos> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        for (std::size_t k = start; k < n; ++k) {
            if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t x) { return c.compatible[x][k]; }))
                continue;
            chosen.push_back(k);
            Sos B;
            for (std::size_t x : chosen) B.push_back(c.roots[x]);
            out.push_back(std::move(B));
            rec(k + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return out;
}

namespace {

using Bits = std::bitset<128>;

Sos max_strongly_orthogonal(const RootSystem& rs, const GradingElement& E) {
    std::vector<Coords> nc;
    for (const auto& a : rs.positive_roots())
        if (E(a) % 2 != 0) nc.push_back(a);
    const std::size_t n = nc.size();
    std::vector<Bits> adj(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && strongly_orthogonal(rs, nc[a], nc[b])) adj[a].set(b);
    std::vector<std::size_t> best, cur;
    std::function<void(Bits)> expand = [&](Bits cand) {
        if (cur.size() > best.size()) best = cur;
        if (cur.size() + cand.count() <= best.size()) return;
        for (std::size_t v = 0; v < n; ++v) {
            if (!cand.test(v)) continue;
            if (cur.size() + cand.count() <= best.size()) return;
            cur.push_back(v);
            expand(cand & adj[v]);
            cur.pop_back();
            cand.reset(v);
        }
    };
    Bits all;
    for (std::size_t v = 0; v < n; ++v) all.set(v);
    expand(all);
    Sos out;
    for (std::size_t v : best) out.push_back(nc[v]);
    return out;
}

}  // namespace

int real_rank(const RootSystem& rs, const GradingElement& E) {
    return static_cast<int>(max_strongly_orthogonal(rs, E).size());
}

Sos real_rank_witness(const RootSystem& rs, const GradingElement& E) { return max_strongly_orthogonal(rs, E); }

int HodgeDeligneDiamond::at(int p, int q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second;
}

int HodgeDeligneDiamond::total() const {
    int s = 0;
    for (const auto& [pq, d] : entries) s += d;
    return s;
}

std::pair<int, int> root_bidegree(const RootSystem& rs, const GradingElement& E, const Sos& B, const Coords& alpha) {
    int p = E(alpha);
    int y = 0;
    for (const auto& b : B) y += rs.pairing(alpha, b);
    return {p, y - p};
}

HodgeDeligneDiamond bigrading(const RootSystem& rs, const GradingElement& E, const Sos& B) {
    require_valid(rs, E, B);
    HodgeDeligneDiamond d;
    d.cartan_at_origin = rs.rank();
    d.entries[{0, 0}] = rs.rank();
    for (const auto& a : rs.roots()) d.entries[root_bidegree(rs, E, B, a)] += 1;
    return d;
}

std::vector<Coords> plus_plus_roots(const RootSystem& rs, const GradingElement& E, const Sos& B) {
    require_valid(rs, E, B);
    std::vector<Coords> out;
    for (const auto& a : rs.roots()) {
        auto [p, q] = root_bidegree(rs, E, B, a);
        if (p >= 1 && q >= 1) out.push_back(a);
    }
    return out;
}

namespace {

using PQ = std::pair<int, int>;

struct Template {
    std::vector<PQ> ones;
    std::vector<PQ> free;
};

bool matches(const HodgeDeligneDiamond& d, const Template& t) {
    for (const auto& [pq, v] : d.entries) {
        if (v == 0) continue;
        bool in_ones = std::find(t.ones.begin(), t.ones.end(), pq) != t.ones.end();
        bool in_free = std::find(t.free.begin(), t.free.end(), pq) != t.free.end();
        if (!in_ones && !in_free) return false;
    }
    for (const auto& pq : t.ones)
        if (d.at(pq.first, pq.second) != 1) return false;
    return true;
}

Template type_one() {
    return {{{2, -1}, {1, -2}, {1, 1}, {-1, 2}, {-1, -1}, {-2, 1}},
            {{1, -1}, {1, 0}, {0, 1}, {0, -1}, {-1, 1}, {-1, 0}, {0, 0}}};
}

Template rotate(const Template& t) {
    Template r;
    for (const auto& [p, q] : t.ones) r.ones.push_back({q, -p});
    for (const auto& [p, q] : t.free) r.free.push_back({q, -p});
    return r;
}

Template type_two() {
    return {{{2, 0}, {-2, 0}, {0, 2}, {0, -2}},
            {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {0, 0}}};
}

}  // namespace

std::string lmhs_type(const LieType& t, const HodgeDeligneDiamond& d) {
    bool hodge_tate = true;
    for (const auto& [pq, v] : d.entries)
        if (v != 0 && pq.first != pq.second) hodge_tate = false;
    if (hodge_tate) return "IV";
    if (matches(d, type_one())) return "I";
    if (matches(d, rotate(type_one()))) return "III";
    if (matches(d, type_two())) {
        if (t.family == Family::B || t.family == Family::D) return d.at(1, 0) == 0 ? "IIa" : "IIb";
        return "II";
    }
    return "other";
}

OrbitInvariants orbit_invariants(const RootSystem& rs, const GradingElement& E, const Sos& B) {
    const HodgeDeligneDiamond d = bigrading(rs, E, B);
    OrbitInvariants inv;
    for (const auto& [pq, v] : d.entries)
        if (pq.first >= 1 && pq.second >= 1) inv.codim += v;
    bool small = true;
    for (const auto& [pq, v] : d.entries)
        if (v != 0 && (std::abs(pq.first) > 2 || std::abs(pq.second) > 2)) small = false;
    if (small) {
        int hd = 0;  // h_D^{2,-2} + h_D^{-2,2} for the base point
        for (const auto& a : rs.roots())
            if (std::abs(E(a)) == 2) ++hd;
        inv.k_dim = 2 * d.at(0, 1) + 2 * d.at(0, 2) + d.at(1, 1) - d.at(2, 2) + hd;
        inv.mu = d.at(0, 1) + d.at(0, 2) + d.at(1, 1) + d.at(1, 2);
    }
    inv.lmhs_type = lmhs_type(rs.lie_type(), d);
    return inv;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// W(g^0) is generated by the simple reflections r_j with j != i.
std::vector<int> levi_reflections(const RootSystem& rs, const GradingElement& E) {
    std::vector<int> out;
    for (int j = 1; j <= rs.rank(); ++j)
        if (E.coeffs[j - 1] == 0) out.push_back(j);
    return out;
}

}  // namespace

bool codim_one_uniqueness_check(const RootSystem& rs, int i) {
    const GradingElement E = GradingElement::from_index_set(rs.rank(), {i});
    std::vector<Coords> cand;
    for (const auto& a : rs.positive_roots())
        if (E(a) == 1) cand.push_back(a);
    UnionFind uf(cand.size());
    for (std::size_t k = 0; k < cand.size(); ++k)
        for (int j : levi_reflections(rs, E)) {
            const Coords img = reflect(rs, rs.simple_root(j), cand[k]);
            auto it = std::find(cand.begin(), cand.end(), img);
            if (it == cand.end()) return false;
            uf.unite(static_cast<int>(k), static_cast<int>(it - cand.begin()));
        }
    std::map<int, std::set<int>> codims;
    for (std::size_t k = 0; k < cand.size(); ++k)
        codims[uf.find(static_cast<int>(k))].insert(orbit_invariants(rs, E, {cand[k]}).codim);
    int ones = 0;
    const int simple_class = uf.find(static_cast<int>(std::find(cand.begin(), cand.end(), rs.simple_root(i)) - cand.begin()));
    for (const auto& [root, cs] : codims) {
        if (cs.size() != 1) return false;
        if (*cs.begin() == 1) {
            ++ones;
            if (root != simple_class) return false;
        }
    }
    return ones == 1;
}

WeightGradingReport weight_grading_dims(const RootSystem& rs, int i) {
    if (!is_fundamental_adjoint(rs, {i}))
        throw Error(ErrorCode::NotFundamentalAdjoint, rs.lie_type().name() + " node " + std::to_string(i));
    WeightGradingReport rep;
    const Coords ai = rs.simple_root(i);
    rep.h_in_S = rs.coroot_in_S(ai);
    rep.h_dims[0] = rs.rank();
    for (const auto& a : rs.roots()) rep.h_dims[rs.pairing(a, ai)] += 1;
    rep.e_dims = parabolic(rs, {i}).eigen_dims;
    rep.flip_holds = true;
    std::set<int> keys;
    for (const auto& [l, d] : rep.h_dims) keys.insert(l);
    for (const auto& [p, d] : rep.e_dims) keys.insert(-p);
    for (int l : keys) {
        auto h = rep.h_dims.find(l);
        auto e = rep.e_dims.find(-l);
        int hv = h == rep.h_dims.end() ? 0 : h->second;
        int ev = e == rep.e_dims.end() ? 0 : e->second;
        if (hv != ev) rep.flip_holds = false;
    }
    return rep;
}

Coords apply_word(const RootSystem& rs, const std::vector<int>& word, Coords alpha) {
    for (int j : word) alpha = reflect(rs, rs.simple_root(j), alpha);
    return alpha;
}

std::vector<int> weyl_flip(const RootSystem& rs, int i) {
    const Coords start = -rs.simple_root(i);
    const Coords& target = rs.highest_root();
    if (rs.inner(start, start) != rs.inner(target, target))
        throw Error(ErrorCode::LengthMismatch, "alpha_" + std::to_string(i) + " is not long");
    std::unordered_map<Coords, std::pair<Coords, int>, CoordsHash> parent;
    parent.emplace(start, std::make_pair(start, 0));
    std::deque<Coords> queue{start};
    while (!queue.empty()) {
        Coords cur = queue.front();
        queue.pop_front();
        if (cur == target) break;
        for (int j = 1; j <= rs.rank(); ++j) {
            Coords next = reflect(rs, rs.simple_root(j), cur);
            if (parent.count(next)) continue;
            parent.emplace(next, std::make_pair(cur, j));
            queue.push_back(next);
        }
    }
    if (!parent.count(target)) throw Error(ErrorCode::Internal, "highest root not reached");
    std::vector<int> word;
    for (Coords c = target; c != start; c = parent.at(c).first) word.push_back(parent.at(c).second);
    std::reverse(word.begin(), word.end());
    return word;
}

bool weyl_flip_bijection_holds(const RootSystem& rs, int i) {
    const std::vector<int> word = weyl_flip(rs, i);
    const Coords ai = rs.simple_root(i);
    if (apply_word(rs, word, -ai) != rs.highest_root()) return false;
    std::set<Coords> images;
    for (const auto& a : rs.roots()) {
        const Coords w = apply_word(rs, word, a);
        if (w[i - 1] != -rs.pairing(a, ai)) return false;
        images.insert(w);
    }
    return images.size() == rs.roots().size();
}

EnhancedSl2Descriptor enhanced_sl2_descriptor(const RootSystem& rs, const GradingElement& E, const Sos& B) {
    require_valid(rs, E, B);
    EnhancedSl2Descriptor out;
    std::vector<Coords> positive;
    for (const auto& a : rs.roots()) {
        bool ok = std::all_of(B.begin(), B.end(), [&](const Coords& b) { return strongly_orthogonal(rs, a, b); });
        if (!ok) continue;
        out.gamma_roots.push_back(a);
        if (height(a) > 0) positive.push_back(a);
    }
    std::set<Coords> pos_set(positive.begin(), positive.end());
    for (const auto& g : positive) {
        bool decomposable = false;
        for (const auto& h : positive)
            if (h != g && pos_set.count(g - h)) decomposable = true;
        if (!decomposable) out.gamma_simple.push_back(g);
    }
    const std::size_t m = out.gamma_simple.size();
    std::vector<std::vector<int>> cartan(m, std::vector<int>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) cartan[a][b] = rs.pairing(out.gamma_simple[a], out.gamma_simple[b]);
    out.gamma_type = classify_cartan(cartan);
    out.dim_X = static_cast<int>(B.size());
    for (const auto& a : positive)
        if (E(a) != 0) ++out.dim_X;
    out.horizontal = std::all_of(out.gamma_roots.begin(), out.gamma_roots.end(),
                                 [&](const Coords& a) { return std::abs(E(a)) <= 1; });
    return out;
}

Rational restriction_pairing(const RootSystem& rs, const Weight& lambda, const Coords& beta) {
    return coroot_pairing(rs, lambda.root_coords(rs), beta);
}

std::vector<CensusEntry> boundary_census(const RootSystem& rs, int i) {
    if (!is_fundamental_adjoint(rs, {i}))
        throw Error(ErrorCode::NotFundamentalAdjoint, rs.lie_type().name() + " node " + std::to_string(i));
    const GradingElement E = GradingElement::from_index_set(rs.rank(), {i});
    const std::vector<Sos> all = enumerate_sos(rs, E);

    auto key_of = [&](const Sos& B) {
        std::vector<int> k;
        for (const auto& b : B) k.push_back(rs.index_of(b));
        std::sort(k.begin(), k.end());
        return k;
    };
    std::map<std::vector<int>, int> position;
    for (std::size_t k = 0; k < all.size(); ++k) position.emplace(key_of(all[k]), static_cast<int>(k));

    UnionFind uf(all.size());
    const std::vector<int> levi = levi_reflections(rs, E);
    for (std::size_t k = 0; k < all.size(); ++k)
        for (int j : levi) {
            Sos img;
            for (const auto& b : all[k]) img.push_back(reflect(rs, rs.simple_root(j), b));
            auto it = position.find(key_of(img));
            if (it == position.end()) throw Error(ErrorCode::Internal, "Levi reflection left the candidate family");
            uf.unite(static_cast<int>(k), it->second);
        }

    std::map<HodgeDeligneDiamond, std::vector<int>> groups;
    for (std::size_t k = 0; k < all.size(); ++k) groups[bigrading(rs, E, all[k])].push_back(static_cast<int>(k));

    std::vector<CensusEntry> out;
    for (const auto& [diamond, members] : groups) {
        CensusEntry ce;
        ce.diamond = diamond;
        std::set<int> classes;
        int best = members.front();
        for (int k : members) {
            classes.insert(uf.find(k));
            if (all[k].size() < all[best].size() ||
                (all[k].size() == all[best].size() && key_of(all[k]) < key_of(all[best])))
                best = k;
        }
        ce.representative = all[best];
        ce.invariants = orbit_invariants(rs, E, ce.representative);
        ce.inequivalent_count = static_cast<int>(classes.size());
        out.push_back(std::move(ce));
    }
    std::sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
        if (a.invariants.codim != b.invariants.codim) return a.invariants.codim < b.invariants.codim;
        return a.invariants.mu.value_or(0) < b.invariants.mu.value_or(0);
    });
    return out;
}

}  // namespace hodgeorbit
