#include "hodgeorbit/rootdata.hpp"

#include "hodgeorbit/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace hodgeorbit {

std::string LieType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

bool LieType::simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
}

void check_rank(const LieType& t) {
    bool ok = false;
    switch (t.family) {
        case Family::A: ok = t.rank >= 1; break;
        case Family::B: ok = t.rank >= 2; break;
        case Family::C: ok = t.rank >= 2; break;
        case Family::D: ok = t.rank >= 4; break;
        case Family::E: ok = t.rank >= 6 && t.rank <= 8; break;
        case Family::F: ok = t.rank == 4; break;
        case Family::G: ok = t.rank == 2; break;
    }
    if (!ok) throw Error(ErrorCode::InvalidRank, "rank " + std::to_string(t.rank) + " not allowed for " + t.name());
}

LieType parse_lie_type(const std::string& text) {
    if (text.size() < 2) throw Error(ErrorCode::InvalidType, "cannot parse Lie type '" + text + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (std::string("ABCDEFG").find(f) == std::string::npos)
        throw Error(ErrorCode::InvalidType, "unknown family in '" + text + "'");
    std::string digits = text.substr(1);
    if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw Error(ErrorCode::InvalidType, "cannot parse rank in '" + text + "'");
    LieType t{static_cast<Family>(f), std::stoi(digits)};
    check_rank(t);
    return t;
}

std::size_t CoordsHash::operator()(const Coords& c) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : c) h ^= std::hash<int>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Coords operator+(const Coords& a, const Coords& b) {
    Coords c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

Coords operator-(const Coords& a, const Coords& b) {
    Coords c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

Coords operator-(const Coords& a) {
    Coords c(a);
    for (int& x : c) x = -x;
    return c;
}

Coords operator*(int k, const Coords& a) {
    Coords c(a);
    for (int& x : c) x *= k;
    return c;
}

int height(const Coords& a) {
    int h = 0;
    for (int x : a) h += x;
    return h;
}

std::string format_coords(const Coords& a, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(a[i]);
    }
    return s;
}

namespace {

bool lex_by_height(const Coords& a, const Coords& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
}

int eval_pairing(const std::vector<std::vector<int>>& cartan, const Coords& beta, int j) {
    int s = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) s += beta[i] * cartan[i][j];
    return s;
}

std::vector<std::vector<int>> gram_matrix(const LieType& t) {
    const int r = t.rank;
    std::vector<std::vector<int>> g(r, std::vector<int>(r, 0));
    auto edge = [&](int i, int j, int v) {  // 1-based
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    switch (t.family) {
        case Family::A:
            for (int i = 1; i <= r; ++i) g[i - 1][i - 1] = 2;
            for (int i = 1; i < r; ++i) edge(i, i + 1, -1);
            break;
        case Family::B:
            for (int i = 1; i < r; ++i) g[i - 1][i - 1] = 4;
            g[r - 1][r - 1] = 2;
            for (int i = 1; i < r; ++i) edge(i, i + 1, -2);
            break;
        case Family::C:
            for (int i = 1; i < r; ++i) g[i - 1][i - 1] = 2;
            g[r - 1][r - 1] = 4;
            for (int i = 1; i + 1 < r; ++i) edge(i, i + 1, -1);
            edge(r - 1, r, -2);
            break;
        case Family::D:
            for (int i = 1; i <= r; ++i) g[i - 1][i - 1] = 2;
            for (int i = 1; i + 1 < r; ++i) edge(i, i + 1, -1);
            edge(r - 2, r, -1);
            break;
        case Family::E:
            for (int i = 1; i <= r; ++i) g[i - 1][i - 1] = 2;
            edge(1, 3, -1);
            edge(2, 4, -1);
            for (int i = 3; i < r; ++i) edge(i, i + 1, -1);
            break;
        case Family::F:
            g[0][0] = g[1][1] = 4;
            g[2][2] = g[3][3] = 2;
            edge(1, 2, -2);
            edge(2, 3, -2);
            edge(3, 4, -1);
            break;
        case Family::G:
            g[0][0] = 2;
            g[1][1] = 6;
            edge(1, 2, -3);
            break;
    }
    return g;
}

LieType name_component(const std::vector<std::vector<int>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return {Family::A, 1};
    const std::size_t count = positive_roots_from_cartan(m).size();
    bool simply_laced = true;
    bool has_triple = false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) {
                if (m[a][b] < -1) simply_laced = false;
                if (m[a][b] == -3) has_triple = true;
            }
    const std::size_t un = static_cast<std::size_t>(n);
    if (simply_laced) {
        if (count == un * (un + 1) / 2) return {Family::A, n};
        if (count == un * (un - 1)) return {Family::D, n};
        return {Family::E, n};
    }
    if (has_triple) return {Family::G, 2};
    if (n == 2) return {Family::B, 2};
    if (n == 4 && count == 24) return {Family::F, 4};
    // Relative squared lengths by propagation along the tree: |a|^2/|b|^2 = m[a][b]/m[b][a].
    std::vector<Rational> len(n, Rational(0));
    len[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b = 0; b < n; ++b)
            if (b != a && m[a][b] != 0 && len[b] == 0) {
                len[b] = len[a] * Rational(m[b][a]) / m[a][b];
                stack.push_back(b);
            }
    }
    Rational lo = *std::min_element(len.begin(), len.end());
    int short_count = static_cast<int>(std::count(len.begin(), len.end(), lo));
    return {short_count == 1 ? Family::B : Family::C, n};
}

}  // namespace

std::vector<Coords> positive_roots_from_cartan(const std::vector<std::vector<int>>& cartan) {
    const int r = static_cast<int>(cartan.size());
    std::vector<Coords> roots;
    std::unordered_map<Coords, int, CoordsHash> seen;
    for (int i = 0; i < r; ++i) {
        Coords c(r, 0);
        c[i] = 1;
        seen.emplace(c, static_cast<int>(roots.size()));
        roots.push_back(c);
    }
    // Roots are added in nondecreasing height, so a breadth-first sweep visits each once.
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const Coords beta = roots[k];
        for (int j = 0; j < r; ++j) {
            int p = 0;
            Coords down = beta;
            while (true) {
                down[j] -= 1;
                if (!seen.count(down)) break;
                ++p;
            }
            int q = p - eval_pairing(cartan, beta, j);
            if (q > 0) {
                Coords up = beta;
                up[j] += 1;
                if (!seen.count(up)) {
                    seen.emplace(up, static_cast<int>(roots.size()));
                    roots.push_back(up);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end(), lex_by_height);
    return roots;
}

std::vector<DiagramComponent> classify_cartan(const std::vector<std::vector<int>>& cartan) {
    const int n = static_cast<int>(cartan.size());
    std::vector<int> comp(n, -1);
    std::vector<DiagramComponent> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> nodes;
        std::vector<int> stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            nodes.push_back(a);
            for (int b = 0; b < n; ++b)
                if (comp[b] < 0 && (cartan[a][b] != 0 || cartan[b][a] != 0)) {
                    comp[b] = comp[s];
                    stack.push_back(b);
                }
        }
        std::sort(nodes.begin(), nodes.end());
        std::vector<std::vector<int>> sub(nodes.size(), std::vector<int>(nodes.size()));
        for (std::size_t a = 0; a < nodes.size(); ++a)
            for (std::size_t b = 0; b < nodes.size(); ++b) sub[a][b] = cartan[nodes[a]][nodes[b]];
        DiagramComponent dc{name_component(sub), {}};
        for (int x : nodes) dc.nodes.push_back(x + 1);
        out.push_back(std::move(dc));
    }
    return out;
}

std::string format_components(const std::vector<DiagramComponent>& comps) {
    if (comps.empty()) return "0";
    std::vector<LieType> types;
    for (const auto& c : comps) types.push_back(c.type);
    std::sort(types.begin(), types.end(), [](const LieType& a, const LieType& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return a.family < b.family;
    });
    std::string s;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (i) s += "+";
        s += types[i].name();
    }
    return s;
}

RootSystem::RootSystem(const LieType& t) : type_(t) {
    check_rank(t);
    const int r = t.rank;
    gram_ = gram_matrix(t);
    cartan_.assign(r, std::vector<int>(r, 0));
    d_.assign(r, 0);
    for (int j = 0; j < r; ++j) d_[j] = gram_[j][j] / 2;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[j][j];
    positive_ = positive_roots_from_cartan(cartan_);
    roots_ = positive_;
    for (const auto& a : positive_) roots_.push_back(-a);
    for (std::size_t k = 0; k < roots_.size(); ++k) index_.emplace(roots_[k], static_cast<int>(k));
    highest_ = positive_.back();
}

int RootSystem::index_of(const Coords& c) const {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
}

Coords RootSystem::simple_root(int i) const {
    if (i < 1 || i > rank()) throw Error(ErrorCode::IndexOutOfRange, "simple root index " + std::to_string(i));
    Coords c(rank(), 0);
    c[i - 1] = 1;
    return c;
}

long RootSystem::inner(const Coords& a, const Coords& b) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank(); ++j) s += static_cast<long>(a[i]) * b[j] * gram_[i][j];
    }
    return s;
}

long RootSystem::inner_simple(int i, const Coords& v) const {
    long s = 0;
    for (int j = 0; j < rank(); ++j) s += static_cast<long>(gram_[i][j]) * v[j];
    return s;
}

bool RootSystem::is_long(const Coords& alpha) const {
    int top = *std::max_element(d_.begin(), d_.end());
    return inner(alpha, alpha) == 2L * top;
}

int RootSystem::pairing(const Coords& beta, const Coords& alpha) const {
    if (!is_root(alpha)) throw Error(ErrorCode::NotARoot, "(" + format_coords(alpha) + ") is not a root");
    long num = 2 * inner(beta, alpha);
    long den = inner(alpha, alpha);
    if (num % den != 0)
        throw Error(ErrorCode::Internal, "non-integral pairing for (" + format_coords(beta) + ")");
    return static_cast<int>(num / den);
}

std::vector<int> RootSystem::coroot_in_S(const Coords& alpha) const {
    std::vector<int> h(rank());
    for (int j = 0; j < rank(); ++j) h[j] = pairing(simple_root(j + 1), alpha);
    return h;
}

RootSystem build_root_system(const LieType& t) { return RootSystem(t); }

Rational coroot_pairing(const RootSystem& rs, const std::vector<Rational>& beta, const Coords& alpha) {
    if (!rs.is_root(alpha)) throw Error(ErrorCode::NotARoot, "(" + format_coords(alpha) + ") is not a root");
    Rational num = 0;
    for (int i = 0; i < rs.rank(); ++i) num += beta[i] * rs.inner_simple(i, alpha);
    return 2 * num / rs.inner(alpha, alpha);
}

int coroot_pairing(const RootSystem& rs, const Coords& beta, const Coords& alpha) { return rs.pairing(beta, alpha); }

Coords reflect(const RootSystem& rs, const Coords& alpha, const Coords& beta) {
    if (!rs.is_root(beta)) throw Error(ErrorCode::NotARoot, "(" + format_coords(beta) + ") is not a root");
    return beta - rs.pairing(beta, alpha) * alpha;
}

bool strongly_orthogonal(const RootSystem& rs, const Coords& a, const Coords& b) {
    return !rs.is_root(a + b) && !rs.is_root(a - b) && rs.pairing(a, b) == 0;
}

Coords conjugate_root(const RootSystem& rs, const Coords& alpha, const std::vector<Coords>& B) {
    if (!rs.is_root(alpha)) throw Error(ErrorCode::NotARoot, "(" + format_coords(alpha) + ") is not a root");
    for (std::size_t i = 0; i < B.size(); ++i) {
        if (!rs.is_root(B[i])) throw Error(ErrorCode::NotARoot, "(" + format_coords(B[i]) + ") is not a root");
        for (std::size_t j = i + 1; j < B.size(); ++j)
            if (!strongly_orthogonal(rs, B[i], B[j]))
                throw Error(ErrorCode::NotStronglyOrthogonal,
                            "(" + format_coords(B[i]) + ") and (" + format_coords(B[j]) + ")");
    }
    Coords out = -alpha;
    for (const auto& b : B) out = out + rs.pairing(alpha, b) * b;
    return out;
}

}  // namespace hodgeorbit
