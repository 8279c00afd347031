#pragma once

// Independent reference computations used to freeze and cross-check expected values.

#include "hodgeorbit/reps.hpp"
#include "hodgeorbit/rootdata.hpp"

#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

namespace oracle {

using hodgeorbit::Coords;
using hodgeorbit::IntWeight;
using hodgeorbit::RootSystem;

// Weyl orbit of a weight given in fundamental coordinates.
inline std::vector<IntWeight> weyl_orbit(const RootSystem& rs, const IntWeight& v) {
    const int r = rs.rank();
    std::set<IntWeight> seen{v};
    std::deque<IntWeight> queue{v};
    while (!queue.empty()) {
        IntWeight x = queue.front();
        queue.pop_front();
        for (int i = 0; i < r; ++i) {
            if (x[i] == 0) continue;
            IntWeight y = x;
            const int c = x[i];
            for (int j = 0; j < r; ++j) y[j] -= c * rs.cartan()[i][j];
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

// det(A) * A^{-1} as an integer matrix, with det(A) > 0.
struct ScaledInverse {
    std::vector<std::vector<long long>> m;
    long long det = 1;

    explicit ScaledInverse(const RootSystem& rs) {
        const int r = rs.rank();
        std::vector<std::vector<hodgeorbit::Rational>> a(r, std::vector<hodgeorbit::Rational>(2 * r));
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) a[i][j] = rs.cartan()[i][j];
            a[i][r + i] = 1;
        }
        hodgeorbit::Rational d = 1;
        for (int col = 0; col < r; ++col) {
            int piv = col;
            while (a[piv][col] == 0) ++piv;
            if (piv != col) {
                std::swap(a[piv], a[col]);
                d = -d;
            }
            d *= a[col][col];
            const hodgeorbit::Rational p = a[col][col];
            for (auto& x : a[col]) x /= p;
            for (int i = 0; i < r; ++i) {
                if (i == col || a[i][col] == 0) continue;
                const hodgeorbit::Rational t = a[i][col];
                for (int j = 0; j < 2 * r; ++j) a[i][j] -= t * a[col][j];
            }
        }
        det = static_cast<long long>(numerator(d));
        m.assign(r, std::vector<long long>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) m[i][j] = static_cast<long long>(numerator(hodgeorbit::Rational(a[i][r + j] * d)));
    }

    // Root coordinates c with c A = f; false when f is not in the root lattice.
    bool apply(const IntWeight& f, Coords& c) const {
        const std::size_t r = f.size();
        c.assign(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
            long long s = 0;
            for (std::size_t i = 0; i < r; ++i) s += f[i] * m[i][j];
            if (s % det != 0) return false;
            c[j] = static_cast<int>(s / det);
        }
        return true;
    }
};

// Kostant partition function: number of ways to write v as a sum of positive roots.
class PartitionFunction {
public:
    explicit PartitionFunction(const RootSystem& rs) : pos_(rs.positive_roots()) {}

    long long operator()(const Coords& v) { return count(static_cast<int>(pos_.size()), v); }

private:
    long long count(int k, const Coords& v) {
        for (int x : v)
            if (x < 0) return 0;
        if (k == 0) {
            for (int x : v)
                if (x != 0) return 0;
            return 1;
        }
        Coords key = v;
        key.push_back(k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        long long total = 0;
        Coords w = v;
        const Coords& beta = pos_[k - 1];
        while (true) {
            bool nonneg = true;
            for (int x : w)
                if (x < 0) nonneg = false;
            if (!nonneg) break;
            total += count(k - 1, w);
            for (std::size_t j = 0; j < w.size(); ++j) w[j] -= beta[j];
        }
        memo_[key] = total;
        return total;
    }

    std::vector<Coords> pos_;
    std::map<Coords, long long> memo_;
};

// Multiplicities of every weight of V(lambda) by Kostant's formula
// m(mu) = sum_w sgn(w) P(w(lambda + rho) - (mu + rho)), evaluated on the given weights.
inline std::map<IntWeight, long long> kostant_multiplicities(const RootSystem& rs, const IntWeight& lambda,
                                                             const std::vector<IntWeight>& mus) {
    const int r = rs.rank();
    IntWeight lr = lambda;
    for (int& x : lr) x += 1;
    const std::vector<IntWeight> orbit = weyl_orbit(rs, lr);
    std::vector<int> sign;
    for (const auto& v : orbit) {
        int neg = 0;
        for (const auto& a : rs.positive_roots()) {
            long s = 0;
            for (int j = 0; j < r; ++j) s += static_cast<long>(v[j]) * a[j] * rs.lengths()[j];
            if (s < 0) ++neg;
        }
        sign.push_back(neg % 2 == 0 ? 1 : -1);
    }
    const ScaledInverse inv(rs);
    // w(lambda + rho) - (lambda + rho) in root coordinates.
    std::vector<Coords> shifts(orbit.size());
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        IntWeight f(r);
        for (int j = 0; j < r; ++j) f[j] = orbit[k][j] - lr[j];
        inv.apply(f, shifts[k]);
    }
    PartitionFunction P(rs);
    std::map<IntWeight, long long> out;
    for (const auto& mu : mus) {
        IntWeight f(r);
        for (int j = 0; j < r; ++j) f[j] = lambda[j] - mu[j];
        Coords base;
        if (!inv.apply(f, base)) {
            out[mu] = 0;
            continue;
        }
        long long m = 0;
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            Coords c = base;
            bool nonneg = true;
            for (int j = 0; j < r && nonneg; ++j) {
                c[j] += shifts[k][j];
                if (c[j] < 0) nonneg = false;
            }
            if (!nonneg) continue;
            m += sign[k] * P(c);
        }
        out[mu] = m;
    }
    return out;
}

// Dominant weights lambda with dim V(lambda) <= bound, by monotone search over fundamental coordinates.
inline std::vector<IntWeight> small_dominant_weights(const RootSystem& rs, long long bound) {
    std::vector<IntWeight> out;
    std::set<IntWeight> seen;
    std::deque<IntWeight> queue{IntWeight(rs.rank(), 0)};
    seen.insert(queue.front());
    while (!queue.empty()) {
        IntWeight w = queue.front();
        queue.pop_front();
        out.push_back(w);
        for (int i = 0; i < rs.rank(); ++i) {
            IntWeight v = w;
            ++v[i];
            if (seen.count(v)) continue;
            if (hodgeorbit::weyl_dimension(rs, hodgeorbit::Weight::from_ints(v)) > bound) continue;
            seen.insert(v);
            queue.push_back(v);
        }
    }
    return out;
}

// |Delta^+| by the classical formulas.
inline int classical_positive_count(const hodgeorbit::LieType& t) {
    const int r = t.rank;
    switch (t.family) {
        case hodgeorbit::Family::A: return r * (r + 1) / 2;
        case hodgeorbit::Family::B:
        case hodgeorbit::Family::C: return r * r;
        case hodgeorbit::Family::D: return r * (r - 1);
        case hodgeorbit::Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
        case hodgeorbit::Family::F: return 24;
        case hodgeorbit::Family::G: return 6;
    }
    return -1;
}

}  // namespace oracle
