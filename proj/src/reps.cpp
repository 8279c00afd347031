#include "hodgeorbit/reps.hpp"

#include "hodgeorbit/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>

namespace hodgeorbit {

Weight Weight::from_ints(const IntWeight& w) {
    Weight out;
    for (int x : w) out.fund.emplace_back(x);
    return out;
}

bool Weight::is_integral() const {
    return std::all_of(fund.begin(), fund.end(), [](const Rational& x) { return is_integer(x); });
}

bool Weight::is_dominant() const {
    return std::all_of(fund.begin(), fund.end(), [](const Rational& x) { return x >= 0; });
}

IntWeight Weight::to_ints() const {
    IntWeight w;
    for (const auto& x : fund) {
        if (!is_integer(x)) throw Error(ErrorCode::NotDominant, "weight is not integral");
        w.push_back(static_cast<int>(boost::multiprecision::numerator(x)));
    }
    return w;
}

std::vector<Rational> Weight::root_coords(const RootSystem& rs) const {
    const auto inv = inverse_cartan(rs);
    std::vector<Rational> c(rs.rank(), Rational(0));
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j) c[j] += fund[i] * inv[i][j];
    return c;
}

std::string format_weight(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.fund.size(); ++i) {
        if (i) s += ",";
        s += to_string(w.fund[i]);
    }
    return s;
}

std::vector<std::vector<Rational>> inverse_cartan(const RootSystem& rs) {
    const int r = rs.rank();
    std::vector<std::vector<Rational>> a(r, std::vector<Rational>(2 * r, Rational(0)));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) a[i][j] = rs.cartan()[i][j];
        a[i][r + i] = 1;
    }
    for (int col = 0; col < r; ++col) {
        int piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        Rational p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (int row = 0; row < r; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col];
            for (int k = 0; k < 2 * r; ++k) a[row][k] -= f * a[col][k];
        }
    }
    std::vector<std::vector<Rational>> inv(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) inv[i][j] = a[i][r + j];
    return inv;
}

std::vector<Weight> fundamental_weights(const RootSystem& rs) {
    std::vector<Weight> out;
    for (int i = 0; i < rs.rank(); ++i) {
        IntWeight w(rs.rank(), 0);
        w[i] = 1;
        out.push_back(Weight::from_ints(w));
    }
    return out;
}

Weight sum_of_fundamentals(const RootSystem& rs, const std::vector<int>& I) {
    IntWeight w(rs.rank(), 0);
    for (int i : normalize_index_set(rs, I)) w[i - 1] = 1;
    return Weight::from_ints(w);
}

Rational evaluate(const RootSystem& rs, const Weight& lambda, const GradingElement& T) {
    const auto c = lambda.root_coords(rs);
    Rational s = 0;
    for (int j = 0; j < rs.rank(); ++j) s += c[j] * T.coeffs[j];
    return s;
}

IntWeight root_to_weight(const RootSystem& rs, const Coords& alpha) {
    IntWeight w(rs.rank(), 0);
    for (int j = 0; j < rs.rank(); ++j)
        for (int i = 0; i < rs.rank(); ++i) w[j] += alpha[i] * rs.cartan()[i][j];
    return w;
}

IntWeight dominant_representative(const RootSystem& rs, IntWeight w) {
    const int r = rs.rank();
    while (true) {
        int i = 0;
        while (i < r && w[i] >= 0) ++i;
        if (i == r) return w;
        const int c = w[i];
        for (int j = 0; j < r; ++j) w[j] -= c * rs.cartan()[i][j];
    }
}

Weight dual_weight(const RootSystem& rs, const Weight& lambda) {
    IntWeight w = lambda.to_ints();
    for (int& x : w) x = -x;
    return Weight::from_ints(dominant_representative(rs, w));
}

std::vector<Weight> weights_with_E_value_one(const RootSystem& rs, const GradingElement& E) {
    const int r = rs.rank();
    std::vector<Rational> val(r);
    for (int i = 0; i < r; ++i) {
        IntWeight w(r, 0);
        w[i] = 1;
        val[i] = evaluate(rs, Weight::from_ints(w), E);
        if (val[i] <= 0) throw Error(ErrorCode::IndexOutOfRange, "grading element must be a nonempty sum of S^i");
    }
    std::vector<Weight> out;
    IntWeight cur(r, 0);
    std::function<void(int, Rational)> rec = [&](int i, Rational remaining) {
        if (i == r) {
            if (remaining == 0) out.push_back(Weight::from_ints(cur));
            return;
        }
        for (int n = 0; val[i] * n <= remaining; ++n) {
            cur[i] = n;
            rec(i + 1, remaining - val[i] * n);
        }
        cur[i] = 0;
    };
    rec(0, Rational(1));
    for (const auto& w : out)
        if (evaluate(rs, dual_weight(rs, w), E) != 1)
            throw Error(ErrorCode::Internal, "dual weight of (" + format_weight(w) + ") has E-value != 1");
    std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) { return a.fund > b.fund; });
    return out;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_integral() || !lambda.is_dominant())
        throw Error(ErrorCode::NotDominant, "(" + format_weight(lambda) + ") is not dominant integral");
    Rational num = 1, den = 1;
    for (const auto& a : rs.positive_roots()) {
        Rational lr = 0;
        long rr = 0;
        for (int j = 0; j < rs.rank(); ++j) {
            lr += (lambda.fund[j] + 1) * rs.lengths()[j] * a[j];
            rr += static_cast<long>(rs.lengths()[j]) * a[j];
        }
        num *= lr;
        den *= rr;
    }
    Rational q = num / den;
    if (!is_integer(q)) throw Error(ErrorCode::Internal, "non-integral Weyl dimension");
    return boost::multiprecision::numerator(q);
}

long long dimension_cap() {
    if (const char* env = std::getenv("HODGEORBIT_DIM_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 1000000;
}

namespace {

long pair_with_root(const RootSystem& rs, const IntWeight& w, const Coords& alpha) {
    long s = 0;
    for (int j = 0; j < rs.rank(); ++j) s += static_cast<long>(w[j]) * rs.lengths()[j] * alpha[j];
    return s;
}

}  // namespace

WeightMultiset freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda, long long cap) {
    if (cap < 0) cap = dimension_cap();
    const BigInt dim = weyl_dimension(rs, lambda);
    if (dim > cap)
        throw Error(ErrorCode::DimensionCapExceeded, "dimension " + dim.str() + " exceeds cap " + std::to_string(cap));
    const int r = rs.rank();
    const IntWeight top = lambda.to_ints();

    std::vector<IntWeight> pos_w;
    for (const auto& a : rs.positive_roots()) pos_w.push_back(root_to_weight(rs, a));

    // Dominant weights below lambda, reached by subtracting positive roots; depth in root coordinates.
    std::map<IntWeight, Coords> depth;
    depth[top] = Coords(r, 0);
    std::deque<IntWeight> queue{top};
    while (!queue.empty()) {
        IntWeight mu = queue.front();
        queue.pop_front();
        const Coords g = depth[mu];
        for (std::size_t k = 0; k < pos_w.size(); ++k) {
            IntWeight nu = mu;
            bool dom = true;
            for (int j = 0; j < r; ++j) {
                nu[j] -= pos_w[k][j];
                if (nu[j] < 0) dom = false;
            }
            if (!dom || depth.count(nu)) continue;
            depth[nu] = g + rs.positive_roots()[k];
            queue.push_back(nu);
        }
    }
    std::vector<IntWeight> order;
    for (const auto& [w, g] : depth) order.push_back(w);
    std::stable_sort(order.begin(), order.end(),
                     [&](const IntWeight& a, const IntWeight& b) { return height(depth[a]) < height(depth[b]); });

    WeightMultiset out;
    out.highest = lambda;
    for (const auto& mu : order) {
        if (mu == top) {
            out.dominant[mu] = 1;
            continue;
        }
        IntWeight s(r);
        for (int j = 0; j < r; ++j) s[j] = top[j] + mu[j] + 2;
        const long lhs = pair_with_root(rs, s, depth[mu]);
        BigInt rhs = 0;
        for (std::size_t k = 0; k < pos_w.size(); ++k) {
            const Coords& alpha = rs.positive_roots()[k];
            const long mu_a = pair_with_root(rs, mu, alpha);
            const long aa = rs.inner(alpha, alpha);
            IntWeight nu = mu;
            for (int m = 1;; ++m) {
                for (int j = 0; j < r; ++j) nu[j] += pos_w[k][j];
                auto it = out.dominant.find(dominant_representative(rs, nu));
                if (it == out.dominant.end()) break;
                rhs += BigInt(mu_a + m * aa) * it->second;
            }
        }
        rhs *= 2;
        if (lhs <= 0 || rhs % lhs != 0) throw Error(ErrorCode::Internal, "Freudenthal recursion not integral");
        const BigInt m = rhs / lhs;
        if (m > 0) out.dominant[mu] = static_cast<long long>(m);
    }

    for (const auto& [mu, m] : out.dominant) {
        std::set<IntWeight> orbit{mu};
        std::vector<IntWeight> stack{mu};
        while (!stack.empty()) {
            IntWeight w = stack.back();
            stack.pop_back();
            for (int i = 0; i < r; ++i) {
                if (w[i] == 0) continue;
                IntWeight v = w;
                for (int j = 0; j < r; ++j) v[j] -= w[i] * rs.cartan()[i][j];
                if (orbit.insert(v).second) stack.push_back(v);
            }
        }
        for (const auto& w : orbit) out.entries[w] = m;
        out.total += m * static_cast<long long>(orbit.size());
    }
    if (BigInt(out.total) != dim) throw Error(ErrorCode::Internal, "multiplicities do not sum to Weyl dimension");
    return out;
}

std::map<Rational, long long> rep_hodge_numbers(const RootSystem& rs, const Weight& lambda, const GradingElement& E) {
    const auto wm = freudenthal_multiplicities(rs, lambda);
    const int r = rs.rank();
    std::vector<Rational> val(r);
    for (int i = 0; i < r; ++i) {
        IntWeight w(r, 0);
        w[i] = 1;
        val[i] = evaluate(rs, Weight::from_ints(w), E);
    }
    std::map<Rational, long long> h;
    for (const auto& [w, m] : wm.entries) {
        Rational e = 0;
        for (int i = 0; i < r; ++i) e += val[i] * w[i];
        h[e] += m;
    }
    return h;
}

std::vector<long long> hodge_sequence(const std::map<Rational, long long>& h) {
    std::vector<long long> out;
    for (auto it = h.rbegin(); it != h.rend(); ++it) out.push_back(it->second);
    return out;
}

BigInt degree_by_product(const RootSystem& rs, const Weight& mu, int n) {
    Rational prod = 1;
    for (const auto& a : rs.positive_roots()) {
        Rational ma = 0;
        long ra = 0;
        for (int j = 0; j < rs.rank(); ++j) {
            ma += mu.fund[j] * rs.lengths()[j] * a[j];
            ra += static_cast<long>(rs.lengths()[j]) * a[j];
        }
        if (ma != 0) prod *= ma / ra;
    }
    Rational d = prod * factorial(static_cast<unsigned>(n));
    if (!is_integer(d)) throw Error(ErrorCode::Internal, "non-integral degree");
    return boost::multiprecision::numerator(d);
}

BigInt degree_by_hilbert_fit(const RootSystem& rs, const Weight& mu, int n) {
    BigInt acc = 0;
    BigInt binom = 1;  // C(n, k)
    for (int k = 0; k <= n; ++k) {
        Weight km;
        for (const auto& x : mu.fund) km.fund.push_back(x * k);
        BigInt term = binom * weyl_dimension(rs, km);
        if ((n - k) % 2 == 0)
            acc += term;
        else
            acc -= term;
        binom = binom * (n - k) / (k + 1);
    }
    return acc;
}

EmbeddingDegree embedding_degree(const RootSystem& rs, const std::vector<int>& I) {
    const ParabolicData pd = parabolic(rs, I);
    const Weight mu = sum_of_fundamentals(rs, pd.index_set);
    EmbeddingDegree out;
    out.n = pd.flag_dim;
    out.d = degree_by_product(rs, mu, out.n);
    const BigInt fit = degree_by_hilbert_fit(rs, mu, out.n);
    if (fit != out.d)
        throw Error(ErrorCode::Internal, "degree mismatch: product " + out.d.str() + " vs fit " + fit.str());
    out.N = weyl_dimension(rs, mu) - 1;
    return out;
}

}  // namespace hodgeorbit
