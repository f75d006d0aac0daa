#pragma once

// Generating-series engines: the K3^[n] product series over B_12, the Kum_n
// series over B_4 through B(q) and the Jordan-totient sum, their
// Goettsche-Soergel partition-sum counterparts (used as independent oracles),
// and the numeric/polynomial specializations.

#include "llv/hodge.hpp"

namespace llv {

struct CharSeries {
    Algebra alg;
    int order = 0;               // truncation degree N
    std::vector<Character> c;    // c[0] .. c[N]

    CharSeries(Algebra a, int n) : alg(a), order(n), c(n + 1, Character(a)) {}
};

namespace detail {

// in-place multiplication by (1 - x^w q^m)^{-1}, truncated at the order
inline void apply_geometric_factor(CharSeries& s, const Weight& w, int m) {
    for (int d = m; d <= s.order; ++d) {
        // c_d += x^w * c_{d-m}; ascending d makes the update geometric
        Character shifted = shift(s.c[d - m], w, 1);
        for (auto& [sw, sm] : shifted.sup) s.c[d].add_term(sw, sm);
    }
}

// in-place multiplication by (1 + x^w q^m)
inline void apply_binomial_factor(CharSeries& s, const Weight& w, int m) {
    for (int d = s.order; d >= m; --d) {
        Character shifted = shift(s.c[d - m], w, 1);
        for (auto& [sw, sm] : shifted.sup) s.c[d].add_term(sw, sm);
    }
}

inline std::vector<Weight> signed_unit_weights(const Algebra& a) {
    std::vector<Weight> out;
    for (int i = 0; i < a.rank; ++i)
        for (int sgn : {2, -2}) {
            Weight w(a.rank);
            w.d[i] = static_cast<int16_t>(sgn);
            out.push_back(w);
        }
    return out;
}

// the eight spin monomials of B(q): exponent vectors in {+-1/2}^4 with an
// even number of -1/2 entries
inline std::vector<Weight> kum_spin_weights() {
    std::vector<Weight> out;
    for (int mask = 0; mask < 16; ++mask) {
        if (__builtin_popcount(mask) & 1) continue;
        Weight w(4);
        for (int i = 0; i < 4; ++i) w.d[i] = (mask & (1 << i)) ? -1 : 1;
        out.push_back(w);
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// K3^[n]: product over m <= N of prod_i (1 - x_i q^m)^{-1} (1 - x_i^{-1} q^m)^{-1}
// over B_12; factors with m > N cannot touch degrees <= N.

inline CharSeries k3n_series(int order) {
    if (order < 0) throw precondition_error("series order must be >= 0");
    CharSeries s(Algebra::B(12), order);
    s.c[0] = trivial_character(s.alg);
    auto units = detail::signed_unit_weights(s.alg);
    for (int m = 1; m <= order; ++m)
        for (const Weight& w : units) detail::apply_geometric_factor(s, w, m);
    return s;
}

// ---------------------------------------------------------------------------
// Jordan totient J_4(d) = d^4 prod_{p|d} (1 - p^-4)

inline int64_t jordan_totient4(int64_t d) {
    if (d < 1) throw precondition_error("jordan_totient4 needs d >= 1");
    int64_t j = checked_mul(checked_mul(d, d), checked_mul(d, d));
    int64_t rest = d;
    for (int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        while (rest % p == 0) rest /= p;
        int64_t p4 = p * p * p * p;
        j = checked_mul(j / p4, p4 - 1);
    }
    if (rest > 1) {
        int64_t p4 = checked_mul(checked_mul(rest, rest), checked_mul(rest, rest));
        j = checked_mul(j / p4, p4 - 1);
    }
    return j;
}

// ---------------------------------------------------------------------------
// Kum_n: B(q) over B_4, then sum_d J_4(d) (B(q^d) - 1) divided by b_1 q. The
// division is one exact Laurent division per q-coefficient; b_1 is not
// invertible as a power series in the character ring.

inline CharSeries kum_b_series(int order) {
    CharSeries b(Algebra::B(4), order);
    b.c[0] = trivial_character(b.alg);
    auto units = detail::signed_unit_weights(b.alg);
    auto spins = detail::kum_spin_weights();
    for (int m = 1; m <= order; ++m) {
        for (const Weight& w : units) detail::apply_geometric_factor(b, w, m);
        for (const Weight& w : spins) detail::apply_binomial_factor(b, w, m);
    }
    return b;
}

inline CharSeries kumn_series(int order) {
    if (order < 0) throw precondition_error("series order must be >= 0");
    CharSeries b = kum_b_series(order + 1);
    const Character& b1 = b.c[1];
    CharSeries s(Algebra::B(4), order);
    for (int n = 0; n <= order; ++n) {
        // numerator coefficient of q^{n+1} in sum_d J_4(d) (B(q^d) - 1)
        Character numer(s.alg);
        for (int d = 1; d <= n + 1; ++d)
            if ((n + 1) % d == 0)
                numer = add(numer, scale(b.c[(n + 1) / d], jordan_totient4(d)));
        s.c[n] = exact_divide(numer, b1);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Partitions of n as exponent tuples (a_1, ..., a_n) with sum i*a_i = n.

inline std::vector<std::vector<int>> partitions(int n) {
    if (n < 0) throw precondition_error("partitions of a negative integer");
    std::vector<std::vector<int>> out;
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            out.push_back(a);
            return;
        }
        for (int i = std::min(maxpart, remaining); i >= 1; --i) {
            a[i - 1] += 1;
            rec(remaining - i, i);
            a[i - 1] -= 1;
        }
    };
    if (n == 0)
        out.push_back({});
    else
        rec(n, n);
    return out;
}

// ---------------------------------------------------------------------------
// Goettsche-Soergel partition sum for K3^[n] over D_12 (W the 24-dimensional
// standard module of the Mukai lattice); independent oracle for k3n_series.

inline Character gs_k3(int n) {
    Algebra d12 = Algebra::D(12);
    Character W(d12);
    for (const Weight& w : detail::signed_unit_weights(d12)) W.add_term(w, 1);
    std::vector<Character> sym_cache;  // sym_cache[a] = Sym^a W
    sym_cache.push_back(trivial_character(d12));
    for (int a = 1; a <= n; ++a) sym_cache.push_back(sym_power(W, a));
    Character total(d12);
    for (const auto& a : partitions(n)) {
        Character term = trivial_character(d12);
        for (int i = 0; i < static_cast<int>(a.size()); ++i)
            if (a[i] > 0) term = mul(term, sym_cache[a[i]]);
        total = add(total, term);
    }
    return total;
}

// ---------------------------------------------------------------------------
// The Kummer tensor identity over D_4:
//   ch(H^*(Kum_n)) * ch(W + U) = sum_{alpha |- n+1} g(alpha)^4 prod_i H(a_i),
// with H(a) = sum_j Sym^{a-j} W * wedge^j U, W the standard module and U the
// semi-spin module of so(8).

inline bool gs_kum_identity_check(int n) {
    if (n < 1) throw precondition_error("gs_kum_identity_check needs n >= 1");
    Algebra d4 = Algebra::D(4);
    Character W(d4), U(d4);
    for (const Weight& w : detail::signed_unit_weights(d4)) W.add_term(w, 1);
    for (const Weight& w : detail::kum_spin_weights()) U.add_term(w, 1);

    std::vector<Character> H;  // H[a]
    for (int a = 0; a <= n + 1; ++a) {
        Character acc(d4);
        for (int j = 0; j <= a; ++j) acc = add(acc, mul(sym_power(W, a - j), ext_power(U, j)));
        H.push_back(acc);
    }

    Character rhs(d4);
    for (const auto& a : partitions(n + 1)) {
        int g = 0;
        for (int i = 0; i < static_cast<int>(a.size()); ++i)
            if (a[i] > 0) g = std::gcd(g, i + 1);
        int64_t g4 = static_cast<int64_t>(g) * g * g * g;
        Character term = trivial_character(d4);
        for (int i = 0; i < static_cast<int>(a.size()); ++i)
            if (a[i] > 0) term = mul(term, H[a[i]]);
        rhs = add(rhs, scale(term, g4));
    }

    Character cn = kumn_series(n).c[n];
    Character lhs = mul(branch_so(cn), add(W, U));
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Numeric / polynomial specializations. The K3 series specialize factor by
// factor (the standard substitutions turn the character product into scalar
// Laurent-coefficient products); the Kum series specialize through the
// character coefficients, which are cheap over B_4.

// Euler: prod (1 - q^m)^{-24}
inline std::vector<int64_t> euler_series_k3(int order) {
    std::vector<int64_t> c(order + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= order; ++m)
        for (int rep = 0; rep < 24; ++rep)
            for (int d = m; d <= order; ++d) c[d] = checked_add(c[d], c[d - m]);
    return c;
}

namespace detail {

inline void poly1_geometric(std::vector<Poly1>& c, int e, int m) {
    int order = static_cast<int>(c.size()) - 1;
    for (int d = m; d <= order; ++d)
        for (auto& [k, v] : c[d - m]) {
            auto& slot = c[d][k + e];
            slot = checked_add(slot, v);
            if (slot == 0) c[d].erase(k + e);
        }
}

inline void poly2_geometric(std::vector<Poly2>& c, std::pair<int, int> e, int m) {
    int order = static_cast<int>(c.size()) - 1;
    for (int d = m; d <= order; ++d)
        for (auto& [k, v] : c[d - m]) {
            auto key = std::make_pair(k.first + e.first, k.second + e.second);
            auto& slot = c[d][key];
            slot = checked_add(slot, v);
            if (slot == 0) c[d].erase(key);
        }
}

}  // namespace detail

// Poincare: prod 1/((1 - t^2 q^m)(1 - t^-2 q^m)(1 - q^m)^22), coefficient of
// q^n carrying b_k in the t^{k-2n} term
inline std::vector<Poly1> poincare_series_k3(int order) {
    std::vector<Poly1> c(order + 1);
    c[0][0] = 1;
    for (int m = 1; m <= order; ++m) {
        detail::poly1_geometric(c, 2, m);
        detail::poly1_geometric(c, -2, m);
        for (int rep = 0; rep < 22; ++rep) detail::poly1_geometric(c, 0, m);
    }
    return c;
}

// Hodge-Deligne: prod 1/((1-stq^m)(1-st^-1 q^m)(1-s^-1 t q^m)(1-s^-1 t^-1 q^m)(1-q^m)^20)
inline std::vector<Poly2> hd_series_k3(int order) {
    std::vector<Poly2> c(order + 1);
    c[0][{0, 0}] = 1;
    for (int m = 1; m <= order; ++m) {
        detail::poly2_geometric(c, {1, 1}, m);
        detail::poly2_geometric(c, {1, -1}, m);
        detail::poly2_geometric(c, {-1, 1}, m);
        detail::poly2_geometric(c, {-1, -1}, m);
        for (int rep = 0; rep < 20; ++rep) detail::poly2_geometric(c, {0, 0}, m);
    }
    return c;
}

inline std::vector<int64_t> euler_series_kum(int order) {
    CharSeries s = kumn_series(order);
    std::vector<int64_t> out;
    for (int n = 0; n <= order; ++n) out.push_back(euler(s.c[n]));
    return out;
}

inline std::vector<Poly1> poincare_series_kum(int order) {
    CharSeries s = kumn_series(order);
    std::vector<Poly1> out;
    for (int n = 0; n <= order; ++n) out.push_back(poincare(s.c[n], n));
    return out;
}

inline std::vector<Poly2> hd_series_kum(int order) {
    CharSeries s = kumn_series(order);
    std::vector<Poly2> out;
    for (int n = 0; n <= order; ++n) out.push_back(hodge_deligne(s.c[n], n));
    return out;
}

// the Hodge-Deligne specialization of b_1: (s+1)^2 (t+1)^2 / st
inline Poly2 kum_hd_normalizer() {
    Poly2 p;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            int64_t c = (i == 1 ? 2 : 1) * (j == 1 ? 2 : 1);
            p[{i - 1, j - 1}] = c;
        }
    return p;
}

// hodge_deligne applied to a q-coefficient of B(q) (exponents theta_0 +- theta_1)
inline Poly2 hd_specialize(const Character& x) {
    Poly2 out;
    for (auto& [w, m] : x.sup) {
        int t0 = w.d[0], t1 = w.rank >= 2 ? w.d[1] : 0;
        auto key = std::make_pair((t0 + t1) / 2, (t0 - t1) / 2);
        out[key] = checked_add(out[key], m);
        if (out[key] == 0) out.erase(key);
    }
    return out;
}

}  // namespace llv
