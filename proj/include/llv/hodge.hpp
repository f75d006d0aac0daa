#pragma once

// Hodge-theoretic invariants of g-characters through the weight dictionary
//   p = theta_0 + theta_1 + n,  q = theta_0 - theta_1 + n,
// cohomological degree k = 2*theta_0 + 2n. H^k sits at k with no further
// Tate-twist bookkeeping; all twists are absorbed into this one centering.

#include "llv/charring.hpp"

namespace llv {

struct HodgeDiamond {
    int n = 0;                            // half-dimension; grid is (2n+1)^2
    std::vector<std::vector<int64_t>> h;  // h[p][q]

    explicit HodgeDiamond(int half_dim = 0)
        : n(half_dim), h(2 * half_dim + 1, std::vector<int64_t>(2 * half_dim + 1, 0)) {}

    int64_t total() const {
        int64_t s = 0;
        for (auto& row : h)
            for (auto v : row) s = checked_add(s, v);
        return s;
    }

    bool symmetric() const {  // h^{p,q} = h^{q,p} and h^{p,q} = h^{2n-p,2n-q}
        int sz = 2 * n;
        for (int p = 0; p <= sz; ++p)
            for (int q = 0; q <= sz; ++q)
                if (h[p][q] != h[q][p] || h[p][q] != h[sz - p][sz - q]) return false;
        return true;
    }

    bool operator==(const HodgeDiamond& o) const { return n == o.n && h == o.h; }
};

struct BettiVector {
    int n = 0;
    std::vector<int64_t> b;  // b_0 .. b_{4n}

    explicit BettiVector(int half_dim = 0) : n(half_dim), b(4 * half_dim + 1, 0) {}

    int64_t euler() const {
        int64_t e = 0;
        for (size_t k = 0; k < b.size(); ++k)
            e = checked_add(e, k % 2 == 0 ? b[k] : checked_mul(b[k], -1));
        return e;
    }

    bool symmetric() const {
        for (size_t k = 0; k < b.size(); ++k)
            if (b[k] != b[b.size() - 1 - k]) return false;
        return true;
    }

    bool operator==(const BettiVector& o) const { return n == o.n && b == o.b; }
};

namespace detail {
inline void check_degree_range(const Character& x, int n) {
    for (auto& [w, m] : x.sup)
        if (std::abs(static_cast<int>(w.d[0])) > 2 * n)
            throw out_of_range_error("weight with |theta_0| > n cannot sit in H^*: " + w.str());
}
}  // namespace detail

inline HodgeDiamond hodge_diamond(const Character& x, int n) {
    detail::check_degree_range(x, n);
    HodgeDiamond hd(n);
    for (auto& [w, m] : x.sup) {
        int rank = x.alg.rank;
        int t0 = w.d[0];
        int t1 = rank >= 2 ? w.d[1] : 0;
        if ((t0 + t1) % 2 != 0)
            throw out_of_range_error("theta_0, theta_1 of mixed parity at " + w.str());
        int p = (t0 + t1) / 2 + n;
        int q = (t0 - t1) / 2 + n;
        if (p < 0 || p > 2 * n || q < 0 || q > 2 * n)
            throw out_of_range_error("Hodge bidegree out of grid at " + w.str());
        hd.h[p][q] = checked_add(hd.h[p][q], m);
    }
    return hd;
}

inline BettiVector betti(const Character& x, int n) {
    detail::check_degree_range(x, n);
    BettiVector bv(n);
    for (auto& [w, m] : x.sup) {
        int k = w.d[0] + 2 * n;  // doubled theta_0 + 2n
        bv.b[k] = checked_add(bv.b[k], m);
    }
    return bv;
}

// alternating sum by the sign (-1)^{2 theta_0}; half-integer weights count
// negatively, with no point evaluation needed
inline int64_t euler(const Character& x) {
    int64_t e = 0;
    for (auto& [w, m] : x.sup) e = checked_add(e, (w.d[0] & 1) ? checked_mul(m, -1) : m);
    return e;
}

// centered Hodge-Deligne polynomial: coefficient of s^{p-n} t^{q-n}; the
// exponent pair below is (p-n, q-n) = (theta_0+theta_1, theta_0-theta_1)
using Poly2 = std::map<std::pair<int, int>, int64_t>;
using Poly1 = std::map<int, int64_t>;

inline Poly2 hodge_deligne(const Character& x, int n) {
    detail::check_degree_range(x, n);
    Poly2 out;
    for (auto& [w, m] : x.sup) {
        int t0 = w.d[0];
        int t1 = x.alg.rank >= 2 ? w.d[1] : 0;
        if ((t0 + t1) % 2 != 0)
            throw out_of_range_error("theta_0, theta_1 of mixed parity at " + w.str());
        auto key = std::make_pair((t0 + t1) / 2, (t0 - t1) / 2);
        out[key] = checked_add(out[key], m);
        if (out[key] == 0) out.erase(key);
    }
    return out;
}

// centered Poincare polynomial: coefficient of t^{k-2n} = t^{2 theta_0}
inline Poly1 poincare(const Character& x, int n) {
    detail::check_degree_range(x, n);
    Poly1 out;
    for (auto& [w, m] : x.sup) {
        int e = w.d[0];
        out[e] = checked_add(out[e], m);
        if (out[e] == 0) out.erase(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Salamon's relation. General alternating form
//   2 sum_{i=1..2n} (-1)^i (3i^2 - n) b_{2n-i} = n b_{2n};
// with no odd cohomology it rewrites as sum_k (n-k)^2 b_{2k} = n e / 24, and
// both forms are evaluated and cross-checked in that case.

inline bool salamon_check(const BettiVector& bv) {
    int n = bv.n;
    int64_t lhs = 0;
    for (int i = 1; i <= 2 * n; ++i) {
        int64_t coef = checked_mul(3 * static_cast<int64_t>(i) * i - n, i % 2 == 0 ? 1 : -1);
        lhs = checked_add(lhs, checked_mul(coef, bv.b[2 * n - i]));
    }
    bool general_ok = checked_mul(lhs, 2) == checked_mul(static_cast<int64_t>(n), bv.b[2 * n]);

    bool has_odd = false;
    for (size_t k = 1; k < bv.b.size(); k += 2)
        if (bv.b[k] != 0) has_odd = true;
    if (!has_odd) {
        int64_t even_lhs = 0;
        for (int k = 0; k <= n; ++k) {
            int64_t c = static_cast<int64_t>(n - k) * (n - k);
            even_lhs = checked_add(even_lhs, checked_mul(c, bv.b[2 * k]));
        }
        bool even_ok = checked_mul(even_lhs, 24) == checked_mul(static_cast<int64_t>(n), bv.euler());
        if (even_ok != general_ok)
            throw error("Salamon forms disagree; Betti vector is inconsistent");
        return even_ok;
    }
    return general_ok;
}

// ---------------------------------------------------------------------------
// Nagai / conjecture inequalities on decompositions. mu is dominant, so the
// checks read off leading coordinates; polytope_check is the l1-ball test
// equivalent to the conjecture inequality for dominant weights.

inline bool nagai_check(const Decomposition& d, int n) {
    for (auto& [w, m] : d.parts) {
        if (!w.is_integral()) continue;  // the criterion concerns even cohomology
        int64_t s = w.d[0];
        if (w.rank >= 2) s += w.d[1];
        if (w.rank >= 3) s += std::abs(static_cast<int>(w.d[2]));
        if (s > 2 * n) return false;
    }
    return true;
}

inline bool conjecture_check(const Decomposition& d, int n) {
    for (auto& [w, m] : d.parts) {
        int64_t s = 0;
        for (int i = 0; i + 1 < w.rank; ++i) s += w.d[i];
        s += std::abs(static_cast<int>(w.d[w.rank - 1]));
        if (s > 2 * n) return false;
    }
    return true;
}

inline bool polytope_check(const Algebra& a, const Weight& w, int n) {
    check_rank(a, w);
    return w.l1_doubled() <= 2 * n;
}

// b2 >= 4n makes every half-integer dominant weight violate the conjecture
// inequality, forcing odd cohomology to vanish
inline bool odd_vanishing_bound(int b2, int n) { return b2 >= 4 * n; }

}  // namespace llv
