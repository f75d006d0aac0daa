#pragma once

// Arithmetic in the representation ring: pointwise sums, support convolution,
// Sym/wedge plethysms through power-sum recursions, greedy decomposition into
// irreducibles, exact Laurent division, and the restriction/grading maps
// between orthogonal algebras of neighboring dimensions.

#include "llv/weightlab.hpp"

namespace llv {

inline void check_same_algebra(const Character& x, const Character& y) {
    if (x.alg != y.alg)
        throw dimension_mismatch_error("algebra mismatch: " + x.alg.name() + " vs " +
                                       y.alg.name());
}

inline Character add(const Character& x, const Character& y) {
    check_same_algebra(x, y);
    Character out = x;
    for (auto& [w, m] : y.sup) out.add_term(w, m);
    return out;
}

inline Character sub(const Character& x, const Character& y) {
    check_same_algebra(x, y);
    Character out = x;
    for (auto& [w, m] : y.sup) out.add_term(w, checked_mul(m, -1));
    return out;
}

inline Character scale(const Character& x, int64_t c) {
    Character out(x.alg);
    if (c == 0) return out;
    for (auto& [w, m] : x.sup) out.sup.emplace(w, checked_mul(m, c));
    return out;
}

inline Character mul(const Character& x, const Character& y) {
    check_same_algebra(x, y);
    Character out(x.alg);
    const Character& small = x.sup.size() <= y.sup.size() ? x : y;
    const Character& big = x.sup.size() <= y.sup.size() ? y : x;
    for (auto& [w1, m1] : small.sup)
        for (auto& [w2, m2] : big.sup) {
            Weight w(x.alg.rank);
            for (int i = 0; i < x.alg.rank; ++i) {
                int v = w1.d[i] + w2.d[i];
                if (v < INT16_MIN || v > INT16_MAX)
                    throw out_of_range_error("weight coordinate overflow in product");
                w.d[i] = static_cast<int16_t>(v);
            }
            out.add_term(w, checked_mul(m1, m2));
        }
    return out;
}

// multiply by a single monomial (weight shift)
inline Character shift(const Character& x, const Weight& w0, int64_t c) {
    Character out(x.alg);
    for (auto& [w, m] : x.sup) {
        Weight s(x.alg.rank);
        for (int i = 0; i < x.alg.rank; ++i) {
            int v = w.d[i] + w0.d[i];
            if (v < INT16_MIN || v > INT16_MAX)
                throw out_of_range_error("weight coordinate overflow in shift");
            s.d[i] = static_cast<int16_t>(v);
        }
        out.sup.emplace(s, checked_mul(m, c));
    }
    return out;
}

// Adams operation: every weight scaled by j
inline Character adams(const Character& x, int j) {
    Character out(x.alg);
    for (auto& [w, m] : x.sup) {
        Weight s(x.alg.rank);
        for (int i = 0; i < x.alg.rank; ++i) {
            int v = w.d[i] * j;
            if (v < INT16_MIN || v > INT16_MAX)
                throw out_of_range_error("weight coordinate overflow in adams");
            s.d[i] = static_cast<int16_t>(v);
        }
        out.add_term(s, m);
    }
    return out;
}

inline Character divide_by_scalar(const Character& x, int64_t k) {
    Character out(x.alg);
    for (auto& [w, m] : x.sup) {
        if (m % k != 0) throw indivisible_error("character not divisible by " + std::to_string(k));
        out.sup.emplace(w, m / k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Plethysms: k h_k = sum_{j=1..k} p_j h_{k-j} and the signed wedge variant,
// with p_j the Adams operation. Avoids the combinatorial blow-up of expanding
// multisets over supports with large multiplicities.

inline Character sym_power(const Character& x, int k) {
    if (k < 0) throw precondition_error("sym_power needs k >= 0");
    std::vector<Character> h;
    h.push_back(trivial_character(x.alg));
    for (int d = 1; d <= k; ++d) {
        Character acc(x.alg);
        for (int j = 1; j <= d; ++j) acc = add(acc, mul(adams(x, j), h[d - j]));
        h.push_back(divide_by_scalar(acc, d));
    }
    return h[k];
}

inline Character ext_power(const Character& x, int k) {
    if (k < 0) throw precondition_error("ext_power needs k >= 0");
    std::vector<Character> e;
    e.push_back(trivial_character(x.alg));
    for (int d = 1; d <= k; ++d) {
        Character acc(x.alg);
        for (int j = 1; j <= d; ++j) {
            Character t = mul(adams(x, j), e[d - j]);
            acc = j % 2 == 1 ? add(acc, t) : sub(acc, t);
        }
        e.push_back(divide_by_scalar(acc, d));
    }
    return e[k];
}

// ---------------------------------------------------------------------------
// Greedy decomposition: repeatedly strip the rho-height-maximal dominant
// weight. A negative leading coefficient or a non-dominant maximum signals
// that the input was not a genuine character.

inline std::pair<Weight, int64_t> leading_term(const Character& x) {
    if (x.empty()) throw precondition_error("leading_term of empty character");
    const Weight* best = nullptr;
    int64_t bm = 0;
    for (auto& [w, m] : x.sup)
        if (!best || weight_before(x.alg, w, *best)) {
            best = &w;
            bm = m;
        }
    return {*best, bm};
}

inline Decomposition decompose(const Character& x) {
    Character rem = x;
    Decomposition dec(x.alg);
    while (!rem.empty()) {
        auto [w, c] = leading_term(rem);
        if (!is_dominant_integral(x.alg, w))
            throw not_a_character_error("leading weight " + w.str() + " is not dominant");
        if (c < 0)
            throw not_a_character_error("negative coefficient " + std::to_string(c) + " at " +
                                        w.str());
        dec.add(w, c);
        rem = sub(rem, scale(irreducible_character(x.alg, w), c));
    }
    dec.sort_canonical();
    return dec;
}

inline Character reconstruct(const Decomposition& d) {
    Character out(d.alg);
    for (auto& [w, m] : d.parts) out = add(out, scale(irreducible_character(d.alg, w), m));
    return out;
}

// ---------------------------------------------------------------------------
// Exact division by leading-term elimination under the lexicographic term
// order (x_0 most significant). Any admissible order works because callers
// divide only when the quotient exists; a nonzero remainder or a runaway
// elimination reports indivisibility.

inline Character exact_divide(const Character& num, const Character& den,
                              size_t step_cap = size_t(1) << 21) {
    check_same_algebra(num, den);
    if (den.empty()) throw precondition_error("division by the zero character");
    auto lex_leading = [](const Character& c) {
        auto it = c.sup.begin();
        auto best = it;
        for (++it; it != c.sup.end(); ++it)
            if (best->first < it->first) best = it;
        return best;
    };
    auto dlt = lex_leading(den);
    const Weight dw = dlt->first;
    const int64_t dc = dlt->second;

    Character rem = num, quot(num.alg);
    size_t steps = 0;
    while (!rem.empty()) {
        if (++steps > step_cap) throw indivisible_error("division did not terminate");
        auto rlt = lex_leading(rem);
        if (rlt->second % dc != 0)
            throw indivisible_error("leading coefficient not divisible at " + rlt->first.str());
        Weight qw(num.alg.rank);
        for (int i = 0; i < num.alg.rank; ++i) {
            int v = rlt->first.d[i] - dw.d[i];
            if (v < INT16_MIN || v > INT16_MAX) throw indivisible_error("quotient degree overflow");
            qw.d[i] = static_cast<int16_t>(v);
        }
        int64_t qc = rlt->second / dc;
        quot.add_term(qw, qc);
        rem = sub(rem, shift(den, qw, qc));
    }
    return quot;
}

// ---------------------------------------------------------------------------
// Restriction along so(m) in so(m+1), at the character level. For odd m+1
// (type B_r down to D_r) the two algebras share the Cartan, so the Laurent
// polynomial is unchanged and only the acting Weyl group shrinks. For even
// m+1 (type D_r down to B_{r-1}) the last epsilon-coordinate is discarded
// (its variable is specialized to 1).

inline Character branch_so(const Character& x) {
    if (x.alg.family == Family::B) {
        if (x.alg.rank < 2)
            throw precondition_error("cannot restrict " + x.alg.name() + " below so(3)");
        Character out(Algebra::D(x.alg.rank));
        out.sup = x.sup;
        return out;
    }
    Character out(Algebra::B(x.alg.rank - 1));
    for (auto& [w, m] : x.sup) {
        Weight p(out.alg.rank);
        for (int i = 0; i < out.alg.rank; ++i) p.d[i] = w.d[i];
        out.add_term(p, m);
    }
    return out;
}

inline Character restrict_with_trivials(const Character& x, int t) {
    Character out = x;
    for (int s = 0; s < t; ++s) out = branch_so(out);
    return out;
}

// ---------------------------------------------------------------------------
// The degree grading of the Mukai completion: a character of g = so(b2+2)
// splits over gbar = so(b2) by the exponent of the distinguished variable
// x_0, which records the cohomological degree 2*theta_0 + 2n.

inline std::map<int, Character> mukai_grade(const Character& x, int n) {
    Algebra bar(x.alg.family, x.alg.rank - 1);
    std::map<int, Character> out;
    for (auto& [w, m] : x.sup) {
        int degree = w.d[0] + 2 * n;  // d[0] is the doubled theta_0
        if (degree < 0)
            throw out_of_range_error("weight with theta_0 < -n cannot sit in H^*: " + w.str());
        Weight p(bar.rank);
        for (int i = 0; i < bar.rank; ++i) p.d[i] = w.d[i + 1];
        auto it = out.find(degree);
        if (it == out.end()) it = out.emplace(degree, Character(bar)).first;
        it->second.add_term(p, m);
    }
    return out;
}

}  // namespace llv
