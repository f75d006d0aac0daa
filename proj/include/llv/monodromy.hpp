#pragma once

// Log-monodromy normal forms on the split quadratic space of dimension b2,
// brute-forced nilpotency indices of the induced derivation action on
// Sym/wedge tensor modules, the closed-form index formulas, and the Nagai
// verdict for a given LLV decomposition.

#include "llv/charring.hpp"

namespace llv {

// ---------------------------------------------------------------------------
// NilpotentOperator: N on the basis {e_1..e_r, e'_1..e'_r (, e_{r+1})} with
// the split Gram form q(e_i, e'_j) = delta_ij, q(e_{r+1}, e_{r+1}) = 1.

struct NilpotentOperator {
    int b2 = 0;
    int nu2 = 0;
    // action[i] = list of (target index, coefficient) for N(basis_i)
    std::vector<std::vector<std::pair<int, int64_t>>> action;

    int r() const { return b2 / 2; }

    int64_t gram(int i, int j) const {
        int rr = r();
        if (i < rr && j == i + rr) return 1;
        if (j < rr && i == j + rr) return 1;
        if (b2 % 2 == 1 && i == b2 - 1 && j == b2 - 1) return 1;
        return 0;
    }

    // q(N x_i, x_j) + q(x_i, N x_j) = 0 on all basis pairs
    bool is_gram_skew() const {
        for (int i = 0; i < b2; ++i)
            for (int j = 0; j < b2; ++j) {
                int64_t s = 0;
                for (auto& [t, c] : action[i]) s += c * gram(t, j);
                for (auto& [t, c] : action[j]) s += c * gram(i, t);
                if (s != 0) return false;
            }
        return true;
    }

    // ranks of N and N^2 on the standard module (exact fraction-free Gauss)
    std::pair<int, int> image_dims() const;

    int nilpotency_index_on_standard() const;
};

namespace detail {

inline int rank_of_int_matrix(std::vector<std::vector<int64_t>> m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int rr = rank; rr < rows; ++rr)
            if (m[rr][c] != 0) {
                pivot = rr;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int rr = rank + 1; rr < rows; ++rr) {
            if (m[rr][c] == 0) continue;
            int64_t a = m[rank][c], b = m[rr][c];
            int64_t g = std::gcd(std::abs(a), std::abs(b));
            int64_t fa = b / g, fb = a / g;
            for (int cc = 0; cc < cols; ++cc)
                m[rr][cc] = checked_sub(checked_mul(m[rr][cc], fb), checked_mul(m[rank][cc], fa));
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline std::pair<int, int> NilpotentOperator::image_dims() const {
    std::vector<std::vector<int64_t>> n1(b2, std::vector<int64_t>(b2, 0));
    for (int i = 0; i < b2; ++i)
        for (auto& [t, c] : action[i]) n1[i][t] += c;  // row i = image of basis i
    std::vector<std::vector<int64_t>> n2(b2, std::vector<int64_t>(b2, 0));
    for (int i = 0; i < b2; ++i)
        for (auto& [t, c] : action[i])
            for (auto& [t2, c2] : action[t]) n2[i][t2] += c * c2;
    return {detail::rank_of_int_matrix(n1), detail::rank_of_int_matrix(n2)};
}

inline int NilpotentOperator::nilpotency_index_on_standard() const {
    int best = 0;
    for (int v = 0; v < b2; ++v) {
        std::map<int, int64_t> vec{{v, 1}};
        int k = 0;
        while (!vec.empty() && k <= b2 + 1) {
            std::map<int, int64_t> nxt;
            for (auto& [i, c] : vec)
                for (auto& [t, cc] : action[i]) {
                    nxt[t] += checked_mul(c, cc);
                    if (nxt[t] == 0) nxt.erase(t);
                }
            vec = std::move(nxt);
            if (!vec.empty()) ++k;
        }
        best = std::max(best, k);
    }
    return best;
}

// the exact matrices of the two normal forms:
//   nu2 = 1:  N e_1 = e'_2,  N e_2 = -e'_1
//   nu2 = 2:  N e_1 = e_2 + e'_2,  N e_2 = N e'_2 = -e'_1
inline NilpotentOperator normal_form(int b2, int nu2) {
    if (b2 < 4) throw precondition_error("normal_form needs b2 >= 4 (b2 = 3 is handled in closed form)");
    if (nu2 != 1 && nu2 != 2) throw precondition_error("nu2 must be 1 or 2");
    NilpotentOperator op;
    op.b2 = b2;
    op.nu2 = nu2;
    op.action.assign(b2, {});
    int r = b2 / 2;
    if (nu2 == 1) {
        op.action[0] = {{r + 1, 1}};  // e_1 -> e'_2
        op.action[1] = {{r, -1}};     // e_2 -> -e'_1
    } else {
        op.action[0] = {{1, 1}, {r + 1, 1}};  // e_1 -> e_2 + e'_2
        op.action[1] = {{r, -1}};             // e_2 -> -e'_1
        op.action[r + 1] = {{r, -1}};         // e'_2 -> -e'_1
    }
    return op;
}

// ---------------------------------------------------------------------------
// Explicit modules: W = Sym^{a_1} Vbar (x) Sym^{a_2}(wedge^2 Vbar) (x) ...
// The reducible blueprint contains V_lambda and realizes its index, so the
// brute-forced index of W is the oracle value for lambda.

struct ModuleBlueprint {
    std::vector<std::pair<int, int>> factors;  // (wedge degree i, sym exponent a), a >= 1
};

inline ModuleBlueprint blueprint_from_weight(const Weight& lam) {
    if (!lam.is_integral()) throw precondition_error("blueprints take integer weights");
    int r = lam.rank;
    std::vector<int64_t> v(r);
    for (int i = 0; i < r; ++i) v[i] = lam.d[i] / 2;
    ModuleBlueprint bp;
    for (int i = 1; i <= r; ++i) {
        int64_t a;
        if (i < r - 1)
            a = v[i - 1] - v[i];
        else if (i == r - 1)
            a = r >= 2 ? v[r - 2] - std::abs(v[r - 1]) : v[0];
        else
            a = std::abs(v[r - 1]);
        if (r == 1) a = v[0];  // rank 1: lambda_1 copies of Vbar
        if (a > 0) bp.factors.emplace_back(i, static_cast<int>(a));
        if (r == 1) break;
    }
    return bp;
}

inline int64_t binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

inline int64_t blueprint_dim(int b2, const ModuleBlueprint& bp) {
    int64_t dim = 1;
    for (auto& [i, a] : bp.factors) {
        int64_t f = binomial(b2, i);
        dim = checked_mul(dim, binomial(f + a - 1, a));
    }
    return dim;
}

namespace detail {

// sparse operator on an indexed basis
using SparseOp = std::vector<std::vector<std::pair<int, int64_t>>>;

// chains N^k v over all basis vectors; returns the largest k with N^k != 0,
// early-exiting once the Leibniz upper bound is reached
inline int sparse_op_index(const SparseOp& op, int leibniz_cap) {
    int dim = static_cast<int>(op.size());
    std::vector<int64_t> cur(dim, 0), nxt(dim, 0);
    std::vector<int> cur_idx, nxt_idx;
    int best = 0;
    for (int v = 0; v < dim && best < leibniz_cap; ++v) {
        cur_idx.clear();
        cur[v] = 1;
        cur_idx.push_back(v);
        int k = 0;
        while (!cur_idx.empty()) {
            nxt_idx.clear();
            for (int i : cur_idx) {
                int64_t c = cur[i];
                if (c == 0) continue;
                for (auto& [t, cc] : op[i]) {
                    if (nxt[t] == 0) nxt_idx.push_back(t);
                    nxt[t] = checked_add(nxt[t], checked_mul(c, cc));
                }
            }
            for (int i : cur_idx) cur[i] = 0;
            // drop cancelled entries
            std::vector<int> live;
            for (int t : nxt_idx)
                if (nxt[t] != 0) live.push_back(t);
            if (live.empty()) {
                for (int t : nxt_idx) nxt[t] = 0;
                break;
            }
            ++k;
            for (int t : nxt_idx) {
                cur[t] = nxt[t];
                nxt[t] = 0;
            }
            cur_idx = std::move(live);
            if (k > leibniz_cap)
                throw error("chain exceeds the Leibniz bound; operator is not nilpotent");
        }
        for (int i : cur_idx) cur[i] = 0;
        best = std::max(best, k);
    }
    return best;
}

// derivation action on wedge^i of a space with operator base_op
inline SparseOp wedge_op(int base_dim, const SparseOp& base_op, int wedge_deg,
                         std::vector<std::vector<int>>& basis_out) {
    std::map<std::vector<int>, int> index;
    basis_out.clear();
    std::vector<int> tup(wedge_deg);
    std::function<void(int, int)> gen = [&](int pos, int start) {
        if (pos == wedge_deg) {
            index.emplace(tup, static_cast<int>(basis_out.size()));
            basis_out.push_back(tup);
            return;
        }
        for (int v = start; v < base_dim; ++v) {
            tup[pos] = v;
            gen(pos + 1, v + 1);
        }
    };
    gen(0, 0);
    SparseOp op(basis_out.size());
    for (size_t b = 0; b < basis_out.size(); ++b) {
        std::map<int, int64_t> acc;
        for (int pos = 0; pos < wedge_deg; ++pos)
            for (auto& [img, c] : base_op[basis_out[b][pos]]) {
                std::vector<int> t = basis_out[b];
                t[pos] = img;
                // sort with sign; repeated index kills the term
                int sign = 1;
                bool dead = false;
                for (int i = 0; i < wedge_deg && !dead; ++i)
                    for (int j = i + 1; j < wedge_deg; ++j) {
                        if (t[i] == t[j]) {
                            dead = true;
                            break;
                        }
                        if (t[i] > t[j]) {
                            std::swap(t[i], t[j]);
                            sign = -sign;
                        }
                    }
                if (dead) continue;
                acc[index.at(t)] += c * sign;
            }
        for (auto& [t, c] : acc)
            if (c != 0) op[b].emplace_back(t, c);
    }
    return op;
}

// derivation action on Sym^a of a space with operator base_op
inline SparseOp sym_op(int base_dim, const SparseOp& base_op, int a) {
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> basis;
    std::vector<int> tup(a);
    std::function<void(int, int)> gen = [&](int pos, int start) {
        if (pos == a) {
            index.emplace(tup, static_cast<int>(basis.size()));
            basis.push_back(tup);
            return;
        }
        for (int v = start; v < base_dim; ++v) {
            tup[pos] = v;
            gen(pos + 1, v);
        }
    };
    gen(0, 0);
    SparseOp op(basis.size());
    for (size_t b = 0; b < basis.size(); ++b) {
        std::map<int, int64_t> acc;
        for (int pos = 0; pos < a; ++pos)
            for (auto& [img, c] : base_op[basis[b][pos]]) {
                std::vector<int> t = basis[b];
                t[pos] = img;
                std::sort(t.begin(), t.end());
                acc[index.at(t)] += c;
            }
        for (auto& [t, c] : acc)
            if (c != 0) op[b].emplace_back(t, c);
    }
    return op;
}

// derivation action on the tensor product of factor spaces
inline SparseOp tensor_op(const std::vector<std::pair<int, SparseOp>>& factors) {
    int64_t dim = 1;
    for (auto& [d, f] : factors) dim = checked_mul(dim, d);
    SparseOp op(dim);
    int nf = static_cast<int>(factors.size());
    std::vector<int> radix(nf);
    for (int i = 0; i < nf; ++i) radix[i] = factors[i].first;
    std::vector<int> digits(nf, 0);
    for (int64_t idx = 0; idx < dim; ++idx) {
        int64_t rest = idx;
        for (int i = nf - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(rest % radix[i]);
            rest /= radix[i];
        }
        for (int i = 0; i < nf; ++i)
            for (auto& [img, c] : factors[i].second[digits[i]]) {
                int64_t target = 0;
                for (int j = 0; j < nf; ++j) target = target * radix[j] + (j == i ? img : digits[j]);
                op[idx].emplace_back(static_cast<int>(target), c);
            }
    }
    return op;
}

}  // namespace detail

// brute-forced nilpotency index of the induced derivation on the blueprint
// module; refuses modules beyond the dimension guard
inline int induced_index(const NilpotentOperator& op, const ModuleBlueprint& bp,
                         int64_t dim_guard = 100000) {
    int64_t dim = blueprint_dim(op.b2, bp);
    if (dim > dim_guard)
        throw precondition_error("module dimension " + std::to_string(dim) +
                                 " exceeds the guard " + std::to_string(dim_guard));
    detail::SparseOp base = op.action;
    std::vector<std::pair<int, detail::SparseOp>> tensor_factors;
    int leibniz_cap = 0;
    for (auto& [i, a] : bp.factors) {
        std::vector<std::vector<int>> wedge_basis;
        detail::SparseOp f = i == 1 ? base : detail::wedge_op(op.b2, base, i, wedge_basis);
        int fdim = i == 1 ? op.b2 : static_cast<int>(wedge_basis.size());
        int factor_index = detail::sparse_op_index(f, 2 * i * op.nu2 + 1);
        detail::SparseOp g = a == 1 ? f : detail::sym_op(fdim, f, a);
        int64_t gdim = binomial(fdim + a - 1, a);
        tensor_factors.emplace_back(static_cast<int>(gdim), std::move(g));
        leibniz_cap += a * factor_index;
    }
    if (tensor_factors.empty()) return 0;  // trivial module
    detail::SparseOp full =
        tensor_factors.size() == 1 ? tensor_factors[0].second : detail::tensor_op(tensor_factors);
    return detail::sparse_op_index(full, leibniz_cap);
}

// ---------------------------------------------------------------------------
// Closed-form nilpotency indices (integer-coordinate weights only; odd
// half-integer weights carry no index formula):
//   nu2 = 1: lambda_1 + |lambda_2|,  nu2 = 2: 2 lambda_1,
//   b2 = 3 (rank one): lambda * nu2.

inline int index_formula(const Weight& lam, int nu2, int b2) {
    if (!lam.is_integral())
        throw out_of_range_error("index_formula applies to integer weights (even cohomology)");
    if (nu2 == 0) return 0;
    int64_t l1 = lam.rank >= 1 ? lam.d[0] / 2 : 0;
    if (b2 == 3) return static_cast<int>(l1) * nu2;
    if (nu2 == 1) {
        int64_t l2 = lam.rank >= 2 ? std::abs(static_cast<int>(lam.d[1])) / 2 : 0;
        return static_cast<int>(l1 + l2);
    }
    if (nu2 == 2) return static_cast<int>(2 * l1);
    throw precondition_error("nu2 must be 0, 1 or 2");
}

// ---------------------------------------------------------------------------
// Nagai verdict for a g-decomposition: per-degree indices nu_{2k} and the
// comparison with k*nu2 for k = 0..n. Odd (half-integer) summands carry no
// known index formula and are ignored here; the verdict covers even degrees.

struct NagaiReport {
    int nu2 = 0;
    std::vector<int> nu_even;  // nu_{2k} for k = 0..n
    bool ok = false;
};

inline NagaiReport nagai_verdict(const Decomposition& d, int n, int nu2) {
    if (n < 1) throw precondition_error("nagai_verdict needs n >= 1");
    for (auto& [w, m] : d.parts)
        if (w.d[0] > 2 * n)
            throw precondition_error("weight with mu_0 > n cannot sit in H^*: " + w.str());
    NagaiReport rep;
    rep.nu2 = nu2;
    rep.nu_even.assign(n + 1, 0);
    if (nu2 == 0) {
        rep.ok = true;
        return rep;
    }
    if (nu2 == 2) {
        // Verbitsky floor meets the monodromy-theorem ceiling
        for (int k = 0; k <= n; ++k) rep.nu_even[k] = 2 * k;
        rep.ok = true;
        return rep;
    }
    if (nu2 != 1) throw precondition_error("nu2 must be 0, 1 or 2");

    int b2 = d.alg.so_dim() - 2;
    std::map<int, Character> graded;
    for (auto& [w, m] : d.parts) {
        if (!w.is_integral()) continue;
        for (auto& [deg, piece] : mukai_grade(irreducible_character(d.alg, w), n)) {
            auto it = graded.find(deg);
            if (it == graded.end())
                graded.emplace(deg, scale(piece, m));
            else
                it->second = add(it->second, scale(piece, m));
        }
    }
    rep.ok = true;
    for (int k = 0; k <= n; ++k) {
        auto it = graded.find(2 * k);
        int nu = 0;
        if (it != graded.end() && !it->second.empty()) {
            for (auto& [lam, mm] : decompose(it->second).parts)
                nu = std::max(nu, index_formula(lam, 1, b2));
        }
        rep.nu_even[k] = nu;
        if (nu != k) rep.ok = false;
    }
    return rep;
}

}  // namespace llv
