#ifndef JACKMAPS_CHARACTERS_HPP
#define JACKMAPS_CHARACTERS_HPP

#include "jack.hpp"
#include "oriented_maps.hpp"

#include <functional>
#include <string>
#include <vector>

namespace jackmaps {

struct UnderdeterminedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The content-polynomial family of a single character Ch_n, degree n+1.
struct CharacterSolution {
    unsigned n = 0;
    ContentPolynomialFamily family;
};

// Homogeneous top-degree part of a Stanley polynomial.
struct TopDegreePart {
    unsigned n = 0;
    MultiPoly stanley_top;  // homogeneous of total degree n+1 in {g, p_j, q_j}
};

// The explicit degree-4 family for the 3-cycle character:
// p_1 = 3(c_1 + g)(c_1 + 2g) + 3/2, p_2 = -3/2.
inline ContentPolynomialFamily ch3_explicit_family() {
    MultiPoly c1 = MultiPoly::variable("c1"), g = MultiPoly::variable("g");
    ContentPolynomialFamily fam;
    fam.degree = 4;
    fam.polys = {MultiPoly(),
                 (c1 + g) * (c1 + g * Rational(2)) * Rational(3) + MultiPoly(rat(3, 2)),
                 MultiPoly(rat(-3, 2))};
    fam.validate();
    return fam;
}

namespace char_detail {

// Symmetric-monomial basis element of p_k: g^a * m_mu(c_1..c_k), expanded as
// the sum over all distinct exponent arrangements.
struct SymMonomial {
    size_t k = 0;
    unsigned g_exp = 0;
    std::vector<unsigned> mu;  // descending positive exponents, at most k of them
};

inline MultiPoly sym_monomial_poly(const SymMonomial& u) {
    std::vector<unsigned> exps(u.k, 0);
    std::copy(u.mu.begin(), u.mu.end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    MultiPoly g = MultiPoly::variable("g");
    MultiPoly total;
    do {
        MultiPoly m = g.pow(u.g_exp);
        for (size_t i = 0; i < u.k; ++i)
            if (exps[i] > 0) m *= MultiPoly::variable("c" + std::to_string(i + 1)).pow(exps[i]);
        total += m;
    } while (std::next_permutation(exps.begin(), exps.end()));
    return total;
}

// All basis elements of p_k under the degree bound a + |mu| <= bound.
inline std::vector<SymMonomial> basis_for(size_t k, unsigned bound) {
    std::vector<SymMonomial> out;
    std::vector<unsigned> mu;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rem, unsigned maxpart) {
        for (unsigned a = 0; a <= rem; ++a) out.push_back({k, a, mu});
        if (mu.size() == k) return;
        for (unsigned p = std::min(rem, maxpart); p >= 1; --p) {
            mu.push_back(p);
            rec(rem - p, p);
            mu.pop_back();
        }
    };
    rec(bound, bound);
    return out;
}

}  // namespace char_detail

// Solve the abstract linear characterization: unknowns are the symmetrized
// monomial coefficients of p_0..p_{floor((n+1)/2)} under the degree bounds,
// equations are the vanishing of the family on every |lambda| < n (expanded
// coefficient-wise in A) plus the single leading-coefficient normalization
// [c_1^{n-1}] p_1 = n. The solution must be unique; a rank defect is an error.
inline CharacterSolution solve_character_family(unsigned n) {
    if (n < 1 || n > 5) throw TooLargeError("solve_character_family supports 1 <= n <= 5");
    unsigned d = n + 1;
    size_t kmax = d / 2;

    std::vector<char_detail::SymMonomial> unknowns;
    for (size_t k = 0; k <= kmax; ++k)
        for (auto& u : char_detail::basis_for(k, d - 2 * static_cast<unsigned>(k)))
            unknowns.push_back(std::move(u));
    size_t U = unknowns.size();

    // columns: the Laurent value each unknown contributes at each small diagram
    std::vector<YoungDiagram> lams = partitions_up_to(n - 1);
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (const auto& lam : lams) {
        std::vector<LaurentA> col(U);
        std::set<int> exps;
        for (size_t u = 0; u < U; ++u) {
            ContentPolynomialFamily single;
            single.degree = d;
            single.polys.assign(kmax + 1, MultiPoly());
            single.polys[unknowns[u].k] = char_detail::sym_monomial_poly(unknowns[u]);
            col[u] = evaluate_family(single, lam);
            for (const auto& [e, c] : col[u].terms()) exps.insert(e);
        }
        for (int e : exps) {
            std::vector<Rational> row(U);
            for (size_t u = 0; u < U; ++u) row[u] = col[u].coeff(e);
            rows.push_back(std::move(row));
            rhs.push_back(Rational(0));
        }
    }
    {
        // [c_1^{n-1}] p_1 = n picks out the single unknown (k=1, a=0, mu=(n-1))
        std::vector<Rational> row(U, Rational(0));
        for (size_t u = 0; u < U; ++u) {
            const auto& w = unknowns[u];
            bool match = w.k == 1 && w.g_exp == 0 &&
                         ((n == 1 && w.mu.empty()) ||
                          (w.mu.size() == 1 && w.mu[0] == n - 1));
            if (match) row[u] = 1;
        }
        rows.push_back(std::move(row));
        rhs.push_back(Rational(static_cast<long>(n)));
    }

    // exact elimination; every unknown must become a pivot
    size_t R = rows.size(), rank = 0;
    std::vector<size_t> pivot_of(U, SIZE_MAX);
    for (size_t col = 0; col < U && rank < R; ++col) {
        size_t piv = rank;
        while (piv < R && is_zero(rows[piv][col])) ++piv;
        if (piv == R) continue;
        std::swap(rows[piv], rows[rank]);
        std::swap(rhs[piv], rhs[rank]);
        Rational dv = rows[rank][col];
        for (size_t j = col; j < U; ++j) rows[rank][j] /= dv;
        rhs[rank] /= dv;
        for (size_t r = 0; r < R; ++r) {
            if (r == rank || is_zero(rows[r][col])) continue;
            Rational f = rows[r][col];
            for (size_t j = col; j < U; ++j) rows[r][j] -= f * rows[rank][j];
            rhs[r] -= f * rhs[rank];
        }
        pivot_of[col] = rank++;
    }
    for (size_t r = rank; r < R; ++r)
        if (!is_zero(rhs[r]))
            throw InconsistentError("character system inconsistent at rank " +
                                    std::to_string(rank));
    size_t defect = 0;
    for (size_t c = 0; c < U; ++c)
        if (pivot_of[c] == SIZE_MAX) ++defect;
    if (defect > 0)
        throw UnderdeterminedError("character system rank defect " + std::to_string(defect) +
                                   " of " + std::to_string(U));

    CharacterSolution sol;
    sol.n = n;
    sol.family.degree = d;
    sol.family.polys.assign(kmax + 1, MultiPoly());
    for (size_t u = 0; u < U; ++u) {
        Rational x = rhs[pivot_of[u]];
        if (is_zero(x)) continue;
        sol.family.polys[unknowns[u].k] += char_detail::sym_monomial_poly(unknowns[u]) * x;
    }
    sol.family.validate();
    return sol;
}

inline MultiPoly stanley_polynomial(const CharacterSolution& sol, unsigned ell) {
    if (ell < 1 || ell > 3) throw TooLargeError("stanley_polynomial supports 1 <= ell <= 3");
    return evaluate_family_multirect(sol.family, ell);
}

inline TopDegreePart top_degree(const CharacterSolution& sol, unsigned ell) {
    return {sol.n, stanley_polynomial(sol, ell).homogeneous_part(sol.n + 1)};
}

// Keep, in each p_k, only the monomials of (g, c)-degree exactly n+1-2k.
inline ContentPolynomialFamily family_top(const CharacterSolution& sol) {
    ContentPolynomialFamily top;
    top.degree = sol.family.degree;
    for (size_t k = 0; k < sol.family.polys.size(); ++k) {
        unsigned want = sol.n + 1 - 2 * static_cast<unsigned>(k);
        top.polys.push_back(sol.family.polys[k].homogeneous_part(want));
    }
    top.validate();
    return top;
}

// Top-degree character value on a concrete diagram via the oriented-map
// formula, routed through the multirectangular substitution.
inline LaurentA ch_top_maps_value(unsigned n, const YoungDiagram& lambda) {
    if (lambda.empty()) return {};
    MultiRectSubstitution sub = concrete_to_multirect(lambda);
    return substitute_multirect(ch_top_maps(n, sub.ell), sub);
}

// ---- vanishing system of linear constraints on top-degree candidates ----

struct VanishingCheck {
    std::string equation;     // "main", "k0-empty", "p1-values", "p2-values", "p2-diagonal"
    unsigned k = 0;           // number of iterated differences
    std::vector<long> point;  // evaluation point (lambda_1 >= ... >= lambda_k)
    bool pass = false;
    LaurentA lhs;             // the extracted coefficient (and rhs-adjusted residual)
};

struct VanishingReport {
    std::vector<VanishingCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace char_detail {

inline std::function<LaurentA(std::vector<long>)> iterated_delta(
    const std::function<LaurentA(const YoungDiagram&)>& G, unsigned k) {
    std::function<LaurentA(std::vector<long>)> f = [&G](std::vector<long> xi) {
        return sym_extend<LaurentA>(G, std::move(xi));
    };
    for (unsigned j = 1; j <= k; ++j) f = delta_op<LaurentA>(f, j);
    return f;
}

// all weakly decreasing non-negative k-tuples with sum <= bound
inline std::vector<std::vector<long>> tuples(unsigned k, unsigned bound) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(unsigned, long, long)> rec = [&](unsigned left, long maxv, long rem) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (long v = std::min<long>(maxv, rem); v >= 0; --v) {
            cur.push_back(v);
            rec(left - 1, v, rem - v);
            cur.pop_back();
        }
    };
    rec(k, bound, bound);
    return out;
}

// p_k^top with gamma := -1 and c_i := args[i] + 1, as a rational number
inline Rational top_poly_value(const MultiPoly& p, const std::vector<Rational>& args) {
    MultiPoly v = p.substitute("g", MultiPoly(Rational(-1)));
    for (size_t i = 0; i < args.size(); ++i)
        v = v.substitute("c" + std::to_string(i + 1), MultiPoly(args[i]));
    return v.constant_value();
}

}  // namespace char_detail

// Check the defining linear constraints [A^{n+1-2k}] Delta^k G^sym = 0 on all
// admissible points, plus (when the top family is supplied) the per-k value
// identities of the top polynomials, including the corrected identity on the
// diagonal where plain finite-difference reasoning breaks down.
inline VanishingReport verify_vanishing_system(
    const std::function<LaurentA(const YoungDiagram&)>& G, unsigned n,
    const ContentPolynomialFamily* top_family = nullptr) {
    if (n < 1 || n > 4) throw TooLargeError("verify_vanishing_system supports 1 <= n <= 4");
    VanishingReport report;

    for (unsigned k = 0; k + 1 <= n; ++k) {  // n - 1 - k >= 0
        auto F = char_detail::iterated_delta(G, k);
        for (const auto& pt : char_detail::tuples(k, n - 1 - k)) {
            LaurentA lhs = LaurentA(F(pt).coeff(static_cast<int>(n) + 1 - 2 * static_cast<int>(k)));
            report.checks.push_back({"main", k, pt, lhs.is_zero(), lhs});
        }
    }

    if (top_family != nullptr) {
        const auto& polys = top_family->polys;
        {  // value of the 0-point term at the empty diagram
            LaurentA lhs = LaurentA(G(YoungDiagram{}).coeff(static_cast<int>(n) + 1));
            Rational rhs = polys.empty() ? Rational(0)
                                         : char_detail::top_poly_value(polys[0], {});
            LaurentA resid = lhs - LaurentA(rhs);
            report.checks.push_back({"k0-empty", 0, {}, resid.is_zero(), resid});
        }
        if (polys.size() > 1) {  // single-row values pin p_1^top
            auto F = char_detail::iterated_delta(G, 1);
            for (long x = 0; x <= static_cast<long>(n) + 1; ++x) {
                LaurentA lhs = LaurentA(F({x}).coeff(static_cast<int>(n) - 1));
                Rational rhs =
                    char_detail::top_poly_value(polys[1], {Rational(x) + 1});
                LaurentA resid = lhs - LaurentA(rhs);
                report.checks.push_back({"p1-values", 1, {x}, resid.is_zero(), resid});
            }
        }
        if (polys.size() > 2) {  // two-row values pin p_2^top, off the diagonal
            auto F = char_detail::iterated_delta(G, 2);
            for (long x = 1; x <= static_cast<long>(n) + 1; ++x) {
                for (long y = 0; y < x; ++y) {
                    LaurentA lhs = LaurentA(F({x, y}).coeff(static_cast<int>(n) - 3));
                    Rational rhs = Rational(2) * char_detail::top_poly_value(
                                                     polys[2], {Rational(x) + 1, Rational(y) + 1});
                    LaurentA resid = lhs - LaurentA(rhs);
                    report.checks.push_back({"p2-values", 2, {x, y}, resid.is_zero(), resid});
                }
            }
            // on the diagonal the symmetrization contributes an extra
            // derivative term of p_1^top
            MultiPoly dp1 = polys[1].substitute("g", MultiPoly(Rational(-1))).derivative("c1");
            for (long x = 0; x <= static_cast<long>(n) + 1; ++x) {
                LaurentA lhs = LaurentA(F({x, x}).coeff(static_cast<int>(n) - 3));
                Rational rhs =
                    Rational(2) * char_detail::top_poly_value(
                                      polys[2], {Rational(x) + 1, Rational(x) + 1}) -
                    dp1.substitute("c1", MultiPoly(Rational(x) + 1)).constant_value();
                LaurentA resid = lhs - LaurentA(rhs);
                report.checks.push_back({"p2-diagonal", 2, {x, x}, resid.is_zero(), resid});
            }
        }
    }
    return report;
}

}  // namespace jackmaps

#endif
