#ifndef JACKMAPS_JACK_HPP
#define JACKMAPS_JACK_HPP

#include "diagrams.hpp"
#include "ratfun.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

namespace jackmaps {

struct SizeMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SymBasis { monomial, powersum };

// Homogeneous symmetric-function element over the rational-function field.
struct SymFunc {
    SymBasis basis = SymBasis::powersum;
    std::map<YoungDiagram, RationalFunctionA> coeffs;

    RationalFunctionA coeff(const YoungDiagram& part) const {
        auto it = coeffs.find(part);
        return it == coeffs.end() ? RationalFunctionA() : it->second;
    }
};

// z_mu = prod_i i^{m_i} m_i!, the centralizer order of the class mu.
inline Integer z_factor(const YoungDiagram& mu) {
    Integer z = 1;
    std::map<unsigned long, unsigned long> mult;
    for (unsigned long part : mu.parts()) ++mult[part];
    for (auto [i, m] : mult) {
        for (unsigned long t = 0; t < m; ++t) z *= Integer(i);
        z *= factorial(m);
    }
    return z;
}

namespace jack_detail {

using MonoMap = std::map<std::vector<unsigned long>, Rational>;  // parts, descending

inline std::vector<unsigned long> sorted_parts(std::vector<unsigned long> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// Multiply an element in the monomial basis by p_k: grow one part (or open a
// new one) by k; the target picks up a factor counting its parts equal to the
// grown value.
inline MonoMap multiply_by_powersum(const MonoMap& f, unsigned long k) {
    MonoMap out;
    for (const auto& [lam, c] : f) {
        std::set<unsigned long> values(lam.begin(), lam.end());
        values.insert(0);  // a fresh part
        for (unsigned long v : values) {
            std::vector<unsigned long> mu = lam;
            if (v == 0) {
                mu.push_back(k);
            } else {
                *std::find(mu.begin(), mu.end(), v) += k;
            }
            mu = sorted_parts(std::move(mu));
            long ways = static_cast<long>(std::count(mu.begin(), mu.end(), v + k));
            out[mu] += c * Rational(ways);
        }
    }
    return out;
}

// Dominance order refined by reverse lexicographic comparison; a total order
// on the partitions of a fixed size, pinning the Gram-Schmidt sweep.
inline bool gs_before(const YoungDiagram& a, const YoungDiagram& b) {
    const auto &pa = a.parts(), &pb = b.parts();
    unsigned long sa = 0, sb = 0;
    size_t len = std::max(pa.size(), pb.size());
    bool a_dom = true, b_dom = true;
    for (size_t i = 0; i < len; ++i) {
        sa += i < pa.size() ? pa[i] : 0;
        sb += i < pb.size() ? pb[i] : 0;
        if (sa < sb) a_dom = false;
        if (sb < sa) b_dom = false;
    }
    if (a_dom != b_dom) return b_dom;  // dominance-smaller first
    return pb < pa;
}

// Exact inverse by Gauss-Jordan elimination over the rationals.
inline std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && is_zero(m[piv][col])) ++piv;
        if (piv == n) throw InconsistentError("singular basis-change matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(m[r][col])) continue;
            Rational f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline RationalFunctionA ratfun_from_laurent(const LaurentA& f) {
    if (f.is_zero()) return {};
    int shift = std::min(0, f.min_exp());
    std::vector<Rational> num(static_cast<size_t>(f.max_exp() - shift) + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) num[static_cast<size_t>(e - shift)] = c;
    return {UniPolyA(std::move(num)), UniPolyA::monomial(1, static_cast<unsigned>(-shift))};
}

}  // namespace jack_detail

inline SymFunc powersum_to_monomial(const YoungDiagram& pi) {
    if (pi.size() > 10) throw TooLargeError("powersum_to_monomial supports sizes <= 10");
    jack_detail::MonoMap f{{{}, Rational(1)}};
    for (unsigned long k : pi.parts()) f = jack_detail::multiply_by_powersum(f, k);
    SymFunc out;
    out.basis = SymBasis::monomial;
    for (const auto& [lam, c] : f)
        if (!is_zero(c)) out.coeffs.emplace(YoungDiagram(lam), RationalFunctionA(c));
    return out;
}

namespace jack_detail {

struct JackTable {
    std::map<YoungDiagram, SymFunc> in_powersum;
    std::map<YoungDiagram, SymFunc> in_monomial;
};

inline JackTable build_jack_table(unsigned long d) {
    std::vector<YoungDiagram> parts = partitions_of(d);
    std::sort(parts.begin(), parts.end(), gs_before);
    size_t N = parts.size();
    std::map<YoungDiagram, size_t> index;
    for (size_t i = 0; i < N; ++i) index.emplace(parts[i], i);

    // p-to-m basis change and its exact inverse (integer entries)
    std::vector<std::vector<Rational>> p2m(N, std::vector<Rational>(N, Rational(0)));
    for (size_t i = 0; i < N; ++i)
        for (const auto& [lam, c] : powersum_to_monomial(parts[i]).coeffs)
            p2m[i][index.at(lam)] = c.num().coeff(0);
    std::vector<std::vector<Rational>> m2p = invert_matrix(p2m);

    RationalFunctionA alpha = RationalFunctionA::alpha();
    std::vector<RationalFunctionA> weight(N);
    for (size_t i = 0; i < N; ++i)
        weight[i] =
            alpha.pow(parts[i].parts().size()) * RationalFunctionA(Rational(z_factor(parts[i])));
    auto inner = [&](const std::vector<RationalFunctionA>& a,
                     const std::vector<RationalFunctionA>& b) {
        RationalFunctionA s;
        for (size_t i = 0; i < N; ++i) {
            if (a[i].is_zero() || b[i].is_zero()) continue;
            s += a[i] * b[i] * weight[i];
        }
        return s;
    };

    // Gram-Schmidt over the m_lambda, done in the powersum basis where the
    // inner product is diagonal, tracking the monomial expansion alongside.
    std::vector<std::vector<RationalFunctionA>> P_p(N), P_m(N);
    for (size_t i = 0; i < N; ++i) {
        std::vector<RationalFunctionA> vp(N), vm(N);
        for (size_t j = 0; j < N; ++j) vp[j] = RationalFunctionA(m2p[i][j]);
        vm[i] = RationalFunctionA(Rational(1));
        for (size_t k = 0; k < i; ++k) {
            RationalFunctionA proj = inner(vp, P_p[k]) / inner(P_p[k], P_p[k]);
            if (proj.is_zero()) continue;
            for (size_t j = 0; j < N; ++j) {
                vp[j] -= proj * P_p[k][j];
                vm[j] -= proj * P_m[k][j];
            }
        }
        P_p[i] = std::move(vp);
        P_m[i] = std::move(vm);
    }

    // Integral-form normalization: coefficient of m_{1^d} equals d!.
    size_t ones_idx = index.at(YoungDiagram(std::vector<unsigned long>(d, 1)));
    JackTable table;
    for (size_t i = 0; i < N; ++i) {
        RationalFunctionA lead = P_m[i][ones_idx];
        if (lead.is_zero()) throw InconsistentError("vanishing m_{1^d} coefficient");
        RationalFunctionA scale = RationalFunctionA(Rational(factorial(d))) / lead;
        SymFunc jp, jm;
        jp.basis = SymBasis::powersum;
        jm.basis = SymBasis::monomial;
        for (size_t j = 0; j < N; ++j) {
            RationalFunctionA cp = scale * P_p[i][j], cm = scale * P_m[i][j];
            if (!cp.is_zero()) jp.coeffs.emplace(parts[j], cp);
            if (!cm.is_zero()) jm.coeffs.emplace(parts[j], cm);
        }
        table.in_powersum.emplace(parts[i], std::move(jp));
        table.in_monomial.emplace(parts[i], std::move(jm));
    }
    return table;
}

inline const JackTable& jack_table_for_size(unsigned long d) {
    static std::map<unsigned long, JackTable> tables;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = tables.find(d);
    if (it == tables.end()) it = tables.emplace(d, build_jack_table(d)).first;
    return it->second;
}

}  // namespace jack_detail

inline SymFunc jack_J(const YoungDiagram& lambda) {
    if (lambda.empty() || lambda.size() > 8)
        throw TooLargeError("jack_J supports 1 <= |lambda| <= 8");
    return jack_detail::jack_table_for_size(lambda.size()).in_powersum.at(lambda);
}

inline SymFunc jack_J_monomial(const YoungDiagram& lambda) {
    if (lambda.empty() || lambda.size() > 8)
        throw TooLargeError("jack_J supports 1 <= |lambda| <= 8");
    return jack_detail::jack_table_for_size(lambda.size()).in_monomial.at(lambda);
}

inline RationalFunctionA theta(const YoungDiagram& pi, const YoungDiagram& lambda) {
    if (pi.size() != lambda.size()) throw SizeMismatchError("theta needs |pi| == |lambda|");
    return jack_J(lambda).coeff(pi);
}

// Normalized character: zero when |lambda| < |mu|, otherwise a rescaled theta
// of the 1-padded partition. The result is a genuine Laurent polynomial in A;
// a non-Laurent denominator means the normalization is broken and throws.
inline LaurentA jack_character(const YoungDiagram& mu, const YoungDiagram& lambda) {
    if (lambda.size() < mu.size()) return {};
    if (lambda.size() > 8) throw TooLargeError("jack_character supports |lambda| <= 8");
    unsigned long pad = lambda.size() - mu.size();
    std::vector<unsigned long> padded = mu.parts();
    padded.insert(padded.end(), pad, 1);
    RationalFunctionA th = theta(YoungDiagram(std::move(padded)), lambda);

    unsigned long m1 = mu.mult(1);
    Rational scale = Rational(binomial(Integer(pad + m1), m1) * z_factor(mu));
    LaurentA result = (th * RationalFunctionA(scale)).to_laurent();
    int a_shift = static_cast<int>(mu.parts().size()) - static_cast<int>(mu.size());
    return result * LaurentA::monomial(1, a_shift);
}

// Expand Ch_mu * Ch_nu over the character basis by exact elimination on
// evaluations at all |lambda| <= |mu|+|nu|, then verify the expansion on
// every diagram one size larger.
inline std::map<YoungDiagram, LaurentA> structure_constants(const YoungDiagram& mu,
                                                            const YoungDiagram& nu) {
    unsigned long s = mu.size() + nu.size();
    if (s > 6) throw TooLargeError("structure_constants supports |mu|+|nu| <= 6");

    std::vector<YoungDiagram> basis = partitions_up_to(s);  // includes the empty diagram
    auto ch = [](const YoungDiagram& rho, const YoungDiagram& lam) -> LaurentA {
        if (rho.empty()) return LaurentA(1);
        if (lam.empty()) return {};
        return jack_character(rho, lam);
    };

    size_t R = basis.size(), C = basis.size();
    std::vector<std::vector<RationalFunctionA>> m(R, std::vector<RationalFunctionA>(C + 1));
    for (size_t r = 0; r < R; ++r) {
        for (size_t c = 0; c < C; ++c)
            m[r][c] = jack_detail::ratfun_from_laurent(ch(basis[c], basis[r]));
        m[r][C] = jack_detail::ratfun_from_laurent(ch(mu, basis[r]) * ch(nu, basis[r]));
    }

    size_t row = 0;
    std::vector<size_t> pivot_of(C, SIZE_MAX);
    for (size_t col = 0; col < C && row < R; ++col) {
        size_t piv = row;
        while (piv < R && m[piv][col].is_zero()) ++piv;
        if (piv == R) continue;
        std::swap(m[piv], m[row]);
        RationalFunctionA d = m[row][col];
        for (size_t j = col; j <= C; ++j) m[row][j] /= d;
        for (size_t r = 0; r < R; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            RationalFunctionA f = m[r][col];
            for (size_t j = col; j <= C; ++j) m[r][j] -= f * m[row][j];
        }
        pivot_of[col] = row++;
    }
    for (size_t r = row; r < R; ++r)
        if (!m[r][C].is_zero()) throw InconsistentError("structure constants: no solution");

    std::map<YoungDiagram, LaurentA> out;
    for (size_t c = 0; c < C; ++c) {
        if (pivot_of[c] == SIZE_MAX) continue;
        LaurentA g = m[pivot_of[c]][C].to_laurent();
        if (!g.is_zero()) out.emplace(basis[c], g);
    }

    // residual-free verification one size up
    for (const auto& lam : partitions_of(s + 1)) {
        LaurentA lhs = ch(mu, lam) * ch(nu, lam);
        LaurentA rhs;
        for (const auto& [rho, g] : out) rhs += g * ch(rho, lam);
        if (lhs != rhs) throw InconsistentError("structure constants: verification failed");
    }
    return out;
}

// The same coefficients rewritten as polynomials in the opaque variable d
// standing for A - A^{-1} (the negative of g = -A + A^{-1}).
inline std::map<YoungDiagram, MultiPoly> structure_constants_delta(const YoungDiagram& mu,
                                                                   const YoungDiagram& nu) {
    std::map<YoungDiagram, MultiPoly> out;
    MultiPoly minus_d = -MultiPoly::variable("d");
    for (const auto& [rho, g] : structure_constants(mu, nu))
        out.emplace(rho, a_to_gamma(g).substitute("g", minus_d));
    return out;
}

// ---- Symmetric-group characters via border strips (A = 1 cross-checks) ----

namespace jack_detail {

inline long long mn_rec(std::vector<unsigned long> lam, std::vector<unsigned long> rho,
                        std::map<std::pair<std::vector<unsigned long>, std::vector<unsigned long>>,
                                 long long>& memo) {
    lam = sorted_parts(std::move(lam));
    rho = sorted_parts(std::move(rho));
    if (rho.empty()) return lam.empty() ? 1 : 0;
    auto key = std::make_pair(lam, rho);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    unsigned long r = rho.front();
    std::vector<unsigned long> rest(rho.begin() + 1, rho.end());
    long long total = 0;
    // A border strip of size r spanning rows a..b turns row i into
    // lam[i+1] - 1 for a <= i < b and row b into lam[a] - r + (b - a); the
    // sign is (-1)^(b-a). Keep only removals that leave a valid partition.
    size_t rows = lam.size();
    for (size_t a = 0; a < rows; ++a) {
        for (size_t b = a; b < rows; ++b) {
            long long newb = static_cast<long long>(lam[a]) - static_cast<long long>(r) +
                             static_cast<long long>(b - a);
            if (newb >= static_cast<long long>(lam[b]) && b > a) continue;
            if (b == a && newb >= static_cast<long long>(lam[a])) continue;
            if (newb < 0) continue;
            std::vector<unsigned long> nu = lam;
            for (size_t i = a; i < b; ++i) nu[i] = lam[i + 1] - 1;
            nu[b] = static_cast<unsigned long>(newb);
            bool ok = true;
            for (size_t i = 0; ok && i + 1 < nu.size(); ++i)
                if (nu[i] < nu[i + 1]) ok = false;
            if (!ok) continue;
            long long sign = (b - a) % 2 == 0 ? 1 : -1;
            total += sign * mn_rec(nu, rest, memo);
        }
    }
    memo[key] = total;
    return total;
}

inline long long mn_full(const std::vector<unsigned long>& lam,
                         const std::vector<unsigned long>& rho) {
    static std::map<std::pair<std::vector<unsigned long>, std::vector<unsigned long>>, long long>
        memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return mn_rec(lam, rho, memo);
}

}  // namespace jack_detail

// chi^lambda on the class (pi, 1, 1, ...): pi padded with fixed points.
inline long long mn_character(const YoungDiagram& lambda, const YoungDiagram& pi) {
    if (pi.size() > lambda.size() || lambda.size() > 10)
        throw TooLargeError("mn_character supports |pi| <= |lambda| <= 10");
    std::vector<unsigned long> padded = pi.parts();
    padded.insert(padded.end(), lambda.size() - pi.size(), 1);
    return jack_detail::mn_full(lambda.parts(), padded);
}

// |lambda| (|lambda|-1) ... (|lambda|-|pi|+1) * chi^lambda(pi,1,...) / dim lambda.
inline Rational normalized_character(const YoungDiagram& pi, const YoungDiagram& lambda) {
    Integer falling = 1;
    for (unsigned long i = 0; i < pi.size(); ++i) falling *= Integer(lambda.size() - i);
    long long chi = mn_character(lambda, pi);
    long long dim =
        jack_detail::mn_full(lambda.parts(), std::vector<unsigned long>(lambda.size(), 1));
    return Rational(falling) * Rational(static_cast<long>(chi)) /
           Rational(static_cast<long>(dim));
}

}  // namespace jackmaps

#endif
