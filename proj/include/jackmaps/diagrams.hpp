#ifndef JACKMAPS_DIAGRAMS_HPP
#define JACKMAPS_DIAGRAMS_HPP

#include "poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jackmaps {

struct EmptyDiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer partition, weakly decreasing positive parts; empty = the diagram of 0.
class YoungDiagram {
  public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<unsigned long> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0) throw std::invalid_argument("zero part");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("parts not weakly decreasing");
        }
    }

    const std::vector<unsigned long>& parts() const { return parts_; }
    size_t rows() const { return parts_.size(); }
    unsigned long size() const {
        unsigned long s = 0;
        for (auto p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }

    bool contains(unsigned long x, unsigned long y) const {
        return y >= 1 && y <= parts_.size() && x >= 1 && x <= parts_[y - 1];
    }

    YoungDiagram conjugate() const {
        std::vector<unsigned long> c;
        if (parts_.empty()) return YoungDiagram{};
        c.resize(parts_[0], 0);
        for (auto p : parts_)
            for (unsigned long x = 0; x < p; ++x) c[x]++;
        return YoungDiagram(std::move(c));
    }

    // Number of rows of length >= x (conjugate part), 0-safe.
    unsigned long rows_at_least(unsigned long x) const {
        unsigned long n = 0;
        for (auto p : parts_)
            if (p >= x) ++n;
        return n;
    }

    // Multiplicity of part i.
    unsigned long mult(unsigned long i) const {
        return static_cast<unsigned long>(std::count(parts_.begin(), parts_.end(), i));
    }

    bool operator==(const YoungDiagram& o) const { return parts_ == o.parts_; }
    bool operator!=(const YoungDiagram& o) const { return parts_ != o.parts_; }
    bool operator<(const YoungDiagram& o) const {
        if (size() != o.size()) return size() < o.size();
        return parts_ < o.parts_;
    }

    // Serialization: comma-separated parts, empty string for the empty diagram.
    std::string str() const {
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }
    static YoungDiagram parse(const std::string& s) {
        std::vector<unsigned long> parts;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t comma = s.find(',', pos);
            if (comma == std::string::npos) comma = s.size();
            parts.push_back(std::stoul(s.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return YoungDiagram(std::move(parts));
    }

  private:
    std::vector<unsigned long> parts_;
};

// All partitions of n, descending-lex order starting from (n).
inline std::vector<YoungDiagram> partitions_of(unsigned long n) {
    std::vector<YoungDiagram> out;
    std::vector<unsigned long> cur;
    std::function<void(unsigned long, unsigned long)> rec = [&](unsigned long rem, unsigned long maxpart) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned long p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

inline std::vector<YoungDiagram> partitions_up_to(unsigned long n) {
    std::vector<YoungDiagram> out;
    for (unsigned long s = 0; s <= n; ++s)
        for (auto& p : partitions_of(s)) out.push_back(p);
    return out;
}

struct Box {
    unsigned long x;  // column, >= 1
    unsigned long y;  // row, >= 1
};

// A-deformed content: c(box) = A*x - A^{-1}*y.
inline LaurentA content(const Box& b) {
    if (b.x < 1 || b.y < 1) throw std::invalid_argument("box indices start at 1");
    return LaurentA::monomial(static_cast<long>(b.x), 1) +
           LaurentA::monomial(-static_cast<long>(b.y), -1);
}

// The sequence p_0..p_K of content polynomials representing a polynomial
// function on Young diagrams; K = floor(d/2).
struct ContentPolynomialFamily {
    unsigned degree = 0;            // d
    std::vector<MultiPoly> polys;   // p_0 .. p_{floor(d/2)}, each in {g, c1..ck}

    size_t kmax() const { return degree / 2; }

    void validate() const {
        if (polys.size() != kmax() + 1) throw std::invalid_argument("family needs floor(d/2)+1 polynomials");
        for (size_t k = 0; k < polys.size(); ++k) {
            const MultiPoly& p = polys[k];
            if (!p.is_zero() && p.total_degree() > degree - 2 * k)
                throw std::invalid_argument("p_k violates the degree bound d-2k");
            for (const auto& v : p.vars()) {
                if (v == "g") continue;
                auto [cat, idx] = var_rank(v);
                if (cat != 2 || idx < 1 || static_cast<size_t>(idx) > k)
                    throw std::invalid_argument("p_k uses a variable outside {g, c1..ck}: " + v);
            }
            // symmetry in c1..ck via adjacent transpositions
            for (size_t i = 1; i < k; ++i) {
                std::string a = "c" + std::to_string(i), b = "c" + std::to_string(i + 1);
                MultiPoly swapped = p.substitute(a, MultiPoly::variable("ctmp"))
                                        .substitute(b, MultiPoly::variable(a))
                                        .substitute("ctmp", MultiPoly::variable(b));
                if (swapped != p) throw std::invalid_argument("p_k not symmetric in the contents");
            }
        }
    }
};

namespace detail {
// Power sums of deformed contents over the boxes of a concrete diagram.
inline std::vector<LaurentA> content_power_sums(const YoungDiagram& lambda, unsigned max_m) {
    std::vector<LaurentA> sums(max_m + 1);
    for (unsigned long y = 1; y <= lambda.rows(); ++y)
        for (unsigned long x = 1; x <= lambda.parts()[y - 1]; ++x) {
            LaurentA c = content({x, y});
            LaurentA pw = 1;
            for (unsigned m = 0; m <= max_m; ++m) {
                sums[m] += pw;
                if (m < max_m) pw *= c;
            }
        }
    return sums;
}

// Largest content exponent used anywhere in the family.
inline unsigned max_content_exponent(const ContentPolynomialFamily& fam) {
    unsigned m = 0;
    for (const auto& p : fam.polys)
        for (const auto& v : p.vars())
            if (v != "g") m = std::max(m, p.degree_in(v));
    return m;
}
}  // namespace detail

// Eq-style evaluation: sum over ordered k-tuples of boxes (independent
// ranges, repetition allowed) of p_k with the content/gamma substitutions.
// Because the tuple components range independently, each monomial
// coeff * g^a * prod c_i^{e_i} contributes coeff * gamma^a * prod S_{e_i},
// where S_m is the m-th power sum of contents (S_0 = |lambda|).
inline LaurentA evaluate_family(const ContentPolynomialFamily& fam, const YoungDiagram& lambda) {
    auto sums = detail::content_power_sums(lambda, detail::max_content_exponent(fam));
    LaurentA gam = LaurentA::gamma();
    LaurentA result;
    for (size_t k = 0; k < fam.polys.size(); ++k) {
        const MultiPoly& p = fam.polys[k];
        for (const auto& [mono, coeff] : p.terms()) {
            LaurentA term = LaurentA(coeff);
            std::vector<unsigned> cexp(k, 0);
            for (size_t i = 0; i < p.vars().size(); ++i) {
                if (mono[i] == 0) continue;
                if (p.vars()[i] == "g") {
                    term *= gam.pow(mono[i]);
                } else {
                    auto [cat, idx] = var_rank(p.vars()[i]);
                    cexp[static_cast<size_t>(idx - 1)] = mono[i];
                }
            }
            for (size_t i = 0; i < k; ++i) term *= sums[cexp[i]];
            result += term;
        }
    }
    return result;
}

// Multirectangular shape with ell nested rectangles: r_j rows of length s_j,
// s_1 > ... > s_ell, with the symbolic substitution r_j = -A*p_j,
// s_j = A^{-1}*q_j.
struct MultiRect {
    unsigned ell = 1;
};

namespace detail {
// Symbolic single-box power sums sum_box c^m over the multirectangular
// diagram, as polynomials in p_1..p_ell, q_1..q_ell with Laurent
// coefficients.
inline std::vector<PolyOverA> multirect_power_sums(unsigned ell, unsigned max_m) {
    std::vector<PolyOverA> p_height(ell), q_len(ell);
    for (unsigned j = 0; j < ell; ++j) {
        p_height[j] = PolyOverA::variable("p" + std::to_string(j + 1)) * LaurentA::monomial(-1, 1);
        q_len[j] = PolyOverA::variable("q" + std::to_string(j + 1)) * LaurentA::monomial(1, -1);
    }
    // cumulative row offsets R_0 = 0, R_j = r_1 + ... + r_j
    std::vector<PolyOverA> row_offset(ell + 1);
    row_offset[0] = PolyOverA(LaurentA(0));
    for (unsigned j = 0; j < ell; ++j) row_offset[j + 1] = row_offset[j] + p_height[j];

    std::vector<PolyOverA> sums(max_m + 1, PolyOverA(LaurentA(0)));
    std::vector<std::vector<Integer>> binom(max_m + 1, std::vector<Integer>(max_m + 1, 0));
    for (unsigned m = 0; m <= max_m; ++m) binom[m][0] = 1;
    for (unsigned m = 1; m <= max_m; ++m)
        for (unsigned t = 1; t <= m; ++t) binom[m][t] = binom[m - 1][t - 1] + binom[m - 1][t];

    for (unsigned j = 0; j < ell; ++j) {
        std::vector<PolyOverA> xsum(max_m + 1), ysum(max_m + 1);
        for (unsigned t = 0; t <= max_m; ++t) {
            xsum[t] = faulhaber_range_sum(t, PolyOverA(LaurentA(0)), q_len[j]);
            ysum[t] = faulhaber_range_sum(t, row_offset[j], p_height[j]);
        }
        for (unsigned m = 0; m <= max_m; ++m)
            for (unsigned t = 0; t <= m; ++t) {
                // (A x)^t * (-A^{-1} y)^{m-t}
                Rational c = Rational(binom[m][t]);
                if ((m - t) % 2 == 1) c = -c;
                LaurentA scale = LaurentA::monomial(c, static_cast<int>(t) - static_cast<int>(m - t));
                sums[m] += xsum[t] * ysum[m - t] * scale;
            }
    }
    return sums;
}
}  // namespace detail

// Stanley-polynomial evaluation of a family on the multirectangular diagram.
// Throws NotExpressibleError if the Laurent coefficients fail to rewrite in
// gamma (which signals an invalid family).
inline MultiPoly evaluate_family_multirect(const ContentPolynomialFamily& fam, unsigned ell) {
    auto sums = detail::multirect_power_sums(ell, detail::max_content_exponent(fam));
    LaurentA gam = LaurentA::gamma();
    PolyOverA result;
    for (size_t k = 0; k < fam.polys.size(); ++k) {
        const MultiPoly& p = fam.polys[k];
        for (const auto& [mono, coeff] : p.terms()) {
            PolyOverA term = PolyOverA(LaurentA(coeff));
            std::vector<unsigned> cexp(k, 0);
            for (size_t i = 0; i < p.vars().size(); ++i) {
                if (mono[i] == 0) continue;
                if (p.vars()[i] == "g") {
                    term *= PolyOverA(gam.pow(mono[i]));
                } else {
                    auto [cat, idx] = var_rank(p.vars()[i]);
                    cexp[static_cast<size_t>(idx - 1)] = mono[i];
                }
            }
            for (size_t i = 0; i < k; ++i) term *= sums[cexp[i]];
            result += term;
        }
    }
    // rewrite every Laurent coefficient as a polynomial in g
    MultiPoly out;
    for (const auto& [mono, coeff] : result.terms()) {
        MultiPoly gpoly = a_to_gamma(coeff);
        MultiPoly monopoly = MultiPoly(Rational(1));
        for (size_t i = 0; i < result.vars().size(); ++i)
            if (mono[i] > 0) monopoly *= MultiPoly::variable(result.vars()[i]).pow(mono[i]);
        out += gpoly * monopoly;
    }
    return out;
}

// Calibration of the multirectangular picture on a concrete diagram:
// lambda = (s_1^{r_1} ... s_ell^{r_ell}) with s_1 > ... > s_ell gives
// p_j = -A^{-1} r_j, q_j = A s_j.
struct MultiRectSubstitution {
    unsigned ell = 0;
    std::vector<LaurentA> p, q;

    std::map<std::string, LaurentA> as_values(bool with_gamma = true) const {
        std::map<std::string, LaurentA> v;
        for (unsigned j = 0; j < ell; ++j) {
            v["p" + std::to_string(j + 1)] = p[j];
            v["q" + std::to_string(j + 1)] = q[j];
        }
        if (with_gamma) v["g"] = LaurentA::gamma();
        return v;
    }
};

inline MultiRectSubstitution concrete_to_multirect(const YoungDiagram& lambda) {
    if (lambda.empty()) throw EmptyDiagramError("empty diagram has no multirectangular form");
    MultiRectSubstitution sub;
    const auto& parts = lambda.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        unsigned long s = parts[i], r = j - i;
        sub.p.push_back(LaurentA::monomial(-static_cast<long>(r), -1));
        sub.q.push_back(LaurentA::monomial(static_cast<long>(s), 1));
        i = j;
    }
    sub.ell = static_cast<unsigned>(sub.p.size());
    return sub;
}

// Substitute a multirect-polynomial (vars g, p_i, q_i) at a concrete diagram.
inline LaurentA substitute_multirect(const MultiPoly& stanley, const MultiRectSubstitution& sub) {
    auto values = sub.as_values();
    // pad missing rectangle variables with zero so evaluation is total
    for (const auto& v : stanley.vars())
        if (!values.count(v)) values[v] = LaurentA(0);
    return stanley.eval<LaurentA>(values);
}

// Finite difference in the j-th argument (1-based): (delta_j F)(..) =
// F(.., x_j + 1, ..) - F(.., x_j, ..).
template <typename T>
std::function<T(std::vector<long>)> delta_op(std::function<T(std::vector<long>)> f, size_t j) {
    if (j < 1) throw std::invalid_argument("argument index is 1-based");
    return [f, j](std::vector<long> args) -> T {
        T lo = f(args);
        args[j - 1] += 1;
        T hi = f(args);
        return T(hi - lo);
    };
}

// Symmetric extension of a diagram function: sort descending, drop zeros.
template <typename T>
T sym_extend(const std::function<T(const YoungDiagram&)>& f, std::vector<long> xi) {
    std::sort(xi.rbegin(), xi.rend());
    std::vector<unsigned long> parts;
    for (long v : xi) {
        if (v < 0) throw std::invalid_argument("negative argument to sym_extend");
        if (v > 0) parts.push_back(static_cast<unsigned long>(v));
    }
    return f(YoungDiagram(std::move(parts)));
}

}  // namespace jackmaps

#endif
