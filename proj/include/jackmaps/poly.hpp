#ifndef JACKMAPS_POLY_HPP
#define JACKMAPS_POLY_HPP

#include "laurent.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace jackmaps {

struct NotExpressibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical variable order: p1 < p2 < ... < q1 < ... < c1 < ... < l1 < ... < g.
// Printing follows this order as well, so g lands last in a term
// ("3*p1^2*q1*g").
inline std::pair<int, int> var_rank(const std::string& v) {
    if (v == "g") return {5, 0};
    char head = v[0];
    int cat;
    switch (head) {
        case 'p': cat = 0; break;
        case 'q': cat = 1; break;
        case 'c': cat = 2; break;
        case 'l': cat = 3; break;
        default: cat = 4; break;
    }
    int idx = 0;
    for (size_t i = 1; i < v.size(); ++i)
        if (std::isdigit(static_cast<unsigned char>(v[i]))) idx = idx * 10 + (v[i] - '0');
    return {cat, idx};
}

inline bool var_less(const std::string& a, const std::string& b) {
    auto ra = var_rank(a), rb = var_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
}

namespace detail {
inline std::string coeff_str(const Rational& c) { return to_string(c); }
inline std::string coeff_str(const LaurentA& c) {
    if (c.terms().size() == 1) {
        std::string s = c.str();
        if (s.find(' ') == std::string::npos) return s;
    }
    return "(" + c.str() + ")";
}
inline bool coeff_is_one(const Rational& c) { return c == 1; }
inline bool coeff_is_minus_one(const Rational& c) { return c == -1; }
inline bool coeff_is_one(const LaurentA& c) { return c == LaurentA(1); }
inline bool coeff_is_minus_one(const LaurentA& c) { return c == LaurentA(-1); }
}  // namespace detail

// Sparse multivariate polynomial over an explicit, ordered set of named
// variables, with coefficients in C (Rational or LaurentA). Exponents are
// non-negative. Invariant: no zero coefficients are stored.
template <typename C>
class Poly {
  public:
    using Monomial = std::vector<unsigned>;
    using CoeffType = C;

    Poly() = default;
    Poly(const C& c) {  // NOLINT(google-explicit-constructor)
        if (!jackmaps::is_zero(c)) terms_[{}] = c;
    }
    Poly(long c) : Poly(C(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly variable(const std::string& name) {
        Poly f;
        f.vars_ = {name};
        f.terms_[{1}] = C(1);
        return f;
    }
    static Poly constant(const C& c) { return Poly(c); }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Monomial, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        const auto& m = terms_.begin()->first;
        return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
    }
    C constant_value() const {
        if (terms_.empty()) return C(0);
        if (!is_constant()) throw std::logic_error("not a constant polynomial");
        return terms_.begin()->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) {
            unsigned t = 0;
            for (unsigned e : m) t += e;
            d = std::max(d, t);
        }
        return d;
    }

    bool has_var(const std::string& v) const {
        return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
    }

    unsigned degree_in(const std::string& v) const {
        size_t i = index_of(v);
        if (i == vars_.size()) return 0;
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
        return d;
    }

    void add_term(const std::vector<std::pair<std::string, unsigned>>& mono, const C& c) {
        Poly t = Poly(c);
        for (const auto& [v, e] : mono)
            for (unsigned i = 0; i < e; ++i) t = t * variable(v);
        *this += t;
    }

    Poly& operator+=(const Poly& o) { return *this = add(*this, o, false); }
    Poly& operator-=(const Poly& o) { return *this = add(*this, o, true); }
    friend Poly operator+(const Poly& a, const Poly& b) { return add(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return add(a, b, true); }
    friend Poly operator-(const Poly& a) {
        Poly r;
        r.vars_ = a.vars_;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = negate_coeff(c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        auto vars = merged_vars(a.vars_, b.vars_);
        Poly ra = a.reindexed(vars), rb = b.reindexed(vars);
        Poly r;
        r.vars_ = vars;
        for (const auto& [ma, ca] : ra.terms_)
            for (const auto& [mb, cb] : rb.terms_) {
                Monomial m(vars.size());
                for (size_t i = 0; i < vars.size(); ++i) m[i] = ma[i] + mb[i];
                r.insert_add(m, ca * cb);
            }
        r.prune();
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& operator*=(const C& c) { return *this = *this * Poly(c); }
    friend Poly operator*(Poly a, const C& c) { return a * Poly(c); }
    friend Poly operator*(const C& c, const Poly& a) { return a * Poly(c); }

    Poly pow(unsigned long e) const {
        Poly r = Poly(C(1)), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Poly& o) const {
        auto vars = merged_vars(vars_, o.vars_);
        return reindexed(vars).terms_ == o.reindexed(vars).terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Sum of terms of total degree exactly d.
    Poly homogeneous_part(unsigned d) const {
        Poly r;
        r.vars_ = vars_;
        for (const auto& [m, c] : terms_) {
            unsigned t = 0;
            for (unsigned e : m) t += e;
            if (t == d) r.terms_[m] = c;
        }
        return r;
    }

    // Coefficient of v^e, as a polynomial in the remaining variables.
    Poly coeff_of(const std::string& v, unsigned e) const {
        size_t i = index_of(v);
        Poly r;
        if (i == vars_.size()) return e == 0 ? *this : r;
        std::vector<std::string> rest = vars_;
        rest.erase(rest.begin() + static_cast<long>(i));
        r.vars_ = rest;
        for (const auto& [m, c] : terms_) {
            if (m[i] != e) continue;
            Monomial mm = m;
            mm.erase(mm.begin() + static_cast<long>(i));
            r.terms_[mm] = c;
        }
        return r;
    }

    // Substitute values for every variable; V must be a commutative ring
    // accepting multiplication by C.
    template <typename V>
    V eval(const std::map<std::string, V>& values) const {
        V r = V(0);
        for (const auto& [m, c] : terms_) {
            V t = V(1);
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (m[i] == 0) continue;
                auto it = values.find(vars_[i]);
                if (it == values.end()) throw std::invalid_argument("missing value for " + vars_[i]);
                t = t * it->second.pow(m[i]);
            }
            r += t * c;
        }
        return r;
    }

    // Substitute a polynomial for one variable.
    Poly substitute(const std::string& v, const Poly& value) const {
        size_t i = index_of(v);
        if (i == vars_.size()) return *this;
        Poly r;
        for (const auto& [m, c] : terms_) {
            Poly t = Poly(c);
            for (size_t j = 0; j < vars_.size(); ++j) {
                if (m[j] == 0) continue;
                t *= (j == i) ? value.pow(m[j]) : variable(vars_[j]).pow(m[j]);
            }
            r += t;
        }
        return r;
    }

    // d/dv.
    Poly derivative(const std::string& v) const {
        size_t i = index_of(v);
        Poly r;
        r.vars_ = vars_;
        if (i == vars_.size()) return r;
        for (const auto& [m, c] : terms_) {
            if (m[i] == 0) continue;
            Monomial mm = m;
            mm[i] -= 1;
            r.insert_add(mm, c * C(static_cast<long>(m[i])));
        }
        r.prune();
        return r;
    }

    // Canonical text grammar. Terms in canonical order: graded lexicographic
    // on the variable order, descending.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Monomial, C>*> sorted;
        for (const auto& t : terms_) sorted.push_back(&t);
        std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
            return mono_less(b->first, a->first);
        });
        std::ostringstream os;
        bool first = true;
        for (const auto* t : sorted) {
            std::string cs = detail::coeff_str(t->second);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                first = false;
                if (neg) {
                    os << "-";
                    cs = cs.substr(1);
                }
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            std::string mono;
            for (size_t i = 0; i < vars_.size(); ++i) {
                unsigned e = t->first[i];
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) {
                os << cs;
            } else if (cs == "1") {
                os << mono;
            } else {
                os << cs << "*" << mono;
            }
        }
        return os.str();
    }

    std::vector<unsigned> exponents_of(const Monomial& m, const std::vector<std::string>& target) const {
        std::vector<unsigned> r(target.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = std::find(target.begin(), target.end(), vars_[i]);
            if (it == target.end()) throw std::logic_error("variable not in target set");
            r[static_cast<size_t>(it - target.begin())] = m[i];
        }
        return r;
    }

    Poly reindexed(const std::vector<std::string>& vars) const {
        Poly r;
        r.vars_ = vars;
        for (const auto& [m, c] : terms_) r.terms_[exponents_of(m, vars)] = c;
        return r;
    }

    // Drops variables that no term uses.
    Poly compacted() const {
        std::vector<std::string> used;
        for (size_t i = 0; i < vars_.size(); ++i) {
            for (const auto& [m, c] : terms_)
                if (m[i] > 0) {
                    used.push_back(vars_[i]);
                    break;
                }
        }
        return reindexed(used);
    }

  private:
    static C negate_coeff(const C& c) { return C(0) - c; }

    static bool mono_less(const Monomial& a, const Monomial& b) {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }

    size_t index_of(const std::string& v) const {
        auto it = std::find(vars_.begin(), vars_.end(), v);
        return static_cast<size_t>(it - vars_.begin());
    }

    static std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                                const std::vector<std::string>& b) {
        std::vector<std::string> r = a;
        for (const auto& v : b)
            if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
        std::sort(r.begin(), r.end(), var_less);
        return r;
    }

    static Poly add(const Poly& a, const Poly& b, bool subtract) {
        auto vars = merged_vars(a.vars_, b.vars_);
        Poly r = a.reindexed(vars);
        Poly rb = b.reindexed(vars);
        for (const auto& [m, c] : rb.terms_) r.insert_add(m, subtract ? negate_coeff(c) : c);
        r.prune();
        return r;
    }

    void insert_add(const Monomial& m, const C& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!jackmaps::is_zero(c)) terms_[m] = c;
        } else {
            it->second += c;
            if (jackmaps::is_zero(it->second)) terms_.erase(it);
        }
    }

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = jackmaps::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }

    std::vector<std::string> vars_;
    std::map<Monomial, C> terms_;
};

using MultiPoly = Poly<Rational>;
using PolyOverA = Poly<LaurentA>;

template <typename C>
inline bool is_zero(const Poly<C>& f) {
    return f.is_zero();
}

// Replaces every occurrence of g by -A + A^{-1}; coefficients move to
// Laurent polynomials in A.
inline PolyOverA gamma_substitute(const MultiPoly& f) {
    std::vector<std::string> rest;
    for (const auto& v : f.vars())
        if (v != "g") rest.push_back(v);
    PolyOverA r;
    LaurentA gam = LaurentA::gamma();
    for (const auto& [m, c] : f.terms()) {
        unsigned ge = 0;
        PolyOverA t = PolyOverA(LaurentA(c));
        for (size_t i = 0; i < f.vars().size(); ++i) {
            if (m[i] == 0) continue;
            if (f.vars()[i] == "g")
                ge = m[i];
            else
                t *= PolyOverA::variable(f.vars()[i]).pow(m[i]);
        }
        if (ge > 0) t *= PolyOverA(gam.pow(ge));
        r += t;
    }
    return r;
}

// Inverse rewrite: find P with P(-A + A^{-1}) = f, as a univariate polynomial
// in g. Works top-down on the extreme A-degree; throws NotExpressibleError
// when f is not invariant under A -> -A^{-1}.
inline MultiPoly a_to_gamma(const LaurentA& f) {
    MultiPoly p;
    LaurentA rem = f;
    LaurentA gam = LaurentA::gamma();
    MultiPoly g = MultiPoly::variable("g");
    while (!rem.is_zero()) {
        int d = std::max(rem.max_exp(), -rem.min_exp());
        if (d == 0) {
            p += MultiPoly(rem.coeff(0));
            break;
        }
        Rational hi = rem.coeff(d);
        Rational lo = rem.coeff(-d);
        // gamma^d has A^{-d}-coefficient 1 and A^d-coefficient (-1)^d.
        Rational expect_hi = (d % 2 == 0) ? lo : -lo;
        if (hi != expect_hi || jackmaps::is_zero(lo))
            throw NotExpressibleError("Laurent polynomial is not a polynomial in gamma: " + f.str());
        p += g.pow(static_cast<unsigned>(d)) * lo;
        rem -= gam.pow(static_cast<unsigned>(d)) * lo;
        if (!rem.is_zero() && std::max(rem.max_exp(), -rem.min_exp()) >= d)
            throw NotExpressibleError("Laurent polynomial is not a polynomial in gamma: " + f.str());
    }
    return p;
}

// Coefficients of the Faulhaber polynomial F_m, with F_m(N) = sum_{x=1}^N x^m;
// returned low-to-high, degree m+1. Computed by Lagrange interpolation at
// N = 0..m+1.
inline std::vector<Rational> faulhaber_coeffs(unsigned m) {
    unsigned deg = m + 1;
    std::vector<Rational> xs, ys;
    Rational acc = 0;
    for (unsigned n = 0; n <= deg; ++n) {
        if (n > 0) acc += rat_pow(Rational(n), m);
        xs.push_back(Rational(n));
        ys.push_back(acc);
    }
    // Newton's divided differences, then expansion.
    std::vector<Rational> dd = ys;
    for (size_t lvl = 1; lvl < dd.size(); ++lvl)
        for (size_t i = dd.size() - 1; i >= lvl; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
    std::vector<Rational> coeffs(deg + 2, Rational(0));
    std::vector<Rational> basis{1};  // product (N - x_0)...(N - x_{j-1})
    for (size_t j = 0; j < dd.size(); ++j) {
        for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += dd[j] * basis[i];
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        for (size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i];
            next[i] -= basis[i] * xs[j];
        }
        basis = next;
    }
    coeffs.resize(deg + 1);
    return coeffs;
}

// F_m(offset + length) - F_m(offset) as a polynomial identity: the symbolic
// sum of x^m over offset < x <= offset + length.
template <typename P>
inline P faulhaber_range_sum(unsigned m, const P& offset, const P& length) {
    auto coeffs = faulhaber_coeffs(m);
    P upper = offset + length;
    P a = P(0), b = P(0);
    for (size_t i = coeffs.size(); i-- > 0;) {  // Horner
        P c = P(typename P::CoeffType(coeffs[i]));
        a = a * upper + c;
        b = b * offset + c;
    }
    return a - b;
}

}  // namespace jackmaps

#endif
