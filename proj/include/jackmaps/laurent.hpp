#ifndef JACKMAPS_LAURENT_HPP
#define JACKMAPS_LAURENT_HPP

#include "rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace jackmaps {

// Laurent polynomials in the single symbol A over the rationals.
// Invariant: no stored coefficient is zero.
class LaurentA {
  public:
    LaurentA() = default;
    LaurentA(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (!jackmaps::is_zero(c)) terms_[0] = c;
    }
    LaurentA(long c) : LaurentA(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static LaurentA monomial(const Rational& c, int exp) {
        LaurentA f;
        if (!jackmaps::is_zero(c)) f.terms_[exp] = c;
        return f;
    }
    static LaurentA variable_A() { return monomial(1, 1); }
    // gamma = -A + A^{-1}
    static LaurentA gamma() {
        LaurentA f;
        f.terms_[1] = -1;
        f.terms_[-1] = 1;
        return f;
    }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    int max_exp() const {
        if (is_zero()) throw std::logic_error("max_exp of zero");
        return terms_.rbegin()->first;
    }
    int min_exp() const {
        if (is_zero()) throw std::logic_error("min_exp of zero");
        return terms_.begin()->first;
    }

    LaurentA& operator+=(const LaurentA& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentA& operator-=(const LaurentA& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentA operator+(LaurentA a, const LaurentA& b) { return a += b; }
    friend LaurentA operator-(LaurentA a, const LaurentA& b) { return a -= b; }
    friend LaurentA operator-(const LaurentA& a) {
        LaurentA r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentA operator*(const LaurentA& a, const LaurentA& b) {
        LaurentA r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentA& operator*=(const LaurentA& o) { return *this = *this * o; }
    LaurentA& operator*=(const Rational& c) {
        if (jackmaps::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend LaurentA operator*(LaurentA a, const Rational& c) { return a *= c; }
    friend LaurentA operator*(const Rational& c, LaurentA a) { return a *= c; }

    LaurentA pow(unsigned long e) const {
        LaurentA r = 1, b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const LaurentA& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentA& o) const { return terms_ != o.terms_; }
    bool operator<(const LaurentA& o) const { return terms_ < o.terms_; }

    // Substitute a rational value for A.
    Rational eval_at(const Rational& a) const {
        Rational r = 0;
        for (const auto& [e, c] : terms_) {
            if (e >= 0)
                r += c * rat_pow(a, static_cast<unsigned long>(e));
            else
                r += c / rat_pow(a, static_cast<unsigned long>(-e));
        }
        return r;
    }

    // True iff this is a constant Laurent polynomial; the constant is then coeff(0).
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    // Canonical grammar, terms by descending exponent: "2*A + 3 - A^-2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rational c = it->second;
            if (first) {
                if (sgn(c) < 0) {
                    os << "-";
                    c = -c;
                }
                first = false;
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
                if (sgn(c) < 0) c = -c;
            }
            int e = it->first;
            if (e == 0) {
                os << to_string(c);
            } else {
                if (c != 1) os << to_string(c) << "*";
                os << "A";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    void add_term(int e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!jackmaps::is_zero(c)) terms_[e] = c;
        } else {
            it->second += c;
            if (jackmaps::is_zero(it->second)) terms_.erase(it);
        }
    }

    std::map<int, Rational> terms_;
};

inline bool is_zero(const LaurentA& f) { return f.is_zero(); }

}  // namespace jackmaps

#endif
