#ifndef JACKMAPS_RATFUN_HPP
#define JACKMAPS_RATFUN_HPP

#include "laurent.hpp"
#include "rational.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace jackmaps {

struct NotLaurentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense univariate polynomial in A over the rationals, low-to-high.
class UniPolyA {
  public:
    UniPolyA() = default;
    UniPolyA(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (!jackmaps::is_zero(c)) coeffs_ = {c};
    }
    UniPolyA(long c) : UniPolyA(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit UniPolyA(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPolyA monomial(const Rational& c, unsigned e) {
        std::vector<Rational> v(e + 1, Rational(0));
        v[e] = c;
        return UniPolyA(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    friend UniPolyA operator+(const UniPolyA& a, const UniPolyA& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
        return UniPolyA(std::move(r));
    }
    friend UniPolyA operator-(const UniPolyA& a, const UniPolyA& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
        return UniPolyA(std::move(r));
    }
    friend UniPolyA operator-(const UniPolyA& a) { return UniPolyA(0) - a; }
    friend UniPolyA operator*(const UniPolyA& a, const UniPolyA& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPolyA(std::move(r));
    }
    UniPolyA& operator+=(const UniPolyA& o) { return *this = *this + o; }
    UniPolyA& operator-=(const UniPolyA& o) { return *this = *this - o; }
    UniPolyA& operator*=(const UniPolyA& o) { return *this = *this * o; }

    bool operator==(const UniPolyA& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UniPolyA& o) const { return coeffs_ != o.coeffs_; }

    // Quotient and remainder.
    std::pair<UniPolyA, UniPolyA> divmod(const UniPolyA& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        UniPolyA rem = *this;
        std::vector<Rational> q;
        int dd = d.degree();
        while (!rem.is_zero() && rem.degree() >= dd) {
            int shift = rem.degree() - dd;
            Rational f = rem.leading() / d.leading();
            if (static_cast<int>(q.size()) < shift + 1) q.resize(static_cast<size_t>(shift) + 1, Rational(0));
            q[static_cast<size_t>(shift)] += f;
            rem = rem - d * monomial(f, static_cast<unsigned>(shift));
        }
        return {UniPolyA(std::move(q)), rem};
    }

    UniPolyA monic() const {
        if (is_zero()) return {};
        std::vector<Rational> r = coeffs_;
        Rational l = leading();
        for (auto& c : r) c /= l;
        return UniPolyA(std::move(r));
    }

    static UniPolyA gcd(UniPolyA a, UniPolyA b) {
        while (!b.is_zero()) {
            UniPolyA r = a.divmod(b).second;
            a = b;
            b = r;
        }
        return a.monic();
    }

    LaurentA to_laurent() const {
        LaurentA r;
        for (size_t i = 0; i < coeffs_.size(); ++i)
            r += LaurentA::monomial(coeffs_[i], static_cast<int>(i));
        return r;
    }

    bool operator<(const UniPolyA& o) const { return coeffs_ < o.coeffs_; }

  private:
    void trim() {
        while (!coeffs_.empty() && jackmaps::is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

// Rational functions in A: gcd-reduced, denominator monic and nonzero,
// zero stored as 0/1. Field arithmetic for the Gram-Schmidt pass.
class RationalFunctionA {
  public:
    RationalFunctionA() : num_(), den_(1) {}
    RationalFunctionA(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunctionA(long c) : num_(c), den_(1) {}             // NOLINT(google-explicit-constructor)
    RationalFunctionA(UniPolyA num, UniPolyA den) { assign(std::move(num), std::move(den)); }
    RationalFunctionA(const UniPolyA& num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)

    static RationalFunctionA alpha() {  // alpha = A^2
        return RationalFunctionA(UniPolyA::monomial(1, 2));
    }

    const UniPolyA& num() const { return num_; }
    const UniPolyA& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunctionA operator+(const RationalFunctionA& a, const RationalFunctionA& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunctionA operator-(const RationalFunctionA& a, const RationalFunctionA& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunctionA operator-(const RationalFunctionA& a) { return {-a.num_, a.den_}; }
    friend RationalFunctionA operator*(const RationalFunctionA& a, const RationalFunctionA& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunctionA operator/(const RationalFunctionA& a, const RationalFunctionA& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFunctionA& operator+=(const RationalFunctionA& o) { return *this = *this + o; }
    RationalFunctionA& operator-=(const RationalFunctionA& o) { return *this = *this - o; }
    RationalFunctionA& operator*=(const RationalFunctionA& o) { return *this = *this * o; }
    RationalFunctionA& operator/=(const RationalFunctionA& o) { return *this = *this / o; }

    RationalFunctionA pow(unsigned long e) const {
        RationalFunctionA r(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const RationalFunctionA& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunctionA& o) const { return !(*this == o); }
    bool operator<(const RationalFunctionA& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    // Succeeds iff the reduced denominator is a power of A.
    LaurentA to_laurent() const {
        if (num_.is_zero()) return {};
        int k = den_.degree();
        for (int i = 0; i < k; ++i)
            if (!jackmaps::is_zero(den_.coeff(static_cast<size_t>(i))))
                throw NotLaurentError("denominator is not a power of A");
        LaurentA r;
        for (size_t i = 0; i < num_.coeffs().size(); ++i)
            r += LaurentA::monomial(num_.coeff(i), static_cast<int>(i) - k);
        return r;
    }

    std::string str() const {
        std::string n = num_.to_laurent().str();
        if (den_ == UniPolyA(1)) return n;
        return "(" + n + ")/(" + den_.to_laurent().str() + ")";
    }

  private:
    void assign(UniPolyA num, UniPolyA den) {
        if (den.is_zero()) throw std::domain_error("zero denominator");
        if (num.is_zero()) {
            num_ = {};
            den_ = UniPolyA(1);
            return;
        }
        UniPolyA g = UniPolyA::gcd(num, den);
        num = num.divmod(g).first;
        den = den.divmod(g).first;
        Rational l = den.leading();
        std::vector<Rational> nc = num.coeffs(), dc = den.coeffs();
        for (auto& c : nc) c /= l;
        for (auto& c : dc) c /= l;
        num_ = UniPolyA(std::move(nc));
        den_ = UniPolyA(std::move(dc));
    }

    UniPolyA num_, den_;
};

inline bool is_zero(const RationalFunctionA& f) { return f.is_zero(); }

}  // namespace jackmaps

#endif
