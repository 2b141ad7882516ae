#ifndef JACKMAPS_ORIENTED_MAPS_HPP
#define JACKMAPS_ORIENTED_MAPS_HPP

#include "diagrams.hpp"
#include "poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace jackmaps {

// Permutation of {0..n-1} as its image sequence.
using Perm = std::vector<unsigned>;

inline unsigned cycle_count(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    unsigned c = 0;
    for (unsigned i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (unsigned j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    return c;
}

inline Perm compose(const Perm& a, const Perm& b) {  // (a o b)(i) = a(b(i))
    Perm r(b.size());
    for (unsigned i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline std::vector<std::vector<unsigned>> cycles_of(const Perm& p) {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(p.size(), false);
    for (unsigned i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::vector<unsigned> cyc;
        for (unsigned j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

// Oriented bicolored map on edge labels {1..n}: white vertices are the cycles
// of sigma, black vertices the cycles of tau, faces the cycles of sigma o tau.
struct OrientedBicolMap {
    unsigned n = 0;
    Perm sigma, tau;

    bool transitive() const {
        if (n == 0) return false;
        std::vector<bool> seen(n, false);
        std::vector<unsigned> stack{0};
        seen[0] = true;
        unsigned count = 1;
        while (!stack.empty()) {
            unsigned e = stack.back();
            stack.pop_back();
            for (unsigned f : {sigma[e], tau[e]}) {
                if (!seen[f]) {
                    seen[f] = true;
                    ++count;
                    stack.push_back(f);
                }
            }
        }
        return count == n;
    }
};

struct MapStats {
    unsigned whites = 0, blacks = 0, faces = 0, genus = 0;
};

inline MapStats map_stats(const OrientedBicolMap& m) {
    MapStats s;
    s.whites = cycle_count(m.sigma);
    s.blacks = cycle_count(m.tau);
    s.faces = cycle_count(compose(m.sigma, m.tau));
    unsigned vf = s.whites + s.blacks + s.faces;  // = n + 2 - 2g
    if (vf > m.n + 2 || (m.n + 2 - vf) % 2 != 0)
        throw std::logic_error("Euler formula violated");
    s.genus = (m.n + 2 - vf) / 2;
    return s;
}

// All transitive pairs (sigma, tau) in S_n x S_n, deterministic order.
inline std::vector<OrientedBicolMap> enumerate_labeled(unsigned n) {
    if (n < 1 || n > 7) throw TooLargeError("enumerate_labeled supports 1 <= n <= 7");
    std::vector<Perm> perms;
    Perm id(n);
    std::iota(id.begin(), id.end(), 0u);
    Perm p = id;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<OrientedBicolMap> out;
    for (const auto& s : perms)
        for (const auto& t : perms) {
            OrientedBicolMap m{n, s, t};
            if (m.transitive()) out.push_back(std::move(m));
        }
    return out;
}

// Number of pairs (f1: whites -> columns, f2: blacks -> rows) with every
// edge landing on a box of lambda. A black vertex mapped after all its white
// neighbours has exactly (number of rows of length >= max column) options,
// so we iterate over white assignments and multiply the counts.
inline Integer count_embeddings(const OrientedBicolMap& m, const YoungDiagram& lambda) {
    if (lambda.empty()) return 0;
    auto wcyc = cycles_of(m.sigma), bcyc = cycles_of(m.tau);
    std::vector<unsigned> white_of(m.n), black_of(m.n);
    for (unsigned w = 0; w < wcyc.size(); ++w)
        for (unsigned e : wcyc[w]) white_of[e] = w;
    for (unsigned b = 0; b < bcyc.size(); ++b)
        for (unsigned e : bcyc[b]) black_of[e] = b;

    unsigned long maxcol = lambda.parts()[0];
    std::vector<unsigned long> col(wcyc.size(), 0);
    Integer total = 0;
    std::function<void(size_t)> rec = [&](size_t w) {
        if (w == wcyc.size()) {
            Integer prod = 1;
            for (const auto& cyc : bcyc) {
                unsigned long need = 1;
                for (unsigned e : cyc) need = std::max(need, col[white_of[e]]);
                prod *= Integer(lambda.rows_at_least(need));
                if (prod == 0) break;
            }
            total += prod;
            return;
        }
        for (unsigned long x = 1; x <= maxcol; ++x) {
            col[w] = x;
            rec(w + 1);
        }
    };
    rec(0);
    return total;
}

// N_G(lambda) = A^{|whites|} (-A)^{-|blacks|} * (embedding count).
inline LaurentA weight_N(const OrientedBicolMap& m, const YoungDiagram& lambda) {
    MapStats s = map_stats(m);
    Integer cnt = count_embeddings(m, lambda);
    Rational c = Rational(cnt);
    if (s.blacks % 2 == 1) c = -c;
    return LaurentA::monomial(c, static_cast<int>(s.whites) - static_cast<int>(s.blacks));
}

// Symbolic embedding weight on the multirectangular diagram: sum over
// g: whites -> {1..ell}, h: blacks -> {1..ell} with h(b) <= g(w) on every
// edge, of prod_w (q_{g(w)} - q_{g(w)+1}) * prod_b p_{h(b)}, q_{ell+1} = 0.
inline MultiPoly weight_N_multirect(const OrientedBicolMap& m, unsigned ell) {
    auto wcyc = cycles_of(m.sigma), bcyc = cycles_of(m.tau);
    std::vector<unsigned> white_of(m.n), black_of(m.n);
    for (unsigned w = 0; w < wcyc.size(); ++w)
        for (unsigned e : wcyc[w]) white_of[e] = w;
    for (unsigned b = 0; b < bcyc.size(); ++b)
        for (unsigned e : bcyc[b]) black_of[e] = b;

    std::vector<MultiPoly> qdiff(ell), pvar(ell);
    for (unsigned j = 0; j < ell; ++j) {
        qdiff[j] = MultiPoly::variable("q" + std::to_string(j + 1));
        if (j + 1 < ell) qdiff[j] -= MultiPoly::variable("q" + std::to_string(j + 2));
        pvar[j] = MultiPoly::variable("p" + std::to_string(j + 1));
    }

    std::vector<unsigned> wlev(wcyc.size()), blev(bcyc.size());
    MultiPoly total;
    std::function<void(size_t)> recB;
    std::function<void(size_t)> recW = [&](size_t w) {
        if (w == wcyc.size()) {
            recB(0);
            return;
        }
        for (unsigned j = 1; j <= ell; ++j) {
            wlev[w] = j;
            recW(w + 1);
        }
    };
    recB = [&](size_t b) {
        if (b == bcyc.size()) {
            MultiPoly term = MultiPoly(Rational(1));
            for (size_t w = 0; w < wcyc.size(); ++w) term *= qdiff[wlev[w] - 1];
            for (size_t bb = 0; bb < bcyc.size(); ++bb) term *= pvar[blev[bb] - 1];
            total += term;
            return;
        }
        unsigned cap = ell;
        for (unsigned e : bcyc[b])
            cap = std::min(cap, wlev[white_of[e]]);
        for (unsigned j = 1; j <= cap; ++j) {
            blev[b] = j;
            recB(b + 1);
        }
    };
    recW(0);
    return total;
}

// Top-degree map formula: -(1/(n-1)!) * sum over labeled transitive pairs of
// g^{n+1-|V|} * weight_N_multirect.
inline MultiPoly ch_top_maps(unsigned n, unsigned ell) {
    if (n < 1 || n > 6) throw TooLargeError("ch_top_maps supports 1 <= n <= 6");
    MultiPoly g = MultiPoly::variable("g");
    MultiPoly sum;
    for (const auto& m : enumerate_labeled(n)) {
        MapStats s = map_stats(m);
        unsigned v = s.whites + s.blacks;
        sum += g.pow(n + 1 - v) * weight_N_multirect(m, ell);
    }
    Rational norm = Rational(factorial(n - 1));
    return -(sum * (1 / norm));
}

// One-face map sum at A = 1: -(1/(n-1)!) * sum over labeled one-face pairs
// of weight_N(m, lambda) |_{A:=1}.
inline Rational ch_a1_one_face(unsigned n, const YoungDiagram& lambda) {
    if (n < 1 || n > 6) throw TooLargeError("ch_a1_one_face supports 1 <= n <= 6");
    Rational sum = 0;
    for (const auto& m : enumerate_labeled(n)) {
        MapStats s = map_stats(m);
        if (s.faces != 1) continue;
        Rational c = Rational(count_embeddings(m, lambda));
        if (s.blacks % 2 == 1) c = -c;
        sum += c;
    }
    return -sum / Rational(factorial(n - 1));
}

// 1-indexed serialization record {"n":3,"sigma":[2,3,1],"tau":[2,3,1]}.
inline std::vector<unsigned> to_one_indexed(const Perm& p) {
    std::vector<unsigned> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] + 1;
    return r;
}

}  // namespace jackmaps

#endif
