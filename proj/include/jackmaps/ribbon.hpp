#ifndef JACKMAPS_RIBBON_HPP
#define JACKMAPS_RIBBON_HPP

#include "oriented_maps.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace jackmaps {

struct UnknownEdgeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AmbiguousChoiceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ribbon graph on possibly non-orientable surfaces: each edge e in {1..n} has
// a white half-edge 2(e-1) and a black half-edge 2(e-1)+1; `rho` sends every
// present half-edge to the next one in the rotation at its vertex, so vertex
// rotations are the cycles of rho (even half-edges sit on white vertices, odd
// on black). A set twist bit crosses the ribbon. Edge deletion keeps the
// endpoints; vertices left without any half-edge are tallied in `isolated`.
struct RibbonGraph {
    unsigned n = 0;
    std::map<unsigned, unsigned> rho;
    std::vector<bool> twists;  // twists[e-1]
    unsigned isolated = 0;

    bool edge_present(unsigned e) const { return rho.count(2 * (e - 1)) != 0; }
    static unsigned white_half(unsigned e) { return 2 * (e - 1); }
    static unsigned black_half(unsigned e) { return 2 * (e - 1) + 1; }
    static unsigned edge_of(unsigned h) { return h / 2 + 1; }
    static unsigned partner(unsigned h) { return h ^ 1u; }
};

namespace ribbon_detail {

inline std::map<unsigned, unsigned> rho_inverse(const RibbonGraph& r) {
    std::map<unsigned, unsigned> inv;
    for (auto [h, nx] : r.rho) inv[nx] = h;
    return inv;
}

// Vertex rotations = cycles of rho, reported with their minimal half-edge first.
inline std::vector<std::vector<unsigned>> vertex_cycles(const RibbonGraph& r) {
    std::vector<std::vector<unsigned>> out;
    std::set<unsigned> seen;
    for (auto [h0, _] : r.rho) {
        if (seen.count(h0)) continue;
        std::vector<unsigned> cyc;
        for (unsigned h = h0; !seen.count(h); h = r.rho.at(h)) {
            seen.insert(h);
            cyc.push_back(h);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

}  // namespace ribbon_detail

// Boundary walks. A walk state is (half-edge about to be left, side); crossing
// edge e keeps the side unless e is twisted, and the exit turns by rho or its
// inverse according to the side. States pair up into reversed walks, so the
// face count is half the orbit count, plus one face per isolated vertex.
inline unsigned trace_faces(const RibbonGraph& r) {
    auto inv = ribbon_detail::rho_inverse(r);
    std::set<std::pair<unsigned, int>> seen;
    unsigned orbits = 0;
    for (auto [h0, _] : r.rho) {
        for (int d0 : {+1, -1}) {
            if (seen.count({h0, d0})) continue;
            ++orbits;
            unsigned h = h0;
            int d = d0;
            while (!seen.count({h, d})) {
                seen.insert({h, d});
                unsigned p = RibbonGraph::partner(h);
                int d2 = r.twists[RibbonGraph::edge_of(h) - 1] ? -d : d;
                h = d2 == +1 ? r.rho.at(p) : inv.at(p);
                d = d2;
            }
        }
    }
    return orbits / 2 + r.isolated;
}

inline unsigned component_count(const RibbonGraph& r) {
    std::map<unsigned, unsigned> parent;
    std::function<unsigned(unsigned)> find = [&](unsigned x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [h, _] : r.rho) parent[h] = h;
    auto unite = [&](unsigned a, unsigned b) { parent[find(a)] = find(b); };
    for (auto [h, nx] : r.rho) {
        unite(h, nx);
        unite(h, RibbonGraph::partner(h));
    }
    std::set<unsigned> roots;
    for (auto [h, _] : r.rho) roots.insert(find(h));
    return static_cast<unsigned>(roots.size()) + r.isolated;
}

inline bool connected(const RibbonGraph& r) {
    return r.isolated == 0 && !r.rho.empty() && component_count(r) == 1;
}

// Reverse the rotation at the vertex containing half-edge h and toggle the
// twist of every edge incident to that vertex.
inline RibbonGraph flip(const RibbonGraph& r, unsigned h) {
    RibbonGraph out = r;
    std::vector<unsigned> cyc;
    for (unsigned x = h; cyc.empty() || x != h; x = r.rho.at(x)) cyc.push_back(x);
    for (unsigned x : cyc) {
        out.rho[r.rho.at(x)] = x;
        out.twists[RibbonGraph::edge_of(x) - 1] = !out.twists[RibbonGraph::edge_of(x) - 1];
    }
    return out;
}

inline RibbonGraph twist_edge(const RibbonGraph& r, unsigned e) {
    if (e < 1 || e > r.n || !r.edge_present(e)) throw UnknownEdgeError("no such edge");
    RibbonGraph out = r;
    out.twists[e - 1] = !out.twists[e - 1];
    return out;
}

inline RibbonGraph remove_edge(const RibbonGraph& r, unsigned e) {
    if (e < 1 || e > r.n || !r.edge_present(e)) throw UnknownEdgeError("no such edge");
    RibbonGraph out = r;
    auto inv = ribbon_detail::rho_inverse(out);
    for (unsigned h : {RibbonGraph::white_half(e), RibbonGraph::black_half(e)}) {
        if (out.rho.at(h) == h) {
            out.isolated += 1;
        } else {
            unsigned prev = inv.at(h), next = out.rho.at(h);
            out.rho[prev] = next;
            inv[next] = prev;
        }
        out.rho.erase(h);
        inv.erase(h);
    }
    return out;
}

inline std::string serialize_key(const RibbonGraph& r) {
    std::ostringstream os;
    for (auto [h, nx] : r.rho) os << h << '>' << nx << ';';
    os << '|';
    for (unsigned e = 1; e <= r.n; ++e)
        os << (r.edge_present(e) ? (r.twists[e - 1] ? '1' : '0') : '.');
    os << '|' << r.isolated;
    return os.str();
}

// Minimum serialization over all subsets of vertex flips (label-preserving
// isomorphism leaves nothing further to quotient: half-edge ids are pinned by
// the edge labels).
inline std::string canonical_form(const RibbonGraph& r) {
    auto cycles = ribbon_detail::vertex_cycles(r);
    std::string best;
    for (std::uint32_t mask = 0; mask < (1u << cycles.size()); ++mask) {
        RibbonGraph g = r;
        for (size_t v = 0; v < cycles.size(); ++v)
            if (mask & (1u << v)) g = flip(g, cycles[v][0]);
        std::string s = serialize_key(g);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

inline bool flip_equivalent(const RibbonGraph& a, const RibbonGraph& b) {
    if (a.n != b.n) return false;
    return canonical_form(a) == canonical_form(b);
}

// Twists are removable by flips iff the per-vertex flip indicators solve
// x_white(e) + x_black(e) = twist(e) over GF(2) for every edge e.
inline bool orientable(const RibbonGraph& r) {
    auto cycles = ribbon_detail::vertex_cycles(r);
    std::map<unsigned, unsigned> vert_of;  // half-edge -> cycle index
    for (unsigned v = 0; v < cycles.size(); ++v)
        for (unsigned h : cycles[v]) vert_of[h] = v;
    std::vector<int> sign(cycles.size(), -1);
    for (unsigned v0 = 0; v0 < cycles.size(); ++v0) {
        if (sign[v0] != -1) continue;
        sign[v0] = 0;
        std::vector<unsigned> stack{v0};
        while (!stack.empty()) {
            unsigned v = stack.back();
            stack.pop_back();
            for (unsigned h : cycles[v]) {
                unsigned w = vert_of.at(RibbonGraph::partner(h));
                int want = sign[v] ^ (r.twists[RibbonGraph::edge_of(h) - 1] ? 1 : 0);
                if (sign[w] == -1) {
                    sign[w] = want;
                    stack.push_back(w);
                } else if (sign[w] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Linear order on the edge labels; order[0] is the smallest element.
struct OrderedMap {
    RibbonGraph map;
    std::vector<unsigned> order;
};

// After deleting each proper prefix of the order (vertices stay), every
// component of the rest must be unicellular.
inline bool progressive_condition(const OrderedMap& om) {
    RibbonGraph g = om.map;
    for (size_t i = 0; i + 1 < om.order.size(); ++i) {
        g = remove_edge(g, om.order[i]);
        if (component_count(g) != trace_faces(g)) return false;
    }
    return true;
}

// Build a ribbon graph from rotations given as permutations of the edge
// labels: white vertex rotations are the cycles of sw (acting on labels via
// their white half-edges), black ones the cycles of sb.
inline RibbonGraph make_ribbon(unsigned n, const Perm& sw, const Perm& sb,
                               const std::vector<bool>& twists) {
    RibbonGraph r;
    r.n = n;
    r.twists = twists;
    for (unsigned i = 0; i < n; ++i) {
        r.rho[2 * i] = 2 * sw[i];
        r.rho[2 * i + 1] = 2 * sb[i] + 1;
    }
    return r;
}

// One canonical representative per flip-equivalence class of connected
// bicolored edge-labeled ribbon graphs, in canonical-form order.
inline std::vector<RibbonGraph> enumerate_nonoriented_labeled(unsigned n) {
    if (n < 1 || n > 4) throw TooLargeError("enumerate_nonoriented_labeled supports 1 <= n <= 4");
    std::vector<Perm> perms;
    Perm id(n);
    std::iota(id.begin(), id.end(), 0u);
    Perm p = id;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::string, RibbonGraph> classes;
    for (const auto& sw : perms)
        for (const auto& sb : perms)
            for (std::uint32_t tw = 0; tw < (1u << n); ++tw) {
                std::vector<bool> twists(n);
                for (unsigned e = 0; e < n; ++e) twists[e] = (tw >> e) & 1u;
                RibbonGraph r = make_ribbon(n, sw, sb, twists);
                if (!connected(r)) continue;
                classes.emplace(canonical_form(r), r);
            }
    std::vector<RibbonGraph> out;
    out.reserve(classes.size());
    for (auto& [_, r] : classes) out.push_back(std::move(r));
    return out;
}

inline bool is_bridge(const RibbonGraph& g, unsigned e) {
    return component_count(remove_edge(g, e)) > component_count(g);
}

// The one-face side of the two-sided count, with the order normalized to the
// edge labels. Each item is a connected labeled ribbon graph such that every
// label-suffix stage {i..n} (vertices kept) is componentwise unicellular, and
// such that an edge which is a bridge at its own insertion stage carries no
// twist: the two attachments of a bridge give the same surface, so only one
// of them is a legitimate choice, while a non-bridge ribbon genuinely has two.
inline std::vector<RibbonGraph> enumerate_S1_items(unsigned n) {
    if (n < 1 || n > 4) throw TooLargeError("enumerate_S1_items supports 1 <= n <= 4");
    std::vector<Perm> perms;
    Perm id(n);
    std::iota(id.begin(), id.end(), 0u);
    Perm p = id;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<RibbonGraph> out;
    for (const auto& sw : perms)
        for (const auto& sb : perms)
            for (std::uint32_t tw = 0; tw < (1u << n); ++tw) {
                std::vector<bool> twists(n);
                for (unsigned e = 0; e < n; ++e) twists[e] = (tw >> e) & 1u;
                RibbonGraph r = make_ribbon(n, sw, sb, twists);
                if (!connected(r) || trace_faces(r) != 1) continue;
                RibbonGraph g = r;
                bool ok = true;
                for (unsigned e = 1; e <= n && ok; ++e) {
                    if (r.twists[e - 1] && is_bridge(g, e)) ok = false;
                    if (!ok) break;
                    g = remove_edge(g, e);
                    if (component_count(g) != trace_faces(g)) ok = false;
                }
                if (ok) out.push_back(std::move(r));
            }
    return out;
}

// Two-sided count of (rooted map, order) pairs: both sides are reduced to
// label-normalized items (labels = order ranks) carrying one of n possible
// decoration ranks.
inline std::pair<Integer, Integer> count_S1_S2(unsigned n) {
    if (n < 1 || n > 4) throw TooLargeError("count_S1_S2 supports 1 <= n <= 4");
    Integer s1 = Integer(n) * Integer(enumerate_S1_items(n).size());
    Integer s2 = Integer(n) * Integer(enumerate_labeled(n).size());
    return {s1, s2};
}

// Relabel edges so that the rank-k edge of the order gets label k.
inline RibbonGraph relabel_by_order(const RibbonGraph& r, const std::vector<unsigned>& order) {
    std::vector<unsigned> new_label(r.n + 1);
    for (unsigned rank = 0; rank < order.size(); ++rank) new_label[order[rank]] = rank + 1;
    auto map_half = [&](unsigned h) {
        unsigned e = RibbonGraph::edge_of(h);
        return 2 * (new_label[e] - 1) + (h & 1u);
    };
    RibbonGraph out;
    out.n = r.n;
    out.isolated = r.isolated;
    out.twists.assign(r.n, false);
    for (unsigned e = 1; e <= r.n; ++e)
        if (r.edge_present(e)) out.twists[new_label[e] - 1] = r.twists[e - 1];
    for (auto [h, nx] : r.rho) out.rho[map_half(h)] = map_half(nx);
    return out;
}

namespace ribbon_detail {

// Underlying labeled bicolored multigraph: the two partitions of the edge
// labels into vertex classes, sorted.
inline std::string underlying_graph_key(const RibbonGraph& r) {
    std::vector<std::vector<unsigned>> white, black;
    for (const auto& cyc : vertex_cycles(r)) {
        std::vector<unsigned> labels;
        for (unsigned h : cyc) labels.push_back(RibbonGraph::edge_of(h));
        std::sort(labels.begin(), labels.end());
        ((cyc[0] & 1u) ? black : white).push_back(std::move(labels));
    }
    std::sort(white.begin(), white.end());
    std::sort(black.begin(), black.end());
    std::ostringstream os;
    for (const auto& blk : white) {
        for (unsigned l : blk) os << l << ',';
        os << '/';
    }
    os << '|';
    for (const auto& blk : black) {
        for (unsigned l : blk) os << l << ',';
        os << '/';
    }
    return os.str();
}

inline std::string underlying_graph_key(const OrientedBicolMap& m) {
    std::vector<std::vector<unsigned>> white, black;
    for (const auto& cyc : cycles_of(m.sigma)) {
        std::vector<unsigned> labels;
        for (unsigned e : cyc) labels.push_back(e + 1);
        std::sort(labels.begin(), labels.end());
        white.push_back(std::move(labels));
    }
    for (const auto& cyc : cycles_of(m.tau)) {
        std::vector<unsigned> labels;
        for (unsigned e : cyc) labels.push_back(e + 1);
        std::sort(labels.begin(), labels.end());
        black.push_back(std::move(labels));
    }
    std::sort(white.begin(), white.end());
    std::sort(black.begin(), black.end());
    std::ostringstream os;
    for (const auto& blk : white) {
        for (unsigned l : blk) os << l << ',';
        os << '/';
    }
    os << '|';
    for (const auto& blk : black) {
        for (unsigned l : blk) os << l << ',';
        os << '/';
    }
    return os.str();
}

}  // namespace ribbon_detail

struct S1Item {
    RibbonGraph map;     // normalized one-face item; edge labels encode the order
    unsigned root_rank;  // which rank carries the decoration
};
struct S2Item {
    OrientedBicolMap map;  // edge labels encode the order (label = rank)
    unsigned root_rank;    // which rank carries the decoration
};

// Constructive matching for the two-sided count: items on both sides are
// grouped by decoration rank and the underlying labeled bicolored multigraph
// (which the insertion process preserves), then paired inside each group in
// canonical serialization order. A group-size mismatch would mean the
// legitimate attachment choices cannot be matched; it is reported, never
// papered over.
inline std::vector<std::pair<S1Item, S2Item>> build_bijection(unsigned n) {
    if (n < 1 || n > 3) throw TooLargeError("build_bijection supports 1 <= n <= 3");

    std::map<std::string, std::vector<S1Item>> left;
    for (const auto& r : enumerate_S1_items(n)) {
        std::string key = ribbon_detail::underlying_graph_key(r);
        for (unsigned k = 1; k <= n; ++k) left[key + '#' + std::to_string(k)].push_back({r, k});
    }
    std::map<std::string, std::vector<S2Item>> right;
    for (const auto& m : enumerate_labeled(n)) {
        std::string key = ribbon_detail::underlying_graph_key(m);
        for (unsigned k = 1; k <= n; ++k) right[key + '#' + std::to_string(k)].push_back({m, k});
    }

    auto s1_sort_key = [](const S1Item& it) {
        return serialize_key(it.map) + '#' + std::to_string(it.root_rank);
    };
    auto s2_sort_key = [](const S2Item& it) {
        std::ostringstream os;
        for (unsigned v : it.map.sigma) os << v << ',';
        os << '|';
        for (unsigned v : it.map.tau) os << v << ',';
        os << '|' << it.root_rank;
        return os.str();
    };

    std::vector<std::pair<S1Item, S2Item>> out;
    for (auto& [key, ls] : left) {
        auto it = right.find(key);
        if (it == right.end() || it->second.size() != ls.size())
            throw AmbiguousChoiceError("attachment choices do not match on key " + key);
        std::sort(ls.begin(), ls.end(), [&](const S1Item& a, const S1Item& b) {
            return s1_sort_key(a) < s1_sort_key(b);
        });
        std::sort(it->second.begin(), it->second.end(), [&](const S2Item& a, const S2Item& b) {
            return s2_sort_key(a) < s2_sort_key(b);
        });
        for (size_t i = 0; i < ls.size(); ++i) out.push_back({ls[i], it->second[i]});
    }
    for (auto& [key, rs] : right)
        if (!left.count(key))
            throw AmbiguousChoiceError("unmatched oriented items on key " + key);
    return out;
}

}  // namespace jackmaps

#endif
