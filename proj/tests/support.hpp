#pragma once

// Shared test utilities: brute-force oracles kept independent of the library
// algorithms they check, random instance builders, and the path-free coloring
// families the multidigraph suite runs on.

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "tripath/coloring.hpp"
#include "tripath/extremal.hpp"
#include "tripath/graph.hpp"
#include "tripath/hypergraph.hpp"
#include "tripath/multidigraph.hpp"
#include "tripath/patterns.hpp"
#include "tripath/structure.hpp"

namespace tsupport {

using namespace tripath;

// ---------------------------------------------------------------------------
// Random instances

inline Hypergraph3 random_hypergraph(std::mt19937_64& rng, int n, double density) {
    Hypergraph3 h(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (coin(rng) < density) h.add(Triple(a, b, c));
    return h;
}

inline Graph random_graph(std::mt19937_64& rng, int n, int edges) {
    Graph g(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int guard = 0;
    while (g.edge_count() < edges && ++guard < 100 * edges + 100) {
        int u = pick(rng), v = pick(rng);
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

inline Graph random_bipartite(std::mt19937_64& rng, int left, int right, int edges) {
    Graph g(left + right);
    std::uniform_int_distribution<int> pl(0, left - 1), pr(0, right - 1);
    int guard = 0;
    while (g.edge_count() < edges && ++guard < 100 * edges + 100)
        g.add_edge(pl(rng), left + pr(rng));
    return g;
}

// ---------------------------------------------------------------------------
// Brute-force oracles

// Exhaustive injective vertex maps; a pattern triple is tested as soon as all
// of its vertices are placed.
inline bool oracle_contains(const Hypergraph3& host, const PathPattern& p) {
    const int pv = p.triples.vertex_count();
    if (pv > host.vertex_count()) return false;
    std::vector<int> map(static_cast<std::size_t>(pv), -1);
    std::vector<char> used(static_cast<std::size_t>(host.vertex_count()), 0);

    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == pv) return true;
        for (int v = 0; v < host.vertex_count(); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            map[static_cast<std::size_t>(i)] = v;
            used[static_cast<std::size_t>(v)] = 1;
            bool ok = true;
            for (const Triple& t : p.triples.triples()) {
                if (std::max({t[0], t[1], t[2]}) != i) continue;
                Triple img(map[static_cast<std::size_t>(t[0])], map[static_cast<std::size_t>(t[1])],
                           map[static_cast<std::size_t>(t[2])]);
                if (!host.contains(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok && rec(i + 1)) return true;
            used[static_cast<std::size_t>(v)] = 0;
        }
        map[static_cast<std::size_t>(i)] = -1;
        return false;
    };
    return rec(0);
}

inline int brute_max_matching(const Graph& g) {
    const int e = g.edge_count();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << e); ++mask) {
        std::vector<char> used(static_cast<std::size_t>(g.n), 0);
        bool ok = true;
        int size = 0;
        for (int i = 0; i < e && ok; ++i)
            if (mask & (1u << i)) {
                auto [u, v] = g.edges[static_cast<std::size_t>(i)];
                if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)])
                    ok = false;
                else {
                    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
                    ++size;
                }
            }
        if (ok) best = std::max(best, size);
    }
    return best;
}

// Smallest cover size <= cap over all vertex subsets, or nullopt.
inline std::optional<int> brute_cover_number(const Graph& g, int cap) {
    for (int t = 0; t <= cap; ++t) {
        std::vector<int> comb(static_cast<std::size_t>(t));
        std::function<bool(int, int)> rec = [&](int start, int left) -> bool {
            if (left == 0) {
                for (auto [u, v] : g.edges) {
                    bool covered = false;
                    for (int w : comb)
                        if (w == u || w == v) covered = true;
                    if (!covered) return false;
                }
                return true;
            }
            for (int v = start; v < g.n; ++v) {
                comb[static_cast<std::size_t>(t - left)] = v;
                if (rec(v + 1, left - 1)) return true;
            }
            return false;
        };
        if (rec(0, t)) return t;
    }
    return std::nullopt;
}

inline long long brute_directed_triangles(const Digraph& d) {
    long long count = 0;
    for (int x = 0; x < d.n; ++x)
        for (int y = 0; y < d.n; ++y)
            for (int z = 0; z < d.n; ++z) {
                if (x == y || y == z || x == z) continue;
                if (d.has_arc(x, y) && d.has_arc(y, z) && d.has_arc(z, x)) ++count;
            }
    return count / 3;  // each cycle counted at its 3 rotations
}

// ---------------------------------------------------------------------------
// Decomposition comparison

inline bool same_decomposition(const LooseDecomposition& a, const LooseDecomposition& b) {
    return a.X == b.X && a.locked_pairs == b.locked_pairs && a.Y == b.Y && a.Z == b.Z &&
           a.star_bodies == b.star_bodies && a.core.triples() == b.core.triples() &&
           a.stray == b.stray;
}

inline bool same_decomposition(const MessyDecomposition& a, const MessyDecomposition& b) {
    return a.X == b.X && a.Y == b.Y && a.Z == b.Z && a.star_bodies == b.star_bodies &&
           a.core.triples() == b.core.triples() && a.stray == b.stray &&
           a.steiner.triples() == b.steiner.triples();
}

// ---------------------------------------------------------------------------
// Path-free coloring families for the multidigraph suite
//
// All classes are sub-stars (every triple of a class shares the class's
// center), one complete class on fewer vertices than the path needs, plus
// optional special classes. Sub-stars and small complete classes contain
// neither path, so these colorings are path-free by construction.
//   - mutual pairs (u,v): triples {u,v,*} alternate between u's and v's class,
//     making u and v point at each other (two-cycle pairs);
//   - split centers: a center owns two classes fed alternately, so its body
//     vertices produce parallel pairs;
//   - a Steiner class (messy): a partial Steiner triple system on a vertex
//     window, exercising s(v);
//   - an embedded class (loose): a generated loose-free instance with locked
//     pairs on a vertex window.
struct RichColoringParams {
    PathKind kind = PathKind::Loose;
    int n = 40;
    int threshold = kLooseCoreThreshold;
    int mutual_pairs = 0;
    int split_centers = 0;
    int steiner_vertices = 0;      // messy only
    bool embed_locked = false;     // loose only
    std::uint64_t seed = 0;
};

inline Coloring rich_coloring(const RichColoringParams& params) {
    const int path_slack = params.kind == PathKind::Loose ? 6 : 5;
    int complement = path_slack;
    while (complement > 3 && binom2(complement - 1) >= params.threshold) --complement;
    if (binom2(complement - 1) >= params.threshold)
        throw std::invalid_argument("rich_coloring: threshold too small for a complete class");

    const int s = params.n - complement;  // centers 0..s-1
    if (s < 2 * params.mutual_pairs + params.split_centers + 1)
        throw std::invalid_argument("rich_coloring: not enough centers");

    // Slot layout: one class per center, a second class for split centers,
    // then optional special classes, complement class last.
    std::vector<int> base_slot(static_cast<std::size_t>(s));
    std::vector<int> extra_slot(static_cast<std::size_t>(s), -1);
    int next_slot = 0;
    for (int i = 0; i < s; ++i) base_slot[static_cast<std::size_t>(i)] = next_slot++;
    const int first_split = 2 * params.mutual_pairs;
    for (int i = first_split; i < first_split + params.split_centers; ++i)
        extra_slot[static_cast<std::size_t>(i)] = next_slot++;

    // Special windows sit after the mutual/split region.
    const int window_start = first_split + params.split_centers;

    std::set<Triple> steiner_set;
    int steiner_slot = -1;
    if (params.steiner_vertices > 0) {
        if (params.kind != PathKind::Messy)
            throw std::invalid_argument("rich_coloring: Steiner class is messy-only");
        if (window_start + params.steiner_vertices > s)
            throw std::invalid_argument("rich_coloring: Steiner window does not fit");
        GeneratorParams gp;
        gp.steiner_vertices = params.steiner_vertices;
        gp.seed = params.seed + 1;
        auto [sh, truth] = generate_messy_free(gp, params.threshold);
        for (const Triple& t : sh.triples())
            steiner_set.insert(
                Triple(t[0] + window_start, t[1] + window_start, t[2] + window_start));
        steiner_slot = next_slot++;
    }

    std::set<Triple> embed_set;
    int embed_slot = -1;
    if (params.embed_locked) {
        if (params.kind != PathKind::Loose)
            throw std::invalid_argument("rich_coloring: embedded locked class is loose-only");
        GeneratorParams gp;
        gp.num_stars = params.threshold;
        gp.star_sizes.assign(static_cast<std::size_t>(params.threshold), params.threshold + 1);
        gp.num_locked_pairs = 2;
        gp.seed = params.seed + 2;
        auto [eh, truth] = generate_loose_free(gp, params.threshold);
        if (window_start + eh.vertex_count() > s)
            throw std::invalid_argument("rich_coloring: embedded window does not fit");
        for (const Triple& t : eh.triples())
            embed_set.insert(Triple(t[0] + window_start, t[1] + window_start, t[2] + window_start));
        embed_slot = next_slot++;
    }

    const int last_slot = next_slot++;
    const int k = next_slot;

    std::vector<std::pair<int, int>> mutual;
    for (int i = 0; i < params.mutual_pairs; ++i) mutual.emplace_back(2 * i, 2 * i + 1);
    std::vector<int> mutual_toggle(static_cast<std::size_t>(params.mutual_pairs), 0);
    std::vector<int> split_toggle(static_cast<std::size_t>(s), 0);

    Coloring col(params.n, k);
    for (int c = 2; c < params.n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) {
                Triple t(a, b, c);
                if (a >= s) {  // fully inside the complement
                    col.set_color(t, last_slot);
                    continue;
                }
                if (!embed_set.empty() && embed_set.count(t)) {
                    col.set_color(t, embed_slot);
                    continue;
                }
                if (!steiner_set.empty() && steiner_set.count(t)) {
                    col.set_color(t, steiner_slot);
                    continue;
                }
                int assigned = -1;
                for (std::size_t mi = 0; mi < mutual.size() && assigned == -1; ++mi) {
                    auto [u, v] = mutual[mi];
                    if (t.contains(u) && t.contains(v)) {
                        int side = mutual_toggle[mi]++ % 2;
                        assigned = base_slot[static_cast<std::size_t>(side == 0 ? u : v)];
                    }
                }
                if (assigned == -1) {
                    int center = a;  // least vertex; always a center here
                    if (extra_slot[static_cast<std::size_t>(center)] >= 0) {
                        int side = split_toggle[static_cast<std::size_t>(center)]++ % 2;
                        assigned = side == 0 ? base_slot[static_cast<std::size_t>(center)]
                                             : extra_slot[static_cast<std::size_t>(center)];
                    } else {
                        assigned = base_slot[static_cast<std::size_t>(center)];
                    }
                }
                col.set_color(t, assigned);
            }
    return col;
}

}  // namespace tsupport
