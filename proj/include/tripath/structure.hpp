#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tripath/graph.hpp"
#include "tripath/hypergraph.hpp"

namespace tripath {

inline constexpr int kLooseCoreThreshold = 22;
inline constexpr int kMessyCoreThreshold = 13;

// Raised when a core fails one of the structural laws of path-free
// hypergraphs. At the default thresholds a violation pinpoints a path in the
// input; at lower thresholds the laws are not guaranteed and a violation may
// only mean the threshold was too small.
class StructureViolation : public std::runtime_error {
public:
    StructureViolation(std::string reason, Vertex vertex = -1,
                       std::optional<Triple> triple = std::nullopt, int color = -1)
        : std::runtime_error(format(reason, vertex, triple, color)), reason_(std::move(reason)),
          vertex_(vertex), triple_(triple), color_(color) {}

    const std::string& reason() const { return reason_; }
    Vertex vertex() const { return vertex_; }
    const std::optional<Triple>& triple() const { return triple_; }
    int color() const { return color_; }

    StructureViolation with_color(int color) const {
        return StructureViolation(reason_, vertex_, triple_, color);
    }

private:
    static std::string format(const std::string& reason, Vertex v, const std::optional<Triple>& t,
                              int color) {
        std::ostringstream os;
        os << "structure violation: " << reason;
        if (v >= 0) os << " [vertex " << v << "]";
        if (t) os << " [triple " << *t << "]";
        if (color >= 0) os << " [color " << color << "]";
        return os.str();
    }

    std::string reason_;
    Vertex vertex_;
    std::optional<Triple> triple_;
    int color_;
};

struct LooseDecomposition {
    int threshold = kLooseCoreThreshold;
    Hypergraph3 core;
    std::vector<Triple> stray;
    std::vector<Vertex> X;
    std::vector<std::pair<Vertex, Vertex>> locked_pairs;  // each (x, x') with x < x'
    std::vector<Vertex> Y;
    std::map<Vertex, std::vector<Vertex>> star_bodies;  // nonempty A_y, ascending
    std::vector<Vertex> Z;
};

struct MessyDecomposition {
    int threshold = kMessyCoreThreshold;
    Hypergraph3 core;
    std::vector<Triple> stray;
    std::vector<Vertex> X;
    std::vector<Vertex> Y;
    std::map<Vertex, std::vector<Vertex>> star_bodies;
    std::vector<Vertex> Z;
    Hypergraph3 steiner;  // core[X u Y]; every pair has codegree <= 1
};

namespace detail {

// Edge lists of all traces in one pass; index = vertex.
inline std::vector<std::vector<std::pair<int, int>>> all_trace_edges(const Hypergraph3& h) {
    std::vector<std::vector<std::pair<int, int>>> tr(static_cast<std::size_t>(h.vertex_count()));
    for (const Triple& t : h.triples()) {
        tr[static_cast<std::size_t>(t[0])].emplace_back(t[1], t[2]);
        tr[static_cast<std::size_t>(t[1])].emplace_back(t[0], t[2]);
        tr[static_cast<std::size_t>(t[2])].emplace_back(t[0], t[1]);
    }
    for (auto& edges : tr) std::sort(edges.begin(), edges.end());
    return tr;
}

inline Graph graph_from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Graph g(n);
    g.edges = std::move(edges);
    return g;
}

// Center of a star-shaped edge list (>= 2 edges all sharing one vertex), or -1.
inline int star_center(const std::vector<std::pair<int, int>>& edges) {
    if (edges.size() < 2) return -1;
    for (int cand : {edges[0].first, edges[0].second}) {
        bool all = true;
        for (const auto& [a, b] : edges)
            if (a != cand && b != cand) {
                all = false;
                break;
            }
        if (all) return cand;
    }
    return -1;
}

}  // namespace detail

// Decomposition of the `threshold`-core of a loose-path-free hypergraph.
//
// Star centers Y are the vertices whose trace has matching number >= 4; the
// body A_y collects the components of Tr(y) with more than `threshold`
// vertices; what remains must pair up into locked pairs X. Every law used
// along the way (no trace matching number 2 or 3, no mid-sized components,
// locked stars reciprocal, and finally the two admissible triple forms) is
// checked, so a returned decomposition is a certificate and a violation
// pinpoints a loose path or a bug.
inline LooseDecomposition decompose_loose(const Hypergraph3& h, int threshold = kLooseCoreThreshold) {
    LooseDecomposition d;
    d.threshold = threshold;
    CoreResult cr = m_core(h, threshold);
    d.core = std::move(cr.core);
    d.stray = std::move(cr.stray);

    const int n = d.core.vertex_count();
    const std::vector<int> deg = d.core.degrees();
    auto traces = detail::all_trace_edges(d.core);

    enum : int8_t { kNone = 0, kX = 1, kY = 2, kZ = 3 };
    std::vector<int8_t> part(static_cast<std::size_t>(n), kNone);
    std::vector<int> body_of(static_cast<std::size_t>(n), -1);

    std::vector<int> nu(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] == 0) continue;
        Graph tr = detail::graph_from_edges(n, traces[static_cast<std::size_t>(v)]);
        nu[static_cast<std::size_t>(v)] = matching_size_bounded(tr, 4);
        if (nu[static_cast<std::size_t>(v)] == 2 || nu[static_cast<std::size_t>(v)] == 3)
            throw StructureViolation("trace matching number is 2 or 3", v);
        if (nu[static_cast<std::size_t>(v)] >= 4) {
            part[static_cast<std::size_t>(v)] = kY;
            d.Y.push_back(v);
        }
    }

    for (Vertex y : d.Y) {
        Graph tr = detail::graph_from_edges(n, traces[static_cast<std::size_t>(y)]);
        std::vector<Vertex> body;
        for (const auto& comp : connected_components(tr)) {
            if (comp.size() <= 2) continue;
            if (static_cast<int>(comp.size()) <= threshold)
                throw StructureViolation("trace component of mid size " +
                                             std::to_string(comp.size()),
                                         y);
            for (Vertex z : comp) {
                if (part[static_cast<std::size_t>(z)] == kY)
                    throw StructureViolation("star center inside a star body", z);
                if (body_of[static_cast<std::size_t>(z)] != -1)
                    throw StructureViolation("vertex lies in two star bodies", z);
                part[static_cast<std::size_t>(z)] = kZ;
                body_of[static_cast<std::size_t>(z)] = y;
                body.push_back(z);
            }
        }
        if (!body.empty()) {
            std::sort(body.begin(), body.end());
            d.star_bodies[y] = std::move(body);
        }
    }
    for (int v = 0; v < n; ++v)
        if (part[static_cast<std::size_t>(v)] == kZ) d.Z.push_back(v);

    // Leftover positive-degree vertices must form locked pairs.
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        if (deg[static_cast<std::size_t>(x)] == 0 || part[static_cast<std::size_t>(x)] != kNone)
            continue;
        const auto& edges = traces[static_cast<std::size_t>(x)];
        if (static_cast<int>(edges.size()) < threshold)
            throw StructureViolation("locked candidate with thin trace", x);
        int center = detail::star_center(edges);
        if (center == -1) throw StructureViolation("trace of X vertex is not a star", x);
        if (part[static_cast<std::size_t>(center)] == kY)
            throw StructureViolation("X trace centered at a Y vertex", x);
        if (part[static_cast<std::size_t>(center)] == kZ)
            throw StructureViolation("X trace centered at a Z vertex", x);
        partner[static_cast<std::size_t>(x)] = center;
        part[static_cast<std::size_t>(x)] = kX;
        d.X.push_back(x);
    }
    for (Vertex x : d.X) {
        Vertex p = partner[static_cast<std::size_t>(x)];
        if (partner[static_cast<std::size_t>(p)] != x)
            throw StructureViolation("locked pair is not reciprocal", x);
        if (x < p) d.locked_pairs.emplace_back(x, p);
    }

    // Every core triple must take one of the two admissible forms.
    for (const Triple& t : d.core.triples()) {
        int cy = 0, cx = 0, cz = 0;
        for (int i = 0; i < 3; ++i) {
            int8_t p = part[static_cast<std::size_t>(t[i])];
            cy += p == kY;
            cx += p == kX;
            cz += p == kZ;
        }
        if (cx == 2 && cy == 1) {
            Vertex a = -1, b = -1;
            for (int i = 0; i < 3; ++i)
                if (part[static_cast<std::size_t>(t[i])] == kX) (a == -1 ? a : b) = t[i];
            if (partner[static_cast<std::size_t>(a)] != b)
                throw StructureViolation("X pair in triple is not locked", a, t);
        } else if (cy == 1 && cz == 2) {
            Vertex y = -1;
            for (int i = 0; i < 3; ++i)
                if (part[static_cast<std::size_t>(t[i])] == kY) y = t[i];
            for (int i = 0; i < 3; ++i)
                if (part[static_cast<std::size_t>(t[i])] == kZ &&
                    body_of[static_cast<std::size_t>(t[i])] != y)
                    throw StructureViolation("body vertex paired with foreign center", t[i], t);
        } else {
            throw StructureViolation("triple matches neither admissible form", -1, t);
        }
    }
    return d;
}

// Decomposition of the `threshold`-core of a messy-path-free hypergraph.
//
// Z holds the vertices whose trace has vertex cover number 1; each points at
// its star center, and the centers form Y. Everything else is X, and
// core[X u Y] must be a partial Steiner triple system (all codegrees <= 1).
inline MessyDecomposition decompose_messy(const Hypergraph3& h, int threshold = kMessyCoreThreshold) {
    MessyDecomposition d;
    d.threshold = threshold;
    CoreResult cr = m_core(h, threshold);
    d.core = std::move(cr.core);
    d.stray = std::move(cr.stray);

    const int n = d.core.vertex_count();
    const std::vector<int> deg = d.core.degrees();
    auto traces = detail::all_trace_edges(d.core);

    enum : int8_t { kNone = 0, kX = 1, kY = 2, kZ = 3 };
    std::vector<int8_t> part(static_cast<std::size_t>(n), kNone);
    std::vector<int> center_of(static_cast<std::size_t>(n), -1);

    for (int v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] == 0) continue;
        Graph tr = detail::graph_from_edges(n, traces[static_cast<std::size_t>(v)]);
        auto cover = cover_number_at_most(tr, 3);
        if (!cover) continue;  // tau >= 4
        if (cover->first != 1)
            throw StructureViolation("trace cover number is 2 or 3", v);
        part[static_cast<std::size_t>(v)] = kZ;
        center_of[static_cast<std::size_t>(v)] = cover->second.front();
    }

    for (int z = 0; z < n; ++z) {
        if (part[static_cast<std::size_t>(z)] != kZ) continue;
        Vertex y = center_of[static_cast<std::size_t>(z)];
        if (part[static_cast<std::size_t>(y)] == kZ)
            throw StructureViolation("star center has trace cover number 1", y);
        part[static_cast<std::size_t>(y)] = kY;
    }
    for (int v = 0; v < n; ++v) {
        if (part[static_cast<std::size_t>(v)] == kY) d.Y.push_back(v);
        if (part[static_cast<std::size_t>(v)] == kZ) {
            d.Z.push_back(v);
            d.star_bodies[center_of[static_cast<std::size_t>(v)]].push_back(v);
        }
        if (deg[static_cast<std::size_t>(v)] > 0 && part[static_cast<std::size_t>(v)] == kNone) {
            part[static_cast<std::size_t>(v)] = kX;
            d.X.push_back(v);
        }
    }

    std::vector<Vertex> xy = d.X;
    xy.insert(xy.end(), d.Y.begin(), d.Y.end());
    d.steiner = induced(d.core, xy);

    std::map<std::pair<Vertex, Vertex>, int> pair_count;
    for (const Triple& t : d.steiner.triples()) {
        for (auto [a, b] : {std::pair(t[0], t[1]), std::pair(t[0], t[2]), std::pair(t[1], t[2])})
            if (++pair_count[{a, b}] > 1)
                throw StructureViolation("codegree 2 pair in Steiner part (kite)", a, t);
    }

    for (const Triple& t : d.core.triples()) {
        int cy = 0, cz = 0;
        for (int i = 0; i < 3; ++i) {
            cy += part[static_cast<std::size_t>(t[i])] == kY;
            cz += part[static_cast<std::size_t>(t[i])] == kZ;
        }
        if (cz == 0) continue;  // inside X u Y; Steiner checks above apply
        if (!(cy == 1 && cz == 2))
            throw StructureViolation("triple matches neither admissible form", -1, t);
        Vertex y = -1;
        for (int i = 0; i < 3; ++i)
            if (part[static_cast<std::size_t>(t[i])] == kY) y = t[i];
        for (int i = 0; i < 3; ++i)
            if (part[static_cast<std::size_t>(t[i])] == kZ &&
                center_of[static_cast<std::size_t>(t[i])] != y)
                throw StructureViolation("body vertex paired with foreign center", t[i], t);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Verification reports

struct VerifyReport {
    bool ok = true;
    std::string violation;                 // empty when ok
    std::optional<Triple> witness_triple;  // when a triple is at fault

    static VerifyReport pass() { return {}; }
    static VerifyReport fail(std::string what, std::optional<Triple> t = std::nullopt) {
        return {false, std::move(what), t};
    }
};

namespace detail {

enum : int8_t { kPartNone = 0, kPartX = 1, kPartY = 2, kPartZ = 3 };

struct PartTable {
    std::vector<int8_t> part;
    std::vector<int> owner;  // Z vertex -> its center; X vertex -> partner
};

template <typename Decomp>
inline std::optional<VerifyReport> check_partition(const Decomp& d, PartTable& table) {
    const int n = d.core.vertex_count();
    table.part.assign(static_cast<std::size_t>(n), kPartNone);
    table.owner.assign(static_cast<std::size_t>(n), -1);
    auto place = [&](Vertex v, int8_t p) -> bool {
        if (v < 0 || v >= n || table.part[static_cast<std::size_t>(v)] != kPartNone) return false;
        table.part[static_cast<std::size_t>(v)] = p;
        return true;
    };
    for (Vertex x : d.X)
        if (!place(x, kPartX)) return VerifyReport::fail("X overlaps another part or repeats");
    for (Vertex y : d.Y)
        if (!place(y, kPartY)) return VerifyReport::fail("Y overlaps another part or repeats");
    for (Vertex z : d.Z)
        if (!place(z, kPartZ)) return VerifyReport::fail("Z overlaps another part or repeats");

    std::vector<int> deg = d.core.degrees();
    for (int v = 0; v < n; ++v) {
        bool positive = deg[static_cast<std::size_t>(v)] > 0;
        bool assigned = table.part[static_cast<std::size_t>(v)] != kPartNone;
        if (positive && deg[static_cast<std::size_t>(v)] < d.threshold)
            return VerifyReport::fail("core vertex with degree below threshold");
        if (positive != assigned)
            return VerifyReport::fail("X u Y u Z differs from positive-degree vertex set");
    }

    std::size_t z_total = 0;
    for (const auto& [y, body] : d.star_bodies) {
        if (table.part[static_cast<std::size_t>(y)] != kPartY)
            return VerifyReport::fail("star body keyed by non-Y vertex");
        if (body.empty()) return VerifyReport::fail("empty star body stored");
        for (Vertex z : body) {
            if (table.part[static_cast<std::size_t>(z)] != kPartZ)
                return VerifyReport::fail("star body member outside Z");
            if (table.owner[static_cast<std::size_t>(z)] != -1)
                return VerifyReport::fail("star bodies overlap");
            table.owner[static_cast<std::size_t>(z)] = y;
        }
        z_total += body.size();
    }
    if (z_total != d.Z.size()) return VerifyReport::fail("star bodies do not cover Z");
    return std::nullopt;
}

template <typename Decomp>
inline std::optional<VerifyReport> check_core_stray(const Decomp& d, const Hypergraph3* original) {
    for (const Triple& t : d.stray)
        if (d.core.contains(t)) return VerifyReport::fail("stray triple also in core", t);
    if (original) {
        std::vector<Triple> merged = d.core.triples();
        merged.insert(merged.end(), d.stray.begin(), d.stray.end());
        std::sort(merged.begin(), merged.end());
        if (merged != original->triples())
            return VerifyReport::fail("core u stray differs from input");
    }
    return std::nullopt;
}

}  // namespace detail

inline VerifyReport verify_decomposition(const LooseDecomposition& d,
                                         const Hypergraph3* original = nullptr) {
    detail::PartTable table;
    if (auto r = detail::check_partition(d, table)) return *r;
    if (auto r = detail::check_core_stray(d, original)) return *r;

    for (const auto& [y, body] : d.star_bodies)
        if (static_cast<int>(body.size()) <= d.threshold)
            return VerifyReport::fail("star body smaller than threshold+1");

    const int n = d.core.vertex_count();
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    std::vector<char> in_x(static_cast<std::size_t>(n), 0);
    for (Vertex x : d.X) in_x[static_cast<std::size_t>(x)] = 1;
    for (auto [a, b] : d.locked_pairs) {
        if (a >= b) return VerifyReport::fail("locked pair not ordered");
        if (!in_x[static_cast<std::size_t>(a)] || !in_x[static_cast<std::size_t>(b)])
            return VerifyReport::fail("locked pair member outside X");
        if (partner[static_cast<std::size_t>(a)] != -1 || partner[static_cast<std::size_t>(b)] != -1)
            return VerifyReport::fail("vertex in two locked pairs");
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }
    for (Vertex x : d.X)
        if (partner[static_cast<std::size_t>(x)] == -1)
            return VerifyReport::fail("X vertex not in any locked pair");

    for (const Triple& t : d.core.triples()) {
        int cy = 0, cx = 0, cz = 0;
        for (int i = 0; i < 3; ++i) {
            cy += table.part[static_cast<std::size_t>(t[i])] == detail::kPartY;
            cx += table.part[static_cast<std::size_t>(t[i])] == detail::kPartX;
            cz += table.part[static_cast<std::size_t>(t[i])] == detail::kPartZ;
        }
        if (cx == 2 && cy == 1) {
            Vertex a = -1, b = -1;
            for (int i = 0; i < 3; ++i)
                if (table.part[static_cast<std::size_t>(t[i])] == detail::kPartX)
                    (a == -1 ? a : b) = t[i];
            if (partner[static_cast<std::size_t>(a)] != b)
                return VerifyReport::fail("X pair in triple is not locked", t);
        } else if (cy == 1 && cz == 2) {
            Vertex y = -1;
            for (int i = 0; i < 3; ++i)
                if (table.part[static_cast<std::size_t>(t[i])] == detail::kPartY) y = t[i];
            for (int i = 0; i < 3; ++i)
                if (table.part[static_cast<std::size_t>(t[i])] == detail::kPartZ &&
                    table.owner[static_cast<std::size_t>(t[i])] != y)
                    return VerifyReport::fail("body vertex paired with foreign center", t);
        } else {
            return VerifyReport::fail("triple matches neither admissible form", t);
        }
    }

    // Trace law: triples through z in the core all contain its center.
    for (const Triple& t : d.core.triples())
        for (int i = 0; i < 3; ++i) {
            Vertex z = t[i];
            if (table.part[static_cast<std::size_t>(z)] != detail::kPartZ) continue;
            if (!t.contains(table.owner[static_cast<std::size_t>(z)]))
                return VerifyReport::fail("trace of body vertex is not a star at its center", t);
        }
    return VerifyReport::pass();
}

inline VerifyReport verify_decomposition(const MessyDecomposition& d,
                                         const Hypergraph3* original = nullptr) {
    detail::PartTable table;
    if (auto r = detail::check_partition(d, table)) return *r;
    if (auto r = detail::check_core_stray(d, original)) return *r;

    std::map<std::pair<Vertex, Vertex>, int> pair_count;
    for (const Triple& t : d.steiner.triples()) {
        if (!d.core.contains(t)) return VerifyReport::fail("Steiner triple not in core", t);
        for (int i = 0; i < 3; ++i)
            if (table.part[static_cast<std::size_t>(t[i])] == detail::kPartZ)
                return VerifyReport::fail("Steiner triple meets Z", t);
        for (auto [a, b] : {std::pair(t[0], t[1]), std::pair(t[0], t[2]), std::pair(t[1], t[2])})
            if (++pair_count[{a, b}] > 1)
                return VerifyReport::fail("codegree 2 pair in Steiner part", t);
    }

    for (const Triple& t : d.core.triples()) {
        int cy = 0, cz = 0;
        for (int i = 0; i < 3; ++i) {
            cy += table.part[static_cast<std::size_t>(t[i])] == detail::kPartY;
            cz += table.part[static_cast<std::size_t>(t[i])] == detail::kPartZ;
        }
        if (cz == 0) {
            if (!d.steiner.contains(t))
                return VerifyReport::fail("X u Y triple missing from Steiner part", t);
            continue;
        }
        if (!(cy == 1 && cz == 2))
            return VerifyReport::fail("triple matches neither admissible form", t);
        Vertex y = -1;
        for (int i = 0; i < 3; ++i)
            if (table.part[static_cast<std::size_t>(t[i])] == detail::kPartY) y = t[i];
        for (int i = 0; i < 3; ++i)
            if (table.part[static_cast<std::size_t>(t[i])] == detail::kPartZ &&
                table.owner[static_cast<std::size_t>(t[i])] != y)
                return VerifyReport::fail("body vertex paired with foreign center", t);
    }
    return VerifyReport::pass();
}

// ---------------------------------------------------------------------------
// Generators for the characterized families

struct GeneratorParams {
    int num_stars = 0;
    std::vector<int> star_sizes;  // body sizes; one entry per star
    int num_locked_pairs = 0;     // loose only
    int steiner_vertices = 0;     // messy only; 0 = no Steiner part
    double star_density = 1.0;    // probability of each body pair
    std::uint64_t seed = 0;
    int max_retries = 100;
};

inline Hypergraph3 star_hypergraph(int n) {
    if (n < 3) throw std::invalid_argument("star_hypergraph needs n >= 3");
    std::vector<Triple> ts;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b) ts.emplace_back(0, a, b);
    return Hypergraph3(n, std::move(ts));
}

namespace detail {

// Body pair set at the given density with all pair-degrees >= threshold.
inline std::vector<std::pair<int, int>> sample_star_body(int size, double density, int threshold,
                                                         std::mt19937_64& rng, int max_retries) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<std::pair<int, int>> pairs;
        std::vector<int> deg(static_cast<std::size_t>(size), 0);
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b)
                if (density >= 1.0 || coin(rng) < density) {
                    pairs.emplace_back(a, b);
                    ++deg[static_cast<std::size_t>(a)];
                    ++deg[static_cast<std::size_t>(b)];
                }
        if (*std::min_element(deg.begin(), deg.end()) >= threshold) return pairs;
    }
    throw std::runtime_error("generator: density too low to reach the core degree bound");
}

}  // namespace detail

// Disjoint stars plus locked pairs joined to >= threshold distinct centers.
// The output is its own `threshold`-core and the returned decomposition is the
// exact ground truth.
inline std::pair<Hypergraph3, LooseDecomposition> generate_loose_free(
    const GeneratorParams& p, int threshold = kLooseCoreThreshold) {
    if (static_cast<int>(p.star_sizes.size()) != p.num_stars)
        throw std::invalid_argument("generator: star_sizes must list one size per star");
    for (int s : p.star_sizes)
        if (s < threshold + 1)
            throw std::invalid_argument("generator: loose star bodies need size >= threshold+1");
    if (p.star_density <= 0.0 || p.star_density > 1.0)
        throw std::invalid_argument("generator: density must be in (0,1]");
    if (p.num_locked_pairs > 0 && p.num_stars < threshold)
        throw std::runtime_error("generator: locked pairs need at least threshold stars");

    std::mt19937_64 rng(p.seed);
    LooseDecomposition truth;
    truth.threshold = threshold;

    int next = p.num_stars;  // centers occupy 0..num_stars-1
    std::vector<std::pair<int, int>> body_range;
    for (int s : p.star_sizes) {
        body_range.emplace_back(next, next + s);
        next += s;
    }
    int first_locked = next;
    next += 2 * p.num_locked_pairs;
    const int n = next;

    Hypergraph3 h(n);
    for (int i = 0; i < p.num_stars; ++i) {
        auto [lo, hi] = body_range[static_cast<std::size_t>(i)];
        auto pairs = detail::sample_star_body(hi - lo, p.star_density, threshold, rng, p.max_retries);
        for (auto [a, b] : pairs) h.add(Triple(i, lo + a, lo + b));
        truth.Y.push_back(i);
        std::vector<Vertex> body;
        for (int z = lo; z < hi; ++z) body.push_back(z);
        truth.star_bodies[i] = body;
        truth.Z.insert(truth.Z.end(), body.begin(), body.end());
    }

    for (int j = 0; j < p.num_locked_pairs; ++j) {
        int x = first_locked + 2 * j, x2 = x + 1;
        std::vector<int> centers(static_cast<std::size_t>(p.num_stars));
        for (int i = 0; i < p.num_stars; ++i) centers[static_cast<std::size_t>(i)] = i;
        std::shuffle(centers.begin(), centers.end(), rng);
        std::uniform_int_distribution<int> count(threshold, p.num_stars);
        int joined = count(rng);
        for (int i = 0; i < joined; ++i) h.add(Triple(x, x2, centers[static_cast<std::size_t>(i)]));
        truth.X.push_back(x);
        truth.X.push_back(x2);
        truth.locked_pairs.emplace_back(x, x2);
    }

    truth.core = h;
    return {std::move(h), std::move(truth)};
}

// Disjoint stars plus a partial Steiner triple system grown greedily until
// every Steiner vertex has degree >= threshold.
inline std::pair<Hypergraph3, MessyDecomposition> generate_messy_free(
    const GeneratorParams& p, int threshold = kMessyCoreThreshold) {
    if (static_cast<int>(p.star_sizes.size()) != p.num_stars)
        throw std::invalid_argument("generator: star_sizes must list one size per star");
    for (int s : p.star_sizes)
        if (s < threshold + 1)
            throw std::invalid_argument("generator: messy star bodies need size >= threshold+1");
    if (p.star_density <= 0.0 || p.star_density > 1.0)
        throw std::invalid_argument("generator: density must be in (0,1]");
    if (p.num_locked_pairs > 0)
        throw std::invalid_argument("generator: messy families have no locked pairs");
    if (p.steiner_vertices != 0 && p.steiner_vertices < 2 * threshold + 3)
        throw std::invalid_argument("generator: Steiner part needs >= 2*threshold+3 vertices");

    std::mt19937_64 rng(p.seed);
    MessyDecomposition truth;
    truth.threshold = threshold;

    int next = p.num_stars;
    std::vector<std::pair<int, int>> body_range;
    for (int s : p.star_sizes) {
        body_range.emplace_back(next, next + s);
        next += s;
    }
    int first_steiner = next;
    next += p.steiner_vertices;
    const int n = next;

    Hypergraph3 h(n);
    for (int i = 0; i < p.num_stars; ++i) {
        auto [lo, hi] = body_range[static_cast<std::size_t>(i)];
        auto pairs = detail::sample_star_body(hi - lo, p.star_density, threshold, rng, p.max_retries);
        for (auto [a, b] : pairs) h.add(Triple(i, lo + a, lo + b));
        truth.Y.push_back(i);
        std::vector<Vertex> body;
        for (int z = lo; z < hi; ++z) body.push_back(z);
        truth.star_bodies[i] = body;
        truth.Z.insert(truth.Z.end(), body.begin(), body.end());
    }

    truth.steiner = Hypergraph3(n);
    if (p.steiner_vertices > 0) {
        // Codegree-<=1 insertion with a swap move: when both pairs at the
        // deficient vertex are free but their joining pair is covered, the
        // covering triple is traded for the new one. Converges for any window
        // of at least 2*threshold+3 vertices.
        const int v = p.steiner_vertices;
        bool done = false;
        for (int attempt = 0; attempt < p.max_retries && !done; ++attempt) {
            std::vector<std::vector<int>> cover(static_cast<std::size_t>(v),
                                                std::vector<int>(static_cast<std::size_t>(v), -1));
            std::vector<int> deg(static_cast<std::size_t>(v), 0);
            auto set_cover = [&](int a, int b, int c, int da, int db, int dc) {
                cover[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = da >= 0 ? c : -1;
                cover[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = da >= 0 ? c : -1;
                cover[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = da >= 0 ? b : -1;
                cover[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] = da >= 0 ? b : -1;
                cover[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = da >= 0 ? a : -1;
                cover[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)] = da >= 0 ? a : -1;
                deg[static_cast<std::size_t>(a)] += da;
                deg[static_cast<std::size_t>(b)] += db;
                deg[static_cast<std::size_t>(c)] += dc;
            };
            const long long step_cap = 200LL * v * v;
            bool reached = false;
            for (long long step = 0; step < step_cap; ++step) {
                int u = static_cast<int>(std::min_element(deg.begin(), deg.end()) - deg.begin());
                if (deg[static_cast<std::size_t>(u)] >= threshold) {
                    reached = true;
                    break;
                }
                std::vector<int> free_w;
                for (int w = 0; w < v; ++w)
                    if (w != u && cover[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] == -1)
                        free_w.push_back(w);
                if (free_w.size() < 2) break;
                std::uniform_int_distribution<std::size_t> pick(0, free_w.size() - 1);
                int x = free_w[pick(rng)];
                int y = x;
                while (y == x) y = free_w[pick(rng)];
                int z = cover[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
                if (z != -1) set_cover(x, y, z, -1, -1, -1);
                set_cover(u, x, y, 1, 1, 1);
            }
            if (!reached) continue;
            for (int a = 0; a < v; ++a)
                for (int b = a + 1; b < v; ++b) {
                    int c = cover[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                    if (c > b) {
                        Triple t(first_steiner + a, first_steiner + b, first_steiner + c);
                        h.add(t);
                        truth.steiner.add(t);
                    }
                }
            done = true;
        }
        if (!done) throw std::runtime_error("generator: Steiner part retries exhausted");
        for (int u = 0; u < v; ++u) truth.X.push_back(first_steiner + u);
    }

    truth.core = h;
    return {std::move(h), std::move(truth)};
}

// ---------------------------------------------------------------------------
// Report serialization (stable, ascending ids)

namespace detail {

inline void write_id_list(std::ostream& os, const char* label, const std::vector<Vertex>& ids) {
    os << label << ':';
    for (Vertex v : ids) os << ' ' << v;
    os << '\n';
}

}  // namespace detail

inline void write_report(std::ostream& os, const LooseDecomposition& d) {
    os << "kind: loose\n";
    os << "threshold: " << d.threshold << '\n';
    os << "n: " << d.core.vertex_count() << '\n';
    os << "core_triples: " << d.core.triple_count() << '\n';
    detail::write_id_list(os, "X", d.X);
    os << "locked_pairs:";
    for (auto [a, b] : d.locked_pairs) os << " (" << a << ',' << b << ')';
    os << '\n';
    detail::write_id_list(os, "Y", d.Y);
    for (const auto& [y, body] : d.star_bodies)
        detail::write_id_list(os, ("A[" + std::to_string(y) + "]").c_str(), body);
    detail::write_id_list(os, "Z", d.Z);
    os << "stray_count: " << d.stray.size() << '\n';
}

inline void write_report(std::ostream& os, const MessyDecomposition& d) {
    os << "kind: messy\n";
    os << "threshold: " << d.threshold << '\n';
    os << "n: " << d.core.vertex_count() << '\n';
    os << "core_triples: " << d.core.triple_count() << '\n';
    detail::write_id_list(os, "X", d.X);
    detail::write_id_list(os, "Y", d.Y);
    for (const auto& [y, body] : d.star_bodies)
        detail::write_id_list(os, ("A[" + std::to_string(y) + "]").c_str(), body);
    detail::write_id_list(os, "Z", d.Z);
    os << "steiner_triples: " << d.steiner.triple_count() << '\n';
    os << "stray_count: " << d.stray.size() << '\n';
}

}  // namespace tripath
