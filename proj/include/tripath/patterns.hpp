#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tripath/hypergraph.hpp"

namespace tripath {

enum class PatternKind { LoosePath, MessyPath, TightPath, Kite, LooseCycle, F5, Giraffe, Flower };

// A small fixed containment target on its own vertex set 0..size-1.
struct PathPattern {
    PatternKind kind;
    int flower_petals = 0;  // only for Flower
    Hypergraph3 triples;
    std::string name;
};

// Canonical patterns:
//   loose path   {012, 234, 456}      7 vertices
//   messy path   {012, 123, 345}      6 vertices
//   tight path   {012, 123, 234}      5 vertices
//   kite         {012, 013}           4 vertices
//   loose cycle  {012, 234, 045}      6 vertices
//   f5           {012, 013, 234}      5 vertices
//   giraffe      {012, 013, 145}      6 vertices
//   flower(a)    {i, a, a+1 : i < a}  a+2 vertices, center pair {a, a+1}
inline PathPattern pattern(PatternKind kind, int flower_petals = 0) {
    auto make = [](PatternKind k, int n, std::vector<Triple> ts, std::string name, int petals = 0) {
        return PathPattern{k, petals, Hypergraph3(n, std::move(ts)), std::move(name)};
    };
    switch (kind) {
        case PatternKind::LoosePath:
            return make(kind, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}, "loose");
        case PatternKind::MessyPath:
            return make(kind, 6, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}}, "messy");
        case PatternKind::TightPath:
            return make(kind, 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}, "tight");
        case PatternKind::Kite:
            return make(kind, 4, {{0, 1, 2}, {0, 1, 3}}, "kite");
        case PatternKind::LooseCycle:
            return make(kind, 6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}, "cycle");
        case PatternKind::F5:
            return make(kind, 5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}, "f5");
        case PatternKind::Giraffe:
            return make(kind, 6, {{0, 1, 2}, {0, 1, 3}, {1, 4, 5}}, "giraffe");
        case PatternKind::Flower: {
            if (flower_petals < 1) throw std::invalid_argument("flower needs at least one petal");
            std::vector<Triple> ts;
            for (int i = 0; i < flower_petals; ++i)
                ts.emplace_back(i, flower_petals, flower_petals + 1);
            return make(kind, flower_petals + 2, std::move(ts),
                        "flower:" + std::to_string(flower_petals), flower_petals);
        }
    }
    throw std::logic_error("unknown pattern kind");
}

// CLI spelling: loose|messy|tight|kite|cycle|f5|giraffe|flower:<a>
inline PathPattern pattern_from_name(const std::string& name) {
    if (name == "loose") return pattern(PatternKind::LoosePath);
    if (name == "messy") return pattern(PatternKind::MessyPath);
    if (name == "tight") return pattern(PatternKind::TightPath);
    if (name == "kite") return pattern(PatternKind::Kite);
    if (name == "cycle") return pattern(PatternKind::LooseCycle);
    if (name == "f5") return pattern(PatternKind::F5);
    if (name == "giraffe") return pattern(PatternKind::Giraffe);
    if (name.rfind("flower:", 0) == 0) {
        int a = std::stoi(name.substr(7));
        return pattern(PatternKind::Flower, a);
    }
    throw std::invalid_argument("unknown pattern name: " + name);
}

inline std::vector<PathPattern> all_fixed_patterns() {
    return {pattern(PatternKind::LoosePath),  pattern(PatternKind::MessyPath),
            pattern(PatternKind::TightPath),  pattern(PatternKind::Kite),
            pattern(PatternKind::LooseCycle), pattern(PatternKind::F5),
            pattern(PatternKind::Giraffe)};
}

// Injective map pattern vertex -> host vertex whose image of every pattern
// triple is a host triple.
struct Embedding {
    std::vector<Vertex> map;

    Triple image(const Triple& t) const {
        return Triple(map[static_cast<std::size_t>(t[0])], map[static_cast<std::size_t>(t[1])],
                      map[static_cast<std::size_t>(t[2])]);
    }
};

inline bool embedding_is_valid(const Hypergraph3& host, const PathPattern& p, const Embedding& e) {
    if (e.map.size() != static_cast<std::size_t>(p.triples.vertex_count())) return false;
    std::vector<char> used(static_cast<std::size_t>(host.vertex_count()), 0);
    for (Vertex v : e.map) {
        if (v < 0 || v >= host.vertex_count() || used[static_cast<std::size_t>(v)]) return false;
        used[static_cast<std::size_t>(v)] = 1;
    }
    for (const Triple& t : p.triples.triples())
        if (!host.contains(e.image(t))) return false;
    return true;
}

namespace detail {

// Backtracking over host triples assigned to pattern triples. Pattern triples
// are visited in an order that keeps each new triple attached to the mapped
// part when possible, and candidates for an attached triple come from the
// incidence list of one already-mapped vertex. The first embedding in this
// deterministic order is returned.
class PatternMatcher {
public:
    PatternMatcher(const Hypergraph3& host, const PathPattern& p)
        : host_(host), pat_(p), incidence_(host.incidence()),
          vmap_(static_cast<std::size_t>(p.triples.vertex_count()), -1),
          host_used_(static_cast<std::size_t>(host.vertex_count()), 0) {
        const auto& pts = pat_.triples.triples();
        std::vector<char> placed(pts.size(), 0);
        std::vector<char> vertex_seen(static_cast<std::size_t>(pat_.triples.vertex_count()), 0);
        for (std::size_t step = 0; step < pts.size(); ++step) {
            int best = -1, best_shared = -1;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (placed[i]) continue;
                int shared = 0;
                for (int j = 0; j < 3; ++j)
                    if (vertex_seen[static_cast<std::size_t>(pts[i][j])]) ++shared;
                if (shared > best_shared) {
                    best_shared = shared;
                    best = static_cast<int>(i);
                }
            }
            placed[static_cast<std::size_t>(best)] = 1;
            for (int j = 0; j < 3; ++j)
                vertex_seen[static_cast<std::size_t>(pts[static_cast<std::size_t>(best)][j])] = 1;
            order_.push_back(best);
        }
    }

    std::optional<Embedding> find() {
        if (pat_.triples.vertex_count() > host_.vertex_count()) return std::nullopt;
        if (pat_.triples.triple_count() > host_.triple_count()) return std::nullopt;
        if (search(0)) {
            Embedding e{vmap_};
            if (!embedding_is_valid(host_, pat_, e))
                throw std::logic_error("pattern matcher produced an invalid embedding");
            return e;
        }
        return std::nullopt;
    }

private:
    bool search(std::size_t step) {
        if (step == order_.size()) return true;
        const Triple& pt = pat_.triples.triples()[static_cast<std::size_t>(order_[step])];

        int anchor = -1;  // a pattern vertex of pt that is already mapped
        for (int j = 0; j < 3; ++j)
            if (vmap_[static_cast<std::size_t>(pt[j])] != -1) {
                anchor = pt[j];
                break;
            }

        if (anchor != -1) {
            int host_anchor = vmap_[static_cast<std::size_t>(anchor)];
            for (int ti : incidence_[static_cast<std::size_t>(host_anchor)])
                if (try_host_triple(pt, host_.triples()[static_cast<std::size_t>(ti)], step))
                    return true;
        } else {
            for (const Triple& ht : host_.triples())
                if (try_host_triple(pt, ht, step)) return true;
        }
        return false;
    }

    bool try_host_triple(const Triple& pt, const Triple& ht, std::size_t step) {
        // Mapped pattern vertices of pt must land inside ht.
        std::array<int, 3> free_pat{};
        int nfree = 0;
        std::array<char, 3> host_taken{0, 0, 0};
        for (int j = 0; j < 3; ++j) {
            int img = vmap_[static_cast<std::size_t>(pt[j])];
            if (img == -1) {
                free_pat[static_cast<std::size_t>(nfree++)] = pt[j];
            } else {
                bool inside = false;
                for (int l = 0; l < 3; ++l)
                    if (ht[l] == img && !host_taken[static_cast<std::size_t>(l)]) {
                        host_taken[static_cast<std::size_t>(l)] = 1;
                        inside = true;
                        break;
                    }
                if (!inside) return false;
            }
        }
        std::array<int, 3> free_host{};
        int nfh = 0;
        for (int l = 0; l < 3; ++l)
            if (!host_taken[static_cast<std::size_t>(l)]) free_host[static_cast<std::size_t>(nfh++)] = ht[l];
        if (nfh != nfree) return false;

        // Try bijections unmapped-pattern-vertices -> free host slots in
        // lexicographic order.
        std::array<int, 3> perm{0, 1, 2};
        do {
            bool ok = true;
            int assigned = 0;
            for (int j = 0; j < nfree && ok; ++j) {
                int hv = free_host[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
                if (host_used_[static_cast<std::size_t>(hv)]) {
                    ok = false;
                    break;
                }
                vmap_[static_cast<std::size_t>(free_pat[static_cast<std::size_t>(j)])] = hv;
                host_used_[static_cast<std::size_t>(hv)] = 1;
                ++assigned;
            }
            if (ok && search(step + 1)) return true;
            for (int j = assigned - 1; j >= 0; --j) {
                int hv = vmap_[static_cast<std::size_t>(free_pat[static_cast<std::size_t>(j)])];
                host_used_[static_cast<std::size_t>(hv)] = 0;
                vmap_[static_cast<std::size_t>(free_pat[static_cast<std::size_t>(j)])] = -1;
            }
        } while (std::next_permutation(perm.begin(), perm.begin() + nfree));
        return false;
    }

    const Hypergraph3& host_;
    const PathPattern& pat_;
    std::vector<std::vector<int>> incidence_;
    std::vector<int> order_;
    std::vector<int> vmap_;
    std::vector<char> host_used_;
};

}  // namespace detail

namespace detail {

inline bool has_disjoint_triples(const Hypergraph3& h) {
    const auto& ts = h.triples();
    if (!ts.empty()) {
        // A star is intersecting; catches the common case in O(m).
        int max_deg = 0;
        for (int d : h.degrees()) max_deg = std::max(max_deg, d);
        if (max_deg == h.triple_count()) return false;
    }
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            bool meet = false;
            for (int a = 0; a < 3 && !meet; ++a) meet = ts[j].contains(ts[i][a]);
            if (!meet) return true;
        }
    return false;
}

}  // namespace detail

inline std::optional<Embedding> contains_pattern(const Hypergraph3& h, const PathPattern& p) {
    // A pattern with two disjoint triples cannot embed into an intersecting
    // host; this settles star-shaped hosts without a search.
    if (detail::has_disjoint_triples(p.triples) && !detail::has_disjoint_triples(h))
        return std::nullopt;
    return detail::PatternMatcher(h, p).find();
}

// Witness for the loose-path forbidden configuration at v: disjoint trace
// edges e, e2 and a triple avoiding v that meets e in exactly one vertex and
// misses e2 (or vice versa).
struct LooseForbiddenWitness {
    Vertex v;
    std::pair<Vertex, Vertex> e, e2;
    Triple triple;
};

inline std::optional<LooseForbiddenWitness> loose_forbidden_config(const Hypergraph3& h, Vertex v) {
    TraceGraph tr = trace_vertex(h, v);
    const auto& edges = tr.graph.edges;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (i == j) continue;
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            for (const Triple& t : h.triples()) {
                if (t.contains(v)) continue;
                int hits_e = (t.contains(a) ? 1 : 0) + (t.contains(b) ? 1 : 0);
                int hits_e2 = (t.contains(c) ? 1 : 0) + (t.contains(d) ? 1 : 0);
                if (hits_e == 1 && hits_e2 == 0)
                    return LooseForbiddenWitness{v, edges[i], edges[j], t};
            }
        }
    return std::nullopt;
}

// Witness for either messy-path forbidden configuration at v.
struct MessyForbiddenWitness {
    enum class Form { DisjointEdges, TwoEdgePath } form;
    Vertex v;
    std::pair<Vertex, Vertex> e, e2;  // trace edges; for TwoEdgePath they share a vertex
    Triple triple;
};

inline std::optional<MessyForbiddenWitness> messy_forbidden_config(const Hypergraph3& h, Vertex v) {
    TraceGraph tr = trace_vertex(h, v);
    const auto& edges = tr.graph.edges;
    // Form 1: disjoint trace edges ab, cd with a triple abx, x not in {v,c,d}.
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (i == j) continue;
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            for (const Triple& t : h.triples()) {
                if (!t.contains(a) || !t.contains(b)) continue;
                Vertex x = t[0] + t[1] + t[2] - a - b;
                if (x != v && x != c && x != d)
                    return MessyForbiddenWitness{MessyForbiddenWitness::Form::DisjointEdges, v,
                                                 edges[i], edges[j], t};
            }
        }
    // Form 2: trace path ab, bc with a triple axy, x,y not in {v,b,c}.
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (i == j) continue;
            for (auto [a, b] : {std::pair(edges[i].first, edges[i].second),
                                std::pair(edges[i].second, edges[i].first)}) {
                Vertex c = -1;
                if (edges[j].first == b && edges[j].second != a) c = edges[j].second;
                if (edges[j].second == b && edges[j].first != a) c = edges[j].first;
                if (c == -1) continue;
                for (const Triple& t : h.triples()) {
                    if (!t.contains(a) || t.contains(v) || t.contains(b) || t.contains(c)) continue;
                    return MessyForbiddenWitness{MessyForbiddenWitness::Form::TwoEdgePath, v,
                                                 {a, b}, {b, c}, t};
                }
            }
        }
    return std::nullopt;
}

}  // namespace tripath
