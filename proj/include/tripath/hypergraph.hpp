#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tripath/graph.hpp"

namespace tripath {

using Vertex = int;

inline std::int64_t binom2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline std::int64_t binom3(std::int64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// An edge of a 3-uniform hypergraph, stored sorted ascending.
struct Triple {
    std::array<Vertex, 3> v;

    Triple(Vertex a, Vertex b, Vertex c) : v{a, b, c} {
        std::sort(v.begin(), v.end());
        if (v[0] == v[1] || v[1] == v[2])
            throw std::invalid_argument("triple has a repeated vertex");
    }

    Vertex operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }

    // Vertices of this triple not equal to x (x must be a member).
    std::pair<Vertex, Vertex> others(Vertex x) const {
        if (v[0] == x) return {v[1], v[2]};
        if (v[1] == x) return {v[0], v[2]};
        return {v[0], v[1]};
    }

    auto operator<=>(const Triple&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Triple& t) {
    return os << t[0] << ' ' << t[1] << ' ' << t[2];
}

// 3-uniform hypergraph on vertices 0..n-1, identified with its edge set.
// Triples are kept sorted and unique; isolated vertices are allowed.
class Hypergraph3 {
public:
    Hypergraph3() = default;
    explicit Hypergraph3(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }
    Hypergraph3(int n, std::vector<Triple> triples) : n_(n), triples_(std::move(triples)) {
        std::sort(triples_.begin(), triples_.end());
        for (std::size_t i = 0; i + 1 < triples_.size(); ++i)
            if (triples_[i] == triples_[i + 1])
                throw std::invalid_argument("duplicate triple");
        for (const Triple& t : triples_) check_range(t);
    }

    int vertex_count() const { return n_; }
    int triple_count() const { return static_cast<int>(triples_.size()); }
    bool empty() const { return triples_.empty(); }
    const std::vector<Triple>& triples() const { return triples_; }

    bool contains(const Triple& t) const {
        return std::binary_search(triples_.begin(), triples_.end(), t);
    }

    // Insert keeping sorted order; returns false if already present.
    bool add(const Triple& t) {
        check_range(t);
        auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
        if (it != triples_.end() && *it == t) return false;
        triples_.insert(it, t);
        return true;
    }

    bool remove(const Triple& t) {
        auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
        if (it == triples_.end() || *it != t) return false;
        triples_.erase(it);
        return true;
    }

    int degree(Vertex v) const {
        int d = 0;
        for (const Triple& t : triples_)
            if (t.contains(v)) ++d;
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(static_cast<std::size_t>(n_), 0);
        for (const Triple& t : triples_)
            for (int i = 0; i < 3; ++i) ++d[static_cast<std::size_t>(t[i])];
        return d;
    }

    // vertex -> indices into triples()
    std::vector<std::vector<int>> incidence() const {
        std::vector<std::vector<int>> inc(static_cast<std::size_t>(n_));
        for (int i = 0; i < triple_count(); ++i)
            for (int j = 0; j < 3; ++j)
                inc[static_cast<std::size_t>(triples_[static_cast<std::size_t>(i)][j])].push_back(i);
        return inc;
    }

private:
    void check_range(const Triple& t) const {
        if (t[0] < 0 || t[2] >= n_)
            throw std::invalid_argument("triple vertex out of range");
    }

    int n_ = 0;
    std::vector<Triple> triples_;
};

// The trace (link) of a vertex: the graph of pairs completing v to an edge.
struct TraceGraph {
    Vertex center = -1;
    Graph graph;  // on the host's vertex ids; center is isolated in it
};

inline TraceGraph trace_vertex(const Hypergraph3& h, Vertex v) {
    if (v < 0 || v >= h.vertex_count()) throw std::out_of_range("trace_vertex: vertex out of range");
    TraceGraph tr;
    tr.center = v;
    tr.graph = Graph(h.vertex_count());
    for (const Triple& t : h.triples())
        if (t.contains(v)) {
            auto [a, b] = t.others(v);
            tr.graph.add_edge(a, b);
        }
    return tr;
}

inline int codegree(const Hypergraph3& h, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("codegree: vertices must differ");
    if (u < 0 || v < 0 || u >= h.vertex_count() || v >= h.vertex_count())
        throw std::out_of_range("codegree: vertex out of range");
    int c = 0;
    for (const Triple& t : h.triples())
        if (t.contains(u) && t.contains(v)) ++c;
    return c;
}

inline Hypergraph3 induced(const Hypergraph3& h, const std::vector<Vertex>& universe) {
    std::vector<char> in(static_cast<std::size_t>(h.vertex_count()), 0);
    for (Vertex v : universe) {
        if (v < 0 || v >= h.vertex_count()) throw std::out_of_range("induced: vertex out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Triple> kept;
    for (const Triple& t : h.triples())
        if (in[static_cast<std::size_t>(t[0])] && in[static_cast<std::size_t>(t[1])] &&
            in[static_cast<std::size_t>(t[2])])
            kept.push_back(t);
    return Hypergraph3(h.vertex_count(), std::move(kept));
}

struct CoreResult {
    Hypergraph3 core;
    std::vector<Triple> stray;        // triples lost to removals, sorted
    std::vector<Vertex> removal_order;
};

// m-core by iterative removal of positive-degree vertices with degree < m.
// The vertex removed at each step is the eligible one minimizing priority[v]
// (ties impossible: priorities are a permutation). The resulting core is
// independent of the priority; removal_order and the default lowest-id rule
// make runs reproducible.
inline CoreResult m_core_with_priority(const Hypergraph3& h, int m,
                                       const std::vector<int>& priority) {
    if (m < 1) throw std::invalid_argument("m_core: m must be >= 1");
    const int n = h.vertex_count();
    if (static_cast<int>(priority.size()) != n)
        throw std::invalid_argument("m_core: priority size mismatch");

    std::vector<char> alive_triple(h.triples().size(), 1);
    std::vector<int> deg = h.degrees();
    auto inc = h.incidence();

    CoreResult res;
    std::vector<Triple> stray;
    for (;;) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] > 0 && deg[static_cast<std::size_t>(v)] < m)
                if (pick == -1 || priority[static_cast<std::size_t>(v)] <
                                      priority[static_cast<std::size_t>(pick)])
                    pick = v;
        if (pick == -1) break;
        res.removal_order.push_back(pick);
        for (int ti : inc[static_cast<std::size_t>(pick)]) {
            if (!alive_triple[static_cast<std::size_t>(ti)]) continue;
            alive_triple[static_cast<std::size_t>(ti)] = 0;
            const Triple& t = h.triples()[static_cast<std::size_t>(ti)];
            stray.push_back(t);
            for (int j = 0; j < 3; ++j) --deg[static_cast<std::size_t>(t[j])];
        }
    }

    std::vector<Triple> kept;
    for (std::size_t i = 0; i < h.triples().size(); ++i)
        if (alive_triple[i]) kept.push_back(h.triples()[i]);
    res.core = Hypergraph3(n, std::move(kept));
    std::sort(stray.begin(), stray.end());
    res.stray = std::move(stray);
    return res;
}

inline CoreResult m_core(const Hypergraph3& h, int m) {
    std::vector<int> identity(static_cast<std::size_t>(h.vertex_count()));
    for (int v = 0; v < h.vertex_count(); ++v) identity[static_cast<std::size_t>(v)] = v;
    return m_core_with_priority(h, m, identity);
}

// ---------------------------------------------------------------------------
// Text format: line 1 "n m", then m lines "a b c" with 0 <= a < b < c < n.

inline void write_hypergraph(std::ostream& os, const Hypergraph3& h) {
    os << h.vertex_count() << ' ' << h.triple_count() << '\n';
    for (const Triple& t : h.triples()) os << t << '\n';
}

inline std::string to_string(const Hypergraph3& h) {
    std::ostringstream os;
    write_hypergraph(os, h);
    return os.str();
}

inline Hypergraph3 read_hypergraph(std::istream& is) {
    auto fail = [](int line, const std::string& msg) {
        throw std::runtime_error("hypergraph format error at line " + std::to_string(line) + ": " + msg);
    };
    std::string line;
    if (!std::getline(is, line)) fail(1, "missing header");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) fail(1, "expected \"n m\"");
    if (n > 2000000) fail(1, "header out of supported range");
    if (m > binom3(n)) fail(1, "more triples than the vertex count admits");

    Hypergraph3 h(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        const int lineno = static_cast<int>(i) + 2;
        if (!std::getline(is, line)) fail(lineno, "unexpected end of file");
        std::istringstream row(line);
        long long a, b, c;
        if (!(row >> a >> b >> c)) fail(lineno, "expected \"a b c\"");
        std::string rest;
        if (row >> rest) fail(lineno, "trailing tokens");
        if (!(0 <= a && a < b && b < c && c < n)) fail(lineno, "requires 0 <= a < b < c < n");
        if (!h.add(Triple(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c))))
            fail(lineno, "duplicate triple");
    }
    return h;
}

}  // namespace tripath
