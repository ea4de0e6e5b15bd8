#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace tripath {

// Simple undirected graph: vertex set 0..n-1, edge list kept sorted unique.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // each (u, v) with u < v

    Graph() = default;
    explicit Graph(int n_) : n(n_) {
        if (n_ < 0) throw std::invalid_argument("negative vertex count");
    }

    bool add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
        if (u > v) std::swap(u, v);
        auto e = std::make_pair(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it != edges.end() && *it == e) return false;
        edges.insert(it, e);
        return true;
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        for (auto [u, v] : edges) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        return adj;
    }
};

// Directed graph; an oriented graph additionally has no 2-cycles.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // ordered pairs, sorted unique

    Digraph() = default;
    explicit Digraph(int n_) : n(n_) {
        if (n_ < 0) throw std::invalid_argument("negative vertex count");
    }

    bool add_arc(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("arc endpoint out of range");
        auto a = std::make_pair(u, v);
        auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
        if (it != arcs.end() && *it == a) return false;
        arcs.insert(it, a);
        return true;
    }

    bool has_arc(int u, int v) const {
        return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(u, v));
    }

    int arc_count() const { return static_cast<int>(arcs.size()); }

    bool is_oriented() const {
        for (auto [u, v] : arcs)
            if (has_arc(v, u)) return false;
        return true;
    }

    std::vector<std::vector<int>> out_adjacency() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
        for (auto [u, v] : arcs) out[static_cast<std::size_t>(u)].push_back(v);
        return out;
    }

    std::vector<std::vector<int>> in_adjacency() const {
        std::vector<std::vector<int>> in(static_cast<std::size_t>(n));
        for (auto [u, v] : arcs) in[static_cast<std::size_t>(v)].push_back(u);
        return in;
    }
};

namespace detail {

// Maximum cardinality matching in a general graph via augmenting paths with
// blossom contraction. Standard O(V^3) formulation: BFS an alternating tree
// from each free vertex, contracting odd cycles to their base when found.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : n_(g.n), adj_(g.adjacency()), match_(static_cast<std::size_t>(g.n), -1),
          parent_(static_cast<std::size_t>(g.n), -1), base_(static_cast<std::size_t>(g.n)),
          used_(static_cast<std::size_t>(g.n), 0), blossom_(static_cast<std::size_t>(g.n), 0) {}

    int solve() {
        // Greedy initial matching shortens the augmentation phase.
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] == -1)
                for (int to : adj_[static_cast<std::size_t>(v)])
                    if (match_[static_cast<std::size_t>(to)] == -1) {
                        match_[static_cast<std::size_t>(v)] = to;
                        match_[static_cast<std::size_t>(to)] = v;
                        break;
                    }
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] == -1) {
                int u = find_augmenting_path(v);
                while (u != -1) {  // flip the path back to the root
                    int pv = parent_[static_cast<std::size_t>(u)];
                    int ppv = match_[static_cast<std::size_t>(pv)];
                    match_[static_cast<std::size_t>(u)] = pv;
                    match_[static_cast<std::size_t>(pv)] = u;
                    u = ppv;
                }
            }
        int size = 0;
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] > v) ++size;
        return size;
    }

private:
    int lowest_common_base(int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        for (;;) {
            a = base_[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = 1;
            if (match_[static_cast<std::size_t>(a)] == -1) break;
            a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base_[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            blossom_[static_cast<std::size_t>(
                base_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])])] = 1;
            parent_[static_cast<std::size_t>(v)] = child;
            child = match_[static_cast<std::size_t>(v)];
            v = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
        used_[static_cast<std::size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[static_cast<std::size_t>(v)]) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<std::size_t>(to)] != -1 &&
                     parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
                    // Odd cycle: contract the blossom to its base.
                    int cur_base = lowest_common_base(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                            base_[static_cast<std::size_t>(i)] = cur_base;
                            if (!used_[static_cast<std::size_t>(i)]) {
                                used_[static_cast<std::size_t>(i)] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    if (match_[static_cast<std::size_t>(to)] == -1) return to;
                    used_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] = 1;
                    q.push(match_[static_cast<std::size_t>(to)]);
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;
};

inline int greedy_maximal_matching(const Graph& g) {
    std::vector<char> used(static_cast<std::size_t>(g.n), 0);
    int size = 0;
    for (auto [u, v] : g.edges)
        if (!used[static_cast<std::size_t>(u)] && !used[static_cast<std::size_t>(v)]) {
            used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
            ++size;
        }
    return size;
}

}  // namespace detail

inline int max_matching_size(const Graph& g) { return detail::BlossomMatcher(g).solve(); }

// Exact decision nu(G) >= s. A greedy maximal matching of size >= s settles
// most calls; otherwise its vertex set is a cover of size <= 2(s-1) and the
// exact algorithm runs on what is then a small instance.
inline bool matching_at_least(const Graph& g, int s) {
    if (s <= 0) return true;
    if (detail::greedy_maximal_matching(g) >= s) return true;
    return max_matching_size(g) >= s;
}

// min(nu(G), cap)
inline int matching_size_bounded(const Graph& g, int cap) {
    if (detail::greedy_maximal_matching(g) >= cap) return cap;
    return std::min(max_matching_size(g), cap);
}

namespace detail {

inline bool cover_branch(const std::vector<std::pair<int, int>>& edges, std::size_t from,
                         int budget, std::vector<char>& in_cover, std::vector<int>& cover) {
    std::size_t i = from;
    while (i < edges.size() &&
           (in_cover[static_cast<std::size_t>(edges[i].first)] ||
            in_cover[static_cast<std::size_t>(edges[i].second)]))
        ++i;
    if (i == edges.size()) return true;
    if (budget == 0) return false;
    for (int pick : {edges[i].first, edges[i].second}) {
        in_cover[static_cast<std::size_t>(pick)] = 1;
        cover.push_back(pick);
        if (cover_branch(edges, i + 1, budget - 1, in_cover, cover)) return true;
        cover.pop_back();
        in_cover[static_cast<std::size_t>(pick)] = 0;
    }
    return false;
}

}  // namespace detail

// A vertex cover of size <= t if one exists. Branches on an uncovered edge,
// including either endpoint; exact, 2^t leaves.
inline std::optional<std::vector<int>> vertex_cover_at_most(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("vertex_cover_at_most: negative budget");
    std::vector<char> in_cover(static_cast<std::size_t>(g.n), 0);
    std::vector<int> cover;
    if (!detail::cover_branch(g.edges, 0, t, in_cover, cover)) return std::nullopt;
    std::sort(cover.begin(), cover.end());
    return cover;
}

// Smallest cover size in 0..cap with a witness, or nullopt if tau(G) > cap.
inline std::optional<std::pair<int, std::vector<int>>> cover_number_at_most(const Graph& g,
                                                                            int cap) {
    for (int t = 0; t <= cap; ++t)
        if (auto c = vertex_cover_at_most(g, t); c && static_cast<int>(c->size()) <= t)
            return std::make_pair(static_cast<int>(c->size()), *c);
    return std::nullopt;
}

// Maximal connected sets of non-isolated vertices, each ascending, ordered by
// smallest member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    auto adj = g.adjacency();
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < g.n; ++v) {
        if (seen[static_cast<std::size_t>(v)] || adj[static_cast<std::size_t>(v)].empty()) continue;
        std::vector<int> comp;
        std::vector<int> stack{v};
        seen[static_cast<std::size_t>(v)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : adj[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// First directed 3-cycle (x,y,z) with arcs (x,y),(y,z),(z,x), scanning arcs in
// lexicographic order and completing with the smallest z.
inline std::optional<std::tuple<int, int, int>> find_directed_triangle(const Digraph& d) {
    auto out = d.out_adjacency();
    for (auto& nbrs : out) std::sort(nbrs.begin(), nbrs.end());
    for (auto [x, y] : d.arcs)
        for (int z : out[static_cast<std::size_t>(y)])
            if (z != x && d.has_arc(z, x)) return std::make_tuple(x, y, z);
    return std::nullopt;
}

struct TriangleCensus {
    long long count = 0;  // saturates at cap
    bool saturated = false;
    std::vector<std::tuple<int, int, int>> sample;  // up to 100 witnesses
};

// Counts directed 3-cycles, each once via its minimum vertex.
inline TriangleCensus directed_triangle_census(const Digraph& d, long long cap) {
    TriangleCensus census;
    auto out = d.out_adjacency();
    for (auto& nbrs : out) std::sort(nbrs.begin(), nbrs.end());
    for (int x = 0; x < d.n && !census.saturated; ++x)
        for (int y : out[static_cast<std::size_t>(x)]) {
            if (y <= x) continue;
            for (int z : out[static_cast<std::size_t>(y)]) {
                if (z <= x || z == y || !d.has_arc(z, x)) continue;
                if (census.sample.size() < 100) census.sample.emplace_back(x, y, z);
                if (++census.count >= cap) {
                    census.saturated = true;
                    break;
                }
            }
            if (census.saturated) break;
        }
    return census;
}

inline int min_in_degree(const Digraph& d) {
    if (d.n == 0) return 0;
    std::vector<int> indeg(static_cast<std::size_t>(d.n), 0);
    for (auto [u, v] : d.arcs) ++indeg[static_cast<std::size_t>(v)];
    return *std::min_element(indeg.begin(), indeg.end());
}

}  // namespace tripath
