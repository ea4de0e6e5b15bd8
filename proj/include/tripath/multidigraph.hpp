#pragma once

#include <cstdint>
#include <future>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tripath/coloring.hpp"
#include "tripath/graph.hpp"
#include "tripath/hypergraph.hpp"
#include "tripath/structure.hpp"

namespace tripath {

struct Arc {
    int from, to, color;
    auto operator<=>(const Arc&) const = default;
};

// The colored multidigraph of a path-free coloring: (u,v,c) when u lies in
// the body of a star centered at v in color c, plus both directions for each
// locked pair (loose kind). Holds the per-color decompositions and the
// coloring it was built from.
struct ColoredMultidigraph {
    int n = 0, k = 1;
    PathKind kind = PathKind::Loose;
    int threshold = kLooseCoreThreshold;
    Coloring source;
    std::vector<Arc> arcs;  // sorted
    std::vector<LooseDecomposition> loose;  // per color when kind == Loose
    std::vector<MessyDecomposition> messy;  // per color when kind == Messy

    const std::vector<Triple>& stray_of(int c) const {
        return kind == PathKind::Loose ? loose[static_cast<std::size_t>(c)].stray
                                       : messy[static_cast<std::size_t>(c)].stray;
    }

    const Hypergraph3& core_of(int c) const {
        return kind == PathKind::Loose ? loose[static_cast<std::size_t>(c)].core
                                       : messy[static_cast<std::size_t>(c)].core;
    }

    long long total_stray() const {
        long long s = 0;
        for (int c = 0; c < k; ++c) s += static_cast<long long>(stray_of(c).size());
        return s;
    }
};

namespace detail {

inline void append_arcs_for_color(std::vector<Arc>& arcs, int c, const LooseDecomposition& d) {
    for (const auto& [y, body] : d.star_bodies)
        for (Vertex u : body) arcs.push_back({u, y, c});
    for (auto [a, b] : d.locked_pairs) {
        arcs.push_back({a, b, c});
        arcs.push_back({b, a, c});
    }
}

inline void append_arcs_for_color(std::vector<Arc>& arcs, int c, const MessyDecomposition& d) {
    for (const auto& [y, body] : d.star_bodies)
        for (Vertex u : body) arcs.push_back({u, y, c});
}

}  // namespace detail

// Decomposes every color class (in parallel when jobs > 1; the merge is in
// color order either way) and assembles the arc set. A class that fails its
// characterization aborts the build with the offending color attached.
inline ColoredMultidigraph build_multidigraph(const Coloring& col, PathKind kind, int threshold = -1,
                                              int jobs = 1) {
    ColoredMultidigraph m;
    m.n = col.vertex_count();
    m.k = col.color_count();
    m.kind = kind;
    m.threshold =
        threshold > 0 ? threshold
                      : (kind == PathKind::Loose ? kLooseCoreThreshold : kMessyCoreThreshold);
    m.source = col;

    const int k = m.k;
    std::vector<std::optional<LooseDecomposition>> loose(static_cast<std::size_t>(k));
    std::vector<std::optional<MessyDecomposition>> messy(static_cast<std::size_t>(k));
    std::vector<std::optional<StructureViolation>> failures(static_cast<std::size_t>(k));

    auto run_color = [&](int c) {
        try {
            Hypergraph3 cls = color_class(col, c);
            if (kind == PathKind::Loose)
                loose[static_cast<std::size_t>(c)] = decompose_loose(cls, m.threshold);
            else
                messy[static_cast<std::size_t>(c)] = decompose_messy(cls, m.threshold);
        } catch (const StructureViolation& e) {
            failures[static_cast<std::size_t>(c)] = e.with_color(c);
        }
    };

    if (jobs <= 1) {
        for (int c = 0; c < k; ++c) run_color(c);
    } else {
        std::vector<std::future<void>> workers;
        for (int w = 0; w < jobs; ++w)
            workers.push_back(std::async(std::launch::async, [&, w] {
                for (int c = w; c < k; c += jobs) run_color(c);
            }));
        for (auto& f : workers) f.get();
    }

    for (int c = 0; c < k; ++c)
        if (failures[static_cast<std::size_t>(c)]) throw *failures[static_cast<std::size_t>(c)];

    for (int c = 0; c < k; ++c) {
        if (kind == PathKind::Loose) {
            detail::append_arcs_for_color(m.arcs, c, *loose[static_cast<std::size_t>(c)]);
            m.loose.push_back(std::move(*loose[static_cast<std::size_t>(c)]));
        } else {
            detail::append_arcs_for_color(m.arcs, c, *messy[static_cast<std::size_t>(c)]);
            m.messy.push_back(std::move(*messy[static_cast<std::size_t>(c)]));
        }
    }
    std::sort(m.arcs.begin(), m.arcs.end());

    // A vertex has at most one out-arc per color: one star body or one locked
    // pair can hold it.
    for (std::size_t i = 0; i + 1 < m.arcs.size(); ++i)
        if (m.arcs[i].from == m.arcs[i + 1].from && m.arcs[i].color == m.arcs[i + 1].color)
            throw StructureViolation("vertex with two out-arcs in one color", m.arcs[i].from,
                                     std::nullopt, m.arcs[i].color);
    return m;
}

// ---------------------------------------------------------------------------
// Pair taxonomy

enum class PairTag : std::uint8_t { Uncovered, Solo, Parallel, TwoCycle };

inline std::int64_t pair_rank(int a, int b) {  // a < b
    return binom2(b) + a;
}

struct PairClassification {
    int n = 0;
    std::vector<PairTag> tag;        // by pair_rank
    std::vector<std::int8_t> dir;    // +1: low->high, -1: high->low, 0: none/both

    PairTag tag_of(int u, int v) const {
        if (u > v) std::swap(u, v);
        return tag[static_cast<std::size_t>(pair_rank(u, v))];
    }
};

inline PairClassification classify_pairs(const ColoredMultidigraph& m) {
    PairClassification pc;
    pc.n = m.n;
    std::size_t pairs = static_cast<std::size_t>(binom2(m.n));
    std::vector<int> up(pairs, 0), down(pairs, 0);  // arc counts low->high / high->low
    for (const Arc& a : m.arcs) {
        int lo = std::min(a.from, a.to), hi = std::max(a.from, a.to);
        auto r = static_cast<std::size_t>(pair_rank(lo, hi));
        (a.from == lo ? up[r] : down[r])++;
    }
    pc.tag.assign(pairs, PairTag::Uncovered);
    pc.dir.assign(pairs, 0);
    for (std::size_t r = 0; r < pairs; ++r) {
        if (up[r] > 0 && down[r] > 0) {
            pc.tag[r] = PairTag::TwoCycle;
        } else if (up[r] + down[r] == 1) {
            pc.tag[r] = PairTag::Solo;
            pc.dir[r] = up[r] ? 1 : -1;
        } else if (up[r] + down[r] >= 2) {
            pc.tag[r] = PairTag::Parallel;
            pc.dir[r] = up[r] ? 1 : -1;
        }
    }
    return pc;
}

// Oriented graph of the one-way pairs: (v,u) when (v,u) is in M and (u,v) is
// not. Two-cycle pairs contribute nothing; never has 2-cycles.
inline Digraph oriented_reduct(const ColoredMultidigraph& m) {
    PairClassification pc = classify_pairs(m);
    Digraph d(m.n);
    for (int b = 1; b < m.n; ++b)
        for (int a = 0; a < b; ++a) {
            auto r = static_cast<std::size_t>(pair_rank(a, b));
            if (pc.tag[r] == PairTag::Solo || pc.tag[r] == PairTag::Parallel) {
                if (pc.dir[r] > 0)
                    d.add_arc(a, b);
                else
                    d.add_arc(b, a);
            }
        }
    return d;
}

// ---------------------------------------------------------------------------
// Statistics

struct Stats {
    int n = 0, k = 1;
    std::vector<int> m_in, m_out, s, t, p_in, p_out, q_in, q_out, d_in, d_out, xi, uncovered_at;
    long long arc_count = 0;
    long long S = 0, T = 0, P = 0;
    long long solo_pairs = 0, parallel_pairs = 0, twocycle_pairs = 0, uncovered_pairs = 0;
    long long total_stray = 0;
    double t_bar = 0.0, p_hat = 0.0;
};

// Distinct third vertices completing {u,v} to a stray triple of some color.
inline int xi_pair(const ColoredMultidigraph& m, int u, int v) {
    std::vector<char> seen(static_cast<std::size_t>(m.n), 0);
    int count = 0;
    for (int c = 0; c < m.k; ++c)
        for (const Triple& t : m.stray_of(c))
            if (t.contains(u) && t.contains(v)) {
                Vertex z = t[0] + t[1] + t[2] - u - v;
                if (!seen[static_cast<std::size_t>(z)]) {
                    seen[static_cast<std::size_t>(z)] = 1;
                    ++count;
                }
            }
    return count;
}

inline Stats compute_stats(const ColoredMultidigraph& m, const PairClassification& pc) {
    Stats st;
    st.n = m.n;
    st.k = m.k;
    auto zeros = [&] { return std::vector<int>(static_cast<std::size_t>(m.n), 0); };
    st.m_in = zeros();
    st.m_out = zeros();
    st.s = zeros();
    st.t = zeros();
    st.p_in = zeros();
    st.p_out = zeros();
    st.q_in = zeros();
    st.q_out = zeros();
    st.d_in = zeros();
    st.d_out = zeros();
    st.xi = zeros();
    st.uncovered_at = zeros();

    st.arc_count = static_cast<long long>(m.arcs.size());
    for (const Arc& a : m.arcs) {
        ++st.m_out[static_cast<std::size_t>(a.from)];
        ++st.m_in[static_cast<std::size_t>(a.to)];
    }

    // s(v): colors whose Steiner part touches v (messy kind only).
    if (m.kind == PathKind::Messy) {
        std::vector<char> touched(static_cast<std::size_t>(m.n));
        for (int c = 0; c < m.k; ++c) {
            std::fill(touched.begin(), touched.end(), 0);
            for (const Triple& t : m.messy[static_cast<std::size_t>(c)].steiner.triples())
                for (int i = 0; i < 3; ++i) touched[static_cast<std::size_t>(t[i])] = 1;
            for (int v = 0; v < m.n; ++v)
                if (touched[static_cast<std::size_t>(v)]) ++st.s[static_cast<std::size_t>(v)];
        }
    }
    for (int v = 0; v < m.n; ++v) st.S += st.s[static_cast<std::size_t>(v)];

    for (int b = 1; b < m.n; ++b)
        for (int a = 0; a < b; ++a) {
            auto r = static_cast<std::size_t>(pair_rank(a, b));
            switch (pc.tag[r]) {
                case PairTag::Uncovered:
                    ++st.uncovered_pairs;
                    ++st.uncovered_at[static_cast<std::size_t>(a)];
                    ++st.uncovered_at[static_cast<std::size_t>(b)];
                    break;
                case PairTag::TwoCycle:
                    ++st.twocycle_pairs;
                    ++st.t[static_cast<std::size_t>(a)];
                    ++st.t[static_cast<std::size_t>(b)];
                    break;
                case PairTag::Solo: {
                    ++st.solo_pairs;
                    int from = pc.dir[r] > 0 ? a : b, to = pc.dir[r] > 0 ? b : a;
                    ++st.q_out[static_cast<std::size_t>(from)];
                    ++st.q_in[static_cast<std::size_t>(to)];
                    ++st.d_out[static_cast<std::size_t>(from)];
                    ++st.d_in[static_cast<std::size_t>(to)];
                    break;
                }
                case PairTag::Parallel: {
                    ++st.parallel_pairs;
                    int from = pc.dir[r] > 0 ? a : b, to = pc.dir[r] > 0 ? b : a;
                    ++st.p_out[static_cast<std::size_t>(from)];
                    ++st.p_in[static_cast<std::size_t>(to)];
                    ++st.d_out[static_cast<std::size_t>(from)];
                    ++st.d_in[static_cast<std::size_t>(to)];
                    break;
                }
            }
        }
    st.T = st.twocycle_pairs;
    st.P = st.parallel_pairs;

    for (int c = 0; c < m.k; ++c)
        for (const Triple& t : m.stray_of(c))
            for (int i = 0; i < 3; ++i) ++st.xi[static_cast<std::size_t>(t[i])];
    st.total_stray = m.total_stray();

    st.t_bar = m.n > 0 ? 2.0 * static_cast<double>(st.T) / m.n : 0.0;
    st.p_hat = m.n > m.k ? static_cast<double>(st.P) / (m.n - m.k) : 0.0;
    return st;
}

// ---------------------------------------------------------------------------
// Identity audits

struct AuditCheck {
    std::string name;
    bool asserted;  // reported-only lines carry the values but are never failures
    bool holds;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditCheck> checks;

    bool all_hold() const {
        for (const auto& c : checks)
            if (c.asserted && !c.holds) return false;
        return true;
    }

    const AuditCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

inline AuditReport audit_identities(const ColoredMultidigraph& m, const PairClassification& pc,
                                    const Stats& st) {
    AuditReport rep;
    auto add = [&](std::string name, bool asserted, bool holds, std::string detail) {
        rep.checks.push_back({std::move(name), asserted, holds, std::move(detail)});
    };
    auto num = [](auto v) { return std::to_string(v); };
    const long long all_pairs = binom2(m.n);

    {
        long long lhs = st.solo_pairs + st.parallel_pairs + st.twocycle_pairs + st.uncovered_pairs;
        add("pair_partition", true, lhs == all_pairs,
            "solo+parallel+twocycle+uncovered = " + num(lhs) + ", C(n,2) = " + num(all_pairs));
    }
    {
        long long so = 0, si = 0;
        for (int v = 0; v < m.n; ++v) {
            so += st.m_out[static_cast<std::size_t>(v)];
            si += st.m_in[static_cast<std::size_t>(v)];
        }
        add("arc_degree_sums", true, so == st.arc_count && si == st.arc_count,
            "sum m_out = " + num(so) + ", sum m_in = " + num(si) + ", arcs = " + num(st.arc_count));
    }
    {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < m.arcs.size() && ok; ++i)
            if (m.arcs[i].from == m.arcs[i + 1].from && m.arcs[i].color == m.arcs[i + 1].color)
                ok = false;
        add("per_color_out_unique", true, ok, "at most one out-arc per vertex per color");
    }
    {
        long long covered = all_pairs - st.uncovered_pairs;
        long long lhs = st.P + st.T, rhs = st.arc_count - covered;
        add("count_bound", true, lhs <= rhs,
            "P+T = " + num(lhs) + " <= |M| - covered_pairs = " + num(rhs) + " (slack " +
                num(rhs - lhs) + ")");
    }
    {
        int bad = 0;
        for (int v = 0; v < m.n; ++v)
            if (st.m_out[static_cast<std::size_t>(v)] + st.s[static_cast<std::size_t>(v)] > m.k)
                ++bad;
        add("out_plus_steiner", true, bad == 0,
            "vertices with m_out+s > k: " + num(bad) + " of " + num(m.n));
    }
    {
        int bad = 0;
        for (int v = 0; v < m.n; ++v) {
            long long lhs = st.t[static_cast<std::size_t>(v)] + st.d_out[static_cast<std::size_t>(v)] +
                            st.d_in[static_cast<std::size_t>(v)] +
                            st.uncovered_at[static_cast<std::size_t>(v)];
            if (lhs != m.n - 1) ++bad;
        }
        add("oneway_accounting", true, bad == 0,
            "vertices with t+d_out+d_in+uncovered != n-1: " + num(bad) + " of " + num(m.n));
    }
    {
        int bad = 0;
        for (int v = 0; v < m.n; ++v) {
            long long lhs = static_cast<long long>(m.k) - st.s[static_cast<std::size_t>(v)] +
                            st.p_in[static_cast<std::size_t>(v)] + st.q_in[static_cast<std::size_t>(v)];
            long long rhs = st.m_out[static_cast<std::size_t>(v)] + st.d_in[static_cast<std::size_t>(v)];
            if (lhs < rhs) ++bad;
        }
        add("oneway_in_bound", true, bad == 0,
            "vertices violating k-s+p_in+q_in >= m_out+d_in: " + num(bad) + " of " + num(m.n));
    }
    {
        long long xisum = 0;
        for (int v = 0; v < m.n; ++v) xisum += st.xi[static_cast<std::size_t>(v)];
        add("xi_identity", true, xisum == 3 * st.total_stray,
            "sum xi = " + num(xisum) + ", 3*stray = " + num(3 * st.total_stray));
    }
    {
        long long bound = static_cast<long long>(m.threshold - 1) * m.n * m.k;
        add("stray_bound", true, st.total_stray <= bound,
            "stray = " + num(st.total_stray) + " <= (threshold-1)*n*k = " + num(bound));
    }
    {
        // Every triple through a pair is stray in its color or in that color's
        // core; uncovered pairs admit at most one core triple per color.
        std::size_t pairs = static_cast<std::size_t>(all_pairs);
        std::vector<int> core_through(pairs, 0), stray_through(pairs, 0);
        bool per_color_ok = true;
        std::vector<int> local(pairs, 0);
        for (int c = 0; c < m.k; ++c) {
            for (const Triple& t : m.core_of(c).triples())
                for (auto [a, b] :
                     {std::pair(t[0], t[1]), std::pair(t[0], t[2]), std::pair(t[1], t[2])}) {
                    auto r = static_cast<std::size_t>(pair_rank(a, b));
                    ++core_through[r];
                    if (pc.tag[r] == PairTag::Uncovered && ++local[r] > 1) per_color_ok = false;
                }
            for (const Triple& t : m.core_of(c).triples())
                for (auto [a, b] :
                     {std::pair(t[0], t[1]), std::pair(t[0], t[2]), std::pair(t[1], t[2])})
                    local[static_cast<std::size_t>(pair_rank(a, b))] = 0;
        }
        for (int c = 0; c < m.k; ++c)
            for (const Triple& t : m.stray_of(c))
                for (auto [a, b] :
                     {std::pair(t[0], t[1]), std::pair(t[0], t[2]), std::pair(t[1], t[2])})
                    ++stray_through[static_cast<std::size_t>(pair_rank(a, b))];

        bool identity_ok = true;
        long long uncovered_low = 0;
        for (std::size_t r = 0; r < pairs; ++r) {
            if (core_through[r] + stray_through[r] != m.n - 2) identity_ok = false;
            if (pc.tag[r] == PairTag::Uncovered &&
                stray_through[r] < static_cast<long long>(m.n) - 2 - m.k)
                ++uncovered_low;
        }
        add("pair_triple_identity", true, identity_ok,
            "core_through + stray_through = n-2 on all pairs");
        add("uncovered_core_codegree", true, per_color_ok,
            "uncovered pairs have <= 1 core triple per color");
        add("uncovered_stray_pressure", true, uncovered_low == 0,
            "uncovered pairs with fewer than n-2-k stray triples: " + num(uncovered_low));
    }
    {
        std::ostringstream os;
        os << std::fixed << std::setprecision(4) << "n = " << m.n
           << " vs 4k/3 + t_bar = " << (4.0 * m.k / 3.0 + st.t_bar);
        add("two_cycle_bound_report", false, true, os.str());
    }
    {
        std::ostringstream os;
        os << std::fixed << std::setprecision(4) << "n = " << m.n << " vs max(1.59k, 3k/2 + p_hat/2) = "
           << std::max(1.59 * m.k, 1.5 * m.k + st.p_hat / 2.0);
        add("solo_bound_report", false, true, os.str());
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Directed-triangle cross-check (loose kind)

struct TriangleCrossCheck {
    long long triangles = 0;
    bool saturated = false;
    long long contradictions = 0;
    std::vector<std::tuple<int, int, int>> contradiction_sample;
    bool ok() const { return contradictions == 0; }
};

// Every directed triangle of D must sit on a triple that is stray in its
// color: locked pairs and star triples would force an arc pattern the
// triangle does not have.
inline TriangleCrossCheck triangle_cross_check(const ColoredMultidigraph& m, const Digraph& d,
                                               long long cap = 200000) {
    if (m.kind != PathKind::Loose)
        throw std::invalid_argument("triangle_cross_check applies to the loose kind");
    TriangleCrossCheck res;
    TriangleCensus census = directed_triangle_census(d, cap);
    res.triangles = census.count;
    res.saturated = census.saturated;
    auto out = d.out_adjacency();
    for (auto& nb : out) std::sort(nb.begin(), nb.end());
    long long seen = 0;
    for (int x = 0; x < d.n; ++x)
        for (int y : out[static_cast<std::size_t>(x)]) {
            if (y <= x) continue;
            for (int z : out[static_cast<std::size_t>(y)]) {
                if (z <= x || z == y || !d.has_arc(z, x)) continue;
                if (++seen > cap) return res;
                Triple t(x, y, z);
                int c = m.source.color_of(t);
                if (m.core_of(c).contains(t)) {
                    ++res.contradictions;
                    if (res.contradiction_sample.size() < 20)
                        res.contradiction_sample.emplace_back(x, y, z);
                }
            }
        }
    return res;
}

// ---------------------------------------------------------------------------
// Serialization

inline void write_stats_text(std::ostream& os, const ColoredMultidigraph& m, const Stats& st,
                             const AuditReport& rep) {
    os << "n: " << st.n << '\n';
    os << "k: " << st.k << '\n';
    os << "kind: " << (m.kind == PathKind::Loose ? "loose" : "messy") << '\n';
    os << "threshold: " << m.threshold << '\n';
    os << "arcs: " << st.arc_count << '\n';
    os << "S: " << st.S << '\n';
    os << "T: " << st.T << '\n';
    os << "P: " << st.P << '\n';
    os << "solo_pairs: " << st.solo_pairs << '\n';
    os << "uncovered_pairs: " << st.uncovered_pairs << '\n';
    os << "stray_triples: " << st.total_stray << '\n';
    os << std::fixed << std::setprecision(6);
    os << "t_bar: " << st.t_bar << '\n';
    os << "p_hat: " << st.p_hat << '\n';
    for (const auto& c : rep.checks)
        os << "audit " << c.name << ": " << (c.asserted ? (c.holds ? "ok" : "FAIL") : "report")
           << " (" << c.detail << ")\n";
}

inline void write_stats_tsv(std::ostream& os, const Stats& st) {
    os << "v\tm_in\tm_out\ts\tt\tp_in\tp_out\tq_in\tq_out\td_in\td_out\txi\tuncovered\n";
    for (int v = 0; v < st.n; ++v) {
        auto i = static_cast<std::size_t>(v);
        os << v << '\t' << st.m_in[i] << '\t' << st.m_out[i] << '\t' << st.s[i] << '\t' << st.t[i]
           << '\t' << st.p_in[i] << '\t' << st.p_out[i] << '\t' << st.q_in[i] << '\t' << st.q_out[i]
           << '\t' << st.d_in[i] << '\t' << st.d_out[i] << '\t' << st.xi[i] << '\t'
           << st.uncovered_at[i] << '\n';
    }
}

}  // namespace tripath
