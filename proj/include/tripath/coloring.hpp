#pragma once

#include <chrono>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tripath/hypergraph.hpp"
#include "tripath/patterns.hpp"

namespace tripath {

// Colex rank of a sorted triple: triples ordered by (c, b, a).
inline std::int64_t triple_colex_rank(const Triple& t) {
    return binom3(t[2]) + binom2(t[1]) + t[0];
}

// Assignment of every triple of [n] to one of k colors, stored densely by
// colex rank.
class Coloring {
public:
    Coloring() = default;
    Coloring(int n, int k) : n_(n), k_(k), colors_(static_cast<std::size_t>(binom3(n)), 0) {
        if (n < 0 || k < 1) throw std::invalid_argument("coloring needs n >= 0 and k >= 1");
    }

    int vertex_count() const { return n_; }
    int color_count() const { return k_; }
    std::int64_t triple_count() const { return static_cast<std::int64_t>(colors_.size()); }

    int color_of(const Triple& t) const {
        return colors_[static_cast<std::size_t>(triple_colex_rank(t))];
    }

    void set_color(const Triple& t, int c) {
        if (c < 0 || c >= k_) throw std::out_of_range("color out of range");
        colors_[static_cast<std::size_t>(triple_colex_rank(t))] = c;
    }

    // Triples in colex order with a visitor (a, b, c, color).
    template <typename F>
    void for_each(F&& f) const {
        std::size_t r = 0;
        for (int c = 2; c < n_; ++c)
            for (int b = 1; b < c; ++b)
                for (int a = 0; a < b; ++a) f(a, b, c, colors_[r++]);
    }

    std::vector<std::int64_t> class_sizes() const {
        std::vector<std::int64_t> sz(static_cast<std::size_t>(k_), 0);
        for (int c : colors_) ++sz[static_cast<std::size_t>(c)];
        return sz;
    }

    bool operator==(const Coloring&) const = default;

private:
    int n_ = 0;
    int k_ = 1;
    std::vector<int> colors_;
};

enum class PathKind { Loose, Messy };

inline PathPattern pattern_for(PathKind kind) {
    return pattern(kind == PathKind::Loose ? PatternKind::LoosePath : PatternKind::MessyPath);
}

// The standard path-free construction: n = k+5 (loose) or k+4 (messy);
// a triple gets the color of its least vertex, capped at the last color.
// Classes 0..k-2 are stars; class k-1 is complete on the top 6 (loose) or
// 5 (messy) vertices, one fewer than the path needs.
inline Coloring lower_bound_coloring(PathKind kind, int k) {
    if (k < 1) throw std::invalid_argument("lower_bound_coloring needs k >= 1");
    const int n = k + (kind == PathKind::Loose ? 5 : 4);
    Coloring out(n, k);
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a)
                out.set_color(Triple(a, b, c), a < k - 1 ? a : k - 1);
    return out;
}

inline Hypergraph3 color_class(const Coloring& col, int c) {
    if (c < 0 || c >= col.color_count()) throw std::out_of_range("color out of range");
    Hypergraph3 h(col.vertex_count());
    col.for_each([&](int a, int b, int cc, int color) {
        if (color == c) h.add(Triple(a, b, cc));
    });
    return h;
}

// First color class (ascending index) containing the pattern, with a witness.
inline std::optional<std::pair<int, Embedding>> monochromatic_embedding(const Coloring& col,
                                                                        const PathPattern& p) {
    for (int c = 0; c < col.color_count(); ++c)
        if (auto e = contains_pattern(color_class(col, c), p)) return std::make_pair(c, *e);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tiny-scale exact Ramsey search

struct RamseyOutcome {
    enum class Status { Arrow, NoArrow, Unknown } status = Status::Unknown;
    std::optional<Coloring> certificate;  // a pattern-free coloring when NoArrow
    std::uint64_t nodes = 0;
};

namespace detail {

struct RamseySearch {
    const PathPattern& pat;
    int k, n;
    std::vector<Triple> triples;           // colex order
    std::vector<Hypergraph3> classes;      // growing color classes
    std::vector<int> assigned;             // color per triple index
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;
    std::uint64_t nodes = 0;
    bool timed_out = false;

    // True when a pattern-free coloring exists (found in `assigned`).
    bool free_coloring_exists(std::size_t i, int colors_used) {
        if (has_deadline && (++nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return false;
        }
        if (i == triples.size()) return true;
        // Colors are interchangeable: only the first unused color is tried,
        // which fixes the first triple's color and prunes color relabelings.
        int limit = std::min(k, colors_used + 1);
        for (int c = 0; c < limit; ++c) {
            classes[static_cast<std::size_t>(c)].add(triples[i]);
            bool hit = contains_pattern(classes[static_cast<std::size_t>(c)], pat).has_value();
            if (!hit) {
                assigned[i] = c;
                if (free_coloring_exists(i + 1, std::max(colors_used, c + 1))) return true;
                if (timed_out) {
                    remove_last(c, triples[i]);
                    return false;
                }
            }
            remove_last(c, triples[i]);
        }
        return false;
    }

    void remove_last(int c, const Triple& t) { classes[static_cast<std::size_t>(c)].remove(t); }
};

}  // namespace detail

// Decides whether every k-coloring of the triples of [n] contains a
// monochromatic copy of the pattern. Exhaustive search with color-symmetry
// pruning; budget 0 means no limit.
inline RamseyOutcome ramsey_exhaustive(const PathPattern& p, int k, int n,
                                       std::chrono::milliseconds budget = {}) {
    if (k < 1 || n < 0) throw std::invalid_argument("ramsey_exhaustive needs k >= 1, n >= 0");
    detail::RamseySearch s{p, k, n, {}, {}, {}, {}, false, 0, false};
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) s.triples.emplace_back(a, b, c);
    s.classes.assign(static_cast<std::size_t>(k), Hypergraph3(n));
    s.assigned.assign(s.triples.size(), 0);
    if (budget.count() > 0) {
        s.deadline = std::chrono::steady_clock::now() + budget;
        s.has_deadline = true;
    }

    RamseyOutcome out;
    bool found_free = s.free_coloring_exists(0, 0);
    out.nodes = s.nodes;
    if (s.timed_out) {
        out.status = RamseyOutcome::Status::Unknown;
        return out;
    }
    if (found_free) {
        out.status = RamseyOutcome::Status::NoArrow;
        Coloring cert(n, k);
        for (std::size_t i = 0; i < s.triples.size(); ++i)
            cert.set_color(s.triples[i], s.assigned[i]);
        out.certificate = std::move(cert);
    } else {
        out.status = RamseyOutcome::Status::Arrow;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format: line 1 "n k", then C(n,3) lines "a b c color" in colex order.

inline void write_coloring(std::ostream& os, const Coloring& col) {
    os << col.vertex_count() << ' ' << col.color_count() << '\n';
    col.for_each([&](int a, int b, int c, int color) {
        os << a << ' ' << b << ' ' << c << ' ' << color << '\n';
    });
}

inline Coloring read_coloring(std::istream& is) {
    auto fail = [](std::int64_t line, const std::string& msg) {
        throw std::runtime_error("coloring format error at line " + std::to_string(line) + ": " +
                                 msg);
    };
    std::string line;
    if (!std::getline(is, line)) fail(1, "missing header");
    std::istringstream header(line);
    long long n = -1, k = -1;
    if (!(header >> n >> k) || n < 0 || k < 1) fail(1, "expected \"n k\"");
    if (n > 500 || k > 1000000) fail(1, "header out of supported range");

    Coloring col(static_cast<int>(n), static_cast<int>(k));
    std::int64_t expected = col.triple_count();
    std::int64_t lineno = 1;
    std::int64_t rank = 0;
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) {
                ++lineno;
                if (!std::getline(is, line)) fail(lineno, "unexpected end of file");
                std::istringstream row(line);
                long long ra, rb, rc, color;
                if (!(row >> ra >> rb >> rc >> color)) fail(lineno, "expected \"a b c color\"");
                if (ra != a || rb != b || rc != c) fail(lineno, "triple out of colex order");
                if (color < 0 || color >= k) fail(lineno, "color out of range");
                col.set_color(Triple(a, b, c), static_cast<int>(color));
                ++rank;
            }
    if (rank != expected) fail(lineno, "wrong triple count");
    if (std::getline(is, line) && !line.empty()) fail(lineno + 1, "trailing lines");
    return col;
}

}  // namespace tripath
