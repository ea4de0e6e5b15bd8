#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "tripath/hypergraph.hpp"
#include "tripath/patterns.hpp"
#include "tripath/structure.hpp"

namespace tripath {

inline bool is_intersecting(const Hypergraph3& h) {
    const auto& ts = h.triples();
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            bool meet = false;
            for (int a = 0; a < 3 && !meet; ++a) meet = ts[j].contains(ts[i][a]);
            if (!meet) return false;
        }
    return true;
}

// Lexicographically least sorted triple list over all vertex relabelings.
// Intended for small n (n! permutations).
inline std::vector<Triple> canonical_form(const Hypergraph3& h) {
    const int n = h.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Triple> best;
    bool first = true;
    do {
        std::vector<Triple> relabeled;
        relabeled.reserve(h.triples().size());
        for (const Triple& t : h.triples())
            relabeled.emplace_back(perm[static_cast<std::size_t>(t[0])],
                                   perm[static_cast<std::size_t>(t[1])],
                                   perm[static_cast<std::size_t>(t[2])]);
        std::sort(relabeled.begin(), relabeled.end());
        if (first || relabeled < best) {
            best = std::move(relabeled);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

struct ExtremalOptions {
    std::chrono::milliseconds budget{0};  // 0 = unlimited
    bool collect_witnesses = false;
};

struct ExtremalResult {
    int n = 0;
    std::string pattern_name;
    long long value = 0;
    bool exact = true;  // false when the budget ran out; value is a lower bound
    std::vector<Hypergraph3> witnesses;
    std::uint64_t nodes = 0;
};

namespace detail {

struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[static_cast<std::size_t>(i) / 64] |= 1ULL << (i % 64); }
    void reset(int i) { w[static_cast<std::size_t>(i) / 64] &= ~(1ULL << (i % 64)); }
    bool test(int i) const { return (w[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1; }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w) c += std::popcount(x);
        return c;
    }

    int lowest() const {  // -1 when empty
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w[i])));
        return -1;
    }
};

// Branch and bound over candidate triples in colex order.
//
// All pattern copies are precomputed as sets of candidate indices. A
// candidate stays "addable" while joining it to the chosen set creates no
// copy; the bound chosen + |addable| is sound because every extension uses
// only individually addable candidates. Pruning is strict (< best), so every
// optimum survives and witness collection is exhaustive.
class ExtremalSearch {
public:
    ExtremalSearch(const PathPattern& p, int n, const ExtremalOptions& opt)
        : n_(n), opt_(opt), pattern_(p) {
        for (int c = 2; c < n; ++c)
            for (int b = 1; b < c; ++b)
                for (int a = 0; a < b; ++a) candidates_.emplace_back(a, b, c);
        enumerate_copies();
        copies_by_member_.resize(candidates_.size());
        for (std::size_t ci = 0; ci < copies_.size(); ++ci)
            for (int idx : copies_[ci]) copies_by_member_[static_cast<std::size_t>(idx)].push_back(ci);
    }

    ExtremalResult run() {
        ExtremalResult res;
        res.n = n_;
        res.pattern_name = pattern_.name;
        deadline_set_ = opt_.budget.count() > 0;
        if (deadline_set_) deadline_ = std::chrono::steady_clock::now() + opt_.budget;

        seed_lower_bound();
        Bits chosen(candidates_.size());
        Bits addable(candidates_.size());
        for (std::size_t i = 0; i < candidates_.size(); ++i) addable.set(static_cast<int>(i));
        dfs(chosen, addable, 0);

        res.value = best_;
        res.exact = !timed_out_;
        res.nodes = nodes_;
        if (opt_.collect_witnesses)
            for (const Bits& s : witness_sets_) res.witnesses.push_back(to_hypergraph(s));
        return res;
    }

private:
    void enumerate_copies() {
        const int pv = pattern_.triples.vertex_count();
        if (pv > n_) return;
        std::vector<int> map(static_cast<std::size_t>(pv), -1);
        std::vector<char> used(static_cast<std::size_t>(n_), 0);
        std::set<std::vector<int>> dedup;
        enumerate_maps(0, map, used, dedup);
        copies_.assign(dedup.begin(), dedup.end());
    }

    void enumerate_maps(int pv, std::vector<int>& map, std::vector<char>& used,
                        std::set<std::vector<int>>& dedup) {
        if (pv == pattern_.triples.vertex_count()) {
            std::vector<int> idx;
            for (const Triple& t : pattern_.triples.triples()) {
                Triple img(map[static_cast<std::size_t>(t[0])], map[static_cast<std::size_t>(t[1])],
                           map[static_cast<std::size_t>(t[2])]);
                idx.push_back(static_cast<int>(triple_colex_rank(img)));
            }
            std::sort(idx.begin(), idx.end());
            dedup.insert(std::move(idx));
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            map[static_cast<std::size_t>(pv)] = v;
            enumerate_maps(pv + 1, map, used, dedup);
            used[static_cast<std::size_t>(v)] = 0;
        }
    }

    // Verified pattern-free starting sets: the star at vertex 0 and the
    // complete hypergraph on fewer vertices than the pattern has.
    void seed_lower_bound() {
        const int pv = pattern_.triples.vertex_count();
        best_ = std::max(best_, static_cast<long long>(binom3(std::min(n_, pv - 1))));
        if (n_ >= 3) {
            Hypergraph3 star = star_hypergraph(n_);
            if (!contains_pattern(star, pattern_))
                best_ = std::max(best_, static_cast<long long>(binom2(n_ - 1)));
        }
    }

    void dfs(Bits& chosen, Bits addable, long long count) {
        if (timed_out_) return;
        ++nodes_;
        if (deadline_set_ && (nodes_ & 2047) == 0 && std::chrono::steady_clock::now() > deadline_) {
            timed_out_ = true;
            return;
        }

        long long ub = count + addable.count();
        if (ub < best_ || (ub == best_ && !opt_.collect_witnesses)) return;
        int j = addable.lowest();
        if (j == -1) {
            if (count > best_) {
                best_ = count;
                witness_sets_.clear();
            }
            if (count == best_ && opt_.collect_witnesses) witness_sets_.push_back(chosen);
            return;
        }

        // Include j.
        addable.reset(j);
        Bits filtered = addable;
        chosen.set(j);
        for (std::size_t wi = 0; wi < filtered.w.size(); ++wi) {
            std::uint64_t bits = filtered.w[wi];
            while (bits) {
                int t = static_cast<int>(wi * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
                if (completes_copy(t, chosen)) filtered.reset(t);
            }
        }
        dfs(chosen, filtered, count + 1);
        chosen.reset(j);

        // Exclude j.
        dfs(chosen, addable, count);
    }

    // Would adding candidate t to `chosen` complete a pattern copy?
    bool completes_copy(int t, const Bits& chosen) const {
        for (std::size_t ci : copies_by_member_[static_cast<std::size_t>(t)]) {
            bool all = true;
            for (int idx : copies_[ci])
                if (idx != t && !chosen.test(idx)) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        return false;
    }

    Hypergraph3 to_hypergraph(const Bits& s) const {
        Hypergraph3 h(n_);
        for (std::size_t i = 0; i < candidates_.size(); ++i)
            if (s.test(static_cast<int>(i))) h.add(candidates_[i]);
        return h;
    }

    int n_;
    ExtremalOptions opt_;
    const PathPattern& pattern_;
    std::vector<Triple> candidates_;
    std::vector<std::vector<int>> copies_;
    std::vector<std::vector<std::size_t>> copies_by_member_;
    long long best_ = 0;
    std::vector<Bits> witness_sets_;
    std::uint64_t nodes_ = 0;
    bool deadline_set_ = false, timed_out_ = false;
    std::chrono::steady_clock::time_point deadline_;
};

}  // namespace detail

inline ExtremalResult extremal_number(const PathPattern& p, int n, ExtremalOptions opt = {}) {
    if (n < 3) {
        ExtremalResult res;
        res.n = n;
        res.pattern_name = p.name;
        res.value = 0;
        if (opt.collect_witnesses && n >= 0) res.witnesses.push_back(Hypergraph3(n));
        return res;
    }
    return detail::ExtremalSearch(p, n, opt).run();
}

// Classifies a witness against the named reference families.
inline std::string classify_witness(const Hypergraph3& w) {
    const int n = w.vertex_count();
    if (w.triple_count() == binom3(n)) return "complete";
    {
        std::vector<Triple> canon = canonical_form(w);
        if (canon == canonical_form(star_hypergraph(n))) return "star";
        if (n >= 5) {
            Hypergraph3 comp5(n);
            for (int a = 0; a < 5; ++a)
                for (int b = a + 1; b < 5; ++b)
                    for (int c = b + 1; c < 5; ++c) comp5.add(Triple(a, b, c));
            if (canon == canonical_form(comp5)) return "complete5";
        }
    }
    return "other";
}

struct MessyExtremalRow {
    int n = 0;
    long long computed = 0;
    long long formula = 0;
    bool value_match = false;
    std::vector<std::string> witness_classes;  // distinct, sorted
    bool families_match = false;
};

inline long long messy_extremal_formula(int n) { return n <= 5 ? binom3(n) : binom2(n - 1); }

// ex(n, messy path) for n = 4..n_max with witness classification against the
// known extremal families: complete for n <= 5, complete5 or star at n = 6,
// star alone from n = 7.
inline std::vector<MessyExtremalRow> verify_messy_extremal(
    int n_max, std::chrono::milliseconds budget_per_n = {}) {
    PathPattern messy = pattern(PatternKind::MessyPath);
    std::vector<MessyExtremalRow> rows;
    for (int n = 4; n <= n_max; ++n) {
        ExtremalOptions opt;
        opt.budget = budget_per_n;
        opt.collect_witnesses = true;
        ExtremalResult res = extremal_number(messy, n, opt);
        MessyExtremalRow row;
        row.n = n;
        row.computed = res.value;
        row.formula = messy_extremal_formula(n);
        row.value_match = res.exact && res.value == row.formula;
        std::set<std::string> classes;
        for (const Hypergraph3& w : res.witnesses) classes.insert(classify_witness(w));
        row.witness_classes.assign(classes.begin(), classes.end());
        if (n <= 5)
            row.families_match = classes == std::set<std::string>{"complete"};
        else if (n == 6)
            // At n = 6 disjoint means complementary, so every one-per-
            // complementary-pair choice is intersecting and extremal; the two
            // named families must appear among them.
            row.families_match = classes.count("complete5") && classes.count("star");
        else
            row.families_match = classes == std::set<std::string>{"star"};
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void write_messy_extremal_table(std::ostream& os, const std::vector<MessyExtremalRow>& rows,
                                       bool tsv = false) {
    const char sep = tsv ? '\t' : ' ';
    os << "n" << sep << "ex" << sep << "formula" << sep << "match" << sep << "witnesses\n";
    for (const auto& r : rows) {
        os << r.n << sep << r.computed << sep << r.formula << sep
           << ((r.value_match && r.families_match) ? "yes" : "NO") << sep;
        for (std::size_t i = 0; i < r.witness_classes.size(); ++i)
            os << (i ? "+" : "") << r.witness_classes[i];
        os << '\n';
    }
}

}  // namespace tripath
