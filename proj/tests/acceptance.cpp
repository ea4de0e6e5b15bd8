// Acceptance suite: every criterion below runs end to end and prints one
// PASS/FAIL line. The process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "tripath/coloring.hpp"
#include "tripath/extremal.hpp"
#include "tripath/graph.hpp"
#include "tripath/hypergraph.hpp"
#include "tripath/multidigraph.hpp"
#include "tripath/patterns.hpp"
#include "tripath/structure.hpp"

using namespace tripath;
using tsupport::RichColoringParams;
using tsupport::rich_coloring;

namespace {

int failures = 0;

void criterion(int index, const std::string& name, const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %-34s %s (%.1fs)%s%s\n", index, name.c_str(),
                ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

// --- criterion 1: extremal theorem reproduction -----------------------------

bool run_extremal(std::string& detail) {
    auto rows = verify_messy_extremal(7);
    if (rows.size() != 4) return false;
    const long long expect[] = {4, 10, 10, 15};
    for (int i = 0; i < 4; ++i) {
        const auto& r = rows[static_cast<std::size_t>(i)];
        if (r.computed != expect[i] || !r.value_match || !r.families_match) {
            std::ostringstream os;
            os << "n=" << r.n << " computed=" << r.computed;
            detail = os.str();
            return false;
        }
    }
    // Star uniqueness at n = 7 and both named families at n = 6.
    ExtremalOptions opt;
    opt.collect_witnesses = true;
    ExtremalResult r7 = extremal_number(pattern(PatternKind::MessyPath), 7, opt);
    std::set<std::string> c7;
    for (const auto& w : r7.witnesses) c7.insert(classify_witness(w));
    if (c7 != std::set<std::string>{"star"}) {
        detail = "n=7 witnesses not all stars";
        return false;
    }
    detail = "ex = 4, 10, 10, 15";
    return true;
}

// --- criterion 2: lower-bound constructions ---------------------------------

bool run_lower_bounds(std::string& detail) {
    for (int k = 1; k <= 12; ++k) {
        if (monochromatic_embedding(lower_bound_coloring(PathKind::Loose, k),
                                    pattern(PatternKind::LoosePath))) {
            detail = "loose k=" + std::to_string(k);
            return false;
        }
        if (monochromatic_embedding(lower_bound_coloring(PathKind::Messy, k),
                                    pattern(PatternKind::MessyPath))) {
            detail = "messy k=" + std::to_string(k);
            return false;
        }
    }
    detail = "k = 1..12, both kinds";
    return true;
}

// --- criterion 3: tiny Ramsey values ----------------------------------------

bool run_tiny_ramsey(std::string& detail) {
    auto arrow = [](const PathPattern& p, int k, int n) {
        return ramsey_exhaustive(p, k, n).status == RamseyOutcome::Status::Arrow;
    };
    PathPattern loose = pattern(PatternKind::LoosePath);
    PathPattern messy = pattern(PatternKind::MessyPath);
    PathPattern kite = pattern(PatternKind::Kite);

    if (arrow(loose, 1, 6) || !arrow(loose, 1, 7)) {
        detail = "r_1(loose) != 7";
        return false;
    }
    if (arrow(messy, 1, 5) || !arrow(messy, 1, 6)) {
        detail = "r_1(messy) != 6";
        return false;
    }
    if (arrow(kite, 1, 3) || !arrow(kite, 1, 4)) {
        detail = "r_1(kite) != 4";
        return false;
    }
    int r2k = -1;
    for (int n = 3; n <= 5; ++n)
        if (arrow(kite, 2, n)) {
            r2k = n;
            break;
        }
    if (r2k < 3 || r2k > 5) {
        detail = "r_2(kite) outside 3..5";
        return false;
    }
    detail = "r_1(L)=7 r_1(M)=6 r_1(K)=4 r_2(K)=" + std::to_string(r2k);
    return true;
}

// --- criterion 4: decomposition round-trip ----------------------------------

bool run_round_trip(std::string& detail) {
    std::mt19937_64 rng(0xC4);
    int loose_count = 0, messy_count = 0;
    long long max_triples = 0;
    int max_n = 0;

    for (int it = 0; it < 200; ++it) {
        GeneratorParams p;
        if (it == 0) {
            p.num_stars = 1;  // jumbo: C(200,2) = 19900 triples
            p.star_sizes = {200};
        } else if (it % 8 == 3) {
            p.num_stars = 22;  // locked-pair instances
            p.star_sizes.assign(22, 23 + static_cast<int>(rng() % 3));
            p.num_locked_pairs = 1 + static_cast<int>(rng() % 4);
        } else {
            p.num_stars = 1 + static_cast<int>(rng() % 4);
            bool sparse = rng() % 2;
            for (int i = 0; i < p.num_stars; ++i)
                p.star_sizes.push_back((sparse ? 28 : 23) + static_cast<int>(rng() % 14));
            p.star_density = sparse ? 0.96 : 1.0;
        }
        p.seed = rng();
        auto [h, truth] = generate_loose_free(p);
        LooseDecomposition d = decompose_loose(h);
        if (!tsupport::same_decomposition(d, truth) || !verify_decomposition(d, &h).ok) {
            detail = "loose mismatch at instance " + std::to_string(it);
            return false;
        }
        ++loose_count;
        max_triples = std::max<long long>(max_triples, h.triple_count());
        max_n = std::max(max_n, h.vertex_count());
    }

    for (int it = 0; it < 200; ++it) {
        GeneratorParams p;
        if (it % 5 == 0) {
            p.steiner_vertices = 29 + static_cast<int>(rng() % 12);
        } else if (it % 5 == 1) {
            p.num_stars = 1;
            p.star_sizes = {14 + static_cast<int>(rng() % 20)};
            p.steiner_vertices = 29 + static_cast<int>(rng() % 8);
        } else {
            p.num_stars = 1 + static_cast<int>(rng() % 5);
            bool sparse = rng() % 2;
            for (int i = 0; i < p.num_stars; ++i)
                p.star_sizes.push_back((sparse ? 19 : 14) + static_cast<int>(rng() % 16));
            p.star_density = sparse ? 0.95 : 1.0;
        }
        p.seed = rng();
        auto [h, truth] = generate_messy_free(p);
        MessyDecomposition d = decompose_messy(h);
        if (!tsupport::same_decomposition(d, truth) || !verify_decomposition(d, &h).ok) {
            detail = "messy mismatch at instance " + std::to_string(it);
            return false;
        }
        ++messy_count;
        max_n = std::max(max_n, h.vertex_count());
    }

    std::ostringstream os;
    os << loose_count << "+" << messy_count << " instances, max n " << max_n << ", max triples "
       << max_triples;
    detail = os.str();
    return true;
}

// --- criterion 5: lemma-contradiction detection ------------------------------

bool run_corruption(std::string& detail) {
    std::mt19937_64 rng(0xC5);
    auto inject = [&](const Hypergraph3& h, const PathPattern& p) {
        std::vector<int> alive;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) > 0) alive.push_back(v);
        std::shuffle(alive.begin(), alive.end(), rng);
        Hypergraph3 bad = h;
        for (const Triple& t : p.triples.triples())
            bad.add(Triple(alive[static_cast<std::size_t>(t[0])],
                           alive[static_cast<std::size_t>(t[1])],
                           alive[static_cast<std::size_t>(t[2])]));
        return bad;
    };

    PathPattern loose = pattern(PatternKind::LoosePath);
    for (int it = 0; it < 50; ++it) {
        GeneratorParams p;
        p.num_stars = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < p.num_stars; ++i)
            p.star_sizes.push_back(23 + static_cast<int>(rng() % 10));
        p.seed = rng();
        auto [h, truth] = generate_loose_free(p);
        Hypergraph3 bad = inject(h, loose);
        bool caught = false;
        try {
            LooseDecomposition d = decompose_loose(bad);
            caught = !verify_decomposition(d, &bad).ok;
        } catch (const StructureViolation&) {
            caught = true;
        }
        if (!caught) {
            detail = "silent pass (loose) at instance " + std::to_string(it);
            return false;
        }
    }

    PathPattern messy = pattern(PatternKind::MessyPath);
    for (int it = 0; it < 50; ++it) {
        GeneratorParams p;
        if (it % 2) {
            p.num_stars = 1;
            p.star_sizes = {15 + static_cast<int>(rng() % 10)};
            p.steiner_vertices = 29 + static_cast<int>(rng() % 6);
        } else {
            p.num_stars = 2;
            p.star_sizes = {15, 18};
        }
        p.seed = rng();
        auto [h, truth] = generate_messy_free(p);
        Hypergraph3 bad = inject(h, messy);
        bool caught = false;
        try {
            MessyDecomposition d = decompose_messy(bad);
            caught = !verify_decomposition(d, &bad).ok;
        } catch (const StructureViolation&) {
            caught = true;
        }
        if (!caught) {
            detail = "silent pass (messy) at instance " + std::to_string(it);
            return false;
        }
    }
    detail = "50+50 corrupted instances, zero silent passes";
    return true;
}

// --- criterion 6: oracle equivalence ----------------------------------------

bool run_oracle(std::string& detail) {
    std::mt19937_64 rng(0xC6);
    std::vector<PathPattern> pats = all_fixed_patterns();
    pats.push_back(pattern(PatternKind::Flower, 3));
    long long found_count = 0, absent_count = 0;
    for (int it = 0; it < 1000; ++it) {
        int n = 4 + static_cast<int>(rng() % 5);
        double density = 0.04 + 0.06 * static_cast<double>(rng() % 12);
        Hypergraph3 h = tsupport::random_hypergraph(rng, n, density);
        for (const PathPattern& p : pats) {
            auto found = contains_pattern(h, p);
            if (found.has_value() != tsupport::oracle_contains(h, p)) {
                detail = "disagreement on " + p.name + " instance " + std::to_string(it);
                return false;
            }
            if (found && !embedding_is_valid(h, p, *found)) {
                detail = "invalid embedding for " + p.name;
                return false;
            }
            (found ? found_count : absent_count)++;
        }
    }
    std::ostringstream os;
    os << (found_count + absent_count) << " checks vs oracle (" << found_count << " found, "
       << absent_count << " absent)";
    detail = os.str();
    return true;
}

// --- criterion 7: exact identity audits --------------------------------------

bool run_audits(std::string& detail) {
    int instances = 0;
    auto check = [&](const Coloring& col, PathKind kind, int threshold) -> bool {
        ColoredMultidigraph m = build_multidigraph(col, kind, threshold);
        PairClassification pc = classify_pairs(m);
        Stats st = compute_stats(m, pc);
        AuditReport rep = audit_identities(m, pc, st);
        if (!rep.all_hold()) return false;
        if (!oriented_reduct(m).is_oriented()) return false;
        ++instances;
        return true;
    };

    // The construction colorings: arc-free for small k, arc-bearing once the
    // first star classes out-grow the cores (k >= 19 loose, k >= 11 messy).
    for (int k = 1; k <= 20; ++k)
        if (!check(lower_bound_coloring(PathKind::Loose, k), PathKind::Loose,
                   kLooseCoreThreshold)) {
            detail = "lower-bound loose k=" + std::to_string(k);
            return false;
        }
    for (int k = 1; k <= 12; ++k)
        if (!check(lower_bound_coloring(PathKind::Messy, k), PathKind::Messy,
                   kMessyCoreThreshold)) {
            detail = "lower-bound messy k=" + std::to_string(k);
            return false;
        }

    std::mt19937_64 rng(0xC7);
    for (int it = 0; it < 40; ++it) {
        RichColoringParams params;
        params.kind = PathKind::Loose;
        params.n = 45 + static_cast<int>(rng() % 40);
        params.threshold = kLooseCoreThreshold;
        params.mutual_pairs = static_cast<int>(rng() % 3);
        params.split_centers = static_cast<int>(rng() % 3);
        params.seed = rng();
        if (!check(rich_coloring(params), PathKind::Loose, params.threshold)) {
            detail = "rich loose instance " + std::to_string(it);
            return false;
        }
    }
    for (int it = 0; it < 40; ++it) {
        RichColoringParams params;
        params.kind = PathKind::Messy;
        params.n = 32 + static_cast<int>(rng() % 40);
        params.threshold = kMessyCoreThreshold;
        params.mutual_pairs = static_cast<int>(rng() % 3);
        params.split_centers = static_cast<int>(rng() % 3);
        if (it % 3 == 0 && params.n >= 2 * params.mutual_pairs + params.split_centers + 36) {
            params.steiner_vertices = 29;
        }
        params.seed = rng();
        if (!check(rich_coloring(params), PathKind::Messy, params.threshold)) {
            detail = "rich messy instance " + std::to_string(it);
            return false;
        }
    }
    // Embedded locked pairs at a low threshold plus one jumbo instance.
    for (int it = 0; it < 6; ++it) {
        RichColoringParams params;
        params.kind = PathKind::Loose;
        params.n = 92 + 4 * it;
        params.threshold = 8;
        params.embed_locked = true;
        params.seed = 1000 + static_cast<std::uint64_t>(it);
        if (!check(rich_coloring(params), PathKind::Loose, params.threshold)) {
            detail = "embedded locked instance " + std::to_string(it);
            return false;
        }
    }
    {
        RichColoringParams params;
        params.kind = PathKind::Loose;
        params.n = 120;
        params.threshold = kLooseCoreThreshold;
        params.mutual_pairs = 3;
        params.split_centers = 3;
        params.seed = 4242;
        if (!check(rich_coloring(params), PathKind::Loose, params.threshold)) {
            detail = "jumbo loose instance";
            return false;
        }
    }
    detail = std::to_string(instances) + " built multidigraphs, all audits exact";
    return instances >= 100;
}

// --- criterion 8: directed-triangle empirics ----------------------------------

bool run_triangles(std::string& detail) {
    std::mt19937_64 rng(0xC8);
    int found = 0;
    for (int it = 0; it < 100; ++it) {
        int n = 30 + static_cast<int>(rng() % 31);
        int need = static_cast<int>(std::ceil(0.36 * n));
        Digraph d(n);
        bool ok_degree = false;
        for (int attempt = 0; attempt < 2000 && !ok_degree; ++attempt) {
            d = Digraph(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (rng() % 2)
                        d.add_arc(i, j);
                    else
                        d.add_arc(j, i);
                }
            ok_degree = min_in_degree(d) >= need;
        }
        if (!ok_degree) {
            detail = "could not sample a tournament with min in-degree " + std::to_string(need);
            return false;
        }
        if (!find_directed_triangle(d)) {
            detail = "no directed triangle at instance " + std::to_string(it);
            return false;
        }
        ++found;
    }
    for (int n : {30, 41, 60}) {
        Digraph trans(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) trans.add_arc(i, j);
        if (find_directed_triangle(trans)) {
            detail = "triangle reported in a transitive tournament";
            return false;
        }
    }
    detail = std::to_string(found) + " dense oriented graphs, triangle always present";
    return true;
}

// --- criterion 9: m-core order independence -----------------------------------

bool run_core_orders(std::string& detail) {
    std::mt19937_64 rng(0xC9);
    for (int it = 0; it < 100; ++it) {
        int n = 8 + static_cast<int>(rng() % 5);
        Hypergraph3 h = tsupport::random_hypergraph(rng, n, 0.08 + 0.03 * (it % 5));
        int m = 2 + static_cast<int>(rng() % 3);
        CoreResult reference = m_core(h, m);
        std::vector<int> priority(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) priority[static_cast<std::size_t>(v)] = v;
        for (int p = 0; p < 50; ++p) {
            std::shuffle(priority.begin(), priority.end(), rng);
            CoreResult permuted = m_core_with_priority(h, m, priority);
            if (permuted.core.triples() != reference.core.triples()) {
                detail = "order-dependent core at instance " + std::to_string(it);
                return false;
            }
        }
    }
    detail = "100 instances x 50 removal orders";
    return true;
}

}  // namespace

int main() {
    criterion(1, "extremal-theorem-reproduction", run_extremal);
    criterion(2, "lower-bound-constructions", run_lower_bounds);
    criterion(3, "tiny-ramsey-values", run_tiny_ramsey);
    criterion(4, "decomposition-round-trip", run_round_trip);
    criterion(5, "lemma-contradiction-detection", run_corruption);
    criterion(6, "oracle-equivalence", run_oracle);
    criterion(7, "exact-identity-audits", run_audits);
    criterion(8, "directed-triangle-empirics", run_triangles);
    criterion(9, "core-order-independence", run_core_orders);

    if (failures == 0)
        std::printf("ACCEPTANCE: all 9 criteria passed\n");
    else
        std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
