// Command-line front end: pattern detection, cores, decompositions,
// generators, colorings, multidigraph statistics, extremal numbers, and
// tiny-scale Ramsey decisions over the text formats described in the README.
//
// Exit codes: 0 success/verified, 1 verification failure (violation found,
// pattern missing, undecided within budget), 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tripath/coloring.hpp"
#include "tripath/extremal.hpp"
#include "tripath/graph.hpp"
#include "tripath/hypergraph.hpp"
#include "tripath/multidigraph.hpp"
#include "tripath/patterns.hpp"
#include "tripath/structure.hpp"

namespace {

using namespace tripath;

Hypergraph3 load_hypergraph(const std::string& path) {
    if (path.empty() || path == "-") return read_hypergraph(std::cin);
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_hypergraph(f);
}

Coloring load_coloring(const std::string& path) {
    if (path.empty() || path == "-") return read_coloring(std::cin);
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_coloring(f);
}

class OutputStream {
public:
    explicit OutputStream(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
        }
    }
    std::ostream& get() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

PathKind parse_kind(const std::string& s) {
    if (s == "loose") return PathKind::Loose;
    if (s == "messy") return PathKind::Messy;
    throw CLI::ValidationError("--kind", "expected loose or messy");
}

void print_embedding(std::ostream& os, const PathPattern& p, const Embedding& e) {
    os << "map:";
    for (std::size_t i = 0; i < e.map.size(); ++i) os << ' ' << i << "->" << e.map[i];
    os << '\n';
    os << "triples:";
    for (const Triple& t : p.triples.triples()) os << "  " << e.image(t);
    os << '\n';
}

int cmd_detect(const std::string& pattern_name, const std::string& in) {
    PathPattern p = pattern_from_name(pattern_name);
    Hypergraph3 h = load_hypergraph(in);
    auto e = contains_pattern(h, p);
    std::cout << "pattern: " << p.name << '\n';
    std::cout << "found: " << (e ? "yes" : "no") << '\n';
    if (!e) return 1;
    print_embedding(std::cout, p, *e);
    return 0;
}

int cmd_core(int m, const std::string& in, const std::string& out) {
    Hypergraph3 h = load_hypergraph(in);
    CoreResult cr = m_core(h, m);
    OutputStream os(out);
    write_hypergraph(os.get(), cr.core);
    std::cerr << "removed " << cr.removal_order.size() << " vertices, " << cr.stray.size()
              << " stray triples\n";
    return 0;
}

int cmd_decompose(const std::string& kind_s, const std::string& in, int threshold) {
    PathKind kind = parse_kind(kind_s);
    Hypergraph3 h = load_hypergraph(in);
    if (kind == PathKind::Loose) {
        LooseDecomposition d =
            decompose_loose(h, threshold > 0 ? threshold : kLooseCoreThreshold);
        VerifyReport rep = verify_decomposition(d, &h);
        if (!rep.ok) {
            std::cout << "verify: FAIL (" << rep.violation << ")\n";
            return 1;
        }
        write_report(std::cout, d);
        std::cout << "verify: ok\n";
    } else {
        MessyDecomposition d =
            decompose_messy(h, threshold > 0 ? threshold : kMessyCoreThreshold);
        VerifyReport rep = verify_decomposition(d, &h);
        if (!rep.ok) {
            std::cout << "verify: FAIL (" << rep.violation << ")\n";
            return 1;
        }
        write_report(std::cout, d);
        std::cout << "verify: ok\n";
    }
    return 0;
}

int cmd_generate(const std::string& kind_s, int stars, std::vector<int> sizes, int locked,
                 int steiner, double density, std::uint64_t seed, int threshold,
                 const std::string& out, const std::string& truth_path) {
    PathKind kind = parse_kind(kind_s);
    if (static_cast<int>(sizes.size()) == 1 && stars > 1) sizes.assign(static_cast<std::size_t>(stars), sizes[0]);
    GeneratorParams p;
    p.num_stars = stars;
    p.star_sizes = std::move(sizes);
    p.num_locked_pairs = locked;
    p.steiner_vertices = steiner;
    p.star_density = density;
    p.seed = seed;
    Hypergraph3 h;
    std::optional<LooseDecomposition> loose_truth;
    std::optional<MessyDecomposition> messy_truth;
    try {
        if (kind == PathKind::Loose) {
            auto gen = generate_loose_free(p, threshold > 0 ? threshold : kLooseCoreThreshold);
            h = std::move(gen.first);
            loose_truth = std::move(gen.second);
        } else {
            auto gen = generate_messy_free(p, threshold > 0 ? threshold : kMessyCoreThreshold);
            h = std::move(gen.first);
            messy_truth = std::move(gen.second);
        }
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << '\n';
        return 1;  // infeasible parameters / retries exhausted
    }
    OutputStream os(out);
    write_hypergraph(os.get(), h);
    if (!truth_path.empty()) {
        OutputStream ts(truth_path);
        if (loose_truth)
            write_report(ts.get(), *loose_truth);
        else
            write_report(ts.get(), *messy_truth);
    }
    return 0;
}

int cmd_color_lb(const std::string& kind_s, int k, const std::string& out) {
    Coloring col = lower_bound_coloring(parse_kind(kind_s), k);
    OutputStream os(out);
    write_coloring(os.get(), col);
    return 0;
}

int cmd_check_coloring(const std::string& kind_s, int k, bool construct, const std::string& in) {
    PathKind kind = parse_kind(kind_s);
    Coloring col = construct ? lower_bound_coloring(kind, k) : load_coloring(in);
    PathPattern p = pattern_for(kind);
    std::cout << "n: " << col.vertex_count() << '\n';
    std::cout << "k: " << col.color_count() << '\n';
    std::cout << "pattern: " << p.name << '\n';
    auto hit = monochromatic_embedding(col, p);
    if (hit) {
        std::cout << "monochromatic: yes (color " << hit->first << ")\n";
        print_embedding(std::cout, p, hit->second);
        return 1;
    }
    std::cout << "monochromatic: no\n";
    return 0;
}

int cmd_digraph_stats(const std::string& kind_s, int k, bool construct, const std::string& in,
                      int threshold, const std::string& format, int jobs) {
    PathKind kind = parse_kind(kind_s);
    Coloring col = construct ? lower_bound_coloring(kind, k) : load_coloring(in);
    ColoredMultidigraph m;
    try {
        m = build_multidigraph(col, kind, threshold, jobs);
    } catch (const StructureViolation& e) {
        std::cout << e.what() << '\n';
        return 1;
    }
    PairClassification pc = classify_pairs(m);
    Stats st = compute_stats(m, pc);
    AuditReport rep = audit_identities(m, pc, st);
    if (format == "tsv") {
        write_stats_tsv(std::cout, st);
    } else {
        write_stats_text(std::cout, m, st, rep);
        if (kind == PathKind::Loose) {
            Digraph d = oriented_reduct(m);
            TriangleCrossCheck tc = triangle_cross_check(m, d);
            std::cout << "directed_triangles: " << tc.triangles << (tc.saturated ? "+" : "")
                      << '\n';
            std::cout << "triangle_cross_check: " << (tc.ok() ? "ok" : "FAIL") << '\n';
            if (!tc.ok()) return 1;
        }
    }
    return rep.all_hold() ? 0 : 1;
}

int cmd_extremal(const std::string& pattern_name, int n, long long budget_ms, bool witnesses,
                 bool table, const std::string& format) {
    if (table) {
        auto rows = verify_messy_extremal(n, std::chrono::milliseconds(budget_ms));
        write_messy_extremal_table(std::cout, rows, format == "tsv");
        for (const auto& r : rows)
            if (!r.value_match || !r.families_match) return 1;
        return 0;
    }
    PathPattern p = pattern_from_name(pattern_name);
    ExtremalOptions opt;
    opt.budget = std::chrono::milliseconds(budget_ms);
    opt.collect_witnesses = witnesses;
    ExtremalResult res = extremal_number(p, n, opt);
    std::cout << "pattern: " << p.name << '\n';
    std::cout << "n: " << n << '\n';
    std::cout << "ex: " << res.value << '\n';
    std::cout << "exact: " << (res.exact ? "yes" : "no") << '\n';
    if (witnesses) {
        std::cout << "witnesses: " << res.witnesses.size() << '\n';
        std::set<std::string> classes;
        for (const Hypergraph3& w : res.witnesses) classes.insert(classify_witness(w));
        std::cout << "witness_classes:";
        for (const auto& c : classes) std::cout << ' ' << c;
        std::cout << '\n';
    }
    return res.exact ? 0 : 1;
}

int cmd_ramsey(const std::string& pattern_name, int k, int n, long long budget_ms) {
    PathPattern p = pattern_from_name(pattern_name);
    RamseyOutcome out = ramsey_exhaustive(p, k, n, std::chrono::milliseconds(budget_ms));
    std::cout << "pattern: " << p.name << '\n';
    std::cout << "k: " << k << '\n';
    std::cout << "n: " << n << '\n';
    switch (out.status) {
        case RamseyOutcome::Status::Arrow:
            std::cout << "arrow: yes\n";
            return 0;
        case RamseyOutcome::Status::NoArrow:
            std::cout << "arrow: no\n";
            std::cout << "certificate:\n";
            write_coloring(std::cout, *out.certificate);
            return 0;
        case RamseyOutcome::Status::Unknown:
            std::cout << "arrow: unknown\n";
            return 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-uniform hypergraph path-structure toolkit"};
    app.require_subcommand(1);

    std::string in, out = "-", pattern_name, kind, format = "text", truth;
    int m = 1, threshold = 0, k = 1, n = 0, stars = 0, locked = 0, steiner = 0, jobs = 1;
    std::vector<int> sizes;
    double density = 1.0;
    std::uint64_t seed = 0;
    long long budget_ms = 0;
    bool construct = false, witnesses = false, table = false;

    auto* detect = app.add_subcommand("detect", "find a pattern in a hypergraph");
    detect->add_option("--pattern", pattern_name, "loose|messy|tight|kite|cycle|f5|giraffe|flower:<a>")
        ->required();
    detect->add_option("--in", in, "hypergraph file (default stdin)");

    auto* core = app.add_subcommand("core", "m-core of a hypergraph");
    core->add_option("-m,--min-degree", m, "degree threshold")->required()->check(CLI::PositiveNumber);
    core->add_option("--in", in, "hypergraph file (default stdin)");
    core->add_option("--out", out, "output file (default stdout)");

    auto* decomp = app.add_subcommand("decompose", "structural decomposition of a path-free core");
    decomp->add_option("--kind", kind, "loose|messy")->required();
    decomp->add_option("--in", in, "hypergraph file (default stdin)");
    decomp->add_option("--threshold", threshold, "core threshold override");

    auto* gen = app.add_subcommand("generate", "generate a path-free instance");
    gen->add_option("--kind", kind, "loose|messy")->required();
    gen->add_option("--stars", stars, "number of stars");
    gen->add_option("--size", sizes, "star body sizes (one value is repeated)");
    gen->add_option("--locked-pairs", locked, "locked pairs (loose)");
    gen->add_option("--steiner-vertices", steiner, "Steiner part vertex count (messy)");
    gen->add_option("--density", density, "body pair density in (0,1]");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--threshold", threshold, "core threshold override");
    gen->add_option("--out", out, "output hypergraph file (default stdout)");
    gen->add_option("--truth", truth, "write the ground-truth decomposition report here");

    auto* clb = app.add_subcommand("color-lb", "path-free coloring on k+5 / k+4 vertices");
    clb->add_option("--kind", kind, "loose|messy")->required();
    clb->add_option("--k", k, "number of colors")->required()->check(CLI::PositiveNumber);
    clb->add_option("--out", out, "output coloring file (default stdout)");

    auto* chk = app.add_subcommand("check-coloring", "verify a coloring has no monochromatic path");
    chk->add_option("--kind", kind, "loose|messy")->required();
    chk->add_option("--k", k, "colors (with --construct)");
    chk->add_flag("--construct", construct, "check the built-in construction instead of a file");
    chk->add_option("--in", in, "coloring file (default stdin)");

    auto* ds = app.add_subcommand("digraph-stats", "colored multidigraph statistics and audits");
    ds->add_option("--kind", kind, "loose|messy")->required();
    ds->add_option("--k", k, "colors (with --construct)");
    ds->add_flag("--construct", construct, "analyze the built-in construction");
    ds->add_option("--in", in, "coloring file (default stdin)");
    ds->add_option("--threshold", threshold, "core threshold override");
    ds->add_option("--format", format, "text|tsv");
    ds->add_option("--jobs", jobs, "parallel per-color decompositions")->check(CLI::PositiveNumber);

    auto* ext = app.add_subcommand("extremal", "exact extremal numbers by branch and bound");
    ext->add_option("--pattern", pattern_name, "pattern name");
    ext->add_option("--n", n, "vertex count")->required();
    ext->add_option("--budget-ms", budget_ms, "time budget (0 = none)");
    ext->add_flag("--witnesses", witnesses, "collect and classify extremal families");
    ext->add_flag("--table", table, "verification table for the messy path up to --n");
    ext->add_option("--format", format, "text|tsv");

    auto* ram = app.add_subcommand("ramsey-tiny", "exhaustive arrow decision at tiny scale");
    ram->add_option("--pattern", pattern_name, "pattern name")->required();
    ram->add_option("--k", k, "colors")->required()->check(CLI::PositiveNumber);
    ram->add_option("--n", n, "vertex count")->required();
    ram->add_option("--budget-ms", budget_ms, "time budget (0 = none)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(detect)) return cmd_detect(pattern_name, in);
        if (app.got_subcommand(core)) return cmd_core(m, in, out);
        if (app.got_subcommand(decomp)) {
            try {
                return cmd_decompose(kind, in, threshold);
            } catch (const StructureViolation& e) {
                std::cout << e.what() << '\n';
                return 1;
            }
        }
        if (app.got_subcommand(gen))
            return cmd_generate(kind, stars, sizes, locked, steiner, density, seed, threshold, out,
                                truth);
        if (app.got_subcommand(clb)) return cmd_color_lb(kind, k, out);
        if (app.got_subcommand(chk)) return cmd_check_coloring(kind, k, construct, in);
        if (app.got_subcommand(ds))
            return cmd_digraph_stats(kind, k, construct, in, threshold, format, jobs);
        if (app.got_subcommand(ext))
            return cmd_extremal(pattern_name, n, budget_ms, witnesses, table, format);
        if (app.got_subcommand(ram)) return cmd_ramsey(pattern_name, k, n, budget_ms);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return 2;
}
