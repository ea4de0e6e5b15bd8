// Generates a loose-path-free instance, decomposes it, and prints the report.

#include <iostream>

#include "tripath/structure.hpp"

int main() {
    using namespace tripath;

    GeneratorParams p;
    p.num_stars = 3;
    p.star_sizes = {28, 34, 30};
    p.star_density = 0.97;
    p.seed = 7;

    auto [h, truth] = generate_loose_free(p);
    std::cout << "generated " << h.triple_count() << " triples on " << h.vertex_count()
              << " vertices\n\n";

    LooseDecomposition d = decompose_loose(h);
    write_report(std::cout, d);

    VerifyReport rep = verify_decomposition(d, &h);
    std::cout << "\nverify: " << (rep.ok ? "ok" : rep.violation) << '\n';
    return rep.ok ? 0 : 1;
}
