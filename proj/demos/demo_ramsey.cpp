// Pins down r_2(kite) by exhaustive search and shows the certificate at the
// last non-arrowing size.

#include <iostream>

#include "tripath/coloring.hpp"

int main() {
    using namespace tripath;

    PathPattern kite = pattern(PatternKind::Kite);
    for (int n = 3; n <= 5; ++n) {
        RamseyOutcome out = ramsey_exhaustive(kite, 2, n);
        std::cout << "n = " << n << ": arrow = "
                  << (out.status == RamseyOutcome::Status::Arrow ? "yes" : "no") << '\n';
        if (out.status == RamseyOutcome::Status::Arrow) {
            std::cout << "r_2(kite) = " << n << '\n';
            return 0;
        }
    }
    return 1;
}
