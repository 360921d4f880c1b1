// Minimal tour of the library: build a datum, certify its zeros, and verify
// the localized explicit formula at a few centers.

#include <cstdio>

#include "eflab/catalog.hpp"
#include "eflab/explicit_formula.hpp"

int main() {
    using namespace eflab;

    auto zeta = make_zeta();
    auto pair = sinc_product_pair({1.0, 1.0});

    auto zeros = scan_zeros(zeta, 210.0, 0.02);
    std::printf("%s: %zu zeros up to %.0f (complete: %s), first at %.9f\n", zeta.name.c_str(),
                zeros.ordinates.size(), zeros.t_max, zeros.complete ? "yes" : "no",
                zeros.ordinates.front());

    for (double t : {0.0, 20.0, 50.0}) {
        EFParams p;
        p.t = t;
        p.L = 2.0;
        p.zero_height = 200.0;
        auto rep = verify_formula(zeta, zeros, pair, p);
        std::printf("t = %4.1f  zeros % .6f = pole % .6f + arch % .6f - prime % .6f"
                    "   residual %.2e (budget %.2e) %s\n",
                    t, rep.zero_sum_value.real(), rep.pole_term_value.real(),
                    rep.arch_term_value.real(), rep.prime_term_value.real(), rep.residual,
                    rep.budget, rep.pass ? "ok" : "MISMATCH");
    }
    return 0;
}
