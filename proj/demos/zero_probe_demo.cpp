// Recovering a prime coefficient difference from zero data alone: the probe
// integral over [T, 2T] applied to two Dirichlet L-functions.

#include <cstdio>

#include "eflab/catalog.hpp"
#include "eflab/comparator.hpp"

int main() {
    using namespace eflab;

    auto F = parse_datum("chi3");
    auto G = parse_datum("chi4");
    auto pair = sinc_product_pair({1.0});

    const double T = 200.0, L = 3.0, W = 4.0;
    auto zF = scan_zeros(F, 2.0 * T + 45.0, 0.01);
    auto zG = scan_zeros(G, 2.0 * T + 45.0, 0.01);
    std::printf("scanned %zu + %zu zeros to %.0f\n", zF.ordinates.size(), zG.ordinates.size(),
                zF.t_max);

    ProbeOptions opts;
    opts.zerosF = &zF;
    opts.zerosG = &zG;
    for (std::uint64_t m : {2u, 3u, 4u, 5u}) {
        opts.zeros_mode = true;
        auto rep = coefficient_probe(F, G, m, T, L, W, 0, pair, opts);
        std::printf("m = %llu  estimate % .6f%+.6fi  target % .6f  rel err %.3f\n",
                    (unsigned long long)m, rep.estimate.real(), rep.estimate.imag(),
                    rep.target.real(), rep.relative_error);
    }
    return 0;
}
