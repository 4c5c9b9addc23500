#include "bing/homology.hpp"

#include <stdexcept>

namespace bing {

HomologySummary homology(const TwoComplex& x) {
    auto d2 = chain_complex(x).d2;
    auto factors = invariant_factors(d2);
    const std::size_t r = factors.unit_count + factors.nontrivial.size();

    HomologySummary h;
    h.h1_rank = x.one_cells.size() - r;
    h.h1_torsion = factors.nontrivial;
    h.h2_rank = x.two_cells.size() - r;
    return h;
}

bool rational_acyclicity(const TwoComplex& x) {
    auto h = homology(x);
    return h.h1_rank == 0 && h.h2_rank == 0;
}

namespace {

bigint trace(const IntMatrix& m) {
    bigint t = 0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        t += m.at(i, i);
    return t;
}

}  // namespace

bigint lefschetz_number(const TwoComplex& x, const CellularMapData& f) {
    auto c = chain_complex(x);
    if (!is_chain_map(c, c, f))
        throw std::invalid_argument("lefschetz_number: not a chain self-map of the complex");
    return trace(f.f0) - trace(f.f1) + trace(f.f2);
}

}  // namespace bing
