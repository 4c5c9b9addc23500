#pragma once

#include "bing/two_complex.hpp"

#include <vector>

namespace bing {

// Integral homology of a connected single-vertex 2-complex. H2 of a
// 2-complex is the kernel of an integer matrix, hence free.
struct HomologySummary {
    std::size_t h0_rank = 1;
    std::size_t h1_rank = 0;
    std::vector<bigint> h1_torsion;  // divisibility chain, entries > 1
    std::size_t h2_rank = 0;

    bool operator==(const HomologySummary&) const = default;
};

HomologySummary homology(const TwoComplex& x);

// True iff reduced rational homology vanishes (h1_rank = h2_rank = 0).
bool rational_acyclicity(const TwoComplex& x);

// Hopf trace: tr f0 - tr f1 + tr f2 for a chain self-map of x.
// Throws std::invalid_argument unless f is a chain map x -> x.
bigint lefschetz_number(const TwoComplex& x, const CellularMapData& f);

}  // namespace bing
