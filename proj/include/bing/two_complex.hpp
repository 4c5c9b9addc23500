#pragma once

#include "bing/int_matrix.hpp"
#include "bing/presentation.hpp"

#include <string>
#include <vector>

namespace bing {

// Single-vertex CW model: one 0-cell, named 1-cells, 2-cells attached along
// freely reduced words in the 1-cells.
struct TwoCell {
    std::string name;
    Word attaching;

    bool operator==(const TwoCell&) const = default;
};

struct TwoComplex {
    std::vector<std::string> one_cells;
    std::vector<TwoCell> two_cells;

    bool operator==(const TwoComplex&) const = default;
};

// d2 : C2 -> C1 (one_cells x two_cells, column j = exponent vector of the
// attaching word of cell j); d1 : C1 -> C0 is zero for a single vertex.
struct ChainComplexData {
    IntMatrix d1;  // 1 x one_cells, zero
    IntMatrix d2;  // one_cells x two_cells
};

// Chain-level cellular map between single-vertex 2-complexes.
struct CellularMapData {
    IntMatrix f0;  // 1 x 1, [1]
    IntMatrix f1;  // target one_cells x source one_cells
    IntMatrix f2;  // target two_cells x source two_cells
};

TwoComplex standard_complex(const Presentation& p);
ChainComplexData chain_complex(const TwoComplex& x);
int euler_characteristic(const TwoComplex& x);

// One-point union; colliding cell names on the right are renamed by
// appending digits until unique.
TwoComplex wedge(const TwoComplex& x, const TwoComplex& y);

// <a1..an | a1^m1,...,an^mn, [a1^d,a2], [ai,aj] for i<j, (i,j) != (1,2)>.
// Requires m1 | m2 | ... | mn, all >= 2, n >= 2, gcd(d, m1) = 1.
Presentation build_Td(const std::vector<std::int64_t>& invariant_factors, std::int64_t d);

// <a1,a2 | a1^m1, a2^m2, [a1^d,a2]>.
Presentation build_Rd(std::int64_t m1, std::int64_t m2, std::int64_t d);

// Chain data of the cellular retraction K_Td -> K_Rd: a1, a2 and the three
// Rd cells map to themselves, every other cell to zero (its image is
// null-homotopic, which at chain level lands in the zero chain here because
// the killed attaching words have zero exponent vector under f1).
CellularMapData retraction_Td_to_Rd(const std::vector<std::int64_t>& invariant_factors,
                                    std::int64_t d);

// Chain data of the subcomplex inclusion K_Rd -> K_Td.
CellularMapData inclusion_Rd_to_Td(const std::vector<std::int64_t>& invariant_factors,
                                   std::int64_t d);

// <a,b,c | a^l, b^m, c^n, abc>.
Presentation build_triangle(std::int64_t l, std::int64_t m, std::int64_t n);

// Chain data induced by the fixed-point-free self-map of
// K_<a,b | a^m, b^n, [a,b]>: degree 1 on a, -1 on b, so the three 2-cells
// carry degrees 1, -1, -1. Independent of m and n.
CellularMapData r1_selfmap_chain_data();

// d2_target * f2 == f1 * d2_source and f0 == [1].
bool is_chain_map(const ChainComplexData& source, const ChainComplexData& target,
                  const CellularMapData& f);

}  // namespace bing
