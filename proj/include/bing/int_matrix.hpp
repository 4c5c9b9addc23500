#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace bing {

using bigint = boost::multiprecision::cpp_int;

// Dense matrix over Z with arbitrary-precision entries, row-major storage.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<bigint> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<bigint>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bigint& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const bigint& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<bigint>& entries() const { return entries_; }

    IntMatrix transposed() const;
    bool is_zero() const;

    bool operator==(const IntMatrix& other) const = default;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<bigint> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Exact determinant (fraction-free Bareiss elimination). Square input required.
bigint determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dr >= 0,
// zero entries last. Pivot choice is pinned (smallest nonzero absolute value,
// ties broken by lowest row, then lowest column), so the output is
// deterministic for a given input.
struct SmithDecomposition {
    IntMatrix U;  // rows x rows
    IntMatrix D;  // rows x cols, diagonal
    IntMatrix V;  // cols x cols

    std::vector<bigint> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Invariant-factor data of coker(M) read off the Smith diagonal.
struct InvariantFactors {
    std::vector<bigint> nontrivial;  // d_i > 1, in divisibility order
    std::size_t unit_count = 0;      // d_i == 1
    std::size_t zero_cols = 0;       // cols - rank
};

InvariantFactors invariant_factors(const IntMatrix& m);

// Columns freely generate ker(M : Z^cols -> Z^rows).
IntMatrix kernel_basis(const IntMatrix& m);

// Z^rows / im(M) as Z^free_rank + sum Z_{d_i}.
struct CokernelStructure {
    std::size_t free_rank = 0;
    std::vector<bigint> torsion;  // each > 1, divisibility order

    bool operator==(const CokernelStructure&) const = default;
};

CokernelStructure cokernel_structure(const IntMatrix& m);

// True iff the submodule S <= Z^k spanned by the columns of s_generators
// contains an element primitive in Z^k. Equivalent to: the total number of
// invariant factors of Z^k/S (free factors plus nontrivial torsion) is
// strictly below k, i.e. some Smith diagonal entry equals 1.
bool submodule_has_primitive(const IntMatrix& s_generators, std::size_t k);

}  // namespace bing
