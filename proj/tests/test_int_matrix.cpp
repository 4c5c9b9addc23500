#include "bing/int_matrix.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace bing;

namespace {

IntMatrix from_rows(std::vector<std::vector<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = rows[i][j];
    return m;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, int entry_bound) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-entry_bound, entry_bound);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) = entry(rng);
    return m;
}

void check_snf_contract(const IntMatrix& m) {
    auto snf = smith_normal_form(m);
    CHECK(snf.U * m * snf.V == snf.D);
    bigint du = determinant(snf.U);
    bigint dv = determinant(snf.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    auto diag = snf.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (i + 1 < diag.size() && diag[i + 1] != 0)
            CHECK(diag[i + 1] % diag[i] == 0);
        if (diag[i] == 0 && i + 1 < diag.size())
            CHECK(diag[i + 1] == 0);
    }
    // off-diagonal must vanish
    for (std::size_t i = 0; i < snf.D.rows(); ++i)
        for (std::size_t j = 0; j < snf.D.cols(); ++j)
            if (i != j)
                CHECK(snf.D.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form on the stated examples") {
    auto snf = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    CHECK(snf.diagonal() == std::vector<bigint>{1, 6});

    auto zero = smith_normal_form(IntMatrix(2, 2));
    CHECK(zero.diagonal() == std::vector<bigint>{0, 0});

    auto tall = smith_normal_form(from_rows({{2, 0}, {0, 3}, {0, 0}}));
    CHECK(tall.diagonal() == std::vector<bigint>{1, 6});
}

TEST_CASE("smith normal form is deterministic") {
    std::mt19937 rng(7);
    for (int i = 0; i < 25; ++i) {
        IntMatrix m = random_matrix(rng, 4, 10);
        auto a = smith_normal_form(m);
        auto b = smith_normal_form(m);
        CHECK(a.U == b.U);
        CHECK(a.D == b.D);
        CHECK(a.V == b.V);
    }
}

TEST_CASE("smith normal form satisfies its contract on random matrices") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i)
        check_snf_contract(random_matrix(rng, 4, 10));
}

TEST_CASE("invariant factors match the minor-gcd oracle") {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        IntMatrix m = random_matrix(rng, 4, 10);
        CHECK(smith_normal_form(m).diagonal() == oracle::minor_gcd_diagonal(m));
    }
}

TEST_CASE("invariant factor reporting") {
    auto f = invariant_factors(from_rows({{2, 0}, {0, 4}}));
    CHECK(f.nontrivial == std::vector<bigint>{2, 4});
    CHECK(f.unit_count == 0);
    CHECK(f.zero_cols == 0);

    f = invariant_factors(from_rows({{4, 0}, {0, 6}}));
    CHECK(f.nontrivial == std::vector<bigint>{2, 12});

    f = invariant_factors(from_rows({{1}}));
    CHECK(f.nontrivial.empty());
    CHECK(f.unit_count == 1);
    CHECK(f.zero_cols == 0);
}

TEST_CASE("kernel basis") {
    auto k = kernel_basis(from_rows({{3, 0, 0}, {0, 5, 0}}));
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == 0);
    CHECK(k.at(1, 0) == 0);
    CHECK((k.at(2, 0) == 1 || k.at(2, 0) == -1));

    CHECK(kernel_basis(IntMatrix::identity(2)).cols() == 0);

    auto k2 = kernel_basis(from_rows({{1, 1}}));
    REQUIRE(k2.cols() == 1);
    CHECK(k2.at(0, 0) + k2.at(1, 0) == 0);
    CHECK(k2.at(0, 0) != 0);
}

TEST_CASE("kernel columns are exact solutions and independent") {
    std::mt19937 rng(17);
    for (int i = 0; i < 100; ++i) {
        IntMatrix m = random_matrix(rng, 4, 8);
        IntMatrix k = kernel_basis(m);
        IntMatrix prod = m * k;
        CHECK(prod.is_zero());
        CHECK(rank(k) == k.cols());
        CHECK(k.cols() == m.cols() - rank(m));
    }
}

TEST_CASE("cokernel structure") {
    auto c = cokernel_structure(from_rows({{2, 0}, {0, 3}}));
    CHECK(c.free_rank == 0);
    CHECK(c.torsion == std::vector<bigint>{6});

    c = cokernel_structure(IntMatrix(2, 0));
    CHECK(c.free_rank == 2);
    CHECK(c.torsion.empty());

    c = cokernel_structure(from_rows({{2}, {2}}));
    CHECK(c.free_rank == 1);
    CHECK(c.torsion == std::vector<bigint>{2});
}

TEST_CASE("primitive-element criterion examples") {
    CHECK(submodule_has_primitive(from_rows({{2, 0}, {0, 3}}), 2));
    CHECK_FALSE(submodule_has_primitive(from_rows({{2}}), 1));
    CHECK_FALSE(submodule_has_primitive(from_rows({{2}, {2}}), 2));
}

TEST_CASE("primitive-element criterion agrees with exhaustive search") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<std::size_t> kdist(1, 3);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int i = 0; i < 100; ++i) {
        const std::size_t k = kdist(rng);
        const std::size_t gens = kdist(rng);
        IntMatrix s(k, gens);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < gens; ++c)
                s.at(r, c) = entry(rng);
        CHECK(submodule_has_primitive(s, k) == oracle::brute_force_has_primitive(s, 6));
    }
}

TEST_CASE("large entries stay exact") {
    // Entries overflow 64-bit arithmetic during elimination unless the
    // matrix algebra is arbitrary precision.
    IntMatrix m = from_rows({{1000000007LL, 999999937LL},
                             {998244353LL, 1000000021LL}});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            m.at(i, j) *= bigint("1000000000000");
    check_snf_contract(m);
}
