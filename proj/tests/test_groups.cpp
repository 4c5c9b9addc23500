#include "bing/groups.hpp"

#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <numeric>
#include <sstream>

using namespace bing;

namespace {

// every invariant-factor chain with the given product
void chains_of_order(std::int64_t order, std::vector<std::int64_t> prefix,
                     std::vector<std::vector<std::int64_t>>& out) {
    if (order == 1) {
        out.push_back(prefix);
        return;
    }
    const std::int64_t lo = prefix.empty() ? 2 : prefix.back();
    for (std::int64_t m = lo; m <= order; ++m) {
        if (order % m != 0)
            continue;
        if (!prefix.empty() && m % prefix.back() != 0)
            continue;
        auto next = prefix;
        next.push_back(m);
        chains_of_order(order / m, std::move(next), out);
    }
}

}  // namespace

TEST_CASE("canonicalize_abelian") {
    CHECK(canonicalize_abelian({2, 3}).factors == std::vector<std::int64_t>{6});
    CHECK(canonicalize_abelian({2, 4}).factors == std::vector<std::int64_t>{2, 4});
    CHECK(canonicalize_abelian({4, 6}).factors == std::vector<std::int64_t>{2, 12});
    CHECK(canonicalize_abelian({1, 1}).factors.empty());
    CHECK_THROWS_AS(canonicalize_abelian({0}), std::invalid_argument);
}

TEST_CASE("canonical chains preserve the order and satisfy divisibility") {
    std::vector<std::vector<std::int64_t>> inputs = {
        {6, 10, 15}, {2, 2, 3, 5}, {12, 18}, {7}, {9, 9, 3}};
    for (const auto& orders : inputs) {
        auto g = canonicalize_abelian(orders);
        std::int64_t order_in = 1, order_out = 1;
        for (auto m : orders)
            order_in *= m;
        for (std::size_t i = 0; i < g.factors.size(); ++i) {
            order_out *= g.factors[i];
            CHECK(g.factors[i] >= 2);
            if (i + 1 < g.factors.size())
                CHECK(g.factors[i + 1] % g.factors[i] == 0);
        }
        CHECK(order_in == order_out);
    }
}

TEST_CASE("schur multipliers of abelian groups") {
    CHECK(schur_multiplier_abelian({{7}}).factors.empty());
    CHECK(schur_multiplier_abelian({{2, 2}}).factors == std::vector<std::int64_t>{2});
    CHECK(schur_multiplier_abelian({{2, 4, 4}}).factors ==
          std::vector<std::int64_t>{2, 2, 4});
}

TEST_CASE("schur multiplier agrees with the relation-matrix oracle up to order 64") {
    for (std::int64_t order = 1; order <= 64; ++order) {
        std::vector<std::vector<std::int64_t>> chains;
        chains_of_order(order, {}, chains);
        for (const auto& chain : chains) {
            FiniteAbelianGroup g{chain};
            CHECK(schur_multiplier_abelian(g) == oracle::exterior_square_by_relations(g));
        }
    }
}

TEST_CASE("multiplier invariant factor counts") {
    CHECK(multiplier_invariant_factor_count(GroupSpec::make_abelian({{2, 4}})) == 1);
    CHECK(multiplier_invariant_factor_count(GroupSpec::make_catalog("quaternion")) == 0);
    CHECK(multiplier_invariant_factor_count(GroupSpec::make_abelian({{2, 2, 2}})) == 3);
    CHECK_FALSE(
        multiplier_invariant_factor_count(GroupSpec::make_unknown()).has_value());
    CHECK_FALSE(
        multiplier_invariant_factor_count(GroupSpec::make_catalog("A5")).has_value());
}

TEST_CASE("the abelian multiplier count is n(n-1)/2") {
    std::vector<std::vector<std::int64_t>> chains = {
        {2, 2}, {3, 6}, {2, 4, 8}, {5, 5, 5, 5}};
    for (const auto& chain : chains) {
        auto c = multiplier_invariant_factor_count(GroupSpec::make_abelian({chain}));
        REQUIRE(c.has_value());
        CHECK(*c == chain.size() * (chain.size() - 1) / 2);
    }
}

TEST_CASE("deficiency lower bounds") {
    CHECK(deficiency_lower_bound(GroupSpec::make_abelian({{2, 2}})) == 1);
    CHECK(deficiency_lower_bound(GroupSpec::make_abelian({{9}})) == 0);
    CHECK(deficiency_lower_bound(GroupSpec::make_abelian({{2, 2, 2}})) == 3);
    CHECK_FALSE(deficiency_lower_bound(GroupSpec::make_unknown()).has_value());
}

TEST_CASE("homotopy type counts") {
    CHECK(browning_count({{5, 5}}) == 1);
    CHECK(browning_count({{8, 8, 8}}) == 2);
    CHECK(browning_count({{3, 3}}) == 1);
    CHECK_THROWS_AS(browning_count({{5}}), std::invalid_argument);
}

TEST_CASE("homotopy type count divides the unit group order") {
    std::vector<std::vector<std::int64_t>> chains = {
        {5, 5}, {8, 8, 8}, {3, 3}, {7, 7, 7}, {12, 12}, {16, 16, 16, 16}, {15, 45}};
    for (const auto& chain : chains) {
        FiniteAbelianGroup g{chain};
        std::size_t count = browning_count(g);
        std::size_t phi = 0;
        for (std::int64_t u = 1; u < chain[0]; ++u)
            if (std::gcd(u, chain[0]) == 1)
                ++phi;
        CHECK(count >= 1);
        CHECK(phi % count == 0);
        CHECK(count == oracle::browning_count_by_closure(g));
        auto reps = browning_representatives(g);
        CHECK(reps.size() == count);
        CHECK(reps.front() == 1);
    }
}

TEST_CASE("catalog lookups") {
    CHECK(catalog_lookup("cyclic").trivial_multiplier);
    CHECK(catalog_lookup("quaternion").trivial_multiplier);
    const auto& a5 = catalog_lookup("A5");
    CHECK(a5.covered_by_theorem_5_3);
    CHECK_FALSE(a5.trivial_multiplier);
    CHECK(a5.has_triangle);
    CHECK(a5.triangle == std::array<std::int64_t, 3>{2, 3, 5});
    CHECK_THROWS_AS(catalog_lookup("monster"), std::invalid_argument);
}

TEST_CASE("embedded catalog matches the shipped data file") {
    std::ifstream in(std::string(BING_SOURCE_DIR) + "/data/catalog.json");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(nlohmann::json::parse(buf.str()) == nlohmann::json::parse(catalog_json_text()));
}
