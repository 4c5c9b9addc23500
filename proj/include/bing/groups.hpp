#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bing {

// Canonical form of a finite abelian group: invariant factors
// m1 | m2 | ... | mn, each >= 2; the empty chain is the trivial group.
struct FiniteAbelianGroup {
    std::vector<std::int64_t> factors;

    std::size_t factor_count() const { return factors.size(); }
    bool operator==(const FiniteAbelianGroup&) const = default;
};

// Invariant-factor chain of the direct sum of cyclic groups of the given
// orders (each >= 1; factors of 1 disappear).
FiniteAbelianGroup canonicalize_abelian(const std::vector<std::int64_t>& cyclic_orders);

// H2 of a finite abelian group: the exterior square, i.e. the direct sum of
// Z_gcd(mi,mj) over i < j, in canonical form.
FiniteAbelianGroup schur_multiplier_abelian(const FiniteAbelianGroup& g);

// User-declared identity of the fundamental group.
struct GroupSpec {
    enum class Kind { Abelian, Catalog, Unknown };
    Kind kind = Kind::Unknown;
    FiniteAbelianGroup abelian;  // Kind::Abelian
    std::string catalog_name;    // Kind::Catalog

    static GroupSpec make_abelian(FiniteAbelianGroup g) {
        return {Kind::Abelian, std::move(g), {}};
    }
    static GroupSpec make_catalog(std::string name) {
        return {Kind::Catalog, {}, std::move(name)};
    }
    static GroupSpec make_unknown() { return {}; }
};

// Number of invariant factors of H2(G); nullopt when not determined by the
// declared identity.
std::optional<std::size_t> multiplier_invariant_factor_count(const GroupSpec& spec);

// def(G) >= number of invariant factors of H2(G), valid when H1(G) is finite.
std::optional<int> deficiency_lower_bound(const GroupSpec& spec);

// |Z*_{m1} / +-(Z*_{m1})^(n-1)|: the number of homotopy types of minimal
// 2-complexes with this fundamental group. Requires n >= 2 (the n = 1 power
// (Z*)^0 is not defined by the counting formula).
std::size_t browning_count(const FiniteAbelianGroup& g);

// Smallest member of each coset of +-(Z*_{m1})^(n-1) in Z*_{m1}, ascending.
std::vector<std::int64_t> browning_representatives(const FiniteAbelianGroup& g);

struct CatalogEntry {
    std::string name;
    std::string family;
    bool trivial_multiplier = false;
    bool covered_by_theorem_5_3 = false;
    bool has_triangle = false;
    std::array<std::int64_t, 3> triangle{0, 0, 0};  // 0 marks a free parameter
    std::string citation;
};

// Throws std::invalid_argument for unknown names.
const CatalogEntry& catalog_lookup(const std::string& name);
const std::vector<CatalogEntry>& catalog_entries();

// The raw catalog JSON compiled into the library (mirrors data/catalog.json).
const char* catalog_json_text();

}  // namespace bing
