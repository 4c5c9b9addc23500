#include "bing/groups.hpp"

#include "bing/int_matrix.hpp"
#include "catalog_data.hpp"

#include <json.hpp>

#include <numeric>
#include <stdexcept>

namespace bing {

FiniteAbelianGroup canonicalize_abelian(const std::vector<std::int64_t>& cyclic_orders) {
    std::vector<bigint> diag;
    for (std::int64_t m : cyclic_orders) {
        if (m < 1)
            throw std::invalid_argument("cyclic orders must be >= 1");
        diag.emplace_back(m);
    }
    FiniteAbelianGroup g;
    for (const bigint& f : invariant_factors(IntMatrix::diagonal(diag)).nontrivial)
        g.factors.push_back(f.convert_to<std::int64_t>());
    return g;
}

FiniteAbelianGroup schur_multiplier_abelian(const FiniteAbelianGroup& g) {
    std::vector<std::int64_t> gcds;
    for (std::size_t i = 0; i < g.factors.size(); ++i)
        for (std::size_t j = i + 1; j < g.factors.size(); ++j)
            gcds.push_back(std::gcd(g.factors[i], g.factors[j]));
    return canonicalize_abelian(gcds);
}

std::optional<std::size_t> multiplier_invariant_factor_count(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::Abelian:
            return schur_multiplier_abelian(spec.abelian).factor_count();
        case GroupSpec::Kind::Catalog: {
            const CatalogEntry& e = catalog_lookup(spec.catalog_name);
            if (e.trivial_multiplier)
                return 0;
            return std::nullopt;
        }
        case GroupSpec::Kind::Unknown:
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<int> deficiency_lower_bound(const GroupSpec& spec) {
    auto c = multiplier_invariant_factor_count(spec);
    if (!c)
        return std::nullopt;
    return static_cast<int>(*c);
}

namespace {

std::vector<std::int64_t> units_mod(std::int64_t m) {
    std::vector<std::int64_t> units;
    for (std::int64_t u = 1; u < m; ++u)
        if (std::gcd(u, m) == 1)
            units.push_back(u);
    return units;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t r = 1 % mod;
    base %= mod;
    for (; exp > 0; exp >>= 1) {
        if (exp & 1)
            r = r * base % mod;
        base = base * base % mod;
    }
    return r;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = i;
    }
    std::size_t find(std::size_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    }
    void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Partition Z*_{m1} by u ~ s * u * w^(n-1)  (s = +-1, w a unit).
std::vector<std::vector<std::int64_t>> browning_classes(const FiniteAbelianGroup& g) {
    if (g.factor_count() < 2)
        throw std::invalid_argument("homotopy-type count requires at least two invariant factors");
    const std::int64_t m1 = g.factors.front();
    auto units = units_mod(m1);
    std::vector<std::size_t> index_of(static_cast<std::size_t>(m1), 0);
    for (std::size_t i = 0; i < units.size(); ++i)
        index_of[static_cast<std::size_t>(units[i])] = i;

    const std::int64_t e = static_cast<std::int64_t>(g.factor_count()) - 1;
    UnionFind uf(units.size());
    for (std::size_t i = 0; i < units.size(); ++i) {
        uf.join(i, index_of[static_cast<std::size_t>((m1 - units[i]) % m1)]);
        for (std::int64_t w : units) {
            std::int64_t v = units[i] * pow_mod(w, e, m1) % m1;
            uf.join(i, index_of[static_cast<std::size_t>(v)]);
        }
    }

    std::vector<std::vector<std::int64_t>> classes;
    std::vector<std::ptrdiff_t> class_of_root(units.size(), -1);
    for (std::size_t i = 0; i < units.size(); ++i) {
        std::size_t r = uf.find(i);
        if (class_of_root[r] < 0) {
            class_of_root[r] = static_cast<std::ptrdiff_t>(classes.size());
            classes.emplace_back();
        }
        classes[static_cast<std::size_t>(class_of_root[r])].push_back(units[i]);
    }
    return classes;
}

}  // namespace

std::size_t browning_count(const FiniteAbelianGroup& g) {
    return browning_classes(g).size();
}

std::vector<std::int64_t> browning_representatives(const FiniteAbelianGroup& g) {
    std::vector<std::int64_t> reps;
    for (const auto& cls : browning_classes(g))
        reps.push_back(cls.front());  // units enumerated ascending
    return reps;
}

namespace {

std::vector<CatalogEntry> load_catalog() {
    auto doc = nlohmann::json::parse(detail::kCatalogJson);
    std::vector<CatalogEntry> entries;
    for (const auto& row : doc.at("entries")) {
        CatalogEntry e;
        e.name = row.at("name").get<std::string>();
        e.family = row.at("family").get<std::string>();
        e.trivial_multiplier = row.at("trivial_multiplier").get<bool>();
        e.covered_by_theorem_5_3 = row.at("covered_by_theorem_5_3").get<bool>();
        e.citation = row.at("citation").get<std::string>();
        if (row.contains("triangle")) {
            e.has_triangle = true;
            for (std::size_t i = 0; i < 3; ++i)
                e.triangle[i] = row.at("triangle").at(i).get<std::int64_t>();
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = load_catalog();
    return entries;
}

const CatalogEntry& catalog_lookup(const std::string& name) {
    for (const CatalogEntry& e : catalog_entries())
        if (e.name == name)
            return e;
    throw std::invalid_argument("unknown catalog group '" + name + "'");
}

const char* catalog_json_text() {
    return detail::kCatalogJson;
}

}  // namespace bing
