#include "bing/two_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bing {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace

TwoComplex standard_complex(const Presentation& p) {
    TwoComplex x;
    x.one_cells = p.generator_names;
    std::set<std::string> used;
    for (const Word& r : p.relators) {
        std::string base = print_word(r, p.generator_names);
        std::string name = base;
        for (int k = 2; used.count(name); ++k)
            name = base + "#" + std::to_string(k);
        used.insert(name);
        x.two_cells.push_back({name, r});
    }
    return x;
}

ChainComplexData chain_complex(const TwoComplex& x) {
    ChainComplexData c;
    c.d1 = IntMatrix(1, x.one_cells.size());
    c.d2 = IntMatrix(x.one_cells.size(), x.two_cells.size());
    for (std::size_t j = 0; j < x.two_cells.size(); ++j)
        for (const Letter& l : x.two_cells[j].attaching)
            c.d2.at(static_cast<std::size_t>(l.gen), j) += l.exp;
    return c;
}

int euler_characteristic(const TwoComplex& x) {
    return 1 - static_cast<int>(x.one_cells.size()) + static_cast<int>(x.two_cells.size());
}

TwoComplex wedge(const TwoComplex& x, const TwoComplex& y) {
    TwoComplex out = x;
    std::set<std::string> used_one(x.one_cells.begin(), x.one_cells.end());

    const int offset = static_cast<int>(x.one_cells.size());
    for (const std::string& cell : y.one_cells) {
        std::string name = cell;
        for (int k = 2; used_one.count(name); ++k)
            name = cell + std::to_string(k);
        used_one.insert(name);
        out.one_cells.push_back(name);
    }

    std::set<std::string> used_two;
    for (const TwoCell& c : x.two_cells)
        used_two.insert(c.name);
    for (const TwoCell& c : y.two_cells) {
        std::string name = c.name;
        for (int k = 2; used_two.count(name); ++k)
            name = c.name + std::to_string(k);
        used_two.insert(name);
        Word shifted = c.attaching;
        for (Letter& l : shifted)
            l.gen += offset;
        out.two_cells.push_back({name, shifted});
    }
    return out;
}

namespace {

void check_td_inputs(const std::vector<std::int64_t>& ms, std::int64_t d) {
    if (ms.size() < 2)
        throw std::invalid_argument("T_d requires at least two invariant factors");
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (ms[i] < 2)
            throw std::invalid_argument("invariant factors must be >= 2");
        if (i + 1 < ms.size() && ms[i + 1] % ms[i] != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
    if (gcd64(d, ms[0]) != 1)
        throw std::invalid_argument("d must be coprime to m1");
}

}  // namespace

Presentation build_Td(const std::vector<std::int64_t>& ms, std::int64_t d) {
    check_td_inputs(ms, d);
    const int n = static_cast<int>(ms.size());
    Presentation p;
    for (int i = 1; i <= n; ++i)
        p.generator_names.push_back("a" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        p.relators.push_back({Letter{i, ms[static_cast<std::size_t>(i)]}});
    p.relators.push_back(commutator({Letter{0, d}}, {Letter{1, 1}}));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (i == 0 && j == 1)
                continue;
            p.relators.push_back(commutator({Letter{i, 1}}, {Letter{j, 1}}));
        }
    return p;
}

Presentation build_Rd(std::int64_t m1, std::int64_t m2, std::int64_t d) {
    // Unlike T_d, the two-generator family is defined for any orders >= 2.
    if (m1 < 2 || m2 < 2)
        throw std::invalid_argument("generator orders must be >= 2");
    if (gcd64(d, m1) != 1)
        throw std::invalid_argument("d must be coprime to m1");
    Presentation p;
    p.generator_names = {"a1", "a2"};
    p.relators = {{Letter{0, m1}}, {Letter{1, m2}}, commutator({Letter{0, d}}, {Letter{1, 1}})};
    return p;
}

CellularMapData retraction_Td_to_Rd(const std::vector<std::int64_t>& ms, std::int64_t d) {
    check_td_inputs(ms, d);
    const std::size_t n = ms.size();
    const std::size_t td_cells = n + n * (n - 1) / 2;

    CellularMapData r;
    r.f0 = IntMatrix::identity(1);
    r.f1 = IntMatrix(2, n);
    r.f1.at(0, 0) = 1;
    r.f1.at(1, 1) = 1;
    // Td relator order: a1^m1 .. an^mn, [a1^d,a2], then the other [ai,aj].
    r.f2 = IntMatrix(3, td_cells);
    r.f2.at(0, 0) = 1;
    r.f2.at(1, 1) = 1;
    r.f2.at(2, n) = 1;
    return r;
}

CellularMapData inclusion_Rd_to_Td(const std::vector<std::int64_t>& ms, std::int64_t d) {
    check_td_inputs(ms, d);
    const std::size_t n = ms.size();
    const std::size_t td_cells = n + n * (n - 1) / 2;

    CellularMapData i;
    i.f0 = IntMatrix::identity(1);
    i.f1 = IntMatrix(n, 2);
    i.f1.at(0, 0) = 1;
    i.f1.at(1, 1) = 1;
    i.f2 = IntMatrix(td_cells, 3);
    i.f2.at(0, 0) = 1;
    i.f2.at(1, 1) = 1;
    i.f2.at(n, 2) = 1;
    return i;
}

Presentation build_triangle(std::int64_t l, std::int64_t m, std::int64_t n) {
    if (l < 2 || m < 2 || n < 2)
        throw std::invalid_argument("triangle presentation requires degrees >= 2");
    Presentation p;
    p.generator_names = {"a", "b", "c"};
    p.relators = {{Letter{0, l}},
                  {Letter{1, m}},
                  {Letter{2, n}},
                  {Letter{0, 1}, Letter{1, 1}, Letter{2, 1}}};
    return p;
}

CellularMapData r1_selfmap_chain_data() {
    CellularMapData f;
    f.f0 = IntMatrix::identity(1);
    f.f1 = IntMatrix(2, 2);
    f.f1.at(0, 0) = 1;
    f.f1.at(1, 1) = -1;
    f.f2 = IntMatrix(3, 3);
    f.f2.at(0, 0) = 1;
    f.f2.at(1, 1) = -1;
    f.f2.at(2, 2) = -1;
    return f;
}

bool is_chain_map(const ChainComplexData& source, const ChainComplexData& target,
                  const CellularMapData& f) {
    if (f.f0.rows() != 1 || f.f0.cols() != 1 || f.f0.at(0, 0) != 1)
        return false;
    if (f.f1.rows() != target.d2.rows() || f.f1.cols() != source.d2.rows())
        return false;
    if (f.f2.rows() != target.d2.cols() || f.f2.cols() != source.d2.cols())
        return false;
    return target.d2 * f.f2 == f.f1 * source.d2;
}

}  // namespace bing
