#include "bing/json_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace bing {

json bigint_to_json(const bigint& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

bigint bigint_from_json(const json& j) {
    if (j.is_number_integer())
        return bigint(j.get<std::int64_t>());
    if (j.is_string())
        return bigint(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(bigint_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntMatrix matrix_from_json(const json& j) {
    // Accept both the wrapped form and a bare 2-d array.
    if (j.is_array()) {
        const std::size_t rows = j.size();
        const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            if (j.at(i).size() != cols)
                throw std::invalid_argument("ragged matrix rows");
            for (std::size_t c = 0; c < cols; ++c)
                m.at(i, c) = bigint_from_json(j.at(i).at(c));
        }
        return m;
    }
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    IntMatrix m(rows, cols);
    const json& entries = j.at("entries");
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = bigint_from_json(entries.at(i).at(c));
    return m;
}

json word_to_json(const Word& w) {
    json letters = json::array();
    for (const Letter& l : w)
        letters.push_back(json::array({l.gen, l.exp}));
    return letters;
}

Word word_from_json(const json& j) {
    Word w;
    for (const auto& pair : j)
        w.push_back({pair.at(0).get<int>(), pair.at(1).get<std::int64_t>()});
    return free_reduce(w);
}

json complex_to_json(const TwoComplex& x) {
    json cells = json::array();
    for (const TwoCell& c : x.two_cells)
        cells.push_back(json{{"name", c.name},
                             {"word", word_to_json(c.attaching)},
                             {"text", print_word(c.attaching, x.one_cells)}});
    return json{{"one_cells", x.one_cells}, {"two_cells", std::move(cells)}};
}

TwoComplex complex_from_json(const json& j) {
    TwoComplex x;
    x.one_cells = j.at("one_cells").get<std::vector<std::string>>();
    for (const auto& c : j.at("two_cells"))
        x.two_cells.push_back({c.at("name").get<std::string>(), word_from_json(c.at("word"))});
    return x;
}

json cellular_map_to_json(const CellularMapData& f) {
    return json{{"f0", matrix_to_json(f.f0)},
                {"f1", matrix_to_json(f.f1)},
                {"f2", matrix_to_json(f.f2)}};
}

CellularMapData cellular_map_from_json(const json& j) {
    return {matrix_from_json(j.at("f0")), matrix_from_json(j.at("f1")),
            matrix_from_json(j.at("f2"))};
}

json homology_to_json(const HomologySummary& h) {
    json torsion = json::array();
    for (const bigint& t : h.h1_torsion)
        torsion.push_back(bigint_to_json(t));
    return json{{"h0_rank", h.h0_rank},
                {"h1_rank", h.h1_rank},
                {"h1_torsion", std::move(torsion)},
                {"h2_rank", h.h2_rank}};
}

json group_to_json(const FiniteAbelianGroup& g) {
    return json{{"invariant_factors", g.factors}};
}

}  // namespace bing
