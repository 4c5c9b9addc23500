#pragma once

#include "bing/int_matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bing {

// One syllable of a free-group word: generator index with a nonzero exponent.
struct Letter {
    int gen = 0;
    std::int64_t exp = 0;

    bool operator==(const Letter&) const = default;
};

// Freely reduced words keep adjacent letters on distinct generators.
using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);  // freely reduced result
Word power(const Word& w, std::int64_t k);
Word commutator(const Word& x, const Word& y);  // x y x^-1 y^-1, reduced

struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;  // freely reduced

    bool operator==(const Presentation&) const = default;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Grammar: "<" names "|" relators ">"
//   names     : comma-separated identifiers (ASCII letter followed by
//               letters/digits); may be empty
//   relators  : comma-separated words; may be empty
//   word      : juxtaposition of factors
//   factor    : '-' factor | atom [ '^' integer ]
//   atom      : generator | '1' | '[' word ',' word ']'
// '-' and '^-1' both denote inversion; '1' is the identity word; [x,y]
// expands to x y x^-1 y^-1.
// Runs of alphanumerics are split greedily against the declared generator
// names (longest declared name first), so a1a2 parses as a1 a2.
Presentation parse_presentation(const std::string& text);

std::string print_word(const Word& w, const std::vector<std::string>& names);
std::string print_presentation(const Presentation& p);

// Row j holds the exponent sums of relator j; this is the transpose of the
// boundary map d2 of the standard complex.
IntMatrix exponent_sum_matrix(const Presentation& p);

int deficiency(const Presentation& p);

}  // namespace bing
