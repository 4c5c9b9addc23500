#include "bing/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bing {

Word free_reduce(const Word& w) {
    Word out;
    for (const Letter& l : w) {
        if (l.exp == 0)
            continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            if (out.back().exp == 0)
                out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->gen, -it->exp});
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

Word power(const Word& w, std::int64_t k) {
    if (k == 0)
        return {};
    if (w.size() == 1)
        return {Letter{w[0].gen, w[0].exp * k}};
    Word base = k > 0 ? w : inverse(w);
    std::int64_t reps = k > 0 ? k : -k;
    Word out;
    for (std::int64_t i = 0; i < reps; ++i)
        out.insert(out.end(), base.begin(), base.end());
    return free_reduce(out);
}

Word commutator(const Word& x, const Word& y) {
    Word out = x;
    out.insert(out.end(), y.begin(), y.end());
    Word xi = inverse(x), yi = inverse(y);
    out.insert(out.end(), xi.begin(), xi.end());
    out.insert(out.end(), yi.begin(), yi.end());
    return free_reduce(out);
}

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c));
}
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c));
}

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    Presentation run() {
        skip_ws();
        expect('<');
        parse_names();
        expect('|');
        parse_relators();
        expect('>');
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing input after '>'");
        return std::move(result_);
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
    Presentation result_;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void parse_names() {
        if (peek() == '|')
            return;  // empty generator list
        for (;;) {
            skip_ws();
            std::size_t start = pos_;
            if (pos_ >= text_.size() || !is_ident_start(text_[pos_]))
                fail("empty or malformed generator name");
            while (pos_ < text_.size() && is_ident_char(text_[pos_]))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (std::find(result_.generator_names.begin(), result_.generator_names.end(), name) !=
                result_.generator_names.end())
                fail("duplicate generator name '" + name + "'");
            result_.generator_names.push_back(name);
            if (!accept(','))
                break;
        }
    }

    void parse_relators() {
        if (peek() == '>')
            return;  // empty relator list
        for (;;) {
            result_.relators.push_back(free_reduce(parse_word()));
            if (!accept(','))
                break;
        }
    }

    bool at_word_end() {
        char c = peek();
        return c == ',' || c == '>' || c == ']' || c == '\0';
    }

    Word parse_word() {
        Word out;
        if (at_word_end())
            fail("empty word");
        while (!at_word_end()) {
            Word f = parse_factor();
            out.insert(out.end(), f.begin(), f.end());
        }
        return out;
    }

    Word parse_factor() {
        if (accept('-'))
            return inverse(parse_factor());
        Word atom = parse_atom();
        if (accept('^'))
            return power(atom, parse_int());
        return atom;
    }

    Word parse_atom() {
        char c = peek();
        if (c == '1') {  // identity word
            ++pos_;
            return {};
        }
        if (c == '[') {
            ++pos_;
            Word x = parse_word();
            expect(',');
            Word y = parse_word();
            expect(']');
            return commutator(x, y);
        }
        if (!is_ident_start(c))
            fail("expected generator or '['");
        // Greedy split of an alphanumeric run against the declared names.
        std::size_t start = pos_;
        std::size_t end = pos_;
        while (end < text_.size() && is_ident_char(text_[end]))
            ++end;
        int gen = longest_name_at(start, end);
        if (gen < 0)
            fail("unknown generator name");
        pos_ = start + result_.generator_names[gen].size();
        return {Letter{gen, 1}};
    }

    int longest_name_at(std::size_t start, std::size_t run_end) {
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t g = 0; g < result_.generator_names.size(); ++g) {
            const std::string& n = result_.generator_names[g];
            if (n.size() > run_end - start || n.size() <= best_len)
                continue;
            if (text_.compare(start, n.size(), n) == 0) {
                best = static_cast<int>(g);
                best_len = n.size();
            }
        }
        return best;
    }

    std::int64_t parse_int() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer exponent");
        std::int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000)
                throw ParseError("exponent too large", start);
            ++pos_;
        }
        return neg ? -value : value;
    }
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
    return Parser(text).run();
}

std::string print_word(const Word& w, const std::vector<std::string>& names) {
    if (w.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : w) {
        if (!first)
            os << ' ';
        first = false;
        os << names.at(static_cast<std::size_t>(l.gen));
        if (l.exp != 1)
            os << '^' << l.exp;
    }
    return os.str();
}

std::string print_presentation(const Presentation& p) {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < p.generator_names.size(); ++i)
        os << (i ? "," : "") << p.generator_names[i];
    os << " | ";
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        os << (j ? ", " : "") << print_word(p.relators[j], p.generator_names);
    os << '>';
    return os.str();
}

IntMatrix exponent_sum_matrix(const Presentation& p) {
    IntMatrix m(p.relators.size(), p.generator_names.size());
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        for (const Letter& l : p.relators[j])
            m.at(j, static_cast<std::size_t>(l.gen)) += l.exp;
    return m;
}

int deficiency(const Presentation& p) {
    return static_cast<int>(p.relators.size()) - static_cast<int>(p.generator_names.size());
}

}  // namespace bing
