#include "montesinos/notation.hpp"

#include <cctype>

namespace montesinos {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }
};

std::string scan_number_token(Cursor& cur, bool allow_slash) {
    cur.skip_space();
    std::size_t begin = cur.pos;
    if (cur.pos < cur.text.size() && (cur.text[cur.pos] == '-' || cur.text[cur.pos] == '+'))
        ++cur.pos;
    bool digits = false;
    while (cur.pos < cur.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        ++cur.pos;
        digits = true;
    }
    if (!digits)
        cur.fail("expected an integer");
    if (allow_slash && cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
        ++cur.pos;
        bool den_digits = false;
        while (cur.pos < cur.text.size() &&
               std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
            ++cur.pos;
            den_digits = true;
        }
        if (!den_digits)
            cur.fail("expected a denominator");
    }
    return cur.text.substr(begin, cur.pos - begin);
}

}  // namespace

MontesinosKnot parse_knot(const std::string& text) {
    Cursor cur{text};
    cur.skip_space();
    if (cur.pos >= text.size())
        cur.fail("empty knot notation");
    char form = text[cur.pos];
    if (form != 'P' && form != 'M')
        cur.fail("expected 'P(...)' or 'M(...)'");
    ++cur.pos;
    if (!cur.eat('('))
        cur.fail("expected '('");

    MontesinosKnot knot;
    while (true) {
        std::size_t entry_pos = cur.pos;
        std::string token = scan_number_token(cur, form == 'M');
        if (form == 'P') {
            BigInt t(token);
            if (abs(t) < 2)
                throw ParseError("pretzel entries need |t| >= 2", entry_pos);
            knot.pretzel_twists.push_back(t);
            knot.tangles.push_back(Tangle{Fraction(BigInt(1), t)});
        } else {
            Fraction slope = Fraction::parse(token);
            if (slope.is_infinite())
                throw ParseError("tangle slope must be finite", entry_pos);
            if (slope.denominator() < 2)
                throw ParseError("tangle denominators must be >= 2 in reduced form",
                                 entry_pos);
            knot.tangles.push_back(Tangle{slope});
        }
        if (cur.eat(','))
            continue;
        if (cur.eat(')'))
            break;
        cur.fail("expected ',' or ')'");
    }
    cur.skip_space();
    if (cur.pos != text.size())
        cur.fail("trailing characters after knot notation");
    if (knot.arity() < 3)
        throw ParseError("a Montesinos knot needs at least three tangles", text.size());
    return knot;
}

}  // namespace montesinos
