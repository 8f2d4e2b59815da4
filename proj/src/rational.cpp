#include "wg/rational.hpp"

#include "wg/errors.hpp"

#include <cctype>

namespace wg {

Rat parse_rational(const std::string &text) {
    if (text.empty())
        throw ParseError("rational: empty input");
    auto check_digits = [&](size_t from, size_t to, const char *what) {
        if (from >= to)
            throw ParseError(std::string("rational: missing ") + what + " at position " +
                             std::to_string(from));
        for (size_t i = from; i < to; ++i) {
            char c = text[i];
            if (i == from && (c == '+' || c == '-'))
                continue;
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError(std::string("rational: unexpected character '") + c +
                                 "' at position " + std::to_string(i));
        }
    };
    size_t slash = text.find('/');
    if (slash == std::string::npos) {
        check_digits(0, text.size(), "numerator");
        return Rat(Int(text));
    }
    check_digits(0, slash, "numerator");
    check_digits(slash + 1, text.size(), "denominator");
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("rational: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat &value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string int_to_string(const Int &value) { return value.get_str(); }

double rat_to_double(const Rat &value) { return value.get_d(); }

} // namespace wg
