#include "lodpois/rational.hpp"

#include <stdexcept>

namespace lodpois {

Rational parse_rational(std::string_view text) {
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    std::string s(text);
    for (char c : s) {
        if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("bad character in rational literal '" + s + "'");
    }
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("unparsable rational literal '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

} // namespace lodpois
