#include "wmhh/scalar.hpp"

#include <cctype>

namespace wmhh {

std::string to_string(const Scalar& s) {
    return s.str();
}

namespace {

bool valid_integer_literal(const std::string& t) {
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer_literal(num) || !valid_integer_literal(den))
        throw ParseError("bad rational literal: '" + text + "'");
    BigInt p(num), q(den);
    if (q == 0) throw ParseError("bad rational literal (zero denominator): '" + text + "'");
    return Scalar(p, q);
}

}  // namespace wmhh
