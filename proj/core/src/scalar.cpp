#include "ainf/scalar.hpp"

#include "ainf/error.hpp"

#include <cctype>

namespace ainf {

std::string format_scalar(const Scalar& x) {
    Scalar c = x;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw MalformedInput("not a rational literal: '" + std::string(s) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Scalar(parse_integer(text));
    mpz_class num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-')
        throw MalformedInput("denominator must be positive: '" + std::string(text) + "'");
    mpz_class den = parse_integer(den_text);
    if (den == 0) throw MalformedInput("zero denominator: '" + std::string(text) + "'");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace ainf
