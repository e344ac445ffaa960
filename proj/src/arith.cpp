#include "hypcox/arith.hpp"

#include <regex>
#include <stdexcept>

namespace hypcox {

std::string to_string(const IntVector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

Rational parse_rational(const std::string& text)
{
    static const std::regex re(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw std::invalid_argument("not a rational: '" + text + "'");
    Integer num(m[1].str());
    Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
    if (den == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string decimal_string(const Rational& q, int decimals)
{
    if (decimals < 0)
        throw std::invalid_argument("negative decimal count");
    Integer scale = 1;
    for (int i = 0; i < decimals; ++i)
        scale *= 10;
    // Round half away from zero.
    const Integer num = abs(q.get_num()) * scale * 2 + q.get_den();
    const Integer den = q.get_den() * 2;
    Integer scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::string digits = scaled.get_str();
    if (decimals > 0) {
        if (digits.size() <= static_cast<std::size_t>(decimals))
            digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
    }
    const bool negative = sgn(q) < 0 && scaled != 0;
    return negative ? "-" + digits : digits;
}

}  // namespace hypcox
