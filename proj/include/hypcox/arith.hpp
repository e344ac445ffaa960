#pragma once

// Exact integer and rational vocabulary shared by every module.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hypcox {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<std::vector<Rational>>;

inline Integer dot(const IntVector& x, const IntVector& y)
{
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += x[i] * y[i];
    return s;
}

inline IntVector mat_vec(const IntMatrix& m, const IntVector& x)
{
    IntVector out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i] = dot(m[i], x);
    return out;
}

inline Integer vector_gcd(const IntVector& x)
{
    Integer g = 0;
    for (const auto& c : x)
        g = gcd(g, c);
    return g;
}

inline bool is_primitive(const IntVector& x) { return vector_gcd(x) == 1; }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const IntVector& v);

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Exact fixed-point rendering, rounded half away from zero.
std::string decimal_string(const Rational& q, int decimals);

}  // namespace hypcox
