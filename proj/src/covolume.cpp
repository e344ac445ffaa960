#include "hypcox/covolume.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <bit>
#include <sstream>
#include <stdexcept>

namespace hypcox::covolume {

namespace {

using Decimal = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<60>>;

Decimal to_decimal(const Rational& q)
{
    return Decimal(q.get_num().get_str()) / Decimal(q.get_den().get_str());
}

Decimal pi_power(int power)
{
    const Decimal pi = boost::math::constants::pi<Decimal>();
    Decimal out = 1;
    for (int i = 0; i < power; ++i)
        out *= pi;
    return out;
}

std::string fixed(const Decimal& x, int decimals)
{
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    if (decimals == 0) {
        // precision 0 means "all digits" to cpp_dec_float
        ss.precision(1);
        ss << boost::multiprecision::round(x);
        const std::string s = ss.str();
        return s.substr(0, s.find('.'));
    }
    ss.precision(decimals);
    ss << x;
    return ss.str();
}

}  // namespace

std::string pi_multiple_fixed(const Rational& q, int power, int decimals)
{
    return fixed(to_decimal(q) * pi_power(power), decimals);
}

std::string OrbifoldInvariants::volume_fixed(int decimals) const
{
    return pi_multiple_fixed(volume_coefficient, dimension / 2, decimals);
}

double OrbifoldInvariants::volume_double() const { return std::stod(volume_numeric); }

Rational orbifold_euler_characteristic(const coxeter::CoxeterDiagram& diagram)
{
    const coxeter::SubdiagramCensus census(diagram);
    Rational chi = 0;
    for (const auto& e : census.elliptic()) {
        const Rational term(1, e.order);
        if (std::popcount(e.mask) % 2)
            chi -= term;
        else
            chi += term;
    }
    chi.canonicalize();
    return chi;
}

OrbifoldInvariants hyperbolic_volume(const Rational& euler, int n)
{
    OrbifoldInvariants inv;
    inv.euler = euler;
    inv.dimension = n;
    if (n == 4)
        inv.volume_coefficient = Rational(4, 3) * euler;
    else if (n == 2)
        inv.volume_coefficient = -2 * euler;
    else
        throw std::invalid_argument("volumes are supported in dimensions 2 and 4, got " + std::to_string(n));
    inv.volume_coefficient.canonicalize();

    std::ostringstream ss;
    ss.setf(std::ios::scientific);
    ss.precision(kVolumeDigits - 1);
    ss << to_decimal(inv.volume_coefficient) * pi_power(n / 2);
    inv.volume_numeric = ss.str();
    return inv;
}

Rational quotient_invariants(const Rational& w_euler, std::int64_t automorphism_order)
{
    if (automorphism_order <= 0)
        throw std::invalid_argument("automorphism order must be positive");
    Rational q = w_euler / Rational(automorphism_order);
    q.canonicalize();
    return q;
}

}  // namespace hypcox::covolume
