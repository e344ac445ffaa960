#pragma once

#include "hypcox/arith.hpp"
#include "hypcox/coxeter.hpp"

#include <cstdint>
#include <string>

namespace hypcox::covolume {

/// Euler characteristic and Gauss-Bonnet volume of a hyperbolic Coxeter
/// orbifold in even dimension n: volume = coefficient * pi^(n/2).
struct OrbifoldInvariants {
    Rational euler;
    int dimension = 4;
    Rational volume_coefficient;
    /// Decimal value of the volume with kVolumeDigits significant digits.
    std::string volume_numeric;

    /// volume_numeric rounded to `decimals` places after the point.
    std::string volume_fixed(int decimals) const;
    double volume_double() const;
};

constexpr int kVolumeDigits = 40;

/// Sum over elliptic subdiagrams S (the empty one included) of
/// (-1)^|S| / |W_S|.
Rational orbifold_euler_characteristic(const coxeter::CoxeterDiagram& diagram);

/// n = 4: (4 pi^2 / 3) * euler; n = 2: -2 pi * euler.
/// Throws std::invalid_argument for other n.
OrbifoldInvariants hyperbolic_volume(const Rational& euler, int n);

/// Euler characteristic of the extension by diagram automorphisms.
Rational quotient_invariants(const Rational& w_euler, std::int64_t automorphism_order);

/// Decimal expansion of q * pi^power rounded to `decimals` places.
std::string pi_multiple_fixed(const Rational& q, int power, int decimals);

}  // namespace hypcox::covolume
