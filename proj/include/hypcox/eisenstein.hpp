#pragma once

#include "hypcox/arith.hpp"
#include "hypcox/forms.hpp"

#include <array>
#include <string>
#include <vector>

namespace hypcox::eisenstein {

/// a + b*w with w = exp(2 pi i / 3), so w^2 = -1 - w and conj(w) = w^2.
struct EisensteinInt {
    Integer a = 0;
    Integer b = 0;

    EisensteinInt() = default;
    EisensteinInt(Integer a_, Integer b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
    EisensteinInt(long a_, long b_ = 0) : a(a_), b(b_) {}

    static EisensteinInt omega() { return {0, 1}; }
    /// w - conj(w) = 1 + 2w, of norm 3.
    static EisensteinInt theta() { return {1, 2}; }

    EisensteinInt conj() const { return {a - b, -b}; }
    Integer norm() const { return a * a - a * b + b * b; }
    bool is_rational() const { return b == 0; }

    friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
    friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y)
    {
        return {x.a + y.a, x.b + y.b};
    }
    friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y)
    {
        return {x.a - y.a, x.b - y.b};
    }
    friend EisensteinInt operator-(const EisensteinInt& x) { return {-x.a, -x.b}; }
    friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y)
    {
        // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
};

std::string to_string(const EisensteinInt& z);

using EisensteinVector = std::vector<EisensteinInt>;

/// h(x, y) = -x0 conj(y0) + x1 conj(y1) + ... + x4 conj(y4) on E^{4,1}.
EisensteinInt hermitian_inner(const EisensteinVector& x, const EisensteinVector& y);

constexpr std::size_t kLatticeRank = 5;

/// z -> (e0 conj(z0), ..., e4 conj(z4)). The representatives used here keep
/// e0 = +1; signs are stored as plain integers so that malformed input can
/// be rejected rather than unrepresentable.
class AntiInvolution {
public:
    explicit AntiInvolution(std::array<int, kLatticeRank> epsilons) : eps_(epsilons) {}

    const std::array<int, kLatticeRank>& epsilons() const { return eps_; }

    /// Number of coordinates with sign -1.
    int minus_count() const;

    /// True iff every sign is +1 or -1.
    bool is_involution() const;

    EisensteinVector apply(const EisensteinVector& z) const;

    std::string describe() const;

private:
    std::array<int, kLatticeRank> eps_;
};

/// chi_0 ... chi_4; chi_j negates the last j coordinates.
std::vector<AntiInvolution> anti_involution_classes();

/// Z-basis of the fixed sublattice {v : chi(v) = v}: e_i where e_i = +1 and
/// theta * e_i where e_i = -1.
std::vector<EisensteinVector> fixed_lattice_basis(const AntiInvolution& chi);

/// Gram matrix of q(v) = h(v, v) on the fixed-lattice basis.
/// Throws std::invalid_argument when chi is not an involution.
QuadraticForm fixed_lattice_form(const AntiInvolution& chi);

}  // namespace hypcox::eisenstein
