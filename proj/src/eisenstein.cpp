#include "hypcox/eisenstein.hpp"

#include <stdexcept>

namespace hypcox::eisenstein {

std::string to_string(const EisensteinInt& z)
{
    if (z.b == 0)
        return z.a.get_str();
    std::string out = z.a == 0 ? "" : z.a.get_str();
    if (z.b < 0)
        out += "-";
    else if (z.a != 0)
        out += "+";
    if (abs(z.b) != 1)
        out += Integer(abs(z.b)).get_str() + "*";
    return out + "w";
}

EisensteinInt hermitian_inner(const EisensteinVector& x, const EisensteinVector& y)
{
    if (x.size() != kLatticeRank || y.size() != kLatticeRank)
        throw std::invalid_argument("hermitian_inner needs vectors of length 5");
    EisensteinInt s = -(x[0] * y[0].conj());
    for (std::size_t i = 1; i < kLatticeRank; ++i)
        s = s + x[i] * y[i].conj();
    return s;
}

int AntiInvolution::minus_count() const
{
    int n = 0;
    for (int e : eps_)
        n += e == -1;
    return n;
}

bool AntiInvolution::is_involution() const
{
    // chi^2(z) = e * conj(e) * z = e^2 z for rational integer e.
    for (int e : eps_)
        if (e != 1 && e != -1)
            return false;
    return true;
}

EisensteinVector AntiInvolution::apply(const EisensteinVector& z) const
{
    if (z.size() != kLatticeRank)
        throw std::invalid_argument("anti-involution acts on vectors of length 5");
    EisensteinVector out(kLatticeRank);
    for (std::size_t i = 0; i < kLatticeRank; ++i)
        out[i] = EisensteinInt(eps_[i]) * z[i].conj();
    return out;
}

std::string AntiInvolution::describe() const
{
    std::string out = "chi(";
    for (std::size_t i = 0; i < kLatticeRank; ++i) {
        out += (i ? "," : "");
        out += eps_[i] < 0 ? "-" : "";
        out += "z" + std::to_string(i) + "bar";
    }
    return out + ")";
}

std::vector<AntiInvolution> anti_involution_classes()
{
    std::vector<AntiInvolution> out;
    for (int j = 0; j <= 4; ++j) {
        std::array<int, kLatticeRank> eps{1, 1, 1, 1, 1};
        for (int i = 0; i < j; ++i)
            eps[kLatticeRank - 1 - i] = -1;
        out.emplace_back(eps);
    }
    return out;
}

std::vector<EisensteinVector> fixed_lattice_basis(const AntiInvolution& chi)
{
    if (!chi.is_involution())
        throw std::invalid_argument("not an involution: " + chi.describe());
    std::vector<EisensteinVector> basis;
    for (std::size_t i = 0; i < kLatticeRank; ++i) {
        EisensteinVector v(kLatticeRank);
        v[i] = chi.epsilons()[i] == 1 ? EisensteinInt(1) : EisensteinInt::theta();
        basis.push_back(std::move(v));
    }
    return basis;
}

QuadraticForm fixed_lattice_form(const AntiInvolution& chi)
{
    const auto basis = fixed_lattice_basis(chi);
    IntMatrix gram(basis.size(), IntVector(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            EisensteinInt h = hermitian_inner(basis[i], basis[j]);
            if (!h.is_rational())
                throw std::logic_error("fixed-lattice Gram entry is not rational");
            gram[i][j] = h.a;
        }
    return QuadraticForm(std::move(gram));
}

}  // namespace hypcox::eisenstein
