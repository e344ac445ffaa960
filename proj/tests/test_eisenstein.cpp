#include "hypcox/eisenstein.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hypcox;
using namespace hypcox::eisenstein;

TEST_CASE("Eisenstein integer arithmetic")
{
    const auto w = EisensteinInt::omega();
    CHECK(w * w == EisensteinInt(-1, -1));
    CHECK(w * w * w == EisensteinInt(1));
    CHECK(w.conj() == w * w);
    CHECK(EisensteinInt::theta() == w - w.conj());
    CHECK(EisensteinInt::theta().norm() == 3);
    CHECK((EisensteinInt::theta() * EisensteinInt::theta()) == EisensteinInt(-3));
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b) {
            const EisensteinInt z(a, b);
            CHECK(z * z.conj() == EisensteinInt(z.norm()));
            CHECK(z.conj().conj() == z);
        }
    CHECK(to_string(EisensteinInt(2, -1)) == "2-w");
    CHECK(to_string(EisensteinInt(0, 3)) == "3*w");
    CHECK(to_string(EisensteinInt(-5)) == "-5");
}

TEST_CASE("hermitian form on E^{4,1}")
{
    EisensteinVector x(5), y(5);
    x[0] = 1;
    x[1] = EisensteinInt::omega();
    y[0] = 2;
    y[1] = 1;
    CHECK(hermitian_inner(x, x) == EisensteinInt(0));
    CHECK(hermitian_inner(x, y) == EisensteinInt(-2, 1));
    CHECK(hermitian_inner(y, x) == hermitian_inner(x, y).conj());
    CHECK_THROWS_AS(hermitian_inner(EisensteinVector(4), EisensteinVector(4)), std::invalid_argument);
}

TEST_CASE("the five anti-involutions")
{
    const auto chis = anti_involution_classes();
    REQUIRE(chis.size() == 5);
    for (int j = 0; j < 5; ++j) {
        CHECK(chis[static_cast<std::size_t>(j)].minus_count() == j);
        CHECK(chis[static_cast<std::size_t>(j)].is_involution());
    }
    EisensteinVector z{{1, 2}, {0, 1}, {3, 0}, {-1, 1}, {2, 2}};
    for (const auto& chi : chis)
        CHECK(chi.apply(chi.apply(z)) == z);
    CHECK(chis[0].describe() == "chi(z0bar,z1bar,z2bar,z3bar,z4bar)");
}

TEST_CASE("fixed lattice basis spans exactly the fixed vectors coordinatewise")
{
    // Coordinatewise oracle: fixed points of z -> conj(z) are Z, of
    // z -> -conj(z) are Z * theta. Scan a box and compare.
    for (const auto& chi : anti_involution_classes()) {
        const auto basis = fixed_lattice_basis(chi);
        REQUIRE(basis.size() == 5);
        for (std::size_t i = 0; i < 5; ++i) {
            const int e = chi.epsilons()[i];
            const EisensteinInt gen = basis[i][i];
            for (std::size_t k = 0; k < 5; ++k)
                if (k != i)
                    CHECK(basis[i][k] == EisensteinInt(0));
            for (int a = -6; a <= 6; ++a)
                for (int b = -6; b <= 6; ++b) {
                    const EisensteinInt z(a, b);
                    const EisensteinInt image = e == 1 ? z.conj() : -z.conj();
                    // z is a multiple of gen iff gen divides z with integer quotient
                    bool multiple = false;
                    for (int t = -12; t <= 12 && !multiple; ++t)
                        multiple = z == EisensteinInt(t) * gen;
                    CHECK((image == z) == multiple);
                }
        }
    }
}

TEST_CASE("fixed lattice forms are diag(-1, 1.., 3..)")
{
    const auto chis = anti_involution_classes();
    for (int j = 0; j < 5; ++j) {
        const auto q = fixed_lattice_form(chis[static_cast<std::size_t>(j)]);
        IntVector expect{-1, 1, 1, 1, 1};
        for (int i = 0; i < j; ++i)
            expect[4 - static_cast<std::size_t>(i)] = 3;
        CHECK(q.diagonal_entries() == expect);
        CHECK(q.signature() == Signature{4, 1});
        // Gram entries recomputed from the hermitian form directly
        const auto basis = fixed_lattice_basis(chis[static_cast<std::size_t>(j)]);
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = 0; b < 5; ++b) {
                const auto h = hermitian_inner(basis[a], basis[b]);
                CHECK(h.is_rational());
                CHECK(h.a == q.gram()[a][b]);
            }
    }
}

TEST_CASE("non-involutions are rejected")
{
    const AntiInvolution bad({1, 1, 2, 1, 1});
    CHECK_FALSE(bad.is_involution());
    CHECK_THROWS_AS(fixed_lattice_basis(bad), std::invalid_argument);
    CHECK_THROWS_AS(fixed_lattice_form(AntiInvolution({1, 0, 1, 1, 1})), std::invalid_argument);
}
