#include "hypcox/covolume.hpp"
#include "hypcox/report.hpp"
#include "hypcox/vinberg.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hypcox;

namespace {

QuadraticForm paper_form(int j)
{
    IntVector d{-1, 1, 1, 1, 1};
    for (int i = 0; i < j; ++i)
        d[4 - static_cast<std::size_t>(i)] = 3;
    return QuadraticForm::diagonal(d);
}

}  // namespace

TEST_CASE("diag(-1,1,1) gives the (2,4,inf) triangle")
{
    const auto q = QuadraticForm::diagonal({-1, 1, 1});
    const auto state = run_vinberg(q, {1, 0, 0});
    CHECK(state.complete);
    REQUIRE(state.accepted.size() == 3);
    const auto d = coxeter::build_diagram(state.roots(), q);
    std::multiset<std::string> labels;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            labels.insert(d.bond(i, j).token());
    CHECK(labels == std::multiset<std::string>{"none", "4", "inf"});
    // Gauss-Bonnet with one ideal vertex: area = pi - pi/2 - pi/4
    const Rational expect = Rational(-1, 2) * (Rational(1) - Rational(1, 2) - Rational(1, 4));
    CHECK(covolume::orbifold_euler_characteristic(d) == expect);
}

TEST_CASE("diag(-1,1,1,1) terminates in dimension 3")
{
    const auto q = QuadraticForm::diagonal({-1, 1, 1, 1});
    const auto state = run_vinberg(q, {1, 0, 0, 0});
    CHECK(state.complete);
    CHECK(state.accepted.size() == 4);
    CHECK(state.span_rank() == 4);
    CHECK(coxeter::finite_volume_check(coxeter::build_diagram(state.roots(), q), 3));
}

TEST_CASE("the five forms terminate with valid chambers")
{
    for (int j = 0; j <= 4; ++j) {
        CAPTURE(j);
        const auto q = paper_form(j);
        const auto state = run_vinberg(q, default_controlling_vector(q));
        CHECK(state.complete);
        CHECK(state.span_rank() == 5);
        const auto norms = candidate_root_norms(q);
        Rational last = 0;
        for (std::size_t a = 0; a < state.accepted.size(); ++a) {
            const auto& r = state.accepted[a];
            CHECK(oracle::crystallographic(q.gram(), r.root.vector));
            CHECK(std::find(norms.begin(), norms.end(), r.root.norm) != norms.end());
            CHECK(r.inner_v0 == q.inner(r.root.vector, state.v0));
            CHECK(r.inner_v0 <= 0);
            CHECK(r.height >= last);
            last = r.height;
            for (std::size_t b = 0; b < a; ++b)
                CHECK(q.inner(r.root.vector, state.accepted[b].root.vector) <= 0);
        }
        CHECK(coxeter::finite_volume_check(coxeter::build_diagram(state.roots(), q), 4));
    }
}

TEST_CASE("diag(-1,1,1,1,1) gives the classical five-mirror chamber")
{
    const auto q = paper_form(0);
    const auto state = run_vinberg(q, default_controlling_vector(q));
    std::set<IntVector> got;
    for (const auto& r : state.roots())
        got.insert(r.vector);
    // four simple roots of B4 and one norm-2 root of height 1/2
    CHECK(got.size() == 5);
    int norm_two_at_height_half = 0;
    for (const auto& a : state.accepted)
        norm_two_at_height_half += a.height == Rational(1, 2) && a.root.norm == 2;
    CHECK(norm_two_at_height_half == 1);
}

TEST_CASE("runs are deterministic")
{
    for (int j = 0; j <= 4; ++j) {
        const auto q = paper_form(j);
        const auto a = run_vinberg(q, default_controlling_vector(q));
        const auto b = run_vinberg(q, default_controlling_vector(q));
        CHECK(report::serialize_vinberg(a, report::OutputFormat::Text) ==
              report::serialize_vinberg(b, report::OutputFormat::Text));
        CHECK(report::serialize_vinberg(a, report::OutputFormat::Json) ==
              report::serialize_vinberg(b, report::OutputFormat::Json));
    }
}

TEST_CASE("limits produce an incompleteness error with the partial state")
{
    const auto q = paper_form(3);
    VinbergLimits none;
    none.max_roots = 0;
    CHECK_THROWS_AS(run_vinberg(q, default_controlling_vector(q), none), VinbergIncompleteError);

    VinbergLimits shallow;
    shallow.max_height = Rational(1, 3);
    try {
        run_vinberg(q, default_controlling_vector(q), shallow);
        FAIL("expected VinbergIncompleteError");
    } catch (const VinbergIncompleteError& e) {
        CHECK_FALSE(e.partial().complete);
        CHECK(e.partial().accepted.size() >= 4);
        CHECK(e.partial().frontier <= shallow.max_height);
    }
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(run_vinberg(QuadraticForm::diagonal({-1, -1, 1}), {1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(run_vinberg(QuadraticForm::diagonal({-1, 1, 1}), {0, 1, 0}), std::invalid_argument);
    CHECK(default_controlling_vector(QuadraticForm::diagonal({2, -1, 1})) == IntVector{0, 1, 0});
    CHECK_THROWS_AS(default_controlling_vector(QuadraticForm(IntMatrix{{0, 1}, {1, 0}})), std::invalid_argument);
}

TEST_CASE("reflections in accepted roots preserve the form")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coord(-50, 50);
    for (int j = 0; j <= 4; ++j) {
        const auto q = paper_form(j);
        const auto roots = run_vinberg(q, default_controlling_vector(q)).roots();
        for (int t = 0; t < 200; ++t) {
            IntVector x(5);
            for (auto& c : x)
                c = coord(rng);
            const auto& r = roots[static_cast<std::size_t>(t) % roots.size()];
            CHECK(q.norm(reflect(q, r, x)) == q.norm(x));
        }
    }
}
