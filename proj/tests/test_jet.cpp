#include "ncres/jet.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace ncres;
using namespace ncres::test;

TEST_CASE("jet product truncates polynomial identities")
{
    Jet xn = Jet::variable(VXN);
    Jet p = (Jet::constant(1.0) + xn) * (Jet::constant(1.0) - xn);
    CHECK(p.value() == cplx(1.0));
    CHECK(p.linear(VXN) == cplx(0.0));
    CHECK(p.quad(VXN, VXN) == cplx(-1.0));
}

TEST_CASE("geometric series inverse")
{
    Jet xn = Jet::variable(VXN);
    Jet inv = (Jet::constant(1.0) + xn).inverse();
    CHECK(inv.value() == cplx(1.0));
    CHECK(inv.linear(VXN) == cplx(-1.0));
    CHECK(inv.quad(VXN, VXN) == cplx(1.0));
}

TEST_CASE("derivation is a coefficient shift")
{
    Jet x1 = Jet::variable(VX1);
    Jet x2 = Jet::variable(VX2);
    Jet p = x1 * x2;
    Jet d = p.derive(VX1);
    CHECK(d.value() == cplx(0.0));
    CHECK(d.linear(VX2) == cplx(1.0));
    CHECK(d.linear(VX1) == cplx(0.0));
}

TEST_CASE("ring axioms on random jets")
{
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 1000; ++it) {
        Jet a = rand_jet(rng), b = rand_jet(rng), c = rand_jet(rng);
        Jet lhs = (a * b) * c;
        Jet rhs = a * (b * c);
        CHECK((lhs - rhs).max_abs() < 1e-12);
        Jet dl = a * (b + c);
        Jet dr = a * b + a * c;
        CHECK((dl - dr).max_abs() < 1e-12);
        Jet comm = a * b - b * a;
        CHECK(comm.max_abs() < 1e-13);
    }
}

TEST_CASE("leibniz rule holds exactly on retained orders")
{
    std::mt19937_64 rng(777);
    for (int it = 0; it < 200; ++it) {
        Jet a = rand_jet(rng), b = rand_jet(rng);
        for (Var v : {VX1, VXN, VXI2}) {
            Jet lhs = (a * b).derive(v);
            Jet rhs = a.derive(v) * b + a * b.derive(v);
            // degree-2 coefficients of the derivative are beyond the budget of
            // the truncated product; compare value and linear terms
            CHECK(std::abs(lhs.value() - rhs.value()) < 1e-12);
            for (int w = 0; w < kNumVars; ++w)
                CHECK(std::abs(lhs.linear(Var(w)) - rhs.linear(Var(w))) < 1e-12);
        }
    }
}

TEST_CASE("jet inverse is exact at all retained orders")
{
    std::mt19937_64 rng(99);
    for (int it = 0; it < 200; ++it) {
        Jet a = rand_jet(rng, 1.0, true);
        Jet p = a * a.inverse();
        Jet one = Jet::constant(1.0);
        CHECK((p - one).max_abs() < 1e-12);
    }
}

TEST_CASE("invert twice is the identity on unit-constant jets")
{
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 200; ++it) {
        Jet a = rand_jet(rng, 0.5);
        a.set_coeff(0, 1.0);
        Jet b = a.inverse().inverse();
        CHECK((a - b).max_abs() < 1e-12);
    }
}

TEST_CASE("sqrt squares back")
{
    std::mt19937_64 rng(31);
    for (int it = 0; it < 200; ++it) {
        Jet a = rand_jet(rng, 0.4, true);
        Jet s = a.sqrt();
        CHECK((s * s - a).max_abs() < 1e-12);
    }
}

TEST_CASE("inverting a jet with zero constant term fails")
{
    Jet x = Jet::variable(VX1);
    CHECK_THROWS_AS(x.inverse(), Error);
    try {
        x.inverse();
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonInvertibleJet);
    }
}

TEST_CASE("derivative budget is enforced")
{
    std::mt19937_64 rng(8);
    Jet a = rand_jet(rng);
    Jet d1 = a.derive(VX1);
    Jet d2 = d1.derive(VX2);
    CHECK_THROWS_AS(d2.derive(VX3), Error);
    try {
        d2.derive(VX3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::JetBudgetExceeded);
    }
}

TEST_CASE("finite differences confirm jet derivatives")
{
    std::mt19937_64 rng(555);
    const double h = 1e-5;
    for (int it = 0; it < 50; ++it) {
        Jet a = rand_jet(rng);
        for (Var v : {VX2, VXN, VXI1}) {
            Jet d = a.derive(v);
            std::array<cplx, kNumVars> dp{}, dm{};
            dp[(int)v] = h;
            dm[(int)v] = -h;
            cplx fd = (a.eval(dp) - a.eval(dm)) / (2 * h);
            CHECK(std::abs(fd - d.value()) < 1e-8);
        }
    }
}
