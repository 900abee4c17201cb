#include "ncres/halfline.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <cmath>
#include <functional>

using namespace ncres;
using namespace ncres::test;

namespace {

// Independent residue oracle: numerically integrate h over a circle centered
// at the upper pole. Trapezoid on a closed curve converges spectrally.
cplx contour_residue(const std::function<cplx(cplx)>& h, cplx center, double radius)
{
    const int n = 512;
    cplx acc = 0;
    for (int k = 0; k < n; ++k) {
        double t = 2.0 * M_PI * k / n;
        cplx z = center + radius * cplx(std::cos(t), std::sin(t));
        cplx dz = radius * cplx(-std::sin(t), std::cos(t)) * (2.0 * M_PI / n);
        acc += h(z) * dz;
    }
    return acc / cplx(0.0, 2.0 * M_PI);
}

// Oracle for pi_plus: evaluate the truncated Cauchy integral over a circle
// surrounding the upper pole.
cplx pi_plus_oracle(const std::function<cplx(cplx)>& h, double xi0, cplx pole, double radius)
{
    const int n = 1024;
    cplx acc = 0;
    for (int k = 0; k < n; ++k) {
        double t = 2.0 * M_PI * k / n;
        cplx z = pole + radius * cplx(std::cos(t), std::sin(t));
        cplx dz = radius * cplx(-std::sin(t), std::cos(t)) * (2.0 * M_PI / n);
        acc += h(z) / (cplx(xi0) - z) * dz;
    }
    return acc / cplx(0.0, 2.0 * M_PI);
}

RationalXiN scalar_proper(std::vector<cplx> num, double a_sq, int m)
{
    std::vector<JetMat> n;
    for (cplx c : num) {
        JetMat e(1, 1);
        e(0, 0) = Jet::constant(c);
        n.push_back(e);
    }
    return RationalXiN::proper(std::move(n), Jet::constant(a_sq), m);
}

double simpson_line_integral(const std::function<cplx(double)>& f, double R, int panels,
                             cplx* out_imag_part = nullptr)
{
    // composite Simpson on [-R, R]
    double h = 2 * R / panels;
    cplx acc = f(-R) + f(R);
    for (int i = 1; i < panels; ++i) {
        double x = -R + i * h;
        acc += f(x) * ((i % 2) ? 4.0 : 2.0);
    }
    acc *= h / 3.0;
    if (out_imag_part) *out_imag_part = acc;
    return acc.real();
}

} // namespace

TEST_CASE("pi_plus keeps functions that already extend to the lower half-plane")
{
    // 1/(xin - i) = (xin + i)/(xin^2+1)
    std::vector<cplx> num{cplx(0.0, 1.0), cplx(1.0)};
    RationalXiN r = scalar_proper(num, 1.0, 1);
    RationalXiN p = pi_plus(r);
    for (double x : {0.4, -1.3, 2.2}) {
        cplx expect = 1.0 / (cplx(x) - cplx(0.0, 1.0));
        CHECK(std::abs(p.eval(x)(0, 0).value() - expect) < 1e-12);
    }
}

TEST_CASE("pi_plus annihilates the lower half-plane part")
{
    // 1/(xin + i) = (xin - i)/(xin^2+1)
    std::vector<cplx> num{cplx(0.0, -1.0), cplx(1.0)};
    RationalXiN r = scalar_proper(num, 1.0, 1);
    RationalXiN p = pi_plus(r);
    for (double x : {0.4, -1.3, 2.2}) CHECK(std::abs(p.eval(x)(0, 0).value()) < 1e-13);
}

TEST_CASE("pi_plus of 1/(xin^2+1) matches the residue oracle")
{
    std::vector<cplx> num{cplx(1.0)};
    RationalXiN r = scalar_proper(num, 1.0, 1);
    RationalXiN p = pi_plus(r);
    auto h = [](cplx z) { return 1.0 / (z * z + 1.0); };
    for (double x : {0.7, -0.2, 3.1}) {
        cplx oracle = pi_plus_oracle(h, x, cplx(0.0, 1.0), 0.5);
        cplx engine = p.eval(x)(0, 0).value();
        cplx closed = cplx(0.0, -0.5) / (cplx(x) - cplx(0.0, 1.0));
        CHECK(std::abs(engine - oracle) < 1e-12);
        CHECK(std::abs(engine - closed) < 1e-12);
    }
}

TEST_CASE("pi_prime on the worked examples")
{
    // pi'[1/(xin^2+1)] = 1/2
    RationalXiN r1 = scalar_proper({cplx(1.0)}, 1.0, 1);
    CHECK(std::abs(pi_prime(r1)(0, 0).value() - cplx(0.5)) < 1e-13);

    // pi'[1/(xin - i)] = i
    RationalXiN r2 = scalar_proper({cplx(0.0, 1.0), cplx(1.0)}, 1.0, 1);
    CHECK(std::abs(pi_prime(r2)(0, 0).value() - cplx(0.0, 1.0)) < 1e-13);

    // pi'[1/(xin + i)] = 0
    RationalXiN r3 = scalar_proper({cplx(0.0, -1.0), cplx(1.0)}, 1.0, 1);
    CHECK(std::abs(pi_prime(r3)(0, 0).value()) < 1e-13);
}

TEST_CASE("pi_prime vanishes on the plus part of integrable functions")
{
    std::mt19937_64 rng(9);
    for (int it = 0; it < 20; ++it) {
        int m = 2;
        std::vector<cplx> num;
        for (int k = 0; k <= 2 * m - 2; ++k) num.push_back(rand_cplx(rng));
        RationalXiN r = scalar_proper(num, rand_real(rng, 0.5, 2.0), m);
        RationalXiN plus = pi_plus(r);
        // pi' of the pi_plus part equals pi' of r (all upper residues kept)
        CHECK(std::abs(pi_prime(plus)(0, 0).value() - pi_prime(r)(0, 0).value()) < 1e-11);
        // and pi'(pi_minus) = 0
        RationalXiN minus = r - plus;
        CHECK(std::abs(pi_prime(minus)(0, 0).value()) < 1e-11);
    }
}

TEST_CASE("pi_plus is an idempotent projection and pi_plus + pi_minus = id")
{
    std::mt19937_64 rng(31);
    for (int it = 0; it < 20; ++it) {
        int m = 1 + (int)(rand_real(rng, 0, 2.999));
        std::vector<cplx> num;
        for (int k = 0; k < 2 * m; ++k) num.push_back(rand_cplx(rng));
        RationalXiN r = scalar_proper(num, rand_real(rng, 0.5, 2.0), m);
        RationalXiN plus = pi_plus(r);
        RationalXiN plus2 = pi_plus(plus);
        for (double x : {0.3, -1.1, 2.7}) {
            CHECK(std::abs(plus.eval(x)(0, 0).value() - plus2.eval(x)(0, 0).value()) < 1e-11);
            cplx idval = plus.eval(x)(0, 0).value() + (r - plus).eval(x)(0, 0).value();
            CHECK(std::abs(idval - r.eval(x)(0, 0).value()) < 1e-12);
        }
    }
}

TEST_CASE("pi_plus requires a proper rational")
{
    RationalXiN poly = RationalXiN::from_poly({JetMat::identity(1)});
    CHECK_THROWS_AS(pi_plus(poly), Error);
    try {
        pi_plus(poly);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotProper);
    }
}

TEST_CASE("integrate_line on arctangent-type integrals")
{
    // int 1/(xin^2+1) = pi
    RationalXiN r1 = scalar_proper({cplx(1.0)}, 1.0, 1);
    CHECK(std::abs(integrate_line(r1)(0, 0).value() - cplx(M_PI)) < 1e-13);

    // int 1/(xin^2+1)^2 = pi/2
    RationalXiN r2 = scalar_proper({cplx(1.0)}, 1.0, 2);
    CHECK(std::abs(integrate_line(r2)(0, 0).value() - cplx(M_PI / 2)) < 1e-13);

    // int xin/(xin^2+1) diverges
    RationalXiN r3 = scalar_proper({cplx(0.0), cplx(1.0)}, 1.0, 1);
    CHECK_THROWS_AS(integrate_line(r3), Error);
    try {
        integrate_line(r3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivergentIntegral);
    }
}

TEST_CASE("integrate_line matches truncated quadrature on random integrable rationals")
{
    std::mt19937_64 rng(606);
    int done = 0;
    while (done < 30) {
        int m = 2 + (int)(rand_real(rng, 0, 1.999));
        std::vector<cplx> num;
        for (int k = 0; k <= 2 * m - 4; ++k) num.push_back(rand_cplx(rng));
        double a_sq = rand_real(rng, 0.5, 2.0);
        RationalXiN r = scalar_proper(num, a_sq, m);
        cplx engine = integrate_line(r)(0, 0).value();
        if (std::abs(engine) < 1e-3) continue; // keep the relative comparison meaningful
        auto f = [&](double x) { return r.eval(x)(0, 0).value(); };
        cplx quad;
        simpson_line_integral(f, 1e3, 200000, &quad);
        CHECK(std::abs(engine - quad) / std::abs(engine) < 1e-6);
        ++done;
    }
}

TEST_CASE("residues match the contour oracle on a matrix example")
{
    std::mt19937_64 rng(121);
    CMat m0 = rand_cmat(rng, 2), m1 = rand_cmat(rng, 2);
    std::vector<JetMat> num{JetMat::from_constant(m0), JetMat::from_constant(m1)};
    double a_sq = 1.7;
    RationalXiN r = RationalXiN::proper(num, Jet::constant(a_sq), 1);
    JetMat res = pi_prime(r); // i * residue at +ia
    double a = std::sqrt(a_sq);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto h = [&](cplx z) {
                cplx n = m0(i, j) + m1(i, j) * z;
                return n / (z * z + a_sq);
            };
            cplx oracle = contour_residue(h, cplx(0.0, a), 0.4);
            CHECK(std::abs(res(i, j).value() - cplx(0.0, 1.0) * oracle) < 1e-12);
        }
}
