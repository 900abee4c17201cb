#include "ncres/sphere.hpp"

#include <cmath>

namespace ncres {

namespace {

struct Rule1D {
    std::vector<double> nodes, weights;
};

// Gauss-Legendre on [-1,1] by Newton iteration on P_n.
Rule1D gauss_legendre(int n)
{
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

// Gauss-Chebyshev of the second kind: weight sqrt(1-u^2) on [-1,1].
Rule1D gauss_chebyshev2(int n)
{
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 1; i <= n; ++i) {
        double t = M_PI * i / (n + 1.0);
        r.nodes[i - 1] = std::cos(t);
        r.weights[i - 1] = M_PI / (n + 1.0) * std::sin(t) * std::sin(t);
    }
    return r;
}

void check_degree(int degree_bound)
{
    if (degree_bound < 0 || degree_bound > kMaxQuadratureDegree)
        throw Error(ErrorCode::QuadratureDegree,
                    "degree bound " + std::to_string(degree_bound) + " out of range");
}

} // namespace

std::vector<SphereNode3> sphere2_nodes(int degree_bound)
{
    check_degree(degree_bound);
    const int n_u = degree_bound / 2 + 1;
    const int n_phi = degree_bound + 1;
    Rule1D gu = gauss_legendre(n_u);
    std::vector<SphereNode3> nodes;
    nodes.reserve(n_u * n_phi);
    for (int i = 0; i < n_u; ++i) {
        double u = gu.nodes[i];
        double s = std::sqrt(1.0 - u * u);
        for (int j = 0; j < n_phi; ++j) {
            double phi = 2.0 * M_PI * j / n_phi;
            SphereNode3 node;
            node.xi = {s * std::cos(phi), s * std::sin(phi), u};
            node.weight = gu.weights[i] * (2.0 * M_PI / n_phi);
            nodes.push_back(node);
        }
    }
    return nodes;
}

std::vector<SphereNode4> sphere3_nodes(int degree_bound)
{
    check_degree(degree_bound);
    const int n_u = degree_bound / 2 + 1;
    Rule1D gc = gauss_chebyshev2(n_u);
    std::vector<SphereNode3> inner = sphere2_nodes(degree_bound);
    std::vector<SphereNode4> nodes;
    nodes.reserve(n_u * inner.size());
    for (int i = 0; i < n_u; ++i) {
        double u = gc.nodes[i];
        double s = std::sqrt(1.0 - u * u);
        for (const auto& w : inner) {
            SphereNode4 node;
            node.xi = {s * w.xi[0], s * w.xi[1], s * w.xi[2], u};
            node.weight = gc.weights[i] * w.weight;
            nodes.push_back(node);
        }
    }
    return nodes;
}

cplx sphere_integrate(const std::function<cplx(const std::array<double, 3>&)>& fn,
                      int degree_bound)
{
    cplx acc = 0;
    for (const auto& n : sphere2_nodes(degree_bound)) acc += fn(n.xi) * n.weight;
    return acc;
}

cplx sphere3_integrate(const std::function<cplx(const std::array<double, 4>&)>& fn,
                       int degree_bound)
{
    cplx acc = 0;
    for (const auto& n : sphere3_nodes(degree_bound)) acc += fn(n.xi) * n.weight;
    return acc;
}

double sphere2_measure()
{
    return sphere_integrate([](const std::array<double, 3>&) { return cplx(1.0); }, 0).real();
}

double sphere3_measure()
{
    return sphere3_integrate([](const std::array<double, 4>&) { return cplx(1.0); }, 0).real();
}

} // namespace ncres
