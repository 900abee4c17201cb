#include "ncres/clifford.hpp"

namespace ncres {

namespace {

CMat pauli(int k)
{
    CMat m(2, 2);
    switch (k) {
        case 1:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 2:
            m(0, 1) = cplx(0.0, -1.0);
            m(1, 0) = cplx(0.0, 1.0);
            break;
        case 3:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default:
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
    }
    return m;
}

int subset_sign(int mask, int i)
{
    // (-1)^{#{j in mask : j < i}}
    int below = mask & ((1 << i) - 1);
    int cnt = 0;
    while (below) {
        cnt += below & 1;
        below >>= 1;
    }
    return (cnt % 2) ? -1 : 1;
}

} // namespace

CliffordRep build_rep(int n, BundleKind kind, int fiber_dim)
{
    if (n != 4) throw Error(ErrorCode::Unsupported, "only tangent dimension 4 is supported");
    if (fiber_dim < 1) throw Error(ErrorCode::BadInput, "fiber dimension must be >= 1");

    CliffordRep rep;
    rep.kind = kind;
    rep.fiber_dim = fiber_dim;

    if (kind == BundleKind::Spin) {
        rep.base_dim = 4;
        CMat id2 = CMat::identity(2);
        // anti-Hermitian generators: i times Hermitian Euclidean gammas
        CMat g1 = kron(pauli(1), id2);
        CMat g2 = kron(pauli(2), id2);
        CMat g3 = kron(pauli(3), pauli(1));
        CMat g4 = kron(pauli(3), pauli(2));
        const cplx i(0.0, 1.0);
        rep.gamma = {g1 * i, g2 * i, g3 * i, g4 * i};
    } else {
        rep.base_dim = 16;
        // basis e_S indexed by the subset bitmask S of {0,1,2,3}
        std::array<CMat, 4> eps, iot;
        for (int d = 0; d < 4; ++d) {
            CMat e(16, 16), io(16, 16);
            for (int s = 0; s < 16; ++s) {
                if (!(s & (1 << d))) {
                    int t = s | (1 << d);
                    e(t, s) = subset_sign(s, d);
                } else {
                    int t = s & ~(1 << d);
                    io(t, s) = subset_sign(t, d);
                }
            }
            eps[d] = e;
            iot[d] = io;
        }
        for (int d = 0; d < 4; ++d) {
            rep.gamma[d] = eps[d] - iot[d];
            rep.gamma_hat[d] = eps[d] + iot[d];
        }
    }
    rep.module_dim = rep.base_dim * fiber_dim;
    return rep;
}

CMat clifford_of_covector(const CliffordRep& rep, const std::array<cplx, 4>& xi, bool hatted)
{
    if (hatted && !rep.has_hat())
        throw Error(ErrorCode::Unsupported, "hatted action requires the exterior bundle");
    CMat acc(rep.base_dim, rep.base_dim);
    for (int i = 0; i < 4; ++i) acc += (hatted ? rep.gamma_hat[i] : rep.gamma[i]) * xi[i];
    return acc;
}

cplx trace(const CliffordRep& rep, const CMat& m)
{
    if (m.rows() != rep.module_dim || m.cols() != rep.module_dim)
        throw Error(ErrorCode::ShapeError, "trace over module of wrong dimension");
    return m.trace();
}

CMat lift_base(const CliffordRep& rep, const CMat& a)
{
    if (rep.fiber_dim == 1) return a;
    return kron(a, CMat::identity(rep.fiber_dim));
}

CMat lift_fiber(const CliffordRep& rep, const CMat& b)
{
    return kron(CMat::identity(rep.base_dim), b);
}

JetMat lift_base(const CliffordRep& rep, const JetMat& a)
{
    if (rep.fiber_dim == 1) return a;
    return kron(a, CMat::identity(rep.fiber_dim));
}

JetMat lift_fiber(const CliffordRep& rep, const JetMat& b)
{
    return kron(CMat::identity(rep.base_dim), b);
}

TwistData TwistData::trivial(int fiber_dim)
{
    TwistData t;
    t.fiber_dim = fiber_dim;
    for (int i = 0; i < 4; ++i) {
        t.phi[i] = CMat(fiber_dim, fiber_dim);
        t.phi_star[i] = CMat(fiber_dim, fiber_dim);
        t.omega_f[i] = CMat(fiber_dim, fiber_dim);
        t.omega_f_star[i] = CMat(fiber_dim, fiber_dim);
        t.sigma_f[i] = JetMat(fiber_dim, fiber_dim);
    }
    t.f = Jet::constant(1.0);
    return t;
}

} // namespace ncres
