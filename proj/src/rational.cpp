#include "ncres/rational.hpp"

#include <cmath>

namespace ncres {

namespace {

double binom(int n, int k)
{
    double r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

bool mat_poly_is_zero(const std::vector<JetMat>& p)
{
    for (const auto& m : p)
        if (m.max_abs() != 0.0) return false;
    return true;
}

// N -> N * s for a scalar-jet polynomial s
std::vector<JetMat> poly_mul_scalar(const std::vector<JetMat>& n, const std::vector<Jet>& s, int dim)
{
    if (n.empty() || s.empty()) return {};
    std::vector<JetMat> r(n.size() + s.size() - 1, JetMat(dim, dim));
    for (size_t i = 0; i < n.size(); ++i)
        for (size_t j = 0; j < s.size(); ++j) r[i + j] += n[i].scaled(s[j]);
    return r;
}

std::vector<JetMat> poly_mul(const std::vector<JetMat>& a, const std::vector<JetMat>& b, int dim,
                             int rdim)
{
    if (a.empty() || b.empty()) return {};
    std::vector<JetMat> r(a.size() + b.size() - 1, JetMat(rdim, rdim));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    (void)dim;
    return r;
}

std::vector<JetMat> poly_trace_mul(const std::vector<JetMat>& a, const std::vector<JetMat>& b)
{
    if (a.empty() || b.empty()) return {};
    std::vector<JetMat> r(a.size() + b.size() - 1, JetMat(1, 1));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j](0, 0) += trace_product(a[i], b[j]);
    return r;
}

void poly_add_into(std::vector<JetMat>& a, const std::vector<JetMat>& b, int dim)
{
    if (a.size() < b.size()) a.resize(b.size(), JetMat(dim, dim));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

// divide N by the monic scalar polynomial d (leading coefficient exactly 1);
// returns quotient, leaves remainder in N
std::vector<JetMat> poly_divide_monic(std::vector<JetMat>& n, const std::vector<Jet>& d, int dim)
{
    const int dd = (int)d.size() - 1;
    if ((int)n.size() - 1 < dd) return {};
    std::vector<JetMat> q((int)n.size() - dd, JetMat(dim, dim));
    for (int k = (int)n.size() - 1; k >= dd; --k) {
        JetMat c = n[k];
        q[k - dd] = c;
        for (int j = 0; j <= dd; ++j) {
            // d[dd] == 1, clears n[k]
            n[k - dd + j] -= c.scaled(d[j]);
        }
    }
    n.resize(dd);
    return q;
}

} // namespace

std::vector<Jet> denominator_poly(const Jet& a_sq, int m)
{
    std::vector<Jet> d(2 * m + 1);
    Jet apow = Jet::constant(1.0);
    // (xin^2 + aSq)^m = sum_k C(m,k) aSq^(m-k) xin^(2k); build powers of aSq
    std::vector<Jet> apows(m + 1);
    apows[0] = Jet::constant(1.0);
    for (int i = 1; i <= m; ++i) apows[i] = apows[i - 1] * a_sq;
    for (int k = 0; k <= m; ++k) d[2 * k] = apows[m - k] * binom(m, k);
    return d;
}

bool same_pole_param(const Jet& a, const Jet& b)
{
    Jet diff = a - b;
    double scale = std::max(1.0, std::max(a.max_abs(), b.max_abs()));
    return diff.max_abs() <= 1e-12 * scale;
}

RationalXiN RationalXiN::zero(int dim)
{
    RationalXiN r;
    r.dim_ = dim;
    return r;
}

RationalXiN RationalXiN::from_poly(std::vector<JetMat> poly)
{
    if (poly.empty()) throw Error(ErrorCode::BadInput, "empty polynomial");
    RationalXiN r;
    r.dim_ = poly[0].rows();
    r.poly_ = std::move(poly);
    r.trim();
    return r;
}

RationalXiN RationalXiN::proper(std::vector<JetMat> num, const Jet& a_sq, int m)
{
    if (num.empty()) throw Error(ErrorCode::BadInput, "empty numerator");
    if ((int)num.size() > 2 * m) throw Error(ErrorCode::BadInput, "numerator degree >= 2m");
    if (a_sq.value().real() <= 0.0 || std::abs(a_sq.value().imag()) > 1e-9)
        throw Error(ErrorCode::BadInput, "pole parameter must have positive real constant part");
    RationalXiN r;
    r.dim_ = num[0].rows();
    r.num_ = std::move(num);
    r.a_sq_ = a_sq;
    r.m_ = m;
    r.check_pole_budget();
    r.trim();
    return r;
}

void RationalXiN::trim()
{
    while (!poly_.empty() && poly_.back().max_abs() == 0.0) poly_.pop_back();
    while (!num_.empty() && num_.back().max_abs() == 0.0) num_.pop_back();
    if (num_.empty()) m_ = 0;
}

void RationalXiN::check_pole_budget() const
{
    if (m_ > kMaxPoleOrder)
        throw Error(ErrorCode::PoleOrderExceeded,
                    "pole order " + std::to_string(m_) + " exceeds cap");
}

RationalXiN RationalXiN::operator-() const
{
    RationalXiN r = *this;
    for (auto& p : r.poly_) p = -p;
    for (auto& n : r.num_) n = -n;
    return r;
}

RationalXiN& RationalXiN::operator+=(const RationalXiN& o)
{
    if (dim_ != o.dim_) throw Error(ErrorCode::ShapeError, "rational add dimensions");
    poly_add_into(poly_, o.poly_, dim_);
    if (o.m_ > 0 && m_ > 0 && !same_pole_param(a_sq_, o.a_sq_))
        throw Error(ErrorCode::IncompatiblePoles, "pole parameters differ in add");
    if (o.m_ > 0 && m_ == 0) {
        num_ = o.num_;
        a_sq_ = o.a_sq_;
        m_ = o.m_;
    } else if (o.m_ > 0) {
        int m = std::max(m_, o.m_);
        std::vector<JetMat> lhs =
            m > m_ ? poly_mul_scalar(num_, denominator_poly(a_sq_, m - m_), dim_) : num_;
        std::vector<JetMat> rhs =
            m > o.m_ ? poly_mul_scalar(o.num_, denominator_poly(a_sq_, m - o.m_), dim_) : o.num_;
        poly_add_into(lhs, rhs, dim_);
        num_ = std::move(lhs);
        m_ = m;
        check_pole_budget();
    }
    trim();
    return *this;
}

RationalXiN& RationalXiN::operator-=(const RationalXiN& o) { return *this += -o; }

RationalXiN operator*(const RationalXiN& a, const RationalXiN& b)
{
    if (a.dim_ != b.dim_) throw Error(ErrorCode::ShapeError, "rational mul dimensions");
    const int dim = a.dim_;
    RationalXiN r;
    r.dim_ = dim;
    if (a.is_zero() || b.is_zero()) return RationalXiN::zero(dim);

    if (a.m_ > 0 && b.m_ > 0 && !same_pole_param(a.a_sq_, b.a_sq_))
        throw Error(ErrorCode::IncompatiblePoles, "pole parameters differ in mul");
    const Jet a_sq = a.m_ > 0 ? a.a_sq_ : b.a_sq_;
    const int m = a.m_ + b.m_;

    // clear denominators, multiply, split back
    std::vector<JetMat> na = a.poly_;
    if (a.m_ > 0) {
        na = poly_mul_scalar(a.poly_, denominator_poly(a_sq, a.m_), dim);
        poly_add_into(na, a.num_, dim);
    }
    std::vector<JetMat> nb = b.poly_;
    if (b.m_ > 0) {
        nb = poly_mul_scalar(b.poly_, denominator_poly(a_sq, b.m_), dim);
        poly_add_into(nb, b.num_, dim);
    }
    std::vector<JetMat> prod = poly_mul(na, nb, dim, dim);
    if (m == 0) {
        r.poly_ = std::move(prod);
    } else {
        r.a_sq_ = a_sq;
        r.m_ = m;
        r.check_pole_budget();
        r.poly_ = poly_divide_monic(prod, denominator_poly(a_sq, m), dim);
        r.num_ = std::move(prod);
    }
    r.trim();
    return r;
}

RationalXiN RationalXiN::scaled(const Jet& s) const
{
    RationalXiN r = *this;
    for (auto& p : r.poly_) p = p.scaled(s);
    for (auto& n : r.num_) n = n.scaled(s);
    return r;
}

RationalXiN RationalXiN::scaled(cplx s) const
{
    RationalXiN r = *this;
    for (auto& p : r.poly_) p = p.scaled(s);
    for (auto& n : r.num_) n = n.scaled(s);
    return r;
}

RationalXiN RationalXiN::derive_xin() const
{
    RationalXiN r;
    r.dim_ = dim_;
    for (size_t k = 1; k < poly_.size(); ++k) r.poly_.push_back(poly_[k].scaled(cplx(double(k))));
    if (m_ > 0) {
        // (N/D^m)' = (N' (xin^2+aSq) - 2 m xin N) / D^(m+1)
        std::vector<JetMat> nprime(num_.size() >= 1 ? num_.size() - 1 : 0, JetMat(dim_, dim_));
        for (size_t k = 1; k < num_.size(); ++k) nprime[k - 1] = num_[k].scaled(cplx(double(k)));
        std::vector<JetMat> out(num_.size() + 1, JetMat(dim_, dim_));
        for (size_t k = 0; k < nprime.size(); ++k) {
            out[k + 2] += nprime[k];
            out[k] += nprime[k].scaled(a_sq_);
        }
        for (size_t k = 0; k < num_.size(); ++k) out[k + 1] -= num_[k].scaled(cplx(2.0 * m_));
        r.num_ = std::move(out);
        r.a_sq_ = a_sq_;
        r.m_ = m_ + 1;
        r.check_pole_budget();
    }
    r.trim();
    return r;
}

RationalXiN RationalXiN::derive_var(Var v) const
{
    RationalXiN r;
    r.dim_ = dim_;
    for (const auto& p : poly_) r.poly_.push_back(p.derive(v));
    if (m_ > 0) {
        Jet da = a_sq_.derive(v);
        // d/dv [N/D^m] = (dN (xin^2+aSq) - m (d aSq) N) / D^(m+1)
        std::vector<JetMat> out(num_.size() + 2, JetMat(dim_, dim_));
        for (size_t k = 0; k < num_.size(); ++k) {
            JetMat dn = num_[k].derive(v);
            out[k + 2] += dn;
            out[k] += dn.scaled(a_sq_);
            out[k] -= num_[k].scaled(da * cplx(double(m_)));
        }
        r.num_ = std::move(out);
        r.a_sq_ = a_sq_;
        r.m_ = m_ + 1;
        r.check_pole_budget();
    }
    r.trim();
    return r;
}

JetMat RationalXiN::eval(cplx xi_n) const
{
    JetMat acc(dim_, dim_);
    cplx p = 1.0;
    for (const auto& c : poly_) {
        acc += c.scaled(p);
        p *= xi_n;
    }
    if (m_ > 0) {
        cplx d0 = xi_n * xi_n + a_sq_.value();
        if (std::abs(d0) < 1e-10)
            throw Error(ErrorCode::PoleEvaluation, "evaluation at a pole of the denominator");
        JetMat n(dim_, dim_);
        p = 1.0;
        for (const auto& c : num_) {
            n += c.scaled(p);
            p *= xi_n;
        }
        // 1/(xin^2 + aSq)^m as a jet via jet inversion
        Jet d = a_sq_ + xi_n * xi_n;
        Jet dinv = d.inverse();
        Jet dm = Jet::constant(1.0);
        for (int i = 0; i < m_; ++i) dm = dm * dinv;
        acc += n.scaled(dm);
    }
    return acc;
}

RationalXiN RationalXiN::constant_collapse() const
{
    RationalXiN r = *this;
    auto collapse = [](JetMat& m) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) = Jet::constant(m(i, j).value());
    };
    for (auto& p : r.poly_) collapse(p);
    for (auto& n : r.num_) collapse(n);
    r.a_sq_ = Jet::constant(a_sq_.value());
    return r;
}

RationalXiN trace_mul(const RationalXiN& a, const RationalXiN& b)
{
    if (a.dim_ != b.dim_) throw Error(ErrorCode::ShapeError, "trace_mul dimensions");
    if (a.m_ > 0 && b.m_ > 0 && !same_pole_param(a.a_sq_, b.a_sq_))
        throw Error(ErrorCode::IncompatiblePoles, "pole parameters differ in trace_mul");
    const Jet a_sq = a.m_ > 0 ? a.a_sq_ : b.a_sq_;
    RationalXiN r;
    r.dim_ = 1;
    if (a.is_zero() || b.is_zero()) return RationalXiN::zero(1);

    std::vector<JetMat> na = a.poly_;
    if (a.m_ > 0) {
        na = poly_mul_scalar(a.poly_, denominator_poly(a_sq, a.m_), a.dim_);
        poly_add_into(na, a.num_, a.dim_);
    }
    std::vector<JetMat> nb = b.poly_;
    if (b.m_ > 0) {
        nb = poly_mul_scalar(b.poly_, denominator_poly(a_sq, b.m_), b.dim_);
        poly_add_into(nb, b.num_, b.dim_);
    }
    std::vector<JetMat> prod = poly_trace_mul(na, nb);
    const int m = a.m_ + b.m_;
    if (m == 0) {
        r.poly_ = std::move(prod);
    } else {
        r.a_sq_ = a_sq;
        r.m_ = m;
        r.check_pole_budget();
        r.poly_ = poly_divide_monic(prod, denominator_poly(a_sq, m), 1);
        r.num_ = std::move(prod);
    }
    r.trim();
    return r;
}

double RationalXiN::max_abs() const
{
    double mx = 0;
    for (const auto& p : poly_) mx = std::max(mx, p.max_abs());
    for (const auto& n : num_) mx = std::max(mx, n.max_abs());
    return mx;
}

} // namespace ncres
