#include "ncres/jet_mat.hpp"

namespace ncres {

JetMat JetMat::operator-() const
{
    JetMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

JetMat& JetMat::operator+=(const JetMat& o)
{
    check_same_shape(o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

JetMat& JetMat::operator-=(const JetMat& o)
{
    check_same_shape(o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

JetMat operator*(const JetMat& a, const JetMat& b)
{
    if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeError, "jet matrix product dimensions");
    JetMat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Jet& aik = a(i, k);
            if (aik.is_constant() && aik.value() == 0.0) continue;
            for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

JetMat JetMat::scaled(const Jet& s) const
{
    JetMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

JetMat JetMat::scaled(cplx s) const
{
    JetMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

JetMat JetMat::derive(Var v) const
{
    JetMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].derive(v);
    return r;
}

Jet JetMat::trace() const
{
    if (rows_ != cols_) throw Error(ErrorCode::ShapeError, "trace of non-square jet matrix");
    Jet t;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Jet trace_product(const JetMat& a, const JetMat& b)
{
    if (a.cols_ != b.rows_ || a.rows_ != b.cols_)
        throw Error(ErrorCode::ShapeError, "trace_product dimensions");
    Jet t;
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) t += a(i, j) * b(j, i);
    return t;
}

CMat JetMat::constant() const
{
    CMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).value();
    return r;
}

JetMat JetMat::adjoint() const
{
    JetMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conjugate();
    return r;
}

double JetMat::max_abs() const
{
    double m = 0;
    for (const auto& j : a_) m = std::max(m, j.max_abs());
    return m;
}

JetMat kron(const JetMat& a, const CMat& b)
{
    JetMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    cplx bkl = b(k, l);
                    if (bkl == 0.0) continue;
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * bkl;
                }
    return r;
}

JetMat kron(const CMat& a, const JetMat& b)
{
    JetMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            cplx aij = a(i, j);
            if (aij == 0.0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = b(k, l) * aij;
        }
    return r;
}

} // namespace ncres
