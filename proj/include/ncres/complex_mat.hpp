#pragma once

#include "ncres/error.hpp"
#include "ncres/jet.hpp"

#include <vector>

namespace ncres {

// Dense complex matrix. Sizes stay tiny (<= 48), plain loops are fine.
class CMat {
public:
    CMat() = default;
    CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMat identity(int n)
    {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return a_[i * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[i * cols_ + j]; }

    CMat operator-() const
    {
        CMat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    CMat& operator+=(const CMat& o)
    {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    CMat& operator-=(const CMat& o)
    {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator-(CMat a, const CMat& b) { return a -= b; }

    friend CMat operator*(const CMat& a, const CMat& b)
    {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeError, "matrix product dimensions");
        CMat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                cplx aik = a(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend CMat operator*(const CMat& a, cplx s)
    {
        CMat r = a;
        for (auto& z : r.a_) z *= s;
        return r;
    }
    friend CMat operator*(cplx s, const CMat& a) { return a * s; }

    cplx trace() const
    {
        if (rows_ != cols_) throw Error(ErrorCode::ShapeError, "trace of non-square matrix");
        cplx t = 0;
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    CMat adjoint() const
    {
        CMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    CMat transpose() const
    {
        CMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    friend CMat kron(const CMat& a, const CMat& b)
    {
        CMat r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                cplx aij = a(i, j);
                if (aij == 0.0) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l)
                        r(i * b.rows_ + k, j * b.cols_ + l) = aij * b(k, l);
            }
        return r;
    }

    // tr(A*B) without forming the product
    friend cplx trace_product(const CMat& a, const CMat& b)
    {
        if (a.cols_ != b.rows_ || a.rows_ != b.cols_)
            throw Error(ErrorCode::ShapeError, "trace_product dimensions");
        cplx t = 0;
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) t += a(i, j) * b(j, i);
        return t;
    }

    double max_abs() const
    {
        double m = 0;
        for (const auto& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    bool same_shape(const CMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

private:
    void check_same_shape(const CMat& o) const
    {
        if (!same_shape(o)) throw Error(ErrorCode::ShapeError, "matrix shapes differ");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

} // namespace ncres
