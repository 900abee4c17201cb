#pragma once

#include "ncres/complex_mat.hpp"
#include "ncres/jet.hpp"

#include <vector>

namespace ncres {

// Matrix with Jet entries.
class JetMat {
public:
    JetMat() = default;
    JetMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static JetMat identity(int n)
    {
        JetMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Jet::constant(1.0);
        return m;
    }

    static JetMat from_constant(const CMat& c)
    {
        JetMat m(c.rows(), c.cols());
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) m(i, j) = Jet::constant(c(i, j));
        return m;
    }

    // scalar jet times the identity
    static JetMat scalar(const Jet& s, int n)
    {
        JetMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Jet& operator()(int i, int j) { return a_[i * cols_ + j]; }
    const Jet& operator()(int i, int j) const { return a_[i * cols_ + j]; }

    JetMat operator-() const;
    JetMat& operator+=(const JetMat& o);
    JetMat& operator-=(const JetMat& o);
    friend JetMat operator+(JetMat a, const JetMat& b) { return a += b; }
    friend JetMat operator-(JetMat a, const JetMat& b) { return a -= b; }
    friend JetMat operator*(const JetMat& a, const JetMat& b);

    JetMat scaled(const Jet& s) const;
    JetMat scaled(cplx s) const;

    JetMat derive(Var v) const;

    Jet trace() const;

    // tr(A*B) without forming the product
    friend Jet trace_product(const JetMat& a, const JetMat& b);

    // all jets evaluated at 0
    CMat constant() const;

    JetMat adjoint() const;

    double max_abs() const;

    bool same_shape(const JetMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

private:
    void check_same_shape(const JetMat& o) const
    {
        if (!same_shape(o)) throw Error(ErrorCode::ShapeError, "jet matrix shapes differ");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<Jet> a_;
};

// A (x) Id_k and Id_k (x) B lifts used to tensor base Clifford matrices with
// the twist fiber.
JetMat kron(const JetMat& a, const CMat& b);
JetMat kron(const CMat& a, const JetMat& b);

} // namespace ncres
