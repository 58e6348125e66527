#pragma once

#include "qorbit/scalar.hpp"

namespace qorbit {

/// Dense square matrix with exact Scalar entries.  The multiply kernel has
/// an OpenMP variant (entries are independent and all inputs immutable);
/// multiply() dispatches by size, and multiply_serial stays around as the
/// reference the tests and the benchmark compare against.
class Matrix {
public:
    Matrix() = default;
    Matrix(int n, const ParameterContext& ctx);

    static Matrix identity(int n, const ParameterContext& ctx);

    int n() const { return n_; }
    const ParameterContext& context() const { return ctx_; }
    Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const { return multiply(o); }
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    Matrix inverse() const;  // exact Gauss-Jordan; throws on singular input
    Matrix diagonal_part() const;

    Matrix multiply(const Matrix& o) const;
    Matrix multiply_serial(const Matrix& o) const;
    Matrix multiply_parallel(const Matrix& o) const;

    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;
    bool is_diagonal() const;

    // first entry where the two matrices differ, rendered; empty when equal
    static std::string first_difference(const Matrix& a, const Matrix& b);

    Matrix substituted(const Substitution& sub) const;

private:
    int n_ = 0;
    ParameterContext ctx_;
    std::vector<Scalar> a_;
};

// flip operator on C^N (x) C^N: P_{jk,st} = delta_{jt} delta_{ks}
Matrix flip_matrix(int N, const ParameterContext& ctx);

// embeds an N^2 x N^2 two-leg matrix into legs (a, b) of a three-fold space;
// legs are 1-based and may come in either order (leg_embed(m, N, 2, 1)
// places the matrix's first tensor slot on leg 2)
Matrix leg_embed(const Matrix& m, int N, int leg_a, int leg_b);

} // namespace qorbit
