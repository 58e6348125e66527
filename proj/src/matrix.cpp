#include "qorbit/matrix.hpp"

#include <array>

#include "qorbit/text.hpp"

namespace qorbit {

namespace {
constexpr int kParallelThreshold = 24;  // below this the omp fork costs more than it saves
}

Matrix::Matrix(int n, const ParameterContext& ctx) : n_(n), ctx_(ctx) {
    if (n < 0) throw usage_error("negative matrix size");
    a_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Scalar::zero(ctx));
}

Matrix Matrix::identity(int n, const ParameterContext& ctx) {
    Matrix m(n, ctx);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ctx);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (n_ != o.n_) throw usage_error("matrix size mismatch");
    Matrix out(n_, ctx_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (n_ != o.n_) throw usage_error("matrix size mismatch");
    Matrix out(n_, ctx_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(n_, ctx_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(n_, ctx_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::multiply_serial(const Matrix& o) const {
    if (n_ != o.n_) throw usage_error("matrix size mismatch");
    Matrix out(n_, ctx_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Scalar acc = Scalar::zero(ctx_);
            for (int k = 0; k < n_; ++k) {
                const Scalar& x = at(i, k);
                if (x.is_zero()) continue;
                const Scalar& y = o.at(k, j);
                if (y.is_zero()) continue;
                acc = acc + x * y;
            }
            out.at(i, j) = std::move(acc);
        }
    return out;
}

Matrix Matrix::multiply_parallel(const Matrix& o) const {
    if (n_ != o.n_) throw usage_error("matrix size mismatch");
    Matrix out(n_, ctx_);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            Scalar acc = Scalar::zero(ctx_);
            for (int k = 0; k < n_; ++k) {
                const Scalar& x = at(i, k);
                if (x.is_zero()) continue;
                const Scalar& y = o.at(k, j);
                if (y.is_zero()) continue;
                acc = acc + x * y;
            }
            out.at(i, j) = std::move(acc);
        }
    }
    return out;
}

Matrix Matrix::multiply(const Matrix& o) const {
#ifdef _OPENMP
    if (n_ >= kParallelThreshold) return multiply_parallel(o);
#endif
    return multiply_serial(o);
}

Matrix Matrix::inverse() const {
    Matrix left = *this;
    Matrix out = identity(n_, ctx_);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (!left.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw usage_error("matrix is singular");
        if (pivot != col) {
            for (int j = 0; j < n_; ++j) {
                std::swap(left.at(pivot, j), left.at(col, j));
                std::swap(out.at(pivot, j), out.at(col, j));
            }
        }
        Scalar inv = left.at(col, col).inverse();
        for (int j = 0; j < n_; ++j) {
            left.at(col, j) = left.at(col, j) * inv;
            out.at(col, j) = out.at(col, j) * inv;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col || left.at(r, col).is_zero()) continue;
            Scalar f = left.at(r, col);
            for (int j = 0; j < n_; ++j) {
                left.at(r, j) = left.at(r, j) - f * left.at(col, j);
                out.at(r, j) = out.at(r, j) - f * out.at(col, j);
            }
        }
    }
    return out;
}

Matrix Matrix::diagonal_part() const {
    Matrix out(n_, ctx_);
    for (int i = 0; i < n_; ++i) out.at(i, i) = at(i, i);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Matrix::is_diagonal() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

std::string Matrix::first_difference(const Matrix& a, const Matrix& b) {
    if (a.n() != b.n()) return "size mismatch";
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            if (a.at(i, j) != b.at(i, j))
                return "entry (" + std::to_string(i) + "," + std::to_string(j) +
                       "): " + render_scalar(a.at(i, j)) + " vs " + render_scalar(b.at(i, j));
    return "";
}

Matrix Matrix::substituted(const Substitution& sub) const {
    Matrix out(n_, sub.target);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i].substituted(sub);
    return out;
}

Matrix flip_matrix(int N, const ParameterContext& ctx) {
    Matrix p(N * N, ctx);
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) p.at(j * N + k, k * N + j) = Scalar::one(ctx);
    return p;
}

Matrix leg_embed(const Matrix& m, int N, int leg_a, int leg_b) {
    if (m.n() != N * N) throw usage_error("leg_embed expects an N^2 x N^2 matrix");
    if (leg_a == leg_b || leg_a < 1 || leg_a > 3 || leg_b < 1 || leg_b > 3)
        throw usage_error("legs must be distinct and in {1,2,3}");
    const int dim = N * N * N;
    Matrix out(dim, m.context());
    const int free_leg = 6 - leg_a - leg_b;
    auto digits = [N](int x) {
        return std::array<int, 3>{x / (N * N), (x / N) % N, x % N};
    };
    for (int row = 0; row < dim; ++row) {
        auto ri = digits(row);
        for (int col = 0; col < dim; ++col) {
            auto ci = digits(col);
            if (ri[free_leg - 1] != ci[free_leg - 1]) continue;
            int mr = ri[leg_a - 1] * N + ri[leg_b - 1];
            int mc = ci[leg_a - 1] * N + ci[leg_b - 1];
            const Scalar& v = m.at(mr, mc);
            if (!v.is_zero()) out.at(row, col) = v;
        }
    }
    return out;
}

} // namespace qorbit
