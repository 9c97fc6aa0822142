#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "esymdom/esym.hpp"
#include "esymdom/functionals.hpp"

namespace esymdom {

/// Minimal dense row-major square matrix; everything here is desk scale
/// (n <= ~16), so no attempt at blocking or expression templates.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    [[nodiscard]] static Matrix identity(std::size_t n)
    {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    [[nodiscard]] std::size_t dim() const noexcept { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    [[nodiscard]] Matrix transposed() const
    {
        Matrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] Matrix operator*(const Matrix& rhs) const
    {
        if (rhs.n_ != n_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const double v = (*this)(i, k);
                if (v == 0.0) continue;
                for (std::size_t j = 0; j < n_; ++j) out(i, j) += v * rhs(k, j);
            }
        return out;
    }

    [[nodiscard]] Matrix operator+(const Matrix& rhs) const
    {
        if (rhs.n_ != n_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix out(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
        return out;
    }

    [[nodiscard]] Matrix scaled(double c) const
    {
        Matrix out(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = c * a_[i];
        return out;
    }

    [[nodiscard]] double frobenius_norm() const
    {
        double s = 0.0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

    [[nodiscard]] double trace() const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
        return s;
    }

    /// 0.5 * (A + A^T); used after triple products that are symmetric in
    /// exact arithmetic but not in floating point.
    [[nodiscard]] Matrix symmetrized() const
    {
        Matrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                out(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

struct EigenNoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigenDecomposition {
    std::vector<double> values; // ascending
    Matrix vectors;             // columns, matching values
};

/// Cyclic Jacobi for a symmetric matrix: sweeps of plane rotations until
/// the off-diagonal Frobenius mass drops below 1e-13 * ||A||_F, at most 60
/// sweeps. Eigenvalues are returned ascending with matching eigenvector
/// columns.
[[nodiscard]] inline EigenDecomposition
jacobi_eigen(const Matrix& a, int max_sweeps = 60, double off_tol_factor = 1e-13)
{
    const std::size_t n = a.dim();
    Matrix b = a;
    Matrix v = Matrix::identity(n);
    const double norm = a.frobenius_norm();

    const auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += b(i, j) * b(i, j);
        return std::sqrt(s);
    };

    bool converged = (n <= 1) || off_norm() <= off_tol_factor * norm;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = b(p, q);
                if (apq == 0.0) continue;
                const double tau = (b(q, q) - b(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double bkp = b(k, p);
                    const double bkq = b(k, q);
                    b(k, p) = c * bkp - s * bkq;
                    b(k, q) = s * bkp + c * bkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double bpk = b(p, k);
                    const double bqk = b(q, k);
                    b(p, k) = c * bpk - s * bqk;
                    b(q, k) = s * bpk + c * bqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
        converged = off_norm() <= off_tol_factor * norm;
    }
    if (!converged)
        throw EigenNoConvergence("jacobi_eigen: off-diagonal mass not reduced "
                                 "after max sweeps");

    EigenDecomposition dec;
    dec.values.resize(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return b(i, i) < b(j, j); });
    dec.vectors = Matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        dec.values[col] = b(order[col], order[col]);
        for (std::size_t row = 0; row < n; ++row)
            dec.vectors(row, col) = v(row, order[col]);
    }
    return dec;
}

/// Real symmetric positive definite matrix with its spectral decomposition
/// cached at construction. Construction validates symmetry, positivity of
/// the spectrum, orthogonality of the eigenvector basis, and reconstruction
/// fidelity; instances are immutable afterwards and safe to share.
class SpdMatrix {
public:
    explicit SpdMatrix(Matrix a) : m_(std::move(a))
    {
        const std::size_t n = m_.dim();
        if (n == 0) throw std::invalid_argument("SpdMatrix: empty matrix");
        const double norm = m_.frobenius_norm();
        const double sym_tol = 1e-12 * std::max(1.0, norm);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (std::fabs(m_(i, j) - m_(j, i)) > sym_tol)
                    throw std::invalid_argument("SpdMatrix: not symmetric");

        EigenDecomposition dec = jacobi_eigen(m_);
        for (double lam : dec.values)
            if (!(lam > 0.0))
                throw std::invalid_argument("SpdMatrix: not positive definite");

        // cache validity: Q Lambda Q^T must reproduce A, Q^T Q must be I
        Matrix recon(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    s += dec.vectors(i, k) * dec.values[k] * dec.vectors(j, k);
                recon(i, j) = s;
            }
        double recon_err = 0.0;
        double orth_err = 0.0;
        const Matrix qtq = dec.vectors.transposed() * dec.vectors;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const double dr = recon(i, j) - m_(i, j);
                recon_err += dr * dr;
                const double dq = qtq(i, j) - (i == j ? 1.0 : 0.0);
                orth_err += dq * dq;
            }
        if (std::sqrt(recon_err) > 1e-10 * norm)
            throw EigenNoConvergence("SpdMatrix: spectral reconstruction drift");
        if (std::sqrt(orth_err) > 1e-12 * static_cast<double>(n))
            throw EigenNoConvergence("SpdMatrix: eigenvector basis not orthogonal");

        values_ = std::move(dec.values);
        vectors_ = std::move(dec.vectors);
    }

    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    [[nodiscard]] const Matrix& dense() const noexcept { return m_; }
    [[nodiscard]] const std::vector<double>& eigenvalues() const noexcept
    {
        return values_;
    }
    [[nodiscard]] const Matrix& eigenvectors() const noexcept { return vectors_; }

    [[nodiscard]] PositiveVector eigenvalue_vector() const
    {
        return PositiveVector(values_);
    }

    /// Q f(Lambda) Q^T from the cached decomposition.
    [[nodiscard]] Matrix
    spectral_map(const std::function<double(double)>& f) const
    {
        const std::size_t n = dim();
        Matrix out(n);
        std::vector<double> fl(n);
        for (std::size_t k = 0; k < n; ++k) fl[k] = f(values_[k]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    s += vectors_(i, k) * fl[k] * vectors_(j, k);
                out(i, j) = s;
                out(j, i) = s;
            }
        return out;
    }

    [[nodiscard]] Matrix sqrt_matrix() const
    {
        return spectral_map([](double l) { return std::sqrt(l); });
    }
    [[nodiscard]] Matrix inv_sqrt_matrix() const
    {
        return spectral_map([](double l) { return 1.0 / std::sqrt(l); });
    }

private:
    Matrix m_;
    std::vector<double> values_;
    Matrix vectors_;
};

/// trace of the k-th exterior power of A, evaluated as e_k of the
/// eigenvalue vector; the exterior-power matrix itself is never formed.
[[nodiscard]] inline double exterior_trace(const SpdMatrix& a, std::size_t k)
{
    if (k < 1 || k > a.dim())
        throw std::invalid_argument("exterior_trace: k out of range");
    return esym_all(a.eigenvalue_vector()).e(k);
}

/// Dominance verdict between two SPD matrices, i.e. between their
/// eigenvalue vectors.
[[nodiscard]] inline DominanceVerdict
matrix_compare(const SpdMatrix& a, const SpdMatrix& b, ComparisonTolerance tol = {})
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix_compare: dimension mismatch");
    return compare(a.eigenvalue_vector(), b.eigenvalue_vector(), tol);
}

[[nodiscard]] inline double log_det(const SpdMatrix& a)
{
    double s = 0.0;
    for (double l : a.eigenvalues()) s += std::log(l);
    return s;
}

/// log det(I + A) = sum log(1 + lambda_i).
[[nodiscard]] inline double logdet_I_plus(const SpdMatrix& a)
{
    double s = 0.0;
    for (double l : a.eigenvalues()) s += std::log1p(l);
    return s;
}

/// Affine-invariant Riemannian distance on the SPD manifold:
/// ||log(B^{-1/2} A B^{-1/2})||_F, via the spectral caches.
[[nodiscard]] inline double riemannian_distance(const SpdMatrix& a,
                                                const SpdMatrix& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("riemannian_distance: dimension mismatch");
    const Matrix w = b.inv_sqrt_matrix();
    const SpdMatrix m((w * a.dense() * w).symmetrized());
    double s = 0.0;
    for (double l : m.eigenvalues()) {
        const double g = std::log(l);
        s += g * g;
    }
    return std::sqrt(s);
}

/// S-divergence: log det((A+B)/2) - (log det A + log det B)/2.
[[nodiscard]] inline double s_divergence(const SpdMatrix& a, const SpdMatrix& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("s_divergence: dimension mismatch");
    const SpdMatrix mid((a.dense() + b.dense()).scaled(0.5).symmetrized());
    return log_det(mid) - 0.5 * (log_det(a) + log_det(b));
}

/// Quantum Renyi entropy of a unit-trace positive definite matrix; equal by
/// definition to the classical Renyi entropy of the spectrum.
[[nodiscard]] inline double quantum_renyi(const SpdMatrix& x, RenyiOrder order)
{
    if (std::fabs(x.dense().trace() - 1.0) > 1e-9)
        throw std::invalid_argument("quantum_renyi: trace must be 1 within 1e-9");
    return renyi_entropy(x.eigenvalue_vector(), order);
}

/// Dense row-major CSV block: one header row with the dimension, then n
/// comma-separated rows of 17-significant-digit entries.
inline void write_matrix_csv(std::ostream& os, const Matrix& m)
{
    os << m.dim() << "\n";
    char buf[64];
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
            os << (j ? "," : "") << buf;
        }
        os << "\n";
    }
}

[[nodiscard]] inline Matrix read_matrix_csv(std::istream& is)
{
    std::size_t n = 0;
    if (!(is >> n) || n == 0)
        throw std::invalid_argument("read_matrix_csv: bad dimension header");
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double v = 0.0;
            char sep = 0;
            if (j > 0 && !(is >> sep && sep == ','))
                throw std::invalid_argument("read_matrix_csv: missing separator");
            if (!(is >> v))
                throw std::invalid_argument("read_matrix_csv: bad entry");
            m(i, j) = v;
        }
    return m;
}

} // namespace esymdom
