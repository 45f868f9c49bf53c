#include "tautdrg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tautdrg/error.hpp"

namespace tautdrg {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a)
{
    double s = 0;
    const auto n = a.rows();
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            if (i != j)
                s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition sym_eigen(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw VerificationError("sym_eigen: matrix is not square");
    const Eigen::Index n = m.rows();
    Matrix a = m.selfadjointView<Eigen::Lower>();
    Matrix v = Matrix::Identity(n, n);

    const double frob = a.norm();
    const double target = 1e-14 * frob;
    int sweep = 0;
    double off = off_diagonal_norm(a);
    while (off > target && off > 0) {
        if (sweep == kMaxSweeps)
            throw VerificationError("Jacobi did not converge in " + std::to_string(kMaxSweeps) +
                                    " sweeps, off-diagonal norm " + std::to_string(off));
        ++sweep;
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= std::numeric_limits<double>::min())
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;

                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
        off = off_diagonal_norm(a);
    }

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });
    EigenDecomposition dec;
    dec.values.resize(n);
    dec.vectors.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        dec.values[j] = a(order[j], order[j]);
        dec.vectors.col(j) = v.col(order[j]);
    }
    dec.sweeps = sweep;
    return dec;
}

VerificationReport verify_decomposition(const Matrix& m, const EigenDecomposition& dec,
                                        const Tolerances& tol)
{
    VerificationReport report;
    const Matrix full = m.selfadjointView<Eigen::Lower>();
    const double scale = std::max(1.0, full.norm());
    const auto n = full.rows();

    double pair = 0;
    for (Eigen::Index j = 0; j < n; ++j)
        pair = std::max(pair, (full * dec.vectors.col(j) - dec.values[j] * dec.vectors.col(j)).norm());
    report.add("eigenpair residual", "||M v - lambda v|| <= tau ||M||", pair / scale, tol.eig);

    const Matrix gram = dec.vectors.transpose() * dec.vectors;
    report.add("eigenvector orthonormality", "V^T V = I",
               (gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff(), tol.eig);

    const Matrix rebuilt = dec.vectors * dec.values.asDiagonal() * dec.vectors.transpose();
    report.add("reconstruction", "M = V diag(lambda) V^T", (full - rebuilt).norm() / scale, tol.eig);
    return report;
}

std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag,
                                            const std::vector<double>& off)
{
    const int n = static_cast<int>(diag.size());
    if (n == 0)
        return {};
    if (static_cast<int>(off.size()) != n - 1)
        throw VerificationError("tridiagonal_eigenvalues: off-diagonal must have n-1 entries");

    double lo = std::numeric_limits<double>::max(), hi = std::numeric_limits<double>::lowest();
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i < n - 1 ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    lo -= pad;
    hi += pad;

    // Number of eigenvalues strictly below x.
    auto count_below = [&](double x) {
        int count = 0;
        double q = 1;
        for (int i = 0; i < n; ++i) {
            q = diag[i] - x - (i > 0 ? off[i - 1] * off[i - 1] / q : 0.0);
            if (q == 0)
                q = -std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
            if (q < 0)
                ++count;
        }
        return count;
    };

    std::vector<double> values(n);
    for (int k = 0; k < n; ++k) {
        // k-th smallest: count_below(a) <= k < count_below(b)
        double a = lo, b = hi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b)
                break;
            if (count_below(mid) > k)
                b = mid;
            else
                a = mid;
        }
        values[k] = 0.5 * (a + b);
    }
    std::reverse(values.begin(), values.end());
    return values;
}

Clustering cluster_eigenvalues(std::vector<double> values, double tau)
{
    Clustering out;
    if (values.empty())
        return out;
    std::sort(values.begin(), values.end(), std::greater<>());
    double sum = values[0];
    int count = 1;
    for (std::size_t i = 1; i <= values.size(); ++i) {
        if (i < values.size() && values[i - 1] - values[i] <= tau) {
            sum += values[i];
            ++count;
            continue;
        }
        out.clusters.push_back({sum / count, count});
        if (i < values.size()) {
            if (values[i - 1] - values[i] < 10 * tau)
                out.ill_separated = true;
            sum = values[i];
            count = 1;
        }
    }
    return out;
}

Subspace Subspace::from_orthonormal(Matrix basis)
{
    Subspace s;
    s.basis_ = std::move(basis);
    return s;
}

Subspace orthonormalize(const std::vector<Vector>& vectors, int ambient, double rank_tol)
{
    Matrix cols(ambient, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j)
        cols.col(static_cast<Eigen::Index>(j)) = vectors[j];
    return orthonormalize(cols, rank_tol);
}

Subspace orthonormalize(const Matrix& columns, double rank_tol)
{
    const auto n = columns.rows();
    Matrix q(n, columns.cols());
    Eigen::Index r = 0;
    for (Eigen::Index j = 0; j < columns.cols(); ++j) {
        Vector w = columns.col(j);
        const double original = w.norm();
        if (original == 0)
            continue;
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index i = 0; i < r; ++i)
                w -= q.col(i).dot(w) * q.col(i);
        const double residual = w.norm();
        if (residual < rank_tol * original)
            continue;
        q.col(r++) = w / residual;
    }
    return Subspace::from_orthonormal(q.leftCols(r));
}

Vector project(const Subspace& sub, const Vector& v)
{
    if (sub.empty())
        return Vector::Zero(v.size());
    return sub.basis() * (sub.basis().transpose() * v);
}

Subspace orth_complement_within(const Subspace& sub, const Subspace& inner, double rank_tol)
{
    if (sub.empty() || inner.empty())
        return sub;
    // w = B y is orthogonal to inner iff y is in the null space of C = Q^T B.
    const Matrix c = inner.basis().transpose() * sub.basis();
    const Matrix gram = c.transpose() * c;
    const auto dec = sym_eigen(gram);
    std::vector<Vector> kept;
    for (Eigen::Index j = 0; j < dec.values.size(); ++j)
        if (dec.values[j] <= rank_tol)
            kept.push_back(sub.basis() * dec.vectors.col(j));
    Subspace out = orthonormalize(kept, sub.ambient(), rank_tol);
    // clean residual components along inner
    Matrix b = out.basis();
    for (Eigen::Index j = 0; j < b.cols(); ++j)
        b.col(j) -= project(inner, b.col(j));
    return orthonormalize(b, rank_tol);
}

Subspace span_union(const Subspace& a, const Subspace& b, double rank_tol)
{
    Matrix cols(a.ambient(), a.dim() + b.dim());
    cols << a.basis(), b.basis();
    return orthonormalize(cols, rank_tol);
}

Matrix restrict_operator(const Matrix& m, const Subspace& sub)
{
    if (sub.empty())
        return Matrix(0, 0);
    const Matrix r = sub.basis().transpose() * m * sub.basis();
    return 0.5 * (r + r.transpose());
}

double asymmetry(const Matrix& m)
{
    if (m.size() == 0)
        return 0;
    return (m - m.transpose()).cwiseAbs().maxCoeff();
}

}  // namespace tautdrg
