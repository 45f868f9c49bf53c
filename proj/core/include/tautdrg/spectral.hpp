#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tautdrg/check.hpp"
#include "tautdrg/tolerances.hpp"

namespace tautdrg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct EigenDecomposition {
    Vector values;   // descending
    Matrix vectors;  // column j pairs with values[j]
    int sweeps = 0;
};

// Cyclic Jacobi, at most 100 sweeps. Throws VerificationError (with the
// remaining off-diagonal norm) if it has not converged by then. Input is
// read from the lower triangle only.
EigenDecomposition sym_eigen(const Matrix& m);

// Eigenpair residuals, orthonormality and reconstruction, relative to ||M||_F.
VerificationReport verify_decomposition(const Matrix& m, const EigenDecomposition& dec,
                                        const Tolerances& tol = {});

// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal and
// off-diagonal, by Sturm-count bisection. Descending.
std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag,
                                            const std::vector<double>& off);

struct Cluster {
    double value = 0;  // mean of the members
    int count = 0;
};

struct Clustering {
    std::vector<Cluster> clusters;  // descending by value
    bool ill_separated = false;     // some gap between neighbouring clusters is < 10 tau
};

// Groups values whose chain of neighbouring gaps is <= tau.
Clustering cluster_eigenvalues(std::vector<double> values, double tau);

// Orthonormal basis of a subspace of R^n, possibly empty.
class Subspace {
public:
    explicit Subspace(int ambient = 0) : basis_(ambient, 0) {}
    // Columns must already be orthonormal.
    static Subspace from_orthonormal(Matrix basis);

    int ambient() const { return static_cast<int>(basis_.rows()); }
    int dim() const { return static_cast<int>(basis_.cols()); }
    bool empty() const { return basis_.cols() == 0; }
    const Matrix& basis() const { return basis_; }
    Vector vector(int j) const { return basis_.col(j); }

private:
    Matrix basis_;
};

// Modified Gram-Schmidt with one re-orthogonalization pass. A vector whose
// residual drops below rank_tol times its original norm is discarded.
Subspace orthonormalize(const std::vector<Vector>& vectors, int ambient, double rank_tol = 1e-8);
Subspace orthonormalize(const Matrix& columns, double rank_tol = 1e-8);

Vector project(const Subspace& sub, const Vector& v);

// {w in sub : w orthogonal to inner}.
Subspace orth_complement_within(const Subspace& sub, const Subspace& inner,
                                double rank_tol = 1e-8);

// Sum of two subspaces.
Subspace span_union(const Subspace& a, const Subspace& b, double rank_tol = 1e-8);

// B^T M B for the orthonormal basis B of sub, symmetrized.
Matrix restrict_operator(const Matrix& m, const Subspace& sub);

// max |M - M^T| entry.
double asymmetry(const Matrix& m);

}  // namespace tautdrg
