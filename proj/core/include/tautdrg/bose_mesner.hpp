#pragma once

#include <cstdint>
#include <vector>

#include "tautdrg/check.hpp"
#include "tautdrg/graph.hpp"
#include "tautdrg/spectral.hpp"
#include "tautdrg/tolerances.hpp"

namespace tautdrg {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct DistanceMatrices {
    int n = 0;
    int D = 0;
    std::vector<IntMatrix> exact;  // A_0..A_D, 0/1
    std::vector<Matrix> real;      // same, as doubles
    Matrix J;
    Matrix Jprime;                 // sum (-1)^i A_i

    const Matrix& A() const { return real[1]; }
    const Matrix& A_i(int i) const { return real[i]; }
};

// Builds A_0..A_D from the distance table and records A_0 = I, sum A_i = J and
// A_i A_j = sum_h p^h_ij A_h (exact integers). The product identity is checked
// for every (i, j) when n <= 512, otherwise only for i = 1.
DistanceMatrices distance_matrices(const DistanceData& dd, const ValidatedArray& va,
                                   VerificationReport& report);

// Roots of the (D+1)x(D+1) intersection matrix, descending.
std::vector<double> intersection_matrix_eigenvalues(const IntersectionArray& ia);

struct Spectrum {
    int D = 0;
    std::vector<double> theta;       // theta_0 > ... > theta_D
    std::vector<std::int64_t> mult;  // m_0..m_D
    std::vector<double> adjacency_eigenvalues;  // full Jacobi spectrum of A, descending

    int d() const { return D / 2; }
    std::int64_t vertex_count() const;
};

// theta from the intersection matrix; cross-checked against the clustered full
// adjacency spectrum; m_i = round(trace E_i) evaluated through the Lagrange
// polynomial on the full spectrum. Throws VerificationError if the two
// spectra disagree or a trace is not within 1e-6 of an integer.
Spectrum spectrum(const ValidatedArray& va, const DistanceMatrices& dm, const Tolerances& tol,
                  VerificationReport& report);

struct PrimitiveIdempotents {
    std::vector<Matrix> E;  // E_0..E_D
};

// E_i = prod_{j != i} (A - theta_j I)/(theta_i - theta_j), with the invariants
// E_i E_j = delta_ij E_i, sum E_i = I, E_0 = J/n, A E_i = theta_i E_i and
// trace E_i = m_i recorded in the report.
PrimitiveIdempotents primitive_idempotents(const Spectrum& spec, const Matrix& A,
                                           const Tolerances& tol, VerificationReport& report);

struct DualEigenvalueSequence {
    int index = 0;
    double theta = 0;
    std::vector<double> star;  // theta*_0..theta*_D
};

// theta*_j = n (E_i)_{xy} for any pair at distance j; constancy over all pairs
// recorded in the report.
DualEigenvalueSequence dual_eigenvalues(const PrimitiveIdempotents& idem, const Spectrum& spec,
                                        const DistanceData& dd, int i, const Tolerances& tol,
                                        VerificationReport& report);

// Checks the bipartite spectral facts: symmetry, eigenvalue bounds, the
// theta_1^2 > b_2 > theta_d^2 interlacing, dual-sequence recurrence and
// ratios, opposite-sign duals, E_D = J'/n, and the closed form for p^2_22
// against the counted value.
VerificationReport verify_bipartite_spectrum(const ValidatedArray& va, std::int64_t counted_p222,
                                   const DistanceMatrices& dm, const Spectrum& spec,
                                   const PrimitiveIdempotents& idem,
                                   const std::vector<DualEigenvalueSequence>& duals,
                                   const Tolerances& tol);

}  // namespace tautdrg
