#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tautdrg/check.hpp"
#include "tautdrg/context.hpp"
#include "tautdrg/spectral.hpp"

namespace tautdrg {

// E*_0..E*_D at base vertex x, kept as the distance partition rather than as
// n x n diagonal matrices.
struct DualIdempotents {
    int x = 0;
    int D = 0;
    std::vector<int> level;               // level[y] = dist(x, y)
    std::vector<std::vector<int>> parts;  // parts[i] = vertices at distance i, ascending

    int size(int i) const { return static_cast<int>(parts[i].size()); }
    Vector apply(int i, const Vector& v) const;  // E*_i v
    Matrix matrix(int i) const;
};

// Sum E*_i = I, E*_i E*_j = delta_ij E*_i, and for n <= 100 the pattern
// E*_h A_i E*_j = 0 iff p^h_ij = 0 over all (h, i, j).
DualIdempotents dual_idempotents(const GlobalContext& ctx, int x, VerificationReport& report);

struct StandardVectors {
    Vector xhat;
    std::vector<Vector> s;  // s_0..s_D
};

// s_i = A_i xhat and ||s_i||^2 = k_i recorded.
StandardVectors standard_vectors(const GlobalContext& ctx, const DualIdempotents& duals,
                                 VerificationReport& report);

struct TModuleDescriptor {
    int endpoint = 0;
    int dimension = 0;
    bool thin = false;
    std::vector<int> level_dims;       // dim E*_i W, i = 0..D
    std::optional<double> eta;         // local eigenvalue, endpoint 2 only
    int n = 0;                         // eigenvalue index of the explicit basis, 0 if none
    std::vector<int> vanishing_E;      // i with E_i W = 0
    std::vector<Vector> basis;         // E*-graded basis, or orthonormal closure basis
    std::vector<double> basis_norms;   // squared norms of `basis`
    std::vector<double> sub, super;    // tridiagonal action of A on `basis`
    std::vector<double> tridiagonal_eigenvalues;  // descending
    std::int64_t multiplicity = 0;
};

// Endpoint-0 module: bases {E_i xhat} and {s_i}, their norms, the action of A
// on the s_i and the transition s_i = sum_h f_i(theta_h) E_h xhat.
TModuleDescriptor module_V0(const GlobalContext& ctx, const DualIdempotents& duals,
                            const StandardVectors& sv, VerificationReport& report);

struct Endpoint1Space {
    Subspace seeds;          // E*_1 V orthogonal to s_1, dim k-1
    Subspace second_level;   // E*_2 Y, spanned by E*_2 A v over the seeds
    TModuleDescriptor module;
};

// Norms, action and transition of every endpoint-1 module generated by a seed,
// E*_D A_{D-1} v = 0, and the local eigenvalue b_3 - 1 on E*_2 A v.
Endpoint1Space endpoint1_space(const GlobalContext& ctx, const DualIdempotents& duals,
                               const StandardVectors& sv, VerificationReport& report);

// Real number or infinity.
struct ExtReal {
    double value = 0;
    bool infinite = false;

    static ExtReal inf() { return {0, true}; }
};

// z -> -1 - b_2 b_3/(z^2 - b_2), with z^2 = b_2 sent to infinity and infinity
// sent to -1.
ExtReal tilde(ExtReal z, double b2, double b3);

struct EtaMultiplicity {
    double eta = 0;
    int mult = 0;
};

struct LocalSpectrum {
    std::vector<int> vertices;   // the distance-2 sphere of x
    std::vector<Edge> edges;     // local indices into `vertices`
    Matrix adjacency;
    std::vector<double> eta;     // eta_1 = p^2_22, then k-1 copies of b_3 - 1, then descending
    double theta_tilde_1 = 0;
    double theta_tilde_d = 0;
    std::vector<EtaMultiplicity> phi;  // distinct values among eta_{k+1..k_2}, descending

    int mult(double value, double tau) const;
};

// Throws VerificationError when p^2_22 or the k-1 copies of b_3 - 1 are
// missing from the local spectrum. Records regularity, the tilde bounds and
// the three trace identities.
LocalSpectrum local_spectrum(const GlobalContext& ctx, const DualIdempotents& duals,
                             VerificationReport& report);

struct EtaSpace {
    double eta = 0;
    Subspace space;
};

struct SubspaceU {
    Subspace U;
    std::vector<EtaSpace> parts;  // descending eta; orthogonal, summing to U
};

// Complement of s_2 and E*_2 Y inside E*_2 V, split into eigenspaces of
// E*_2 A_2 E*_2. Throws VerificationError when the eigenspace dimensions do
// not match the local multiplicities.
SubspaceU subspace_U(const GlobalContext& ctx, const DualIdempotents& duals,
                     const StandardVectors& sv, const Endpoint1Space& y, const LocalSpectrum& ls,
                     VerificationReport& report);

struct NormPattern {
    std::vector<double> norms2;    // ||E_i v||^2, i = 0..D
    std::vector<bool> vanishes;    // observed ||E_i v|| < tau ||v||
    std::vector<bool> predicted;   // zero per eta
    int dim_Mv = 0;                // nonvanishing count
    int expected_dim_Mv = 0;
};

// ||E_i v||^2 against the closed forms (psi form or the eta = -1 form), the
// vanishing pattern predicted by eta, and dim Mv.
NormPattern verify_norm_formula(const GlobalContext& ctx, const LocalSpectrum& ls, const Vector& v,
                                double eta, VerificationReport& report);

// Explicit thin module Mv for v in U_eta, eta = tilde(theta_n). Throws
// VerificationError if v is not an eigenvector for tilde(theta_n) or n is not
// a module index for the parity of D.
TModuleDescriptor construct_endpoint2_module(const GlobalContext& ctx, const DualIdempotents& duals,
                                             const LocalSpectrum& ls, const Vector& v, int n,
                                             VerificationReport& report);

// The vanishing, summation and three-term identities of E*_i A_j v for
// v in U_eta, eta = tilde(theta_n).
VerificationReport verify_endpoint2_identities(const GlobalContext& ctx,
                                               const DualIdempotents& duals, const Vector& v,
                                               int n);

// T v, by closing span(v) under A and the E*_i. Basis is orthonormal and
// E*-graded. Throws VerificationError if the closure exceeds n.
TModuleDescriptor thinness_and_endpoint(const GlobalContext& ctx, const DualIdempotents& duals,
                                        const Vector& v);

struct EndpointTwoModule {
    double eta = 0;
    Vector seed;
    TModuleDescriptor closure;
    std::optional<TModuleDescriptor> module;  // explicit basis, eta = tilde(theta_n) only
    NormPattern norms;
};

struct MultiplicityRow {
    int n = 0;
    double eta = 0;
    int mu = 0;
    int dim_U = 0;
    int mult = 0;
};

struct DimensionAccounting {
    std::int64_t endpoint0 = 0;       // D + 1
    std::int64_t endpoint1 = 0;       // (k - 1)(D - 1)
    std::int64_t endpoint2_thin = 0;  // sum mu (D - 3)
    std::int64_t residual = 0;        // everything else
    std::int64_t total = 0;           // |X|
};

struct VertexAnalysis {
    int x = 0;
    DualIdempotents duals;
    StandardVectors sv;
    TModuleDescriptor V0;
    Endpoint1Space Y;
    LocalSpectrum local;
    SubspaceU U;
    std::vector<EndpointTwoModule> modules;  // one per orthonormal eigenvector of U
    std::vector<MultiplicityRow> multiplicities;
    DimensionAccounting accounting;
    VerificationReport report;
};

// mu_eta = dim U_eta = mult_eta for eta = tilde(theta_n) over the module
// indices, plus the dimension accounting. Throws VerificationError when the
// three disagree.
std::vector<MultiplicityRow> multiplicity_report(const GlobalContext& ctx, VertexAnalysis& va);

// Runs every operation above at base vertex x, plus the matrix identity for
// E*_2 E_i E*_2, the equivalent characterizations of v orthogonal to s_2, and
// orthogonality of modules with different local eigenvalues.
VertexAnalysis analyze_vertex(const GlobalContext& ctx, int x);

}  // namespace tautdrg
