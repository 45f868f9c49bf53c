#pragma once

#include <vector>

#include "tautdrg/bose_mesner.hpp"
#include "tautdrg/check.hpp"
#include "tautdrg/graph.hpp"
#include "tautdrg/polynomial.hpp"

namespace tautdrg {

// f_0 = 1, lambda f_i = b_{i-1} f_{i-1} + c_{i+1} f_{i+1}; f_i(A) = A_i.
struct PolyFamilyF {
    std::vector<Polynomial> f;  // f_0..f_D
};

// p_i = f_i + f_{i-2} + ... (same parity).
struct PolyFamilyP {
    std::vector<Polynomial> p;  // p_0..p_D
};

PolyFamilyF build_f(const ValidatedArray& va);
PolyFamilyP build_p(const PolyFamilyF& f);

// Coefficient-level checks of both families: three-term recurrences, leading
// coefficients, f_1 and f_2, the partial-sum definition and
// (k^2 - lambda^2) p_i = b_i b_{i+1} f_i - c_{i+1} c_{i+2} f_{i+2}.
VerificationReport verify_families(const ValidatedArray& va, const PolyFamilyF& f,
                                   const PolyFamilyP& p);

// f_i(A) = A_i as matrices.
VerificationReport verify_f_at_adjacency(const PolyFamilyF& f, const DistanceMatrices& dm,
                                         const Tolerances& tol);

// Evaluator for the two-variable Psi_i(lambda, mu), 0 <= i <= D-2, as the
// parity-restricted sum of products p_h(lambda) p_h(mu) k_i b_i b_{i+1} /
// (k_h b_h b_{h+1}).
class PsiFamily {
public:
    PsiFamily(const ValidatedArray& va, const PolyFamilyP& p);
    int max_index() const { return D_ - 2; }
    double operator()(int i, double lambda, double mu) const;

private:
    IntersectionArray ia_;
    std::vector<Polynomial> p_;
    int D_;
};

// double eval_psi(psi, i, lambda, mu)
inline double eval_psi(const PsiFamily& psi, int i, double lambda, double mu)
{
    return psi(i, lambda, mu);
}

// Psi_0 = 1, Psi_1 = lambda mu, the Christoffel-Darboux form and
// p_i(lambda)p_i(mu) = Psi_i - b_i b_{i+1}/(c_i c_{i-1}) Psi_{i-2}, all at
// deterministic pseudo-random sample points.
VerificationReport verify_psi(const ValidatedArray& va, const PolyFamilyP& p, const PsiFamily& psi,
                              int samples = 20);

// Eigenvalue indices theta may take for the g family: 1, d, d+1, D-1 if D is
// odd; 1, D-1 if D is even.
std::vector<int> admissible_indices(int D);

// Indices n for which endpoint-2 modules with local eigenvalue tilde(theta_n)
// get explicit bases: {1, d} if D is odd, {1} if D is even.
std::vector<int> module_indices(int D);

struct PolyFamilyG {
    int n = 0;
    double theta = 0;
    std::vector<double> p_at_theta;  // p_0(theta)..p_D(theta)
    std::vector<Polynomial> g;       // g_0..g_{D-2}
    std::vector<double> omega;       // omega_0 = 0, omega_1..omega_{D-3}
};

// Throws VerificationError when n is not admissible for the parity of D or
// some p_i(theta_n), 0 <= i <= D-2, vanishes.
PolyFamilyG build_g(const ValidatedArray& va, const PolyFamilyP& p, const Spectrum& spec, int n);

// g_0 = 1, leading coefficients, lambda g_i = c_{i+1} g_{i+1} + omega_i g_{i-1}
// as a coefficient identity, Psi_i(lambda, theta) = p_i(theta) g_i(lambda) and
// p_i = g_i - b_i b_{i+1}/(c_{i-1} c_i) p_{i-2}(theta)/p_i(theta) g_{i-2}
// at sample points.
VerificationReport verify_g(const ValidatedArray& va, const PolyFamilyP& p, const PsiFamily& psi,
                            const PolyFamilyG& g, int samples = 20);

enum class Family { F, P, Psi, G };

// Weighted orthogonality sums over the spectrum for one family, max scaled
// deviation over all index pairs. For P also p_D(theta_h) = p_{D-1}(theta_h) = 0
// for 1 <= h <= D-1; for Psi every admissible mu = theta_n; for G every
// admissible n.
VerificationReport verify_orthogonality(Family family, const ValidatedArray& va,
                                        const PolyFamilyF& f, const PolyFamilyP& p,
                                        const PsiFamily& psi, const Spectrum& spec);

// Sign patterns of p_i at theta_1, theta_{D-1} and, for odd D, theta_d, theta_{d+1}.
VerificationReport verify_sign_patterns(const PolyFamilyP& p, const Spectrum& spec);

// f_i(theta) = k_i theta*_i/theta*_0; p_i(theta) expressed through dual
// eigenvalue differences; (theta^2 - b_2)/(b_2 b_3) = (theta*_2 - theta*_4)/(theta*_0 - theta*_2).
VerificationReport verify_theta_star_links(const ValidatedArray& va, const PolyFamilyF& f,
                                           const PolyFamilyP& p,
                                           const std::vector<DualEigenvalueSequence>& duals);

}  // namespace tautdrg
