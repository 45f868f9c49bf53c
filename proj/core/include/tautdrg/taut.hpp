#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tautdrg/bose_mesner.hpp"
#include "tautdrg/check.hpp"
#include "tautdrg/context.hpp"
#include "tautdrg/subconstituent.hpp"

namespace tautdrg {

// (k-2)(c_3-1) - (c_2-1) p^2_22 in exact arithmetic, p^2_22 taken from its
// closed form. Throws HypothesisError when the value is not an integer.
std::int64_t delta(const IntersectionArray& ia);

struct Sides {
    double lhs = 0;
    double rhs = 0;
};

// b_2(k-2) against (c_2-1) theta_1^2.
Sides curtin_sides(const IntersectionArray& ia, const Spectrum& spec);

// b_3 (b_2(k-2) - (c_2-1)theta_1^2)(b_2(k-2) - (c_2-1)theta_d^2) against
// b_1 Delta (theta_1^2 - b_2)(b_2 - theta_d^2).
Sides bfb_sides(const IntersectionArray& ia, const Spectrum& spec);

// |lhs - rhs| <= tol max(1, |lhs|, |rhs|)
bool sides_equal(const Sides& s, double tol);

// Curtin equality. Throws VerificationError if lhs < rhs beyond tolerance.
bool two_homogeneous_check(const IntersectionArray& ia, const Spectrum& spec, double tol);

// Every eta_i, i > k, within tau of tilde(theta_1) or tilde(theta_d).
bool spectrally_taut(const LocalSpectrum& ls, double tau);

// Odd D only (HypothesisError otherwise): every U_eta eigenvector closure is
// thin and eta is tilde(theta_1) or tilde(theta_d).
bool algebraically_taut(const GlobalContext& ctx, const VertexAnalysis& an);

// Every U_eta eigenvector closure is thin.
bool two_thin(const VertexAnalysis& an);

enum class Classification { TwoHomogeneous, Taut, Neither };

std::string to_string(Classification c);

struct VertexTaut {
    int x = 0;
    bool spectrally_taut = false;
    std::optional<bool> algebraically_taut;  // odd D only
    bool two_thin = false;
    int mult_theta_tilde_1 = 0;
    int mult_theta_tilde_d = 0;
};

struct TautReport {
    std::int64_t delta = 0;
    double p222 = 0;
    Sides curtin;
    Sides bfb;
    bool curtin_equal = false;
    bool bfb_equal = false;
    Classification classification = Classification::Neither;
    bool antipodal_2cover = false;
    std::vector<VertexTaut> vertices;
    std::optional<double> predicted_mult_1;  // taut case
    std::optional<double> predicted_mult_d;
    std::vector<EtaMultiplicity> observed;   // at the first analyzed vertex
    VerificationReport report;
};

// Global flags plus the per-vertex conditions. Any disagreement with the
// equivalences between the taut condition, spectral tautness, algebraic
// tautness and 2-thinness throws VerificationError, as do violations of
// Delta >= 0 and of the two inequalities.
TautReport classify(const GlobalContext& ctx, const std::vector<VertexAnalysis>& analyses);

}  // namespace tautdrg
