#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tautdrg/bose_mesner.hpp"
#include "tautdrg/check.hpp"
#include "tautdrg/graph.hpp"
#include "tautdrg/polynomials.hpp"
#include "tautdrg/tolerances.hpp"

namespace tautdrg {

// Everything that does not depend on a base vertex, built once and then
// shared read-only by the per-vertex analyses.
//
// Construction throws HypothesisError when the graph fails the gates and
// VerificationError on structural numeric failures (spectrum mismatch,
// non-integral multiplicities). Everything else lands in `report`.
class GlobalContext {
public:
    GlobalContext(Graph g, const Tolerances& tol);

    const Tolerances tol;
    VerificationReport report;

    const Graph graph;
    const DistanceData dd;
    const ValidatedArray va;
    const IntersectionNumbers pnum;
    const std::int64_t p222;  // counted

    DistanceMatrices dm;
    Spectrum spec;
    PrimitiveIdempotents idem;
    std::vector<DualEigenvalueSequence> duals;  // one per E_i
    PolyFamilyF f;
    PolyFamilyP p;
    PsiFamily psi;
    std::map<int, PolyFamilyG> g;  // keyed by module index n

    const IntersectionArray& ia() const { return va.array(); }
    int n() const { return graph.order(); }
    int D() const { return spec.D; }
    int d() const { return spec.d(); }
    double k() const { return static_cast<double>(va->valency()); }
};

}  // namespace tautdrg
