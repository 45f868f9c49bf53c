#pragma once

#include <memory>
#include <vector>

#include "tautdrg/check.hpp"
#include "tautdrg/context.hpp"
#include "tautdrg/subconstituent.hpp"
#include "tautdrg/taut.hpp"

namespace tautdrg {

struct AnalysisOptions {
    std::vector<int> vertices = {0};  // base vertices to analyze
    bool all_vertices = false;        // overrides `vertices`
    Tolerances tol;
};

struct Analysis {
    std::unique_ptr<GlobalContext> ctx;
    std::vector<VertexAnalysis> vertices;
    TautReport taut;

    // Global, per-vertex and classification checks in that order.
    VerificationReport combined() const;
};

// Gate, global data, per-vertex analyses (run concurrently) and the
// classification. Throws what the stages throw.
Analysis run_analysis(Graph g, const AnalysisOptions& opts);

}  // namespace tautdrg
