#include "tautdrg/pipeline.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "tautdrg/error.hpp"

namespace tautdrg {

VerificationReport Analysis::combined() const
{
    VerificationReport r;
    r.append(ctx->report);
    for (const auto& v : vertices)
        r.append(v.report);
    r.append(taut.report);
    return r;
}

Analysis run_analysis(Graph g, const AnalysisOptions& opts)
{
    if (!opts.tol.valid())
        throw ParseError("tolerances must be positive");
    Analysis out;
    out.ctx = std::make_unique<GlobalContext>(std::move(g), opts.tol);
    const GlobalContext& ctx = *out.ctx;

    std::vector<int> xs = opts.vertices;
    if (opts.all_vertices) {
        xs.resize(ctx.n());
        for (int x = 0; x < ctx.n(); ++x)
            xs[x] = x;
    }
    for (int x : xs)
        if (x < 0 || x >= ctx.n())
            throw ParseError("vertex " + std::to_string(x) + " out of range 0.." +
                             std::to_string(ctx.n() - 1));

    // fixed-size batches of independent per-vertex analyses
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    out.vertices.reserve(xs.size());
    for (std::size_t start = 0; start < xs.size(); start += width) {
        std::vector<std::future<VertexAnalysis>> batch;
        for (std::size_t i = start; i < std::min(xs.size(), start + width); ++i)
            batch.push_back(std::async(std::launch::async, [&ctx, x = xs[i]] { return analyze_vertex(ctx, x); }));
        for (auto& f : batch)
            out.vertices.push_back(f.get());
    }
    out.taut = classify(ctx, out.vertices);
    return out;
}

}  // namespace tautdrg
