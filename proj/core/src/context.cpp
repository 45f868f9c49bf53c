#include "tautdrg/context.hpp"

namespace tautdrg {

namespace {

std::vector<DualEigenvalueSequence> all_duals(const PrimitiveIdempotents& idem, const Spectrum& spec,
                                              const DistanceData& dd, const Tolerances& tol,
                                              VerificationReport& report)
{
    std::vector<DualEigenvalueSequence> out;
    for (int i = 0; i <= spec.D; ++i)
        out.push_back(dual_eigenvalues(idem, spec, dd, i, tol, report));
    return out;
}

}  // namespace

GlobalContext::GlobalContext(Graph graph_in, const Tolerances& tol_in)
    : tol(tol_in),
      graph(std::move(graph_in)),
      dd(distance_data(graph)),
      va(validate_hypotheses(intersection_array(graph, dd))),
      pnum(va.array()),
      p222(intersection_number(va.array(), graph, dd, 2, 2, 2)),
      dm(distance_matrices(dd, va, report)),
      spec(spectrum(va, dm, tol, report)),
      idem(primitive_idempotents(spec, dm.A(), tol, report)),
      duals(all_duals(idem, spec, dd, tol, report)),
      f(build_f(va)),
      p(build_p(f)),
      psi(va, p)
{
    report.append(verify_bipartite_spectrum(va, p222, dm, spec, idem, duals, tol));
    report.append(verify_families(va, f, p));
    report.append(verify_f_at_adjacency(f, dm, tol));
    report.append(verify_psi(va, p, psi));
    for (int n : module_indices(spec.D)) {
        auto fam = build_g(va, p, spec, n);
        report.append(verify_g(va, p, psi, fam));
        g.emplace(n, std::move(fam));
    }
    for (Family fam : {Family::F, Family::P, Family::Psi, Family::G})
        report.append(verify_orthogonality(fam, va, f, p, psi, spec));
    report.append(verify_sign_patterns(p, spec));
    report.append(verify_theta_star_links(va, f, p, duals));
}

}  // namespace tautdrg
