#include "tautdrg/taut.hpp"

#include <cmath>

#include "tautdrg/error.hpp"

namespace tautdrg {

namespace {

double dbl(std::int64_t v) { return static_cast<double>(v); }

std::string at_x(int x) { return "x=" + std::to_string(x); }

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw VerificationError(what);
}

}  // namespace

std::int64_t delta(const IntersectionArray& ia)
{
    const std::int64_t k = ia.valency(), b2 = ia.b(2), c2 = ia.c(2), c3 = ia.c(3);
    // c_2 Delta, with c_2 p^2_22 = b_2(c_3-1) + c_2(k-2)
    const std::int64_t scaled = (k - 2) * (c3 - 1) * c2 - (c2 - 1) * (b2 * (c3 - 1) + c2 * (k - 2));
    if (scaled % c2 != 0)
        throw HypothesisError("Delta is not an integer (c_2 Delta = " + std::to_string(scaled) +
                              ", c_2 = " + std::to_string(c2) + ")");
    return scaled / c2;
}

Sides curtin_sides(const IntersectionArray& ia, const Spectrum& spec)
{
    const double k = dbl(ia.valency()), b2 = dbl(ia.b(2)), c2 = dbl(ia.c(2));
    const double t1 = spec.theta[1];
    return {b2 * (k - 2), (c2 - 1) * t1 * t1};
}

Sides bfb_sides(const IntersectionArray& ia, const Spectrum& spec)
{
    const double k = dbl(ia.valency()), b1 = dbl(ia.b(1)), b2 = dbl(ia.b(2)), b3 = dbl(ia.b(3));
    const double c2 = dbl(ia.c(2));
    const double t1 = spec.theta[1] * spec.theta[1];
    const double td = spec.theta[spec.d()] * spec.theta[spec.d()];
    const double dl = dbl(delta(ia));
    return {b3 * (b2 * (k - 2) - (c2 - 1) * t1) * (b2 * (k - 2) - (c2 - 1) * td),
            b1 * dl * (t1 - b2) * (b2 - td)};
}

bool sides_equal(const Sides& s, double tol)
{
    return std::abs(s.lhs - s.rhs) <= tol * std::max({1.0, std::abs(s.lhs), std::abs(s.rhs)});
}

bool two_homogeneous_check(const IntersectionArray& ia, const Spectrum& spec, double tol)
{
    const Sides s = curtin_sides(ia, spec);
    const bool eq = sides_equal(s, tol);
    if (!eq && s.lhs < s.rhs)
        throw VerificationError("b_2(k-2) < (c_2-1) theta_1^2: " + std::to_string(s.lhs) + " < " +
                                std::to_string(s.rhs));
    return eq;
}

bool spectrally_taut(const LocalSpectrum& ls, double tau)
{
    for (const auto& e : ls.phi)
        if (std::abs(e.eta - ls.theta_tilde_1) > tau && std::abs(e.eta - ls.theta_tilde_d) > tau)
            return false;
    return true;
}

bool algebraically_taut(const GlobalContext& ctx, const VertexAnalysis& an)
{
    if (ctx.D() % 2 == 0)
        throw HypothesisError("algebraic tautness needs odd D (D = " + std::to_string(ctx.D()) + ")");
    const double tau = ctx.tol.cluster_for(dbl(ctx.p222));
    for (const auto& mod : an.modules) {
        const bool at_end = std::abs(mod.eta - an.local.theta_tilde_1) <= tau ||
                            std::abs(mod.eta - an.local.theta_tilde_d) <= tau;
        if (!mod.closure.thin || !at_end)
            return false;
    }
    return true;
}

bool two_thin(const VertexAnalysis& an)
{
    for (const auto& mod : an.modules)
        if (!mod.closure.thin)
            return false;
    return true;
}

std::string to_string(Classification c)
{
    switch (c) {
    case Classification::TwoHomogeneous:
        return "2-homogeneous";
    case Classification::Taut:
        return "taut";
    case Classification::Neither:
        return "neither";
    }
    return "neither";
}

TautReport classify(const GlobalContext& ctx, const std::vector<VertexAnalysis>& analyses)
{
    const auto& ia = ctx.ia();
    const auto& spec = ctx.spec;
    const int D = ctx.D();
    const double tc = ctx.tol.classify;
    const double tau = ctx.tol.cluster_for(dbl(ctx.p222));
    const bool odd = D % 2 == 1;

    TautReport t;
    auto& rep = t.report;
    t.delta = delta(ia);
    t.p222 = dbl(ctx.p222);
    const double k = ctx.k(), b2 = dbl(ia.b(2)), c2 = dbl(ia.c(2));
    const double p222_closed = (b2 * dbl(ia.c(3) - 1) + c2 * (k - 2)) / c2;
    rep.add("p^2_22 closed form", "p^2_22 = (b_2(c_3-1) + c_2(k-2))/c_2",
            std::abs(t.p222 - p222_closed), tc);

    require(t.delta >= 0, "Delta = " + std::to_string(t.delta) + " < 0");
    rep.add_flag("Delta >= 0", "Delta = (k-2)(c_3-1) - (c_2-1) p^2_22 >= 0", true);

    t.curtin = curtin_sides(ia, spec);
    t.curtin_equal = two_homogeneous_check(ia, spec, tc);
    rep.add_flag("b_2(k-2) >= (c_2-1) theta_1^2", "b_2(k-2) >= (c_2-1) theta_1^2", true);

    t.bfb = bfb_sides(ia, spec);
    t.bfb_equal = sides_equal(t.bfb, tc);
    require(t.bfb_equal || t.bfb.lhs > t.bfb.rhs,
            "taut inequality violated: " + std::to_string(t.bfb.lhs) + " < " + std::to_string(t.bfb.rhs));
    rep.add_flag("taut inequality", "b_3 (b_2(k-2) - (c_2-1)theta_1^2)(b_2(k-2) - (c_2-1)theta_d^2) >= b_1 Delta (theta_1^2 - b_2)(b_2 - theta_d^2)",
                 true);

    if (!t.bfb_equal)
        t.classification = Classification::Neither;
    else
        t.classification = t.delta == 0 ? Classification::TwoHomogeneous : Classification::Taut;
    const bool taut = t.classification == Classification::Taut;
    const bool twohom = t.classification == Classification::TwoHomogeneous;
    require(t.curtin_equal == twohom,
            "Curtin equality and (Delta = 0 with equality in the taut inequality) disagree");
    rep.add_flag("2-homogeneous iff Curtin equality", "Curtin equality iff Delta = 0 and equality", true);

    t.antipodal_2cover = ia.k_i(D) == 1;
    require(t.antipodal_2cover == is_antipodal_2cover(ctx.dd),
            "k_D = 1 disagrees with the antipode count");

    if (taut) {
        const double t1 = spec.theta[1] * spec.theta[1];
        const double td = spec.theta[ctx.d()] * spec.theta[ctx.d()];
        t.predicted_mult_1 = k * (t1 - b2) * (b2 * (k - 2) - (c2 - 1) * td) / ((t1 - td) * b2 * c2);
        t.predicted_mult_d = k * (td - b2) * (b2 * (k - 2) - (c2 - 1) * t1) / ((td - t1) * b2 * c2);
        rep.add_flag("predicted multiplicities nonzero", "mult_{tilde theta_1}, mult_{tilde theta_d} != 0",
                     std::abs(*t.predicted_mult_1) > 0.5 && std::abs(*t.predicted_mult_d) > 0.5);
        rep.add("predicted multiplicities sum", "k + mult_{tilde theta_1} + mult_{tilde theta_d} = k_2",
                std::abs(k + *t.predicted_mult_1 + *t.predicted_mult_d - dbl(ia.k_i(2))), tc * dbl(ia.k_i(2)));
    }

    for (const auto& an : analyses) {
        VertexTaut v;
        v.x = an.x;
        v.spectrally_taut = spectrally_taut(an.local, tau);
        v.two_thin = two_thin(an);
        if (odd)
            v.algebraically_taut = algebraically_taut(ctx, an);
        v.mult_theta_tilde_1 = an.local.mult(an.local.theta_tilde_1, tau);
        v.mult_theta_tilde_d = an.local.mult(an.local.theta_tilde_d, tau);
        const std::string w = at_x(an.x);

        require(v.spectrally_taut == t.bfb_equal,
                "spectral tautness at " + w + " disagrees with equality in the taut inequality");
        require(taut == (t.delta != 0 && v.spectrally_taut),
                "taut iff Delta != 0 and spectrally taut fails at " + w);
        rep.add_flag("taut iff Delta != 0 and spectrally taut", "taut iff Delta != 0 and spectrally taut at x",
                     true, w);
        if (odd) {
            require(*v.algebraically_taut == v.spectrally_taut,
                    "spectral and algebraic tautness disagree at " + w);
            require(taut == (t.delta != 0 && *v.algebraically_taut),
                    "taut iff Delta != 0 and algebraically taut fails at " + w);
            require((taut || twohom) == (t.antipodal_2cover && v.two_thin),
                    "taut or 2-homogeneous iff antipodal 2-cover and 2-thin fails at " + w);
            rep.add_flag("algebraic taut equivalences",
                         "spectrally taut iff algebraically taut; taut or 2-homogeneous iff antipodal 2-cover and 2-thin",
                         true, w);
        }
        if (taut) {
            const bool match = std::abs(v.mult_theta_tilde_1 - *t.predicted_mult_1) <= tc * k &&
                               std::abs(v.mult_theta_tilde_d - *t.predicted_mult_d) <= tc * k;
            rep.add_flag("predicted multiplicities observed", "mult_eta from the local spectrum = closed forms",
                         match, w + " observed " + std::to_string(v.mult_theta_tilde_1) + "," +
                                    std::to_string(v.mult_theta_tilde_d));
        }
        t.vertices.push_back(v);
    }
    if (!analyses.empty())
        t.observed = analyses.front().local.phi;
    return t;
}

}  // namespace tautdrg
