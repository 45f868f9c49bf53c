#include "tautdrg/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "tautdrg/error.hpp"

namespace tautdrg {

namespace {

constexpr double kCoeffTol = 1e-10;
constexpr double kValueTol = 1e-8;

double rel(double a, double b, double scale = 0)
{
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b), std::abs(scale)});
}

double dbl(std::int64_t v) { return static_cast<double>(v); }

// Largest |coefficient| in the pair, for scaling coefficient comparisons.
double coeff_scale(const Polynomial& a, const Polynomial& b)
{
    double s = 1;
    for (double c : a.coeffs())
        s = std::max(s, std::abs(c));
    for (double c : b.coeffs())
        s = std::max(s, std::abs(c));
    return s;
}

double coeff_rel(const Polynomial& a, const Polynomial& b)
{
    return a.distance(b) / coeff_scale(a, b);
}

// Sum_k |c_k| |x|^k, the size of the terms in p(x).
double eval_scale(const Polynomial& p, double x)
{
    double s = 0, pw = 1;
    for (double c : p.coeffs()) {
        s += std::abs(c) * pw;
        pw *= std::abs(x);
    }
    return s;
}

// prod_{j=lo}^{hi} v(j), 1 when empty
template <class F>
double product(int lo, int hi, F v)
{
    double r = 1;
    for (int j = lo; j <= hi; ++j)
        r *= v(j);
    return r;
}

std::vector<std::pair<double, double>> sample_points(double k, int count, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-k - 1, k + 1);
    std::vector<std::pair<double, double>> pts(count);
    for (auto& [x, y] : pts) {
        x = u(rng);
        y = u(rng);
    }
    return pts;
}

}  // namespace

PolyFamilyF build_f(const ValidatedArray& va)
{
    const auto& ia = va.array();
    const int D = ia.diameter();
    PolyFamilyF out;
    out.f.push_back(Polynomial::constant(1));
    // f_{i+1} = (lambda f_i - b_{i-1} f_{i-1}) / c_{i+1}
    for (int i = 0; i < D; ++i) {
        Polynomial next = out.f[i].times_lambda();
        if (i > 0)
            next = next - dbl(ia.b(i - 1)) * out.f[i - 1];
        out.f.push_back(next / dbl(ia.c(i + 1)));
    }
    return out;
}

PolyFamilyP build_p(const PolyFamilyF& f)
{
    PolyFamilyP out;
    for (std::size_t i = 0; i < f.f.size(); ++i)
        out.p.push_back(i >= 2 ? f.f[i] + out.p[i - 2] : f.f[i]);
    return out;
}

VerificationReport verify_families(const ValidatedArray& va, const PolyFamilyF& F,
                                   const PolyFamilyP& P)
{
    const auto& ia = va.array();
    const int D = ia.diameter();
    const double k = dbl(ia.valency());
    const auto& f = F.f;
    const auto& p = P.p;
    VerificationReport r;

    r.add("f_0 = 1", "f_0 = 1", f[0].distance(Polynomial::constant(1)), kCoeffTol);
    r.add("f_1 = lambda", "f_1 = lambda", f[1].distance(Polynomial::lambda()), kCoeffTol);
    r.add("f_2 = (lambda^2 - k)/c_2", "f_2 = (lambda^2 - k)/c_2",
          coeff_rel(f[2], Polynomial({-k, 0.0, 1.0}) / dbl(ia.c(2))), kCoeffTol);

    double rec = 0, lead = 0;
    for (int i = 0; i <= D; ++i) {
        const double want = 1.0 / product(1, i, [&](int j) { return dbl(ia.c(j)); });
        lead = std::max(lead, rel(f[i].leading(), want));
        if (f[i].degree() != i)
            lead = std::max(lead, 1.0);
        if (i < D) {
            const Polynomial lhs = f[i].times_lambda();
            Polynomial rhs = dbl(ia.c(i + 1)) * f[i + 1];
            if (i > 0)
                rhs = rhs + dbl(ia.b(i - 1)) * f[i - 1];
            rec = std::max(rec, coeff_rel(lhs, rhs));
        }
    }
    r.add("f recurrence", "lambda f_i = b_{i-1} f_{i-1} + c_{i+1} f_{i+1}", rec, kCoeffTol);
    r.add("f leading coefficient", "lead(f_i) = (c_1...c_i)^-1", lead, kCoeffTol);

    double sums = 0, prec = 0, ident = 0, plead = 0;
    for (int i = 0; i <= D; ++i) {
        Polynomial partial;
        for (int h = i % 2; h <= i; h += 2)
            partial = partial + f[h];
        sums = std::max(sums, coeff_rel(p[i], partial));
        if (i >= 2)
            sums = std::max(sums, coeff_rel(p[i] - p[i - 2], f[i]));
        plead = std::max(plead, rel(p[i].leading(), f[i].leading()));
        if (i < D) {
            const Polynomial lhs = p[i].times_lambda();
            Polynomial rhs = dbl(ia.c(i + 1)) * p[i + 1];
            if (i > 0)
                rhs = rhs + dbl(ia.b(i + 1)) * p[i - 1];
            prec = std::max(prec, coeff_rel(lhs, rhs));
        }
        if (i <= D - 2) {
            const Polynomial lhs = k * k * p[i] - p[i].times_lambda().times_lambda();
            const Polynomial rhs = dbl(ia.b(i) * ia.b(i + 1)) * f[i] -
                                   dbl(ia.c(i + 1) * ia.c(i + 2)) * f[i + 2];
            ident = std::max(ident, coeff_rel(lhs, rhs));
        }
    }
    r.add("p partial sums", "p_i = f_i + f_{i-2} + ..., p_i - p_{i-2} = f_i", sums, kCoeffTol);
    r.add("p leading coefficient", "lead(p_i) = (c_1...c_i)^-1", plead, kCoeffTol);
    r.add("p recurrence", "lambda p_i = c_{i+1} p_{i+1} + b_{i+1} p_{i-1}", prec, kCoeffTol);
    r.add("(k^2 - lambda^2) p_i", "(k^2 - lambda^2) p_i = b_i b_{i+1} f_i - c_{i+1} c_{i+2} f_{i+2}",
          ident, kCoeffTol);
    return r;
}

VerificationReport verify_f_at_adjacency(const PolyFamilyF& f, const DistanceMatrices& dm,
                                         const Tolerances& tol)
{
    VerificationReport r;
    double worst = 0;
    for (int i = 0; i <= dm.D; ++i)
        worst = std::max(worst, (f.f[i].at(dm.A()) - dm.real[i]).cwiseAbs().maxCoeff());
    r.add("f_i(A) = A_i", "f_i(A) = A_i", worst, tol.eig * dm.n);
    return r;
}

PsiFamily::PsiFamily(const ValidatedArray& va, const PolyFamilyP& p)
    : ia_(va.array()), p_(p.p), D_(va->diameter())
{
}

double PsiFamily::operator()(int i, double lambda, double mu) const
{
    if (i < 0 || i > D_ - 2)
        throw VerificationError("Psi_i defined for 0 <= i <= D-2");
    const double top = dbl(ia_.k_i(i) * ia_.b(i) * ia_.b(i + 1));
    double s = 0;
    for (int h = i % 2; h <= i; h += 2)
        s += p_[h](lambda) * p_[h](mu) * top / dbl(ia_.k_i(h) * ia_.b(h) * ia_.b(h + 1));
    return s;
}

VerificationReport verify_psi(const ValidatedArray& va, const PolyFamilyP& P, const PsiFamily& psi,
                              int samples)
{
    const auto& ia = va.array();
    const int D = ia.diameter();
    const auto& p = P.p;
    VerificationReport r;
    const auto pts = sample_points(dbl(ia.valency()), samples, 4242u);

    double base = 0, cd = 0, pp = 0;
    for (const auto& [x, y] : pts) {
        base = std::max(base, rel(psi(0, x, y), 1.0));
        base = std::max(base, rel(psi(1, x, y), x * y));
        for (int i = 1; i <= D - 1; ++i) {
            const double a = p[i + 1](x) * p[i - 1](y);
            const double b = p[i - 1](x) * p[i + 1](y);
            const double rhs = (x * x - y * y) * psi(i - 1, x, y) / dbl(ia.c(i) * ia.c(i + 1));
            cd = std::max(cd, rel(a - b, rhs, std::max(std::abs(a), std::abs(b))));
        }
        for (int i = 2; i <= D - 2; ++i) {
            const double rhs =
                psi(i, x, y) - dbl(ia.b(i) * ia.b(i + 1)) / dbl(ia.c(i) * ia.c(i - 1)) * psi(i - 2, x, y);
            pp = std::max(pp, rel(p[i](x) * p[i](y), rhs, psi(i, x, y)));
        }
    }
    r.add("Psi_0 = 1, Psi_1 = lambda mu", "Psi_0 = 1, Psi_1 = lambda mu", base, kCoeffTol);
    r.add("Christoffel-Darboux",
          "p_{i+1}(l)p_{i-1}(m) - p_{i-1}(l)p_{i+1}(m) = (l^2-m^2) Psi_{i-1}/(c_i c_{i+1})", cd,
          kValueTol);
    r.add("p_i p_i via Psi", "p_i(l)p_i(m) = Psi_i - b_i b_{i+1}/(c_i c_{i-1}) Psi_{i-2}", pp,
          kValueTol);
    return r;
}

std::vector<int> admissible_indices(int D)
{
    if (D % 2 == 0)
        return {1, D - 1};
    const int d = D / 2;
    std::vector<int> out{1, d, d + 1, D - 1};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> module_indices(int D)
{
    if (D % 2 == 0)
        return {1};
    const int d = D / 2;
    return d == 1 ? std::vector<int>{1} : std::vector<int>{1, d};
}

PolyFamilyG build_g(const ValidatedArray& va, const PolyFamilyP& P, const Spectrum& spec, int n)
{
    const auto& ia = va.array();
    const int D = ia.diameter();
    const auto adm = admissible_indices(D);
    if (std::find(adm.begin(), adm.end(), n) == adm.end())
        throw VerificationError("eigenvalue index " + std::to_string(n) +
                                " is not admissible for the g polynomials at D = " + std::to_string(D));

    PolyFamilyG g;
    g.n = n;
    g.theta = spec.theta[n];
    for (const auto& poly : P.p)
        g.p_at_theta.push_back(poly(g.theta));
    const auto& pt = g.p_at_theta;
    for (int i = 0; i <= D - 2; ++i) {
        double scale = 0;
        for (double v : pt)
            scale = std::max(scale, std::abs(v));
        if (std::abs(pt[i]) <= 1e-12 * std::max(1.0, scale))
            throw VerificationError("p_" + std::to_string(i) + "(theta_" + std::to_string(n) +
                                    ") vanishes");
    }

    auto kbb = [&](int h) { return dbl(ia.k_i(h) * ia.b(h) * ia.b(h + 1)); };
    for (int i = 0; i <= D - 2; ++i) {
        Polynomial gi;
        for (int h = i % 2; h <= i; h += 2)
            gi = gi + (pt[h] * kbb(i) / (pt[i] * kbb(h))) * P.p[h];
        g.g.push_back(gi);
    }
    g.omega.assign(std::max(D - 2, 1), 0.0);
    for (int i = 1; i <= D - 3; ++i)
        g.omega[i] = dbl(ia.b(i + 1) * ia.c(i + 2)) / dbl(ia.c(i)) * pt[i - 1] * pt[i + 2] /
                     (pt[i] * pt[i + 1]);
    return g;
}

VerificationReport verify_g(const ValidatedArray& va, const PolyFamilyP& P, const PsiFamily& psi,
                            const PolyFamilyG& G, int samples)
{
    const auto& ia = va.array();
    const int D = ia.diameter();
    const auto& g = G.g;
    const auto& pt = G.p_at_theta;
    const std::string tag = " (theta_" + std::to_string(G.n) + ")";
    VerificationReport r;

    r.add("g_0 = 1" + tag, "g_0 = 1", g[0].distance(Polynomial::constant(1)), kCoeffTol);
    double lead = 0, rec = 0;
    for (int i = 0; i <= D - 2; ++i) {
        const double want = 1.0 / product(1, i, [&](int j) { return dbl(ia.c(j)); });
        lead = std::max(lead, g[i].degree() == i ? rel(g[i].leading(), want) : 1.0);
        if (i <= D - 3) {
            Polynomial rhs = dbl(ia.c(i + 1)) * g[i + 1];
            if (i > 0)
                rhs = rhs + G.omega[i] * g[i - 1];
            rec = std::max(rec, coeff_rel(g[i].times_lambda(), rhs));
        }
    }
    r.add("g leading coefficient" + tag, "lead(g_i) = (c_1...c_i)^-1", lead, kCoeffTol);
    r.add("g recurrence" + tag, "lambda g_i = c_{i+1} g_{i+1} + omega_i g_{i-1}", rec, kCoeffTol);

    const auto pts = sample_points(dbl(ia.valency()), samples, 777u + static_cast<unsigned>(G.n));
    double psig = 0, pigi = 0;
    for (const auto& pt2 : pts) {
        const double x = pt2.first;
        for (int i = 0; i <= D - 2; ++i)
            psig = std::max(psig, rel(psi(i, x, G.theta), pt[i] * g[i](x)));
        for (int i = 2; i <= D - 2; ++i) {
            const double rhs = g[i](x) - dbl(ia.b(i) * ia.b(i + 1)) / dbl(ia.c(i - 1) * ia.c(i)) *
                                             pt[i - 2] / pt[i] * g[i - 2](x);
            pigi = std::max(pigi, rel(P.p[i](x), rhs, g[i](x)));
        }
    }
    r.add("Psi_i(lambda, theta) = p_i(theta) g_i" + tag, "Psi_i(lambda, theta) = p_i(theta) g_i(lambda)",
          psig, kValueTol);
    r.add("p_i via g" + tag,
          "p_i = g_i - b_i b_{i+1}/(c_{i-1} c_i) p_{i-2}(theta)/p_i(theta) g_{i-2}", pigi, kValueTol);
    return r;
}

VerificationReport verify_orthogonality(Family family, const ValidatedArray& va,
                                        const PolyFamilyF& F, const PolyFamilyP& P,
                                        const PsiFamily& psi, const Spectrum& spec)
{
    const auto& ia = va.array();
    const int D = ia.diameter();
    const double n = dbl(spec.vertex_count());
    const double k = dbl(ia.valency());
    const auto& th = spec.theta;
    VerificationReport r;

    // max over (i, j) of |sum_h u_i(h) u_j(h) w(h) - delta_ij N_i| / max(1, sum_h |...|)
    auto weighted = [&](int top, auto value, auto weight, auto norm) {
        double worst = 0;
        for (int i = 0; i <= top; ++i)
            for (int j = i; j <= top; ++j) {
                double s = 0, mag = 0;
                for (int h = 0; h <= D; ++h) {
                    const double t = value(i, h) * value(j, h) * weight(h);
                    s += t;
                    mag += std::abs(t);
                }
                const double rhs = i == j ? norm(i) : 0.0;
                worst = std::max(worst, std::abs(s - rhs) / std::max({1.0, mag, std::abs(rhs)}));
            }
        return worst;
    };
    auto m = [&](int h) { return dbl(spec.mult[h]); };

    switch (family) {
    case Family::F: {
        const double res = weighted(
            D, [&](int i, int h) { return F.f[i](th[h]); }, m,
            [&](int i) { return n * dbl(ia.k_i(i)); });
        r.add("f orthogonality", "sum_h f_i(theta_h) f_j(theta_h) m_h = delta_ij |X| k_i", res, kValueTol);
        break;
    }
    case Family::P: {
        const double res = weighted(
            D - 2, [&](int i, int h) { return P.p[i](th[h]); },
            [&](int h) { return (k * k - th[h] * th[h]) * m(h); },
            [&](int i) { return n * dbl(ia.k_i(i) * ia.b(i) * ia.b(i + 1)); });
        r.add("p orthogonality",
              "sum_h p_i p_j (theta_h) (k^2 - theta_h^2) m_h = delta_ij |X| k_i b_i b_{i+1}", res,
              kValueTol);
        double vanish = 0;
        for (int h = 1; h <= D - 1; ++h)
            for (int i : {D - 1, D})
                vanish = std::max(vanish, std::abs(P.p[i](th[h])) / std::max(1.0, eval_scale(P.p[i], th[h])));
        r.add("p_D, p_{D-1} vanish", "p_D(theta_h) = p_{D-1}(theta_h) = 0, 1 <= h <= D-1", vanish,
              kValueTol);
        break;
    }
    case Family::Psi: {
        for (int nn : admissible_indices(D)) {
            const double mu = th[nn];
            const double res = weighted(
                D - 2, [&](int i, int h) { return psi(i, th[h], mu); },
                [&](int h) { return (k * k - th[h] * th[h]) * (mu * mu - th[h] * th[h]) * m(h); },
                [&](int i) {
                    return n * P.p[i](mu) * P.p[i + 2](mu) *
                           dbl(ia.k_i(i) * ia.b(i) * ia.b(i + 1) * ia.c(i + 1) * ia.c(i + 2));
                });
            r.add("Psi orthogonality, mu = theta_" + std::to_string(nn),
                  "sum_h Psi_i Psi_j (k^2-theta_h^2)(mu^2-theta_h^2) m_h = delta_ij |X| p_i(mu) "
                  "p_{i+2}(mu) k_i b_i b_{i+1} c_{i+1} c_{i+2}",
                  res, kValueTol);
        }
        break;
    }
    case Family::G: {
        for (int nn : admissible_indices(D)) {
            const auto G = build_g(va, P, spec, nn);
            const double t = G.theta;
            const double res = weighted(
                D - 2, [&](int i, int h) { return G.g[i](th[h]); },
                [&](int h) { return (k * k - th[h] * th[h]) * (t * t - th[h] * th[h]) * m(h); },
                [&](int i) {
                    return n * dbl(ia.k_i(i) * ia.b(i) * ia.b(i + 1) * ia.c(i + 1) * ia.c(i + 2)) *
                           G.p_at_theta[i + 2] / G.p_at_theta[i];
                });
            r.add("g orthogonality, theta = theta_" + std::to_string(nn),
                  "sum_h g_i g_j (k^2-theta_h^2)(theta^2-theta_h^2) m_h = delta_ij |X| k_i b_i b_{i+1} "
                  "c_{i+1} c_{i+2} p_{i+2}(theta)/p_i(theta)",
                  res, kValueTol);
        }
        break;
    }
    }
    return r;
}

VerificationReport verify_sign_patterns(const PolyFamilyP& P, const Spectrum& spec)
{
    const int D = spec.D;
    const int d = spec.d();
    VerificationReport r;
    auto check = [&](int index, auto sign, const std::string& name, const std::string& identity) {
        const double t = spec.theta[index];
        double scale = 0;
        for (int i = 0; i <= D - 2; ++i)
            scale = std::max(scale, std::abs(P.p[i](t)));
        const double slack = 1e-9 * scale;
        bool ok = true;
        std::string values;
        for (int i = 0; i <= D - 2; ++i) {
            const double v = P.p[i](t);
            ok = ok && sign(i) * v > slack;
            values += (i ? "," : "") + std::to_string(v);
        }
        r.add_flag(name, identity, ok, "p_i = (" + values + ")");
    };
    check(1, [](int) { return 1.0; }, "p_i(theta_1) > 0", "p_i(theta_1) > 0");
    check(D - 1, [](int i) { return i % 2 ? -1.0 : 1.0; }, "(-1)^i p_i(theta_{D-1}) > 0",
          "(-1)^i p_i(theta_{D-1}) > 0");
    if (D % 2 == 1) {
        check(d, [](int i) { return (i / 2) % 2 ? -1.0 : 1.0; }, "(-1)^floor(i/2) p_i(theta_d) > 0",
              "(-1)^floor(i/2) p_i(theta_d) > 0");
        check(d + 1, [](int i) { return ((i + 1) / 2) % 2 ? -1.0 : 1.0; },
              "(-1)^floor((i+1)/2) p_i(theta_{d+1}) > 0", "(-1)^floor((i+1)/2) p_i(theta_{d+1}) > 0");
    }
    return r;
}

VerificationReport verify_theta_star_links(const ValidatedArray& va, const PolyFamilyF& F,
                                           const PolyFamilyP& P,
                                           const std::vector<DualEigenvalueSequence>& duals)
{
    const auto& ia = va.array();
    const int D = ia.diameter();
    VerificationReport r;
    double fi = 0, pi = 0, frac = 0;
    for (const auto& seq : duals) {
        const auto& s = seq.star;
        const double t = seq.theta;
        for (int i = 0; i <= D; ++i)
            fi = std::max(fi, rel(F.f[i](t), dbl(ia.k_i(i)) * s[i] / s[0]));
        if (seq.index < 1 || seq.index > D - 1)
            continue;
        for (int i = 0; i <= D - 2; ++i) {
            const double ratio = product(2, i + 1, [&](int j) { return dbl(ia.b(j)); }) /
                                 product(1, i, [&](int j) { return dbl(ia.c(j)); });
            pi = std::max(pi, rel(P.p[i](t), ratio * (s[i] - s[i + 2]) / (s[0] - s[2])));
        }
        const double b2 = dbl(ia.b(2)), b3 = dbl(ia.b(3));
        frac = std::max(frac, rel((t * t - b2) / (b2 * b3), (s[2] - s[4]) / (s[0] - s[2])));
    }
    r.add("f_i(theta) via duals", "f_i(theta) = k_i theta*_i / theta*_0", fi, kValueTol);
    r.add("p_i(theta) via duals",
          "p_i(theta) = (b_2...b_{i+1})/(c_1...c_i) (theta*_i - theta*_{i+2})/(theta*_0 - theta*_2)", pi,
          kValueTol);
    r.add("(theta^2 - b_2)/(b_2 b_3)", "(theta^2 - b_2)/(b_2 b_3) = (theta*_2 - theta*_4)/(theta*_0 - theta*_2)",
          frac, kValueTol);
    return r;
}

}  // namespace tautdrg
