#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tautdrg/error.hpp"
#include "tautdrg/generators.hpp"
#include "tautdrg/polynomials.hpp"

using namespace tautdrg;

namespace {

struct Ctx {
    Graph g;
    DistanceData dd;
    ValidatedArray va;
    VerificationReport report;
    DistanceMatrices dm;
    Spectrum spec;
    PrimitiveIdempotents idem;
    std::vector<DualEigenvalueSequence> duals;
    PolyFamilyF f;
    PolyFamilyP p;

    explicit Ctx(Graph graph)
        : g(std::move(graph)), dd(distance_data(g)), va(validate_hypotheses(intersection_array(g, dd)))
    {
        const Tolerances tol;
        dm = distance_matrices(dd, va, report);
        spec = spectrum(va, dm, tol, report);
        idem = primitive_idempotents(spec, dm.A(), tol, report);
        for (int i = 0; i <= spec.D; ++i)
            duals.push_back(dual_eigenvalues(idem, spec, dd, i, tol, report));
        f = build_f(va);
        p = build_p(f);
    }
};

void expect_all_pass(const VerificationReport& r)
{
    ASSERT_GT(r.size(), 0u);
    for (const auto& c : r.checks())
        EXPECT_TRUE(c.pass) << c.name << " residual " << c.residual << " " << c.detail;
}

}  // namespace

TEST(Polynomial, Arithmetic)
{
    const Polynomial a{1, 2, 3};
    EXPECT_EQ(a.degree(), 2);
    EXPECT_DOUBLE_EQ(a(2.0), 17.0);
    EXPECT_EQ((a - a).degree(), -1);
    EXPECT_EQ(a.times_lambda().coeffs(), (std::vector<double>{0, 1, 2, 3}));
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    Vector v(2);
    v << 1, 0;
    // 1 + 2M + 3M^2 = 4I + 2M
    const Vector w = a.apply(m, v);
    EXPECT_DOUBLE_EQ(w[0], 4);
    EXPECT_DOUBLE_EQ(w[1], 2);
    EXPECT_LT((a.at(m) * v - w).norm(), 1e-15);
}

TEST(FamilyF, Hypercube4SecondPolynomial)
{
    Ctx c(hypercube(4));
    EXPECT_LT(c.f.f[2].distance(Polynomial{-2, 0, 0.5}), 1e-14);
    EXPECT_LT(c.p.p[0].distance(Polynomial::constant(1)), 1e-15);
    EXPECT_LT(c.p.p[1].distance(Polynomial::lambda()), 1e-15);
}

TEST(FamilyP, DesarguesValues)
{
    Ctx c(doubled_odd(3));
    EXPECT_NEAR(c.p.p[2](2.0), 2.0, 1e-12);
    const double at1[] = {1, 2, 2, 1};
    const double atd[] = {1, 1, -1, -1};
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(c.p.p[i](2.0), at1[i], 1e-12);
        EXPECT_NEAR(c.p.p[i](1.0), atd[i], 1e-12);
    }
}

TEST(FamilyP, Hypercube4AlternatesAtThetaDminus1)
{
    Ctx c(hypercube(4));
    const double want[] = {1, -2, 1, 0, 0};
    for (int i = 0; i <= 4; ++i)
        EXPECT_NEAR(c.p.p[i](-2.0), want[i], 1e-12);
}

TEST(Families, IdentitiesOnCorpus)
{
    for (const auto& g : {hypercube(4), hypercube(5), hypercube(6), doubled_odd(3), doubled_odd(4)}) {
        Ctx c(g);
        expect_all_pass(verify_families(c.va, c.f, c.p));
        expect_all_pass(verify_f_at_adjacency(c.f, c.dm, Tolerances{}));
    }
}

TEST(FamilyF, EigenvalueOfDistanceMatrix)
{
    // A_i acts on the theta_h eigenspace as f_i(theta_h), computed from eigenvectors
    Ctx c(doubled_odd(3));
    const Matrix a = oracle::adjacency(c.g);
    for (int h = 0; h <= c.spec.D; ++h) {
        const Matrix proj = oracle::projector(a, c.spec.theta[h]);
        for (int i = 0; i <= c.spec.D; ++i) {
            const double est = (c.dm.real[i] * proj).trace() / proj.trace();
            EXPECT_NEAR(c.f.f[i](c.spec.theta[h]), est, 1e-9);
        }
    }
}

TEST(Psi, SmallCases)
{
    Ctx c(doubled_odd(3));
    const PsiFamily psi(c.va, c.p);
    EXPECT_DOUBLE_EQ(eval_psi(psi, 0, 0.3, -7.0), 1.0);
    EXPECT_NEAR(eval_psi(psi, 1, 3, 5), 15, 1e-12);
    EXPECT_THROW(eval_psi(psi, 4, 1, 1), VerificationError);
    expect_all_pass(verify_psi(c.va, c.p, psi));
}

TEST(FamilyG, DesarguesOmega)
{
    Ctx c(doubled_odd(3));
    const PsiFamily psi(c.va, c.p);
    const auto g1 = build_g(c.va, c.p, c.spec, 1);
    EXPECT_NEAR(g1.omega[1], 1.0, 1e-12);
    EXPECT_LT(g1.g[0].distance(Polynomial::constant(1)), 1e-15);
    const auto gd = build_g(c.va, c.p, c.spec, 2);
    EXPECT_NEAR(gd.omega[1], 4.0, 1e-12);
    expect_all_pass(verify_g(c.va, c.p, psi, g1));
    expect_all_pass(verify_g(c.va, c.p, psi, gd));
    // Psi_2(theta_h, theta_1) = p_2(theta_1) g_2(theta_h)
    for (double th : c.spec.theta)
        EXPECT_NEAR(psi(2, th, 2.0), 2.0 * g1.g[2](th), 1e-10);
}

TEST(FamilyG, Doubled4Omega)
{
    Ctx c(doubled_odd(4));
    const auto g1 = build_g(c.va, c.p, c.spec, 1);
    const auto gd = build_g(c.va, c.p, c.spec, 3);
    const double w1[] = {2, 1, 1};
    const double wd[] = {6, 1, 3};
    for (int i = 1; i <= 3; ++i) {
        EXPECT_NEAR(g1.omega[i], w1[i - 1], 1e-10);
        EXPECT_NEAR(gd.omega[i], wd[i - 1], 1e-10);
    }
    EXPECT_NEAR(g1.omega[4], 0, 1e-10);
}

TEST(FamilyG, AdmissibilityGate)
{
    Ctx q(hypercube(4));
    EXPECT_EQ(admissible_indices(4), (std::vector<int>{1, 3}));
    EXPECT_EQ(admissible_indices(5), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(module_indices(6), (std::vector<int>{1}));
    EXPECT_EQ(module_indices(7), (std::vector<int>{1, 3}));
    EXPECT_THROW(build_g(q.va, q.p, q.spec, 2), VerificationError);
    EXPECT_THROW(build_g(q.va, q.p, q.spec, 0), VerificationError);
    EXPECT_NO_THROW(build_g(q.va, q.p, q.spec, 3));
}

TEST(Orthogonality, AllFamiliesOnCorpus)
{
    for (const auto& g : {hypercube(4), hypercube(5), hypercube(6), doubled_odd(3), doubled_odd(4)}) {
        Ctx c(g);
        const PsiFamily psi(c.va, c.p);
        for (auto fam : {Family::F, Family::P, Family::Psi, Family::G}) {
            const auto r = verify_orthogonality(fam, c.va, c.f, c.p, psi, c.spec);
            expect_all_pass(r);
            EXPECT_LT(r.max_residual(), 1e-8);
        }
        for (int n : admissible_indices(c.spec.D))
            expect_all_pass(verify_g(c.va, c.p, psi, build_g(c.va, c.p, c.spec, n)));
        expect_all_pass(verify_psi(c.va, c.p, psi));
    }
}

TEST(Orthogonality, Hypercube4TrivialCase)
{
    Ctx c(hypercube(4));
    double s = 0;
    for (int h = 0; h <= 4; ++h)
        s += c.f.f[0](c.spec.theta[h]) * c.f.f[0](c.spec.theta[h]) * c.spec.mult[h];
    EXPECT_NEAR(s, 16, 1e-12);
}

TEST(Orthogonality, DesarguesTail)
{
    Ctx c(doubled_odd(3));
    for (int h = 1; h <= 4; ++h) {
        EXPECT_NEAR(c.p.p[4](c.spec.theta[h]), 0, 1e-8);
        EXPECT_NEAR(c.p.p[5](c.spec.theta[h]), 0, 1e-8);
    }
}

TEST(Orthogonality, DetectsCorruption)
{
    Ctx c(doubled_odd(3));
    auto bad = c.p;
    bad.p[2] = bad.p[2] + Polynomial::constant(0.01);
    const PsiFamily psi(c.va, bad);
    EXPECT_FALSE(verify_orthogonality(Family::P, c.va, c.f, bad, psi, c.spec).all_passed());
}

TEST(SignPatterns, Corpus)
{
    for (const auto& g : {hypercube(4), hypercube(5), hypercube(6), doubled_odd(3), doubled_odd(4)}) {
        Ctx c(g);
        const auto r = verify_sign_patterns(c.p, c.spec);
        expect_all_pass(r);
        EXPECT_EQ(r.size(), c.spec.D % 2 ? 4u : 2u);
    }
}

TEST(ThetaStar, Links)
{
    for (const auto& g : {hypercube(4), hypercube(5), doubled_odd(3), doubled_odd(4)}) {
        Ctx c(g);
        expect_all_pass(verify_theta_star_links(c.va, c.f, c.p, c.duals));
    }
    Ctx d(doubled_odd(3));
    const auto& s = d.duals[1].star;
    EXPECT_NEAR((s[2] - s[4]) / (s[0] - s[2]), 1.0, 1e-12);
    Ctx q(hypercube(4));
    const auto& t = q.duals[1].star;
    EXPECT_NEAR(4 * t[1] / t[0], 2.0, 1e-12);
}
