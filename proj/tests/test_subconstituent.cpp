#include <gtest/gtest.h>

#include <algorithm>

#include <Eigen/LU>

#include "oracles.hpp"
#include "tautdrg/error.hpp"
#include "tautdrg/generators.hpp"
#include "tautdrg/subconstituent.hpp"

using namespace tautdrg;

namespace {

void expect_all_pass(const VerificationReport& r)
{
    ASSERT_GT(r.size(), 0u);
    for (const auto& c : r.checks())
        EXPECT_TRUE(c.pass) << c.name << " residual " << c.residual << " threshold " << c.threshold
                            << " " << c.detail;
}

const GlobalContext& q4()
{
    static const GlobalContext ctx(hypercube(4), Tolerances{});
    return ctx;
}

const GlobalContext& desargues()
{
    static const GlobalContext ctx(doubled_odd(3), Tolerances{});
    return ctx;
}

const GlobalContext& o4()
{
    static const GlobalContext ctx(doubled_odd(4), Tolerances{});
    return ctx;
}

// Local spectrum by brute force: Floyd-Warshall distances, dense eigensolve.
std::vector<double> oracle_local_spectrum(const Graph& g, int x)
{
    const auto dist = oracle::floyd_warshall(g);
    std::vector<int> lvl;
    for (int y = 0; y < g.order(); ++y)
        if (dist[x][y] == 2)
            lvl.push_back(y);
    const int m = static_cast<int>(lvl.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            a(i, j) = dist[lvl[i]][lvl[j]] == 2 ? 1 : 0;
    auto ev = oracle::eigenvalues(a);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

// dim Mv as the rank of the Krylov matrix [v, Av, ..., A^D v].
int krylov_rank(const Graph& g, const Vector& v, int D)
{
    const Eigen::MatrixXd a = oracle::adjacency(g);
    Eigen::MatrixXd k(v.size(), D + 1);
    Vector cur = v;
    for (int i = 0; i <= D; ++i) {
        k.col(i) = cur;
        cur = a * cur;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(k);
    lu.setThreshold(1e-9);
    return static_cast<int>(lu.rank());
}

std::vector<double> sorted(std::vector<double> v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

void expect_values(const std::vector<double>& got, const std::vector<double>& want, double tol = 1e-9)
{
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

}  // namespace

TEST(DualIdempotents, Hypercube4Partition)
{
    VerificationReport r;
    const auto duals = dual_idempotents(q4(), 0, r);
    std::vector<int> sizes;
    for (int i = 0; i <= duals.D; ++i)
        sizes.push_back(duals.size(i));
    EXPECT_EQ(sizes, (std::vector<int>{1, 4, 6, 4, 1}));
    Matrix e0 = Matrix::Zero(16, 16);
    e0(0, 0) = 1;
    EXPECT_EQ(duals.matrix(0), e0);
    expect_all_pass(r);
}

TEST(DualIdempotents, DesarguesSecondLevel)
{
    VerificationReport r;
    const auto duals = dual_idempotents(desargues(), 0, r);
    EXPECT_EQ(duals.size(2), 6);
    expect_all_pass(r);
    EXPECT_THROW(dual_idempotents(desargues(), 20, r), ParseError);
}

TEST(ModuleV0, NormsAndAction)
{
    const auto& ctx = q4();
    VerificationReport r;
    const auto duals = dual_idempotents(ctx, 0, r);
    const auto sv = standard_vectors(ctx, duals, r);
    const auto m = module_V0(ctx, duals, sv, r);
    expect_all_pass(r);
    EXPECT_NEAR(ctx.idem.E[1].col(0).squaredNorm(), 4.0 / 16.0, 1e-12);
    EXPECT_DOUBLE_EQ(sv.s[0].squaredNorm(), 1.0);
    EXPECT_EQ(m.dimension, 5);
    EXPECT_TRUE(m.thin);

    const auto& dz = desargues();
    VerificationReport r2;
    const auto d2 = dual_idempotents(dz, 0, r2);
    const auto sv2 = standard_vectors(dz, d2, r2);
    EXPECT_LT((dz.dm.A() * sv2.s[2] - 2 * sv2.s[1] - 2 * sv2.s[3]).norm(), 1e-12);
}

TEST(Endpoint1, SeedsAndLocalEigenvalue)
{
    const auto& ctx = q4();
    VerificationReport r;
    const auto duals = dual_idempotents(ctx, 0, r);
    const auto sv = standard_vectors(ctx, duals, r);
    const auto y = endpoint1_space(ctx, duals, sv, r);
    EXPECT_EQ(y.seeds.dim(), 3);
    EXPECT_EQ(y.second_level.dim(), 3);
    EXPECT_EQ(y.module.dimension, 3);
    EXPECT_EQ(y.module.multiplicity, 3);
    for (int j = 0; j < y.seeds.dim(); ++j)
        EXPECT_NEAR(y.seeds.vector(j).dot(sv.s[1]), 0.0, 1e-12);
    expect_all_pass(r);

    const auto& dz = desargues();
    VerificationReport r2;
    const auto d2 = dual_idempotents(dz, 0, r2);
    const auto sv2 = standard_vectors(dz, d2, r2);
    const auto y2 = endpoint1_space(dz, d2, sv2, r2);
    expect_all_pass(r2);
    // b_3 - 1 = 0 on E*_2 Y
    for (int j = 0; j < y2.second_level.dim(); ++j) {
        const Vector u = y2.second_level.vector(j);
        Vector au = dz.dm.A_i(2) * u;
        au = d2.apply(2, au);
        EXPECT_LT(au.norm(), 1e-10);
    }
}

TEST(Tilde, FixedCases)
{
    EXPECT_TRUE(tilde({2.0, false}, 4.0, 1.0).infinite);
    EXPECT_TRUE(tilde({-2.0, false}, 4.0, 1.0).infinite);
    const auto t = tilde(ExtReal::inf(), 4.0, 1.0);
    EXPECT_FALSE(t.infinite);
    EXPECT_EQ(t.value, -1.0);
    EXPECT_DOUBLE_EQ(tilde({2.0, false}, 2.0, 1.0).value, -2.0);
}

TEST(LocalSpectrum, Hypercube4AtEveryVertex)
{
    const auto& ctx = q4();
    for (int x = 0; x < ctx.n(); ++x) {
        VerificationReport r;
        const auto duals = dual_idempotents(ctx, x, r);
        const auto ls = local_spectrum(ctx, duals, r);
        expect_all_pass(r);
        expect_values(sorted(ls.eta), oracle_local_spectrum(ctx.graph, x));
        expect_values(ls.eta, {4, 0, 0, 0, -2, -2});
        EXPECT_NEAR(ls.theta_tilde_1, -2, 1e-12);
        EXPECT_NEAR(ls.theta_tilde_d, 0, 1e-12);
        ASSERT_EQ(ls.phi.size(), 1u);
        EXPECT_NEAR(ls.phi[0].eta, -2, 1e-9);
        EXPECT_EQ(ls.phi[0].mult, 2);
        // octahedron: 6 vertices, 4-regular
        EXPECT_EQ(ls.vertices.size(), 6u);
        EXPECT_EQ(ls.edges.size(), 12u);
    }
}

TEST(LocalSpectrum, Desargues)
{
    const auto& ctx = desargues();
    VerificationReport r;
    const auto duals = dual_idempotents(ctx, 0, r);
    const auto ls = local_spectrum(ctx, duals, r);
    expect_all_pass(r);
    expect_values(ls.eta, {3, 0, 0, 1, -2, -2});
    expect_values(sorted(ls.eta), oracle_local_spectrum(ctx.graph, 0));
    EXPECT_NEAR(ls.theta_tilde_1, -2, 1e-12);
    EXPECT_NEAR(ls.theta_tilde_d, 1, 1e-12);
    EXPECT_EQ(ls.mult(-2, 1e-7), 2);
    EXPECT_EQ(ls.mult(1, 1e-7), 1);
    EXPECT_EQ(ls.mult(0, 1e-7), 0);
}

TEST(SubspaceU, DimensionsAndEigenvalues)
{
    {
        const auto an = analyze_vertex(q4(), 0);
        EXPECT_EQ(an.U.U.dim(), 2);
        ASSERT_EQ(an.U.parts.size(), 1u);
        EXPECT_NEAR(an.U.parts[0].eta, -2, 1e-9);
        EXPECT_EQ(an.U.parts[0].space.dim(), 2);
        for (int c = 0; c < an.U.U.dim(); ++c)
            EXPECT_NEAR(an.U.U.vector(c).dot(an.sv.s[2]), 0.0, 1e-12);
    }
    {
        const auto an = analyze_vertex(desargues(), 0);
        EXPECT_EQ(an.U.U.dim(), 3);
        ASSERT_EQ(an.U.parts.size(), 2u);
        EXPECT_NEAR(an.U.parts[0].eta, 1, 1e-9);
        EXPECT_EQ(an.U.parts[0].space.dim(), 1);
        EXPECT_NEAR(an.U.parts[1].eta, -2, 1e-9);
        EXPECT_EQ(an.U.parts[1].space.dim(), 2);
    }
}

TEST(NormFormula, DesarguesVanishingPattern)
{
    const auto an = analyze_vertex(desargues(), 0);
    expect_all_pass(an.report);
    for (const auto& mod : an.modules) {
        const auto& np = mod.norms;
        EXPECT_EQ(np.dim_Mv, 2);
        EXPECT_EQ(krylov_rank(desargues().graph, mod.seed, 5), 2);
        if (std::abs(mod.eta + 2) < 1e-9) {
            EXPECT_TRUE(np.vanishes[1]);
            EXPECT_TRUE(np.vanishes[4]);
            EXPECT_FALSE(np.vanishes[2]);
        } else {
            EXPECT_TRUE(np.vanishes[2]);
            EXPECT_TRUE(np.vanishes[3]);
            EXPECT_FALSE(np.vanishes[1]);
        }
    }
}

TEST(Endpoint2, DesarguesModules)
{
    const auto an = analyze_vertex(desargues(), 0);
    expect_all_pass(an.report);
    ASSERT_EQ(an.modules.size(), 3u);
    for (const auto& mod : an.modules) {
        ASSERT_TRUE(mod.module.has_value());
        const auto& m = *mod.module;
        EXPECT_EQ(m.endpoint, 2);
        EXPECT_EQ(m.dimension, 2);
        EXPECT_TRUE(m.thin);
        EXPECT_EQ(mod.closure.dimension, 2);
        EXPECT_EQ(mod.closure.endpoint, 2);
        EXPECT_TRUE(mod.closure.thin);
        ASSERT_EQ(m.sub.size(), 1u);
        EXPECT_NEAR(m.sub[0], 1, 1e-9);
        if (m.n == 1) {
            EXPECT_NEAR(m.super[0], 1, 1e-9);
            expect_values(m.tridiagonal_eigenvalues, {1, -1});
            EXPECT_EQ(m.vanishing_E, (std::vector<int>{0, 1, 4, 5}));
            EXPECT_EQ(m.multiplicity, 2);
        } else {
            EXPECT_EQ(m.n, 2);
            EXPECT_NEAR(m.super[0], 4, 1e-9);
            expect_values(m.tridiagonal_eigenvalues, {2, -2});
            EXPECT_EQ(m.vanishing_E, (std::vector<int>{0, 2, 3, 5}));
            EXPECT_EQ(m.multiplicity, 1);
        }
    }
}

TEST(Endpoint2, IdentitiesOnDesargues)
{
    const auto& ctx = desargues();
    VerificationReport r;
    const auto duals = dual_idempotents(ctx, 0, r);
    const auto an = analyze_vertex(ctx, 0);
    const Vector v = an.U.parts[1].space.vector(0);
    for (int j = 0; j <= 5; ++j) {
        EXPECT_LT(duals.apply(0, ctx.dm.A_i(j) * v).norm(), 1e-10);
        EXPECT_LT(duals.apply(1, ctx.dm.A_i(j) * v).norm(), 1e-10);
    }
    EXPECT_LT(duals.apply(4, ctx.dm.A_i(1) * v).norm(), 1e-12);
    EXPECT_LT(ctx.p.p[4].apply(ctx.dm.A(), v).norm(), 1e-9);
    EXPECT_LT(ctx.p.p[5].apply(ctx.dm.A(), v).norm(), 1e-9);
    expect_all_pass(verify_endpoint2_identities(ctx, duals, v, 1));
}

TEST(Endpoint2, RejectsWrongEigenspace)
{
    const auto& ctx = desargues();
    VerificationReport r;
    const auto duals = dual_idempotents(ctx, 0, r);
    const auto an = analyze_vertex(ctx, 0);
    // U_1 vector offered as tilde(theta_1) = -2
    EXPECT_THROW(construct_endpoint2_module(ctx, duals, an.local, an.U.parts[0].space.vector(0), 1, r),
                 VerificationError);
    EXPECT_THROW(construct_endpoint2_module(ctx, duals, an.local, an.U.parts[0].space.vector(0), 3, r),
                 VerificationError);
}

TEST(Endpoint2, Hypercube4OneDimensional)
{
    const auto an = analyze_vertex(q4(), 0);
    expect_all_pass(an.report);
    ASSERT_EQ(an.modules.size(), 2u);
    for (const auto& mod : an.modules) {
        ASSERT_TRUE(mod.module.has_value());
        EXPECT_EQ(mod.module->dimension, 1);
        EXPECT_TRUE(mod.module->sub.empty());
        EXPECT_LT((mod.module->basis[0] - mod.seed).norm(), 1e-12);
        EXPECT_EQ(mod.closure.dimension, 1);
        EXPECT_EQ(mod.norms.dim_Mv, 1);
        EXPECT_EQ(krylov_rank(q4().graph, mod.seed, 4), 1);
    }
}

TEST(Closure, EndpointsAndThinness)
{
    const auto& ctx = desargues();
    VerificationReport r;
    const auto duals = dual_idempotents(ctx, 0, r);
    const auto sv = standard_vectors(ctx, duals, r);
    const auto v0 = thinness_and_endpoint(ctx, duals, sv.xhat);
    EXPECT_EQ(v0.endpoint, 0);
    EXPECT_EQ(v0.dimension, 6);
    EXPECT_TRUE(v0.thin);
    const auto y = endpoint1_space(ctx, duals, sv, r);
    const auto v1 = thinness_and_endpoint(ctx, duals, y.seeds.vector(0));
    EXPECT_EQ(v1.endpoint, 1);
    EXPECT_EQ(v1.dimension, 4);
    EXPECT_TRUE(v1.thin);
    // e_y for y at distance 2 meets V0, Y, U_{-2} and U_1 once each at level 2
    Vector e = Vector::Zero(ctx.n());
    e[duals.parts[2][0]] = 1;
    const auto mixed = thinness_and_endpoint(ctx, duals, e);
    EXPECT_EQ(mixed.endpoint, 0);
    EXPECT_FALSE(mixed.thin);
    EXPECT_EQ(mixed.level_dims[2], 4);
}

TEST(Multiplicity, TripleAndAccounting)
{
    {
        const auto an = analyze_vertex(desargues(), 0);
        ASSERT_EQ(an.multiplicities.size(), 2u);
        for (const auto& row : an.multiplicities) {
            EXPECT_EQ(row.mu, row.dim_U);
            EXPECT_EQ(row.dim_U, row.mult);
        }
        EXPECT_EQ(an.multiplicities[0].mu, 2);
        EXPECT_EQ(an.multiplicities[1].mu, 1);
        EXPECT_EQ(an.accounting.endpoint0, 6);
        EXPECT_EQ(an.accounting.endpoint1, 8);
        EXPECT_EQ(an.accounting.endpoint2_thin, 6);
        EXPECT_EQ(an.accounting.residual, 0);
    }
    {
        const auto an = analyze_vertex(q4(), 3);
        ASSERT_EQ(an.multiplicities.size(), 1u);
        EXPECT_EQ(an.multiplicities[0].mu, 2);
        EXPECT_EQ(an.accounting.endpoint0 + an.accounting.endpoint1 + an.accounting.endpoint2_thin, 16);
        EXPECT_EQ(an.accounting.residual, 0);
    }
}

TEST(Multiplicity, DoubledOdd4)
{
    const auto& ctx = o4();
    expect_all_pass(ctx.report);
    const auto an = analyze_vertex(ctx, 0);
    expect_all_pass(an.report);
    ASSERT_EQ(an.multiplicities.size(), 2u);
    EXPECT_NEAR(an.multiplicities[0].eta, -2, 1e-9);
    EXPECT_EQ(an.multiplicities[0].mu, 6);
    EXPECT_NEAR(an.multiplicities[1].eta, 2, 1e-9);
    EXPECT_EQ(an.multiplicities[1].mu, 2);
    // 70 - 8 - 3*6 - 8*4
    EXPECT_EQ(an.accounting.residual, 12);
    for (const auto& mod : an.modules)
        EXPECT_EQ(mod.closure.dimension, 4);
}

TEST(VertexAnalysis, CorpusReportsPass)
{
    for (const char* fam : {"hypercube:5", "hypercube:6"}) {
        const GlobalContext ctx(generate(fam), Tolerances{});
        expect_all_pass(ctx.report);
        const auto an = analyze_vertex(ctx, 1);
        expect_all_pass(an.report);
        for (const auto& row : an.multiplicities)
            EXPECT_EQ(row.mu, row.mult) << fam;
    }
}
