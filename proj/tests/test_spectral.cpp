#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tautdrg/generators.hpp"
#include "tautdrg/spectral.hpp"

using namespace tautdrg;

namespace {

Matrix random_symmetric(int n, std::mt19937& rng)
{
    std::uniform_real_distribution<double> u(-1, 1);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            m(i, j) = m(j, i) = u(rng);
    return m;
}

}  // namespace

TEST(SymEigen, SwapMatrix)
{
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    const auto dec = sym_eigen(m);
    EXPECT_NEAR(dec.values[0], 1, 1e-14);
    EXPECT_NEAR(dec.values[1], -1, 1e-14);
    EXPECT_TRUE(verify_decomposition(m, dec).all_passed());
}

TEST(SymEigen, Identity)
{
    const auto dec = sym_eigen(Matrix::Identity(5, 5));
    for (int i = 0; i < 5; ++i)
        EXPECT_EQ(dec.values[i], 1.0);
    EXPECT_EQ(dec.sweeps, 0);
    const auto cl = cluster_eigenvalues({dec.values.data(), dec.values.data() + 5}, 1e-7);
    ASSERT_EQ(cl.clusters.size(), 1u);
    EXPECT_EQ(cl.clusters[0].count, 5);
}

TEST(SymEigen, Hypercube4Clusters)
{
    const Matrix a = oracle::adjacency(hypercube(4));
    const auto dec = sym_eigen(a);
    EXPECT_TRUE(verify_decomposition(a, dec).all_passed());
    const auto cl = cluster_eigenvalues({dec.values.data(), dec.values.data() + 16}, 1e-7 * a.norm());
    ASSERT_EQ(cl.clusters.size(), 5u);
    const double want[] = {4, 2, 0, -2, -4};
    const int counts[] = {1, 4, 6, 4, 1};
    for (int i = 0; i < 5; ++i) {
        EXPECT_NEAR(cl.clusters[i].value, want[i], 1e-10);
        EXPECT_EQ(cl.clusters[i].count, counts[i]);
    }
    EXPECT_FALSE(cl.ill_separated);
}

TEST(SymEigen, DesarguesClusters)
{
    const Matrix a = oracle::adjacency(doubled_odd(3));
    const auto dec = sym_eigen(a);
    const auto cl = cluster_eigenvalues({dec.values.data(), dec.values.data() + 20}, 1e-7 * a.norm());
    std::vector<int> sizes;
    for (const auto& c : cl.clusters)
        sizes.push_back(c.count);
    EXPECT_EQ(sizes, (std::vector<int>{1, 4, 5, 5, 4, 1}));
}

TEST(SymEigen, RandomMatricesAgainstReferenceSolver)
{
    std::mt19937 rng(20261014);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial * 3;
        const Matrix m = random_symmetric(n, rng);
        const auto dec = sym_eigen(m);
        const auto ref = oracle::eigenvalues(m);
        for (int i = 0; i < n; ++i)
            EXPECT_NEAR(dec.values[i], ref[i], 1e-11 * std::max(1.0, m.norm()));
        EXPECT_TRUE(verify_decomposition(m, dec).all_passed()) << n;
        // deterministic
        EXPECT_EQ(sym_eigen(m).values, dec.values);
    }
}

TEST(SymEigen, Doubled4AgainstReferenceSolver)
{
    const Matrix a = oracle::adjacency(doubled_odd(4));
    const auto dec = sym_eigen(a);
    const auto ref = oracle::eigenvalues(a);
    for (int i = 0; i < 70; ++i)
        EXPECT_NEAR(dec.values[i], ref[i], 1e-10);
    EXPECT_TRUE(verify_decomposition(a, dec).all_passed());
}

TEST(Tridiagonal, AgainstDense)
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int n : {1, 2, 5, 9, 16}) {
        std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
        Matrix m = Matrix::Zero(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = d[i] = u(rng);
        for (int i = 0; i + 1 < n; ++i)
            m(i, i + 1) = m(i + 1, i) = e[i] = u(rng);
        const auto got = tridiagonal_eigenvalues(d, e);
        const auto ref = oracle::eigenvalues(m);
        for (int i = 0; i < n; ++i)
            EXPECT_NEAR(got[i], ref[i], 1e-12);
    }
}

TEST(Tridiagonal, HypercubeIntersectionMatrix)
{
    // symmetrized: off-diagonal sqrt(b_i c_{i+1})
    const std::vector<double> off{std::sqrt(4.0), std::sqrt(6.0), std::sqrt(6.0), std::sqrt(4.0)};
    const auto got = tridiagonal_eigenvalues({0, 0, 0, 0, 0}, off);
    const double want[] = {4, 2, 0, -2, -4};
    for (int i = 0; i < 5; ++i)
        EXPECT_NEAR(got[i], want[i], 1e-13);
}

TEST(Cluster, Basic)
{
    const auto cl = cluster_eigenvalues({2.0000001, 1.9999999, 0}, 1e-5);
    ASSERT_EQ(cl.clusters.size(), 2u);
    EXPECT_NEAR(cl.clusters[0].value, 2, 1e-12);
    EXPECT_EQ(cl.clusters[0].count, 2);
    EXPECT_EQ(cl.clusters[1].value, 0);
    EXPECT_EQ(cl.clusters[1].count, 1);
    EXPECT_FALSE(cl.ill_separated);
    EXPECT_TRUE(cluster_eigenvalues({}, 1e-5).clusters.empty());
}

TEST(Cluster, IllSeparated)
{
    const auto cl = cluster_eigenvalues({1.0, 1.0 + 5e-5}, 1e-5);
    EXPECT_EQ(cl.clusters.size(), 2u);
    EXPECT_TRUE(cl.ill_separated);
}

TEST(Subspace, DependentPair)
{
    Vector a(2), b(2);
    a << 1, 0;
    b << 2, 0;
    const auto s = orthonormalize({a, b}, 2);
    EXPECT_EQ(s.dim(), 1);
}

TEST(Subspace, ProjectOntoFullSpace)
{
    const auto full = orthonormalize(Matrix::Identity(6, 6));
    Vector x = Vector::Zero(6);
    x[0] = 1;
    EXPECT_LT((project(full, x) - x).norm(), 1e-15);
}

TEST(Subspace, ProjectionIdempotentAndComplement)
{
    std::mt19937 rng(11);
    std::normal_distribution<double> nd;
    Matrix cols(10, 4);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 4; ++j)
            cols(i, j) = nd(rng);
    const auto sub = orthonormalize(cols);
    ASSERT_EQ(sub.dim(), 4);
    EXPECT_LT((sub.basis().transpose() * sub.basis() - Matrix::Identity(4, 4)).norm(), 1e-12);
    Vector v(10);
    for (int i = 0; i < 10; ++i)
        v[i] = nd(rng);
    const Vector once = project(sub, v);
    EXPECT_LT((project(sub, once) - once).norm(), 1e-12);

    const auto inner = orthonormalize(cols.leftCols(1));
    const auto comp = orth_complement_within(sub, inner);
    EXPECT_EQ(comp.dim(), 3);
    EXPECT_LT((inner.basis().transpose() * comp.basis()).norm(), 1e-12);
    EXPECT_EQ(span_union(comp, inner).dim(), 4);

    // inner not contained in sub: generic vector outside
    Vector w(10);
    for (int i = 0; i < 10; ++i)
        w[i] = nd(rng);
    const auto outside = orthonormalize({w}, 10);
    EXPECT_EQ(orth_complement_within(sub, outside).dim(), 3);
}

TEST(Restrict, IdentityAndEmpty)
{
    std::mt19937 rng(3);
    std::normal_distribution<double> nd;
    Matrix cols(7, 3);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 3; ++j)
            cols(i, j) = nd(rng);
    const auto r = restrict_operator(Matrix::Identity(7, 7), orthonormalize(cols));
    EXPECT_LT((r - Matrix::Identity(3, 3)).norm(), 1e-12);
    EXPECT_EQ(restrict_operator(Matrix::Identity(7, 7), Subspace(7)).rows(), 0);
}
