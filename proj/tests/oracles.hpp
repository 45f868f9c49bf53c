#pragma once

// Brute-force reference computations used only by the tests. Deliberately
// naive and independent of the library code paths they check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "tautdrg/graph.hpp"

namespace oracle {

inline std::vector<std::vector<int>> floyd_warshall(const tautdrg::Graph& g)
{
    const int n = g.order();
    const int inf = n + 1;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (int w : g.neighbors(v))
            d[v][w] = 1;
    }
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    return d;
}

// p[h][i][j], checked constant over all pairs; returns empty if not.
inline std::vector<std::vector<std::vector<std::int64_t>>> intersection_tensor(const tautdrg::Graph& g)
{
    const auto d = floyd_warshall(g);
    const int n = g.order();
    int D = 0;
    for (const auto& row : d)
        D = std::max(D, *std::max_element(row.begin(), row.end()));
    std::vector<std::vector<std::vector<std::int64_t>>> p(
        D + 1, std::vector<std::vector<std::int64_t>>(D + 1, std::vector<std::int64_t>(D + 1, -1)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::vector<std::vector<std::int64_t>> cnt(D + 1, std::vector<std::int64_t>(D + 1, 0));
            for (int z = 0; z < n; ++z)
                ++cnt[d[x][z]][d[z][y]];
            const int h = d[x][y];
            for (int i = 0; i <= D; ++i)
                for (int j = 0; j <= D; ++j) {
                    if (p[h][i][j] < 0)
                        p[h][i][j] = cnt[i][j];
                    else if (p[h][i][j] != cnt[i][j])
                        return {};
                }
        }
    return p;
}

inline int girth(const tautdrg::Graph& g)
{
    const int n = g.order();
    int best = n + 1;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

inline Eigen::MatrixXd adjacency(const tautdrg::Graph& g)
{
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
    for (const auto& [u, v] : g.edges())
        a(u, v) = a(v, u) = 1;
    return a;
}

// Eigenvalues by LAPACK-style solver, descending.
inline std::vector<double> eigenvalues(const Eigen::MatrixXd& m)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

// Spectral projector onto the eigenspace of m for value theta (within tol).
inline Eigen::MatrixXd projector(const Eigen::MatrixXd& m, double theta, double tol = 1e-6)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j)
        if (std::abs(es.eigenvalues()[j] - theta) < tol)
            p += es.eigenvectors().col(j) * es.eigenvectors().col(j).transpose();
    return p;
}

}  // namespace oracle
