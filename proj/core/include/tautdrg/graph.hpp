#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tautdrg {

using Edge = std::pair<int, int>;

// Simple connected undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    // Validates: endpoints in range, no loops, no duplicate edges, connected.
    // Throws ParseError for the first three and HypothesisError when disconnected.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int order() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edges_.size(); }

    // Edges with u < v, in the order they were supplied.
    const std::vector<Edge>& edges() const { return edges_; }
    // Sorted ascending.
    std::span<const int> neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    bool adjacent(int u, int v) const;

private:
    Graph() = default;

    std::vector<std::vector<int>> adjacency_;
    std::vector<Edge> edges_;
};

// All-pairs path-length distances.
class DistanceData {
public:
    int order() const { return n_; }
    int diameter() const { return diameter_; }
    int operator()(int x, int y) const { return dist_[static_cast<std::size_t>(x) * n_ + y]; }
    // k_0..k_D, the number of vertices at distance i from any vertex.
    const std::vector<int>& valencies() const { return valencies_; }
    // Vertices at distance i from x, ascending.
    std::vector<int> sphere(int x, int i) const;

private:
    friend DistanceData distance_data(const Graph& g);
    friend DistanceData bfs_distances(const Graph& g);

    int n_ = 0;
    int diameter_ = 0;
    std::vector<int> dist_;
    std::vector<int> valencies_;
};

// BFS distances only; no regularity checks. k_i is taken from vertex 0.
DistanceData bfs_distances(const Graph& g);

// BFS distances, with the sphere sizes k_i verified identical at every vertex
// (HypothesisError otherwise).
DistanceData distance_data(const Graph& g);

// Intersection numbers b_i, c_i, a_i and valencies k_i of a distance-regular
// graph. Indexing follows the usual conventions: c_0 = 0, b_D = 0, and
// accessors return 0 outside 0..D.
class IntersectionArray {
public:
    // b = (b_0..b_{D-1}), c = (c_1..c_D). Derives a_i and k_i; throws
    // HypothesisError when the numbers are not a feasible array (non-positive
    // entries, c_1 != 1, negative a_i, k_i not integral).
    static IntersectionArray from_bc(std::vector<std::int64_t> b, std::vector<std::int64_t> c);

    int diameter() const { return diameter_; }
    std::int64_t valency() const { return b_.empty() ? 0 : b_[0]; }
    std::int64_t b(int i) const { return (i < 0 || i > diameter_) ? 0 : b_[i]; }
    std::int64_t c(int i) const { return (i < 0 || i > diameter_) ? 0 : c_[i]; }
    std::int64_t a(int i) const { return (i < 0 || i > diameter_) ? 0 : a_[i]; }
    std::int64_t k_i(int i) const { return (i < 0 || i > diameter_) ? 0 : k_[i]; }
    std::int64_t vertex_count() const;
    bool is_bipartite() const;

    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;

private:
    int diameter_ = 0;
    std::vector<std::int64_t> b_, c_, a_, k_;  // each of length D+1
};

// Counts c_i, a_i, b_i over every ordered pair (x, y) and requires them to be
// constant per distance. Throws HypothesisError naming the first violating
// (x, y, i) triple.
IntersectionArray intersection_array(const Graph& g, const DistanceData& dd);

// Full table p^h_ij, derived from the array through the intersection-matrix
// recurrence in exact integer arithmetic.
class IntersectionNumbers {
public:
    explicit IntersectionNumbers(const IntersectionArray& ia);

    int diameter() const { return diameter_; }
    std::int64_t operator()(int h, int i, int j) const;

private:
    int diameter_;
    std::vector<std::int64_t> p_;  // p_[(h*(D+1) + i)*(D+1) + j]
};

// p^h_ij by direct count from a representative pair at distance h, checked
// constant over the other pairs at distance h (all pairs when n <= 128,
// otherwise pairs based at the first 8 vertices). For bipartite input and odd
// h+i+j returns 0 without counting. For (2,2,2) on a bipartite array the count
// is compared against (b_2(c_3-1) + c_2(k-2))/c_2.
std::int64_t intersection_number(const IntersectionArray& ia, const Graph& g,
                                 const DistanceData& dd, int h, int i, int j);

bool is_bipartite(const Graph& g);
bool is_antipodal_2cover(const DistanceData& dd);

// Proof that an array satisfies D >= 4, k >= 3 and a_i = 0. Only
// validate_hypotheses constructs one.
class ValidatedArray {
public:
    const IntersectionArray& array() const { return array_; }
    const IntersectionArray* operator->() const { return &array_; }

private:
    explicit ValidatedArray(IntersectionArray ia) : array_(std::move(ia)) {}
    friend ValidatedArray validate_hypotheses(const IntersectionArray& ia);

    IntersectionArray array_;
};

// Throws HypothesisError naming the first violated hypothesis.
ValidatedArray validate_hypotheses(const IntersectionArray& ia);

// Edge list text: one "u v" pair per line, 0-indexed, whitespace separated.
// Blank lines and lines starting with '#' are skipped. n = max index + 1.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::filesystem::path& path);
std::string to_edge_list(const Graph& g);

}  // namespace tautdrg
