#include "tautdrg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

#include "tautdrg/error.hpp"

namespace tautdrg {

namespace {

std::string pair_str(int u, int v)
{
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

std::vector<int> bfs_from(const Graph& g, int source)
{
    std::vector<int> dist(g.order(), -1);
    std::queue<int> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<Edge> edges)
{
    if (n <= 0)
        throw ParseError("graph must have at least one vertex");

    Graph g;
    g.adjacency_.assign(n, {});
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge " + pair_str(u, v) + " has an endpoint outside 0.." +
                             std::to_string(n - 1));
        if (u == v)
            throw ParseError("loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adjacency_[v];
        std::sort(nb.begin(), nb.end());
        const auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end())
            throw ParseError("duplicate edge " + pair_str(std::min(v, *dup), std::max(v, *dup)));
    }
    g.edges_ = std::move(edges);

    const auto dist = bfs_from(g, 0);
    const auto unreached = std::find(dist.begin(), dist.end(), -1);
    if (unreached != dist.end())
        throw HypothesisError("graph is disconnected: vertex " +
                              std::to_string(unreached - dist.begin()) +
                              " is not reachable from vertex 0");
    return g;
}

bool Graph::adjacent(int u, int v) const
{
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> DistanceData::sphere(int x, int i) const
{
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if ((*this)(x, y) == i)
            out.push_back(y);
    return out;
}

DistanceData bfs_distances(const Graph& g)
{
    DistanceData dd;
    dd.n_ = g.order();
    dd.dist_.resize(static_cast<std::size_t>(dd.n_) * dd.n_);
    for (int x = 0; x < dd.n_; ++x) {
        const auto row = bfs_from(g, x);
        std::copy(row.begin(), row.end(), dd.dist_.begin() + static_cast<std::ptrdiff_t>(x) * dd.n_);
    }
    dd.diameter_ = *std::max_element(dd.dist_.begin(), dd.dist_.end());
    dd.valencies_.assign(dd.diameter_ + 1, 0);
    for (int y = 0; y < dd.n_; ++y)
        ++dd.valencies_[dd(0, y)];
    return dd;
}

DistanceData distance_data(const Graph& g)
{
    DistanceData dd = bfs_distances(g);
    std::vector<int> counts(dd.diameter_ + 1);
    for (int x = 1; x < dd.n_; ++x) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int y = 0; y < dd.n_; ++y)
            ++counts[dd(x, y)];
        if (counts != dd.valencies_) {
            const auto mismatch = std::mismatch(counts.begin(), counts.end(), dd.valencies_.begin());
            const int i = static_cast<int>(mismatch.first - counts.begin());
            throw HypothesisError("not distance-regular: vertex " + std::to_string(x) + " has " +
                                  std::to_string(counts[i]) + " vertices at distance " +
                                  std::to_string(i) + ", vertex 0 has " +
                                  std::to_string(dd.valencies_[i]));
        }
    }
    return dd;
}

IntersectionArray IntersectionArray::from_bc(std::vector<std::int64_t> b, std::vector<std::int64_t> c)
{
    if (b.empty() || b.size() != c.size())
        throw HypothesisError("intersection array needs b_0..b_{D-1} and c_1..c_D of equal length");
    const int D = static_cast<int>(b.size());
    IntersectionArray ia;
    ia.diameter_ = D;
    ia.b_.assign(D + 1, 0);
    ia.c_.assign(D + 1, 0);
    ia.a_.assign(D + 1, 0);
    ia.k_.assign(D + 1, 0);
    for (int i = 0; i < D; ++i) {
        ia.b_[i] = b[i];
        ia.c_[i + 1] = c[i];
        if (b[i] <= 0 || c[i] <= 0)
            throw HypothesisError("intersection numbers b_i, c_i must be positive");
    }
    if (ia.c_[1] != 1)
        throw HypothesisError("c_1 must equal 1");
    const std::int64_t k = ia.b_[0];
    for (int i = 0; i <= D; ++i) {
        ia.a_[i] = k - ia.b_[i] - ia.c_[i];
        if (ia.a_[i] < 0)
            throw HypothesisError("a_" + std::to_string(i) + " = k - b_i - c_i is negative");
    }
    ia.k_[0] = 1;
    for (int i = 0; i < D; ++i) {
        const std::int64_t num = ia.k_[i] * ia.b_[i];
        if (num % ia.c_[i + 1] != 0)
            throw HypothesisError("valency k_" + std::to_string(i + 1) + " is not an integer");
        ia.k_[i + 1] = num / ia.c_[i + 1];
    }
    return ia;
}

std::int64_t IntersectionArray::vertex_count() const
{
    std::int64_t n = 0;
    for (auto v : k_)
        n += v;
    return n;
}

bool IntersectionArray::is_bipartite() const
{
    return std::all_of(a_.begin(), a_.end(), [](std::int64_t v) { return v == 0; });
}

IntersectionArray intersection_array(const Graph& g, const DistanceData& dd)
{
    const int n = g.order();
    const int D = dd.diameter();
    std::vector<std::int64_t> b(D + 1, -1), c(D + 1, -1), a(D + 1, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int i = dd(x, y);
            std::int64_t in = 0, same = 0, out = 0;
            for (int z : g.neighbors(y)) {
                const int j = dd(x, z);
                if (j == i - 1)
                    ++in;
                else if (j == i)
                    ++same;
                else
                    ++out;
            }
            auto record = [&](std::vector<std::int64_t>& slot, std::int64_t value, const char* name) {
                if (slot[i] < 0)
                    slot[i] = value;
                else if (slot[i] != value)
                    throw HypothesisError("not distance-regular: " + std::string(name) + "_" +
                                          std::to_string(i) + " is " + std::to_string(value) +
                                          " at pair " + pair_str(x, y) + " but " +
                                          std::to_string(slot[i]) + " elsewhere");
            };
            record(c, in, "c");
            record(a, same, "a");
            record(b, out, "b");
        }
    }
    std::vector<std::int64_t> bs(b.begin(), b.begin() + D), cs(c.begin() + 1, c.end());
    auto ia = IntersectionArray::from_bc(std::move(bs), std::move(cs));
    for (int i = 0; i <= D; ++i) {
        if (ia.a(i) != a[i] || ia.k_i(i) != dd.valencies()[i])
            throw HypothesisError("not distance-regular: counted a_i / k_i disagree with b_i, c_i at i = " +
                                  std::to_string(i));
    }
    return ia;
}

IntersectionNumbers::IntersectionNumbers(const IntersectionArray& ia) : diameter_(ia.diameter())
{
    const int D = diameter_;
    const int s = D + 1;
    using Mat = std::vector<std::int64_t>;  // s x s, row-major, M[h][j]
    auto at = [s](Mat& m, int r, int col) -> std::int64_t& { return m[r * s + col]; };

    std::vector<Mat> rep(s, Mat(s * s, 0));
    for (int h = 0; h < s; ++h)
        at(rep[0], h, h) = 1;
    if (D >= 1) {
        for (int j = 0; j < s; ++j) {
            if (j > 0)
                at(rep[1], j - 1, j) = ia.b(j - 1);
            at(rep[1], j, j) = ia.a(j);
            if (j < D)
                at(rep[1], j + 1, j) = ia.c(j + 1);
        }
    }
    // A A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}, in the regular representation.
    for (int i = 1; i < D; ++i) {
        Mat next(s * s, 0);
        for (int r = 0; r < s; ++r) {
            for (int col = 0; col < s; ++col) {
                std::int64_t v = 0;
                for (int t = 0; t < s; ++t)
                    v += at(rep[1], r, t) * at(rep[i], t, col);
                v -= ia.b(i - 1) * at(rep[i - 1], r, col) + ia.a(i) * at(rep[i], r, col);
                if (v % ia.c(i + 1) != 0)
                    throw HypothesisError("intersection numbers p^h_ij are not integral");
                at(next, r, col) = v / ia.c(i + 1);
            }
        }
        rep[i + 1] = std::move(next);
    }
    p_.assign(static_cast<std::size_t>(s) * s * s, 0);
    for (int h = 0; h < s; ++h)
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                p_[(h * s + i) * s + j] = at(rep[i], h, j);
}

std::int64_t IntersectionNumbers::operator()(int h, int i, int j) const
{
    if (h < 0 || i < 0 || j < 0 || h > diameter_ || i > diameter_ || j > diameter_)
        return 0;
    const int s = diameter_ + 1;
    return p_[(h * s + i) * s + j];
}

std::int64_t intersection_number(const IntersectionArray& ia, const Graph& g,
                                 const DistanceData& dd, int h, int i, int j)
{
    const int D = dd.diameter();
    if (h < 0 || i < 0 || j < 0 || h > D || i > D || j > D)
        throw ParseError("intersection number indices must lie in 0..D");
    if (ia.is_bipartite() && (h + i + j) % 2 == 1)
        return 0;

    const int n = g.order();
    auto count = [&](int x, int y) {
        std::int64_t total = 0;
        for (int z = 0; z < n; ++z)
            if (dd(x, z) == i && dd(z, y) == j)
                ++total;
        return total;
    };

    const int base_limit = n <= 128 ? n : std::min(n, 8);
    std::int64_t value = -1;
    for (int x = 0; x < base_limit; ++x) {
        for (int y = 0; y < n; ++y) {
            if (dd(x, y) != h)
                continue;
            const auto here = count(x, y);
            if (value < 0)
                value = here;
            else if (here != value)
                throw HypothesisError("not distance-regular: p^" + std::to_string(h) + "_" +
                                      std::to_string(i) + std::to_string(j) + " is " +
                                      std::to_string(here) + " at pair " + pair_str(x, y) +
                                      " but " + std::to_string(value) + " elsewhere");
        }
    }
    if (h == 2 && i == 2 && j == 2 && ia.is_bipartite() && D >= 3) {
        const auto num = ia.b(2) * (ia.c(3) - 1) + ia.c(2) * (ia.valency() - 2);
        if (num % ia.c(2) != 0 || num / ia.c(2) != value)
            throw VerificationError("counted p^2_22 = " + std::to_string(value) +
                                    " disagrees with (b_2(c_3-1) + c_2(k-2))/c_2");
    }
    return value;
}

bool is_bipartite(const Graph& g)
{
    std::vector<int> colour(g.order(), -1);
    std::queue<int> frontier;
    for (int s = 0; s < g.order(); ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        frontier.push(s);
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            for (int w : g.neighbors(u)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[u];
                    frontier.push(w);
                } else if (colour[w] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_antipodal_2cover(const DistanceData& dd)
{
    return dd.valencies().back() == 1;
}

ValidatedArray validate_hypotheses(const IntersectionArray& ia)
{
    if (!ia.is_bipartite())
        throw HypothesisError("bipartite graph required (a_i = 0 for all i)");
    if (ia.diameter() < 4)
        throw HypothesisError("diameter D >= 4 required (D = " + std::to_string(ia.diameter()) + ")");
    if (ia.valency() < 3)
        throw HypothesisError("valency k >= 3 required (k = " + std::to_string(ia.valency()) + ")");
    return ValidatedArray(ia);
}

Graph load_graph(std::string_view text)
{
    std::vector<Edge> edges;
    int max_index = -1;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#')
            continue;

        int vals[2];
        int count = 0;
        std::size_t cur = first;
        while (cur < line.size()) {
            cur = line.find_first_not_of(" \t\r", cur);
            if (cur == std::string_view::npos)
                break;
            const auto stop = std::min(line.find_first_of(" \t\r", cur), line.size());
            if (count == 2)
                throw ParseError("line " + std::to_string(line_no) + ": expected two vertex indices");
            int value = 0;
            const auto [ptr, ec] = std::from_chars(line.data() + cur, line.data() + stop, value);
            if (ec != std::errc() || ptr != line.data() + stop || value < 0)
                throw ParseError("line " + std::to_string(line_no) + ": '" +
                                 std::string(line.substr(cur, stop - cur)) +
                                 "' is not a non-negative integer");
            vals[count++] = value;
            cur = stop;
        }
        if (count != 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected two vertex indices");
        if (vals[0] == vals[1])
            throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " +
                             std::to_string(vals[0]));
        edges.emplace_back(vals[0], vals[1]);
        max_index = std::max({max_index, vals[0], vals[1]});
    }
    if (edges.empty())
        throw ParseError("edge list is empty");
    return Graph::from_edges(max_index + 1, std::move(edges));
}

Graph load_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_graph(buffer.str());
}

std::string to_edge_list(const Graph& g)
{
    std::string out;
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

}  // namespace tautdrg
