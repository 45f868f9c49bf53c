#include "tautdrg/generators.hpp"

#include <charconv>
#include <filesystem>
#include <functional>
#include <string>

#include "tautdrg/error.hpp"

namespace tautdrg {

namespace {

void require_range(const char* family, int value, int lo, int hi)
{
    if (value < lo || value > hi)
        throw ParseError(std::string(family) + " parameter " + std::to_string(value) +
                         " outside " + std::to_string(lo) + ".." + std::to_string(hi));
}

int parse_int(std::string_view family, std::string_view text)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("family '" + std::string(family) + "': parameter '" + std::string(text) +
                         "' is not an integer");
    return value;
}

}  // namespace

Graph hypercube(int D)
{
    require_range("hypercube", D, 1, 12);
    const int n = 1 << D;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * D / 2);
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < D; ++b) {
            const int v = u ^ (1 << b);
            if (v > u)
                edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, std::move(edges));
}

Graph doubled_odd(int m)
{
    require_range("doubled_odd", m, 2, 7);
    const int ground = 2 * m - 1;
    const int size = m - 1;

    std::vector<unsigned> subsets;
    std::vector<int> current;
    std::function<void(int)> extend = [&](int next) {
        if (static_cast<int>(current.size()) == size) {
            unsigned mask = 0;
            for (int e : current)
                mask |= 1u << e;
            subsets.push_back(mask);
            return;
        }
        for (int e = next; e < ground; ++e) {
            current.push_back(e);
            extend(e + 1);
            current.pop_back();
        }
    };
    extend(0);

    const int r = static_cast<int>(subsets.size());
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if ((subsets[i] & subsets[j]) == 0)
                edges.emplace_back(2 * i, 2 * j + 1);
    return Graph::from_edges(2 * r, std::move(edges));
}

Graph bipartite_double(const Graph& g)
{
    std::vector<Edge> edges;
    edges.reserve(2 * g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(2 * u, 2 * v + 1);
        edges.emplace_back(2 * v, 2 * u + 1);
    }
    return Graph::from_edges(2 * g.order(), std::move(edges));
}

Graph cycle(int n)
{
    require_range("cycle", n, 3, 5000);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

Graph generate(std::string_view family)
{
    const auto colon = family.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("family '" + std::string(family) + "' needs the form NAME:PARAM");
    const auto name = family.substr(0, colon);
    const auto param = family.substr(colon + 1);

    if (name == "hypercube")
        return hypercube(parse_int(family, param));
    if (name == "doubled_odd")
        return doubled_odd(parse_int(family, param));
    if (name == "cycle")
        return cycle(parse_int(family, param));
    if (name == "double") {
        const std::filesystem::path path{std::string(param)};
        std::error_code ec;
        if (std::filesystem::is_regular_file(path, ec))
            return bipartite_double(load_graph_file(path));
        return bipartite_double(generate(param));
    }
    throw ParseError("unknown family '" + std::string(name) + "'");
}

}  // namespace tautdrg
