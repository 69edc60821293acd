#pragma once

#include "ramsey/graph.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey::catalog {

inline Graph empty(int n) { return Graph(n); }

inline Graph complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph complete_multipartite(const std::vector<int>& parts)
{
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw std::invalid_argument("complete_multipartite: empty part");
        n += parts[p];
        part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    }
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

inline Graph cycle(int n)
{
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

/// Path on n vertices (n - 1 edges).
inline Graph path(int n)
{
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph matching(int m)
{
    Graph g(2 * m);
    for (int i = 0; i < m; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

inline Graph cherry() { return path(3); }

/// K_{1,1,2}: vertices 0, 1 have degree 3, vertices 2, 3 degree 2.
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

/// Triangle plus a pendant edge.
inline Graph triangle_plus() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

/// Three triangles: {0,1,2}, {0,3,4} glued at 0 and {1,5,6} glued at 1.
inline Graph jst() { return Graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {1, 5}, {1, 6}, {5, 6}}); }

inline Graph wheel(int k) { return apex_add(cycle(k), 1); }

/// Two apex vertices over a k-edge path; D_1 is the diamond, D_2 the 4-wheel.
inline Graph d_graph(int k)
{
    if (k < 1) throw std::invalid_argument("D_k needs k >= 1");
    return apex_add(path(k + 1), 2);
}

/// B_{2k}: two 2k-wheels glued along the 2k-cycle.
inline Graph beachball(int k)
{
    if (k < 2) throw std::invalid_argument("beachball needs k >= 2");
    return apex_add(cycle(2 * k), 2);
}

/// Diamond plus a pendant edge at a degree-2 vertex.
inline Graph h1() { return pendant_attach(complete(2), 0, diamond(), 2); }

/// Diamond plus a pendant edge at a degree-3 vertex.
inline Graph h2() { return pendant_attach(complete(2), 0, diamond(), 0); }

/// 5-cycle 0-1-2-3-4 with the chord 1-4.
inline Graph h3() { return Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 1}, {1, 4}}); }

/// Diamond on {0,1,2,3} (triangle 1-2-3, vertex 0 joined to 1 and 2) whose
/// two degree-2 vertices 0 and 3 are joined by a path through vertex 4.
inline Graph h4() { return Graph(5, {{1, 2}, {2, 3}, {1, 3}, {0, 1}, {0, 2}, {0, 4}, {3, 4}}); }

/// P_4 with a pendant edge at an inner vertex.
inline Graph fork() { return Graph(5, {{0, 1}, {0, 2}, {0, 4}, {3, 4}}); }

inline Graph k23_minus() { return Graph(5, {{3, 0}, {0, 2}, {1, 3}, {3, 4}, {4, 2}}); }

/// The ten connected bipartite graphs on at most five vertices.
inline std::vector<Graph> small_bipartite()
{
    return {complete(2),
            cherry(),
            complete_multipartite({1, 3}),
            path(4),
            cycle(4),
            complete_multipartite({1, 4}),
            fork(),
            path(5),
            k23_minus(),
            complete_multipartite({2, 3})};
}

namespace detail {

inline int parse_int(std::string_view s, std::string_view whole)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("catalog: bad number in '" + std::string(whole) + "'");
    return value;
}

inline bool all_digits_or_commas(std::string_view s)
{
    return !s.empty() && s.find_first_not_of("0123456789,") == std::string_view::npos;
}

}  // namespace detail

/// Looks up a named graph. Names: kN, kA,B[,C..], cN, pN, cherry, diamond,
/// k3plus, jst, h1..h4, fork, k23minus, bip1..bip10, wheel:K, dk:K,
/// beachball:K, matching:M, empty:N, apex:A:<name>.
inline Graph named(std::string_view name)
{
    using detail::parse_int;
    const std::string_view whole = name;

    if (name.starts_with("apex:")) {
        auto rest = name.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos) throw std::invalid_argument("catalog: apex:<a>:<graph> expected");
        return apex_add(named(rest.substr(colon + 1)), parse_int(rest.substr(0, colon), whole));
    }
    if (auto colon = name.find(':'); colon != std::string_view::npos) {
        auto head = name.substr(0, colon);
        int k = parse_int(name.substr(colon + 1), whole);
        if (head == "wheel") return wheel(k);
        if (head == "dk") return d_graph(k);
        if (head == "beachball") return beachball(k);
        if (head == "matching") return matching(k);
        if (head == "empty") return empty(k);
        if (head == "cycle") return cycle(k);
        if (head == "path") return path(k);
        if (head == "complete") return complete(k);
        throw std::invalid_argument("catalog: unknown graph '" + std::string(whole) + "'");
    }

    if (name == "cherry") return cherry();
    if (name == "diamond") return diamond();
    if (name == "k3plus") return triangle_plus();
    if (name == "jst") return jst();
    if (name == "h1") return h1();
    if (name == "h2") return h2();
    if (name == "h3") return h3();
    if (name == "h4") return h4();
    if (name == "fork") return fork();
    if (name == "k23minus") return k23_minus();
    if (name.starts_with("bip") && name.size() > 3) {
        int i = parse_int(name.substr(3), whole);
        auto list = small_bipartite();
        if (i < 1 || i > static_cast<int>(list.size()))
            throw std::invalid_argument("catalog: bip index must be 1..10");
        return list[static_cast<std::size_t>(i - 1)];
    }
    if (name.size() > 1 && detail::all_digits_or_commas(name.substr(1))) {
        auto body = name.substr(1);
        switch (name.front()) {
        case 'k': {
            std::vector<int> parts;
            std::size_t start = 0;
            while (start <= body.size()) {
                auto comma = body.find(',', start);
                auto piece = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
                parts.push_back(parse_int(piece, whole));
                if (comma == std::string_view::npos) break;
                start = comma + 1;
            }
            return parts.size() == 1 ? complete(parts.front()) : complete_multipartite(parts);
        }
        case 'c': return cycle(parse_int(body, whole));
        case 'p': return path(parse_int(body, whole));
        default: break;
        }
    }
    throw std::invalid_argument("catalog: unknown graph '" + std::string(whole) + "'");
}

/// A representative list of catalog identifiers, used by suites and the CLI listing.
inline std::vector<std::string> standard_names()
{
    return {"k2",        "k3",          "k4",          "k5",         "cherry",      "p4",          "p5",
            "c4",        "c5",          "c6",          "k1,3",       "k1,4",        "k2,3",        "k1,1,2",
            "k1,2,2",    "k2,2,2",      "k1,1,3",      "k1,1,4",     "k3plus",      "diamond",     "jst",
            "h1",        "h2",          "h3",          "h4",         "fork",        "k23minus",    "matching:2",
            "wheel:4",   "wheel:5",     "dk:1",        "dk:2",       "dk:3",        "beachball:2", "beachball:3",
            "apex:1:c4", "apex:2:c4",   "apex:1:k2,3", "apex:1:p4",  "apex:2:cherry"};
}

}  // namespace ramsey::catalog
