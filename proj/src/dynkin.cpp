#include "plumbing/dynkin.hpp"

#include "plumbing/errors.hpp"

#include <algorithm>
#include <queue>
#include <regex>
#include <set>

namespace plumbing {

char series_letter(Series s) {
    switch (s) {
    case Series::A: return 'A';
    case Series::D: return 'D';
    case Series::E: return 'E';
    }
    return '?';
}

std::string DynkinQuiver::name() const { return series_letter(series) + std::to_string(rank); }

bool valid_rank(Series s, int rank) {
    switch (s) {
    case Series::A: return rank >= 1;
    case Series::D: return rank >= 4;
    case Series::E: return rank >= 6 && rank <= 8;
    }
    return false;
}

int coxeter_number(Series s, int rank) {
    switch (s) {
    case Series::A: return rank + 1;
    case Series::D: return 2 * rank - 2;
    case Series::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    }
    return 0;
}

std::vector<Edge> default_orientation(Series s, int n) {
    std::vector<Edge> e;
    switch (s) {
    case Series::A:
        for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
        break;
    case Series::D:
        for (int i = 1; i < n - 2; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(n - 2, n - 1);
        e.emplace_back(n - 2, n);
        break;
    case Series::E:
        e = {{1, 3}, {3, 4}, {2, 4}, {4, 5}};
        for (int i = 5; i < n; ++i) e.emplace_back(i, i + 1);
        break;
    }
    return e;
}

std::vector<Edge> dynkin_tree(Series s, int n) {
    auto e = default_orientation(s, n);
    for (auto& [a, b] : e)
        if (a > b) std::swap(a, b);
    std::sort(e.begin(), e.end());
    return e;
}

DynkinQuiver build_dynkin(Series s, int n, const std::vector<Edge>& arrows) {
    if (!valid_rank(s, n))
        throw NonDynkinShape(std::string("no Dynkin diagram ") + series_letter(s) + std::to_string(n));
    std::set<Edge> seen;
    for (auto [a, b] : arrows) {
        if (a < 1 || a > n || b < 1 || b > n || a == b)
            throw NonDynkinShape("arrow " + std::to_string(a) + "->" + std::to_string(b) +
                                 " is not between two vertices of the tree");
        Edge u{std::min(a, b), std::max(a, b)};
        if (!seen.insert(u).second)
            throw DuplicateEdge("edge " + std::to_string(u.first) + "-" + std::to_string(u.second) +
                                " appears more than once");
    }
    auto tree = dynkin_tree(s, n);
    if (std::vector<Edge>(seen.begin(), seen.end()) != tree)
        throw NonDynkinShape("edge set is not the " + std::string(1, series_letter(s)) +
                             std::to_string(n) + " tree");
    return DynkinQuiver{s, n, arrows};
}

DynkinQuiver build_dynkin(Series s, int n) { return build_dynkin(s, n, default_orientation(s, n)); }

DynkinQuiver parse_dynkin(const std::string& name) {
    static const std::regex re("^([ADE])([0-9]+)$");
    std::smatch m;
    if (!std::regex_match(name, m, re)) throw ParseError("cannot read quiver name '" + name + "'");
    Series s = m[1] == "A" ? Series::A : m[1] == "D" ? Series::D : Series::E;
    int n = std::stoi(m[2]);
    return build_dynkin(s, n);
}

std::vector<std::vector<int>> tree_distances(const DynkinQuiver& q) {
    int n = q.rank;
    std::vector<std::vector<int>> adj(n + 1), dist(n + 1, std::vector<int>(n + 1, -1));
    for (auto [a, b] : q.arrows) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int s = 1; s <= n; ++s) {
        std::queue<int> bfs;
        bfs.push(s);
        dist[s][s] = 0;
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop();
            for (int y : adj[x])
                if (dist[s][y] < 0) {
                    dist[s][y] = dist[s][x] + 1;
                    bfs.push(y);
                }
        }
    }
    return dist;
}

} // namespace plumbing
