#include "plumbing/involution.hpp"

#include "plumbing/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace plumbing {

bool Involution::is_identity() const {
    for (std::size_t v = 1; v < vertex.size(); ++v)
        if (vertex[v] != static_cast<int>(v)) return false;
    return true;
}

std::vector<int> diagram_involution(Series s, int n) {
    std::vector<int> phi(n + 1);
    std::iota(phi.begin(), phi.end(), 0);
    if (s == Series::A) {
        for (int i = 1; i <= n; ++i) phi[i] = n + 1 - i;
    } else if (s == Series::D && n % 2 == 1) {
        std::swap(phi[n - 1], phi[n]);
    } else if (s == Series::E && n == 6) {
        std::swap(phi[1], phi[6]);
        std::swap(phi[3], phi[5]);
    }
    return phi;
}

std::optional<std::vector<int>> solve_parity_system(int variables,
                                                    const std::vector<ParityConstraint>& constraints) {
    // union-find carrying the parity to the parent
    std::vector<int> parent(variables), offset(variables, 0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](auto&& self, int x) -> std::pair<int, int> {
        if (parent[x] == x) return {x, 0};
        auto [root, p] = self(self, parent[x]);
        parent[x] = root;
        offset[x] ^= p;
        return {root, offset[x]};
    };
    for (const auto& c : constraints) {
        auto [ra, pa] = find(find, c.a);
        auto [rb, pb] = find(find, c.b);
        if (ra == rb) {
            if ((pa ^ pb) != (c.parity & 1)) return std::nullopt;
            continue;
        }
        // attach the larger root below the smaller one
        if (ra > rb) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        parent[rb] = ra;
        offset[rb] = pa ^ pb ^ (c.parity & 1);
    }
    std::vector<int> x(variables);
    for (int v = 0; v < variables; ++v) x[v] = find(find, v).second;
    return x;
}

Involution involution(const DynkinQuiver& q) {
    const int n = q.rank;
    Involution phi;
    phi.vertex = diagram_involution(q.series, n);

    std::set<Edge> arrows(q.arrows.begin(), q.arrows.end());
    for (auto [a, b] : q.arrows)
        if (!arrows.count({phi(a), phi(b)})) phi.preserves_arrows = false;

    // edge index of the tree edge {a, b}
    auto edge_of = [&](int a, int b) {
        for (std::size_t e = 0; e < q.arrows.size(); ++e) {
            auto [s, t] = q.arrows[e];
            if ((s == a && t == b) || (s == b && t == a)) return static_cast<int>(e);
        }
        throw NonDynkinShape("involution does not map the tree to itself");
    };
    // bit of the vertex relation at v for edge e: 0 if e leaves v, 1 if it enters
    auto bit = [&](int v, int e) { return q.arrows[e].first == v ? 0 : 1; };

    std::vector<int> image(q.arrows.size());
    for (std::size_t e = 0; e < q.arrows.size(); ++e)
        image[e] = edge_of(phi(q.arrows[e].first), phi(q.arrows[e].second));

    // phi(r_v) = lambda_v r_{phi v}: for edges e, f at v the products of
    // signs must agree.
    std::vector<ParityConstraint> cons;
    for (int v = 1; v <= n; ++v) {
        std::vector<int> star;
        for (std::size_t e = 0; e < q.arrows.size(); ++e)
            if (q.arrows[e].first == v || q.arrows[e].second == v) star.push_back(static_cast<int>(e));
        for (std::size_t k = 1; k < star.size(); ++k) {
            int e = star[0], f = star[k];
            int pe = bit(v, e) ^ bit(phi(v), image[e]);
            int pf = bit(v, f) ^ bit(phi(v), image[f]);
            cons.push_back({e, f, pe ^ pf});
        }
    }
    auto x = solve_parity_system(static_cast<int>(q.arrows.size()), cons);
    if (!x)
        throw OrientationNotPhiCompatible("no sign choice makes phi respect the relations of " + q.name());
    phi.edge_sign.resize(q.arrows.size());
    for (std::size_t e = 0; e < q.arrows.size(); ++e) phi.edge_sign[e] = (*x)[e] ? -1 : 1;
    return phi;
}

} // namespace plumbing
