#include "plumbing/path_space.hpp"

#include "plumbing/errors.hpp"

#include <algorithm>
#include <map>

namespace plumbing {

namespace {

void require_enumerable(const GradedQuiver& q) {
    if (q.has_nonnegative_cycle())
        throw ZeroDegreeCycle("quiver has a cycle of non-negative degree; degree pieces are infinite");
}

void dfs(const GradedQuiver& q, int to, int degree, Path& cur, std::vector<Path>& out,
         const std::vector<int>& gain) {
    if (cur.target == to && cur.degree == degree) out.push_back(cur);
    for (int a : q.out_arrows(cur.target)) {
        const Arrow& ar = q.arrow(a);
        int d = cur.degree + ar.degree;
        if (d + gain[ar.target] < degree) continue;
        int saved_target = cur.target;
        cur.arrows.push_back(a);
        cur.target = ar.target;
        cur.degree = d;
        dfs(q, to, degree, cur, out, gain);
        cur.arrows.pop_back();
        cur.target = saved_target;
        cur.degree -= ar.degree;
    }
}

// largest degree any path can add starting from each vertex
std::vector<int> max_gain(const GradedQuiver& q) {
    const int n = q.vertex_count();
    std::vector<int> g(n + 1, 0);
    for (int round = 0; round <= n; ++round)
        for (const auto& a : q.arrows()) g[a.source] = std::max(g[a.source], a.degree + g[a.target]);
    return g;
}

} // namespace

std::vector<Path> enumerate_paths(const GradedQuiver& q, int from, int to, int degree) {
    require_enumerable(q);
    std::vector<Path> out;
    Path cur = idempotent(from);
    dfs(q, to, degree, cur, out, max_gain(q));
    std::sort(out.begin(), out.end());
    return out;
}

IdealPiece ideal_subspace(const GradedQuiver& q, const RelationSet& relations, int from, int to, int degree) {
    require_enumerable(q);
    if (q.has_positive_arrows()) throw UnsupportedShape("ideal_subspace expects non-positive arrow degrees");
    IdealPiece piece;
    piece.paths = enumerate_paths(q, from, to, degree);
    std::map<Path, int> index;
    for (std::size_t k = 0; k < piece.paths.size(); ++k) index[piece.paths[k]] = static_cast<int>(k);

    // order of coordinates = lexicographic; pivots are the largest paths
    Echelon<Rational> ech(static_cast<int>(piece.paths.size()));
    for (const auto& r : relations) {
        if (r.is_zero()) continue;
        int rest = degree - r.degree();
        for (int dq = 0; dq >= rest; --dq) {
            for (const Path& right : enumerate_paths(q, from, r.source(), dq)) {
                for (const Path& left : enumerate_paths(q, r.target(), to, rest - dq)) {
                    std::vector<std::pair<int, Rational>> v;
                    for (const auto& [mid, c] : r.terms())
                        v.emplace_back(index.at(concat(q, concat(q, right, mid), left)), c);
                    ech.insert(normalize(std::move(v)));
                }
            }
        }
    }
    ech.interreduce();
    for (const auto& row : ech.rows()) {
        GradedElement e(from, to, degree);
        for (const auto& [k, c] : row) e.add(piece.paths[k], c);
        piece.basis.push_back(e);
    }
    std::sort(piece.basis.begin(), piece.basis.end(), [](const GradedElement& a, const GradedElement& b) {
        return std::prev(a.terms().end())->first < std::prev(b.terms().end())->first;
    });
    for (int k : ech.non_pivots()) piece.complement.push_back(piece.paths[k]);
    return piece;
}

int brute_hom_dim(const GradedQuiver& q, const RelationSet& relations, int from, int to, int degree) {
    IdealPiece p = ideal_subspace(q, relations, from, to, degree);
    return p.path_count() - p.dimension();
}

} // namespace plumbing
