#include "plumbing/ginzburg.hpp"

#include "plumbing/errors.hpp"

#include <algorithm>

namespace plumbing {

template <typename Scalar>
GinzburgComplex<Scalar>::GinzburgComplex(const DynkinQuiver& q)
    : g_(build_ginzburg(q)), n_(q.rank), dist_(tree_distances(q)) {
    const int count = g_.quiver.arrow_count();
    code_.assign(count, 0);
    letter_of_code_.assign(256, -1);
    // preferred first letter at each vertex: along the first tree edge there
    std::vector<int> preferred(n_ + 1, -1);
    for (int v = 1; v <= n_; ++v) {
        // the earliest tree edge at v decides the preferred loop
        int best = -1;
        for (std::size_t e = 0; e < q.arrows.size() && best < 0; ++e) {
            auto [s, t] = q.arrows[e];
            if (s == v) best = g_.quiver.find("u(" + std::to_string(s) + "," + std::to_string(t) + ")");
            if (t == v) best = g_.quiver.find("u(" + std::to_string(t) + "," + std::to_string(s) + ")");
        }
        preferred[v] = best;
    }
    for (int id = 0; id < count; ++id) {
        const Arrow& a = g_.quiver.arrow(id);
        bool pref = a.kind != ArrowKind::Loop && preferred[a.source] == id;
        code_[id] = static_cast<unsigned char>(pref ? 128 + id : 1 + id);
        letter_of_code_[code_[id]] = id;
    }
    is_star_code_.assign(256, false);
    is_loop_code_.assign(256, false);
    target_of_code_.assign(256, 0);
    alpha_out_.assign(n_ + 1, {});
    star_out_.assign(n_ + 1, {});
    loop_code_.assign(n_ + 1, 0);
    for (int id = 0; id < count; ++id) {
        const Arrow& a = g_.quiver.arrow(id);
        unsigned char c = code_[id];
        target_of_code_[c] = a.target;
        if (a.kind == ArrowKind::Forward) alpha_out_[a.source].push_back(c);
        if (a.kind == ArrowKind::Star) {
            star_out_[a.source].push_back(c);
            is_star_code_[c] = true;
        }
        if (a.kind == ArrowKind::Loop) {
            loop_code_[a.source] = c;
            is_loop_code_[c] = true;
        }
    }
    dt_.assign(n_ + 1, {});
    for (int v = 1; v <= n_; ++v) {
        const GradedElement& d = g_.derivation[g_.loop[v - 1]];
        for (const auto& [p, c] : d.terms())
            dt_[v].push_back({code_[p.arrows[0]], code_[p.arrows[1]], c > 0 ? 1 : -1});
    }
}

template <typename Scalar>
void GinzburgComplex<Scalar>::dfs(int cur, int to, int a, int s, int m, Word& w, std::vector<Word>& out) const {
    const int moves = a + s;
    const int d = dist_[cur][to];
    if (d > moves || ((moves - d) & 1)) return;
    if (moves == 0 && m == 0) {
        out.push_back(w);
        return;
    }
    if (a > 0)
        for (unsigned char c : alpha_out_[cur]) {
            w.push_back(static_cast<char>(c));
            dfs(target_of_code_[c], to, a - 1, s, m, w, out);
            w.pop_back();
        }
    if (s > 0)
        for (unsigned char c : star_out_[cur]) {
            w.push_back(static_cast<char>(c));
            dfs(target_of_code_[c], to, a, s - 1, m, w, out);
            w.pop_back();
        }
    if (m > 0) {
        w.push_back(static_cast<char>(loop_code_[cur]));
        dfs(cur, to, a, s, m - 1, w, out);
        w.pop_back();
    }
}

template <typename Scalar>
std::vector<typename GinzburgComplex<Scalar>::Word>
GinzburgComplex<Scalar>::block(int from, int to, int degree, int a, int m, bool sorted) const {
    std::vector<Word> out;
    const int s = -degree - 2 * m;
    if (a < 0 || m < 0 || s < 0) return out;
    Word w;
    dfs(from, to, a, s, m, w, out);
    if (!sorted) return out;
    // order: later first t (by weight) is larger, then letters by code
    auto first_t = [&](const Word& x) {
        int weight = 0;
        for (char ch : x) {
            unsigned char c = static_cast<unsigned char>(ch);
            if (is_loop_code_[c]) return weight;
            weight += 1;
        }
        return 1 << 20;
    };
    std::vector<std::pair<int, Word>> keyed;
    keyed.reserve(out.size());
    for (auto& x : out) keyed.emplace_back(first_t(x), std::move(x));
    std::sort(keyed.begin(), keyed.end());
    out.clear();
    for (auto& [k, x] : keyed) out.push_back(std::move(x));
    return out;
}

template <typename Scalar>
long long GinzburgComplex<Scalar>::block_size(int from, int to, int degree, int a, int m) {
    const int s = -degree - 2 * m;
    if (a < 0 || m < 0 || s < 0) return 0;
    auto key = std::make_tuple(from, to, a, s, m);
    if (auto it = counts_.find(key); it != counts_.end()) return it->second;
    const int moves = a + s, d = dist_[from][to];
    long long total = 0;
    if (d <= moves && ((moves - d) & 1) == 0) {
        if (moves == 0 && m == 0) {
            total = 1;
        } else {
            if (a > 0)
                for (unsigned char c : alpha_out_[from]) total += block_size(target_of_code_[c], to, -(s + 2 * m), a - 1, m);
            if (s > 0)
                for (unsigned char c : star_out_[from])
                    total += block_size(target_of_code_[c], to, -(s - 1 + 2 * m), a, m);
            if (m > 0) total += block_size(from, to, -(s + 2 * (m - 1)), a, m - 1);
        }
    }
    counts_[key] = total;
    return total;
}

template <typename Scalar>
int GinzburgComplex<Scalar>::max_alpha(int degree, int m) const {
    const int s = -degree - 2 * m;
    return (s + m + 1) * std::max(1, n_ - 1);
}

template <typename Scalar>
int GinzburgComplex<Scalar>::rank_out(int from, int to, int degree, int a, int m) {
    if (m <= 0 || a < 0 || -degree - 2 * m < 0) return 0;
    auto key = std::make_tuple(from, to, degree, a, m);
    if (auto it = ranks_.find(key); it != ranks_.end()) return it->second;

    if (block_size(from, to, degree, a, m) == 0 || block_size(from, to, degree + 1, a + 1, m - 1) == 0) {
        ranks_[key] = 0;
        return 0;
    }
    std::vector<Word> cols = block(from, to, degree, a, m, false);
    int rank = 0;
    if (!cols.empty()) {
        std::vector<Word> rows = block(from, to, degree + 1, a + 1, m - 1, true);
        std::unordered_map<Word, int> index;
        index.reserve(rows.size() * 2);
        for (std::size_t r = 0; r < rows.size(); ++r) index.emplace(rows[r], static_cast<int>(r));
        // all column vectors first, then insert by increasing leading row
        std::vector<SparseVec<Scalar>> vecs;
        vecs.reserve(cols.size());
        std::vector<std::pair<int, Scalar>> terms;
        Word t;
        for (const Word& w : cols) {
            terms.clear();
            int stars_after = 0;
            for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k) {
                unsigned char c = static_cast<unsigned char>(w[k]);
                if (is_loop_code_[c]) {
                    const int v = g_.quiver.arrow(letter_of_code_[c]).source;
                    const int sign = (stars_after & 1) ? -1 : 1;
                    for (const Term& term : dt_[v]) {
                        t.assign(w, 0, k);
                        t.push_back(static_cast<char>(term.first));
                        t.push_back(static_cast<char>(term.second));
                        t.append(w, k + 1, std::string::npos);
                        terms.emplace_back(index.at(t), Scalar(sign * term.sign));
                    }
                } else if (is_star_code_[c]) {
                    ++stars_after;
                }
            }
            auto v = normalize(std::move(terms));
            terms = {};
            if (!v.empty()) vecs.push_back(std::move(v));
        }
        std::vector<Word>().swap(cols);
        std::stable_sort(vecs.begin(), vecs.end(), [](const auto& x, const auto& y) {
            if (x.back().first != y.back().first) return x.back().first < y.back().first;
            return x.size() < y.size();
        });
        Echelon<Scalar> ech(static_cast<int>(rows.size()));
        for (const auto& v : vecs) {
            if (ech.insert(v)) ++rank;
            if (rank == static_cast<int>(rows.size())) break;
        }
    }
    ranks_[key] = rank;
    return rank;
}

template <typename Scalar>
long long GinzburgComplex<Scalar>::chain_dim(int from, int to, int degree) {
    long long total = 0;
    for (int m = 0; 2 * m <= -degree; ++m)
        for (int a = 0; a <= max_alpha(degree, m); ++a) total += block_size(from, to, degree, a, m);
    return total;
}

template <typename Scalar>
int GinzburgComplex<Scalar>::cohomology_dim(int from, int to, int degree) {
    if (degree > 0) return 0;
    long long h = 0;
    for (int m = 0; 2 * m <= -degree; ++m) {
        for (int a = 0; a <= max_alpha(degree, m); ++a) {
            long long dim = block_size(from, to, degree, a, m);
            if (dim == 0) continue;
            h += dim - rank_out(from, to, degree, a, m) - rank_out(from, to, degree - 1, a - 1, m + 1);
        }
    }
    return static_cast<int>(h);
}

int ginzburg_cohomology_dim(const DynkinQuiver& q, int from, int to, int degree) {
    GinzburgComplex<ModP> c(q);
    return c.cohomology_dim(from, to, degree);
}

template class GinzburgComplex<ModP>;
template class GinzburgComplex<Rational>;

} // namespace plumbing
