#include "plumbing/quotient_algebra.hpp"

#include "plumbing/errors.hpp"

#include <algorithm>

namespace plumbing {

namespace {

void accumulate(std::map<int, Rational>& acc, const SparseVec<Rational>& v, const Rational& c) {
    for (const auto& [k, x] : v) {
        auto [it, fresh] = acc.try_emplace(k, c * x);
        if (!fresh) {
            it->second += c * x;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

} // namespace

QuotientAlgebra::QuotientAlgebra(GradedQuiver quiver, RelationSet relations, int min_degree)
    : quiver_(std::move(quiver)), relations_(std::move(relations)), min_degree_(min_degree) {
    if (quiver_.has_positive_arrows())
        throw UnsupportedShape("the quotient engine needs non-positive arrow degrees");
    if (quiver_.has_nonnegative_cycle())
        throw ZeroDegreeCycle("the quotient engine needs a quiver without degree-0 cycles");
    relations_.erase(std::remove_if(relations_.begin(), relations_.end(),
                                    [](const GradedElement& r) { return r.is_zero(); }),
                     relations_.end());
    for (const auto& r : relations_)
        if (!r.length_homogeneous() || r.terms().begin()->first.length() == 0)
            throw NonHomogeneous("relations must be homogeneous in path length and have length >= 1");
    out_position_.assign(quiver_.arrow_count(), -1);
    for (int v = 1; v <= quiver_.vertex_count(); ++v) {
        const auto& out = quiver_.out_arrows(v);
        for (std::size_t k = 0; k < out.size(); ++k) out_position_[out[k]] = static_cast<int>(k);
    }
    modules_.resize(quiver_.vertex_count() + 1);
    built_ = std::make_unique<std::once_flag[]>(quiver_.vertex_count() + 1);
}

const QuotientAlgebra::Module& QuotientAlgebra::module(int source) const {
    if (source < 1 || source > quiver_.vertex_count())
        throw NotComposable("vertex " + std::to_string(source) + " does not exist");
    std::call_once(built_[source], [&] { modules_[source] = std::make_unique<Module>(build(source)); });
    return *modules_[source];
}

QuotientAlgebra::Vec QuotientAlgebra::apply(const Module& m, int arrow, const Vec& v) const {
    const int k = out_position_[arrow];
    std::map<int, std::map<int, Rational>> acc;
    for (const auto& [pid, coeffs] : v) {
        const Piece& p = m.pieces[pid];
        if (quiver_.arrow(arrow).source != p.target)
            throw NotComposable("arrow " + quiver_.arrow(arrow).name + " applied at vertex " +
                                std::to_string(p.target));
        int nxt = p.next[k];
        if (nxt == -2)
            throw OutOfWindow("product has degree below the computed floor " + std::to_string(min_degree_));
        if (nxt < 0) continue;
        auto& target = acc[nxt];
        for (const auto& [b, c] : coeffs) accumulate(target, p.image[b][k], c);
    }
    Vec out;
    for (auto& [pid, m2] : acc) {
        auto sv = to_sparse(m2);
        if (!sv.empty()) out[pid] = std::move(sv);
    }
    return out;
}

QuotientAlgebra::Vec QuotientAlgebra::apply(const Module& m, const std::vector<int>& arrows, Vec v) const {
    for (int a : arrows) {
        if (v.empty()) break;
        v = apply(m, a, v);
    }
    return v;
}

QuotientAlgebra::Module QuotientAlgebra::build(int source) const {
    Module m;
    Piece root;
    root.target = source;
    root.basis.push_back(idempotent(source));
    m.pieces.push_back(root);
    m.index[{source, 0, 0}] = 0;

    struct Candidate {
        int arrow, piece, b;
    };
    std::size_t layer_begin = 0, layer_end = 1;
    for (int len = 1;; ++len) {
        // candidates grouped by (target, degree), in deterministic order
        std::map<std::pair<int, int>, std::vector<Candidate>> groups;
        for (std::size_t pid = layer_begin; pid < layer_end; ++pid) {
            Piece& p = m.pieces[pid];
            const auto& out = quiver_.out_arrows(p.target);
            p.next.assign(out.size(), -1);
            p.image.assign(p.basis.size(), std::vector<SparseVec<Rational>>(out.size()));
            for (std::size_t k = 0; k < out.size(); ++k) {
                const Arrow& a = quiver_.arrow(out[k]);
                if (p.degree + a.degree < min_degree_) {
                    p.next[k] = -2;
                    continue;
                }
                auto& g = groups[{a.target, p.degree + a.degree}];
                for (std::size_t b = 0; b < p.basis.size(); ++b)
                    g.push_back({out[k], static_cast<int>(pid), static_cast<int>(b)});
            }
        }
        // sort each group by (arrow, piece, b) so indices do not depend on map layout
        std::size_t new_begin = m.pieces.size();
        for (auto& [key, cands] : groups) {
            std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
                return std::tie(x.arrow, x.piece, x.b) < std::tie(y.arrow, y.piece, y.b);
            });
            std::map<std::pair<int, int>, int> offset; // (arrow, piece) -> first index
            for (std::size_t c = 0; c < cands.size(); ++c)
                offset.try_emplace({cands[c].arrow, cands[c].piece}, static_cast<int>(c));

            const auto [target, degree] = key;
            Echelon<Rational> ech(static_cast<int>(cands.size()));
            for (const auto& r : relations_) {
                if (r.target() != target) continue;
                const int rlen = static_cast<int>(r.terms().begin()->first.length());
                if (rlen > len) continue;
                auto src = m.index.find({r.source(), degree - r.degree(), len - rlen});
                if (src == m.index.end()) continue;
                const Piece& qp = m.pieces[src->second];
                for (std::size_t q = 0; q < qp.basis.size(); ++q) {
                    std::vector<std::pair<int, Rational>> terms;
                    for (const auto& [word, c] : r.terms()) {
                        Vec start{{src->second, SparseVec<Rational>{{static_cast<int>(q), Rational(1)}}}};
                        std::vector<int> head(word.arrows.begin(), word.arrows.end() - 1);
                        Vec mid = apply(m, head, start);
                        const int last = word.arrows.back();
                        for (const auto& [pid, coeffs] : mid) {
                            int base = offset.at({last, pid});
                            for (const auto& [b, x] : coeffs) terms.emplace_back(base + b, c * x);
                        }
                    }
                    auto v = normalize(std::move(terms));
                    if (!v.empty()) ech.insert(v);
                }
            }
            ech.interreduce();

            std::vector<int> position(cands.size(), -1);
            Piece np;
            np.target = target;
            np.degree = degree;
            np.length = len;
            for (int c : ech.non_pivots()) {
                position[c] = static_cast<int>(np.basis.size());
                const Candidate& cd = cands[c];
                Path p = m.pieces[cd.piece].basis[cd.b];
                p.arrows.push_back(cd.arrow);
                p.target = target;
                p.degree = degree;
                np.basis.push_back(std::move(p));
            }
            int npid = -1;
            if (!np.basis.empty()) {
                npid = static_cast<int>(m.pieces.size());
                m.index[{target, degree, len}] = npid;
                m.pieces.push_back(std::move(np));
            }
            for (std::size_t c = 0; c < cands.size(); ++c) {
                const Candidate& cd = cands[c];
                Piece& from = m.pieces[cd.piece];
                const int k = out_position_[cd.arrow];
                from.next[k] = npid;
                if (npid < 0) continue;
                SparseVec<Rational> img;
                if (position[c] >= 0) {
                    img.emplace_back(position[c], Rational(1));
                } else {
                    for (const auto& [col, x] : ech.row_for_pivot(static_cast<int>(c)))
                        if (col != static_cast<int>(c)) img.emplace_back(position[col], -x);
                    std::sort(img.begin(), img.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                }
                from.image[cd.b][k] = std::move(img);
            }
        }
        if (m.pieces.size() == new_begin) {
            // last layer: its pieces still need (empty) action tables
            break;
        }
        layer_begin = new_begin;
        layer_end = m.pieces.size();
    }
    // pieces of the final non-empty layer have had next/image filled by the
    // loop above (all their candidates died); nothing left to do
    return m;
}

std::vector<int> QuotientAlgebra::pieces_of(const Module& m, int to, int degree) const {
    std::vector<int> out;
    for (const auto& [key, pid] : m.index)
        if (std::get<0>(key) == to && std::get<1>(key) == degree) out.push_back(pid);
    // map order is (target, degree, length): already sorted by length
    return out;
}

int QuotientAlgebra::hom_dim(int from, int to, int degree) const {
    if (degree > 0) return 0;
    if (degree < min_degree_)
        throw OutOfWindow("degree " + std::to_string(degree) + " is below the floor " + std::to_string(min_degree_));
    const Module& m = module(from);
    int d = 0;
    for (int pid : pieces_of(m, to, degree)) d += static_cast<int>(m.pieces[pid].basis.size());
    return d;
}

std::vector<Path> QuotientAlgebra::hom_basis(int from, int to, int degree) const {
    if (degree > 0) return {};
    if (degree < min_degree_)
        throw OutOfWindow("degree " + std::to_string(degree) + " is below the floor " + std::to_string(min_degree_));
    const Module& m = module(from);
    std::vector<Path> out;
    for (int pid : pieces_of(m, to, degree))
        out.insert(out.end(), m.pieces[pid].basis.begin(), m.pieces[pid].basis.end());
    return out;
}

QuotientAlgebra::Vec QuotientAlgebra::reduce(const Path& p) const {
    const Module& m = module(p.source);
    if (p.degree < min_degree_)
        throw OutOfWindow("path degree " + std::to_string(p.degree) + " is below the floor " +
                          std::to_string(min_degree_));
    Vec start{{0, SparseVec<Rational>{{0, Rational(1)}}}};
    return apply(m, p.arrows, start);
}

GradedElement QuotientAlgebra::to_element(const Module& m, int from, int to, int degree, const Vec& v) const {
    GradedElement e(from, to, degree);
    for (const auto& [pid, coeffs] : v)
        for (const auto& [b, c] : coeffs) e.add(m.pieces[pid].basis[b], c);
    return e;
}

GradedElement QuotientAlgebra::normal_form(const Path& p) const {
    return to_element(module(p.source), p.source, p.target, p.degree, reduce(p));
}

GradedElement QuotientAlgebra::normal_form(const GradedElement& e) const {
    GradedElement out(e.source(), e.target(), e.degree());
    for (const auto& [p, c] : e.terms()) out.add(normal_form(p), c);
    return out;
}

GradedElement QuotientAlgebra::multiply(const GradedElement& a, const GradedElement& b) const {
    if (a.source() != b.target())
        throw NotComposable("left factor starts at " + std::to_string(a.source()) + " but right factor ends at " +
                            std::to_string(b.target()));
    GradedElement out(b.source(), a.target(), a.degree() + b.degree());
    if (a.is_zero() || b.is_zero()) return out;
    const Module& m = module(b.source());
    if (out.degree() < min_degree_)
        throw OutOfWindow("product degree " + std::to_string(out.degree()) + " is below the floor " +
                          std::to_string(min_degree_));
    for (const auto& [pb, cb] : b.terms()) {
        Vec vb = reduce(pb);
        for (const auto& [pa, ca] : a.terms()) {
            Vec r = apply(m, pa.arrows, vb);
            out.add(to_element(m, out.source(), out.target(), out.degree(), r), ca * cb);
        }
    }
    return out;
}

std::vector<Rational> QuotientAlgebra::coordinates(const GradedElement& e) const {
    std::vector<Path> basis = hom_basis(e.source(), e.target(), e.degree());
    std::map<Path, int> where;
    for (std::size_t k = 0; k < basis.size(); ++k) where[basis[k]] = static_cast<int>(k);
    std::vector<Rational> x(basis.size());
    const GradedElement nf = normal_form(e);
    for (const auto& [p, c] : nf.terms()) x[where.at(p)] += c;
    return x;
}

GradedElement QuotientAlgebra::from_coordinates(int from, int to, int degree, const std::vector<Rational>& x) const {
    std::vector<Path> basis = hom_basis(from, to, degree);
    GradedElement e(from, to, degree);
    for (std::size_t k = 0; k < basis.size() && k < x.size(); ++k) e.add(basis[k], x[k]);
    return e;
}

} // namespace plumbing
