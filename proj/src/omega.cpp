#include "plumbing/omega.hpp"

#include "plumbing/coxeter.hpp"
#include "plumbing/errors.hpp"

namespace plumbing {

namespace {

std::string u_name(int i, int j) { return "u(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

GradedElement two_step(const GradedQuiver& quiver, int first, int second, const Rational& c) {
    return GradedElement::of(make_path(quiver, quiver.arrow(first).source, {first, second}), c);
}

void add_u_arrows(const DynkinQuiver& q, GradedQuiver& quiver, std::vector<int>* fwd, std::vector<int>* star) {
    for (std::size_t e = 0; e < q.arrows.size(); ++e) {
        auto [a, b] = q.arrows[e];
        int id = quiver.add_arrow({u_name(a, b), a, b, 0, ArrowKind::Forward, static_cast<int>(e)});
        if (fwd) fwd->push_back(id);
    }
    for (std::size_t e = 0; e < q.arrows.size(); ++e) {
        auto [a, b] = q.arrows[e];
        int id = quiver.add_arrow({u_name(b, a), b, a, -1, ArrowKind::Star, static_cast<int>(e)});
        if (star) star->push_back(id);
    }
}

} // namespace

int OmegaQuiver::u(int i, int j) const { return quiver.find(u_name(i, j)); }

bool OmegaQuiver::is_linear_a() const {
    return dynkin.series == Series::A && dynkin.arrows == default_orientation(Series::A, dynkin.rank);
}

GradedElement vertex_relation(const DynkinQuiver& q, const GradedQuiver& quiver, int i) {
    GradedElement r;
    bool started = false;
    for (auto [a, b] : q.arrows) {
        if (a != i && b != i) continue;
        int fwd = quiver.find(u_name(a, b)), back = quiver.find(u_name(b, a));
        // a* a when the arrow leaves i, b b* (with a minus) when it enters i
        GradedElement t = a == i ? two_step(quiver, fwd, back, 1) : two_step(quiver, back, fwd, -1);
        if (!started) {
            r = GradedElement(i, i, -1);
            started = true;
        }
        r.add(t);
    }
    return r;
}

SignedArrow phi_arrow(const OmegaQuiver& om, int id) {
    const Arrow& a = om.quiver.arrow(id);
    int image = om.u(om.phi(a.source), om.phi(a.target));
    int sign = a.kind == ArrowKind::Forward ? om.phi.edge_sign[a.label] : 1;
    return {image, sign};
}

OmegaQuiver build_omega(const DynkinQuiver& q) {
    OmegaQuiver om;
    om.dynkin = q;
    om.phi = involution(q);
    om.shift = shift_exponents(q);
    const int n = q.rank;
    om.quiver = GradedQuiver(n);
    add_u_arrows(q, om.quiver, &om.forward, &om.star);
    for (int i = 1; i <= n; ++i)
        om.v.push_back(om.quiver.add_arrow(
            {"v(" + std::to_string(i) + ")", i, om.phi(i), -om.shift[i] - 1, ArrowKind::V, i}));
    om.v_inv.assign(n, -1);

    for (int i = 1; i <= n; ++i) {
        GradedElement r = vertex_relation(q, om.quiver, i);
        if (!r.is_zero()) om.relations.push_back(r);
    }
    // alpha v_{phi(i),i} - sign * v_{phi(j),j} phi(alpha) for every u-arrow alpha: i -> j
    for (int id = 0; id < static_cast<int>(om.forward.size() + om.star.size()); ++id) {
        const Arrow& a = om.quiver.arrow(id);
        int i = a.source, j = a.target;
        SignedArrow img = phi_arrow(om, id);
        Path lhs = make_path(om.quiver, om.phi(i), {om.v[om.phi(i) - 1], id});
        Path rhs = make_path(om.quiver, om.phi(i), {img.arrow, om.v[om.phi(j) - 1]});
        GradedElement r(lhs.source, lhs.target, lhs.degree);
        r.add(lhs, 1);
        r.add(rhs, -img.sign);
        om.relations.push_back(r);
    }
    return om;
}

OmegaQuiver build_omega_bar(const OmegaQuiver& omega) {
    if (omega.has_inverses) return omega;
    OmegaQuiver om = omega;
    const int n = om.n();
    for (int i = 1; i <= n; ++i)
        om.v_inv[i - 1] = om.quiver.add_arrow(
            {"v_inv(" + std::to_string(i) + ")", om.phi(i), i, om.shift[i] + 1, ArrowKind::VInverse, i});
    for (int i = 1; i <= n; ++i) {
        int v = om.v[i - 1], w = om.v_inv[i - 1];
        GradedElement a(i, i, 0);
        a.add(make_path(om.quiver, i, {v, w}), 1);
        a.add(idempotent(i), -1);
        GradedElement b(om.phi(i), om.phi(i), 0);
        b.add(make_path(om.quiver, om.phi(i), {w, v}), 1);
        b.add(idempotent(om.phi(i)), -1);
        om.relations.push_back(a);
        om.relations.push_back(b);
    }
    om.has_inverses = true;
    return om;
}

GinzburgQuiver build_ginzburg(const DynkinQuiver& q) {
    GinzburgQuiver g;
    g.dynkin = q;
    const int n = q.rank;
    g.quiver = GradedQuiver(n);
    add_u_arrows(q, g.quiver, nullptr, nullptr);
    for (int i = 1; i <= n; ++i)
        g.loop.push_back(g.quiver.add_arrow({"t(" + std::to_string(i) + ")", i, i, -2, ArrowKind::Loop, i}));
    for (const auto& a : g.quiver.arrows()) {
        if (a.kind != ArrowKind::Loop) {
            g.derivation.emplace_back(a.source, a.target, a.degree + 1);
            continue;
        }
        GradedElement r = vertex_relation(q, g.quiver, a.source);
        g.derivation.push_back(r.is_zero() ? GradedElement(a.source, a.source, -1) : r);
    }
    return g;
}

GradedElement differential(const GinzburgQuiver& g, const Path& p) {
    GradedElement out(p.source, p.target, p.degree + 1);
    const auto& arrows = p.arrows;
    int later = 0; // sum of degrees of arrows after position k
    for (int k = static_cast<int>(arrows.size()) - 1; k >= 0; --k) {
        const GradedElement& da = g.derivation[arrows[k]];
        if (!da.is_zero()) {
            Rational sign = (later % 2 == 0) ? 1 : -1;
            std::vector<int> prefix(arrows.begin(), arrows.begin() + k);
            std::vector<int> suffix(arrows.begin() + k + 1, arrows.end());
            for (const auto& [mid, c] : da.terms()) {
                std::vector<int> w = prefix;
                w.insert(w.end(), mid.arrows.begin(), mid.arrows.end());
                w.insert(w.end(), suffix.begin(), suffix.end());
                out.add(make_path(g.quiver, p.source, w), sign * c);
            }
        }
        later += g.quiver.arrow(arrows[k]).degree;
    }
    return out;
}

GradedElement differential(const GinzburgQuiver& g, const GradedElement& e) {
    GradedElement out(e.source(), e.target(), e.degree() + 1);
    for (const auto& [p, c] : e.terms()) out.add(differential(g, p), c);
    return out;
}

} // namespace plumbing
