#include "plumbing/localization.hpp"

#include "plumbing/errors.hpp"
#include "plumbing/linalg.hpp"

#include <sstream>

namespace plumbing {

namespace {

int ceil_div(int a, int b) { // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

} // namespace

LocalizedAlgebra::LocalizedAlgebra(const OmegaQuiver& omega, int floor)
    : omega_(omega),
      bar_(build_omega_bar(omega)),
      period_(omega.coxeter() + 2),
      algebra_(omega.quiver, omega.relations, floor < 0 ? floor : -3 * (omega.coxeter() + 2)) {
    if (omega.has_inverses) throw UnsupportedShape("pass Omega_Q, not Omega-bar_Q, to LocalizedAlgebra");
    if (algebra_.min_degree() > -2 * period_ + 2)
        throw OutOfWindow("floor must be at most -2(h+2)+2 for products to fit");
}

GradedElement LocalizedAlgebra::times_y(const GradedElement& e) const {
    // y at the target: first v_{t,phi(t)}, then v_{phi(t),t}
    const int t = e.target();
    Path y = make_path(omega_.quiver, t, {omega_.v[t - 1], omega_.v[omega_.phi(t) - 1]});
    return algebra_.multiply(GradedElement::of(y), e);
}

GradedElement LocalizedAlgebra::divide_by_y(const GradedElement& e) const {
    const int from = e.source(), to = e.target(), q = e.degree() + period_;
    std::vector<Path> src = algebra_.hom_basis(from, to, q);
    std::vector<Path> dst = algebra_.hom_basis(from, to, e.degree());
    if (src.size() != dst.size())
        throw UnsupportedShape("multiplication by Y is not bijective in degree " + std::to_string(q));
    const Eigen::Index n = static_cast<Eigen::Index>(src.size());
    Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        auto col = algebra_.coordinates(times_y(GradedElement::of(src[c])));
        for (Eigen::Index r = 0; r < n; ++r) m(r, c) = col[r];
    }
    auto rhs_v = algebra_.coordinates(e);
    Eigen::Matrix<Rational, Eigen::Dynamic, 1> rhs(n), x;
    for (Eigen::Index r = 0; r < n; ++r) rhs(r) = rhs_v[r];
    if (!exact_solve<Rational>(m, rhs, x))
        throw UnsupportedShape("multiplication by Y is not bijective in degree " + std::to_string(q));
    GradedElement out(from, to, q);
    for (Eigen::Index c = 0; c < n; ++c) out.add(src[c], x(c));
    return out;
}

int LocalizedAlgebra::body_degree(int degree) const { return degree - ceil_div(degree, period_) * period_; }

LocalElement LocalizedAlgebra::canonical(int source, int target, int degree, int y_power, GradedElement body) const {
    // bring the body degree into (-period, 0]
    while (body.degree() <= -period_) {
        body = divide_by_y(body);
        --y_power;
    }
    while (body.degree() > 0) {
        throw UnsupportedShape("positive body degree in the localization");
    }
    return LocalElement{source, target, degree, y_power, algebra_.normal_form(body)};
}

LocalizationCheck LocalizedAlgebra::verify() const {
    LocalizationCheck check;
    std::ostringstream why;
    const int n = omega_.n();
    for (int id = 0; id < omega_.quiver.arrow_count(); ++id) {
        const Arrow& a = omega_.quiver.arrow(id);
        GradedElement arrow = GradedElement::of(make_path(omega_.quiver, a.source, {id}));
        Path ys = make_path(omega_.quiver, a.source, {omega_.v[a.source - 1], omega_.v[omega_.phi(a.source) - 1]});
        GradedElement left = times_y(arrow);
        GradedElement right = algebra_.multiply(arrow, GradedElement::of(ys));
        if (left != right) {
            check.central = false;
            why << "Y does not commute with " << a.name << "; ";
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int q = 0; q - period_ >= algebra_.min_degree(); --q) {
                auto src = algebra_.hom_basis(i, j, q);
                int target_dim = algebra_.hom_dim(i, j, q - period_);
                if (static_cast<int>(src.size()) != target_dim) {
                    check.bijective = false;
                    why << "dim A_" << q << "(" << i << "," << j << ") != dim A_" << q - period_ << "; ";
                    continue;
                }
                Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> m(target_dim, src.size());
                for (std::size_t c = 0; c < src.size(); ++c) {
                    auto col = algebra_.coordinates(times_y(GradedElement::of(src[c])));
                    for (int r = 0; r < target_dim; ++r) m(r, static_cast<Eigen::Index>(c)) = col[r];
                }
                if (exact_rank(m) != target_dim) {
                    check.bijective = false;
                    why << "Y is singular on A_" << q << "(" << i << "," << j << "); ";
                }
            }
    check.detail = why.str();
    return check;
}

int LocalizedAlgebra::dim(int from, int to, int degree) const {
    return algebra_.hom_dim(from, to, body_degree(degree));
}

std::vector<LocalElement> LocalizedAlgebra::basis(int from, int to, int degree) const {
    const int q = body_degree(degree);
    const int k = (q - degree) / period_;
    std::vector<LocalElement> out;
    for (const Path& p : algebra_.hom_basis(from, to, q))
        out.push_back(LocalElement{from, to, degree, k, GradedElement::of(p)});
    return out;
}

LocalElement LocalizedAlgebra::multiply(const LocalElement& a, const LocalElement& b) const {
    if (a.source != b.target)
        throw NotComposable("left factor starts at " + std::to_string(a.source) + " but right factor ends at " +
                            std::to_string(b.target));
    GradedElement body = algebra_.multiply(a.body, b.body);
    return canonical(b.source, a.target, a.degree + b.degree, a.y_power + b.y_power, body);
}

LocalElement LocalizedAlgebra::element(const Path& p) const {
    const GradedQuiver& q = bar_.quiver;
    LocalElement cur{p.source, p.source, 0, 0, GradedElement::of(idempotent(p.source))};
    for (int id : p.arrows) {
        const Arrow& a = q.arrow(id);
        LocalElement letter;
        if (a.kind == ArrowKind::VInverse) {
            // v^{-1}_{m,phi(m)} = Y^{-1} v_{phi(m),m}
            const int m = a.label;
            const int back = omega_.v[omega_.phi(m) - 1];
            letter = LocalElement{a.source, a.target, a.degree, 1,
                                  GradedElement::of(make_path(omega_.quiver, a.source, {back}))};
        } else {
            // all other arrows of Omega-bar are arrows of Omega with the same ids
            letter = LocalElement{a.source, a.target, a.degree, 0,
                                  GradedElement::of(make_path(omega_.quiver, a.source, {id}))};
        }
        cur = multiply(letter, cur);
    }
    return cur;
}

LocalElement LocalizedAlgebra::element(const GradedElement& e) const {
    const int q = body_degree(e.degree());
    const int k = (q - e.degree()) / period_;
    LocalElement out{e.source(), e.target(), e.degree(), k, GradedElement(e.source(), e.target(), q)};
    for (const auto& [p, c] : e.terms()) {
        LocalElement t = element(p);
        // both are canonical with the same y-power
        out.body.add(t.body, c);
    }
    out.body = algebra_.normal_form(out.body);
    return out;
}

std::vector<Rational> LocalizedAlgebra::coordinates(const LocalElement& e) const {
    return algebra_.coordinates(e.body);
}

std::string LocalizedAlgebra::to_string(const LocalElement& e) const {
    if (e.is_zero()) return "0";
    std::string body = plumbing::to_string(bar_.quiver, e.body);
    if (e.y_power == 0) return body;
    return "Y^" + std::to_string(-e.y_power) + " * (" + body + ")";
}

} // namespace plumbing
