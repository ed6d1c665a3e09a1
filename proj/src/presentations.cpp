#include "plumbing/presentations.hpp"

#include "plumbing/errors.hpp"

#include <algorithm>
#include <memory>

namespace plumbing {

namespace {

void require_a(const DynkinQuiver& q) {
    if (q.series != Series::A) throw NotTypeA(q.name() + " is not of type A");
}

std::string g(const std::string& name, int i) { return name + "_" + std::to_string(i); }

// b ranges over all integers with b*dy = rest, or b >= 0 on the wrapped side
bool solvable(int rest, int dy, Side side) {
    if (rest % dy != 0) return false;
    return side == Side::Quotient || rest / dy >= 0;
}

} // namespace

int Presentation::hilbert(int degree, Side side) const {
    int count = 0;
    for (int a = 0; a < k; ++a)
        for (int e = 0; e <= 1; ++e)
            if (solvable(degree + a - e * deg_x, deg_y, side)) ++count;
    return count;
}

Presentation closed_form_presentation(const DynkinQuiver& q, int i) {
    require_a(q);
    const int n = q.rank;
    Presentation p;
    p.n = n;
    p.vertex = i;
    p.k = std::min(n - i, i - 1) + 1;
    p.l = std::abs(n + 1 - 2 * i);
    p.deg_x = std::min(n - i, i - 1) - n - 1;
    p.deg_y = -n - 3;
    p.x_squared_is_y = p.l == 0;
    const std::string x = g("x", i), y = g("y", i), z = g("z", i);
    auto zpow = [&](int e) { return e == 1 ? z : z + "^" + std::to_string(e); };
    if (p.x_squared_is_y) {
        p.generators = {x, z};
        p.relations = {zpow(p.k)};
        p.text = "K[" + x + ", " + z + "]/<" + zpow(p.k) + ">";
    } else {
        p.generators = {x, y, z};
        p.relations = {zpow(p.k), x + "^2 - " + y + " " + zpow(p.l)};
        p.text = "K[" + x + ", " + y + ", " + z + "]/<" + p.relations[0] + ", " + p.relations[1] + ">";
    }
    return p;
}

int closed_form_dim(const DynkinQuiver& q, int i, int j, int degree, Side side) {
    require_a(q);
    const int n = q.rank;
    int count = 0;
    for (int e = 0; e <= 1; ++e) {
        const int s = e ? n + 1 - i : i;
        const int top = std::min(n - s, j - 1) - std::max(0, j - s);
        for (int a = 0; a <= top; ++a) {
            const int rest = degree + a + std::max(0, s - j) + e * (i + 1);
            if (solvable(rest, -(n + 3), side)) ++count;
        }
    }
    return count;
}

int remark_exponent(int n, int i, int j) {
    return std::max(0, i - j) + std::max(0, 2 * j - n - 1) - std::max(0, i + j - n - 1);
}

std::string remark_case(int n, int i, int j) {
    if (i > j) return "mirror of " + remark_case(n, j, i);
    const int pi = n + 1 - i, pj = n + 1 - j;
    if (i < j && j <= pj && pj < pi) return "i < j <= phi(j) < phi(i)";
    if (i <= pj && pj <= j && j <= pi) return "i <= phi(j) <= j <= phi(i)";
    if (pj < pi && pi <= i && i < j) return "phi(j) < phi(i) <= i < j";
    if (pj <= i && i <= pi && pi <= j) return "phi(j) <= i <= phi(i) <= j";
    return "none";
}

UVReport uv_generator_check(const OmegaQuiver& om, const QuotientAlgebra& wrapped, int i, int j, int lo, int hi) {
    require_a(om.dynkin);
    const int n = om.n();
    UVReport r;
    r.from = i;
    r.to = j;
    r.case_label = remark_case(n, i, j);
    r.exponent = remark_exponent(n, i, j);

    const GradedQuiver& q = om.quiver;
    Path u = u_geodesic(om, i, j);
    Path v = concat(q, make_path(q, i, {om.v[i - 1]}), u_geodesic(om, om.phi(i), j));
    Path x = concat(q, make_path(q, j, {om.v[j - 1]}), u_geodesic(om, om.phi(j), j));

    for (int p = lo; p <= std::min(hi, 0); ++p) {
        const int target = wrapped.hom_dim(i, j, p);
        Echelon<Rational> span(target);
        for (const Path* gen : {&u, &v}) {
            const int rest = p - gen->degree;
            if (rest > 0) continue;
            for (const Path& m : wrapped.hom_basis(j, j, rest)) {
                GradedElement prod = wrapped.multiply(GradedElement::of(m), GradedElement::of(*gen));
                std::map<int, Rational> coords;
                auto c = wrapped.coordinates(prod);
                for (std::size_t k = 0; k < c.size(); ++k)
                    if (!is_zero(c[k])) coords[static_cast<int>(k)] = c[k];
                span.insert(to_sparse(coords));
            }
        }
        if (span.rank() != target) {
            r.spans = false;
            r.failed_degrees.push_back(p);
        }
    }

    // z_j^e V = x_j U
    GradedElement lhs = GradedElement::of(v);
    if (r.exponent > 0) {
        auto z = z_loop(om, j, j + 1);
        if (!z) z = z_loop(om, j, j - 1);
        for (int k = 0; k < r.exponent; ++k) lhs = wrapped.multiply(GradedElement::of(*z), lhs);
    }
    GradedElement rhs = wrapped.multiply(GradedElement::of(x), GradedElement::of(u));
    r.relation_holds = lhs.degree() == rhs.degree() && wrapped.normal_form(lhs) == wrapped.normal_form(rhs);
    return r;
}

std::vector<RingSeries> e6_rings() {
    auto period = [](int d, int p) { return ((d % p) + p) % p == 0; };
    // K[x, y^{+-1}]/(x^2)
    auto xy = [period](int dx, int dy) {
        return [=](int d) { return int(period(d, -dy)) + int(period(d - dx, -dy)); };
    };
    // K[x, y^{+-1}, z]/(z^2, x^2)
    auto xyz = [period](int dx, int dy) {
        return [=](int d) {
            int c = 0;
            for (int a = 0; a <= 1; ++a)
                for (int e = 0; e <= 1; ++e) c += period(d + a - e * dx, -dy);
            return c;
        };
    };
    // K<z, w>/(z^3, w^3, (z - w)^2) by word length, then periodic in x_4
    auto words = std::make_shared<std::vector<int>>();
    {
        GradedQuiver loops(1);
        int z = loops.add_arrow(Arrow{"z", 1, 1, -1, ArrowKind::Loop, 1});
        int w = loops.add_arrow(Arrow{"w", 1, 1, -1, ArrowKind::Loop, 1});
        auto word = [&](std::vector<int> a) { return make_path(loops, 1, a); };
        GradedElement z3 = GradedElement::of(word({z, z, z}));
        GradedElement w3 = GradedElement::of(word({w, w, w}));
        GradedElement sq = GradedElement::of(word({z, z}));
        sq.add(word({z, w}), -1).add(word({w, z}), -1).add(word({w, w}), 1);
        QuotientAlgebra r(loops, {z3, w3, sq}, -12);
        for (int len = 0; len <= 12; ++len) words->push_back(r.hom_dim(1, 1, -len));
    }
    auto vertex4 = [words](int d) {
        int c = 0;
        for (int len = 0; len < static_cast<int>(words->size()); ++len)
            if ((-d - len) % 7 == 0) c += (*words)[len];
        return c;
    };
    return {
        {1, "K[x_1, y_1^{+-1}]/<x_1^2>, |x_1| = -9, |y_1| = -14", xy(-9, -14)},
        {2, "K[x_2^{+-1}], |x_2| = -7", [period](int d) { return int(period(d, 7)); }},
        {3, "K[x_3, y_3^{+-1}, z_3]/<z_3^2, x_3^2>, |x_3| = -8, |y_3| = -14", xyz(-8, -14)},
        {4, "K<x_4^{+-1}, z_4, w_4>/<[x_4, z_4], [x_4, w_4], z_4^3, w_4^3, (z_4 - w_4)^2>, |x_4| = -7", vertex4},
        {5, "K[x_5, y_5^{+-1}, z_5]/<z_5^2, x_5^2>, |x_5| = -8, |y_5| = -14", xyz(-8, -14)},
        {6, "K[x_6, y_6^{+-1}]/<x_6^2>, |x_6| = -9, |y_6| = -14", xy(-9, -14)},
    };
}

} // namespace plumbing
