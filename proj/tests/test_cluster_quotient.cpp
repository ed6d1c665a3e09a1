#include <doctest.h>

#include "plumbing/cluster.hpp"
#include "plumbing/element_parser.hpp"
#include "plumbing/errors.hpp"
#include "plumbing/linalg.hpp"
#include "plumbing/localization.hpp"
#include "plumbing/presentations.hpp"

#include <functional>

using namespace plumbing;

namespace {

struct TypeA {
    OmegaQuiver om, bar;
    QuotientAlgebra wrapped;
    explicit TypeA(int n, int floor = -40)
        : om(build_omega(parse_dynkin("A" + std::to_string(n)))), bar(build_omega_bar(om)),
          wrapped(om.quiver, om.relations, floor) {}
    QuotientElement canon(const std::string& text) const { return canonical_form(bar, parse_element(bar, text)); }
    Path path(const std::string& text) const { return parse_element(bar, text).terms().begin()->first; }
};

const TypeA& a5() {
    static const TypeA t(5);
    return t;
}

// All u-paths from `from` of exactly `length` arrows.
void u_paths(const OmegaQuiver& om, int from, int length, const std::function<void(const Path&)>& visit) {
    std::vector<int> stack;
    std::function<void(int)> walk = [&](int at) {
        if (static_cast<int>(stack.size()) == length) {
            visit(make_path(om.quiver, from, stack));
            return;
        }
        for (int id : om.quiver.out_arrows(at)) {
            const Arrow& a = om.quiver.arrow(id);
            if (a.kind != ArrowKind::Forward && a.kind != ArrowKind::Star) continue;
            stack.push_back(id);
            walk(a.target);
            stack.pop_back();
        }
    };
    walk(from);
}

} // namespace

TEST_CASE("u_path_stats") {
    const TypeA& t = a5();
    Path p = t.path("u(2,3) u(3,2) u(2,3) u(1,2) u(2,1)");
    UPathStats s = u_path_stats(t.om, p);
    CHECK(s.increasing == 3);
    CHECK(s.decreasing == 2);
    CHECK(u_path_stats(t.om, idempotent(4)).increasing == 0);
    CHECK(u_path_stats(t.om, idempotent(4)).decreasing == 0);
    UPathStats u15 = u_path_stats(t.om, u_geodesic(t.om, 1, 5));
    CHECK(u15.increasing == 4);
    CHECK(u15.decreasing == 0);
    CHECK_THROWS_AS(u_path_stats(t.bar, t.path("u(1,2) v(5)")), NotAUPath);
    OmegaQuiver d4 = build_omega(parse_dynkin("D4"));
    CHECK_THROWS_AS(u_path_stats(d4, idempotent(1)), NotTypeA);
}

TEST_CASE("u_path_vanishes") {
    const TypeA& t = a5();
    CHECK(u_path_vanishes(t.om, t.path("u(2,3) u(3,2) u(2,3) u(1,2) u(2,1)")));
    for (int i = 1; i <= 5; ++i) CHECK_FALSE(u_path_vanishes(t.om, idempotent(i)));
    CHECK_FALSE(u_path_vanishes(t.om, u_geodesic(t.om, 1, 5)));
    CHECK(u_path_vanishes(t.om, t.path("u(2,1) u(1,2)")));
}

TEST_CASE("vanishing criterion agrees with ideal membership for u-paths") {
    for (int n = 1; n <= 6; ++n) {
        const int max_length = n <= 4 ? 10 : 8;
        OmegaQuiver om = build_omega(parse_dynkin("A" + std::to_string(n)));
        QuotientAlgebra A(om.quiver, om.relations, -max_length);
        int checked = 0;
        for (int from = 1; from <= n; ++from)
            for (int len = 0; len <= max_length; ++len)
                u_paths(om, from, len, [&](const Path& p) {
                    bool zero = A.is_zero(GradedElement::of(p));
                    CHECK_MESSAGE(u_path_vanishes(om, p) == zero, "A" << n << " " << to_string(om.quiver, p));
                    ++checked;
                });
        if (n > 1) CHECK(checked > 0);
    }
}

TEST_CASE("canonical_form: the worked rewrite") {
    const TypeA& t = a5();
    std::vector<RewriteStep> trace;
    QuotientElement q = canonical_form(t.bar, t.path("u(2,3) u(3,2) v(3) u(4,3) u(5,4) v(1) u(2,1)"), &trace);
    CHECK(q.is_zero());
    REQUIRE_FALSE(trace.empty());
    CHECK(to_string(t.bar.quiver, trace.back().path) == "u(2,3) u(3,2) u(2,3) u(1,2) u(2,1) v(4) v(2)");
    for (const auto& s : trace) CHECK(s.coefficient == 1);
}

TEST_CASE("canonical_form: small identities") {
    const TypeA& t = a5();
    CHECK(t.canon("v_inv(1) v(1)") == identity_element(t.bar, 1));
    CHECK(t.canon("v(1) v_inv(1)") == identity_element(t.bar, 5));
    for (int i = 1; i <= 5; ++i) {
        std::string s = std::to_string(i);
        CHECK(t.canon("x(" + s + ") y(" + s + ")") == t.canon("y(" + s + ") x(" + s + ")"));
        CHECK(t.canon("z(" + s + ") y(" + s + ")") == t.canon("y(" + s + ") z(" + s + ")"));
        CHECK(t.canon("y(" + s + ") y(" + s + ")^-1") == identity_element(t.bar, i));
    }
    CHECK_THROWS_AS(canonical_form(build_omega_bar(build_omega(parse_dynkin("D4"))), idempotent(1)), NotTypeA);
}

TEST_CASE("canonical_form is a projection and kills the relations") {
    for (int n : {1, 2, 3, 4, 5}) {
        TypeA t(n);
        for (const auto& r : t.bar.relations) CHECK_MESSAGE(canonical_form(t.bar, r).is_zero(), to_string(t.bar.quiver, r));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int p = -2 * (n + 3); p <= 2 * (n + 3); ++p)
                    for (const auto& m : monomial_basis(t.bar, i, j, p, Side::Quotient)) {
                        Path rep = representative(t.bar, m);
                        CHECK(rep.degree == p);
                        QuotientElement once = canonical_form(t.bar, rep);
                        CHECK(once == QuotientElement::of(t.bar, m));
                        CHECK(canonical_form(t.bar, representative(t.bar, once.terms().begin()->first)) == once);
                    }
    }
}

TEST_CASE("normal monomials on the wrapped side match the engine") {
    for (int n : {1, 2, 3, 4, 5}) {
        TypeA t(n, -(3 * n + 9));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int p = 0; p >= -(3 * n + 9); --p) {
                    auto basis = monomial_basis(t.bar, i, j, p, Side::Wrapped);
                    CHECK(static_cast<int>(basis.size()) == t.wrapped.hom_dim(i, j, p));
                    // and the representatives are independent in the engine
                    if (basis.empty()) continue;
                    RationalMatrix m(basis.size(), t.wrapped.hom_dim(i, j, p));
                    for (std::size_t r = 0; r < basis.size(); ++r) {
                        auto x = t.wrapped.coordinates(GradedElement::of(representative(t.bar, basis[r])));
                        for (std::size_t c = 0; c < x.size(); ++c) m(r, c) = x[c];
                    }
                    CHECK(exact_rank(m) == static_cast<int>(basis.size()));
                }
    }
}

TEST_CASE("quotient_dim examples and invariants") {
    const TypeA& t = a5();
    CHECK(quotient_dim(t.wrapped, 3, 3, 1) == 0);
    CHECK(quotient_dim(t.wrapped, 3, 3, 2) == 1);
    CHECK(quotient_dim(t.wrapped, 3, 3, 2) == t.wrapped.hom_dim(3, 3, 0));
    OmegaQuiver e6 = build_omega(parse_dynkin("E6"));
    QuotientAlgebra w6(e6.quiver, e6.relations, -20);
    CHECK(quotient_dim(w6, 2, 2, 7) == 1);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            CHECK(quotient_dim(t.wrapped, i, j, 1) == 0);
            for (int p = -12; p <= 14; ++p) {
                CHECK(quotient_dim(t.wrapped, i, j, p) == quotient_dim(t.wrapped, j, i, 2 - p));
                CHECK(quotient_dim(t.wrapped, i, j, p) == static_cast<int>(quotient_basis(t.bar, i, j, p).size()));
            }
            for (int p = -12; p <= 0; ++p) CHECK(quotient_dim(t.wrapped, i, j, p) == t.wrapped.hom_dim(i, j, p));
        }
}

TEST_CASE("quotient_multiply examples") {
    const TypeA& t = a5();
    QuotientElement v1 = t.canon("v(1)"), vi1 = t.canon("v_inv(1)");
    CHECK(quotient_multiply(t.bar, vi1, v1) == identity_element(t.bar, 1));
    QuotientElement x1 = t.canon("x(1)");
    CHECK(x1.degree() == -6);
    CHECK(quotient_multiply(t.bar, x1, x1).is_zero());
    // x_3^2 = y_3 at the middle vertex
    CHECK(quotient_multiply(t.bar, t.canon("x(3)"), t.canon("x(3)")) == t.canon("y(3)"));
    // U_{1,j} v^{-1}_{1,n} U_{j,n} is the top class
    for (int j = 1; j <= 5; ++j) {
        std::string s = std::to_string(j);
        QuotientElement a = t.canon("U(1," + s + ") v_inv(1)");
        QuotientElement b = t.canon("U(" + s + ",5)");
        QuotientElement top = quotient_multiply(t.bar, a, b);
        CHECK(top == QuotientElement::of(t.bar, theta(t.bar, j)));
        CHECK(top.degree() == 2);
    }
    CHECK_THROWS_AS(quotient_multiply(t.bar, v1, v1), NotComposable);
    CHECK(to_string(QuotientElement(1, 1, 3)) == "0");
}

TEST_CASE("quotient multiplication is associative and unital in A3 and A4") {
    for (int n : {3, 4}) {
        TypeA t(n);
        const int bound = n == 3 ? 2 * (n + 3) : 8;
        std::vector<NormalMonomial> all;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int p = -bound; p <= bound; ++p)
                    for (const auto& m : monomial_basis(t.bar, i, j, p, Side::Quotient)) all.push_back(m);
        auto el = [&](const NormalMonomial& m) { return QuotientElement::of(t.bar, m); };
        long long triples = 0;
        for (const auto& a : all) {
            QuotientElement ea = el(a);
            CHECK(quotient_multiply(t.bar, identity_element(t.bar, a.to), ea) == ea);
            CHECK(quotient_multiply(t.bar, ea, identity_element(t.bar, a.from)) == ea);
            for (const auto& b : all) {
                if (b.from != a.to) continue;
                const int ab = std::abs(degree(t.bar, a)) + std::abs(degree(t.bar, b));
                if (ab > bound) continue;
                QuotientElement ba = quotient_multiply(t.bar, el(b), ea);
                for (const auto& c : all) {
                    if (c.from != b.to || ab + std::abs(degree(t.bar, c)) > bound) continue;
                    CHECK(quotient_multiply(t.bar, el(c), ba) == quotient_multiply(t.bar, quotient_multiply(t.bar, el(c), el(b)), ea));
                    ++triples;
                }
            }
        }
        CHECK(triples > 100);
    }
}

TEST_CASE("pairing examples") {
    const TypeA& t = a5();
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            for (int p = -12; p <= 0; ++p)
                for (const auto& b : monomial_basis(t.bar, i, j, p, Side::Quotient)) {
                    auto a = left_partner(t.bar, b);
                    REQUIRE(a);
                    CHECK(pairing(t.bar, QuotientElement::of(t.bar, *a), QuotientElement::of(t.bar, b)) == 1);
                    auto b2 = right_partner(t.bar, *a);
                    REQUIRE(b2);
                    CHECK(*b2 == b);
                    // b = 0
                    CHECK(pairing(t.bar, QuotientElement::of(t.bar, *a), QuotientElement(i, j, p)) == 0);
                }
    auto u12 = t.canon("u(1,2)");
    CHECK_THROWS_AS(pairing(t.bar, t.canon("u(2,1)"), u12), DegreeMismatch);
}

TEST_CASE("Gram matrices of the pairing are invertible in A4") {
    TypeA t(4);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int p = -6; p <= 8; ++p) {
                auto right = monomial_basis(t.bar, i, j, p, Side::Quotient);
                auto left = monomial_basis(t.bar, j, i, 2 - p, Side::Quotient);
                REQUIRE(left.size() == right.size());
                if (right.empty()) continue;
                RationalMatrix g = gram_matrix(t.bar, left, right);
                CHECK_MESSAGE(exact_determinant(g) != 0, i << "->" << j << " degree " << p);
                // against the dual bases the matrix is the identity
                RationalMatrix d = gram_matrix(t.bar, quotient_basis(t.bar, j, i, 2 - p), quotient_basis(t.bar, i, j, p));
                if (p <= 0) CHECK(d == RationalMatrix::Identity(d.rows(), d.cols()));
            }
}

TEST_CASE("closed-form presentations") {
    DynkinQuiver a5 = parse_dynkin("A5");
    Presentation p3 = closed_form_presentation(a5, 3);
    CHECK(p3.x_squared_is_y);
    CHECK(p3.k == 3);
    Presentation p1 = closed_form_presentation(a5, 1);
    CHECK(p1.k == 1);
    CHECK(p1.l == 4);
    CHECK(p1.deg_x == -6);
    CHECK(p1.deg_y == -8);
    CHECK_FALSE(p1.x_squared_is_y);
    Presentation a1 = closed_form_presentation(parse_dynkin("A1"), 1);
    CHECK(a1.k == 1);
    CHECK(a1.l == 0);
    CHECK(a1.x_squared_is_y);
    CHECK(a1.deg_x == -2);
    for (int p = 0; p >= -8; --p) CHECK(a1.hilbert(p, Side::Wrapped) == (p % 2 == 0 ? 1 : 0));
    CHECK_THROWS_AS(closed_form_presentation(parse_dynkin("D4"), 1), NotTypeA);
    CHECK_THROWS_AS(closed_form_dim(parse_dynkin("E6"), 1, 1, 0, Side::Wrapped), NotTypeA);
}

TEST_CASE("closed forms match the engine and the localization") {
    for (int n = 1; n <= 6; ++n) {
        OmegaQuiver om = build_omega(parse_dynkin("A" + std::to_string(n)));
        const int lo = -(3 * n + 9);
        LocalizedAlgebra loc(om, std::min(lo, -3 * (n + 3)));
        for (int i = 1; i <= n; ++i) {
            Presentation pr = closed_form_presentation(om.dynkin, i);
            for (int j = 1; j <= n; ++j)
                for (int p = lo; p <= n + 11; ++p) {
                    if (p <= 0) {
                        int w = closed_form_dim(om.dynkin, i, j, p, Side::Wrapped);
                        CHECK(w == loc.wrapped().hom_dim(i, j, p));
                        if (i == j) CHECK(w == pr.hilbert(p, Side::Wrapped));
                    }
                    int q = closed_form_dim(om.dynkin, i, j, p, Side::Quotient);
                    CHECK_MESSAGE(q == loc.dim(i, j, p), "A" << n << " " << i << "->" << j << " degree " << p);
                    if (i == j) CHECK(q == pr.hilbert(p, Side::Quotient));
                }
        }
    }
}

TEST_CASE("U and V generate the off-diagonal pieces") {
    const TypeA& t = a5();
    UVReport r = uv_generator_check(t.om, t.wrapped, 1, 2, -12, 0);
    CHECK(r.ok());
    CHECK(r.case_label == "i < j <= phi(j) < phi(i)");
    CHECK(r.exponent == 0);
    UVReport m = uv_generator_check(t.om, t.wrapped, 4, 2, -12, 0);
    CHECK(m.ok());
    CHECK(m.case_label.rfind("mirror of", 0) == 0);
    TypeA a2(2);
    CHECK(uv_generator_check(a2.om, a2.wrapped, 1, 2, -8, 0).ok());
    for (int n = 2; n <= 6; ++n) {
        TypeA a(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) CHECK(uv_generator_check(a.om, a.wrapped, i, j, -(3 * n + 9), 0).ok());
    }
}

TEST_CASE("remark exponent follows the four cases") {
    // z_j^e V_{ij} = x_j U_{ij}; the case list for i < j
    auto listed = [](int n, int i, int j) {
        const int pi = n + 1 - i, pj = n + 1 - j;
        if (i < j && j <= pj && pj < pi) return 0;
        if (i <= pj && pj <= j && j <= pi) return j - pj;
        if (pj < pi && pi <= i && i < j) return j - i;
        if (pj <= i && i <= pi && pi <= j) return j - i;
        return -1;
    };
    CHECK(remark_exponent(5, 1, 2) == 0);
    CHECK(remark_exponent(5, 2, 4) == 2);
    for (int n = 2; n <= 8; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                REQUIRE(listed(n, i, j) >= 0);
                CHECK_MESSAGE(remark_exponent(n, i, j) == listed(n, i, j), "A" << n << " " << i << "," << j);
                CHECK(remark_case(n, j, i) == "mirror of " + remark_case(n, i, j));
            }
}

TEST_CASE("element parser") {
    const TypeA& t = a5();
    GradedElement x1 = parse_element(t.bar, "x(1)");
    CHECK(x1.source() == 1);
    CHECK(x1.target() == 1);
    CHECK(x1.degree() == -6);
    CHECK(parse_element(t.bar, "y(2)").degree() == -8);
    CHECK(parse_element(t.bar, "y(2)^-1").degree() == 8);
    CHECK(parse_element(t.bar, "v(1)^-1") == parse_element(t.bar, "v_inv(1)"));
    CHECK(parse_element(t.bar, "z(3)^2") == parse_element(t.bar, "z(3) z(3)"));
    CHECK(parse_element(t.bar, "2*u(1,2) - u(1,2)") == parse_element(t.bar, "u(1,2)"));
    CHECK(parse_element(t.bar, "1/2 (u(1,2) + u(1,2))") == parse_element(t.bar, "u(1,2)"));
    CHECK(parse_element(t.bar, "V(1,2)") == parse_element(t.bar, "U(5,2) v(1)"));
    CHECK(parse_element(t.bar, "e(3) * z(3)") == parse_element(t.bar, "z(3)"));
    CHECK(parse_element(t.bar, "z(1)").is_zero() == false); // the loop path itself, zero only in the quotient
    CHECK_THROWS_AS(parse_element(t.bar, "u(1,3)"), ParseError);
    CHECK_THROWS_AS(parse_element(t.bar, "q(1)"), ParseError);
    CHECK_THROWS_AS(parse_element(t.bar, "u(1,2"), ParseError);
    CHECK_THROWS_AS(parse_element(t.bar, "e(9)"), ParseError);
    CHECK_THROWS_AS(parse_element(t.bar, "z(3)^-1"), ParseError);
    CHECK_THROWS_AS(parse_element(t.om, "v(1)^-1"), ParseError);
    CHECK_THROWS_AS(parse_element(t.bar, "u(1,2) u(1,2)"), NotComposable);
    CHECK_THROWS_AS(parse_element(t.bar, "u(1,2) + e(1)"), NonHomogeneous);
}

TEST_CASE("localization: Y is central and invertible") {
    for (const char* name : {"A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"}) {
        OmegaQuiver om = build_omega(parse_dynkin(name));
        LocalizedAlgebra loc(om);
        LocalizationCheck c = loc.verify();
        CHECK_MESSAGE(c.ok(), name << ": " << c.detail);
        CHECK(loc.period() == om.coxeter() + 2);
        const int n = om.n();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                CHECK(loc.dim(i, j, 1) == 0);
                for (int p = -loc.period(); p <= loc.period() + 2; ++p) {
                    CHECK(loc.dim(i, j, p) == loc.dim(i, j, p - loc.period()));
                    CHECK(loc.dim(i, j, p) == quotient_dim(loc.wrapped(), i, j, p));
                }
            }
        // summed duality
        for (int p = -loc.period(); p <= loc.period() + 2; ++p) {
            int lhs = 0, rhs = 0;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    lhs += loc.dim(i, j, p);
                    rhs += loc.dim(i, j, 2 - p);
                }
            CHECK(lhs == rhs);
        }
    }
    OmegaQuiver om = build_omega(parse_dynkin("A3"));
    CHECK_THROWS(LocalizedAlgebra(build_omega_bar(om)));
}

TEST_CASE("localized multiplication agrees with the type-A rewriter") {
    TypeA t(4);
    LocalizedAlgebra loc(t.om);
    std::vector<std::string> samples = {"v_inv(1) v(1)", "x(2) y(2)^-1", "u(1,2) v(4)", "z(2) y(2)^-1 u(3,2)",
                                        "v_inv(3) u(3,2)", "U(1,4) v_inv(1)"};
    for (const auto& a : samples)
        for (const auto& b : samples) {
            GradedElement ea = parse_element(t.bar, a), eb = parse_element(t.bar, b);
            if (ea.source() != eb.target()) continue;
            LocalElement prod = loc.multiply(loc.element(ea), loc.element(eb));
            QuotientElement q = quotient_multiply(t.bar, canonical_form(t.bar, ea), canonical_form(t.bar, eb));
            CHECK(prod.is_zero() == q.is_zero());
            // both routes represent the same element: compare via the localized coordinates
            GradedElement qsum(q.source(), q.target(), q.degree());
            for (const auto& [m, c] : q.terms()) qsum.add(representative(t.bar, m), c);
            CHECK(loc.coordinates(loc.element(qsum)) == loc.coordinates(prod));
        }
}

TEST_CASE("E6 vertex 4 matches its listed ring") {
    OmegaQuiver om = build_omega(parse_dynkin("E6"));
    LocalizedAlgebra loc(om, -49);
    auto rings = e6_rings();
    REQUIRE(rings.size() == 6);
    const auto& r4 = rings[3];
    REQUIRE(r4.vertex == 4);
    for (int p = -21; p <= 21; ++p) CHECK_MESSAGE(loc.dim(4, 4, p) == r4.dim(p), "degree " << p);
}

// The other five listed rings disagree with the computed endomorphism
// algebras (the vertex-2 discrepancy is confirmed by the Ginzburg complex).
TEST_CASE("E6 vertices 1, 2, 3, 5, 6 match their listed rings" * doctest::should_fail()) {
    OmegaQuiver om = build_omega(parse_dynkin("E6"));
    LocalizedAlgebra loc(om, -49);
    for (const auto& r : e6_rings())
        for (int p = -21; p <= 21; ++p)
            if (r.vertex != 4) CHECK_MESSAGE(loc.dim(r.vertex, r.vertex, p) == r.dim(p), "vertex " << r.vertex << " degree " << p);
}
