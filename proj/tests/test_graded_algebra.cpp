#include <doctest.h>

#include "plumbing/element_parser.hpp"
#include "plumbing/errors.hpp"
#include "plumbing/ginzburg.hpp"
#include "plumbing/omega.hpp"
#include "plumbing/path_space.hpp"
#include "plumbing/presentations.hpp"
#include "plumbing/quotient_algebra.hpp"

#include <thread>

using namespace plumbing;

namespace {

const OmegaQuiver& a5() {
    static const OmegaQuiver om = build_omega(parse_dynkin("A5"));
    return om;
}

GradedElement element(const OmegaQuiver& om, const std::string& text) { return parse_element(om, text); }

} // namespace

TEST_CASE("enumerate_paths on A5") {
    const OmegaQuiver& om = a5();
    auto p = enumerate_paths(om.quiver, 2, 3, 0);
    REQUIRE(p.size() == 1);
    CHECK(to_string(om.quiver, p[0]) == "u(2,3)");

    auto loops = enumerate_paths(om.quiver, 3, 3, -1);
    REQUIRE(loops.size() == 2);
    std::set<std::string> names;
    for (const auto& q : loops) names.insert(to_string(om.quiver, q));
    CHECK(names == std::set<std::string>{"u(2,3) u(3,2)", "u(4,3) u(3,4)"});
    CHECK(loops[0] < loops[1]);

    CHECK(enumerate_paths(om.quiver, 3, 3, 0).size() == 1); // e(3)
    CHECK(enumerate_paths(om.quiver, 3, 3, 1).empty());

    OmegaQuiver bar = build_omega_bar(om);
    CHECK_THROWS_AS(enumerate_paths(bar.quiver, 1, 1, 0), ZeroDegreeCycle);
}

TEST_CASE("enumerate_paths counts match an independent recursion") {
    // count walks by dynamic programming over (vertex, remaining degree)
    const OmegaQuiver& om = a5();
    const GradedQuiver& q = om.quiver;
    for (int from = 1; from <= 5; ++from) {
        for (int deg = 0; deg >= -9; --deg) {
            // degree-0 arrows are acyclic, so memoize on (vertex, degree)
            std::map<std::pair<int, int>, std::vector<long long>> memo;
            std::function<std::vector<long long>(int, int)> count = [&](int v, int d) {
                auto key = std::make_pair(v, d);
                if (auto it = memo.find(key); it != memo.end()) return it->second;
                std::vector<long long> out(6, 0);
                if (d == 0) out[v] += 1;
                for (int id : q.out_arrows(v)) {
                    const Arrow& a = q.arrow(id);
                    if (d - a.degree > 0) continue;
                    auto sub = count(a.target, d - a.degree);
                    for (int t = 1; t <= 5; ++t) out[t] += sub[t];
                }
                return memo[key] = out;
            };
            auto expected = count(from, deg);
            for (int to = 1; to <= 5; ++to)
                CHECK(static_cast<long long>(enumerate_paths(q, from, to, deg).size()) == expected[to]);
        }
    }
}

TEST_CASE("ideal_subspace examples") {
    const OmegaQuiver& om = a5();
    IdealPiece loop1 = ideal_subspace(om.quiver, om.relations, 1, 1, -1);
    CHECK(loop1.path_count() == 1);
    CHECK(loop1.dimension() == 1);
    CHECK(loop1.complement.empty());

    IdealPiece deg0 = ideal_subspace(om.quiver, om.relations, 1, 2, 0);
    CHECK(deg0.dimension() == 0);
    CHECK(deg0.path_count() == 1);

    IdealPiece p = ideal_subspace(om.quiver, om.relations, 2, 3, -7);
    CHECK(p.path_count() - p.dimension() == closed_form_dim(om.dynkin, 2, 3, -7, Side::Wrapped));
    CHECK(static_cast<int>(p.complement.size()) == p.path_count() - p.dimension());
    for (const auto& b : p.basis) {
        CHECK(b.source() == 2);
        CHECK(b.target() == 3);
        CHECK(b.degree() == -7);
    }
}

TEST_CASE("hom_dim examples") {
    const OmegaQuiver& om = a5();
    QuotientAlgebra A(om.quiver, om.relations, -30);
    CHECK(A.hom_dim(3, 3, 0) == 1);
    CHECK(A.hom_dim(3, 3, -1) == 1);
    CHECK(A.hom_basis(3, 3, 0).front() == idempotent(3));
    CHECK(A.hom_dim(3, 3, 5) == 0);
    CHECK_THROWS_AS(A.hom_dim(3, 3, -31), OutOfWindow);
    // the two loops at 3 are identified
    GradedElement z_up = element(om, "u(4,3) u(3,4)"), z_down = element(om, "u(2,3) u(3,2)");
    CHECK(A.normal_form(z_up) == A.normal_form(z_down));
    CHECK(A.coordinates(z_up) == A.coordinates(z_down));
}

// The listed ring K[x_2^{+-1}], |x_2| = -7, puts e_2 A e_2 only in degrees
// divisible by 7.  Both the path-algebra engine and the Ginzburg complex
// find classes in degrees -2, -3, -5 and -9, so this check fails; it is
// kept verbatim and marked as an expected failure.
TEST_CASE("E6 wrapped endomorphisms of vertex 2 (listed ring)" * doctest::should_fail()) {
    OmegaQuiver om = build_omega(parse_dynkin("E6"));
    QuotientAlgebra A(om.quiver, om.relations, -21);
    for (int p = 0; p >= -21; --p) CHECK_MESSAGE(A.hom_dim(2, 2, p) == (p % 7 == 0 ? 1 : 0), "degree " << p);
}

TEST_CASE("E6 vertex 2: engine and Ginzburg complex agree") {
    DynkinQuiver q = parse_dynkin("E6");
    OmegaQuiver om = build_omega(q);
    QuotientAlgebra A(om.quiver, om.relations, -9);
    GinzburgComplex<ModP> g(q);
    const std::vector<int> expected{1, 0, 1, 1, 0, 1, 0, 1, 0, 1}; // degrees 0, -1, ..., -9
    for (int p = 0; p >= -9; --p) {
        CHECK(A.hom_dim(2, 2, p) == expected[-p]);
        CHECK(g.cohomology_dim(2, 2, p) == expected[-p]);
    }
}

TEST_CASE("quotient engine agrees with brute-force elimination") {
    for (const char* name : {"A1", "A3", "A5", "D4", "D5", "E6"}) {
        OmegaQuiver om = build_omega(parse_dynkin(name));
        const int n = om.n();
        const int lo = n >= 5 ? -6 : -8;
        QuotientAlgebra A(om.quiver, om.relations, lo);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int p = 0; p >= lo; --p)
                    CHECK_MESSAGE(A.hom_dim(i, j, p) == brute_hom_dim(om.quiver, om.relations, i, j, p),
                                  name << " " << i << "->" << j << " degree " << p);
    }
}

TEST_CASE("hom_dim vanishes in positive degrees") {
    for (const char* name : {"A4", "D4", "E6"}) {
        OmegaQuiver om = build_omega(parse_dynkin(name));
        QuotientAlgebra A(om.quiver, om.relations, -10);
        for (int i = 1; i <= om.n(); ++i)
            for (int j = 1; j <= om.n(); ++j)
                for (int p = 1; p <= 4; ++p) CHECK(A.hom_dim(i, j, p) == 0);
    }
}

TEST_CASE("multiply examples") {
    const OmegaQuiver& om = a5();
    QuotientAlgebra A(om.quiver, om.relations, -30);
    GradedElement z3 = element(om, "u(4,3) u(3,4)");
    CHECK(A.multiply(element(om, "e(3)"), z3) == A.normal_form(z3));
    CHECK(A.multiply(z3, element(om, "e(3)")) == A.normal_form(z3));
    GradedElement z1 = element(om, "u(2,1) u(1,2)");
    CHECK(A.multiply(z1, z1).is_zero());
    CHECK(A.is_zero(z1));
    CHECK(A.is_zero(element(om, "u(2,3) u(3,2) u(2,3) u(1,2) u(2,1)")));
    CHECK_THROWS_AS(A.multiply(element(om, "u(1,2)"), element(om, "u(1,2)")), NotComposable);
    // z3^3 = 0 but z3^2 != 0 (k_3 = 3)
    GradedElement z3sq = A.multiply(z3, z3);
    CHECK_FALSE(z3sq.is_zero());
    CHECK(A.multiply(z3, z3sq).is_zero());
}

TEST_CASE("Ginzburg cohomology examples") {
    DynkinQuiver a2 = parse_dynkin("A2");
    CHECK(ginzburg_cohomology_dim(a2, 1, 1, 0) == 1);
    OmegaQuiver om = build_omega(a2);
    QuotientAlgebra A(om.quiver, om.relations, -12);
    CHECK(ginzburg_cohomology_dim(a2, 1, 1, -1) == A.hom_dim(1, 1, -1));
    CHECK(A.hom_dim(1, 1, -1) == 0);
    // A1: H = K[t], |t| = -2
    DynkinQuiver a1 = parse_dynkin("A1");
    for (int p = 0; p >= -8; --p) CHECK(ginzburg_cohomology_dim(a1, 1, 1, p) == (p % 2 == 0 ? 1 : 0));
}

TEST_CASE("Ginzburg cohomology equals hom_dim for small ADE") {
    struct Case {
        const char* name;
        int lo;
    };
    for (Case c : {Case{"A1", -10}, Case{"A2", -10}, Case{"A3", -8}, Case{"A4", -6}, Case{"D4", -6}}) {
        DynkinQuiver q = parse_dynkin(c.name);
        OmegaQuiver om = build_omega(q);
        QuotientAlgebra A(om.quiver, om.relations, c.lo);
        GinzburgComplex<ModP> g(q);
        for (int i = 1; i <= q.rank; ++i)
            for (int j = 1; j <= q.rank; ++j)
                for (int p = 0; p >= c.lo; --p)
                    CHECK_MESSAGE(g.cohomology_dim(i, j, p) == A.hom_dim(i, j, p),
                                  c.name << " " << i << "->" << j << " degree " << p);
    }
}

TEST_CASE("Ginzburg ranks over the rationals and over F_p agree") {
    for (const char* name : {"A2", "A3"}) {
        DynkinQuiver q = parse_dynkin(name);
        GinzburgComplex<ModP> gp(q);
        GinzburgComplex<Rational> gq(q);
        for (int i = 1; i <= q.rank; ++i)
            for (int j = 1; j <= q.rank; ++j)
                for (int p = 0; p >= -7; --p) {
                    CHECK(gp.cohomology_dim(i, j, p) == gq.cohomology_dim(i, j, p));
                    CHECK(gp.chain_dim(i, j, p) == gq.chain_dim(i, j, p));
                }
    }
}

TEST_CASE("Euler characteristic: chains and cohomology share alternating sums") {
    // sum_p (-1)^p dim C^p = sum_p (-1)^p dim H^p over a full block range is
    // not finite here, so check the weaker identity per degree:
    // dim H^p <= dim C^p
    DynkinQuiver q = parse_dynkin("A3");
    GinzburgComplex<ModP> g(q);
    for (int p = 0; p >= -6; --p)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) CHECK(g.cohomology_dim(i, j, p) <= g.chain_dim(i, j, p));
}

TEST_CASE("hom_basis is deterministic across runs and threads") {
    OmegaQuiver om = build_omega(parse_dynkin("A4"));
    const int lo = -12;
    auto collect = [&](const QuotientAlgebra& A) {
        std::vector<std::vector<Path>> out;
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                for (int p = 0; p >= lo; --p) out.push_back(A.hom_basis(i, j, p));
        return out;
    };
    QuotientAlgebra serial(om.quiver, om.relations, lo);
    auto reference = collect(serial);
    CHECK(collect(QuotientAlgebra(om.quiver, om.relations, lo)) == reference);

    QuotientAlgebra shared(om.quiver, om.relations, lo);
    std::vector<std::vector<std::vector<Path>>> results(4);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            // different threads start from different vertices
            std::vector<std::vector<Path>> out;
            for (int k = 0; k < 4; ++k) {
                int i = (t + k) % 4 + 1;
                (void)shared.hom_basis(i, i, lo);
            }
            results[t] = collect(shared);
        });
    for (auto& th : pool) th.join();
    for (const auto& r : results) CHECK(r == reference);
}

TEST_CASE("multiplication in A4 is associative and unital") {
    OmegaQuiver om = build_omega(parse_dynkin("A4"));
    const int n = 4, bound = 6;
    QuotientAlgebra A(om.quiver, om.relations, -bound);
    // all basis elements with |degree| <= bound
    std::vector<GradedElement> basis;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int p = 0; p >= -bound; --p)
                for (const auto& path : A.hom_basis(i, j, p)) basis.push_back(GradedElement::of(path));
    int triples = 0;
    for (const auto& a : basis) {
        CHECK(A.multiply(GradedElement::of(idempotent(a.target())), a) == A.normal_form(a));
        CHECK(A.multiply(a, GradedElement::of(idempotent(a.source()))) == A.normal_form(a));
        for (const auto& b : basis) {
            if (b.source() != a.target() || -(a.degree() + b.degree()) > bound) continue;
            GradedElement ba = A.multiply(b, a);
            for (const auto& c : basis) {
                if (c.source() != b.target() || -(a.degree() + b.degree() + c.degree()) > bound) continue;
                CHECK(A.multiply(c, ba) == A.multiply(A.multiply(c, b), a));
                ++triples;
            }
        }
    }
    CHECK(triples > 100);
}
