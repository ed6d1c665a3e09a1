#include "plumbing/verify.hpp"

#include "plumbing/cluster.hpp"
#include "plumbing/coxeter.hpp"
#include "plumbing/errors.hpp"
#include "plumbing/ginzburg.hpp"
#include "plumbing/linalg.hpp"
#include "plumbing/localization.hpp"
#include "plumbing/presentations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

namespace plumbing {

namespace {

struct Context {
    DynkinQuiver dq;
    OmegaQuiver om;
    OmegaQuiver bar;
    int lo, hi;
    std::unique_ptr<LocalizedAlgebra> loc;

    Context(const DynkinQuiver& q, int lo_, int hi_) : dq(q), om(build_omega(q)), bar(build_omega_bar(om)), lo(lo_), hi(hi_) {
        const int period = om.coxeter() + 2;
        int floor = std::min({lo, 2 - hi, -3 * period, -12});
        loc = std::make_unique<LocalizedAlgebra>(om, floor);
    }
    int n() const { return om.n(); }
    const QuotientAlgebra& wrapped() const { return loc->wrapped(); }
    bool type_a() const { return om.is_linear_a(); }
};

class Collector {
public:
    explicit Collector(std::string suite) : suite_(std::move(suite)) {}
    void check(const std::string& name, bool pass, const std::string& detail = "") {
        out_.push_back(CheckResult{suite_, name, pass, detail});
    }
    void skip(const std::string& why) { out_.push_back(CheckResult{suite_, "skipped", true, why}); }
    std::vector<CheckResult> take() { return std::move(out_); }

private:
    std::string suite_;
    std::vector<CheckResult> out_;
};

std::string where(int i, int j, int p) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(p) + ")";
}

// Keeps the first few mismatches for the report.
struct Mismatches {
    int count = 0;
    std::string first;
    void add(const std::string& w) {
        if (count++ < 3) first += (first.empty() ? "" : " ") + w;
    }
    std::string detail(int total) const {
        std::ostringstream os;
        os << total - count << "/" << total << " agree";
        if (count) os << "; first mismatches " << first;
        return os.str();
    }
};

void duality(Context& c, Collector& out) {
    const int n = c.n();
    Mismatches formula, refined, summed;
    int total = 0, sums = 0;
    for (int p = c.lo; p <= c.hi; ++p) {
        long s = 0, t = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                int d = c.loc->dim(i, j, p);
                ++total;
                if (d != quotient_dim(c.wrapped(), i, j, p)) formula.add(where(i, j, p));
                if (d != c.loc->dim(j, i, 2 - p)) refined.add(where(i, j, p));
                s += d;
                t += c.loc->dim(i, j, 2 - p);
            }
        ++sums;
        if (s != t) summed.add("p=" + std::to_string(p));
    }
    out.check("summed dim_p = dim_{2-p}", summed.count == 0, summed.detail(sums));
    if (c.type_a()) out.check("per-pair dim_p(i,j) = dim_{2-p}(j,i)", refined.count == 0, refined.detail(total));
    out.check("localized dims = duality formula", formula.count == 0, formula.detail(total));
}

void gap(Context& c, Collector& out) {
    Mismatches bad;
    const int n = c.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (c.loc->dim(i, j, 1) != 0 || quotient_dim(c.wrapped(), i, j, 1) != 0) bad.add(where(i, j, 1));
    out.check("degree-1 pieces vanish", bad.count == 0, bad.detail(n * n));
}

// Chain groups grow roughly fourfold per degree; the oracle stops once the
// groups feeding the next degree pass this size and says where it stopped.
constexpr long long ginzburg_chain_budget = 2'500'000;

void ginzburg(Context& c, Collector& out) {
    const int n = c.n();
    GinzburgComplex<ModP> g(c.dq);
    Mismatches bad;
    int total = 0;
    const int top = std::min(c.hi, 0);
    int last = top + 1;
    for (int p = top; p >= c.lo; --p) {
        long long size = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) size += g.chain_dim(i, j, p - 1);
        if (p < top && size > ginzburg_chain_budget) break;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                ++total;
                if (g.cohomology_dim(i, j, p) != c.wrapped().hom_dim(i, j, p)) bad.add(where(i, j, p));
            }
        last = p;
    }
    std::string range = "[" + std::to_string(last) + "," + std::to_string(top) + "]";
    if (last > c.lo) range += " (stopped above " + std::to_string(last - 1) + ": chain groups too large)";
    out.check("dg cohomology = path-algebra dims on " + range, bad.count == 0, bad.detail(total));
}

void closed_form(Context& c, Collector& out) {
    if (!c.type_a()) return out.skip("closed forms are stated for linear A_n");
    const int n = c.n();
    Mismatches wrapped, quotient, ring;
    int total = 0;
    for (int p = c.lo; p <= c.hi; ++p)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                ++total;
                int w = p > 0 ? 0 : c.wrapped().hom_dim(i, j, p);
                if (w != closed_form_dim(c.dq, i, j, p, Side::Wrapped)) wrapped.add(where(i, j, p));
                int q = c.loc->dim(i, j, p);
                if (q != closed_form_dim(c.dq, i, j, p, Side::Quotient)) quotient.add(where(i, j, p));
                if (i == j && q != closed_form_presentation(c.dq, i).hilbert(p, Side::Quotient))
                    ring.add(where(i, j, p));
            }
    out.check("wrapped dims = U/V monomial count", wrapped.count == 0, wrapped.detail(total));
    out.check("quotient dims = U/V monomial count", quotient.count == 0, quotient.detail(total));
    out.check("diagonal dims = Hilbert function of K[x,y,z]/(z^k, x^2 - y z^l)", ring.count == 0,
              ring.detail(total));
}

void vanishing(Context& c, Collector& out) {
    if (c.dq.series != Series::A) return out.skip("u-path statistics are defined for A_n");
    const int n = c.n();
    const int max_len = std::min(10, -c.wrapped().min_degree());
    Mismatches bad;
    int total = 0;
    std::vector<int> stack;
    std::function<void(int, int)> walk = [&](int start, int at) {
        Path p = make_path(c.om.quiver, start, stack);
        ++total;
        bool zero = c.wrapped().is_zero(GradedElement::of(p));
        if (zero != u_path_vanishes(c.om, p)) bad.add(to_string(c.om.quiver, p));
        if (static_cast<int>(stack.size()) == max_len) return;
        for (int nb : {at - 1, at + 1}) {
            if (nb < 1 || nb > n) continue;
            stack.push_back(c.om.u(at, nb));
            walk(start, nb);
            stack.pop_back();
        }
    };
    for (int i = 1; i <= n; ++i) walk(i, i);
    out.check("u-path vanishing criterion = ideal membership (length <= " + std::to_string(max_len) + ")",
              bad.count == 0, bad.detail(total));
}

void rewrite(Context& c, Collector& out) {
    if (!c.type_a()) return out.skip("the rewriter covers linear A_n");
    const int n = c.n();
    Mismatches proj;
    int total = 0;
    for (int p = c.lo; p <= c.hi; ++p)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (const auto& m : monomial_basis(c.bar, i, j, p, Side::Quotient)) {
                    ++total;
                    if (canonical_form(c.bar, representative(c.bar, m)) != QuotientElement::of(c.bar, m))
                        proj.add(to_string(m));
                }
    out.check("canonical form fixes every normal monomial", proj.count == 0, proj.detail(total));
    Mismatches rel;
    for (const GradedElement& r : c.bar.relations)
        if (!canonical_form(c.bar, r).is_zero()) rel.add(to_string(c.bar.quiver, r));
    out.check("every relation of J-bar has canonical form 0", rel.count == 0,
              rel.detail(static_cast<int>(c.bar.relations.size())));
    if (n == 5) {
        auto u = [&](int a, int b) { return c.bar.u(a, b); };
        Path p = make_path(c.bar.quiver, 2, {u(2, 1), c.bar.v[0], u(5, 4), u(4, 3), c.bar.v[2], u(3, 2), u(2, 3)});
        std::vector<RewriteStep> trace;
        QuotientElement e = canonical_form(c.bar, p, &trace);
        std::string end = trace.empty() ? "" : to_string(c.bar.quiver, trace.back().path);
        out.check("worked rewrite ends at u(2,3) u(3,2) u(2,3) u(1,2) u(2,1) v(4) v(2) and vanishes",
                  e.is_zero() && end == "u(2,3) u(3,2) u(2,3) u(1,2) u(2,1) v(4) v(2)", end);
    }
}

void pairing_suite(Context& c, Collector& out) {
    if (!c.type_a()) return out.skip("the pairing is explicit for linear A_n only");
    const int n = c.n();
    Mismatches bad;
    int total = 0;
    for (int p = c.lo; p <= c.hi; ++p)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                auto left = monomial_basis(c.bar, j, i, 2 - p, Side::Quotient);
                auto right = monomial_basis(c.bar, i, j, p, Side::Quotient);
                ++total;
                if (left.size() != right.size()) {
                    bad.add(where(i, j, p));
                    continue;
                }
                if (left.empty()) continue;
                if (is_zero(exact_determinant(gram_matrix(c.bar, left, right)))) bad.add(where(i, j, p));
            }
    out.check("Gram matrices of the pairing are invertible", bad.count == 0, bad.detail(total));
}

void ring(Context& c, Collector& out) {
    if (!c.type_a()) return out.skip("quotient multiplication is complete for linear A_n only");
    const int n = c.n();
    const int bound = 2 * (n + 3);
    // all monomials with |degree| <= bound, grouped by endpoints
    std::map<std::pair<int, int>, std::vector<std::pair<NormalMonomial, int>>> by_ends;
    for (int p = -bound; p <= bound; ++p)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (const auto& m : monomial_basis(c.bar, i, j, p, Side::Quotient)) by_ends[{i, j}].push_back({m, p});
    Mismatches assoc, unit;
    int triples = 0, units = 0;
    for (const auto& [ends, ms] : by_ends)
        for (const auto& [m, p] : ms) {
            QuotientElement e = QuotientElement::of(c.bar, m);
            ++units;
            if (quotient_multiply(c.bar, identity_element(c.bar, m.to), e) != e ||
                quotient_multiply(c.bar, e, identity_element(c.bar, m.from)) != e)
                unit.add(to_string(m));
        }
    // products of monomials are memoized; products with sums go term by term
    std::map<std::pair<NormalMonomial, NormalMonomial>, QuotientElement> memo;
    auto mono = [&](const NormalMonomial& a, const NormalMonomial& b) -> const QuotientElement& {
        auto key = std::make_pair(a, b);
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, quotient_multiply(c.bar, QuotientElement::of(c.bar, a), QuotientElement::of(c.bar, b)))
                     .first;
        return it->second;
    };
    auto left = [&](const NormalMonomial& a, const QuotientElement& x) { // a * x
        QuotientElement r(x.source(), a.to, x.degree() + degree(c.bar, a));
        for (const auto& [m, k] : x.terms()) r.add(mono(a, m), k);
        return r;
    };
    auto right = [&](const QuotientElement& x, const NormalMonomial& b) { // x * b
        QuotientElement r(b.from, x.target(), x.degree() + degree(c.bar, b));
        for (const auto& [m, k] : x.terms()) r.add(mono(m, b), k);
        return r;
    };
    // triples a b c with c: i -> j, b: j -> k, a: k -> l and sum |deg| <= bound
    for (const auto& [e1, cs] : by_ends)
        for (const auto& [mc, pc] : cs)
            for (int k = 1; k <= n; ++k) {
                auto bs = by_ends.find({e1.second, k});
                if (bs == by_ends.end()) continue;
                for (const auto& [mb, pb] : bs->second) {
                    if (std::abs(pc) + std::abs(pb) > bound) continue;
                    const QuotientElement& bc = mono(mb, mc);
                    for (int l = 1; l <= n; ++l) {
                        auto as = by_ends.find({k, l});
                        if (as == by_ends.end()) continue;
                        for (const auto& [ma, pa] : as->second) {
                            if (std::abs(pc) + std::abs(pb) + std::abs(pa) > bound) continue;
                            ++triples;
                            if (right(mono(ma, mb), mc) != left(ma, bc))
                                assoc.add(to_string(ma) + "|" + to_string(mb) + "|" + to_string(mc));
                        }
                    }
                }
            }
    out.check("unit laws", unit.count == 0, unit.detail(units));
    out.check("associativity on monomial triples with sum |deg| <= " + std::to_string(bound), assoc.count == 0,
              assoc.detail(triples));
}

void uv(Context& c, Collector& out) {
    if (!c.type_a()) return out.skip("U/V generation is stated for linear A_n");
    const int n = c.n();
    Mismatches bad;
    int total = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            ++total;
            UVReport r = uv_generator_check(c.om, c.wrapped(), i, j, c.lo, c.hi);
            if (!r.ok()) bad.add("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    out.check("U and V generate, and z^e V = x U", bad.count == 0, bad.detail(total));
}

void cy(Context& c, Collector& out) {
    const int n = c.n(), h = c.om.coxeter();
    const CoxeterData data = coxeter_data(c.dq);
    Mismatches bad, sum;
    for (int i = 1; i <= n; ++i) {
        RootShift x{data.proj_roots[i - 1], 0};
        RootShift target{data.proj_roots[i - 1], 2};
        int hit = -1;
        for (int step = 1; step <= h; ++step) {
            x = inverse_ar_step(data, x);
            if (x == target && hit < 0) hit = step;
        }
        if (hit != h) bad.add(std::to_string(i));
        if (c.om.shift[i] + c.om.shift[c.om.phi(i)] != h) sum.add(std::to_string(i));
    }
    out.check("tau^{-h} P_i = P_i[2], first reached at step h", bad.count == 0, bad.detail(n));
    out.check("N(i) + N(phi(i)) = h", sum.count == 0, sum.detail(n));
}

void localization(Context& c, Collector& out) {
    LocalizationCheck r = c.loc->verify();
    out.check("Y is central", r.central, r.detail);
    out.check("Y is bijective on the nonpositive range above the floor", r.bijective, r.detail);
}

void e6(Context& c, Collector& out) {
    if (c.dq.series != Series::E || c.dq.rank != 6) return out.skip("only for E6");
    for (const RingSeries& r : e6_rings()) {
        Mismatches bad;
        int total = 0;
        for (int p = c.lo; p <= c.hi; ++p) {
            ++total;
            if (r.dim(p) != c.loc->dim(r.vertex, r.vertex, p)) bad.add("p=" + std::to_string(p));
        }
        out.check("vertex " + std::to_string(r.vertex) + ": " + r.presentation, bad.count == 0, bad.detail(total));
    }
}

using SuiteFn = void (*)(Context&, Collector&);

const std::map<std::string, SuiteFn>& suites() {
    static const std::map<std::string, SuiteFn> table = {
        {"duality", duality},   {"gap", gap},         {"ginzburg", ginzburg}, {"closed-form", closed_form},
        {"vanishing", vanishing}, {"rewrite", rewrite}, {"pairing", pairing_suite}, {"ring", ring},
        {"uv", uv},             {"cy", cy},           {"localization", localization}, {"e6", e6},
    };
    return table;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"duality", "gap", "ginzburg", "closed-form", "vanishing", "rewrite",
                                                   "pairing", "ring", "uv", "cy", "localization", "e6"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const DynkinQuiver& q, int lo, int hi) {
    if (suite != "all" && !suites().count(suite)) throw ParseError("unknown suite '" + suite + "'");
    Context c(q, lo, hi);
    std::vector<CheckResult> all;
    for (const std::string& name : suite_names()) {
        if (suite != "all" && suite != name) continue;
        Collector out(name);
        suites().at(name)(c, out);
        for (auto& r : out.take()) all.push_back(std::move(r));
    }
    return all;
}

} // namespace plumbing
