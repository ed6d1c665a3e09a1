#include "plumbing/cluster.hpp"

#include "plumbing/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>

namespace plumbing {

namespace {

bool is_u(const Arrow& a) { return a.kind == ArrowKind::Forward || a.kind == ArrowKind::Star; }
bool is_v_type(const Arrow& a) { return a.kind == ArrowKind::V || a.kind == ArrowKind::VInverse; }

int floor_div2(int c) { return c >= 0 ? c / 2 : -((-c + 1) / 2); }

void require_linear_a(const OmegaQuiver& om) {
    if (om.dynkin.series != Series::A)
        throw NotTypeA("normal monomials exist only for A_n; " + om.dynkin.name() + " is not of type A");
    if (!om.is_linear_a())
        throw UnsupportedShape("the rewriter handles the linear orientation 1 -> 2 -> ... -> n only");
}

struct Swap {
    int v;
    int u;
    Rational c;
};
using SwapTable = std::map<std::pair<int, int>, Swap>;

// From the commutation relations: a u-arrow followed by a v-type arrow
// equals a multiple of the v-type arrow followed by a u-arrow.
SwapTable swap_table(const OmegaQuiver& om) {
    SwapTable t;
    const GradedQuiver& q = om.quiver;
    for (const GradedElement& r : om.relations) {
        if (r.terms().size() != 2) continue;
        const auto& [p0, c0] = *r.terms().begin();
        const auto& [p1, c1] = *std::next(r.terms().begin());
        if (p0.length() != 2 || p1.length() != 2) continue;
        auto u_then_v = [&](const Path& p) {
            return is_u(q.arrow(p.arrows[0])) && q.arrow(p.arrows[1]).kind == ArrowKind::V;
        };
        auto v_then_u = [&](const Path& p) {
            return q.arrow(p.arrows[0]).kind == ArrowKind::V && is_u(q.arrow(p.arrows[1]));
        };
        const Path *key, *val;
        Rational ck, cv;
        if (u_then_v(p0) && v_then_u(p1)) {
            key = &p0, val = &p1, ck = c0, cv = c1;
        } else if (u_then_v(p1) && v_then_u(p0)) {
            key = &p1, val = &p0, ck = c1, cv = c0;
        } else {
            continue;
        }
        Rational c = -cv / ck;
        t[{key->arrows[0], key->arrows[1]}] = Swap{val->arrows[0], val->arrows[1], c};
        if (om.has_inverses) {
            // [b, v(q)] = c [v(p), a]  gives  [a, v^{-1}(q)] = c^{-1} [v^{-1}(p), b]
            int p = q.arrow(val->arrows[0]).label, qv = q.arrow(key->arrows[1]).label;
            t[{val->arrows[1], om.v_inv[qv - 1]}] = Swap{om.v_inv[p - 1], key->arrows[0], Rational(1) / c};
        }
    }
    return t;
}

struct Stats {
    int c, s, inc, dec;
};

Stats stats(int n, const NormalMonomial& m) {
    int c = net_v(m);
    int s = c % 2 == 0 ? m.from : n + 1 - m.from;
    int inc = m.z_exp + std::max(0, m.to - s);
    return {c, s, inc, inc - (m.to - s)};
}

} // namespace

int net_v(const NormalMonomial& m) { return 2 * m.y_exp + ((m.v_part || m.x_flag) ? 1 : 0); }

std::optional<NormalMonomial> make_monomial(int n, int from, int to, int c, int a) {
    const int s = c % 2 == 0 ? from : n + 1 - from;
    if (a < 0 || a + std::max(0, to - s) > std::min(n - s, to - 1)) return std::nullopt;
    NormalMonomial m;
    m.from = from;
    m.to = to;
    m.z_exp = a;
    m.y_exp = floor_div2(c);
    if (c - 2 * m.y_exp == 1) {
        if (from == to)
            m.x_flag = 1;
        else
            m.v_part = true;
    }
    return m;
}

Path u_geodesic(const OmegaQuiver& om, int from, int to) {
    const int n = om.n();
    std::vector<int> prev(n + 1, 0);
    std::queue<int> bfs;
    bfs.push(from);
    prev[from] = from;
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (auto [a, b] : om.dynkin.arrows)
            for (int y : {a == x ? b : 0, b == x ? a : 0})
                if (y && !prev[y]) {
                    prev[y] = x;
                    bfs.push(y);
                }
    }
    std::vector<int> arrows;
    for (int x = to; x != from; x = prev[x]) arrows.push_back(om.u(prev[x], x));
    std::reverse(arrows.begin(), arrows.end());
    return make_path(om.quiver, from, arrows);
}

std::optional<Path> z_loop(const OmegaQuiver& om, int i, int via) {
    if (via < 1 || via > om.n() || om.u(i, via) < 0) return std::nullopt;
    return make_path(om.quiver, i, {om.u(i, via), om.u(via, i)});
}

Path representative(const OmegaQuiver& bar, const NormalMonomial& m) {
    std::vector<int> arrows;
    int c = net_v(m), cur = m.from;
    if (c < 0 && !bar.has_inverses) throw UnsupportedShape("negative y-powers need Omega-bar");
    for (int k = 0; k < std::abs(c); ++k) {
        arrows.push_back(c > 0 ? bar.v[cur - 1] : bar.v_inv[bar.phi(cur) - 1]);
        cur = bar.phi(cur);
    }
    Path u = u_geodesic(bar, cur, m.to);
    arrows.insert(arrows.end(), u.arrows.begin(), u.arrows.end());
    if (m.z_exp > 0) {
        auto z = z_loop(bar, m.to, m.to + 1);
        if (!z) z = z_loop(bar, m.to, m.to - 1);
        if (!z) throw UnsupportedShape("no z-loop at an isolated vertex");
        for (int k = 0; k < m.z_exp; ++k) arrows.insert(arrows.end(), z->arrows.begin(), z->arrows.end());
    }
    return make_path(bar.quiver, m.from, arrows);
}

int degree(const OmegaQuiver& bar, const NormalMonomial& m) { return representative(bar, m).degree; }

std::string to_string(const NormalMonomial& m) {
    std::vector<std::string> parts;
    auto power = [](const std::string& g, int e) { return e == 1 ? g : g + "^" + std::to_string(e); };
    const std::string at = "(" + std::to_string(m.to) + ")";
    if (m.z_exp) parts.push_back(power("z" + at, m.z_exp));
    if (m.x_flag) parts.push_back("x" + at);
    if (m.y_exp) parts.push_back(power("y" + at, m.y_exp));
    if (m.from != m.to)
        parts.push_back(std::string(m.v_part ? "V" : "U") + "(" + std::to_string(m.from) + "," + std::to_string(m.to) +
                        ")");
    if (parts.empty()) return "e(" + std::to_string(m.from) + ")";
    std::string out = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) out += " " + parts[k];
    return out;
}

QuotientElement QuotientElement::of(const OmegaQuiver& bar, const NormalMonomial& m, const Rational& c) {
    QuotientElement e(m.from, m.to, plumbing::degree(bar, m));
    e.add(bar, m, c);
    return e;
}

Rational QuotientElement::coefficient(const NormalMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

QuotientElement& QuotientElement::add(const OmegaQuiver& bar, const NormalMonomial& m, const Rational& c) {
    if (m.from != source_ || m.to != target_ || plumbing::degree(bar, m) != degree_)
        throw NonHomogeneous("monomial " + to_string(m) + " does not match the element's endpoints or degree");
    Rational& slot = terms_[m];
    slot += c;
    if (plumbing::is_zero(slot)) terms_.erase(m);
    return *this;
}

QuotientElement& QuotientElement::add(const QuotientElement& e, const Rational& c) {
    if (e.source_ != source_ || e.target_ != target_ || e.degree_ != degree_)
        throw NonHomogeneous("summands differ in endpoints or degree");
    for (const auto& [m, x] : e.terms_) {
        Rational& slot = terms_[m];
        slot += c * x;
        if (plumbing::is_zero(slot)) terms_.erase(m);
    }
    return *this;
}

std::string to_string(const QuotientElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (a != 1) os << a << "*";
        os << to_string(m);
        first = false;
    }
    return os.str();
}

UPathStats u_path_stats(const OmegaQuiver& om, const Path& p) {
    if (om.dynkin.series != Series::A) throw NotTypeA("u-path statistics are defined for A_n");
    UPathStats st;
    for (int id : p.arrows) {
        const Arrow& a = om.quiver.arrow(id);
        if (!is_u(a)) throw NotAUPath("arrow " + a.name + " is not a u-arrow");
        (a.target > a.source ? st.increasing : st.decreasing)++;
    }
    return st;
}

bool u_path_vanishes(const OmegaQuiver& om, const Path& p) {
    UPathStats st = u_path_stats(om, p);
    return st.increasing > std::min(om.n() - p.source, p.target - 1);
}

QuotientElement canonical_form(const OmegaQuiver& bar, const Path& p, std::vector<RewriteStep>* trace) {
    require_linear_a(bar);
    const GradedQuiver& q = bar.quiver;
    const SwapTable table = swap_table(bar);
    std::vector<int> w = p.arrows;
    Rational coef = 1;
    auto record = [&](const char* rule) {
        if (trace) trace->push_back(RewriteStep{rule, coef, make_path(q, p.source, w)});
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            const Arrow &a = q.arrow(w[k]), &b = q.arrow(w[k + 1]);
            if (is_v_type(a) && is_v_type(b) && a.kind != b.kind) {
                w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
                record("cancel");
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (!is_u(q.arrow(w[k])) || !is_v_type(q.arrow(w[k + 1]))) continue;
            auto it = table.find({w[k], w[k + 1]});
            if (it == table.end())
                throw UnsupportedShape("no commutation rule for " + q.arrow(w[k + 1]).name + " after " +
                                       q.arrow(w[k]).name);
            w[k] = it->second.v;
            w[k + 1] = it->second.u;
            coef *= it->second.c;
            record("push");
            changed = true;
            break;
        }
    }
    QuotientElement out(p.source, p.target, p.degree);
    int c = 0, cur = p.source;
    std::size_t k = 0;
    for (; k < w.size() && is_v_type(q.arrow(w[k])); ++k) {
        c += q.arrow(w[k]).kind == ArrowKind::V ? 1 : -1;
        cur = q.arrow(w[k]).target;
    }
    Path head = make_path(q, cur, std::vector<int>(w.begin() + static_cast<long>(k), w.end()));
    if (u_path_vanishes(bar, head)) return out;
    UPathStats st = u_path_stats(bar, head);
    auto m = make_monomial(bar.n(), p.source, p.target, c, st.increasing - std::max(0, p.target - cur));
    if (!m) throw ConventionFailure("canonical form of a non-vanishing path has no monomial");
    out.add(bar, *m, coef);
    return out;
}

QuotientElement canonical_form(const OmegaQuiver& bar, const GradedElement& e) {
    QuotientElement out(e.source(), e.target(), e.degree());
    for (const auto& [p, c] : e.terms()) out.add(canonical_form(bar, p), c);
    return out;
}

QuotientElement quotient_multiply(const OmegaQuiver& bar, const QuotientElement& a, const QuotientElement& b) {
    if (a.source() != b.target())
        throw NotComposable("left factor starts at " + std::to_string(a.source()) + " but right factor ends at " +
                            std::to_string(b.target()));
    QuotientElement out(b.source(), a.target(), a.degree() + b.degree());
    for (const auto& [mb, cb] : b.terms()) {
        Path pb = representative(bar, mb);
        for (const auto& [ma, ca] : a.terms())
            out.add(canonical_form(bar, concat(bar.quiver, pb, representative(bar, ma))), ca * cb);
    }
    return out;
}

QuotientElement identity_element(const OmegaQuiver& bar, int vertex) {
    NormalMonomial m;
    m.from = m.to = vertex;
    return QuotientElement::of(bar, m);
}

std::vector<NormalMonomial> monomial_basis(const OmegaQuiver& bar, int from, int to, int degree_wanted, Side side) {
    require_linear_a(bar);
    const int n = bar.n();
    const int reach = 2 * (std::abs(degree_wanted) + 2 * n) / (n + 3) + 4;
    std::vector<NormalMonomial> out;
    for (int c = side == Side::Wrapped ? 0 : -reach; c <= reach; ++c)
        for (int a = 0;; ++a) {
            auto m = make_monomial(n, from, to, c, a);
            if (!m) break;
            if (degree(bar, *m) == degree_wanted) out.push_back(*m);
        }
    std::sort(out.begin(), out.end());
    return out;
}

NormalMonomial theta(const OmegaQuiver& bar, int j) {
    require_linear_a(bar);
    const int n = bar.n();
    return *make_monomial(n, j, j, -1, std::min(n - j, j - 1));
}

Rational pairing(const OmegaQuiver& bar, const QuotientElement& a, const QuotientElement& b) {
    if (a.source() != b.target() || a.target() != b.source())
        throw DegreeMismatch("pairing needs a: j -> i and b: i -> j");
    if (a.degree() + b.degree() != 2)
        throw DegreeMismatch("pairing needs total degree 2, got " + std::to_string(a.degree() + b.degree()));
    return quotient_multiply(bar, b, a).coefficient(theta(bar, a.source()));
}

std::optional<NormalMonomial> left_partner(const OmegaQuiver& bar, const NormalMonomial& b) {
    require_linear_a(bar);
    const int n = bar.n(), i = b.from, j = b.to;
    Stats sb = stats(n, b);
    const int ca = -1 - sb.c;
    const int sa = ca % 2 == 0 ? j : n + 1 - j;
    const int t = j - 1 - sb.inc;
    const int ia = sb.c % 2 == 0 ? t : t + (i - sa);
    return make_monomial(n, j, i, ca, ia - std::max(0, i - sa));
}

std::optional<NormalMonomial> right_partner(const OmegaQuiver& bar, const NormalMonomial& a) {
    require_linear_a(bar);
    const int n = bar.n(), j = a.from, i = a.to;
    Stats sa = stats(n, a);
    const int cb = -1 - sa.c;
    const int sb = cb % 2 == 0 ? i : n + 1 - i;
    const int ib = j - 1 - (cb % 2 == 0 ? sa.inc : sa.dec);
    return make_monomial(n, i, j, cb, ib - std::max(0, j - sb));
}

std::vector<NormalMonomial> quotient_basis(const OmegaQuiver& bar, int from, int to, int degree_wanted) {
    if (degree_wanted <= 0) return monomial_basis(bar, from, to, degree_wanted, Side::Quotient);
    if (degree_wanted == 1) return {};
    std::vector<NormalMonomial> out;
    for (const NormalMonomial& a : quotient_basis(bar, to, from, 2 - degree_wanted)) {
        auto b = right_partner(bar, a);
        if (!b) throw ConventionFailure("no dual partner for " + to_string(a));
        out.push_back(*b);
    }
    return out;
}

RationalMatrix gram_matrix(const OmegaQuiver& bar, const std::vector<NormalMonomial>& left,
                           const std::vector<NormalMonomial>& right) {
    RationalMatrix g(static_cast<Eigen::Index>(left.size()), static_cast<Eigen::Index>(right.size()));
    for (std::size_t r = 0; r < left.size(); ++r)
        for (std::size_t c = 0; c < right.size(); ++c)
            g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                pairing(bar, QuotientElement::of(bar, left[r]), QuotientElement::of(bar, right[c]));
    return g;
}

int quotient_dim(const QuotientAlgebra& wrapped, int from, int to, int degree) {
    if (degree <= 0) return wrapped.hom_dim(from, to, degree);
    if (degree == 1) return 0;
    return wrapped.hom_dim(to, from, 2 - degree);
}

} // namespace plumbing
