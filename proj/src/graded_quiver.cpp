#include "plumbing/graded_quiver.hpp"

#include "plumbing/errors.hpp"

#include <limits>
#include <sstream>

namespace plumbing {

int GradedQuiver::add_arrow(Arrow a) {
    if (a.source < 1 || a.source > vertex_count_ || a.target < 1 || a.target > vertex_count_)
        throw NonDynkinShape("arrow " + a.name + " has an endpoint outside the vertex set");
    if (by_name_.count(a.name)) throw NonDynkinShape("duplicate arrow name " + a.name);
    int id = static_cast<int>(arrows_.size());
    by_name_[a.name] = id;
    out_[a.source].push_back(id);
    arrows_.push_back(std::move(a));
    return id;
}

int GradedQuiver::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
}

bool GradedQuiver::has_positive_arrows() const {
    for (const auto& a : arrows_)
        if (a.degree > 0) return true;
    return false;
}

bool GradedQuiver::has_nonnegative_cycle() const {
    // Floyd-Warshall on maximal degree; a cycle of degree >= 0 shows up as a
    // non-negative diagonal entry.
    const long long none = std::numeric_limits<long long>::min() / 4;
    const int n = vertex_count_;
    std::vector<std::vector<long long>> best(n + 1, std::vector<long long>(n + 1, none));
    for (const auto& a : arrows_) best[a.source][a.target] = std::max<long long>(best[a.source][a.target], a.degree);
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i) {
            if (best[i][k] == none) continue;
            for (int j = 1; j <= n; ++j) {
                if (best[k][j] == none) continue;
                best[i][j] = std::max(best[i][j], std::min<long long>(best[i][k] + best[k][j], 1LL << 40));
            }
        }
    for (int i = 1; i <= n; ++i)
        if (best[i][i] != none && best[i][i] >= 0) return true;
    return false;
}

Path idempotent(int vertex) { return Path{vertex, vertex, 0, {}}; }

Path make_path(const GradedQuiver& q, int source, const std::vector<int>& arrows) {
    Path p = idempotent(source);
    for (int a : arrows) {
        const Arrow& ar = q.arrow(a);
        if (ar.source != p.target)
            throw NotComposable("arrow " + ar.name + " does not start at vertex " + std::to_string(p.target));
        p.target = ar.target;
        p.degree += ar.degree;
        p.arrows.push_back(a);
    }
    return p;
}

Path concat(const GradedQuiver& quiver, const Path& p, const Path& q) {
    if (p.target != q.source)
        throw NotComposable("cannot compose a path ending at " + std::to_string(p.target) +
                            " with one starting at " + std::to_string(q.source));
    (void)quiver;
    Path r = p;
    r.target = q.target;
    r.degree += q.degree;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

std::string to_string(const GradedQuiver& q, const Path& p) {
    if (p.arrows.empty()) return "e(" + std::to_string(p.source) + ")";
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!s.empty()) s += ' ';
        s += q.arrow(*it).name;
    }
    return s;
}

GradedElement GradedElement::of(const Path& p, const Rational& c) {
    GradedElement e(p.source, p.target, p.degree);
    e.add(p, c);
    return e;
}

GradedElement& GradedElement::add(const Path& p, const Rational& c) {
    if (p.source != source_ || p.target != target_ || p.degree != degree_)
        throw NonHomogeneous("term with endpoints " + std::to_string(p.source) + "->" + std::to_string(p.target) +
                             " and degree " + std::to_string(p.degree) + " added to an element of type " +
                             std::to_string(source_) + "->" + std::to_string(target_) + ", degree " +
                             std::to_string(degree_));
    if (c.is_zero()) return *this;
    auto [it, fresh] = terms_.try_emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

GradedElement& GradedElement::add(const GradedElement& e, const Rational& c) {
    if (e.is_zero()) return *this;
    for (const auto& [p, x] : e.terms_) add(p, c * x);
    return *this;
}

GradedElement GradedElement::operator-() const {
    GradedElement r = *this;
    for (auto& [p, c] : r.terms_) c = -c;
    return r;
}

bool GradedElement::length_homogeneous() const {
    if (terms_.empty()) return true;
    std::size_t len = terms_.begin()->first.length();
    for (const auto& [p, c] : terms_)
        if (p.length() != len) return false;
    return true;
}

std::string to_string(const GradedQuiver& q, const GradedElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : e.terms()) {
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (a != 1) os << a << "*";
        os << to_string(q, p);
        first = false;
    }
    return os.str();
}

} // namespace plumbing
