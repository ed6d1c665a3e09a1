#include "plumbing/element_parser.hpp"

#include "plumbing/cluster.hpp"
#include "plumbing/errors.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace plumbing {

GradedElement compose(const GradedQuiver& q, const GradedElement& a, const GradedElement& b) {
    if (a.source() != b.target())
        throw NotComposable("left factor starts at " + std::to_string(a.source()) + " but right factor ends at " +
                            std::to_string(b.target()));
    GradedElement out(b.source(), a.target(), a.degree() + b.degree());
    for (const auto& [pb, cb] : b.terms())
        for (const auto& [pa, ca] : a.terms()) out.add(concat(q, pb, pa), ca * cb);
    return out;
}

namespace {

class Parser {
public:
    Parser(const OmegaQuiver& bar, const std::string& text) : om_(bar), q_(bar.quiver), s_(text) {}

    GradedElement parse() {
        GradedElement e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool at_number() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    bool at_factor() {
        skip();
        return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(');
    }
    long number() {
        if (!at_number()) fail("expected a number");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1000000000) fail("number too large");
        }
        return v;
    }
    std::string name() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return s_.substr(start, pos_ - start);
    }
    int vertex() {
        long v = number();
        if (v < 1 || v > om_.n()) fail("vertex " + std::to_string(v) + " outside 1.." + std::to_string(om_.n()));
        return static_cast<int>(v);
    }

    GradedElement expr() {
        std::optional<GradedElement> sum;
        bool negative = accept('-');
        for (;;) {
            GradedElement t = term();
            if (!sum) {
                sum = GradedElement(t.source(), t.target(), t.degree());
            }
            sum->add(t, negative ? -1 : 1);
            if (accept('+'))
                negative = false;
            else if (accept('-'))
                negative = true;
            else
                break;
        }
        return *sum;
    }

    GradedElement term() {
        Rational coef = 1;
        if (at_number()) {
            long num = number();
            long den = 1;
            if (accept('/')) den = number();
            if (den == 0) fail("zero denominator");
            coef = Rational(num) / Rational(den);
            accept('*');
        }
        if (!at_factor()) fail("expected a generator");
        GradedElement prod = factor();
        for (;;) {
            bool star = accept('*');
            if (!at_factor()) {
                if (star) fail("expected a generator after '*'");
                break;
            }
            prod = compose(q_, prod, factor());
        }
        GradedElement out(prod.source(), prod.target(), prod.degree());
        out.add(prod, coef);
        return out;
    }

    GradedElement factor() {
        std::size_t start = pos_;
        bool invertible = false;
        GradedElement base = atom(invertible);
        if (!accept('^')) return base;
        bool negative = accept('-');
        long k = number();
        if (negative) {
            if (!invertible) {
                pos_ = start;
                fail("only v and y take negative powers, and only on the quotient side");
            }
            base = inverse_of_last_;
        }
        if (k == 1) return base;
        if (base.source() != base.target()) {
            pos_ = start;
            fail("powers need a loop");
        }
        GradedElement out = GradedElement::of(idempotent(base.source()));
        for (long i = 0; i < k; ++i) out = compose(q_, base, out);
        return out;
    }

    GradedElement path_element(int from, const std::vector<int>& arrows) {
        return GradedElement::of(make_path(q_, from, arrows));
    }
    GradedElement path_element(const Path& p) { return GradedElement::of(p); }

    int v_inv(int m) {
        if (!om_.has_inverses) fail("inverse arrows need the quotient side");
        return om_.v_inv[m - 1];
    }

    GradedElement loop(int i, bool z) {
        std::set<int> nbrs;
        for (auto [a, b] : om_.dynkin.arrows) {
            if (a == i) nbrs.insert(b);
            if (b == i) nbrs.insert(a);
        }
        if (nbrs.empty()) return GradedElement(i, i, -1);
        int via;
        if (z)
            via = nbrs.count(i + 1) ? i + 1 : *nbrs.rbegin();
        else
            via = nbrs.count(i - 1) ? i - 1 : *nbrs.begin();
        return path_element(*z_loop(om_, i, via));
    }

    GradedElement atom(bool& invertible) {
        if (accept('(')) {
            GradedElement e = expr();
            expect(')');
            return e;
        }
        const std::size_t start = pos_;
        std::string id = name();
        expect('(');
        int i = vertex(), j = 0;
        const bool two = id == "u" || id == "U" || id == "V";
        if (two) {
            expect(',');
            j = vertex();
        }
        expect(')');
        const int pi = om_.phi(i);
        if (id == "u") {
            if (om_.u(i, j) < 0) {
                pos_ = start;
                fail("no arrow u(" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
            return path_element(i, {om_.u(i, j)});
        }
        if (id == "v") {
            invertible = om_.has_inverses;
            if (invertible) inverse_of_last_ = path_element(pi, {v_inv(i)});
            return path_element(i, {om_.v[i - 1]});
        }
        if (id == "v_inv") return path_element(pi, {v_inv(i)});
        if (id == "e") return path_element(idempotent(i));
        if (id == "y") {
            invertible = om_.has_inverses;
            if (invertible) inverse_of_last_ = path_element(i, {v_inv(pi), v_inv(i)});
            return path_element(i, {om_.v[i - 1], om_.v[pi - 1]});
        }
        if (id == "x") return path_element(concat(q_, make_path(q_, i, {om_.v[i - 1]}), u_geodesic(om_, pi, i)));
        if (id == "z") return loop(i, true);
        if (id == "w") return loop(i, false);
        if (id == "U") return path_element(u_geodesic(om_, i, j));
        if (id == "V") return path_element(concat(q_, make_path(q_, i, {om_.v[i - 1]}), u_geodesic(om_, pi, j)));
        pos_ = start;
        fail("unknown generator '" + id + "'");
    }

    const OmegaQuiver& om_;
    const GradedQuiver& q_;
    std::string s_;
    std::size_t pos_ = 0;
    GradedElement inverse_of_last_;
};

} // namespace

GradedElement parse_element(const OmegaQuiver& bar, const std::string& text) { return Parser(bar, text).parse(); }

} // namespace plumbing
