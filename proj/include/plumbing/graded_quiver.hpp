#pragma once

#include "plumbing/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace plumbing {

enum class ArrowKind {
    Forward,  // an arrow of Q (u_{ij} along the orientation), degree 0
    Star,     // a reversed arrow alpha*, degree -1
    V,        // v_{i,phi(i)}
    VInverse, // v^{-1}_{i,phi(i)}
    Loop,     // Ginzburg loop t_i
    Other     // anything built by hand (tests, auxiliary algebras)
};

struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
    int degree = 0;
    ArrowKind kind = ArrowKind::Other;
    int label = -1; // Forward/Star: index of the Q-arrow; V/VInverse/Loop: the vertex i
};

class GradedQuiver {
public:
    GradedQuiver() = default;
    explicit GradedQuiver(int vertex_count) : vertex_count_(vertex_count), out_(vertex_count + 1) {}

    int add_arrow(Arrow a);

    int vertex_count() const { return vertex_count_; }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const Arrow& arrow(int id) const { return arrows_[id]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<int>& out_arrows(int v) const { return out_[v]; }
    int find(const std::string& name) const; // -1 if absent
    bool has_positive_arrows() const;

    // True iff some cycle has total degree >= 0 (zero or positive).
    bool has_nonnegative_cycle() const;

private:
    int vertex_count_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_;
    std::map<std::string, int> by_name_;
};

// Arrows are stored in the order they are traversed; printed paths show the
// same path right-to-left.  An empty arrow list is the idempotent e_source.
struct Path {
    int source = 0;
    int target = 0;
    int degree = 0;
    std::vector<int> arrows;

    std::size_t length() const { return arrows.size(); }
    bool operator==(const Path& o) const { return source == o.source && arrows == o.arrows; }
    bool operator<(const Path& o) const {
        if (source != o.source) return source < o.source;
        return arrows < o.arrows;
    }
};

Path idempotent(int vertex);
// Throws NotComposable if consecutive arrows do not meet.
Path make_path(const GradedQuiver& q, int source, const std::vector<int>& arrows);
// p first, then q (written q p).  Throws NotComposable.
Path concat(const GradedQuiver& quiver, const Path& p, const Path& q);

// Right-to-left, e.g. "u(2,3) u(3,2)"; "e(i)" for idempotents.
std::string to_string(const GradedQuiver& q, const Path& p);

class GradedElement {
public:
    GradedElement() = default;
    GradedElement(int source, int target, int degree) : source_(source), target_(target), degree_(degree) {}
    static GradedElement of(const Path& p, const Rational& c = 1);

    int source() const { return source_; }
    int target() const { return target_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Path, Rational>& terms() const { return terms_; }

    // Throws NonHomogeneous if p does not match the element's endpoints/degree.
    GradedElement& add(const Path& p, const Rational& c);
    GradedElement& add(const GradedElement& e, const Rational& c = 1);
    GradedElement operator-() const;

    bool operator==(const GradedElement& o) const {
        return source_ == o.source_ && target_ == o.target_ && degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const GradedElement& o) const { return !(*this == o); }

    // All terms share one path length (needed by the quotient engine).
    bool length_homogeneous() const;

private:
    int source_ = 0, target_ = 0, degree_ = 0;
    std::map<Path, Rational> terms_;
};

std::string to_string(const GradedQuiver& q, const GradedElement& e);

using RelationSet = std::vector<GradedElement>;

} // namespace plumbing
