#pragma once

#include "plumbing/dynkin.hpp"
#include "plumbing/graded_quiver.hpp"
#include "plumbing/involution.hpp"

#include <vector>

namespace plumbing {

// Omega_Q (and Omega-bar_Q once inverses are added) with its relation ideal.
struct OmegaQuiver {
    DynkinQuiver dynkin;
    Involution phi;
    std::vector<int> shift; // N(i), 1-based
    GradedQuiver quiver;
    RelationSet relations;
    std::vector<int> forward; // per Q-arrow: id of u along the arrow
    std::vector<int> star;    // per Q-arrow: id of the reversed arrow
    std::vector<int> v;       // per vertex: id of v_{i,phi(i)}
    std::vector<int> v_inv;   // per vertex: id of the inverse, -1 before build_omega_bar
    bool has_inverses = false;

    int n() const { return dynkin.rank; }
    // id of the u-arrow i -> j, or -1
    int u(int i, int j) const;
    // Coxeter number h; y_i = v_{phi(i),i} v_{i,phi(i)} has degree -(h+2)
    int coxeter() const { return coxeter_number(dynkin.series, dynkin.rank); }
    bool is_linear_a() const;
};

// Twisted image under phi of a Q-bar arrow: the arrow phi(s) -> phi(t) and
// its sign.
struct SignedArrow {
    int arrow;
    int sign;
};
SignedArrow phi_arrow(const OmegaQuiver& om, int u_arrow);

OmegaQuiver build_omega(const DynkinQuiver& q);
OmegaQuiver build_omega_bar(const OmegaQuiver& omega);

// The vertex relation sum_{a: i->j} a* a - sum_{b: k->i} b b* on the
// Q-bar part of any quiver containing it; arrows looked up by name.
GradedElement vertex_relation(const DynkinQuiver& q, const GradedQuiver& quiver, int i);

// Ginzburg quiver: Q-bar plus loops t_i of degree -2, and d on generators.
struct GinzburgQuiver {
    DynkinQuiver dynkin;
    GradedQuiver quiver;
    std::vector<GradedElement> derivation; // d(arrow), indexed by arrow id
    std::vector<int> loop;                 // per vertex: id of t_i
};

GinzburgQuiver build_ginzburg(const DynkinQuiver& q);

// d extended to paths by the Leibniz rule; the sign of the term in which
// the k-th traversed arrow is differentiated is (-1)^(sum of the degrees of
// the arrows traversed after it), i.e. of those written to its left.
GradedElement differential(const GinzburgQuiver& g, const Path& p);
GradedElement differential(const GinzburgQuiver& g, const GradedElement& e);

} // namespace plumbing
