#pragma once

// Degree pieces of KQ/I for a graded quiver with non-positive arrow degrees,
// no cycles of degree zero, and relations that are homogeneous in both
// degree and length.
//
// For each source vertex i the right module A e_i is built one path length
// at a time.  A candidate of length l is a pair (arrow a, basis path b of
// length l-1); relations of length m contribute r*q for every basis path q
// of length l-m, written in candidates by pushing q through the stored
// arrow actions.  Echelon form with the largest candidate as pivot leaves
// the surviving candidates as the basis; the eliminated ones record their
// normal forms, which become the arrow actions used by the next layer.
// Pieces below the degree floor are never built.

#include "plumbing/graded_quiver.hpp"
#include "plumbing/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

namespace plumbing {

class QuotientAlgebra {
public:
    QuotientAlgebra(GradedQuiver quiver, RelationSet relations, int min_degree);

    const GradedQuiver& quiver() const { return quiver_; }
    const RelationSet& relations() const { return relations_; }
    int min_degree() const { return min_degree_; }

    // Throws OutOfWindow below the floor; zero for positive degrees.
    int hom_dim(int from, int to, int degree) const;
    std::vector<Path> hom_basis(int from, int to, int degree) const;

    GradedElement normal_form(const Path& p) const;
    GradedElement normal_form(const GradedElement& e) const;
    bool is_zero(const GradedElement& e) const { return normal_form(e).is_zero(); }

    // a * b composes right-to-left: b first, then a.  Throws NotComposable.
    GradedElement multiply(const GradedElement& a, const GradedElement& b) const;

    // Coordinates in hom_basis(e.source(), e.target(), e.degree()).
    std::vector<Rational> coordinates(const GradedElement& e) const;
    GradedElement from_coordinates(int from, int to, int degree, const std::vector<Rational>& x) const;

private:
    struct Piece {
        int target = 0, degree = 0, length = 0;
        std::vector<Path> basis;
        // image[b][k]: basis element b followed by the k-th arrow out of target
        std::vector<std::vector<SparseVec<Rational>>> image;
        std::vector<int> next; // per out-arrow: target piece id, -1 zero, -2 below floor
    };
    struct Module {
        std::vector<Piece> pieces;
        std::map<std::tuple<int, int, int>, int> index; // (target, degree, length)
    };
    using Vec = std::map<int, SparseVec<Rational>>;

    const Module& module(int source) const;
    Module build(int source) const;
    Vec apply(const Module& m, int arrow, const Vec& v) const;
    Vec apply(const Module& m, const std::vector<int>& arrows, Vec v) const;
    Vec reduce(const Path& p) const;
    std::vector<int> pieces_of(const Module& m, int to, int degree) const;
    GradedElement to_element(const Module& m, int from, int to, int degree, const Vec& v) const;

    GradedQuiver quiver_;
    RelationSet relations_;
    int min_degree_;
    std::vector<int> out_position_; // arrow id -> index within out_arrows(source)
    mutable std::vector<std::unique_ptr<Module>> modules_;
    mutable std::unique_ptr<std::once_flag[]> built_;
};

} // namespace plumbing
