#pragma once

// Brute-force degree pieces: every path of a given degree, and the span of
// all p*r*q inside it.  Slow but transparent; the quotient engine is checked
// against it.

#include "plumbing/graded_quiver.hpp"
#include "plumbing/linalg.hpp"

#include <vector>

namespace plumbing {

// All paths from -> to of the given degree, sorted lexicographically by
// arrow ids.  Throws ZeroDegreeCycle if the quiver has a cycle of degree >= 0.
std::vector<Path> enumerate_paths(const GradedQuiver& q, int from, int to, int degree);

struct IdealPiece {
    std::vector<Path> paths;   // coordinates
    std::vector<GradedElement> basis; // echelon basis of the ideal piece
    int path_count() const { return static_cast<int>(paths.size()); }
    int dimension() const { return static_cast<int>(basis.size()); }
    std::vector<Path> complement; // non-pivot paths: coset representatives
};

IdealPiece ideal_subspace(const GradedQuiver& q, const RelationSet& relations, int from, int to, int degree);

// #paths - dim ideal piece
int brute_hom_dim(const GradedQuiver& q, const RelationSet& relations, int from, int to, int degree);

} // namespace plumbing
