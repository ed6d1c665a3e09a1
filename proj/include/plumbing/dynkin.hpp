#pragma once

#include <string>
#include <utility>
#include <vector>

namespace plumbing {

enum class Series { A, D, E };

using Edge = std::pair<int, int>; // directed: first -> second

// An orientation of an ADE Dynkin tree, vertices labelled 1..rank.
//  A_n: the path 1-2-...-n.
//  D_n: tail 1-2-...-(n-2), fork tips n-1 and n attached to n-2.
//  E_n: 1-3-4-5-...-n with the short branch 2 attached to 4.
struct DynkinQuiver {
    Series series = Series::A;
    int rank = 1;
    std::vector<Edge> arrows;

    int vertex_count() const { return rank; }
    std::string name() const;
};

char series_letter(Series s);
std::vector<Edge> dynkin_tree(Series s, int rank); // undirected, as (min, max)
std::vector<Edge> default_orientation(Series s, int rank);
bool valid_rank(Series s, int rank);
int coxeter_number(Series s, int rank);

// Throws NonDynkinShape / DuplicateEdge.
DynkinQuiver build_dynkin(Series s, int rank, const std::vector<Edge>& arrows);
DynkinQuiver build_dynkin(Series s, int rank);

// "A5", "D4", "E6" with the default orientation.  Throws ParseError.
DynkinQuiver parse_dynkin(const std::string& name);

// Tree distance between vertices (used for parity pruning).
std::vector<std::vector<int>> tree_distances(const DynkinQuiver& q);

} // namespace plumbing
