#pragma once

// Closed-form descriptions of the endomorphism rings, used as independent
// checks of the computed dimensions: the type-A presentations
// K[x, y, z]/(z^k, x^2 - y z^l), the U/V generation of the off-diagonal
// pieces, and the six rings listed for E_6.

#include "plumbing/cluster.hpp"

#include <functional>
#include <string>
#include <vector>

namespace plumbing {

struct Presentation {
    int n = 0, vertex = 0;
    int k = 0, l = 0;
    int deg_x = 0, deg_y = 0, deg_z = -1;
    bool x_squared_is_y = false; // n odd and i = (n+1)/2
    std::vector<std::string> generators;
    std::vector<std::string> relations;
    std::string text;

    // Number of monomials z^a x^e y^b (a < k, e in {0,1}) of the given
    // degree; b >= 0 on the wrapped side, any b on the quotient side.
    int hilbert(int degree, Side side) const;
};

// Throws NotTypeA.
Presentation closed_form_presentation(const DynkinQuiver& q, int i);

// dim e_j A e_i from the U/V description with the closed degree formulas
// (no rewriting involved).  Throws NotTypeA.
int closed_form_dim(const DynkinQuiver& q, int i, int j, int degree, Side side);

// z_j^e V_{ij} = x_j U_{ij}
int remark_exponent(int n, int i, int j);
// Which of the four inequality chains holds (i < j), or its mirror (i > j).
std::string remark_case(int n, int i, int j);

struct UVReport {
    int from = 0, to = 0;
    std::string case_label;
    int exponent = 0;
    bool spans = true;
    bool relation_holds = true;
    std::vector<int> failed_degrees;
    bool ok() const { return spans && relation_holds; }
};

// Checks on the wrapped side that m U_{ij}, m V_{ij} (m in e_j A e_j) span
// e_j A e_i in every degree of [lo, min(hi, 0)], and the z^e V = x U relation.
UVReport uv_generator_check(const OmegaQuiver& om, const QuotientAlgebra& wrapped, int i, int j, int lo, int hi);

struct RingSeries {
    int vertex = 0;
    std::string presentation;
    std::function<int(int)> dim; // quotient-side Hilbert function
};

// The six endomorphism rings of the E_6 example, as Hilbert functions.
std::vector<RingSeries> e6_rings();

} // namespace plumbing
