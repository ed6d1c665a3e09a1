#pragma once

// The quotient (cluster / Rabinowitz) side for linearly oriented A_n:
// canonical forms in K Omega-bar / J-bar, normal monomials, the pairing
// beta' and dual bases.  Every element is a combination of monomials
//
//     z_j^a x_j^eps y_j^b U_{ij}   or   z_j^a y_j^b V_{ij}
//
// with V_{ij} = U_{phi(i),j} v_{i,phi(i)}, a < k_j, and b of any sign.

#include "plumbing/omega.hpp"
#include "plumbing/quotient_algebra.hpp"

#include <Eigen/Dense>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plumbing {

enum class Side { Wrapped, Quotient };

struct NormalMonomial {
    int from = 0, to = 0;
    bool v_part = false; // V_{ij} rather than U_{ij} (never when from == to)
    int z_exp = 0;
    int x_flag = 0;      // only when from == to
    int y_exp = 0;       // negative only on the quotient side
    auto operator<=>(const NormalMonomial&) const = default;
};

// Net number of v-arrows (v^{-1} counts -1).
int net_v(const NormalMonomial& m);
// Builds the monomial with net v-count c and z-exponent a at rank n, or
// nullopt when it vanishes.
std::optional<NormalMonomial> make_monomial(int n, int from, int to, int c, int a);

// A path in Omega-bar representing m: the v-block first, then U, then z^a.
Path representative(const OmegaQuiver& bar, const NormalMonomial& m);
int degree(const OmegaQuiver& bar, const NormalMonomial& m);
// Right-to-left, e.g. "z(2)^2 y(2)^-1 V(1,2)", "x(3)", "e(1)".
std::string to_string(const NormalMonomial& m);

class QuotientElement {
public:
    QuotientElement() = default;
    QuotientElement(int source, int target, int degree) : source_(source), target_(target), degree_(degree) {}
    static QuotientElement of(const OmegaQuiver& bar, const NormalMonomial& m, const Rational& c = 1);

    int source() const { return source_; }
    int target() const { return target_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<NormalMonomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const NormalMonomial& m) const;

    // Throws NonHomogeneous on endpoint or degree mismatch.
    QuotientElement& add(const OmegaQuiver& bar, const NormalMonomial& m, const Rational& c);
    QuotientElement& add(const QuotientElement& e, const Rational& c = 1);

    bool operator==(const QuotientElement& o) const = default;

private:
    int source_ = 0, target_ = 0, degree_ = 0;
    std::map<NormalMonomial, Rational> terms_;
};

std::string to_string(const QuotientElement& e);

// Counts of increasing (i -> i+1) and decreasing u-arrows.
struct UPathStats {
    int increasing = 0;
    int decreasing = 0;
};
UPathStats u_path_stats(const OmegaQuiver& om, const Path& p);
// I(P) > min(n - i, j - 1)
bool u_path_vanishes(const OmegaQuiver& om, const Path& p);

struct RewriteStep {
    std::string rule; // "cancel" or "push"
    Rational coefficient;
    Path path;
};

QuotientElement canonical_form(const OmegaQuiver& bar, const Path& p, std::vector<RewriteStep>* trace = nullptr);
QuotientElement canonical_form(const OmegaQuiver& bar, const GradedElement& e);
// a * b: b first, then a.  Throws NotComposable.
QuotientElement quotient_multiply(const OmegaQuiver& bar, const QuotientElement& a, const QuotientElement& b);
QuotientElement identity_element(const OmegaQuiver& bar, int vertex);

// All non-vanishing monomials of the given endpoints and degree, sorted.
std::vector<NormalMonomial> monomial_basis(const OmegaQuiver& bar, int from, int to, int degree, Side side);

// U_{1,j} v^{-1}_{1,n} U_{j,n}, the top class at j.
NormalMonomial theta(const OmegaQuiver& bar, int j);
// Coefficient of theta(j) in b * a, for a: j -> i and b: i -> j of total
// degree 2.  Throws DegreeMismatch.
Rational pairing(const OmegaQuiver& bar, const QuotientElement& a, const QuotientElement& b);
// The monomial a with pairing(a, b) = 1, resp. the monomial b with
// pairing(a, b) = 1.
std::optional<NormalMonomial> left_partner(const OmegaQuiver& bar, const NormalMonomial& b);
std::optional<NormalMonomial> right_partner(const OmegaQuiver& bar, const NormalMonomial& a);

// Monomials for p <= 0; for p >= 2 the partners of the basis of (to, from, 2 - p).
std::vector<NormalMonomial> quotient_basis(const OmegaQuiver& bar, int from, int to, int degree);

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
// rows: a in `left` (j -> i), columns: b in `right` (i -> j)
RationalMatrix gram_matrix(const OmegaQuiver& bar, const std::vector<NormalMonomial>& left,
                           const std::vector<NormalMonomial>& right);

// Dimension of the quotient side from the wrapped side by duality; works
// for every Dynkin type.
int quotient_dim(const QuotientAlgebra& wrapped, int from, int to, int degree);

// Helpers shared with the parser.
Path u_geodesic(const OmegaQuiver& om, int from, int to);
// The loop at i through the neighbour `via`, or nullopt if not adjacent.
std::optional<Path> z_loop(const OmegaQuiver& om, int i, int via);

} // namespace plumbing
