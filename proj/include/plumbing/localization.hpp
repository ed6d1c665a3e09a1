#pragma once

// The quotient side as a localization: Y = sum_i y_i with
// y_i = v_{phi(i),i} v_{i,phi(i)} is central of degree -(h+2) in
// A = K Omega / J, and inverting it gives K Omega-bar / J-bar (the inverse
// arrows become v^{-1}_{m,phi(m)} = Y^{-1} v_{phi(m),m}).  Once
// multiplication by Y is a bijection A_q -> A_{q-h-2} for q <= 0, every
// element is uniquely b * Y^{-k} with b of degree in (-(h+2), 0], which
// gives both dimensions and a multiplication for any Dynkin type.

#include "plumbing/omega.hpp"
#include "plumbing/quotient_algebra.hpp"

#include <string>
#include <vector>

namespace plumbing {

struct LocalElement {
    int source = 0, target = 0, degree = 0;
    int y_power = 0;    // the element is body * Y^{-y_power}
    GradedElement body; // in A, degree = degree - y_power * period
    bool is_zero() const { return body.is_zero(); }
};

struct LocalizationCheck {
    bool central = true;
    bool bijective = true;
    std::string detail;
    bool ok() const { return central && bijective; }
};

class LocalizedAlgebra {
public:
    // floor: lowest degree of A that is ever materialized (default -3(h+2))
    explicit LocalizedAlgebra(const OmegaQuiver& omega, int floor = 0);

    const OmegaQuiver& omega_bar() const { return bar_; }
    const QuotientAlgebra& wrapped() const { return algebra_; }
    int period() const { return period_; }

    // Checks centrality of Y on arrows and bijectivity of Y on all degree
    // pieces that fit above the floor.
    LocalizationCheck verify() const;

    int dim(int from, int to, int degree) const;
    std::vector<LocalElement> basis(int from, int to, int degree) const;

    LocalElement element(const Path& bar_path) const;
    LocalElement element(const GradedElement& bar_element) const;
    LocalElement multiply(const LocalElement& a, const LocalElement& b) const; // b first
    std::vector<Rational> coordinates(const LocalElement& e) const;

    std::string to_string(const LocalElement& e) const;

private:
    LocalElement canonical(int source, int target, int degree, int y_power, GradedElement body) const;
    GradedElement times_y(const GradedElement& e) const;
    GradedElement divide_by_y(const GradedElement& e) const;
    int body_degree(int degree) const;

    OmegaQuiver omega_;
    OmegaQuiver bar_;
    int period_;
    QuotientAlgebra algebra_;
};

} // namespace plumbing
