#pragma once

#include "plumbing/dynkin.hpp"

#include <Eigen/Core>

#include <vector>

namespace plumbing {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

// cartan(i, j) = number of paths from i to j, so column i is dim P_i.
// coxeter = -cartan^T * cartan^{-1} acts on dimension vectors.
struct CoxeterData {
    IntMatrix cartan;
    IntMatrix coxeter;
    IntMatrix coxeter_inverse;
    std::vector<IntVector> proj_roots; // 0-based: proj_roots[i-1] = dim P_i
};

// An indecomposable object of the derived category: positive root and shift.
struct RootShift {
    IntVector root;
    int shift = 0;
    bool operator==(const RootShift& o) const { return shift == o.shift && root == o.root; }
};

CoxeterData coxeter_data(const DynkinQuiver& q);

RootShift inverse_ar_step(const CoxeterData& c, const RootShift& x);

// Least N >= 1 with tau^{-N} P_{phi(i)} = P_i[1].  Throws ConventionFailure.
int compute_shift_exponent(const DynkinQuiver& q, int i);
std::vector<int> shift_exponents(const DynkinQuiver& q); // 1-based

// Result of h inverse-AR steps starting from (dim P_i, 0).
RootShift coxeter_orbit_end(const DynkinQuiver& q, int i);

} // namespace plumbing
