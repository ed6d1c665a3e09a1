#include "plumbing/coxeter.hpp"

#include "plumbing/errors.hpp"
#include "plumbing/involution.hpp"
#include "plumbing/linalg.hpp"

#include <Eigen/LU>

namespace plumbing {

namespace {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

IntMatrix to_integer(const RationalMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (denominator(m(r, c)) != 1) throw ConventionFailure("Coxeter matrix is not integral");
            out(r, c) = numerator(m(r, c)).convert_to<long long>();
        }
    return out;
}

RationalMatrix inverse_unitriangular(const RationalMatrix& m) {
    const Eigen::Index n = m.rows();
    RationalMatrix inv(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Matrix<Rational, Eigen::Dynamic, 1> e = Eigen::Matrix<Rational, Eigen::Dynamic, 1>::Zero(n), x;
        e(k) = 1;
        if (!exact_solve<Rational>(m, e, x)) throw ConventionFailure("Cartan matrix is singular");
        inv.col(k) = x;
    }
    return inv;
}

} // namespace

CoxeterData coxeter_data(const DynkinQuiver& q) {
    const int n = q.rank;
    // paths[i][j] = #paths i -> j; the quiver is a tree so this is 0/1
    IntMatrix c = IntMatrix::Identity(n, n);
    std::vector<std::vector<int>> out(n + 1);
    for (auto [a, b] : q.arrows) out[a].push_back(b);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> stack{i};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : out[x]) {
                c(i - 1, y - 1) += 1;
                stack.push_back(y);
            }
        }
    }
    RationalMatrix cr = c.cast<Rational>();
    RationalMatrix cinv = inverse_unitriangular(cr);
    RationalMatrix phi = -(cr.transpose() * cinv);
    RationalMatrix phi_inv = -(cr * inverse_unitriangular(cr.transpose()));

    CoxeterData d;
    d.cartan = c;
    d.coxeter = to_integer(phi);
    d.coxeter_inverse = to_integer(phi_inv);
    for (int i = 0; i < n; ++i) d.proj_roots.push_back(c.col(i));
    return d;
}

RootShift inverse_ar_step(const CoxeterData& c, const RootShift& x) {
    IntVector r = c.coxeter_inverse * x.root;
    if ((r.array() >= 0).all()) return {r, x.shift};
    return {-r, x.shift + 1};
}

int compute_shift_exponent(const DynkinQuiver& q, int i) {
    const CoxeterData c = coxeter_data(q);
    const Involution phi = involution(q);
    const int h = coxeter_number(q.series, q.rank);
    RootShift x{c.proj_roots[phi(i) - 1], 0};
    const RootShift target{c.proj_roots[i - 1], 1};
    for (int step = 1; step <= 2 * h; ++step) {
        x = inverse_ar_step(c, x);
        if (x == target) return step;
    }
    throw ConventionFailure("no shift exponent within 2h steps at vertex " + std::to_string(i));
}

std::vector<int> shift_exponents(const DynkinQuiver& q) {
    std::vector<int> out(q.rank + 1, 0);
    for (int i = 1; i <= q.rank; ++i) out[i] = compute_shift_exponent(q, i);
    return out;
}

RootShift coxeter_orbit_end(const DynkinQuiver& q, int i) {
    const CoxeterData c = coxeter_data(q);
    RootShift x{c.proj_roots[i - 1], 0};
    for (int step = 0; step < coxeter_number(q.series, q.rank); ++step) x = inverse_ar_step(c, x);
    return x;
}

} // namespace plumbing
