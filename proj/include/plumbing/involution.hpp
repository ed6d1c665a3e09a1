#pragma once

#include "plumbing/dynkin.hpp"

#include <optional>
#include <vector>

namespace plumbing {

// The diagram involution together with the edge signs that make it act on
// the preprojective relations.  phi maps the Q-bar arrow i->j to the Q-bar
// arrow phi(i)->phi(j); when that arrow comes from an arrow alpha of Q we
// multiply by edge_sign[alpha].  The signs are fixed up to a global flip,
// normalized so that the first arrow of Q has sign +1.  For orientations
// that phi maps onto themselves all signs are +1.
struct Involution {
    std::vector<int> vertex;    // 1-based; vertex[0] unused
    std::vector<int> edge_sign; // indexed like DynkinQuiver::arrows
    bool preserves_arrows = true;

    int operator()(int v) const { return vertex[v]; }
    bool is_identity() const;
};

// The type-determined tree automorphism: n+1-i for A_n, the fork swap for
// D_{odd}, 1<->6 and 3<->5 for E_6, identity otherwise.
std::vector<int> diagram_involution(Series s, int rank);

// Throws OrientationNotPhiCompatible if no edge signs exist.
Involution involution(const DynkinQuiver& q);

// Solves x[a] + x[b] = parity (mod 2) for all constraints; the smallest
// variable of each connected component is set to 0.
struct ParityConstraint {
    int a, b, parity;
};
std::optional<std::vector<int>> solve_parity_system(int variables,
                                                    const std::vector<ParityConstraint>& constraints);

} // namespace plumbing
