#pragma once

#include <string>

#include "syzygy/resolution.hpp"

namespace syzygy {

// exact rank over the rationals via fraction-free elimination
int rank_bareiss(std::vector<std::vector<mpz_class>> a);

// One multidegree strand of the augmented complex: dims[p] counts basis
// elements of homological degree p with multidegree below alpha, ranks[p] is
// the rank of the strand map out of degree p (ranks[0] is the augmentation
// rank). fail_position: lowest inexact homological position, -1 for a failure
// at the ring strand, 0 meaning exact (see `exact`).
struct StrandCheck {
    Monomial alpha;
    std::vector<int> dims;
    std::vector<int> ranks;
    bool exact = true;
    int fail_position = 0;
    bool operator==(const StrandCheck&) const = default;
};

struct StrandReport {
    bool ok = true;
    std::vector<StrandCheck> checks;  // one per requested multidegree, input order
    std::string witness;
};

// all exponent vectors componentwise at most bound
std::vector<Monomial> multidegrees_below(const Monomial& bound);

// componentwise max of the basis multidegrees
Monomial basis_mdeg_bound(const Resolution& r);

// Exactness of every strand alpha: the complex 0 -> G_top -> ... -> G_0 -> S_alpha
// has vanishing homology in positive positions and cokernel dimension
// [alpha not in I] at the ring position.
StrandReport strand_exactness_multi(const Resolution& r, const std::vector<Monomial>& alphas);
StrandReport strand_exactness_multi_parallel(const Resolution& r, const std::vector<Monomial>& alphas);
StrandReport strand_exactness_oracle(const Resolution& r, const Monomial& bound);
StrandReport strand_exactness_oracle_parallel(const Resolution& r, const Monomial& bound);

}  // namespace syzygy
