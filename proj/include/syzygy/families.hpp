#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "syzygy/presentation.hpp"

namespace syzygy {

struct ExchangeFailure : std::runtime_error {
    std::vector<int> b1, b2;
    int x;  // element of b1 \ b2 with no valid swap
    ExchangeFailure(std::vector<int> a, std::vector<int> b, int xx);
};

struct NotStable : std::runtime_error {
    Monomial u;
    int var;  // x_var * u / x_max(supp u) escapes the ideal
    NotStable(Monomial m, int v);
};

struct Matroid {
    int ground_size = 0;
    std::vector<std::vector<int>> bases;  // each sorted ascending, 1-based
};

// Checks equal cardinality and the basis exchange axiom by brute force.
Matroid validate_matroid(int ground_size, std::vector<std::vector<int>> bases);

// Squarefree generators x_B ordered by decreasing lex, re-verified for linear
// quotients.
Presentation matroidal_presentation(const Matroid& m);

// Checks the stability criterion (x_j * u / x_max(supp u) stays in the ideal
// for every j < max(supp u)), orders by decreasing lex, verifies linear
// quotients.
Presentation validate_stable(int n, std::vector<Monomial> generators);

// The Fano matroid: ground set size 7, the 28 basis 3-subsets.
Matroid fano();

// All r-subsets of 1..n.
Matroid uniform_matroid(int r, int n);

// Bases restricted to those inside the subset, ground renumbered onto
// 1..subset.size().
Matroid restrict_matroid(const Matroid& m, const std::vector<int>& subset);

// Family membership queries used for report annotations.
bool is_stable_presentation(const Presentation& p);
bool is_matroidal_presentation(const Presentation& p);

// Random minimal stable generating set: closes random monomials under the
// stability moves, then minimalizes. Degrees bounded by maxdeg.
std::vector<Monomial> random_stable_ideal(int n, int maxdeg, int seeds, std::mt19937& rng);

}  // namespace syzygy
