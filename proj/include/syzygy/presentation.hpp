#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "syzygy/monomial.hpp"

namespace syzygy {

struct NotMinimal : std::runtime_error {
    int divisor, multiple;  // 0-based generator positions, gens[divisor] | gens[multiple]
    NotMinimal(int d, int m);
};

struct NotLinearQuotients : std::runtime_error {
    int gen, witness;  // colon ideal at gens[gen] fails on the cofactor from gens[witness]
    NotLinearQuotients(int g, int w);
};

struct InternalNonUnique : std::logic_error {
    explicit InternalNonUnique(const std::string& what) : std::logic_error(what) {}
};

// Ordered generators of a monomial ideal with linear quotients. gens is the
// quotient order (earliest first); crit[j] holds the variables generating
// (gens[0],...,gens[j-1]) : gens[j], sorted ascending. ncrit(j) is the
// complement of crit[j] in 1..n and is never stored.
struct Presentation {
    int n = 0;
    std::vector<Monomial> gens;
    std::vector<std::vector<int>> crit;

    int r() const { return static_cast<int>(gens.size()); }
    int deg(int j) const { return gens[j].deg(); }
    bool crit_contains(int j, int v) const;
    bool is_ncrit(int j, int v) const { return !crit_contains(j, v); }
    int max_gen_degree() const;
    int min_gen_degree() const;
};

// cofactor * gens[gen] is the represented module element; supp(cofactor) is
// disjoint from crit[gen]
struct NormalTerm {
    Monomial cofactor;
    int gen = 0;
    auto operator<=>(const NormalTerm&) const = default;
};

// Checks minimality and that each successive colon ideal is variable-generated,
// and computes the crit sets. Throws NotMinimal / NotLinearQuotients.
Presentation verify_linear_quotients(int n, const std::vector<Monomial>& ordered_generators);

// Unique irreducible representative of w in the ideal, or nullopt when no
// generator divides w. Throws InternalNonUnique if two generators qualify.
std::optional<NormalTerm> normal_form(const Presentation& p, const Monomial& w);

// normal_form of x_i * gens[j]; always defined
NormalTerm nf_step(const Presentation& p, int i, int j);

struct CritMonotoneResult {
    bool ok = true;
    int gen = -1;      // witness generator (0-based)
    int var = -1;      // witness crit variable
    explicit operator bool() const { return ok; }
};

// true iff crit(nf(x_i g_j)) is contained in crit(g_j) for every j and every
// i in crit(g_j)
CritMonotoneResult is_crit_monotone(const Presentation& p);

// Presentation of the degree-d component: one generator per irreducible pair
// (beta, j) with supp(beta) in ncrit(g_j) and deg(beta) = d - deg(g_j),
// ordered by generator position then revlex-ascending beta, with
// crit = crit(g_j) union { a : a > min supp(beta) }.
Presentation component_presentation(const Presentation& p, int d);

// Generators whose support lies in the variable subset (1-based), renumbered
// onto 1..subset.size() in ascending order of the kept variables; original
// generator order kept.
std::pair<int, std::vector<Monomial>> restrict_generators(int n, const std::vector<Monomial>& gens,
                                                          const std::vector<int>& subset);

}  // namespace syzygy
