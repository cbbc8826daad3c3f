#pragma once

#include "syzygy/resolution.hpp"

namespace syzygy {

// Element of the augmented complex S <- G_0 <- G_1 <- ...: a ring summand
// (degree 0) plus free-module terms x^alpha e_I g_j in degree |I| + 1.
struct AugmentedChain {
    std::map<Monomial, mpz_class> s_part;
    ResChain res_part;

    void add_s(const mpz_class& c, const Monomial& m);
    void add_res(const mpz_class& c, const Monomial& m, const BasisElement& b);
    void add_chain(const AugmentedChain& other, const mpz_class& scale_coeff = 1);
    // this += scale_coeff * scale_mono * other
    void add_scaled(const AugmentedChain& other, const mpz_class& scale_coeff,
                    const Monomial& scale_mono);
    bool is_zero() const { return s_part.empty() && res_part.is_zero(); }
    bool operator==(const AugmentedChain&) const = default;
};

AugmentedChain aug_from_monomial(const Monomial& m);
AugmentedChain aug_from_basis(const BasisElement& b, int n);

// differential of the augmented complex: the stored resolution differential in
// degrees two and up, the augmentation e_{} g_j -> gens[j] in degree one, and
// zero on the ring summand
AugmentedChain differential(const Resolution& r, const AugmentedChain& x);

// wedge insertion half of the homotopy: the least splice-critical variable of
// alpha enters I when it precedes all of I
ResChain c0(const Presentation& p, const Monomial& alpha, const BasisElement& b);

// one rewriting step toward earlier generators along the quotient order;
// the result is dropped when I no longer fits the target's critical set
ResChain rho(const Presentation& p, const Monomial& alpha, const BasisElement& b);

// variables of crit(g_j) preceding min(I); all of crit(g_j) when I is empty
std::vector<int> ccrit_basis(const Presentation& p, const BasisElement& b);
// union over the terms of a chain
std::vector<int> ccrit(const Presentation& p, const ResChain& c);

// The contracting homotopy: on ring monomials, divide by the earliest dividing
// generator (zero for monomials outside the ideal); on free-module terms, sum
// c0 over the rho-rewriting chain. Requires a crit-monotone presentation.
AugmentedChain contract(const Presentation& p, const AugmentedChain& x);

// every term x^gamma e_K g_j has min((supp gamma union K) cap crit(g_j)) in K
bool in_contract_image(const Presentation& p, const ResChain& c);

struct HomotopyReport {
    bool ok = true;
    long checked = 0;
    std::string witness;
};

// Verifies d c + c d = 1 - eta (eta: projection onto ring monomials outside
// the ideal), c c = 0, and the image shape of c, over every ring monomial and
// every cofactor-times-basis element of total degree at most bound.
HomotopyReport verify_homotopy(const Resolution& r, int bound);
HomotopyReport verify_homotopy_parallel(const Resolution& r, int bound);

}  // namespace syzygy
