#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "syzygy/monomial.hpp"

namespace syzygy {

// e_I g_j with I a sorted subset of crit(g_j); homological degree |I|
struct BasisElement {
    std::vector<int> I;  // ascending 1-based variable indices
    int j = 0;           // 0-based generator index
    auto operator<=>(const BasisElement&) const = default;
};

// e_I x^alpha g_j, a basis vertex of the ambient two-sided Koszul complex;
// I is arbitrary, supp(alpha) lies in ncrit(g_j)
struct AmbientElement {
    std::vector<int> I;
    Monomial alpha;
    int j = 0;
    auto operator<=>(const AmbientElement&) const = default;
};

// (-1)^{#{j in I : j < i}}
int sgn(int i, const std::vector<int>& I);

std::vector<int> set_insert(const std::vector<int>& I, int i);
std::vector<int> set_erase(const std::vector<int>& I, int i);

// Finite sum of coeff * monomial * key terms with exact integer coefficients;
// merging cancels exactly and zero terms are never stored.
template <class Key>
class Chain {
public:
    using Term = std::pair<Monomial, Key>;
    using Map = std::map<Term, mpz_class>;

    void add(const mpz_class& c, const Monomial& m, const Key& k) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace({m, k}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // this += scale_coeff * scale_mono * other
    void add_scaled(const Chain& other, const mpz_class& scale_coeff, const Monomial& scale_mono) {
        for (const auto& [tm, c] : other.terms_)
            add(c * scale_coeff, mul(scale_mono, tm.first), tm.second);
    }

    void add_chain(const Chain& other, const mpz_class& scale_coeff = 1) {
        for (const auto& [tm, c] : other.terms_) add(c * scale_coeff, tm.first, tm.second);
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    bool operator==(const Chain& other) const = default;

private:
    Map terms_;
};

using ResChain = Chain<BasisElement>;
using AmbChain = Chain<AmbientElement>;

}  // namespace syzygy
