#pragma once

#include "syzygy/homotopy.hpp"

namespace syzygy {

// degree of a basis element inside the augmented complex: |I| + 1
inline int aug_degree(const BasisElement& b) { return static_cast<int>(b.I.size()) + 1; }

// Multiplication on the augmented resolution, transferred through the
// contracting homotopy: products of basis elements are memoized and extended
// bilinearly over the ring.
class ProductTable {
public:
    explicit ProductTable(const Resolution& r);
    const Resolution& resolution() const { return r_; }

    // product of two basis elements of positive degree
    const AugmentedChain& basis_product(const BasisElement& a, const BasisElement& b);
    AugmentedChain multiply(const AugmentedChain& x, const AugmentedChain& y);

    // precompute every pair of basis elements
    void fill();

    // differential of a single basis element, as an augmented chain
    AugmentedChain d_of(const BasisElement& b) const;

private:
    AugmentedChain aug_of(const BasisElement& b) const;
    const Resolution& r_;
    std::map<std::pair<BasisElement, BasisElement>, AugmentedChain> memo_;
};

struct DgaCheck {
    bool ok = true;
    long checked = 0;
    std::string witness;
};

struct DgaReport {
    DgaCheck leibniz;        // d(a*b) = da*b + (-1)^deg(a) a*db
    DgaCheck commutativity;  // a*b = (-1)^{deg(a)deg(b)} b*a
    DgaCheck unit;           // 1*a = a*1 = a
    DgaCheck associativity;  // (a*b)*c = a*(b*c), triples within the top degree
    DgaCheck closure;        // products land in the image shape of the homotopy
                             // with critical support inside both factors'
    bool family_warning = false;  // input is neither stable nor squarefree matroidal
    bool ok() const {
        return leibniz.ok && commutativity.ok && unit.ok && associativity.ok && closure.ok;
    }
};

DgaReport verify_dga(const Resolution& r, bool parallel = false);

// one line per ordered pair of basis elements; zero products are annotated
// "(degree)" when the total degree already exceeds the top of the resolution
std::string product_table_text(ProductTable& t);

}  // namespace syzygy
