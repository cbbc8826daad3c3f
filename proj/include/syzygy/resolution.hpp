#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "syzygy/chain.hpp"
#include "syzygy/presentation.hpp"

namespace syzygy {

struct NotCritMonotone : std::runtime_error {
    int gen, var;
    NotCritMonotone(int g, int v);
};

struct RecursionLimitExceeded : std::runtime_error {
    explicit RecursionLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

enum class Mode { ek, generic };

struct Resolution {
    Presentation pres;
    std::vector<std::vector<BasisElement>> basis;    // basis[p]: homological degree p = |I|
    std::map<BasisElement, ResChain> diff;           // stored for |I| >= 1
    Mode mode = Mode::ek;

    int length() const { return static_cast<int>(basis.size()) - 1; }
};

// All e_I g_j with I inside crit(g_j), grouped by |I|.
std::vector<std::vector<BasisElement>> enumerate_basis(const Presentation& p);

// Alternating sum over i in I of x_i e_{I\i} g_j minus the normal-form image,
// the latter kept only when I\i still lies in crit of the target generator.
// Requires a crit-monotone presentation.
ResChain ek_differential(const Presentation& p, const BasisElement& b);

// Differential of the ambient complex; the Term monomial carries the ring
// coefficient, separate from the cofactor stored inside the AmbientElement.
AmbChain ambient_differential(const Presentation& p, const AmbientElement& v);

// The recursive splitting map of the Morse matching, extended ring-linearly;
// memoized per ambient vertex.
class Phi {
public:
    explicit Phi(const Presentation& p);
    AmbChain operator()(const AmbChain& c);
    AmbChain vertex(const AmbientElement& v);
    const Presentation& pres() const { return p_; }

private:
    AmbChain eval(const AmbientElement& v, int depth);
    AmbChain eval(const AmbChain& c, int depth);
    const Presentation& p_;
    std::map<AmbientElement, AmbChain> memo_;
    int depth_limit_;
};

// pi(d - d phi d) restricted to the resolution basis; works for any
// linear-quotient presentation.
ResChain generic_differential(const Presentation& p, const BasisElement& b);
ResChain generic_differential(Phi& phi, const BasisElement& b);

Resolution build_resolution(const Presentation& p, Mode mode);

// ambient degree of e_I g_j as an exponent vector: sum of e_i over I plus the
// exponents of gens[j]
Monomial multidegree(const Presentation& p, const BasisElement& b);

std::vector<int> betti(const Resolution& r);
int pdim(const Presentation& p);
// the degree-spread invariant: max generator degree - min generator degree
int reg_spread(const Presentation& p);

// first composite d(d(b)) that fails to vanish, or the augmentation composite
// for |I| = 1 terms (sum of coeff * monomial * gens[j] over degree-1 images)
struct DSquaredFailure {
    BasisElement at;
    std::string detail;
};
std::optional<DSquaredFailure> verify_d_squared(const Resolution& r);

// a stored coefficient monomial of degree 0 violates minimality
struct MinimalityFailure {
    BasisElement at;
    std::string detail;
};
std::optional<MinimalityFailure> verify_minimality(const Resolution& r);

std::string format_basis(const BasisElement& b);
std::string format_chain(const ResChain& c);

}  // namespace syzygy
