#pragma once

#include <compare>
#include <string>
#include <vector>

namespace syzygy {

// Variables are indexed 1..n throughout; n is carried by each monomial as the
// length of its exponent vector.
struct VariableSet {
    int n = 0;
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int n) : e_(n, 0) {}
    explicit Monomial(std::vector<int> exps);

    static Monomial one(int n) { return Monomial(n); }
    static Monomial var(int n, int i);

    int nvars() const { return static_cast<int>(e_.size()); }
    int deg() const;
    bool is_one() const;

    // exponent of x_i, i in 1..n
    int exp(int i) const { return e_[i - 1]; }
    void set_exp(int i, int v);

    const std::vector<int>& exponents() const { return e_; }

    std::vector<int> support() const;      // ascending 1-based indices
    int min_support() const;               // 0 when the monomial is 1
    int max_support() const;               // 0 when the monomial is 1

    bool divides(const Monomial& m) const;

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<int> e_;
};

Monomial mul(const Monomial& a, const Monomial& b);
Monomial mul_var(const Monomial& a, int i);
// a / b; requires b | a
Monomial divide(const Monomial& a, const Monomial& b);
Monomial divide_var(const Monomial& a, int i);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// lex with x1 > x2 > ... > xn; returns -1, 0, +1 for a < b, a = b, a > b
int compare_lex(const Monomial& a, const Monomial& b);
// reverse lex on same-degree monomials (a > b iff the last nonzero entry of
// a - b is negative); returns -1, 0, +1
int compare_revlex(const Monomial& a, const Monomial& b);

enum class Tiebreak { lex, revlex };

// the position-over-term order on free-module terms: generator position
// first, monomial tie-break second
struct GeneratorOrderTag {
    std::vector<int> ordering;  // permutation of 1..#generators
    Tiebreak tiebreak = Tiebreak::lex;
};

// text grammar: "1", or "x<i>[^<e>]" factors joined by "*", e.g. "x1*x2^2*x4"
std::string to_string(const Monomial& m);
Monomial parse_monomial(const std::string& text, int n);

// all monomials in n variables of total degree exactly d whose support lies in
// vars (ascending 1-based list)
std::vector<Monomial> monomials_of_degree(int n, int d, const std::vector<int>& vars);
std::vector<Monomial> monomials_of_degree(int n, int d);
std::vector<Monomial> monomials_up_to_degree(int n, int maxdeg);

}  // namespace syzygy
