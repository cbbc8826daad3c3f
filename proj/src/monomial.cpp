#include "syzygy/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace syzygy {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int v : e_)
        if (v < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::var(int n, int i) {
    Monomial m(n);
    m.set_exp(i, 1);
    return m;
}

int Monomial::deg() const {
    int d = 0;
    for (int v : e_) d += v;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

void Monomial::set_exp(int i, int v) {
    if (v < 0) throw std::invalid_argument("negative exponent");
    e_[i - 1] = v;
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < nvars(); ++i)
        if (e_[i] > 0) s.push_back(i + 1);
    return s;
}

int Monomial::min_support() const {
    for (int i = 0; i < nvars(); ++i)
        if (e_[i] > 0) return i + 1;
    return 0;
}

int Monomial::max_support() const {
    for (int i = nvars() - 1; i >= 0; --i)
        if (e_[i] > 0) return i + 1;
    return 0;
}

bool Monomial::divides(const Monomial& m) const {
    if (nvars() != m.nvars()) throw std::invalid_argument("mismatched variable sets");
    for (int i = 0; i < nvars(); ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

static void check_same_vars(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mismatched variable sets");
}

Monomial mul(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    std::vector<int> e(a.exponents());
    for (int i = 0; i < b.nvars(); ++i) e[i] += b.exponents()[i];
    return Monomial(std::move(e));
}

Monomial mul_var(const Monomial& a, int i) {
    std::vector<int> e(a.exponents());
    e[i - 1] += 1;
    return Monomial(std::move(e));
}

Monomial divide(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    if (!b.divides(a)) throw std::invalid_argument("non-divisible: " + to_string(b) + " does not divide " + to_string(a));
    std::vector<int> e(a.exponents());
    for (int i = 0; i < b.nvars(); ++i) e[i] -= b.exponents()[i];
    return Monomial(std::move(e));
}

Monomial divide_var(const Monomial& a, int i) {
    if (a.exp(i) == 0) throw std::invalid_argument("non-divisible variable");
    std::vector<int> e(a.exponents());
    e[i - 1] -= 1;
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    std::vector<int> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(a.exponents()[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    std::vector<int> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::min(a.exponents()[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

int compare_lex(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    for (int i = 0; i < a.nvars(); ++i) {
        if (a.exponents()[i] != b.exponents()[i])
            return a.exponents()[i] > b.exponents()[i] ? 1 : -1;
    }
    return 0;
}

int compare_revlex(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (a.exponents()[i] != b.exponents()[i])
            return a.exponents()[i] < b.exponents()[i] ? 1 : -1;
    }
    return 0;
}

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 1; i <= m.nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!first) out << '*';
        first = false;
        out << 'x' << i;
        if (m.exp(i) > 1) out << '^' << m.exp(i);
    }
    return out.str();
}

Monomial parse_monomial(const std::string& text, int n) {
    if (text == "1") return Monomial::one(n);
    Monomial m(n);
    size_t pos = 0;
    while (true) {
        if (pos >= text.size() || text[pos] != 'x')
            throw std::invalid_argument("bad monomial '" + text + "': expected 'x' at position " + std::to_string(pos));
        ++pos;
        size_t start = pos;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("bad monomial '" + text + "': missing variable index");
        int idx = std::stoi(text.substr(start, pos - start));
        if (idx < 1 || idx > n)
            throw std::invalid_argument("bad monomial '" + text + "': variable x" + std::to_string(idx) + " outside 1.." + std::to_string(n));
        int exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            start = pos;
            while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw std::invalid_argument("bad monomial '" + text + "': missing exponent");
            exp = std::stoi(text.substr(start, pos - start));
            if (exp < 1) throw std::invalid_argument("bad monomial '" + text + "': exponent must be positive");
        }
        m.set_exp(idx, m.exp(idx) + exp);
        if (pos == text.size()) break;
        if (text[pos] != '*')
            throw std::invalid_argument("bad monomial '" + text + "': expected '*' at position " + std::to_string(pos));
        ++pos;
    }
    return m;
}

static void enum_rec(int d, size_t vi, const std::vector<int>& vars, Monomial& cur,
                     std::vector<Monomial>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    if (vi == vars.size()) return;
    // last allowed variable absorbs the remainder; otherwise branch on its power
    for (int k = 0; k <= d; ++k) {
        if (vi + 1 == vars.size() && k != d) continue;
        cur.set_exp(vars[vi], k);
        enum_rec(d - k, vi + 1, vars, cur, out);
        cur.set_exp(vars[vi], 0);
    }
}

std::vector<Monomial> monomials_of_degree(int n, int d, const std::vector<int>& vars) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    if (d == 0) {
        out.push_back(Monomial::one(n));
        return out;
    }
    Monomial cur(n);
    enum_rec(d, 0, vars, cur, out);
    return out;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i + 1;
    return monomials_of_degree(n, d, vars);
}

std::vector<Monomial> monomials_up_to_degree(int n, int maxdeg) {
    std::vector<Monomial> out;
    for (int d = 0; d <= maxdeg; ++d) {
        auto batch = monomials_of_degree(n, d);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace syzygy
