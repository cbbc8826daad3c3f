#include "syzygy/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>

namespace syzygy {

NotMinimal::NotMinimal(int d, int m)
    : std::runtime_error("generator " + std::to_string(d + 1) + " divides generator " + std::to_string(m + 1)),
      divisor(d),
      multiple(m) {}

NotLinearQuotients::NotLinearQuotients(int g, int w)
    : std::runtime_error("colon ideal at generator " + std::to_string(g + 1) +
                         " is not variable-generated (cofactor from generator " + std::to_string(w + 1) + ")"),
      gen(g),
      witness(w) {}

bool Presentation::crit_contains(int j, int v) const {
    return std::binary_search(crit[j].begin(), crit[j].end(), v);
}

int Presentation::max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens) d = std::max(d, g.deg());
    return d;
}

int Presentation::min_gen_degree() const {
    if (gens.empty()) return 0;
    int d = gens[0].deg();
    for (const auto& g : gens) d = std::min(d, g.deg());
    return d;
}

Presentation verify_linear_quotients(int n, const std::vector<Monomial>& ordered_generators) {
    const auto& g = ordered_generators;
    for (size_t a = 0; a < g.size(); ++a) {
        for (size_t b = 0; b < g.size(); ++b) {
            if (a == b) continue;
            if (g[a].divides(g[b]))
                throw NotMinimal(static_cast<int>(a), static_cast<int>(b));
        }
    }

    Presentation p;
    p.n = n;
    p.gens = g;
    p.crit.resize(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        std::vector<Monomial> cofactors;
        std::set<int> vars;
        for (size_t k = 0; k < i; ++k) {
            Monomial c = divide(g[k], gcd(g[k], g[i]));
            if (c.deg() == 1) vars.insert(c.min_support());
            cofactors.push_back(std::move(c));
        }
        for (size_t k = 0; k < i; ++k) {
            bool covered = false;
            for (int t : vars)
                if (cofactors[k].exp(t) > 0) { covered = true; break; }
            if (!covered)
                throw NotLinearQuotients(static_cast<int>(i), static_cast<int>(k));
        }
        p.crit[i].assign(vars.begin(), vars.end());
    }
    return p;
}

std::optional<NormalTerm> normal_form(const Presentation& p, const Monomial& w) {
    std::optional<NormalTerm> found;
    for (int j = 0; j < p.r(); ++j) {
        if (!p.gens[j].divides(w)) continue;
        Monomial cof = divide(w, p.gens[j]);
        bool irreducible = true;
        for (int t : p.crit[j])
            if (cof.exp(t) > 0) { irreducible = false; break; }
        if (!irreducible) continue;
        if (found)
            throw InternalNonUnique("two irreducible representations of " + to_string(w) +
                                    ": generators " + std::to_string(found->gen + 1) + " and " +
                                    std::to_string(j + 1));
        found = NormalTerm{std::move(cof), j};
    }
    return found;
}

NormalTerm nf_step(const Presentation& p, int i, int j) {
    auto nt = normal_form(p, mul_var(p.gens[j], i));
    assert(nt.has_value());
    return *nt;
}

CritMonotoneResult is_crit_monotone(const Presentation& p) {
    for (int j = 0; j < p.r(); ++j) {
        for (int i : p.crit[j]) {
            NormalTerm nt = nf_step(p, i, j);
            if (!std::includes(p.crit[j].begin(), p.crit[j].end(),
                               p.crit[nt.gen].begin(), p.crit[nt.gen].end()))
                return {false, j, i};
        }
    }
    return {};
}

Presentation component_presentation(const Presentation& p, int d) {
    struct Pair {
        int j;
        Monomial beta;
    };
    std::vector<Pair> pairs;
    for (int j = 0; j < p.r(); ++j) {
        int dd = d - p.deg(j);
        if (dd < 0) continue;
        std::vector<int> ncrit_vars;
        for (int v = 1; v <= p.n; ++v)
            if (p.is_ncrit(j, v)) ncrit_vars.push_back(v);
        for (auto& beta : monomials_of_degree(p.n, dd, ncrit_vars))
            pairs.push_back({j, std::move(beta)});
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.j != b.j) return a.j < b.j;
        return compare_revlex(a.beta, b.beta) < 0;
    });

    Presentation out;
    out.n = p.n;
    for (const auto& pr : pairs) {
        out.gens.push_back(mul(pr.beta, p.gens[pr.j]));
        std::set<int> vars(p.crit[pr.j].begin(), p.crit[pr.j].end());
        int ms = pr.beta.min_support();
        if (ms > 0)
            for (int a = ms + 1; a <= p.n; ++a) vars.insert(a);
        out.crit.emplace_back(vars.begin(), vars.end());
    }
    assert(std::set<Monomial>(out.gens.begin(), out.gens.end()).size() == out.gens.size());
    return out;
}

std::pair<int, std::vector<Monomial>> restrict_generators(int n, const std::vector<Monomial>& gens,
                                                          const std::vector<int>& subset) {
    std::vector<int> vars(subset);
    std::sort(vars.begin(), vars.end());
    std::vector<int> pos(n + 1, 0);  // old index -> new index, 0 = dropped
    int k = 0;
    for (int v : vars) {
        if (v < 1 || v > n) throw std::invalid_argument("restriction variable outside 1.." + std::to_string(n));
        if (pos[v]) throw std::invalid_argument("duplicate restriction variable");
        pos[v] = ++k;
    }
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool inside = true;
        for (int v : g.support())
            if (!pos[v]) { inside = false; break; }
        if (!inside) continue;
        Monomial m(k);
        for (int v : g.support()) m.set_exp(pos[v], g.exp(v));
        out.push_back(std::move(m));
    }
    return {k, out};
}

}  // namespace syzygy
