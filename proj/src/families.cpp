#include "syzygy/families.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace syzygy {

static std::string subset_str(const std::vector<int>& s) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << '}';
    return out.str();
}

ExchangeFailure::ExchangeFailure(std::vector<int> a, std::vector<int> b, int xx)
    : std::runtime_error("exchange axiom fails for " + subset_str(a) + ", " + subset_str(b) +
                         " at element " + std::to_string(xx)),
      b1(std::move(a)),
      b2(std::move(b)),
      x(xx) {}

NotStable::NotStable(Monomial m, int v)
    : std::runtime_error("not stable: x" + std::to_string(v) + " * " + to_string(m) + " / x" +
                         std::to_string(m.max_support()) + " escapes the ideal"),
      u(std::move(m)),
      var(v) {}

Matroid validate_matroid(int ground_size, std::vector<std::vector<int>> bases) {
    if (bases.empty()) throw std::invalid_argument("matroid needs at least one basis");
    std::set<std::vector<int>> seen;
    for (auto& b : bases) {
        std::sort(b.begin(), b.end());
        if (b.empty()) throw std::invalid_argument("empty basis");
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw std::invalid_argument("repeated element in basis " + subset_str(b));
        if (b.front() < 1 || b.back() > ground_size)
            throw std::invalid_argument("basis element outside 1.." + std::to_string(ground_size));
        if (b.size() != bases.front().size())
            throw std::invalid_argument("bases of unequal cardinality");
        if (!seen.insert(b).second) throw std::invalid_argument("duplicate basis " + subset_str(b));
    }
    for (const auto& b1 : bases) {
        for (const auto& b2 : bases) {
            for (int x : b1) {
                if (std::binary_search(b2.begin(), b2.end(), x)) continue;
                bool swapped = false;
                for (int y : b2) {
                    if (std::binary_search(b1.begin(), b1.end(), y)) continue;
                    std::vector<int> cand;
                    for (int e : b1)
                        if (e != x) cand.push_back(e);
                    cand.push_back(y);
                    std::sort(cand.begin(), cand.end());
                    if (seen.count(cand)) { swapped = true; break; }
                }
                if (!swapped) throw ExchangeFailure(b1, b2, x);
            }
        }
    }
    Matroid m;
    m.ground_size = ground_size;
    m.bases = std::move(bases);
    return m;
}

Presentation matroidal_presentation(const Matroid& m) {
    std::vector<Monomial> gens;
    for (const auto& b : m.bases) {
        Monomial g(m.ground_size);
        for (int v : b) g.set_exp(v, 1);
        gens.push_back(std::move(g));
    }
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return compare_lex(a, b) > 0; });
    return verify_linear_quotients(m.ground_size, gens);
}

static bool in_ideal(const std::vector<Monomial>& gens, const Monomial& w) {
    for (const auto& g : gens)
        if (g.divides(w)) return true;
    return false;
}

Presentation validate_stable(int n, std::vector<Monomial> generators) {
    for (const auto& u : generators) {
        int mx = u.max_support();
        for (int j = 1; j < mx; ++j) {
            Monomial v = mul_var(divide_var(u, mx), j);
            if (!in_ideal(generators, v)) throw NotStable(u, j);
        }
    }
    std::sort(generators.begin(), generators.end(),
              [](const Monomial& a, const Monomial& b) { return compare_lex(a, b) > 0; });
    return verify_linear_quotients(n, generators);
}

Matroid fano() {
    const std::set<std::vector<int>> non_bases = {
        {1, 2, 3}, {1, 4, 7}, {1, 5, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 5}, {3, 6, 7}};
    std::vector<std::vector<int>> bases;
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            for (int c = b + 1; c <= 7; ++c)
                if (!non_bases.count({a, b, c})) bases.push_back({a, b, c});
    return validate_matroid(7, std::move(bases));
}

static void subsets_rec(int next, int n, int left, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = next; v <= n - left + 1; ++v) {
        cur.push_back(v);
        subsets_rec(v + 1, n, left - 1, cur, out);
        cur.pop_back();
    }
}

Matroid uniform_matroid(int r, int n) {
    if (r < 1 || r > n) throw std::invalid_argument("uniform matroid needs 1 <= r <= n");
    std::vector<std::vector<int>> bases;
    std::vector<int> cur;
    subsets_rec(1, n, r, cur, bases);
    return validate_matroid(n, std::move(bases));
}

Matroid restrict_matroid(const Matroid& m, const std::vector<int>& subset) {
    std::vector<int> vars(subset);
    std::sort(vars.begin(), vars.end());
    std::vector<int> pos(m.ground_size + 1, 0);
    int k = 0;
    for (int v : vars) {
        if (v < 1 || v > m.ground_size) throw std::invalid_argument("restriction element outside ground set");
        if (pos[v]) throw std::invalid_argument("duplicate restriction element");
        pos[v] = ++k;
    }
    std::vector<std::vector<int>> bases;
    for (const auto& b : m.bases) {
        std::vector<int> nb;
        for (int v : b) {
            if (!pos[v]) break;
            nb.push_back(pos[v]);
        }
        if (nb.size() == b.size()) bases.push_back(std::move(nb));
    }
    if (bases.empty()) throw std::invalid_argument("restriction contains no basis");
    return validate_matroid(k, std::move(bases));
}

bool is_stable_presentation(const Presentation& p) {
    for (const auto& u : p.gens) {
        int mx = u.max_support();
        for (int j = 1; j < mx; ++j)
            if (!in_ideal(p.gens, mul_var(divide_var(u, mx), j))) return false;
    }
    return true;
}

bool is_matroidal_presentation(const Presentation& p) {
    if (p.gens.empty()) return false;
    std::set<std::vector<int>> bases;
    size_t card = p.gens.front().support().size();
    for (const auto& g : p.gens) {
        auto s = g.support();
        if (g.deg() != static_cast<int>(s.size())) return false;  // not squarefree
        if (s.size() != card) return false;
        bases.insert(s);
    }
    for (const auto& b1 : bases) {
        for (const auto& b2 : bases) {
            for (int x : b1) {
                if (std::binary_search(b2.begin(), b2.end(), x)) continue;
                bool swapped = false;
                for (int y : b2) {
                    if (std::binary_search(b1.begin(), b1.end(), y)) continue;
                    std::vector<int> cand;
                    for (int e : b1)
                        if (e != x) cand.push_back(e);
                    cand.push_back(y);
                    std::sort(cand.begin(), cand.end());
                    if (bases.count(cand)) { swapped = true; break; }
                }
                if (!swapped) return false;
            }
        }
    }
    return true;
}

std::vector<Monomial> random_stable_ideal(int n, int maxdeg, int seeds, std::mt19937& rng) {
    std::uniform_int_distribution<int> degree(1, maxdeg);
    std::uniform_int_distribution<int> variable(1, n);
    std::set<Monomial> members;
    std::queue<Monomial> work;
    for (int s = 0; s < seeds; ++s) {
        Monomial m(n);
        int d = degree(rng);
        for (int t = 0; t < d; ++t) m = mul_var(m, variable(rng));
        if (members.insert(m).second) work.push(m);
    }
    // close under the stability moves; each move is lex-increasing at fixed
    // degree, so the closure terminates
    while (!work.empty()) {
        Monomial u = work.front();
        work.pop();
        int mx = u.max_support();
        for (int j = 1; j < mx; ++j) {
            Monomial v = mul_var(divide_var(u, mx), j);
            bool covered = false;
            for (const auto& m : members)
                if (m.divides(v)) { covered = true; break; }
            if (!covered && members.insert(v).second) work.push(v);
        }
    }
    std::vector<Monomial> out;
    for (const auto& m : members) {
        bool redundant = false;
        for (const auto& d : members)
            if (d != m && d.divides(m)) { redundant = true; break; }
        if (!redundant) out.push_back(m);
    }
    return out;
}

}  // namespace syzygy
