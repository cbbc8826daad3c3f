#include "syzygy/strand.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace syzygy {

int rank_bareiss(std::vector<std::vector<mpz_class>> a) {
    const int m = static_cast<int>(a.size());
    if (m == 0) return 0;
    const int n = static_cast<int>(a[0].size());
    int rank = 0;
    mpz_class prev = 1;
    while (rank < m && rank < n) {
        int pi = -1, pj = -1;
        for (int i = rank; i < m && pi < 0; ++i)
            for (int j = rank; j < n; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(a[pi], a[rank]);
        if (pj != rank)
            for (int i = 0; i < m; ++i) std::swap(a[i][pj], a[i][rank]);
        for (int i = rank + 1; i < m; ++i)
            for (int j = rank + 1; j < n; ++j) {
                a[i][j] = a[rank][rank] * a[i][j] - a[i][rank] * a[rank][j];
                // Bareiss: division by the previous pivot is exact
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[rank][rank];
        ++rank;
    }
    return rank;
}

namespace {

// multidegrees and integer matrices of the whole complex, computed once;
// every strand is a row/column selection of these
struct StrandData {
    const Resolution* res;
    int levels = 0;
    std::vector<std::vector<Monomial>> mdeg;  // [p][k]
    struct Trip {
        int row, col;
        mpz_class c;
    };
    std::vector<std::vector<Trip>> trips;  // [p], map G_p -> G_{p-1}, p >= 1
};

StrandData build_strand_data(const Resolution& r) {
    StrandData d;
    d.res = &r;
    d.levels = r.length();
    d.mdeg.resize(d.levels + 1);
    std::vector<std::map<BasisElement, int>> index(d.levels + 1);
    for (int p = 0; p <= d.levels; ++p) {
        const auto& level = r.basis[p];
        d.mdeg[p].reserve(level.size());
        for (int k = 0; k < static_cast<int>(level.size()); ++k) {
            d.mdeg[p].push_back(multidegree(r.pres, level[k]));
            index[p].emplace(level[k], k);
        }
    }
    d.trips.resize(d.levels + 1);
    for (int p = 1; p <= d.levels; ++p) {
        for (int k = 0; k < static_cast<int>(r.basis[p].size()); ++k) {
            const ResChain& db = r.diff.at(r.basis[p][k]);
            for (const auto& [term, coeff] : db.terms())
                d.trips[p].push_back({index[p - 1].at(term.second), k, coeff});
        }
    }
    return d;
}

struct KernelResult {
    std::vector<int> dims, ranks;
    bool exact = true;
    int fail_position = 0;
};

// incl[p][k]: basis element k of homological degree p lies in the strand
KernelResult strand_kernel(const StrandData& d, const std::vector<std::vector<char>>& incl,
                           bool alpha_in_ideal) {
    KernelResult out;
    out.dims.assign(d.levels + 1, 0);
    out.ranks.assign(d.levels + 1, 0);
    std::vector<std::vector<int>> pos(d.levels + 1);  // dense index within the strand
    for (int p = 0; p <= d.levels; ++p) {
        pos[p].assign(incl[p].size(), -1);
        for (size_t k = 0; k < incl[p].size(); ++k)
            if (incl[p][k]) pos[p][k] = out.dims[p]++;
    }
    // augmentation G_0 -> S_alpha sends every included generator to x^alpha
    out.ranks[0] = out.dims[0] > 0 ? 1 : 0;
    for (int p = 1; p <= d.levels; ++p) {
        if (out.dims[p] == 0 || out.dims[p - 1] == 0) continue;
        std::vector<std::vector<mpz_class>> mat(out.dims[p - 1],
                                                std::vector<mpz_class>(out.dims[p]));
        for (const auto& t : d.trips[p])
            if (incl[p][t.col] && incl[p - 1][t.row]) mat[pos[p - 1][t.row]][pos[p][t.col]] += t.c;
        out.ranks[p] = rank_bareiss(std::move(mat));
    }
    auto fail = [&out](int position) {
        if (out.exact) {
            out.exact = false;
            out.fail_position = position;
        }
    };
    if ((out.ranks[0] == 1) != alpha_in_ideal) fail(-1);
    for (int p = 0; p <= d.levels; ++p) {
        const int above = p + 1 <= d.levels ? out.ranks[p + 1] : 0;
        if (out.dims[p] != out.ranks[p] + above) fail(p);
    }
    return out;
}

bool monomial_in_ideal(const Presentation& p, const Monomial& alpha) {
    for (const Monomial& g : p.gens)
        if (g.divides(alpha)) return true;
    return false;
}

std::vector<std::vector<char>> inclusion_masks(const StrandData& d, const Monomial& alpha) {
    std::vector<std::vector<char>> incl(d.levels + 1);
    for (int p = 0; p <= d.levels; ++p) {
        incl[p].resize(d.mdeg[p].size());
        for (size_t k = 0; k < d.mdeg[p].size(); ++k)
            incl[p][k] = d.mdeg[p][k].divides(alpha) ? 1 : 0;
    }
    return incl;
}

StrandCheck make_check(const Monomial& alpha, const KernelResult& k) {
    return StrandCheck{alpha, k.dims, k.ranks, k.exact, k.fail_position};
}

std::string describe_failure(const StrandCheck& c) {
    std::ostringstream os;
    os << "strand alpha=" << to_string(c.alpha) << " inexact at position " << c.fail_position
       << " (dims";
    for (int v : c.dims) os << ' ' << v;
    os << ", ranks";
    for (int v : c.ranks) os << ' ' << v;
    os << ")";
    return os.str();
}

StrandReport finish_report(std::vector<StrandCheck> checks) {
    StrandReport rep;
    rep.checks = std::move(checks);
    for (const StrandCheck& c : rep.checks)
        if (!c.exact) {
            rep.ok = false;
            rep.witness = describe_failure(c);
            break;
        }
    return rep;
}

}  // namespace

std::vector<Monomial> multidegrees_below(const Monomial& bound) {
    const int n = bound.nvars();
    std::vector<Monomial> out;
    Monomial cur = Monomial::one(n);
    // odometer over exponent vectors <= bound
    while (true) {
        out.push_back(cur);
        int i = n;
        while (i >= 1 && cur.exp(i) == bound.exp(i)) {
            cur.set_exp(i, 0);
            --i;
        }
        if (i == 0) break;
        cur.set_exp(i, cur.exp(i) + 1);
    }
    return out;
}

Monomial basis_mdeg_bound(const Resolution& r) {
    Monomial bound = Monomial::one(r.pres.n);
    for (const auto& level : r.basis)
        for (const BasisElement& b : level) bound = lcm(bound, multidegree(r.pres, b));
    return bound;
}

StrandReport strand_exactness_multi(const Resolution& r, const std::vector<Monomial>& alphas) {
    const StrandData d = build_strand_data(r);
    std::vector<StrandCheck> checks;
    checks.reserve(alphas.size());
    for (const Monomial& alpha : alphas) {
        const auto incl = inclusion_masks(d, alpha);
        checks.push_back(make_check(alpha, strand_kernel(d, incl, monomial_in_ideal(r.pres, alpha))));
    }
    return finish_report(std::move(checks));
}

StrandReport strand_exactness_multi_parallel(const Resolution& r,
                                             const std::vector<Monomial>& alphas) {
    const StrandData d = build_strand_data(r);
    // distinct strands only: the kernel result depends on the inclusion masks alone
    using Key = std::pair<std::vector<std::vector<char>>, bool>;
    std::map<Key, int> slot_of;
    std::vector<const Key*> keys;
    std::vector<int> slot(alphas.size());
    for (size_t i = 0; i < alphas.size(); ++i) {
        Key key{inclusion_masks(d, alphas[i]), monomial_in_ideal(r.pres, alphas[i])};
        auto [it, inserted] = slot_of.emplace(std::move(key), static_cast<int>(keys.size()));
        if (inserted) keys.push_back(&it->first);
        slot[i] = it->second;
    }
    std::vector<KernelResult> results(keys.size());
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < static_cast<int>(keys.size()); ++t)
        results[t] = strand_kernel(d, keys[t]->first, keys[t]->second);
    std::vector<StrandCheck> checks;
    checks.reserve(alphas.size());
    for (size_t i = 0; i < alphas.size(); ++i)
        checks.push_back(make_check(alphas[i], results[slot[i]]));
    return finish_report(std::move(checks));
}

StrandReport strand_exactness_oracle(const Resolution& r, const Monomial& bound) {
    return strand_exactness_multi(r, multidegrees_below(bound));
}

StrandReport strand_exactness_oracle_parallel(const Resolution& r, const Monomial& bound) {
    return strand_exactness_multi_parallel(r, multidegrees_below(bound));
}

}  // namespace syzygy
