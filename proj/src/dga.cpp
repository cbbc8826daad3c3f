#include "syzygy/dga.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

#include "syzygy/families.hpp"

namespace syzygy {

ProductTable::ProductTable(const Resolution& r) : r_(r) {
    if (auto cm = is_crit_monotone(r.pres); !cm) throw NotCritMonotone(cm.gen, cm.var);
}

AugmentedChain ProductTable::aug_of(const BasisElement& b) const {
    return aug_from_basis(b, r_.pres.n);
}

AugmentedChain ProductTable::d_of(const BasisElement& b) const {
    AugmentedChain out;
    if (b.I.empty())
        out.add_s(1, r_.pres.gens[b.j]);
    else
        out.res_part = r_.diff.at(b);
    return out;
}

const AugmentedChain& ProductTable::basis_product(const BasisElement& a, const BasisElement& b) {
    const auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    // transfer the product through the homotopy, peeling d off each factor;
    // the inner products live in lower degree, which grounds the recursion
    const AugmentedChain left = multiply(d_of(a), aug_of(b));
    const AugmentedChain right = multiply(aug_of(a), d_of(b));
    AugmentedChain prod = contract(r_.pres, left);
    prod.add_chain(contract(r_.pres, right), aug_degree(a) % 2 == 0 ? 1 : -1);
    return memo_.emplace(key, std::move(prod)).first->second;
}

AugmentedChain ProductTable::multiply(const AugmentedChain& x, const AugmentedChain& y) {
    AugmentedChain out;
    for (const auto& [w1, c1] : x.s_part)
        for (const auto& [w2, c2] : y.s_part) out.add_s(c1 * c2, mul(w1, w2));
    for (const auto& [w, c] : x.s_part)
        for (const auto& [tm, cc] : y.res_part.terms())
            out.add_res(c * cc, mul(w, tm.first), tm.second);
    for (const auto& [w, c] : y.s_part)
        for (const auto& [tm, cc] : x.res_part.terms())
            out.add_res(c * cc, mul(w, tm.first), tm.second);
    for (const auto& [tm1, c1] : x.res_part.terms())
        for (const auto& [tm2, c2] : y.res_part.terms())
            out.add_scaled(basis_product(tm1.second, tm2.second), c1 * c2,
                           mul(tm1.first, tm2.first));
    return out;
}

void ProductTable::fill() {
    for (const auto& la : r_.basis)
        for (const BasisElement& a : la)
            for (const auto& lb : r_.basis)
                for (const BasisElement& b : lb) basis_product(a, b);
}

namespace {

std::vector<BasisElement> flatten_basis(const Resolution& r) {
    std::vector<BasisElement> all;
    for (const auto& level : r.basis) all.insert(all.end(), level.begin(), level.end());
    return all;
}

std::string pair_text(const BasisElement& a, const BasisElement& b) {
    return format_basis(a) + " * " + format_basis(b);
}

struct WitnessSlot {
    long at = std::numeric_limits<long>::max();
    std::string msg;
    void record(long idx, const std::string& m) {
#pragma omp critical(dga_witness)
        if (idx < at) {
            at = idx;
            msg = m;
        }
    }
    void finish(DgaCheck& c, long total) const {
        c.checked = total;
        if (at != std::numeric_limits<long>::max()) {
            c.ok = false;
            c.witness = msg;
        }
    }
};

}  // namespace

DgaReport verify_dga(const Resolution& r, bool parallel) {
    ProductTable table(r);
    table.fill();
    const Presentation& p = r.pres;
    const std::vector<BasisElement> all = flatten_basis(r);
    const long t = static_cast<long>(all.size());
    const int top = r.length() + 1;

    DgaReport rep;
    rep.family_warning = !(is_stable_presentation(p) || is_matroidal_presentation(p));

    {  // Leibniz, commutativity, and closure over all ordered pairs
        WitnessSlot leib, comm, clos;
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long idx = 0; idx < t * t; ++idx) {
            const BasisElement& a = all[idx / t];
            const BasisElement& b = all[idx % t];
            const int m = aug_degree(a), n = aug_degree(b);
            const AugmentedChain& prod = table.basis_product(a, b);

            AugmentedChain lhs = differential(r, prod);
            AugmentedChain rhs = table.multiply(table.d_of(a), aug_from_basis(b, p.n));
            rhs.add_chain(table.multiply(aug_from_basis(a, p.n), table.d_of(b)),
                          m % 2 == 0 ? 1 : -1);
            if (!(lhs == rhs))
                leib.record(idx, "Leibniz fails at " + pair_text(a, b));

            const AugmentedChain& flip = table.basis_product(b, a);
            AugmentedChain signed_flip;
            signed_flip.add_chain(flip, (m * n) % 2 == 0 ? 1 : -1);
            if (!(prod == signed_flip))
                comm.record(idx, "graded commutativity fails at " + pair_text(a, b));

            bool ok = in_contract_image(p, prod.res_part);
            if (ok) {
                const auto ca = ccrit_basis(p, a), cb = ccrit_basis(p, b);
                std::vector<int> meet;
                std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                                      std::back_inserter(meet));
                const auto cp = ccrit(p, prod.res_part);
                ok = std::includes(meet.begin(), meet.end(), cp.begin(), cp.end());
            }
            if (!ok) clos.record(idx, "closure fails at " + pair_text(a, b));
        }
        leib.finish(rep.leibniz, t * t);
        comm.finish(rep.commutativity, t * t);
        clos.finish(rep.closure, t * t);
    }

    {  // unit acts as identity
        WitnessSlot unit;
        const AugmentedChain one = aug_from_monomial(Monomial::one(p.n));
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long idx = 0; idx < t; ++idx) {
            const AugmentedChain x = aug_from_basis(all[idx], p.n);
            if (!(table.multiply(one, x) == x) || !(table.multiply(x, one) == x))
                unit.record(idx, "unit fails at " + format_basis(all[idx]));
        }
        unit.finish(rep.unit, t);
    }

    {  // associativity on triples fitting under the top degree
        std::vector<std::array<long, 3>> triples;
        for (long i = 0; i < t; ++i)
            for (long j = 0; j < t; ++j)
                for (long k = 0; k < t; ++k)
                    if (aug_degree(all[i]) + aug_degree(all[j]) + aug_degree(all[k]) <= top)
                        triples.push_back({i, j, k});
        WitnessSlot assoc;
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long idx = 0; idx < static_cast<long>(triples.size()); ++idx) {
            const BasisElement& a = all[triples[idx][0]];
            const BasisElement& b = all[triples[idx][1]];
            const BasisElement& c = all[triples[idx][2]];
            const AugmentedChain lhs =
                table.multiply(table.basis_product(a, b), aug_from_basis(c, p.n));
            const AugmentedChain rhs =
                table.multiply(aug_from_basis(a, p.n), table.basis_product(b, c));
            if (!(lhs == rhs))
                assoc.record(idx, "associativity fails at " + format_basis(a) + " * " +
                                      format_basis(b) + " * " + format_basis(c));
        }
        assoc.finish(rep.associativity, static_cast<long>(triples.size()));
    }

    return rep;
}

std::string product_table_text(ProductTable& t) {
    const Resolution& r = t.resolution();
    const std::vector<BasisElement> all = flatten_basis(r);
    const int top = r.length() + 1;
    std::ostringstream os;
    for (const BasisElement& a : all)
        for (const BasisElement& b : all) {
            const AugmentedChain& prod = t.basis_product(a, b);
            os << pair_text(a, b) << " = ";
            if (prod.is_zero())
                os << (aug_degree(a) + aug_degree(b) > top ? "0 (degree)" : "0");
            else
                os << format_chain(prod.res_part);
            os << '\n';
        }
    return os.str();
}

}  // namespace syzygy
