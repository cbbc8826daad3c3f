#include "syzygy/homotopy.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

namespace syzygy {

void AugmentedChain::add_s(const mpz_class& c, const Monomial& m) {
    if (c == 0) return;
    auto [it, fresh] = s_part.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) s_part.erase(it);
    }
}

void AugmentedChain::add_res(const mpz_class& c, const Monomial& m, const BasisElement& b) {
    res_part.add(c, m, b);
}

void AugmentedChain::add_chain(const AugmentedChain& other, const mpz_class& scale_coeff) {
    for (const auto& [m, c] : other.s_part) add_s(c * scale_coeff, m);
    res_part.add_chain(other.res_part, scale_coeff);
}

void AugmentedChain::add_scaled(const AugmentedChain& other, const mpz_class& scale_coeff,
                                const Monomial& scale_mono) {
    for (const auto& [m, c] : other.s_part) add_s(c * scale_coeff, mul(scale_mono, m));
    res_part.add_scaled(other.res_part, scale_coeff, scale_mono);
}

AugmentedChain aug_from_monomial(const Monomial& m) {
    AugmentedChain x;
    x.add_s(1, m);
    return x;
}

AugmentedChain aug_from_basis(const BasisElement& b, int n) {
    AugmentedChain x;
    x.add_res(1, Monomial::one(n), b);
    return x;
}

AugmentedChain differential(const Resolution& r, const AugmentedChain& x) {
    AugmentedChain out;
    for (const auto& [tm, c] : x.res_part.terms()) {
        const auto& [mono, b] = tm;
        if (b.I.empty())
            out.add_s(c, mul(mono, r.pres.gens[b.j]));
        else
            out.res_part.add_scaled(r.diff.at(b), c, mono);
    }
    return out;
}

ResChain c0(const Presentation& p, const Monomial& alpha, const BasisElement& b) {
    ResChain out;
    for (int v : p.crit[b.j]) {
        if (alpha.exp(v) == 0) continue;
        // v is the least critical variable of alpha; insert only at the front
        if (b.I.empty() || v < b.I.front())
            out.add(1, divide_var(alpha, v), BasisElement{set_insert(b.I, v), b.j});
        break;
    }
    return out;
}

ResChain rho(const Presentation& p, const Monomial& alpha, const BasisElement& b) {
    ResChain out;
    for (int v : p.crit[b.j]) {
        if (!b.I.empty() && v >= b.I.front()) break;
        if (alpha.exp(v) == 0) continue;
        auto nt = normal_form(p, mul_var(p.gens[b.j], v));
        if (!nt) throw std::logic_error("rewriting step left the ideal");
        if (std::includes(p.crit[nt->gen].begin(), p.crit[nt->gen].end(), b.I.begin(),
                          b.I.end()))
            out.add(1, mul(divide_var(alpha, v), nt->cofactor), BasisElement{b.I, nt->gen});
        break;
    }
    return out;
}

std::vector<int> ccrit_basis(const Presentation& p, const BasisElement& b) {
    std::vector<int> out;
    for (int v : p.crit[b.j]) {
        if (!b.I.empty() && v >= b.I.front()) break;
        out.push_back(v);
    }
    return out;
}

std::vector<int> ccrit(const Presentation& p, const ResChain& c) {
    std::set<int> acc;
    for (const auto& [tm, coeff] : c.terms()) {
        auto part = ccrit_basis(p, tm.second);
        acc.insert(part.begin(), part.end());
    }
    return {acc.begin(), acc.end()};
}

AugmentedChain contract(const Presentation& p, const AugmentedChain& x) {
    AugmentedChain out;
    for (const auto& [w, c] : x.s_part)
        for (int j = 0; j < p.r(); ++j)
            if (p.gens[j].divides(w)) {
                out.add_res(c, divide(w, p.gens[j]), BasisElement{{}, j});
                break;
            }
    std::vector<std::tuple<Monomial, BasisElement, mpz_class>> live;
    int guard = 2;
    for (const auto& [tm, c] : x.res_part.terms()) {
        live.emplace_back(tm.first, tm.second, c);
        guard = std::max(guard, tm.first.deg() + 2);
    }
    // each rewriting step consumes one critical variable of the cofactor, so
    // the chain dies within deg(alpha) steps on crit-monotone input
    for (int step = 0; !live.empty(); ++step) {
        if (step > guard)
            throw RecursionLimitExceeded("contracting homotopy rewriting chain did not terminate");
        std::vector<std::tuple<Monomial, BasisElement, mpz_class>> next;
        for (const auto& [alpha, b, c] : live) {
            out.res_part.add_chain(c0(p, alpha, b), c);
            const ResChain step = rho(p, alpha, b);
            for (const auto& [tm, cc] : step.terms())
                next.emplace_back(tm.first, tm.second, c * cc);
        }
        live.swap(next);
    }
    return out;
}

bool in_contract_image(const Presentation& p, const ResChain& c) {
    for (const auto& [tm, coeff] : c.terms()) {
        const auto& [gamma, b] = tm;
        int least = 0;
        for (int v : p.crit[b.j])
            if (gamma.exp(v) > 0 || std::binary_search(b.I.begin(), b.I.end(), v)) {
                least = v;
                break;
            }
        if (least == 0 || !std::binary_search(b.I.begin(), b.I.end(), least)) return false;
    }
    return true;
}

namespace {

std::string describe_aug(const AugmentedChain& x) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.s_part) {
        os << (first ? "" : " + ") << c << "*" << to_string(m);
        first = false;
    }
    if (!x.res_part.is_zero()) os << (first ? "" : " + ") << format_chain(x.res_part);
    if (first && x.res_part.is_zero()) os << "0";
    return os.str();
}

HomotopyReport verify_homotopy_impl(const Resolution& r, int bound, bool par) {
    const Presentation& p = r.pres;
    if (auto cm = is_crit_monotone(p); !cm) throw NotCritMonotone(cm.gen, cm.var);

    const std::vector<Monomial> ring = monomials_up_to_degree(p.n, bound);
    std::vector<std::pair<Monomial, BasisElement>> tasks;
    for (const auto& level : r.basis)
        for (const BasisElement& b : level) {
            const int rem = bound - static_cast<int>(b.I.size()) - p.deg(b.j);
            if (rem < 0) continue;
            for (const Monomial& alpha : monomials_up_to_degree(p.n, rem))
                tasks.emplace_back(alpha, b);
        }

    const long total = static_cast<long>(ring.size() + tasks.size());
    long fail_at = std::numeric_limits<long>::max();
    std::string witness;
    auto record = [&](long idx, const std::string& msg) {
#pragma omp critical(homotopy_witness)
        if (idx < fail_at) {
            fail_at = idx;
            witness = msg;
        }
    };

#pragma omp parallel for schedule(dynamic, 16) if (par)
    for (long idx = 0; idx < total; ++idx) {
        if (idx < static_cast<long>(ring.size())) {
            const Monomial& w = ring[idx];
            const AugmentedChain z = aug_from_monomial(w);
            const AugmentedChain cz = contract(p, z);
            AugmentedChain lhs = differential(r, cz);
            bool inside = false;
            for (const Monomial& g : p.gens)
                if (g.divides(w)) {
                    inside = true;
                    break;
                }
            AugmentedChain expected;
            if (inside) expected = z;
            if (!(lhs == expected))
                record(idx, "d(c(w)) != w - eta(w) at w = " + to_string(w) + ", got " +
                                describe_aug(lhs));
            else if (!contract(p, cz).is_zero())
                record(idx, "c(c(w)) != 0 at w = " + to_string(w));
        } else {
            const auto& [alpha, b] = tasks[idx - ring.size()];
            AugmentedChain z;
            z.add_res(1, alpha, b);
            const AugmentedChain cz = contract(p, z);
            const AugmentedChain dz = differential(r, z);
            AugmentedChain sum = differential(r, cz);
            sum.add_chain(contract(p, dz));
            const std::string at = to_string(alpha) + "*" + format_basis(b);
            if (!(sum == z))
                record(idx, "dc + cd != 1 at " + at + ", got " + describe_aug(sum));
            else if (!contract(p, cz).is_zero())
                record(idx, "c(c(z)) != 0 at " + at);
            else if (!in_contract_image(p, cz.res_part))
                record(idx, "c(z) escapes the image shape at " + at + ", c(z) = " +
                                describe_aug(cz));
        }
    }

    HomotopyReport rep;
    rep.checked = total;
    if (fail_at != std::numeric_limits<long>::max()) {
        rep.ok = false;
        rep.witness = witness;
    }
    return rep;
}

}  // namespace

HomotopyReport verify_homotopy(const Resolution& r, int bound) {
    return verify_homotopy_impl(r, bound, false);
}

HomotopyReport verify_homotopy_parallel(const Resolution& r, int bound) {
    return verify_homotopy_impl(r, bound, true);
}

}  // namespace syzygy
