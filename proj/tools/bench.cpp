#include <chrono>
#include <functional>
#include <iostream>
#include <set>

#include "syzygy/families.hpp"
#include "syzygy/homotopy.hpp"
#include "syzygy/strand.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace syzygy;

namespace {

double time_of(const std::function<void()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: not enabled\n";
#endif
    const Presentation p = matroidal_presentation(fano());
    const Resolution r = build_resolution(p, Mode::ek);
    std::cout << "fano resolution: length " << r.length() << ", betti";
    for (int b : betti(r)) std::cout << " " << b;
    std::cout << "\n";

    // squarefree multidegrees plus every single-variable bump
    std::set<Monomial> alpha_set;
    for (const Monomial& a : multidegrees_below(parse_monomial("x1*x2*x3*x4*x5*x6*x7", 7)))
        alpha_set.insert(a);
    for (int i = 1; i <= 7; ++i) {
        Monomial bound = parse_monomial("x1*x2*x3*x4*x5*x6*x7", 7);
        bound.set_exp(i, 2);
        for (const Monomial& a : multidegrees_below(bound)) alpha_set.insert(a);
    }
    const std::vector<Monomial> alphas(alpha_set.begin(), alpha_set.end());
    std::cout << "strand sweep over " << alphas.size() << " multidegrees\n";

    StrandReport serial, parallel;
    const double ts = time_of([&] { serial = strand_exactness_multi(r, alphas); });
    const double tp = time_of([&] { parallel = strand_exactness_multi_parallel(r, alphas); });
    std::cout << "  serial reference: " << ts << " s (ok=" << serial.ok << ")\n";
    std::cout << "  parallel lane:    " << tp << " s (ok=" << parallel.ok << ")\n";
    std::cout << "  agree: " << (serial.checks == parallel.checks ? "yes" : "NO") << ", speedup "
              << (tp > 0 ? ts / tp : 0.0) << "x\n";

    const int bound = 4;
    HomotopyReport hs, hp;
    const double hs_t = time_of([&] { hs = verify_homotopy(r, bound); });
    const double hp_t = time_of([&] { hp = verify_homotopy_parallel(r, bound); });
    std::cout << "homotopy sweep to degree " << bound << " (" << hs.checked << " elements)\n";
    std::cout << "  serial reference: " << hs_t << " s (ok=" << hs.ok << ")\n";
    std::cout << "  parallel lane:    " << hp_t << " s (ok=" << hp.ok << ")\n";
    std::cout << "  agree: " << (hs.ok == hp.ok && hs.checked == hp.checked ? "yes" : "NO")
              << ", speedup " << (hp_t > 0 ? hs_t / hp_t : 0.0) << "x\n";
    return serial.ok && parallel.ok && hs.ok && hp.ok ? 0 : 1;
}
