#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "syzygy/dga.hpp"
#include "syzygy/io.hpp"
#include "syzygy/strand.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace syzygy;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string family;
    std::vector<int> restrict_to;
    std::string mode = "ek";
    int degree_bound = -1;
    std::string out;
    std::string format = "text";
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Presentation make_presentation(const RunConfig& cfg) {
    if (!cfg.family.empty() && !cfg.input.empty())
        throw InputError("pass either --input or --family, not both");
    if (cfg.family.empty() && cfg.input.empty()) throw InputError("missing --input or --family");
    if (!cfg.family.empty()) {
        Matroid m;
        if (cfg.family == "fano") {
            m = fano();
        } else if (cfg.family.rfind("uniform:", 0) == 0) {
            int r = 0, n = 0;
            char comma = 0;
            std::istringstream is(cfg.family.substr(8));
            if (!(is >> r >> comma >> n) || comma != ',' || !is.eof() || r < 1 || n < r)
                throw InputError("expected --family uniform:r,n with 1 <= r <= n");
            m = uniform_matroid(r, n);
        } else {
            throw InputError("unknown family: " + cfg.family);
        }
        if (!cfg.restrict_to.empty()) m = restrict_matroid(m, cfg.restrict_to);
        return matroidal_presentation(m);
    }
    const ParsedInput in = load_input(cfg.input);
    if (in.matroid) {
        Matroid m = *in.matroid;
        if (!cfg.restrict_to.empty()) m = restrict_matroid(m, cfg.restrict_to);
        return matroidal_presentation(m);
    }
    std::vector<Monomial> gens = in.gens;
    if (in.order == "declex")
        std::stable_sort(gens.begin(), gens.end(),
                         [](const Monomial& a, const Monomial& b) { return compare_lex(a, b) > 0; });
    if (!cfg.restrict_to.empty()) {
        auto [nn, gg] = restrict_generators(in.n, gens, cfg.restrict_to);
        return verify_linear_quotients(nn, gg);
    }
    return verify_linear_quotients(in.n, gens);
}

Mode parse_mode(const RunConfig& cfg) { return cfg.mode == "generic" ? Mode::generic : Mode::ek; }

void emit(const RunConfig& cfg, const std::string& text, const json& j) {
    const std::string payload = cfg.format == "json" ? j.dump(2) + "\n" : text;
    if (cfg.out.empty()) {
        std::cout << payload;
    } else {
        write_file(cfg.out, payload);
        std::cout << "wrote " << cfg.out << "\n";
    }
}

std::string crit_text(const std::vector<int>& crit) {
    std::string s = "{";
    for (size_t i = 0; i < crit.size(); ++i) s += (i ? "," : "") + std::to_string(crit[i]);
    return s + "}";
}

json presentation_json(const Presentation& p) {
    json gens = json::array(), crit = json::array();
    for (const Monomial& g : p.gens) gens.push_back(to_string(g));
    for (const auto& c : p.crit) crit.push_back(c);
    return json{{"n", p.n}, {"generators", std::move(gens)}, {"crit", std::move(crit)}};
}

int run_resolve(const RunConfig& cfg) {
    const Presentation p = make_presentation(cfg);
    const Resolution r = build_resolution(p, parse_mode(cfg));
    std::ostringstream os;
    os << "generators (r=" << p.r() << ", n=" << p.n << "):\n";
    for (int j = 0; j < p.r(); ++j)
        os << "  g" << j + 1 << " = " << to_string(p.gens[j]) << "   crit " << crit_text(p.crit[j])
           << "\n";
    os << "basis:\n";
    for (size_t deg = 0; deg < r.basis.size(); ++deg) {
        os << "  degree " << deg << ":";
        for (const BasisElement& b : r.basis[deg]) os << " " << format_basis(b);
        os << "\n";
    }
    os << "differentials:\n";
    for (size_t deg = 1; deg < r.basis.size(); ++deg)
        for (const BasisElement& b : r.basis[deg])
            os << "  d(" << format_basis(b) << ") = " << format_chain(r.diff.at(b)) << "\n";
    if (cfg.format == "json" || !cfg.out.empty()) {
        // the JSON form is the round-trip serialization
        const std::string payload = resolution_to_json(r) + "\n";
        if (cfg.out.empty())
            std::cout << payload;
        else {
            write_file(cfg.out, payload);
            std::cout << "wrote " << cfg.out << "\n";
        }
    } else {
        std::cout << os.str();
    }
    return 0;
}

int run_betti(const RunConfig& cfg) {
    const Presentation p = make_presentation(cfg);
    const auto basis = enumerate_basis(p);
    std::ostringstream os;
    json arr = json::array();
    for (size_t deg = 0; deg < basis.size(); ++deg) {
        os << (deg ? " " : "") << basis[deg].size();
        arr.push_back(basis[deg].size());
    }
    os << "\n";
    emit(cfg, os.str(),
         json{{"betti", std::move(arr)}, {"pdim", pdim(p)}, {"reg_spread", reg_spread(p)}});
    return 0;
}

std::vector<Monomial> verify_strands(const Resolution& r, int degree_bound) {
    const Monomial bound = basis_mdeg_bound(r);
    long count = 1;
    for (int i = 1; i <= bound.nvars(); ++i) {
        count *= bound.exp(i) + 1;
        if (count > 200000 && degree_bound < 0)
            throw InputError("strand sweep too large; pass --degree-bound");
    }
    std::vector<Monomial> alphas = multidegrees_below(bound);
    if (degree_bound >= 0) {
        std::vector<Monomial> kept;
        for (const Monomial& a : alphas)
            if (a.deg() <= degree_bound) kept.push_back(a);
        alphas = std::move(kept);
    }
    return alphas;
}

int run_verify(const RunConfig& cfg) {
    const Presentation p = make_presentation(cfg);
    const Mode mode = parse_mode(cfg);
    const auto cm = is_crit_monotone(p);
    if (mode == Mode::ek && !cm)
        throw NotCritMonotone(cm.gen, cm.var);

    std::ostringstream os;
    json checks = json::array();
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok, double secs, const std::string& note) {
        os << "  " << name << ": " << (ok ? "pass" : "FAIL");
        if (!note.empty()) os << " (" << note << ")";
        os << "  [" << secs << " s]\n";
        checks.push_back(json{{"name", name}, {"ok", ok}, {"seconds", secs}, {"note", note}});
        all_ok = all_ok && ok;
    };

    os << "verify: r=" << p.r() << " n=" << p.n << " mode=" << cfg.mode
       << " crit-monotone=" << (cm ? "yes" : "no") << "\n";
    const auto t0 = std::chrono::steady_clock::now();
    const Resolution r = build_resolution(p, mode);
    os << "  resolution built: length " << r.length() << "  [" << seconds_since(t0) << " s]\n";

    {
        const auto t = std::chrono::steady_clock::now();
        const auto bad = verify_d_squared(r);
        report("d^2 = 0", !bad, seconds_since(t), bad ? bad->detail : "");
    }
    {
        const auto t = std::chrono::steady_clock::now();
        const auto bad = verify_minimality(r);
        report("minimality", !bad, seconds_since(t), bad ? bad->detail : "");
    }
    {
        const auto t = std::chrono::steady_clock::now();
        const auto alphas = verify_strands(r, cfg.degree_bound);
        const StrandReport sr = strand_exactness_multi_parallel(r, alphas);
        report("strand exactness", sr.ok, seconds_since(t),
               sr.ok ? std::to_string(alphas.size()) + " strands" : sr.witness);
    }
    if (cm) {
        {
            const auto t = std::chrono::steady_clock::now();
            const int bound =
                cfg.degree_bound >= 0 ? cfg.degree_bound : p.max_gen_degree() + 2;
            const HomotopyReport hr = verify_homotopy_parallel(r, bound);
            report("homotopy identities", hr.ok, seconds_since(t),
                   hr.ok ? std::to_string(hr.checked) + " elements, bound " + std::to_string(bound)
                         : hr.witness);
        }
        {
            const auto t = std::chrono::steady_clock::now();
            const DgaReport dr = verify_dga(r, true);
            std::string note;
            if (!dr.ok()) {
                for (const DgaCheck* c : {&dr.leibniz, &dr.commutativity, &dr.unit,
                                          &dr.associativity, &dr.closure})
                    if (!c->ok) {
                        note = c->witness;
                        break;
                    }
            } else {
                note = "pairs " + std::to_string(dr.leibniz.checked) + ", triples " +
                       std::to_string(dr.associativity.checked);
                if (dr.family_warning) note += "; input is neither stable nor matroidal";
            }
            report("dga axioms", dr.ok(), seconds_since(t), note);
        }
    } else {
        os << "  homotopy identities: skipped (not crit-monotone)\n";
        os << "  dga axioms: skipped (not crit-monotone)\n";
    }
    os << (all_ok ? "VERIFY: PASS" : "VERIFY: FAIL") << "\n";
    emit(cfg, os.str(), json{{"ok", all_ok}, {"checks", std::move(checks)}});
    return all_ok ? 0 : 1;
}

int run_homotopy_check(const RunConfig& cfg) {
    const Presentation p = make_presentation(cfg);
    const Resolution r = build_resolution(p, parse_mode(cfg));
    const int bound = cfg.degree_bound >= 0 ? cfg.degree_bound : p.max_gen_degree() + 2;
    const HomotopyReport hr = verify_homotopy_parallel(r, bound);
    std::ostringstream os;
    os << "homotopy identities to degree " << bound << ": " << (hr.ok ? "pass" : "FAIL") << " ("
       << hr.checked << " elements)\n";
    if (!hr.ok) os << "witness: " << hr.witness << "\n";
    emit(cfg, os.str(),
         json{{"ok", hr.ok}, {"checked", hr.checked}, {"bound", bound}, {"witness", hr.witness}});
    return hr.ok ? 0 : 1;
}

int run_dga_table(const RunConfig& cfg) {
    const Presentation p = make_presentation(cfg);
    const Resolution r = build_resolution(p, parse_mode(cfg));
    ProductTable table(r);
    const std::string text = product_table_text(table);
    json entries = json::array();
    const int top = r.length() + 1;
    std::vector<BasisElement> all;
    for (const auto& level : r.basis) all.insert(all.end(), level.begin(), level.end());
    for (const BasisElement& a : all)
        for (const BasisElement& b : all) {
            const AugmentedChain& prod = table.basis_product(a, b);
            entries.push_back(
                json{{"left", format_basis(a)},
                     {"right", format_basis(b)},
                     {"product", prod.is_zero() ? "0" : format_chain(prod.res_part)},
                     {"annotation", prod.is_zero() && aug_degree(a) + aug_degree(b) > top
                                        ? "degree"
                                        : "computed"}});
        }
    emit(cfg, text, json{{"products", std::move(entries)}});
    return 0;
}

int run_component(const RunConfig& cfg) {
    const Presentation p = make_presentation(cfg);
    const int d = cfg.degree_bound >= 0 ? cfg.degree_bound : p.max_gen_degree();
    const Presentation comp = component_presentation(p, d);
    std::ostringstream os;
    os << "degree-" << d << " component: " << comp.r() << " generators\n";
    for (int j = 0; j < comp.r(); ++j)
        os << "  g" << j + 1 << " = " << to_string(comp.gens[j]) << "   crit "
           << crit_text(comp.crit[j]) << "\n";
    json j = presentation_json(comp);
    j["component_degree"] = d;
    emit(cfg, os.str(), j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("SYZYGY_THREADS"); env && *env) {
#ifdef _OPENMP
        omp_set_num_threads(std::max(1, std::atoi(env)));
#endif
    }

    CLI::App app{"minimal free resolutions of monomial ideals with linear quotients"};
    app.require_subcommand(1);
    RunConfig cfg;
    const auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "ideal or matroid JSON file");
        sub->add_option("--family", cfg.family, "built-in family: fano | uniform:r,n");
        sub->add_option("--restrict", cfg.restrict_to, "comma-separated variable subset")
            ->delimiter(',');
        sub->add_option("--mode", cfg.mode, "differential construction: ek | generic")
            ->check(CLI::IsMember({"ek", "generic"}));
        sub->add_option("--degree-bound", cfg.degree_bound, "bound for sweeps / component degree");
        sub->add_option("--out", cfg.out, "write output to a file");
        sub->add_option("--format", cfg.format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    const std::pair<const char*, const char*> commands[] = {
        {"resolve", "build the minimal free resolution and print basis and differentials"},
        {"betti", "print Betti numbers, projective dimension, and degree spread"},
        {"verify", "run the full verification suite (d^2, minimality, strands, homotopy, products)"},
        {"homotopy-check", "verify the contracting homotopy identities up to a degree bound"},
        {"dga-table", "print the multiplication table of the product structure"},
        {"component", "presentation of one degree component with its critical sets"}};
    for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.command == "resolve") return run_resolve(cfg);
        if (cfg.command == "betti") return run_betti(cfg);
        if (cfg.command == "verify") return run_verify(cfg);
        if (cfg.command == "homotopy-check") return run_homotopy_check(cfg);
        if (cfg.command == "dga-table") return run_dga_table(cfg);
        return run_component(cfg);
    } catch (const NotCritMonotone& e) {
        std::cerr << "error: " << e.what() << " (try --mode generic for the resolution)\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NotMinimal& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NotLinearQuotients& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ExchangeFailure& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NotStable& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
