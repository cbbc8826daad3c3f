#include "syzygy/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace syzygy {

namespace {

using nlohmann::json;

json basis_to_json(const BasisElement& b) { return json{{"I", b.I}, {"j", b.j}}; }

BasisElement basis_from_json(const json& j) {
    BasisElement b;
    b.I = j.at("I").get<std::vector<int>>();
    b.j = j.at("j").get<int>();
    return b;
}

json coeff_to_json(const mpz_class& c) {
    if (c.fits_slong_p()) return json(c.get_si());
    return json(c.get_str());
}

mpz_class coeff_from_json(const json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(j.get<long>());
}

}  // namespace

ParsedInput parse_input_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
    ParsedInput in;
    try {
        if (j.contains("bases")) {
            const int ground = j.at("ground_size").get<int>();
            std::vector<std::vector<int>> bases;
            for (const auto& b : j.at("bases")) bases.push_back(b.get<std::vector<int>>());
            in.matroid = validate_matroid(ground, std::move(bases));
            in.n = ground;
        } else {
            in.n = j.at("n").get<int>();
            if (in.n <= 0) throw InputError("n must be positive");
            for (const auto& g : j.at("generators"))
                in.gens.push_back(parse_monomial(g.get<std::string>(), in.n));
            if (in.gens.empty()) throw InputError("empty generator list");
            if (j.contains("order")) in.order = j.at("order").get<std::string>();
            if (in.order != "given" && in.order != "declex")
                throw InputError("unknown generator order: " + in.order);
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("bad input shape: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return in;
}

ParsedInput load_input(const std::string& path) { return parse_input_text(read_file(path)); }

Presentation presentation_from_input(const ParsedInput& in) {
    if (in.matroid) return matroidal_presentation(*in.matroid);
    std::vector<Monomial> gens = in.gens;
    if (in.order == "declex")
        std::stable_sort(gens.begin(), gens.end(),
                         [](const Monomial& a, const Monomial& b) { return compare_lex(a, b) > 0; });
    return verify_linear_quotients(in.n, gens);
}

std::string ideal_to_json(const Presentation& p) {
    json gens = json::array();
    for (const Monomial& g : p.gens) gens.push_back(to_string(g));
    return json{{"n", p.n}, {"generators", gens}, {"order", "given"}}.dump(2);
}

std::string resolution_to_json(const Resolution& r) {
    json gens = json::array();
    for (const Monomial& g : r.pres.gens) gens.push_back(to_string(g));
    json basis = json::array();
    for (const auto& level : r.basis) {
        json lev = json::array();
        for (const BasisElement& b : level) lev.push_back(basis_to_json(b));
        basis.push_back(std::move(lev));
    }
    json diffs = json::array();
    for (size_t p = 1; p < r.basis.size(); ++p)
        for (const BasisElement& b : r.basis[p]) {
            json terms = json::array();
            for (const auto& [tm, c] : r.diff.at(b).terms())
                terms.push_back(json{{"coeff", coeff_to_json(c)},
                                     {"monomial", to_string(tm.first)},
                                     {"target", basis_to_json(tm.second)}});
            diffs.push_back(json{{"source", basis_to_json(b)}, {"terms", std::move(terms)}});
        }
    return json{{"n", r.pres.n},
                {"generators", std::move(gens)},
                {"mode", r.mode == Mode::ek ? "ek" : "generic"},
                {"basis", std::move(basis)},
                {"differentials", std::move(diffs)}}
        .dump(2);
}

Resolution resolution_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
    try {
        const int n = j.at("n").get<int>();
        std::vector<Monomial> gens;
        for (const auto& g : j.at("generators"))
            gens.push_back(parse_monomial(g.get<std::string>(), n));
        Resolution r;
        r.pres = verify_linear_quotients(n, gens);
        r.mode = j.at("mode").get<std::string>() == "generic" ? Mode::generic : Mode::ek;
        for (const auto& level : j.at("basis")) {
            r.basis.emplace_back();
            for (const auto& b : level) r.basis.back().push_back(basis_from_json(b));
        }
        for (const auto& d : j.at("differentials")) {
            ResChain chain;
            for (const auto& t : d.at("terms"))
                chain.add(coeff_from_json(t.at("coeff")),
                          parse_monomial(t.at("monomial").get<std::string>(), n),
                          basis_from_json(t.at("target")));
            r.diff.emplace(basis_from_json(d.at("source")), std::move(chain));
        }
        return r;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad resolution shape: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

}  // namespace syzygy
