#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "syzygy/families.hpp"
#include "syzygy/resolution.hpp"

namespace syzygy {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One parsed input file: a matroid, or an ordered list of ideal generators.
struct ParsedInput {
    std::optional<Matroid> matroid;
    int n = 0;
    std::vector<Monomial> gens;
    std::string order = "given";  // "given" | "declex"
};

ParsedInput parse_input_text(const std::string& text);
ParsedInput load_input(const std::string& path);

// Verified presentation of a parsed input; "declex" re-sorts the generators by
// decreasing lex first, matroids go through the basis construction.
Presentation presentation_from_input(const ParsedInput& in);

std::string ideal_to_json(const Presentation& p);

// Resolution round-trip: the serialized form embeds the ideal, the mode, the
// ordered basis per homological degree, and every differential entry.
std::string resolution_to_json(const Resolution& r);
Resolution resolution_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace syzygy
