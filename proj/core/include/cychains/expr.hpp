#pragma once

#include "cychains/hochschild.hpp"

#include <stdexcept>
#include <string>

namespace cychains {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// grammar documented in docs/grammar.md
MultiVector parse_multivector(const std::string& text, int dim);
DiffForm parse_form(const std::string& text, int dim);
HochChain parse_chain(const std::string& text, int dim);
VolumeForm parse_volume(const std::string& text, int dim);

// evaluates a command expression `op (arg) (arg) ...` and returns the
// canonical printed form of the result
std::string eval_expr(const std::string& text, int dim);

} // namespace cychains
