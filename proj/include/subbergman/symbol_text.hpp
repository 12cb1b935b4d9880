#ifndef SUBBERGMAN_SYMBOL_TEXT_HPP
#define SUBBERGMAN_SYMBOL_TEXT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "subbergman/symbols.hpp"

namespace subbergman {

/// Parses `re`, `re+imi`, `re-imi`, `imi`, `i`. The Unicode minus sign is
/// accepted as '-'.
cplx parse_complex(std::string_view text);

std::string format_complex(cplx z);

/// Parses one symbol description:
///   mobius a=0.5+0i zeta=1
///   blaschke zeros=0.5,-0.3+0.2i zeta=1
///   monomial n=2 [c=0.35]
///   singular c=1
///   series 0,1
///   identity            (shorthand for `series 0,1`)
/// A monomial without c= takes the CNP scale for `alpha`, which must then be
/// given and lie in (-2, -1). Throws std::invalid_argument on malformed input.
SymbolSpec parse_symbol(std::string_view text, std::optional<double> alpha = std::nullopt);

/// Canonical text form; parse_symbol(format_symbol(s)) reproduces s.
std::string format_symbol(const SymbolSpec& spec);

}  // namespace subbergman

#endif
