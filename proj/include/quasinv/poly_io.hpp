#pragma once

#include "quasinv/bipoly.hpp"
#include "quasinv/local_element.hpp"

#include <stdexcept>
#include <string>

namespace quasinv {

/// Parse failure with the offset of the offending character.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Canonical text form: terms sorted by (total degree ascending, z-exponent
/// descending), each "c*z^a*zb^b" with the unary minus folded into c and
/// unit coefficients/exponents elided; "0" for the zero polynomial. This is
/// the contract for CLI output and golden files.
std::string render_poly(const BiPoly &p);

/// "<poly>" when polynomial, "(<poly>) / delta^k" otherwise.
std::string render_local(const LocalElement &e);

/// Parses the canonical form (whitespace-insensitive; also accepts binary
/// minus between terms). Variables are named z and zb; coefficients are
/// integers or p/q. Throws ParseError with the offending position.
BiPoly parse_poly(const std::string &text);

} // namespace quasinv
