#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mdscode/code.hpp"

namespace mdscode {

/// Malformed code file; carries the 1-based source line.
struct ParseError : std::runtime_error {
    ParseError(std::string source, unsigned line, const std::string& what);
    std::string source;
    unsigned line;
};

/// Text format, UTF-8:
///   line 1:  n=<n> q=<q> alphabet=<spec-string>
///   then one codeword per line, n space-separated symbol indices.
/// Lines starting with '#' and blank lines are ignored.
Code read_code(std::istream& in, const std::string& source_name = "<stream>");
Code read_code_file(const std::string& path);

/// Codewords are emitted in sorted order; output is byte-reproducible.
void write_code(std::ostream& out, const Code& code);
void write_code_file(const std::string& path, const Code& code);

WeightProfile parse_profile(std::string_view text);

} // namespace mdscode
