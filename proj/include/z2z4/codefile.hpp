#pragma once

#include <string>

#include "z2z4/code.hpp"

namespace z2z4 {

/// Code file format: a header line "alpha beta", then one line per
/// generator row with alpha binary tokens, a literal "|", and beta
/// quaternary tokens. Blank lines and lines starting with "#" are ignored.
AdditiveCode parse_code_file(const std::string& text);

std::string print_code_file(const MixedMatrix& m);

}  // namespace z2z4
