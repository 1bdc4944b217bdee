// Text format for cubical-set presentations (.cub):
//
//   # comment (blank lines allowed)
//   cube <name> <dim>
//   base <name>
//   face <name> <i> <eps> = <gen>[.<letters>]
//
// Every face of every positive-dimensional generator must appear exactly
// once; operator words use the s/n/p letters in application order.
#pragma once

#include <iosfwd>
#include <string>

#include "cubical/cset.hpp"

namespace cubical::cset {

// Throws ParseError (with line number) on malformed input.  The result has
// passed validate().
CubePresentation parse_cub(std::istream& in);
CubePresentation load_cub(const std::string& path);

// Deterministic, byte-stable rendering; parse_cub(serialize_cub(X)) == X.
std::string serialize_cub(const CubePresentation& X);
void save_cub(const CubePresentation& X, const std::string& path);

}  // namespace cubical::cset
