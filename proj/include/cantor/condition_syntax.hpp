#pragma once

// One-line condition syntax:
//   cohen s=2,0
//   hechler s=2,3 f=const:1
//   evdiff s= f0=const:0 f1=affine:1,1
//   laver s= N=frechet-excl:0
//   mathias s=10 N=frechet-excl:0,3
//   silver free=mod:2:1 ones=none
//   sacks tree=catalog:full   (also miller, random)

#include <string>
#include <string_view>

#include "cantor/forcing.hpp"

namespace cantor {

/// Throws ParseError; validation failures of the condition itself surface as
/// InvalidArgument.
ForcingCondition parse_condition(std::string_view text);

std::string to_string(const ForcingCondition& c);

}  // namespace cantor
