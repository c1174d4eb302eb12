#pragma once

#include <map>
#include <string>
#include <string_view>

#include "ckit/lie_algebra.hpp"

namespace ckit {

/// Parses the compact tuple notation "(e^{15},−e^{25},…,0)" describing an
/// algebra through its covector differentials: entry l is de^l as a sum of
/// q·e^{jk} terms. Coefficients are scalar literals or parameter names bound
/// through `params`; both "e^{15}" and "e15" atom spellings are accepted and
/// the unicode minus is normalized. The structure constants follow
/// dα(x,y) = −α([x,y]); a Jacobi failure is an elaboration error naming the
/// triple.
LieAlgebra parse_salamon(std::string_view text,
                         const std::map<std::string, Scalar>& params = {});

/// Prints an algebra back into the tuple notation (round-trips through
/// parse_salamon).
std::string print_salamon(const LieAlgebra& L);

}  // namespace ckit
