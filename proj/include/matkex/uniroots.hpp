#pragma once

#include <cstdint>
#include <vector>

#include "matkex/mpoly.hpp"

namespace matkex {

// All distinct roots in Z_p of a polynomial univariate in variable `var`,
// sorted ascending, plain (non-Montgomery) values. Small fields are swept
// exhaustively; larger ones go through x^p - x splitting so only the
// linear-factor product is ever factored.
std::vector<uint64_t> univariate_roots(const MPoly& f, int var);

// Same on dense plain coefficients c[0] + c[1] x + ...
std::vector<uint64_t> univariate_roots_dense(std::vector<uint64_t> coeffs,
                                             const SmallFp& fp);

}  // namespace matkex
