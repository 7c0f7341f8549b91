#pragma once

#include <cstdint>
#include <vector>

#include "matkex/mpoly.hpp"

namespace matkex {

enum class ShapeStatus { ok, not_shape };

// Solver for lex bases in shape position: v-1 elements x_i + f_i(x_v)
// plus one univariate eliminant g(x_v). Roots of g back-substitute into
// one assignment each.
struct ShapeResult {
  ShapeStatus status = ShapeStatus::not_shape;
  // One value per variable, plain form; every assignment zeroes the whole
  // basis.
  std::vector<std::vector<uint64_t>> solutions;
  unsigned eliminant_degree = 0;
  unsigned max_cofactor_degree = 0;

  bool ok() const { return status == ShapeStatus::ok; }
};

ShapeResult shape_solve(const std::vector<MPoly>& basis);

}  // namespace matkex
