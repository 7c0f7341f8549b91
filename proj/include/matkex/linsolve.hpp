#pragma once

#include <optional>
#include <vector>

#include "matkex/mat.hpp"

namespace matkex {

// Result of row-reducing x by an invertible transform: transform * x ==
// rref, with rref the (unique) reduced row echelon form. Pivots are the
// first nonzero entry per column scanning rows top-down, so the output is
// deterministic.
struct LeftReduction {
  Mat transform;
  Mat rref;
  int rank = 0;
  std::vector<int> pivot_cols;
};

// Field rings only.
LeftReduction left_reduce(const Mat& x);

// Any Y with a*Y = b, free variables set to zero; nullopt when the system
// is inconsistent. Field rings only. b may have any column count, so this
// doubles as the dense linear-system solver.
std::optional<Mat> solve_right(const Mat& a, const Mat& b);

// Any X with X*a = b (solved through the transpose, same conventions).
std::optional<Mat> solve_left(const Mat& a, const Mat& b);

}  // namespace matkex
