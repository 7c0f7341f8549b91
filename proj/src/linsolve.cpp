#include "matkex/linsolve.hpp"

#include <stdexcept>

#include "matkex/smallfp.hpp"

namespace matkex {

namespace {

// Augmented-system RREF over the generic BigInt field. cols_a columns are
// eliminated; the rest ride along as right-hand sides.
struct EchelonBig {
  std::vector<BigInt> m;
  int rows, cols;
  std::vector<int> pivot_cols;

  BigInt& at(int i, int j) { return m[i * cols + j]; }

  void run(const PrimeField& f, int cols_a) {
    int r = 0;
    for (int col = 0; col < cols_a && r < rows; ++col) {
      int piv = -1;
      for (int i = r; i < rows; ++i)
        if (!at(i, col).is_zero()) { piv = i; break; }
      if (piv < 0) continue;
      if (piv != r)
        for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
      BigInt pinv = f.inv(at(r, col));
      for (int j = col; j < cols; ++j) at(r, j) = f.mul(at(r, j), pinv);
      for (int i = 0; i < rows; ++i) {
        if (i == r || at(i, col).is_zero()) continue;
        BigInt factor = at(i, col);
        for (int j = col; j < cols; ++j)
          at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
      }
      pivot_cols.push_back(col);
      ++r;
    }
  }
};

// Same elimination over the word-size field. Control flow mirrors
// EchelonBig exactly so both paths produce identical pivots and output.
struct EchelonSmall {
  std::vector<uint64_t> m;  // Montgomery form
  int rows, cols;
  std::vector<int> pivot_cols;

  uint64_t& at(int i, int j) { return m[i * cols + j]; }

  void run(const SmallFp& f, int cols_a) {
    int r = 0;
    for (int col = 0; col < cols_a && r < rows; ++col) {
      int piv = -1;
      for (int i = r; i < rows; ++i)
        if (at(i, col) != 0) { piv = i; break; }
      if (piv < 0) continue;
      if (piv != r)
        for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
      uint64_t pinv = f.inv(at(r, col));
      for (int j = col; j < cols; ++j) at(r, j) = f.mul(at(r, j), pinv);
      for (int i = 0; i < rows; ++i) {
        if (i == r || at(i, col) == 0) continue;
        uint64_t factor = at(i, col);
        for (int j = col; j < cols; ++j)
          at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
      }
      pivot_cols.push_back(col);
      ++r;
    }
  }
};

bool use_small(const Ring& ring) { return ring.field().fits_u64(); }

}  // namespace

LeftReduction left_reduce(const Mat& x) {
  if (!x.ring().is_field())
    throw std::invalid_argument("left_reduce: field ring required");
  const PrimeField& f = x.ring().field();
  int n = x.rows(), w = x.cols();

  // Eliminate on [x | I]; the identity columns accumulate the transform.
  EchelonBig e;
  e.rows = n;
  e.cols = w + n;
  e.m.assign(static_cast<size_t>(n) * (w + n), BigInt(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < w; ++j) e.at(i, j) = x.at(i, j);
    e.at(i, w + i) = BigInt(1);
  }
  e.run(f, w);

  LeftReduction out{Mat(x.ring(), n, n), Mat(x.ring(), n, w),
                    static_cast<int>(e.pivot_cols.size()), e.pivot_cols};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < w; ++j) out.rref.set(i, j, e.at(i, j));
    for (int j = 0; j < n; ++j) out.transform.set(i, j, e.at(i, w + j));
  }
  return out;
}

std::optional<Mat> solve_right(const Mat& a, const Mat& b) {
  if (!a.ring().is_field())
    throw std::invalid_argument("solve_right: field ring required");
  if (a.rows() != b.rows() || !(a.ring() == b.ring()))
    throw std::invalid_argument("solve_right: shape/ring mismatch");

  int rows = a.rows(), na = a.cols(), nb = b.cols();
  int cols = na + nb;
  Mat y(a.ring(), na, nb);

  if (use_small(a.ring())) {
    const SmallFp fp(a.ring().field().p().to_u64());
    EchelonSmall e;
    e.rows = rows;
    e.cols = cols;
    e.m.assign(static_cast<size_t>(rows) * cols, 0);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < na; ++j) e.at(i, j) = fp.from_u64(a.at(i, j).to_u64());
      for (int j = 0; j < nb; ++j)
        e.at(i, na + j) = fp.from_u64(b.at(i, j).to_u64());
    }
    e.run(fp, na);
    int rank = static_cast<int>(e.pivot_cols.size());
    for (int i = rank; i < rows; ++i)
      for (int j = na; j < cols; ++j)
        if (e.at(i, j) != 0) return std::nullopt;
    for (int r = 0; r < rank; ++r)
      for (int j = 0; j < nb; ++j)
        y.set(e.pivot_cols[r], j, BigInt::from_u64(fp.to_u64(e.at(r, na + j))));
    return y;
  }

  const PrimeField& f = a.ring().field();
  EchelonBig e;
  e.rows = rows;
  e.cols = cols;
  e.m.assign(static_cast<size_t>(rows) * cols, BigInt(0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < na; ++j) e.at(i, j) = a.at(i, j);
    for (int j = 0; j < nb; ++j) e.at(i, na + j) = b.at(i, j);
  }
  e.run(f, na);
  int rank = static_cast<int>(e.pivot_cols.size());
  for (int i = rank; i < rows; ++i)
    for (int j = na; j < cols; ++j)
      if (!e.at(i, j).is_zero()) return std::nullopt;
  for (int r = 0; r < rank; ++r)
    for (int j = 0; j < nb; ++j) y.set(e.pivot_cols[r], j, e.at(r, na + j));
  return y;
}

std::optional<Mat> solve_left(const Mat& a, const Mat& b) {
  auto yt = solve_right(a.transpose(), b.transpose());
  if (!yt) return std::nullopt;
  return yt->transpose();
}

}  // namespace matkex
