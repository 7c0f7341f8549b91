#pragma once

#include <vector>

#include "matkex/ring.hpp"

namespace matkex {

class Rng;

// Dense matrix over Z or Z_p. Entries are kept canonical for the ring
// (reduced into [0, p) over a field). Dimensions stay tiny (n <= 8 in the
// protocols), so everything here is the straightforward cubic algorithm;
// over Z determinants use fraction-free elimination and inverses go
// through the adjugate so no rationals ever appear.
class Mat {
 public:
  Mat(Ring ring, int rows, int cols);
  static Mat identity(const Ring& ring, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  const BigInt& at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, const BigInt& v) { e_[idx(i, j)] = ring_.canon(v); }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  bool operator==(const Mat& o) const;

  Mat transpose() const;
  BigInt det() const;
  Mat inverse() const;  // throws NonInvertible

  bool is_identity() const;
  bool is_zero() const;

  // Copy of the h x w submatrix anchored at (i0, j0).
  Mat block(int i0, int j0, int h, int w) const;
  void set_block(int i0, int j0, const Mat& sub);

  // Z-matrix reduced entrywise into a prime field.
  Mat reduced(const std::shared_ptr<const PrimeField>& f) const;

  // Largest |entry|; meaningful over Z.
  BigInt max_abs() const;

  // Entrywise uniform sample over a field ring.
  static Mat random(const Ring& ring, int rows, int cols, Rng& rng);

 private:
  int idx(int i, int j) const { return i * cols_ + j; }

  Ring ring_;
  int rows_, cols_;
  std::vector<BigInt> e_;
};

// 2x2 block Z_ij of a 4x4 matrix, block indices in {1, 2}.
Mat block_get(const Mat& z, int bi, int bj);

bool commutes(const Mat& a, const Mat& b);

// Random element of SL_n as a product of word_len elementary
// transvections I + s*e_{ij} with s = +-1, i != j. Determinant 1 by
// construction; the transvection word drawn from rng is independent of
// the ring, so runs over Z and Z_p with equal seeds use equal words.
Mat sample_sl(int n, const Ring& ring, int word_len, Rng& rng);

// Column vector over a ring.
class Vec {
 public:
  Vec(Ring ring, int size);
  static Vec random(const Ring& ring, int size, Rng& rng);

  int size() const { return static_cast<int>(e_.size()); }
  const Ring& ring() const { return ring_; }
  const BigInt& at(int i) const { return e_[i]; }
  void set(int i, const BigInt& v) { e_[i] = ring_.canon(v); }

  bool operator==(const Vec& o) const;
  bool is_zero() const;

 private:
  Ring ring_;
  std::vector<BigInt> e_;
};

Vec operator*(const Mat& m, const Vec& v);
Vec scale(const BigInt& c, const Vec& v);

}  // namespace matkex
