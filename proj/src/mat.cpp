#include "matkex/mat.hpp"

#include <stdexcept>

#include "matkex/rng.hpp"

namespace matkex {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Mat::Mat(Ring ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(rows * cols) {
  require(rows > 0 && cols > 0, "Mat: dimensions must be positive");
}

Mat Mat::identity(const Ring& ring, int n) {
  Mat m(ring, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_,
          "Mat: shape/ring mismatch");
  Mat r(ring_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = ring_.add(e_[k], o.e_[k]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_,
          "Mat: shape/ring mismatch");
  Mat r(ring_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = ring_.sub(e_[k], o.e_[k]);
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  require(cols_ == o.rows_ && ring_ == o.ring_, "Mat: shape/ring mismatch");
  Mat r(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      BigInt acc;
      for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
      r.e_[r.idx(i, j)] = ring_.canon(acc);
    }
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ &&
         e_ == o.e_;
}

Mat Mat::transpose() const {
  Mat r(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.e_[r.idx(j, i)] = at(i, j);
  return r;
}

BigInt Mat::det() const {
  require(rows_ == cols_, "det: matrix must be square");
  int n = rows_;
  std::vector<BigInt> m = e_;
  auto at2 = [&](int i, int j) -> BigInt& { return m[i * n + j]; };
  bool negate = false;

  if (ring_.is_field()) {
    const PrimeField& f = ring_.field();
    BigInt d(1);
    for (int col = 0, row = 0; col < n && row < n; ++col, ++row) {
      int piv = -1;
      for (int i = row; i < n; ++i)
        if (!at2(i, col).is_zero()) { piv = i; break; }
      if (piv < 0) return BigInt(0);
      if (piv != row) {
        for (int j = 0; j < n; ++j) std::swap(at2(piv, j), at2(row, j));
        negate = !negate;
      }
      d = f.mul(d, at2(row, col));
      BigInt pinv = f.inv(at2(row, col));
      for (int i = row + 1; i < n; ++i) {
        if (at2(i, col).is_zero()) continue;
        BigInt factor = f.mul(at2(i, col), pinv);
        for (int j = col; j < n; ++j)
          at2(i, j) = f.sub(at2(i, j), f.mul(factor, at2(row, j)));
      }
    }
    return negate ? f.neg(d) : d;
  }

  // Bareiss fraction-free elimination over Z.
  BigInt prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (at2(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!at2(i, k).is_zero()) { piv = i; break; }
      if (piv < 0) return BigInt(0);
      for (int j = 0; j < n; ++j) std::swap(at2(piv, j), at2(k, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        at2(i, j) = (at2(i, j) * at2(k, k) - at2(i, k) * at2(k, j)).quot(prev);
      at2(i, k) = BigInt(0);
    }
    prev = at2(k, k);
  }
  BigInt d = at2(n - 1, n - 1);
  return negate ? -d : d;
}

Mat Mat::inverse() const {
  require(rows_ == cols_, "inverse: matrix must be square");
  int n = rows_;

  if (ring_.is_field()) {
    const PrimeField& f = ring_.field();
    // Gauss-Jordan on [A | I].
    Mat a(*this);
    Mat inv = identity(ring_, n);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int i = col; i < n; ++i)
        if (!a.at(i, col).is_zero()) { piv = i; break; }
      if (piv < 0) throw NonInvertible();
      if (piv != col)
        for (int j = 0; j < n; ++j) {
          std::swap(a.e_[a.idx(piv, j)], a.e_[a.idx(col, j)]);
          std::swap(inv.e_[inv.idx(piv, j)], inv.e_[inv.idx(col, j)]);
        }
      BigInt pinv = f.inv(a.at(col, col));
      for (int j = 0; j < n; ++j) {
        a.e_[a.idx(col, j)] = f.mul(a.at(col, j), pinv);
        inv.e_[inv.idx(col, j)] = f.mul(inv.at(col, j), pinv);
      }
      for (int i = 0; i < n; ++i) {
        if (i == col || a.at(i, col).is_zero()) continue;
        BigInt factor = a.at(i, col);
        for (int j = 0; j < n; ++j) {
          a.e_[a.idx(i, j)] =
              f.sub(a.at(i, j), f.mul(factor, a.at(col, j)));
          inv.e_[inv.idx(i, j)] =
              f.sub(inv.at(i, j), f.mul(factor, inv.at(col, j)));
        }
      }
    }
    return inv;
  }

  // Over Z only unimodular matrices invert; inverse = det * adjugate.
  BigInt d = det();
  if (!(d == BigInt(1) || d == BigInt(-1))) throw NonInvertible();
  if (n == 1) {
    Mat r(ring_, 1, 1);
    r.set(0, 0, d);
    return r;
  }
  Mat adj(ring_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat minor(ring_, n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.set(mr, mc, at(r, c));
          ++mc;
        }
        ++mr;
      }
      BigInt cof = minor.det();
      if ((i + j) % 2 != 0) cof = -cof;
      adj.set(j, i, cof);  // transposed placement
    }
  if (d == BigInt(-1))
    for (auto& v : adj.e_) v = -v;
  return adj;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Mat::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

Mat Mat::block(int i0, int j0, int h, int w) const {
  require(i0 >= 0 && j0 >= 0 && i0 + h <= rows_ && j0 + w <= cols_,
          "block: out of range");
  Mat r(ring_, h, w);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) r.e_[r.idx(i, j)] = at(i0 + i, j0 + j);
  return r;
}

void Mat::set_block(int i0, int j0, const Mat& sub) {
  require(i0 + sub.rows_ <= rows_ && j0 + sub.cols_ <= cols_,
          "set_block: out of range");
  for (int i = 0; i < sub.rows_; ++i)
    for (int j = 0; j < sub.cols_; ++j)
      e_[idx(i0 + i, j0 + j)] = ring_.canon(sub.at(i, j));
}

Mat Mat::reduced(const std::shared_ptr<const PrimeField>& f) const {
  require(!ring_.is_field(), "reduced: expected a Z matrix");
  Mat r(Ring::mod(f), rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = f->canon(e_[k]);
  return r;
}

BigInt Mat::max_abs() const {
  BigInt m(0);
  for (const auto& v : e_) {
    BigInt a = v.abs();
    if (m < a) m = a;
  }
  return m;
}

Mat Mat::random(const Ring& ring, int rows, int cols, Rng& rng) {
  require(ring.is_field(), "Mat::random: field ring required");
  Mat r(ring, rows, cols);
  for (auto& v : r.e_) v = ring.field().sample(rng);
  return r;
}

Mat block_get(const Mat& z, int bi, int bj) {
  require(z.rows() == 4 && z.cols() == 4, "block_get: expected 4x4");
  require(bi >= 1 && bi <= 2 && bj >= 1 && bj <= 2,
          "block_get: block index in {1,2}");
  return z.block(2 * (bi - 1), 2 * (bj - 1), 2, 2);
}

bool commutes(const Mat& a, const Mat& b) { return a * b == b * a; }

Mat sample_sl(int n, const Ring& ring, int word_len, Rng& rng) {
  require(n >= 2, "sample_sl: need n >= 2");
  require(word_len >= 0, "sample_sl: word_len >= 0");
  Mat m = Mat::identity(ring, n);
  for (int t = 0; t < word_len; ++t) {
    int i = static_cast<int>(rng.below(n));
    int j = static_cast<int>(rng.below(n - 1));
    if (j >= i) ++j;
    int s = rng.sign();
    // Right-multiply by I + s*e_{ij}: column j gains s * column i.
    for (int r = 0; r < n; ++r) {
      BigInt add = s > 0 ? m.at(r, i) : ring.neg(m.at(r, i));
      m.set(r, j, ring.add(m.at(r, j), add));
    }
  }
  return m;
}

Vec::Vec(Ring ring, int size) : ring_(std::move(ring)), e_(size) {
  require(size > 0, "Vec: size must be positive");
}

Vec Vec::random(const Ring& ring, int size, Rng& rng) {
  require(ring.is_field(), "Vec::random: field ring required");
  Vec v(ring, size);
  for (auto& x : v.e_) x = ring.field().sample(rng);
  return v;
}

bool Vec::operator==(const Vec& o) const {
  return ring_ == o.ring_ && e_ == o.e_;
}

bool Vec::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

Vec operator*(const Mat& m, const Vec& v) {
  if (m.cols() != v.size() || !(m.ring() == v.ring()))
    throw std::invalid_argument("mat*vec: shape/ring mismatch");
  Vec r(m.ring(), m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    BigInt acc;
    for (int k = 0; k < m.cols(); ++k) acc += m.at(i, k) * v.at(k);
    r.set(i, acc);
  }
  return r;
}

Vec scale(const BigInt& c, const Vec& v) {
  Vec r(v.ring(), v.size());
  for (int i = 0; i < v.size(); ++i) r.set(i, c * v.at(i));
  return r;
}

}  // namespace matkex
