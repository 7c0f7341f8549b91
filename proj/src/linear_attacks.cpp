#include "matkex/linear_attacks.hpp"

#include <stdexcept>

#include "matkex/linsolve.hpp"

namespace matkex {

namespace {

// Rows expressing X*F - F*X = 0 over the flattened unknowns x_{ij}
// (variable index i*m + j), appended to sys/rhs.
void append_commutation(const Mat& f, Mat& sys, int& row) {
  int m = f.rows();
  const Ring& ring = f.ring();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        // + x_{ik} F_{kj}
        int v1 = i * m + k;
        sys.set(row, v1, ring.add(sys.at(row, v1), f.at(k, j)));
        // - F_{ik} x_{kj}
        int v2 = k * m + j;
        sys.set(row, v2, ring.sub(sys.at(row, v2), f.at(i, k)));
      }
      ++row;
    }
}

Mat solve_x(const Mat& sys, const Mat& rhs, int m) {
  auto sol = solve_right(sys, rhs);
  if (!sol)
    throw std::runtime_error(
        "linearization: inconsistent system on a genuine instance");
  Mat x(sys.ring(), m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) x.set(i, j, sol->at(i * m + j, 0));
  return x;
}

}  // namespace

HksAttackResult attack_hks(const HksInstance& inst,
                           const std::function<Mat()>& sampler, int s,
                           int max_samples) {
  if (s < 1) throw std::invalid_argument("attack_hks: need s >= 1");
  int m = inst.m;
  Ring ring = inst.q.ring();

  std::vector<Mat> images;
  for (int i = 0; i < s; ++i) images.push_back(sampler());

  HksAttackResult res;
  while (true) {
    int rows = m + static_cast<int>(images.size()) * m * m;
    Mat sys(ring, rows, m * m);
    Mat rhs(ring, rows, 1);
    int row = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) sys.set(row, i * m + j, inst.b.at(j));
      rhs.set(row, 0, inst.w_a.at(i));
      ++row;
    }
    for (const Mat& f : images) append_commutation(f, sys, row);

    Mat x = solve_x(sys, rhs, m);

    // Held-out commutation gate; on failure the span was too thin, so
    // double the sample count and try again.
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      Mat f = sampler();
      if (!commutes(x, f)) {
        ok = false;
        images.push_back(std::move(f));
      }
    }
    res.samples_used = static_cast<int>(images.size());
    if (ok) {
      res.success = true;
      res.post_check_ok = true;
      res.key = x * inst.w_b;
      return res;
    }
    if (static_cast<int>(images.size()) >= max_samples) {
      res.key = x * inst.w_b;  // best effort, flagged unverified
      return res;
    }
    while (static_cast<int>(images.size()) < 2 * res.samples_used &&
           static_cast<int>(images.size()) < max_samples)
      images.push_back(sampler());
  }
}

Vec attack_ru(const RuInstance& inst) {
  int n = inst.n;
  Ring ring = inst.c.ring();

  int rows = 2 * n * n + n;
  Mat sys(ring, rows, n * n);
  Mat rhs(ring, rows, 1);
  int row = 0;
  append_commutation(inst.c, sys, row);
  append_commutation(inst.d_mat, sys, row);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sys.set(row, i * n + j, inst.d.at(j));
    rhs.set(row, 0, inst.w_a.at(i));
    ++row;
  }

  Mat x = solve_x(sys, rhs, n);
  return x * inst.w_b;
}

}  // namespace matkex
