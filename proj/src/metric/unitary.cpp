#include "sofic/metric/unitary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sofic {

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  const ComplexMatrix d = u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

void require_unitary(const ComplexMatrix& u) {
  if (u.rows() == 0 || unitarity_defect(u) > kUnitaryTolerance) {
    throw std::invalid_argument("matrix is not unitary within 1e-9");
  }
}

double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("hs_distance: dimension mismatch");
  return std::sqrt((a - b).squaredNorm() / static_cast<double>(a.rows()));
}

double pseudo_hs_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("pseudo_hs_distance: dimension mismatch");
  constexpr int kGrid = 1 << 12;
  const double two_pi = 2.0 * std::numbers::pi;
  auto at = [&](double theta) { return hs_distance(a, std::polar(1.0, theta) * b); };
  int best = 0;
  double best_value = at(0.0);
  for (int k = 1; k < kGrid; ++k) {
    const double v = at(two_pi * k / kGrid);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  double lo = two_pi * (best - 1) / kGrid;
  double hi = two_pi * (best + 1) / kGrid;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
  double f1 = at(x1), f2 = at(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = at(x2);
    }
  }
  return std::min({best_value, f1, f2});
}

ComplexMatrix complex_permutation_matrix(const Permutation& sigma) {
  const auto n = static_cast<Eigen::Index>(sigma.degree());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (std::uint32_t j = 0; j < sigma.degree(); ++j) m(sigma(j), j) = 1.0;
  return m;
}

ComplexMatrix complex_block_diagonal(const std::vector<ComplexMatrix>& blocks) {
  Eigen::Index total = 0;
  for (const auto& b : blocks) total += b.rows();
  ComplexMatrix m = ComplexMatrix::Zero(total, total);
  Eigen::Index off = 0;
  for (const auto& b : blocks) {
    m.block(off, off, b.rows(), b.cols()) = b;
    off += b.rows();
  }
  return m;
}

ComplexMatrix complex_hat(const ComplexMatrix& a) {
  return complex_block_diagonal({a, ComplexMatrix::Identity(a.rows(), a.cols())});
}

ComplexMatrix complex_kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return m;
}

ComplexMatrix random_unitary(std::size_t n, SplitMix64& rng) {
  const auto k = static_cast<Eigen::Index>(n);
  auto gaussian = [&]() {
    double u1 = rng.uniform01();
    while (u1 <= 0.0) u1 = rng.uniform01();
    const double u2 = rng.uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  };
  ComplexMatrix g(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) g(i, j) = std::complex<double>(gaussian(), gaussian());
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR();
  for (Eigen::Index j = 0; j < k; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

}  // namespace sofic
