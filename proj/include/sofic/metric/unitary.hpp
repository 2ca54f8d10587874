#pragma once

#include "sofic/core/random.hpp"
#include "sofic/metric/permutation.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace sofic {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kUnitaryTolerance = 1e-9;

/// Max-entry deviation of U U* from the identity.
double unitarity_defect(const ComplexMatrix& u);
/// Throws std::invalid_argument when the defect exceeds kUnitaryTolerance.
void require_unitary(const ComplexMatrix& u);

/// sqrt((1/n) Tr((A-B)(A-B)*)).
double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b);
/// min over |lambda| = 1 of hs_distance(A, lambda B): 4096-point phase grid,
/// then golden-section refinement around the best grid point.
double pseudo_hs_distance(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix complex_permutation_matrix(const Permutation& sigma);
ComplexMatrix complex_hat(const ComplexMatrix& a);
ComplexMatrix complex_kronecker(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix complex_block_diagonal(const std::vector<ComplexMatrix>& blocks);

/// Haar-ish random unitary: QR of a Gaussian matrix with phases fixed.
ComplexMatrix random_unitary(std::size_t n, SplitMix64& rng);

struct UnitaryGroup {
  using Element = ComplexMatrix;
  using Distance = double;
  std::size_t dim;

  Element identity() const { return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)); }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const { return a.adjoint(); }
  Distance distance(const Element& a, const Element& b) const { return hs_distance(a, b); }
};

}  // namespace sofic
