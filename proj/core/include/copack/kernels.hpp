#pragma once

#include <span>
#include <vector>

#include "copack/symmat.hpp"

namespace copack {

/// Rotation-invariant kernel on the unit sphere S^{dim-1}:
///   (x, y) -> sum_k coeffs[k] * (x.y)^k.
struct PolyKernel {
  int dim = 0;
  std::vector<double> coeffs;

  PolyKernel(int dim, std::vector<double> coeffs);
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Horner evaluation of the kernel profile at s = x.y; |s| may exceed 1 by at
// most 1e-12.
double eval_kernel(const PolyKernel& k, double s);

/// Jacobi polynomials with parameters ((dim-3)/2, (dim-3)/2), renormalized so
/// every degree evaluates to 1 at t = 1. These span the positive-definite
/// zonal kernels on S^{dim-1}; dim = 2 degenerates to the Chebyshev family.
class JacobiBasis {
 public:
  JacobiBasis(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }

  // Three-term recurrence evaluation of the degree-k basis polynomial.
  double eval(int k, double t) const;

  // Collocation data at degree+1 Chebyshev nodes: nodes and the table of
  // basis polynomial values used for basis conversion.
  const std::vector<double>& collocation_nodes() const { return nodes_; }
  double table(int node, int k) const { return table_[static_cast<size_t>(node) * (degree_ + 1) + k]; }

 private:
  int dim_;
  int degree_;
  std::vector<double> nodes_;
  std::vector<double> table_;
};

inline double jacobi_eval(const JacobiBasis& b, int k, double t) { return b.eval(k, t); }

/// Finite list of unit vectors on S^{dim-1}. Norms are validated to 1e-12.
struct PointConfig {
  int dim = 0;
  std::vector<std::vector<double>> points;

  PointConfig(int dim, std::vector<std::vector<double>> points);
  int size() const { return static_cast<int>(points.size()); }
};

// Total kernel energy sum_{i,j} k(x_i . x_j), diagonal included.
double config_energy(const PolyKernel& k, const PointConfig& x);

// Matrix with entries P~_k(x_i . x_j); positive semidefinite for every k.
Symmat gram_matrix(const JacobiBasis& b, int k, const PointConfig& x);

// Basis conversion by collocation at the Chebyshev nodes. Supported up to
// degree 24, where the collocation systems stay well conditioned.
std::vector<double> monomial_from_jacobi(const JacobiBasis& b, std::span<const double> g);
std::vector<double> jacobi_from_monomial(const JacobiBasis& b, std::span<const double> c);

// Coefficients of the derivative polynomial.
std::vector<double> derivative_coeffs(std::span<const double> coeffs);

}  // namespace copack
