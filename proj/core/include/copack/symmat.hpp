#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace copack {

/// Dense symmetric real matrix. Writes keep both triangles in sync; all
/// entries must stay finite.
class Symmat {
 public:
  explicit Symmat(int n);

  // Builds from full row data; rejects non-square or asymmetric (beyond
  // sym_tol) input.
  static Symmat from_rows(const std::vector<std::vector<double>>& rows, double sym_tol = 0.0);

  int size() const { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, double value);

  double trace() const;
  double max_abs() const;
  Symmat principal_submatrix(std::span<const int> indices) const;
  std::vector<double> multiply(std::span<const double> v) const;
  double quad_form(std::span<const double> a) const;

  // FNV-1a over the raw entry bytes; used to tag numerical failures.
  uint64_t content_hash() const;
  std::string content_hash_hex() const;

  const std::vector<double>& data() const { return a_; }

 private:
  int n_;
  std::vector<double> a_;  // row-major, full storage
};

/// Eigen-decomposition of a Symmat: ascending eigenvalues, orthonormal
/// eigenvectors stored as columns.
struct SpectralDecomp {
  int n = 0;
  std::vector<double> eigenvalues;    // ascending
  std::vector<double> eigenvectors;   // row-major n x n, column k = k-th eigenvector

  double vec(int component, int k) const {
    return eigenvectors[static_cast<size_t>(component) * n + k];
  }
  std::vector<double> eigenvector(int k) const;
};

// Cyclic Jacobi rotations, capped at 100 sweeps; the result is verified
// against the reconstruction and orthonormality tolerances before returning.
SpectralDecomp eig_sym(const Symmat& a);

namespace detail {
// Gaussian elimination with partial pivoting; a is row-major n x n, consumed.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b, int n);
}  // namespace detail

}  // namespace copack
