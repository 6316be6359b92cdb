#include "copack/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include "copack/errors.hpp"

namespace copack {

Symmat::Symmat(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
  if (n < 1) throw std::invalid_argument("Symmat: dimension must be >= 1");
}

Symmat Symmat::from_rows(const std::vector<std::vector<double>>& rows, double sym_tol) {
  const int n = static_cast<int>(rows.size());
  Symmat m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("Symmat: input is not square");
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(rows[i][j])) throw std::invalid_argument("Symmat: non-finite entry");
      m.a_[static_cast<size_t>(i) * n + j] = rows[i][j];
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = std::abs(m(i, j) - m(j, i));
      if (d > sym_tol)
        throw std::invalid_argument("Symmat: asymmetric entry at (" + std::to_string(i) + "," +
                                    std::to_string(j) + "), |difference| = " + std::to_string(d));
    }
  // Symmetrize exactly so later arithmetic sees one value.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      m.a_[static_cast<size_t>(i) * n + j] = v;
      m.a_[static_cast<size_t>(j) * n + i] = v;
    }
  return m;
}

void Symmat::set(int i, int j, double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("Symmat::set: non-finite value");
  a_[static_cast<size_t>(i) * n_ + j] = value;
  a_[static_cast<size_t>(j) * n_ + i] = value;
}

double Symmat::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Symmat::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

Symmat Symmat::principal_submatrix(std::span<const int> indices) const {
  Symmat s(static_cast<int>(indices.size()));
  for (size_t i = 0; i < indices.size(); ++i)
    for (size_t j = 0; j < indices.size(); ++j)
      s.a_[i * indices.size() + j] = (*this)(indices[i], indices[j]);
  return s;
}

std::vector<double> Symmat::multiply(std::span<const double> v) const {
  std::vector<double> out(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    const double* row = a_.data() + static_cast<size_t>(i) * n_;
    for (int j = 0; j < n_; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

double Symmat::quad_form(std::span<const double> a) const {
  double acc = 0.0;
  for (int i = 0; i < n_; ++i) {
    const double* row = a_.data() + static_cast<size_t>(i) * n_;
    double inner = 0.0;
    for (int j = 0; j < n_; ++j) inner += row[j] * a[j];
    acc += a[i] * inner;
  }
  return acc;
}

uint64_t Symmat::content_hash() const {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (double v : a_) {
    uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

std::string Symmat::content_hash_hex() const {
  static const char* digits = "0123456789abcdef";
  uint64_t h = content_hash();
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::vector<double> SpectralDecomp::eigenvector(int k) const {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = vec(i, k);
  return v;
}

namespace {

void verify_decomposition(const Symmat& a, const SpectralDecomp& d) {
  const int n = a.size();
  const double scale = 1.0 + a.max_abs();
  double recon_err = 0.0, ortho_err = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double rij = 0.0, qij = 0.0;
      for (int k = 0; k < n; ++k) {
        rij += d.vec(i, k) * d.eigenvalues[k] * d.vec(j, k);
        qij += d.vec(i, k) * d.vec(j, k);
      }
      recon_err = std::max(recon_err, std::abs(rij - a(i, j)));
      ortho_err = std::max(ortho_err, std::abs(qij - (i == j ? 1.0 : 0.0)));
    }
  if (recon_err > 1e-10 * scale || ortho_err > 1e-10)
    throw NumericError("eig_sym: decomposition verification failed (reconstruction " +
                       std::to_string(recon_err) + ", orthonormality " + std::to_string(ortho_err) +
                       ", matrix " + a.content_hash_hex() + ")");
}

}  // namespace

SpectralDecomp eig_sym(const Symmat& input) {
  const int n = input.size();
  std::vector<double> a = input.data();
  std::vector<double> q(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) q[static_cast<size_t>(i) * n + i] = 1.0;

  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
  auto qt = [&](int i, int j) -> double& { return q[static_cast<size_t>(i) * n + j]; };

  const double scale = input.max_abs();
  const double off_tol = 1e-15 * (scale > 0 ? scale : 1.0) * n;
  constexpr int kMaxSweeps = 100;

  bool converged = (n == 1);
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int r = p + 1; r < n; ++r) off += at(p, r) * at(p, r);
    if (std::sqrt(off) <= off_tol) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apr = at(p, r);
        if (std::abs(apr) <= off_tol / (10.0 * n)) continue;
        const double tau = (at(r, r) - at(p, p)) / (2.0 * apr);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akr = at(k, r);
          at(k, p) = c * akp - s * akr;
          at(k, r) = s * akp + c * akr;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), ark = at(r, k);
          at(p, k) = c * apk - s * ark;
          at(r, k) = s * apk + c * ark;
        }
        for (int k = 0; k < n; ++k) {
          const double qkp = qt(k, p), qkr = qt(k, r);
          qt(k, p) = c * qkp - s * qkr;
          qt(k, r) = s * qkp + c * qkr;
        }
      }
    }
  }
  if (!converged) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int r = p + 1; r < n; ++r) off += at(p, r) * at(p, r);
    if (std::sqrt(off) > off_tol)
      throw NumericError("eig_sym: no convergence after 100 sweeps (matrix " +
                         input.content_hash_hex() + ")");
  }

  SpectralDecomp d;
  d.n = n;
  d.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) d.eigenvalues[i] = at(i, i);

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return d.eigenvalues[x] < d.eigenvalues[y]; });

  SpectralDecomp out;
  out.n = n;
  out.eigenvalues.resize(n);
  out.eigenvectors.assign(static_cast<size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = d.eigenvalues[order[k]];
    // Canonical sign: largest-magnitude component positive.
    int imax = 0;
    double vmax = 0.0;
    for (int i = 0; i < n; ++i) {
      const double v = qt(i, order[k]);
      if (std::abs(v) > std::abs(vmax)) {
        vmax = v;
        imax = i;
      }
    }
    const double sign = (qt(imax, order[k]) < 0.0) ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i)
      out.eigenvectors[static_cast<size_t>(i) * n + k] = sign * qt(i, order[k]);
  }

  verify_decomposition(input, out);
  return out;
}

namespace detail {

std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b, int n) {
  if (static_cast<int>(b.size()) != n || a.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("solve_dense: size mismatch");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(a[static_cast<size_t>(perm[col]) * n + col]);
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(a[static_cast<size_t>(perm[r]) * n + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-300) throw NumericError("solve_dense: singular matrix");
    std::swap(perm[col], perm[piv]);
    const size_t prow = static_cast<size_t>(perm[col]) * n;
    const double diag = a[prow + col];
    for (int r = col + 1; r < n; ++r) {
      const size_t row = static_cast<size_t>(perm[r]) * n;
      const double f = a[row + col] / diag;
      if (f == 0.0) continue;
      a[row + col] = 0.0;
      for (int j = col + 1; j < n; ++j) a[row + j] -= f * a[prow + j];
      b[perm[r]] -= f * b[perm[col]];
    }
  }
  std::vector<double> x(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    const size_t row = static_cast<size_t>(perm[i]) * n;
    double acc = b[perm[i]];
    for (int j = i + 1; j < n; ++j) acc -= a[row + j] * x[j];
    x[i] = acc / a[row + i];
  }
  return x;
}

}  // namespace detail

}  // namespace copack
