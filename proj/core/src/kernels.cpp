#include "copack/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "copack/errors.hpp"

namespace copack {

namespace {
constexpr int kMaxConversionDegree = 24;
constexpr double kDomainSlack = 1e-12;
}  // namespace

PolyKernel::PolyKernel(int dim_in, std::vector<double> coeffs_in)
    : dim(dim_in), coeffs(std::move(coeffs_in)) {
  if (dim < 2) throw std::invalid_argument("PolyKernel: ambient dimension must be >= 2");
  if (coeffs.empty()) throw std::invalid_argument("PolyKernel: empty coefficient vector");
  for (double c : coeffs)
    if (!std::isfinite(c)) throw std::invalid_argument("PolyKernel: non-finite coefficient");
}

double eval_kernel(const PolyKernel& k, double s) {
  if (std::abs(s) > 1.0 + kDomainSlack)
    throw std::domain_error("eval_kernel: argument outside [-1, 1]");
  double acc = 0.0;
  for (size_t i = k.coeffs.size(); i-- > 0;) acc = acc * s + k.coeffs[i];
  return acc;
}

JacobiBasis::JacobiBasis(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 2) throw std::invalid_argument("JacobiBasis: ambient dimension must be >= 2");
  if (degree < 0) throw std::invalid_argument("JacobiBasis: negative degree");
  const int d = degree_;
  nodes_.resize(d + 1);
  for (int i = 0; i <= d; ++i)
    nodes_[i] = std::cos(M_PI * (2.0 * i + 1.0) / (2.0 * (d + 1)));
  table_.resize(static_cast<size_t>(d + 1) * (d + 1));
  for (int i = 0; i <= d; ++i)
    for (int k = 0; k <= d; ++k) table_[static_cast<size_t>(i) * (d + 1) + k] = eval(k, nodes_[i]);
}

double JacobiBasis::eval(int k, double t) const {
  if (k < 0 || k > degree_) throw std::out_of_range("JacobiBasis::eval: degree out of range");
  if (std::abs(t) > 1.0 + kDomainSlack)
    throw std::domain_error("JacobiBasis::eval: argument outside [-1, 1]");
  t = std::clamp(t, -1.0, 1.0);
  if (k == 0) return 1.0;
  // Normalized ultraspherical recurrence; P~_0 = 1, P~_1 = t, and
  //   P~_{k+1} = ((2k + n - 2) t P~_k - k P~_{k-1}) / (k + n - 2),
  // which keeps P~_k(1) = 1 for all k and all n >= 2.
  double prev = 1.0, cur = t;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + dim_ - 2.0) * t * cur - j * prev) / (j + dim_ - 2.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

PointConfig::PointConfig(int dim_in, std::vector<std::vector<double>> points_in)
    : dim(dim_in), points(std::move(points_in)) {
  if (dim < 1) throw std::invalid_argument("PointConfig: dimension must be >= 1");
  if (points.empty()) throw std::invalid_argument("PointConfig: needs at least one point");
  for (const auto& x : points) {
    if (static_cast<int>(x.size()) != dim)
      throw std::invalid_argument("PointConfig: point dimension mismatch");
    double norm2 = 0.0;
    for (double c : x) norm2 += c * c;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12)
      throw std::invalid_argument("PointConfig: point is not on the unit sphere");
  }
}

namespace {
double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}
}  // namespace

double config_energy(const PolyKernel& k, const PointConfig& x) {
  if (k.dim != x.dim) throw std::invalid_argument("config_energy: dimension mismatch");
  const int n = x.size();
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    acc += eval_kernel(k, std::clamp(dot(x.points[i], x.points[i]), -1.0, 1.0));
    for (int j = i + 1; j < n; ++j)
      acc += 2.0 * eval_kernel(k, std::clamp(dot(x.points[i], x.points[j]), -1.0, 1.0));
  }
  return acc;
}

Symmat gram_matrix(const JacobiBasis& b, int k, const PointConfig& x) {
  if (b.dim() != x.dim) throw std::invalid_argument("gram_matrix: dimension mismatch");
  const int n = x.size();
  Symmat g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      g.set(i, j, b.eval(k, std::clamp(dot(x.points[i], x.points[j]), -1.0, 1.0)));
  return g;
}

namespace {
void check_conversion_degree(const JacobiBasis& b, size_t len) {
  if (static_cast<int>(len) != b.degree() + 1)
    throw std::invalid_argument("basis conversion: coefficient count does not match basis degree");
  if (b.degree() > kMaxConversionDegree)
    throw std::invalid_argument("basis conversion: supported only up to degree 24");
}
}  // namespace

std::vector<double> monomial_from_jacobi(const JacobiBasis& b, std::span<const double> g) {
  check_conversion_degree(b, g.size());
  const int d = b.degree();
  const auto& nodes = b.collocation_nodes();
  // Solve V c = P g where V is the monomial Vandermonde at the nodes.
  std::vector<double> vand(static_cast<size_t>(d + 1) * (d + 1));
  std::vector<double> values(d + 1, 0.0);
  for (int i = 0; i <= d; ++i) {
    double p = 1.0;
    for (int k = 0; k <= d; ++k) {
      vand[static_cast<size_t>(i) * (d + 1) + k] = p;
      p *= nodes[i];
      values[i] += b.table(i, k) * g[k];
    }
  }
  return detail::solve_dense(std::move(vand), std::move(values), d + 1);
}

std::vector<double> jacobi_from_monomial(const JacobiBasis& b, std::span<const double> c) {
  check_conversion_degree(b, c.size());
  const int d = b.degree();
  const auto& nodes = b.collocation_nodes();
  // Solve P g = V c by collocation.
  std::vector<double> pmat(static_cast<size_t>(d + 1) * (d + 1));
  std::vector<double> values(d + 1, 0.0);
  for (int i = 0; i <= d; ++i) {
    double p = 1.0;
    for (int k = 0; k <= d; ++k) {
      pmat[static_cast<size_t>(i) * (d + 1) + k] = b.table(i, k);
      values[i] += c[k] * p;
      p *= nodes[i];
    }
  }
  return detail::solve_dense(std::move(pmat), std::move(values), d + 1);
}

std::vector<double> derivative_coeffs(std::span<const double> coeffs) {
  if (coeffs.size() <= 1) return {0.0};
  std::vector<double> out(coeffs.size() - 1);
  for (size_t k = 1; k < coeffs.size(); ++k) out[k - 1] = static_cast<double>(k) * coeffs[k];
  return out;
}

}  // namespace copack
