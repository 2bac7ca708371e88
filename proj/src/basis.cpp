#include "tct/basis.hpp"

#include <cmath>

namespace tct {

OperatorBasis::OperatorBasis(std::vector<Operator> elements, double normalization)
    : elements_(std::move(elements)), normalization_(normalization) {
  if (elements_.empty()) throw_error(ErrorCode::InvalidArgument, "empty basis");
  const int d = elements_[0].dim();
  if (static_cast<int>(elements_.size()) != d * d)
    throw_error(ErrorCode::InvalidArgument, "basis must have D^2 elements");
  for (const auto& e : elements_) {
    if (e.dim() != d) throw_error(ErrorCode::DimensionMismatch, "basis element dimension mismatch");
    if (!e.is_hermitian()) throw_error(ErrorCode::InvalidArgument, "basis element not Hermitian");
  }
  // B_0 proportional to identity
  const Matrix id = Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d));
  if ((elements_[0].matrix() - id * std::sqrt(normalization_)).cwiseAbs().maxCoeff() > 1e-10)
    throw_error(ErrorCode::InvalidArgument, "B_0 must be I/sqrt(D) (times sqrt(c))");
  // pairwise trace orthogonality
  for (std::size_t a = 0; a < elements_.size(); ++a)
    for (std::size_t b = a; b < elements_.size(); ++b) {
      const Complex t = (elements_[a].matrix() * elements_[b].matrix()).trace();
      const double want = (a == b) ? normalization_ : 0.0;
      if (std::abs(t - want) > 1e-12 * d)
        throw_error(ErrorCode::InvalidArgument, "basis is not trace-orthogonal");
    }
}

bool OperatorBasis::equal_norm(double tolerance) const {
  const double n0 = elements_[1].norm();
  for (int i = 1; i < size(); ++i)
    if (std::abs(elements_[static_cast<std::size_t>(i)].norm() - n0) > tolerance) return false;
  return true;
}

double OperatorBasis::norm_bound() const {
  double m = 0.0;
  for (int i = 1; i < size(); ++i) m = std::max(m, elements_[static_cast<std::size_t>(i)].norm());
  return m;
}

OperatorBasis gell_mann_basis(int dim) {
  if (dim < 2) throw_error(ErrorCode::InvalidArgument, "basis dimension must be >= 2");
  const double inv2 = 1.0 / std::sqrt(2.0);
  std::vector<Operator> mats;
  mats.reserve(static_cast<std::size_t>(dim) * dim);
  mats.push_back(Operator::hermitian(Matrix::Identity(dim, dim) / std::sqrt(double(dim))));
  for (int j = 0; j < dim; ++j)
    for (int k = j + 1; k < dim; ++k) {
      Matrix s = Matrix::Zero(dim, dim);
      s(j, k) = s(k, j) = inv2;
      mats.push_back(Operator::hermitian(std::move(s)));
      Matrix a = Matrix::Zero(dim, dim);
      a(j, k) = Complex(0, -inv2);
      a(k, j) = Complex(0, inv2);
      mats.push_back(Operator::hermitian(std::move(a)));
    }
  for (int l = 1; l < dim; ++l) {
    Matrix h = Matrix::Zero(dim, dim);
    const double f = 1.0 / std::sqrt(double(l) * (l + 1));
    for (int j = 0; j < l; ++j) h(j, j) = f;
    h(l, l) = -l * f;
    mats.push_back(Operator::hermitian(std::move(h)));
  }
  return OperatorBasis(std::move(mats), 1.0);
}

OperatorBasis pauli_basis() { return gell_mann_basis(2); }

StructureTensors::StructureTensors(int size, std::vector<double> f, std::vector<double> g)
    : n_(size), f_(std::move(f)), g_(std::move(g)) {
  const std::size_t want = static_cast<std::size_t>(n_) * n_ * n_;
  if (f_.size() != want || g_.size() != want)
    throw_error(ErrorCode::InvalidArgument, "structure tensor size mismatch");
}

StructureTensors structure_tensors(const OperatorBasis& basis) {
  const int n = basis.size();
  const double c = basis.normalization();
  std::vector<double> f(static_cast<std::size_t>(n) * n * n, 0.0);
  std::vector<double> g(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Matrix prod = basis.element(a).matrix() * basis.element(b).matrix();
      const Matrix comm = prod - basis.element(b).matrix() * basis.element(a).matrix();
      const Matrix anti = prod + basis.element(b).matrix() * basis.element(a).matrix();
      for (int cc = 0; cc < n; ++cc) {
        const std::size_t i = (static_cast<std::size_t>(a) * n + b) * n + cc;
        f[i] = (Complex(0, -1) * (comm * basis.element(cc).matrix()).trace()).real() / c;
        g[i] = (anti * basis.element(cc).matrix()).trace().real() / c;
      }
    }
  return StructureTensors(n, std::move(f), std::move(g));
}

} // namespace tct
