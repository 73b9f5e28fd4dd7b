#include "mub/matrix_core.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace mub {

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return std::lcm(a, b);
}

double scale_value(ExactBasis::Scale s, int dim) {
  return s == ExactBasis::Scale::kUnit ? 1.0 : 1.0 / std::sqrt(double(dim));
}

}  // namespace

ExactBasis::ExactBasis(int dim, std::int64_t root_order, Scale scale)
    : dim_(dim), root_order_(root_order), scale_(scale),
      grid_(static_cast<std::size_t>(dim) * dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (root_order < 1) throw std::invalid_argument("root order must be >= 1");
}

const std::optional<std::int64_t>& ExactBasis::at(int row, int col) const {
  return grid_[static_cast<std::size_t>(row) * dim_ + col];
}

void ExactBasis::set(int row, int col, std::optional<std::int64_t> exponent) {
  if (exponent) {
    std::int64_t e = *exponent % root_order_;
    if (e < 0) e += root_order_;
    exponent = e;
  }
  grid_[static_cast<std::size_t>(row) * dim_ + col] = exponent;
}

Matrix ExactBasis::to_matrix() const {
  Matrix m = Matrix::Zero(dim_, dim_);
  double sc = scale_value(scale_, dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if (auto e = at(r, c)) m(r, c) = sc * root_value(root_order_, *e);
  return m;
}

ExactBasis ExactBasis::reduced() const {
  std::int64_t g = root_order_;
  for (const auto& e : grid_)
    if (e) g = std::gcd(g, *e);
  if (g <= 1) return *this;
  ExactBasis out(dim_, root_order_ / g, scale_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if (auto e = at(r, c)) out.set(r, c, *e / g);
  return out;
}

ExactBasis ExactBasis::rescaled(std::int64_t new_order) const {
  if (new_order % root_order_ != 0)
    throw std::invalid_argument("new root order must be a multiple");
  std::int64_t f = new_order / root_order_;
  ExactBasis out(dim_, new_order, scale_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if (auto e = at(r, c)) out.set(r, c, *e * f);
  return out;
}

bool ExactBasis::same_entries(const ExactBasis& other) const {
  if (dim_ != other.dim_ || scale_ != other.scale_) return false;
  std::int64_t common = lcm64(root_order_, other.root_order_);
  ExactBasis a = rescaled(common);
  ExactBasis b = other.rescaled(common);
  return a.grid_ == b.grid_;
}

std::optional<ExactBasis> ExactBasis::from_matrix(const Matrix& m,
                                                  std::int64_t root_order,
                                                  Scale scale, double tol) {
  int d = static_cast<int>(m.rows());
  if (m.cols() != d) return std::nullopt;
  double sc = scale_value(scale, d);
  ExactBasis out(d, root_order, scale);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      Complex z = m(r, c);
      if (std::abs(z) < tol) continue;
      if (std::abs(std::abs(z) - sc) > tol) return std::nullopt;
      double turns = std::arg(z) / (2.0 * std::numbers::pi);
      double ideal = turns * static_cast<double>(root_order);
      auto k = static_cast<std::int64_t>(std::llround(ideal));
      if (std::abs(ideal - static_cast<double>(k)) >
          tol * static_cast<double>(root_order))
        return std::nullopt;
      out.set(r, c, k);
    }
  }
  // reject grids that merely approximate: reconstruction must agree
  if ((out.to_matrix() - m).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  return out;
}

ExactBasis ExactBasis::identity(int dim) {
  ExactBasis out(dim, 1, Scale::kUnit);
  for (int i = 0; i < dim; ++i) out.set(i, i, 0);
  return out;
}

Matrix ExactDiagonal::to_matrix() const {
  int d = dim();
  Matrix m = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = root_value(root_order, exponents[i]);
  return m;
}

Basis Basis::from_exact(std::string label, ExactBasis e) {
  Basis b;
  b.label = std::move(label);
  b.matrix = e.to_matrix();
  b.exact = std::move(e);
  return b;
}

Basis Basis::from_matrix(std::string label, Matrix m) {
  if (!is_unitary(m))
    throw std::invalid_argument("basis columns are not orthonormal: " + label);
  Basis b;
  b.label = std::move(label);
  b.matrix = std::move(m);
  return b;
}

double unitarity_residual(const Matrix& m) {
  Matrix g = m.adjoint() * m;
  g -= Matrix::Identity(m.cols(), m.cols());
  return g.cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix& m, double tol) {
  return m.rows() == m.cols() && unitarity_residual(m) < tol;
}

double overlap_sq(const Vector& v, const Vector& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("overlap of vectors of different dimension");
  return std::norm(v.dot(w));  // Eigen's dot conjugates the left argument
}

Matrix tensor(const Matrix& left, const Matrix& right) {
  const auto ra = left.rows(), ca = left.cols();
  const auto rb = right.rows(), cb = right.cols();
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      out.block(i * rb, j * cb, rb, cb) = left(i, j) * right;
  return out;
}

ExactBasis tensor(const ExactBasis& left, const ExactBasis& right) {
  if ((left.scale() == ExactBasis::Scale::kUnit) !=
      (right.scale() == ExactBasis::Scale::kUnit))
    throw std::invalid_argument("cannot tensor mixed-scale exact bases");
  std::int64_t order = lcm64(left.root_order(), right.root_order());
  ExactBasis a = left.rescaled(order);
  ExactBasis b = right.rescaled(order);
  int da = left.dim(), db = right.dim();
  ExactBasis out(da * db, order, left.scale());
  for (int ra = 0; ra < da; ++ra)
    for (int rb = 0; rb < db; ++rb)
      for (int ca = 0; ca < da; ++ca)
        for (int cb = 0; cb < db; ++cb) {
          const auto& ea = a.at(ra, ca);
          const auto& eb = b.at(rb, cb);
          if (ea && eb) out.set(ra * db + rb, ca * db + cb, *ea + *eb);
        }
  return out;
}

Basis tensor(const Basis& left, const Basis& right) {
  Basis out;
  out.label = left.label + "x" + right.label;
  out.matrix = tensor(left.matrix, right.matrix);
  if (left.exact && right.exact &&
      (left.exact->scale() == ExactBasis::Scale::kUnit) ==
          (right.exact->scale() == ExactBasis::Scale::kUnit))
    out.exact = tensor(*left.exact, *right.exact);
  return out;
}

Basis apply_unitary(const Matrix& u, const Basis& b) {
  if (u.rows() != b.dim() || u.cols() != b.dim())
    throw std::invalid_argument("operator dimension mismatch");
  if (!is_unitary(u)) throw std::invalid_argument("operator is not unitary");
  Basis out;
  out.label = b.label;
  out.matrix = u * b.matrix;
  return out;
}

ExactBasis apply_diagonal(const ExactDiagonal& d, const ExactBasis& b) {
  if (d.dim() != b.dim())
    throw std::invalid_argument("diagonal dimension mismatch");
  std::int64_t order = lcm64(d.root_order, b.root_order());
  std::int64_t fd = order / d.root_order;
  ExactBasis src = b.rescaled(order);
  ExactBasis out(b.dim(), order, b.scale());
  for (int r = 0; r < b.dim(); ++r)
    for (int c = 0; c < b.dim(); ++c)
      if (auto e = src.at(r, c)) out.set(r, c, *e + d.exponents[r] * fd);
  return out;
}

Basis apply_diagonal(const ExactDiagonal& d, const Basis& b) {
  Basis out;
  out.label = b.label;
  if (b.exact) {
    out.exact = apply_diagonal(d, *b.exact);
    out.matrix = out.exact->to_matrix();
  } else {
    out.matrix = d.to_matrix() * b.matrix;
  }
  return out;
}

Vector swap_subsystems(const Vector& state, int dim_a, int dim_b) {
  if (state.size() != static_cast<Eigen::Index>(dim_a) * dim_b)
    throw std::invalid_argument("dimension does not factor as given");
  Vector out(state.size());
  for (int a = 0; a < dim_a; ++a)
    for (int b = 0; b < dim_b; ++b) out(b * dim_a + a) = state(a * dim_b + b);
  return out;
}

Basis swap_subsystems(const Basis& b, int dim_a, int dim_b) {
  if (b.dim() != dim_a * dim_b)
    throw std::invalid_argument("dimension does not factor as given");
  Basis out;
  out.label = b.label;
  out.matrix = Matrix(b.dim(), b.dim());
  for (int j = 0; j < b.dim(); ++j)
    out.matrix.col(j) = swap_subsystems(Vector(b.matrix.col(j)), dim_a, dim_b);
  if (b.exact && dim_a == dim_b) {
    ExactBasis e(b.exact->dim(), b.exact->root_order(), b.exact->scale());
    for (int ra = 0; ra < dim_a; ++ra)
      for (int rb = 0; rb < dim_b; ++rb)
        for (int c = 0; c < b.dim(); ++c)
          e.set(rb * dim_a + ra, c, b.exact->at(ra * dim_b + rb, c));
    out.exact = std::move(e);
  }
  return out;
}

}  // namespace mub
