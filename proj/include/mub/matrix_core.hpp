#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mub/exact_field.hpp"

namespace mub {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kUnitaryTol = 1e-10;

/// A d x d basis whose entries are scale * alpha_L^k or exactly zero,
/// stored as integer exponents. Columns are the basis states. This is the
/// lossless form every construction emits; floats only appear on conversion.
class ExactBasis {
 public:
  enum class Scale { kUnit, kInvSqrtDim };

  ExactBasis(int dim, std::int64_t root_order, Scale scale);

  int dim() const { return dim_; }
  std::int64_t root_order() const { return root_order_; }
  Scale scale() const { return scale_; }

  /// Exponent at (row, col); std::nullopt encodes a zero entry.
  const std::optional<std::int64_t>& at(int row, int col) const;
  void set(int row, int col, std::optional<std::int64_t> exponent);

  Matrix to_matrix() const;

  /// Same basis with the smallest root order that can express every entry.
  ExactBasis reduced() const;
  /// Same basis re-expressed over a multiple of the current root order.
  ExactBasis rescaled(std::int64_t new_order) const;

  /// Entry-exact equality after normalizing both sides to a common order.
  bool same_entries(const ExactBasis& other) const;

  /// Recovers the exact form of a matrix known to have entries on the
  /// scaled root-of-unity grid; nullopt if any entry is off-grid.
  static std::optional<ExactBasis> from_matrix(const Matrix& m,
                                               std::int64_t root_order,
                                               Scale scale,
                                               double tol = 1e-9);

  static ExactBasis identity(int dim);

 private:
  int dim_;
  std::int64_t root_order_;
  Scale scale_;
  std::vector<std::optional<std::int64_t>> grid_;  // row-major
};

/// Diagonal unitary with entries alpha_L^k, used for the cycling operator W,
/// control-phase powers and the three-qubit gates. Applying it to an
/// ExactBasis stays in exact exponent arithmetic.
struct ExactDiagonal {
  std::int64_t root_order = 1;
  std::vector<std::int64_t> exponents;

  int dim() const { return static_cast<int>(exponents.size()); }
  Matrix to_matrix() const;
};

/// Dense numeric basis: a unitary matrix whose columns are the states.
struct Basis {
  std::string label;
  Matrix matrix;
  std::optional<ExactBasis> exact;  // present when built by a lossless route

  int dim() const { return static_cast<int>(matrix.rows()); }
  Vector column(int j) const { return matrix.col(j); }

  static Basis from_exact(std::string label, ExactBasis e);
  /// Validates column orthonormality within kUnitaryTol; throws otherwise.
  static Basis from_matrix(std::string label, Matrix m);
};

/// Construction parameters recorded on every generated set.
struct Provenance {
  std::string method;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> theta;
  std::optional<int> dim_a;
  std::optional<int> dim_b;
  std::optional<int> subsystems;
  std::optional<std::uint64_t> seed;
};

/// Ordered collection of bases over one dimension.
struct MubSet {
  int dim = 0;
  Provenance provenance;
  std::vector<Basis> bases;

  std::size_t size() const { return bases.size(); }
  bool complete() const { return bases.size() == static_cast<std::size_t>(dim) + 1; }
};

/// Max |(M^dagger M - I)_ij|.
double unitarity_residual(const Matrix& m);
bool is_unitary(const Matrix& m, double tol = kUnitaryTol);

/// |<v|w>|^2. Throws std::invalid_argument on dimension mismatch.
double overlap_sq(const Vector& v, const Vector& w);

/// Kronecker products. The left factor is the slow (row-major) index:
/// column a*dim_B + b of the result is (column a of left) (x) (column b of right).
Matrix tensor(const Matrix& left, const Matrix& right);
ExactBasis tensor(const ExactBasis& left, const ExactBasis& right);
Basis tensor(const Basis& left, const Basis& right);

/// U * B column by column. U must be unitary within kUnitaryTol.
Basis apply_unitary(const Matrix& u, const Basis& b);

/// Exact exponent-arithmetic application of a diagonal unitary.
ExactBasis apply_diagonal(const ExactDiagonal& d, const ExactBasis& b);
Basis apply_diagonal(const ExactDiagonal& d, const Basis& b);

/// Coefficient c_{ab} of a dim_A x dim_B state moves to position (b, a).
/// An involution; dim must equal dim_A * dim_B.
Vector swap_subsystems(const Vector& state, int dim_a, int dim_b);
Basis swap_subsystems(const Basis& b, int dim_a, int dim_b);

}  // namespace mub
