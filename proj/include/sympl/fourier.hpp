#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sympl/poly.hpp"
#include "sympl/rational.hpp"
#include "sympl/weights.hpp"

namespace sympl {

/// Dense rows x cols rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, RationalVector entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const RationalVector& diag);
  /// Rows separated by ';', entries by ','; e.g. "0,1;1,0".
  static Matrix parse(std::string_view text);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const RationalVector& entries() const { return data_; }

  Matrix transpose() const;
  Rational determinant() const;
  std::size_t rank() const;
  /// Throws Singular.
  Matrix inverse() const;
  bool is_integral() const;

  std::string to_string() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RationalVector data_;
};

/// Symmetric n x n rational matrix; ordered so it can key a map.
class SymMatrix {
 public:
  SymMatrix() = default;
  /// Throws NotSymmetric or ShapeMismatch.
  explicit SymMatrix(Matrix m);

  static SymMatrix zero(std::size_t n) { return SymMatrix(Matrix(n, n)); }
  static SymMatrix identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }
  static SymMatrix diagonal(const RationalVector& diag) { return SymMatrix(Matrix::diagonal(diag)); }
  /// Upper triangle in row-major order, n(n+1)/2 entries.
  static SymMatrix from_upper(std::size_t n, const RationalVector& upper);
  /// "1,0,1" (upper triangle) with n inferred from the entry count.
  static SymMatrix parse_upper(std::string_view text);

  std::size_t size() const { return m_.rows(); }
  const Rational& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const Matrix& matrix() const { return m_; }
  RationalVector upper() const;

  std::size_t rank() const { return m_.rank(); }
  std::size_t corank() const { return size() - rank(); }

  /// Deletes the first row and column.
  SymMatrix drop_first() const;
  /// diag(0, h), one size larger.
  SymMatrix with_zero_block() const;

  std::string to_string() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;
  friend bool operator<(const SymMatrix& a, const SymMatrix& b);

 private:
  Matrix m_;
};

inline constexpr std::size_t kMaxPsdSize = 6;

/// All principal minors >= 0. Throws SizeTooLarge above kMaxPsdSize.
bool is_psd(const SymMatrix& h);
/// All leading principal minors > 0.
bool is_pd(const SymMatrix& h);
/// First j rows and columns vanish.
bool in_sym_j(const SymMatrix& h, std::size_t j);

/// ta^{-1} h a^{-1}. Throws Singular or ShapeMismatch.
SymMatrix gl_transform(const SymMatrix& h, const Matrix& a);

/// Scalar-valued holomorphic Fourier expansion of weight det^k: finitely
/// many nonzero coefficients indexed by n x n symmetric matrices.
class FourierExpansion {
 public:
  using Support = std::map<SymMatrix, Rational>;

  FourierExpansion(std::size_t n, std::int64_t k) : n_(n), k_(k) {}
  FourierExpansion(std::size_t n, std::int64_t k, const std::vector<std::pair<SymMatrix, Rational>>& terms);

  /// Header "n=2 k=4", then "upper entries : coefficient" per line; blank
  /// lines and lines starting with '#' are skipped.
  static FourierExpansion parse(std::string_view text);
  std::string serialize() const;

  std::size_t size() const { return n_; }
  std::int64_t weight() const { return k_; }
  const Support& support() const { return support_; }
  bool empty() const { return support_.empty(); }

  Rational coefficient(const SymMatrix& h) const;
  /// Adds c to the coefficient of h, dropping it if it becomes 0.
  void add(const SymMatrix& h, const Rational& c);

  friend bool operator==(const FourierExpansion&, const FourierExpansion&) = default;

 private:
  std::size_t n_;
  std::int64_t k_;
  Support support_;
};

/// c(h) == det(a)^k c(gl_transform(h, a^{-1})) on the support of f and on
/// its image. Throws NotUnimodular unless a is integral with det +-1.
bool slash_invariance_check(const FourierExpansion& f, const Matrix& a);

/// c'(h) = c(diag(0, h)). Throws SizeOne for n = 1.
FourierExpansion siegel_phi(const FourierExpansion& f);

bool cusp_condition_check(const FourierExpansion& f);
bool is_cuspidal(const FourierExpansion& f);

/// 1 + the largest corank in the support, 0 for an empty expansion.
std::size_t filtration_index(const FourierExpansion& f);

/// A nonzero coefficient at some h of corank >= j forces the bottom entry
/// of lambda to be constant across places and the last j entries of every
/// row to agree. Vacuously true without such h.
bool rigidity_check(const Weight& lambda, const FourierExpansion& f, std::size_t j);

/// Degree bounds t_{i,j}^{(k)} (i <= j) per place k, upper triangle row-major.
struct DegreeBounds {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> per_place;

  static DegreeBounds uniform(std::size_t n, std::size_t d, std::uint32_t t);
  std::size_t places() const { return per_place.size(); }
  std::uint32_t at(std::size_t place, std::size_t i, std::size_t j) const;

  friend bool operator==(const DegreeBounds&, const DegreeBounds&) = default;
};

struct GridDeviation {
  std::size_t place = 0;
  std::int64_t literal_offset = 0;
  std::int64_t applied_offset = 0;
  SymMatrix witness;  ///< first non-PD point under the literal offset

  friend bool operator==(const GridDeviation&, const GridDeviation&) = default;
};

struct PdGrid {
  std::size_t n = 0;
  std::size_t d = 0;
  DegreeBounds bounds;
  std::vector<std::int64_t> diagonal_offsets;  ///< per place, as applied
  std::vector<std::vector<SymMatrix>> points;  ///< each point is a d-tuple
  std::vector<GridDeviation> deviations;

  friend bool operator==(const PdGrid&, const PdGrid&) = default;
};

inline constexpr std::size_t kMaxGridPoints = 1'000'000;

/// Off-diagonal axes {1, ..., t+1}; diagonal axes {D, ..., D + t} with
/// D = n (max off-diagonal t)^2, an empty maximum counting as 1. A place
/// with a non-PD point gets D = n (max + 1)^2 and a recorded deviation.
PdGrid build_pd_grid(std::size_t n, const DegreeBounds& bounds);

/// Grid variable x_i_j_k (1-based, i <= j, k the place).
std::string grid_variable(std::size_t i, std::size_t j, std::size_t k);

/// p vanishes at every grid point. Throws DegreeExceedsGrid when some
/// variable appears with a degree above its bound (or a negative one),
/// InvalidArgument for symbols that are not grid variables.
bool pit_vanishes(const LaurentPoly& p, const PdGrid& grid);

}  // namespace sympl
