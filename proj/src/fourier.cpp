#include "sympl/fourier.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sympl/error.hpp"

namespace sympl {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, RationalVector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw Error(Errc::ShapeMismatch, "matrix entry count does not match its shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const RationalVector& diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::parse(std::string_view text) {
  std::vector<RationalVector> rows;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    rows.push_back(parse_rational_list(text.substr(start, semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  const std::size_t cols = rows.front().size();
  RationalVector data;
  for (const auto& r : rows) {
    if (r.size() != cols || cols == 0) throw Error(Errc::Parse, "ragged matrix '" + std::string(text) + "'");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols, std::move(data));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

namespace {

// Row echelon form in place; returns the rank and the determinant sign
// flips through `swaps`.
std::size_t eliminate(Matrix& m, std::size_t& swaps) {
  std::size_t rank = 0;
  swaps = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(rank, k));
      ++swaps;
    }
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      const Rational factor = m(r, c) / m(rank, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Rational Matrix::determinant() const {
  if (!is_square()) throw Error(Errc::ShapeMismatch, "determinant of a non-square matrix");
  Matrix m = *this;
  std::size_t swaps = 0;
  if (eliminate(m, swaps) < rows_) return 0;
  Rational det = swaps % 2 ? -1 : 1;
  for (std::size_t i = 0; i < rows_; ++i) det *= m(i, i);
  return det;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  std::size_t swaps = 0;
  return eliminate(m, swaps);
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw Error(Errc::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) throw Error(Errc::Singular, "matrix " + to_string() + " is singular");
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(a(pivot, k), a(c, k));
      std::swap(inv(pivot, k), inv(c, k));
    }
    const Rational p = a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) /= p;
      inv(c, k) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational factor = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= factor * a(c, k);
        inv(r, k) -= factor * inv(c, k);
      }
    }
  }
  return inv;
}

bool Matrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return is_integer(x); });
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ";";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ",";
      out += sympl::to_string((*this)(r, c));
    }
  }
  return out + "]";
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::ShapeMismatch, "matrix product shapes do not match");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += a(r, k) * b(k, c);
    }
  }
  return out;
}

SymMatrix::SymMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw Error(Errc::ShapeMismatch, "symmetric matrix must be square");
  for (std::size_t r = 0; r < m_.rows(); ++r) {
    for (std::size_t c = r + 1; c < m_.cols(); ++c) {
      if (m_(r, c) != m_(c, r)) throw Error(Errc::NotSymmetric, "matrix " + m_.to_string() + " is not symmetric");
    }
  }
}

SymMatrix SymMatrix::from_upper(std::size_t n, const RationalVector& upper) {
  if (upper.size() != n * (n + 1) / 2) {
    throw Error(Errc::ShapeMismatch, "size " + std::to_string(n) + " needs " + std::to_string(n * (n + 1) / 2) +
                                         " upper-triangle entries, got " + std::to_string(upper.size()));
  }
  Matrix m(n, n);
  std::size_t idx = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      m(r, c) = upper[idx];
      m(c, r) = upper[idx];
      ++idx;
    }
  }
  return SymMatrix(std::move(m));
}

SymMatrix SymMatrix::parse_upper(std::string_view text) {
  const RationalVector upper = parse_rational_list(text);
  std::size_t n = 0;
  while (n * (n + 1) / 2 < upper.size()) ++n;
  if (upper.empty() || n * (n + 1) / 2 != upper.size()) {
    throw Error(Errc::Parse, "'" + std::string(text) + "' is not an upper triangle");
  }
  return from_upper(n, upper);
}

RationalVector SymMatrix::upper() const {
  RationalVector out;
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = r; c < size(); ++c) out.push_back(m_(r, c));
  }
  return out;
}

SymMatrix SymMatrix::drop_first() const {
  const std::size_t n = size();
  Matrix m(n - 1, n - 1);
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t c = 1; c < n; ++c) m(r - 1, c - 1) = m_(r, c);
  }
  return SymMatrix(std::move(m));
}

SymMatrix SymMatrix::with_zero_block() const {
  const std::size_t n = size();
  Matrix m(n + 1, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r + 1, c + 1) = m_(r, c);
  }
  return SymMatrix(std::move(m));
}

std::string SymMatrix::to_string() const { return m_.to_string(); }

bool operator<(const SymMatrix& a, const SymMatrix& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.m_.entries() < b.m_.entries();
}

namespace {

Rational principal_minor(const SymMatrix& h, unsigned mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (mask >> i & 1U) idx.push_back(i);
  }
  Matrix sub(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = h(idx[r], idx[c]);
  }
  return sub.determinant();
}

}  // namespace

bool is_psd(const SymMatrix& h) {
  if (h.size() > kMaxPsdSize) {
    throw Error(Errc::SizeTooLarge, "principal-minor test is limited to size " + std::to_string(kMaxPsdSize));
  }
  for (unsigned mask = 1; mask < (1U << h.size()); ++mask) {
    if (principal_minor(h, mask) < 0) return false;
  }
  return true;
}

bool is_pd(const SymMatrix& h) {
  for (std::size_t k = 1; k <= h.size(); ++k) {
    if (principal_minor(h, (1U << k) - 1) <= 0) return false;
  }
  return true;
}

bool in_sym_j(const SymMatrix& h, std::size_t j) {
  if (j > h.size()) throw Error(Errc::IndexOutOfRange, "j exceeds the matrix size");
  for (std::size_t r = 0; r < j; ++r) {
    for (std::size_t c = 0; c < h.size(); ++c) {
      if (h(r, c) != 0) return false;
    }
  }
  return true;
}

SymMatrix gl_transform(const SymMatrix& h, const Matrix& a) {
  if (a.rows() != h.size() || a.cols() != h.size()) throw Error(Errc::ShapeMismatch, "gl_transform needs matching sizes");
  const Matrix inv = a.inverse();
  return SymMatrix(inv.transpose() * h.matrix() * inv);
}

FourierExpansion::FourierExpansion(std::size_t n, std::int64_t k,
                                   const std::vector<std::pair<SymMatrix, Rational>>& terms)
    : n_(n), k_(k) {
  for (const auto& [h, c] : terms) add(h, c);
}

Rational FourierExpansion::coefficient(const SymMatrix& h) const {
  auto it = support_.find(h);
  return it == support_.end() ? Rational(0) : it->second;
}

void FourierExpansion::add(const SymMatrix& h, const Rational& c) {
  if (h.size() != n_) {
    throw Error(Errc::ShapeMismatch, "index " + h.to_string() + " does not have size " + std::to_string(n_));
  }
  if (c == 0) return;
  auto [it, inserted] = support_.try_emplace(h, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) support_.erase(it);
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t header_value(std::string_view header, std::string_view key) {
  std::istringstream in{std::string(header)};
  std::string token;
  while (in >> token) {
    if (token.size() > key.size() + 1 && token.compare(0, key.size(), key) == 0 && token[key.size()] == '=') {
      return to_int64(parse_rational(std::string_view(token).substr(key.size() + 1)));
    }
  }
  throw Error(Errc::Parse, "expansion header lacks '" + std::string(key) + "='");
}

}  // namespace

FourierExpansion FourierExpansion::parse(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty()) throw Error(Errc::Parse, "empty expansion file");
  const std::int64_t n = header_value(lines.front(), "n");
  const std::int64_t k = header_value(lines.front(), "k");
  if (n < 1) throw Error(Errc::Parse, "expansion size must be positive");

  FourierExpansion f(static_cast<std::size_t>(n), k);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto colon = lines[l].find(':');
    if (colon == std::string_view::npos) throw Error(Errc::Parse, "expected 'entries : coefficient' in '" + std::string(lines[l]) + "'");
    const SymMatrix h = SymMatrix::from_upper(f.n_, parse_rational_list(lines[l].substr(0, colon)));
    f.add(h, parse_rational(lines[l].substr(colon + 1)));
  }
  return f;
}

std::string FourierExpansion::serialize() const {
  std::string out = "n=" + std::to_string(n_) + " k=" + std::to_string(k_) + "\n";
  for (const auto& [h, c] : support_) {
    const RationalVector u = h.upper();
    std::string entries;
    for (const auto& x : u) entries += (entries.empty() ? "" : ",") + sympl::to_string(x);
    out += entries + " : " + sympl::to_string(c) + "\n";
  }
  return out;
}

bool slash_invariance_check(const FourierExpansion& f, const Matrix& a) {
  if (a.rows() != f.size() || a.cols() != f.size()) throw Error(Errc::ShapeMismatch, "matrix size must match the expansion");
  const Rational det = a.is_integral() ? a.determinant() : Rational(0);
  if (!a.is_integral() || (det != 1 && det != -1)) {
    throw Error(Errc::NotUnimodular, "matrix " + a.to_string() + " is not integral unimodular");
  }
  const Rational factor = (det == -1 && f.weight() % 2 != 0) ? -1 : 1;
  const Matrix a_inv = a.inverse();
  for (const auto& [h, c] : f.support()) {
    if (c != factor * f.coefficient(gl_transform(h, a_inv))) return false;
    // h as the image of gl_transform(h, a)
    if (f.coefficient(gl_transform(h, a)) != factor * c) return false;
  }
  return true;
}

FourierExpansion siegel_phi(const FourierExpansion& f) {
  if (f.size() < 2) throw Error(Errc::SizeOne, "the Siegel operator needs n >= 2");
  FourierExpansion out(f.size() - 1, f.weight());
  for (const auto& [h, c] : f.support()) {
    if (in_sym_j(h, 1)) out.add(h.drop_first(), c);
  }
  return out;
}

bool cusp_condition_check(const FourierExpansion& f) {
  return std::all_of(f.support().begin(), f.support().end(), [](const auto& t) { return is_psd(t.first); });
}

bool is_cuspidal(const FourierExpansion& f) {
  return std::all_of(f.support().begin(), f.support().end(), [](const auto& t) { return is_pd(t.first); });
}

std::size_t filtration_index(const FourierExpansion& f) {
  if (f.empty()) return 0;
  std::size_t worst = 0;
  for (const auto& [h, c] : f.support()) worst = std::max(worst, h.corank());
  return worst + 1;
}

bool rigidity_check(const Weight& lambda, const FourierExpansion& f, std::size_t j) {
  const std::size_t n = lambda.rank();
  if (n != f.size()) throw Error(Errc::RankMismatch, "weight rank and expansion size differ");
  if (j < 1 || j > n) throw Error(Errc::IndexOutOfRange, "j must lie in [1, n]");
  const bool triggered =
      std::any_of(f.support().begin(), f.support().end(), [j](const auto& t) { return t.first.corank() >= j; });
  if (!triggered) return true;
  if (!bottom_constant_across_places(lambda)) return false;
  for (std::size_t v = 0; v < lambda.places(); ++v) {
    for (std::size_t k = n - j; k < n; ++k) {
      if (lambda.at(v, k) != lambda.bottom(v)) return false;
    }
  }
  return true;
}

DegreeBounds DegreeBounds::uniform(std::size_t n, std::size_t d, std::uint32_t t) {
  return DegreeBounds{n, std::vector<std::vector<std::uint32_t>>(d, std::vector<std::uint32_t>(n * (n + 1) / 2, t))};
}

std::uint32_t DegreeBounds::at(std::size_t place, std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  // offset of row i in the upper triangle
  const std::size_t row_start = i * n - i * (i - 1) / 2;
  return per_place.at(place).at(row_start + (j - i));
}

std::string grid_variable(std::size_t i, std::size_t j, std::size_t k) {
  return "x_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
}

namespace {

std::vector<SymMatrix> place_points(std::size_t n, const std::vector<std::uint32_t>& t, std::int64_t offset) {
  // axes in upper-triangle order; last axis varies fastest
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  std::size_t idx = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c, ++idx) {
      lo.push_back(r == c ? offset : 1);
      hi.push_back(lo.back() + t[idx]);
    }
  }
  std::vector<SymMatrix> out;
  std::vector<std::int64_t> cur = lo;
  while (true) {
    RationalVector upper;
    for (auto x : cur) upper.emplace_back(static_cast<long>(x));
    out.push_back(SymMatrix::from_upper(n, upper));
    std::size_t a = cur.size();
    while (a > 0 && cur[a - 1] == hi[a - 1]) {
      cur[a - 1] = lo[a - 1];
      --a;
    }
    if (a == 0) break;
    ++cur[a - 1];
  }
  return out;
}

}  // namespace

PdGrid build_pd_grid(std::size_t n, const DegreeBounds& bounds) {
  if (n < 1) throw Error(Errc::InvalidArgument, "grid size must be positive");
  if (bounds.n != n || bounds.places() < 1) throw Error(Errc::ShapeMismatch, "degree bounds do not match n");
  PdGrid grid;
  grid.n = n;
  grid.d = bounds.places();
  grid.bounds = bounds;

  std::vector<std::vector<SymMatrix>> axes;
  std::size_t total = 1;
  for (std::size_t k = 0; k < grid.d; ++k) {
    const auto& t = bounds.per_place[k];
    if (t.size() != n * (n + 1) / 2) throw Error(Errc::ShapeMismatch, "degree bounds do not match n");
    if (std::any_of(t.begin(), t.end(), [](std::uint32_t x) { return x < 1; })) {
      throw Error(Errc::InvalidArgument, "degree bounds must be positive");
    }
    std::int64_t max_off = 0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r + 1; c < n; ++c) max_off = std::max<std::int64_t>(max_off, bounds.at(k, r, c));
    }
    if (n == 1) max_off = 1;
    const auto count = static_cast<std::int64_t>(n);
    std::int64_t offset = count * max_off * max_off;
    auto pts = place_points(n, t, offset);
    auto bad = std::find_if(pts.begin(), pts.end(), [](const SymMatrix& h) { return !is_pd(h); });
    if (bad != pts.end()) {
      GridDeviation dev{k, offset, count * (max_off + 1) * (max_off + 1), *bad};
      offset = dev.applied_offset;
      pts = place_points(n, t, offset);
      if (!std::all_of(pts.begin(), pts.end(), [](const SymMatrix& h) { return is_pd(h); })) {
        throw Error(Errc::InvalidArgument, "inflated grid still has a non-positive-definite point");
      }
      grid.deviations.push_back(std::move(dev));
    }
    grid.diagonal_offsets.push_back(offset);
    total *= pts.size();
    if (total > kMaxGridPoints) throw Error(Errc::SizeTooLarge, "grid exceeds " + std::to_string(kMaxGridPoints) + " points");
    axes.push_back(std::move(pts));
  }

  std::vector<std::size_t> cur(grid.d, 0);
  while (true) {
    std::vector<SymMatrix> point;
    for (std::size_t k = 0; k < grid.d; ++k) point.push_back(axes[k][cur[k]]);
    grid.points.push_back(std::move(point));
    std::size_t a = grid.d;
    while (a > 0 && cur[a - 1] + 1 == axes[a - 1].size()) {
      cur[a - 1] = 0;
      --a;
    }
    if (a == 0) break;
    ++cur[a - 1];
  }
  return grid;
}

namespace {

struct GridVar {
  std::size_t i, j, k;  // 0-based
};

std::optional<GridVar> parse_grid_variable(const std::string& name, std::size_t n, std::size_t d) {
  std::size_t vals[3];
  std::size_t pos = 0;
  if (name.size() < 2 || name[0] != 'x') return std::nullopt;
  pos = 1;
  for (auto& v : vals) {
    if (pos >= name.size() || name[pos] != '_') return std::nullopt;
    ++pos;
    const std::size_t start = pos;
    while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) ++pos;
    if (pos == start || pos - start > 6) return std::nullopt;
    v = std::stoul(name.substr(start, pos - start));
  }
  if (pos != name.size()) return std::nullopt;
  if (vals[0] < 1 || vals[0] > vals[1] || vals[1] > n || vals[2] < 1 || vals[2] > d) return std::nullopt;
  return GridVar{vals[0] - 1, vals[1] - 1, vals[2] - 1};
}

}  // namespace

bool pit_vanishes(const LaurentPoly& p, const PdGrid& grid) {
  std::map<std::string, GridVar> vars;
  for (const auto& name : p.generators()) {
    auto v = parse_grid_variable(name, grid.n, grid.d);
    if (!v) throw Error(Errc::InvalidArgument, "'" + name + "' is not a grid variable x_i_j_k");
    vars.emplace(name, *v);
  }
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [name, e] : m.powers()) {
      const auto& v = vars.at(name);
      if (e < 0 || static_cast<std::uint32_t>(e) > grid.bounds.at(v.k, v.i, v.j)) {
        throw Error(Errc::DegreeExceedsGrid, "degree " + std::to_string(e) + " in " + name + " exceeds its bound");
      }
    }
  }
  std::map<std::string, Rational> assignment;
  for (const auto& point : grid.points) {
    for (const auto& [name, v] : vars) assignment[name] = point[v.k](v.i, v.j);
    if (p.evaluate(assignment) != 0) return false;
  }
  return true;
}

}  // namespace sympl
