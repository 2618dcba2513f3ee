#include "extrop/arith.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

namespace extrop {

namespace {

using RatRows = std::vector<std::vector<Rat>>;

// Reduced row echelon form, pivoting only in the first `pivot_cols` columns.
std::vector<std::size_t> rref(RatRows& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rat inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RatRows to_rat_rows(const IntMatrix& m) {
  RatRows out(m.rows(), std::vector<Rat>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Rat(m(i, j));
  return out;
}

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

}  // namespace

// ---- IntMatrix --------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVec>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidArgument("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVec>& cols) {
  return from_rows(rows, cols).transpose();
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<IntVec> IntMatrix::row_vectors() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVec IntMatrix::apply(const IntVec& x) const {
  if (x.size() != cols_) throw InvalidArgument("IntMatrix::apply: dimension mismatch");
  IntVec y(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

IntMatrix IntMatrix::columns(std::size_t begin, std::size_t end) const {
  IntMatrix m(rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::rows_range(std::size_t begin, std::size_t end) const {
  IntMatrix m(end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i - begin, j) = (*this)(i, j);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("IntMatrix product: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << extrop::to_string(row(i));
  }
  os << ']';
  return os.str();
}

// ---- normal forms -----------------------------------------------------------

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

HermiteForm hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs_int(h(i, c)) < abs_int(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        const Int q = h(i, c) / h(r, c);
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SmithForm snf(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block
      std::size_t bi = d.rows(), bj = d.cols();
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
          if (d(i, j) == 0) continue;
          if (bi == d.rows() || abs_int(d(i, j)) < abs_int(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == d.rows()) break;
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const Int q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const Int q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility of the trailing block by the pivot
      bool divisible = true;
      for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, Int(1));
            u.add_row_multiple(t, i, Int(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (t < d.rows() && t < d.cols() && d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

// ---- LatticeMap -------------------------------------------------------------

LatticeMap::LatticeMap(std::size_t source_rank, std::size_t target_rank)
    : source_rank_(source_rank), target_rank_(target_rank), matrix_(target_rank, source_rank) {}

LatticeMap::LatticeMap(IntMatrix matrix)
    : source_rank_(matrix.cols()), target_rank_(matrix.rows()), matrix_(std::move(matrix)) {}

LatticeMap::LatticeMap(std::size_t source_rank, std::size_t target_rank, IntMatrix matrix)
    : source_rank_(source_rank), target_rank_(target_rank), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_rank_ || matrix_.cols() != source_rank_)
    throw InvalidArgument("LatticeMap: matrix must be target_rank x source_rank");
}

LatticeMap LatticeMap::identity(std::size_t n) { return LatticeMap(n, n, IntMatrix::identity(n)); }

LatticeMap LatticeMap::zero(std::size_t source_rank, std::size_t target_rank) {
  return LatticeMap(source_rank, target_rank);
}

IntVec LatticeMap::operator()(const IntVec& x) const { return matrix_.apply(x); }

RatVec LatticeMap::operator()(const RatVec& x) const {
  if (x.size() != source_rank_) throw InvalidArgument("LatticeMap: dimension mismatch");
  RatVec y(target_rank_, Rat(0));
  for (std::size_t i = 0; i < target_rank_; ++i)
    for (std::size_t j = 0; j < source_rank_; ++j) y[i] += Rat(matrix_(i, j)) * x[j];
  return y;
}

LatticeMap LatticeMap::after(const LatticeMap& first) const {
  if (first.target_rank() != source_rank_) throw InvalidArgument("LatticeMap::after: ranks do not chain");
  return LatticeMap(first.source_rank(), target_rank_, matrix_ * first.matrix());
}

LatticeMap LatticeMap::transpose() const {
  return LatticeMap(target_rank_, source_rank_, matrix_.transpose());
}

std::vector<IntVec> kernel_basis(const LatticeMap& m) {
  const HermiteForm f = hnf(m.matrix().transpose());
  std::vector<IntVec> basis;
  for (std::size_t i = 0; i < f.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < f.h.cols(); ++j)
      if (f.h(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) basis.push_back(f.u.row(i));
  }
  return hnf_rows(basis, m.source_rank());
}

// ---- vectors ----------------------------------------------------------------

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InvalidArgument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InvalidArgument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs_int(x));
  return g;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntVec primitive(const IntVec& v) {
  const Int g = gcd_of(v);
  if (g == 0 || g == 1) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVec primitive(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) {
    const Int d = boost::multiprecision::denominator(x);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rat s = v[i] * Rat(l);
    out[i] = boost::multiprecision::numerator(s);
  }
  return primitive(out);
}

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InvalidArgument("add: dimension mismatch");
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InvalidArgument("sub: dimension mismatch");
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVec scale(const Int& c, const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

IntVec negate(const IntVec& v) { return scale(Int(-1), v); }

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

std::string to_string(const Rat& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

// ---- lattices ---------------------------------------------------------------

std::size_t rank_of(const IntMatrix& m) {
  RatRows rows = to_rat_rows(m);
  return rref(rows, m.cols()).size();
}

std::size_t rank_of(const std::vector<IntVec>& vectors, std::size_t dim) {
  return rank_of(IntMatrix::from_rows(dim, vectors));
}

std::vector<IntVec> hnf_rows(const std::vector<IntVec>& vectors, std::size_t dim) {
  const HermiteForm f = hnf(IntMatrix::from_rows(dim, vectors));
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < f.h.rows(); ++i) {
    IntVec r = f.h.row(i);
    if (!is_zero(r)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<IntVec> lattice_basis(const std::vector<IntVec>& vectors, std::size_t dim) {
  return hnf_rows(vectors, dim);
}

std::vector<IntVec> orthogonal_lattice(const std::vector<IntVec>& vectors, std::size_t dim) {
  const LatticeMap m(dim, vectors.size(), IntMatrix::from_rows(dim, vectors));
  return kernel_basis(m);
}

std::vector<IntVec> saturate(const std::vector<IntVec>& vectors, std::size_t dim) {
  return orthogonal_lattice(orthogonal_lattice(vectors, dim), dim);
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const Int d = determinant(m);
  return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!is_unimodular(m)) throw InvalidArgument("inverse_unimodular: matrix is not unimodular");
  const std::size_t n = m.rows();
  RatRows aug(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(m(i, j));
    aug[i][n + i] = 1;
  }
  rref(aug, n);
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = boost::multiprecision::numerator(aug[i][n + j]);
  return inv;
}

LatticeQuotient quotient_by(const std::vector<IntVec>& sublattice_generators, std::size_t ambient) {
  const std::vector<IntVec> basis = saturate(sublattice_generators, ambient);
  const std::size_t k = basis.size();
  if (k == 0) return {LatticeMap::identity(ambient), LatticeMap::identity(ambient)};
  const SmithForm s = snf(IntMatrix::from_rows(ambient, basis));
  const IntMatrix w = inverse_unimodular(s.v);
  const std::size_t q = ambient - k;
  IntMatrix p0 = s.v.columns(k, ambient).transpose();  // q x ambient
  IntMatrix s0 = w.rows_range(k, ambient).transpose();  // ambient x q
  const HermiteForm h = hnf(p0);
  IntMatrix section = s0 * inverse_unimodular(h.u);
  LatticeQuotient out{LatticeMap(ambient, q, h.h), LatticeMap(q, ambient, std::move(section))};
  assert((out.projection.after(out.section) == LatticeMap::identity(q)));
  return out;
}

std::optional<IntMatrix> solve_linear_map(const std::vector<IntVec>& inputs,
                                          const std::vector<IntVec>& values, std::size_t source_rank,
                                          std::size_t target_rank) {
  if (inputs.size() != values.size()) throw InvalidArgument("solve_linear_map: size mismatch");
  RatRows aug(inputs.size(), std::vector<Rat>(source_rank + target_rank, Rat(0)));
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].size() != source_rank || values[i].size() != target_rank)
      throw InvalidArgument("solve_linear_map: dimension mismatch");
    for (std::size_t j = 0; j < source_rank; ++j) aug[i][j] = Rat(inputs[i][j]);
    for (std::size_t j = 0; j < target_rank; ++j) aug[i][source_rank + j] = Rat(values[i][j]);
  }
  const auto pivots = rref(aug, source_rank);
  if (pivots.size() != source_rank) return std::nullopt;
  for (std::size_t i = source_rank; i < aug.size(); ++i)
    for (std::size_t j = source_rank; j < aug[i].size(); ++j)
      if (aug[i][j] != 0) return std::nullopt;
  IntMatrix x(target_rank, source_rank);
  for (std::size_t r = 0; r < source_rank; ++r)
    for (std::size_t t = 0; t < target_rank; ++t) {
      const Rat& q = aug[r][source_rank + t];
      if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
      x(t, pivots[r]) = boost::multiprecision::numerator(q);
    }
  return x;
}

std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b) {
  if (b.size() != a.rows()) throw InvalidArgument("solve_rational: dimension mismatch");
  RatRows aug = to_rat_rows(a);
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug, a.cols());
  for (std::size_t i = pivots.size(); i < aug.size(); ++i)
    if (aug[i][a.cols()] != 0) return std::nullopt;
  RatVec x(a.cols(), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][a.cols()];
  return x;
}

}  // namespace extrop
