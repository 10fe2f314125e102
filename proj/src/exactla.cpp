#include "hh/exactla.hpp"

#include <algorithm>

namespace hh {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && !is_prime(p_))
    throw std::invalid_argument("characteristic must be 0 or a prime, got " + std::to_string(p_));
  if (p_ > (1u << 30)) throw std::invalid_argument("characteristic too large");
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(int64_t v) const {
  if (p_ == 0) return Scalar(mpq_class(static_cast<long>(v)));
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar(p_, static_cast<uint32_t>(r));
}

Scalar FieldSpec::parse(const std::string& text) const {
  if (p_ == 0) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    return Scalar(q);
  }
  size_t pos = 0;
  long long v = std::stoll(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("bad residue: " + text);
  return from_int(v);
}

bool Scalar::is_zero() const {
  if (p_) return std::get<uint32_t>(v_) == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (p_) return std::get<uint32_t>(v_) == 1;
  return std::get<mpq_class>(v_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  if (p_) {
    uint32_t s = std::get<uint32_t>(v_) + std::get<uint32_t>(o.v_);
    if (s >= p_) s -= p_;
    return Scalar(p_, s);
  }
  return Scalar(mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  if (p_) {
    uint32_t a = std::get<uint32_t>(v_), b = std::get<uint32_t>(o.v_);
    return Scalar(p_, a >= b ? a - b : a + p_ - b);
  }
  return Scalar(mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  if (p_) {
    uint64_t m = uint64_t(std::get<uint32_t>(v_)) * std::get<uint32_t>(o.v_);
    return Scalar(p_, static_cast<uint32_t>(m % p_));
  }
  return Scalar(mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator-() const {
  if (p_) {
    uint32_t a = std::get<uint32_t>(v_);
    return Scalar(p_, a == 0 ? 0 : p_ - a);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_) {
    // Fermat
    uint64_t base = std::get<uint32_t>(v_), result = 1;
    uint32_t e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return Scalar(p_, static_cast<uint32_t>(result));
  }
  return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  if (p_) return std::get<uint32_t>(v_) == std::get<uint32_t>(o.v_);
  return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

std::string Scalar::str() const {
  if (p_) return std::to_string(std::get<uint32_t>(v_));
  return std::get<mpq_class>(v_).get_str();
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Matrix::Matrix(FieldSpec f, size_t rows, size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(FieldSpec f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_ints(FieldSpec f, const std::vector<std::vector<int64_t>>& rows) {
  size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), c);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
    for (size_t j = 0; j < c; ++j) m.at(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Vec Matrix::column(size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Vec Matrix::row(size_t r) const {
  return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void Matrix::set_column(size_t c, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  Vec out(rows_, field_.zero());
  for (size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (size_t i = 0; i < rows_; ++i) {
      const Scalar& a = at(i, k);
      if (!a.is_zero()) out[i] += a * v[k];
    }
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

namespace {

// In-place reduction; the first `ncols` columns decide pivots, any further
// columns ride along.
size_t reduce_in_place(Matrix& m, size_t ncols, std::vector<size_t>& pivots) {
  size_t r = 0;
  const size_t rows = m.rows(), cols = m.cols();
  for (size_t c = 0; c < ncols && r < rows; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (size_t j = c; j < cols; ++j)
      if (!m.at(r, j).is_zero()) m.at(r, j) = m.at(r, j) * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (size_t j = c; j < cols; ++j)
        if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

RrefResult rref_rank(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  res.rank = reduce_in_place(res.reduced, m.cols(), res.pivots);
  return res;
}

size_t rank(const Matrix& m) { return rref_rank(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
  RrefResult rr = rref_rank(m);
  const FieldSpec& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), f.zero());
    v[free] = f.one();
    for (size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.reduced.at(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  return LinearSolver(m).solve(b);
}

LinearSolver::LinearSolver(const Matrix& a)
    : field_(a.field()), rows_(a.rows()), cols_(a.cols()) {
  Matrix aug(field_, rows_, cols_ + rows_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, cols_ + i) = field_.one();
  }
  rank_ = reduce_in_place(aug, cols_, pivots_);
  transform_ = Matrix(field_, rows_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < rows_; ++j) transform_.at(i, j) = aug.at(i, cols_ + j);
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots_) is_pivot[c] = true;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_, field_.zero());
    v[free] = field_.one();
    for (size_t i = 0; i < rank_; ++i) v[pivots_[i]] = -aug.at(i, free);
    kernel_.push_back(std::move(v));
  }
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("right-hand side length mismatch");
  Vec c = transform_ * b;
  for (size_t i = rank_; i < rows_; ++i)
    if (!c[i].is_zero()) return std::nullopt;
  Vec x(cols_, field_.zero());
  for (size_t i = 0; i < rank_; ++i) x[pivots_[i]] = c[i];
  return x;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace vector length mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar f = c;
    const Vec& row = rows_[i];
    for (size_t j = pivots_[i]; j < ambient_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  return v;
}

bool Subspace::add(Vec v) {
  v = reduce(std::move(v));
  size_t piv = 0;
  while (piv < ambient_ && v[piv].is_zero()) ++piv;
  if (piv == ambient_) return false;
  Scalar inv = v[piv].inverse();
  for (size_t j = piv; j < ambient_; ++j)
    if (!v[j].is_zero()) v[j] = v[j] * inv;
  for (auto& row : rows_) {
    if (row[piv].is_zero()) continue;
    Scalar f = row[piv];
    for (size_t j = piv; j < ambient_; ++j)
      if (!v[j].is_zero()) row[j] -= f * v[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

}  // namespace hh
