#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace hh {

class Scalar;

// Characteristic 0 means the rationals, otherwise GF(p).
class FieldSpec {
 public:
  FieldSpec() = default;
  explicit FieldSpec(uint32_t characteristic);

  uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(int64_t v) const;
  Scalar parse(const std::string& text) const;

  bool operator==(const FieldSpec&) const = default;

 private:
  uint32_t p_ = 0;
};

bool is_prime(uint32_t n);

class Scalar {
 public:
  Scalar() : p_(0), v_(mpq_class(0)) {}

  uint32_t characteristic() const { return p_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // residue in [0,p) for GF(p); numerator/denominator text otherwise
  std::string str() const;
  uint32_t residue() const { return std::get<uint32_t>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }

 private:
  friend class FieldSpec;
  Scalar(uint32_t p, uint32_t r) : p_(p), v_(r) {}
  explicit Scalar(mpq_class q) : p_(0), v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
  void check(const Scalar& o) const {
    if (o.p_ != p_) throw std::logic_error("scalar field mismatch");
  }

  uint32_t p_;
  std::variant<uint32_t, mpq_class> v_;
};

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec f, size_t rows, size_t cols);
  static Matrix identity(FieldSpec f, size_t n);
  static Matrix from_ints(FieldSpec f, const std::vector<std::vector<int64_t>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Vec column(size_t c) const;
  Vec row(size_t r) const;
  void set_column(size_t c, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

 private:
  FieldSpec field_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  size_t rank = 0;
  std::vector<size_t> pivots;
};

RrefResult rref_rank(const Matrix& m);
size_t rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
// nullopt means the system has no solution
std::optional<Vec> solve(const Matrix& m, const Vec& b);

bool is_zero(const Vec& v);

// Gaussian elimination on [A | I] kept around so that repeated solves against
// the same A cost one matrix-vector product each.
class LinearSolver {
 public:
  LinearSolver() = default;
  explicit LinearSolver(const Matrix& a);

  size_t rank() const { return rank_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  std::optional<Vec> solve(const Vec& b) const;
  const std::vector<Vec>& kernel() const { return kernel_; }

 private:
  FieldSpec field_;
  size_t rows_ = 0, cols_ = 0, rank_ = 0;
  Matrix transform_;
  std::vector<size_t> pivots_;
  std::vector<Vec> kernel_;
};

// Row space kept in fully reduced echelon form.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldSpec f, size_t ambient) : field_(f), ambient_(ambient) {}

  size_t dim() const { return rows_.size(); }
  size_t ambient() const { return ambient_; }
  const FieldSpec& field() const { return field_; }
  // returns true when v was not already in the span
  bool add(Vec v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

 private:
  FieldSpec field_;
  size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<size_t> pivots_;
};

}  // namespace hh
