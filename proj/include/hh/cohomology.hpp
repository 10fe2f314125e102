#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hh/resolver.hpp"

namespace hh {

// t = P*ell + r with P = 17 (E7) or 29 (E8), m = floor(r/2)
struct DegreeDecomposition {
  int t = 0;
  int ell = 0;
  int r = 0;
  int m = 0;
  static DegreeDecomposition of(Family family, int t);
};

// Hom_Lambda(Q_m, R) = sum_k e_{i_k} R e_{j_k}; coordinates are pairs (summand k, basis word x).
// delta^m(f) = f o d_m, so delta^m maps degree m cochains to degree m+1.
class CochainComplex {
 public:
  // uses every degree of the resolution; delta^m exists for m < res.max_degree()
  explicit CochainComplex(const Resolution& res);

  const Resolution& resolution() const { return *res_; }
  const Algebra& algebra() const { return res_->algebra(); }
  int max_degree() const { return static_cast<int>(bases_.size()) - 1; }

  const std::vector<std::pair<int, int>>& hom_basis(int m) const { return bases_.at(m); }
  size_t hom_dim(int m) const { return bases_.at(m).size(); }
  int coordinate(int m, int k, int x) const;
  const Matrix& coboundary(int m) const { return delta_.at(m); }
  size_t coboundary_rank(int m) const;  // rank delta^m, 0 for m < 0
  // dim ker delta^t - rank delta^{t-1}; needs t < max_degree()
  size_t hh_dim(int t) const;

  // the value of each generator: f(e_{i_k} (x) e_{j_k}) in e_{i_k} R e_{j_k}
  std::vector<AlgebraElement> values(int m, const Vec& f) const;
  Vec cochain(int m, const std::vector<AlgebraElement>& values) const;
  Vec apply_coboundary(int m, const Vec& f) const;

 private:
  const Resolution* res_;
  std::vector<std::vector<std::pair<int, int>>> bases_;
  std::vector<std::vector<int>> offsets_;  // per degree, first coordinate of summand k
  std::vector<Matrix> delta_;
  std::vector<size_t> ranks_;
};

struct CohomologyClass {
  int degree = 0;
  Vec cocycle;         // a cocycle in Hom(Q_degree, R)
  Vec representative;  // canonical reduction modulo the coboundaries
};

// HH^t with a fixed complement of im delta^{t-1} inside ker delta^t.
class CohomologySpace {
 public:
  CohomologySpace(const CochainComplex& cx, int t);

  int degree() const { return t_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<CohomologyClass>& basis() const { return basis_; }
  bool is_cocycle(const Vec& f) const;
  bool is_coboundary(const Vec& f) const { return boundaries_.contains(f); }
  Vec reduce(const Vec& f) const { return boundaries_.reduce(f); }
  // coordinates of the class of a cocycle in basis(); throws for non-cocycles
  Vec coordinates(const Vec& f) const;
  Vec from_coordinates(const Vec& c) const;

 private:
  const CochainComplex* cx_;
  int t_;
  Subspace boundaries_;
  std::vector<CohomologyClass> basis_;
  LinearSolver coord_solver_;
};

std::vector<CohomologyClass> cocycle_basis(const CochainComplex& cx, int t);

// ---- published case analyses ----

// "ell" reads the parity conditions as conditions on ell, "ell-plus-m" on ell + m
enum class ParityReading { Ell, EllPlusM };
std::string parity_reading_name(ParityReading p);
ParityReading parse_parity_reading(const std::string& text);

struct ExpectedDims {
  int hom = 0;
  int im = 0;  // dim Im delta^t
  int hh = 0;  // value stated by the additive theorem
};

ExpectedDims expected_dims(Family family, int s, uint32_t characteristic, int t, ParityReading reading);

}  // namespace hh
