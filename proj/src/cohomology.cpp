#include "hh/cohomology.hpp"

#include <fmt/format.h>

namespace hh {

DegreeDecomposition DegreeDecomposition::of(Family family, int t) {
  if (t < 0) throw std::invalid_argument("negative degree");
  const int P = resolution_period(family);
  DegreeDecomposition d;
  d.t = t;
  d.ell = t / P;
  d.r = t % P;
  d.m = d.r / 2;
  return d;
}

CochainComplex::CochainComplex(const Resolution& res) : res_(&res) {
  const Algebra& alg = res.algebra();
  const FieldSpec& F = alg.field();
  const int D = res.max_degree();
  for (int m = 0; m <= D; ++m) {
    const ProjSum& Q = res.term(m);
    std::vector<std::pair<int, int>> basis;
    std::vector<int> off;
    for (size_t k = 0; k < Q.size(); ++k) {
      off.push_back(static_cast<int>(basis.size()));
      for (int x : alg.block(Q[k].i, Q[k].j)) basis.emplace_back(static_cast<int>(k), x);
    }
    off.push_back(static_cast<int>(basis.size()));
    bases_.push_back(std::move(basis));
    offsets_.push_back(std::move(off));
  }
  for (int m = 0; m < D; ++m) {
    const BimoduleMap& d = res.d(m);
    Matrix delta(F, hom_dim(m + 1), hom_dim(m));
    for (size_t l = 0; l < d.source().size(); ++l)
      for (const Term& t : d.image(static_cast<int>(l)).terms()) {
        const Summand& sk = d.target()[t.k];
        for (int x : alg.block(sk.i, sk.j)) {
          AlgebraElement val = alg.multiply(alg.product(t.p, x), alg.basis_element(t.q));
          int col = coordinate(m, t.k, x);
          for (const auto& [e, c] : val)
            delta.at(offsets_[m + 1][l] + alg.position_in_block(e), col) += c * t.c;
        }
      }
    ranks_.push_back(rank(delta));
    delta_.push_back(std::move(delta));
  }
}

int CochainComplex::coordinate(int m, int k, int x) const {
  return offsets_.at(m).at(k) + algebra().position_in_block(x);
}

size_t CochainComplex::coboundary_rank(int m) const { return m < 0 ? 0 : ranks_.at(m); }

size_t CochainComplex::hh_dim(int t) const {
  if (t >= max_degree()) throw std::out_of_range(fmt::format("HH^{} needs delta^{}", t, t));
  return hom_dim(t) - coboundary_rank(t) - coboundary_rank(t - 1);
}

std::vector<AlgebraElement> CochainComplex::values(int m, const Vec& f) const {
  const ProjSum& Q = res_->term(m);
  std::vector<AlgebraElement> out(Q.size());
  for (size_t c = 0; c < f.size(); ++c)
    if (!f[c].is_zero()) out[bases_[m][c].first].emplace_back(bases_[m][c].second, f[c]);
  for (auto& v : out) std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return out;
}

Vec CochainComplex::cochain(int m, const std::vector<AlgebraElement>& vals) const {
  const Algebra& alg = algebra();
  const ProjSum& Q = res_->term(m);
  if (vals.size() != Q.size()) throw std::invalid_argument("one value per summand expected");
  Vec f(hom_dim(m), alg.field().zero());
  for (size_t k = 0; k < Q.size(); ++k)
    for (const auto& [e, c] : vals[k]) {
      if (alg.left(e) != Q[k].i || alg.right(e) != Q[k].j)
        throw std::invalid_argument(fmt::format("value of summand {} outside e_{} R e_{}", k, Q[k].i, Q[k].j));
      f[coordinate(m, static_cast<int>(k), e)] += c;
    }
  return f;
}

Vec CochainComplex::apply_coboundary(int m, const Vec& f) const { return delta_.at(m) * f; }

CohomologySpace::CohomologySpace(const CochainComplex& cx, int t)
    : cx_(&cx), t_(t), boundaries_(cx.algebra().field(), cx.hom_dim(t)) {
  if (t >= cx.max_degree()) throw std::out_of_range(fmt::format("HH^{} needs delta^{}", t, t));
  const FieldSpec& F = cx.algebra().field();
  if (t > 0) {
    const Matrix& prev = cx.coboundary(t - 1);
    for (size_t c = 0; c < prev.cols(); ++c) boundaries_.add(prev.column(c));
  }
  Subspace cocycles = boundaries_;
  for (auto& z : kernel_basis(cx.coboundary(t)))
    if (cocycles.add(z)) basis_.push_back({t, z, boundaries_.reduce(z)});
  Matrix reps(F, cx.hom_dim(t), basis_.size());
  for (size_t c = 0; c < basis_.size(); ++c) reps.set_column(c, basis_[c].representative);
  coord_solver_ = LinearSolver(reps);
}

bool CohomologySpace::is_cocycle(const Vec& f) const { return is_zero(cx_->apply_coboundary(t_, f)); }

Vec CohomologySpace::coordinates(const Vec& f) const {
  if (!is_cocycle(f)) throw std::invalid_argument(fmt::format("not a cocycle in degree {}", t_));
  auto c = coord_solver_.solve(reduce(f));
  if (!c) throw std::logic_error("cocycle outside the class basis");
  return *c;
}

Vec CohomologySpace::from_coordinates(const Vec& c) const {
  Vec f(cx_->hom_dim(t_), cx_->algebra().field().zero());
  for (size_t i = 0; i < basis_.size(); ++i)
    if (!c[i].is_zero())
      for (size_t u = 0; u < f.size(); ++u) f[u] += c[i] * basis_[i].representative[u];
  return f;
}

std::vector<CohomologyClass> cocycle_basis(const CochainComplex& cx, int t) {
  return CohomologySpace(cx, t).basis();
}

std::string parity_reading_name(ParityReading p) { return p == ParityReading::Ell ? "ell" : "ell-plus-m"; }

ParityReading parse_parity_reading(const std::string& text) {
  if (text == "ell") return ParityReading::Ell;
  if (text == "ell-plus-m") return ParityReading::EllPlusM;
  throw std::invalid_argument("unknown parity reading: " + text);
}

}  // namespace hh
