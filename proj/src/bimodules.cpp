#include "hh/bimodules.hpp"

#include <algorithm>
#include <stdexcept>

namespace hh {

size_t ProjSum::dimension(const Algebra& alg) const {
  std::vector<size_t> left_dim(alg.num_vertices(), 0), right_dim(alg.num_vertices(), 0);
  for (int b = 0; b < static_cast<int>(alg.dim()); ++b) {
    ++left_dim[alg.right(b)];   // R e_i
    ++right_dim[alg.left(b)];   // e_j R
  }
  size_t d = 0;
  for (const auto& s : summands) d += left_dim[s.i] * right_dim[s.j];
  return d;
}

std::map<Summand, int> ProjSum::multiset() const {
  std::map<Summand, int> m;
  for (const auto& s : summands) ++m[s];
  return m;
}

BimodElement BimodElement::generator(const FieldSpec& f, const Algebra& alg, const ProjSum& ps,
                                     int k) {
  BimodElement e;
  e.terms_.push_back({k, alg.idempotent(ps[k].i), alg.idempotent(ps[k].j), f.one()});
  return e;
}

void BimodElement::add_term(int k, int p, int q, const Scalar& c) {
  if (c.is_zero()) return;
  terms_.push_back({k, p, q, c});
  dirty_ = true;
}

void BimodElement::normalize() {
  if (!dirty_) return;
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().k == t.k && out.back().p == t.p && out.back().q == t.q) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  terms_ = std::move(out);
  dirty_ = false;
}

void BimodElement::add_scaled(const BimodElement& x, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& t : x.terms_) add_term(t.k, t.p, t.q, t.c * c);
  normalize();
}

BimodElement BimodElement::scaled(const Scalar& c) const {
  BimodElement out;
  if (c.is_zero()) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.c = t.c * c;
  return out;
}

bool BimodElement::operator==(const BimodElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const auto &a = terms_[i], &b = o.terms_[i];
    if (a.k != b.k || a.p != b.p || a.q != b.q || a.c != b.c) return false;
  }
  return true;
}

BimodElement act_basis(const Algebra& alg, int x, const BimodElement& e, int y) {
  BimodElement out;
  for (const auto& t : e.terms()) {
    const auto& xp = alg.product(x, t.p);
    if (xp.empty()) continue;
    const auto& qy = alg.product(t.q, y);
    for (const auto& [p2, c1] : xp)
      for (const auto& [q2, c2] : qy) out.add_term(t.k, p2, q2, t.c * c1 * c2);
  }
  out.normalize();
  return out;
}

BimodElement act(const Algebra& alg, const AlgebraElement& x, const BimodElement& e,
                 const AlgebraElement& y) {
  BimodElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add_scaled(act_basis(alg, a, e, b), ca * cb);
  return out;
}

BlockBasis::BlockBasis(const Algebra& alg, const ProjSum& ps)
    : alg_(&alg), nv_(alg.num_vertices()), blocks_(size_t(nv_) * nv_) {
  for (int a = 0; a < nv_; ++a)
    for (int b = 0; b < nv_; ++b) {
      auto& blk = blocks_[a * nv_ + b];
      for (int k = 0; k < static_cast<int>(ps.size()); ++k)
        for (int p : alg.block(a, ps[k].i))
          for (int q : alg.block(ps[k].j, b)) {
            index_[key(k, p, q)] = static_cast<int>(blk.size());
            blk.push_back({k, p, q});
          }
      total_ += blk.size();
    }
}

uint64_t BlockBasis::key(int k, int p, int q) const {
  uint64_t D = alg_->dim();
  return (uint64_t(k) * D + p) * D + q;
}

int BlockBasis::position(int k, int p, int q) const {
  auto it = index_.find(key(k, p, q));
  return it == index_.end() ? -1 : it->second;
}

Vec BlockBasis::to_block(const BimodElement& e, int a, int b) const {
  const FieldSpec& f = alg_->field();
  Vec v(block_dim(a, b), f.zero());
  for (const auto& t : e.terms()) {
    if (alg_->left(t.p) != a || alg_->right(t.q) != b)
      throw std::logic_error("element is not homogeneous for the requested block");
    int pos = position(t.k, t.p, t.q);
    if (pos < 0) throw std::logic_error("term outside the projective sum");
    v[pos] += t.c;
  }
  return v;
}

BimodElement BlockBasis::from_block(const Vec& v, int a, int b) const {
  BimodElement e;
  const auto& blk = block(a, b);
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) e.add_term(blk[i][0], blk[i][1], blk[i][2], v[i]);
  e.normalize();
  return e;
}

BimoduleMap::BimoduleMap(ProjSum source, ProjSum target, std::vector<BimodElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size()) throw std::invalid_argument("one image per source summand");
  for (auto& im : images_)
    for (const auto& t : im.terms())
      if (t.k < 0 || t.k >= static_cast<int>(target_.size()))
        throw std::invalid_argument("image term outside the target");
}

BimoduleMap BimoduleMap::zero(const ProjSum& source, const ProjSum& target) {
  return BimoduleMap(source, target, std::vector<BimodElement>(source.size()));
}

BimoduleMap BimoduleMap::identity(const FieldSpec& f, const Algebra& alg, const ProjSum& ps) {
  std::vector<BimodElement> ims;
  for (int k = 0; k < static_cast<int>(ps.size()); ++k)
    ims.push_back(BimodElement::generator(f, alg, ps, k));
  return BimoduleMap(ps, ps, std::move(ims));
}

std::vector<Term> BimoduleMap::entry(int k, int l) const {
  std::vector<Term> out;
  for (const auto& t : images_[l].terms())
    if (t.k == k) out.push_back(t);
  return out;
}

BimodElement BimoduleMap::apply(const Algebra& alg, const BimodElement& x) const {
  BimodElement out;
  for (const auto& t : x.terms()) {
    if (t.k < 0 || t.k >= static_cast<int>(source_.size()))
      throw std::invalid_argument("element is not in the map's source");
    const auto& im = images_[t.k];
    for (const auto& u : im.terms()) {
      const auto& pu = alg.product(t.p, u.p);
      if (pu.empty()) continue;
      const auto& vq = alg.product(u.q, t.q);
      for (const auto& [p2, c1] : pu)
        for (const auto& [q2, c2] : vq) out.add_term(u.k, p2, q2, t.c * u.c * c1 * c2);
    }
  }
  out.normalize();
  return out;
}

bool BimoduleMap::operator==(const BimoduleMap& o) const {
  return source_ == o.source_ && target_ == o.target_ && images_ == o.images_;
}

BimoduleMap compose(const Algebra& alg, const BimoduleMap& g, const BimoduleMap& f) {
  if (!(f.target() == g.source())) throw std::invalid_argument("maps do not compose");
  std::vector<BimodElement> ims;
  for (const auto& im : f.images()) ims.push_back(g.apply(alg, im));
  return BimoduleMap(f.source(), g.target(), std::move(ims));
}

bool is_zero_map(const BimoduleMap& f) {
  return std::all_of(f.images().begin(), f.images().end(),
                     [](const BimodElement& e) { return e.is_zero(); });
}

AlgebraElement multiply_out(const Algebra& alg, const ProjSum& ps, const BimodElement& x) {
  AlgebraElement acc;
  (void)ps;
  for (const auto& t : x.terms()) add_scaled(acc, alg.product(t.p, t.q), t.c);
  return acc;
}

ProjSum twist(const ProjSum& ps, const AlgebraAutomorphism& phi) {
  ProjSum out;
  for (const auto& s : ps.summands) out.summands.push_back({phi.vertex(s.i), s.j});
  return out;
}

BimoduleMap twist(const Algebra& alg, const BimoduleMap& f, const AlgebraAutomorphism& phi) {
  std::vector<BimodElement> ims;
  for (const auto& im : f.images()) {
    BimodElement e;
    for (const auto& t : im.terms())
      for (const auto& [p2, c] : phi.image(t.p)) e.add_term(t.k, p2, t.q, t.c * c);
    e.normalize();
    ims.push_back(std::move(e));
  }
  (void)alg;
  return BimoduleMap(twist(f.source(), phi), twist(f.target(), phi), std::move(ims));
}

size_t hom_dim_to_algebra(const Algebra& alg, const Summand& s) {
  return alg.block(s.i, s.j).size();
}

size_t hom_dim_to_projective(const Algebra& alg, const Summand& from, const Summand& to) {
  return alg.block(from.i, to.i).size() * alg.block(to.j, from.j).size();
}

}  // namespace hh
