#pragma once

#include <array>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "hh/exactla.hpp"
#include "hh/quiver_algebra.hpp"

namespace hh {

// P_{i,j} = R e_i (x) e_j R
struct Summand {
  int i = 0;
  int j = 0;
  auto operator<=>(const Summand&) const = default;
};

struct ProjSum {
  std::vector<Summand> summands;

  size_t size() const { return summands.size(); }
  const Summand& operator[](size_t k) const { return summands[k]; }
  size_t dimension(const Algebra& alg) const;
  std::map<Summand, int> multiset() const;
  bool operator==(const ProjSum&) const = default;
};

// p (x) q inside summand k; p in R e_{i_k}, q in e_{j_k} R
struct Term {
  int k;
  int p;
  int q;
  Scalar c;
};

class BimodElement {
 public:
  BimodElement() = default;
  static BimodElement generator(const FieldSpec& f, const Algebra& alg, const ProjSum& ps, int k);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int k, int p, int q, const Scalar& c);
  void add_scaled(const BimodElement& x, const Scalar& c);
  BimodElement scaled(const Scalar& c) const;
  // finalizes after add_term calls: sorts, merges, drops zeros
  void normalize();
  bool operator==(const BimodElement& o) const;

 private:
  std::vector<Term> terms_;
  bool dirty_ = false;
};

// x * elem * y for algebra elements x, y
BimodElement act(const Algebra& alg, const AlgebraElement& x, const BimodElement& e,
                 const AlgebraElement& y);
BimodElement act_basis(const Algebra& alg, int x, const BimodElement& e, int y);

// Coordinates of a ProjSum split by isotypic block e_a (.) e_b.
class BlockBasis {
 public:
  BlockBasis(const Algebra& alg, const ProjSum& ps);

  int num_vertices() const { return nv_; }
  const std::vector<std::array<int, 3>>& block(int a, int b) const { return blocks_[a * nv_ + b]; }
  size_t block_dim(int a, int b) const { return block(a, b).size(); }
  // position of (k,p,q) inside its block, -1 if not a basis triple
  int position(int k, int p, int q) const;
  Vec to_block(const BimodElement& e, int a, int b) const;
  BimodElement from_block(const Vec& v, int a, int b) const;
  size_t total_dim() const { return total_; }

 private:
  const Algebra* alg_;
  int nv_;
  size_t total_ = 0;
  std::vector<std::vector<std::array<int, 3>>> blocks_;
  std::unordered_map<uint64_t, int> index_;
  uint64_t key(int k, int p, int q) const;
};

// Columns are source summands: images[l] is the image of the generator of source summand l.
class BimoduleMap {
 public:
  BimoduleMap() = default;
  BimoduleMap(ProjSum source, ProjSum target, std::vector<BimodElement> images);
  static BimoduleMap zero(const ProjSum& source, const ProjSum& target);
  static BimoduleMap identity(const FieldSpec& f, const Algebra& alg, const ProjSum& ps);

  const ProjSum& source() const { return source_; }
  const ProjSum& target() const { return target_; }
  const BimodElement& image(int l) const { return images_[l]; }
  const std::vector<BimodElement>& images() const { return images_; }
  // entry (k, l) as a list of (p, q, coefficient)
  std::vector<Term> entry(int k, int l) const;

  BimodElement apply(const Algebra& alg, const BimodElement& x) const;
  bool operator==(const BimoduleMap& o) const;

 private:
  ProjSum source_, target_;
  std::vector<BimodElement> images_;
};

BimoduleMap compose(const Algebra& alg, const BimoduleMap& g, const BimoduleMap& f);
bool is_zero_map(const BimoduleMap& f);

// epsilon-style multiplication map sum_k p(x)q -> sum c p e q
AlgebraElement multiply_out(const Algebra& alg, const ProjSum& ps, const BimodElement& x);

ProjSum twist(const ProjSum& ps, const AlgebraAutomorphism& phi_power);
BimoduleMap twist(const Algebra& alg, const BimoduleMap& f, const AlgebraAutomorphism& phi_power);

// dim Hom(P_{a,b}, M) = dim e_a M e_b
size_t hom_dim_to_algebra(const Algebra& alg, const Summand& s);
size_t hom_dim_to_projective(const Algebra& alg, const Summand& from, const Summand& to);

}  // namespace hh
