#include <random>

#include <doctest.h>

#include "hh/resolver.hpp"

using namespace hh;

namespace {

size_t count_words(const Algebra& alg, int left, int right) {
  size_t n = 0;
  for (int b = 0; b < static_cast<int>(alg.dim()); ++b) n += alg.left(b) == left && alg.right(b) == right;
  return n;
}

ProjSum random_projsum(int nv, int len, std::mt19937_64& rng) {
  ProjSum ps;
  for (int k = 0; k < len; ++k) ps.summands.push_back({int(rng() % nv), int(rng() % nv)});
  return ps;
}

BimodElement random_in_block(const Algebra& alg, const BlockBasis& bb, int a, int b, std::mt19937_64& rng) {
  Vec v(bb.block_dim(a, b), alg.field().zero());
  for (auto& x : v)
    if (rng() % 3 == 0) x = alg.field().from_int(int(rng() % 7) - 3);
  return bb.from_block(v, a, b);
}

BimoduleMap random_map(const Algebra& alg, const ProjSum& src, const ProjSum& dst, std::mt19937_64& rng) {
  BlockBasis bb(alg, dst);
  std::vector<BimodElement> ims;
  for (const auto& s : src.summands) ims.push_back(random_in_block(alg, bb, s.i, s.j, rng));
  return BimoduleMap(src, dst, std::move(ims));
}

AlgebraElement random_element(const Algebra& alg, std::mt19937_64& rng) {
  AlgebraElement x;
  for (int n = 0; n < 3; ++n)
    add_scaled(x, alg.basis_element(int(rng() % alg.dim())), alg.field().from_int(int(rng() % 5) + 1));
  return x;
}

}  // namespace

TEST_CASE("hom dimensions agree with basis enumeration") {
  for (Family fam : {Family::E7, Family::E8}) {
    const Algebra alg = Algebra::build(fam, 2, FieldSpec(3));
    const int N = alg.num_vertices();
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) CHECK(hom_dim_to_algebra(alg, {a, b}) == count_words(alg, a, b));
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
      Summand from{int(rng() % N), int(rng() % N)}, to{int(rng() % N), int(rng() % N)};
      // Hom(P_{i,j}, P_{k,l}) = e_i R e_k (x) e_l R e_j
      CHECK(hom_dim_to_projective(alg, from, to) == count_words(alg, from.i, to.i) * count_words(alg, to.j, from.j));
    }
  }
}

TEST_CASE("block basis covers the projective sum") {
  const Algebra alg = Algebra::build(Family::E7, 1, FieldSpec(2));
  std::mt19937_64 rng(4);
  const ProjSum ps = random_projsum(alg.num_vertices(), 5, rng);
  BlockBasis bb(alg, ps);
  size_t total = 0;
  for (const auto& s : ps.summands) {
    size_t left = 0, right = 0;
    for (int b = 0; b < static_cast<int>(alg.dim()); ++b) {
      left += alg.right(b) == s.i;
      right += alg.left(b) == s.j;
    }
    total += left * right;
  }
  CHECK(bb.total_dim() == total);
  CHECK(ps.dimension(alg) == total);
  size_t sum = 0;
  for (int a = 0; a < alg.num_vertices(); ++a)
    for (int b = 0; b < alg.num_vertices(); ++b) {
      size_t expect = 0;
      for (const auto& s : ps.summands) expect += hom_dim_to_projective(alg, {a, b}, s);
      CHECK(bb.block_dim(a, b) == expect);
      sum += bb.block_dim(a, b);
      const BimodElement e = random_in_block(alg, bb, a, b, rng);
      CHECK(bb.from_block(bb.to_block(e, a, b), a, b) == e);
    }
  CHECK(sum == total);
}

TEST_CASE("identity and zero maps") {
  const Algebra alg = Algebra::build(Family::E8, 1, FieldSpec(5));
  std::mt19937_64 rng(8);
  const ProjSum p = random_projsum(alg.num_vertices(), 3, rng), q = random_projsum(alg.num_vertices(), 4, rng);
  const BimoduleMap f = random_map(alg, p, q, rng);
  CHECK(compose(alg, BimoduleMap::identity(alg.field(), alg, q), f) == f);
  CHECK(compose(alg, f, BimoduleMap::identity(alg.field(), alg, p)) == f);
  CHECK(is_zero_map(compose(alg, f, BimoduleMap::zero(p, p))));
  CHECK(is_zero_map(compose(alg, BimoduleMap::zero(q, p), f)));
  CHECK(is_zero_map(BimoduleMap::zero(p, q)));
  const BimodElement g = BimodElement::generator(alg.field(), alg, p, 1);
  CHECK(f.apply(alg, g) == f.image(1));
}

TEST_CASE("maps are bimodule homomorphisms and composition is associative") {
  for (Family fam : {Family::E7, Family::E8}) {
    const Algebra alg = Algebra::build(fam, 2, FieldSpec(3));
    std::mt19937_64 rng(15);
    const int N = alg.num_vertices();
    for (int trial = 0; trial < 10; ++trial) {
      const ProjSum a = random_projsum(N, 2, rng), b = random_projsum(N, 3, rng), c = random_projsum(N, 2, rng),
                    d = random_projsum(N, 2, rng);
      const BimoduleMap f = random_map(alg, a, b, rng), g = random_map(alg, b, c, rng), h = random_map(alg, c, d, rng);
      CHECK(compose(alg, h, compose(alg, g, f)) == compose(alg, compose(alg, h, g), f));
      const BimodElement e = BimodElement::generator(alg.field(), alg, a, 0);
      const AlgebraElement x = random_element(alg, rng), y = random_element(alg, rng);
      const BimodElement xey = act(alg, x, e, y);
      CHECK(f.apply(alg, xey) == act(alg, x, f.apply(alg, e), y));
      CHECK(compose(alg, g, f).apply(alg, xey) == g.apply(alg, f.apply(alg, xey)));
      const AlgebraElement x2 = random_element(alg, rng), y2 = random_element(alg, rng);
      CHECK(act(alg, x2, xey, y2) == act(alg, alg.multiply(x2, x), e, alg.multiply(y, y2)));
    }
  }
}

TEST_CASE("first differentials compose to zero") {
  for (Family fam : {Family::E7, Family::E8})
    for (uint32_t p : {0u, 2u}) {
      const Algebra alg = Algebra::build(fam, 1, FieldSpec(p));
      const Resolution res = build_resolution(alg, 3);
      CHECK(is_zero_map(compose(alg, res.d(0), res.d(1))));
      CHECK(is_zero_map(compose(alg, res.d(1), res.d(2))));
      for (const auto& im : res.d(0).images()) CHECK(multiply_out(alg, res.term(0), im).empty());
    }
}

TEST_CASE("twisting") {
  const Algebra alg = Algebra::build(Family::E7, 2, FieldSpec(3));
  const AlgebraAutomorphism sigma = standard_automorphism(alg);
  const Resolution res = build_resolution(alg, 3);
  for (int m = 0; m < 3; ++m) {
    const ProjSum tw = twist(res.term(m), sigma);
    REQUIRE(tw.size() == res.term(m).size());
    for (size_t k = 0; k < tw.size(); ++k) {
      CHECK(tw[k].i == sigma.vertex(res.term(m)[k].i));
      CHECK(tw[k].j == res.term(m)[k].j);
    }
  }
  const BimoduleMap d0 = twist(alg, res.d(0), sigma), d1 = twist(alg, res.d(1), sigma);
  CHECK(is_zero_map(compose(alg, d0, d1)));
  CHECK(twist(alg, compose(alg, res.d(0), res.d(1)), sigma) == compose(alg, d0, d1));
  CHECK(twist(alg, d1, sigma) == twist(alg, res.d(1), sigma.power(2)));
  CHECK(twist(alg, res.d(1), AlgebraAutomorphism::identity(alg)) == res.d(1));
  const int order = automorphism_order(sigma);
  CHECK(twist(alg, res.d(2), sigma.power(order)) == res.d(2));
}
