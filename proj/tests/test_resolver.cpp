#include <doctest.h>

#include "hh/resolver.hpp"

using namespace hh;

namespace {

std::map<Summand, int> arrow_multiset(const QuiverSpec& q) {
  std::map<Summand, int> out;
  for (const auto& a : q.arrows) ++out[{a.target, a.source}];
  return out;
}

}  // namespace

TEST_CASE("helper indicator functions") {
  CHECK(f3(3, 2, 5) == 1);
  CHECK(f2(3, 4) == 0);
  CHECK(f2(4, 4) == 1);
  CHECK(f3(6, 2, 5) == 0);
  CHECK(f3(2, 2, 2) == 1);
  CHECK(resolution_period(Family::E7) == 17);
  CHECK(resolution_period(Family::E8) == 29);
}

TEST_CASE("low degree terms") {
  const Algebra alg = Algebra::build(Family::E7, 1, FieldSpec(2));
  const Resolution res = build_resolution(alg, 5);
  std::map<Summand, int> diag;
  for (int v = 0; v < alg.num_vertices(); ++v) diag[{v, v}] = 1;
  CHECK(res.term(0).multiset() == diag);
  CHECK(predicted_terms(Family::E7, 1, 0).multiset() == diag);
  CHECK(res.term(1).multiset() == arrow_multiset(alg.quiver()));
  CHECK(res.term(1).multiset() == predicted_terms(Family::E7, 1, 1).multiset());
  CHECK(predicted_terms(Family::E7, 1, 5).size() == 10);
  CHECK(res.term(5).size() == 10);

  const ProjSum q0 = predicted_terms(Family::E7, 3, 0);
  CHECK(q0.size() == 21);
  for (const auto& s : q0.summands) CHECK(s.i == s.j);
}

TEST_CASE("computed terms match both transcriptions of the term formulas") {
  for (auto [fam, s] : std::vector<std::pair<Family, int>>{
           {Family::E7, 1}, {Family::E7, 2}, {Family::E7, 3}, {Family::E8, 1}, {Family::E8, 2}}) {
    const int P = resolution_period(fam);
    const Algebra alg = Algebra::build(fam, s, FieldSpec(3));
    const Resolution res = build_resolution(alg, P + 3);
    for (int m = 0; m <= P + 3; ++m) {
      CAPTURE(family_name(fam));
      CAPTURE(s);
      CAPTURE(m);
      CHECK(res.term(m).multiset() == predicted_terms(fam, s, m).multiset());
      if (m < P) CHECK(lemma_terms(fam, s, m).multiset() == predicted_terms(fam, s, m).multiset());
    }
  }
}

TEST_CASE("the term after one period is the twisted first term") {
  for (Family fam : {Family::E7, Family::E8})
    for (uint32_t p : {2u, 3u}) {
      const Algebra alg = Algebra::build(fam, 2, FieldSpec(p));
      const int P = resolution_period(fam);
      const Resolution res = build_resolution(alg, P + 2);
      const AlgebraAutomorphism phi = standard_automorphism(alg);
      for (int r = 0; r <= 2; ++r) CHECK(res.term(P + r).multiset() == twist(res.term(r), phi).multiset());
    }
}

TEST_CASE("differentials square to zero, are minimal and exact") {
  for (auto [fam, D] : std::vector<std::pair<Family, int>>{{Family::E7, 18}, {Family::E8, 30}})
    for (uint32_t p : {0u, 2u, 3u}) {
      const Algebra alg = Algebra::build(fam, 1, FieldSpec(p));
      const Resolution res = build_resolution(alg, D);
      for (int m = 0; m + 1 < D; ++m) CHECK(is_zero_map(compose(alg, res.d(m), res.d(m + 1))));
      for (const auto& im : res.d(0).images()) CHECK(multiply_out(alg, res.term(0), im).empty());
      // every entry p (x) q has positive total length
      for (int m = 0; m < D; ++m)
        for (const auto& im : res.d(m).images())
          for (const auto& t : im.terms()) CHECK(alg.length(t.p) + alg.length(t.q) > 0);
      // rank out_m + rank out_{m+1} fills each block of Q_m; out_0 is onto R
      const int N = alg.num_vertices();
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          CHECK(rank(res.out_block_matrix(0, a, b)) == alg.block(a, b).size());
          for (int m = 0; m < D; ++m)
            CHECK(rank(res.out_block_matrix(m, a, b)) + rank(res.out_block_matrix(m + 1, a, b)) ==
                  res.basis(m).block_dim(a, b));
        }
      CHECK(check_resolution(res).ok());
    }
}

TEST_CASE("extending a resolution matches building it at once") {
  const Algebra alg = Algebra::build(Family::E8, 2, FieldSpec(5));
  Resolution a = build_resolution(alg, 4);
  extend_resolution(a, 9);
  const Resolution b = build_resolution(alg, 9);
  for (int m = 0; m <= 9; ++m) CHECK(a.term(m) == b.term(m));
  for (int m = 0; m < 9; ++m) CHECK(a.d(m) == b.d(m));
}

TEST_CASE("Happel multiplicities") {
  const Algebra alg = Algebra::build(Family::E7, 1, FieldSpec(2));
  const Resolution res = build_resolution(alg, 16);
  std::vector<SimpleResolution> simples;
  for (int v = 0; v < alg.num_vertices(); ++v) simples.push_back(simple_resolution(alg, v, 17));
  for (int m = 0; m <= 16; ++m) {
    CAPTURE(m);
    CHECK(verify_happel(alg, res, simples, m).ok());
  }
  // one-sided Ext^1 counts arrows
  std::map<Summand, int> ext1;
  for (const auto& sr : simples)
    for (int w : sr.terms[1]) ++ext1[{w, sr.vertex}];
  std::map<Summand, int> arrows;
  for (const auto& a : alg.quiver().arrows) ++arrows[{a.target, a.source}];
  CHECK(ext1 == arrows);
  for (const auto& sr : simples) {
    CHECK(sr.terms[0] == std::vector<int>{sr.vertex});
    CHECK(sr.exact);
    CHECK(sr.minimal);
  }
}

TEST_CASE("syzygy examples") {
  {
    const Algebra alg = Algebra::build(Family::E7, 2, FieldSpec(0));
    CHECK(simple_resolution(alg, 1, 2).syzygy_simple(2) == std::optional<int>(9));
    CHECK(simple_resolution(alg, 8, 2).syzygy_simple(2) == std::optional<int>(2));
  }
  {
    const Algebra alg = Algebra::build(Family::E7, 9, FieldSpec(2));
    CHECK(simple_resolution(alg, 0, 15).syzygy_simple(15) == std::optional<int>(55));
  }
  {
    const Algebra alg = Algebra::build(Family::E8, 13, FieldSpec(3));
    CHECK(simple_resolution(alg, 4, 23).syzygy_simple(23) == std::optional<int>(97));
  }
}

TEST_CASE("every listed syzygy claim holds for s = 1, 2") {
  CHECK(syzygy_claims().size() == 15);
  for (int s : {1, 2})
    for (const auto& c : syzygy_claims()) {
      const Algebra alg = Algebra::build(c.family, s, FieldSpec(2));
      const int n = alg.quiver().block_size, N = alg.num_vertices();
      for (int r = 0; r < s; ++r) {
        const SimpleResolution sr = simple_resolution(alg, n * r + c.local_vertex, c.length);
        CAPTURE(family_name(c.family));
        CAPTURE(c.local_vertex);
        CHECK(sr.syzygy_simple(c.length) == std::optional<int>(((n * (r + c.block_shift) + c.local_target) % N + N) % N));
      }
    }
}

TEST_CASE("periods") {
  struct Case {
    Family fam;
    uint32_t p;
    int order, period;
  };
  for (const Case& c : {Case{Family::E7, 2, 1, 17}, Case{Family::E7, 3, 2, 34}, Case{Family::E8, 2, 1, 29}}) {
    const Algebra alg = Algebra::build(c.fam, 1, FieldSpec(c.p));
    const Resolution res = build_resolution(alg, c.period + 1);
    const PeriodReport pr = verify_periodicity(res);
    CHECK(pr.automorphism_order == c.order);
    CHECK(pr.predicted_order == c.order);
    CHECK(pr.first.iso_found);
    CHECK(pr.first.dims_match);
    CHECK(pr.minimal_period == c.period);
    CHECK(pr.predicted_period == c.period);
  }
}
