#include <map>
#include <random>

#include <doctest.h>

#include "hh/quiver_algebra.hpp"

using namespace hh;

namespace {

using Path = std::pair<int, std::vector<int>>;  // source, arrows in traversal order

std::vector<Path> all_paths(const QuiverSpec& q, int max_len) {
  std::vector<Path> out;
  for (int v = 0; v < q.num_vertices(); ++v) out.push_back({v, {}});
  for (size_t n = 0; n < out.size(); ++n) {
    if (static_cast<int>(out[n].second.size()) == max_len) continue;
    const int end = out[n].second.empty() ? out[n].first : q.arrows[out[n].second.back()].target;
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
      if (q.arrows[a].source == end) {
        Path p = out[n];
        p.second.push_back(a);
        out.push_back(std::move(p));
      }
  }
  return out;
}

int path_target(const QuiverSpec& q, const Path& p) {
  return p.second.empty() ? p.first : q.arrows[p.second.back()].target;
}

std::string kinds(const QuiverSpec& q, const std::vector<int>& arrows) {
  std::string k;
  for (int a : arrows) k += kind_letter(q.arrows[a].kind);
  return k;
}

// dim K[Q]/I from the generators as listed for the family: paths of length L,
// alpha^k - beta^3, and the monomials a g b, b g a, b^i g b^(4-i). The ideal is spanned
// inside the space of all shorter paths in one global elimination.
size_t oracle_dimension(Family fam, int s, FieldSpec f) {
  const QuiverSpec q = QuiverSpec::make(fam, s);
  const int L = q.path_bound;
  const auto paths = all_paths(q, L - 1);
  std::map<Path, size_t> index;
  for (size_t n = 0; n < paths.size(); ++n) index[paths[n]] = n;

  std::vector<std::vector<std::pair<Path, int>>> gens;
  const std::string alpha(q.alpha_len, 'a'), beta(q.beta_len, 'b');
  for (const auto& p : paths) {
    const std::string k = kinds(q, p.second);
    if (k == "agb" || k == "bga" || k == "bgbbb" || k == "bbgbb" || k == "bbbgb") gens.push_back({{p, 1}});
    if (k == alpha)
      for (const auto& p2 : paths)
        if (p2.first == p.first && kinds(q, p2.second) == beta && path_target(q, p2) == path_target(q, p))
          gens.push_back({{p, 1}, {p2, -1}});
  }
  Subspace ideal(f, paths.size());
  for (const auto& g : gens) {
    const int src = g[0].first.first, dst = path_target(q, g[0].first);
    for (const auto& u : paths) {
      if (path_target(q, u) != src) continue;
      for (const auto& v : paths) {
        if (v.first != dst) continue;
        Vec vec(paths.size(), f.zero());
        bool any = false;
        for (const auto& [t, c] : g) {
          std::vector<int> w = u.second;
          w.insert(w.end(), t.second.begin(), t.second.end());
          w.insert(w.end(), v.second.begin(), v.second.end());
          if (static_cast<int>(w.size()) >= L) continue;
          vec[index.at({u.first, w})] += f.from_int(c);
          any = true;
        }
        if (any) ideal.add(std::move(vec));
      }
    }
  }
  return paths.size() - ideal.dim();
}

std::vector<int> chain(const QuiverSpec& q, ArrowKind k, int block) {
  std::vector<std::pair<int, int>> found;
  for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
    if (q.arrows[a].kind == k && q.arrows[a].block == block) found.push_back({q.arrows[a].position, a});
  std::sort(found.begin(), found.end());
  std::vector<int> out;
  for (auto [_, a] : found) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("quiver shape") {
  const QuiverSpec e7 = QuiverSpec::make(Family::E7, 2);
  CHECK(e7.num_vertices() == 14);
  CHECK(e7.arrows.size() == 2 * 8);
  // alpha: 7r -> 7r+1 -> 7r+2 -> 7r+3 -> 7r+6, beta: 7r -> 7r+4 -> 7r+5 -> 7r+6, gamma: 7r+6 -> 7(r+1)
  std::vector<std::pair<int, int>> alpha, beta;
  for (int a : chain(e7, ArrowKind::Alpha, 1)) alpha.push_back({e7.arrows[a].source, e7.arrows[a].target});
  for (int a : chain(e7, ArrowKind::Beta, 1)) beta.push_back({e7.arrows[a].source, e7.arrows[a].target});
  CHECK(alpha == std::vector<std::pair<int, int>>{{7, 8}, {8, 9}, {9, 10}, {10, 13}});
  CHECK(beta == std::vector<std::pair<int, int>>{{7, 11}, {11, 12}, {12, 13}});
  const int g = chain(e7, ArrowKind::Gamma, 1)[0];
  CHECK(e7.arrows[g].source == 13);
  CHECK(e7.arrows[g].target == 0);

  const QuiverSpec e8 = QuiverSpec::make(Family::E8, 1);
  std::vector<std::pair<int, int>> a8;
  for (int a : chain(e8, ArrowKind::Alpha, 0)) a8.push_back({e8.arrows[a].source, e8.arrows[a].target});
  CHECK(a8 == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 7}});
}

TEST_CASE("build rejects s = 0") { CHECK_THROWS(Algebra::build(Family::E7, 0, FieldSpec(2))); }

TEST_CASE("dimension agrees with the global elimination oracle") {
  for (auto [fam, s] : std::vector<std::pair<Family, int>>{{Family::E7, 1}, {Family::E7, 2}, {Family::E8, 1}})
    for (uint32_t p : {0u, 2u, 3u}) {
      CAPTURE(family_name(fam));
      CAPTURE(s);
      CAPTURE(p);
      CHECK(Algebra::build(fam, s, FieldSpec(p)).dim() == oracle_dimension(fam, s, FieldSpec(p)));
    }
}

TEST_CASE("paths of length 6 vanish in R_s") {
  for (int s : {1, 2}) {
    const Algebra alg = Algebra::build(Family::E7, s, FieldSpec(3));
    for (const auto& p : all_paths(alg.quiver(), 6))
      if (p.second.size() == 6) CHECK(alg.reduce_path(p.first, p.second).empty());
  }
  const Algebra e8 = Algebra::build(Family::E8, 1, FieldSpec(3));
  for (const auto& p : all_paths(e8.quiver(), 7))
    if (p.second.size() == 7) CHECK(e8.reduce_path(p.first, p.second).empty());
}

TEST_CASE("alpha^4 = beta^3 and the monomial relations") {
  const Algebra alg = Algebra::build(Family::E7, 1, FieldSpec(0));
  const QuiverSpec& q = alg.quiver();
  const auto alpha = chain(q, ArrowKind::Alpha, 0), beta = chain(q, ArrowKind::Beta, 0);
  const int gamma = chain(q, ArrowKind::Gamma, 0)[0];
  const auto a4 = alg.reduce_path(0, alpha), b3 = alg.reduce_path(0, beta);
  CHECK_FALSE(a4.empty());
  CHECK(a4 == b3);
  CHECK(alg.reduce_path(q.arrows[alpha.back()].source, {alpha.back(), gamma, beta.front()}).empty());
  CHECK(alg.reduce_path(q.arrows[beta.back()].source, {beta.back(), gamma, alpha.front()}).empty());
  CHECK(alg.reduce_path(q.arrows[beta[1]].source, {beta[1], beta[2], gamma, beta[0], beta[1]}).empty());

  const Algebra e8 = Algebra::build(Family::E8, 1, FieldSpec(0));
  CHECK(e8.reduce_path(0, chain(e8.quiver(), ArrowKind::Alpha, 0)) ==
        e8.reduce_path(0, chain(e8.quiver(), ArrowKind::Beta, 0)));
}

TEST_CASE("diagonal dimension of R_1 over GF(2)") {
  const Algebra alg = Algebra::build(Family::E7, 1, FieldSpec(2));
  size_t diag = 0;
  for (int i = 0; i < alg.num_vertices(); ++i) diag += alg.block(i, i).size();
  CHECK(diag == 14);
}

TEST_CASE("idempotents") {
  const Algebra alg = Algebra::build(Family::E7, 2, FieldSpec(3));
  const int N = alg.num_vertices();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      auto p = alg.product(alg.idempotent(i), alg.idempotent(j));
      if (i == j)
        CHECK(p == alg.basis_element(alg.idempotent(i)));
      else
        CHECK(p.empty());
    }
  AlgebraElement one;
  for (int i = 0; i < N; ++i) add_scaled(one, alg.basis_element(alg.idempotent(i)), alg.field().one());
  for (int b = 0; b < static_cast<int>(alg.dim()); ++b) {
    CHECK(alg.multiply(one, alg.basis_element(b)) == alg.basis_element(b));
    CHECK(alg.multiply(alg.basis_element(b), one) == alg.basis_element(b));
  }
}

TEST_CASE("multiplication respects displacement on the cover and is associative") {
  for (Family fam : {Family::E7, Family::E8}) {
    const Algebra alg = Algebra::build(fam, 2, FieldSpec(5));
    const int D = static_cast<int>(alg.dim());
    for (int x = 0; x < D; ++x)
      for (int y = 0; y < D; ++y)
        for (const auto& [b, c] : alg.product(x, y)) CHECK(alg.displacement(b) == alg.displacement(x) + alg.displacement(y));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 3000; ++trial) {
      AlgebraElement x = alg.basis_element(rng() % D), y = alg.basis_element(rng() % D),
                     z = alg.basis_element(rng() % D);
      CHECK(alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z)));
    }
  }
}

TEST_CASE("canonical paths") {
  const Algebra alg = Algebra::build(Family::E7, 1, FieldSpec(3));
  const QuiverSpec& q = alg.quiver();
  CHECK(alg.canonical_path(0, 0) == alg.basis_element(alg.idempotent(0)));
  auto alpha = chain(q, ArrowKind::Alpha, 0), beta = chain(q, ArrowKind::Beta, 0);
  const int gamma = chain(q, ArrowKind::Gamma, 0)[0];
  auto a4g = alpha;
  a4g.push_back(gamma);
  auto b3g = beta;
  b3g.push_back(gamma);
  auto w07 = alg.canonical_path(0, 7);
  REQUIRE(w07);
  CHECK(*w07 == alg.reduce_path(0, a4g));
  CHECK(*w07 == alg.reduce_path(0, b3g));
  CHECK(alg.canonical_path(0, 1) == alg.basis_element(alg.arrow_element(alpha[0])));
  // w_{0->7} and e_0 share endpoints in Z_7 but differ on the universal cover
  CHECK(alg.canonical_path(0, 7) != alg.canonical_path(0, 0));
}

TEST_CASE("canonical paths follow the dimension of each displacement class") {
  for (Family fam : {Family::E7, Family::E8})
    for (int s : {1, 2}) {
      const Algebra alg = Algebra::build(fam, s, FieldSpec(2));
      const int N = alg.num_vertices();
      std::map<std::pair<int, int>, std::vector<int>> classes;
      for (int b = 0; b < static_cast<int>(alg.dim()); ++b) classes[{alg.right(b), alg.displacement(b)}].push_back(b);
      for (int a = 0; a < N; ++a)
        for (int d = 0; d <= 3 * alg.quiver().block_size; ++d) {
          auto it = classes.find({a, d});
          const size_t count = it == classes.end() ? 0 : it->second.size();
          if (count > 1) {
            CHECK_THROWS_AS(alg.canonical_path(a, a + d), AmbiguousPath);
            continue;
          }
          auto w = alg.canonical_path(a, a + d);
          if (count == 0) {
            CHECK_FALSE(w);
          } else {
            REQUIRE(w);
            CHECK(*w == alg.basis_element(it->second[0]));
          }
          // shifting both labels by N names the same path
          if (count <= 1) CHECK(alg.canonical_path(a + N, a + d + N) == w);
        }
    }
}

TEST_CASE("automorphism orders") {
  CHECK(automorphism_order(standard_automorphism(Algebra::build(Family::E7, 9, FieldSpec(2)))) == 1);
  CHECK(automorphism_order(standard_automorphism(Algebra::build(Family::E7, 1, FieldSpec(3)))) == 2);
  CHECK(automorphism_order(standard_automorphism(Algebra::build(Family::E8, 5, FieldSpec(2)))) == 1);
  for (auto [fam, s] : std::vector<std::pair<Family, int>>{
           {Family::E7, 1}, {Family::E7, 2}, {Family::E7, 3}, {Family::E7, 9}, {Family::E8, 1}, {Family::E8, 2}, {Family::E8, 5}})
    for (uint32_t p : {0u, 2u, 3u}) {
      CAPTURE(s);
      CAPTURE(p);
      const Algebra alg = Algebra::build(fam, s, FieldSpec(p));
      CHECK(automorphism_order(standard_automorphism(alg)) == predicted_order(fam, s, p));
    }
}

TEST_CASE("sigma and rho are multiplicative and bijective") {
  for (auto [fam, s] : std::vector<std::pair<Family, int>>{
           {Family::E7, 1}, {Family::E7, 2}, {Family::E7, 3}, {Family::E8, 1}, {Family::E8, 2}})
    for (uint32_t p : {0u, 3u}) {
      const Algebra alg = Algebra::build(fam, s, FieldSpec(p));
      const AlgebraAutomorphism phi = standard_automorphism(alg);
      const int D = static_cast<int>(alg.dim());
      size_t bad = 0;
      for (int x = 0; x < D; ++x)
        for (int y = 0; y < D; ++y)
          if (phi.apply(alg.product(x, y)) != alg.multiply(phi.image(x), phi.image(y))) ++bad;
      CHECK(bad == 0);
      Matrix m(alg.field(), D, D);
      for (int b = 0; b < D; ++b)
        for (const auto& [k, c] : phi.image(b)) m.at(k, b) = c;
      CHECK(rank(m) == size_t(D));
    }
}

TEST_CASE("json descriptor carries the hash") {
  const Algebra a = Algebra::build(Family::E8, 2, FieldSpec(5));
  const auto j = a.to_json();
  CHECK(j.at("hash") == a.hash());
  CHECK(a.hash() != Algebra::build(Family::E8, 2, FieldSpec(3)).hash());
  CHECK(a.hash() == Algebra::build(Family::E8, 2, FieldSpec(5)).hash());
}
