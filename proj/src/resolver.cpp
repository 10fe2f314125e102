#include "hh/resolver.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace hh {

const LinearSolver& Resolution::out_solver(int m, int a, int b) const {
  return solvers_.at(m)[size_t(a) * alg_->num_vertices() + b];
}

std::optional<Vec> Resolution::preimage(int m, int a, int b, const Vec& y) const {
  return out_solver(m, a, b).solve(y);
}

Vec Resolution::out_image(int m, const BimodElement& x, int a, int b) const {
  const FieldSpec& F = alg_->field();
  if (m == 0) {
    Vec v(alg_->block(a, b).size(), F.zero());
    for (const auto& [e, c] : multiply_out(*alg_, terms_[0], x)) v[alg_->position_in_block(e)] += c;
    return v;
  }
  return bases_[m - 1]->to_block(d_[m - 1].apply(*alg_, x), a, b);
}

Matrix Resolution::out_block_matrix(int m, int a, int b) const {
  const Algebra& alg = *alg_;
  const auto& cols = bases_[m]->block(a, b);
  size_t rows = m == 0 ? alg.block(a, b).size() : bases_[m - 1]->block_dim(a, b);
  Matrix mat(alg.field(), rows, cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    auto [k, p, q] = cols[c];
    if (m == 0) {
      for (const auto& [e, coef] : alg.product(p, q)) mat.at(alg.position_in_block(e), c) += coef;
    } else {
      BimodElement img = act_basis(alg, p, d_[m - 1].image(k), q);
      mat.set_column(c, bases_[m - 1]->to_block(img, a, b));
    }
  }
  return mat;
}

void Resolution::push_term(ProjSum q) {
  const int m = static_cast<int>(terms_.size());
  const int N = alg_->num_vertices();
  terms_.push_back(std::move(q));
  bases_.push_back(std::make_shared<BlockBasis>(*alg_, terms_.back()));
  std::vector<LinearSolver> sol(size_t(N) * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) sol[size_t(a) * N + b] = LinearSolver(out_block_matrix(m, a, b));
  solvers_.push_back(std::move(sol));
}

size_t Resolution::kernel_dim(int m) const {
  size_t d = 0;
  for (const auto& s : solvers_.at(m)) d += s.kernel().size();
  return d;
}

size_t Resolution::image_dim(int m) const {
  size_t d = 0;
  for (const auto& s : solvers_.at(m + 1)) d += s.rank();
  return d;
}

Resolution build_resolution(const Algebra& alg, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
  Resolution res;
  res.alg_ = &alg;
  ProjSum q0;
  for (int v = 0; v < alg.num_vertices(); ++v) q0.summands.push_back({v, v});
  res.push_term(std::move(q0));
  extend_resolution(res, max_degree);
  return res;
}

void extend_resolution(Resolution& res, int max_degree) {
  const Algebra& alg = *res.alg_;
  const FieldSpec& F = alg.field();
  const int N = alg.num_vertices();
  const auto& quiver = alg.quiver();
  while (res.max_degree() < max_degree) {
    const int m = res.max_degree();
    const BlockBasis& B = res.basis(m);
    auto kernel = [&](int a, int b) -> const std::vector<Vec>& { return res.out_solver(m, a, b).kernel(); };
    ProjSum next;
    std::vector<BimodElement> images;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        const auto& K = kernel(a, b);
        if (K.empty()) continue;
        Subspace span(F, B.block_dim(a, b));
        for (int x : quiver.in[a]) {
          int src = quiver.arrows[x].source;
          for (const auto& v : kernel(src, b)) {
            BimodElement img = act_basis(alg, alg.arrow_element(x), B.from_block(v, src, b), alg.idempotent(b));
            span.add(B.to_block(img, a, b));
          }
        }
        for (int y : quiver.out[b]) {
          int tgt = quiver.arrows[y].target;
          for (const auto& v : kernel(a, tgt)) {
            BimodElement img = act_basis(alg, alg.idempotent(a), B.from_block(v, a, tgt), alg.arrow_element(y));
            span.add(B.to_block(img, a, b));
          }
        }
        for (const auto& v : K)
          if (span.add(v)) {
            next.summands.push_back({a, b});
            images.push_back(B.from_block(v, a, b));
          }
      }
    res.d_.emplace_back(next, res.terms_[m], std::move(images));
    res.push_term(std::move(next));
  }
}

Resolution assemble_resolution(const Algebra& alg, std::vector<ProjSum> terms,
                               std::vector<BimoduleMap> d) {
  if (terms.empty() || d.size() + 1 != terms.size())
    throw std::invalid_argument("resolution needs n+1 terms and n differentials");
  Resolution res;
  res.alg_ = &alg;
  for (int v = 0; v < alg.num_vertices(); ++v)
    if (terms[0].size() != size_t(alg.num_vertices()) || !(terms[0][v] == Summand{v, v}))
      throw std::invalid_argument("Q_0 must be the diagonal sum");
  res.push_term(terms[0]);
  for (size_t m = 0; m < d.size(); ++m) {
    if (!(d[m].source() == terms[m + 1]) || !(d[m].target() == terms[m]))
      throw std::invalid_argument(fmt::format("differential {} has the wrong shape", m));
    res.d_.push_back(d[m]);
    res.push_term(terms[m + 1]);
  }
  return res;
}

ResolutionCheck check_resolution(const Resolution& res) {
  ResolutionCheck out;
  const Algebra& alg = res.algebra();
  if (res.max_degree() >= 1)
    for (const auto& im : res.d(0).images())
      if (!multiply_out(alg, res.term(0), im).empty()) out.epsilon_d0_zero = false;
  for (int m = 0; m + 2 <= res.max_degree(); ++m)
    if (!is_zero_map(compose(alg, res.d(m), res.d(m + 1)))) out.dd_nonzero.push_back(m);
  size_t eps_rank = 0;
  for (int a = 0; a < alg.num_vertices(); ++a)
    for (int b = 0; b < alg.num_vertices(); ++b) eps_rank += res.out_solver(0, a, b).rank();
  if (eps_rank != alg.dim()) out.inexact.push_back(-1);
  for (int m = 0; m + 1 <= res.max_degree(); ++m)
    if (res.kernel_dim(m) != res.image_dim(m)) out.inexact.push_back(m);
  for (int m = 0; m + 1 <= res.max_degree(); ++m) {
    const auto& tgt = res.term(m);
    bool bad = false;
    for (const auto& im : res.d(m).images())
      for (const auto& t : im.terms())
        if (t.p == alg.idempotent(tgt[t.k].i) && t.q == alg.idempotent(tgt[t.k].j)) bad = true;
    if (bad) out.non_minimal.push_back(m);
  }
  return out;
}

// ---- one-sided resolutions ----

namespace {

struct OneSided {
  const Algebra& alg;
  std::vector<int> summands;
  // per block a: list of (k, p)
  std::vector<std::vector<std::pair<int, int>>> blocks;
  std::map<std::pair<int, int>, int> pos;

  OneSided(const Algebra& A, std::vector<int> s) : alg(A), summands(std::move(s)) {
    blocks.assign(A.num_vertices(), {});
    for (int k = 0; k < static_cast<int>(summands.size()); ++k)
      for (int a = 0; a < A.num_vertices(); ++a)
        for (int p : A.block(a, summands[k])) {
          pos[{k, p}] = static_cast<int>(blocks[a].size());
          blocks[a].emplace_back(k, p);
        }
  }
};

}  // namespace

std::optional<int> SimpleResolution::syzygy_simple(int m) const {
  if (m < 1 || m >= static_cast<int>(syzygy_dim.size())) return std::nullopt;
  if (syzygy_dim[m] != 1) return std::nullopt;
  return syzygy_support[m][0];
}

SimpleResolution simple_resolution(const Algebra& alg, int v, int length) {
  const FieldSpec& F = alg.field();
  const int N = alg.num_vertices();
  const auto& quiver = alg.quiver();
  SimpleResolution out;
  out.vertex = v;
  out.syzygy_dim.push_back(1);
  out.syzygy_support.push_back({v});
  out.maps.emplace_back();
  std::vector<int> cur{v};
  std::vector<std::vector<std::tuple<int, int, Scalar>>> cur_images;  // images of cur's generators
  std::unique_ptr<OneSided> prev;
  for (int m = 0; m < length; ++m) {
    out.terms.push_back(cur);
    auto mod = std::make_unique<OneSided>(alg, cur);
    // kernel of the map out of P^m, per block
    std::vector<std::vector<Vec>> K(N);
    size_t rank_total = 0;
    for (int a = 0; a < N; ++a) {
      const auto& cols = mod->blocks[a];
      size_t rows = m == 0 ? (a == v ? 1 : 0) : prev->blocks[a].size();
      Matrix mat(F, rows, cols.size());
      for (size_t c = 0; c < cols.size(); ++c) {
        auto [l, x] = cols[c];
        if (m == 0) {
          if (a == v && x == alg.idempotent(v)) mat.at(0, c) = F.one();
          continue;
        }
        for (const auto& [k, p, coef] : cur_images[l])
          for (const auto& [xp, c2] : alg.product(x, p)) mat.at(prev->pos.at({k, xp}), c) += coef * c2;
      }
      LinearSolver solver(mat);
      rank_total += solver.rank();
      K[a] = solver.kernel();
    }
    if (m >= 1 && rank_total != out.syzygy_dim[m]) out.exact = false;
    size_t kdim = 0;
    std::vector<int> support;
    for (int a = 0; a < N; ++a)
      if (!K[a].empty()) {
        kdim += K[a].size();
        support.push_back(a);
      }
    out.syzygy_dim.push_back(kdim);
    out.syzygy_support.push_back(support);
    if (m + 1 == length) break;
    // generators of the kernel modulo its radical
    std::vector<int> next;
    std::vector<std::vector<std::tuple<int, int, Scalar>>> next_images;
    for (int a = 0; a < N; ++a) {
      if (K[a].empty()) continue;
      Subspace span(F, mod->blocks[a].size());
      for (int x : quiver.in[a]) {
        int src = quiver.arrows[x].source;
        for (const auto& vec : K[src]) {
          Vec w(mod->blocks[a].size(), F.zero());
          for (size_t i = 0; i < vec.size(); ++i) {
            if (vec[i].is_zero()) continue;
            auto [k, p] = mod->blocks[src][i];
            for (const auto& [xp, c2] : alg.product(alg.arrow_element(x), p)) w[mod->pos.at({k, xp})] += vec[i] * c2;
          }
          span.add(w);
        }
      }
      for (const auto& vec : K[a])
        if (span.add(vec)) {
          next.push_back(a);
          std::vector<std::tuple<int, int, Scalar>> img;
          for (size_t i = 0; i < vec.size(); ++i)
            if (!vec[i].is_zero()) {
              auto [k, p] = mod->blocks[a][i];
              if (p == alg.idempotent(cur[k])) out.minimal = false;
              img.emplace_back(k, p, vec[i]);
            }
          next_images.push_back(std::move(img));
        }
    }
    out.maps.push_back(next_images);
    prev = std::move(mod);
    cur = std::move(next);
    cur_images = std::move(next_images);
  }
  return out;
}

HappelReport verify_happel(const Algebra& alg, const Resolution& res,
                           const std::vector<SimpleResolution>& simples, int m) {
  HappelReport rep;
  rep.degree = m;
  std::map<Summand, int> ext;
  for (int j = 0; j < alg.num_vertices(); ++j) {
    const auto& sr = simples.at(j);
    if (m >= static_cast<int>(sr.terms.size())) {
      rep.mismatches.push_back(fmt::format("simple resolution of S_{} too short", j));
      continue;
    }
    for (int i : sr.terms[m]) ++ext[{i, j}];
  }
  auto got = res.term(m).multiset();
  std::set<Summand> keys;
  for (auto& [k, _] : ext) keys.insert(k);
  for (auto& [k, _] : got) keys.insert(k);
  for (const auto& k : keys) {
    int a = got.count(k) ? got[k] : 0, b = ext.count(k) ? ext[k] : 0;
    if (a != b)
      rep.mismatches.push_back(fmt::format("P_{{{},{}}}: resolution {} vs Ext {}", k.i, k.j, a, b));
  }
  return rep;
}

// ---- periodicity ----

PeriodicityReport find_twisted_iso(const Resolution& res, const AlgebraAutomorphism& phi, int p,
                                   int k) {
  const Algebra& alg = res.algebra();
  const FieldSpec& F = alg.field();
  const int N = alg.num_vertices();
  PeriodicityReport rep;
  rep.degree = p;
  rep.twist_power = k;
  if (p > res.max_degree()) {
    rep.detail = "resolution too short";
    return rep;
  }
  const ProjSum& Q = res.term(p);
  const BlockBasis& B = res.basis(p);
  size_t im_dim = B.total_dim() - res.kernel_dim(p);
  rep.dims_match = im_dim == alg.dim();

  // unknowns: coordinates of g(generator l) in e_{a_l} R e_{phi(b_l)}
  std::vector<size_t> offset(Q.size() + 1, 0);
  for (size_t l = 0; l < Q.size(); ++l)
    offset[l + 1] = offset[l] + alg.block(Q[l].i, phi.vertex(Q[l].j)).size();
  const size_t unknowns = offset.back();

  std::vector<Vec> rows;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const auto& K = res.out_solver(p, a, b).kernel();
      if (K.empty()) continue;
      const auto& target = alg.block(a, phi.vertex(b));
      for (const auto& v : K) {
        std::vector<Vec> eq(target.size(), Vec(unknowns, F.zero()));
        BimodElement el = B.from_block(v, a, b);
        for (const auto& t : el.terms()) {
          const auto& blk = alg.block(Q[t.k].i, phi.vertex(Q[t.k].j));
          for (size_t u = 0; u < blk.size(); ++u) {
            AlgebraElement val = alg.multiply(alg.product(t.p, blk[u]), phi.image(t.q));
            for (const auto& [e, c] : val) eq[alg.position_in_block(e)][offset[t.k] + u] += c * t.c;
          }
        }
        for (auto& r : eq) rows.push_back(std::move(r));
      }
    }
  Matrix sys(F, rows.size(), unknowns);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < unknowns; ++c) sys.at(r, c) = rows[r][c];
  auto sol = kernel_basis(sys);
  rep.solution_dim = sol.size();
  if (sol.empty()) {
    rep.detail = "no map vanishing on the kernel";
    return rep;
  }

  // identity coefficients per vertex
  std::vector<std::vector<size_t>> lam(N);
  for (size_t l = 0; l < Q.size(); ++l)
    if (Q[l].i == phi.vertex(Q[l].j)) {
      const auto& blk = alg.block(Q[l].i, Q[l].i);
      for (size_t u = 0; u < blk.size(); ++u)
        if (blk[u] == alg.idempotent(Q[l].i)) lam[Q[l].i].push_back(offset[l] + u);
    }
  for (int vtx = 0; vtx < N; ++vtx)
    if (lam[vtx].empty()) {
      rep.detail = fmt::format("no generator can hit e_{}", vtx);
      return rep;
    }
  // restrict to a set of solution vectors independent on the identity coordinates
  std::vector<size_t> lam_all;
  for (auto& l : lam) lam_all.insert(lam_all.end(), l.begin(), l.end());
  Matrix lm(F, lam_all.size(), sol.size());
  for (size_t r = 0; r < lam_all.size(); ++r)
    for (size_t c = 0; c < sol.size(); ++c) lm.at(r, c) = sol[c][lam_all[r]];
  auto piv = rref_rank(lm).pivots;
  auto combine = [&](const Vec& coeffs) {
    Vec g(unknowns, F.zero());
    for (size_t i = 0; i < piv.size(); ++i)
      if (!coeffs[i].is_zero())
        for (size_t u = 0; u < unknowns; ++u) g[u] += coeffs[i] * sol[piv[i]][u];
    return g;
  };
  auto hits_all = [&](const Vec& g) {
    for (int vtx = 0; vtx < N; ++vtx) {
      bool any = false;
      for (size_t u : lam[vtx]) any = any || !g[u].is_zero();
      if (!any) return false;
    }
    return true;
  };
  std::optional<Vec> chosen;
  const size_t w = piv.size();
  uint32_t q = F.characteristic();
  double space = 1;
  for (size_t i = 0; i < w && q; ++i) space *= q;
  if (q != 0 && space <= double(1 << 20)) {
    Vec c(w, F.zero());
    std::vector<uint32_t> digits(w, 0);
    for (uint64_t it = 0; it < uint64_t(space) && !chosen; ++it) {
      uint64_t x = it;
      for (size_t i = 0; i < w; ++i) {
        c[i] = F.from_int(x % q);
        x /= q;
      }
      Vec g = combine(c);
      if (hits_all(g)) chosen = g;
    }
  } else {
    // points on the moment curve; each condition excludes at most w-1 of them
    for (int t = 1; t <= 64 * N * int(w + 1) && !chosen; ++t) {
      Vec c(w, F.zero());
      Scalar pw = F.one();
      for (size_t i = 0; i < w; ++i) {
        c[i] = pw;
        pw = pw * F.from_int(t);
      }
      Vec g = combine(c);
      if (hits_all(g)) chosen = g;
    }
  }
  if (!chosen) {
    rep.detail = "no surjective solution found";
    return rep;
  }
  // explicit surjectivity check: span of all p g_l phi(q)
  Subspace image(F, alg.dim());
  for (size_t l = 0; l < Q.size(); ++l) {
    AlgebraElement gl;
    const auto& blk = alg.block(Q[l].i, phi.vertex(Q[l].j));
    for (size_t u = 0; u < blk.size(); ++u)
      if (!(*chosen)[offset[l] + u].is_zero()) gl.emplace_back(blk[u], (*chosen)[offset[l] + u]);
    std::sort(gl.begin(), gl.end(), [](auto& a, auto& b) { return a.first < b.first; });
    rep.map_values.push_back(gl);
    for (int pp = 0; pp < static_cast<int>(alg.dim()); ++pp) {
      if (alg.right(pp) != Q[l].i) continue;
      AlgebraElement left = alg.multiply(alg.basis_element(pp), gl);
      if (left.empty()) continue;
      for (int qq = 0; qq < static_cast<int>(alg.dim()); ++qq) {
        if (alg.left(qq) != Q[l].j) continue;
        AlgebraElement val = alg.multiply(left, phi.image(qq));
        if (val.empty()) continue;
        Vec vec(alg.dim(), F.zero());
        for (const auto& [e, c] : val) vec[e] = c;
        image.add(vec);
      }
    }
  }
  rep.iso_found = rep.dims_match && image.dim() == alg.dim();
  rep.detail = fmt::format("image dim {} of {}, Im d dim {}", image.dim(), alg.dim(), im_dim);
  return rep;
}

PeriodReport verify_periodicity(const Resolution& res) {
  const Algebra& alg = res.algebra();
  const Family fam = alg.quiver().family;
  const int P = resolution_period(fam);
  PeriodReport rep;
  AlgebraAutomorphism phi = standard_automorphism(alg);
  rep.automorphism_order = automorphism_order(phi);
  rep.predicted_order = predicted_order(fam, alg.quiver().s, alg.field().characteristic());
  rep.predicted_period = P * rep.predicted_order;
  rep.first = find_twisted_iso(res, phi, P, 1);
  AlgebraAutomorphism id = AlgebraAutomorphism::identity(alg);
  auto q0 = res.term(0).multiset();
  for (int p = 1; p <= res.max_degree(); ++p) {
    if (res.term(p).multiset() != q0) continue;
    rep.candidate_degrees.push_back(p);
    if (find_twisted_iso(res, id, p, 0).iso_found) {
      rep.minimal_period = p;
      break;
    }
  }
  return rep;
}

}  // namespace hh
