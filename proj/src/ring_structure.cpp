#include "hh/ring_structure.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>

#include <fmt/format.h>

namespace hh {

// ---- degrees ----

int period_core(Family family, int s) { return s / std::gcd(s, family == Family::E7 ? 9 : 15); }

int ring_period(Family family, int s, uint32_t ch) {
  const int m0 = period_core(family, s);
  const int base = resolution_period(family);
  return (ch == 2 || m0 % 2 == 0) ? base * m0 : 2 * base * m0;
}

int default_window(Family family, int s, uint32_t ch) {
  const int m0 = period_core(family, s);
  const int M = ring_period(family, s, ch);
  return (ch == 2 || m0 % 2 == 0) ? 2 * M : M + resolution_period(family);
}

bool condition_holds(const TypeCondition& c, Family family, int s, uint32_t ch, int t) {
  auto d = DegreeDecomposition::of(family, t);
  if (d.r != c.residue) return false;
  const int cval = d.m + (family == Family::E7 ? 9 : 15) * d.ell;
  if (cval % s != c.congruence % s) return false;
  const bool par_ok = (d.ell % 2 == 1) == c.ell_odd;
  const bool ch_ok = ch == c.ch;
  return c.either ? (par_ok || ch_ok) : (par_ok && ch_ok);
}

std::string GeneratorSpec::name() const {
  if (is_T) return "T";
  return fmt::format("X({})_{}", type, degree);
}

GeneratorDegrees generator_degrees(Family family, int s, uint32_t ch) {
  const PresentationData& data = presentation_data(family);
  GeneratorDegrees out;
  out.M0 = period_core(family, s);
  out.M = ring_period(family, s, ch);
  for (int t = 0; t < out.M; ++t)
    for (const auto& c : data.conditions)
      if (condition_holds(c, family, s, ch, t)) out.generators.push_back({family, c.type, t});
  if (s == 1)
    for (int i = data.first_extra; i <= data.last_extra; ++i)
      if (!(ch == 2 && i == data.char2_excluded)) out.generators.push_back({family, i, 0});
  std::stable_sort(out.generators.begin(), out.generators.end(), [](auto& a, auto& b) {
    return std::pair(a.degree, a.type) < std::pair(b.degree, b.type);
  });
  return out;
}

// ---- lifting ----

namespace {

Scalar random_scalar(const FieldSpec& F, std::mt19937_64& rng) {
  const uint32_t p = F.characteristic();
  if (p != 0) return F.from_int(static_cast<int64_t>(rng() % p));
  return F.from_int(static_cast<int64_t>(rng() % 7) - 3);
}

Vec block_coords(const Algebra& alg, int a, int b, const AlgebraElement& x) {
  Vec v(alg.block(a, b).size(), alg.field().zero());
  for (const auto& [e, c] : x) v[alg.position_in_block(e)] += c;
  return v;
}

void perturb(const Resolution& res, int m, int a, int b, Vec& x, std::mt19937_64& rng) {
  const FieldSpec& F = res.algebra().field();
  for (const auto& k : res.out_solver(m, a, b).kernel()) {
    Scalar c = random_scalar(F, rng);
    if (c.is_zero()) continue;
    for (size_t u = 0; u < x.size(); ++u) x[u] += c * k[u];
  }
}

BimoduleMap first_step(const CochainComplex& cx, int t, const Vec& f, std::mt19937_64* rng) {
  const Resolution& res = cx.resolution();
  const Algebra& alg = res.algebra();
  const ProjSum& Q = res.term(t);
  auto vals = cx.values(t, f);
  std::vector<BimodElement> images;
  for (size_t l = 0; l < Q.size(); ++l) {
    const int a = Q[l].i, b = Q[l].j;
    auto x = res.preimage(0, a, b, block_coords(alg, a, b, vals[l]));
    if (!x) throw LiftFault(fmt::format("no preimage under epsilon for summand {} of Q_{}", l, t));
    if (rng) perturb(res, 0, a, b, *x, *rng);
    images.push_back(res.basis(0).from_block(*x, a, b));
  }
  return BimoduleMap(Q, res.term(0), std::move(images));
}

BimoduleMap next_step(const CochainComplex& cx, int t, int i, const BimoduleMap& prev, std::mt19937_64* rng) {
  const Resolution& res = cx.resolution();
  const Algebra& alg = res.algebra();
  if (t + i > res.max_degree()) throw LiftFault(fmt::format("resolution too short for Q_{}", t + i));
  const ProjSum& Q = res.term(t + i);
  const BimoduleMap& d = res.d(t + i - 1);
  std::vector<BimodElement> images;
  for (size_t l = 0; l < Q.size(); ++l) {
    const int a = Q[l].i, b = Q[l].j;
    BimodElement y = prev.apply(alg, d.image(static_cast<int>(l)));
    auto x = res.preimage(i, a, b, res.basis(i - 1).to_block(y, a, b));
    if (!x) throw LiftFault(fmt::format("lift step {} of a degree {} cocycle has no solution", i, t));
    if (rng) perturb(res, i, a, b, *x, *rng);
    images.push_back(res.basis(i).from_block(*x, a, b));
  }
  return BimoduleMap(Q, res.term(i), std::move(images));
}

// cochain x o phi where phi: Q_{t+a} -> Q_a and x has degree a
Vec compose_values(const CochainComplex& cx, int a, const std::vector<AlgebraElement>& xv,
                   const BimoduleMap& phi, int target_degree) {
  const Algebra& alg = cx.algebra();
  std::vector<AlgebraElement> out(phi.source().size());
  for (size_t l = 0; l < phi.source().size(); ++l) {
    AlgebraElement acc;
    for (const Term& tm : phi.image(static_cast<int>(l)).terms()) {
      if (xv[tm.k].empty()) continue;
      AlgebraElement v = alg.multiply(alg.multiply(alg.basis_element(tm.p), xv[tm.k]), alg.basis_element(tm.q));
      add_scaled(acc, v, tm.c);
    }
    out[l] = std::move(acc);
  }
  (void)a;
  return cx.cochain(target_degree, out);
}

}  // namespace

ChainMapLift lift_cocycle(const CochainComplex& cx, int t, const Vec& f, int steps,
                          std::optional<uint64_t> perturb_seed) {
  ChainMapLift lift;
  lift.degree = t;
  std::mt19937_64 rng(perturb_seed.value_or(0));
  lift.phi.push_back(first_step(cx, t, f, perturb_seed ? &rng : nullptr));
  if (steps > 0) {
    for (int i = 1; i <= steps; ++i)
      lift.phi.push_back(next_step(cx, t, i, lift.phi.back(), perturb_seed ? &rng : nullptr));
  }
  return lift;
}

void extend_lift(const CochainComplex& cx, ChainMapLift& lift, int steps, std::optional<uint64_t> perturb_seed) {
  std::mt19937_64 rng(perturb_seed.value_or(0));
  while (lift.steps() < steps)
    lift.phi.push_back(next_step(cx, lift.degree, lift.steps() + 1, lift.phi.back(), perturb_seed ? &rng : nullptr));
}

Vec compose_with_lift(const CochainComplex& cx, int t2, const Vec& f2, const ChainMapLift& lift) {
  if (t2 > lift.steps()) throw std::out_of_range(fmt::format("lift has {} steps, need {}", lift.steps(), t2));
  return compose_values(cx, t2, cx.values(t2, f2), lift.phi[t2], lift.degree + t2);
}

Vec cup_product(const CochainComplex& cx, int t2, const Vec& f2, int t1, const Vec& f1) {
  return compose_with_lift(cx, t2, f2, lift_cocycle(cx, t1, f1, t2));
}

// ---- structure constants ----

ProductTable::ProductTable(const CochainComplex& cx, int window, unsigned threads) : cx_(&cx), window_(window) {
  if (window > cx.max_degree())
    throw std::out_of_range(fmt::format("window {} needs the resolution through degree {}", window, window));
  for (int t = 0; t < window; ++t) spaces_.push_back(std::make_unique<CohomologySpace>(cx, t));
  table_.resize(size_t(window) * window);
  for (int a = 0; a < window; ++a)
    for (int b = 0; a + b < window; ++b) table_[size_t(a) * window + b].resize(dim(a) * dim(b));

  std::vector<std::pair<int, int>> jobs;  // (degree b, class j)
  for (int b = 0; b < window; ++b)
    for (size_t j = 0; j < dim(b); ++j) jobs.emplace_back(b, static_cast<int>(j));
  // deep lifts first
  std::stable_sort(jobs.begin(), jobs.end(), [](auto& x, auto& y) { return x.first < y.first; });

  std::vector<std::vector<std::vector<AlgebraElement>>> values(window);
  for (int a = 0; a < window; ++a)
    for (const auto& cls : spaces_[a]->basis()) values[a].push_back(cx.values(a, cls.representative));

  std::atomic<size_t> next{0};
  std::vector<std::string> errors(jobs.size());
  auto worker = [&] {
    for (size_t n = next++; n < jobs.size(); n = next++) {
      const auto [b, j] = jobs[n];
      try {
        const Vec& g = spaces_[b]->basis()[j].representative;
        BimoduleMap phi = first_step(cx, b, g, nullptr);
        const size_t db = dim(b);
        for (int a = 0; a + b < window; ++a) {
          if (a > 0) phi = next_step(cx, b, a, phi, nullptr);
          for (size_t i = 0; i < dim(a); ++i) {
            Vec prod = compose_values(cx, a, values[a][i], phi, a + b);
            table_[size_t(a) * window + b][i * db + j] = spaces_[a + b]->coordinates(prod);
          }
        }
      } catch (const std::exception& e) {
        errors[n] = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (!e.empty()) throw LiftFault(e);
}

Vec ProductTable::zero(int t) const { return Vec(dim(t), cx_->algebra().field().zero()); }

Vec ProductTable::unit() const {
  const Algebra& alg = cx_->algebra();
  const ProjSum& Q0 = cx_->resolution().term(0);
  std::vector<AlgebraElement> vals;
  for (size_t k = 0; k < Q0.size(); ++k) vals.push_back(alg.basis_element(alg.idempotent(Q0[k].i)));
  return coordinates(0, cx_->cochain(0, vals));
}

Vec ProductTable::multiply(int a, const Vec& u, int b, const Vec& v) const {
  if (a + b >= window_) throw std::out_of_range(fmt::format("degree {} outside the window {}", a + b, window_));
  Vec out = zero(a + b);
  const auto& tab = table_[size_t(a) * window_ + b];
  const size_t db = dim(b);
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      Scalar c = u[i] * v[j];
      const Vec& e = tab[i * db + j];
      for (size_t k = 0; k < out.size(); ++k) out[k] += c * e[k];
    }
  }
  return out;
}

// ---- properties on basis classes ----

namespace {

Vec basis_vec(const ProductTable& tab, int t, size_t i) {
  Vec v = tab.zero(t);
  v[i] = tab.complex().algebra().field().one();
  return v;
}

}  // namespace

PropertyReport check_unit_law(const ProductTable& tab) {
  PropertyReport rep;
  const Vec one = tab.unit();
  for (int t = 0; t < tab.window(); ++t)
    for (size_t i = 0; i < tab.dim(t); ++i) {
      Vec x = basis_vec(tab, t, i);
      ++rep.checks;
      if (tab.multiply(0, one, t, x) != x) rep.failures.push_back(fmt::format("1 . e{}@{} != e{}@{}", i, t, i, t));
      if (tab.multiply(t, x, 0, one) != x) rep.failures.push_back(fmt::format("e{}@{} . 1 != e{}@{}", i, t, i, t));
    }
  return rep;
}

PropertyReport check_graded_commutativity(const ProductTable& tab) {
  PropertyReport rep;
  const FieldSpec& F = tab.complex().algebra().field();
  for (int a = 0; a < tab.window(); ++a)
    for (int b = a; a + b < tab.window(); ++b)
      for (size_t i = 0; i < tab.dim(a); ++i)
        for (size_t j = 0; j < tab.dim(b); ++j) {
          Vec x = basis_vec(tab, a, i), y = basis_vec(tab, b, j);
          Vec xy = tab.multiply(a, x, b, y), yx = tab.multiply(b, y, a, x);
          if ((a * b) % 2 == 1)
            for (auto& c : yx) c = F.zero() - c;
          ++rep.checks;
          if (xy != yx) rep.failures.push_back(fmt::format("e{}@{} and e{}@{} do not commute", i, a, j, b));
        }
  return rep;
}

PropertyReport check_associativity(const ProductTable& tab, size_t max_triples) {
  PropertyReport rep;
  std::vector<std::pair<int, size_t>> classes;
  for (int t = 0; t < tab.window(); ++t)
    for (size_t i = 0; i < tab.dim(t); ++i) classes.emplace_back(t, i);
  std::mt19937_64 rng(12345);
  std::vector<std::array<size_t, 3>> triples;
  for (size_t x = 0; x < classes.size(); ++x)
    for (size_t y = 0; y < classes.size(); ++y)
      for (size_t z = 0; z < classes.size(); ++z)
        if (classes[x].first + classes[y].first + classes[z].first < tab.window()) triples.push_back({x, y, z});
  std::shuffle(triples.begin(), triples.end(), rng);
  if (triples.size() > max_triples) triples.resize(max_triples);
  for (const auto& [x, y, z] : triples) {
    auto [a, i] = classes[x];
    auto [b, j] = classes[y];
    auto [c, k] = classes[z];
    Vec u = basis_vec(tab, a, i), v = basis_vec(tab, b, j), w = basis_vec(tab, c, k);
    Vec left = tab.multiply(a + b, tab.multiply(a, u, b, v), c, w);
    Vec right = tab.multiply(a, u, b + c, tab.multiply(b, v, c, w));
    ++rep.checks;
    if (left != right)
      rep.failures.push_back(fmt::format("(e{}@{} e{}@{}) e{}@{} != e{}@{} (e{}@{} e{}@{})", i, a, j, b, k, c, i, a, j,
                                         b, k, c));
  }
  return rep;
}

// ---- presentation ----

namespace {

struct Instance {
  GeneratorSpec spec;
  Vec coords;
  bool defined = false;
  std::string how;
};

struct Selection {
  std::vector<Instance> inst;  // sorted by degree; T last
  std::vector<size_t> ambiguous_counts;
  std::vector<std::string> notes;
  int unit = -1;
  int T = -1;
};

struct CellEquation {
  int left, right, target;
  bool uses_T;
  Scalar mu, coef;
  std::string text;
};

struct Evaluation {
  std::vector<CellReport> cells;
  size_t mismatches = 0;
  std::vector<CellEquation> equations;
};

class Presenter {
 public:
  Presenter(const ProductTable& tab, const PresentationData& data)
      : tab_(tab),
        alg_(tab.complex().algebra()),
        F_(alg_.field()),
        family_(alg_.quiver().family),
        s_(alg_.quiver().s),
        ch_(F_.characteristic()),
        data_(data),
        degrees_(generator_degrees(family_, s_, ch_)),
        M_(degrees_.M),
        W_(tab.window()) {}

  PresentationReport run();

 private:
  const ProductTable& tab_;
  const Algebra& alg_;
  const FieldSpec& F_;
  Family family_;
  int s_;
  uint32_t ch_;
  const PresentationData& data_;
  GeneratorDegrees degrees_;
  int M_, W_;
  size_t tried_ = 0;
  std::optional<Vec> T_coords_;
  std::map<std::pair<int, int>, PublishedGenerator> published_;

  Vec mul(int a, const Vec& u, int b, const Vec& v) const { return tab_.multiply(a, u, b, v); }
  Scalar coefficient(const ProductCell& c) const {
    if (c.only_char != 0 && c.only_char != ch_) return F_.zero();
    return F_.from_int(int64_t(c.per_s) * s_ + c.constant);
  }
  uint32_t digit_base() const { return ch_ != 0 ? ch_ : 3; }
  Scalar digit(uint32_t d) const {
    if (ch_ != 0) return F_.from_int(d);
    return F_.from_int(d == 2 ? -1 : int64_t(d));
  }

  Vec T_coords();
  const PublishedGenerator* published(int type, int t);
  Selection select(const std::vector<size_t>& choices);
  void choose_degree_zero(Selection& sel);
  std::optional<int> find(const Selection& sel, int type, int degree) const;
  std::vector<int> of_type(const Selection& sel, int type, DegreeGate gate) const;
  // target X~(k) at degree d
  std::optional<std::pair<Vec, bool>> target(const Selection& sel, int k, int d) const;
  Evaluation evaluate(const Selection& sel) const;
  NormalizationResult normalize(const Selection& sel, const Evaluation& ev) const;
  std::vector<int> generation(const Selection& sel) const;
  size_t score(const Selection& sel) const;
};

Vec Presenter::T_coords() {
  if (!T_coords_) {
    const Resolution& res = tab_.complex().resolution();
    auto rep = find_twisted_iso(res, AlgebraAutomorphism::identity(alg_), M_, 0);
    if (!rep.iso_found) throw std::runtime_error(fmt::format("no periodicity isomorphism in degree {}", M_));
    T_coords_ = tab_.coordinates(M_, tab_.complex().cochain(M_, rep.map_values));
  }
  return *T_coords_;
}

const PublishedGenerator* Presenter::published(int type, int t) {
  auto key = std::pair(type, t);
  auto it = published_.find(key);
  if (it == published_.end()) it = published_.emplace(key, published_generator(tab_.complex(), type, t)).first;
  return &it->second;
}

std::optional<int> Presenter::find(const Selection& sel, int type, int degree) const {
  for (size_t n = 0; n < sel.inst.size(); ++n)
    if (sel.inst[n].spec.type == type && sel.inst[n].spec.degree == degree && !sel.inst[n].spec.is_T)
      return static_cast<int>(n);
  return std::nullopt;
}

std::vector<int> Presenter::of_type(const Selection& sel, int type, DegreeGate gate) const {
  std::vector<int> out;
  for (size_t n = 0; n < sel.inst.size(); ++n) {
    const auto& sp = sel.inst[n].spec;
    if (sp.type != type) continue;
    if (type == 1 && gate == DegreeGate::Zero && sp.degree != 0) continue;
    if (type == 1 && gate == DegreeGate::Positive && sp.degree == 0) continue;
    out.push_back(static_cast<int>(n));
  }
  return out;
}

std::optional<std::pair<Vec, bool>> Presenter::target(const Selection& sel, int k, int d) const {
  if (d < M_) {
    auto n = find(sel, k, d);
    if (!n || !sel.inst[*n].defined) return std::nullopt;
    return std::pair(sel.inst[*n].coords, false);
  }
  auto n = find(sel, k, d - M_);
  if (!n || !sel.inst[*n].defined || d >= W_) return std::nullopt;
  return std::pair(mul(M_, sel.inst[sel.T].coords, d - M_, sel.inst[*n].coords), true);
}

Selection Presenter::select(const std::vector<size_t>& choices) {
  Selection sel;
  for (const auto& g : degrees_.generators) sel.inst.push_back({g, {}, false, ""});
  if (M_ < W_) {
    GeneratorSpec t{family_, 1, M_};
    t.is_T = true;
    sel.inst.push_back({t, {}, false, ""});
    sel.T = static_cast<int>(sel.inst.size()) - 1;
  }
  for (size_t n = 0; n < sel.inst.size(); ++n) {
    auto& I = sel.inst[n];
    if (I.spec.type == 1 && I.spec.degree == 0) {
      I.coords = tab_.unit();
      I.defined = true;
      I.how = "unit";
      sel.unit = static_cast<int>(n);
    }
  }
  if (sel.T >= 0) {
    sel.inst[sel.T].coords = T_coords();
    sel.inst[sel.T].defined = true;
    sel.inst[sel.T].how = "periodicity isomorphism";
  }

  size_t slot = 0;
  for (size_t n = 0; n < sel.inst.size(); ++n) {
    auto& I = sel.inst[n];
    const int t = I.spec.degree;
    if (I.defined || t == 0 || t >= W_) continue;
    // composite lemma
    for (const auto& cl : data_.composites) {
      if (cl.product != I.spec.type || I.defined) continue;
      for (int x : of_type(sel, cl.left, DegreeGate::Any))
        for (int y : of_type(sel, cl.right, DegreeGate::Any)) {
          const auto &A = sel.inst[x], &B = sel.inst[y];
          if (I.defined || !A.defined || !B.defined || A.spec.degree == 0 || B.spec.degree == 0) continue;
          if (A.spec.degree + B.spec.degree != t) continue;
          Vec p = mul(A.spec.degree, A.coords, B.spec.degree, B.coords);
          if (is_zero(p)) continue;
          I.coords = p;
          I.defined = true;
          I.how = fmt::format("{} {}", A.spec.name(), B.spec.name());
        }
    }
    if (I.defined) continue;
    // a table cell with known positive-degree factors
    for (const auto& c : data_.cells) {
      if (I.defined) break;
      if (c.target != I.spec.type || c.left == 1 || c.right == 1) continue;
      Scalar coef = coefficient(c);
      if (coef.is_zero()) continue;
      for (int x : of_type(sel, c.left, DegreeGate::Any))
        for (int y : of_type(sel, c.right, DegreeGate::Any)) {
          const auto &A = sel.inst[x], &B = sel.inst[y];
          if (I.defined || !A.defined || !B.defined || A.spec.degree == 0 || B.spec.degree == 0) continue;
          if (A.spec.degree + B.spec.degree != t) continue;
          Vec p = mul(A.spec.degree, A.coords, B.spec.degree, B.coords);
          if (is_zero(p)) continue;
          Scalar inv = coef.inverse();
          for (auto& v : p) v = v * inv;
          I.coords = p;
          I.defined = true;
          I.how = fmt::format("{} {} / {}", A.spec.name(), B.spec.name(), coef.str());
        }
    }
    if (I.defined) continue;
    // free: a class outside the decomposables and the classes already fixed in this degree
    Subspace dec(F_, tab_.dim(t));
    for (const auto& J : sel.inst)
      if (J.defined && J.spec.degree == t && !J.spec.is_T) dec.add(J.coords);
    for (const auto& J : sel.inst) {
      const int d = J.spec.degree;
      if (!J.defined || d == 0 || d >= t) continue;
      for (size_t i = 0; i < tab_.dim(t - d); ++i) {
        Vec e = tab_.zero(t - d);
        e[i] = F_.one();
        dec.add(mul(d, J.coords, t - d, e));
      }
    }
    std::optional<Vec> base;
    const PublishedGenerator* pg = published(I.spec.type, t);
    if (pg->accepted && tab_.space(t).is_cocycle(pg->cochain)) {
      Vec c = tab_.coordinates(t, pg->cochain);
      if (!dec.contains(c)) {
        base = c;
        I.spec.source = GeneratorSpec::Source::Published;
      }
    }
    for (size_t i = 0; i < tab_.dim(t) && !base; ++i) {
      Vec e = tab_.zero(t);
      e[i] = F_.one();
      if (!dec.contains(e)) base = e;
    }
    if (!base) {
      sel.notes.push_back(fmt::format("{}: HH^{} is spanned by decomposables", I.spec.name(), t));
      I.coords = tab_.zero(t);
      I.defined = true;
      I.how = "none";
      continue;
    }
    // candidates base + sum digit_j dec_j
    const size_t k = dec.dim();
    size_t count = 1;
    for (size_t j = 0; j < k && count < 729; ++j) count *= digit_base();
    count = std::min<size_t>(count, 729);
    const size_t choice = slot < choices.size() ? choices[slot] : 0;
    sel.ambiguous_counts.push_back(count);
    ++slot;
    Vec cand = *base;
    size_t rest = choice;
    for (size_t j = 0; j < k; ++j) {
      Scalar dg = digit(static_cast<uint32_t>(rest % digit_base()));
      rest /= digit_base();
      if (dg.is_zero()) continue;
      for (size_t u = 0; u < cand.size(); ++u) cand[u] += dg * dec.basis()[j][u];
    }
    I.coords = cand;
    I.defined = true;
    I.how = choice == 0 ? (I.spec.source == GeneratorSpec::Source::Published ? "published matrix" : "cohomology basis")
                        : fmt::format("cohomology basis, candidate {}", choice);
  }
  choose_degree_zero(sel);
  return sel;
}

// Degree-0 generators besides the unit (s = 1): the classes x whose products with
// every positive-degree generator g follow the table, i.e. x g = 0 or x g in K X~(k).
void Presenter::choose_degree_zero(Selection& sel) {
  const size_t d0 = tab_.dim(0);
  Subspace chosen(F_, d0);
  chosen.add(sel.inst[sel.unit].coords);
  for (size_t n = 0; n < sel.inst.size(); ++n) {
    auto& I = sel.inst[n];
    if (I.defined || I.spec.degree != 0) continue;
    struct Want {
      int g;
      Vec target;  // empty for zero
    };
    std::vector<Want> wants;
    std::vector<Vec> rows;  // linear conditions on x
    for (size_t m = 0; m < sel.inst.size(); ++m) {
      const auto& G = sel.inst[m];
      if (!G.defined || m == n || m == size_t(sel.unit)) continue;
      const int d = G.spec.degree;
      if (d >= W_) continue;
      const ProductCell* c = data_.find(I.spec.type, G.spec.type, false, d > 0);
      if (!c) continue;
      Scalar coef = coefficient(*c);
      Want w{static_cast<int>(m), {}};
      if (!coef.is_zero() && c->target != 0) {
        auto tg = target(sel, c->target, d);
        if (tg && !is_zero(tg->first)) w.target = tg->first;
      }
      // L(x) = x . g, columns indexed by the basis of HH^0
      std::vector<Vec> cols;
      for (size_t i = 0; i < d0; ++i) {
        Vec e = tab_.zero(0);
        e[i] = F_.one();
        cols.push_back(mul(0, e, d, G.coords));
      }
      // project out the target direction
      Subspace quotient(F_, tab_.dim(d));
      if (!w.target.empty()) quotient.add(w.target);
      std::vector<Vec> reduced;
      for (auto& cv : cols) reduced.push_back(quotient.reduce(cv));
      for (size_t r = 0; r < tab_.dim(d); ++r) {
        Vec row(d0, F_.zero());
        for (size_t i = 0; i < d0; ++i) row[i] = reduced[i][r];
        if (!is_zero(row)) rows.push_back(row);
      }
      wants.push_back(std::move(w));
    }
    Matrix sys(F_, rows.size(), d0);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < d0; ++c) sys.at(r, c) = rows[r][c];
    auto V = rows.empty() ? std::vector<Vec>{} : kernel_basis(sys);
    if (rows.empty())
      for (size_t i = 0; i < d0; ++i) {
        Vec e = tab_.zero(0);
        e[i] = F_.one();
        V.push_back(e);
      }
    auto acceptable = [&](const Vec& x) {
      if (chosen.contains(x)) return false;
      for (const auto& w : wants)
        if (!w.target.empty() && is_zero(mul(0, x, sel.inst[w.g].spec.degree, sel.inst[w.g].coords))) return false;
      const ProductCell* self = data_.find(I.spec.type, I.spec.type, false, false);
      if (self && (coefficient(*self).is_zero() || self->target == 0) && !is_zero(mul(0, x, 0, x))) return false;
      return true;
    };
    std::optional<Vec> pick;
    std::mt19937_64 rng(977 + n);
    for (size_t j = 0; j < V.size() && !pick; ++j)
      if (acceptable(V[j])) pick = V[j];
    for (int tries = 0; tries < 4000 && !pick && !V.empty(); ++tries) {
      Vec x = tab_.zero(0);
      for (const auto& v : V) {
        Scalar c = random_scalar(F_, rng);
        for (size_t u = 0; u < d0; ++u) x[u] += c * v[u];
      }
      if (acceptable(x)) pick = x;
    }
    if (!pick) {
      sel.notes.push_back(fmt::format("{}: no degree-0 class satisfies its product rows", I.spec.name()));
      for (size_t i = 0; i < d0 && !pick; ++i) {
        Vec e = tab_.zero(0);
        e[i] = F_.one();
        if (!chosen.contains(e)) pick = e;
      }
    }
    if (!pick) pick = tab_.zero(0);
    chosen.add(*pick);
    I.coords = *pick;
    I.defined = true;
    I.how = "degree-0 product rows";
  }
}

Evaluation Presenter::evaluate(const Selection& sel) const {
  Evaluation ev;
  for (const auto& c : data_.cells) {
    if (c.left == 1 && c.gate == DegreeGate::Zero) continue;  // unit rows: checked by the unit law
    auto L = of_type(sel, c.left, c.gate);
    auto R = of_type(sel, c.right, DegreeGate::Any);
    const Scalar coef = coefficient(c);
    std::string expected =
        (coef.is_zero() || c.target == 0)
            ? "0"
            : fmt::format("{} X~({})", coef.str(), c.target) + (c.label.empty() ? "" : " (" + c.label + ")");
    if (L.empty() || R.empty()) {
      CellReport r;
      r.left = c.left;
      r.right = c.right;
      r.expected = expected;
      r.status = CellReport::Status::CharExcluded;
      r.detail = fmt::format("no instance of X({})", L.empty() ? c.left : c.right);
      ev.cells.push_back(r);
      continue;
    }
    bool any = false;
    for (int x : L)
      for (int y : R) {
        if (c.left == c.right && y < x) continue;
        const auto &A = sel.inst[x], &B = sel.inst[y];
        const int da = A.spec.degree, db = B.spec.degree, d = da + db;
        if (d >= W_) continue;
        any = true;
        CellReport r;
        r.left = c.left;
        r.right = c.right;
        r.left_degree = da;
        r.right_degree = db;
        r.expected = expected;
        Vec p = mul(da, A.coords, db, B.coords);
        if (coef.is_zero() || c.target == 0) {
          r.status = is_zero(p) ? CellReport::Status::Match : CellReport::Status::Mismatch;
          if (!is_zero(p)) r.detail = "product is nonzero";
        } else {
          auto tg = target(sel, c.target, d);
          if (!tg) {
            r.status = is_zero(p) ? CellReport::Status::Match : CellReport::Status::Mismatch;
            r.detail = fmt::format("X({}) has no instance for degree {}; product {}", c.target, d,
                                   is_zero(p) ? "is zero" : "is nonzero");
          } else if (is_zero(tg->first)) {
            r.status = CellReport::Status::Mismatch;
            r.detail = "target class vanishes";
          } else {
            size_t lead = 0;
            while (tg->first[lead].is_zero()) ++lead;
            Scalar mu = p[lead] / tg->first[lead];
            bool prop = true;
            for (size_t u = 0; u < p.size(); ++u) prop = prop && p[u] == mu * tg->first[u];
            if (!prop || mu.is_zero()) {
              r.status = CellReport::Status::Mismatch;
              r.detail = is_zero(p) ? "product is zero" : "product is not a multiple of the target";
            } else {
              r.status = CellReport::Status::Match;
              r.detail = fmt::format("product = {} X~({})", mu.str(), c.target);
              const int tn = d < M_ ? *find(sel, c.target, d) : *find(sel, c.target, d - M_);
              ev.equations.push_back({x, y, tn, tg->second, mu, coef,
                                      fmt::format("{} {} = {} X~({}) in degree {}", A.spec.name(), B.spec.name(),
                                                  coef.str(), c.target, d)});
            }
          }
        }
        if (r.status == CellReport::Status::Mismatch) ++ev.mismatches;
        ev.cells.push_back(r);
      }
    if (!any) {
      CellReport r;
      r.left = c.left;
      r.right = c.right;
      r.expected = expected;
      r.status = CellReport::Status::OutOfWindow;
      ev.cells.push_back(r);
    }
  }
  return ev;
}

std::optional<Scalar> square_root(const FieldSpec& F, const Scalar& v) {
  if (F.characteristic() != 0) {
    for (uint32_t x = 1; x < F.characteristic(); ++x) {
      Scalar c = F.from_int(x);
      if (c * c == v) return c;
    }
    return std::nullopt;
  }
  const mpq_class& q = v.rational();
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den(), rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return F.parse(rn.get_str() + "/" + rd.get_str());
}

NormalizationResult Presenter::normalize(const Selection& sel, const Evaluation& ev) const {
  NormalizationResult out;
  const size_t n = sel.inst.size();
  std::vector<std::optional<Scalar>> lam(n);
  lam[sel.unit] = F_.one();
  // exponent of every variable: +1 per left factor, -1 per right-hand occurrence
  auto exponents = [&](const CellEquation& e) {
    std::map<int, int> ex;
    ex[e.left] += 1;
    ex[e.right] += 1;
    ex[e.target] -= 1;
    if (e.uses_T) ex[sel.T] -= 1;
    return ex;
  };
  // lambda-value of the equation with unknowns removed: known_left * mu / (coef * known_right)
  auto residual = [&](const CellEquation& e, const std::map<int, int>& ex) {
    Scalar r = e.mu / e.coef;
    for (auto [v, k] : ex)
      if (lam[v] && k != 0) {
        Scalar p = F_.one();
        for (int i = 0; i < std::abs(k); ++i) p = p * *lam[v];
        r = k > 0 ? r * p : r / p;
      }
    return r;
  };
  std::vector<bool> solved(ev.equations.size(), false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t q = 0; q < ev.equations.size(); ++q) {
      if (solved[q]) continue;
      auto ex = exponents(ev.equations[q]);
      std::vector<std::pair<int, int>> unknown;
      for (auto [v, k] : ex)
        if (k != 0 && !lam[v]) unknown.emplace_back(v, k);
      if (unknown.empty()) {
        solved[q] = true;
        continue;
      }
      if (unknown.size() != 1 || std::abs(unknown[0].second) > 2) continue;
      // residual * lam^k = 1
      const auto [v, k] = unknown[0];
      Scalar r = residual(ev.equations[q], ex);
      Scalar target = k > 0 ? r.inverse() : r;  // lam^|k| = target
      if (std::abs(k) == 1) {
        lam[v] = target;
      } else {
        auto root = square_root(F_, target);
        if (!root) continue;
        lam[v] = *root;
      }
      solved[q] = true;
      progress = true;
    }
    if (!progress) {
      // fix the lowest free variable of an open equation
      int best = -1;
      for (size_t q = 0; q < ev.equations.size(); ++q) {
        if (solved[q]) continue;
        for (auto [v, k] : exponents(ev.equations[q]))
          if (k != 0 && !lam[v] && (best < 0 || sel.inst[v].spec.degree < sel.inst[best].spec.degree)) best = v;
      }
      if (best >= 0) {
        lam[best] = F_.one();
        progress = true;
      }
    }
  }
  for (const auto& e : ev.equations) {
    auto ex = exponents(e);
    Scalar r = residual(e, ex);
    bool complete = true;
    for (auto [v, k] : ex) complete = complete && (k == 0 || lam[v].has_value());
    if (!complete || !r.is_one()) {
      out.consistent = false;
      out.violation = fmt::format("{}: scaled coefficient off by {}", e.text, complete ? r.str() : "unsolved");
      break;
    }
  }
  for (size_t v = 0; v < n; ++v)
    if (lam[v]) out.scalars.emplace_back(sel.inst[v].spec.name(), lam[v]->str());
  return out;
}

std::vector<int> Presenter::generation(const Selection& sel) const {
  std::vector<int> fails;
  std::vector<Subspace> S;
  std::vector<int> zero_gens, pos_gens;
  for (size_t n = 0; n < sel.inst.size(); ++n)
    (sel.inst[n].spec.degree == 0 ? zero_gens : pos_gens).push_back(static_cast<int>(n));
  auto close_under_zero = [&](Subspace& sp, int t) {
    bool grew = true;
    while (grew) {
      grew = false;
      auto basis = sp.basis();
      for (int z : zero_gens)
        for (const auto& b : basis)
          if (sp.add(mul(0, sel.inst[z].coords, t, b))) grew = true;
    }
  };
  for (int t = 0; t < W_; ++t) {
    Subspace sp(F_, tab_.dim(t));
    for (const auto& I : sel.inst)
      if (I.spec.degree == t) sp.add(I.coords);
    for (int g : pos_gens) {
      const int d = sel.inst[g].spec.degree;
      if (d == 0 || d > t) continue;
      for (const auto& b : S[t - d].basis()) sp.add(mul(d, sel.inst[g].coords, t - d, b));
    }
    close_under_zero(sp, t);
    if (sp.dim() != tab_.dim(t)) fails.push_back(t);
    S.push_back(std::move(sp));
  }
  return fails;
}

size_t Presenter::score(const Selection& sel) const {
  Evaluation ev = evaluate(sel);
  size_t sc = 4 * ev.mismatches + 2 * generation(sel).size();
  if (!normalize(sel, ev).consistent) sc += 1;
  return sc;
}

PresentationReport Presenter::run() {
  PresentationReport rep;
  rep.family = family_;
  rep.s = s_;
  rep.characteristic = ch_;
  rep.M = M_;
  rep.window = W_;

  // greedy search over the ambiguous free slots, one slot at a time
  std::vector<size_t> choices;
  Selection best = select(choices);
  ++tried_;
  size_t best_score = score(best);
  for (size_t slot = 0; slot < best.ambiguous_counts.size() && best_score > 0; ++slot) {
    const size_t count = best.ambiguous_counts[slot];
    size_t pick = slot < choices.size() ? choices[slot] : 0;
    for (size_t c = 1; c < count && best_score > 0; ++c) {
      auto trial = choices;
      trial.resize(std::max(trial.size(), slot + 1), 0);
      trial[slot] = c;
      Selection sel = select(trial);
      ++tried_;
      size_t sc = score(sel);
      if (sc < best_score) {
        best_score = sc;
        best = std::move(sel);
        pick = c;
      }
    }
    choices.resize(std::max(choices.size(), slot + 1), 0);
    choices[slot] = pick;
  }
  rep.candidates_tried = tried_;

  Evaluation ev = evaluate(best);
  rep.cells = ev.cells;
  rep.cell_mismatches = ev.mismatches;
  rep.normalization = normalize(best, ev);
  rep.generation_failures = generation(best);
  rep.generation_ok = rep.generation_failures.empty();
  rep.generator_notes = best.notes;
  for (const auto& I : best.inst) {
    rep.generators.push_back(I.spec);
    rep.generator_notes.push_back(fmt::format("{}: {}", I.spec.name(), I.how));
  }
  for (const auto& [key, pg] : published_) {
    std::string name = fmt::format("X({})_{}", key.first, key.second);
    if (pg.accepted)
      rep.accepted_published.push_back(name);
    else
      rep.rejected_published.push_back(name + ": " + pg.diagnostics);
  }

  // commutativity on generator pairs
  for (size_t x = 0; x < best.inst.size(); ++x)
    for (size_t y = x + 1; y < best.inst.size(); ++y) {
      const auto &A = best.inst[x], &B = best.inst[y];
      const int a = A.spec.degree, b = B.spec.degree;
      if (a + b >= W_) continue;
      Vec xy = mul(a, A.coords, b, B.coords), yx = mul(b, B.coords, a, A.coords);
      if ((a * b) % 2 == 1)
        for (auto& c : yx) c = F_.zero() - c;
      ++rep.commutativity_pairs;
      if (xy != yx) rep.commutativity_failures.push_back(fmt::format("{} {}", A.spec.name(), B.spec.name()));
    }
  // associativity on generator triples
  for (size_t x = 0; x < best.inst.size(); ++x)
    for (size_t y = x; y < best.inst.size(); ++y)
      for (size_t z = y; z < best.inst.size(); ++z) {
        const auto &A = best.inst[x], &B = best.inst[y], &C = best.inst[z];
        const int a = A.spec.degree, b = B.spec.degree, c = C.spec.degree;
        if (a + b + c >= W_ || a == 0 || b == 0 || c == 0) continue;
        Vec l = mul(a + b, mul(a, A.coords, b, B.coords), c, C.coords);
        Vec r = mul(a, A.coords, b + c, mul(b, B.coords, c, C.coords));
        ++rep.associativity_triples;
        if (l != r)
          rep.associativity_failures.push_back(fmt::format("{} {} {}", A.spec.name(), B.spec.name(), C.spec.name()));
      }
  // composite lemmas: every instance of the product type is a nonzero product of the factors
  for (const auto& cl : data_.composites) {
    for (int x : of_type(best, cl.left, DegreeGate::Any))
      for (int y : of_type(best, cl.right, DegreeGate::Any)) {
        const auto &A = best.inst[x], &B = best.inst[y];
        const int d = A.spec.degree + B.spec.degree;
        if (A.spec.degree == 0 || B.spec.degree == 0 || d >= M_ || d >= W_) continue;
        auto k = find(best, cl.product, d);
        Vec p = mul(A.spec.degree, A.coords, B.spec.degree, B.coords);
        if (!k)
          rep.composite_failures.push_back(
              fmt::format("{} {}: no X({}) in degree {}", A.spec.name(), B.spec.name(), cl.product, d));
        else if (is_zero(p))
          rep.composite_failures.push_back(fmt::format("{} {} = 0", A.spec.name(), B.spec.name()));
      }
    for (int k : of_type(best, cl.product, DegreeGate::Any)) {
      const auto& K = best.inst[k];
      bool reached = false;
      for (int x : of_type(best, cl.left, DegreeGate::Any)) {
        auto y = find(best, cl.right, K.spec.degree - best.inst[x].spec.degree);
        reached = reached || (y && best.inst[x].spec.degree > 0);
      }
      if (!reached)
        rep.composite_failures.push_back(fmt::format("{} is not a product X({}) X({})", K.spec.name(), cl.left,
                                                     cl.right));
    }
  }
  return rep;
}

}  // namespace

PresentationReport verify_presentation(const ProductTable& table, const PresentationData& data) {
  return Presenter(table, data).run();
}

PresentationReport verify_presentation(const ProductTable& table) {
  return verify_presentation(table, presentation_data(table.complex().algebra().quiver().family));
}

PresentationReport verify_presentation(const CochainComplex& cx, int window) {
  ProductTable table(cx, window);
  return verify_presentation(table);
}

}  // namespace hh
