// One line per acceptance criterion. Exit status is nonzero when any criterion fails.

#include <filesystem>
#include <random>
#include <set>

#include <fmt/format.h>

#include "hh/cache.hpp"
#include "hh/ring_structure.hpp"

using namespace hh;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(std::string note) {
    ok = false;
    notes.push_back(std::move(note));
  }
};

struct Built {
  Algebra alg;
  std::unique_ptr<Resolution> res;
  std::unique_ptr<CochainComplex> cx;
  Built(Family f, int s, uint32_t p, int D, bool cochains = true) : alg(Algebra::build(f, s, FieldSpec(p))) {
    res = std::make_unique<Resolution>(build_resolution(alg, D));
    if (cochains) cx = std::make_unique<CochainComplex>(*res);
  }
};

std::string tag(Family f, int s, uint32_t p) { return fmt::format("{} s={} char {}", family_name(f), s, p); }

// hh against the additive theorem; a reading passes when every degree matches
void additive(Outcome& out, Family fam, uint32_t p, int max_t) {
  Built b(fam, 1, p, max_t + 1);
  std::vector<std::string> misses;
  bool any = false;
  for (ParityReading rd : {ParityReading::EllPlusM, ParityReading::Ell}) {
    std::vector<std::string> bad;
    for (int t = 0; t <= max_t; ++t) {
      const int want = expected_dims(fam, 1, p, t, rd).hh;
      const size_t have = b.cx->hh_dim(t);
      if (int(have) != want) bad.push_back(fmt::format("t={} computed {} stated {}", t, have, want));
    }
    if (bad.empty()) {
      any = true;
      break;
    }
    if (misses.empty()) misses = bad;  // report the preferred reading
  }
  if (!any) out.fail(fmt::format("{}: {}", tag(fam, 1, p), fmt::join(misses, "; ")));
}

Outcome criterion1() {
  Outcome o;
  additive(o, Family::E7, 2, 34);
  additive(o, Family::E7, 3, 40);
  additive(o, Family::E7, 0, 40);
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int s : {2, 3})
    for (uint32_t p : {0u, 2u, 3u}) {
      Built b(Family::E7, s, p, 35);
      std::vector<std::string> readings;
      for (ParityReading rd : {ParityReading::EllPlusM, ParityReading::Ell}) {
        bool all = true;
        for (int t = 0; t <= 34; ++t) {
          const ExpectedDims e = expected_dims(Family::E7, s, p, t, rd);
          all = all && int(b.cx->hom_dim(t)) == e.hom && int(b.cx->coboundary_rank(t)) == e.im;
        }
        if (all) readings.push_back(parity_reading_name(rd));
      }
      if (readings.empty())
        o.fail(tag(Family::E7, s, p) + ": no reading matches hom and im");
      else
        o.notes.push_back(fmt::format("s={} char {}: {}", s, p, fmt::join(readings, "/")));
    }
  return o;
}

Outcome criterion3() {
  Outcome o;
  additive(o, Family::E8, 2, 29);
  additive(o, Family::E8, 3, 35);
  additive(o, Family::E8, 5, 35);
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (auto [fam, D] : std::vector<std::pair<Family, int>>{{Family::E7, 16}, {Family::E8, 28}})
    for (int s : {1, 2})
      for (uint32_t p : {0u, 2u, 3u}) {
        Built b(fam, s, p, D, false);
        std::vector<SimpleResolution> simples;
        for (int v = 0; v < b.alg.num_vertices(); ++v) simples.push_back(simple_resolution(b.alg, v, D + 1));
        for (int m = 0; m <= D; ++m) {
          if (b.res->term(m).multiset() != predicted_terms(fam, s, m).multiset())
            o.fail(fmt::format("{} m={}: terms differ from the formulas", tag(fam, s, p), m));
          const HappelReport h = verify_happel(b.alg, *b.res, simples, m);
          if (!h.ok()) o.fail(fmt::format("{} m={}: {}", tag(fam, s, p), m, h.mismatches.front()));
        }
      }
  return o;
}

Outcome criterion5() {
  Outcome o;
  size_t degrees = 0;
  for (Family fam : {Family::E7, Family::E8})
    for (int s : {1, 2, 3})
      for (uint32_t p : {0u, 2u, 3u, 5u}) {
        const int D = fam == Family::E7 ? 35 : 59;
        Built b(fam, s, p, D, false);
        const ResolutionCheck c = check_resolution(*b.res);
        degrees += D;
        if (!c.ok())
          o.fail(fmt::format("{}: eps d0 {}, dd {}, inexact {}, non-minimal {}", tag(fam, s, p),
                             c.epsilon_d0_zero ? "ok" : "nonzero", c.dd_nonzero.size(), c.inexact.size(),
                             c.non_minimal.size()));
      }
  o.notes.push_back(fmt::format("{} differentials", degrees));
  return o;
}

Outcome criterion6() {
  Outcome o;
  size_t checked = 0;
  for (int s : {1, 2})
    for (const auto& c : syzygy_claims()) {
      const Algebra alg = Algebra::build(c.family, s, FieldSpec(2));
      const int n = alg.quiver().block_size, N = alg.num_vertices();
      for (int r = 0; r < s; ++r) {
        const int v = n * r + c.local_vertex;
        const int want = ((n * (r + c.block_shift) + c.local_target) % N + N) % N;
        const SimpleResolution sr = simple_resolution(alg, v, c.length);
        const auto w = sr.syzygy_simple(c.length);
        ++checked;
        if (!w || *w != want || !sr.exact || !sr.minimal)
          o.fail(fmt::format("{} s={} Omega^{}(S_{}): expected S_{}", family_name(c.family), s, c.length, v, want));
      }
    }
  o.notes.push_back(fmt::format("{} listed claims, {} instances", syzygy_claims().size(), checked));
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<std::pair<Family, int>> grid = {{Family::E7, 1}, {Family::E7, 2}, {Family::E7, 3}, {Family::E7, 9},
                                              {Family::E8, 1}, {Family::E8, 2}, {Family::E8, 5}};
  for (auto [fam, s] : grid)
    for (uint32_t p : {0u, 2u, 3u}) {
      const int P = resolution_period(fam);
      const int D = P * predicted_order(fam, s, p) + 1;
      Built b(fam, s, p, D, false);
      const PeriodReport pr = verify_periodicity(*b.res);
      if (pr.automorphism_order != pr.predicted_order)
        o.fail(fmt::format("{}: order {} vs {}", tag(fam, s, p), pr.automorphism_order, pr.predicted_order));
      if (!pr.first.iso_found) o.fail(tag(fam, s, p) + ": no twisted isomorphism at " + std::to_string(P));
      if (pr.minimal_period != pr.predicted_period)
        o.fail(fmt::format("{}: minimal period {} vs {}", tag(fam, s, p), pr.minimal_period, pr.predicted_period));
    }
  return o;
}

Outcome criterion8() {
  Outcome o;
  struct Case {
    Family fam;
    int s;
    uint32_t p;
  };
  const std::vector<Case> grid = {{Family::E7, 1, 2}, {Family::E7, 1, 3}, {Family::E7, 2, 2}, {Family::E7, 2, 3},
                                  {Family::E8, 1, 2}, {Family::E8, 1, 3}, {Family::E8, 1, 5}};
  std::set<std::string> relations_seen;
  for (const Case& c : grid) {
    const int W = default_window(c.fam, c.s, c.p);
    Built b(c.fam, c.s, c.p, W);
    const PresentationReport rep = verify_presentation(*b.cx, W);
    for (const auto& cell : rep.cells) {
      const auto at = cell.expected.find("(r");
      if (at != std::string::npos && cell.status == CellReport::Status::Match)
        relations_seen.insert(family_name(c.fam) + " " + cell.expected.substr(at + 1, cell.expected.find(')', at) - at - 1));
    }
    if (!rep.generation_ok) o.fail(tag(c.fam, c.s, c.p) + ": generation");
    if (rep.cell_mismatches) o.fail(fmt::format("{}: {} cell mismatches", tag(c.fam, c.s, c.p), rep.cell_mismatches));
    if (!rep.normalization.consistent) o.fail(tag(c.fam, c.s, c.p) + ": " + rep.normalization.violation);
    if (!rep.commutativity_failures.empty()) o.fail(tag(c.fam, c.s, c.p) + ": commutativity");
    if (!rep.composite_failures.empty()) o.fail(tag(c.fam, c.s, c.p) + ": " + rep.composite_failures.front());
    if (!rep.associativity_failures.empty()) o.fail(tag(c.fam, c.s, c.p) + ": associativity");
  }
  std::set<std::string> relations;
  for (Family fam : {Family::E7, Family::E8})
    for (const auto& cell : presentation_data(fam).cells)
      if (!cell.label.empty()) relations.insert(family_name(fam) + " " + cell.label);
  for (const auto& r : relations)
    if (!relations_seen.count(r)) o.fail(r + " never checked as a nonzero product");
  o.notes.push_back(fmt::format("{} cases, {} of {} char-conditional relations matched", grid.size(),
                                relations_seen.size(), relations.size()));
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(9);
  // cup products
  for (auto [fam, s, p] : std::vector<std::tuple<Family, int, uint32_t>>{
           {Family::E7, 1, 3}, {Family::E7, 2, 2}, {Family::E8, 1, 5}}) {
    Built b(fam, s, p, 36);
    const FieldSpec f = b.alg.field();
    auto rnd = [&](size_t n) {
      Vec v(n, f.zero());
      for (auto& x : v) x = f.from_int(int(rng() % 7) - 3);
      return v;
    };
    for (int t1 = 1; t1 < 18; ++t1)
      for (int t2 = t1; t1 + t2 < 35; t2 += 5) {
        CohomologySpace h1(*b.cx, t1), h2(*b.cx, t2), h12(*b.cx, t1 + t2);
        if (h1.dim() == 0 || h2.dim() == 0) continue;
        const Vec f1 = h1.from_coordinates(rnd(h1.dim())), f2 = h2.from_coordinates(rnd(h2.dim()));
        const Vec base = h12.coordinates(cup_product(*b.cx, t2, f2, t1, f1));
        const ChainMapLift other = lift_cocycle(*b.cx, t1, f1, t2, rng());
        if (h12.coordinates(compose_with_lift(*b.cx, t2, f2, other)) != base)
          o.fail(fmt::format("{}: lift dependence at ({}, {})", tag(fam, s, p), t1, t2));
        Vec g1 = b.cx->apply_coboundary(t1 - 1, rnd(b.cx->hom_dim(t1 - 1)));
        for (size_t k = 0; k < g1.size(); ++k) g1[k] += f1[k];
        if (h12.coordinates(cup_product(*b.cx, t2, f2, t1, g1)) != base)
          o.fail(fmt::format("{}: representative dependence at ({}, {})", tag(fam, s, p), t1, t2));
      }
    ProductTable table(*b.cx, 36);
    for (const PropertyReport& r : {check_unit_law(table), check_associativity(table, 500)})
      if (!r.ok()) o.fail(tag(fam, s, p) + ": " + r.failures.front());
  }
  // exact linear algebra
  for (uint32_t p : {0u, 2u, 3u, 5u, 101u}) {
    const FieldSpec f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const size_t rows = rng() % 10, cols = rng() % 10;
      Matrix m(f, rows, cols);
      for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = rng() % 3 ? f.zero() : f.from_int(int(rng() % 11) - 5);
      const auto red = rref_rank(m);
      const auto ker = kernel_basis(m);
      if (red.rank + ker.size() != cols) o.fail(fmt::format("rank + nullity over char {}", p));
      if (rref_rank(red.reduced).reduced != red.reduced) o.fail(fmt::format("rref idempotence over char {}", p));
    }
  }
  // cache
  const Algebra alg = Algebra::build(Family::E8, 1, FieldSpec(3));
  const Resolution res = build_resolution(alg, 10);
  const auto dir = std::filesystem::temp_directory_path() / fmt::format("hhe78-acceptance-{}", rng());
  std::filesystem::create_directories(dir);
  const std::string path = (dir / cache_file_name(Family::E8, 1, 3)).string();
  cache_store(res, path);
  const Resolution back = cache_load(alg, path);
  for (int m = 0; m < 10; ++m)
    if (!(back.d(m) == res.d(m))) o.fail("cache round trip changed d_" + std::to_string(m));
  nlohmann::json j = resolution_to_json(res);
  auto& c = j.at("differentials").at(6).at(0).at(0).at(3);
  c = c.get<std::string>() == "1" ? "2" : "1";
  try {
    resolution_from_json(alg, j);
    o.fail("tampered cache accepted");
  } catch (const CacheError&) {
  }
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"E7 additive structure, s=1", criterion1},
      {"E7 Hom and coboundary dimensions, s=2,3", criterion2},
      {"E8 additive structure, s=1", criterion3},
      {"resolution terms and Happel multiplicities", criterion4},
      {"exactness and minimality", criterion5},
      {"syzygy claims", criterion6},
      {"periodicity and twist", criterion7},
      {"ring presentation", criterion8},
      {"property suite", criterion9},
  };
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("fault: ") + e.what());
    }
    failed += o.ok ? 0 : 1;
    fmt::print("criterion {}: {} {}", k + 1, o.ok ? "PASS" : "FAIL", criteria[k].first);
    if (!o.notes.empty()) fmt::print(" [{}]", fmt::join(o.notes, " | "));
    fmt::print("\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
