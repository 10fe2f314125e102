#include "hh/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "hh/cache.hpp"

namespace hh {

using nlohmann::json;

namespace {

std::string check_name(Check c) {
  switch (c) {
    case Check::Algebra: return "algebra";
    case Check::Terms: return "terms";
    case Check::Exactness: return "exactness";
    case Check::Dims: return "dims";
    case Check::Syzygies: return "syzygies";
    case Check::Period: return "period";
    case Check::Presentation: return "presentation";
  }
  return "?";
}

std::string tick(bool ok) { return ok ? "✓" : "✗"; }

std::string cell_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_field(const json& v) {
  std::string s = cell_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

std::string md_table(const std::vector<std::string>& columns, const std::vector<json>& rows) {
  std::string out = "|";
  for (const auto& c : columns) out += " " + c + " |";
  out += "\n|";
  for (size_t k = 0; k < columns.size(); ++k) out += "---|";
  out += "\n";
  for (const auto& r : rows) {
    out += "|";
    for (const auto& c : columns) out += " " + md_escape(cell_text(r.value(c, json()))) + " |";
    out += "\n";
  }
  return out;
}

// "P(i,j)" differences between two multisets
std::string multiset_diff(const ProjSum& got, const ProjSum& want) {
  auto a = got.multiset(), b = want.multiset();
  std::set<Summand> keys;
  for (auto& [k, _] : a) keys.insert(k);
  for (auto& [k, _] : b) keys.insert(k);
  std::string out;
  for (const auto& k : keys) {
    const int x = a.count(k) ? a[k] : 0, y = b.count(k) ? b[k] : 0;
    if (x != y) out += fmt::format("{}P({},{}) {} vs {}", out.empty() ? "" : "; ", k.i, k.j, x, y);
  }
  return out;
}

Resolution truncated(const Resolution& res, int degree) {
  std::vector<ProjSum> terms;
  std::vector<BimoduleMap> d;
  for (int m = 0; m <= degree; ++m) terms.push_back(res.term(m));
  for (int m = 0; m < degree; ++m) d.push_back(res.d(m));
  return assemble_resolution(res.algebra(), std::move(terms), std::move(d));
}

json base_row(const Algebra& alg) {
  return {{"family", family_name(alg.quiver().family)},
          {"s", alg.quiver().s},
          {"char", alg.field().characteristic()}};
}

}  // namespace

void JobConfig::validate() const {
  if (s < 1) throw std::invalid_argument("s must be a positive integer");
  if (characteristic != 0 && !is_prime(characteristic))
    throw std::invalid_argument(fmt::format("characteristic {} is neither 0 nor a prime", characteristic));
  if (max_degree < -1) throw std::invalid_argument("max degree must be nonnegative");
  if (window < 0) throw std::invalid_argument("window must be nonnegative");
}

bool VerificationReport::ok() const {
  for (const auto& s : sections)
    if (!s.ok) return false;
  return true;
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "md") return Format::Markdown;
  throw std::invalid_argument(fmt::format("unknown format '{}'", text));
}

std::string render(const VerificationReport& report, Format format) {
  if (format == Format::Json) {
    json j;
    j["config"] = report.config;
    j["ok"] = report.ok();
    j["sections"] = json::array();
    for (const auto& s : report.sections)
      j["sections"].push_back(
          {{"name", s.name}, {"ok", s.ok}, {"summary", s.summary}, {"columns", s.columns}, {"rows", s.rows}});
    return j.dump(2) + "\n";
  }
  if (format == Format::Csv) {
    std::string out;
    const bool many = report.sections.size() > 1;
    for (size_t n = 0; n < report.sections.size(); ++n) {
      const Section& s = report.sections[n];
      if (n > 0) out += "\n";
      if (many) out += "# " + s.name + "\n";
      for (size_t c = 0; c < s.columns.size(); ++c) out += (c ? "," : "") + s.columns[c];
      out += "\n";
      for (const auto& r : s.rows) {
        for (size_t c = 0; c < s.columns.size(); ++c) out += (c ? "," : "") + csv_field(r.value(s.columns[c], json()));
        out += "\n";
      }
    }
    return out;
  }
  std::string out = "# Verification report\n\n";
  for (const auto& [k, v] : report.config.items()) out += fmt::format("- {}: {}\n", k, cell_text(v));
  out += fmt::format("- result: {}\n", report.ok() ? "PASS" : "FAIL");
  for (const auto& s : report.sections) {
    out += fmt::format("\n## {} ({})\n\n", s.name, s.ok ? "PASS" : "FAIL");
    out += s.markdown.empty() ? md_table(s.columns, s.rows) : s.markdown;
  }
  return out;
}

void emit(const VerificationReport& report, Format format, const std::string& path) {
  const std::string text = render(report, format);
  if (path.empty() || path == "-") {
    if (std::fwrite(text.data(), 1, text.size(), stdout) != text.size()) throw std::runtime_error("write to stdout failed");
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot open {} for writing", path));
  out << text;
  if (!out.flush()) throw std::runtime_error(fmt::format("write to {} failed", path));
}

int default_terms_degree(Family family) { return family == Family::E7 ? 16 : 28; }

int default_dims_degree(Family family, uint32_t characteristic) {
  if (family == Family::E7) return characteristic == 2 ? 34 : 40;
  return characteristic == 2 ? 29 : 35;
}

// ---- sections ----

Section algebra_section(const Algebra& alg) {
  Section s;
  s.name = "algebra";
  const int N = alg.num_vertices();
  s.summary = {{"dimension", alg.dim()}, {"vertices", N}, {"hash", alg.hash()},
               {"automorphism_order", automorphism_order(standard_automorphism(alg))}};
  s.columns = {"vertex", "dim_Re", "dim_eR"};
  for (int v = 0; v < N; ++v) {
    size_t re = 0, er = 0;
    for (int a = 0; a < N; ++a) {
      re += alg.block(a, v).size();
      er += alg.block(v, a).size();
    }
    s.rows.push_back({{"vertex", v}, {"dim_Re", re}, {"dim_eR", er}});
  }
  return s;
}

Section terms_section(const Resolution& res, int max_degree) {
  const Algebra& alg = res.algebra();
  const Family fam = alg.quiver().family;
  const int s_ = alg.quiver().s;
  if (max_degree > res.max_degree()) throw std::invalid_argument("resolution too short for the terms check");
  Section s;
  s.name = "terms";
  s.columns = {"family", "s", "char", "m", "summands", "predicted", "lemmas", "happel", "detail"};
  std::vector<SimpleResolution> simples;
  for (int v = 0; v < alg.num_vertices(); ++v) simples.push_back(simple_resolution(alg, v, max_degree + 1));
  size_t bad = 0;
  for (int m = 0; m <= max_degree; ++m) {
    const ProjSum& q = res.term(m);
    const ProjSum pred = predicted_terms(fam, s_, m);
    const ProjSum lem = lemma_terms(fam, s_, m);
    const bool p_ok = q.multiset() == pred.multiset();
    const bool l_ok = q.multiset() == lem.multiset();
    const HappelReport h = verify_happel(alg, res, simples, m);
    std::string detail;
    if (!p_ok) detail += "predicted: " + multiset_diff(q, pred);
    if (!l_ok) detail += (detail.empty() ? "" : " / ") + std::string("lemmas: ") + multiset_diff(q, lem);
    for (const auto& x : h.mismatches) detail += (detail.empty() ? "" : " / ") + x;
    json row = base_row(alg);
    row.update({{"m", m}, {"summands", q.size()}, {"predicted", p_ok}, {"lemmas", l_ok}, {"happel", h.ok()},
                {"detail", detail}});
    s.rows.push_back(std::move(row));
    if (!(p_ok && l_ok && h.ok())) ++bad;
  }
  s.ok = bad == 0;
  s.summary = {{"max_degree", max_degree}, {"mismatched_degrees", bad}};
  return s;
}

Section exactness_section(const Resolution& res) {
  Section s;
  s.name = "exactness";
  s.columns = {"family", "s", "char", "m", "dd_zero", "exact", "minimal"};
  const ResolutionCheck chk = check_resolution(res);
  auto has = [](const std::vector<int>& v, int m) { return std::find(v.begin(), v.end(), m) != v.end(); };
  for (int m = 0; m < res.max_degree(); ++m) {
    json row = base_row(res.algebra());
    row.update({{"m", m}, {"dd_zero", !has(chk.dd_nonzero, m)}, {"exact", !has(chk.inexact, m)},
                {"minimal", !has(chk.non_minimal, m)}});
    s.rows.push_back(std::move(row));
  }
  s.ok = chk.ok();
  s.summary = {{"max_degree", res.max_degree()}, {"epsilon_d0_zero", chk.epsilon_d0_zero},
               {"dd_nonzero", chk.dd_nonzero}, {"inexact", chk.inexact}, {"non_minimal", chk.non_minimal}};
  return s;
}

Section dims_section(const CochainComplex& cx, int max_degree, std::optional<ParityReading> parity) {
  const Algebra& alg = cx.algebra();
  const Family fam = alg.quiver().family;
  const int s_ = alg.quiver().s;
  const uint32_t ch = alg.field().characteristic();
  if (max_degree >= cx.max_degree()) throw std::invalid_argument("resolution too short for the dimension check");

  std::vector<ParityReading> readings;
  if (parity)
    readings = {*parity};
  else
    readings = {ParityReading::EllPlusM, ParityReading::Ell};

  struct Got {
    int hom, im, hh;
  };
  std::vector<Got> got;
  for (int t = 0; t <= max_degree; ++t)
    got.push_back({int(cx.hom_dim(t)), int(cx.coboundary_rank(t)), int(cx.hh_dim(t))});

  // per reading: hom/im mismatches (the propositions) and hh mismatches (the additive theorem)
  json per_reading = json::object();
  std::optional<ParityReading> adjudicated;
  for (auto rd : readings) {
    size_t prop = 0, thm = 0;
    for (int t = 0; t <= max_degree; ++t) {
      const ExpectedDims e = expected_dims(fam, s_, ch, t, rd);
      prop += (e.hom != got[t].hom || e.im != got[t].im) ? 1 : 0;
      thm += e.hh != got[t].hh ? 1 : 0;
    }
    per_reading[parity_reading_name(rd)] = {{"proposition_mismatches", prop}, {"theorem_mismatches", thm}};
    if (prop == 0 && !adjudicated) adjudicated = rd;
  }
  const ParityReading used = adjudicated.value_or(readings.front());

  Section s;
  s.name = "dims";
  s.columns = {"family", "s", "char", "t", "ell", "r", "m", "hom", "im", "hh", "expected_hh", "match"};
  size_t bad = 0;
  for (int t = 0; t <= max_degree; ++t) {
    const auto d = DegreeDecomposition::of(fam, t);
    const ExpectedDims e = expected_dims(fam, s_, ch, t, used);
    const bool ok = e.hom == got[t].hom && e.im == got[t].im && e.hh == got[t].hh;
    bad += ok ? 0 : 1;
    json row = base_row(alg);
    row.update({{"t", t}, {"ell", d.ell}, {"r", d.r}, {"m", d.m}, {"hom", got[t].hom}, {"im", got[t].im},
                {"hh", got[t].hh}, {"expected_hh", e.hh}, {"expected_hom", e.hom}, {"expected_im", e.im},
                {"match", ok}});
    s.rows.push_back(std::move(row));
  }
  s.ok = bad == 0;
  s.summary = {{"max_degree", max_degree},
               {"readings", per_reading},
               {"adjudicated_reading", adjudicated ? json(parity_reading_name(*adjudicated)) : json(nullptr)},
               {"reading_used", parity_reading_name(used)},
               {"mismatched_degrees", bad}};

  // grouped by residue r, then by ell
  std::vector<json> sorted = s.rows;
  std::stable_sort(sorted.begin(), sorted.end(), [](const json& a, const json& b) {
    return std::pair(a["r"].get<int>(), a["ell"].get<int>()) < std::pair(b["r"].get<int>(), b["ell"].get<int>());
  });
  std::string md = fmt::format("Reading: {}{}\n\n", parity_reading_name(used), adjudicated ? "" : " (no reading matches)");
  md += "| r | ℓ | t | hom | im | HH | expected | |\n|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : sorted)
    md += fmt::format("| {} | {} | {} | {} | {} | {} | {} | {} |\n", r["r"].get<int>(), r["ell"].get<int>(),
                      r["t"].get<int>(), r["hom"].get<int>(), r["im"].get<int>(), r["hh"].get<int>(),
                      r["expected_hh"].get<int>(), tick(r["match"].get<bool>()));
  s.markdown = md;
  return s;
}

Section syzygies_section(const Algebra& alg) {
  const Family fam = alg.quiver().family;
  const int n = alg.quiver().block_size, s_ = alg.quiver().s, N = alg.num_vertices();
  Section s;
  s.name = "syzygies";
  s.columns = {"family", "s", "char", "vertex", "power", "expected", "computed", "match"};
  size_t bad = 0;
  for (const auto& c : syzygy_claims()) {
    if (c.family != fam) continue;
    for (int r = 0; r < s_; ++r) {
      const int v = n * r + c.local_vertex;
      const int want = ((n * (r + c.block_shift) + c.local_target) % N + N) % N;
      const SimpleResolution sr = simple_resolution(alg, v, c.length);
      const auto w = sr.syzygy_simple(c.length);
      const bool ok = w && *w == want && sr.exact && sr.minimal;
      bad += ok ? 0 : 1;
      json row = base_row(alg);
      row.update({{"vertex", v}, {"power", c.length}, {"expected", want},
                  {"computed", w ? json(*w) : json("not simple")}, {"match", ok}});
      s.rows.push_back(std::move(row));
    }
  }
  s.ok = bad == 0;
  s.summary = {{"claims", s.rows.size()}, {"mismatches", bad}};
  return s;
}

Section period_section(const Resolution& res) {
  const Algebra& alg = res.algebra();
  const PeriodReport pr = verify_periodicity(res);
  Section s;
  s.name = "period";
  s.columns = {"family", "s", "char", "quantity", "expected", "computed", "status"};
  auto add = [&](const std::string& q, json want, json have, const std::string& status) {
    json row = base_row(alg);
    row.update({{"quantity", q}, {"expected", want}, {"computed", have}, {"status", status}});
    s.rows.push_back(std::move(row));
  };
  bool ok = true;
  const bool ord_ok = pr.automorphism_order == pr.predicted_order;
  ok = ok && ord_ok;
  add("automorphism order", pr.predicted_order, pr.automorphism_order, ord_ok ? "match" : "mismatch");
  const int P = resolution_period(alg.quiver().family);
  if (res.max_degree() >= P) {
    ok = ok && pr.first.iso_found;
    add(fmt::format("twisted isomorphism in degree {}", P), true, pr.first.iso_found,
        pr.first.iso_found ? "match" : "mismatch");
  } else {
    add(fmt::format("twisted isomorphism in degree {}", P), true, nullptr, "out-of-window");
  }
  if (pr.predicted_period <= res.max_degree()) {
    const bool per_ok = pr.minimal_period == pr.predicted_period;
    ok = ok && per_ok;
    add("minimal period", pr.predicted_period, pr.minimal_period < 0 ? json(nullptr) : json(pr.minimal_period),
        per_ok ? "match" : "mismatch");
  } else {
    // a smaller period inside the window still contradicts the prediction
    const bool per_ok = pr.minimal_period < 0;
    ok = ok && per_ok;
    add("minimal period", pr.predicted_period, pr.minimal_period < 0 ? json(nullptr) : json(pr.minimal_period),
        per_ok ? "out-of-window" : "mismatch");
  }
  s.ok = ok;
  s.summary = {{"max_degree", res.max_degree()}, {"candidate_degrees", pr.candidate_degrees},
               {"isomorphism_detail", pr.first.detail}};
  return s;
}

Section presentation_section(const PresentationReport& rep) {
  Section s;
  s.name = "presentation";
  s.columns = {"family", "s", "char", "left", "left_degree", "right", "right_degree", "expected", "status", "detail"};
  auto status_name = [](CellReport::Status st) {
    switch (st) {
      case CellReport::Status::Match: return "match";
      case CellReport::Status::Mismatch: return "mismatch";
      case CellReport::Status::OutOfWindow: return "out-of-window";
      case CellReport::Status::CharExcluded: return "char-excluded";
    }
    return "?";
  };
  const json base = {{"family", family_name(rep.family)}, {"s", rep.s}, {"char", rep.characteristic}};
  for (const auto& c : rep.cells) {
    json row = base;
    row.update({{"left", c.left}, {"left_degree", c.left_degree}, {"right", c.right},
                {"right_degree", c.right_degree}, {"expected", c.expected}, {"status", status_name(c.status)},
                {"detail", c.detail}});
    s.rows.push_back(std::move(row));
  }
  s.ok = rep.ok();
  json gens = json::array();
  for (const auto& g : rep.generators) gens.push_back({{"name", g.name()}, {"degree", g.degree}});
  json scalars = json::object();
  for (const auto& [k, v] : rep.normalization.scalars) scalars[k] = v;
  s.summary = {{"M", rep.M},
               {"window", rep.window},
               {"generators", gens},
               {"generator_notes", rep.generator_notes},
               {"generation_ok", rep.generation_ok},
               {"generation_failures", rep.generation_failures},
               {"cell_mismatches", rep.cell_mismatches},
               {"normalization_consistent", rep.normalization.consistent},
               {"normalization_violation", rep.normalization.violation},
               {"scalars", scalars},
               {"commutativity_pairs", rep.commutativity_pairs},
               {"commutativity_failures", rep.commutativity_failures},
               {"composite_failures", rep.composite_failures},
               {"associativity_triples", rep.associativity_triples},
               {"associativity_failures", rep.associativity_failures},
               {"accepted_published_matrices", rep.accepted_published},
               {"rejected_published_matrices", rep.rejected_published}};

  // product grid: ✓ match, ✗ mismatch, · out of window, – excluded by the characteristic
  const PresentationData& data = presentation_data(rep.family);
  const int types = rep.s == 1 ? data.last_extra : data.num_types;
  std::map<std::pair<int, int>, std::set<CellReport::Status>> grid;
  for (const auto& c : rep.cells) grid[{c.left, c.right}].insert(c.status);
  auto symbol = [&](int a, int b) -> std::string {
    auto it = grid.find({a, b});
    if (it == grid.end()) return "";
    const auto& st = it->second;
    if (st.count(CellReport::Status::Mismatch)) return "✗";
    if (st.count(CellReport::Status::Match)) return "✓";
    if (st.count(CellReport::Status::OutOfWindow)) return "·";
    return "–";
  };
  std::string md = fmt::format("M = {}, window = {}. Generation: {}. Normalization: {}. Commutativity: {}/{} pairs. "
                               "Associativity: {}/{} triples.\n\n",
                               rep.M, rep.window, rep.generation_ok ? "ok" : "FAILED",
                               rep.normalization.consistent ? "consistent" : "INCONSISTENT " + rep.normalization.violation,
                               rep.commutativity_pairs - rep.commutativity_failures.size(), rep.commutativity_pairs,
                               rep.associativity_triples - rep.associativity_failures.size(), rep.associativity_triples);
  md += "| |";
  for (int b = 1; b <= types; ++b) md += fmt::format(" {} |", b);
  md += "\n|---|";
  for (int b = 1; b <= types; ++b) md += "---|";
  md += "\n";
  for (int a = 1; a <= types; ++a) {
    md += fmt::format("| **{}** |", a);
    for (int b = 1; b <= types; ++b) md += " " + symbol(a, b) + " |";
    md += "\n";
  }
  md += "\nGenerators:\n\n";
  for (const auto& n : rep.generator_notes) md += "- " + md_escape(n) + "\n";
  if (!rep.normalization.scalars.empty()) {
    md += "\nScalars:\n\n";
    for (const auto& [k, v] : rep.normalization.scalars) md += fmt::format("- {} = {}\n", k, v);
  }
  if (!rep.rejected_published.empty()) {
    md += "\nRejected published matrices:\n\n";
    for (const auto& r : rep.rejected_published) md += "- " + md_escape(r) + "\n";
  }
  std::vector<json> bad;
  for (const auto& r : s.rows)
    if (r["status"] == "mismatch") bad.push_back(r);
  if (!bad.empty()) md += "\nMismatches:\n\n" + md_table(s.columns, bad);
  s.markdown = md;
  return s;
}

// ---- job ----

VerificationReport run(const JobConfig& config) {
  config.validate();
  VerificationReport rep;
  rep.config = {{"family", family_name(config.family)},
                {"s", config.s},
                {"char", config.characteristic},
                {"max_degree", config.max_degree},
                {"parity_reading", config.parity ? parity_reading_name(*config.parity) : std::string("both")}};
  if (config.window > 0) rep.config["window"] = config.window;

  auto has = [&](Check c) { return std::find(config.checks.begin(), config.checks.end(), c) != config.checks.end(); };
  const Family fam = config.family;
  const uint32_t ch = config.characteristic;
  const int terms_deg = config.max_degree >= 0 ? config.max_degree : default_terms_degree(fam);
  const int dims_deg = config.max_degree >= 0 ? config.max_degree : default_dims_degree(fam, ch);
  const int period_deg = config.max_degree >= 0
                             ? config.max_degree
                             : resolution_period(fam) * predicted_order(fam, config.s, ch);
  const int window = config.window > 0 ? config.window : default_window(fam, config.s, ch);

  int need = -1;
  if (has(Check::Terms) || has(Check::Exactness)) need = std::max(need, terms_deg);
  if (has(Check::Dims)) need = std::max(need, dims_deg + 1);
  if (has(Check::Period)) need = std::max(need, period_deg);
  if (has(Check::Presentation)) need = std::max(need, window);

  const auto start = std::chrono::steady_clock::now();
  auto stamp = [&](Section& s) {
    if (config.timings)
      s.summary["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  Algebra alg = Algebra::build(fam, config.s, FieldSpec(ch));
  std::optional<Resolution> res;
  if (need >= 0) {
    const auto dir = config.cache_dir ? config.cache_dir : default_cache_dir();
    std::string path;
    if (dir) {
      path = (std::filesystem::path(*dir) / cache_file_name(fam, config.s, ch)).string();
      if (std::filesystem::exists(path)) res.emplace(cache_load(alg, path));
    }
    bool dirty = !res;
    if (!res) {
      res.emplace(build_resolution(alg, need));
    } else if (res->max_degree() < need) {
      extend_resolution(*res, need);
      dirty = true;
    }
    if (dir && dirty) cache_store(*res, path);
    // the report must not depend on how much the cache happened to hold
    if (res->max_degree() > need) res.emplace(truncated(*res, need));
  }
  std::optional<CochainComplex> cx;
  auto complex = [&]() -> const CochainComplex& {
    if (!cx) cx.emplace(*res);
    return *cx;
  };

  for (Check c : config.checks) {
    Section s;
    switch (c) {
      case Check::Algebra: s = algebra_section(alg); break;
      case Check::Terms: s = terms_section(*res, terms_deg); break;
      case Check::Exactness: s = exactness_section(*res); break;
      case Check::Dims: s = dims_section(complex(), dims_deg, config.parity); break;
      case Check::Syzygies: s = syzygies_section(alg); break;
      case Check::Period: s = period_section(*res); break;
      case Check::Presentation: {
        ProductTable table(complex(), window, config.threads);
        s = presentation_section(verify_presentation(table));
        break;
      }
    }
    if (s.name.empty()) s.name = check_name(c);
    stamp(s);
    rep.sections.push_back(std::move(s));
  }
  return rep;
}

}  // namespace hh
