// Command-line front end. Exit codes: 0 all requested checks passed, 1 a check
// mismatched, 2 usage error, 3 internal fault or rejected cache.

#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hh/cache.hpp"
#include "hh/report.hpp"

namespace {

struct Options {
  std::string family = "e7";
  int s = 1;
  uint32_t characteristic = 0;
  int max_degree = -1;
  int window = 0;
  std::string format = "json";
  std::string out;
  std::string cache_dir;
  std::string parity = "both";
  unsigned threads = 0;
  bool timings = false;
  std::string check_file;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "e7 or e8")
      ->required()
      ->transform(CLI::IsMember({"e7", "e8"}, CLI::ignore_case));
  sub->add_option("--s", o.s, "number of blocks")->check(CLI::PositiveNumber);
  sub->add_option("--char", o.characteristic, "field characteristic (0 for the rationals)");
  sub->add_option("--max-deg", o.max_degree, "highest degree to check (default per check)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--format", o.format, "json, csv or md")->transform(CLI::IsMember({"json", "csv", "md"}));
  sub->add_option("--out", o.out, "output file (default stdout)");
  sub->add_option("--cache-dir", o.cache_dir, "resolution cache directory (default $E78_CACHE_DIR)");
  sub->add_option("--parity-reading", o.parity, "ell, ell-plus-m or both")
      ->transform(CLI::IsMember({"ell", "ell-plus-m", "both"}));
  sub->add_option("--threads", o.threads, "worker threads for products (0: hardware)");
  sub->add_flag("--timings", o.timings, "include elapsed seconds per section");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology engine for the E7 and E8 algebras R_s, R'_s"};
  app.require_subcommand(1);
  Options o;

  struct Sub {
    const char* name;
    const char* help;
    std::vector<hh::Check> checks;
  };
  const std::vector<Sub> subs = {
      {"build", "build the algebra and print its basis statistics", {hh::Check::Algebra}},
      {"resolve", "compute the bimodule resolution; compare terms, exactness and minimality",
       {hh::Check::Terms, hh::Check::Exactness}},
      {"dims", "dimensions of Hom, coboundaries and HH against the published tables", {hh::Check::Dims}},
      {"syzygies", "syzygy periods of the simple modules", {hh::Check::Syzygies}},
      {"period", "automorphism order, twisted periodicity and minimal period", {hh::Check::Period}},
      {"products", "ring presentation: generators, product tables, normalization", {hh::Check::Presentation}},
      {"verify", "run every check",
       {hh::Check::Algebra, hh::Check::Terms, hh::Check::Exactness, hh::Check::Dims, hh::Check::Syzygies,
        hh::Check::Period, hh::Check::Presentation}},
      {"cache", "fill the resolution cache (or validate a cache file with --check)", {}},
  };
  std::map<std::string, CLI::App*> apps;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, o);
    apps[s.name] = sub;
  }
  apps["products"]->add_option("--window", o.window, "degree window (default 2M or M+17 / M+29)");
  apps["verify"]->add_option("--window", o.window, "degree window for the presentation check");
  apps["cache"]->add_option("--check", o.check_file, "validate this cache file instead of filling the cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Sub* chosen = nullptr;
  for (const auto& s : subs)
    if (apps[s.name]->parsed()) chosen = &s;

  hh::JobConfig cfg;
  try {
    cfg.family = hh::parse_family(o.family);
    cfg.s = o.s;
    cfg.characteristic = o.characteristic;
    cfg.max_degree = o.max_degree;
    cfg.window = o.window;
    cfg.threads = o.threads;
    cfg.timings = o.timings;
    if (o.parity != "both") cfg.parity = hh::parse_parity_reading(o.parity);
    if (!o.cache_dir.empty()) cfg.cache_dir = o.cache_dir;
    cfg.checks = chosen->checks;
    cfg.validate();
  } catch (const std::exception& e) {
    fmt::print(stderr, "usage error: {}\n", e.what());
    return 2;
  }

  try {
    if (std::string(chosen->name) == "cache") {
      hh::Algebra alg = hh::Algebra::build(cfg.family, cfg.s, hh::FieldSpec(cfg.characteristic));
      if (!o.check_file.empty()) {
        hh::Resolution res = hh::cache_load(alg, o.check_file);
        fmt::print("{}: valid through degree {}\n", o.check_file, res.max_degree());
        return 0;
      }
      const auto dir = cfg.cache_dir ? cfg.cache_dir : hh::default_cache_dir();
      if (!dir) {
        fmt::print(stderr, "usage error: no cache directory (--cache-dir or E78_CACHE_DIR)\n");
        return 2;
      }
      const int degree = cfg.max_degree >= 0 ? cfg.max_degree : hh::default_terms_degree(cfg.family);
      const std::string path =
          (std::filesystem::path(*dir) / hh::cache_file_name(cfg.family, cfg.s, cfg.characteristic)).string();
      std::optional<hh::Resolution> res;
      if (std::filesystem::exists(path)) res.emplace(hh::cache_load(alg, path));
      if (!res)
        res.emplace(hh::build_resolution(alg, degree));
      else if (res->max_degree() < degree)
        hh::extend_resolution(*res, degree);
      hh::cache_store(*res, path);
      fmt::print("{}: stored through degree {}\n", path, res->max_degree());
      return 0;
    }
    const hh::VerificationReport rep = hh::run(cfg);
    hh::emit(rep, hh::parse_format(o.format), o.out);
    return rep.ok() ? 0 : 1;
  } catch (const hh::CacheError& e) {
    fmt::print(stderr, "cache rejected: {}\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 3;
  }
}
