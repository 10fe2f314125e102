#include "hh/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include <fmt/format.h>

namespace hh {

using nlohmann::json;

json resolution_to_json(const Resolution& res) {
  const Algebra& alg = res.algebra();
  json j;
  j["format"] = kCacheFormat;
  j["version"] = kCacheVersion;
  j["algebra"] = {{"family", family_name(alg.quiver().family)},
                  {"s", alg.quiver().s},
                  {"characteristic", alg.field().characteristic()},
                  {"hash", alg.hash()}};
  j["max_degree"] = res.max_degree();
  json terms = json::array();
  for (int m = 0; m <= res.max_degree(); ++m) {
    json t = json::array();
    for (const auto& s : res.term(m).summands) t.push_back({s.i, s.j});
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  json diffs = json::array();
  for (int m = 0; m < res.max_degree(); ++m) {
    json cols = json::array();
    for (const auto& im : res.d(m).images()) {
      json col = json::array();
      for (const auto& t : im.terms()) col.push_back({t.k, t.p, t.q, t.c.str()});
      cols.push_back(std::move(col));
    }
    diffs.push_back(std::move(cols));
  }
  j["differentials"] = std::move(diffs);
  return j;
}

Resolution resolution_from_json(const Algebra& alg, const json& j) {
  try {
    if (!j.is_object() || j.value("format", "") != kCacheFormat) throw CacheError("not a resolution cache file");
    const int version = j.at("version").get<int>();
    if (version != kCacheVersion)
      throw CacheError(fmt::format("cache version {} is not supported (expected {})", version, kCacheVersion));
    const std::string hash = j.at("algebra").at("hash").get<std::string>();
    if (hash != alg.hash()) throw CacheError("cache belongs to a different algebra");

    const int max_degree = j.at("max_degree").get<int>();
    const json& jt = j.at("terms");
    const json& jd = j.at("differentials");
    if (max_degree < 0 || jt.size() != size_t(max_degree) + 1 || jd.size() != size_t(max_degree))
      throw CacheError("degree sections do not match max_degree");

    const int N = alg.num_vertices();
    const int D = static_cast<int>(alg.dim());
    std::vector<ProjSum> terms;
    for (const auto& t : jt) {
      ProjSum ps;
      for (const auto& s : t) {
        Summand sm{s.at(0).get<int>(), s.at(1).get<int>()};
        if (sm.i < 0 || sm.i >= N || sm.j < 0 || sm.j >= N) throw CacheError("summand vertex out of range");
        ps.summands.push_back(sm);
      }
      terms.push_back(std::move(ps));
    }
    std::vector<BimoduleMap> d;
    for (int m = 0; m < max_degree; ++m) {
      const ProjSum& source = terms[m + 1];
      const ProjSum& target = terms[m];
      if (jd[m].size() != source.size()) throw CacheError(fmt::format("d_{} has the wrong number of columns", m));
      std::vector<BimodElement> images;
      for (const auto& col : jd[m]) {
        BimodElement e;
        for (const auto& t : col) {
          const int k = t.at(0).get<int>(), p = t.at(1).get<int>(), q = t.at(2).get<int>();
          if (k < 0 || size_t(k) >= target.size() || p < 0 || p >= D || q < 0 || q >= D)
            throw CacheError(fmt::format("d_{} has an index out of range", m));
          if (alg.right(p) != target[k].i || alg.left(q) != target[k].j)
            throw CacheError(fmt::format("d_{} has a term outside its summand", m));
          e.add_term(k, p, q, alg.field().parse(t.at(3).get<std::string>()));
        }
        e.normalize();
        images.push_back(std::move(e));
      }
      d.emplace_back(source, target, std::move(images));
    }
    Resolution res = assemble_resolution(alg, std::move(terms), std::move(d));
    const ResolutionCheck chk = check_resolution(res);
    if (!chk.epsilon_d0_zero) throw CacheError("revalidation failed: epsilon d_0 != 0");
    if (!chk.dd_nonzero.empty()) throw CacheError(fmt::format("revalidation failed: d_{} d_{} != 0", chk.dd_nonzero[0], chk.dd_nonzero[0] + 1));
    if (!chk.inexact.empty()) throw CacheError(fmt::format("revalidation failed: not exact at degree {}", chk.inexact[0]));
    if (!chk.non_minimal.empty()) throw CacheError(fmt::format("revalidation failed: d_{} not minimal", chk.non_minimal[0]));
    return res;
  } catch (const CacheError&) {
    throw;
  } catch (const std::exception& e) {
    throw CacheError(fmt::format("malformed cache file: {}", e.what()));
  }
}

void cache_store(const Resolution& res, const std::string& path) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + fmt::format(".tmp{}", ::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(fmt::format("cannot write {}", tmp.string()));
    out << resolution_to_json(res).dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error(fmt::format("write to {} failed", tmp.string()));
  }
  fs::rename(tmp, target);
}

Resolution cache_load(const Algebra& alg, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError(fmt::format("cannot read {}", path));
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw CacheError(fmt::format("{} is not valid JSON: {}", path, e.what()));
  }
  return resolution_from_json(alg, j);
}

std::string cache_file_name(Family family, int s, uint32_t characteristic) {
  return fmt::format("{}-s{}-char{}.json", family == Family::E7 ? "e7" : "e8", s, characteristic);
}

std::optional<std::string> default_cache_dir() {
  const char* v = std::getenv("E78_CACHE_DIR");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

}  // namespace hh
