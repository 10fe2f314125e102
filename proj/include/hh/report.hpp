#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hh/ring_structure.hpp"

namespace hh {

enum class Check { Algebra, Terms, Exactness, Dims, Syzygies, Period, Presentation };

struct JobConfig {
  Family family = Family::E7;
  int s = 1;
  uint32_t characteristic = 0;
  int max_degree = -1;                  // -1: per-check default
  std::vector<Check> checks;
  std::optional<ParityReading> parity;  // nullopt: evaluate both and adjudicate
  std::optional<std::string> cache_dir;
  int window = 0;                       // presentation window, 0: default
  unsigned threads = 0;
  bool timings = false;                 // timings make the report run-dependent
  // throws std::invalid_argument
  void validate() const;
};

// One table of results. Rows are objects keyed by column name; they may carry extra keys
// that only appear in JSON.
struct Section {
  std::string name;
  bool ok = true;
  nlohmann::json summary = nlohmann::json::object();
  std::vector<std::string> columns;
  std::vector<nlohmann::json> rows;
  std::string markdown;  // body rendered after the title in md output
};

struct VerificationReport {
  nlohmann::json config = nlohmann::json::object();
  std::vector<Section> sections;
  bool ok() const;
};

enum class Format { Json, Csv, Markdown };
Format parse_format(const std::string& text);
std::string render(const VerificationReport& report, Format format);
// path "" or "-" writes to stdout
void emit(const VerificationReport& report, Format format, const std::string& path);

// default degree bounds per check
int default_terms_degree(Family family);                          // 16 / 28
int default_dims_degree(Family family, uint32_t characteristic);  // 34 or 40 / 29 or 35

VerificationReport run(const JobConfig& config);

Section algebra_section(const Algebra& alg);
Section terms_section(const Resolution& res, int max_degree);
Section exactness_section(const Resolution& res);
// needs a resolution through max_degree + 1
Section dims_section(const CochainComplex& cx, int max_degree, std::optional<ParityReading> parity);
Section syzygies_section(const Algebra& alg);
Section period_section(const Resolution& res);
Section presentation_section(const PresentationReport& rep);

}  // namespace hh
