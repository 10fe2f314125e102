#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hh/cohomology.hpp"

namespace hh {

// ---- presentation data ----

// condition "r = residue, c = congruence (mod s), ell even/odd {or|and} char = ch"
struct TypeCondition {
  int type = 0;
  int residue = 0;
  int congruence = 0;  // 0 or 1
  bool ell_odd = false;
  uint32_t ch = 0;
  bool either = false;  // parity OR char == ch; otherwise parity AND char == ch
};

// which instances of the left factor a cell applies to (type 1 at a positive degree is T)
enum class DegreeGate { Any, Zero, Positive };

// X^(left) X^(right) = (per_s*s + constant) X~^(target); target 0 means the product is zero
struct ProductCell {
  int left = 0;
  int right = 0;
  int target = 0;
  int per_s = 0;
  int constant = 0;
  uint32_t only_char = 0;  // nonzero only in this characteristic (0: always)
  DegreeGate gate = DegreeGate::Any;
  std::string label;  // "r1".. for the char-conditional relations, empty otherwise
};

struct CompositeLemma {
  int product;
  int left;
  int right;
};

struct PresentationData {
  Family family;
  int num_types = 0;    // 18 / 28
  int first_extra = 0;  // degree-0 extras for s = 1: 19..25 / 29..36
  int last_extra = 0;
  int char2_excluded = 0;  // extra type dropped in char 2 (E7: 19), 0 if none
  std::vector<TypeCondition> conditions;
  std::vector<ProductCell> cells;
  std::vector<CompositeLemma> composites;
  // cell for the unordered pair, honoring the gate on the type-1 side
  const ProductCell* find(int a, int b, bool a_positive, bool b_positive) const;
};

const PresentationData& presentation_data(Family family);

// ---- generators ----

struct GeneratorSpec {
  enum class Source { Published, Computed };
  Family family = Family::E7;
  int type = 0;  // 1 at degree M stands for T
  int degree = 0;
  Source source = Source::Computed;
  bool is_T = false;
  std::string name() const;
};

struct GeneratorDegrees {
  int M0 = 0;
  int M = 0;
  std::vector<GeneratorSpec> generators;  // sorted by (degree, type); T excluded
};

int period_core(Family family, int s);                    // M_0
int ring_period(Family family, int s, uint32_t ch);        // M
bool condition_holds(const TypeCondition& c, Family family, int s, uint32_t ch, int t);
GeneratorDegrees generator_degrees(Family family, int s, uint32_t ch);

// ---- lifting and products ----

// phi[i]: Q_{degree+i} -> Q_i with eps phi_0 = f and phi_{i-1} d_{degree+i-1} = d_{i-1} phi_i
struct ChainMapLift {
  int degree = 0;
  std::vector<BimoduleMap> phi;
  int steps() const { return static_cast<int>(phi.size()) - 1; }
};

struct LiftFault : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// perturb_seed adds pseudo-random kernel vectors at every step (a different lift of the same cocycle)
ChainMapLift lift_cocycle(const CochainComplex& cx, int t, const Vec& f, int steps,
                          std::optional<uint64_t> perturb_seed = std::nullopt);
void extend_lift(const CochainComplex& cx, ChainMapLift& lift, int steps,
                 std::optional<uint64_t> perturb_seed = std::nullopt);

// cochain f2 o phi_{t2} of degree lift.degree + t2
Vec compose_with_lift(const CochainComplex& cx, int t2, const Vec& f2, const ChainMapLift& lift);
// cl f2 . cl f1 as a cocycle of degree t1 + t2 (lifts f1)
Vec cup_product(const CochainComplex& cx, int t2, const Vec& f2, int t1, const Vec& f1);

// Structure constants of HH^{<window}: products of every pair of basis classes
// with degree sum below the window, from one lift per basis class.
class ProductTable {
 public:
  ProductTable(const CochainComplex& cx, int window, unsigned threads = 0);

  const CochainComplex& complex() const { return *cx_; }
  int window() const { return window_; }
  const CohomologySpace& space(int t) const { return *spaces_.at(t); }
  size_t dim(int t) const { return spaces_.at(t)->dim(); }
  // coordinates of u . v in HH^{a+b}; needs a + b < window
  Vec multiply(int a, const Vec& u, int b, const Vec& v) const;
  // class of a degree-t cocycle
  Vec coordinates(int t, const Vec& cocycle) const { return spaces_.at(t)->coordinates(cocycle); }
  Vec zero(int t) const;
  Vec unit() const;

 private:
  const CochainComplex* cx_;
  int window_;
  std::vector<std::unique_ptr<CohomologySpace>> spaces_;
  // table_[a * window + b][i * dim b + j] = x_i . y_j
  std::vector<std::vector<Vec>> table_;
};

// ---- published generator matrices ----

struct PublishedGenerator {
  bool accepted = false;
  Vec cochain;  // valid when accepted
  std::string diagnostics;
};

// the published matrix of type i in degree t, matched to the computed Q_t and validated as a cocycle
PublishedGenerator published_generator(const CochainComplex& cx, int type, int t);
// number of published generator matrices (25 / 36)
int published_generator_count(Family family);

// ---- presentation check ----

struct CellReport {
  int left = 0, right = 0;
  int left_degree = 0, right_degree = 0;
  std::string expected;  // human readable
  enum class Status { Match, Mismatch, OutOfWindow, CharExcluded } status = Status::Match;
  std::string detail;
};

struct NormalizationResult {
  bool consistent = true;
  std::vector<std::pair<std::string, std::string>> scalars;  // generator name -> unit
  std::string violation;
};

struct PresentationReport {
  Family family = Family::E7;
  int s = 1;
  uint32_t characteristic = 0;
  int M = 0;
  int window = 0;
  std::vector<GeneratorSpec> generators;  // includes T when inside the window
  std::vector<std::string> generator_notes;
  bool generation_ok = false;
  std::vector<int> generation_failures;  // degrees where the products do not span HH^t
  std::vector<CellReport> cells;
  size_t cell_mismatches = 0;
  NormalizationResult normalization;
  size_t commutativity_pairs = 0;
  std::vector<std::string> commutativity_failures;
  std::vector<std::string> composite_failures;
  size_t associativity_triples = 0;
  std::vector<std::string> associativity_failures;
  size_t candidates_tried = 0;
  std::vector<std::string> rejected_published;  // published matrices that failed validation
  std::vector<std::string> accepted_published;
  bool ok() const {
    return generation_ok && cell_mismatches == 0 && normalization.consistent &&
           commutativity_failures.empty() && composite_failures.empty() &&
           associativity_failures.empty();
  }
};

// default window: 2M when char 2 or M_0 even, M + 17 / M + 29 otherwise
int default_window(Family family, int s, uint32_t ch);
PresentationReport verify_presentation(const CochainComplex& cx, int window);
PresentationReport verify_presentation(const ProductTable& table);
// against a modified table (mutation tests)
PresentationReport verify_presentation(const ProductTable& table, const PresentationData& data);

// generator pairs and triples are sampled from the basis classes of each degree
struct PropertyReport {
  size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
PropertyReport check_unit_law(const ProductTable& table);
PropertyReport check_associativity(const ProductTable& table, size_t max_triples);
PropertyReport check_graded_commutativity(const ProductTable& table);

}  // namespace hh
