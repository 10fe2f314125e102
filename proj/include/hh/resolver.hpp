#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include "hh/bimodules.hpp"

namespace hh {

// Q_0 .. Q_n with d[m]: Q_{m+1} -> Q_m; the map out of Q_0 is multiplication.
class Resolution {
 public:
  const Algebra& algebra() const { return *alg_; }
  int max_degree() const { return static_cast<int>(terms_.size()) - 1; }
  const ProjSum& term(int m) const { return terms_.at(m); }
  const BimoduleMap& d(int m) const { return d_.at(m); }
  const BlockBasis& basis(int m) const { return *bases_.at(m); }

  // solves out_m(x) = y inside block (a,b), where out_0 = epsilon and out_m = d_{m-1}
  std::optional<Vec> preimage(int m, int a, int b, const Vec& y) const;
  const LinearSolver& out_solver(int m, int a, int b) const;
  // matrix of out_m restricted to block (a,b)
  Matrix out_block_matrix(int m, int a, int b) const;
  // image of a Q_m element under out_m, in block coordinates of Q_{m-1} (or e_a R e_b)
  Vec out_image(int m, const BimodElement& x, int a, int b) const;

  // exactness data: dim ker out_m and rank out_{m+1} per block
  size_t kernel_dim(int m) const;
  size_t image_dim(int m) const;  // dim im d_m inside Q_m

 private:
  friend Resolution build_resolution(const Algebra&, int);
  friend void extend_resolution(Resolution&, int);
  friend Resolution assemble_resolution(const Algebra&, std::vector<ProjSum>,
                                        std::vector<BimoduleMap>);
  void push_term(ProjSum q);

  const Algebra* alg_ = nullptr;
  std::vector<ProjSum> terms_;
  std::vector<BimoduleMap> d_;
  std::vector<std::shared_ptr<BlockBasis>> bases_;
  std::vector<std::vector<LinearSolver>> solvers_;
};

Resolution build_resolution(const Algebra& alg, int max_degree);
void extend_resolution(Resolution& res, int max_degree);
// rebuilds the derived data from stored terms and differentials (cache loading)
Resolution assemble_resolution(const Algebra& alg, std::vector<ProjSum> terms,
                               std::vector<BimoduleMap> d);

struct ResolutionCheck {
  bool epsilon_d0_zero = true;
  std::vector<int> dd_nonzero;        // m with d_m d_{m+1} != 0
  std::vector<int> inexact;           // m with dim ker out_m != dim im d_m
  std::vector<int> non_minimal;       // m with an entry outside the radical
  bool ok() const {
    return epsilon_d0_zero && dd_nonzero.empty() && inexact.empty() && non_minimal.empty();
  }
};
ResolutionCheck check_resolution(const Resolution& res);

// ---- predicted terms ----

int f2(int x, int y);
int f3(int x, int y1, int y2);

enum class ColumnReading { Block8, Literal7 };

// closed formulas for 0 <= m <= 16 (E7) / 28 (E8); larger degrees use the twist rule
ProjSum predicted_terms(Family family, int s, int m, ColumnReading reading = ColumnReading::Block8);
int resolution_period(Family family);  // 17 or 29

// terms assembled from the simple-module resolution tables via Happel's lemma
ProjSum lemma_terms(Family family, int s, int m);

// ---- one-sided resolutions of simple modules ----

struct SimpleResolution {
  int vertex = 0;
  std::vector<std::vector<int>> terms;  // P^m as list of vertices
  // images of generators: per degree m >= 1, per summand l of P^m, terms (k, path, coeff) in P^{m-1}
  std::vector<std::vector<std::vector<std::tuple<int, int, Scalar>>>> maps;
  std::vector<size_t> syzygy_dim;                 // dim Omega^m, m >= 1
  std::vector<std::vector<int>> syzygy_support;   // vertices a with e_a Omega^m != 0
  std::optional<int> syzygy_simple(int m) const;  // w if Omega^m is the simple S_w
  bool exact = true;
  bool minimal = true;
};

SimpleResolution simple_resolution(const Algebra& alg, int v, int length);

struct LemmaClaim {
  Family family;
  int local_vertex;
  int length;       // Omega^length
  int block_shift;  // target vertex = n(r + block_shift) + local_target
  int local_target;
};
const std::vector<LemmaClaim>& syzygy_claims();
// the lemma display terms, listed as (block offset, local vertex)
const std::vector<std::vector<std::pair<int, int>>>& lemma_display(Family family, int local_vertex);

struct HappelReport {
  int degree = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};
HappelReport verify_happel(const Algebra& alg, const Resolution& res,
                           const std::vector<SimpleResolution>& simples, int m);

// ---- periodicity ----

struct PeriodicityReport {
  int degree = 0;                  // p: Omega^p(R) = Im d_{p-1}
  int twist_power = 0;             // k with Omega^p(R) = 1_R_{phi^k}
  bool dims_match = false;         // dim Im d_{p-1} = dim R
  bool iso_found = false;
  size_t solution_dim = 0;
  std::string detail;
  // g(generator l) in e_{i_l} R e_{phi^k(j_l)} for the chosen isomorphism
  std::vector<AlgebraElement> map_values;
};
// searches for an isomorphism Im d_{p-1} -> R twisted on the right by phi^k
PeriodicityReport find_twisted_iso(const Resolution& res, const AlgebraAutomorphism& phi_k,
                                   int p, int k);

struct PeriodReport {
  int automorphism_order = 0;
  int predicted_order = 0;
  PeriodicityReport first;  // p = 17 / 29
  int minimal_period = -1;  // least p > 0 with Omega^p(R) = R, -1 if outside the window
  int predicted_period = 0;
  std::vector<int> candidate_degrees;
};
PeriodReport verify_periodicity(const Resolution& res);

}  // namespace hh
