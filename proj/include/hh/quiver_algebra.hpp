#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hh/exactla.hpp"

namespace hh {

enum class Family { E7, E8 };
enum class ArrowKind { Alpha, Beta, Gamma };

std::string family_name(Family f);
Family parse_family(const std::string& text);
char kind_letter(ArrowKind k);

struct Arrow {
  ArrowKind kind;
  int block;     // r
  int position;  // position along its chain inside the block
  int index;     // global index among arrows of the same kind
  int source;
  int target;
};

struct QuiverSpec {
  Family family = Family::E7;
  int s = 1;
  int block_size = 7;  // n
  int alpha_len = 4;
  int beta_len = 3;
  int path_bound = 6;  // paths of this length vanish
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> out, in;

  static QuiverSpec make(Family family, int s);
  int num_vertices() const { return block_size * s; }
  int vertex(long long a) const;
  // step of an arrow in the universal cover (vertex labels unreduced)
  int displacement(int arrow) const;
  int find_arrow(ArrowKind kind, int index) const;
  std::string arrow_label(int arrow) const;
};

// Arrow sequence in traversal order starting at `source`.
struct PathWord {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;
  size_t length() const { return arrows.size(); }
  std::string label(const QuiverSpec& q) const;
};

// Sparse combination of basis indices, sorted, no zero coefficients.
using AlgebraElement = std::vector<std::pair<int, Scalar>>;

void add_scaled(AlgebraElement& acc, const AlgebraElement& x, const Scalar& c);
AlgebraElement scaled(const AlgebraElement& x, const Scalar& c);

struct AmbiguousPath : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// R = K[Q]/I. Products follow the convention x·y = "walk y, then x", so a
// basis word x lies in e_{left(x)} R e_{right(x)} with right(x) its start
// vertex and left(x) its end vertex.
class Algebra {
 public:
  static Algebra build(Family family, int s, FieldSpec field);

  const QuiverSpec& quiver() const { return quiver_; }
  const FieldSpec& field() const { return field_; }
  size_t dim() const { return basis_.size(); }
  int num_vertices() const { return quiver_.num_vertices(); }

  const PathWord& word(int b) const { return basis_[b]; }
  int left(int b) const { return basis_[b].target; }
  int right(int b) const { return basis_[b].source; }
  int length(int b) const { return static_cast<int>(basis_[b].length()); }
  int displacement(int b) const { return disp_[b]; }
  int idempotent(int v) const { return idem_[v]; }
  int arrow_element(int a) const { return arrow_elem_[a]; }
  // basis of e_a R e_b
  const std::vector<int>& block(int a, int b) const { return blocks_[a * num_vertices() + b]; }
  int position_in_block(int x) const { return pos_in_block_[x]; }

  const AlgebraElement& product(int x, int y) const { return table_[size_t(x) * dim() + y]; }
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement basis_element(int b) const { return {{b, field_.one()}}; }
  // normal form of an arbitrary path given in traversal order
  AlgebraElement reduce_path(int source, const std::vector<int>& arrows) const;
  std::optional<int> find_word(int source, const std::vector<int>& arrows) const;

  // w_{a->b} with a, b unreduced vertex labels on the universal cover
  std::optional<AlgebraElement> canonical_path(long long a, long long b) const;

  std::string hash() const;
  nlohmann::json to_json() const;

 private:
  QuiverSpec quiver_;
  FieldSpec field_;
  std::vector<PathWord> basis_;
  std::vector<int> disp_, idem_, arrow_elem_, pos_in_block_;
  std::vector<std::vector<int>> blocks_;
  std::vector<AlgebraElement> table_;
  // all paths below the length bound, with their normal forms
  std::map<std::vector<int>, AlgebraElement> normal_forms_;
};

// Enumerates every path of length < bound; used by the builder and as an
// independent oracle in tests.
std::vector<PathWord> enumerate_paths(const QuiverSpec& q, int max_len);

class AlgebraAutomorphism {
 public:
  AlgebraAutomorphism() = default;
  AlgebraAutomorphism(const Algebra& alg, std::vector<int> vertex_map,
                      std::vector<std::pair<int, Scalar>> arrow_images);
  static AlgebraAutomorphism identity(const Algebra& alg);

  int vertex(int v) const { return vmap_[v]; }
  const AlgebraElement& image(int b) const { return images_[b]; }
  AlgebraElement apply(const AlgebraElement& x) const;
  // this after other
  AlgebraAutomorphism compose(const AlgebraAutomorphism& other) const;
  AlgebraAutomorphism power(int k) const;
  bool is_identity() const;

 private:
  const Algebra* alg_ = nullptr;
  std::vector<int> vmap_;
  std::vector<std::pair<int, Scalar>> arrow_images_;
  std::vector<AlgebraElement> images_;
};

// sigma for E7, rho for E8
AlgebraAutomorphism standard_automorphism(const Algebra& alg);
int automorphism_order(const AlgebraAutomorphism& phi, int limit = 1000);
int predicted_order(Family family, int s, uint32_t characteristic);

}  // namespace hh
