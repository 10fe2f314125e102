#include "hh/quiver_algebra.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace hh {

std::string family_name(Family f) { return f == Family::E7 ? "E7" : "E8"; }

Family parse_family(const std::string& text) {
  if (text == "e7" || text == "E7") return Family::E7;
  if (text == "e8" || text == "E8") return Family::E8;
  throw std::invalid_argument("unknown family: " + text);
}

char kind_letter(ArrowKind k) {
  switch (k) {
    case ArrowKind::Alpha: return 'a';
    case ArrowKind::Beta: return 'b';
    default: return 'g';
  }
}

QuiverSpec QuiverSpec::make(Family family, int s) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  QuiverSpec q;
  q.family = family;
  q.s = s;
  std::vector<int> alpha_chain, beta_chain;
  if (family == Family::E7) {
    q.block_size = 7;
    q.alpha_len = 4;
    q.beta_len = 3;
    q.path_bound = 6;
    alpha_chain = {0, 1, 2, 3, 6};
    beta_chain = {0, 4, 5, 6};
  } else {
    q.block_size = 8;
    q.alpha_len = 5;
    q.beta_len = 3;
    q.path_bound = 7;
    alpha_chain = {0, 1, 2, 3, 4, 7};
    beta_chain = {0, 5, 6, 7};
  }
  const int n = q.block_size, N = n * s;
  for (int r = 0; r < s; ++r) {
    for (int k = 0; k < q.alpha_len; ++k)
      q.arrows.push_back({ArrowKind::Alpha, r, k, r * q.alpha_len + k, n * r + alpha_chain[k],
                          n * r + alpha_chain[k + 1]});
    for (int k = 0; k < q.beta_len; ++k)
      q.arrows.push_back({ArrowKind::Beta, r, k, r * q.beta_len + k, n * r + beta_chain[k],
                          n * r + beta_chain[k + 1]});
    q.arrows.push_back({ArrowKind::Gamma, r, 0, r, n * r + n - 1, (n * (r + 1)) % N});
  }
  q.out.assign(N, {});
  q.in.assign(N, {});
  for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
    q.out[q.arrows[a].source].push_back(a);
    q.in[q.arrows[a].target].push_back(a);
  }
  return q;
}

int QuiverSpec::vertex(long long a) const {
  long long N = num_vertices();
  return static_cast<int>(((a % N) + N) % N);
}

int QuiverSpec::displacement(int arrow) const {
  const Arrow& a = arrows[arrow];
  return vertex(a.target - a.source) == 0 ? num_vertices() : vertex(a.target - a.source);
}

int QuiverSpec::find_arrow(ArrowKind kind, int index) const {
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
    if (arrows[a].kind == kind && arrows[a].index == index) return a;
  return -1;
}

std::string QuiverSpec::arrow_label(int arrow) const {
  return fmt::format("{}{}", kind_letter(arrows[arrow].kind), arrows[arrow].index);
}

std::string PathWord::label(const QuiverSpec& q) const {
  if (arrows.empty()) return fmt::format("e{}", source);
  std::string out;
  for (size_t k = 0; k < arrows.size(); ++k) {
    if (k) out += '.';
    out += q.arrow_label(arrows[k]);
  }
  return out;
}

void add_scaled(AlgebraElement& acc, const AlgebraElement& x, const Scalar& c) {
  if (c.is_zero() || x.empty()) return;
  AlgebraElement out;
  out.reserve(acc.size() + x.size());
  size_t i = 0, j = 0;
  while (i < acc.size() || j < x.size()) {
    if (j == x.size() || (i < acc.size() && acc[i].first < x[j].first)) {
      out.push_back(std::move(acc[i++]));
    } else if (i == acc.size() || x[j].first < acc[i].first) {
      out.emplace_back(x[j].first, x[j].second * c);
      ++j;
    } else {
      Scalar v = acc[i].second + x[j].second * c;
      if (!v.is_zero()) out.emplace_back(acc[i].first, v);
      ++i, ++j;
    }
  }
  acc = std::move(out);
}

AlgebraElement scaled(const AlgebraElement& x, const Scalar& c) {
  AlgebraElement out;
  if (c.is_zero()) return out;
  out.reserve(x.size());
  for (const auto& [b, v] : x) out.emplace_back(b, v * c);
  return out;
}

std::vector<PathWord> enumerate_paths(const QuiverSpec& q, int max_len) {
  std::vector<PathWord> out;
  std::vector<PathWord> frontier;
  for (int v = 0; v < q.num_vertices(); ++v) frontier.push_back({v, v, {}});
  for (int len = 0; len <= max_len; ++len) {
    std::vector<PathWord> next;
    for (const auto& p : frontier) {
      out.push_back(p);
      if (len == max_len) continue;
      for (int a : q.out[p.target]) {
        PathWord w = p;
        w.arrows.push_back(a);
        w.target = q.arrows[a].target;
        next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

struct Relation {
  int source;
  std::vector<std::pair<std::vector<int>, int>> terms;  // arrows, coefficient
};

std::vector<Relation> ideal_generators(const QuiverSpec& q) {
  std::vector<Relation> rels;
  const int s = q.s;
  auto chain = [&](ArrowKind k, int r) {
    std::vector<int> out;
    int len = k == ArrowKind::Alpha ? q.alpha_len : q.beta_len;
    for (int p = 0; p < len; ++p) out.push_back(q.find_arrow(k, ((r % s) + s) % s * len + p));
    return out;
  };
  for (int r = 0; r < s; ++r) {
    int src = q.block_size * r;
    auto alpha = chain(ArrowKind::Alpha, r), beta = chain(ArrowKind::Beta, r);
    auto beta_next = chain(ArrowKind::Beta, r + 1), alpha_next = chain(ArrowKind::Alpha, r + 1);
    int gamma = q.find_arrow(ArrowKind::Gamma, r);
    rels.push_back({src, {{alpha, 1}, {beta, -1}}});
    int top = q.arrows[gamma].source;
    rels.push_back({q.arrows[alpha.back()].source, {{{alpha.back(), gamma, beta_next.front()}, 1}}});
    rels.push_back({q.arrows[beta.back()].source, {{{beta.back(), gamma, alpha_next.front()}, 1}}});
    for (int i = 1; i <= 3; ++i) {
      std::vector<int> w(beta.end() - i, beta.end());
      w.push_back(gamma);
      w.insert(w.end(), beta_next.begin(), beta_next.begin() + (4 - i));
      rels.push_back({q.arrows[w.front()].source, {{w, 1}}});
    }
    (void)top;
  }
  return rels;
}

// kind sequence; larger words are eliminated first so that alpha spellings survive
std::vector<int> kind_key(const QuiverSpec& q, const std::vector<int>& arrows) {
  std::vector<int> k;
  for (int a : arrows) k.push_back(static_cast<int>(q.arrows[a].kind));
  return k;
}

uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Algebra Algebra::build(Family family, int s, FieldSpec field) {
  Algebra alg;
  alg.quiver_ = QuiverSpec::make(family, s);
  alg.field_ = field;
  const QuiverSpec& q = alg.quiver_;
  const int L = q.path_bound;
  const int N = q.num_vertices();

  auto paths = enumerate_paths(q, L - 1);
  auto disp_of = [&](const std::vector<int>& arrows) {
    int d = 0;
    for (int a : arrows) d += q.displacement(a);
    return d;
  };

  // group paths by (source, displacement); the ideal is homogeneous for this grading
  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (int i = 0; i < static_cast<int>(paths.size()); ++i)
    classes[{paths[i].source, disp_of(paths[i].arrows)}].push_back(i);
  std::map<std::vector<int>, std::pair<std::pair<int, int>, int>> coord;  // key -> (class, slot)
  auto key_of = [](int source, const std::vector<int>& arrows) {
    std::vector<int> k{source};
    k.insert(k.end(), arrows.begin(), arrows.end());
    return k;
  };
  for (auto& [cls, members] : classes) {
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      auto ka = kind_key(q, paths[a].arrows), kb = kind_key(q, paths[b].arrows);
      if (ka != kb) return ka > kb;
      return paths[a].arrows > paths[b].arrows;
    });
    for (int slot = 0; slot < static_cast<int>(members.size()); ++slot)
      coord[key_of(paths[members[slot]].source, paths[members[slot]].arrows)] = {cls, slot};
  }
  std::map<std::pair<int, int>, Subspace> ideal;
  for (auto& [cls, members] : classes) ideal.emplace(cls, Subspace(field, members.size()));

  std::vector<std::vector<int>> ending_at(N), starting_at(N);
  for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
    ending_at[paths[i].target].push_back(i);
    starting_at[paths[i].source].push_back(i);
  }
  for (const auto& rel : ideal_generators(q)) {
    int rel_target = q.arrows[rel.terms[0].first.back()].target;
    for (int u : ending_at[rel.source])
      for (int v : starting_at[rel_target]) {
        std::optional<std::pair<int, int>> cls;
        Vec vec;
        for (const auto& [w, c] : rel.terms) {
          std::vector<int> full = paths[u].arrows;
          full.insert(full.end(), w.begin(), w.end());
          full.insert(full.end(), paths[v].arrows.begin(), paths[v].arrows.end());
          if (static_cast<int>(full.size()) >= L) continue;
          auto [c2, slot] = coord.at(key_of(paths[u].source, full));
          if (!cls) {
            cls = c2;
            vec.assign(classes[c2].size(), field.zero());
          } else if (*cls != c2) {
            throw std::logic_error("relation is not homogeneous");
          }
          vec[slot] += field.from_int(c);
        }
        if (cls) ideal[*cls].add(vec);
      }
  }

  // normal words are the non-pivot slots
  std::vector<int> normal_paths;
  for (auto& [cls, members] : classes) {
    const auto& piv = ideal[cls].pivots();
    for (int slot = 0; slot < static_cast<int>(members.size()); ++slot)
      if (!std::binary_search(piv.begin(), piv.end(), static_cast<size_t>(slot)))
        normal_paths.push_back(members[slot]);
  }
  std::sort(normal_paths.begin(), normal_paths.end(), [&](int a, int b) {
    const auto &pa = paths[a], &pb = paths[b];
    if (pa.length() != pb.length()) return pa.length() < pb.length();
    if (pa.source != pb.source) return pa.source < pb.source;
    return pa.arrows < pb.arrows;
  });
  std::map<std::vector<int>, int> basis_index;
  for (int p : normal_paths) {
    basis_index[key_of(paths[p].source, paths[p].arrows)] = static_cast<int>(alg.basis_.size());
    alg.basis_.push_back(paths[p]);
    alg.disp_.push_back(disp_of(paths[p].arrows));
  }

  for (auto& [cls, members] : classes) {
    const Subspace& sub = ideal[cls];
    for (int slot = 0; slot < static_cast<int>(members.size()); ++slot) {
      Vec e(members.size(), field.zero());
      e[slot] = field.one();
      Vec red = sub.reduce(e);
      AlgebraElement el;
      for (int k = 0; k < static_cast<int>(members.size()); ++k)
        if (!red[k].is_zero())
          el.emplace_back(basis_index.at(key_of(paths[members[k]].source, paths[members[k]].arrows)),
                          red[k]);
      std::sort(el.begin(), el.end(), [](auto& a, auto& b) { return a.first < b.first; });
      const auto& p = paths[members[slot]];
      alg.normal_forms_[key_of(p.source, p.arrows)] = std::move(el);
    }
  }

  const int D = static_cast<int>(alg.basis_.size());
  alg.idem_.assign(N, -1);
  alg.arrow_elem_.assign(q.arrows.size(), -1);
  alg.blocks_.assign(size_t(N) * N, {});
  alg.pos_in_block_.assign(D, -1);
  for (int b = 0; b < D; ++b) {
    const auto& w = alg.basis_[b];
    if (w.length() == 0) alg.idem_[w.source] = b;
    if (w.length() == 1) alg.arrow_elem_[w.arrows[0]] = b;
    auto& blk = alg.blocks_[size_t(w.target) * N + w.source];
    alg.pos_in_block_[b] = static_cast<int>(blk.size());
    blk.push_back(b);
  }
  alg.table_.assign(size_t(D) * D, {});
  for (int x = 0; x < D; ++x)
    for (int y = 0; y < D; ++y) {
      if (alg.right(x) != alg.left(y)) continue;
      if (alg.length(x) + alg.length(y) >= L) continue;
      std::vector<int> w = alg.basis_[y].arrows;
      w.insert(w.end(), alg.basis_[x].arrows.begin(), alg.basis_[x].arrows.end());
      alg.table_[size_t(x) * D + y] = alg.normal_forms_.at(key_of(alg.basis_[y].source, w));
    }
  return alg;
}

AlgebraElement Algebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement acc;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      const auto& p = product(a, b);
      if (!p.empty()) add_scaled(acc, p, ca * cb);
    }
  return acc;
}

AlgebraElement Algebra::reduce_path(int source, const std::vector<int>& arrows) const {
  int cur = source;
  for (int a : arrows) {
    if (quiver_.arrows[a].source != cur) throw std::invalid_argument("arrows do not compose");
    cur = quiver_.arrows[a].target;
  }
  if (static_cast<int>(arrows.size()) >= quiver_.path_bound) return {};
  std::vector<int> key{source};
  key.insert(key.end(), arrows.begin(), arrows.end());
  return normal_forms_.at(key);
}

std::optional<int> Algebra::find_word(int source, const std::vector<int>& arrows) const {
  for (int b = 0; b < static_cast<int>(dim()); ++b)
    if (basis_[b].source == source && basis_[b].arrows == arrows) return b;
  return std::nullopt;
}

std::optional<AlgebraElement> Algebra::canonical_path(long long a, long long b) const {
  long long d = b - a;
  if (d < 0) return std::nullopt;
  int src = quiver_.vertex(a);
  std::vector<int> hits;
  for (int x = 0; x < static_cast<int>(dim()); ++x)
    if (right(x) == src && disp_[x] == d) hits.push_back(x);
  if (hits.empty()) return std::nullopt;
  if (hits.size() > 1)
    throw AmbiguousPath(fmt::format("space of paths {}->{} has dimension {}", a, b, hits.size()));
  return basis_element(hits[0]);
}

std::string Algebra::hash() const {
  std::string desc = fmt::format("{}|{}|{}|", family_name(quiver_.family), quiver_.s,
                                 field_.characteristic());
  for (const auto& w : basis_) desc += w.label(quiver_) + ";";
  for (size_t i = 0; i < table_.size(); ++i) {
    if (table_[i].empty()) continue;
    desc += std::to_string(i) + ":";
    for (const auto& [b, c] : table_[i]) desc += std::to_string(b) + "*" + c.str() + ",";
  }
  return fmt::format("{:016x}", fnv1a(desc));
}

nlohmann::json Algebra::to_json() const {
  nlohmann::json j;
  j["format"] = "hhe78-algebra";
  j["version"] = 1;
  j["family"] = family_name(quiver_.family);
  j["s"] = quiver_.s;
  j["char"] = field_.characteristic();
  j["vertices"] = num_vertices();
  auto& arr = j["arrows"] = nlohmann::json::array();
  for (int a = 0; a < static_cast<int>(quiver_.arrows.size()); ++a)
    arr.push_back({{"label", quiver_.arrow_label(a)},
                   {"source", quiver_.arrows[a].source},
                   {"target", quiver_.arrows[a].target}});
  auto& basis = j["basis"] = nlohmann::json::array();
  for (const auto& w : basis_)
    basis.push_back({{"source", w.source}, {"target", w.target}, {"word", w.label(quiver_)}});
  auto& mult = j["mult"] = nlohmann::json::array();
  const size_t D = dim();
  for (size_t i = 0; i < table_.size(); ++i) {
    if (table_[i].empty()) continue;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [b, c] : table_[i]) terms.push_back({b, c.str()});
    mult.push_back({i / D, i % D, terms});
  }
  j["hash"] = hash();
  return j;
}

AlgebraAutomorphism::AlgebraAutomorphism(const Algebra& alg, std::vector<int> vertex_map,
                                         std::vector<std::pair<int, Scalar>> arrow_images)
    : alg_(&alg), vmap_(std::move(vertex_map)), arrow_images_(std::move(arrow_images)) {
  const auto& q = alg.quiver();
  for (int b = 0; b < static_cast<int>(alg.dim()); ++b) {
    const auto& w = alg.word(b);
    Scalar sign = alg.field().one();
    std::vector<int> mapped;
    for (int a : w.arrows) {
      sign *= arrow_images_[a].second;
      mapped.push_back(arrow_images_[a].first);
    }
    int src = vmap_[w.source];
    if (!mapped.empty() && q.arrows[mapped[0]].source != src)
      throw std::logic_error("automorphism does not respect arrow sources");
    images_.push_back(scaled(alg.reduce_path(src, mapped), sign));
  }
}

AlgebraAutomorphism AlgebraAutomorphism::identity(const Algebra& alg) {
  std::vector<int> v(alg.num_vertices());
  std::iota(v.begin(), v.end(), 0);
  std::vector<std::pair<int, Scalar>> a;
  for (int i = 0; i < static_cast<int>(alg.quiver().arrows.size()); ++i)
    a.emplace_back(i, alg.field().one());
  return AlgebraAutomorphism(alg, v, a);
}

AlgebraElement AlgebraAutomorphism::apply(const AlgebraElement& x) const {
  AlgebraElement acc;
  for (const auto& [b, c] : x) add_scaled(acc, images_[b], c);
  return acc;
}

AlgebraAutomorphism AlgebraAutomorphism::compose(const AlgebraAutomorphism& other) const {
  AlgebraAutomorphism out;
  out.alg_ = alg_;
  for (int v : other.vmap_) out.vmap_.push_back(vmap_[v]);
  for (const auto& [a, c] : other.arrow_images_) {
    const auto& [a2, c2] = arrow_images_[a];
    out.arrow_images_.emplace_back(a2, c * c2);
  }
  for (const auto& img : other.images_) out.images_.push_back(apply(img));
  return out;
}

AlgebraAutomorphism AlgebraAutomorphism::power(int k) const {
  if (k < 0) throw std::invalid_argument("negative automorphism power");
  AlgebraAutomorphism out = identity(*alg_);
  for (int i = 0; i < k; ++i) out = compose(out);
  return out;
}

bool AlgebraAutomorphism::is_identity() const {
  for (int v = 0; v < static_cast<int>(vmap_.size()); ++v)
    if (vmap_[v] != v) return false;
  for (int b = 0; b < static_cast<int>(images_.size()); ++b)
    if (images_[b].size() != 1 || images_[b][0].first != b || !images_[b][0].second.is_one())
      return false;
  return true;
}

AlgebraAutomorphism standard_automorphism(const Algebra& alg) {
  const auto& q = alg.quiver();
  const FieldSpec& F = alg.field();
  const int shift = q.family == Family::E7 ? 9 : 15;
  const int N = q.num_vertices();
  std::vector<int> vmap(N);
  for (int v = 0; v < N; ++v) vmap[v] = q.vertex(v + shift * q.block_size);
  std::vector<std::pair<int, Scalar>> arrows;
  for (const auto& a : q.arrows) {
    int len = a.kind == ArrowKind::Alpha ? q.alpha_len : a.kind == ArrowKind::Beta ? q.beta_len : 1;
    int target_index = (a.block + shift) % q.s * len + a.position;
    bool plus = false;
    if (a.kind == ArrowKind::Beta) plus = a.position == 0;
    if (a.kind == ArrowKind::Alpha && q.family == Family::E8) plus = a.position == q.alpha_len - 1;
    arrows.emplace_back(q.find_arrow(a.kind, target_index), plus ? F.one() : -F.one());
  }
  return AlgebraAutomorphism(alg, vmap, arrows);
}

int automorphism_order(const AlgebraAutomorphism& phi, int limit) {
  AlgebraAutomorphism cur = phi;
  for (int k = 1; k <= limit; ++k) {
    if (cur.is_identity()) return k;
    cur = phi.compose(cur);
  }
  throw std::runtime_error("automorphism order exceeds limit");
}

int predicted_order(Family family, int s, uint32_t characteristic) {
  int g = std::gcd(s, family == Family::E7 ? 9 : 15);
  int m0 = s / g;
  if (characteristic == 2 || m0 % 2 == 0) return m0;
  return 2 * m0;
}

}  // namespace hh
