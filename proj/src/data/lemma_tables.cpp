// Minimal one-sided resolutions of the simple modules, one table per vertex
// type. Entry m lists the indecomposable summands of P^m as (block offset,
// local vertex); the final syzygy is the simple module recorded in
// syzygy_claims().

#include "hh/resolver.hpp"

namespace hh {

namespace {

using Display = std::vector<std::vector<std::pair<int, int>>>;

const std::vector<Display>& e7_displays() {
  static const std::vector<Display> d = {
      // S_{7r}
      {{{0, 0}},
       {{0, 1}, {0, 4}},
       {{0, 6}},
       {{1, 2}, {1, 5}},
       {{1, 6}, {2, 0}},
       {{2, 4}, {2, 3}, {2, 1}},
       {{2, 6}, {3, 0}},
       {{3, 2}, {3, 5}, {3, 4}},
       {{3, 6}, {4, 0}},
       {{4, 5}, {4, 3}, {4, 1}},
       {{4, 6}, {5, 0}},
       {{5, 2}, {5, 4}},
       {{6, 0}},
       {{6, 3}, {6, 5}},
       {{6, 6}}},
      // S_{7r+1}
      {{{0, 1}}, {{0, 2}}},
      // S_{7r+2}
      {{{0, 2}}, {{0, 3}}},
      // S_{7r+3}
      {{{0, 3}},
       {{0, 6}},
       {{1, 4}},
       {{2, 0}},
       {{2, 1}, {2, 5}},
       {{2, 6}},
       {{3, 2}},
       {{4, 0}},
       {{4, 3}, {4, 4}},
       {{4, 6}},
       {{5, 5}},
       {{6, 0}},
       {{6, 1}}},
      // S_{7r+4}
      {{{0, 4}}, {{0, 5}}},
      // S_{7r+5}
      {{{0, 5}},
       {{0, 6}},
       {{1, 1}},
       {{2, 0}},
       {{2, 2}, {2, 4}},
       {{2, 6}},
       {{3, 3}, {3, 5}},
       {{3, 6}, {4, 0}},
       {{4, 4}, {4, 1}},
       {{5, 0}},
       {{5, 2}, {5, 5}},
       {{5, 6}},
       {{6, 3}},
       {{7, 0}},
       {{7, 4}}},
      // S_{7r+6}
      {{{0, 6}}, {{1, 0}}},
  };
  return d;
}

const std::vector<Display>& e8_displays() {
  static const std::vector<Display> d = {
      // S_{8r}
      {{{0, 0}},
       {{0, 1}, {0, 5}},
       {{0, 7}},
       {{1, 2}, {1, 6}},
       {{1, 7}, {2, 0}},
       {{2, 5}, {2, 3}, {2, 1}},
       {{2, 7}, {3, 0}},
       {{3, 2}, {3, 4}, {3, 6}, {3, 5}},
       {{3, 7}, {3, 7}, {4, 0}},
       {{4, 5}, {4, 3}, {4, 6}, {4, 1}},
       {{4, 7}, {5, 0}, {5, 0}},
       {{5, 2}, {5, 6}, {5, 4}, {5, 1}, {5, 5}},
       {{5, 7}, {6, 0}, {5, 7}},
       {{6, 2}, {6, 3}, {6, 6}, {6, 5}},
       {{6, 7}, {7, 0}, {7, 0}},
       {{7, 3}, {7, 6}, {7, 4}, {7, 1}, {7, 5}},
       {{7, 7}, {8, 0}, {7, 7}},
       {{8, 2}, {8, 4}, {8, 6}, {8, 5}},
       {{8, 7}, {9, 0}, {9, 0}},
       {{9, 3}, {9, 6}, {9, 1}, {9, 5}},
       {{9, 7}, {10, 0}},
       {{10, 2}, {10, 4}, {10, 6}},
       {{11, 0}, {10, 7}},
       {{11, 3}, {11, 5}},
       {{12, 0}},
       {{12, 4}, {12, 6}},
       {{12, 7}}},
      // S_{8r+1}
      {{{0, 1}}, {{0, 2}}},
      // S_{8r+2}
      {{{0, 2}}, {{0, 3}}},
      // S_{8r+3}
      {{{0, 3}}, {{0, 4}}},
      // S_{8r+4}
      {{{0, 4}},
       {{0, 7}},
       {{1, 5}},
       {{2, 0}},
       {{2, 6}, {2, 1}},
       {{2, 7}},
       {{3, 2}},
       {{4, 0}},
       {{4, 3}, {4, 5}},
       {{4, 7}},
       {{5, 4}, {5, 6}},
       {{5, 7}, {6, 0}},
       {{6, 5}, {6, 1}},
       {{7, 0}},
       {{7, 2}, {7, 6}},
       {{7, 7}},
       {{8, 3}},
       {{9, 0}},
       {{9, 4}, {9, 5}},
       {{9, 7}},
       {{10, 6}},
       {{11, 0}},
       {{11, 1}}},
      // S_{8r+5}
      {{{0, 5}}, {{0, 6}}},
      // S_{8r+6}
      {{{0, 6}},
       {{0, 7}},
       {{1, 1}},
       {{2, 0}},
       {{2, 2}, {2, 5}},
       {{2, 7}},
       {{3, 3}, {3, 6}},
       {{3, 7}, {4, 0}},
       {{4, 5}, {4, 4}, {4, 1}},
       {{4, 7}, {5, 0}},
       {{5, 2}, {5, 6}, {5, 5}},
       {{5, 7}, {6, 0}},
       {{6, 6}, {6, 3}, {6, 1}},
       {{6, 7}, {7, 0}},
       {{7, 2}, {7, 4}, {7, 5}},
       {{8, 0}, {7, 7}},
       {{8, 3}, {8, 6}, {8, 5}},
       {{8, 7}, {9, 0}},
       {{9, 6}, {9, 4}, {9, 1}},
       {{9, 7}, {10, 0}},
       {{10, 2}, {10, 5}},
       {{11, 0}},
       {{11, 3}, {11, 6}},
       {{11, 7}},
       {{12, 4}},
       {{13, 0}},
       {{13, 5}}},
      // S_{8r+7}
      {{{0, 7}}, {{1, 0}}},
  };
  return d;
}

}  // namespace

const std::vector<LemmaClaim>& syzygy_claims() {
  static const std::vector<LemmaClaim> c = {
      {Family::E7, 0, 15, 7, 6}, {Family::E7, 1, 2, 1, 2},  {Family::E7, 2, 2, 1, 3},
      {Family::E7, 3, 13, 7, 1}, {Family::E7, 4, 2, 1, 5},  {Family::E7, 5, 15, 8, 4},
      {Family::E7, 6, 2, 2, 0},  {Family::E8, 0, 27, 13, 7}, {Family::E8, 1, 2, 1, 2},
      {Family::E8, 2, 2, 1, 3},  {Family::E8, 3, 2, 1, 4},  {Family::E8, 4, 23, 12, 1},
      {Family::E8, 5, 2, 1, 6},  {Family::E8, 6, 27, 14, 5}, {Family::E8, 7, 2, 2, 0},
  };
  return c;
}

const std::vector<std::vector<std::pair<int, int>>>& lemma_display(Family family, int local_vertex) {
  const auto& all = family == Family::E7 ? e7_displays() : e8_displays();
  return all.at(local_vertex);
}

ProjSum lemma_terms(Family family, int s, int m) {
  const int n = family == Family::E7 ? 7 : 8;
  const int N = n * s;
  ProjSum out;
  for (int v = 0; v < N; ++v) {
    // walk the chain of syzygies until degree m falls inside a display
    int block = v / n, local = v % n, deg = m;
    while (true) {
      const auto& disp = lemma_display(family, local);
      if (deg < static_cast<int>(disp.size())) {
        for (auto [b, u] : disp[deg]) out.summands.push_back({((n * (block + b) + u) % N + N) % N, v});
        break;
      }
      const LemmaClaim* claim = nullptr;
      for (const auto& c : syzygy_claims())
        if (c.family == family && c.local_vertex == local) claim = &c;
      deg -= claim->length;
      block += claim->block_shift;
      local = claim->local_target;
    }
  }
  return out;
}

}  // namespace hh
