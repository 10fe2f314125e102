// Degree conditions and product tables of the presentations of HH*(R_s) (E7)
// and HH*(R'_s) (E8). X~(k) in a product means X(k) below degree M and T X(k) above.

#include <algorithm>
#include <initializer_list>

#include "hh/ring_structure.hpp"

namespace hh {

namespace {

TypeCondition even_or(int type, int r, int c, uint32_t ch) { return {type, r, c, false, ch, true}; }
TypeCondition odd_or(int type, int r, int c, uint32_t ch) { return {type, r, c, true, ch, true}; }
TypeCondition even_and(int type, int r, int c, uint32_t ch) { return {type, r, c, false, ch, false}; }
TypeCondition odd_and(int type, int r, int c, uint32_t ch) { return {type, r, c, true, ch, false}; }

class TableBuilder {
 public:
  explicit TableBuilder(PresentationData& d) : d_(d) {}

  void zero(int a, std::initializer_list<int> bs) {
    for (int b : bs) d_.cells.push_back({a, b, 0, 0, 0, 0, DegreeGate::Any, ""});
  }
  void zero_range(int a, int lo, int hi) {
    for (int b = lo; b <= hi; ++b) d_.cells.push_back({a, b, 0, 0, 0, 0, DegreeGate::Any, ""});
  }
  // a*b = (per_s*s + constant) X~(k)
  void cell(int a, int b, int k, int per_s, int constant) {
    d_.cells.push_back({a, b, k, per_s, constant, 0, DegreeGate::Any, ""});
  }
  void one(int a, int b, int k) { cell(a, b, k, 0, 1); }
  void minus(int a, int b, int k) { cell(a, b, k, 0, -1); }
  void rel(const char* label, int a, int b, int k, int per_s, uint32_t ch) {
    d_.cells.push_back({a, b, k, per_s, 0, ch, DegreeGate::Any, label});
  }
  void gated(int a, int b, int k, int constant, uint32_t ch, DegreeGate gate) {
    d_.cells.push_back({a, b, k, 0, constant, ch, gate, ""});
  }
  // fills every unlisted pair of rows x cols with zero
  void complete(std::initializer_list<int> rows, std::initializer_list<int> cols) {
    for (int a : rows)
      for (int b : cols) {
        bool seen = std::any_of(d_.cells.begin(), d_.cells.end(), [&](const ProductCell& c) {
          return (c.left == a && c.right == b) || (c.left == b && c.right == a);
        });
        if (!seen) d_.cells.push_back({a, b, 0, 0, 0, 0, DegreeGate::Any, ""});
      }
  }

 private:
  PresentationData& d_;
};

PresentationData make_e7() {
  PresentationData d;
  d.family = Family::E7;
  d.num_types = 18;
  d.first_extra = 19;
  d.last_extra = 25;
  d.char2_excluded = 19;
  d.conditions = {
      even_or(1, 0, 0, 2),   odd_or(2, 0, 1, 2),    even_or(3, 1, 0, 2),   odd_or(4, 3, 0, 2),
      odd_or(5, 4, 1, 2),    even_and(6, 5, 0, 3),  even_and(7, 6, 1, 3),  odd_or(8, 7, 0, 2),
      even_or(9, 8, 0, 2),   odd_or(10, 8, 1, 2),   even_or(11, 9, 0, 2),  odd_and(12, 10, 0, 3),
      odd_and(13, 11, 0, 3), even_or(14, 12, 0, 2), even_or(15, 13, 0, 2), odd_or(16, 15, 0, 2),
      even_or(17, 16, 0, 2), odd_or(18, 16, 1, 2),
  };
  d.composites = {{5, 3, 4}, {10, 3, 8}, {11, 3, 9}, {15, 3, 14}, {18, 3, 16}};

  TableBuilder t(d);
  for (int i = 1; i <= 25; ++i) t.gated(1, i, i, 1, 0, DegreeGate::Zero);

  // X(3) row
  t.zero(3, {2, 3, 5, 6, 7, 10, 11, 12, 13, 15, 18});
  t.one(3, 4, 5);
  t.one(3, 8, 10);
  t.one(3, 9, 11);
  t.one(3, 14, 15);
  t.one(3, 16, 18);
  t.cell(3, 17, 2, 0, 3);

  // first table
  t.zero(2, {2, 4, 6, 7, 8});
  t.rel("r1", 4, 4, 7, -1, 3);
  t.cell(4, 6, 10, -1, 0);
  t.zero(4, {7, 8});
  t.zero(6, {6, 7, 8});
  t.zero(7, {7, 8});
  t.zero(8, {8});

  // second table
  t.one(2, 9, 10);
  t.zero(2, {12, 13, 14, 16});
  t.minus(2, 17, 18);
  t.rel("r2", 4, 9, 13, -1, 3);
  t.cell(4, 12, 15, -1, 0);
  t.zero(4, {13});
  t.one(4, 14, 16);
  t.zero(4, {16, 17});
  t.cell(6, 9, 15, 1, 0);
  t.zero(6, {12});
  t.minus(6, 13, 18);
  t.cell(6, 14, 2, -1, 0);
  t.zero(6, {16});
  t.cell(6, 17, 5, 1, 0);
  t.zero(7, {9});
  t.one(7, 12, 18);
  t.zero(7, {13, 14, 16, 17});
  t.minus(8, 9, 16);
  t.cell(8, 12, 2, -1, 0);
  t.zero(8, {13, 14, 16});
  t.rel("r3", 8, 17, 7, 1, 3);

  // third table
  t.one(9, 9, 17);
  t.cell(9, 12, 3, -1, 0);
  t.zero(9, {13});
  t.one(9, 14, 4);
  t.rel("r4", 9, 16, 7, -1, 3);
  t.cell(9, 17, 8, 0, 3);
  t.zero(12, {12});
  t.one(12, 13, 5);
  t.minus(12, 14, 6);
  t.cell(12, 16, 10, 1, 0);
  t.cell(12, 17, 11, -1, 0);
  t.zero(13, {13});
  t.one(13, 14, 7);
  t.zero(13, {16, 17});
  t.minus(14, 14, 8);
  t.zero(14, {16});
  t.rel("r5", 14, 17, 13, -1, 3);
  t.zero(16, {16, 17});
  t.cell(17, 17, 16, 0, -3);

  // s = 1 extras at degree 0
  for (int i = 19; i <= 25; ++i) {
    if (i >= 22) {
      t.gated(1, i, 2, 1, 2, DegreeGate::Positive);
      t.gated(9, i, 10, 1, 2, DegreeGate::Any);
      t.gated(17, i, 18, 1, 2, DegreeGate::Any);
    } else {
      t.gated(1, i, 0, 0, 0, DegreeGate::Positive);
      t.zero(9, {i});
      t.zero(17, {i});
    }
  }
  for (int j = 2; j <= 25; ++j) {
    if (j == 9 || j == 17) continue;
    for (int i = std::max(j, 19); i <= 25; ++i) t.zero(j, {i});
  }
  return d;
}

PresentationData make_e8() {
  PresentationData d;
  d.family = Family::E8;
  d.num_types = 28;
  d.first_extra = 29;
  d.last_extra = 36;
  d.conditions = {
      even_or(1, 0, 0, 2),    even_or(2, 1, 0, 2),    odd_or(3, 3, 0, 2),     odd_or(4, 4, 1, 2),
      even_and(5, 5, 0, 3),   even_and(6, 6, 1, 3),   odd_or(7, 7, 0, 2),     odd_or(8, 8, 1, 2),
      even_and(9, 9, 0, 5),   odd_and(10, 10, 0, 3),  even_and(11, 10, 1, 5), odd_and(12, 11, 0, 3),
      even_or(13, 12, 0, 2),  even_or(14, 13, 0, 2),  odd_or(15, 15, 0, 2),   odd_or(16, 16, 1, 2),
      even_and(17, 17, 0, 3), odd_and(18, 18, 0, 5),  even_and(19, 18, 1, 3), odd_and(20, 19, 0, 5),
      even_or(21, 20, 0, 2),  even_or(22, 21, 0, 2),  odd_and(23, 22, 0, 3),  odd_and(24, 23, 0, 3),
      even_or(25, 24, 0, 2),  even_or(26, 25, 0, 2),  odd_or(27, 27, 0, 2),   odd_or(28, 28, 1, 2),
  };
  d.composites = {{4, 2, 3}, {8, 2, 7}, {14, 2, 13}, {16, 2, 15}, {22, 2, 21}, {26, 2, 25}, {28, 2, 27}};

  TableBuilder t(d);
  for (int i = 1; i <= 36; ++i) t.gated(1, i, i, 1, 0, DegreeGate::Zero);

  // X(2) row
  t.zero(2, {2, 4, 5, 6, 8, 9, 10, 11, 12, 14, 16, 17, 18, 19, 20, 22, 23, 24, 26, 28});
  t.one(2, 3, 4);
  t.one(2, 7, 8);
  t.one(2, 13, 14);
  t.one(2, 15, 16);
  t.one(2, 21, 22);
  t.one(2, 25, 26);
  t.one(2, 27, 28);

  // first table
  t.rel("r1", 3, 3, 6, 1, 3);
  t.cell(3, 5, 8, 1, 0);
  t.rel("r2", 3, 7, 11, -2, 5);
  t.cell(3, 10, 14, -1, 0);
  t.one(3, 13, 15);
  t.one(5, 12, 16);
  t.one(5, 13, 17);
  t.minus(6, 10, 16);
  t.one(6, 13, 19);
  t.cell(7, 9, 16, 1, 0);
  t.minus(7, 10, 17);
  t.one(7, 12, 19);
  t.rel("r3", 7, 13, 20, 1, 5);
  t.cell(9, 13, 22, 1, 0);
  t.minus(10, 12, 22);
  t.minus(10, 13, 23);
  t.one(12, 13, 24);
  t.minus(13, 13, 25);
  t.complete({3, 5, 6, 7, 9, 10, 11, 12, 13}, {3, 5, 6, 7, 9, 10, 11, 12, 13});

  // second table
  t.rel("r4", 3, 15, 19, 1, 3);
  t.cell(3, 18, 22, -2, 0);
  t.rel("r5", 3, 21, 24, 1, 3);
  t.cell(3, 23, 26, -1, 0);
  t.one(3, 25, 27);
  t.cell(5, 21, 26, -1, 0);
  t.minus(5, 24, 28);
  t.minus(6, 23, 28);
  t.cell(7, 18, 26, 2, 0);
  t.minus(7, 21, 27);
  t.minus(9, 20, 28);
  t.cell(9, 25, 4, -1, 0);
  t.cell(10, 15, 26, 1, 0);
  t.one(10, 19, 28);
  t.cell(10, 21, 2, -1, 0);
  t.minus(10, 24, 4);
  t.one(10, 25, 5);
  t.cell(10, 27, 8, 1, 0);
  t.minus(11, 18, 28);
  t.minus(12, 17, 28);
  t.one(12, 23, 4);
  t.minus(12, 25, 6);
  t.minus(13, 15, 27);
  t.cell(13, 18, 2, -2, 0);
  t.one(13, 21, 3);
  t.one(13, 23, 5);
  t.one(13, 24, 6);
  t.minus(13, 25, 7);
  t.rel("r6", 13, 27, 11, 2, 5);
  t.complete({3, 5, 6, 7, 9, 10, 11, 12, 13}, {15, 17, 18, 19, 20, 21, 23, 24, 25, 27});

  // third table
  t.cell(15, 18, 4, -2, 0);
  t.rel("r7", 15, 21, 6, 1, 3);
  t.cell(15, 23, 8, 1, 0);
  t.rel("r8", 15, 25, 11, 2, 5);
  t.cell(17, 21, 8, 1, 0);
  t.cell(18, 20, 8, 0, -2);
  t.cell(18, 21, 9, 0, -2);
  t.cell(18, 25, 14, 2, 0);
  t.cell(18, 27, 16, 2, 0);
  t.cell(20, 21, 11, 0, -2);
  t.rel("r9", 21, 21, 12, 1, 3);
  t.cell(21, 23, 14, 1, 0);
  t.minus(21, 25, 15);
  t.rel("r10", 21, 27, 19, -1, 3);
  t.one(23, 24, 16);
  t.minus(23, 25, 17);
  t.minus(24, 25, 19);
  t.rel("r11", 25, 25, 20, 1, 5);
  t.complete({15, 17, 18, 19, 20, 21, 23, 24, 25, 27}, {15, 17, 18, 19, 20, 21, 23, 24, 25, 27});

  // s = 1 extras at degree 0
  for (int i = 29; i <= 36; ++i) t.gated(1, i, 0, 0, 0, DegreeGate::Positive);
  for (int j = 2; j <= 36; ++j)
    for (int i = std::max(j, 29); i <= 36; ++i) t.zero(j, {i});
  return d;
}

bool gate_ok(DegreeGate g, int type, bool positive) {
  if (type != 1 || g == DegreeGate::Any) return true;
  return (g == DegreeGate::Positive) == positive;
}

}  // namespace

const ProductCell* PresentationData::find(int a, int b, bool a_positive, bool b_positive) const {
  for (const ProductCell& c : cells) {
    if (c.left == a && c.right == b && gate_ok(c.gate, a, a_positive)) return &c;
    if (c.left == b && c.right == a && gate_ok(c.gate, b, b_positive)) return &c;
  }
  return nullptr;
}

const PresentationData& presentation_data(Family family) {
  static const PresentationData e7 = make_e7();
  static const PresentationData e8 = make_e8();
  return family == Family::E7 ? e7 : e8;
}

}  // namespace hh
