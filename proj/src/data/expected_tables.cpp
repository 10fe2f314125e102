// Published dimension tables for HH*(R_s) and HH*(R'_s), one row per case.
// Congruences are on c = m + 9*ell (E7) or m + 15*ell (E8) modulo s.

#include <initializer_list>

#include "hh/cohomology.hpp"

namespace hh {

namespace {

enum class Cong { Any, Zero, One, ZeroOrOne };
enum class Par { Any, Even, Odd };
enum class Rel { Any, Eq, Ne };

struct Cond {
  Cong cong = Cong::Any;
  Par par = Par::Any;
  Rel rel = Rel::Any;
  uint32_t ch = 0;
  bool either = false;  // parity OR characteristic, otherwise AND
  bool positive = false;  // deg > 0
};

constexpr Cond zero_{Cong::Zero};
constexpr Cond one_{Cong::One};
constexpr Cond zero_or_one{Cong::ZeroOrOne};
constexpr Cond any_{Cong::Any};

// "l+m even or char 2" and friends
constexpr Cond even_or(uint32_t p, Cong c = Cong::Zero) { return {c, Par::Even, Rel::Eq, p, true}; }
constexpr Cond odd_or(uint32_t p, Cong c = Cong::Zero) { return {c, Par::Odd, Rel::Eq, p, true}; }
constexpr Cond odd_and_not(uint32_t p, Cong c = Cong::Zero) { return {c, Par::Odd, Rel::Ne, p, false}; }
constexpr Cond odd_or_not(uint32_t p, Cong c = Cong::Zero) { return {c, Par::Odd, Rel::Ne, p, true}; }
constexpr Cond even_and(uint32_t p, Cong c = Cong::Zero) { return {c, Par::Even, Rel::Eq, p, false}; }
constexpr Cond odd_and(uint32_t p, Cong c = Cong::Zero) { return {c, Par::Odd, Rel::Eq, p, false}; }
constexpr Cond positive(Cond c) {
  c.positive = true;
  return c;
}
constexpr Cond char_is(uint32_t p) { return {Cong::Any, Par::Any, Rel::Eq, p}; }
constexpr Cond char_not(uint32_t p) { return {Cong::Any, Par::Any, Rel::Ne, p}; }

struct Row {
  std::initializer_list<int> residues;
  Cond cond;
  int per_s;    // value = per_s * s + offset
  int offset;
};

// ---- E7 ----

const Row e7_hom[] = {
    {{0, 8, 16}, zero_or_one, 7, 0},
    {{1, 15}, zero_, 8, 0},
    {{2}, zero_, 4, 0}, {{2}, one_, 1, 0},
    {{3, 13}, zero_, 9, 0},
    {{4}, zero_, 3, 0}, {{4}, one_, 5, 0},
    {{5, 11}, zero_, 10, 0},
    {{6}, zero_, 5, 0}, {{6}, one_, 7, 0},
    {{7, 9}, zero_, 12, 0},
    {{10}, zero_, 7, 0}, {{10}, one_, 5, 0},
    {{12}, zero_, 5, 0}, {{12}, one_, 3, 0},
    {{14}, zero_, 1, 0}, {{14}, one_, 4, 0},
};

const Row e7_hom_s1[] = {
    {{0, 8, 16}, any_, 0, 14},
    {{1, 4, 12, 15}, any_, 0, 8},
    {{2, 14}, any_, 0, 5},
    {{3, 13}, any_, 0, 9},
    {{5, 11}, any_, 0, 10},
    {{6, 7, 9, 10}, any_, 0, 12},
};

const Row e7_im[] = {
    {{0, 7, 8, 15, 16}, even_or(2), 7, -1}, {{0, 7, 8, 15, 16}, odd_and_not(2), 7, 0},
    {{1, 14}, zero_, 1, 0},
    {{2, 13}, zero_, 4, 0},
    {{3, 12}, even_or(2), 5, -1}, {{3, 12}, odd_and_not(2), 5, 0},
    {{4, 11}, zero_, 3, 0},
    {{5, 10}, even_and(3), 7, -1}, {{5, 10}, odd_or_not(3), 7, 0},
    {{6, 9}, zero_, 5, 0},
};

const Row e7_hh[] = {
    {{0, 1, 3, 7, 8, 9, 12, 13, 15, 16}, even_or(2), 0, 1},
    {{0, 4, 8, 16}, odd_or(2, Cong::One), 0, 1},
    {{6}, odd_and(3, Cong::One), 0, 1},
    {{5, 10, 11}, even_and(3), 0, 1},
};

const Row e7_hh_s1[] = {
    {{0, 8, 16}, positive(char_is(2)), 0, 2},
    {{0, 8, 16}, positive(char_not(2)), 0, 1},
    {{1, 3, 7, 9, 12, 13, 15}, even_or(2, Cong::Any), 0, 1},
    {{4}, odd_or(2, Cong::Any), 0, 1},
    {{6}, odd_and(3, Cong::Any), 0, 1},
    {{5, 10, 11}, even_and(3, Cong::Any), 0, 1},
};

// ---- E8 ----

const Row e8_hom[] = {
    {{0, 14, 28}, zero_or_one, 8, 0},
    {{1, 27}, zero_, 9, 0},
    {{2}, zero_, 5, 0}, {{2}, one_, 1, 0},
    {{3, 25}, zero_, 10, 0},
    {{4}, zero_, 4, 0}, {{4}, one_, 5, 0},
    {{5, 23}, zero_, 11, 0},
    {{6}, zero_, 6, 0}, {{6}, one_, 7, 0},
    {{7, 21}, zero_, 14, 0},
    {{8}, zero_, 4, 0}, {{8}, one_, 8, 0},
    {{9, 19}, zero_, 16, 0},
    {{10}, zero_, 11, 0}, {{10}, one_, 12, 0},
    {{11, 13, 15, 17}, zero_, 18, 0},
    {{12}, zero_, 10, 0}, {{12}, one_, 7, 0},
    {{16}, zero_, 7, 0}, {{16}, one_, 10, 0},
    {{18}, zero_, 12, 0}, {{18}, one_, 11, 0},
    {{20}, zero_, 8, 0}, {{20}, one_, 4, 0},
    {{22}, zero_, 7, 0}, {{22}, one_, 6, 0},
    {{24}, zero_, 5, 0}, {{24}, one_, 4, 0},
    {{26}, zero_, 1, 0}, {{26}, one_, 5, 0},
};

const Row e8_hom_s1[] = {
    {{0, 9, 14, 19, 28}, any_, 0, 16},
    {{1, 4, 24, 27}, any_, 0, 9},
    {{2, 26}, any_, 0, 6},
    {{3, 25}, any_, 0, 10},
    {{5, 23}, any_, 0, 11},
    {{6, 22}, any_, 0, 13},
    {{7, 21}, any_, 0, 14},
    {{8, 20}, any_, 0, 12},
    {{10, 18}, any_, 0, 23},
    {{11, 13, 15, 17}, any_, 0, 18},
    {{12, 16}, any_, 0, 17},
};

const Row e8_im[] = {
    {{0, 7, 20, 27}, even_or(2), 8, -1}, {{0, 7, 20, 27}, odd_and_not(2), 8, 0},
    {{1, 26}, zero_, 1, 0},
    {{2, 25}, zero_, 5, 0},
    {{3, 24}, even_or(2), 5, -1}, {{3, 24}, odd_and_not(2), 5, 0},
    {{4, 8, 19, 23}, zero_, 4, 0},
    {{5, 22}, even_and(3), 7, -1}, {{5, 22}, odd_or_not(3), 7, 0},
    {{6, 21}, zero_, 6, 0},
    {{9, 18}, even_and(5), 12, -1}, {{9, 18}, odd_or_not(5), 12, 0},
    {{10, 17}, even_and(3), 11, -1}, {{10, 17}, odd_or_not(3), 11, 0},
    {{11, 16}, zero_, 7, 0},
    {{12, 15}, even_or(2), 10, -1}, {{12, 15}, odd_and_not(2), 10, 0},
    {{13, 14, 28}, zero_, 8, 0},
};

const Row e8_hh[] = {
    {{0, 1, 3, 7, 12, 13, 15, 20, 21, 24, 25, 27}, even_or(2), 0, 1},
    {{0, 4, 8, 16, 28}, odd_or(2, Cong::One), 0, 1},
    {{5, 10, 11, 17, 22, 23}, even_and(3), 0, 1},
    {{6, 18}, odd_and(3, Cong::One), 0, 1},
    {{9, 18, 19}, even_and(5), 0, 1},
    {{10}, odd_and(3, Cong::One), 0, 1},
};

const Row e8_hh_s1[] = {
    {{0, 1, 3, 7, 12, 13, 15, 20, 21, 24, 25, 27}, positive(even_or(2, Cong::Any)), 0, 1},
    {{0, 4, 8, 16, 28}, odd_or(2, Cong::Any), 0, 1},
    {{5, 10, 11, 17, 22, 23}, even_and(3, Cong::Any), 0, 1},
    {{6, 18}, odd_and(3, Cong::Any), 0, 1},
    {{9, 18, 19}, even_and(5, Cong::Any), 0, 1},
    {{10}, odd_and(3, Cong::Any), 0, 1},
};

struct Point {
  int s;
  uint32_t ch;
  DegreeDecomposition d;
  int c;     // m + 9 ell or m + 15 ell
  bool odd;  // parity under the chosen reading
};

bool holds(const Cond& cond, const Point& pt) {
  if (cond.positive && pt.d.t == 0) return false;
  const int c = pt.c % pt.s;
  switch (cond.cong) {
    case Cong::Any: break;
    case Cong::Zero: if (c != 0) return false; break;
    case Cong::One: if (c != 1 % pt.s) return false; break;
    case Cong::ZeroOrOne: if (c != 0 && c != 1 % pt.s) return false; break;
  }
  const bool par_ok = cond.par == Par::Any || (cond.par == Par::Odd) == pt.odd;
  const bool ch_ok = cond.rel == Rel::Any || ((cond.rel == Rel::Eq) == (pt.ch == cond.ch));
  if (cond.par == Par::Any) return ch_ok;
  if (cond.rel == Rel::Any) return par_ok;
  return cond.either ? (par_ok || ch_ok) : (par_ok && ch_ok);
}

template <size_t N>
std::vector<const Row*> matching(const Row (&rows)[N], const Point& pt) {
  std::vector<const Row*> out;
  for (const Row& row : rows)
    for (int r : row.residues)
      if (r == pt.d.r && holds(row.cond, pt)) {
        out.push_back(&row);
        break;
      }
  return out;
}

template <size_t N>
int first_value(const Row (&rows)[N], const Point& pt) {
  auto hits = matching(rows, pt);
  return hits.empty() ? 0 : hits.front()->per_s * pt.s + hits.front()->offset;
}

}  // namespace

ExpectedDims expected_dims(Family family, int s, uint32_t characteristic, int t, ParityReading reading) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  Point pt;
  pt.s = s;
  pt.ch = characteristic;
  pt.d = DegreeDecomposition::of(family, t);
  pt.c = pt.d.m + (family == Family::E7 ? 9 : 15) * pt.d.ell;
  pt.odd = ((reading == ParityReading::Ell ? pt.d.ell : pt.d.ell + pt.d.m) % 2) != 0;

  ExpectedDims out;
  const bool e7 = family == Family::E7;
  if (s == 1)
    out.hom = e7 ? first_value(e7_hom_s1, pt) : first_value(e8_hom_s1, pt);
  else
    out.hom = e7 ? first_value(e7_hom, pt) : first_value(e8_hom, pt);
  out.im = e7 ? first_value(e7_im, pt) : first_value(e8_im, pt);

  std::vector<const Row*> hh;
  if (s == 1)
    hh = e7 ? matching(e7_hh_s1, pt) : matching(e8_hh_s1, pt);
  else
    hh = e7 ? matching(e7_hh, pt) : matching(e8_hh, pt);
  if (s == 1 && t == 0)
    out.hh = 8;
  else
    out.hh = hh.empty() ? 0 : hh.front()->offset;
  return out;
}

}  // namespace hh
