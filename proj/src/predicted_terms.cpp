// Closed formulas for the terms Q_m of the bimodule resolution.
// Summands are listed slot-major: all s copies (r = 0..s-1) of the first
// formula slot, then all copies of the second slot, and so on.

#include <functional>

#include "hh/resolver.hpp"

namespace hh {

int f2(int x, int y) { return x == y ? 1 : 0; }
int f3(int x, int y1, int y2) { return (y1 <= x && x <= y2) ? 1 : 0; }

int resolution_period(Family family) { return family == Family::E7 ? 17 : 29; }

namespace {

// one formula slot: column vertex offset and row vertex as functions of r
struct Slot {
  std::function<int(int r)> row;
  std::function<int(int r)> col;
};

std::vector<Slot> e7_slots(int m2) {
  const int m = m2 / 2;
  auto f = f2;
  std::vector<Slot> out;
  if (m2 % 2 == 0) {
    for (int i = 0; i <= f3(m, 2, 5); ++i)
      out.push_back({[=](int r) { return 7 * (r + m) - f(i, 0) * (1 - f(m, 0) - f(m, 6) - f(m, 8)); },
                     [](int r) { return 7 * r; }});
    for (int j = 0; j <= 2; ++j)
      for (int i = 0; i <= f(m + j, 4) + f(m + j, 6); ++i)
        out.push_back({[=](int r) {
                         return 7 * (r + m) + m + 1 + j - 4 * f(i, 0) * f3(m + j, 4, 5) -
                                f(m + j, 6) * (f(i, 0) + 3) - 3 * f(m + j, 7) - 8 * f3(m + j, 8, 10);
                       },
                       [=](int r) { return 7 * r + j + 1; }});
    for (int j = 0; j <= 1; ++j)
      for (int i = 0; i <= f3(m + j, 3, 6); ++i)
        out.push_back({[=](int r) {
                         return 7 * (r + m) + m + 4 + j - 5 * f(m + j, 2) -
                                f3(m + j, 3, 4) * (2 * f(i, 0) + 3) - f(m + j, 5) * (3 * f(i, 1) + 5) -
                                f(m + j, 6) * (3 * f(i, 0) + 5) - 8 * f3(m + j, 7, 9);
                       },
                       [=](int r) { return 7 * r + j + 4; }});
    for (int i = 0; i <= f3(m, 3, 6); ++i)
      out.push_back({[=](int r) { return 7 * (r + m) + 6 + f(i, 0) * (f(m, 1) + f(m, 7)) + f(i, 1); },
                     [](int r) { return 7 * r + 6; }});
  } else {
    for (int i = 0; i <= 1 + f3(m, 2, 4) - f(m, 7); ++i)
      out.push_back({[=](int r) {
                       return 7 * (r + m) + m + 1 + 3 * f(i, 1) * f3(m, 0, 1) +
                              f(m, 2) * (f(i, 0) - 2 * f(i, 2)) + f(m, 3) * (f(i, 1) - 2 * f(i, 0)) -
                              2 * f(m, 4) * (f(i, 1) + 2 * f(i, 2)) - 2 * f3(m, 5, 6) * (1 + f(i, 0)) -
                              2 * f(m, 7);
                     },
                     [](int r) { return 7 * r; }});
    for (int j = 0; j <= 2; ++j)
      out.push_back({[=](int r) {
                       return 7 * (r + m) + m + j + 2 + 2 * f3(m + j, 2, 3) - 2 * f3(m + j, 6, 9);
                     },
                     [=](int r) { return 7 * r + j + 1; }});
    for (int j = 0; j <= 1; ++j)
      for (int i = 0; i <= f(m + j, 4); ++i)
        out.push_back({[=](int r) {
                         return 7 * (r + m) + m + j + 5 - 2 * f(m + j, 3) -
                                f(m + j, 4) * (2 + f(i, 0)) - 3 * f(m + j, 5) -
                                5 * (f(m + j, 6) + f(m + j, 7)) - 2 * f(m + j, 8);
                       },
                       [=](int r) { return 7 * r + j + 4; }});
    for (int i = 0; i <= 1 + f3(m, 3, 5) - f(m, 0); ++i)
      out.push_back({[=](int r) {
                       return 7 * (r + m + 1) + m + 3 * f3(m, 1, 2) * f(i, 1) +
                              f(m, 3) * (f(i, 0) - 2 * f(i, 2)) + f(m, 4) * (f(i, 1) - 2 * f(i, 0)) -
                              2 * f(m, 5) * (f(i, 1) + 2 * f(i, 2)) -
                              2 * f3(m, 6, 7) * (2 * f(i, 0) + f(i, 1));
                     },
                     [](int r) { return 7 * r + 6; }});
  }
  return out;
}

std::vector<Slot> e8_slots(int m2, ColumnReading reading) {
  const int m = m2 / 2;
  auto f = f2;
  std::vector<Slot> out;
  if (m2 % 2 == 0) {
    for (int i = 0; i <= f3(m, 2, 11) + f3(m, 4, 9); ++i)
      out.push_back({[=](int r) {
                       return 8 * (r + m) - f(i, 0) * (f3(m, 1, 10) + f(m, 13)) -
                              f(i, 1) * (f(m, 4) + f(m, 11)) - f(i, 2) * (f(m, 6) + f(m, 8));
                     },
                     [](int r) { return 8 * r; }});
    for (int j = 0; j <= 3; ++j)
      for (int i = 0; i <= f(m + j, 5) + f3(m + j, 7, 10) + f(m + j, 12); ++i)
        out.push_back({[=](int r) {
                         return 8 * (r + m) + m + j + 1 -
                                f(i, 0) * (5 * f3(m + j, 6, 9) + 9 * f3(m + j, 10, 12) +
                                           8 * f(m + j, 13) + 14 * f3(m + j, 14, 17)) -
                                f(i, 1) * (5 * f(m + j, 5) + 3 * f3(m + j, 7, 8) + 9 * f(m + j, 9) +
                                           5 * f(m + j, 10) + 8 * f(m + j, 12));
                       },
                       [=](int r) { return 8 * r + j + 1; }});
    for (int j = 0; j <= 1; ++j)
      for (int i = 0; i <= f3(m + j, 3, 12) + f3(m + j, 5, 10); ++i)
        out.push_back({[=](int r) {
                         return 8 * (r + m) + m + j - 1 + 6 * f3(m + j, 0, 1) +
                                f(i, 0) * (f(m + j, 5) - 3 * f(m + j, 6) - 5 * f3(m + j, 8, 9) -
                                           3 * f(m + j, 10) - 8 * f3(m + j, 11, 15)) +
                                f(i, 1) * (3 * f3(m + j, 3, 4) + f(m + j, 6) - 3 * f3(m + j, 7, 8) -
                                           2 * f(m + j, 9) - 5 * f3(m + j, 10, 12)) -
                                f(i, 2) * (3 * f(m + j, 5) + 5 * f(m + j, 7) + 2 * f(m + j, 8) +
                                           3 * f(m + j, 9) + 8 * f(m + j, 10));
                       },
                       [=](int r) { return 8 * r + j + 5; }});
    for (int i = 0; i <= f3(m, 3, 12) + f3(m, 5, 10); ++i)
      out.push_back({[=](int r) {
                       return 8 * (r + m + 1) - f(i, 0) * (f(m, 0) + f3(m, 2, 11) + f(m, 14)) -
                              f(i, 1) * (f(m, 5) + f(m, 12)) - f(i, 2) * (f(m, 7) + f(m, 9));
                     },
                     [](int r) { return 8 * r + 7; }});
  } else {
    for (int i = 0; i <= f3(m, 0, 12) + f3(m, 2, 10) + f3(m, 3, 9) + f(m, 5) + f(m, 7); ++i)
      out.push_back({[=](int r) {
                       return 8 * (r + m) +
                              f(i, 0) * (2 - f(m, 0) + 3 * f(m, 2) + 3 * f(m, 4) + f(m, 7) + f(m, 9) +
                                         f(m, 11) + 2 * f(m, 12) + 5 * f(m, 13) + 6 * f(m, 14)) +
                              f(i, 1) * (6 - f(m, 0) - 3 * f(m, 2) - 2 * f(m, 3) - 3 * f(m, 4) -
                                         3 * f(m, 6) - 2 * f(m, 8) - 2 * f(m, 10) - f(m, 11)) +
                              f(i, 2) * (6 - 5 * f(m, 2) - 2 * f(m, 5) - 2 * f(m, 7) - 5 * f(m, 9)) +
                              f(i, 3) * (5 - 4 * f3(m, 4, 5) - 4 * f(m, 7)) + 5 * f(i, 4);
                     },
                     [](int r) { return 8 * r; }});
    for (int j = 0; j <= 3; ++j)
      for (int i = 0; i <= f(m + j, 8); ++i)
        out.push_back({[=](int r) {
                         return 8 * (r + m) + 7 - 5 * f(m + j, 0) - 4 * f(m + j, 1) -
                                3 * f(m + j, 2) + f(m + j, 4) + f(m + j, 6) + f(m + j, 9) +
                                f(m + j, 11) + f(m + j, 13) + 2 * f(m + j, 14) + 3 * f(m + j, 15) +
                                4 * f(m + j, 16) + f(i, 1) * f(m + j, 8);
                       },
                       [=](int r) { return 8 * r + j + 1; }});
    const int col_block = reading == ColumnReading::Block8 ? 8 : 7;
    for (int j = 0; j <= 1; ++j)
      for (int i = 0; i <= f3(m + j, 4, 10); ++i)
        out.push_back({[=](int r) {
                         return 8 * (r + m) + 7 - f(m + j, 0) + f(m + j, 2) + f(m + j, 8) +
                                f(m + j, 11) + f(m + j, 13) + 6 * f(m + j, 14) +
                                f(i, 1) * (1 - 2 * f(m + j, 8));
                       },
                       [=](int r) { return col_block * r + j + 5; }});
    for (int i = 0; i <= f3(m, 1, 13) + f3(m, 3, 11) + f3(m, 4, 10) + f(m, 6) + f(m, 8); ++i)
      out.push_back({[=](int r) {
                       return 8 * (r + m + 1) +
                              f(i, 0) * (2 - 2 * f(m, 0) - f(m, 1) + 3 * f(m, 3) + 3 * f(m, 5) +
                                         f(m, 8) + f(m, 10) + f(m, 12) + 2 * f(m, 13) + 5 * f(m, 14)) +
                              f(i, 1) * (6 - f(m, 1) - 3 * f(m, 3) - 2 * f(m, 4) - 3 * f(m, 5) -
                                         3 * f(m, 7) - 2 * f(m, 9) - 2 * f(m, 11) - f(m, 12)) +
                              f(i, 2) * (6 - 5 * f(m, 3) - 2 * f(m, 6) - 2 * f(m, 8) - 5 * f(m, 10)) +
                              f(i, 3) * (5 - 4 * f3(m, 5, 6) - 4 * f(m, 8)) + 5 * f(i, 4);
                     },
                     [](int r) { return 8 * r + 7; }});
  }
  return out;
}

}  // namespace

ProjSum predicted_terms(Family family, int s, int m, ColumnReading reading) {
  if (m < 0) throw std::invalid_argument("negative degree");
  const int period = resolution_period(family);
  const int n = family == Family::E7 ? 7 : 8;
  const int N = n * s;
  const int ell = m / period, rem = m % period;
  const int shift = (family == Family::E7 ? 9 : 15) * n * ell;
  auto slots = family == Family::E7 ? e7_slots(rem) : e8_slots(rem, reading);
  auto red = [N](long long v) { return static_cast<int>(((v % N) + N) % N); };
  ProjSum out;
  for (const auto& slot : slots)
    for (int r = 0; r < s; ++r) out.summands.push_back({red(slot.row(r) + shift), red(slot.col(r))});
  return out;
}

}  // namespace hh
