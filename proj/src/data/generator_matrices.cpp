// Published generator matrices Q_t -> Q_0. Rows index Q_0 slot-major (row u*s + r is
// vertex n*r + u), columns follow predicted_terms. Every entry has the form
// c * w_{from -> to} (x) e_{from}; labels are unreduced, so to - from is the path length
// on the universal cover.

#include <functional>

#include <fmt/format.h>

#include "hh/ring_structure.hpp"

namespace hh {

namespace {

struct Entry {
  int row;
  int col;
  int coef;
  long long from;
  long long to;
};

struct Transcript {
  int cols_per_s = 0;
  std::vector<Entry> entries;
};

int f(int x, int y) { return x == y ? 1 : 0; }
int sign(int e) { return e % 2 == 0 ? 1 : -1; }

class Builder {
 public:
  Builder(int n, int s, int cols_per_s) : n_(n), s_(s) { out_.cols_per_s = cols_per_s; }

  int s() const { return s_; }
  int res(int a) const { return ((a % s_) + s_) % s_; }  // (a)_s

  using RowFn = std::function<int(int j)>;
  using CoefFn = std::function<int(int j2)>;
  using PathFn = std::function<long long(int j, int j2)>;

  // columns j in [lo*s, hi*s)
  void block(int lo, int hi, RowFn row, CoefFn coef, PathFn from, PathFn to) {
    for (int j = lo * s_; j < hi * s_; ++j) {
      const int j2 = j / s_;
      out_.entries.push_back({row(j), j, coef(j2), from(j, j2), to(j, j2)});
    }
  }
  void single(int row, int col, int coef, long long from, long long to) {
    out_.entries.push_back({row, col, coef, from, to});
  }
  RowFn shift(int k) const {
    return [k, s = s_](int j) { return j - k * s; };
  }
  RowFn residue_row(int k) const {
    return [k, s = s_](int j) { return k * s + j % s; };
  }
  PathFn at(int u) const {
    return [u, n = n_](int j, int) { return (long long)n * j + u; };
  }
  PathFn next(int u) const {
    return [u, n = n_](int j, int) { return (long long)n * (j + 1) + u; };
  }
  static CoefFn c(int v) {
    return [v](int) { return v; };
  }
  Transcript done() { return std::move(out_); }

 private:
  int n_, s_;
  Transcript out_;
};

std::optional<Transcript> e7_matrix(int type, int s) {
  const int n = 7;
  auto B = [&](int cols) { return Builder(n, s, cols); };
  auto idem = [](Builder& b, int lo, int hi, Builder::RowFn row, int coef, int u) {
    b.block(lo, hi, row, Builder::c(coef), b.at(u), b.at(u));
  };
  switch (type) {
    case 1: {
      auto b = B(7);
      b.block(0, 7, b.shift(0), Builder::c(1), [](int j, int j2) { return 7LL * j + j2; },
              [](int j, int j2) { return 7LL * j + j2; });
      return b.done();
    }
    case 2: {
      auto b = B(7);
      b.single(0, 0, 1, 0, 7);
      return b.done();
    }
    case 3: {
      auto b = B(8);
      b.single(0, 0, 1, 0, 1);
      b.single(0, s, 1, 0, 4);
      return b.done();
    }
    case 4: {
      auto b = B(9);
      b.block(0, 1, b.shift(0), Builder::c(1), b.at(0), b.at(2));
      b.block(1, 2, b.shift(1), Builder::c(-1), b.at(0), b.at(5));
      b.block(4, 5, b.shift(1), Builder::c(1), b.at(3), b.next(0));
      b.block(7, 8, b.shift(1), Builder::c(1), b.at(6), b.next(1));
      return b.done();
    }
    case 5: {
      auto b = B(10);
      b.single(0, 0, 1, 0, 6);
      return b.done();
    }
    case 6: {
      auto b = B(10);
      b.block(0, 1, b.shift(0), Builder::c(1), b.at(0), b.at(4));
      b.block(1, 2, b.shift(1), Builder::c(-1), b.at(0), b.at(3));
      b.block(6, 7, b.shift(2), Builder::c(1), b.at(4), b.next(0));
      b.block(7, 8, b.shift(2), Builder::c(1), b.at(5), b.at(6));
      b.block(9, 10, b.shift(3), Builder::c(-1), b.at(6), b.next(5));
      return b.done();
    }
    case 7: {
      // the column index fixes j
      auto b = B(12);
      const long long j = 10LL * s;
      b.single(6 * s, 10 * s, 1, 7 * j + 6, 7 * (j + 1) + 6);
      return b.done();
    }
    case 8: {
      auto b = B(12);
      b.block(2, 3, b.shift(2), Builder::c(1), b.at(0), b.at(4));
      b.block(7, 8, b.shift(2), Builder::c(1), b.at(5), b.at(6));
      b.block(9, 10, b.shift(3), Builder::c(1), b.at(6), b.next(4));
      return b.done();
    }
    case 9: {
      auto b = B(13);
      idem(b, 1, 2, b.shift(1), 1, 0);
      idem(b, 2, 3, b.shift(1), -1, 1);
      idem(b, 4, 5, b.shift(2), -1, 2);
      idem(b, 5, 6, b.shift(2), -1, 3);
      b.block(8, 9, b.shift(4), Builder::c(1), b.at(4), b.at(5));
      idem(b, 11, 12, b.shift(5), 1, 6);
      b.block(12, 13, b.shift(6), Builder::c(-1), b.at(6), b.next(0));
      return b.done();
    }
    case 10: {
      auto b = B(13);
      b.single(0, 0, -1, 0, 6);
      return b.done();
    }
    case 11: {
      // (-1)_s = s - 1
      auto b = B(12);
      b.single(0, 0, 1, 0, 5);
      b.single(0, 2 * s, 1, 0, 1);
      const long long j = 10LL * s + (s - 1);
      b.single(static_cast<int>(j) - 4 * s, static_cast<int>(j), 1, 7 * j + 6, 7 * (j + 1) + 5);
      return b.done();
    }
    case 12: {
      auto b = B(12);
      idem(b, 1, 2, b.shift(1), 1, 0);
      b.block(2, 3, b.shift(1), Builder::c(1), b.at(1), b.at(2));
      b.block(3, 4, b.shift(1), Builder::c(1), b.at(2), b.at(3));
      idem(b, 6, 7, b.shift(2), 1, 4);
      idem(b, 9, 10, b.shift(4), 1, 5);
      idem(b, 10, 11, b.shift(4), 1, 6);
      return b.done();
    }
    case 13: {
      auto b = B(10);
      b.single(s, 2 * s, 1, 1, 7);
      const long long j = 5LL * s;
      b.single(4 * s, 5 * s, 1, 7 * j + 4, 7 * j + 7);
      return b.done();
    }
    case 14: {
      auto b = B(10);
      idem(b, 0, 1, b.shift(0), 1, 0);
      b.block(1, 2, b.shift(0), Builder::c(1), b.at(1), b.at(3));
      b.block(6, 7, b.shift(2), Builder::c(-1), b.at(4), b.at(5));
      idem(b, 8, 9, b.shift(2), 1, 6);
      return b.done();
    }
    case 15: {
      auto b = B(9);
      b.single(0, 0, 1, 0, 3);
      b.single(0, s, 1, 0, 5);
      return b.done();
    }
    case 16: {
      auto b = B(8);
      b.block(0, 1, b.shift(0), Builder::c(1), b.at(0), b.at(6));
      b.block(4, 5, b.shift(0), Builder::c(-1), b.at(4), b.next(0));
      b.block(5, 6, b.shift(0), Builder::c(1), b.at(5), b.next(4));
      b.block(7, 8, b.shift(1), Builder::c(-1), b.at(6), b.next(5));
      return b.done();
    }
    case 17: {
      auto b = B(7);
      b.block(0, 4, b.shift(0), Builder::c(1), [](int j, int j2) { return 7LL * j + j2; },
              [](int j, int j2) { return 7LL * j + j2; });
      idem(b, 6, 7, b.shift(0), 1, 6);
      return b.done();
    }
    case 18: {
      auto b = B(7);
      b.single(0, 0, -1, 0, 7);
      return b.done();
    }
    case 19: case 20: case 21: case 22: case 23: case 24: case 25: {
      static const int vertex[] = {0, 4, 5, 3, 1, 2, 6};
      const int v = vertex[type - 19];
      auto b = B(7);
      b.single(v * s, v * s, 1, v, v + 7);
      return b.done();
    }
    default:
      return std::nullopt;
  }
}

std::optional<Transcript> e8_matrix(int type, int s) {
  const int n = 8;
  auto B = [&](int cols) { return Builder(n, s, cols); };
  auto idem = [](Builder& b, int lo, int hi, Builder::RowFn row, int coef, int u) {
    b.block(lo, hi, row, Builder::c(coef), b.at(u), b.at(u));
  };
  // 8j + j2 + k
  auto at_j2 = [](int k) { return [k](int j, int j2) { return 8LL * j + j2 + k; }; };
  switch (type) {
    case 1: {
      auto b = B(8);
      b.block(0, 8, b.shift(0), Builder::c(1), at_j2(0), at_j2(0));
      return b.done();
    }
    case 2: {
      auto b = B(9);
      b.single(0, 0, 1, 0, 1);
      b.single(0, s, 1, 0, 5);
      return b.done();
    }
    case 3: {
      auto b = B(10);
      b.block(0, 1, b.shift(0), Builder::c(1), b.at(0), b.at(2));
      b.block(1, 2, b.shift(1), Builder::c(-1), b.at(0), b.at(6));
      b.block(5, 6, b.shift(1), Builder::c(1), b.at(4), b.next(0));
      b.block(8, 9, b.shift(1), Builder::c(1), b.at(7), b.next(1));
      return b.done();
    }
    case 4: {
      auto b = B(11);
      b.single(0, 0, 1, 0, 7);
      return b.done();
    }
    case 5: {
      auto b = B(11);
      b.block(0, 3, b.residue_row(0), [](int j2) { return 1 - 2 * f(j2, 2); }, b.at(0),
              [](int j, int j2) { return 8LL * j + 5 - 2 * j2; });
      b.block(5, 8, b.shift(2), [](int j2) { return sign(j2 + 1); }, at_j2(-2),
              [](int j, int j2) { return 8LL * (j + 1) - f(j2, 6); });
      return b.done();
    }
    case 6: {
      auto b = B(13);
      b.single(0, 0, 1, 0, 7);
      return b.done();
    }
    case 7: {
      auto b = B(14);
      b.block(1, 2, b.shift(1), Builder::c(1), b.at(0), b.at(4));
      b.block(3, 4, b.shift(3), Builder::c(1), b.at(0), b.at(5));
      b.block(9, 10, b.shift(3), Builder::c(1), b.at(6), b.at(7));
      b.block(11, 12, b.shift(4), Builder::c(1), b.at(7), b.next(5));
      return b.done();
    }
    case 8: {
      auto b = B(16);
      b.single(0, 0, -1, 0, 7);
      return b.done();
    }
    case 9: {
      auto b = B(16);
      b.block(0, 3, b.residue_row(0), [](int j2) { return sign(j2 + 1); }, b.at(0),
              [](int j, int j2) { return 8LL * j + 3 * j2 + 5 * f(j2, 0); });
      b.block(5, 8, b.shift(3), [](int j2) { return 1 + f(j2, 6); }, at_j2(-3),
              [](int j, int j2) { return 8LL * j + 7 + f(j2, 6); });
      b.block(9, 10, b.shift(4), Builder::c(1), b.at(5), b.next(0));
      b.block(12, 14, b.residue_row(7), [](int j2) { return 1 + 2 * f(j2, 13); }, b.at(7),
              [](int j, int j2) { return 8LL * (j + 1) + 2 * (j2 - 11); });
      return b.done();
    }
    case 10: {
      auto b = B(19);
      b.block(1, 3, b.residue_row(0), [](int j2) { return sign(j2 + 1); }, b.at(0), b.at(0));
      b.block(4, 7, b.shift(3), [](int j2) { return -1 + 2 * f(j2, 4); }, at_j2(-3), at_j2(-3));
      idem(b, 8, 9, b.shift(4), -1, 4);
      idem(b, 10, 11, b.shift(5), 1, 5);
      idem(b, 14, 15, b.shift(8), 1, 6);
      b.block(16, 19, b.residue_row(7), [](int j2) { return sign(j2); }, b.at(7),
              [](int j, int j2) { return 8LL * j + 7 + f(j2, 18); });
      return b.done();
    }
    case 11: {
      auto b = B(19);
      b.single(0, s, 1, 0, 8);
      b.single(0, 2 * s, 1, 0, 8);
      return b.done();
    }
    case 12: {
      auto b = B(18);
      // entry at (row_block*s + (k)_s, col_block*s + (k)_s), with j the column
      auto put = [&](int rb, int cb, int k, int coef, int u, int du, bool wrap) {
        const int col = cb * s + b.res(k);
        const long long from = 8LL * col + u;
        b.single(rb * s + b.res(k), col, coef, from, wrap ? 8LL * (col + 1) + du : 8LL * col + du);
      };
      put(0, 0, -5, 1, 0, 2, false);
      put(0, 0, -4, -1, 0, 2, false);
      put(0, 0, -3, 1, 0, 2, false);
      put(0, 0, -2, -1, 0, 2, false);
      put(0, 1, -6, -1, 0, 6, false);
      put(0, 1, -2, 1, 0, 6, false);
      put(2, 6, -5, -1, 2, 0, true);
      put(2, 6, -4, 1, 2, 0, true);
      put(2, 6, -3, -1, 2, 0, true);
      put(3, 7, -6, -1, 3, 7, false);
      put(3, 7, -5, 1, 3, 7, false);
      put(3, 7, -4, -1, 3, 7, false);
      put(3, 7, -3, 1, 3, 7, false);
      put(4, 8, -2, -1, 4, 7, false);
      put(5, 10, -6, 1, 5, 7, false);
      put(5, 10, -5, -1, 5, 7, false);
      put(5, 10, -4, 1, 5, 7, false);
      put(5, 10, -3, -1, 5, 7, false);
      put(5, 10, -2, -1, 5, 7, false);
      return b.done();
    }
    case 13: {
      auto b = B(19);
      idem(b, 1, 2, b.shift(1), 1, 0);
      b.block(3, 5, b.shift(2), Builder::c(-1), at_j2(-2), at_j2(-1));
      b.block(6, 7, b.shift(3), Builder::c(-1), b.at(3), b.at(4));
      b.block(11, 12, b.shift(6), Builder::c(1), b.at(5), b.at(6));
      b.block(12, 14, b.shift(7), [](int j2) { return sign(j2 + 1); }, at_j2(-7), at_j2(-7));
      idem(b, 16, 17, b.shift(9), 1, 7);
      b.block(18, 19, b.shift(11), Builder::c(1), b.at(7), b.next(0));
      return b.done();
    }
    case 14: {
      auto b = B(18);
      auto put = [&](int rb, int cb, int k, int coef, int u, long long to_off, bool wrap) {
        const int col = cb * s + b.res(k);
        b.single(rb * s + b.res(k), col, coef, 8LL * col + u, wrap ? 8LL * (col + 1) + to_off : 8LL * col + to_off);
      };
      put(0, 1, -3, 1, 0, 3, false);
      put(1, 4, -3, -1, 1, 8, false);
      put(5, 9, -3, 1, 5, 7, false);
      put(7, 14, -4, 1, 7, 6, true);
      return b.done();
    }
    case 15: {
      auto b = B(18);
      b.block(0, 1, b.shift(0), Builder::c(1), b.at(0), b.at(3));
      b.block(8, 9, b.shift(5), Builder::c(-1), b.at(3), b.next(0));
      b.block(10, 11, b.shift(5), Builder::c(-1), b.at(5), b.at(7));
      b.block(14, 15, b.shift(7), Builder::c(1), b.at(7), b.next(2));
      return b.done();
    }
    case 16: {
      auto b = B(19);
      b.single(0, 0, 1, 0, 8);
      return b.done();
    }
    case 17: {
      auto b = B(18);
      b.block(1, 2, b.shift(1), Builder::c(-1), b.at(0), b.at(4));
      b.block(3, 4, b.shift(3), Builder::c(1), b.at(0), b.at(5));
      b.block(7, 8, b.shift(4), Builder::c(-1), b.at(3), b.at(7));
      b.block(9, 10, b.shift(4), Builder::c(-1), b.at(5), b.next(0));
      b.block(13, 14, b.shift(6), Builder::c(1), b.at(7), b.next(3));
      return b.done();
    }
    case 18: {
      auto b = B(19);
      idem(b, 1, 2, b.shift(1), 1, 0);
      idem(b, 2, 3, b.shift(2), 2, 0);
      b.block(4, 6, b.shift(3), [](int j2) { return 2 * sign(j2 + 1); }, at_j2(-3), at_j2(-3));
      b.block(7, 9, b.shift(4), Builder::c(2), at_j2(-4), at_j2(-4));
      b.block(11, 12, b.shift(6), Builder::c(2), b.at(5), b.at(6));
      b.block(12, 14, b.shift(7), [](int j2) { return sign(j2 + 1); }, at_j2(-7), at_j2(-7));
      idem(b, 16, 17, b.shift(9), 1, 7);
      idem(b, 18, 19, b.shift(11), 2, 7);
      return b.done();
    }
    case 19: {
      auto b = B(19);
      b.single(0, 0, 1, 0, 8);
      return b.done();
    }
    case 20: {
      auto b = B(16);
      auto put = [&](int rb, int cb, int k, int coef, int u, long long to_off, bool wrap) {
        const int col = cb * s + b.res(k);
        b.single(rb * s + b.res(k), col, coef, 8LL * col + u, wrap ? 8LL * (col + 1) + to_off : 8LL * col + to_off);
      };
      put(0, 1, -3, -1, 0, 6, false);
      put(0, 1, -2, -1, 0, 6, false);
      put(1, 4, -4, -1, 1, 0, true);
      put(2, 5, -3, 1, 2, 7, false);
      put(2, 5, -2, 1, 2, 7, false);
      put(5, 9, -4, 1, 5, 0, true);
      return b.done();
    }
    case 21: {
      auto b = B(16);
      b.block(1, 3, b.shift(1), [](int j2) { return sign(j2 + 1); }, at_j2(-1),
              [](int j, int j2) { return 8LL * j + 2 * (j2 - 1); });
      b.block(4, 6, b.shift(2), Builder::c(-1), at_j2(-2), at_j2(-1));
      b.block(8, 9, b.shift(3), Builder::c(-1), b.at(5), b.at(6));
      b.block(13, 15, b.residue_row(7), [](int j2) { return sign(j2 + 1); }, b.at(7), at_j2(-6));
      return b.done();
    }
    case 22: {
      auto b = B(14);
      auto put = [&](int rb, int cb, int k, int coef, int u) {
        const int col = cb * s + b.res(k);
        b.single(rb * s + b.res(k), col, coef, 8LL * col + u, 8LL * col + 7);
      };
      put(3, 5, -7, -1, 3);
      put(3, 5, -6, 1, 3);
      put(3, 5, -5, -1, 3);
      put(5, 7, -7, -1, 5);
      put(5, 7, -6, 1, 5);
      put(5, 7, -5, -1, 5);
      return b.done();
    }
    case 23: {
      auto b = B(13);
      idem(b, 0, 1, b.shift(0), 1, 0);
      b.block(2, 4, b.shift(1), Builder::c(-1), at_j2(-1), at_j2(1));
      idem(b, 8, 9, b.shift(3), -1, 5);
      b.block(10, 12, b.shift(4), Builder::c(1), at_j2(-4), at_j2(-4));
      b.block(12, 13, b.shift(5), Builder::c(1), b.at(7), b.next(0));
      return b.done();
    }
    case 24: {
      auto b = B(11);
      auto put = [&](int rb, int cb, int k, int u, long long to_off, bool wrap) {
        const int col = cb * s + b.res(k);
        b.single(rb * s + b.res(k), col, 1, 8LL * col + u, wrap ? 8LL * (col + 1) + to_off : 8LL * col + to_off);
      };
      put(6, 7, -2, 6, 7, false);
      put(6, 7, -3, 6, 7, false);
      put(7, 9, -4, 7, 4, true);
      put(7, 9, -3, 7, 4, true);
      return b.done();
    }
    case 25: {
      auto b = B(11);
      idem(b, 0, 1, b.shift(0), 1, 0);
      b.block(1, 2, b.shift(0), Builder::c(1), b.at(1), b.at(4));
      b.block(7, 8, b.shift(2), Builder::c(-1), b.at(5), b.at(6));
      idem(b, 10, 11, b.shift(3), -1, 7);
      return b.done();
    }
    case 26: {
      auto b = B(10);
      b.single(0, 0, 1, 0, 4);
      b.single(0, s, 1, 0, 6);
      return b.done();
    }
    case 27: {
      auto b = B(9);
      b.block(0, 5, b.shift(0), Builder::c(1), at_j2(0), at_j2(7));
      b.block(7, 8, b.shift(0), Builder::c(-1), b.at(7), b.next(4));
      return b.done();
    }
    case 28: {
      auto b = B(8);
      b.single(0, 0, -1, 0, 8);
      return b.done();
    }
    case 29: case 30: case 31: case 32: case 33: case 34: case 35: case 36: {
      const int v = type - 29;
      auto b = B(8);
      b.single(v, v, 1, v, v + 8);
      return b.done();
    }
    default:
      return std::nullopt;
  }
}

PublishedGenerator reject(std::string why) {
  PublishedGenerator out;
  out.diagnostics = std::move(why);
  return out;
}

}  // namespace

int published_generator_count(Family family) { return family == Family::E7 ? 25 : 36; }

PublishedGenerator published_generator(const CochainComplex& cx, int type, int t) {
  const Algebra& alg = cx.algebra();
  const Family fam = alg.quiver().family;
  const int s = alg.quiver().s;
  const int n = alg.quiver().block_size;
  const int N = alg.num_vertices();
  const uint32_t ch = alg.field().characteristic();
  if (type < 1 || type > published_generator_count(fam)) return reject(fmt::format("no generator of type {}", type));
  if (t < 0 || t >= cx.max_degree()) return reject(fmt::format("degree {} outside the computed range", t));

  const PresentationData& data = presentation_data(fam);
  bool admissible = false;
  if (type >= data.first_extra)
    admissible = s == 1 && t == 0 && !(ch == 2 && type == data.char2_excluded);
  else
    for (const auto& c : data.conditions)
      admissible = admissible || (c.type == type && condition_holds(c, fam, s, ch, t));
  if (!admissible) return reject(fmt::format("type {} does not occur in degree {}", type, t));

  auto tr = fam == Family::E7 ? e7_matrix(type, s) : e8_matrix(type, s);
  if (!tr) return reject("no transcription");
  const ProjSum predicted = predicted_terms(fam, s, t);
  if (size_t(tr->cols_per_s) * s != predicted.size())
    return reject(fmt::format("matrix has {} columns, Q_{} has {} summands", tr->cols_per_s * s, t, predicted.size()));

  const ProjSum& Q = cx.resolution().term(t);
  // predicted column -> computed summand with the same (i, j), matched by occurrence
  std::vector<int> column_to_summand(predicted.size(), -1);
  for (size_t col = 0; col < predicted.size(); ++col) {
    int rank = 0;
    for (size_t c = 0; c < col; ++c) rank += predicted[c] == predicted[col] ? 1 : 0;
    for (size_t k = 0; k < Q.size(); ++k)
      if (Q[k] == predicted[col] && rank-- == 0) {
        column_to_summand[col] = static_cast<int>(k);
        break;
      }
    if (column_to_summand[col] < 0)
      return reject(fmt::format("column {} (P_{},{}) has no computed summand", col, predicted[col].i, predicted[col].j));
  }

  auto red = [N](long long v) { return static_cast<int>(((v % N) + N) % N); };
  std::vector<AlgebraElement> values(Q.size());
  for (const auto& e : tr->entries) {
    if (e.col < 0 || size_t(e.col) >= predicted.size() || e.row < 0 || e.row >= N)
      return reject(fmt::format("entry ({},{}) outside the matrix", e.row, e.col));
    const int row_vertex = n * (e.row % s) + e.row / s;
    if (red(e.from) != row_vertex)
      return reject(fmt::format("entry ({},{}) starts at {} but row {} is vertex {}", e.row, e.col, red(e.from),
                                e.row, row_vertex));
    const Summand& sm = predicted[e.col];
    if (sm.i != red(e.to) || sm.j != red(e.from))
      return reject(fmt::format("entry ({},{}) spans {}->{} but column {} is P_{},{}", e.row, e.col, red(e.from),
                                red(e.to), e.col, sm.i, sm.j));
    std::optional<AlgebraElement> w;
    try {
      w = alg.canonical_path(e.from, e.to);
    } catch (const AmbiguousPath& ex) {
      return reject(ex.what());
    }
    if (!w) return reject(fmt::format("no path {}->{}", e.from, e.to));
    add_scaled(values[column_to_summand[e.col]], *w, alg.field().from_int(e.coef));
  }
  PublishedGenerator out;
  out.cochain = cx.cochain(t, values);
  if (is_zero(out.cochain)) return reject("matrix induces the zero cochain");
  if (!is_zero(cx.apply_coboundary(t, out.cochain)))
    return reject("not a cocycle for the computed differentials");
  out.accepted = true;
  out.diagnostics = "cocycle";
  return out;
}

}  // namespace hh
