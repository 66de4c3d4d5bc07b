#pragma once
// Brute-force reference computations used by the tests. Nothing here calls the interval
// classifier or the basis enumerator of the library.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <vector>

#include "ksalg/algebra.hpp"

namespace oracle {

inline int count_from(const ksalg::IState& x, int i) {
  int c = 0;
  for (int a = i; a <= x.width(); ++a) c += x.contains(a);
  return c;
}

inline int v(const ksalg::IState& x, const ksalg::IState& y, int i) { return count_from(y, i) - count_from(x, i); }

inline bool far(const ksalg::IState& x, const ksalg::IState& y) {
  auto a = x.members(), b = y.members();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1) return true;
  return false;
}

// generating intervals straight from the definition: lines j+1..j+l with j and j+l not fully
// used, j+1..j+l-1 fully used, no crossed line inside
inline std::vector<std::pair<int, int>> generating(const ksalg::IState& x, const ksalg::IState& y) {
  const int n = x.width();
  auto full = [&](int c) { return x.contains(c) && y.contains(c); };
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j <= n; ++j)
    for (int e = j + 1; e <= n; ++e) {
      if (full(j) || full(e)) continue;
      bool ok = true;
      for (int c = j + 1; c < e; ++c) ok = ok && full(c);
      for (int i = j + 1; i <= e; ++i) ok = ok && v(x, y, i) == 0;
      if (ok) out.push_back({j + 1, e});
    }
  return out;
}

// count basis elements x -> y with twice-multidegree alex2, by scanning all exponent vectors
inline std::size_t piece_count(const ksalg::AlgebraContext& ctx, const ksalg::IState& x, const ksalg::IState& y,
                               const std::vector<int>& alex2) {
  const int n = ctx.n();
  if (!ctx.admissible(x) || !ctx.admissible(y)) return 0;
  const bool b0 = ctx.flavor() == ksalg::Flavor::B0;
  if (!b0 && far(x, y)) return 0;
  auto gens = b0 ? std::vector<std::pair<int, int>>{} : generating(x, y);
  std::size_t cnt = 0;
  std::vector<int> u(n + 1, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      for (auto [a, b] : gens) {
        bool div = true;
        for (int l = a; l <= b; ++l) div = div && u[l] > 0;
        if (div) return;
      }
      for (std::uint32_t c = 0; c < (1u << (n + 1)); c += 2) {
        if (c & ~ctx.s_mask()) continue;
        bool ok = true;
        for (int l = 1; l <= n && ok; ++l)
          ok = 2 * u[l] + std::abs(v(x, y, l)) + 2 * ((c >> l) & 1) == alex2[l - 1];
        if (ok) ++cnt;
      }
      return;
    }
    for (int e = 0; 2 * e <= alex2[i - 1]; ++e) {
      u[i] = e;
      rec(i + 1);
    }
    u[i] = 0;
  };
  rec(1);
  return cnt;
}

}  // namespace oracle
