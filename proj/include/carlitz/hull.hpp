#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace carlitz {

// exact rational with small magnitude (slopes, valuation bounds)
struct Rat {
  long long n = 0;
  long long d = 1;
};

inline Rat rat(long long n, long long d = 1) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return {n, d};
}

inline Rat rat_add(Rat a, Rat b) { return rat(a.n * b.d + b.n * a.d, a.d * b.d); }
inline Rat rat_sub(Rat a, Rat b) { return rat(a.n * b.d - b.n * a.d, a.d * b.d); }
inline Rat rat_mul(Rat a, Rat b) { return rat(a.n * b.n, a.d * b.d); }
inline Rat rat_div(Rat a, long long k) { return rat(a.n, a.d * k); }
inline Rat rat_neg(Rat a) { return {-a.n, a.d}; }
inline bool rat_lt(Rat a, Rat b) { return (__int128)a.n * b.d < (__int128)b.n * a.d; }
inline bool rat_eq(Rat a, Rat b) { return a.n == b.n && a.d == b.d; }
inline bool rat_is_int(Rat a) { return a.d == 1; }
inline Rat rat_min(Rat a, Rat b) { return rat_lt(a, b) ? a : b; }
inline long long rat_ceil(Rat a) { return a.n >= 0 ? (a.n + a.d - 1) / a.d : -((-a.n) / a.d); }
inline long long rat_floor(Rat a) { return -rat_ceil(rat_neg(a)); }

struct HullSegment {
  Rat slope;
  long long length;  // horizontal run
};

// lower convex hull of (x, y) points; returns segments left to right.
// Duplicate x keeps the lowest y.
inline std::vector<HullSegment> lower_hull(std::vector<std::pair<long long, Rat>> pts) {
  if (pts.size() < 2) return {};
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return rat_lt(a.second, b.second);
  });
  std::vector<std::pair<long long, Rat>> uniq;
  for (const auto& p : pts)
    if (uniq.empty() || uniq.back().first != p.first) uniq.push_back(p);
  std::vector<std::pair<long long, Rat>> hull;
  auto turns_up = [](const std::pair<long long, Rat>& a, const std::pair<long long, Rat>& b,
                     const std::pair<long long, Rat>& c) {
    // keep b iff slope(a,b) < slope(b,c)
    Rat s1 = rat_div(rat_sub(b.second, a.second), b.first - a.first);
    Rat s2 = rat_div(rat_sub(c.second, b.second), c.first - b.first);
    return rat_lt(s1, s2);
  };
  for (const auto& p : uniq) {
    while (hull.size() >= 2 && !turns_up(hull[hull.size() - 2], hull.back(), p)) hull.pop_back();
    hull.push_back(p);
  }
  std::vector<HullSegment> out;
  for (size_t i = 1; i < hull.size(); ++i) {
    long long run = hull[i].first - hull[i - 1].first;
    out.push_back({rat_div(rat_sub(hull[i].second, hull[i - 1].second), run), run});
  }
  return out;
}

}  // namespace carlitz
