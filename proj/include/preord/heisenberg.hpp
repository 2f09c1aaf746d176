#pragma once

#include <optional>

#include "preord/rational.hpp"

namespace preord {

// Integral Heisenberg group on coordinate triples (a, b, c), identified with
// upper unitriangular 3x3 matrices (a = e12, b = e23, c = e13).
//   (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b')
struct Heis {
  Int a, b, c;

  bool operator==(const Heis& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const Heis& o) const { return !(*this == o); }
};

inline Heis h_id() { return Heis{0, 0, 0}; }

inline Heis h_mul(const Heis& x, const Heis& y) {
  return Heis{x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b};
}

inline Heis h_inv(const Heis& x) {
  // (a,b,c)^-1 = (-a,-b, ab-c)
  return Heis{-x.a, -x.b, x.a * x.b - x.c};
}

inline Heis h_conj(const Heis& g, const Heis& x) {  // g x g^-1
  return h_mul(h_mul(g, x), h_inv(g));
}

inline Heis h_comm(const Heis& x, const Heis& y) {  // [x,y] = x y x^-1 y^-1
  return h_mul(h_mul(x, y), h_mul(h_inv(x), h_inv(y)));
}

// Depth in the lower central series G = G_0 > [G,G] = G_1 > G_2 = 1:
// 0 off the center, 1 on the center minus identity, nullopt (infinite) at 1.
inline std::optional<int> h_tier(const Heis& x) {
  if (sgn(x.a) != 0 || sgn(x.b) != 0) return 0;
  if (sgn(x.c) != 0) return 1;
  return std::nullopt;
}

}  // namespace preord
