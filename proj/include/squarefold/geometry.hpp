#pragma once

#include <array>
#include <cstdint>

#include "squarefold/surface.hpp"

namespace squarefold {

struct IPoint {
  long long x = 0;
  long long y = 0;

  friend IPoint operator+(IPoint a, IPoint b) { return {a.x + b.x, a.y + b.y}; }
  friend IPoint operator-(IPoint a, IPoint b) { return {a.x - b.x, a.y - b.y}; }
  bool operator==(const IPoint&) const = default;
};

inline long long dot(IPoint a, IPoint b) { return a.x * b.x + a.y * b.y; }
inline long long cross(IPoint a, IPoint b) { return a.x * b.y - a.y * b.x; }
inline long long squared_norm(IPoint a) { return dot(a, a); }

// Integer lattice isometry p -> M p + t with M one of the eight dihedral
// matrices. Closed under composition; maps lattice points to lattice points,
// which keeps unfolded source images exact.
struct LatticeIso {
  long long m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  long long tx = 0, ty = 0;

  IPoint apply(IPoint p) const {
    return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty};
  }
  // Composition: first `other`, then `this`.
  LatticeIso after(const LatticeIso& o) const {
    LatticeIso r;
    r.m00 = m00 * o.m00 + m01 * o.m10;
    r.m01 = m00 * o.m01 + m01 * o.m11;
    r.m10 = m10 * o.m00 + m11 * o.m10;
    r.m11 = m10 * o.m01 + m11 * o.m11;
    IPoint t = apply({o.tx, o.ty});
    r.tx = t.x;
    r.ty = t.y;
    return r;
  }
  LatticeIso inverse() const {
    // M is orthogonal with det +-1, so M^-1 = adj(M)/det = M^T for rotations
    // and M itself for reflections; computed via the adjugate either way.
    long long det = m00 * m11 - m01 * m10;  // +1 or -1
    LatticeIso r;
    r.m00 = m11 * det;
    r.m01 = -m01 * det;
    r.m10 = -m10 * det;
    r.m11 = m00 * det;
    r.tx = -(r.m00 * tx + r.m01 * ty);
    r.ty = -(r.m10 * tx + r.m11 * ty);
    return r;
  }
  bool operator==(const LatticeIso&) const = default;
};

// Local frame of every square is [0,1]^2; sides parameterized CCW.
inline IPoint side_origin(Side s) {
  constexpr std::array<IPoint, 4> k = {IPoint{1, 1}, {1, 0}, {0, 0}, {0, 1}};
  return k[side_index(s)];
}
inline IPoint side_dir(Side s) {
  constexpr std::array<IPoint, 4> k = {IPoint{-1, 0}, {0, 1}, {1, 0}, {0, -1}};
  return k[side_index(s)];
}
// Inward normal, rot90 of the CCW direction.
inline IPoint side_inner_normal(Side s) {
  IPoint d = side_dir(s);
  return {-d.y, d.x};
}

// Frame map of a glued edge: coordinates of the square containing `from`
// to coordinates of the square containing `to`, where (from, to, flip) is a
// glued side pair. Matches parameters t -> (flip ? t : 1-t) and unfolds the
// source square onto the far side of the seam.
LatticeIso edge_transfer(Side from, Side to, bool flip);

}  // namespace squarefold
