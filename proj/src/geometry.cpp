#include "squarefold/geometry.hpp"

namespace squarefold {

LatticeIso edge_transfer(Side from, Side to, bool flip) {
  IPoint a = side_origin(from), d = side_dir(from), n = side_inner_normal(from);
  IPoint a2 = side_origin(to), d2 = side_dir(to), n2 = side_inner_normal(to);
  // flip: t -> t, so d maps to d2; otherwise t -> 1-t and d maps to -d2.
  // Either way the interiors end up on opposite sides of the seam: n -> -n2.
  IPoint img_d = flip ? d2 : IPoint{-d2.x, -d2.y};
  IPoint img_n = {-n2.x, -n2.y};
  LatticeIso r;
  // (d, n) is an orthonormal lattice basis, so M = img_d * d^T + img_n * n^T.
  r.m00 = img_d.x * d.x + img_n.x * n.x;
  r.m01 = img_d.x * d.y + img_n.x * n.y;
  r.m10 = img_d.y * d.x + img_n.y * n.x;
  r.m11 = img_d.y * d.y + img_n.y * n.y;
  IPoint base = flip ? a2 : a2 + d2;  // image of the parameter-0 endpoint
  IPoint ra{r.m00 * a.x + r.m01 * a.y, r.m10 * a.x + r.m11 * a.y};
  r.tx = base.x - ra.x;
  r.ty = base.y - ra.y;
  return r;
}

}  // namespace squarefold
