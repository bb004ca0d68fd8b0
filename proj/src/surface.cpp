#include "squarefold/surface.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace squarefold {

namespace {

// Plain union-find, path halving + union by size.
struct Dsu {
  std::vector<int> parent;
  std::vector<int> size;

  explicit Dsu(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

int corner_id(const CornerRef& c) {
  return c.square * 4 + corner_index(c.corner);
}

// Corner pairs identified by one glued edge: the endpoints of the two sides,
// matched according to the orientation bit.
std::array<std::pair<CornerRef, CornerRef>, 2> endpoint_pairs(
    const Identification& id) {
  CornerRef a0{id.first.square, side_start(id.first.side)};
  CornerRef a1{id.first.square, side_end(id.first.side)};
  CornerRef b0{id.second.square, side_start(id.second.side)};
  CornerRef b1{id.second.square, side_end(id.second.side)};
  if (id.flip) return {{{a0, b0}, {a1, b1}}};
  return {{{a0, b1}, {a1, b0}}};
}

struct DihedralTables {
  // [elem][side] and [elem][corner]
  std::array<std::array<Side, 4>, 8> side;
  std::array<std::array<Corner, 4>, 8> corner;
};

std::pair<int, int> apply_elem(int elem, std::pair<int, int> p) {
  int r = elem & 3;
  for (int i = 0; i < r; ++i) p = {1 - p.second, p.first};  // quarter turn CCW
  if (elem >= 4) p.first = 1 - p.first;  // mirror across the vertical axis
  return p;
}

const DihedralTables& tables() {
  static const DihedralTables t = [] {
    DihedralTables out{};
    for (int e = 0; e < 8; ++e) {
      for (Corner c : all_corners) {
        auto img = apply_elem(e, corner_coords(c));
        for (Corner d : all_corners) {
          if (corner_coords(d) == img) out.corner[e][corner_index(c)] = d;
        }
      }
      for (Side s : all_sides) {
        // A side is determined by its endpoint pair.
        Corner i0 = out.corner[e][corner_index(side_start(s))];
        Corner i1 = out.corner[e][corner_index(side_end(s))];
        for (Side d : all_sides) {
          if ((side_start(d) == i0 && side_end(d) == i1) ||
              (side_start(d) == i1 && side_end(d) == i0)) {
            out.side[e][side_index(s)] = d;
          }
        }
      }
    }
    return out;
  }();
  return t;
}

}  // namespace

char side_letter(Side s) {
  static constexpr char k[] = {'N', 'E', 'S', 'W'};
  return k[side_index(s)];
}

Side side_from_letter(char c) {
  switch (c) {
    case 'N': return Side::N;
    case 'E': return Side::E;
    case 'S': return Side::S;
    case 'W': return Side::W;
    default: throw validation_error(std::string("bad side letter: ") + c);
  }
}

const char* corner_name(Corner c) {
  static constexpr const char* k[] = {"NE", "NW", "SW", "SE"};
  return k[corner_index(c)];
}

Side dihedral_side(int elem, Side s) {
  return tables().side[elem][side_index(s)];
}

Corner dihedral_corner(int elem, Corner c) {
  return tables().corner[elem][corner_index(c)];
}

void check_gluing(const Gluing& g) {
  if (g.n < 1) throw validation_error("gluing must have n >= 1");
  if (static_cast<int>(g.identifications.size()) != 2 * g.n)
    throw validation_error("gluing must have exactly 2n identifications");
  std::vector<char> seen(4 * g.n, 0);
  const Identification* prev = nullptr;
  for (const auto& id : g.identifications) {
    for (const SideRef& r : {id.first, id.second}) {
      if (r.square < 0 || r.square >= g.n)
        throw validation_error("side reference out of range");
      int key = r.square * 4 + side_index(r.side);
      if (seen[key]) throw validation_error("side glued more than once");
      seen[key] = 1;
    }
    if (!(id.first < id.second))
      throw validation_error("identification not normalized");
    if (prev && !(*prev < id))
      throw validation_error("identifications not sorted");
    prev = &id;
  }
}

Gluing Gluing::from_pairs(
    int n, const std::vector<std::tuple<int, Side, int, Side, bool>>& pairs) {
  Gluing g;
  g.n = n;
  for (const auto& [s1, d1, s2, d2, flip] : pairs) {
    Identification id{{s1, d1}, {s2, d2}, flip};
    if (id.second < id.first) std::swap(id.first, id.second);
    g.identifications.push_back(id);
  }
  std::sort(g.identifications.begin(), g.identifications.end());
  check_gluing(g);
  return g;
}

std::vector<int> Gluing::side_to_identification() const {
  std::vector<int> out(4 * n, -1);
  for (int i = 0; i < static_cast<int>(identifications.size()); ++i) {
    const auto& id = identifications[i];
    out[id.first.square * 4 + side_index(id.first.side)] = i;
    out[id.second.square * 4 + side_index(id.second.side)] = i;
  }
  return out;
}

std::vector<VertexClass> vertex_classes(const Gluing& g) {
  check_gluing(g);
  Dsu dsu(4 * g.n);
  for (const auto& id : g.identifications) {
    for (const auto& [a, b] : endpoint_pairs(id)) {
      dsu.unite(corner_id(a), corner_id(b));
    }
  }
  // Group corners by root, classes ordered by smallest corner id.
  std::vector<std::vector<int>> members(4 * g.n);
  for (int c = 0; c < 4 * g.n; ++c) members[dsu.find(c)].push_back(c);
  std::vector<VertexClass> out;
  for (int root = 0; root < 4 * g.n; ++root) {
    if (members[root].empty()) continue;
    VertexClass vc;
    for (int c : members[root]) {
      vc.corners.push_back(
          CornerRef{c / 4, static_cast<Corner>(c % 4)});
    }
    std::sort(vc.corners.begin(), vc.corners.end());
    vc.corner_count = static_cast<int>(vc.corners.size());
    vc.angle_quarters = vc.corner_count;
    vc.curvature_quarters = 4 - vc.corner_count;
    out.push_back(std::move(vc));
  }
  std::sort(out.begin(), out.end(),
            [](const VertexClass& a, const VertexClass& b) {
              return a.corners.front() < b.corners.front();
            });
  return out;
}

SurfaceCheck validate(const Gluing& g) {
  check_gluing(g);
  SurfaceCheck out;
  Dsu comp(g.n);
  for (const auto& id : g.identifications)
    comp.unite(id.first.square, id.second.square);
  int roots = 0;
  for (int i = 0; i < g.n; ++i)
    if (comp.find(i) == i) ++roots;
  out.connected = (roots == 1);

  auto classes = vertex_classes(g);
  int v = static_cast<int>(classes.size());
  out.euler_characteristic = v - 2 * g.n + g.n;
  out.max_corner_count = 0;
  for (const auto& vc : classes)
    out.max_corner_count = std::max(out.max_corner_count, vc.corner_count);
  for (auto& vc : classes)
    if (vc.corner_count < 4) out.cone_points.push_back(vc);
  out.valid = out.connected && out.euler_characteristic == 2 &&
              out.max_corner_count <= 4;
  return out;
}

std::vector<VertexClass> cone_points(const Gluing& g) {
  SurfaceCheck check = validate(g);
  if (!check.valid)
    throw validation_error("cone_points requires a valid gluing");
  return std::move(check.cone_points);
}

std::vector<int> corner_class_map(const Gluing& g,
                                  const std::vector<VertexClass>& classes) {
  std::vector<int> out(4 * g.n, -1);
  for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
    for (const auto& c : classes[i].corners) out[corner_id(c)] = i;
  }
  for (int x : out)
    if (x < 0) throw internal_error("corner class map incomplete");
  return out;
}

Gluing transform_gluing(const Gluing& g, const std::vector<int>& perm,
                        const std::vector<int>& dihedral) {
  if (static_cast<int>(perm.size()) != g.n ||
      static_cast<int>(dihedral.size()) != g.n)
    throw validation_error("transform arity mismatch");
  Gluing out;
  out.n = g.n;
  for (const auto& id : g.identifications) {
    int u = id.first.square, v = id.second.square;
    Identification t;
    t.first = {perm[u], dihedral_side(dihedral[u], id.first.side)};
    t.second = {perm[v], dihedral_side(dihedral[v], id.second.side)};
    // Reflecting one square reverses its CCW side traversals, toggling the
    // head-to-tail bit.
    t.flip = id.flip ^ dihedral_reflects(dihedral[u]) ^
             dihedral_reflects(dihedral[v]);
    if (t.second < t.first) std::swap(t.first, t.second);
    out.identifications.push_back(t);
  }
  std::sort(out.identifications.begin(), out.identifications.end());
  check_gluing(out);
  return out;
}

}  // namespace squarefold
