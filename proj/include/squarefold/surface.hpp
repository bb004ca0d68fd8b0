#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace squarefold {

// Raised when an input fails a precondition (malformed gluing, invalid
// surface handed to an operation that requires validity, bad file content).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a configured resource cap (search nodes, window count) trips.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an internal consistency check fails; indicates a bug.
class internal_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sides and corners of a unit square. The boundary is directed
// counterclockwise; a side's parameter runs in [0,1] along that direction.
enum class Side : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };
enum class Corner : std::uint8_t { NE = 0, NW = 1, SW = 2, SE = 3 };

constexpr std::array<Side, 4> all_sides = {Side::N, Side::E, Side::S, Side::W};
constexpr std::array<Corner, 4> all_corners = {Corner::NE, Corner::NW,
                                               Corner::SW, Corner::SE};

constexpr int side_index(Side s) { return static_cast<int>(s); }
constexpr int corner_index(Corner c) { return static_cast<int>(c); }

char side_letter(Side s);
Side side_from_letter(char c);  // throws validation_error on anything else
const char* corner_name(Corner c);

// CCW traversal: N runs NE->NW, E runs SE->NE, S runs SW->SE, W runs NW->SW.
constexpr Corner side_start(Side s) {
  constexpr std::array<Corner, 4> k = {Corner::NE, Corner::SE, Corner::SW,
                                       Corner::NW};
  return k[side_index(s)];
}
constexpr Corner side_end(Side s) {
  constexpr std::array<Corner, 4> k = {Corner::NW, Corner::NE, Corner::SE,
                                       Corner::SW};
  return k[side_index(s)];
}
constexpr Side opposite(Side s) {
  constexpr std::array<Side, 4> k = {Side::S, Side::W, Side::N, Side::E};
  return k[side_index(s)];
}
// Side whose parameter-0 corner equals side_end(s); CCW successor on the
// boundary.
constexpr Side next_ccw(Side s) {
  constexpr std::array<Side, 4> k = {Side::W, Side::N, Side::E, Side::S};
  return k[side_index(s)];
}
constexpr Side prev_ccw(Side s) { return opposite(next_ccw(s)); }

// Coordinates in the square's local frame [0,1]^2.
constexpr std::pair<int, int> corner_coords(Corner c) {
  constexpr std::array<std::pair<int, int>, 4> k = {
      std::pair<int, int>{1, 1}, {0, 1}, {0, 0}, {1, 0}};
  return k[corner_index(c)];
}

struct SideRef {
  int square = 0;
  Side side = Side::N;

  auto operator<=>(const SideRef&) const = default;
};

struct CornerRef {
  int square = 0;
  Corner corner = Corner::NE;

  auto operator<=>(const CornerRef&) const = default;
};

// One glued edge pair. `flip == false` identifies the CCW traversals
// head-to-tail (the seam closes like facing pages); `flip == true`
// head-to-head. Stored with first < second.
struct Identification {
  SideRef first;
  SideRef second;
  bool flip = false;

  auto operator<=>(const Identification&) const = default;
};

// n unit squares plus a perfect matching of their 4n sides.
// Invariants: n >= 1; exactly 2n identifications; every side appears in
// exactly one identification; each identification normalized and the list
// sorted. A side is never glued to itself, but gluing two distinct sides of
// the same square is allowed.
struct Gluing {
  int n = 0;
  std::vector<Identification> identifications;

  // Builds a normalized gluing from raw pairs; throws validation_error if
  // the result does not satisfy the invariants.
  static Gluing from_pairs(
      int n,
      const std::vector<std::tuple<int, Side, int, Side, bool>>& pairs);

  // For each side (square*4 + side index), the identification covering it.
  std::vector<int> side_to_identification() const;

  bool operator==(const Gluing&) const = default;
};

// Throws validation_error unless g satisfies the Gluing invariants.
void check_gluing(const Gluing& g);

// Equivalence class of square corners meeting at one surface point.
struct VertexClass {
  std::vector<CornerRef> corners;  // sorted
  int corner_count = 0;            // == corners.size()
  int angle_quarters = 0;          // total angle in units of pi/2
  int curvature_quarters = 0;      // 4 - corner_count
};

struct SurfaceCheck {
  bool connected = false;
  int euler_characteristic = 0;
  int max_corner_count = 0;
  std::vector<VertexClass> cone_points;  // classes with corner_count < 4
  bool valid = false;
};

// Partition of all 4n corners under the adjacency induced by the glued edge
// endpoints. Classes are ordered by their smallest member.
std::vector<VertexClass> vertex_classes(const Gluing& g);

// Connectivity, Euler characteristic (V - 2n + n) and the angle condition.
// valid <=> connected && chi == 2 && every class has at most 4 corners.
SurfaceCheck validate(const Gluing& g);

// Classes with corner_count < 4, for a valid gluing only.
// Throws validation_error when validate(g).valid is false.
std::vector<VertexClass> cone_points(const Gluing& g);

// Per-corner class index (into the vertex_classes order), 4n entries.
std::vector<int> corner_class_map(const Gluing& g,
                                  const std::vector<VertexClass>& classes);

// Applies a square relabeling plus per-square dihedral relabelings.
// perm[i] is the new label of square i; dihedral[i] in [0,8) encodes the
// element applied to square i's frame (see dihedral_* helpers in
// enumerate.hpp). Used by symmetry tests and canonicalization.
Gluing transform_gluing(const Gluing& g, const std::vector<int>& perm,
                        const std::vector<int>& dihedral);

// Dihedral group of the square, elements 0..7: index r + 4*m is rotation by
// r quarter turns followed by mirroring across the vertical axis if m == 1.
Side dihedral_side(int elem, Side s);
Corner dihedral_corner(int elem, Corner c);
constexpr bool dihedral_reflects(int elem) { return elem >= 4; }

}  // namespace squarefold
