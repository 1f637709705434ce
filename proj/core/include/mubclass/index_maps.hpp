#pragma once

namespace mubclass {

// Inverse of a modulo the odd prime d (a must not be divisible by d).
int mod_inverse(long long a, int d);

// Basis-level action for odd prime d.  M_x (x in {0, ..., d}) is the
// basis-change unitary whose columns are the vectors of basis x; the map
// returns the basis index z such that M_x sends every vector of basis y
// into basis z:
//   y == d (computational) -> x
//   y == 0                 -> d
//   x == d                 -> y   (M_d acts trivially on basis labels)
//   otherwise              -> (x - inv(4y)) mod d
int unitary_index_map(int x, int y, int d);

struct IndexMapResult {
  int z = 0;  // image basis index
  int c = 0;  // image vector index within basis z
};

// Vector-level action: M_x |psi_{y,b}> ~ |psi_{z,c}> up to a global phase.
// On top of unitary_index_map, the vector index moves as
//   y == d -> c = b,   y == 0 -> c = -b mod d,   else c = b * inv(2y) mod d.
IndexMapResult vector_index_map(int x, int y, int b, int d);

// Complex conjugation: K |psi_{y,b}> = |psi_{z,c}> with z = -y mod d,
// c = -b mod d for curved bases, and the computational basis fixed
// pointwise.
IndexMapResult conj_index_map(int y, int b, int d);

}  // namespace mubclass
