#pragma once

#include <memory>
#include <vector>

#include "logres/lattice.hpp"

namespace logres {

// Facet description of a rational polyhedral cone, computed once per cone.
// All data lives in the coordinates of the saturated lattice of the linear
// span, where the cone is full-dimensional.
struct ConeDual {
  long dim = 0;                          // dimension of the span
  std::vector<LatticePoint> span_basis;  // saturated basis of span, in Z^s
  IMat span_inv;  // span coords of v = span_inv * v when v lies in the span
  std::vector<LatticePoint> gens_span;   // generators in span coordinates
  std::vector<LatticePoint> normals;     // primitive facet normals (span coords)
  bool pointed = false;
  // Sum of the facet normals; strictly positive on the cone minus 0 when
  // pointed.
  LatticePoint height;
};

struct Cone {
  long rank = 0;  // ambient lattice rank
  std::vector<LatticePoint> gens;  // primitive, deduplicated, nonzero
  std::shared_ptr<const ConeDual> dual;  // lazily filled via cone_dual
};

// Normalizes generators (primitive part, dedup, zero dropped).  Rank checks
// raise DimensionMismatch.
Cone make_cone(long rank, std::vector<LatticePoint> gens);

const ConeDual& cone_dual(const Cone& c);

bool cone_member(const LatticePoint& v, const Cone& c);

bool cone_is_pointed(const Cone& c);

// Span coordinates of v, or nullopt when v is outside the linear span.
std::optional<LatticePoint> cone_span_coords(const Cone& c,
                                             const LatticePoint& v);

// Minimal generating set of the monoid (cone intersect lattice).  Requires a
// pointed cone; raises HilbertBoundExceeded when the enumeration box exceeds
// the configured bounds.
std::vector<LatticePoint> hilbert_basis(const Cone& c);

bool cone_equal(const Cone& a, const Cone& b);

// Indices (into cone_dual(c).normals) of the facet normals vanishing on all
// of pts; the common zero set of these normals cuts out the minimal face
// containing pts.
std::vector<size_t> face_normal_set(const Cone& c,
                                    const std::vector<LatticePoint>& pts);

// True when v lies on the face cut out by the given normal set.
bool on_face(const Cone& c, const std::vector<size_t>& normal_set,
             const LatticePoint& v);

// Generators of c lying on the face cut out by the normal set.
std::vector<LatticePoint> face_gens(const Cone& c,
                                    const std::vector<size_t>& normal_set);

}  // namespace logres
