#pragma once

#include <vector>

#include "skeintorus/surface.hpp"

namespace skeintorus {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Row-style Hermite normal form of the lattice spanned by the rows.
// Zero rows are dropped; the result is a canonical basis of the row lattice.
IntMat hermite_normal_form(IntMat rows);

// Basis of the integer kernel {k : M k = 0}, HNF-reduced (rows are the basis
// vectors).  Saturated by construction: unimodular column reduction of M.
IntMat integer_kernel(const IntMat& m);

// The indicator vectors k_beta of the boundary edges on each marked
// component, as rows over the edge labels of q (in label order of P).
std::map<Label, ExponentVector> boundary_vectors(const MarkedSurfaceSpec& surface,
                                                 const Quasitriangulation& q);

struct CenterReport {
  long nullity = 0;
  long marked_components = 0;
  bool nullity_matches = false;
  bool lattice_matches = false;   // ker P = span_Z{k_beta} after HNF
  bool centrality_holds = false;  // <k_beta, e_u>_P = 0 for all edges u
  std::vector<std::string> failures;

  bool ok() const { return nullity_matches && lattice_matches && centrality_holds; }
};

CenterReport verify_center(const MarkedSurfaceSpec& surface, const Quasitriangulation& q);

}  // namespace skeintorus
