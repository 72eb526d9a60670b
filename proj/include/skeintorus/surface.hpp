#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skeintorus/qtorus.hpp"

namespace skeintorus {

struct BoundaryComponent {
  Label name;
  std::vector<Label> points;  // marked points in boundary order; empty = unmarked
  bool unmarked() const { return points.empty(); }
};

struct MarkedSurfaceSpec {
  std::vector<BoundaryComponent> components;
  long genus = 0;

  std::vector<Label> unmarked_components() const;
  std::vector<Label> marked_components() const;
  const BoundaryComponent& component(const Label& name) const;
  // component containing a marked point
  const BoundaryComponent& component_of_point(const Label& point) const;
};

struct HalfEdgeRef {
  Label edge;
  int end = 0;  // 0 or 1
  bool operator==(const HalfEdgeRef& o) const = default;
  bool operator<(const HalfEdgeRef& o) const {
    return edge != o.edge ? edge < o.edge : end < o.end;
  }
};

struct EdgeDef {
  Label name;
  Label p0, p1;  // endpoints of half-edges .0 and .1
  const Label& endpoint(int end) const { return end == 0 ? p0 : p1; }
};

struct Quasitriangulation {
  std::vector<EdgeDef> edges;
  // Per marked point: incident half-edges in clockwise order.  The two
  // boundary-segment stubs of the point are implicit at the two extremes.
  std::map<Label, std::vector<HalfEdgeRef>> vertex_orders;
  std::map<Label, Label> monogon_holes;  // monogon edge -> unmarked component
  std::set<Label> boundary_flags;

  bool has_edge(const Label& name) const;
  const EdgeDef& edge(const Label& name) const;
  std::vector<Label> edge_labels() const;
};

struct Face {
  enum class Kind { Triangle, HoledMonogon, Boundary };
  Kind kind;
  // Darts of the face cycle: each departs its vertex along (edge, end).
  std::vector<HalfEdgeRef> cycle;
  std::vector<Label> edges;            // edge labels in cycle order
  Label hole;                          // HoledMonogon: the unmarked component
  Label segment_component;             // Boundary: component owning the segment
  std::size_t segment_index = 0;       // Boundary: index of the segment
};

struct EdgeClassification {
  std::set<Label> boundary;   // Delta_bd
  std::set<Label> inner;      // Delta_in
  std::set<Label> monogon;    // Delta_mon
  std::set<Label> essential;  // Delta_ess = Delta \ Delta_mon
};

struct ValidationResult {
  std::vector<Face> faces;
  EdgeClassification classes;
  std::map<Label, Label> boundary_edge_component;  // boundary edge -> marked component
  long genus = 0;
};

// Trace all faces of the rotation system and check the quasitriangulation
// axioms; throws InvalidQuasitriangulation with the offending face.
ValidationResult validate(const MarkedSurfaceSpec& surface, const Quasitriangulation& q);

// Same, but derives the genus from the rotation system instead of checking
// the declared one (used when reading surface files).
ValidationResult validate_inferring_genus(MarkedSurfaceSpec& surface,
                                          const Quasitriangulation& q);

// Fills in boundary_flags from the traced boundary bigons (surface files do
// not carry the flags; validation re-checks them afterwards).
void infer_boundary_flags(const MarkedSurfaceSpec& surface, Quasitriangulation& q);

EdgeClassification classify_edges(const MarkedSurfaceSpec& surface,
                                  const Quasitriangulation& q);

// The antisymmetric vertex matrix over the edge labels.  Pure function of the
// rotation data; per marked point, half-edges a' of a and b' of b contribute
// sign(pos(a') - pos(b')) to P(a,b).
CommutationMatrix vertex_matrix(const Quasitriangulation& q);

// Commutation matrix of X(Delta): edge labels plus the unmarked components as
// central generators (zero rows).
CommutationMatrix x_matrix(const MarkedSurfaceSpec& surface, const Quasitriangulation& q);

ExponentVector boundary_vector(const MarkedSurfaceSpec& surface, const Quasitriangulation& q,
                               const Label& marked_component);

// Normalizes the arbitrary 0/1 labelling of half-edge ends so that
// triangulations can be compared structurally.
Quasitriangulation canonical_orientation(const Quasitriangulation& q);
bool same_quasitriangulation(const Quasitriangulation& a, const Quasitriangulation& b);

std::vector<std::string> builtin_names();
std::pair<MarkedSurfaceSpec, Quasitriangulation> builtin(const std::string& name);

}  // namespace skeintorus
