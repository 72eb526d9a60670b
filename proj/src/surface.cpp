#include "skeintorus/surface.hpp"

#include <algorithm>
#include <sstream>

namespace skeintorus {

std::vector<Label> MarkedSurfaceSpec::unmarked_components() const {
  std::vector<Label> out;
  for (const auto& c : components)
    if (c.unmarked()) out.push_back(c.name);
  return out;
}

std::vector<Label> MarkedSurfaceSpec::marked_components() const {
  std::vector<Label> out;
  for (const auto& c : components)
    if (!c.unmarked()) out.push_back(c.name);
  return out;
}

const BoundaryComponent& MarkedSurfaceSpec::component(const Label& name) const {
  for (const auto& c : components)
    if (c.name == name) return c;
  throw MissingLabel("unknown boundary component " + name);
}

const BoundaryComponent& MarkedSurfaceSpec::component_of_point(const Label& point) const {
  for (const auto& c : components)
    for (const auto& p : c.points)
      if (p == point) return c;
  throw MissingLabel("unknown marked point " + point);
}

bool Quasitriangulation::has_edge(const Label& name) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const EdgeDef& e) { return e.name == name; });
}

const EdgeDef& Quasitriangulation::edge(const Label& name) const {
  for (const auto& e : edges)
    if (e.name == name) return e;
  throw MissingLabel("unknown edge " + name);
}

std::vector<Label> Quasitriangulation::edge_labels() const {
  std::vector<Label> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(e.name);
  return out;
}

namespace {

struct Entry {
  bool is_segment = false;
  Label edge;
  int end = 0;
  Label comp;
  std::size_t seg = 0;
  int stub = 0;  // 0 = departing stub at segment start, 1 = arriving stub at its end
  Label point;
};

struct RotationSystem {
  std::vector<Entry> entries;
  std::map<Label, std::vector<int>> point_lists;  // full cyclic CW list per point
  std::vector<int> opposite;
  std::vector<int> succ;
};

RotationSystem build_rotation(const MarkedSurfaceSpec& surface, const Quasitriangulation& q) {
  RotationSystem rs;
  std::map<std::pair<Label, int>, int> edge_entry;
  std::map<Label, const BoundaryComponent*> point_comp;
  std::map<Label, std::size_t> point_pos;

  for (const auto& comp : surface.components)
    for (std::size_t i = 0; i < comp.points.size(); ++i) {
      if (point_comp.count(comp.points[i]))
        throw InvalidQuasitriangulation("marked point " + comp.points[i] +
                                        " appears on two boundary components");
      point_comp[comp.points[i]] = &comp;
      point_pos[comp.points[i]] = i;
    }

  std::set<Label> edge_names;
  for (const auto& e : q.edges) {
    if (!edge_names.insert(e.name).second)
      throw InvalidQuasitriangulation("duplicate edge name " + e.name);
    if (!point_comp.count(e.p0) || !point_comp.count(e.p1))
      throw InvalidQuasitriangulation("edge " + e.name + " ends at an unknown marked point");
  }

  for (const auto& [point, list] : q.vertex_orders) {
    if (!point_comp.count(point))
      throw InvalidQuasitriangulation("vertex order given for unknown point " + point);
    if (list.empty())
      throw InvalidQuasitriangulation("empty vertex order at " + point);
  }
  for (const auto& [point, comp] : point_comp)
    if (!q.vertex_orders.count(point))
      throw InvalidQuasitriangulation("marked point " + point + " has no vertex order");

  // Segment stub entries, keyed by (component, segment index, stub).
  std::map<std::tuple<Label, std::size_t, int>, int> seg_entry;
  for (const auto& comp : surface.components) {
    const std::size_t r = comp.points.size();
    for (std::size_t i = 0; i < r; ++i)
      for (int stub : {0, 1}) {
        Entry e;
        e.is_segment = true;
        e.comp = comp.name;
        e.seg = i;
        e.stub = stub;
        e.point = stub == 0 ? comp.points[i] : comp.points[(i + 1) % r];
        seg_entry[{comp.name, i, stub}] = static_cast<int>(rs.entries.size());
        rs.entries.push_back(e);
      }
  }

  for (const auto& [point, list] : q.vertex_orders) {
    const BoundaryComponent& comp = *point_comp.at(point);
    const std::size_t r = comp.points.size();
    const std::size_t pos = point_pos.at(point);
    // arriving stub of the previous segment, then the edges, then the
    // departing stub of the next segment
    std::vector<int>& full = rs.point_lists[point];
    full.push_back(seg_entry.at({comp.name, (pos + r - 1) % r, 1}));
    for (const HalfEdgeRef& h : list) {
      const EdgeDef& e = q.edge(h.edge);
      if (h.end != 0 && h.end != 1)
        throw InvalidQuasitriangulation("bad half-edge index on " + h.edge);
      if (e.endpoint(h.end) != point)
        throw InvalidQuasitriangulation("half-edge " + h.edge + "." +
                                        std::to_string(h.end) + " listed at wrong point " +
                                        point);
      auto key = std::make_pair(h.edge, h.end);
      if (edge_entry.count(key))
        throw InvalidQuasitriangulation("half-edge " + h.edge + "." +
                                        std::to_string(h.end) + " listed twice");
      Entry ent;
      ent.edge = h.edge;
      ent.end = h.end;
      ent.point = point;
      edge_entry[key] = static_cast<int>(rs.entries.size());
      rs.entries.push_back(ent);
      full.push_back(edge_entry[key]);
    }
    full.push_back(seg_entry.at({comp.name, pos, 0}));
  }

  for (const auto& e : q.edges)
    for (int end : {0, 1})
      if (!edge_entry.count({e.name, end}))
        throw InvalidQuasitriangulation("half-edge " + e.name + "." + std::to_string(end) +
                                        " missing from the vertex orders");

  rs.opposite.assign(rs.entries.size(), -1);
  rs.succ.assign(rs.entries.size(), -1);
  for (std::size_t i = 0; i < rs.entries.size(); ++i) {
    const Entry& e = rs.entries[i];
    if (e.is_segment)
      rs.opposite[i] = seg_entry.at({e.comp, e.seg, 1 - e.stub});
    else
      rs.opposite[i] = edge_entry.at({e.edge, 1 - e.end});
  }
  for (const auto& [point, full] : rs.point_lists)
    for (std::size_t i = 0; i < full.size(); ++i)
      rs.succ[full[i]] = full[(i + 1) % full.size()];
  return rs;
}

std::vector<std::vector<int>> trace_orbits(const RotationSystem& rs) {
  std::vector<char> seen(rs.entries.size(), 0);
  std::vector<std::vector<int>> orbits;
  for (std::size_t start = 0; start < rs.entries.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    int d = static_cast<int>(start);
    do {
      seen[d] = 1;
      orbit.push_back(d);
      d = rs.succ[rs.opposite[d]];
    } while (d != static_cast<int>(start));
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::string face_str(const RotationSystem& rs, const std::vector<int>& orbit) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    const Entry& e = rs.entries[orbit[i]];
    if (i) os << " ";
    if (e.is_segment)
      os << "~" << e.comp;
    else
      os << e.edge;
  }
  os << ")";
  return os.str();
}

ValidationResult validate_impl(const MarkedSurfaceSpec& surface, const Quasitriangulation& q,
                               bool infer_genus, long* inferred_genus) {
  long total_points = 0;
  for (const auto& c : surface.components) total_points += static_cast<long>(c.points.size());
  if (total_points == 0)
    throw InvalidQuasitriangulation("surface has no marked points, not quasitriangulable");
  if (!infer_genus) {
    const long b0 = static_cast<long>(surface.components.size());
    if (surface.genus == 0 && b0 == 1 && total_points <= 2)
      throw InvalidQuasitriangulation(
          "a disk with at most two marked points has no quasitriangulation");
    if (surface.genus == 0 && b0 == 2 && total_points == 1)
      throw InvalidQuasitriangulation(
          "an annulus with one marked point has no quasitriangulation");
  }

  RotationSystem rs = build_rotation(surface, q);

  // Faces are the orbits of entry -> succ(opposite(entry)).
  std::vector<std::vector<int>> orbits = trace_orbits(rs);

  ValidationResult out;
  long phantom = 0;
  long disk_faces = 0;
  std::map<Label, Label> monogon_face_holes;
  for (const auto& orbit : orbits) {
    std::size_t nseg = 0, nedge = 0;
    for (int d : orbit) (rs.entries[d].is_segment ? nseg : nedge)++;
    if (nedge == 0) {
      ++phantom;
      continue;
    }
    Face f;
    for (int d : orbit) {
      const Entry& e = rs.entries[d];
      if (!e.is_segment) {
        f.cycle.push_back({e.edge, e.end});
        f.edges.push_back(e.edge);
      }
    }
    if (nseg > 0) {
      if (nseg != 1 || nedge != 1)
        throw InvalidQuasitriangulation("boundary face " + face_str(rs, orbit) +
                                        " is not a bigon");
      f.kind = Face::Kind::Boundary;
      for (int d : orbit)
        if (rs.entries[d].is_segment) {
          f.segment_component = rs.entries[d].comp;
          f.segment_index = rs.entries[d].seg;
        }
      ++disk_faces;
    } else if (nedge == 1) {
      const Label& e = f.edges[0];
      auto it = q.monogon_holes.find(e);
      if (it == q.monogon_holes.end())
        throw InvalidQuasitriangulation("monogon face " + face_str(rs, orbit) +
                                        " has no hole assigned");
      f.kind = Face::Kind::HoledMonogon;
      f.hole = it->second;
      monogon_face_holes[e] = it->second;
    } else if (nedge == 3) {
      f.kind = Face::Kind::Triangle;
      ++disk_faces;
    } else {
      throw InvalidQuasitriangulation("face " + face_str(rs, orbit) +
                                      " is neither a triangle nor a holed monogon");
    }
    out.faces.push_back(std::move(f));
  }

  if (phantom != static_cast<long>(surface.marked_components().size()))
    throw InvalidQuasitriangulation("boundary walk count does not match marked components");

  // Boundary edges: exactly the edges of boundary bigons, and flagged as such.
  std::set<Label> traced_boundary;
  for (const Face& f : out.faces)
    if (f.kind == Face::Kind::Boundary) {
      if (!traced_boundary.insert(f.edges[0]).second)
        throw InvalidQuasitriangulation("edge " + f.edges[0] + " bounds two boundary faces");
      out.boundary_edge_component[f.edges[0]] = f.segment_component;
    }
  if (traced_boundary != q.boundary_flags)
    throw InvalidQuasitriangulation("boundary edge flags disagree with the traced faces");

  // Monogon bookkeeping: the declared holes must match the traced monogons and
  // exhaust the unmarked components, one hole per monogon.
  if (monogon_face_holes != q.monogon_holes)
    throw InvalidQuasitriangulation("monogon hole assignments disagree with traced faces");
  std::set<Label> holes_seen;
  for (const auto& [edge, hole] : monogon_face_holes) {
    if (!surface.component(hole).unmarked())
      throw InvalidQuasitriangulation("hole " + hole + " is not an unmarked component");
    if (!holes_seen.insert(hole).second)
      throw InvalidQuasitriangulation("unmarked component " + hole +
                                      " sits in two monogons");
  }
  for (const Label& h : surface.unmarked_components())
    if (!holes_seen.count(h))
      throw InvalidQuasitriangulation("unmarked component " + h + " sits in no monogon");

  // Euler characteristic: holed monogons are annuli and contribute 0.
  long segments = 0;
  for (const auto& c : surface.components) segments += static_cast<long>(c.points.size());
  const long chi = total_points - (static_cast<long>(q.edges.size()) + segments) + disk_faces;
  const long b = static_cast<long>(surface.components.size());
  const long doubled = 2 - b - chi;
  if (doubled < 0 || doubled % 2 != 0)
    throw InvalidQuasitriangulation("rotation system does not close into an oriented surface");
  const long genus = doubled / 2;
  if (inferred_genus) *inferred_genus = genus;
  if (!infer_genus && genus != surface.genus)
    throw InvalidQuasitriangulation("genus mismatch: rotation system gives " +
                                    std::to_string(genus));
  out.genus = genus;

  // Quasitriangulability exclusions.
  if (genus == 0 && b == 1 && total_points <= 2)
    throw InvalidQuasitriangulation("a disk with at most two marked points has no "
                                    "quasitriangulation");
  if (genus == 0 && b == 2 && total_points == 1)
    throw InvalidQuasitriangulation("an annulus with one marked point has no "
                                    "quasitriangulation");

  out.classes.boundary = q.boundary_flags;
  for (const auto& e : q.edges)
    if (!q.boundary_flags.count(e.name)) out.classes.inner.insert(e.name);
  for (const auto& [edge, hole] : q.monogon_holes) {
    if (!out.classes.inner.count(edge))
      throw InvalidQuasitriangulation("monogon edge " + edge + " must be inner");
    out.classes.monogon.insert(edge);
  }
  for (const auto& e : q.edges)
    if (!out.classes.monogon.count(e.name)) out.classes.essential.insert(e.name);
  return out;
}

}  // namespace

ValidationResult validate(const MarkedSurfaceSpec& surface, const Quasitriangulation& q) {
  return validate_impl(surface, q, false, nullptr);
}

ValidationResult validate_inferring_genus(MarkedSurfaceSpec& surface,
                                          const Quasitriangulation& q) {
  long genus = 0;
  ValidationResult out = validate_impl(surface, q, true, &genus);
  surface.genus = genus;
  return out;
}

void infer_boundary_flags(const MarkedSurfaceSpec& surface, Quasitriangulation& q) {
  RotationSystem rs = build_rotation(surface, q);
  q.boundary_flags.clear();
  for (const auto& orbit : trace_orbits(rs)) {
    std::vector<Label> edges;
    bool has_segment = false;
    for (int d : orbit) {
      const Entry& e = rs.entries[d];
      if (e.is_segment)
        has_segment = true;
      else
        edges.push_back(e.edge);
    }
    if (has_segment && edges.size() == 1) q.boundary_flags.insert(edges[0]);
  }
}

EdgeClassification classify_edges(const MarkedSurfaceSpec& surface,
                                  const Quasitriangulation& q) {
  return validate(surface, q).classes;
}

CommutationMatrix vertex_matrix(const Quasitriangulation& q) {
  std::vector<Label> labels = q.edge_labels();
  std::map<Label, std::size_t> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = i;
  std::vector<std::vector<long>> m(labels.size(), std::vector<long>(labels.size(), 0));
  for (const auto& [point, list] : q.vertex_orders)
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        if (list[i].edge == list[j].edge) continue;
        m[idx.at(list[i].edge)][idx.at(list[j].edge)] -= 1;
        m[idx.at(list[j].edge)][idx.at(list[i].edge)] += 1;
      }
  return CommutationMatrix(std::move(labels), std::move(m));
}

CommutationMatrix x_matrix(const MarkedSurfaceSpec& surface,
                                const Quasitriangulation& q) {
  CommutationMatrix p = vertex_matrix(q);
  // Labels are sorted so that the torus does not depend on edge insertion
  // order (flip-and-back must land on the same torus).
  std::vector<Label> labels = p.labels();
  for (const Label& h : surface.unmarked_components()) labels.push_back(h);
  std::sort(labels.begin(), labels.end());
  const std::size_t n = labels.size();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.has(labels[i]) && p.has(labels[j])) m[i][j] = p.entry(labels[i], labels[j]);
  return CommutationMatrix(std::move(labels), std::move(m));
}

ExponentVector boundary_vector(const MarkedSurfaceSpec& surface, const Quasitriangulation& q,
                               const Label& marked_component) {
  ValidationResult val = validate(surface, q);
  ExponentVector k;
  for (const auto& [edge, comp] : val.boundary_edge_component)
    if (comp == marked_component) k.set(edge, 1);
  return k;
}

namespace {

Quasitriangulation make_q(std::vector<EdgeDef> edges,
                          std::map<Label, std::vector<HalfEdgeRef>> orders,
                          std::set<Label> boundary, std::map<Label, Label> holes = {}) {
  Quasitriangulation q;
  q.edges = std::move(edges);
  q.vertex_orders = std::move(orders);
  q.boundary_flags = std::move(boundary);
  q.monogon_holes = std::move(holes);
  return q;
}

}  // namespace

Quasitriangulation canonical_orientation(const Quasitriangulation& q) {
  std::map<std::pair<Label, int>, std::pair<Label, std::size_t>> pos;
  for (const auto& [point, list] : q.vertex_orders)
    for (std::size_t i = 0; i < list.size(); ++i) pos[{list[i].edge, list[i].end}] = {point, i};
  std::set<Label> swapped;
  Quasitriangulation out = q;
  for (auto& e : out.edges) {
    auto it0 = pos.find({e.name, 0});
    auto it1 = pos.find({e.name, 1});
    if (it0 == pos.end() || it1 == pos.end()) continue;
    if (it1->second < it0->second) {
      std::swap(e.p0, e.p1);
      swapped.insert(e.name);
    }
  }
  for (auto& [point, list] : out.vertex_orders)
    for (auto& h : list)
      if (swapped.count(h.edge)) h.end = 1 - h.end;
  return out;
}

bool same_quasitriangulation(const Quasitriangulation& a, const Quasitriangulation& b) {
  Quasitriangulation ca = canonical_orientation(a);
  Quasitriangulation cb = canonical_orientation(b);
  std::map<Label, std::pair<Label, Label>> ea, eb;
  for (const auto& e : ca.edges) ea[e.name] = {e.p0, e.p1};
  for (const auto& e : cb.edges) eb[e.name] = {e.p0, e.p1};
  return ea == eb && ca.vertex_orders == cb.vertex_orders &&
         ca.monogon_holes == cb.monogon_holes && ca.boundary_flags == cb.boundary_flags;
}

std::vector<std::string> builtin_names() {
  return {"triangle", "annulus2", "quad", "eye", "eye3", "eyes"};
}

std::pair<MarkedSurfaceSpec, Quasitriangulation> builtin(const std::string& name) {
  MarkedSurfaceSpec s;
  if (name == "triangle") {
    s.components = {{"rim", {"p1", "p2", "p3"}}};
    Quasitriangulation q = make_q(
        {{"a", "p1", "p2"}, {"b", "p2", "p3"}, {"c", "p3", "p1"}},
        {{"p1", {{"c", 1}, {"a", 0}}},
         {"p2", {{"a", 1}, {"b", 0}}},
         {"p3", {{"b", 1}, {"c", 0}}}},
        {"a", "b", "c"});
    return {s, q};
  }
  if (name == "annulus2") {
    s.components = {{"b1", {"p1"}}, {"b2", {"p2"}}};
    Quasitriangulation q = make_q(
        {{"a", "p1", "p2"}, {"b", "p1", "p2"}, {"c", "p1", "p1"}, {"d", "p2", "p2"}},
        {{"p1", {{"c", 0}, {"a", 0}, {"b", 0}, {"c", 1}}},
         {"p2", {{"d", 0}, {"a", 1}, {"b", 1}, {"d", 1}}}},
        {"c", "d"});
    return {s, q};
  }
  if (name == "quad") {
    s.components = {{"rim", {"p1", "p2", "p3", "p4"}}};
    Quasitriangulation q = make_q(
        {{"a", "p1", "p3"},
         {"b", "p1", "p2"},
         {"c", "p2", "p3"},
         {"d", "p3", "p4"},
         {"e", "p4", "p1"}},
        {{"p1", {{"e", 1}, {"a", 0}, {"b", 0}}},
         {"p2", {{"b", 1}, {"c", 0}}},
         {"p3", {{"c", 1}, {"a", 1}, {"d", 0}}},
         {"p4", {{"d", 1}, {"e", 0}}}},
        {"b", "c", "d", "e"});
    return {s, q};
  }
  if (name == "eye") {
    s.components = {{"outer", {"p1", "p2"}}, {"beta", {}}};
    Quasitriangulation q = make_q(
        {{"a", "p1", "p1"}, {"b", "p2", "p1"}, {"c", "p1", "p2"}},
        {{"p1", {{"b", 1}, {"a", 0}, {"a", 1}, {"c", 0}}},
         {"p2", {{"c", 1}, {"b", 0}}}},
        {"b", "c"}, {{"a", "beta"}});
    return {s, q};
  }
  if (name == "eye3") {
    s.components = {{"outer", {"p1", "p2", "p3"}}, {"beta", {}}};
    Quasitriangulation q = make_q(
        {{"a", "p1", "p1"},
         {"x", "p1", "p2"},
         {"b1", "p1", "p2"},
         {"b2", "p2", "p3"},
         {"b3", "p3", "p1"}},
        {{"p1", {{"b3", 1}, {"x", 0}, {"a", 0}, {"a", 1}, {"b1", 0}}},
         {"p2", {{"b1", 1}, {"x", 1}, {"b2", 0}}},
         {"p3", {{"b2", 1}, {"b3", 0}}}},
        {"b1", "b2", "b3"}, {{"a", "beta"}});
    return {s, q};
  }
  if (name == "eyes") {
    // disk with two unmarked holes, one monogon loop around each
    s.components = {{"outer", {"p1", "p2"}}, {"beta1", {}}, {"beta2", {}}};
    Quasitriangulation q = make_q(
        {{"a1", "p1", "p1"},
         {"a2", "p2", "p2"},
         {"x", "p1", "p2"},
         {"b1", "p1", "p2"},
         {"b2", "p2", "p1"}},
        {{"p1", {{"b2", 1}, {"x", 0}, {"a1", 0}, {"a1", 1}, {"b1", 0}}},
         {"p2", {{"b1", 1}, {"x", 1}, {"a2", 0}, {"a2", 1}, {"b2", 0}}}},
        {"b1", "b2"}, {{"a1", "beta1"}, {"a2", "beta2"}});
    return {s, q};
  }
  throw Error("unknown builtin surface " + name);
}

}  // namespace skeintorus
