#include "skeintorus/center.hpp"

namespace skeintorus {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(IntVec& dst, const Int& c, const IntVec& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= c * src[i];
}

}  // namespace

IntMat hermite_normal_form(IntMat a) {
  if (a.empty()) return a;
  const std::size_t ncols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t piv = a.size();
    for (std::size_t i = r; i < a.size(); ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      // Euclid on the pair of leading entries.
      while (a[i][c] != 0) {
        Int q = a[r][c] / a[i][c];
        axpy(a[r], q, a[i]);
        std::swap(a[r], a[i]);
      }
    }
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(a[i][c], a[r][c]);
      if (q != 0) axpy(a[i], q, a[r]);
    }
    ++r;
  }
  a.resize(r);
  return a;
}

IntMat integer_kernel(const IntMat& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  // Work on [M^T | I]: unimodular row operations; rows whose M^T part
  // vanishes carry a saturated kernel basis in the identity part.
  IntMat work(cols, IntVec(rows + cols, 0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < rows; ++j) work[i][j] = m[j][i];
    work[i][rows + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < rows && r < work.size(); ++c) {
    std::size_t piv = work.size();
    for (std::size_t i = r; i < work.size(); ++i)
      if (work[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == work.size()) continue;
    std::swap(work[r], work[piv]);
    for (std::size_t i = r + 1; i < work.size(); ++i)
      while (work[i][c] != 0) {
        Int q = work[r][c] / work[i][c];
        axpy(work[r], q, work[i]);
        std::swap(work[r], work[i]);
      }
    ++r;
  }
  IntMat kernel;
  for (std::size_t i = r; i < work.size(); ++i)
    kernel.emplace_back(work[i].begin() + rows, work[i].end());
  return hermite_normal_form(std::move(kernel));
}

std::map<Label, ExponentVector> boundary_vectors(const MarkedSurfaceSpec& surface,
                                                 const Quasitriangulation& q) {
  ValidationResult val = validate(surface, q);
  std::map<Label, ExponentVector> out;
  for (const Label& comp : surface.marked_components()) out[comp] = ExponentVector{};
  for (const auto& [edge, comp] : val.boundary_edge_component) out[comp].set(edge, 1);
  return out;
}

CenterReport verify_center(const MarkedSurfaceSpec& surface, const Quasitriangulation& q) {
  CenterReport rep;
  CommutationMatrix p = vertex_matrix(q);
  const std::vector<Label>& labels = p.labels();

  IntMat m(labels.size(), IntVec(labels.size(), 0));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) m[i][j] = p.entries()[i][j];
  IntMat kernel = integer_kernel(m);
  rep.nullity = static_cast<long>(kernel.size());

  std::map<Label, ExponentVector> kb = boundary_vectors(surface, q);
  rep.marked_components = static_cast<long>(kb.size());
  rep.nullity_matches = rep.nullity == rep.marked_components;
  if (!rep.nullity_matches)
    rep.failures.push_back("Null(P) = " + std::to_string(rep.nullity) + " but " +
                           std::to_string(rep.marked_components) + " marked components");

  IntMat spanned;
  for (const auto& [comp, k] : kb) {
    IntVec row(labels.size(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i) row[i] = k.get(labels[i]);
    spanned.push_back(std::move(row));
  }
  rep.lattice_matches = hermite_normal_form(std::move(spanned)) == kernel;
  if (!rep.lattice_matches)
    rep.failures.push_back("ker P differs from the lattice spanned by the k_beta");

  rep.centrality_holds = true;
  for (const auto& [comp, k] : kb)
    for (const Label& u : labels)
      if (p.pairing(k, ExponentVector::unit(u)) != 0) {
        rep.centrality_holds = false;
        rep.failures.push_back("<k_" + comp + ", " + u + "> != 0");
      }
  return rep;
}

}  // namespace skeintorus
