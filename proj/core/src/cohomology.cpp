#include "folcoh/cohomology.hpp"

#include "folcoh/errors.hpp"

namespace folcoh {

namespace {

/// Numerator / denominator of one theory at one cell, as subspaces of the
/// cell's coordinate space.
struct Quotient {
  Subspace numer;
  Subspace denom;
};

Quotient cell_quotient(const DoubleComplex& dc, Theory theory, int p, int q) {
  switch (theory) {
    case Theory::Delta1:
      return {kernel_basis(dc.d1(p, q)), image(dc.d1(p - 1, q))};
    case Theory::Delta2:
      return {kernel_basis(dc.d2(p, q)), image(dc.d2(p, q - 1))};
    case Theory::BottChern: {
      Subspace numer = intersect(kernel_basis(dc.d1(p, q)), kernel_basis(dc.d2(p, q)));
      Matrix in_comp = dc.d1(p - 1, q) * dc.d2(p - 1, q - 1);
      return {numer, image(in_comp)};
    }
    case Theory::Aeppli: {
      Matrix out_comp = dc.d1(p, q + 1) * dc.d2(p, q);
      Subspace denom = sum(image(dc.d1(p - 1, q)), image(dc.d2(p, q - 1)));
      return {kernel_basis(out_comp), denom};
    }
    default:
      throw Error("cell_quotient: graded theory requested per cell");
  }
}

Quotient graded_quotient(const CochainComplex& cx, Theory theory, int j) {
  switch (theory) {
    case Theory::DeRham:
      return {kernel_basis(cx.d_at(j)), image(cx.d_at(j - 1))};
    case Theory::DLambda:
      return {kernel_basis(cx.dl_at(j)), image(cx.dl_at(j + 1))};
    case Theory::DPlusDLambda: {
      // A homogeneous form is (d + d_lambda)-closed iff both parts vanish.
      Subspace numer = intersect(kernel_basis(cx.d_at(j)), kernel_basis(cx.dl_at(j)));
      Matrix ddl = cx.d_at(j - 1) * cx.dl_at(j);
      return {numer, image(ddl)};
    }
    case Theory::DDLambda: {
      Matrix ddl = cx.d_at(j - 1) * cx.dl_at(j);
      Subspace denom = sum(image(cx.d_at(j - 1)), image(cx.dl_at(j + 1)));
      return {kernel_basis(ddl), denom};
    }
    default:
      throw Error("graded_quotient: bigraded theory requested per degree");
  }
}

}  // namespace

const char* theory_name(Theory t) {
  switch (t) {
    case Theory::Total: return "total";
    case Theory::Delta1: return "delta1";
    case Theory::Delta2: return "delta2";
    case Theory::BottChern: return "bott_chern";
    case Theory::Aeppli: return "aeppli";
    case Theory::DeRham: return "de_rham";
    case Theory::DLambda: return "d_lambda";
    case Theory::DPlusDLambda: return "d_plus_dlambda";
    case Theory::DDLambda: return "ddlambda";
  }
  return "?";
}

int CohomologyReport::total_in_degree(int n) const {
  if (!graded_dims.empty()) {
    auto it = graded_dims.find(n);
    return it == graded_dims.end() ? 0 : it->second;
  }
  int t = 0;
  for (const auto& [key, dim] : dims)
    if (key.first + key.second == n) t += dim;
  return t;
}

CohomologyReport cohomology_dims(const DoubleComplex& dc, Theory theory) {
  CohomologyReport rep;
  rep.theory = theory;
  if (theory == Theory::Total) {
    CochainComplex tot = total_complex(dc);  // throws Unbounded on periodic input
    for (const auto& [j, dim] : tot.degrees) {
      Quotient qt{kernel_basis(tot.d_at(j)), image(tot.d_at(j - 1))};
      rep.graded_dims[j] = quotient_dim(qt.numer, qt.denom);
      rep.graded_representatives.emplace(j, complement_in(qt.denom, qt.numer));
    }
    return rep;
  }
  for (const auto& [key, dim] : dc.cells) {
    Quotient qt = cell_quotient(dc, theory, key.first, key.second);
    rep.dims[key] = quotient_dim(qt.numer, qt.denom);
    rep.representatives.emplace(key, complement_in(qt.denom, qt.numer));
  }
  return rep;
}

CohomologyReport symplectic_cohomology_dims(const CochainComplex& cx, Theory theory) {
  if (theory != Theory::DeRham && !cx.has_d_lambda())
    throw MissingSecondDifferential("symplectic cohomology needs d_lambda");
  CohomologyReport rep;
  rep.theory = theory;
  for (const auto& [j, dim] : cx.degrees) {
    Quotient qt = graded_quotient(cx, theory, j);
    rep.graded_dims[j] = quotient_dim(qt.numer, qt.denom);
    rep.graded_representatives.emplace(j, complement_in(qt.denom, qt.numer));
  }
  return rep;
}

Matrix adjoint_matrix(const ModelSpec& spec, Op which, int p, int q) {
  switch (which) {
    case Op::Partial:
      return operator_matrix(spec, Op::Partial, p - 1, q).conjugate_transpose();
    case Op::Bar:
      return operator_matrix(spec, Op::Bar, p, q - 1).conjugate_transpose();
    case Op::D:
      return total_operator_matrix(spec, p - 1).conjugate_transpose();
  }
  throw Error("adjoint_matrix: unknown operator");
}

namespace {

struct Ops {
  const ModelSpec& spec;
  Matrix P(int p, int q) const { return operator_matrix(spec, Op::Partial, p, q); }
  Matrix B(int p, int q) const { return operator_matrix(spec, Op::Bar, p, q); }
  Matrix Ps(int p, int q) const { return P(p - 1, q).conjugate_transpose(); }
  Matrix Bs(int p, int q) const { return B(p, q - 1).conjugate_transpose(); }
  /// partial-bar composite into (p,q), from (p-1,q-1).
  Matrix comp_in(int p, int q) const { return P(p - 1, q) * B(p - 1, q - 1); }
  /// partial-bar composite out of (p,q), to (p+1,q+1).
  Matrix comp_out(int p, int q) const { return P(p, q + 1) * B(p, q); }
};

Matrix bc_laplacian_at(const Ops& o, int p, int q) {
  Matrix s = o.comp_in(p, q);                  // (p-1,q-1) -> (p,q)
  Matrix t = o.comp_out(p, q);                 // (p,q) -> (p+1,q+1)
  Matrix u_in = o.Bs(p, q + 1) * o.P(p - 1, q + 1);   // (p-1,q+1) -> (p,q)
  Matrix u_out = o.Bs(p + 1, q) * o.P(p, q);          // (p,q) -> (p+1,q-1)
  Matrix acc = s * s.conjugate_transpose() + t.conjugate_transpose() * t;
  acc = acc + u_in * u_in.conjugate_transpose() + u_out.conjugate_transpose() * u_out;
  acc = acc + o.Bs(p, q + 1) * o.B(p, q) + o.Ps(p + 1, q) * o.P(p, q);
  return acc;
}

Matrix aeppli_laplacian_at(const Ops& o, int p, int q) {
  Matrix s = o.comp_in(p, q);
  Matrix t = o.comp_out(p, q);
  Matrix v_out = o.B(p - 1, q) * o.Ps(p, q);          // (p,q) -> (p-1,q+1)
  Matrix v_in = o.B(p, q - 1) * o.Ps(p + 1, q - 1);   // (p+1,q-1) -> (p,q)
  Matrix acc = o.P(p - 1, q) * o.Ps(p, q) + o.B(p, q - 1) * o.Bs(p, q);
  acc = acc + t.conjugate_transpose() * t + s * s.conjugate_transpose();
  acc = acc + v_out.conjugate_transpose() * v_out + v_in * v_in.conjugate_transpose();
  return acc;
}

bool pairwise_orthogonal(const Subspace& a, const Subspace& b) {
  return (a.basis().conjugate_transpose() * b.basis()).is_zero();
}

}  // namespace

LaplacianSpec laplacian(const ModelSpec& spec, LaplacianKind which) {
  if (!spec.is_complex()) throw NotComplexModel("laplacian needs a complex model");
  LaplacianSpec out;
  out.which = which;
  Ops o{spec};
  int n = spec.half_codim;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      out.matrices[{p, q}] =
          which == LaplacianKind::BC ? bc_laplacian_at(o, p, q) : aeppli_laplacian_at(o, p, q);
  return out;
}

bool DecompositionReport::ok() const {
  for (const auto& [key, cell] : cells)
    if (!cell.ok()) return false;
  return true;
}

DecompositionReport decomposition_check(const ModelSpec& spec, LaplacianKind which) {
  if (!spec.is_complex()) throw NotComplexModel("decomposition needs a complex model");
  DecompositionReport rep;
  rep.which = which;
  LaplacianSpec lap = laplacian(spec, which);
  Ops o{spec};
  for (const auto& [key, mat] : lap.matrices) {
    auto [p, q] = key;
    int dim = mat.rows();
    Subspace harmonic = kernel_basis(mat);
    Subspace middle = which == LaplacianKind::BC
                          ? image(o.comp_in(p, q))
                          : sum(image(o.P(p - 1, q)), image(o.B(p, q - 1)));
    Subspace last = which == LaplacianKind::BC
                        ? sum(image(o.P(p, q).conjugate_transpose()),
                              image(o.B(p, q).conjugate_transpose()))
                        : image(o.comp_out(p, q).conjugate_transpose());
    DecompositionCell cell;
    cell.harmonic_dim = harmonic.dim();
    cell.middle_dim = middle.dim();
    cell.last_dim = last.dim();
    cell.dims_sum = cell.harmonic_dim + cell.middle_dim + cell.last_dim == dim;
    cell.intersections_trivial = intersect(harmonic, middle).dim() == 0 &&
                                 intersect(harmonic, last).dim() == 0 &&
                                 intersect(middle, last).dim() == 0;
    cell.orthogonal = pairwise_orthogonal(harmonic, middle) &&
                      pairwise_orthogonal(harmonic, last) && pairwise_orthogonal(middle, last);
    rep.cells[key] = cell;
  }
  return rep;
}

bool DualityReport::ok() const {
  for (const auto& [key, pr] : pairs)
    if (pr.first != pr.second) return false;
  return true;
}

DualityReport bc_aeppli_duality_check(const ModelSpec& spec) {
  if (!spec.is_complex()) throw NotComplexModel("duality needs a complex model");
  DoubleComplex dc = double_complex_from_model(spec);
  CohomologyReport total = cohomology_dims(dc, Theory::Total);
  int top = 2 * spec.half_codim;
  if (total.total_in_degree(top) != 1)
    throw NotOrientable("top cohomology is not one-dimensional");
  CohomologyReport bc = cohomology_dims(dc, Theory::BottChern);
  CohomologyReport ae = cohomology_dims(dc, Theory::Aeppli);
  int n = spec.half_codim;
  DualityReport rep;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      rep.pairs[{p, q}] = {bc.dims[{p, q}], ae.dims[{n - p, n - q}]};
  return rep;
}

}  // namespace folcoh
