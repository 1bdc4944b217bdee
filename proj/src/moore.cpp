// Chain complexes of presented cubical sets and their exact homology.
#include "cubical/moore.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "cubical/error.hpp"

namespace cubical::moore {

namespace {

using box::BoxMorphism;
using chains::AbelianGroup;
using chains::Int;
using chains::IntMatrix;
using cset::Cube;
using cset::CubePresentation;

void check_base(const CubePresentation& X, int base) {
  if (base < 0 || base >= static_cast<int>(X.gens.size()) || X.gens[base].dim != 0)
    throw Error("basepoint must name a vertex generator");
}

// The face operator (i,e) landing in dimension `cod`.
BoxMorphism face_morphism(int i, int e, int cod) {
  return box::from_word({box::face(i, e)}, cod - 1);
}

// All face matrices of degree n except (n, keep_e), stacked vertically.
// Its kernel is the degree-n normalized subgroup.
IntMatrix stacked_faces(const CubePresentation& X, const FreeCubicalChains& C,
                        int n, int keep_e) {
  const int rows_per = static_cast<int>(C.basis[n - 1].size());
  IntMatrix s((2 * n - 1) * rows_per, static_cast<int>(C.basis[n].size()));
  int blk = 0;
  for (int i = 1; i <= n; ++i)
    for (int e = 0; e <= 1; ++e) {
      if (i == n && e == keep_e) continue;
      IntMatrix f = face_matrix(X, C, n, i, e);
      for (int r = 0; r < rows_per; ++r)
        for (int c = 0; c < s.cols; ++c) s.at(blk * rows_per + r, c) = f.at(r, c);
      ++blk;
    }
  return s;
}

IntMatrix column_submatrix(const IntMatrix& m, const std::vector<int>& cols) {
  IntMatrix s(m.rows, static_cast<int>(cols.size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < s.cols; ++c) s.at(r, c) = m.at(r, cols[c]);
  return s;
}

// Indices of the images y·s_i (and y·g_{i,sign} when a sign is given) over
// all basis cubes y of degree n-1; these generate the degenerate subgroup.
std::set<int> degenerate_indices(const CubePresentation& X,
                                 const FreeCubicalChains& C, int n,
                                 const std::vector<int>& conn_signs) {
  std::set<int> d;
  if (n < 1) return d;
  auto insert_image = [&](const Cube& y, box::Letter l) {
    Cube img = cset::apply(X, y, box::from_word({l}, n));
    int idx = C.index_of(n, img);
    if (idx < 0) throw Error("internal: degeneracy image missing from basis");
    d.insert(idx);
  };
  for (const Cube& y : C.basis[n - 1]) {
    for (int i = 1; i <= n; ++i) insert_image(y, box::degen(i));
    for (int s : conn_signs)
      for (int i = 1; i + 1 <= n; ++i) insert_image(y, box::conn(i, s));
  }
  return d;
}

bool all_ones_smith(const IntMatrix& m) {
  if (m.rows == 0) return true;
  auto s = chains::smith_normal_form(m);
  if (s.rank != m.rows) return false;
  for (const Int& f : s.invariant_factors())
    if (f != 1) return false;
  return true;
}

}  // namespace

std::optional<Variant> variant_from_string(std::string_view s) {
  if (s == "none") return Variant::None;
  if (s == "s") return Variant::S;
  if (s == "sn") return Variant::SNeg;
  if (s == "sp") return Variant::SPos;
  if (s == "snp") return Variant::SBoth;
  return std::nullopt;
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::None: return "none";
    case Variant::S: return "s";
    case Variant::SNeg: return "sn";
    case Variant::SPos: return "sp";
    case Variant::SBoth: return "snp";
  }
  return "?";
}

box::LetterSet kept_letters(Variant v) {
  box::LetterSet k;  // face stays false: basis cubes are surjections
  switch (v) {
    case Variant::None:
      k.degeneracy = k.neg_connection = k.pos_connection = true;
      break;
    case Variant::S:
      k.neg_connection = k.pos_connection = true;
      break;
    case Variant::SNeg:
      k.pos_connection = true;
      break;
    case Variant::SPos:
      k.neg_connection = true;
      break;
    case Variant::SBoth:
      break;
  }
  return k;
}

int FreeCubicalChains::index_of(int degree, const Cube& c) const {
  if (degree < 0 || degree >= static_cast<int>(basis.size())) return -1;
  const auto& b = basis[degree];
  auto it = std::lower_bound(b.begin(), b.end(), c);
  if (it == b.end() || *it != c) return -1;
  return static_cast<int>(it - b.begin());
}

FreeCubicalChains build_complex(const CubePresentation& X, Variant v,
                                std::optional<int> base, int max_dim) {
  if (max_dim < 0) throw Error("chain complex needs a nonnegative top degree");
  if (base) check_base(X, *base);
  FreeCubicalChains C;
  C.variant = v;
  C.base = base;
  C.basis.resize(max_dim + 1);
  C.rep.dims.assign(max_dim + 1, 0);
  C.rep.boundary.resize(max_dim + 1);
  const box::LetterSet kept = kept_letters(v);
  for (int n = 0; n <= max_dim; ++n) {
    auto cs = cset::cubes(X, n, kept);
    if (base) std::erase_if(cs, [&](const Cube& c) { return c.gen == *base; });
    C.rep.dims[n] = static_cast<int>(cs.size());
    C.basis[n] = std::move(cs);
  }
  for (int n = 1; n <= max_dim; ++n) {
    IntMatrix d(C.rep.dims[n - 1], C.rep.dims[n]);
    for (int col = 0; col < d.cols; ++col) {
      const Cube& c = C.basis[n][col];
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e) {
          Cube r = cset::apply(X, c, face_morphism(i, e, n));
          int row = C.index_of(n - 1, r);
          if (row >= 0) d.at(row, col) += ((i + e) % 2 == 0) ? 1 : -1;
        }
    }
    C.rep.boundary[n] = std::move(d);
  }
  for (int n = 2; n <= max_dim; ++n)
    if (!chains::is_zero(chains::mul(C.rep.boundary[n - 1], C.rep.boundary[n])))
      throw Error("boundary squared is nonzero at degree " + std::to_string(n) +
                  " for variant " + to_string(v) +
                  "; this presentation does not admit that quotient");
  return C;
}

IntMatrix face_matrix(const CubePresentation& X, const FreeCubicalChains& C,
                      int n, int i, int e) {
  if (n < 1 || n > C.max_dim() || i < 1 || i > n || e < 0 || e > 1)
    throw Error("face matrix indices out of range");
  IntMatrix f(static_cast<int>(C.basis[n - 1].size()),
              static_cast<int>(C.basis[n].size()));
  for (int col = 0; col < f.cols; ++col) {
    Cube r = cset::apply(X, C.basis[n][col], face_morphism(i, e, n));
    int row = C.index_of(n - 1, r);
    if (row >= 0) f.at(row, col) += 1;
  }
  return f;
}

AbelianGroup homology(const CubePresentation& X, Variant v, int n, int max_dim) {
  if (n < 0) throw Error("homology degree must be nonnegative");
  const int md = std::max(max_dim, n + 1);
  return chains::homology_at(build_complex(X, v, std::nullopt, md).rep, n);
}

AbelianGroup reduced_homology(const CubePresentation& X, Variant v, int base,
                              int n, int max_dim) {
  if (n < 0) throw Error("homology degree must be nonnegative");
  const int md = std::max(max_dim, n + 1);
  return chains::homology_at(build_complex(X, v, base, md).rep, n);
}

NormalizedComplex normalized_complex(const CubePresentation& X, int base,
                                     int max_dim, bool mirror) {
  check_base(X, base);
  NormalizedComplex N;
  N.ambient = build_complex(X, Variant::None, base, max_dim);
  N.basis.resize(max_dim + 1);
  N.rep.dims.assign(max_dim + 1, 0);
  N.rep.boundary.resize(max_dim + 1);
  const int keep_e = mirror ? 1 : 0;
  for (int n = 0; n <= max_dim; ++n) {
    if (n == 0)
      N.basis[0] = IntMatrix::identity(N.ambient.rep.dims[0]);
    else
      N.basis[n] = chains::kernel_basis(stacked_faces(X, N.ambient, n, keep_e));
    N.rep.dims[n] = N.basis[n].cols;
  }
  for (int n = 1; n <= max_dim; ++n) {
    // The full boundary restricted to N lands in N; express it in the bases.
    IntMatrix img = chains::mul(N.ambient.rep.boundary[n], N.basis[n]);
    IntMatrix small(N.rep.dims[n - 1], N.rep.dims[n]);
    for (int col = 0; col < small.cols; ++col) {
      std::vector<Int> b(img.rows);
      for (int r = 0; r < img.rows; ++r) b[r] = img.at(r, col);
      auto sol = chains::solve(N.basis[n - 1], b);
      if (!sol)
        throw Error("internal: normalized boundary fails to restrict at degree " +
                    std::to_string(n));
      for (int r = 0; r < small.rows; ++r) small.at(r, col) = (*sol)[r];
    }
    N.rep.boundary[n] = std::move(small);
  }
  for (int n = 2; n <= max_dim; ++n)
    if (!chains::is_zero(chains::mul(N.rep.boundary[n - 1], N.rep.boundary[n])))
      throw Error("internal: normalized boundary squared is nonzero at degree " +
                  std::to_string(n));
  return N;
}

int QuotientComplex::project(int degree, const Cube& c) const {
  int amb = ambient.index_of(degree, c);
  if (amb < 0) return -1;
  return position[degree][amb];
}

QuotientComplex quotient_complex(const CubePresentation& X, Variant v,
                                 std::optional<int> base, int max_dim) {
  QuotientComplex Q;
  Q.ambient = build_complex(X, Variant::None, base, max_dim);
  Q.kept.resize(max_dim + 1);
  Q.position.resize(max_dim + 1);
  Q.rep.dims.assign(max_dim + 1, 0);
  Q.rep.boundary.resize(max_dim + 1);

  std::vector<int> signs;
  if (v == Variant::SNeg) signs = {0};
  if (v == Variant::SPos) signs = {1};
  if (v == Variant::SBoth) signs = {0, 1};
  std::vector<std::set<int>> killed(max_dim + 1);
  for (int n = 0; n <= max_dim; ++n) {
    if (v != Variant::None) killed[n] = degenerate_indices(X, Q.ambient, n, signs);
    const int amb = Q.ambient.rep.dims[n];
    Q.position[n].assign(amb, -1);
    for (int i = 0; i < amb; ++i)
      if (!killed[n].count(i)) {
        Q.position[n][i] = static_cast<int>(Q.kept[n].size());
        Q.kept[n].push_back(i);
      }
    Q.rep.dims[n] = static_cast<int>(Q.kept[n].size());
  }
  for (int n = 1; n <= max_dim; ++n) {
    const IntMatrix& amb_d = Q.ambient.rep.boundary[n];
    // The image subgroup must be boundary-closed for the projection to give
    // a quotient complex.
    for (int col : killed[n])
      for (int row : Q.kept[n - 1])
        if (amb_d.at(row, col) != 0)
          throw Error("degeneracy images are not boundary-closed at degree " +
                      std::to_string(n));
    IntMatrix d(Q.rep.dims[n - 1], Q.rep.dims[n]);
    for (int c = 0; c < d.cols; ++c)
      for (int r = 0; r < d.rows; ++r)
        d.at(r, c) = amb_d.at(Q.kept[n - 1][r], Q.kept[n][c]);
    Q.rep.boundary[n] = std::move(d);
  }
  for (int n = 2; n <= max_dim; ++n)
    if (!chains::is_zero(chains::mul(Q.rep.boundary[n - 1], Q.rep.boundary[n])))
      throw Error("internal: quotient boundary squared is nonzero at degree " +
                  std::to_string(n));
  return Q;
}

DecompositionReport check_decomposition(const CubePresentation& X, int n,
                                        Variant v, int base) {
  if (v != Variant::SNeg && v != Variant::SPos)
    throw Error("decomposition check takes a one-sign variant (sn or sp)");
  if (n < 0) throw Error("decomposition degree must be nonnegative");
  check_base(X, base);
  auto amb = build_complex(X, Variant::None, base, n);
  DecompositionReport rep;
  rep.degree = n;
  rep.ambient_rank = amb.rep.dims[n];

  IntMatrix nbasis;
  if (n == 0)
    nbasis = IntMatrix::identity(rep.ambient_rank);
  else
    nbasis = chains::kernel_basis(
        stacked_faces(X, amb, n, v == Variant::SPos ? 1 : 0));
  rep.normal_rank = nbasis.cols;

  std::set<int> dset =
      degenerate_indices(X, amb, n, {v == Variant::SPos ? 1 : 0});
  rep.degenerate_rank = static_cast<int>(dset.size());

  rep.square = rep.normal_rank + rep.degenerate_rank == rep.ambient_rank;
  if (rep.square) {
    IntMatrix m(rep.ambient_rank, rep.ambient_rank);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < rep.normal_rank; ++c) m.at(r, c) = nbasis.at(r, c);
    int c = rep.normal_rank;
    for (int idx : dset) m.at(idx, c++) = 1;
    rep.unimodular = all_ones_smith(m);
  }
  return rep;
}

WitnessReport counterexample_witness() {
  CubePresentation X = cset::builtin_circle();
  const int base = *X.base;
  auto amb = build_complex(X, Variant::None, base, 2);
  WitnessReport w;
  for (const Cube& c : amb.basis[2]) w.basis_names.push_back(cset::cube_string(X, c));
  w.chain.assign(w.basis_names.size(), 0);
  auto coeff = [&](std::string_view name, int v) {
    auto it = std::find(w.basis_names.begin(), w.basis_names.end(), name);
    if (it == w.basis_names.end()) throw Error("internal: missing basis cube");
    w.chain[it - w.basis_names.begin()] = v;
  };
  // The degenerate square minus the two connection squares on the loop.
  coeff("e.s1", 1);
  coeff("e.s2", 1);
  coeff("e.n1", -1);
  coeff("e.p1", -1);
  w.nonzero = true;

  w.all_faces_vanish = true;
  for (int i = 1; i <= 2; ++i)
    for (int e = 0; e <= 1; ++e)
      for (const Int& x : chains::mul(face_matrix(X, amb, 2, i, e), w.chain))
        if (x != 0) w.all_faces_vanish = false;

  std::set<int> dall = degenerate_indices(X, amb, 2, {0, 1});
  w.inside_all_letter_span = true;
  for (std::size_t k = 0; k < w.chain.size(); ++k)
    if (w.chain[k] != 0 && !dall.count(static_cast<int>(k)))
      w.inside_all_letter_span = false;

  IntMatrix stacked = stacked_faces(X, amb, 2, 0);
  std::set<int> done = degenerate_indices(X, amb, 2, {0});
  std::vector<int> one_cols(done.begin(), done.end());
  std::vector<int> all_cols(dall.begin(), dall.end());
  w.one_sign_intersection_rank =
      chains::kernel_basis(column_submatrix(stacked, one_cols)).cols;
  w.all_letter_intersection_rank =
      chains::kernel_basis(column_submatrix(stacked, all_cols)).cols;
  return w;
}

PiReport check_pi_n(const CubePresentation& X, int base, int n) {
  if (n < 0) throw Error("degree must be nonnegative");
  PiReport r;
  auto nc = normalized_complex(X, base, n + 1, false);
  r.normalized = chains::homology_at(nc.rep, n);
  r.quotient = reduced_homology(X, Variant::SNeg, base, n);
  r.equal = r.normalized == r.quotient;
  return r;
}

}  // namespace cubical::moore
