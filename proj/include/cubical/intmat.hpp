// Exact integer linear algebra for chain-complex homology: dense matrices
// over arbitrary-precision integers, Smith normal form with transforms,
// saturated kernel lattices, and finitely generated abelian groups.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace cubical::chains {

using Int = boost::multiprecision::cpp_int;

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static IntMatrix identity(int n);

  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);
std::vector<Int> mul(const IntMatrix& x, const std::vector<Int>& v);
bool is_zero(const IntMatrix& x);

// u * a * v == d with u, v unimodular and d diagonal, nonnegative, each
// invariant factor dividing the next.
struct SmithResult {
  IntMatrix d, u, v;
  int rank = 0;
  std::vector<Int> invariant_factors() const;  // the nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& a);
int rank(const IntMatrix& a);

// Basis of the integer kernel lattice {x : a x = 0} as the columns of the
// result.  The basis is primitive (saturated): every integer kernel vector
// is an integer combination of the columns.
IntMatrix kernel_basis(const IntMatrix& a);

// One integer solution of a x = b, or nullopt if none exists.
std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b);

// Finitely generated abelian group, torsion in divisibility order (each
// entry > 1 and dividing the next).
struct AbelianGroup {
  int rank = 0;
  std::vector<Int> torsion;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// "0", "Z", "Z^r", with torsion appended as " + Z/d" terms; pure torsion
// prints without a leading 0.
std::string to_string(const AbelianGroup& g);

// Chain complex of free Z-modules: dims[n] = rank of C_n for 0 <= n <= top;
// boundary[n] : C_n -> C_{n-1} for 1 <= n <= top.  Boundaries outside the
// stored range are zero.
struct ChainComplexRep {
  std::vector<int> dims;
  std::vector<IntMatrix> boundary;  // boundary[0] unused
  int top() const { return static_cast<int>(dims.size()) - 1; }
};

// H_n = ker boundary_n / im boundary_{n+1}, exactly.
AbelianGroup homology_at(const ChainComplexRep& c, int n);

}  // namespace cubical::chains
