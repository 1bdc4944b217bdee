// Smith normal form by minimal-pivot elimination with unimodular transforms,
// plus the kernel/solve/homology routines built on it.
#include "cubical/intmat.hpp"

#include <algorithm>
#include <sstream>

#include "cubical/error.hpp"

namespace cubical::chains {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw Error("matrix product: shape mismatch");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xv = x.at(i, k);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
    }
  return r;
}

std::vector<Int> mul(const IntMatrix& x, const std::vector<Int>& v) {
  if (x.cols != static_cast<int>(v.size())) throw Error("matrix-vector: shape mismatch");
  std::vector<Int> r(x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k)
      if (x.at(i, k) != 0 && v[k] != 0) r[i] += x.at(i, k) * v[k];
  return r;
}

bool is_zero(const IntMatrix& x) {
  return std::all_of(x.a.begin(), x.a.end(), [](const Int& v) { return v == 0; });
}

namespace {

// Row/column operations applied to d and mirrored into u (rows) / v (cols).
struct Worker {
  IntMatrix d, u, v;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < d.cols; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  void add_row(int dst, int src, const Int& q) {  // row dst += q * row src
    if (q == 0) return;
    for (int j = 0; j < d.cols; ++j) d.at(dst, j) += q * d.at(src, j);
    for (int j = 0; j < u.cols; ++j) u.at(dst, j) += q * u.at(src, j);
  }
  void add_col(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < d.rows; ++i) d.at(i, dst) += q * d.at(i, src);
    for (int i = 0; i < v.rows; ++i) v.at(i, dst) += q * v.at(i, src);
  }
  void negate_row(int r) {
    for (int j = 0; j < d.cols; ++j) d.at(r, j) = -d.at(r, j);
    for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
  }

  // Clear row and column t using entries of the submatrix spanned by rows
  // [t, rend) and columns [t, cend); afterwards d.at(t,t) is the only
  // nonzero in that row and column.  Returns false if the submatrix is
  // entirely zero.
  bool eliminate_at(int t, int rend, int cend) {
    while (true) {
      // Bring a minimal-magnitude nonzero entry to the pivot position.
      int pr = -1, pc = -1;
      for (int i = t; i < rend; ++i)
        for (int j = t; j < cend; ++j) {
          const Int& x = d.at(i, j);
          if (x == 0) continue;
          if (pr < 0 || abs(x) < abs(d.at(pr, pc))) { pr = i; pc = j; }
        }
      if (pr < 0) return false;
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      for (int i = t + 1; i < rend; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);  // truncating: remainder shrinks
        add_row(i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < cend; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        add_col(j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (clean) return true;
      // Some remainder survived; it is smaller than the pivot was, so the
      // next sweep picks it and the minimum strictly decreases.
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
  Worker w{a, IntMatrix::identity(a.rows), IntMatrix::identity(a.cols)};
  int limit = std::min(a.rows, a.cols);
  int r = 0;
  while (r < limit && w.eliminate_at(r, a.rows, a.cols)) ++r;

  // Enforce the divisibility chain d_t | d_{t+1}: fold the offender into
  // column t and re-eliminate inside the 2x2 block only (the pivot becomes
  // the gcd, its partner the lcm; nothing outside rows/cols t, t+1 moves).
  // Pairwise gcd/lcm passes over a diagonal converge; the cap is insurance.
  for (int pass = 0;; ++pass) {
    if (pass > 16 * (r + 1)) throw Error("internal: divisibility fix did not converge");
    bool changed = false;
    for (int t = 0; t + 1 < r; ++t) {
      if (w.d.at(t + 1, t + 1) % w.d.at(t, t) != 0) {
        w.add_col(t, t + 1, 1);
        w.eliminate_at(t, t + 2, t + 2);
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (int t = 0; t < r; ++t)
    if (w.d.at(t, t) < 0) w.negate_row(t);

  SmithResult res{std::move(w.d), std::move(w.u), std::move(w.v), r};
  return res;
}

std::vector<Int> SmithResult::invariant_factors() const {
  std::vector<Int> f;
  for (int t = 0; t < rank; ++t) f.push_back(d.at(t, t));
  return f;
}

int rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithResult s = smith_normal_form(a);
  IntMatrix k(a.cols, a.cols - s.rank);
  for (int i = 0; i < a.cols; ++i)
    for (int j = s.rank; j < a.cols; ++j) k.at(i, j - s.rank) = s.v.at(i, j);
  return k;
}

std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.rows) throw Error("solve: shape mismatch");
  SmithResult s = smith_normal_form(a);
  std::vector<Int> c = mul(s.u, b);
  std::vector<Int> y(a.cols);
  for (int i = 0; i < a.rows; ++i) {
    if (i < s.rank) {
      if (c[i] % s.d.at(i, i) != 0) return std::nullopt;
      if (i < a.cols) y[i] = c[i] / s.d.at(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return mul(s.v, y);
}

std::string to_string(const AbelianGroup& g) {
  std::ostringstream os;
  bool any = false;
  if (g.rank == 1) { os << "Z"; any = true; }
  else if (g.rank >= 2) { os << "Z^" << g.rank; any = true; }
  for (const Int& t : g.torsion) {
    if (any) os << " + ";
    os << "Z/" << t;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

AbelianGroup homology_at(const ChainComplexRep& c, int n) {
  if (n < 0 || n > c.top()) return {};
  int dim_n = c.dims[n];
  int rank_in = 0;  // rank of boundary_n (out of C_n)
  if (n >= 1) {
    const IntMatrix& b = c.boundary[n];
    if (b.cols != dim_n || b.rows != c.dims[n - 1])
      throw Error("homology_at: boundary shape mismatch");
    rank_in = rank(b);
  }
  AbelianGroup g;
  int rank_out = 0;  // rank of boundary_{n+1}
  if (n + 1 <= c.top()) {
    SmithResult s = smith_normal_form(c.boundary[n + 1]);
    rank_out = s.rank;
    for (const Int& f : s.invariant_factors())
      if (f > 1) g.torsion.push_back(f);
  }
  g.rank = dim_n - rank_in - rank_out;
  if (g.rank < 0) throw Error("homology_at: not a chain complex");
  return g;
}

}  // namespace cubical::chains
