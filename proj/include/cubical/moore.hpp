// Chain complexes of presented cubical sets over Z and their homology:
// the free complex of cube bases, quotients by degeneracy letters, the
// normalized (Moore-style) subcomplex of cubes killed by all but one face,
// the direct-sum decomposition check, and the homotopy-group surrogate.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubical/cset.hpp"
#include "cubical/intmat.hpp"

namespace cubical::moore {

// Which degeneracy letters are quotiented away.  None keeps every cube;
// S kills words using plain degeneracies; SNeg additionally kills max-merge
// words; SPos min-merge words instead; SBoth kills all degenerate cubes.
enum class Variant { None, S, SNeg, SPos, SBoth };

std::optional<Variant> variant_from_string(std::string_view s);  // none s sn sp snp
std::string to_string(Variant v);
box::LetterSet kept_letters(Variant v);

// Free chain complex: per-degree cube bases (variant letter filter; with a
// basepoint engaged the basepoint-rooted cubes are dropped, giving reduced
// chains) and alternating-sum boundary matrices.  Construction verifies
// boundary² = 0 and throws Error otherwise.
struct FreeCubicalChains {
  Variant variant = Variant::None;
  std::optional<int> base;
  std::vector<std::vector<cset::Cube>> basis;  // degree 0..max_dim, sorted
  chains::ChainComplexRep rep;

  int max_dim() const { return static_cast<int>(basis.size()) - 1; }
  int index_of(int degree, const cset::Cube& c) const;  // -1 if absent
};

FreeCubicalChains build_complex(const cset::CubePresentation& X, Variant v,
                                std::optional<int> base, int max_dim);

// Unsigned matrix of the single face map x -> x·(i,e) between consecutive
// bases of C (entries land in {0,1,...}: a 1 per resolved basis cube).
chains::IntMatrix face_matrix(const cset::CubePresentation& X,
                              const FreeCubicalChains& C, int n, int i, int e);

// Homology at degree n; the complex is built through degree n+1 (or more
// via max_dim) so the answer is complete.
chains::AbelianGroup homology(const cset::CubePresentation& X, Variant v, int n,
                              int max_dim = -1);
chains::AbelianGroup reduced_homology(const cset::CubePresentation& X, Variant v,
                                      int base, int n, int max_dim = -1);

// Normalized complex on the reduced, unquotiented chains: N_n is the
// saturated kernel of every face map except (n, keep_end), with the
// boundary induced by the full alternating sum (equivalently, the one
// remaining face with its sign).  keep_end is 0 normally, 1 mirrored.
struct NormalizedComplex {
  FreeCubicalChains ambient;
  std::vector<chains::IntMatrix> basis;  // N_n columns in ambient coordinates
  chains::ChainComplexRep rep;
};
NormalizedComplex normalized_complex(const cset::CubePresentation& X, int base,
                                     int max_dim, bool mirror = false);

// Quotient of the free (variant-None) complex by the subgroup generated by
// the variant's degeneracy images y·s_i and y·g_{i,sign}.  Every generator
// of that subgroup is a single basis cube, so the quotient is free on the
// image-complement cubes; `kept` lists their ambient indices per degree.
// Construction checks that the image subgroup is closed under the boundary
// and that the projected boundary squares to zero, throwing Error otherwise.
// This is the complex on which chain homotopies act; its homology agrees
// with the letter-filtered quotient and the normalized subcomplex.
struct QuotientComplex {
  FreeCubicalChains ambient;  // variant None
  std::vector<std::vector<int>> kept;      // ambient indices, increasing
  std::vector<std::vector<int>> position;  // ambient index -> kept slot or -1
  chains::ChainComplexRep rep;

  // Kept slot of an ambient cube, -1 if the cube is killed or absent.
  int project(int degree, const cset::Cube& c) const;
};
QuotientComplex quotient_complex(const cset::CubePresentation& X, Variant v,
                                 std::optional<int> base, int max_dim);

// Direct-sum check at one degree: ambient chains split as the normalized
// part plus the subgroup generated by the one-sign degeneracy images
// (degeneracies s_i and the matching connections).  Verified by gluing the
// two bases into a square matrix and demanding an all-ones Smith form.
struct DecompositionReport {
  int degree = 0;
  int ambient_rank = 0;
  int normal_rank = 0;
  int degenerate_rank = 0;
  bool square = false;
  bool unimodular = false;
  bool ok() const { return square && unimodular; }
};
DecompositionReport check_decomposition(const cset::CubePresentation& X, int n,
                                        Variant v, int base);

// Fixed counterexample on the loop-on-a-vertex presentation: a degree-2
// chain killed by every face map that lies inside the subgroup generated by
// ALL degeneracy images — so the two-sided analogue of the decomposition
// fails — while the one-sign degenerate subgroup meets the normalized part
// only in 0.
struct WitnessReport {
  std::vector<std::string> basis_names;   // degree-2 reduced basis
  std::vector<chains::Int> chain;         // the witness in that basis
  bool nonzero = false;
  bool all_faces_vanish = false;
  bool inside_all_letter_span = false;
  int one_sign_intersection_rank = -1;    // expected 0
  int all_letter_intersection_rank = -1;  // expected >= 1
  bool ok() const {
    return nonzero && all_faces_vanish && inside_all_letter_span &&
           one_sign_intersection_rank == 0 && all_letter_intersection_rank >= 1;
  }
};
WitnessReport counterexample_witness();

// Homotopy-group surrogate: H_n of the normalized complex against the
// reduced homology of the max-merge quotient; they must agree.
struct PiReport {
  chains::AbelianGroup normalized;
  chains::AbelianGroup quotient;
  bool equal = false;
};
PiReport check_pi_n(const cset::CubePresentation& X, int base, int n);

}  // namespace cubical::moore
