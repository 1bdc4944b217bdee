// Chain-level verification of cubical homotopies.
//
// A homotopy between maps f, g : X -> Y is a map off the cylinder X x I,
// given by one cylinder cube per generator of X.  From it we build the
// degreewise chain maps and the prism operator alpha and verify
//   alpha d + d alpha = f# - g#
// exactly in every requested degree and chain-complex variant.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubical/cset.hpp"
#include "cubical/intmat.hpp"
#include "cubical/moore.hpp"

namespace cubical::homotopy {

struct HomotopyData {
  cset::CubePresentation X;  // source
  cset::CubePresentation Y;  // target
  cset::CubicalMap f;        // cylinder end at 0
  cset::CubicalMap g;        // cylinder end at 1
  std::vector<cset::Cube> h; // per X-generator: its cylinder cube (dim + 1)
  std::optional<int> base;   // vertex generator of X; engages reduced chains
  moore::Variant variant = moore::Variant::SNeg;
  int max_dim = 3;
};

// The cylinder map X x I -> Y assembled from f, g, h, in the generator
// order of cset::product(X, interval).
cset::CubicalMap cylinder_map(const HomotopyData& D);

struct HomotopyReport {
  moore::Variant variant = moore::Variant::SNeg;
  int max_dim = 0;
  std::vector<chains::IntMatrix> alpha;  // alpha[n] : C_n(X) -> C_{n+1}(Y)
  std::vector<bool> degree_ok;           // identity holds at degree n
  // Degenerate-image cubes of X prism to degenerate-image cubes of Y, so
  // alpha is well defined on the quotient.
  bool degeneracy_claim = true;
  bool ok() const {
    for (bool b : degree_ok)
      if (!b) return false;
    return degeneracy_claim;
  }
};

// Validates the maps and the cylinder (throws Error on structural failure:
// shape mismatches, face incompatibility, or a based homotopy that moves
// the basepoint), then checks the prism identity degree by degree on the
// variant's quotient complex (moore::quotient_complex).
HomotopyReport verify_chain_homotopy(const HomotopyData& D);

// JSON description:
//   {"space": ..., "target": ...,      builtin name or .cub path
//    "f": {gen: cube}, "g": {gen: cube}, "h": {gen: cube},
//    "base": name, "variant": "sn", "max_dim": 3}
// Cube strings use the generator.word syntax; h cubes have dimension
// dim(gen) + 1.  Relative paths resolve against the JSON file's directory.
HomotopyData load_homotopy(const std::string& path);

// Reduced homology at one degree under each quotient variant (s, sn, sp,
// snp); they are isomorphic by the chain-homotopy argument, and this makes
// the agreement checkable on concrete presentations.
struct VariantAgreementReport {
  int degree = 0;
  std::vector<moore::Variant> variants;
  std::vector<chains::AbelianGroup> groups;  // parallel to `variants`
  bool all_equal = false;
  std::string disagreement;  // empty when all_equal; else names the pair
};
VariantAgreementReport variant_agreement(const cset::CubePresentation& X,
                                         int base, int n);

}  // namespace cubical::homotopy
