// Finitely presented cubical sets with connections.
//
// A presentation lists generators with dimensions and, for every generator
// of positive dimension, its 2*dim face cubes.  A cube is a generator acted
// on by a surjective operator word (degeneracies and connections); applying
// an arbitrary box morphism to a cube composes words and peels face letters
// through the face table.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubical/box.hpp"

namespace cubical::cset {

struct Generator {
  std::string name;
  int dim = 0;
};

// A cube: generator `gen` (index into the presentation) with a surjective
// operator; op.dom is the cube's dimension, op.cod the generator's.
struct Cube {
  int gen = 0;
  box::BoxMorphism op;
  friend auto operator<=>(const Cube&, const Cube&) = default;
};

struct CubePresentation {
  std::vector<Generator> gens;
  // faces[g] has 2*dim(g) entries, indexed (i-1)*2 + e.
  std::vector<std::vector<Cube>> faces;
  std::optional<int> base;  // designated 0-dimensional generator

  int dim(int gen) const { return gens[gen].dim; }
  int index_of(std::string_view name) const;  // -1 if absent
  const Cube& face(int gen, int i, int e) const { return faces[gen][(i - 1) * 2 + e]; }
};

// Structural validation: table shapes, operator legality, and the face-face
// compatibility identities on every generator.  Throws Error.
void validate(const CubePresentation& X);

// c · m for an arbitrary box morphism m with m.cod == dimension of c.
Cube apply(const CubePresentation& X, const Cube& c, const box::BoxMorphism& m);

// All cubes of dimension n whose operators use only the allowed (surjective)
// letter kinds; ordered by (generator index, operator).
std::vector<Cube> cubes(const CubePresentation& X, int n, box::LetterSet allowed);

inline bool degenerate(const Cube& c) { return !c.op.is_identity(); }

// "gen" or "gen.<letters>" with the operator word in application order.
std::string cube_string(const CubePresentation& X, const Cube& c);
// Parse the same syntax as a cube of dimension `dim`; throws Error.
Cube parse_cube(const CubePresentation& X, std::string_view text, int dim);

// Geometric product.  Generators are pairs named "(x,y)" in X-major order;
// operator blocks act on the two coordinate groups.
struct ProductResult {
  CubePresentation p;
  int y_count = 0;
  int pair_gen(int i, int j) const { return i * y_count + j; }
};
ProductResult product(const CubePresentation& X, const CubePresentation& Y);

// Connected components of the vertex generators, one relation per edge
// generator.  comp[g] is the class id for 0-dimensional g (ids numbered by
// first appearance in generator order), -1 for higher generators.
struct Pi0Result {
  int classes = 0;
  std::vector<int> comp;
};
Pi0Result pi0(const CubePresentation& X);

// A map of presented cubical sets: one same-dimension cube of Y per
// generator of X, extended to all cubes by composing operators.
struct CubicalMap {
  std::vector<Cube> assign;
};
Cube map_cube(const CubePresentation& Y, const CubicalMap& f, const Cube& c);
// Face-compatibility of the assignment on every generator; throws Error.
void validate_map(const CubePresentation& X, const CubePresentation& Y,
                  const CubicalMap& f);

// Built-in presentations.
CubePresentation builtin_point();
CubePresentation builtin_two_points();
CubePresentation builtin_interval();   // v0, v1, edge e
CubePresentation builtin_circle();     // one vertex, one loop
CubePresentation builtin_sphere(int n);  // vertex plus one n-cell, all faces collapsed
CubePresentation builtin_torus();      // circle x circle
CubePresentation builtin_klein();      // two-square complex with Klein-bottle homology
// Recognizes "point", "two_points", "interval", "circle", "sphere<k>",
// "torus", "klein".
std::optional<CubePresentation> builtin_by_name(std::string_view name);

}  // namespace cubical::cset
