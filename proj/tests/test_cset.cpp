// Presentation tests: builtins validate, the cube calculus reproduces
// hand-computed face resolutions, products/components behave, and the .cub
// reader/writer round-trips with line-numbered errors.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "cubical/cubfile.hpp"
#include "cubical/cset.hpp"
#include "cubical/error.hpp"

using namespace cubical;
using namespace cubical::box;
using namespace cubical::cset;

namespace {

BoxMorphism op_of(std::string_view word, int dom) {
  return from_word(parse_word(word), dom);
}

Cube face_of(const CubePresentation& X, const Cube& c, int i, int e) {
  return apply(X, c, from_word({face(i, e)}, c.op.dom - 1));
}

const LetterSet kAllSurj{.degeneracy = true, .neg_connection = true, .pos_connection = true};

}  // namespace

TEST_CASE("builtins validate") {
  for (const char* name :
       {"point", "two_points", "interval", "circle", "sphere1", "sphere2",
        "sphere3", "torus", "klein"}) {
    CAPTURE(name);
    auto X = builtin_by_name(name);
    REQUIRE(X.has_value());
    CHECK_NOTHROW(validate(*X));
  }
  CHECK(!builtin_by_name("nope").has_value());
  CHECK(!builtin_by_name("sphere0").has_value());
  CHECK(!builtin_by_name("spherex").has_value());
}

TEST_CASE("cube enumeration sizes on the circle") {
  auto X = builtin_circle();
  CHECK(cubes(X, 0, kAllSurj).size() == 1);       // v
  CHECK(cubes(X, 1, kAllSurj).size() == 2);       // v.s1, e
  CHECK(cubes(X, 2, kAllSurj).size() == 5);       // v.s1s2 + 4 over e
  CHECK(cubes(X, 3, kAllSurj).size() == 16);      // 1 + 15
  // Only max-merge degeneracies allowed: e has s/n-free... p-only words.
  LetterSet pos_only{.degeneracy = false, .neg_connection = false, .pos_connection = true};
  CHECK(cubes(X, 2, pos_only).size() == 1);       // e.p1
}

TEST_CASE("face resolution through the face table") {
  auto circle = builtin_circle();
  // (e·max-merge) with the endpoint fed from the top: collapses to the
  // degenerate vertex edge.
  Cube c{1, op_of("n1", 2)};
  CHECK(face_of(circle, c, 2, 1) == Cube{0, op_of("s1", 1)});
  CHECK(face_of(circle, c, 1, 0) == Cube{1, BoxMorphism::identity(1)});
  CHECK(face_of(circle, c, 2, 0) == Cube{1, BoxMorphism::identity(1)});
  CHECK(face_of(circle, c, 1, 1) == Cube{0, op_of("s1", 1)});

  // Frozen face table of all four degenerate circle squares.
  Cube s1{1, op_of("s1", 2)}, s2{1, op_of("s2", 2)}, n1{1, op_of("n1", 2)},
      p1{1, op_of("p1", 2)};
  Cube e{1, BoxMorphism::identity(1)}, vs{0, op_of("s1", 1)};
  CHECK(face_of(circle, s1, 1, 0) == e);
  CHECK(face_of(circle, s1, 1, 1) == e);
  CHECK(face_of(circle, s1, 2, 0) == vs);
  CHECK(face_of(circle, s1, 2, 1) == vs);
  CHECK(face_of(circle, s2, 1, 0) == vs);
  CHECK(face_of(circle, s2, 1, 1) == vs);
  CHECK(face_of(circle, s2, 2, 0) == e);
  CHECK(face_of(circle, s2, 2, 1) == e);
  CHECK(face_of(circle, p1, 1, 1) == e);
  CHECK(face_of(circle, p1, 2, 1) == e);
  CHECK(face_of(circle, p1, 1, 0) == vs);
  CHECK(face_of(circle, p1, 2, 0) == vs);

  // Sphere: a merge on the big cell resolved through a collapsed face.
  auto sph = builtin_sphere(2);
  Cube sc{1, op_of("n1", 3)};
  CHECK(face_of(sph, sc, 3, 1) == Cube{0, op_of("s1.s1", 3 - 1)});
}

TEST_CASE("apply composes operators first") {
  auto circle = builtin_circle();
  Cube e{1, BoxMorphism::identity(1)};
  // Inserting an endpoint and deleting it again is the identity on e.
  CHECK(apply(circle, e, op_of("f1:0.s1", 1)) == e);
  // Contravariant action: c·(m2∘m1) = (c·m2)·m1.
  Cube one_shot = apply(circle, e, op_of("n1.p1", 3));
  Cube iterated = apply(circle, apply(circle, e, op_of("p1", 2)), op_of("n1", 3));
  CHECK(one_shot == iterated);
}

TEST_CASE("product structure: torus") {
  auto T = builtin_torus();
  REQUIRE(T.gens.size() == 4);
  CHECK(T.gens[0].name == "(v,v)");
  CHECK(T.gens[3].name == "(e,e)");
  CHECK(T.dim(3) == 2);
  CHECK(T.base == 0);
  CHECK_NOTHROW(validate(T));
  // Faces of the big square are the two edge cylinders, identity operators.
  CHECK(T.face(3, 1, 0) == Cube{T.index_of("(v,e)"), BoxMorphism::identity(1)});
  CHECK(T.face(3, 2, 1) == Cube{T.index_of("(e,v)"), BoxMorphism::identity(1)});

  // Product of interval with itself: mixed degenerate faces keep their
  // blocks on the right coordinates.
  auto I = builtin_interval();
  auto P = product(I, I);
  CHECK_NOTHROW(validate(P.p));
  int ee = P.pair_gen(2, 2);
  CHECK(P.p.dim(ee) == 2);
  CHECK(P.p.face(ee, 1, 0) == Cube{P.pair_gen(0, 2), BoxMorphism::identity(1)});
  CHECK(P.p.face(ee, 2, 1) == Cube{P.pair_gen(2, 1), BoxMorphism::identity(1)});
}

TEST_CASE("pi0 components") {
  CHECK(pi0(builtin_point()).classes == 1);
  CHECK(pi0(builtin_two_points()).classes == 2);
  CHECK(pi0(builtin_interval()).classes == 1);
  CHECK(pi0(builtin_circle()).classes == 1);
  CHECK(pi0(builtin_torus()).classes == 1);
  auto two = pi0(builtin_two_points());
  CHECK(two.comp == std::vector<int>{0, 1});
}

TEST_CASE("cube text syntax") {
  auto circle = builtin_circle();
  Cube c{1, op_of("s1.n1", 3)};
  CHECK(cube_string(circle, c) == "e.s1.n1");
  CHECK(parse_cube(circle, "e.s1.n1", 3) == c);
  CHECK(parse_cube(circle, "v", 0) == Cube{0, BoxMorphism::identity(0)});
  CHECK_THROWS_AS(parse_cube(circle, "w", 0), Error);
  CHECK_THROWS_AS(parse_cube(circle, "e.f1:0", 0), Error);  // face letter
  CHECK_THROWS_AS(parse_cube(circle, "e.s1", 3), Error);    // wrong codomain
}

TEST_CASE("cub round trip on all builtins") {
  for (const char* name :
       {"point", "two_points", "interval", "circle", "sphere2", "sphere3",
        "torus", "klein"}) {
    CAPTURE(name);
    auto X = *builtin_by_name(name);
    std::string text = serialize_cub(X);
    std::istringstream in(text);
    CubePresentation back = parse_cub(in);
    CHECK(back.gens.size() == X.gens.size());
    for (std::size_t g = 0; g < X.gens.size(); ++g) {
      CHECK(back.gens[g].name == X.gens[g].name);
      CHECK(back.gens[g].dim == X.gens[g].dim);
      CHECK(back.faces[g] == X.faces[g]);
    }
    CHECK(back.base == X.base);
    CHECK(serialize_cub(back) == text);
  }
}

TEST_CASE("cub parse errors carry line numbers") {
  auto expect_error = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      parse_cub(in);
      FAIL_CHECK("expected ParseError for:\n" << text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_error("cube v 0\ncube v 0\n", 2);                       // duplicate name
  expect_error("cube v 0\nfrob v\n", 2);                         // unknown directive
  expect_error("cube e 1\nface e 1 0 = e.s1\n", 2);              // unknown... wrong word
  expect_error("cube v 0\ncube e 1\nface e 1 0 = v\nface e 1 0 = v\n", 4);  // dup face
  expect_error("cube v 0\ncube e 1\nface e 2 0 = v\n", 3);       // index range
  expect_error("cube v 0\ncube e 1\nface e 1 0 = w\n", 3);       // unknown gen
  expect_error("cube v 0\nbase w\n", 2);                         // unknown base
  expect_error("cube v 0\ncube e 1\nbase e\n", 3);               // base not a vertex
  expect_error("cube v 0\ncube e 1\nface e 1 0 = v\n", 3);       // missing face -> last line
  expect_error("cube v 0\nface v 1 0 = v\n", 2);                 // vertex has no faces

  // A well-formed file parses and validates.
  std::istringstream ok(
      "# two loops sharing a vertex\n"
      "cube v 0\n"
      "cube e 1\n"
      "cube f 1\n"
      "base v\n"
      "face e 1 0 = v\n"
      "face e 1 1 = v\n"
      "face f 1 0 = v\n"
      "face f 1 1 = v\n");
  auto X = parse_cub(ok);
  CHECK(X.gens.size() == 3);
  CHECK(pi0(X).classes == 1);
}

TEST_CASE("maps validate by face compatibility") {
  auto circle = builtin_circle();
  CubicalMap ident{{Cube{0, BoxMorphism::identity(0)}, Cube{1, BoxMorphism::identity(1)}}};
  CHECK_NOTHROW(validate_map(circle, circle, ident));

  // Collapse the loop to the degenerate vertex edge: still a map.
  CubicalMap collapse{{Cube{0, BoxMorphism::identity(0)}, Cube{0, op_of("s1", 1)}}};
  CHECK_NOTHROW(validate_map(circle, circle, collapse));

  // Interval onto circle: fine (both endpoints hit the vertex).
  auto I = builtin_interval();
  CubicalMap wrap{{Cube{0, BoxMorphism::identity(0)}, Cube{0, BoxMorphism::identity(0)},
                   Cube{1, BoxMorphism::identity(1)}}};
  CHECK_NOTHROW(validate_map(I, circle, wrap));

  // Dimension mismatch and face mismatch are rejected.
  CubicalMap bad_dim{{Cube{1, BoxMorphism::identity(1)}, Cube{1, BoxMorphism::identity(1)}}};
  CHECK_THROWS_AS(validate_map(circle, circle, bad_dim), Error);
  auto two = builtin_two_points();
  // Map interval so the endpoints separate but the edge collapses: breaks.
  CubicalMap split{{Cube{0, BoxMorphism::identity(0)}, Cube{1, BoxMorphism::identity(0)},
                    Cube{0, op_of("s1", 1)}}};
  CHECK_THROWS_AS(validate_map(I, two, split), Error);
}

TEST_CASE("shipped presentation files match the built-ins byte for byte") {
  const std::string dir = CUBICAL_DATA_DIR;
  for (const char* name : {"point", "two_points", "interval", "circle",
                           "sphere2", "sphere3", "torus", "klein"}) {
    INFO("fixture ", name);
    std::ifstream in(dir + "/" + name + ".cub");
    REQUIRE(in.good());
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == serialize_cub(*builtin_by_name(name)));
  }
}
