// Presented cubical sets: validation, the cube calculus (face peeling),
// products, components, and the built-in examples.
#include "cubical/cset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cubical/error.hpp"

namespace cubical::cset {

using box::BoxMorphism;
using box::Letter;
using box::LetterKind;

int CubePresentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  return -1;
}

void validate(const CubePresentation& X) {
  int ng = static_cast<int>(X.gens.size());
  if (static_cast<int>(X.faces.size()) != ng)
    throw Error("face table size does not match generator count");
  for (int g = 0; g < ng; ++g) {
    int d = X.dim(g);
    if (d < 0) throw Error("generator '" + X.gens[g].name + "' has negative dimension");
    if (static_cast<int>(X.faces[g].size()) != 2 * d)
      throw Error("generator '" + X.gens[g].name + "' needs " + std::to_string(2 * d) +
                  " faces, has " + std::to_string(X.faces[g].size()));
    for (int i = 1; i <= d; ++i)
      for (int e = 0; e < 2; ++e) {
        const Cube& c = X.face(g, i, e);
        if (c.gen < 0 || c.gen >= ng)
          throw Error("face of '" + X.gens[g].name + "' names a missing generator");
        if (!c.op.surjective() || c.op.dom != d - 1 || c.op.cod != X.dim(c.gen))
          throw Error("face (" + std::to_string(i) + "," + std::to_string(e) +
                      ") of '" + X.gens[g].name + "' has an illegal operator");
      }
  }
  if (X.base && (*X.base < 0 || *X.base >= ng || X.dim(*X.base) != 0))
    throw Error("basepoint must be a 0-dimensional generator");

  // Face-face compatibility: lowering two indices in either order agrees.
  for (int g = 0; g < ng; ++g) {
    int d = X.dim(g);
    for (int i = 1; i <= d - 1; ++i)
      for (int j = 1; j <= i; ++j)
        for (int e = 0; e < 2; ++e)
          for (int e2 = 0; e2 < 2; ++e2) {
            auto lower = [&](const Cube& c, int idx, int ee) {
              return apply(X, c, box::from_word({box::face(idx, ee)}, d - 2));
            };
            Cube a = lower(X.face(g, j, e2), i, e);
            Cube b = lower(X.face(g, i + 1, e), j, e2);
            if (!(a == b))
              throw Error("face compatibility fails on '" + X.gens[g].name +
                          "' at (" + std::to_string(i) + "," + std::to_string(e) +
                          ")/(" + std::to_string(j) + "," + std::to_string(e2) + ")");
          }
  }
}

Cube apply(const CubePresentation& X, const Cube& c, const BoxMorphism& m) {
  if (m.cod != c.op.dom) throw Error("apply: dimension mismatch");
  BoxMorphism op = box::compose(m, c.op);
  int g = c.gen;
  // Peel the leftmost face letter (applied last, so it meets the generator
  // first) through the face table until the operator is surjective.  Each
  // round removes at least one face letter; rewriting never adds any.
  while (!op.faces.empty()) {
    Letter f0 = op.faces.front();
    const Cube& fc = X.face(g, f0.index, f0.sign);
    BoxMorphism rest;
    rest.dom = op.dom;
    rest.cod = op.cod - 1;
    rest.faces.assign(op.faces.begin() + 1, op.faces.end());
    rest.conns = op.conns;
    rest.degens = op.degens;
    op = box::compose(rest, fc.op);
    g = fc.gen;
  }
  return {g, std::move(op)};
}

std::vector<Cube> cubes(const CubePresentation& X, int n, box::LetterSet allowed) {
  allowed.face = false;  // cube operators are surjective
  std::vector<Cube> out;
  for (int g = 0; g < static_cast<int>(X.gens.size()); ++g) {
    if (X.dim(g) > n) continue;
    for (auto& m : box::enumerate_morphisms(n, X.dim(g), allowed))
      out.push_back({g, std::move(m)});
  }
  return out;
}

std::string cube_string(const CubePresentation& X, const Cube& c) {
  std::string s = X.gens[c.gen].name;
  if (!c.op.is_identity()) s += "." + box::word_string(c.op);
  return s;
}

Cube parse_cube(const CubePresentation& X, std::string_view text, int dim) {
  std::string_view name = text;
  std::string_view word;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    name = text.substr(0, dot);
    word = text.substr(dot + 1);
  }
  int g = X.index_of(name);
  if (g < 0) throw Error("unknown generator '" + std::string(name) + "'");
  BoxMorphism op = box::from_word(box::parse_word(word), dim);
  if (!op.surjective())
    throw Error("operator of '" + std::string(text) + "' uses face letters");
  if (op.cod != X.dim(g))
    throw Error("operator of '" + std::string(text) + "' does not land on '" +
                std::string(name) + "' (cod " + std::to_string(op.cod) + ", dim " +
                std::to_string(X.dim(g)) + ")");
  return {g, std::move(op)};
}

ProductResult product(const CubePresentation& X, const CubePresentation& Y) {
  ProductResult res;
  res.y_count = static_cast<int>(Y.gens.size());
  CubePresentation& P = res.p;
  for (const auto& gx : X.gens)
    for (const auto& gy : Y.gens)
      P.gens.push_back({"(" + gx.name + "," + gy.name + ")", gx.dim + gy.dim});
  P.faces.resize(P.gens.size());
  for (int i = 0; i < static_cast<int>(X.gens.size()); ++i)
    for (int j = 0; j < static_cast<int>(Y.gens.size()); ++j) {
      int dx = X.dim(i), dy = Y.dim(j);
      auto& table = P.faces[res.pair_gen(i, j)];
      table.resize(2 * (dx + dy));
      // Coordinates 1..dx belong to the X factor, the rest to Y.
      for (int f = 1; f <= dx; ++f)
        for (int e = 0; e < 2; ++e) {
          const Cube& c = X.face(i, f, e);
          table[(f - 1) * 2 + e] = {res.pair_gen(c.gen, j),
                                    box::tensor_id_right(c.op, dy)};
        }
      for (int f = 1; f <= dy; ++f)
        for (int e = 0; e < 2; ++e) {
          const Cube& c = Y.face(j, f, e);
          table[(dx + f - 1) * 2 + e] = {res.pair_gen(i, c.gen),
                                         box::tensor_id_left(dx, c.op)};
        }
    }
  if (X.base && Y.base) P.base = res.pair_gen(*X.base, *Y.base);
  return res;
}

Pi0Result pi0(const CubePresentation& X) {
  int ng = static_cast<int>(X.gens.size());
  std::vector<int> parent(ng);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int g = 0; g < ng; ++g) {
    if (X.dim(g) != 1) continue;
    int a = find(X.face(g, 1, 0).gen);
    int b = find(X.face(g, 1, 1).gen);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Pi0Result r;
  r.comp.assign(ng, -1);
  std::vector<int> label(ng, -1);
  for (int g = 0; g < ng; ++g) {
    if (X.dim(g) != 0) continue;
    int root = find(g);
    if (label[root] < 0) label[root] = r.classes++;
    r.comp[g] = label[root];
  }
  return r;
}

Cube map_cube(const CubePresentation& Y, const CubicalMap& f, const Cube& c) {
  return apply(Y, f.assign[c.gen], c.op);
}

void validate_map(const CubePresentation& X, const CubePresentation& Y,
                  const CubicalMap& f) {
  int ng = static_cast<int>(X.gens.size());
  if (static_cast<int>(f.assign.size()) != ng)
    throw Error("map must assign a cube to every generator");
  for (int g = 0; g < ng; ++g) {
    const Cube& img = f.assign[g];
    if (img.gen < 0 || img.gen >= static_cast<int>(Y.gens.size()))
      throw Error("image of '" + X.gens[g].name + "' names a missing generator");
    if (!img.op.surjective() || img.op.cod != Y.dim(img.gen))
      throw Error("image of '" + X.gens[g].name + "' is not a cube");
    if (img.op.dom != X.dim(g))
      throw Error("image of '" + X.gens[g].name + "' has the wrong dimension");
  }
  for (int g = 0; g < ng; ++g)
    for (int i = 1; i <= X.dim(g); ++i)
      for (int e = 0; e < 2; ++e) {
        Cube lhs = map_cube(Y, f, X.face(g, i, e));
        Cube rhs = apply(Y, f.assign[g],
                         box::from_word({box::face(i, e)}, X.dim(g) - 1));
        if (!(lhs == rhs))
          throw Error("map is not face-compatible on '" + X.gens[g].name +
                      "' at (" + std::to_string(i) + "," + std::to_string(e) + ")");
      }
}

namespace {

CubePresentation vertex_only(std::vector<std::string> names) {
  CubePresentation X;
  for (auto& n : names) X.gens.push_back({std::move(n), 0});
  X.faces.resize(X.gens.size());
  return X;
}

}  // namespace

CubePresentation builtin_point() {
  CubePresentation X = vertex_only({"v"});
  X.base = 0;
  return X;
}

CubePresentation builtin_two_points() {
  CubePresentation X = vertex_only({"a", "b"});
  X.base = 0;
  return X;
}

CubePresentation builtin_interval() {
  CubePresentation X = vertex_only({"v0", "v1"});
  X.gens.push_back({"e", 1});
  X.faces.push_back({{0, BoxMorphism::identity(0)}, {1, BoxMorphism::identity(0)}});
  X.base = 0;
  return X;
}

CubePresentation builtin_circle() {
  CubePresentation X = vertex_only({"v"});
  X.gens.push_back({"e", 1});
  X.faces.push_back({{0, BoxMorphism::identity(0)}, {0, BoxMorphism::identity(0)}});
  X.base = 0;
  return X;
}

CubePresentation builtin_sphere(int n) {
  if (n < 1) throw Error("sphere dimension must be at least 1");
  CubePresentation X = vertex_only({"v"});
  X.gens.push_back({"s", n});
  BoxMorphism collapse;  // the unique surjection [1]^(n-1) -> [1]^0
  collapse.dom = n - 1;
  collapse.cod = 0;
  for (int i = 1; i <= n - 1; ++i) collapse.degens.push_back(box::degen(i));
  X.faces.push_back(std::vector<Cube>(2 * n, Cube{0, collapse}));
  X.base = 0;
  return X;
}

CubePresentation builtin_torus() { return product(builtin_circle(), builtin_circle()).p; }

CubePresentation builtin_klein() {
  // One vertex, loops a, b, c, and two squares:
  //   U: left b, right b, bottom a, top c        (boundary a - c)
  //   V: left b, right a, bottom c, top b        (boundary a - 2b + c)
  // The relation matrix has Smith form diag(1, 2), so the complex carries
  // the Klein bottle's homology: H~1 = Z + Z/2 and H~2 = 0.
  CubePresentation X = vertex_only({"v"});
  auto vtx = Cube{0, BoxMorphism::identity(0)};
  for (const char* n : {"a", "b", "c"}) {
    X.gens.push_back({n, 1});
    X.faces.push_back({vtx, vtx});
  }
  auto edge = [&](const char* n) { return Cube{X.index_of(n), BoxMorphism::identity(1)}; };
  X.gens.push_back({"U", 2});
  X.faces.push_back({edge("b"), edge("b"), edge("a"), edge("c")});
  X.gens.push_back({"V", 2});
  X.faces.push_back({edge("b"), edge("a"), edge("c"), edge("b")});
  X.base = 0;
  return X;
}

std::optional<CubePresentation> builtin_by_name(std::string_view name) {
  if (name == "point") return builtin_point();
  if (name == "two_points") return builtin_two_points();
  if (name == "interval") return builtin_interval();
  if (name == "circle") return builtin_circle();
  if (name == "torus") return builtin_torus();
  if (name == "klein") return builtin_klein();
  if (name.substr(0, 6) == "sphere" && name.size() > 6) {
    int n = 0;
    for (char ch : name.substr(6)) {
      if (ch < '0' || ch > '9') return std::nullopt;
      n = n * 10 + (ch - '0');
      if (n > 64) return std::nullopt;
    }
    if (n >= 1) return builtin_sphere(n);
  }
  return std::nullopt;
}

}  // namespace cubical::cset
