// Chain-level homotopy verification and its JSON loader.
#include "cubical/homotopy.hpp"

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <utility>

#include "cubical/cubfile.hpp"
#include "cubical/error.hpp"

namespace cubical::homotopy {

namespace {

using chains::IntMatrix;
using cset::Cube;
using cset::CubePresentation;

constexpr int kIntervalCylinderGen = 2;  // v0, v1, e in builtin_interval order

void check_shapes(const HomotopyData& D) {
  const auto gens = D.X.gens.size();
  if (D.f.assign.size() != gens || D.g.assign.size() != gens ||
      D.h.size() != gens)
    throw Error("homotopy data must assign f, g, h on every generator");
  for (std::size_t i = 0; i < gens; ++i) {
    const int d = D.X.gens[i].dim;
    if (D.f.assign[i].op.dom != d || D.g.assign[i].op.dom != d)
      throw Error("map image of generator " + D.X.gens[i].name +
                  " has the wrong dimension");
    if (D.h[i].op.dom != d + 1)
      throw Error("cylinder cube of generator " + D.X.gens[i].name +
                  " must have dimension " + std::to_string(d + 1));
  }
  if (D.max_dim < 0) throw Error("max_dim must be nonnegative");
}

void check_based(const HomotopyData& D) {
  if (!D.base) return;
  const int b = *D.base;
  if (b < 0 || b >= static_cast<int>(D.X.gens.size()) || D.X.gens[b].dim != 0)
    throw Error("basepoint must name a vertex generator");
  const Cube& fb = D.f.assign[b];
  const Cube& gb = D.g.assign[b];
  if (!(fb == gb) || !fb.op.is_identity())
    throw Error("a based homotopy needs f and g to send the basepoint to the "
                "same vertex");
  Cube degenerate_edge{fb.gen, box::from_word({box::degen(1)}, 1)};
  if (!(D.h[b] == degenerate_edge))
    throw Error("a based homotopy must be constant on the basepoint");
}

}  // namespace

cset::CubicalMap cylinder_map(const HomotopyData& D) {
  auto P = cset::product(D.X, cset::builtin_interval());
  cset::CubicalMap H;
  H.assign.resize(P.p.gens.size());
  for (int i = 0; i < static_cast<int>(D.X.gens.size()); ++i) {
    H.assign[P.pair_gen(i, 0)] = D.f.assign[i];
    H.assign[P.pair_gen(i, 1)] = D.g.assign[i];
    H.assign[P.pair_gen(i, kIntervalCylinderGen)] = D.h[i];
  }
  return H;
}

HomotopyReport verify_chain_homotopy(const HomotopyData& D) {
  check_shapes(D);
  check_based(D);
  cset::validate(D.X);
  cset::validate(D.Y);
  cset::validate_map(D.X, D.Y, D.f);
  cset::validate_map(D.X, D.Y, D.g);

  auto P = cset::product(D.X, cset::builtin_interval());
  cset::CubicalMap H = cylinder_map(D);
  cset::validate_map(P.p, D.Y, H);  // subsumes the cylinder end conditions

  std::optional<int> base_y;
  if (D.base) base_y = D.f.assign[*D.base].gen;
  auto CX = moore::quotient_complex(D.X, D.variant, D.base, D.max_dim);
  auto CY = moore::quotient_complex(D.Y, D.variant, base_y, D.max_dim + 1);

  HomotopyReport rep;
  rep.variant = D.variant;
  rep.max_dim = D.max_dim;
  rep.alpha.resize(D.max_dim + 1);

  auto prism_image = [&](const Cube& z) {
    Cube prism{P.pair_gen(z.gen, kIntervalCylinderGen),
               box::tensor_id_right(z.op, 1)};
    return cset::map_cube(D.Y, H, prism);
  };

  // Chain maps f#, g# and the prism alpha: a basis cube (gen, s) of X maps
  // to the cylinder cube over (gen, interval edge) with operator s x id,
  // pushed through H, with sign (-1)^(n+1).
  std::vector<IntMatrix> fsharp(D.max_dim + 1), gsharp(D.max_dim + 1);
  for (int n = 0; n <= D.max_dim; ++n) {
    const int xc = CX.rep.dims[n];
    fsharp[n] = IntMatrix(CY.rep.dims[n], xc);
    gsharp[n] = IntMatrix(CY.rep.dims[n], xc);
    rep.alpha[n] = IntMatrix(CY.rep.dims[n + 1], xc);
    const int sign = (n % 2 == 0) ? -1 : 1;
    for (int col = 0; col < xc; ++col) {
      const Cube& z = CX.ambient.basis[n][CX.kept[n][col]];
      int fr = CY.project(n, cset::map_cube(D.Y, D.f, z));
      if (fr >= 0) fsharp[n].at(fr, col) += 1;
      int gr = CY.project(n, cset::map_cube(D.Y, D.g, z));
      if (gr >= 0) gsharp[n].at(gr, col) += 1;
      int ar = CY.project(n + 1, prism_image(z));
      if (ar >= 0) rep.alpha[n].at(ar, col) += sign;
    }
    // Killed cubes must prism to killed cubes, so alpha descends.
    for (int amb = 0; amb < CX.ambient.rep.dims[n]; ++amb)
      if (CX.position[n][amb] < 0 &&
          CY.project(n + 1, prism_image(CX.ambient.basis[n][amb])) >= 0)
        rep.degeneracy_claim = false;
  }

  for (int n = 0; n <= D.max_dim; ++n) {
    IntMatrix lhs = chains::mul(CY.rep.boundary[n + 1], rep.alpha[n]);
    if (n >= 1) {
      IntMatrix prev = chains::mul(rep.alpha[n - 1], CX.rep.boundary[n]);
      for (int r = 0; r < lhs.rows; ++r)
        for (int c = 0; c < lhs.cols; ++c) lhs.at(r, c) += prev.at(r, c);
    }
    bool same = lhs.rows == fsharp[n].rows && lhs.cols == fsharp[n].cols;
    if (same)
      for (int r = 0; r < lhs.rows && same; ++r)
        for (int c = 0; c < lhs.cols && same; ++c)
          same = lhs.at(r, c) == fsharp[n].at(r, c) - gsharp[n].at(r, c);
    rep.degree_ok.push_back(same);
  }
  return rep;
}

namespace {

CubePresentation resolve_presentation(const std::string& name,
                                      const std::filesystem::path& dir) {
  if (auto b = cset::builtin_by_name(name)) return *b;
  std::filesystem::path p(name);
  if (p.is_relative()) p = dir / p;
  return cset::load_cub(p.string());
}

cset::CubicalMap parse_map(const CubePresentation& X, const CubePresentation& Y,
                           const nlohmann::json& j, const std::string& which) {
  if (!j.is_object()) throw Error("homotopy field '" + which + "' must be an object");
  cset::CubicalMap m;
  for (const auto& g : X.gens) {
    auto it = j.find(g.name);
    if (it == j.end())
      throw Error("homotopy field '" + which + "' is missing generator " + g.name);
    if (!it->is_string())
      throw Error("homotopy field '" + which + "': entry for " + g.name +
                  " must be a cube string");
    m.assign.push_back(cset::parse_cube(Y, it->get<std::string>(), g.dim));
  }
  if (j.size() != X.gens.size())
    throw Error("homotopy field '" + which + "' names unknown generators");
  return m;
}

}  // namespace

HomotopyData load_homotopy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
  if (!j.is_object()) throw Error(path + ": homotopy description must be an object");
  for (const char* key : {"space", "target", "f", "g", "h"})
    if (!j.contains(key))
      throw Error(path + ": missing required field '" + std::string(key) + "'");

  const auto dir = std::filesystem::path(path).parent_path();
  HomotopyData D;
  D.X = resolve_presentation(j.at("space").get<std::string>(), dir);
  D.Y = resolve_presentation(j.at("target").get<std::string>(), dir);
  D.f = parse_map(D.X, D.Y, j.at("f"), "f");
  D.g = parse_map(D.X, D.Y, j.at("g"), "g");

  const auto& hj = j.at("h");
  if (!hj.is_object()) throw Error("homotopy field 'h' must be an object");
  for (const auto& g : D.X.gens) {
    auto it = hj.find(g.name);
    if (it == hj.end())
      throw Error("homotopy field 'h' is missing generator " + g.name);
    D.h.push_back(cset::parse_cube(D.Y, it->get<std::string>(), g.dim + 1));
  }
  if (hj.size() != D.X.gens.size())
    throw Error("homotopy field 'h' names unknown generators");

  if (j.contains("base")) {
    const auto name = j.at("base").get<std::string>();
    int b = D.X.index_of(name);
    if (b < 0) throw Error("unknown basepoint generator " + name);
    D.base = b;
  }
  if (j.contains("variant")) {
    auto v = moore::variant_from_string(j.at("variant").get<std::string>());
    if (!v) throw Error("unknown variant " + j.at("variant").get<std::string>());
    D.variant = *v;
  }
  if (j.contains("max_dim")) {
    if (!j.at("max_dim").is_number_integer())
      throw Error("max_dim must be an integer");
    D.max_dim = j.at("max_dim").get<int>();
    if (D.max_dim < 0 || D.max_dim > 8)
      throw Error("max_dim must be between 0 and 8");
  }
  return D;
}

VariantAgreementReport variant_agreement(const cset::CubePresentation& X,
                                         int base, int n) {
  cset::validate(X);
  if (n < 0) throw Error("degree must be nonnegative");
  VariantAgreementReport rep;
  rep.degree = n;
  rep.variants = {moore::Variant::S, moore::Variant::SNeg,
                  moore::Variant::SPos, moore::Variant::SBoth};
  for (auto v : rep.variants)
    rep.groups.push_back(moore::reduced_homology(X, v, base, n));
  rep.all_equal = true;
  for (std::size_t k = 1; k < rep.groups.size(); ++k) {
    if (rep.groups[k] == rep.groups[0]) continue;
    rep.all_equal = false;
    rep.disagreement = moore::to_string(rep.variants[0]) + " gives " +
                       chains::to_string(rep.groups[0]) + " but " +
                       moore::to_string(rep.variants[k]) + " gives " +
                       chains::to_string(rep.groups[k]);
    break;
  }
  return rep;
}

}  // namespace cubical::homotopy
