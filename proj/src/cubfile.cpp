// Reader/writer for the .cub presentation format.
#include "cubical/cubfile.hpp"

#include <fstream>
#include <sstream>

#include "cubical/error.hpp"

namespace cubical::cset {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

int parse_int(const std::string& t, int line, const char* what) {
  std::size_t pos = 0;
  int v;
  try {
    v = std::stoi(t, &pos);
  } catch (...) {
    throw ParseError(line, std::string("bad ") + what + " '" + t + "'");
  }
  if (pos != t.size() || v < 0)
    throw ParseError(line, std::string("bad ") + what + " '" + t + "'");
  return v;
}

}  // namespace

CubePresentation parse_cub(std::istream& in) {
  CubePresentation X;
  struct FaceLine {
    int line, gen, i, e;
    std::string rhs;
  };
  std::vector<FaceLine> face_lines;
  std::optional<int> base_line;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];

    if (kw == "cube") {
      if (toks.size() != 3) throw ParseError(lineno, "expected: cube <name> <dim>");
      if (X.index_of(toks[1]) >= 0)
        throw ParseError(lineno, "duplicate generator '" + toks[1] + "'");
      X.gens.push_back({toks[1], parse_int(toks[2], lineno, "dimension")});
      X.faces.emplace_back();
    } else if (kw == "base") {
      if (toks.size() != 2) throw ParseError(lineno, "expected: base <name>");
      int g = X.index_of(toks[1]);
      if (g < 0) throw ParseError(lineno, "unknown generator '" + toks[1] + "'");
      if (X.dim(g) != 0)
        throw ParseError(lineno, "basepoint '" + toks[1] + "' is not 0-dimensional");
      if (X.base) throw ParseError(lineno, "duplicate base line");
      X.base = g;
      base_line = lineno;
    } else if (kw == "face") {
      if (toks.size() != 6 || toks[4] != "=")
        throw ParseError(lineno, "expected: face <name> <i> <eps> = <cube>");
      int g = X.index_of(toks[1]);
      if (g < 0) throw ParseError(lineno, "unknown generator '" + toks[1] + "'");
      int i = parse_int(toks[2], lineno, "face index");
      int e = parse_int(toks[3], lineno, "face end");
      if (X.dim(g) == 0) throw ParseError(lineno, "0-dimensional '" + toks[1] + "' has no faces");
      if (i < 1 || i > X.dim(g))
        throw ParseError(lineno, "face index " + std::to_string(i) + " out of range for '" +
                                     toks[1] + "'");
      if (e != 0 && e != 1) throw ParseError(lineno, "face end must be 0 or 1");
      face_lines.push_back({lineno, g, i, e, toks[5]});
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }

  // Allocate the tables, then fill from the recorded lines.
  std::vector<std::vector<int>> seen(X.gens.size());
  for (std::size_t g = 0; g < X.gens.size(); ++g) {
    X.faces[g].resize(2 * X.dim(static_cast<int>(g)));
    seen[g].assign(2 * X.dim(static_cast<int>(g)), 0);
  }
  for (const auto& fl : face_lines) {
    int slot = (fl.i - 1) * 2 + fl.e;
    if (seen[fl.gen][slot]++)
      throw ParseError(fl.line, "duplicate face (" + std::to_string(fl.i) + "," +
                                    std::to_string(fl.e) + ") of '" +
                                    X.gens[fl.gen].name + "'");
    try {
      X.faces[fl.gen][slot] = parse_cube(X, fl.rhs, X.dim(fl.gen) - 1);
    } catch (const Error& err) {
      throw ParseError(fl.line, err.what());
    }
  }
  for (std::size_t g = 0; g < X.gens.size(); ++g)
    for (int i = 1; i <= X.dim(static_cast<int>(g)); ++i)
      for (int e = 0; e < 2; ++e)
        if (!seen[g][(i - 1) * 2 + e])
          throw ParseError(lineno, "missing face (" + std::to_string(i) + "," +
                                       std::to_string(e) + ") of '" + X.gens[g].name + "'");

  validate(X);
  return X;
}

CubePresentation load_cub(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return parse_cub(in);
  } catch (const ParseError& e) {
    throw Error(path + ":" + std::to_string(e.line) + ": " + e.message);
  }
}

std::string serialize_cub(const CubePresentation& X) {
  std::ostringstream os;
  os << "# cubical set presentation\n";
  for (const auto& g : X.gens) os << "cube " << g.name << " " << g.dim << "\n";
  if (X.base) os << "base " << X.gens[*X.base].name << "\n";
  for (int g = 0; g < static_cast<int>(X.gens.size()); ++g)
    for (int i = 1; i <= X.dim(g); ++i)
      for (int e = 0; e < 2; ++e)
        os << "face " << X.gens[g].name << " " << i << " " << e << " = "
           << cube_string(X, X.face(g, i, e)) << "\n";
  return os.str();
}

void save_cub(const CubePresentation& X, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize_cub(X);
}

}  // namespace cubical::cset
