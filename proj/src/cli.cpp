// Subcommand driver: thin argument handling around the library calls, with
// one stable output format per command.
#include "cubical/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "cubical/box.hpp"
#include "cubical/cset.hpp"
#include "cubical/cubfile.hpp"
#include "cubical/error.hpp"
#include "cubical/homotopy.hpp"
#include "cubical/intmat.hpp"
#include "cubical/moore.hpp"

namespace cubical::cli {

namespace {

// FILE arguments accept a built-in name or a .cub path.
cset::CubePresentation resolve(const std::string& spec) {
  if (auto b = cset::builtin_by_name(spec)) return *b;
  return cset::load_cub(spec);
}

int base_index(const cset::CubePresentation& X, const std::string& name) {
  int g = X.index_of(name);
  if (g < 0) throw Error("unknown generator '" + name + "'");
  if (X.dim(g) != 0)
    throw Error("basepoint '" + name + "' is not 0-dimensional");
  return g;
}

moore::Variant variant_arg(const std::string& name) {
  auto v = moore::variant_from_string(name);
  if (!v) throw Error("unknown variant '" + name + "'");
  return *v;
}

std::string signed_combination(const std::vector<std::string>& names,
                               const std::vector<chains::Int>& coeff) {
  std::string out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (coeff[k] == 0) continue;
    const bool neg = coeff[k] < 0;
    chains::Int mag = neg ? -coeff[k] : coeff[k];
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += mag.str() + "*";
    out += names[k];
  }
  return out.empty() ? "0" : out;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact homology and homotopy checks for finitely presented "
               "cubical sets"};
  app.name("cubical");
  app.require_subcommand(1);
  int rc = 0;

  // validate FILE
  std::string va_file;
  auto* va = app.add_subcommand("validate", "check a presentation file");
  va->add_option("file", va_file, "builtin name or .cub path")->required();
  va->callback([&] {
    auto X = resolve(va_file);
    cset::validate(X);
    int top = 0;
    for (const auto& g : X.gens) top = std::max(top, g.dim);
    out << "valid: " << X.gens.size() << " generators, top dimension " << top
        << "\n";
  });

  // homology FILE --dim N [--variant V] [--reduced --base NAME] [--max-dim M]
  std::string ho_file, ho_variant = "sn", ho_base;
  int ho_dim = 0, ho_max = -1;
  bool ho_reduced = false;
  auto* ho = app.add_subcommand("homology", "homology of one degree");
  ho->add_option("file", ho_file, "builtin name or .cub path")->required();
  ho->add_option("--dim", ho_dim, "degree")->required()->check(CLI::Range(0, 8));
  ho->add_option("--variant", ho_variant, "chain complex variant")
      ->check(CLI::IsMember({"none", "s", "sn", "sp", "snp"}));
  auto* ho_rflag = ho->add_flag("--reduced", ho_reduced, "reduce at --base");
  auto* ho_bopt = ho->add_option("--base", ho_base, "basepoint generator");
  ho_rflag->needs(ho_bopt);
  ho_bopt->needs(ho_rflag);
  ho->add_option("--max-dim", ho_max,
                 "build chain groups through this degree (default dim+1)")
      ->check(CLI::Range(-1, 9));
  ho->callback([&] {
    auto X = resolve(ho_file);
    auto v = variant_arg(ho_variant);
    chains::AbelianGroup g =
        ho_reduced
            ? moore::reduced_homology(X, v, base_index(X, ho_base), ho_dim,
                                      ho_max)
            : moore::homology(X, v, ho_dim, ho_max);
    out << chains::to_string(g) << "\n";
  });

  // normalized FILE --dim N --base NAME
  std::string no_file, no_base;
  int no_dim = 0;
  auto* no = app.add_subcommand(
      "normalized", "homology of the normalized subcomplex at one degree");
  no->add_option("file", no_file, "builtin name or .cub path")->required();
  no->add_option("--dim", no_dim, "degree")->required()->check(CLI::Range(0, 8));
  no->add_option("--base", no_base, "basepoint generator")->required();
  no->callback([&] {
    auto X = resolve(no_file);
    auto N = moore::normalized_complex(X, base_index(X, no_base), no_dim + 1);
    out << chains::to_string(chains::homology_at(N.rep, no_dim)) << "\n";
  });

  // decompose FILE --dim N [--variant sn|sp]
  std::string de_file, de_variant = "sn";
  int de_dim = 0;
  auto* de = app.add_subcommand(
      "decompose", "split one degree into normalized and degenerate parts");
  de->add_option("file", de_file, "builtin name or .cub path")->required();
  de->add_option("--dim", de_dim, "degree")->required()->check(CLI::Range(0, 8));
  de->add_option("--variant", de_variant, "which connection sign is degenerate")
      ->check(CLI::IsMember({"sn", "sp"}));
  de->callback([&] {
    auto X = resolve(de_file);
    if (!X.base)
      throw Error("presentation has no base line; decompose works on the "
                  "reduced complex");
    auto rep = moore::check_decomposition(X, de_dim, variant_arg(de_variant),
                                          *X.base);
    out << "ambient " << rep.ambient_rank << " = normalized " << rep.normal_rank
        << " + degenerate " << rep.degenerate_rank << "\n";
    out << "unimodular split: " << yesno(rep.ok()) << "\n";
    if (!rep.ok()) rc = 1;
  });

  // product A B -o OUT
  std::string pr_a, pr_b, pr_out;
  auto* pr = app.add_subcommand("product", "geometric product of two "
                                           "presentations");
  pr->add_option("a", pr_a, "left factor")->required();
  pr->add_option("b", pr_b, "right factor")->required();
  pr->add_option("-o,--output", pr_out, "output .cub path")->required();
  pr->callback([&] {
    auto P = cset::product(resolve(pr_a), resolve(pr_b));
    cset::save_cub(P.p, pr_out);
    out << "wrote " << pr_out << ": " << P.p.gens.size() << " generators\n";
  });

  // pi0 FILE
  std::string p0_file;
  auto* p0 = app.add_subcommand("pi0", "number of connected components");
  p0->add_option("file", p0_file, "builtin name or .cub path")->required();
  p0->callback([&] { out << cset::pi0(resolve(p0_file)).classes << "\n"; });

  // normalize WORD --dom N
  std::string nw_word;
  int nw_dom = 0;
  auto* nw = app.add_subcommand("normalize",
                                "standard form of an operator word");
  nw->add_option("word", nw_word, "dot-separated letters, applied left to "
                                  "right; 'id' for the empty word")
      ->required();
  nw->add_option("--dom", nw_dom, "dimension the word is applied to")
      ->required()
      ->check(CLI::Range(0, 20));
  nw->callback([&] {
    auto m = box::from_word(box::parse_word(nw_word), nw_dom);
    out << box::word_string(m) << "\n";
  });

  // count N I --class gm|sgm
  int ct_n = 0, ct_i = 0;
  std::string ct_class;
  auto* ct = app.add_subcommand("count", "closed-form surjection counts");
  ct->add_option("n", ct_n, "source dimension")->required()
      ->check(CLI::Range(0, 20));
  ct->add_option("i", ct_i, "target dimension")->required()
      ->check(CLI::Range(0, 20));
  ct->add_option("--class", ct_class,
                 "gm: max-merges only; sgm: degeneracies and max-merges")
      ->required()
      ->check(CLI::IsMember({"gm", "sgm"}));
  ct->callback([&] {
    if (ct_i > ct_n) throw Error("target dimension exceeds source dimension");
    auto cls = ct_class == "gm"
                   ? box::CountClass::NegConnectionSurjections
                   : box::CountClass::DegeneracyNegConnectionSurjections;
    out << box::count_closed_form(ct_n, ct_i, cls) << "\n";
  });

  // counterexample
  auto* ce = app.add_subcommand(
      "counterexample",
      "degree-2 chain with vanishing faces inside the two-sign degenerate "
      "span");
  ce->callback([&] {
    auto rep = moore::counterexample_witness();
    out << "chain: " << signed_combination(rep.basis_names, rep.chain) << "\n";
    out << "nonzero: " << yesno(rep.nonzero) << "\n";
    out << "alternating faces vanish: " << yesno(rep.all_faces_vanish) << "\n";
    out << "inside degeneracy+connection span: "
        << yesno(rep.inside_all_letter_span) << "\n";
    out << "normalized meet one-sign span: rank "
        << rep.one_sign_intersection_rank << "\n";
    out << "normalized meet two-sign span: rank "
        << rep.all_letter_intersection_rank << "\n";
    out << (rep.ok() ? "witness verified" : "witness FAILED") << "\n";
    if (!rep.ok()) rc = 1;
  });

  // check-pin FILE --dim N --base NAME
  std::string cp_file, cp_base;
  int cp_dim = 0;
  auto* cp = app.add_subcommand(
      "check-pin", "normalized homology against the reduced quotient");
  cp->add_option("file", cp_file, "builtin name or .cub path")->required();
  cp->add_option("--dim", cp_dim, "degree")->required()->check(CLI::Range(0, 8));
  cp->add_option("--base", cp_base, "basepoint generator")->required();
  cp->callback([&] {
    auto X = resolve(cp_file);
    auto rep = moore::check_pi_n(X, base_index(X, cp_base), cp_dim);
    out << "normalized: " << chains::to_string(rep.normalized) << "\n";
    out << "reduced: " << chains::to_string(rep.quotient) << "\n";
    out << (rep.equal ? "agree" : "disagree") << "\n";
    if (!rep.equal) rc = 1;
  });

  // variants FILE --dim N --base NAME
  std::string vr_file, vr_base;
  int vr_dim = 0;
  auto* vr = app.add_subcommand(
      "variants", "reduced homology under every quotient variant");
  vr->add_option("file", vr_file, "builtin name or .cub path")->required();
  vr->add_option("--dim", vr_dim, "degree")->required()->check(CLI::Range(0, 8));
  vr->add_option("--base", vr_base, "basepoint generator")->required();
  vr->callback([&] {
    auto X = resolve(vr_file);
    auto rep = homotopy::variant_agreement(X, base_index(X, vr_base), vr_dim);
    for (std::size_t k = 0; k < rep.variants.size(); ++k)
      out << moore::to_string(rep.variants[k]) << ": "
          << chains::to_string(rep.groups[k]) << "\n";
    if (rep.all_equal) {
      out << "agree\n";
    } else {
      out << "disagree: " << rep.disagreement << "\n";
      rc = 1;
    }
  });

  // check-homotopy SPEC.json
  std::string ch_file;
  auto* ch = app.add_subcommand("check-homotopy",
                                "verify a chain homotopy described in JSON");
  ch->add_option("spec", ch_file, "JSON homotopy description")->required();
  ch->callback([&] {
    auto D = homotopy::load_homotopy(ch_file);
    try {
      auto rep = homotopy::verify_chain_homotopy(D);
      for (int n = 0; n <= rep.max_dim; ++n)
        out << "degree " << n << ": "
            << (rep.degree_ok[n] ? "ok" : "FAIL") << "\n";
      out << "degeneracy claim: " << (rep.degeneracy_claim ? "ok" : "FAIL")
          << "\n";
      out << (rep.ok() ? "verified" : "not verified") << "\n";
      if (!rep.ok()) rc = 1;
    } catch (const Error& e) {
      err << "verification failed: " << e.what() << "\n";
      out << "not verified\n";
      rc = 1;
    }
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace cubical::cli
