// Standard forms in the box category with connections: local rewriting of
// letter words plus direct evaluation on vertices.
#include "cubical/box.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "cubical/error.hpp"

namespace cubical::box {

namespace {

using Word = std::vector<Letter>;  // function-composition order throughout

// Is the adjacent pair u∘v already in standard relative order?
bool pair_canonical(const Letter& u, const Letter& v) {
  if (u.kind != v.kind) {
    // Block order is faces, connections, degeneracies, left to right; any
    // mixed pair in that order is fine, any other mixed pair must rewrite.
    return u.kind < v.kind;
  }
  switch (u.kind) {
    case LetterKind::Face:
      return u.index > v.index;  // strictly decreasing
    case LetterKind::Connection:
      // Non-decreasing; an equal index is allowed exactly when the two merge
      // kinds differ (max-then-min and min-then-max are distinct morphisms,
      // canonical in either order).
      return u.index < v.index || (u.index == v.index && u.sign != v.sign);
    case LetterKind::Degeneracy:
      return u.index < v.index;  // strictly increasing
  }
  return true;  // unreachable
}

// Rewrite a non-canonical adjacent pair u∘v by one cubical identity.
// Returns the replacement letters in composition order: two letters, or none
// when the pair cancels to the identity.
Word rewrite_pair(const Letter& u, const Letter& v) {
  const int i = v.index, j = u.index;  // v is applied first
  switch (u.kind) {
    case LetterKind::Face:
      // face∘face with j <= i: move the larger index left.
      assert(v.kind == LetterKind::Face && j <= i);
      return {face(i + 1, v.sign), face(j, u.sign)};

    case LetterKind::Connection:
      if (v.kind == LetterKind::Face) {
        // connection∘face.
        if (j <= i - 2) return {face(i - 1, v.sign), conn(j, u.sign)};
        if (j >= i + 1) return {face(i, v.sign), conn(j - 1, u.sign)};
        // Adjacent cases j = i-1, i: the inserted endpoint meets the merge.
        if (v.sign == u.sign) return {};  // absorbed: identity
        // Opposite endpoint: the merge becomes constant at coordinate j.
        return {face(j, v.sign), degen(j)};
      }
      // connection∘connection, non-canonical: j > i, or j = i with equal
      // signs (associativity of the merge).
      assert(v.kind == LetterKind::Connection);
      if (j > i) return {conn(i, v.sign), conn(j + 1, u.sign)};
      assert(j == i && u.sign == v.sign);
      return {conn(i, u.sign), conn(i + 1, u.sign)};

    case LetterKind::Degeneracy:
      if (v.kind == LetterKind::Face) {
        // degeneracy∘face.
        if (j < i) return {face(i - 1, v.sign), degen(j)};
        if (j > i) return {face(i, v.sign), degen(j - 1)};
        return {};  // deletes the inserted coordinate: identity
      }
      if (v.kind == LetterKind::Connection) {
        // degeneracy∘connection.
        if (j < i) return {conn(i - 1, v.sign), degen(j)};
        if (j > i) return {conn(i, v.sign), degen(j + 1)};
        // Deleting the merged coordinate deletes both inputs.
        return {degen(i), degen(i + 1)};
      }
      // degeneracy∘degeneracy with i <= j... here u.index >= v.index.
      assert(v.kind == LetterKind::Degeneracy && j >= i);
      return {degen(i), degen(j + 1)};
  }
  return {};  // unreachable
}

// Reduce a composition-order word to standard form by repeatedly rewriting
// the leftmost non-canonical adjacent pair, backing up one position after
// each rewrite.  Terminates on every legal word; the step cap is a safety
// net (never hit — the property suite exercises this on random words).
void normalize(Word& w) {
  std::size_t pos = 0;
  long steps = 0;
  while (pos + 1 < w.size()) {
    if (++steps > 2'000'000) throw Error("rewriting failed to terminate");
    if (pair_canonical(w[pos], w[pos + 1])) {
      ++pos;
      continue;
    }
    Word repl = rewrite_pair(w[pos], w[pos + 1]);
    if (repl.empty()) {
      w.erase(w.begin() + pos, w.begin() + pos + 2);
    } else {
      w[pos] = repl[0];
      w[pos + 1] = repl[1];
    }
    if (pos > 0) --pos;
  }
}

// Dimension bookkeeping for one applied letter; throws on illegality.
int apply_letter_dim(const Letter& l, int d) {
  switch (l.kind) {
    case LetterKind::Face:
      if (l.index < 1 || l.index > d + 1 || (l.sign != 0 && l.sign != 1))
        throw Error("illegal face " + to_string(l) + " at dimension " + std::to_string(d));
      return d + 1;
    case LetterKind::Degeneracy:
      if (d < 1 || l.index < 1 || l.index > d)
        throw Error("illegal degeneracy " + to_string(l) + " at dimension " + std::to_string(d));
      return d - 1;
    case LetterKind::Connection:
      if (d < 2 || l.index < 1 || l.index > d - 1 || (l.sign != 0 && l.sign != 1))
        throw Error("illegal connection " + to_string(l) + " at dimension " + std::to_string(d));
      return d - 1;
  }
  throw Error("bad letter kind");
}

// Split a standard-form word into blocks and package the morphism; verifies
// the standard-form invariants (cheap insurance behind the rewriter).
BoxMorphism pack(Word w, int dom, int cod) {
  BoxMorphism m;
  m.dom = dom;
  m.cod = cod;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k + 1 < w.size() && !pair_canonical(w[k], w[k + 1]))
      throw Error("internal: non-canonical word after rewriting");
    switch (w[k].kind) {
      case LetterKind::Face: m.faces.push_back(w[k]); break;
      case LetterKind::Connection: m.conns.push_back(w[k]); break;
      case LetterKind::Degeneracy: m.degens.push_back(w[k]); break;
    }
  }
  int expect = dom - static_cast<int>(m.degens.size() + m.conns.size()) +
               static_cast<int>(m.faces.size());
  if (expect != cod) throw Error("internal: dimension mismatch after rewriting");
  return m;
}

}  // namespace

BoxMorphism BoxMorphism::identity(int n) {
  BoxMorphism m;
  m.dom = m.cod = n;
  return m;
}

std::vector<Letter> BoxMorphism::letters() const {
  Word w = faces;
  w.insert(w.end(), conns.begin(), conns.end());
  w.insert(w.end(), degens.begin(), degens.end());
  return w;
}

std::vector<Letter> BoxMorphism::word() const {
  Word w = letters();
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<int> BoxMorphism::evaluate(const std::vector<int>& vertex) const {
  if (static_cast<int>(vertex.size()) != dom) throw Error("vertex size mismatch");
  std::vector<int> x = vertex;
  // Blocks act right to left: degeneracies, then connections, then faces,
  // each block itself from its rightmost letter.
  for (auto it = degens.rbegin(); it != degens.rend(); ++it)
    x.erase(x.begin() + (it->index - 1));
  for (auto it = conns.rbegin(); it != conns.rend(); ++it) {
    int a = x[it->index - 1], b = x[it->index];
    x[it->index - 1] = it->sign == 0 ? std::max(a, b) : std::min(a, b);
    x.erase(x.begin() + it->index);
  }
  for (auto it = faces.rbegin(); it != faces.rend(); ++it)
    x.insert(x.begin() + (it->index - 1), it->sign);
  if (static_cast<int>(x.size()) != cod) throw Error("internal: evaluate size mismatch");
  return x;
}

BoxMorphism from_word(const std::vector<Letter>& word, int dom) {
  int d = dom;
  for (const Letter& l : word) d = apply_letter_dim(l, d);
  Word w(word.rbegin(), word.rend());  // to composition order
  normalize(w);
  return pack(std::move(w), dom, d);
}

BoxMorphism compose(const BoxMorphism& first, const BoxMorphism& then) {
  if (first.cod != then.dom)
    throw Error("compose: dimension mismatch (" + std::to_string(first.cod) +
                " vs " + std::to_string(then.dom) + ")");
  Word w = then.letters();
  Word tail = first.letters();
  w.insert(w.end(), tail.begin(), tail.end());
  normalize(w);
  return pack(std::move(w), first.dom, then.cod);
}

BoxMorphism tensor_id_right(const BoxMorphism& m, int k) {
  BoxMorphism r = m;
  r.dom += k;
  r.cod += k;  // letter indices act on the untouched left block
  return r;
}

BoxMorphism tensor_id_left(int k, const BoxMorphism& m) {
  BoxMorphism r = m;
  r.dom += k;
  r.cod += k;
  for (auto* block : {&r.faces, &r.conns, &r.degens})
    for (Letter& l : *block) l.index += k;
  return r;
}

bool equal_pointwise(const BoxMorphism& a, const BoxMorphism& b) {
  if (a.dom != b.dom || a.cod != b.cod) return false;
  std::vector<int> x(a.dom, 0);
  for (unsigned long long bits = 0; bits < (1ull << a.dom); ++bits) {
    for (int i = 0; i < a.dom; ++i) x[i] = (bits >> i) & 1;
    if (a.evaluate(x) != b.evaluate(x)) return false;
  }
  return true;
}

namespace {

// Strictly increasing p-subsets of [1..n] (the legal degeneracy blocks).
void gen_subsets(int n, int p, int from, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == p) {
    out.push_back(cur);
    return;
  }
  for (int v = from; v <= n; ++v) {
    cur.push_back(v);
    gen_subsets(n, p, v + 1, cur, out);
    cur.pop_back();
  }
}

// Canonical connection blocks of length q starting at dimension dim:
// left-to-right indices non-decreasing (strict between equal signs), with the
// k-th letter bounded by dim - q + k - 1 so that every suffix stays legal.
void gen_conn_blocks(int dim, int q, bool neg, bool pos, Word& cur,
                     std::vector<Word>& out) {
  int k = static_cast<int>(cur.size()) + 1;
  if (k > q) {
    out.push_back(cur);
    return;
  }
  int lo = 1, hi = dim - q + k - 1;
  for (int b = lo; b <= hi; ++b) {
    for (int s : {0, 1}) {
      if ((s == 0 && !neg) || (s == 1 && !pos)) continue;
      if (!cur.empty()) {
        const Letter& prev = cur.back();
        if (b < prev.index || (b == prev.index && s == prev.sign)) continue;
      }
      cur.push_back(conn(b, s));
      gen_conn_blocks(dim, q, neg, pos, cur, out);
      cur.pop_back();
    }
  }
}

unsigned long long binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
  return r;
}

}  // namespace

std::vector<BoxMorphism> enumerate_morphisms(int n, int m, LetterSet allowed) {
  std::vector<BoxMorphism> out;
  if (n < 0 || m < 0) return out;
  for (int p = 0; p <= n; ++p) {
    if (p > 0 && !allowed.degeneracy) break;
    int after_degen = n - p;
    for (int q = 0; q <= std::max(0, after_degen - 1); ++q) {
      if (q > 0 && !allowed.neg_connection && !allowed.pos_connection) break;
      int r = m - (after_degen - q);
      if (r < 0) continue;
      if (r > 0 && !allowed.face) continue;

      std::vector<std::vector<int>> degen_sets;
      {
        std::vector<int> cur;
        gen_subsets(n, p, 1, cur, degen_sets);
      }
      std::vector<Word> conn_blocks;
      {
        Word cur;
        gen_conn_blocks(after_degen, q, allowed.neg_connection,
                        allowed.pos_connection, cur, conn_blocks);
      }
      // Face blocks: strictly decreasing r-subsets of [1..m]; every such
      // choice is legal.  Signs range freely.
      std::vector<std::vector<int>> face_sets;
      {
        std::vector<int> cur;
        gen_subsets(m, r, 1, cur, face_sets);
      }

      for (const auto& fs : face_sets) {
        for (unsigned signs = 0; signs < (1u << r); ++signs) {
          Word fb;
          for (int k = r - 1; k >= 0; --k)  // descending indices
            fb.push_back(face(fs[k], (signs >> k) & 1));
          for (const auto& cb : conn_blocks) {
            for (const auto& ds : degen_sets) {
              BoxMorphism mo;
              mo.dom = n;
              mo.cod = m;
              mo.faces = fb;
              mo.conns = cb;
              for (int a : ds) mo.degens.push_back(degen(a));
              out.push_back(std::move(mo));
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long long count_closed_form(int n, int i, CountClass cls) {
  if (n < 0 || i < 0 || i > n) return 0;
  switch (cls) {
    case CountClass::NegConnectionSurjections:
      if (n == i) return 1;
      return binom(n - 1, n - i);
    case CountClass::DegeneracyNegConnectionSurjections: {
      unsigned long long total = 0;
      for (int j = 0; j <= n - i; ++j) {
        unsigned long long conn_part =
            (n - j == i) ? 1 : binom(n - j - 1, n - j - i);
        total += binom(n, j) * conn_part;
      }
      return total;
    }
  }
  return 0;
}

std::string to_string(const Letter& l) {
  std::ostringstream os;
  switch (l.kind) {
    case LetterKind::Face: os << 'f' << l.index << ':' << l.sign; break;
    case LetterKind::Degeneracy: os << 's' << l.index; break;
    case LetterKind::Connection: os << (l.sign == 0 ? 'n' : 'p') << l.index; break;
  }
  return os.str();
}

std::optional<Letter> parse_letter(std::string_view token) {
  if (token.size() < 2) return std::nullopt;
  char c = token[0];
  std::size_t pos = 1;
  long idx = 0;
  bool any = false;
  while (pos < token.size() && token[pos] >= '0' && token[pos] <= '9') {
    idx = idx * 10 + (token[pos] - '0');
    if (idx > 1'000'000) return std::nullopt;
    ++pos;
    any = true;
  }
  if (!any || idx < 1) return std::nullopt;
  int i = static_cast<int>(idx);
  if (c == 's' && pos == token.size()) return degen(i);
  if (c == 'n' && pos == token.size()) return conn(i, 0);
  if (c == 'p' && pos == token.size()) return conn(i, 1);
  if (c == 'f' && pos + 2 == token.size() && token[pos] == ':' &&
      (token[pos + 1] == '0' || token[pos + 1] == '1'))
    return face(i, token[pos + 1] - '0');
  return std::nullopt;
}

std::vector<Letter> parse_word(std::string_view text) {
  std::vector<Letter> out;
  if (text.empty() || text == "id") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    std::string_view tok = text.substr(start, dot == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : dot - start);
    auto l = parse_letter(tok);
    if (!l) throw Error("bad letter '" + std::string(tok) + "'");
    out.push_back(*l);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

std::string word_string(const BoxMorphism& m) {
  auto w = m.word();
  if (w.empty()) return "id";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += '.';
    s += to_string(w[k]);
  }
  return s;
}

std::string describe(const BoxMorphism& m) {
  std::ostringstream os;
  os << "[1]^" << m.dom << " -> [1]^" << m.cod << "  " << word_string(m);
  return os.str();
}

}  // namespace cubical::box
