// Morphisms of the box category of abstract cubes with connections.
//
// Objects are the cubes [1]^n (vertices {0,1}^n ordered coordinatewise).
// Morphisms are generated by
//   faces        f<i>:<e>  — insert the constant e at coordinate i,
//   degeneracies s<i>      — delete coordinate i,
//   connections  n<i>      — merge coordinates i, i+1 with max,
//                p<i>      — merge coordinates i, i+1 with min,
// subject to the usual cubical identities.  Every morphism has a unique
// standard form (face block)(connection block)(degeneracy block), computed
// here by local rewriting; two morphisms are equal iff their standard forms
// coincide iff they agree on every vertex (evaluate() is the semantic check
// used by the test oracles).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubical::box {

enum class LetterKind : std::uint8_t { Face = 0, Connection = 1, Degeneracy = 2 };

// One generator letter; `index` is 1-based.  For Face, `sign` is the inserted
// endpoint (0 or 1); for Connection, 0 merges with max and 1 with min; for
// Degeneracy, sign is always 0.  The defaulted comparison (kind, index, sign)
// is the canonical letter order used for all deterministic sorting.
struct Letter {
  LetterKind kind = LetterKind::Face;
  int index = 1;
  int sign = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter face(int i, int e) { return {LetterKind::Face, i, e}; }
inline Letter degen(int i) { return {LetterKind::Degeneracy, i, 0}; }
inline Letter conn(int i, int s) { return {LetterKind::Connection, i, s}; }

// A morphism [1]^dom -> [1]^cod in standard form.  The three blocks are kept
// in function-composition order (leftmost letter applied last):
//   faces   — indices strictly decreasing,
//   conns   — indices non-decreasing, equal indices only with opposite signs,
//   degens  — indices strictly increasing.
// The defaulted comparison gives the deterministic morphism order used for
// enumeration and chain-group bases.
struct BoxMorphism {
  int dom = 0;
  int cod = 0;
  std::vector<Letter> faces;
  std::vector<Letter> conns;
  std::vector<Letter> degens;

  static BoxMorphism identity(int n);
  bool is_identity() const { return faces.empty() && conns.empty() && degens.empty(); }
  // Surjections are exactly the face-free standard forms; these are the
  // operator words that label cubes in a presented cubical set.
  bool surjective() const { return faces.empty(); }

  // All letters in function-composition order / in application order.
  std::vector<Letter> letters() const;
  std::vector<Letter> word() const;

  // Apply to a vertex of the domain cube (entries 0/1, size dom);
  // returns the image vertex (size cod).
  std::vector<int> evaluate(const std::vector<int>& vertex) const;

  friend auto operator<=>(const BoxMorphism&, const BoxMorphism&) = default;
};

// Build a morphism from a word of letters applied left to right starting at
// dimension `dom`; throws Error on an illegal letter.  The result is the
// unique standard form of the composite.
BoxMorphism from_word(const std::vector<Letter>& word, int dom);

// Composite `then ∘ first` (apply `first`, then `then`); dims must match.
BoxMorphism compose(const BoxMorphism& first, const BoxMorphism& then);

// m x id_k (extra coordinates appended on the right) and id_k x m (on the
// left).  Both preserve standard form.
BoxMorphism tensor_id_right(const BoxMorphism& m, int k);
BoxMorphism tensor_id_left(int k, const BoxMorphism& m);

// Semantic equality: same dims and equal on all 2^dom vertices.  Independent
// of the rewriting machinery; the property tests compare the two.
bool equal_pointwise(const BoxMorphism& a, const BoxMorphism& b);

// Which letter kinds a morphism may use (enumeration filter).
struct LetterSet {
  bool face = false;
  bool degeneracy = false;
  bool neg_connection = false;
  bool pos_connection = false;
};

// All standard forms [1]^n -> [1]^m using only the allowed letter kinds,
// sorted in the canonical morphism order.
std::vector<BoxMorphism> enumerate_morphisms(int n, int m, LetterSet allowed);

// Closed-form counts for two families of surjections [1]^n -> [1]^i:
//   NegConnectionSurjections        — words of max-merges only: C(n-1, n-i)
//   DegeneracyNegConnectionSurjections — words of degeneracies and
//       max-merges: sum_j C(n,j) * C(n-j-1, n-j-i)
enum class CountClass { NegConnectionSurjections, DegeneracyNegConnectionSurjections };
unsigned long long count_closed_form(int n, int i, CountClass cls);

// Text syntax: letters "f<i>:<0|1>", "s<i>", "n<i>", "p<i>"; words are
// dot-separated letters in application order; the empty word prints as "id".
std::string to_string(const Letter& l);
std::optional<Letter> parse_letter(std::string_view token);
std::vector<Letter> parse_word(std::string_view text);  // throws Error
std::string word_string(const BoxMorphism& m);
std::string describe(const BoxMorphism& m);  // "[1]^dom -> [1]^cod  word"

}  // namespace cubical::box
