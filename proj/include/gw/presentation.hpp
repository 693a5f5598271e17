#pragma once

// Finite group presentations: words in named generators, the text grammar
//   presentation := "<" genlist "|" relist ">"
//   relator      := word ("=" word)? | "1"
//   word         := syllable+ ,  syllable := gen ("^" int)?
// relation matrices, abelianization, deficiency, pushouts and Tietze
// elimination.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gw/smith.hpp"

namespace gw {

struct Syllable {
  std::string gen;
  long exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word; the empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Syllable>& syllables);
  static Word gen(const std::string& g, long exp = 1);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  std::size_t length() const { return syl_.size(); }

  /// Appends g^exp, merging with the last syllable.
  void append(const std::string& g, long exp);
  Word inverse() const;
  long exponent_sum(const std::string& g) const;
  /// Number of syllables using g.
  std::size_t occurrences(const std::string& g) const;
  bool uses(const std::string& g) const { return occurrences(g) > 0; }

  Word substitute(const std::string& g, const Word& replacement) const;
  Word renamed(const std::map<std::string, std::string>& names) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  /// "b a^2 b^-1"; the identity prints as "1".
  std::string to_string() const;

 private:
  std::vector<Syllable> syl_;
};

class Presentation {
 public:
  Presentation() = default;
  /// Throws Error(UndeclaredGenerator) or Error(Precondition) on duplicates.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<Word>& relators() const { return rels_; }
  bool has_generator(const std::string& g) const;
  std::size_t generator_index(const std::string& g) const;

  Presentation renamed(const std::map<std::string, std::string>& names) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

  /// Same grammar as the parser, deterministic.
  std::string to_string() const;

 private:
  std::vector<std::string> gens_;
  std::vector<Word> rels_;
};

/// Throws Error(Syntax) with a character position, or
/// Error(UndeclaredGenerator). Within a run of identifier characters a word
/// is split greedily into the longest declared generator names.
Presentation parse_presentation(const std::string& text);

/// Parses a single word (or "1") against a generator list.
Word parse_word(const std::string& text, const std::vector<std::string>& generators);

/// Rows are relators, columns generators; entries are exponent sums.
IntMatrix relation_matrix(const Presentation& p);

struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, in divisibility order

  bool torsion_free() const { return torsion.empty(); }
  friend bool operator==(const Abelianization&, const Abelianization&) = default;
  /// "Z", "Z^2 + Z/5", "0" for the trivial group.
  std::string to_string() const;
};

Abelianization abelianization(const Presentation& p);

long deficiency(const Presentation& p);

/// True when w maps to 0 in the abelianization, i.e. w lies in the derived
/// subgroup. Decided by lattice membership of the exponent-sum vector in the
/// row lattice of the relation matrix.
bool in_derived_subgroup(const Presentation& p, const Word& w);

struct PushoutResult {
  Presentation presentation;
  std::map<std::string, std::string> renaming;  // second-factor renames
  std::vector<std::string> warnings;
};

/// Disjoint union of generators and relators, then one relator
/// first * second^-1 per gluing pair, in gluing order. Colliding generator
/// names of the second factor get primes appended.
PushoutResult pushout_presentation(const Presentation& p1, const Presentation& p2,
                                   const std::vector<std::pair<Word, Word>>& gluing);

struct TietzeStep {
  std::string description;
};

struct TietzeResult {
  Presentation presentation;
  std::vector<TietzeStep> log;
};

/// Removes trivial and repeated relators (a relator equal to an earlier one
/// or to its inverse), and eliminates any generator that occurs exactly once,
/// with exponent +-1, in some relator. Among candidates in the first such
/// relator the latest-declared generator goes.
TietzeResult tietze_eliminate(const Presentation& p);

/// Exact comparison after renaming `p`: same generator set, identical
/// relator sequence.
bool equal_up_to_renaming(const Presentation& p, const Presentation& q,
                          const std::map<std::string, std::string>& names);

}  // namespace gw
