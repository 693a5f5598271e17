#include "gw/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "gw/error.hpp"

namespace gw {
namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '\'';
}

bool valid_generator_name(const std::string& g) {
  if (g.empty() || !is_ident_start(g[0])) return false;
  return std::all_of(g.begin(), g.end(), is_ident_char);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Presentation presentation() {
    expect('<');
    std::vector<std::string> gens;
    skip_ws();
    if (peek() != '|') {
      for (;;) {
        skip_ws();
        gens.push_back(identifier());
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect('|');
    std::set<std::string> seen;
    for (const auto& g : gens)
      if (!seen.insert(g).second) fail("generator '" + g + "' declared twice");
    gens_ = gens;

    std::vector<Word> rels;
    skip_ws();
    if (peek() != '>') {
      for (;;) {
        rels.push_back(relator());
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect('>');
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return Presentation(std::move(gens), std::move(rels));
  }

  Word standalone_word(const std::vector<std::string>& gens) {
    gens_ = gens;
    Word w = word_or_one();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Syntax, "syntax error at position " + std::to_string(pos_) + ": " + msg, pos_);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    if (!is_ident_start(peek())) fail("expected a generator name");
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Word relator() {
    Word lhs = word_or_one();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      Word rhs = word_or_one();
      return lhs * rhs.inverse();
    }
    return lhs;
  }

  Word word_or_one() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("unexpected number");
      return {};
    }
    if (!is_ident_start(peek())) fail("expected a word");
    Word w;
    while (is_ident_start(peek())) {
      std::string g = generator();
      skip_ws();
      long e = 1;
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        e = integer();
      }
      w.append(g, e);
      skip_ws();
    }
    return w;
  }

  // Longest declared generator name starting here.
  std::string generator() {
    std::size_t best = 0;
    for (const auto& g : gens_)
      if (g.size() > best && s_.compare(pos_, g.size(), g) == 0) best = g.size();
    if (best == 0) {
      std::size_t end = pos_;
      while (end < s_.size() && is_ident_char(s_[end])) ++end;
      throw Error(ErrorKind::UndeclaredGenerator,
                  "undeclared generator '" + s_.substr(pos_, end - pos_) + "' at position " +
                      std::to_string(pos_),
                  pos_);
    }
    std::string g = s_.substr(pos_, best);
    pos_ += best;
    return g;
  }

  long integer() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
      skip_ws();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > 100000000000L) fail("exponent too large");
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::vector<std::string> gens_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

Word::Word(const std::vector<Syllable>& syllables) {
  for (const auto& s : syllables) append(s.gen, s.exp);
}

Word Word::gen(const std::string& g, long exp) {
  Word w;
  w.append(g, exp);
  return w;
}

void Word::append(const std::string& g, long exp) {
  if (exp == 0) return;
  if (!syl_.empty() && syl_.back().gen == g) {
    syl_.back().exp += exp;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back({g, exp});
}

Word Word::inverse() const {
  Word w;
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, -it->exp});
  return w;
}

long Word::exponent_sum(const std::string& g) const {
  long s = 0;
  for (const auto& x : syl_)
    if (x.gen == g) s += x.exp;
  return s;
}

std::size_t Word::occurrences(const std::string& g) const {
  return static_cast<std::size_t>(
      std::count_if(syl_.begin(), syl_.end(), [&](const Syllable& x) { return x.gen == g; }));
}

Word Word::substitute(const std::string& g, const Word& replacement) const {
  Word out;
  const Word inv = replacement.inverse();
  for (const auto& x : syl_) {
    if (x.gen != g) {
      out.append(x.gen, x.exp);
      continue;
    }
    const Word& piece = x.exp > 0 ? replacement : inv;
    for (long k = 0; k < std::abs(x.exp); ++k)
      for (const auto& y : piece.syl_) out.append(y.gen, y.exp);
  }
  return out;
}

Word Word::renamed(const std::map<std::string, std::string>& names) const {
  Word out;
  for (const auto& x : syl_) {
    auto it = names.find(x.gen);
    out.append(it == names.end() ? x.gen : it->second, x.exp);
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word out(a);
  for (const auto& x : b.syl_) out.append(x.gen, x.exp);
  return out;
}

std::string Word::to_string() const {
  if (syl_.empty()) return "1";
  std::vector<std::string> parts;
  for (const auto& x : syl_) parts.push_back(x.exp == 1 ? x.gen : x.gen + "^" + std::to_string(x.exp));
  return join(parts, " ");
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : gens_(std::move(generators)), rels_(std::move(relators)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (!valid_generator_name(g)) throw Error(ErrorKind::Precondition, "invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw Error(ErrorKind::Precondition, "generator '" + g + "' declared twice");
  }
  for (const auto& r : rels_)
    for (const auto& s : r.syllables())
      if (!seen.count(s.gen))
        throw Error(ErrorKind::UndeclaredGenerator, "relator " + r.to_string() + " uses undeclared generator '" + s.gen + "'");
}

bool Presentation::has_generator(const std::string& g) const {
  return std::find(gens_.begin(), gens_.end(), g) != gens_.end();
}

std::size_t Presentation::generator_index(const std::string& g) const {
  auto it = std::find(gens_.begin(), gens_.end(), g);
  if (it == gens_.end()) throw Error(ErrorKind::UndeclaredGenerator, "no generator '" + g + "'");
  return static_cast<std::size_t>(it - gens_.begin());
}

Presentation Presentation::renamed(const std::map<std::string, std::string>& names) const {
  std::vector<std::string> gens;
  for (const auto& g : gens_) {
    auto it = names.find(g);
    gens.push_back(it == names.end() ? g : it->second);
  }
  std::vector<Word> rels;
  for (const auto& r : rels_) rels.push_back(r.renamed(names));
  return Presentation(std::move(gens), std::move(rels));
}

std::string Presentation::to_string() const {
  std::vector<std::string> rels;
  for (const auto& r : rels_) rels.push_back(r.to_string());
  return "<" + join(gens_, ",") + " | " + join(rels, ", ") + ">";
}

Presentation parse_presentation(const std::string& text) { return Parser(text).presentation(); }

Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
  return Parser(text).standalone_word(generators);
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generators().size());
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (const auto& s : p.relators()[i].syllables()) m(i, p.generator_index(s.gen)) += s.exp;
  return m;
}

Abelianization abelianization(const Presentation& p) {
  const IntMatrix m = relation_matrix(p);
  Abelianization ab;
  std::size_t rank = 0;
  if (m.rows() > 0 && m.cols() > 0) {
    for (const auto& d : smith_normal_form(m).diagonal()) {
      if (d == 0) continue;
      ++rank;
      if (d > 1) ab.torsion.push_back(d);
    }
  }
  ab.free_rank = p.generators().size() - rank;
  return ab;
}

std::string Abelianization::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  return parts.empty() ? "0" : join(parts, " + ");
}

long deficiency(const Presentation& p) {
  return static_cast<long>(p.generators().size()) - static_cast<long>(p.relators().size());
}

bool in_derived_subgroup(const Presentation& p, const Word& w) {
  const std::size_t k = p.generators().size();
  std::vector<BigInt> vec(k, BigInt(0));
  for (const auto& s : w.syllables()) {
    if (!p.has_generator(s.gen)) throw Error(ErrorKind::UndeclaredGenerator, "undeclared generator '" + s.gen + "'");
    vec[p.generator_index(s.gen)] += s.exp;
  }
  const IntMatrix m = relation_matrix(p);
  if (m.rows() == 0 || k == 0)
    return std::all_of(vec.begin(), vec.end(), [](const BigInt& x) { return x == 0; });
  // vec = x M  <=>  (x U^-1) D = vec V
  const SmithResult snf = smith_normal_form(m);
  for (std::size_t j = 0; j < k; ++j) {
    BigInt y = 0;
    for (std::size_t i = 0; i < k; ++i) y += vec[i] * snf.v(i, j);
    const BigInt d = j < snf.d.rows() ? snf.d(j, j) : BigInt(0);
    if (d == 0 ? y != 0 : y % d != 0) return false;
  }
  return true;
}

PushoutResult pushout_presentation(const Presentation& p1, const Presentation& p2,
                                   const std::vector<std::pair<Word, Word>>& gluing) {
  PushoutResult res;
  std::set<std::string> used(p1.generators().begin(), p1.generators().end());
  for (const auto& g : p2.generators()) {
    std::string name = g;
    while (used.count(name)) name += "'";
    // A fresh name must not shadow a later generator of the second factor.
    while (name != g && p2.has_generator(name)) {
      name += "'";
      while (used.count(name)) name += "'";
    }
    if (name != g) res.renaming[g] = name;
    used.insert(name);
  }
  const Presentation q = p2.renamed(res.renaming);

  std::vector<std::string> gens = p1.generators();
  gens.insert(gens.end(), q.generators().begin(), q.generators().end());
  std::vector<Word> rels = p1.relators();
  rels.insert(rels.end(), q.relators().begin(), q.relators().end());

  for (const auto& [left, right] : gluing) {
    for (const auto& s : left.syllables())
      if (!p1.has_generator(s.gen))
        throw Error(ErrorKind::UndeclaredGenerator, "gluing word " + left.to_string() + " is not over the first factor");
    for (const auto& s : right.syllables())
      if (!p2.has_generator(s.gen))
        throw Error(ErrorKind::UndeclaredGenerator, "gluing word " + right.to_string() + " is not over the second factor");
    rels.push_back(left * right.renamed(res.renaming).inverse());
  }
  if (gluing.empty()) res.warnings.push_back("empty gluing list: result is the free product");
  for (const auto& [from, to] : res.renaming)
    res.warnings.push_back("renamed second-factor generator " + from + " to " + to);
  res.presentation = Presentation(std::move(gens), std::move(rels));
  return res;
}

TietzeResult tietze_eliminate(const Presentation& p) {
  std::vector<std::string> gens = p.generators();
  std::vector<Word> rels = p.relators();
  TietzeResult res;

  auto index_of = [&](const std::string& g) {
    return static_cast<std::size_t>(std::find(gens.begin(), gens.end(), g) - gens.begin());
  };

  for (;;) {
    std::vector<Word> kept;
    for (const auto& r : rels) {
      if (r.is_identity()) {
        res.log.push_back({"drop trivial relator"});
        continue;
      }
      const Word inv = r.inverse();
      bool repeat = std::any_of(kept.begin(), kept.end(), [&](const Word& k) { return k == r || k == inv; });
      if (repeat) {
        res.log.push_back({"drop repeated relator " + r.to_string()});
        continue;
      }
      kept.push_back(r);
    }
    rels = std::move(kept);

    std::size_t ri = rels.size();
    std::string victim;
    for (std::size_t i = 0; i < rels.size() && ri == rels.size(); ++i) {
      for (const auto& s : rels[i].syllables()) {
        if (std::abs(s.exp) != 1 || rels[i].occurrences(s.gen) != 1) continue;
        if (victim.empty() || index_of(s.gen) > index_of(victim)) victim = s.gen;
      }
      if (!victim.empty()) ri = i;
    }
    if (ri == rels.size()) break;

    const auto& syl = rels[ri].syllables();
    std::size_t k = 0;
    while (syl[k].gen != victim) ++k;
    Word before(std::vector<Syllable>(syl.begin(), syl.begin() + static_cast<long>(k)));
    Word after(std::vector<Syllable>(syl.begin() + static_cast<long>(k) + 1, syl.end()));
    // before * g^e * after = 1
    Word value = syl[k].exp == 1 ? before.inverse() * after.inverse() : after * before;
    res.log.push_back({"eliminate " + victim + " = " + value.to_string() + " using relator " +
                       rels[ri].to_string()});

    rels.erase(rels.begin() + static_cast<long>(ri));
    gens.erase(gens.begin() + static_cast<long>(index_of(victim)));
    for (auto& r : rels) r = r.substitute(victim, value);
  }
  res.presentation = Presentation(std::move(gens), std::move(rels));
  return res;
}

bool equal_up_to_renaming(const Presentation& p, const Presentation& q,
                          const std::map<std::string, std::string>& names) {
  const Presentation r = p.renamed(names);
  std::set<std::string> a(r.generators().begin(), r.generators().end());
  std::set<std::string> b(q.generators().begin(), q.generators().end());
  return a == b && r.relators() == q.relators();
}

}  // namespace gw
