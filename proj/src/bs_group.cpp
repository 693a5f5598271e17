#include "gw/bs_group.hpp"

#include <cstdlib>

#include "gw/error.hpp"

namespace gw {
namespace {

long checked_add(long x, long y) {
  long out;
  if (__builtin_add_overflow(x, y, &out)) throw Error(ErrorKind::Overflow, "a-exponent overflow");
  return out;
}

long checked_mul(long x, long y) {
  long out;
  if (__builtin_mul_overflow(x, y, &out)) throw Error(ErrorKind::Overflow, "a-exponent overflow");
  return out;
}

long floor_div(long x, long d) {  // d > 0
  long q = x / d;
  if (x % d != 0 && x < 0) --q;
  return q;
}

long sgn(long x) { return x < 0 ? -1 : 1; }

class Normalizer {
 public:
  explicit Normalizer(const BSParams& p, BrittonForm start = {}) : p_(p), f_(std::move(start)) {}

  void push_a(long x) {
    if (x == 0) return;
    std::size_t i = f_.syllables.size();
    while (i > 0) {
      BrittonSyllable& s = f_.syllables[i - 1];
      const long bound = s.sign > 0 ? std::labs(p_.m) : std::labs(p_.n);
      const long r = checked_add(s.r, x);
      const long q = floor_div(r, bound);
      s.r = r - q * bound;
      if (q == 0) return;
      // b a^(q m) = a^(q n) b and b^-1 a^(q n) = a^(q m) b^-1
      x = s.sign > 0 ? checked_mul(checked_mul(p_.n, sgn(p_.m)), q) : checked_mul(checked_mul(p_.m, sgn(p_.n)), q);
      --i;
    }
    f_.head = checked_add(f_.head, x);
  }

  void push_b(long e) {
    const int step = e > 0 ? 1 : -1;
    for (long k = 0; k != e; k += step) {
      if (!f_.syllables.empty() && f_.syllables.back().sign == -step && f_.syllables.back().r == 0)
        f_.syllables.pop_back();
      else
        f_.syllables.push_back({step, 0});
    }
  }

  BrittonForm take() { return std::move(f_); }

 private:
  BSParams p_;
  BrittonForm f_;
};

Mat2Q phi_a(long k) { return {Rational(1), Rational(k), Rational(0), Rational(1)}; }
Mat2Q phi_b(const BSParams& p, long k) { return {p.ratio().pow(k), Rational(0), Rational(0), Rational(1)}; }

Verdict verdict(const char* name, bool ok, std::string detail) { return {name, ok, std::move(detail), Severity::Fatal}; }

}  // namespace

BSParams::BSParams(long m_, long n_) : m(m_), n(n_) {
  if (m == 0 || n == 0) throw Error(ErrorKind::Precondition, "BS(m,n) needs m, n nonzero");
}

Presentation BSParams::presentation() const {
  Word rel = Word::gen("b") * Word::gen("a", m) * Word::gen("b", -1) * Word::gen("a", -n);
  return Presentation({"a", "b"}, {rel});
}

std::string BSParams::to_string() const { return "BS(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

Word BrittonForm::to_word() const {
  Word w = Word::gen("a", head);
  for (const auto& s : syllables) {
    w.append("b", s.sign);
    w.append("a", s.r);
  }
  return w;
}

BrittonForm britton_normalize(const Word& w, const BSParams& params) {
  Normalizer nz(params);
  for (const auto& s : w.syllables()) {
    if (s.gen == "a") nz.push_a(s.exp);
    else if (s.gen == "b") nz.push_b(s.exp);
    else throw Error(ErrorKind::UndeclaredGenerator, "BS words use only a and b, got '" + s.gen + "'");
  }
  return nz.take();
}

BrittonForm britton_multiply(const BrittonForm& x, const BrittonForm& y, const BSParams& params) {
  Normalizer nz(params, x);
  nz.push_a(y.head);
  for (const auto& s : y.syllables) {
    nz.push_b(s.sign);
    nz.push_a(s.r);
  }
  return nz.take();
}

bool is_britton_reduced(const BrittonForm& f, const BSParams& params) {
  for (std::size_t i = 0; i < f.syllables.size(); ++i) {
    const auto& s = f.syllables[i];
    if (s.sign != 1 && s.sign != -1) return false;
    const long bound = s.sign > 0 ? std::labs(params.m) : std::labs(params.n);
    if (s.r < 0 || s.r >= bound) return false;
    if (s.r == 0 && i + 1 < f.syllables.size() && f.syllables[i + 1].sign == -s.sign) return false;
  }
  return true;
}

BSElement BSElement::from_word(const Word& w, const BSParams& params) { return {params, britton_normalize(w, params)}; }
BSElement BSElement::a(const BSParams& params, long e) { return from_word(Word::gen("a", e), params); }
BSElement BSElement::b(const BSParams& params, long e) { return from_word(Word::gen("b", e), params); }

BSElement BSElement::inverse() const { return from_word(form_.to_word().inverse(), params_); }

BSElement operator*(const BSElement& x, const BSElement& y) {
  if (!(x.params_ == y.params_)) throw Error(ErrorKind::InstanceMismatch, x.params_.to_string() + " vs " + y.params_.to_string());
  return {x.params_, britton_multiply(x.form_, y.form_, x.params_)};
}

Mat2Q phi_matrix(const Word& w, const BSParams& params) {
  Mat2Q out;
  for (const auto& s : w.syllables()) {
    if (s.gen == "a") out = out * phi_a(s.exp);
    else if (s.gen == "b") out = out * phi_b(params, s.exp);
    else throw Error(ErrorKind::UndeclaredGenerator, "BS words use only a and b, got '" + s.gen + "'");
  }
  return out;
}

Mat2Q phi_matrix(const BrittonForm& f, const BSParams& params) { return phi_matrix(f.to_word(), params); }

MetabelianElement::MetabelianElement(BSParams params, long k, Rational c) : params_(params), k_(k), c_(std::move(c)) {
  const Rational t = params_.ratio();
  if (t == Rational(1)) k_ = 0;
  else if (t == Rational(-1)) k_ = ((k_ % 2) + 2) % 2;
}

MetabelianElement MetabelianElement::of(const BrittonForm& f, const BSParams& params) {
  MetabelianElement out(params, 0, Rational(f.head));
  for (const auto& s : f.syllables) out = out * MetabelianElement(params, s.sign, Rational(0)) * MetabelianElement(params, 0, Rational(s.r));
  return out;
}

Mat2Q MetabelianElement::matrix() const { return {params_.ratio().pow(k_), c_, Rational(0), Rational(1)}; }

MetabelianElement MetabelianElement::inverse() const { return {params_, -k_, -(params_.ratio().pow(-k_) * c_)}; }

MetabelianElement operator*(const MetabelianElement& x, const MetabelianElement& y) {
  if (!(x.params_ == y.params_)) throw Error(ErrorKind::InstanceMismatch, x.params_.to_string() + " vs " + y.params_.to_string());
  return {x.params_, checked_add(x.k_, y.k_), x.params_.ratio().pow(x.k_) * y.c_ + x.c_};
}

std::string MetabelianElement::to_string() const { return "(" + std::to_string(k_) + ", " + c_.to_string() + ")"; }

bool CheckReport::passed(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return v.passed;
  return false;
}

CheckReport bs_hypothesis_check(const BSParams& p) {
  CheckReport rep{p, abelianization(p.presentation()), {}};
  const Word am = Word::gen("a", p.m);
  const Word an = Word::gen("a", p.n);
  const Word b = Word::gen("b");

  const Rational det = mat_det(phi_matrix(b, p));
  const bool variable = !(det == Rational(1)) && !(det == Rational(-1));
  rep.verdicts.push_back(verdict(kVariableCheck, variable, "det phi(b) = " + det.to_string()));

  const BrittonForm comm = britton_normalize(b * am * b.inverse() * am.inverse(), p);
  const BrittonForm expect = britton_normalize(Word::gen("a", p.n - p.m), p);
  const bool identity_ok = comm == expect;
  const bool derived = in_derived_subgroup(p.presentation(), am);
  rep.verdicts.push_back(verdict(kDerivedCheck, identity_ok && derived,
                                 "b a^m b^-1 a^-m = " + comm.to_word().to_string() + (identity_ok ? " = " : " != ") +
                                     "a^(n-m); a^m " + (derived ? "maps to 0" : "does not map to 0") +
                                     " in the abelianization " + rep.abelianization.to_string()));

  const Word conj = b * am * b.inverse();
  const bool commute = britton_normalize(am * conj, p) == britton_normalize(conj * am, p);
  const bool distinct = !(phi_matrix(am, p) == phi_matrix(conj, p));
  const bool relation = britton_normalize(conj, p) == britton_normalize(an, p);
  rep.verdicts.push_back(verdict(kCommuteCheck, commute && distinct && relation,
                                 std::string(commute ? "commute" : "do not commute") + "; phi(a^m) " +
                                     (distinct ? "!=" : "=") + " phi(b a^m b^-1) = " +
                                     phi_matrix(conj, p).to_string() + "; b a^m b^-1 " + (relation ? "=" : "!=") +
                                     " a^n"));

  rep.verdicts.push_back(verdict(kTorsionCheck, rep.abelianization.torsion_free(), rep.abelianization.to_string()));
  return rep;
}

BDModuleData<BSRingElement> bs_module_data(const BSParams& p) {
  const BSElement e = BSElement::a(p, 0);
  const BSRingElement one = BSRingElement::of(e);
  const BSRingElement r = one + BSRingElement::of(BSElement::a(p, p.m));
  const BSRingElement x = BSRingElement::of(BSElement::b(p));
  const BSRingElement xi = BSRingElement::of(BSElement::b(p, -1));
  return build_bd_data(BDInput<BSRingElement>::make(r, x, xi));
}

int BSPipelineReport::exit_code() const {
  if (!hypotheses.all_passed()) return 2;
  return certificate.all_passed() ? 0 : 1;
}

BSPipelineReport verify_bs(const BSParams& params) {
  return {bs_hypothesis_check(params), certify(bs_module_data(params))};
}

}  // namespace gw
