#pragma once

// Exact natural numbers written as lazy expressions over +, -, * and ^.
//
// Values up to kExactDigits decimal digits are materialized with GMP. Beyond
// that, comparisons work on a canonical sum-of-monomials form whose atoms are
// primes (or unfactored literals, or opaque multi-term bases) raised to
// exponents that are themselves canonical forms, together with level-index
// magnitudes (x = 2^2^...^v) to find the dominant term.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "thetakit/graph.hpp"

namespace thetakit {

inline constexpr double kExactDigits = 1e5;

/// Thrown when a symbolic comparison cannot be settled.
class TowerUndecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Level-index magnitudes.

/// Nonnegative magnitude exp2^level(v). Level 0 holds plain doubles up to
/// 2^1000; higher levels keep v in (1000, 2^1000].
struct Mag {
  int level = 0;
  double v = 0.0;

  static Mag of(double x) { return normalize({0, x}); }

  static Mag normalize(Mag m) {
    while (m.level > 0 && m.v <= 1000.0) {
      m.v = std::exp2(m.v);
      --m.level;
    }
    while (m.v > 0x1.0p1000) {
      m.v = std::log2(m.v);
      ++m.level;
    }
    return m;
  }

  [[nodiscard]] bool is_zero() const { return level == 0 && v == 0.0; }

  /// log2 of this magnitude; values below 1 give 0.
  [[nodiscard]] Mag lg() const {
    if (level > 0) return normalize({level - 1, v});
    return {0, v > 1.0 ? std::log2(v) : 0.0};
  }

  static Mag exp2(Mag m) {
    if (m.level == 0 && m.v <= 1000.0) return {0, std::exp2(m.v)};
    return normalize({m.level + 1, m.v});
  }

  /// Approximate log10 of the value, as a magnitude.
  [[nodiscard]] Mag digits() const {
    Mag l = lg();
    if (l.level == 0) return {0, l.v * 0.30102999566398120 + 1.0};
    return l;
  }

  friend std::partial_ordering operator<=>(const Mag& a, const Mag& b) {
    if (a.level != b.level) return a.level <=> b.level;
    return a.v <=> b.v;
  }
  friend bool operator==(const Mag&, const Mag&) = default;
};

inline Mag mag_add(Mag a, Mag b) {
  if (a < b) std::swap(a, b);
  if (b.is_zero()) return a;
  if (a.level == 0) return Mag::of(a.v + b.v);
  if (a.level >= 2) return a;
  const double lb = b.level == 1 ? b.v : std::log2(b.v);
  return Mag::normalize({1, a.v + std::log2(1.0 + std::exp2(lb - a.v))});
}

inline Mag mag_mul(Mag a, Mag b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.level == 0 && b.level == 0 && a.v * b.v <= 0x1.0p1000) return {0, a.v * b.v};
  if (a.level == 0 && a.v < 1.0) return b;  // only used for sizes; fractions never shrink
  if (b.level == 0 && b.v < 1.0) return a;
  return Mag::exp2(mag_add(a.lg(), b.lg()));
}

inline Mag mag_pow(Mag base, Mag e) {
  if (e.is_zero()) return Mag::of(1.0);
  if (base.level == 0 && base.v <= 1.0) return base;
  return Mag::exp2(mag_mul(e, base.lg()));
}

inline Mag mag_of(const mpz_class& z) {
  if (z == 0) return {};
  const auto bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  if (bits <= 1000) return {0, std::fabs(z.get_d())};
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return Mag::normalize({1, static_cast<double>(exp) + std::log2(std::fabs(mant))});
}

/// Strict `a > b` with a relative safety margin on the leading double.
inline bool mag_clearly_greater(Mag a, Mag b) {
  if (b.is_zero()) return !a.is_zero();
  if (a.level != b.level) return a.level > b.level;
  return a.v > b.v * (1.0 + 1e-9) + 1e-9;
}

// ---------------------------------------------------------------------------
// Canonical sum-of-monomials form.

struct Poly;
using PolyRef = std::shared_ptr<const Poly>;

struct Atom {
  enum class Kind { prime, literal, opaque };
  Kind kind = Kind::prime;
  mpz_class value;  // prime or literal
  PolyRef body;     // opaque
};

struct Factor {
  Atom atom;
  PolyRef exponent;
};

struct Term {
  mpq_class coef;
  std::vector<Factor> factors;  // sorted by atom, exponents nonzero
};

struct Poly {
  std::vector<Term> terms;  // sorted by monomial, coefficients nonzero
};

namespace tower_detail {

inline constexpr double kFoldDigits = 2000;
inline constexpr unsigned long kTrialLimit = 100000;

inline int sgn(int c) { return (c > 0) - (c < 0); }

int cmp(const Poly& a, const Poly& b);

inline int cmp(const Atom& a, const Atom& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.kind == Atom::Kind::opaque) return cmp(*a.body, *b.body);
  return sgn(::cmp(a.value, b.value));
}

inline int cmp_monomial(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (int c = cmp(a[i].atom, b[i].atom)) return c;
    if (int c = cmp(*a[i].exponent, *b[i].exponent)) return c;
  }
  return a.size() == b.size() ? 0 : (a.size() < b.size() ? -1 : 1);
}

inline int cmp(const Poly& a, const Poly& b) {
  for (std::size_t i = 0; i < a.terms.size() && i < b.terms.size(); ++i) {
    if (int c = cmp_monomial(a.terms[i].factors, b.terms[i].factors)) return c;
    if (int c = sgn(::cmp(a.terms[i].coef, b.terms[i].coef))) return c;
  }
  return a.terms.size() == b.terms.size() ? 0 : (a.terms.size() < b.terms.size() ? -1 : 1);
}

inline Poly constant(const mpq_class& c) {
  Poly p;
  if (c != 0) p.terms.push_back({c, {}});
  return p;
}

inline PolyRef share(Poly p) { return std::make_shared<const Poly>(std::move(p)); }

inline bool is_constant(const Poly& p) {
  return p.terms.empty() || (p.terms.size() == 1 && p.terms[0].factors.empty());
}

inline mpq_class constant_value(const Poly& p) { return p.terms.empty() ? mpq_class(0) : p.terms[0].coef; }

/// Split off the constant term.
inline std::pair<mpq_class, Poly> split_constant(const Poly& p) {
  if (!p.terms.empty() && p.terms[0].factors.empty()) {
    Poly rest;
    rest.terms.assign(p.terms.begin() + 1, p.terms.end());
    return {p.terms[0].coef, rest};
  }
  return {0, p};
}

/// Sort terms by monomial and combine equal monomials.
inline Poly collect(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return cmp_monomial(a.factors, b.factors) < 0; });
  Poly out;
  for (auto& t : terms) {
    if (!out.terms.empty() && cmp_monomial(out.terms.back().factors, t.factors) == 0) {
      out.terms.back().coef += t.coef;
    } else {
      out.terms.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms, [](const Term& t) { return t.coef == 0; });
  return out;
}

inline Poly add(const Poly& a, const Poly& b) {
  std::vector<Term> all = a.terms;
  all.insert(all.end(), b.terms.begin(), b.terms.end());
  return collect(std::move(all));
}

inline Poly negate(Poly p) {
  for (auto& t : p.terms) t.coef = -t.coef;
  return p;
}

inline double log10_of(const mpz_class& z) {
  if (z <= 0) return 0;
  if (mpz_sizeinbase(z.get_mpz_t(), 2) < 1000) return std::log10(z.get_d());
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return (static_cast<double>(exp) + std::log2(mant)) * 0.30102999566398120;
}

inline double digits_of_power(const mpz_class& base, const mpq_class& e) {
  if (base <= 1) return 1;
  return std::fabs(e.get_d()) * log10_of(base) + 1;
}

inline mpq_class rational_pow(const mpz_class& base, const mpz_class& e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), mpz_class(abs(e)).get_ui());
  return e >= 0 ? mpq_class(r) : mpq_class(1, 1) / mpq_class(r);
}

/// p-adic valuation of a rational and the rational with p removed.
inline std::pair<long, mpq_class> strip_prime(const mpq_class& q, const mpz_class& p) {
  mpz_class num = q.get_num(), den = q.get_den();
  const long vn = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
  const long vd = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
  mpq_class rest(num, den);
  rest.canonicalize();
  return {vn - vd, rest};
}

Poly mul(const Poly& a, const Poly& b);

inline Term normalize_term(mpq_class coef, std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& x, const Factor& y) { return cmp(x.atom, y.atom) < 0; });
  std::vector<Factor> merged;
  for (auto& f : factors) {
    if (!merged.empty() && cmp(merged.back().atom, f.atom) == 0) {
      merged.back().exponent = share(add(*merged.back().exponent, *f.exponent));
    } else {
      merged.push_back(std::move(f));
    }
  }
  std::vector<Factor> out;
  for (auto& f : merged) {
    if (f.exponent->terms.empty()) continue;
    if (f.atom.kind == Atom::Kind::opaque) {
      out.push_back(std::move(f));
      continue;
    }
    // Total constant power of this prime/literal, coefficient included.
    auto [k, sym] = split_constant(*f.exponent);
    long v = 0;
    if (f.atom.kind == Atom::Kind::prime) {
      auto [val, rest] = strip_prime(coef, f.atom.value);
      v = val;
      coef = rest;
    }
    mpq_class total = k + v;
    if (total.get_den() != 1) throw InvalidInput("non-integral exponent in tower expression");
    if (digits_of_power(f.atom.value, total) <= kFoldDigits) {
      coef *= rational_pow(f.atom.value, total.get_num());
      if (sym.terms.empty()) continue;
      out.push_back({f.atom, share(std::move(sym))});
    } else {
      out.push_back({f.atom, share(add(sym, constant(total)))});
    }
  }
  return {coef, std::move(out)};
}

inline Poly mul(const Poly& a, const Poly& b) {
  std::vector<Term> all;
  all.reserve(a.terms.size() * b.terms.size());
  for (const auto& x : a.terms) {
    for (const auto& y : b.terms) {
      std::vector<Factor> fs = x.factors;
      fs.insert(fs.end(), y.factors.begin(), y.factors.end());
      Term t = normalize_term(x.coef * y.coef, std::move(fs));
      if (t.coef != 0) all.push_back(std::move(t));
    }
  }
  return collect(std::move(all));
}

/// Prime (or unfactored literal) decomposition of a positive integer.
inline std::vector<std::pair<Atom, long>> factorize(mpz_class n) {
  std::vector<std::pair<Atom, long>> out;
  for (unsigned long p = 2; p <= kTrialLimit && n > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      long e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      out.push_back({{Atom::Kind::prime, mpz_class(p), nullptr}, e});
    }
  }
  if (n > 1) {
    const bool prime = mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
    out.push_back({{prime ? Atom::Kind::prime : Atom::Kind::literal, n, nullptr}, 1});
  }
  return out;
}

/// c^e for a positive rational constant c and any exponent form e.
inline Poly constant_pow(const mpq_class& c, const Poly& e) {
  if (c <= 0) throw InvalidInput("tower powers need a positive base");
  if (c == 1) return constant(1);
  if (is_constant(e)) {
    const mpq_class k = constant_value(e);
    if (k.get_den() != 1) throw InvalidInput("non-integral exponent in tower expression");
    const double d = std::max(digits_of_power(c.get_num(), k), digits_of_power(c.get_den(), k));
    if (d <= kFoldDigits) {
      return constant(rational_pow(c.get_num(), k.get_num()) / rational_pow(c.get_den(), k.get_num()));
    }
  }
  std::vector<Factor> fs;
  for (auto [atom, m] : factorize(c.get_num())) fs.push_back({atom, share(mul(e, constant(m)))});
  for (auto [atom, m] : factorize(c.get_den())) fs.push_back({atom, share(mul(e, constant(-m)))});
  Poly out;
  out.terms.push_back(normalize_term(1, std::move(fs)));
  return out;
}

inline Poly pow(const Poly& base, const Poly& e) {
  if (e.terms.empty()) return constant(1);
  if (base.terms.empty()) return {};
  if (is_constant(base)) return constant_pow(constant_value(base), e);
  if (base.terms.size() == 1) {
    const Term& t = base.terms[0];
    std::vector<Factor> fs;
    for (const auto& f : t.factors) fs.push_back({f.atom, share(mul(*f.exponent, e))});
    Poly mono;
    mono.terms.push_back(normalize_term(1, std::move(fs)));
    return mul(constant_pow(t.coef, e), mono);
  }
  if (is_constant(e)) {
    const mpq_class k = constant_value(e);
    if (k.get_den() == 1 && k >= 0 && k <= 16 &&
        std::pow(static_cast<double>(base.terms.size()), k.get_d()) <= 4096.0) {
      Poly acc = constant(1);
      for (long i = 0; i < k.get_num().get_si(); ++i) acc = mul(acc, base);
      return acc;
    }
  }
  Poly out;
  out.terms.push_back(normalize_term(1, {{{Atom::Kind::opaque, 0, share(base)}, share(e)}}));
  return out;
}

inline std::string to_string(const Poly& p);

inline std::string to_string(const Atom& a) {
  if (a.kind == Atom::Kind::opaque) return "[" + to_string(*a.body) + "]";
  return a.value.get_str();
}

/// Debug rendering, e.g. "3*2^(5) + -1".
inline std::string to_string(const Poly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& t : p.terms) {
    if (!out.empty()) out += " + ";
    std::string c = t.coef.get_str();
    out += c.size() > 40 ? "<" + std::to_string(c.size()) + " chars>" : c;
    for (const auto& f : t.factors) out += "*" + to_string(f.atom) + "^(" + to_string(*f.exponent) + ")";
  }
  return out;
}

// Signed magnitude estimate. `reliable` is false when cancellation makes the
// estimate meaningless.
struct Approx {
  int sign = 0;
  Mag mag;
  bool reliable = true;
};

Approx approx(const Poly& p);

inline Mag atom_mag(const Atom& a) {
  if (a.kind != Atom::Kind::opaque) return mag_of(a.value);
  return approx(*a.body).mag;
}

inline Approx approx_rational(const mpq_class& q) {
  if (q == 0) return {0, {}, true};
  const Mag num = mag_of(q.get_num());
  const Mag den = mag_of(q.get_den());
  if (den.level == 0 && num.level == 0) return {sgn(::sgn(q)), Mag::of(num.v / den.v), true};
  // Only sizes matter here; a huge denominator means a tiny value.
  if (den > num) return {sgn(::sgn(q)), Mag::of(0.0), true};
  return {sgn(::sgn(q)), num, true};
}

/// Signed sum of approximations, in the log domain.
inline Approx approx_sum(std::vector<Approx> xs) {
  std::erase_if(xs, [](const Approx& a) { return a.sign == 0 || a.mag.is_zero(); });
  if (xs.empty()) return {};
  bool reliable = std::all_of(xs.begin(), xs.end(), [](const Approx& a) { return a.reliable; });
  std::sort(xs.begin(), xs.end(), [](const Approx& a, const Approx& b) { return a.mag > b.mag; });
  const Approx& top = xs[0];
  if (top.mag.level >= 2) {
    // Anything not at the same magnitude is negligible; a tie of opposite signs is not.
    for (std::size_t i = 1; i < xs.size(); ++i)
      if (xs[i].sign != top.sign && !mag_clearly_greater(top.mag, xs[i].mag)) reliable = false;
    return {top.sign, top.mag, reliable};
  }
  const double ltop = top.mag.lg().v;
  double acc = 0;
  double scale = 0;
  for (const auto& x : xs) {
    const double lx = x.mag.level == 1 ? x.mag.v : (x.mag.v > 0 ? std::log2(x.mag.v) : -1e308);
    const double w = std::exp2(lx - ltop);
    acc += x.sign * w;
    scale += w;
  }
  if (std::fabs(acc) <= 1e-9 * scale) return {acc >= 0 ? 1 : -1, Mag::of(0.0), false};
  const int sign = acc > 0 ? 1 : -1;
  const double lsum = ltop + std::log2(std::fabs(acc));
  if (top.mag.level == 0) return {sign, Mag::of(std::exp2(lsum)), reliable};
  return {sign, Mag::normalize({1, lsum}), reliable};
}

inline Approx approx_term(const Term& t) {
  Approx c = approx_rational(t.coef);
  // log2 |term| = log2 |coef| + sum of exponent * log2(atom).
  std::vector<Approx> logs;
  if (c.mag.v > 0 || c.mag.level > 0) {
    const double lc = c.mag.level == 0 ? std::log2(c.mag.v) : 0;
    if (c.mag.level == 0) {
      logs.push_back({lc >= 0 ? 1 : -1, Mag::of(std::fabs(lc)), true});
    } else {
      logs.push_back({1, c.mag.lg(), true});
    }
  }
  bool reliable = true;
  for (const auto& f : t.factors) {
    Approx e = approx(*f.exponent);
    reliable = reliable && e.reliable;
    logs.push_back({e.sign, mag_mul(e.mag, atom_mag(f.atom).lg()), e.reliable});
  }
  Approx l = approx_sum(logs);
  reliable = reliable && l.reliable;
  if (l.sign >= 0) return {c.sign, Mag::exp2(l.mag), reliable};
  // Value below one.
  if (l.mag.level == 0 && l.mag.v < 1000) return {c.sign, Mag::of(std::exp2(-l.mag.v)), reliable};
  return {c.sign, Mag::of(0.0), reliable};
}

inline Approx approx(const Poly& p) {
  std::vector<Approx> xs;
  for (const auto& t : p.terms) xs.push_back(approx_term(t));
  return approx_sum(std::move(xs));
}

/// Exact value when every intermediate stays within `cap` digits.
inline std::optional<mpq_class> evaluate(const Poly& p, double cap) {
  mpq_class sum = 0;
  for (const auto& t : p.terms) {
    Approx a = approx_term(t);
    if (a.mag.digits() > Mag::of(cap)) return std::nullopt;
    mpq_class v = t.coef;
    for (const auto& f : t.factors) {
      auto e = evaluate(*f.exponent, 64);
      if (!e || e->get_den() != 1 || !e->get_num().fits_slong_p()) return std::nullopt;
      mpz_class base;
      if (f.atom.kind == Atom::Kind::opaque) {
        auto b = evaluate(*f.atom.body, cap);
        if (!b || b->get_den() != 1) return std::nullopt;
        base = b->get_num();
      } else {
        base = f.atom.value;
      }
      if (digits_of_power(base, *e) > cap + 10) return std::nullopt;
      v *= rational_pow(base, e->get_num());
    }
    sum += v;
  }
  return sum;
}

}  // namespace tower_detail

// ---------------------------------------------------------------------------
// Expression trees.

class TowerInt {
 public:
  enum class Op { lit, add, sub, mul, pow };

  TowerInt() : TowerInt(0UL) {}
  TowerInt(unsigned long v) : TowerInt(mpz_class(v)) {}  // NOLINT(google-explicit-constructor)
  TowerInt(int v) : TowerInt(mpz_class(v)) {            // NOLINT(google-explicit-constructor)
    if (v < 0) throw InvalidInput("TowerInt denotes a natural number");
  }
  explicit TowerInt(const mpz_class& v) : node_(std::make_shared<Node>(Node{Op::lit, v, {}, {}})) {
    if (v < 0) throw InvalidInput("TowerInt denotes a natural number");
  }

  static TowerInt pow(const TowerInt& b, const TowerInt& e) { return TowerInt(Op::pow, b, e); }
  friend TowerInt operator+(const TowerInt& a, const TowerInt& b) { return TowerInt(Op::add, a, b); }
  friend TowerInt operator*(const TowerInt& a, const TowerInt& b) { return TowerInt(Op::mul, a, b); }
  /// The caller promises a >= b; exact evaluation checks it.
  friend TowerInt operator-(const TowerInt& a, const TowerInt& b) { return TowerInt(Op::sub, a, b); }

  [[nodiscard]] Op op() const { return node_->op; }
  [[nodiscard]] const TowerInt& lhs() const { return node_->kids[0]; }
  [[nodiscard]] const TowerInt& rhs() const { return node_->kids[1]; }

  /// Canonical sum-of-monomials form (cached).
  [[nodiscard]] const Poly& canonical() const {
    if (!node_->canon) {
      using namespace tower_detail;
      Poly p;
      switch (node_->op) {
        case Op::lit: p = constant(mpq_class(node_->value)); break;
        case Op::add: p = add(lhs().canonical(), rhs().canonical()); break;
        case Op::sub: p = add(lhs().canonical(), negate(rhs().canonical())); break;
        case Op::mul: p = mul(lhs().canonical(), rhs().canonical()); break;
        case Op::pow: p = tower_detail::pow(lhs().canonical(), rhs().canonical()); break;
      }
      node_->canon = share(std::move(p));
    }
    return *node_->canon;
  }

  [[nodiscard]] Mag magnitude() const { return tower_detail::approx(canonical()).mag; }

  /// Estimated decimal digit count, as a magnitude (level 0 is a plain number).
  [[nodiscard]] Mag digits() const { return magnitude().digits(); }

  /// Exact value by direct evaluation of the expression, if it has at most `cap` digits.
  [[nodiscard]] std::optional<mpz_class> exact(double cap = kExactDigits) const {
    if (digits() > Mag::of(cap + 2)) return std::nullopt;
    return eval(cap);
  }

  /// Tower notation, e.g. 3^(12^(11)).
  [[nodiscard]] std::string str() const {
    switch (node_->op) {
      case Op::lit: return node_->value.get_str();
      case Op::add: return "(" + lhs().str() + " + " + rhs().str() + ")";
      case Op::sub: return "(" + lhs().str() + " - " + rhs().str() + ")";
      case Op::mul: return lhs().str() + "*" + rhs().str();
      case Op::pow: {
        std::string b = lhs().str();
        if (lhs().op() != Op::lit) b = "(" + b + ")";
        return b + "^(" + rhs().str() + ")";
      }
    }
    return "?";
  }

 private:
  struct Node {
    Op op;
    mpz_class value;
    std::vector<TowerInt> kids;
    mutable PolyRef canon;
  };

  TowerInt(Op op, const TowerInt& a, const TowerInt& b)
      : node_(std::make_shared<Node>(Node{op, 0, {a, b}, {}})) {}

  [[nodiscard]] std::optional<mpz_class> eval(double cap) const {
    if (node_->op == Op::lit) return node_->value;
    auto a = lhs().eval(cap);
    if (!a) return std::nullopt;
    if (node_->op == Op::pow) {
      auto e = rhs().exact(64);
      if (!e || !e->fits_ulong_p()) return std::nullopt;
      if (*a > 1 && e->get_d() * tower_detail::log10_of(*a) > cap + 2) return std::nullopt;
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), a->get_mpz_t(), e->get_ui());
      return r;
    }
    auto b = rhs().eval(cap);
    if (!b) return std::nullopt;
    switch (node_->op) {
      case Op::add: return *a + *b;
      case Op::mul: return *a * *b;
      case Op::sub:
        if (*a < *b) throw InvalidInput("TowerInt subtraction went negative");
        return *a - *b;
      default: break;
    }
    return std::nullopt;
  }

  std::shared_ptr<Node> node_;
};

inline TowerInt tpow(const TowerInt& b, const TowerInt& e) { return TowerInt::pow(b, e); }

struct CompareOptions {
  bool force_symbolic = false;  // never materialize whole values
  double exact_digits = kExactDigits;
};

namespace tower_detail {

int poly_sign(const Poly& d, const CompareOptions& opts);

/// Sign of c1*M1 + c2*M2 when the magnitudes tie: compare through the ratio.
inline std::optional<int> two_term_sign(const Poly& d, const CompareOptions& opts) {
  if (d.terms.size() != 2) return std::nullopt;
  const Term& a = d.terms[0];
  const Term& b = d.terms[1];
  if (::sgn(a.coef) == ::sgn(b.coef)) return ::sgn(a.coef);
  // Exponent differences per atom (a over b).
  std::vector<std::pair<Atom, Poly>> diff;
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    int c = i == a.factors.size() ? 1 : (j == b.factors.size() ? -1 : cmp(a.factors[i].atom, b.factors[j].atom));
    if (c < 0) {
      diff.push_back({a.factors[i].atom, *a.factors[i].exponent});
      ++i;
    } else if (c > 0) {
      diff.push_back({b.factors[j].atom, negate(*b.factors[j].exponent)});
      ++j;
    } else {
      Poly e = add(*a.factors[i].exponent, negate(*b.factors[j].exponent));
      if (!e.terms.empty()) diff.push_back({a.factors[i].atom, e});
      ++i;
      ++j;
    }
  }
  const mpq_class ca = abs(a.coef), cb = abs(b.coef);
  const int sa = ::sgn(a.coef);
  if (diff.empty()) return ::sgn(ca - cb) * sa;
  if (diff.size() != 1) return std::nullopt;
  // |a| / |b| = (ca/cb) * atom^delta.
  const Poly& delta = diff[0].second;
  const int ds = poly_sign(delta, opts);
  const Mag dm = approx(delta).mag;
  const Mag coef_bits = Mag::of(std::fabs(std::log2(ca.get_d() > 0 ? ca.get_d() : 1.0)) +
                                std::fabs(std::log2(cb.get_d() > 0 ? cb.get_d() : 1.0)) + 4.0);
  if (mag_clearly_greater(dm, coef_bits)) return ds * sa;
  return std::nullopt;
}

inline const Poly* exponent_of(const Term& t, const Atom& a) {
  for (const auto& f : t.factors)
    if (cmp(f.atom, a) == 0) return f.exponent.get();
  return nullptr;
}

/// Divide every term by the largest common power of each atom; the sign is unchanged.
inline Poly factor_out_common(const Poly& d, const CompareOptions& opts) {
  std::vector<Atom> atoms;
  for (const auto& t : d.terms)
    for (const auto& f : t.factors)
      if (std::none_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return cmp(a, f.atom) == 0; }))
        atoms.push_back(f.atom);
  const Poly zero;
  std::vector<Poly> mins;
  for (const auto& a : atoms) {
    const Poly* lo = nullptr;
    for (const auto& t : d.terms) {
      const Poly* e = exponent_of(t, a);
      if (!e) e = &zero;
      if (!lo || poly_sign(add(*e, negate(*lo)), opts) < 0) lo = e;
    }
    mins.push_back(*lo);
  }
  std::vector<Term> out;
  for (const auto& t : d.terms) {
    std::vector<Factor> fs;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const Poly* e = exponent_of(t, atoms[i]);
      Poly rest = add(e ? *e : zero, negate(mins[i]));
      if (!rest.terms.empty()) fs.push_back({atoms[i], share(std::move(rest))});
    }
    out.push_back(normalize_term(t.coef, std::move(fs)));
  }
  return collect(std::move(out));
}

inline int poly_sign(const Poly& d0, const CompareOptions& opts) {
  if (d0.terms.empty()) return 0;
  if (is_constant(d0)) return ::sgn(constant_value(d0));
  const Poly d = factor_out_common(d0, opts);
  if (is_constant(d)) return ::sgn(constant_value(d));
  std::vector<Approx> xs;
  for (const auto& t : d.terms) xs.push_back(approx_term(t));
  std::size_t top = 0;
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i].mag > xs[top].mag) top = i;
  std::vector<Approx> rest;
  bool reliable = xs[top].reliable;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i == top) continue;
    rest.push_back({1, xs[i].mag, xs[i].reliable});
    reliable = reliable && xs[i].reliable;
  }
  const Approx others = approx_sum(rest);
  if (reliable && mag_clearly_greater(xs[top].mag, mag_add(others.mag, Mag::of(0)))) {
    // |top| > sum of the others' magnitudes by a safe margin.
    const Mag tl = xs[top].mag.lg();
    const Mag ol = others.mag.lg();
    if (others.sign == 0 || mag_clearly_greater(tl, mag_add(ol, Mag::of(1e-6)))) return xs[top].sign;
  }
  // What is left after factoring is small near a tie; settle it exactly.
  if (auto v = evaluate(d, opts.force_symbolic ? kFoldDigits : opts.exact_digits)) return ::sgn(*v);
  if (auto s = two_term_sign(d, opts)) return *s;
  throw TowerUndecided("tower comparison undecided for " + to_string(d));
}

}  // namespace tower_detail

/// Exact ordering of two tower naturals.
inline std::strong_ordering tower_compare(const TowerInt& a, const TowerInt& b, const CompareOptions& opts = {}) {
  using namespace tower_detail;
  const Poly& pa = a.canonical();
  const Poly& pb = b.canonical();
  if (cmp(pa, pb) == 0) return std::strong_ordering::equal;
  if (!opts.force_symbolic) {
    const Mag cap = Mag::of(opts.exact_digits);
    if (!(a.digits() > cap) && !(b.digits() > cap)) {
      auto va = a.exact(opts.exact_digits);
      auto vb = b.exact(opts.exact_digits);
      if (va && vb) return ::cmp(*va, *vb) <=> 0;
    }
  }
  const int s = poly_sign(add(pa, negate(pb)), opts);
  return s <=> 0;
}

/// Canonical forms coincide (sufficient, not necessary, for equality).
inline bool same_canonical(const TowerInt& a, const TowerInt& b) {
  return tower_detail::cmp(a.canonical(), b.canonical()) == 0;
}

// ---------------------------------------------------------------------------
// Constants.

/// sigma_r = s^((4s)^(r-1)).
inline TowerInt sigma(int s, int r) {
  if (s < 1 || r < 1) throw InvalidInput("sigma needs s, r >= 1");
  return tpow(s, tpow(4 * s, r - 1));
}

struct TreeConstants {
  TowerInt theta, mu, lambda;
};

/// theta_n, mu_n, lambda_n for branching a. Base mu_1 = 1, lambda_1 = 0.
inline TreeConstants tree_constants(int a, int n) {
  if (a < 1 || n < 1) throw InvalidInput("tree_constants needs a, n >= 1");
  auto theta_at = [&](int k) {
    // k * a^(k-1) - 1 >= 0 always.
    return tpow(3, tpow(12, TowerInt(k) * tpow(a, k - 1) - TowerInt(1)));
  };
  TreeConstants c{theta_at(1), TowerInt(1), TowerInt(0)};
  for (int k = 2; k <= n; ++k) {
    const TowerInt th = theta_at(k);
    c.mu = tpow((TowerInt(3) * tpow(a, TowerInt(2) * th) + TowerInt(2)) * c.mu, 3);
    c.lambda = TowerInt(3) * c.lambda + TowerInt(6) * th - TowerInt(4);
    c.theta = th;
  }
  return c;
}

/// d(h) = c + d, with c, d the tree constants at (h+1, h+1).
inline TowerInt sep_constant(const TowerInt& c31, const TowerInt& d31) { return c31 + d31; }

inline TowerInt sep_constant(int h) {
  auto tc = tree_constants(h + 1, h + 1);
  return sep_constant(tc.mu, tc.lambda);
}

/// (d + 2) * d'. d' is an external constant supplied by the caller.
inline TowerInt main_constant(const TowerInt& d, const TowerInt& d_prime) { return (d + TowerInt(2)) * d_prime; }

struct InequalityCheck {
  int r = 0;
  std::string lhs, rhs;  // tower notation
  std::strong_ordering order = std::strong_ordering::equal;
  bool holds = false;
};

struct InequalityReport {
  bool holds = true;
  std::vector<InequalityCheck> checks;
};

/// Both inequalities on alpha^sigma_r t^(sigma_r - 1) for 2 <= r <= r_max.
inline InequalityReport verify_sigma_inequalities(int alpha, int t, int s, int r_max,
                                                  const CompareOptions& opts = {}) {
  if (alpha < 2 || s < 2) throw InvalidInput("alpha and s must be at least 2");
  if (t < 1) throw InvalidInput("t must be positive");
  auto f = [&](const TowerInt& e) { return tpow(alpha, e) * tpow(t, e - TowerInt(1)); };
  InequalityReport rep;
  auto record = [&](int r, const TowerInt& lhs, const TowerInt& rhs) {
    InequalityCheck c{r, lhs.str(), rhs.str(), tower_compare(lhs, rhs, opts), false};
    c.holds = c.order == std::strong_ordering::greater;
    rep.holds = rep.holds && c.holds;
    rep.checks.push_back(std::move(c));
  };
  if (r_max >= 2) {
    const TowerInt zeta = (tpow(2 * s, 2 * s - 1) - TowerInt(1)) * TowerInt(s * s);
    record(2, f(sigma(s, 2)),
           f(TowerInt(s)) + tpow(alpha, zeta) * tpow(t, TowerInt(s * s - 1)));
  }
  for (int r = 2; r <= r_max; ++r) {
    const TowerInt prev = sigma(s, r - 1);
    record(r, f(sigma(s, r)), f(prev) + f(tpow(prev, 3)));
  }
  return rep;
}

/// Exact decimal if at most `cap` digits, else nullopt.
inline std::optional<std::string> decimal(const TowerInt& x, double cap = kExactDigits) {
  auto v = x.exact(cap);
  if (!v) return std::nullopt;
  return v->get_str();
}

/// Digit count estimate: a plain number, or 2^^k(v) for k-fold exponentials.
inline std::string digit_estimate(const TowerInt& x) {
  const Mag d = x.digits();
  std::ostringstream os;
  if (d.level == 0) {
    os.precision(d.v < 1e15 ? 15 : 3);
    if (d.v < 1e15) {
      os << static_cast<long long>(d.v);
    } else {
      os << "~" << d.v;
    }
  } else {
    os.precision(4);
    os << "2^^" << d.level << "(" << d.v << ")";
  }
  return os.str();
}

}  // namespace thetakit
