#include "tjurina/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace tjurina {

namespace {

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return canonical_order().cmp(a, b) < 0;
  }
};

using TermMap = std::map<Monomial, Coeff, CanonicalLess>;

}  // namespace

Polynomial make_from_map(FieldSpec f, std::vector<Term>&& terms) {
  Polynomial p(f);
  p.terms_ = std::move(terms);
  return p;
}

static Polynomial from_map(FieldSpec f, const TermMap& m) {
  std::vector<Term> v;
  v.reserve(m.size());
  for (auto it = m.rbegin(); it != m.rend(); ++it)
    if (it->second != 0) v.push_back({it->first, it->second});
  return make_from_map(f, std::move(v));
}

Polynomial polynomial_from_terms(FieldSpec f, std::vector<Term> terms) {
  TermMap acc;
  for (Term& t : terms) {
    auto [it, fresh] = acc.try_emplace(t.mono, f.zero());
    it->second = f.add(it->second, t.coeff);
  }
  return from_map(f, acc);
}

Polynomial Polynomial::constant(FieldSpec f, const Coeff& c) {
  Polynomial p(f);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(FieldSpec f, int var) {
  return monomial(f, Monomial::var(var), f.one());
}

Polynomial Polynomial::monomial(FieldSpec f, const Monomial& m, const Coeff& c) {
  Polynomial p(f);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.e[var]));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_[0].mono.degree();
  for (const Term& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

bool Polynomial::uses_var(int var) const {
  for (const Term& t : terms_)
    if (t.mono.e[var] > 0) return true;
  return false;
}

int Polynomial::var_span() const {
  int n = 0;
  for (const Term& t : terms_)
    for (int v = 0; v < kMaxVars; ++v)
      if (t.mono.e[v] > 0) n = std::max(n, v + 1);
  return n;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.mono == m) return t.coeff;
  return Coeff(0);
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) fail(Errc::Internal, "leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (const Term& t : terms_)
    if (order.greater(t.mono, best->mono)) best = &t;
  return *best;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (field_ != o.field_) fail(Errc::FieldMismatch, "field mismatch in +");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  const TermOrder& ord = canonical_order();
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Coeff s = field_.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) out.push_back({terms_[i].mono, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return make_from_map(field_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back({t.mono, field_.neg(t.coeff)});
  return make_from_map(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (field_ != o.field_) fail(Errc::FieldMismatch, "field mismatch in *");
  TermMap acc;
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      auto [it, fresh] = acc.try_emplace(m, field_.zero());
      it->second = field_.add(it->second, field_.mul(a.coeff, b.coeff));
    }
  return from_map(field_, acc);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (field_ != o.field_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  if (c == 0) return Polynomial(field_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Coeff v = field_.mul(t.coeff, c);
    if (v != 0) out.push_back({t.mono, v});
  }
  return make_from_map(field_, std::move(out));
}

Polynomial Polynomial::term_multiple(const Monomial& m, const Coeff& c) const {
  if (c == 0) return Polynomial(field_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Coeff v = field_.mul(t.coeff, c);
    if (v != 0) out.push_back({t.mono * m, v});
  }
  return make_from_map(field_, std::move(out));
}

Polynomial Polynomial::differentiate(int var) const {
  if (var < 0 || var >= kMaxVars) fail(Errc::UnknownVariable, "unknown variable in differentiate");
  TermMap acc;
  for (const Term& t : terms_) {
    if (t.mono.e[var] == 0) continue;
    Coeff k = field_.from_long(t.mono.e[var]);
    Coeff c = field_.mul(t.coeff, k);
    if (c == 0) continue;  // characteristic kills the exponent
    Monomial m = t.mono;
    m.e[var] -= 1;
    acc[m] = field_.add(acc.count(m) ? acc[m] : field_.zero(), c);
  }
  return from_map(field_, acc);
}

Polynomial Polynomial::homogenize(int var, int deg) const {
  if (deg < degree()) fail(Errc::DegreeTooSmall, "homogenization degree below polynomial degree");
  std::vector<Term> raw;
  for (const Term& t : terms_) {
    if (t.mono.e[var] != 0) fail(Errc::UnknownVariable, "homogenization variable already present");
    Monomial m = t.mono;
    m.e[var] = static_cast<uint16_t>(deg - t.mono.degree());
    raw.push_back({m, t.coeff});
  }
  TermMap acc;
  for (auto& t : raw) acc[t.mono] = t.coeff;
  return from_map(field_, acc);
}

Polynomial Polynomial::dehomogenize(int var) const {
  TermMap acc;
  for (const Term& t : terms_) {
    Monomial m = t.mono;
    m.e[var] = 0;
    auto [it, fresh] = acc.try_emplace(m, field_.zero());
    it->second = field_.add(it->second, t.coeff);
  }
  return from_map(field_, acc);
}

Polynomial pow(const Polynomial& p, int k) {
  Polynomial r = Polynomial::constant(p.field(), p.field().one());
  Polynomial base = p;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Polynomial Polynomial::substitute(const std::array<Polynomial, kMaxVars>& images) const {
  Polynomial out(field_);
  for (const Term& t : terms_) {
    Polynomial prod = Polynomial::constant(field_, t.coeff);
    for (int v = 0; v < kMaxVars; ++v)
      if (t.mono.e[v] > 0) prod = prod * pow(images[v], t.mono.e[v]);
    out = out + prod;
  }
  return out;
}

Coeff Polynomial::evaluate(const std::array<Coeff, kMaxVars>& point) const {
  Coeff out = field_.zero();
  for (const Term& t : terms_) {
    Coeff v = t.coeff;
    for (int var = 0; var < kMaxVars; ++var)
      for (int k = 0; k < t.mono.e[var]; ++k) v = field_.mul(v, point[var]);
    out = field_.add(out, v);
  }
  return out;
}

Coeff Polynomial::content() const {
  if (terms_.empty()) return Coeff(0);
  if (field_.kind() == FieldKind::PrimeField) return leading_term(canonical_order()).coeff;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Term& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  Coeff c(num_gcd, den_lcm);
  c.canonicalize();
  if (leading_term(canonical_order()).coeff < 0) c = -c;
  return c;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(content()));
}

Polynomial Polynomial::monic(const TermOrder& order) const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(leading_term(order).coeff));
}

bool Polynomial::canonical_less(const Polynomial& a, const Polynomial& b) {
  const TermOrder& ord = canonical_order();
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = ord.cmp(a.terms_[i].mono, b.terms_[i].mono);
    if (c != 0) return c < 0;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
  }
  return a.terms_.size() < b.terms_.size();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Coeff c = t.coeff;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Coeff a = neg ? Coeff(-c) : c;
    bool mono_one = t.mono.is_one();
    if (a != 1 || mono_one) {
      os << a.get_str();
      if (!mono_one) os << "*";
    }
    bool started = false;
    for (int v = 0; v < kMaxVars; ++v) {
      if (t.mono.e[v] == 0) continue;
      if (started) os << "*";
      os << kVarNames[v];
      if (t.mono.e[v] > 1) os << "^" << t.mono.e[v];
      started = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Exact division and gcd.

std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) return std::nullopt;
  const TermOrder& ord = canonical_order();
  const FieldSpec& f = p.field();
  Polynomial rem = p;
  Polynomial quo(f);
  const Term& qlt = q.leading_term(ord);
  while (!rem.is_zero()) {
    const Term& rlt = rem.leading_term(ord);
    if (!qlt.mono.divides(rlt.mono)) return std::nullopt;
    Monomial m = rlt.mono / qlt.mono;
    Coeff c = f.div(rlt.coeff, qlt.coeff);
    quo = quo + Polynomial::monomial(f, m, c);
    rem = rem - q.term_multiple(m, c);
  }
  return quo;
}

namespace {

// Univariate view of p in variable v with polynomial coefficients.
std::vector<Polynomial> var_coefficients(const Polynomial& p, int v) {
  int d = p.degree_in(v);
  std::vector<Polynomial> out(static_cast<size_t>(d + 1), Polynomial::zero(p.field()));
  for (const Term& t : p.terms()) {
    Monomial m = t.mono;
    int k = m.e[v];
    m.e[v] = 0;
    out[k] = out[k] + Polynomial::monomial(p.field(), m, t.coeff);
  }
  return out;
}

Polynomial lead_coeff_in(const Polynomial& p, int v) {
  return var_coefficients(p, v).back();
}

// Pseudo-remainder of a by b in variable v: lc_v(b)^(da-db+1) * a mod b.
Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, int v) {
  const FieldSpec& f = a.field();
  Polynomial lb = lead_coeff_in(b, v);
  int db = b.degree_in(v);
  Polynomial r = a;
  int e = a.degree_in(v) - db + 1;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    Polynomial lr = lead_coeff_in(r, v);
    int shift = r.degree_in(v) - db;
    Polynomial t = Polynomial::monomial(f, Monomial::var(v, shift), f.one());
    r = r * lb - b * t * lr;
    --e;
  }
  for (; e > 0; --e) r = r * lb;
  return r;
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

// Content of p viewed in R[v]: gcd of the coefficient polynomials.
Polynomial content_in(const Polynomial& p, int v) {
  Polynomial c = Polynomial::zero(p.field());
  for (const Polynomial& q : var_coefficients(p, v)) {
    if (q.is_zero()) continue;
    c = gcd_impl(c, q);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  const FieldSpec& f = a.field();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(f, f.one());

  int v = std::max(a.var_span(), b.var_span()) - 1;
  while (v > 0 && !a.uses_var(v) && !b.uses_var(v)) --v;

  Polynomial ca = content_in(a, v), cb = content_in(b, v);
  Polynomial pa = *try_divide(a, ca), pb = *try_divide(b, cb);
  Polynomial cont = gcd_impl(ca, cb);

  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  Polynomial g = Polynomial::constant(f, f.one());
  Polynomial h = g;
  for (;;) {
    int delta = pa.degree_in(v) - pb.degree_in(v);
    Polynomial r = pseudo_rem(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = Polynomial::constant(f, f.one());
      break;
    }
    Polynomial divisor = g * pow(h, delta);
    pa = pb;
    pb = *try_divide(r, divisor);
    g = lead_coeff_in(pa, v);
    if (delta >= 1) {
      // h = g^delta / h^(delta-1), an exact division
      h = *try_divide(pow(g, delta), pow(h, delta - 1));
    }
  }
  Polynomial pp = pb.is_constant() ? Polynomial::constant(f, f.one())
                                   : *try_divide(pb, content_in(pb, v));
  return cont * pp;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) fail(Errc::FieldMismatch, "field mismatch in gcd");
  Polynomial g = gcd_impl(a, b);
  if (g.is_zero()) return g;
  return g.monic(canonical_order());
}

// ---------------------------------------------------------------------------
// Parser.

namespace {

class Parser {
 public:
  Parser(const std::string& text, FieldSpec field) : s_(text), f_(field) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) err("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void err(const std::string& what) {
    fail(Errc::ParseError, "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial expr() {
    bool neg = false;
    char c = peek();
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++pos_;
    }
    Polynomial p = term();
    if (neg) p = -p;
    for (;;) {
      c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        Polynomial q = term();
        p = c == '+' ? p + q : p - q;
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (peek() == '*') {
      ++pos_;
      p = p * factor();
    }
    return p;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start) err("exponent expected");
      int e = std::stoi(s_.substr(start, pos_ - start));
      return pow(b, e);
    }
    return b;
  }

  Polynomial base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') err("')' expected");
      ++pos_;
      return p;
    }
    if (c == '-') {  // unary minus binds a single factor
      ++pos_;
      return -factor();
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return Polynomial::variable(f_, c == 'x' ? 0 : c == 'y' ? 1 : 2);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string lit = s_.substr(start, pos_ - start);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == dstart) err("denominator expected");
        lit += "/" + s_.substr(dstart, pos_ - dstart);
      }
      return Polynomial::constant(f_, f_.from_string(lit));
    }
    err("term expected");
  }

  const std::string& s_;
  FieldSpec f_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, FieldSpec field) {
  return Parser(text, field).run();
}

}  // namespace tjurina
