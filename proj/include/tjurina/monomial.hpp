#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace tjurina {

// Variable universe. User-facing polynomials live in x, y, z (indices 0..2);
// slot 3 is an auxiliary variable reserved for internal elimination tricks
// (ideal intersection) and never appears in parsed or printed data.
inline constexpr int kMaxVars = 4;
inline constexpr char kVarNames[kMaxVars] = {'x', 'y', 'z', 't'};

struct Monomial {
  std::array<uint16_t, kMaxVars> e{};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }

  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] + m.e[i]);
    return r;
  }

  // Requires m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] - m.e[i]);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
  }

  static Monomial var(int i, int k = 1) {
    Monomial r;
    r.e[i] = static_cast<uint16_t>(k);
    return r;
  }

  bool operator==(const Monomial& m) const { return e == m.e; }
  bool operator!=(const Monomial& m) const { return e != m.e; }
};

// Term orders used by the Groebner engine.
//  - grevlex(n): graded reverse lexicographic on the first n variables,
//    priority x > y > z (> t);
//  - grevlex_last(n, v): grevlex with variable v demoted to least priority
//    (per-variable saturation);
//  - lex(priority): pure lexicographic by the given priority sequence
//    (elimination);
//  - elim_aux(n): auxiliary variable t dominates, grevlex on the rest
//    (intersection by the extra-variable trick).
class TermOrder {
 public:
  enum class Kind : uint8_t { Grevlex, Lex, ElimAux };

  static TermOrder grevlex(int nvars) { return TermOrder(Kind::Grevlex, default_perm(), nvars); }

  static TermOrder grevlex_last(int nvars, int last) {
    std::array<uint8_t, kMaxVars> p = default_perm();
    // move `last` to the end of the active block
    int w = 0;
    for (int i = 0; i < nvars; ++i)
      if (p[i] != last) p[w++] = p[i];
    p[nvars - 1] = static_cast<uint8_t>(last);
    return TermOrder(Kind::Grevlex, p, nvars);
  }

  static TermOrder lex(std::array<uint8_t, kMaxVars> priority, int nvars) {
    return TermOrder(Kind::Lex, priority, nvars);
  }

  static TermOrder elim_aux(int nvars) { return TermOrder(Kind::ElimAux, default_perm(), nvars); }

  // Strict "a comes before b" (a > b in the order) for descending storage.
  bool greater(const Monomial& a, const Monomial& b) const {
    return cmp(a, b) > 0;
  }

  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::ElimAux: {
        if (a.e[3] != b.e[3]) return a.e[3] < b.e[3] ? -1 : 1;
        return grevlex_cmp(a, b, 3);
      }
      case Kind::Lex: {
        for (int i = 0; i < nvars_; ++i) {
          int v = perm_[i];
          if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
        }
        return 0;
      }
      case Kind::Grevlex:
      default:
        return grevlex_cmp(a, b, nvars_);
    }
  }

  std::string key() const {
    std::string k = kind_ == Kind::Grevlex ? "g" : kind_ == Kind::Lex ? "l" : "e";
    for (int i = 0; i < nvars_; ++i) k += static_cast<char>('0' + perm_[i]);
    return k;
  }

  Kind kind() const { return kind_; }
  int nvars() const { return nvars_; }

 private:
  TermOrder(Kind k, std::array<uint8_t, kMaxVars> p, int n) : kind_(k), perm_(p), nvars_(n) {}

  static std::array<uint8_t, kMaxVars> default_perm() { return {0, 1, 2, 3}; }

  int grevlex_cmp(const Monomial& a, const Monomial& b, int n) const {
    int da = 0, db = 0;
    for (int i = 0; i < n; ++i) {
      da += a.e[perm_[i]];
      db += b.e[perm_[i]];
    }
    if (da != db) return da < db ? -1 : 1;
    // reverse scan: larger exponent in the least significant variable loses
    for (int i = n - 1; i >= 0; --i) {
      int v = perm_[i];
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
    }
    return 0;
  }

  Kind kind_;
  std::array<uint8_t, kMaxVars> perm_;
  int nvars_;
};

}  // namespace tjurina
