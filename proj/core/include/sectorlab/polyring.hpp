#pragma once

// Exact arithmetic over a prime field F_q, the polynomial ring F_q[t] and the
// rational function field F_q(t), together with the valuation at infinity.

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sectorlab::poly {

using Residue = std::uint32_t;

/// Largest admissible field characteristic (exclusive).
inline constexpr std::uint32_t kMaxModulus = 1u << 16;

/// Degree reported for the zero polynomial.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

bool is_prime(std::uint32_t q);

/// A validated prime modulus q < 2^16.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t modulus() const { return q_; }
  Residue reduce(std::int64_t v) const;
  Residue add(Residue a, Residue b) const { return a + b >= q_ ? a + b - q_ : a + b; }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + q_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : q_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((std::uint64_t{a} * b) % q_);
  }
  Residue inv(Residue a) const;
  Residue pow(Residue a, std::int64_t e) const;

  /// Nonzero residues 1..q-1.
  std::vector<Residue> units() const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

class FieldElement {
 public:
  FieldElement(PrimeField field, std::int64_t value)
      : field_(field), value_(field.reduce(value)) {}

  const PrimeField& field() const { return field_; }
  Residue value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return {field_, -static_cast<std::int64_t>(value_)}; }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  PrimeField field_;
  Residue value_;
};

/// Dense polynomial in t over F_q, lowest degree first, no trailing zeros.
class Polynomial {
 public:
  explicit Polynomial(PrimeField field) : field_(field) {}
  Polynomial(PrimeField field, std::vector<Residue> coeffs);
  Polynomial(PrimeField field, std::initializer_list<std::int64_t> coeffs);

  static Polynomial constant(PrimeField field, std::int64_t c);
  static Polynomial monomial(PrimeField field, std::int64_t c, int degree);
  static Polynomial t(PrimeField field) { return monomial(field, 1, 1); }

  const PrimeField& field() const { return field_; }
  const std::vector<Residue>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  int degree() const {
    return coeffs_.empty() ? kDegreeOfZero : static_cast<int>(coeffs_.size()) - 1;
  }
  Residue coeff(int k) const {
    return k >= 0 && static_cast<std::size_t>(k) < coeffs_.size() ? coeffs_[k] : 0;
  }
  Residue leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Residue evaluate(Residue x) const;

  Polynomial monic() const;
  Polynomial scaled(Residue c) const;
  /// Coefficient list reversed with respect to `width` (t^width * f(1/t)).
  std::vector<Residue> reversed(int width) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  friend auto operator<=>(const Polynomial& a, const Polynomial& b) {
    if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
    return a.coeffs_ <=> b.coeffs_;
  }

  std::string to_string() const;

 private:
  void trim();

  PrimeField field_;
  std::vector<Residue> coeffs_;
};

/// f = quotient * g + remainder with deg remainder < deg g.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g);
/// Monic gcd (zero if both inputs are zero).
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Parses "c0 + c1*t + c2*t^2" (terms in any order, '-' allowed).
Polynomial parse_polynomial(PrimeField field, std::string_view text);

/// Element of F_q(t): numerator / denominator, coprime, denominator monic.
class RationalFunction {
 public:
  explicit RationalFunction(PrimeField field);
  RationalFunction(const Polynomial& p);  // NOLINT: polynomials embed implicitly
  static RationalFunction constant(PrimeField field, std::int64_t c);

  const PrimeField& field() const { return num_.field(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction inverse() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  friend RationalFunction rat_normalize(const Polynomial& n, const Polynomial& d);
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

RationalFunction rat_normalize(const Polynomial& n, const Polynomial& d);

/// Parses "num/den", "(num)/(den)" or a bare polynomial.
RationalFunction parse_rational(PrimeField field, std::string_view text);

/// Valuation at infinity: deg(denominator) - deg(numerator). Uniformizer 1/t.
int omega_infty(const RationalFunction& f);

/// Membership in the valuation ring O = {f : omega_infty(f) >= 0}.
inline bool in_valuation_ring(const RationalFunction& f) {
  return f.is_zero() || omega_infty(f) >= 0;
}

}  // namespace sectorlab::poly

template <>
struct std::hash<sectorlab::poly::Polynomial> {
  std::size_t operator()(const sectorlab::poly::Polynomial& p) const noexcept {
    std::size_t h = p.coeffs().size();
    for (auto c : p.coeffs()) h = h * 1000003u ^ c;
    return h;
  }
};
