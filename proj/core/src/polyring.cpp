#include "sectorlab/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sectorlab::poly {

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q >= kMaxModulus || !is_prime(q))
    throw std::invalid_argument("field modulus must be a prime below 65536, got " +
                                std::to_string(q));
}

Residue PrimeField::reduce(std::int64_t v) const {
  auto r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<Residue>(r);
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  // Extended Euclid on (a, q).
  std::int64_t r0 = q_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    auto quot = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - quot * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - quot * s1);
  }
  return reduce(s0);
}

Residue PrimeField::pow(Residue a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Residue result = 1 % q_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::vector<Residue> PrimeField::units() const {
  std::vector<Residue> out(q_ - 1);
  for (std::uint32_t i = 1; i < q_; ++i) out[i - 1] = i;
  return out;
}

namespace {

void require_same(const PrimeField& a, const PrimeField& b) {
  if (a != b) throw std::invalid_argument("operands live over different prime fields");
}

}  // namespace

FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }

FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_.pow(value_, e)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a.field_, b.field_);
  return {a.field_, a.field_.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a.field_, b.field_);
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a.field_, b.field_);
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a * b.inverse();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(PrimeField field, std::vector<Residue> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= field_.modulus();
  trim();
}

Polynomial::Polynomial(PrimeField field, std::initializer_list<std::int64_t> coeffs)
    : field_(field) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(field_.reduce(c));
  trim();
}

Polynomial Polynomial::constant(PrimeField field, std::int64_t c) {
  return Polynomial(field, {c});
}

Polynomial Polynomial::monomial(PrimeField field, std::int64_t c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Residue> v(degree + 1, 0);
  v[degree] = field.reduce(c);
  return Polynomial(field, std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Residue Polynomial::evaluate(Residue x) const {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

Polynomial Polynomial::scaled(Residue c) const {
  std::vector<Residue> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.mul(coeffs_[i], c);
  return Polynomial(field_, std::move(v));
}

std::vector<Residue> Polynomial::reversed(int width) const {
  if (degree() > width) throw std::invalid_argument("reversal width below degree");
  std::vector<Residue> v(width + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[width - i] = coeffs_[i];
  return v;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same(a.field_, b.field_);
  std::vector<Residue> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = a.field_.add(i < a.coeffs_.size() ? a.coeffs_[i] : 0,
                        i < b.coeffs_.size() ? b.coeffs_[i] : 0);
  return Polynomial(a.field_, std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
  std::vector<Residue> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.neg(coeffs_[i]);
  return Polynomial(field_, std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  const auto& F = a.field_;
  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      acc[i + j] = (acc[i + j] + std::uint64_t{a.coeffs_[i]} * b.coeffs_[j]) % F.modulus();
  }
  std::vector<Residue> v(acc.begin(), acc.end());
  return Polynomial(F, std::move(v));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g) {
  require_same(f.field(), g.field());
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& F = f.field();
  if (f.degree() < g.degree()) return {Polynomial(F), f};
  std::vector<Residue> rem = f.coeffs();
  std::vector<Residue> quot(f.degree() - g.degree() + 1, 0);
  const Residue lead_inv = F.inv(g.leading());
  const int dg = g.degree();
  for (int k = f.degree(); k >= dg; --k) {
    Residue c = F.mul(rem[k], lead_inv);
    if (c == 0) continue;
    quot[k - dg] = c;
    for (int i = 0; i <= dg; ++i)
      rem[k - dg + i] = F.sub(rem[k - dg + i], F.mul(c, g.coeffs()[i]));
  }
  return {Polynomial(F, std::move(quot)), Polynomial(F, std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << coeffs_[k];
      continue;
    }
    if (coeffs_[k] != 1) os << coeffs_[k] << '*';
    os << 't';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

[[noreturn]] void parse_error(std::string_view text) {
  throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "'");
}

std::int64_t parse_int(const std::string& s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); }))
    parse_error(whole);
  return std::stoll(s);
}

}  // namespace

Polynomial parse_polynomial(PrimeField field, std::string_view text) {
  std::string s = strip(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) parse_error(text);
  Polynomial acc(field);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) parse_error(text);
    std::int64_t coeff = 1;
    int degree = 0;
    auto tpos = term.find('t');
    if (tpos == std::string::npos) {
      coeff = parse_int(term, text);
    } else {
      std::string head = term.substr(0, tpos);
      std::string tail = term.substr(tpos + 1);
      if (!head.empty()) {
        if (head.back() != '*') parse_error(text);
        coeff = parse_int(head.substr(0, head.size() - 1), text);
      }
      degree = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') parse_error(text);
        degree = static_cast<int>(parse_int(tail.substr(1), text));
      }
    }
    acc = acc + Polynomial::monomial(field, sign * coeff, degree);
    pos = end;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(PrimeField field)
    : num_(field), den_(Polynomial::constant(field, 1)) {}

RationalFunction::RationalFunction(const Polynomial& p)
    : num_(p), den_(Polynomial::constant(p.field(), 1)) {}

RationalFunction RationalFunction::constant(PrimeField field, std::int64_t c) {
  return RationalFunction(Polynomial::constant(field, c));
}

RationalFunction rat_normalize(const Polynomial& n, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
  const auto& F = d.field();
  if (n.is_zero()) return RationalFunction(n, Polynomial::constant(F, 1));
  auto g = poly_gcd(n, d);
  auto num = poly_divmod(n, g).first;
  auto den = poly_divmod(d, g).first;
  Residue lead_inv = F.inv(den.leading());
  return RationalFunction(num.scaled(lead_inv), den.scaled(lead_inv));
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero rational function");
  return rat_normalize(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return rat_normalize(a.num_ + b.num_, a.den_);
  return rat_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}
RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.field());
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
  return rat_normalize(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const Polynomial& p) {
    auto s = p.to_string();
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

RationalFunction parse_rational(PrimeField field, std::string_view text) {
  std::string s = strip(text);
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0) {
      if (slash != std::string::npos) parse_error(text);
      slash = i;
    }
  }
  if (slash == std::string::npos) return RationalFunction(parse_polynomial(field, s));
  return rat_normalize(parse_polynomial(field, s.substr(0, slash)),
                       parse_polynomial(field, s.substr(slash + 1)));
}

int omega_infty(const RationalFunction& f) {
  if (f.is_zero()) throw std::domain_error("valuation of zero is undefined");
  return f.denominator().degree() - f.numerator().degree();
}

}  // namespace sectorlab::poly
