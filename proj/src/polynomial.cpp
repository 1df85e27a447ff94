#include "unknot/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unknot {

LaurentPolynomial::LaurentPolynomial(char variable, int denominator)
    : variable_(variable), denominator_(denominator) {
  if (denominator != 1 && denominator != 2 && denominator != 4)
    throw std::invalid_argument("unsupported exponent denominator");
}

LaurentPolynomial LaurentPolynomial::constant(const BigInt& c, char variable) {
  return monomial(c, 0, variable, 1);
}

LaurentPolynomial LaurentPolynomial::monomial(const BigInt& c, int exponent, char variable,
                                              int denominator) {
  LaurentPolynomial p(variable, denominator);
  p.add_term(exponent, c);
  return p;
}

bool LaurentPolynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  return terms_.rbegin()->first;
}

BigInt LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPolynomial::add_term(int exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

// Brings two polynomials to a common denominator.
std::pair<LaurentPolynomial, LaurentPolynomial> align(const LaurentPolynomial& a,
                                                      const LaurentPolynomial& b) {
  if (a.denominator() == b.denominator()) return {a, b};
  int d = std::lcm(a.denominator(), b.denominator());
  auto lift = [d](const LaurentPolynomial& p) {
    LaurentPolynomial out(p.variable(), d);
    int f = d / p.denominator();
    for (const auto& [e, c] : p.terms()) out.add_term(e * f, c);
    return out;
  };
  return {lift(a), lift(b)};
}

}  // namespace

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  auto [a, b] = align(*this, o);
  for (const auto& [e, c] : b.terms_) a.add_term(e, c);
  return a;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  *this = *this + o;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  auto [a, b] = align(*this, o);
  LaurentPolynomial out(a.variable_, a.denominator_);
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
  auto a = reduced();
  auto b = o.reduced();
  return a.denominator_ == b.denominator_ && a.terms_ == b.terms_;
}

LaurentPolynomial LaurentPolynomial::substitute_power(int factor) const {
  LaurentPolynomial out(variable_, denominator_);
  for (const auto& [e, c] : terms_) out.add_term(e * factor, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int shift) const {
  LaurentPolynomial out(variable_, denominator_);
  for (const auto& [e, c] : terms_) out.add_term(e + shift * denominator_, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::reduced() const {
  int g = denominator_;
  for (const auto& [e, c] : terms_) g = std::gcd(g, e);
  if (g <= 1) return *this;
  LaurentPolynomial out(variable_, denominator_ / g);
  for (const auto& [e, c] : terms_) out.add_term(e / g, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::divided_by(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  auto [num, den] = align(*this, divisor);
  LaurentPolynomial quotient(num.variable_, num.denominator_);
  const int lead_e = den.max_exponent();
  const BigInt lead_c = den.terms_.rbegin()->second;
  while (!num.is_zero()) {
    int e = num.max_exponent();
    BigInt c = num.terms_.rbegin()->second;
    if (e - num.min_exponent() < lead_e - den.min_exponent() || c % lead_c != 0)
      throw std::domain_error("polynomial division is not exact");
    BigInt q = c / lead_c;
    quotient.add_term(e - lead_e, q);
    for (const auto& [de, dc] : den.terms_) num.add_term(de + e - lead_e, -q * dc);
  }
  return quotient;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
  if (denominator_ != 1) throw std::domain_error("derivative needs integer exponents");
  LaurentPolynomial out(variable_, 1);
  for (const auto& [e, c] : terms_) out.add_term(e - 1, c * e);
  return out;
}

BigInt LaurentPolynomial::evaluate_at_minus_one() const {
  if (denominator_ != 1) throw std::domain_error("evaluation at -1 needs integer exponents");
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += (e % 2 == 0) ? c : BigInt(-c);
  return s;
}

BigInt LaurentPolynomial::evaluate_at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::complex<double> LaurentPolynomial::evaluate(std::complex<double> x) const {
  std::complex<double> s = 0.0;
  for (const auto& [e, c] : terms_) {
    double coeff = c.convert_to<double>();
    std::complex<double> power =
        denominator_ == 1 ? std::pow(x, e) : std::pow(x, double(e) / denominator_);
    s += coeff * power;
  }
  return s;
}

std::int64_t LaurentPolynomial::sum_abs_coefficients() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += abs(c);
  if (s > BigInt(INT64_MAX)) return INT64_MAX;
  return s.convert_to<std::int64_t>();
}

namespace {

std::string exponent_text(int e, int denominator) {
  if (denominator == 1 || e % denominator == 0) return std::to_string(e / denominator);
  int g = std::gcd(e, denominator);
  return std::to_string(e / g) + "/" + std::to_string(denominator / g);
}

}  // namespace

std::string LaurentPolynomial::to_json() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << ',';
    first = false;
    out << '"' << exponent_text(e, denominator_) << "\":" << c;
  }
  out << '}';
  return out.str();
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << variable_;
    if (e != denominator_) out << '^' << exponent_text(e, denominator_);
  }
  return out.str();
}

}  // namespace unknot
