#include "capdist/tripoly.hpp"

#include <algorithm>
#include <sstream>

namespace capdist {

std::string to_string(const BigInt& value) { return value.get_str(10); }

Exponents operator+(const Exponents& a, const Exponents& b) {
  return {a.y + b.y, a.p + b.p, a.q + b.q};
}

TriPoly::TriPoly(long constant) {
  if (constant != 0) terms_.emplace(Exponents{}, BigInt(constant));
}

TriPoly::TriPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

TriPoly TriPoly::monomial(const BigInt& coef, Exponents e) {
  TriPoly out;
  out.add_term(e, coef);
  return out;
}

BigInt TriPoly::coeff(Exponents e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool TriPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

std::uint32_t TriPoly::degree_y() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.y);
  return d;
}

std::uint32_t TriPoly::degree_p() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.p);
  return d;
}

std::uint32_t TriPoly::degree_q() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.q);
  return d;
}

void TriPoly::add_term(Exponents e, const BigInt& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

TriPoly& TriPoly::operator+=(const TriPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

TriPoly& TriPoly::operator*=(const TriPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  BigInt prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(ea + eb, prod);
    }
  }
  return out;
}

TriPoly operator-(const TriPoly& a) {
  TriPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

TriPoly poly_add(const TriPoly& a, const TriPoly& b) { return a + b; }
TriPoly poly_mul(const TriPoly& a, const TriPoly& b) { return a * b; }
TriPoly poly_neg(const TriPoly& a) { return -a; }

namespace {

BigInt int_pow(long base, std::uint32_t exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
  if (base < 0 && exp % 2 == 1) out = -out;
  return out;
}

}  // namespace

BigInt poly_eval_int(const TriPoly& a, long y0, long p0, long q0) {
  BigInt sum = 0;
  for (const auto& [e, c] : a.terms()) {
    sum += c * int_pow(y0, e.y) * int_pow(p0, e.p) * int_pow(q0, e.q);
  }
  return sum;
}

TriPoly specialize(const TriPoly& a, std::optional<long> y0, std::optional<long> p0,
                   std::optional<long> q0) {
  TriPoly out;
  for (const auto& [e, c] : a.terms()) {
    BigInt coef = c;
    Exponents rest = e;
    if (y0) {
      coef *= int_pow(*y0, e.y);
      rest.y = 0;
    }
    if (p0) {
      coef *= int_pow(*p0, e.p);
      rest.p = 0;
    }
    if (q0) {
      coef *= int_pow(*q0, e.q);
      rest.q = 0;
    }
    out.add_term(rest, coef);
  }
  return out;
}

TriPoly poly_dy(const TriPoly& a) {
  TriPoly out;
  for (const auto& [e, c] : a.terms()) {
    if (e.y == 0) continue;
    out.add_term({e.y - 1, e.p, e.q}, c * e.y);
  }
  return out;
}

namespace {

void append_var(std::ostringstream& os, char name, std::uint32_t power) {
  if (power == 0) return;
  os << name;
  if (power > 1) os << '^' << power;
}

}  // namespace

std::string to_text(const TriPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e.total_degree() == 0) os << mag.get_str();
    append_var(os, 'y', e.y);
    append_var(os, 'p', e.p);
    append_var(os, 'q', e.q);
  }
  return os.str();
}

nlohmann::ordered_json to_json(const TriPoly& a) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : a.terms()) {
    terms.push_back({{"y", e.y}, {"p", e.p}, {"q", e.q}, {"coef", c.get_str()}});
  }
  return {{"terms", terms}};
}

}  // namespace capdist
