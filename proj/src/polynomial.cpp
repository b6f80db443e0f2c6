#include "meanconvex/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

namespace meanconvex {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) { trim(); }

void Monomial::trim() {
  while (!exponents_.empty() && exponents_.back() == 0) exponents_.pop_back();
  degree_ = 0;
  for (unsigned e : exponents_) degree_ += e;
}

Monomial Monomial::generator(std::size_t index, unsigned power) {
  std::vector<unsigned> e(index + 1, 0u);
  e[index] = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<unsigned> e(std::max(span(), other.span()), 0u);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponent(i) + other.exponent(i);
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (span() > other.span()) return false;
  for (std::size_t i = 0; i < span(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  std::vector<unsigned> e = exponents_;
  for (std::size_t i = 0; i < divisor.span(); ++i) e[i] -= divisor.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::with_exponent(std::size_t index, unsigned power) const {
  std::vector<unsigned> e = exponents_;
  if (e.size() <= index) e.resize(index + 1, 0u);
  e[index] = power;
  return Monomial(std::move(e));
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const std::size_t n = std::max(a.span(), b.span());
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned ea = a.exponent(i);
    const unsigned eb = b.exponent(i);
    if (ea != eb) return ea > eb;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& constant) { add_term(Monomial(), constant); }

Polynomial::Polynomial(const Monomial& m, const Rational& coefficient) { add_term(m, coefficient); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0u : terms_.begin()->first.degree(); }

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& term : terms_) d = std::max(d, term.first.exponent(var));
  return d;
}

std::size_t Polynomial::span() const {
  std::size_t s = 0;
  for (const auto& term : terms_) s = std::max(s, term.first.span());
  return s;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& term : r.terms_) term.second = -term.second;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r = *this;
  r += other;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r = *this;
  r -= other;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0) return {};
  Polynomial r = *this;
  for (auto& term : r.terms_) term.second *= factor;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& coefficient) const {
  Polynomial r;
  if (coefficient == 0) return r;
  for (const auto& [mt, ct] : terms_) r.terms_.emplace_hint(r.terms_.end(), mt * m, ct * coefficient);
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> coefficients(degree_in(var) + 1);
  for (const auto& [m, c] : terms_) coefficients[m.exponent(var)].add_term(m.with_exponent(var, 0), c);
  return coefficients;
}

Polynomial Polynomial::from_coefficients(std::size_t var, std::span<const Polynomial> coefficients) {
  Polynomial r;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    for (const auto& [m, c] : coefficients[k].terms_) r.add_term(m.with_exponent(var, static_cast<unsigned>(k)), c);
  return r;
}

Polynomial Polynomial::partial_derivative(std::size_t var) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(var);
    if (e > 0) r.add_term(m.with_exponent(var, e - 1), c * e);
  }
  return r;
}

Rational Polynomial::make_integer_primitive() {
  if (terms_.empty()) return Rational(1);
  Integer denominators_lcm = 1;
  for (const auto& term : terms_) denominators_lcm = lcm(denominators_lcm, denominator(term.second));
  Integer numerators_gcd = 0;
  for (const auto& term : terms_) {
    numerators_gcd = gcd(numerators_gcd, Integer(abs(numerator(term.second)) * (denominators_lcm / denominator(term.second))));
  }
  Rational factor(denominators_lcm, numerators_gcd);
  if (leading_coefficient() < 0) factor = -factor;
  if (factor != 1)
    for (auto& term : terms_) term.second *= factor;
  return factor;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    std::string factors;
    for (std::size_t i = 0; i < m.span(); ++i) {
      const unsigned e = m.exponent(i);
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += 't' + std::to_string(i + 1);
      if (e > 1) factors += '^' + std::to_string(e);
    }
    if (factors.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.str() + '*' + factors;
    }
  }
  return out;
}

std::optional<Polynomial> divide_if_exact(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (divisor.is_constant()) return dividend.scaled(1 / divisor.constant_value());
  const Monomial& lead = divisor.leading_monomial();
  const Rational& lead_coefficient = divisor.leading_coefficient();
  Polynomial remainder = dividend;
  Polynomial quotient;
  while (!remainder.is_zero()) {
    const auto& [m, c] = *remainder.terms_.begin();
    if (!lead.divides(m)) return std::nullopt;
    const Monomial qm = m.quotient(lead);
    const Rational qc = c / lead_coefficient;
    quotient.add_term(qm, qc);
    for (const auto& [dm, dc] : divisor.terms_) remainder.add_term(dm * qm, -dc * qc);
  }
  return quotient;
}

Polynomial exact_divide(const Polynomial& dividend, const Polynomial& divisor) {
  auto q = divide_if_exact(dividend, divisor);
  if (!q) throw std::logic_error("exact_divide: divisor does not divide dividend");
  return std::move(*q);
}

namespace {

// ---------------------------------------------------------------------------
// Modular coprimality certificate.
//
// If G = gcd(a, b) has positive degree in t_v, then for any evaluation of the
// other generators (mod a prime) that keeps the leading coefficient of a in t_v
// nonzero, the image of G is a common factor of the images of a and b of the
// same positive degree. A constant univariate gcd mod p for every t_v therefore
// proves G is constant.

constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y) { return x * y % kPrime; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  base %= kPrime;
  while (e) {
    if (e & 1) r = mul_mod(r, base);
    base = mul_mod(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t x) { return pow_mod(x, kPrime - 2); }

// Residue of a rational, or nullopt when the denominator vanishes mod p.
std::optional<std::uint64_t> residue(const Rational& r) {
  const Integer p(kPrime);
  Integer n = numerator(r) % p;
  if (n < 0) n += p;
  const Integer d = denominator(r) % p;
  if (d == 0) return std::nullopt;
  return mul_mod(n.convert_to<std::uint64_t>(), inv_mod(d.convert_to<std::uint64_t>()));
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Image in F_p[t_var] after substituting `point` for the other generators.
std::optional<ModPoly> univariate_image(const Polynomial& poly, std::size_t var, const std::vector<std::uint64_t>& point) {
  ModPoly image(poly.degree_in(var) + 1, 0);
  for (const auto& [m, c] : poly.terms()) {
    auto value = residue(c);
    if (!value) return std::nullopt;
    std::uint64_t v = *value;
    for (std::size_t i = 0; i < m.span(); ++i)
      if (i != var && m.exponent(i) > 0) v = mul_mod(v, pow_mod(point[i], m.exponent(i)));
    auto& slot = image[m.exponent(var)];
    slot = (slot + v) % kPrime;
  }
  return image;
}

std::size_t gcd_degree_mod(ModPoly f, ModPoly g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    // f <- f mod g
    const std::uint64_t inv = inv_mod(g.back());
    while (f.size() >= g.size()) {
      const std::uint64_t factor = mul_mod(f.back(), inv);
      const std::size_t shift = f.size() - g.size();
      for (std::size_t j = 0; j < g.size(); ++j)
        f[j + shift] = (f[j + shift] + kPrime - mul_mod(factor, g[j])) % kPrime;
      trim(f);
      if (f.empty()) break;
    }
    std::swap(f, g);
  }
  return f.empty() ? 0 : f.size() - 1;
}

bool certainly_coprime(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.span(), b.span());
  std::uint64_t state = 0x9E3779B97F4A7C15ULL;
  for (std::size_t var = 0; var < n; ++var) {
    const unsigned da = a.degree_in(var);
    const unsigned db = b.degree_in(var);
    if (da == 0 || db == 0) continue;
    bool settled = false;
    for (int attempt = 0; attempt < 3 && !settled; ++attempt) {
      std::vector<std::uint64_t> point(n);
      for (auto& x : point) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        x = (state >> 33) % kPrime;
      }
      const auto ia = univariate_image(a, var, point);
      const auto ib = univariate_image(b, var, point);
      if (!ia || !ib) return false;
      if (ia->back() == 0 && ib->back() == 0) continue;
      if (gcd_degree_mod(*ia, *ib) > 0) return false;
      settled = true;
    }
    if (!settled) return false;
  }
  return true;
}

Polynomial normalized(Polynomial p) {
  p.make_integer_primitive();
  return p;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g;
  for (auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalized(std::move(c)) : gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial primitive_part_with(const Polynomial& p, const Polynomial& content) {
  Polynomial r = content.is_constant() ? p : exact_divide(p, content);
  r.make_integer_primitive();
  return r;
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  return primitive_part_with(p, content_in(p, var));
}

// Remainder of a by b as polynomials in `var`, up to a factor free of `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  std::vector<Polynomial> rem = a.coefficients_in(var);
  const std::vector<Polynomial> div = b.coefficients_in(var);
  const Polynomial& lead = div.back();
  const bool scalar_lead = lead.is_constant();
  const Rational inverse_lead = scalar_lead ? 1 / lead.constant_value() : Rational(0);
  auto trim = [&rem] {
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  };
  trim();
  while (rem.size() >= div.size()) {
    const std::size_t shift = rem.size() - div.size();
    if (scalar_lead) {
      const Polynomial factor = rem.back().scaled(inverse_lead);
      for (std::size_t j = 0; j + 1 < div.size(); ++j) rem[j + shift] -= factor * div[j];
    } else {
      const Polynomial factor = rem.back();
      for (std::size_t k = 0; k + 1 < rem.size(); ++k) rem[k] = rem[k] * lead;
      for (std::size_t j = 0; j + 1 < div.size(); ++j) rem[j + shift] -= factor * div[j];
    }
    rem.pop_back();
    trim();
  }
  return Polynomial::from_coefficients(var, rem);
}


// ---------------------------------------------------------------------------
// Heuristic gcd over Z: substitute a large integer xi for the last generator,
// take the gcd of the images recursively, and read the candidate back from its
// balanced xi-adic digits. A candidate whose primitive part divides both inputs
// is the gcd as long as xi > 2 min(|a|, |b|) + 1 (max-norms).

Integer integer_content(const Polynomial& p) {
  Integer g = 0;
  for (const auto& [m, c] : p.terms()) {
    g = boost::multiprecision::gcd(g, numerator(c));
    if (g == 1) break;
  }
  return g;
}

Integer max_norm(const Polynomial& p) {
  Integer n = 0;
  for (const auto& [m, c] : p.terms()) n = std::max<Integer>(n, abs(numerator(c)));
  return n;
}

Polynomial substitute(const Polynomial& p, std::size_t var, const Integer& xi) {
  Polynomial out;
  std::vector<Integer> powers{Integer(1)};
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m.exponent(var);
    while (powers.size() <= e) powers.push_back(powers.back() * xi);
    out += Polynomial(m.with_exponent(var, 0), c * powers[e]);
  }
  return out;
}

Polynomial reconstruct(Polynomial h, std::size_t var, const Integer& xi) {
  Polynomial out;
  const Integer half = xi / 2;
  for (unsigned power = 0; !h.is_zero(); ++power) {
    Polynomial digit;
    for (const auto& [m, c] : h.terms()) {
      Integer r = numerator(c) % xi;
      if (r < 0) r += xi;
      if (r > half) r -= xi;
      if (r != 0) digit += Polynomial(m, Rational(r));
    }
    h = (h - digit).scaled(Rational(1, xi));
    out += digit.times_monomial(Monomial::generator(var, power), 1);
  }
  return out;
}

// Integer polynomials in; the gcd including its integer content out.
std::optional<Polynomial> heuristic_gcd(const Polynomial& a, const Polynomial& b) {
  const std::size_t span = std::max(a.span(), b.span());
  const Integer ca = integer_content(a);
  const Integer cb = integer_content(b);
  const Integer content = boost::multiprecision::gcd(ca, cb);
  if (span == 0) return Polynomial(Rational(content));
  const Polynomial f = a.scaled(Rational(1, ca));
  const Polynomial g = b.scaled(Rational(1, cb));
  const std::size_t var = span - 1;

  const Integer nf = max_norm(f), ng = max_norm(g);
  Integer xi = 2 * std::min(nf, ng) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Polynomial fi = substitute(f, var, xi);
    const Polynomial gi = substitute(g, var, xi);
    if (!fi.is_zero() && !gi.is_zero()) {
      std::optional<Polynomial> hi = heuristic_gcd(fi, gi);
      if (!hi) hi = gcd(fi, gi).scaled(Rational(boost::multiprecision::gcd(integer_content(fi), integer_content(gi))));
      Polynomial h = reconstruct(*hi, var, xi);
      if (!h.is_zero()) {
        h = h.scaled(Rational(1, integer_content(h)));
        if (divide_if_exact(f, h) && divide_if_exact(g, h)) return h.scaled(Rational(content));
      }
    }
    xi = xi * 73794 * boost::multiprecision::sqrt(boost::multiprecision::sqrt(xi)) / 27011;
  }
  return std::nullopt;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return normalized(a);
  if (certainly_coprime(a, b)) return Polynomial(1);
  if (auto h = heuristic_gcd(normalized(a), normalized(b))) return normalized(std::move(*h));

  const std::size_t var = std::max(a.span(), b.span()) - 1;
  const Polynomial content_a = content_in(a, var);
  const Polynomial content_b = content_in(b, var);
  const Polynomial content = gcd(content_a, content_b);

  Polynomial first = primitive_part_with(a, content_a);
  Polynomial second = primitive_part_with(b, content_b);
  if (first.degree_in(var) < second.degree_in(var)) std::swap(first, second);
  if (second.degree_in(var) == 0) return content;

  // Primitive polynomial remainder sequence.
  while (true) {
    Polynomial r = pseudo_remainder(first, second, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) return content;
    first = std::move(second);
    second = primitive_part_in(r, var);
  }
  return normalized(content * second);
}

}  // namespace meanconvex
