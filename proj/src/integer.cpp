#include "relhom/integer.hpp"

#include <stdexcept>

namespace relhom {

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

GcdResult extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer reduce(const Integer& a, const Integer& m) {
  if (m == 0) return a;
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  if (m == 1) return 0;
  auto [g, x, y] = extended_gcd(reduce(a, m), m);
  if (g != 1) throw std::invalid_argument("inverse_mod: not a unit");
  return reduce(x, m);
}

std::vector<PrimePower> factorize(const Integer& n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<PrimePower> out;
  Integer rest = n;
  for (Integer p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (rest % p == 0) {
      rest /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(std::move(pp));
  }
  if (rest > 1) out.push_back({rest, 1, rest});
  return out;
}

bool is_prime_power(const Integer& n) {
  return n >= 2 && factorize(n).size() == 1;
}

std::string to_string(const Integer& a) { return a.str(); }

Integer parse_integer(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad integer literal '" + text + "'");
  }
  return Integer(text);
}

}  // namespace relhom
