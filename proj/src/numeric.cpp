#include "wittlab/numeric.hpp"

#include <stdexcept>

namespace wittlab {

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int pow_mod(const Int& base, const Int& exp, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<Int> inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

long valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero is undefined");
  Int r;
  unsigned long v = mpz_remove(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return static_cast<long>(v);
}

long valuation(const Rat& x, const Int& p) {
  return valuation(Int(x.get_num()), p) - valuation(Int(x.get_den()), p);
}

Int unit_part(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("unit part of zero is undefined");
  Int r;
  mpz_remove(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return r;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

int jacobi_symbol(const Int& a0, const Int& n0) {
  if (n0 < 1 || mpz_even_p(n0.get_mpz_t())) {
    throw std::invalid_argument("Jacobi symbol needs odd positive lower argument");
  }
  Int a = mod_floor(a0, n0);
  Int n = n0;
  int result = 1;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a >>= 1;
      unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) {
      result = -result;
    }
    a = mod_floor(a, n);
  }
  return n == 1 ? result : 0;
}

Int square_class_integer(const Rat& x) {
  if (x == 0) throw std::invalid_argument("zero has no square class");
  Rat y(x);
  y.canonicalize();
  return Int(y.get_num()) * Int(y.get_den());
}

bool denominator_supported_on(const Int& den, const std::vector<Int>& primes) {
  Int d = abs(den);
  for (const Int& p : primes) {
    if (p < 2) continue;
    Int r;
    mpz_remove(r.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    d = r;
  }
  return d == 1;
}

std::vector<Int> primes_up_to(const Int& bound) {
  std::vector<Int> out;
  for (Int c = 2; c <= bound; ++c) {
    if (is_prime(c)) out.push_back(c);
  }
  return out;
}

}  // namespace wittlab
