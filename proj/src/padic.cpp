#include "wittlab/padic.hpp"

#include <algorithm>

namespace wittlab {

Place Place::parse(const std::string& text) {
  if (text == "real" || text == "R" || text == "inf" || text == "oo") return Place::real();
  try {
    Int p(text, 10);
    return Place::prime(p);
  } catch (const std::invalid_argument&) {
    throw ValidationError("cannot parse place '" + text + "'");
  }
}

}  // namespace wittlab

namespace wittlab::padic {

PAdicScalar::PAdicScalar(const Int& prime, long valuation, const Int& unit, int precision)
    : prime_(prime), valuation_(valuation), precision_(precision) {
  if (prime < 2 || !is_prime(prime)) {
    throw ValidationError("PAdicScalar needs a prime, got " + prime.get_str());
  }
  if (precision < 1) throw ValidationError("precision must be >= 1");
  unit_ = mod_floor(unit, modulus());
  if (mpz_divisible_p(unit_.get_mpz_t(), prime_.get_mpz_t())) {
    throw ValidationError("unit " + unit.get_str() + " is not invertible mod " +
                          prime.get_str() + "^" + std::to_string(precision));
  }
}

PAdicScalar PAdicScalar::from_rational(const Rat& x, const Int& prime, int precision) {
  if (x == 0) throw ValidationError("zero has no p-adic unit decomposition");
  if (precision < 1) throw ValidationError("precision must be >= 1");
  Int num(x.get_num()), den(x.get_den());
  long v = wittlab::valuation(num, prime) - wittlab::valuation(den, prime);
  Int unum = unit_part(num, prime);
  Int uden = unit_part(den, prime);
  Int m = pow_int(prime, static_cast<unsigned long>(precision));
  Int u = mod_floor(unum * inv_mod(uden, m).value(), m);
  return PAdicScalar(prime, v, u, precision);
}

PAdicScalar PAdicScalar::times(const PAdicScalar& other) const {
  if (prime_ != other.prime_) throw ValidationError("mixed primes in p-adic product");
  int n = std::min(precision_, other.precision_);
  Int m = pow_int(prime_, static_cast<unsigned long>(n));
  return PAdicScalar(prime_, valuation_ + other.valuation_, mod_floor(unit_ * other.unit_, m), n);
}

PAdicScalar PAdicScalar::square() const { return times(*this); }

bool PAdicScalar::congruent(const PAdicScalar& other) const {
  if (prime_ != other.prime_ || valuation_ != other.valuation_) return false;
  int n = std::min(precision_, other.precision_);
  Int m = pow_int(prime_, static_cast<unsigned long>(n));
  return mod_floor(unit_, m) == mod_floor(other.unit_, m);
}

bool PAdicScalar::squares_to(const Rat& x) const {
  return square().congruent(from_rational(x, prime_, precision_));
}

std::string PAdicScalar::str() const {
  std::string s;
  if (valuation_ != 0) {
    s += prime_.get_str() + "^" + std::to_string(valuation_) + " * ";
  }
  s += unit_.get_str() + " + O(" + prime_.get_str() + "^" +
       std::to_string(valuation_ + precision_) + ")";
  return s;
}

int legendre(const Int& a, const Int& p) {
  if (p == 2 || !is_prime(p)) {
    throw ValidationError("Legendre symbol needs an odd prime, got " + p.get_str());
  }
  if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) return 0;
  return jacobi_symbol(a, p);
}

Int least_positive_nonresidue(const Int& p) {
  for (Int u = 2; u < p; ++u) {
    if (legendre(u, p) == -1) return u;
  }
  throw std::logic_error("no non-residue below " + p.get_str());
}

bool is_square_local(const Rat& x, const Place& place) {
  if (x == 0) throw ValidationError("zero is not a valid square-class input");
  if (place.is_real()) return x > 0;
  const Int& p = place.prime_value();
  Int rep = square_class_integer(x);
  long v = valuation(rep, p);
  if (v % 2 != 0) return false;
  Int u = unit_part(rep, p);
  if (p == 2) return mod_floor(u, 8) == 1;
  return legendre(u, p) == 1;
}

SquareClass square_class(const Rat& x, const Place& place) {
  if (x == 0) throw ValidationError("zero is not a valid square-class input");
  if (place.is_real()) {
    return SquareClass{place, x > 0 ? Int(1) : Int(-1)};
  }
  const Int& p = place.prime_value();
  Int rep = square_class_integer(x);
  long v = valuation(rep, p) % 2;
  Int u = unit_part(rep, p);
  Int unit_rep;
  if (p == 2) {
    // mod 8: 1 -> 1, 3 -> -5, 5 -> 5, 7 -> -1
    switch (mod_floor(u, 8).get_ui()) {
      case 1: unit_rep = 1; break;
      case 3: unit_rep = -5; break;
      case 5: unit_rep = 5; break;
      default: unit_rep = -1; break;
    }
  } else {
    unit_rep = legendre(u, p) == 1 ? Int(1) : least_positive_nonresidue(p);
  }
  return SquareClass{place, v == 0 ? unit_rep : unit_rep * p};
}

namespace {

// Square root of a mod odd prime p by Tonelli-Shanks; requires (a/p) = 1.
Int sqrt_mod_prime(const Int& a0, const Int& p) {
  Int a = mod_floor(a0, p);
  if (a == 0) return 0;
  if (mod_floor(p, 4) == 3) return pow_mod(a, (p + 1) / 4, p);
  // p = 1 mod 4: write p - 1 = q * 2^s with q odd.
  Int q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q >>= 1;
    ++s;
  }
  Int z = least_positive_nonresidue(p);
  Int c = pow_mod(z, q, p);
  Int t = pow_mod(a, q, p);
  Int r = pow_mod(a, (q + 1) / 2, p);
  unsigned long m = s;
  while (t != 1) {
    Int t2 = t;
    unsigned long i = 0;
    while (t2 != 1) {
      t2 = mod_floor(t2 * t2, p);
      ++i;
    }
    Int b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod_floor(b * b, p);
    m = i;
    c = mod_floor(b * b, p);
    t = mod_floor(t * c, p);
    r = mod_floor(r * b, p);
  }
  return r;
}

}  // namespace

PAdicScalar hensel_sqrt(const Rat& x, const Int& prime, int precision) {
  if (x == 0) throw ValidationError("square root of zero is not represented");
  Place place = Place::prime(prime);
  Int rep = square_class_integer(x);
  long v = valuation(rep, prime);
  Int u = unit_part(rep, prime);
  if (v % 2 != 0) {
    throw NotASquareError(x.get_str() + " is not a square in Q_" + prime.get_str(),
                          "valuation " + std::to_string(v) + " is odd");
  }
  if (prime == 2) {
    if (mod_floor(u, 8) != 1) {
      throw NotASquareError(x.get_str() + " is not a square in Q_2",
                            "unit part is " + mod_floor(u, 8).get_str() + " mod 8, need 1");
    }
  } else if (legendre(u, prime) != 1) {
    throw NotASquareError(x.get_str() + " is not a square in Q_" + prime.get_str(),
                          "legendre(unit, p) = -1 for unit " + mod_floor(u, prime).get_str());
  }

  // Work with the unit part of x itself (rep differs from x by a square).
  PAdicScalar ux = PAdicScalar::from_rational(x, prime, precision);
  Int target = ux.unit();
  Int m = pow_int(prime, static_cast<unsigned long>(precision));
  Int root;
  if (prime == 2) {
    // Seed 1 mod 8; at each bit exactly one of r, r + 2^{k-1} squares to
    // the target mod 2^{k+1}.  Corrections are multiples of 4.
    root = 1;
    for (int k = 3; k < precision; ++k) {
      Int mk1 = Int(1) << (k + 1);
      if (mod_floor(root * root - target, mk1) != 0) {
        root += Int(1) << (k - 1);
      }
    }
    root = mod_floor(root, m);
  } else {
    Int r0 = sqrt_mod_prime(mod_floor(target, prime), prime);
    Int r1 = prime - r0;
    Int seed = r0 < r1 ? r0 : r1;
    root = seed;
    int have = 1;
    while (have < precision) {
      int next = std::min(2 * have, precision);
      Int mk = pow_int(prime, static_cast<unsigned long>(next));
      Int inv2r = inv_mod(mod_floor(2 * root, mk), mk).value();
      root = mod_floor(root - (root * root - target) * inv2r, mk);
      have = next;
    }
  }
  return PAdicScalar(prime, v / 2, root, precision);
}

std::vector<ProgressionPrime> primes_in_progression(int count, const Int& min) {
  if (count < 1) throw ValidationError("count must be >= 1");
  constexpr long kScanBound = 10'000'000;
  std::vector<ProgressionPrime> out;
  // First candidate >= min congruent to 17 mod 24.
  Int c = min + mod_floor(17 - min, 24);
  for (long scanned = 0; static_cast<int>(out.size()) < count; c += 24, ++scanned) {
    if (scanned >= kScanBound) {
      throw SearchBoundExceeded("no " + std::to_string(count) + " progression primes >= " +
                                min.get_str() + " within 10^7 candidates");
    }
    if (!is_prime(c)) continue;
    ProgressionPrime p;
    p.value = c;
    p.congruent_1_mod_8 = mod_floor(c, 8) == 1;
    p.congruent_2_mod_3 = mod_floor(c, 3) == 2;
    p.at_least_89 = c >= 89;
    out.push_back(p);
  }
  return out;
}

bool verify_progression_congruences(const Int& p) {
  return mod_floor(p, 8) == 1 && mod_floor(p, 3) == 2;
}

}  // namespace wittlab::padic
