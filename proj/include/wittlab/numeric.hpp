#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace wittlab {

// Exact arithmetic backbone: arbitrary-precision integers and rationals.
// All public APIs in this library speak Int/Rat; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Default relative precision (digits base p) for p-adic computations.
inline constexpr int kDefaultPrecision = 64;

// Nonnegative remainder of a mod m, m > 0.
Int mod_floor(const Int& a, const Int& m);

// base^e for small nonnegative exponents.
Int pow_int(const Int& base, unsigned long e);

// base^exp mod m, exp >= 0, m > 1.
Int pow_mod(const Int& base, const Int& exp, const Int& m);

// Multiplicative inverse of a mod m, if gcd(a, m) = 1.
std::optional<Int> inv_mod(const Int& a, const Int& m);

// p-adic valuation v_p(n); requires n != 0, p >= 2.
long valuation(const Int& n, const Int& p);
long valuation(const Rat& x, const Int& p);

// n / p^{v_p(n)}.
Int unit_part(const Int& n, const Int& p);

// Deterministic for the magnitudes this library handles.
bool is_prime(const Int& n);

// Jacobi symbol (a/n) for odd n >= 1.
int jacobi_symbol(const Int& a, const Int& n);

// num*den of the reduced fraction: an integer in the same square class as x.
// Square-class-level computations (Hilbert symbols, discriminants) only ever
// look at valuations and unit residues, which this representative preserves.
Int square_class_integer(const Rat& x);

// True iff every prime factor of den (den >= 1) lies in `primes`.
bool denominator_supported_on(const Int& den, const std::vector<Int>& primes);

// Ascending primes in [2, bound].
std::vector<Int> primes_up_to(const Int& bound);

}  // namespace wittlab
