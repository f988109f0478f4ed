#pragma once

#include <string>
#include <vector>

#include "wittlab/errors.hpp"
#include "wittlab/numeric.hpp"
#include "wittlab/place.hpp"

namespace wittlab::padic {

/*
 * Exact p-adic unit and square-class arithmetic.
 *
 * A PAdicScalar represents p^valuation * unit to an explicit relative
 * precision N: the unit is stored as a residue mod p^N coprime to p.
 * Nothing in this module ever rounds silently; precision is part of
 * every value and every result carries the min precision of its inputs.
 */
class PAdicScalar {
 public:
  // Validates that unit is invertible mod p^precision and reduces it.
  PAdicScalar(const Int& prime, long valuation, const Int& unit, int precision);

  // Decompose a nonzero rational as p^v * unit with the unit reduced mod p^N.
  static PAdicScalar from_rational(const Rat& x, const Int& prime,
                                   int precision = kDefaultPrecision);

  const Int& prime() const { return prime_; }
  long valuation() const { return valuation_; }
  const Int& unit() const { return unit_; }
  int precision() const { return precision_; }
  Int modulus() const { return pow_int(prime_, static_cast<unsigned long>(precision_)); }

  // Result precision is the min of the operand precisions.
  PAdicScalar times(const PAdicScalar& other) const;
  PAdicScalar square() const;

  // Same p, same valuation, units congruent mod p^min(precisions).
  bool congruent(const PAdicScalar& other) const;

  // True iff this value squares to x at the stated precision.
  bool squares_to(const Rat& x) const;

  std::string str() const;

 private:
  Int prime_;
  long valuation_;
  Int unit_;
  int precision_;
};

/*
 * Canonical representative of the square class of a nonzero rational in the
 * completion at a place.  The representative sets are fixed:
 *   real place:  {+1, -1}
 *   odd p:       {1, u, p, u*p} with u the least positive non-residue mod p
 *   p = 2:       {1, -1, 5, -5, 2, -2, 10, -10}
 * Two rationals map to the same SquareClass iff their quotient is a square
 * in the completion.
 */
struct SquareClass {
  Place place;
  Int representative;

  bool operator==(const SquareClass& o) const {
    return place == o.place && representative == o.representative;
  }
  bool operator!=(const SquareClass& o) const { return !(*this == o); }

  std::string str() const { return representative.get_str() + " @ " + place.str(); }
};

// A prime from the progression 17 + 24*N together with the congruence
// checks that characterize membership.
struct ProgressionPrime {
  Int value;
  bool congruent_1_mod_8 = false;
  bool congruent_2_mod_3 = false;
  bool at_least_89 = false;

  bool all_checks() const { return congruent_1_mod_8 && congruent_2_mod_3 && at_least_89; }
};

// Legendre symbol; 0 iff p | a.  Throws ValidationError unless p is an odd prime.
int legendre(const Int& a, const Int& p);

// Least u >= 2 with (u/p) = -1, for odd prime p.
Int least_positive_nonresidue(const Int& p);

// Is x a square in the completion at `place`?  x != 0 required.
bool is_square_local(const Rat& x, const Place& place);

// Canonical square-class representative; idempotent on its own output.
SquareClass square_class(const Rat& x, const Place& place);

// Square root of x in Q_p to relative precision N.  Requires
// is_square_local(x, p); otherwise throws NotASquareError carrying the
// failing congruence.  Branch choice is deterministic: for odd p the seed is
// the smaller of the two roots mod p; for p = 2 the seed is 1 mod 8 and every
// lift correction is a multiple of 4 (so the result stays 1 mod 4).
PAdicScalar hensel_sqrt(const Rat& x, const Int& prime, int precision = kDefaultPrecision);

// First `count` primes >= min that are congruent to 17 mod 24, ascending.
// Scans at most 10^7 candidates, then throws SearchBoundExceeded.
std::vector<ProgressionPrime> primes_in_progression(int count, const Int& min = 89);

// (p = 1 mod 8) and (p = 2 mod 3); for primes this equals (p = 17 mod 24).
bool verify_progression_congruences(const Int& p);

}  // namespace wittlab::padic
