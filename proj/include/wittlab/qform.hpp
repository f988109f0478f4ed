#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittlab/padic.hpp"
#include "wittlab/place.hpp"

namespace wittlab::qform {

/*
 * Diagonal quadratic forms <a_1, ..., a_n> over Q and their complete local
 * invariants: Hilbert symbols, Hasse invariants, discriminant square classes,
 * real signatures, isotropy and Witt decompositions at every place.
 *
 * Everything is computed from the classification data (rank, discriminant,
 * Hasse invariant, signature); no vector search and no precision parameter
 * appears anywhere in this module.
 */
class DiagonalForm {
 public:
  explicit DiagonalForm(std::vector<Rat> coefficients, std::string label = "");

  int rank() const { return static_cast<int>(coefficients_.size()); }
  const Rat& coefficient(int i) const { return coefficients_.at(static_cast<size_t>(i)); }
  const std::vector<Rat>& coefficients() const { return coefficients_; }
  const std::string& label() const { return label_; }

  bool operator==(const DiagonalForm& o) const { return coefficients_ == o.coefficients_; }

 private:
  std::vector<Rat> coefficients_;
  std::string label_;
};

// Classification data of a form at one place.  `signature` is present only
// at the real place.  Rank 0 records the invariants of an empty orthogonal
// summand (discriminant class 1, Hasse +1).
struct LocalInvariants {
  int rank = 0;
  padic::SquareClass discriminant{Place::real(), 1};
  int hasse = 1;
  std::optional<std::pair<int, int>> signature;
};

// witt_index hyperbolic planes split off; what remains is anisotropic.
struct WittDecomposition {
  int witt_index = 0;
  LocalInvariants anisotropic;
};

// Hilbert symbol (a, b)_v in {+1, -1}: +1 iff z^2 = a x^2 + b y^2 has a
// nontrivial solution in the completion at v.  Symmetric, bimultiplicative.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& place);

// Product of (a_i, a_j)_v over i < j.
int hasse_invariant(const DiagonalForm& form, const Place& place);

padic::SquareClass discriminant(const DiagonalForm& form, const Place& place);

// (positive count, negative count).
std::pair<int, int> real_signature(const DiagonalForm& form);

int witt_index_real(const DiagonalForm& form);

bool is_isotropic_local(const DiagonalForm& form, const Int& p);

int witt_index_local(const DiagonalForm& form, const Int& p);

WittDecomposition witt_decompose(const DiagonalForm& form, const Place& place);

// Invariants of (witt_index hyperbolic planes) _|_ (anisotropic kernel),
// recomputed from the decomposition data alone.
LocalInvariants recompose_invariants(const WittDecomposition& dec, const Place& place);

// All invariants of the form at the given place in one struct.
LocalInvariants local_invariants(const DiagonalForm& form, const Place& place);

// Rank >= 5 only: by Hasse-Minkowski such a form is isotropic over Q iff it
// is indefinite over R.  Throws UnsupportedCaseError for rank <= 4.
bool is_isotropic_over_Q(const DiagonalForm& form);

enum class FormSign { Plus, Minus };

// <s, s, s, s*P, 3> with s = +/-1 and P the product of the given primes.
// Each prime must be distinct, >= 89 and congruent to 17 mod 24; violations
// raise ValidationError naming the offending prime and condition.
DiagonalForm build_signed_form(FormSign sign, const std::vector<Int>& primes);

// Form literal syntax "<a1,a2,...,an>" with integer or num/den entries,
// whitespace-insensitive.  Parse failures carry the byte position.
DiagonalForm parse_form(const std::string& text);
std::string format_form(const DiagonalForm& form);

}  // namespace wittlab::qform
