#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wittlab/qform.hpp"

namespace wittlab::l2 {

/*
 * Degreewise support of l^2-Betti numbers for the local factors attached to
 * a diagonal form, combined by the Kunneth sum rule.  Only positivity is
 * computed, never values: the archimedean factor contributes {0} (compact)
 * or {2} (double cover of the isometries of hyperbolic 4-space, signature
 * (1,4) or (4,1)); a nonarchimedean factor of rank r contributes {r}.  Any
 * archimedean signature outside those two cases is refused rather than
 * guessed at, and so is residue characteristic below 89 unless the caller
 * explicitly assumes it is harmless.
 */

enum class FactorKind { ArchimedeanCompact, ArchimedeanHyperbolic4, NonArchimedean };

struct LocalFactorDescriptor {
  Place place = Place::real();
  FactorKind kind = FactorKind::ArchimedeanCompact;
  int rank = 0;          // nonarchimedean only: the local Witt index
  Int residue_char = 0;  // nonarchimedean only
  std::string provenance;

  std::string kind_name() const;
};

struct SupportSet {
  std::set<int> degrees;

  bool operator==(const SupportSet& o) const { return degrees == o.degrees; }
  std::string str() const;
};

struct CspReport {
  bool variables_ok = false;     // (i) at least five variables
  bool nonarch_place_ok = false; // (ii) a nonarchimedean place in S
  bool witt_sum_ok = false;      // (iii) sum of local Witt indices >= 2
  int witt_sum = 0;
  std::vector<std::pair<Place, int>> breakdown;

  bool holds() const { return variables_ok && nonarch_place_ok && witt_sum_ok; }
  std::string conclusion() const { return holds() ? "holds" : "hypotheses-not-met"; }
};

// Local rank of the spinor group = Witt index of the form at the place.
int rank_spin(const qform::DiagonalForm& form, const Place& place);

// Classify the factor at a place.  Throws UnsupportedCaseError for an
// archimedean signature that is neither definite nor (1,4)/(4,1).
LocalFactorDescriptor derive_factor(const qform::DiagonalForm& form, const Place& place);

struct SupportOptions {
  bool assume_small_residue_ok = false;
};

struct LocalSupportResult {
  SupportSet support;
  std::optional<std::string> warning;
};

// {0}, {2} or {rank} per the factor kind.  Nonarchimedean factors require
// residue characteristic >= 89; `assume_small_residue_ok` downgrades that
// refusal to a recorded warning.
LocalSupportResult local_l2_support(const LocalFactorDescriptor& descriptor,
                                    const SupportOptions& options = {});

// Pointwise sumset {s_0 + ... + s_k}.
SupportSet kunneth_support(const std::vector<SupportSet>& factors);

// The three hypothesis checks; S must contain the real place.
CspReport csp_hypotheses(const qform::DiagonalForm& form, const std::vector<Place>& s);

struct ProfiniteFactors {
  std::vector<Int> excluded_primes;
  std::string description;
  std::vector<Int> sample_primes;  // includes 2, never an excluded prime
};

// Symbolic factor list "all primes p not dividing the inverted product",
// plus the sample of primes at which certificates are spot-checked.
// Requires a recorded CSP conclusion of "holds".
ProfiniteFactors profinite_factor_list(const qform::DiagonalForm& form,
                                       const std::vector<Int>& inverted_primes,
                                       const CspReport& recorded, int sample_bound = 300);

}  // namespace wittlab::l2
