#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittlab/qform.hpp"
#include "wittlab/quadrat.hpp"

namespace wittlab::clifford {

/*
 * Exact Clifford algebra C(V, q) of a diagonal form q = <a_1, ..., a_n>,
 * rank capped at 8.  Elements are finitely supported maps from subsets of
 * {1..n} (stored as bitmasks) to exact scalars.  Basis products follow
 *
 *   e_S * e_T = sign(S, T) * (prod_{i in S cap T} a_i) * e_{S xor T},
 *
 * sign counting the transpositions needed to interleave the index words.
 *
 * The 2^n lattice basis used for matrices is ordered by subset size, then
 * lexicographically on the index tuples.  Right multiplication by g is
 * reported as the matrix R(g) with [x*g] = R(g) [x], so composition reads
 * R(g*h) = R(h) * R(g); the transposed assignment g -> R(g)^T is the
 * multiplicative embedding.  That convention is fixed here once and
 * exercised by the composition tests.
 */
class CliffordAlgebra {
 public:
  // radicand != 0 adjoins sqrt(radicand) to the scalar field.
  explicit CliffordAlgebra(qform::DiagonalForm form, long radicand = 0);

  const qform::DiagonalForm& form() const { return form_; }
  int rank() const { return form_.rank(); }
  long radicand() const { return radicand_; }
  int dimension() const { return 1 << rank(); }

  // Basis masks ordered by (popcount, lex on index tuples).
  const std::vector<std::uint32_t>& basis_order() const { return basis_order_; }
  int basis_position(std::uint32_t mask) const;

  bool compatible(const CliffordAlgebra& o) const {
    return form_ == o.form_ && radicand_ == o.radicand_;
  }

 private:
  qform::DiagonalForm form_;
  long radicand_;
  std::vector<std::uint32_t> basis_order_;
  std::vector<int> position_;
};

using AlgebraPtr = std::shared_ptr<const CliffordAlgebra>;

AlgebraPtr make_algebra(qform::DiagonalForm form, long radicand = 0);

class CliffordElem {
 public:
  explicit CliffordElem(AlgebraPtr algebra);

  static CliffordElem zero(AlgebraPtr algebra) { return CliffordElem(std::move(algebra)); }
  static CliffordElem scalar(AlgebraPtr algebra, const QuadRat& c);
  static CliffordElem basis(AlgebraPtr algebra, std::uint32_t mask);
  static CliffordElem generator(AlgebraPtr algebra, int index);  // 1-based

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::map<std::uint32_t, QuadRat>& coefficients() const { return coeffs_; }
  QuadRat coefficient(std::uint32_t mask) const;
  bool is_zero() const { return coeffs_.empty(); }

  CliffordElem operator+(const CliffordElem& o) const;
  CliffordElem operator-(const CliffordElem& o) const;
  CliffordElem operator-() const;
  CliffordElem scale(const QuadRat& c) const;
  bool operator==(const CliffordElem& o) const;

  void set_coefficient(std::uint32_t mask, const QuadRat& c);

  std::string str() const;

 private:
  AlgebraPtr algebra_;
  std::map<std::uint32_t, QuadRat> coeffs_;
};

struct GradedParts {
  CliffordElem even;
  CliffordElem odd;
};

// Pass/fail record for the four spinor-group membership conditions,
// with the witnesses (inverse, induced matrix) when they exist.
struct SpinWitness {
  bool even_ok = false;
  bool invertible = false;
  std::optional<CliffordElem> inverse;
  bool preserves_v = false;
  std::optional<QuadRatMatrix> induced;  // n x n, columns = images of e_i
  bool star_unital = false;

  bool all_ok() const { return even_ok && invertible && preserves_v && star_unital; }
  std::string failure() const;
};

CliffordElem clifford_mul(const CliffordElem& x, const CliffordElem& y);

// Reversal involution: grade-r components pick up (-1)^{r(r-1)/2}.
CliffordElem star(const CliffordElem& x);

GradedParts graded_parts(const CliffordElem& x);

// Parity of a homogeneous element (0 even / 1 odd); nullopt if mixed or zero.
std::optional<int> parity(const CliffordElem& x);

// (1/r!) sum over permutations of the signed generator words for the given
// distinct indices (1-based, in the given order); for an orthogonal diagonal
// basis this collapses to the ordered product of generators.
CliffordElem symmetrize(AlgebraPtr algebra, const std::vector<int>& indices);

// Evenness, invertibility (by solving x*g = 1 on the 2^n lattice basis),
// preservation of V under conjugation, and star-unitality.  Failures are
// recorded, never thrown.
SpinWitness is_spin(const CliffordElem& g);

// Matrix of v -> g v g^-1 on the e_i basis.  Requires is_spin(g) to pass;
// otherwise throws ValidationError naming the failed check.
QuadRatMatrix pi(const CliffordElem& g);

// R(g) with [x*g] = R(g)[x] in the ordered lattice basis.
QuadRatMatrix right_mult_matrix(const CliffordElem& g);

// True iff every entry of R(g) and R(g^-1) is rational with denominator
// supported on `inverted_primes` (empty set = Z-points).  Both directions
// are required.  Requires is_spin(g) to pass.
bool is_integral_point(const CliffordElem& g, const std::vector<Int>& inverted_primes);

}  // namespace wittlab::clifford
