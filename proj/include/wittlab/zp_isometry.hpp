#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wittlab/padic.hpp"

namespace wittlab::zp {

/*
 * Z_p-isometry decisions and machine-checkable certificates for the
 * sign-flip pair <1,1,1,P> vs <-1,-1,-1,-P>, P a product of distinct primes
 * congruent to 1 mod 8.  Three certificate shapes, one per residue case:
 *
 *   p = 1 mod 4   Scaling               diag(r,r,r,r), r^2 = -1 in Z_p
 *   p = 3 mod 4   UnimodularDiscriminant matched rank + unit discriminant class
 *   p = 2         ExplicitMatrix        exact 4x4 Gram identity over Z[s]/(s^2+7)
 *                                       plus the 2-adic square root of P
 *
 * Every certificate is independently checkable by the verify_* functions.
 */

struct ZpDiagonalLattice {
  std::vector<Int> coefficients;
  Int prime;

  ZpDiagonalLattice(std::vector<Int> coeffs, const Int& p);
};

struct JordanBlock {
  long scale = 0;                 // p^scale
  std::vector<Int> unit_entries;  // coprime to p
};

// Element a + b*s of Z[s]/(s^2 + 7); arithmetic is exact.
struct QuadExtEntry {
  Int a = 0;
  Int b = 0;

  QuadExtEntry() = default;
  QuadExtEntry(const Int& a_, const Int& b_) : a(a_), b(b_) {}

  QuadExtEntry operator+(const QuadExtEntry& o) const { return {a + o.a, b + o.b}; }
  QuadExtEntry operator*(const QuadExtEntry& o) const {
    return {a * o.a - 7 * b * o.b, a * o.b + b * o.a};
  }
  bool operator==(const QuadExtEntry& o) const { return a == o.a && b == o.b; }
  std::string str() const;
};

class QuadExtMatrix {
 public:
  QuadExtMatrix() = default;

  const QuadExtEntry& at(int i, int j) const { return entries_[static_cast<size_t>(4 * i + j)]; }
  QuadExtEntry& at(int i, int j) { return entries_[static_cast<size_t>(4 * i + j)]; }

  // The exact witness for <1,1,1,1> ~ <-1,-1,-1,-1> over Z_2:
  //   (  2   1   1   s )
  //   ( -1   2  -s   1 )        s^2 = -7
  //   ( -1   s   2  -1 )
  //   ( -s  -1   1   2 )
  static QuadExtMatrix negation_witness();

 private:
  std::array<QuadExtEntry, 16> entries_{};
};

enum class CertMethod { Scaling, UnimodularDiscriminant, ExplicitMatrix };

struct ScalingData {
  std::vector<padic::PAdicScalar> diagonal;
};

struct UnimodularMatchData {
  long scale = 0;
  int rank_lhs = 0;
  int rank_rhs = 0;
  padic::SquareClass disc_lhs{Place::real(), 1};
  padic::SquareClass disc_rhs{Place::real(), 1};
};

struct ExplicitMatrixData {
  QuadExtMatrix matrix;
  // 2-adic square root of the prime product P (P = 1 mod 8).
  std::optional<padic::PAdicScalar> sqrt_product;
};

struct IsometryCertificate {
  CertMethod method = CertMethod::Scaling;
  Int prime = 2;
  int precision = kDefaultPrecision;
  std::variant<ScalingData, UnimodularMatchData, ExplicitMatrixData> data;

  std::string method_name() const;
};

// Odd p only: group entries by p-valuation and extract unit parts.
// Throws UnsupportedCaseError for p = 2.
std::vector<JordanBlock> jordan_decompose(const ZpDiagonalLattice& lattice);

// Cassels' criterion for unimodular blocks at the same scale, odd p:
// isometric iff equal rank and equal unit discriminant square class.
bool unimodular_isometric_odd_p(const JordanBlock& a, const JordanBlock& b, const Int& p);

// Decide <1,1,1,P> ~ <-1,-1,-1,-P> over Z_p and produce a certificate.
// `form` must literally be {1, 1, 1, P} with P a product of distinct primes
// congruent to 1 mod 8 (P = 1 allowed as the empty product).
std::pair<bool, IsometryCertificate> negation_isometric_zp(
    const std::vector<Int>& form, const Int& p, int precision = kDefaultPrecision);

// Exact check M^T * diag(a) * M == diag(b) in Z[s]/(s^2+7); no tolerance.
bool verify_gram_identity(const QuadExtMatrix& m, const std::array<int, 4>& a_diag,
                          const std::array<int, 4>& b_diag);

// Check d^2 * a_i = -a_i mod p^N for every diagonal entry d of a Scaling
// certificate.  Throws InsufficientPrecisionError if the certificate carries
// fewer digits than requested.
bool verify_scaling_certificate(const IsometryCertificate& cert, const std::vector<Int>& form,
                                const Int& p, int precision);

// Dispatch on the certificate method and verify it against the sign-flip
// pair for `form` = {1,1,1,P}.
bool verify_certificate(const IsometryCertificate& cert, const std::vector<Int>& form);

}  // namespace wittlab::zp
