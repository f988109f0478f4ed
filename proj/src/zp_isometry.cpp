#include "wittlab/zp_isometry.hpp"

#include <algorithm>
#include <map>

namespace wittlab::zp {

ZpDiagonalLattice::ZpDiagonalLattice(std::vector<Int> coeffs, const Int& p)
    : coefficients(std::move(coeffs)), prime(p) {
  if (!is_prime(p)) throw ValidationError(p.get_str() + " is not prime");
  if (coefficients.empty()) throw ValidationError("lattice needs at least one coefficient");
  for (const Int& c : coefficients) {
    if (c == 0) throw ValidationError("zero coefficient in lattice");
  }
}

std::string QuadExtEntry::str() const {
  if (b == 0) return a.get_str();
  std::string s = b.get_str() + "*s";
  if (a == 0) return s;
  return a.get_str() + (b > 0 ? "+" : "") + s;
}

QuadExtMatrix QuadExtMatrix::negation_witness() {
  QuadExtMatrix m;
  const int a[4][4] = {{2, 1, 1, 0}, {-1, 2, 0, 1}, {-1, 0, 2, -1}, {0, -1, 1, 2}};
  const int b[4][4] = {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m.at(i, j) = QuadExtEntry(a[i][j], b[i][j]);
  }
  return m;
}

std::string IsometryCertificate::method_name() const {
  switch (method) {
    case CertMethod::Scaling: return "scaling";
    case CertMethod::UnimodularDiscriminant: return "unimodular-discriminant";
    case CertMethod::ExplicitMatrix: return "explicit-matrix";
  }
  return "?";
}

std::vector<JordanBlock> jordan_decompose(const ZpDiagonalLattice& lattice) {
  if (lattice.prime == 2) {
    throw UnsupportedCaseError("Jordan decomposition is implemented for odd p only");
  }
  std::map<long, JordanBlock> blocks;
  for (const Int& c : lattice.coefficients) {
    long v = valuation(c, lattice.prime);
    JordanBlock& b = blocks[v];
    b.scale = v;
    b.unit_entries.push_back(unit_part(c, lattice.prime));
  }
  std::vector<JordanBlock> out;
  out.reserve(blocks.size());
  for (auto& [scale, block] : blocks) out.push_back(std::move(block));
  return out;
}

bool unimodular_isometric_odd_p(const JordanBlock& a, const JordanBlock& b, const Int& p) {
  if (p == 2 || !is_prime(p)) throw ValidationError("odd prime required");
  if (a.scale != b.scale) {
    throw ValidationError("blocks at scales " + std::to_string(a.scale) + " and " +
                          std::to_string(b.scale) + " are not comparable");
  }
  if (a.unit_entries.size() != b.unit_entries.size()) return false;
  Int da(1), db(1);
  for (const Int& u : a.unit_entries) da *= u;
  for (const Int& u : b.unit_entries) db *= u;
  Place place = Place::prime(p);
  return padic::square_class(Rat(da), place) == padic::square_class(Rat(db), place);
}

namespace {

// Validates {1,1,1,P} with P a squarefree product of primes = 1 mod 8 and
// returns P.  Factoring is by trial division; anything it cannot finish off
// is rejected rather than guessed at.
Int validate_negation_shape(const std::vector<Int>& form) {
  if (form.size() != 4 || form[0] != 1 || form[1] != 1 || form[2] != 1) {
    throw ValidationError("expected a form <1,1,1,P>");
  }
  Int P = form[3];
  if (P < 1) throw ValidationError("P must be positive, got " + P.get_str());
  Int rest = P;
  Int last(1);
  for (Int q = 2; q * q <= rest && q < 1'000'000; ++q) {
    if (!mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) continue;
    rest /= q;
    if (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
      throw ValidationError("P is not squarefree: " + q.get_str() + "^2 divides " + P.get_str());
    }
    if (mod_floor(q, 8) != 1) {
      throw ValidationError("prime factor " + q.get_str() + " of P is not 1 mod 8");
    }
    last = q;
  }
  if (rest > 1) {
    if (!is_prime(rest)) {
      throw ValidationError("cannot certify the factor " + rest.get_str() +
                            " of P as a prime congruent to 1 mod 8");
    }
    if (mod_floor(rest, 8) != 1) {
      throw ValidationError("prime factor " + rest.get_str() + " of P is not 1 mod 8");
    }
  }
  (void)last;
  return P;
}

}  // namespace

std::pair<bool, IsometryCertificate> negation_isometric_zp(const std::vector<Int>& form,
                                                           const Int& p, int precision) {
  Int P = validate_negation_shape(form);
  if (!is_prime(p)) throw ValidationError(p.get_str() + " is not prime");
  IsometryCertificate cert;
  cert.prime = p;
  cert.precision = precision;
  if (p == 2) {
    ExplicitMatrixData data;
    data.matrix = QuadExtMatrix::negation_witness();
    data.sqrt_product = padic::hensel_sqrt(Rat(P), 2, precision);
    cert.method = CertMethod::ExplicitMatrix;
    cert.data = std::move(data);
    return {true, cert};
  }
  if (mod_floor(p, 4) == 1) {
    // -1 is a square in Z_p; scaling by its root flips every sign at once.
    padic::PAdicScalar r = padic::hensel_sqrt(Rat(-1), p, precision);
    ScalingData data;
    data.diagonal.assign(4, r);
    cert.method = CertMethod::Scaling;
    cert.data = std::move(data);
    return {true, cert};
  }
  // p = 3 mod 4: every prime factor of P is 1 mod 8, so p does not divide P
  // and both forms are unimodular at p with equal unit discriminant P.
  ZpDiagonalLattice lhs({Int(1), Int(1), Int(1), P}, p);
  ZpDiagonalLattice rhs({Int(-1), Int(-1), Int(-1), -P}, p);
  auto blocks_lhs = jordan_decompose(lhs);
  auto blocks_rhs = jordan_decompose(rhs);
  if (blocks_lhs.size() != 1 || blocks_rhs.size() != 1) {
    throw ValidationError("sign-flip pair is not unimodular at p = " + p.get_str());
  }
  UnimodularMatchData data;
  data.scale = 0;
  data.rank_lhs = static_cast<int>(blocks_lhs[0].unit_entries.size());
  data.rank_rhs = static_cast<int>(blocks_rhs[0].unit_entries.size());
  Place place = Place::prime(p);
  Int da(1), db(1);
  for (const Int& u : blocks_lhs[0].unit_entries) da *= u;
  for (const Int& u : blocks_rhs[0].unit_entries) db *= u;
  data.disc_lhs = padic::square_class(Rat(da), place);
  data.disc_rhs = padic::square_class(Rat(db), place);
  bool ok = unimodular_isometric_odd_p(blocks_lhs[0], blocks_rhs[0], p);
  cert.method = CertMethod::UnimodularDiscriminant;
  cert.data = std::move(data);
  return {ok, cert};
}

bool verify_gram_identity(const QuadExtMatrix& m, const std::array<int, 4>& a_diag,
                          const std::array<int, 4>& b_diag) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      QuadExtEntry sum;
      for (int k = 0; k < 4; ++k) {
        // (M^T A M)_{ij} = sum_k M_{ki} * a_k * M_{kj}
        QuadExtEntry term = m.at(k, i) * m.at(k, j);
        sum = sum + QuadExtEntry(term.a * a_diag[static_cast<size_t>(k)],
                                 term.b * a_diag[static_cast<size_t>(k)]);
      }
      QuadExtEntry expected(i == j ? Int(b_diag[static_cast<size_t>(i)]) : Int(0), Int(0));
      if (!(sum == expected)) return false;
    }
  }
  return true;
}

bool verify_scaling_certificate(const IsometryCertificate& cert, const std::vector<Int>& form,
                                const Int& p, int precision) {
  if (cert.method != CertMethod::Scaling) {
    throw ValidationError("certificate is not a scaling certificate");
  }
  const auto& data = std::get<ScalingData>(cert.data);
  if (data.diagonal.size() != form.size()) return false;
  if (cert.precision < precision) {
    throw InsufficientPrecisionError("certificate carries " + std::to_string(cert.precision) +
                                     " digits, " + std::to_string(precision) + " requested");
  }
  Int m = pow_int(p, static_cast<unsigned long>(precision));
  for (size_t i = 0; i < form.size(); ++i) {
    const padic::PAdicScalar& d = data.diagonal[i];
    if (d.prime() != p || d.precision() < precision) {
      throw InsufficientPrecisionError("diagonal entry " + std::to_string(i) +
                                       " has insufficient precision");
    }
    if (d.valuation() != 0) return false;
    Int lhs = mod_floor(d.unit() * d.unit() * form[i] + form[i], m);
    if (lhs != 0) return false;
  }
  return true;
}

bool verify_certificate(const IsometryCertificate& cert, const std::vector<Int>& form) {
  Int P = validate_negation_shape(form);
  switch (cert.method) {
    case CertMethod::Scaling:
      return verify_scaling_certificate(cert, form, cert.prime, cert.precision);
    case CertMethod::UnimodularDiscriminant: {
      const auto& data = std::get<UnimodularMatchData>(cert.data);
      if (mod_floor(cert.prime, 4) != 3) return false;
      ZpDiagonalLattice lhs({Int(1), Int(1), Int(1), P}, cert.prime);
      ZpDiagonalLattice rhs({Int(-1), Int(-1), Int(-1), -P}, cert.prime);
      auto bl = jordan_decompose(lhs);
      auto br = jordan_decompose(rhs);
      if (bl.size() != 1 || br.size() != 1) return false;
      if (data.rank_lhs != static_cast<int>(bl[0].unit_entries.size())) return false;
      if (data.rank_rhs != static_cast<int>(br[0].unit_entries.size())) return false;
      if (!(data.disc_lhs == data.disc_rhs)) return false;
      return unimodular_isometric_odd_p(bl[0], br[0], cert.prime);
    }
    case CertMethod::ExplicitMatrix: {
      const auto& data = std::get<ExplicitMatrixData>(cert.data);
      if (cert.prime != 2) return false;
      // Step 1, exact: <1,1,1,1> ~ <-1,-1,-1,-1> via M^T (-I) M = I.
      if (!verify_gram_identity(data.matrix, {-1, -1, -1, -1}, {1, 1, 1, 1})) return false;
      // Step 2: <P> ~ <1> over Z_2 through the recorded square root.
      if (P == 1) return true;
      if (!data.sqrt_product) return false;
      return data.sqrt_product->squares_to(Rat(P));
    }
  }
  return false;
}

}  // namespace wittlab::zp
