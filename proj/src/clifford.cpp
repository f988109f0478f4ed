#include "wittlab/clifford.hpp"

#include <algorithm>
#include <bit>

namespace wittlab {

QuadRatMatrix QuadRatMatrix::multiply(const QuadRatMatrix& o) const {
  if (cols_ != o.rows_) throw std::logic_error("matrix shape mismatch");
  QuadRatMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const QuadRat& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) = out.at(i, j) + aik * o.at(k, j);
      }
    }
  }
  return out;
}

QuadRatMatrix QuadRatMatrix::transpose() const {
  QuadRatMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

QuadRat QuadRatMatrix::determinant() const {
  if (rows_ != cols_) throw std::logic_error("determinant of non-square matrix");
  QuadRatMatrix m = *this;
  QuadRat det(1);
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return QuadRat(0);
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det = det * m.at(col, col);
    QuadRat inv = m.at(col, col).inverse();
    for (int r = col + 1; r < rows_; ++r) {
      if (m.at(r, col).is_zero()) continue;
      QuadRat f = m.at(r, col) * inv;
      for (int j = col; j < cols_; ++j) {
        m.at(r, j) = m.at(r, j) - f * m.at(col, j);
      }
    }
  }
  return det;
}

std::vector<QuadRat> QuadRatMatrix::solve(const std::vector<QuadRat>& rhs) const {
  if (rows_ != cols_ || static_cast<int>(rhs.size()) != rows_) {
    throw std::logic_error("solve needs a square system");
  }
  QuadRatMatrix m = *this;
  std::vector<QuadRat> b = rhs;
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return {};
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      std::swap(b[static_cast<size_t>(pivot)], b[static_cast<size_t>(col)]);
    }
    QuadRat inv = m.at(col, col).inverse();
    for (int j = col; j < cols_; ++j) m.at(col, j) = m.at(col, j) * inv;
    b[static_cast<size_t>(col)] = b[static_cast<size_t>(col)] * inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == col || m.at(r, col).is_zero()) continue;
      QuadRat f = m.at(r, col);
      for (int j = col; j < cols_; ++j) m.at(r, j) = m.at(r, j) - f * m.at(col, j);
      b[static_cast<size_t>(r)] = b[static_cast<size_t>(r)] - f * b[static_cast<size_t>(col)];
    }
  }
  return b;
}

}  // namespace wittlab

namespace wittlab::clifford {

namespace {

std::vector<int> mask_indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (mask & (1u << i)) out.push_back(i);
  }
  return out;
}

// sign(S, T) = (-1)^{#{(s, t) in S x T : s > t}}
int blade_sign(std::uint32_t s, std::uint32_t t) {
  int inversions = 0;
  for (int i = 0; i < 32; ++i) {
    if (s & (1u << i)) {
      inversions += std::popcount(t & ((1u << i) - 1u));
    }
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace

CliffordAlgebra::CliffordAlgebra(qform::DiagonalForm form, long radicand)
    : form_(std::move(form)), radicand_(radicand) {
  if (form_.rank() > 8) {
    throw ValidationError("Clifford algebra rank is capped at 8, got " +
                          std::to_string(form_.rank()));
  }
  if (radicand_ != 0) {
    Int d(radicand_);
    if (d > 0 && mpz_perfect_square_p(d.get_mpz_t())) {
      throw ValidationError("radicand " + std::to_string(radicand_) +
                            " is a perfect square; the scalars would not form a field");
    }
  }
  int dim = 1 << form_.rank();
  basis_order_.resize(static_cast<size_t>(dim));
  for (int m = 0; m < dim; ++m) basis_order_[static_cast<size_t>(m)] = static_cast<std::uint32_t>(m);
  std::sort(basis_order_.begin(), basis_order_.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return mask_indices(a) < mask_indices(b);
  });
  position_.assign(static_cast<size_t>(dim), -1);
  for (int i = 0; i < dim; ++i) position_[basis_order_[static_cast<size_t>(i)]] = i;
}

int CliffordAlgebra::basis_position(std::uint32_t mask) const {
  return position_.at(mask);
}

AlgebraPtr make_algebra(qform::DiagonalForm form, long radicand) {
  return std::make_shared<const CliffordAlgebra>(std::move(form), radicand);
}

CliffordElem::CliffordElem(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw ValidationError("element needs an algebra context");
}

CliffordElem CliffordElem::scalar(AlgebraPtr algebra, const QuadRat& c) {
  CliffordElem e(std::move(algebra));
  e.set_coefficient(0, c);
  return e;
}

CliffordElem CliffordElem::basis(AlgebraPtr algebra, std::uint32_t mask) {
  CliffordElem e(std::move(algebra));
  if (mask >= (1u << e.algebra_->rank())) {
    throw ValidationError("basis subset outside {1..n}");
  }
  e.set_coefficient(mask, QuadRat(1));
  return e;
}

CliffordElem CliffordElem::generator(AlgebraPtr algebra, int index) {
  CliffordElem e(std::move(algebra));
  if (index < 1 || index > e.algebra_->rank()) {
    throw ValidationError("generator index " + std::to_string(index) + " out of range");
  }
  e.set_coefficient(1u << (index - 1), QuadRat(1));
  return e;
}

QuadRat CliffordElem::coefficient(std::uint32_t mask) const {
  auto it = coeffs_.find(mask);
  return it == coeffs_.end() ? QuadRat(0) : it->second;
}

void CliffordElem::set_coefficient(std::uint32_t mask, const QuadRat& c) {
  if (c.is_zero()) {
    coeffs_.erase(mask);
  } else {
    coeffs_[mask] = c;
  }
}

namespace {

void require_same_context(const CliffordElem& x, const CliffordElem& y) {
  if (x.algebra() == y.algebra()) return;
  if (!x.algebra()->compatible(*y.algebra())) {
    throw ValidationError("mismatched form contexts");
  }
}

}  // namespace

CliffordElem CliffordElem::operator+(const CliffordElem& o) const {
  require_same_context(*this, o);
  CliffordElem out = *this;
  for (const auto& [mask, c] : o.coeffs_) {
    out.set_coefficient(mask, out.coefficient(mask) + c);
  }
  return out;
}

CliffordElem CliffordElem::operator-(const CliffordElem& o) const {
  require_same_context(*this, o);
  CliffordElem out = *this;
  for (const auto& [mask, c] : o.coeffs_) {
    out.set_coefficient(mask, out.coefficient(mask) - c);
  }
  return out;
}

CliffordElem CliffordElem::operator-() const {
  CliffordElem out(algebra_);
  for (const auto& [mask, c] : coeffs_) out.coeffs_[mask] = -c;
  return out;
}

CliffordElem CliffordElem::scale(const QuadRat& c) const {
  CliffordElem out(algebra_);
  if (c.is_zero()) return out;
  for (const auto& [mask, v] : coeffs_) out.set_coefficient(mask, v * c);
  return out;
}

bool CliffordElem::operator==(const CliffordElem& o) const {
  require_same_context(*this, o);
  return coeffs_ == o.coeffs_;
}

std::string CliffordElem::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::uint32_t mask : algebra_->basis_order()) {
    auto it = coeffs_.find(mask);
    if (it == coeffs_.end()) continue;
    if (!out.empty()) out += " + ";
    if (mask == 0) {
      out += it->second.str();
      continue;
    }
    std::string word;
    for (int i : mask_indices(mask)) {
      if (!word.empty()) word += "*";
      word += "e" + std::to_string(i + 1);
    }
    if (it->second == QuadRat(1)) {
      out += word;
    } else {
      out += "(" + it->second.str() + ")*" + word;
    }
  }
  return out;
}

CliffordElem clifford_mul(const CliffordElem& x, const CliffordElem& y) {
  require_same_context(x, y);
  const auto& alg = *x.algebra();
  CliffordElem out(x.algebra());
  for (const auto& [s, cx] : x.coefficients()) {
    for (const auto& [t, cy] : y.coefficients()) {
      QuadRat c = cx * cy;
      std::uint32_t common = s & t;
      if (common) {
        Rat prod(1);
        for (int i : mask_indices(common)) prod *= alg.form().coefficient(i);
        c = c * QuadRat(prod);
      }
      if (blade_sign(s, t) < 0) c = -c;
      std::uint32_t mask = s ^ t;
      out.set_coefficient(mask, out.coefficient(mask) + c);
    }
  }
  return out;
}

CliffordElem star(const CliffordElem& x) {
  CliffordElem out(x.algebra());
  for (const auto& [mask, c] : x.coefficients()) {
    int r = std::popcount(mask);
    int sign = (r * (r - 1) / 2) % 2 ? -1 : 1;
    out.set_coefficient(mask, sign < 0 ? -c : c);
  }
  return out;
}

GradedParts graded_parts(const CliffordElem& x) {
  GradedParts parts{CliffordElem(x.algebra()), CliffordElem(x.algebra())};
  for (const auto& [mask, c] : x.coefficients()) {
    (std::popcount(mask) % 2 == 0 ? parts.even : parts.odd).set_coefficient(mask, c);
  }
  return parts;
}

std::optional<int> parity(const CliffordElem& x) {
  std::optional<int> p;
  for (const auto& [mask, c] : x.coefficients()) {
    int q = std::popcount(mask) % 2;
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p;
}

CliffordElem symmetrize(AlgebraPtr algebra, const std::vector<int>& indices) {
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || indices[i] > algebra->rank()) {
      throw ValidationError("index " + std::to_string(indices[i]) + " out of range");
    }
    for (size_t j = i + 1; j < indices.size(); ++j) {
      if (indices[i] == indices[j]) {
        throw ValidationError("repeated index " + std::to_string(indices[i]));
      }
    }
  }
  if (indices.empty()) return CliffordElem::scalar(algebra, QuadRat(1));

  std::vector<int> perm(indices.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end());

  CliffordElem sum(algebra);
  long count = 0;
  do {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
      for (size_t j = i + 1; j < perm.size(); ++j) {
        if (perm[i] > perm[j]) ++inv;
      }
    }
    CliffordElem word = CliffordElem::scalar(algebra, QuadRat(inv % 2 ? -1 : 1));
    for (size_t i = 0; i < perm.size(); ++i) {
      word = clifford_mul(word, CliffordElem::generator(algebra, indices[static_cast<size_t>(perm[i])]));
    }
    sum = sum + word;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));

  Rat r_factorial(count);  // the loop ran over all r! permutations
  return sum.scale(QuadRat(1 / r_factorial));
}

SpinWitness is_spin(const CliffordElem& g) {
  SpinWitness w;
  const auto& alg = *g.algebra();
  int n = alg.rank();
  int dim = alg.dimension();

  w.even_ok = true;
  for (const auto& [mask, c] : g.coefficients()) {
    if (std::popcount(mask) % 2 != 0) w.even_ok = false;
  }

  // Invertibility: solve [x * g] = [1] through the right-multiplication matrix.
  QuadRatMatrix r = right_mult_matrix(g);
  std::vector<QuadRat> rhs(static_cast<size_t>(dim));
  rhs[static_cast<size_t>(alg.basis_position(0))] = QuadRat(1);
  std::vector<QuadRat> sol = r.solve(rhs);
  if (!sol.empty()) {
    CliffordElem inv(g.algebra());
    for (int i = 0; i < dim; ++i) {
      inv.set_coefficient(alg.basis_order()[static_cast<size_t>(i)], sol[static_cast<size_t>(i)]);
    }
    w.invertible = true;
    w.inverse = inv;
  }

  if (w.invertible) {
    QuadRatMatrix induced(n, n);
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      CliffordElem conj =
          clifford_mul(clifford_mul(g, CliffordElem::generator(g.algebra(), i)), *w.inverse);
      for (const auto& [mask, c] : conj.coefficients()) {
        if (std::popcount(mask) != 1) {
          ok = false;
          break;
        }
        int row = std::countr_zero(mask);
        induced.at(row, i - 1) = c;
      }
    }
    w.preserves_v = ok;
    if (ok) w.induced = induced;
  }

  CliffordElem one = CliffordElem::scalar(g.algebra(), QuadRat(1));
  w.star_unital = clifford_mul(star(g), g) == one;
  return w;
}

std::string SpinWitness::failure() const {
  std::string out;
  if (!even_ok) out += "not even; ";
  if (!invertible) out += "not invertible; ";
  if (!preserves_v) out += "conjugation does not preserve V; ";
  if (!star_unital) out += "star(g)*g != 1; ";
  if (!out.empty()) out.erase(out.size() - 2);
  return out;
}

QuadRatMatrix pi(const CliffordElem& g) {
  SpinWitness w = is_spin(g);
  if (!w.all_ok()) {
    throw ValidationError("element is not in the spinor group: " + w.failure());
  }
  return *w.induced;
}

QuadRatMatrix right_mult_matrix(const CliffordElem& g) {
  const auto& alg = *g.algebra();
  int dim = alg.dimension();
  QuadRatMatrix r(dim, dim);
  for (int col = 0; col < dim; ++col) {
    std::uint32_t mask = alg.basis_order()[static_cast<size_t>(col)];
    CliffordElem prod = clifford_mul(CliffordElem::basis(g.algebra(), mask), g);
    for (const auto& [m, c] : prod.coefficients()) {
      r.at(alg.basis_position(m), col) = c;
    }
  }
  return r;
}

namespace {

bool entries_supported(const QuadRatMatrix& m, const std::vector<Int>& primes) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const QuadRat& e = m.at(i, j);
      if (!e.is_rational()) {
        throw ValidationError("integrality is defined for rational coordinates only");
      }
      if (!denominator_supported_on(Int(e.rational().get_den()), primes)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_integral_point(const CliffordElem& g, const std::vector<Int>& inverted_primes) {
  SpinWitness w = is_spin(g);
  if (!w.all_ok()) {
    throw ValidationError("element is not in the spinor group: " + w.failure());
  }
  if (!entries_supported(right_mult_matrix(g), inverted_primes)) return false;
  return entries_supported(right_mult_matrix(*w.inverse), inverted_primes);
}

}  // namespace wittlab::clifford
