#include "wittlab/l2betti.hpp"

#include <algorithm>

namespace wittlab::l2 {

std::string LocalFactorDescriptor::kind_name() const {
  switch (kind) {
    case FactorKind::ArchimedeanCompact: return "archimedean-compact";
    case FactorKind::ArchimedeanHyperbolic4: return "archimedean-hyperbolic4";
    case FactorKind::NonArchimedean: return "nonarchimedean";
  }
  return "?";
}

std::string SupportSet::str() const {
  std::string out = "{";
  bool first = true;
  for (int d : degrees) {
    if (!first) out += ",";
    out += std::to_string(d);
    first = false;
  }
  return out + "}";
}

int rank_spin(const qform::DiagonalForm& form, const Place& place) {
  if (place.is_real()) return qform::witt_index_real(form);
  return qform::witt_index_local(form, place.prime_value());
}

LocalFactorDescriptor derive_factor(const qform::DiagonalForm& form, const Place& place) {
  LocalFactorDescriptor d;
  d.place = place;
  if (place.is_real()) {
    auto [pos, neg] = qform::real_signature(form);
    if (pos == 0 || neg == 0) {
      d.kind = FactorKind::ArchimedeanCompact;
      d.provenance = "definite signature (" + std::to_string(pos) + "," + std::to_string(neg) +
                     "): compact real factor";
    } else if ((pos == 1 && neg == 4) || (pos == 4 && neg == 1)) {
      d.kind = FactorKind::ArchimedeanHyperbolic4;
      d.provenance = "signature (" + std::to_string(pos) + "," + std::to_string(neg) +
                     "): double cover of the isometries of hyperbolic 4-space";
    } else {
      throw UnsupportedCaseError(
          "no support rule for the real factor with signature (" + std::to_string(pos) + "," +
          std::to_string(neg) + "); only definite and (1,4)/(4,1) are handled");
    }
    return d;
  }
  d.kind = FactorKind::NonArchimedean;
  d.residue_char = place.prime_value();
  d.rank = qform::witt_index_local(form, place.prime_value());
  d.provenance = "local rank = Witt index " + std::to_string(d.rank) + " at p = " +
                 d.residue_char.get_str();
  return d;
}

LocalSupportResult local_l2_support(const LocalFactorDescriptor& descriptor,
                                    const SupportOptions& options) {
  LocalSupportResult out;
  switch (descriptor.kind) {
    case FactorKind::ArchimedeanCompact:
      out.support.degrees = {0};
      return out;
    case FactorKind::ArchimedeanHyperbolic4:
      out.support.degrees = {2};
      return out;
    case FactorKind::NonArchimedean: {
      if (descriptor.residue_char < 89) {
        std::string msg = "residue characteristic " + descriptor.residue_char.get_str() +
                          " is below 89; the building-cohomology support rule is only "
                          "invoked for large residue characteristic";
        if (!options.assume_small_residue_ok) throw UnsupportedCaseError(msg);
        out.warning = msg + " (assumed harmless by flag)";
      }
      out.support.degrees = {descriptor.rank};
      return out;
    }
  }
  throw std::logic_error("unreachable factor kind");
}

SupportSet kunneth_support(const std::vector<SupportSet>& factors) {
  if (factors.empty()) throw ValidationError("Kunneth sum needs at least one factor");
  std::set<int> acc = {0};
  for (const SupportSet& f : factors) {
    std::set<int> next;
    for (int a : acc) {
      for (int b : f.degrees) next.insert(a + b);
    }
    acc = std::move(next);
  }
  return SupportSet{acc};
}

CspReport csp_hypotheses(const qform::DiagonalForm& form, const std::vector<Place>& s) {
  bool has_real = std::any_of(s.begin(), s.end(), [](const Place& v) { return v.is_real(); });
  if (!has_real) throw ValidationError("S must contain the real place");
  CspReport r;
  r.variables_ok = form.rank() >= 5;
  r.witt_sum = 0;
  for (const Place& v : s) {
    if (!v.is_real()) r.nonarch_place_ok = true;
    int w = rank_spin(form, v);
    r.breakdown.emplace_back(v, w);
    r.witt_sum += w;
  }
  r.witt_sum_ok = r.witt_sum >= 2;
  return r;
}

ProfiniteFactors profinite_factor_list(const qform::DiagonalForm& form,
                                       const std::vector<Int>& inverted_primes,
                                       const CspReport& recorded, int sample_bound) {
  (void)form;
  if (!recorded.holds()) {
    throw ValidationError(
        "profinite factor decomposition requires an established congruence subgroup "
        "property; the recorded conclusion is 'hypotheses-not-met'");
  }
  ProfiniteFactors out;
  out.excluded_primes = inverted_primes;
  std::sort(out.excluded_primes.begin(), out.excluded_primes.end());
  for (const Int& p : out.excluded_primes) {
    if (!is_prime(p)) throw ValidationError(p.get_str() + " is not prime");
  }
  if (out.excluded_primes.empty()) {
    out.description = "all primes";
  } else {
    Int product(1);
    for (const Int& p : out.excluded_primes) product *= p;
    out.description = "all primes p not dividing " + product.get_str();
  }
  for (const Int& p : primes_up_to(std::max(sample_bound, 2))) {
    if (std::find(out.excluded_primes.begin(), out.excluded_primes.end(), p) ==
        out.excluded_primes.end()) {
      out.sample_primes.push_back(p);
    }
  }
  return out;
}

}  // namespace wittlab::l2
