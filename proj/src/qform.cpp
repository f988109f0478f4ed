#include "wittlab/qform.hpp"

#include <algorithm>
#include <cctype>

namespace wittlab::qform {

DiagonalForm::DiagonalForm(std::vector<Rat> coefficients, std::string label)
    : coefficients_(std::move(coefficients)), label_(std::move(label)) {
  if (coefficients_.empty()) throw ValidationError("a diagonal form needs at least one entry");
  for (size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) {
      throw ValidationError("coefficient " + std::to_string(i + 1) + " is zero (degenerate form)");
    }
    coefficients_[i].canonicalize();
  }
}

namespace {

// (u-1)/2 mod 2 for odd u.
int eps2(const Int& u) { return mod_floor(u, 4) == 1 ? 0 : 1; }

// (u^2-1)/8 mod 2 for odd u.
int omega2(const Int& u) {
  unsigned long r = mod_floor(u, 8).get_ui();
  return (r == 1 || r == 7) ? 0 : 1;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& place) {
  if (a == 0 || b == 0) throw ValidationError("Hilbert symbol needs nonzero arguments");
  Int A = square_class_integer(a);
  Int B = square_class_integer(b);
  if (place.is_real()) return (A < 0 && B < 0) ? -1 : 1;
  const Int& p = place.prime_value();
  long alpha = valuation(A, p);
  long beta = valuation(B, p);
  Int u = unit_part(A, p);
  Int w = unit_part(B, p);
  if (p == 2) {
    long e = static_cast<long>(eps2(u)) * eps2(w) + (alpha % 2) * omega2(w) + (beta % 2) * omega2(u);
    return e % 2 ? -1 : 1;
  }
  int result = 1;
  if ((alpha % 2) && (beta % 2) && mod_floor((p - 1) / 2, 2) == 1) result = -result;
  if (beta % 2) result *= padic::legendre(u, p);
  if (alpha % 2) result *= padic::legendre(w, p);
  return result;
}

int hasse_invariant(const DiagonalForm& form, const Place& place) {
  int eps = 1;
  for (int i = 0; i < form.rank(); ++i) {
    for (int j = i + 1; j < form.rank(); ++j) {
      eps *= hilbert_symbol(form.coefficient(i), form.coefficient(j), place);
    }
  }
  return eps;
}

padic::SquareClass discriminant(const DiagonalForm& form, const Place& place) {
  Rat d(1);
  for (const Rat& a : form.coefficients()) d *= a;
  return padic::square_class(d, place);
}

std::pair<int, int> real_signature(const DiagonalForm& form) {
  int pos = 0, neg = 0;
  for (const Rat& a : form.coefficients()) (a > 0 ? pos : neg)++;
  return {pos, neg};
}

int witt_index_real(const DiagonalForm& form) {
  auto [pos, neg] = real_signature(form);
  return std::min(pos, neg);
}

namespace {

struct InvariantData {
  int rank;
  padic::SquareClass disc;
  int hasse;
};

// Isotropy from classification data at a finite place.
bool isotropic_from_invariants(const InvariantData& d, const Place& place) {
  const Int& p = place.prime_value();
  padic::SquareClass minus_one = padic::square_class(Rat(-1), place);
  switch (d.rank) {
    case 0:
    case 1:
      return false;
    case 2:
      return d.disc == minus_one;
    case 3:
      return d.hasse == hilbert_symbol(Rat(-1), -Rat(d.disc.representative), place);
    case 4: {
      bool trivial_disc = d.disc == padic::square_class(Rat(1), place);
      int h = hilbert_symbol(Rat(-1), Rat(-1), place);
      return !(trivial_disc && d.hasse == -h);
    }
    default:
      (void)p;
      return true;  // rank >= 5 over a local field
  }
}

// Split one hyperbolic plane off invariant data: the kernel after
// f = H _|_ f' has disc' = class(-disc) and hasse' = hasse * (-1, disc')_v.
InvariantData split_hyperbolic(const InvariantData& d, const Place& place) {
  padic::SquareClass disc = padic::square_class(-Rat(d.disc.representative), place);
  int hasse = d.hasse * hilbert_symbol(Rat(-1), Rat(disc.representative), place);
  return InvariantData{d.rank - 2, disc, hasse};
}

}  // namespace

bool is_isotropic_local(const DiagonalForm& form, const Int& p) {
  Place place = Place::prime(p);
  InvariantData d{form.rank(), discriminant(form, place), hasse_invariant(form, place)};
  return isotropic_from_invariants(d, place);
}

WittDecomposition witt_decompose(const DiagonalForm& form, const Place& place) {
  WittDecomposition dec;
  if (place.is_real()) {
    auto [pos, neg] = real_signature(form);
    int w = std::min(pos, neg);
    int m = pos - neg;  // kernel is |m| copies of sign(m)
    dec.witt_index = w;
    dec.anisotropic.rank = std::abs(m);
    dec.anisotropic.signature = std::make_pair(std::max(m, 0), std::max(-m, 0));
    Rat disc = (m < 0 && m % 2 != 0) ? Rat(-1) : Rat(1);
    dec.anisotropic.discriminant = padic::square_class(disc, place);
    // (c, c)_R = -1 only for c = -1; kernel Hasse is (-1)^{C(|m|,2)} if negative.
    long pairs = static_cast<long>(std::abs(m)) * (std::abs(m) - 1) / 2;
    dec.anisotropic.hasse = (m < 0 && pairs % 2 == 1) ? -1 : 1;
    return dec;
  }
  InvariantData d{form.rank(), discriminant(form, place), hasse_invariant(form, place)};
  int w = 0;
  while (isotropic_from_invariants(d, place)) {
    d = split_hyperbolic(d, place);
    ++w;
  }
  dec.witt_index = w;
  dec.anisotropic.rank = d.rank;
  dec.anisotropic.discriminant = d.disc;
  dec.anisotropic.hasse = d.hasse;
  return dec;
}

int witt_index_local(const DiagonalForm& form, const Int& p) {
  return witt_decompose(form, Place::prime(p)).witt_index;
}

LocalInvariants recompose_invariants(const WittDecomposition& dec, const Place& place) {
  LocalInvariants out;
  int w = dec.witt_index;
  out.rank = dec.anisotropic.rank + 2 * w;
  // disc(wH) = class((-1)^w); hasse(wH) = (-1,-1)^{C(w,2)}.
  Rat disc_h = (w % 2) ? Rat(-1) : Rat(1);
  Rat disc_total = disc_h * Rat(dec.anisotropic.discriminant.representative);
  out.discriminant = padic::square_class(disc_total, place);
  long hpairs = static_cast<long>(w) * (w - 1) / 2;
  int hasse_h = (hpairs % 2 == 1) ? hilbert_symbol(Rat(-1), Rat(-1), place) : 1;
  int cross = hilbert_symbol(disc_h, Rat(dec.anisotropic.discriminant.representative), place);
  out.hasse = hasse_h * dec.anisotropic.hasse * cross;
  if (place.is_real() && dec.anisotropic.signature) {
    out.signature = std::make_pair(dec.anisotropic.signature->first + w,
                                   dec.anisotropic.signature->second + w);
  }
  return out;
}

LocalInvariants local_invariants(const DiagonalForm& form, const Place& place) {
  LocalInvariants inv;
  inv.rank = form.rank();
  inv.discriminant = discriminant(form, place);
  inv.hasse = hasse_invariant(form, place);
  if (place.is_real()) inv.signature = real_signature(form);
  return inv;
}

bool is_isotropic_over_Q(const DiagonalForm& form) {
  if (form.rank() < 5) {
    throw UnsupportedCaseError("global isotropy shortcut needs rank >= 5, got rank " +
                               std::to_string(form.rank()));
  }
  auto [pos, neg] = real_signature(form);
  return pos > 0 && neg > 0;
}

DiagonalForm build_signed_form(FormSign sign, const std::vector<Int>& primes) {
  if (primes.empty()) throw ValidationError("need at least one prime");
  for (size_t i = 0; i < primes.size(); ++i) {
    const Int& p = primes[i];
    if (!is_prime(p)) throw ValidationError(p.get_str() + " is not prime");
    if (p < 89) throw ValidationError(p.get_str() + " is below the minimum 89");
    if (!padic::verify_progression_congruences(p)) {
      throw ValidationError(p.get_str() + " is not congruent to 17 mod 24");
    }
    for (size_t j = i + 1; j < primes.size(); ++j) {
      if (primes[j] == p) throw ValidationError("primes must be distinct, " + p.get_str() + " repeats");
    }
  }
  Int product(1);
  for (const Int& p : primes) product *= p;
  Rat s = sign == FormSign::Plus ? Rat(1) : Rat(-1);
  std::vector<Rat> coeffs{s, s, s, s * Rat(product), Rat(3)};
  return DiagonalForm(std::move(coeffs), sign == FormSign::Plus ? "plus" : "minus");
}

namespace {

size_t skip_spaces(const std::string& t, size_t i) {
  while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  return i;
}

Rat parse_rational(const std::string& t, size_t& i) {
  size_t start = i;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
  size_t digits_begin = i;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  if (i == digits_begin) throw FormParseError("expected a number", start);
  Int num(t.substr(start, i - start), 10);
  Int den(1);
  if (i < t.size() && t[i] == '/') {
    ++i;
    size_t den_begin = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i == den_begin) throw FormParseError("expected a denominator after '/'", den_begin);
    den = Int(t.substr(den_begin, i - den_begin), 10);
    if (den == 0) throw FormParseError("denominator is zero", den_begin);
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

DiagonalForm parse_form(const std::string& text) {
  size_t i = skip_spaces(text, 0);
  if (i >= text.size() || text[i] != '<') throw FormParseError("form literal must start with '<'", i);
  ++i;
  std::vector<Rat> coeffs;
  while (true) {
    i = skip_spaces(text, i);
    size_t entry_pos = i;
    Rat entry = parse_rational(text, i);
    if (entry == 0) throw FormParseError("zero coefficient is not allowed", entry_pos);
    coeffs.push_back(entry);
    i = skip_spaces(text, i);
    if (i >= text.size()) throw FormParseError("unterminated form literal", i);
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] == '>') {
      ++i;
      break;
    }
    throw FormParseError(std::string("unexpected character '") + text[i] + "'", i);
  }
  i = skip_spaces(text, i);
  if (i != text.size()) throw FormParseError("trailing characters after '>'", i);
  return DiagonalForm(std::move(coeffs));
}

std::string format_form(const DiagonalForm& form) {
  std::string out = "<";
  for (int i = 0; i < form.rank(); ++i) {
    if (i) out += ",";
    const Rat& a = form.coefficient(i);
    out += a.get_num().get_str();
    if (a.get_den() != 1) out += "/" + a.get_den().get_str();
  }
  out += ">";
  return out;
}

}  // namespace wittlab::qform
