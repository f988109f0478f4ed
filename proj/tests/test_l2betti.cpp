#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wittlab/l2betti.hpp"

using namespace wittlab;
using namespace wittlab::l2;

namespace {
const Int kP = Int(89) * Int(113);
const qform::DiagonalForm kPlus({Rat(1), Rat(1), Rat(1), Rat(kP), Rat(3)});
const qform::DiagonalForm kMinus({Rat(-1), Rat(-1), Rat(-1), -Rat(kP), Rat(3)});
}  // namespace

TEST_CASE("rank_spin") {
  for (long p : {89L, 113L}) {
    CHECK(rank_spin(kPlus, Place::prime(p)) == 1);
    CHECK(rank_spin(kMinus, Place::prime(p)) == 1);
  }
  CHECK(rank_spin(kPlus, Place::real()) == 0);
  CHECK(rank_spin(kMinus, Place::real()) == 1);
}

TEST_CASE("rank_spin is the local Witt index, cross-checked by isotropy search") {
  std::mt19937_64 rng(2468);
  static const long pool[] = {1, -1, 2, -2, 3, -3, 5, 7};
  std::uniform_int_distribution<size_t> pick(0, std::size(pool) - 1);
  for (long p : {3L, 5L, 7L}) {
    for (int iter = 0; iter < 8; ++iter) {
      int rank = 1 + iter % 4;
      std::vector<Rat> coeffs;
      std::vector<Int> ints;
      for (int i = 0; i < rank; ++i) {
        coeffs.emplace_back(pool[pick(rng)]);
        ints.emplace_back(coeffs.back().get_num());
      }
      qform::DiagonalForm f(coeffs);
      int r = rank_spin(f, Place::prime(p));
      CHECK(r == qform::witt_index_local(f, p));
      CHECK((r >= 1) == oracle::brute_isotropic(ints, p));
    }
  }
}

TEST_CASE("derive_factor") {
  LocalFactorDescriptor plus_real = derive_factor(kPlus, Place::real());
  CHECK(plus_real.kind == FactorKind::ArchimedeanCompact);
  LocalFactorDescriptor minus_real = derive_factor(kMinus, Place::real());
  CHECK(minus_real.kind == FactorKind::ArchimedeanHyperbolic4);
  LocalFactorDescriptor at89 = derive_factor(kPlus, Place::prime(89));
  CHECK(at89.kind == FactorKind::NonArchimedean);
  CHECK(at89.rank == 1);
  CHECK(at89.residue_char == 89);
  // signature (2,3) has no support rule
  qform::DiagonalForm other({Rat(1), Rat(1), Rat(-1), Rat(-1), Rat(-1)});
  CHECK_THROWS_AS(derive_factor(other, Place::real()), UnsupportedCaseError);
}

TEST_CASE("local_l2_support") {
  LocalFactorDescriptor compact{Place::real(), FactorKind::ArchimedeanCompact, 0, 0, ""};
  CHECK(local_l2_support(compact).support == SupportSet{{0}});
  LocalFactorDescriptor hyp{Place::real(), FactorKind::ArchimedeanHyperbolic4, 0, 0, ""};
  CHECK(local_l2_support(hyp).support == SupportSet{{2}});
  LocalFactorDescriptor nonarch{Place::prime(89), FactorKind::NonArchimedean, 1, 89, ""};
  CHECK(local_l2_support(nonarch).support == SupportSet{{1}});

  SUBCASE("small residue characteristic is refused unless assumed") {
    LocalFactorDescriptor small{Place::prime(7), FactorKind::NonArchimedean, 1, 7, ""};
    CHECK_THROWS_AS(local_l2_support(small), UnsupportedCaseError);
    SupportOptions assume{true};
    LocalSupportResult r = local_l2_support(small, assume);
    CHECK(r.support == SupportSet{{1}});
    REQUIRE(r.warning.has_value());
    CHECK(r.warning->find("below 89") != std::string::npos);
  }
}

TEST_CASE("kunneth_support pinned sums") {
  CHECK(kunneth_support({{{0}}, {{1}}, {{1}}}) == SupportSet{{2}});
  CHECK(kunneth_support({{{2}}, {{1}}, {{1}}}) == SupportSet{{4}});
  CHECK(kunneth_support({{{0}}, {{0}}, {{0}}}) == SupportSet{{0}});
}

TEST_CASE("kunneth_support is an associative commutative sumset") {
  std::mt19937_64 rng(1357);
  std::uniform_int_distribution<int> deg(0, 5), size(1, 3);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<SupportSet> xs;
    for (int i = 0; i < 3; ++i) {
      SupportSet s;
      int n = size(rng);
      for (int j = 0; j < n; ++j) s.degrees.insert(deg(rng));
      xs.push_back(s);
    }
    SupportSet left = kunneth_support({kunneth_support({xs[0], xs[1]}), xs[2]});
    SupportSet right = kunneth_support({xs[0], kunneth_support({xs[1], xs[2]})});
    SupportSet flat = kunneth_support(xs);
    CHECK(left == flat);
    CHECK(right == flat);
    std::vector<SupportSet> reversed{xs[2], xs[1], xs[0]};
    CHECK(kunneth_support(reversed) == flat);
  }
  // singletons add up
  CHECK(kunneth_support({{{3}}, {{4}}}) == SupportSet{{7}});
  CHECK_THROWS_AS(kunneth_support({}), ValidationError);
}

TEST_CASE("csp_hypotheses") {
  std::vector<Place> s{Place::real(), Place::prime(89), Place::prime(113)};
  SUBCASE("both signed forms satisfy all three hypotheses") {
    CspReport plus = csp_hypotheses(kPlus, s);
    CHECK(plus.holds());
    CHECK(plus.witt_sum == 2);
    CspReport minus = csp_hypotheses(kMinus, s);
    CHECK(minus.holds());
    CHECK(minus.witt_sum == 3);
  }
  SUBCASE("S = {real} fails the nonarchimedean hypothesis") {
    CspReport r = csp_hypotheses(kPlus, {Place::real()});
    CHECK_FALSE(r.holds());
    CHECK_FALSE(r.nonarch_place_ok);
    CHECK(r.conclusion() == "hypotheses-not-met");
  }
  SUBCASE("a single prime leaves the Witt sum at one") {
    CspReport r = csp_hypotheses(kPlus, {Place::real(), Place::prime(89)});
    CHECK(r.variables_ok);
    CHECK(r.nonarch_place_ok);
    CHECK(r.witt_sum == 1);
    CHECK_FALSE(r.witt_sum_ok);
    CHECK_FALSE(r.holds());
  }
  SUBCASE("rank below five fails the variable count") {
    qform::DiagonalForm small({Rat(1), Rat(1), Rat(1), Rat(-1)});
    CspReport r = csp_hypotheses(small, s);
    CHECK_FALSE(r.variables_ok);
  }
  SUBCASE("S without the real place is rejected") {
    CHECK_THROWS_AS(csp_hypotheses(kPlus, {Place::prime(89)}), ValidationError);
  }
}

TEST_CASE("profinite_factor_list") {
  std::vector<Place> s{Place::real(), Place::prime(89), Place::prime(113)};
  CspReport held = csp_hypotheses(kPlus, s);
  REQUIRE(held.holds());

  ProfiniteFactors f = profinite_factor_list(kPlus, {Int(89), Int(113)}, held, 300);
  CHECK(f.description == "all primes p not dividing 10057");
  CHECK(std::find(f.sample_primes.begin(), f.sample_primes.end(), Int(2)) !=
        f.sample_primes.end());
  CHECK(std::find(f.sample_primes.begin(), f.sample_primes.end(), Int(89)) ==
        f.sample_primes.end());
  CHECK(std::find(f.sample_primes.begin(), f.sample_primes.end(), Int(113)) ==
        f.sample_primes.end());
  for (const Int& p : f.sample_primes) CHECK(p <= 300);

  ProfiniteFactors all = profinite_factor_list(kPlus, {}, held, 50);
  CHECK(all.description == "all primes");

  CspReport failed = csp_hypotheses(kPlus, {Place::real()});
  CHECK_THROWS_AS(profinite_factor_list(kPlus, {Int(89)}, failed, 300), ValidationError);
}
