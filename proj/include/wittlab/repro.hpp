#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "wittlab/l2betti.hpp"
#include "wittlab/zp_isometry.hpp"

namespace wittlab::repro {

using Json = nlohmann::ordered_json;

/*
 * End-to-end verification pipeline: prime selection in 17 + 24N, the two
 * signed forms, Z_p-isometry certificates, local Witt indices, CSP
 * hypothesis checks, local factor kinds, per-factor l^2 support and the
 * Kunneth sums, finishing with the support sets {k} and {k+2}.
 *
 * The pipeline is deterministic: identical configs produce byte-identical
 * reports.  Every claim in the report carries either a checkable
 * certificate or a named theorem citation tag.
 */
struct PipelineConfig {
  int k = 2;
  std::optional<std::vector<Int>> primes;  // defaults to primes_in_progression(k)
  int sampled_primes_bound = 300;
  int precision = kDefaultPrecision;
  bool assume_small_residue_ok = false;
};

struct StepRecord {
  std::string name;
  bool pass = false;
  std::string detail;
  Json evidence;
};

struct TheoremReport {
  PipelineConfig config;
  std::vector<Int> primes;
  Int prime_product = 1;
  qform::DiagonalForm form_plus;
  qform::DiagonalForm form_minus;
  std::vector<zp::IsometryCertificate> certificates;
  std::vector<std::pair<Int, std::pair<int, int>>> witt_per_prime;  // p -> (w+, w-)
  l2::CspReport csp_plus;
  l2::CspReport csp_minus;
  std::vector<l2::LocalFactorDescriptor> factors_plus;
  std::vector<l2::LocalFactorDescriptor> factors_minus;
  l2::ProfiniteFactors profinite;
  l2::SupportSet support_plus;
  l2::SupportSet support_minus;
  std::vector<std::string> warnings;
  std::vector<StepRecord> steps;
  bool conclusion_ok = false;

  Json to_json() const;
};

// Runs every stage in order; a failed stage throws PipelineError naming the
// step, its inputs and the witness of failure.
TheoremReport run_theorem_pipeline(const PipelineConfig& config);

// JSON encodings shared with the CLI.
Json place_json(const Place& place);
Json square_class_json(const padic::SquareClass& c);
Json padic_scalar_json(const padic::PAdicScalar& s);
Json certificate_json(const zp::IsometryCertificate& cert);
Json csp_json(const l2::CspReport& report);
Json factor_json(const l2::LocalFactorDescriptor& d);
Json support_json(const l2::SupportSet& s);
Json local_invariants_json(const qform::LocalInvariants& inv);

}  // namespace wittlab::repro
