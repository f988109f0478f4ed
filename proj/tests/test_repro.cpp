#include <doctest.h>

#include "wittlab/repro.hpp"

using namespace wittlab;
using namespace wittlab::repro;

TEST_CASE("pipeline reproduces the support sets for k = 2") {
  PipelineConfig config;
  config.k = 2;
  config.primes = std::vector<Int>{89, 113};
  config.sampled_primes_bound = 50;  // keep the unit test quick
  TheoremReport report = run_theorem_pipeline(config);
  CHECK(report.conclusion_ok);
  CHECK(report.support_plus == l2::SupportSet{{2}});
  CHECK(report.support_minus == l2::SupportSet{{4}});
  CHECK(report.prime_product == 10057);
  CHECK(report.csp_plus.witt_sum == 2);
  CHECK(report.csp_minus.witt_sum == 3);
  for (const auto& step : report.steps) CHECK(step.pass);
  for (const auto& [p, w] : report.witt_per_prime) {
    CHECK(w.first == 1);
    CHECK(w.second == 1);
  }
}

TEST_CASE("pipeline validates its configuration") {
  PipelineConfig config;
  config.k = 2;
  config.primes = std::vector<Int>{89, 89};
  CHECK_THROWS_AS(run_theorem_pipeline(config), PipelineError);

  PipelineConfig low;
  low.k = 1;
  CHECK_THROWS_AS(run_theorem_pipeline(low), PipelineError);

  PipelineConfig wrong;
  wrong.k = 2;
  wrong.primes = std::vector<Int>{89, 97};  // 97 is not 17 mod 24
  CHECK_THROWS_AS(run_theorem_pipeline(wrong), PipelineError);

  PipelineConfig count_mismatch;
  count_mismatch.k = 3;
  count_mismatch.primes = std::vector<Int>{89, 113};
  CHECK_THROWS_AS(run_theorem_pipeline(count_mismatch), PipelineError);
}

TEST_CASE("reports are deterministic and round-trip their forms") {
  PipelineConfig config;
  config.k = 2;
  config.sampled_primes_bound = 30;
  TheoremReport a = run_theorem_pipeline(config);
  TheoremReport b = run_theorem_pipeline(config);
  std::string dump_a = a.to_json().dump(2);
  std::string dump_b = b.to_json().dump(2);
  CHECK(dump_a == dump_b);

  Json j = a.to_json();
  CHECK(j["schema"] == 1);
  for (const char* key : {"config", "forms", "isometry", "witt", "csp", "factors", "support",
                          "conclusion"}) {
    CHECK(j.contains(key));
  }
  qform::DiagonalForm plus = qform::parse_form(j["forms"]["plus"].get<std::string>());
  qform::DiagonalForm minus = qform::parse_form(j["forms"]["minus"].get<std::string>());
  CHECK(plus == a.form_plus);
  CHECK(minus == a.form_minus);
  CHECK(j["conclusion"]["verified"] == true);
  CHECK(j["support"]["plus"] == Json::array({2}));
  CHECK(j["support"]["minus"] == Json::array({4}));
}

TEST_CASE("certificate sample always contains 2 and the selected primes") {
  PipelineConfig config;
  config.k = 2;
  config.sampled_primes_bound = 10;
  TheoremReport report = run_theorem_pipeline(config);
  bool has2 = false, has89 = false, has113 = false;
  for (const auto& cert : report.certificates) {
    if (cert.prime == 2) has2 = true;
    if (cert.prime == 89) has89 = true;
    if (cert.prime == 113) has113 = true;
  }
  CHECK(has2);
  CHECK(has89);
  CHECK(has113);
}

TEST_CASE("every isometry step entry is verified and carries evidence") {
  PipelineConfig config;
  config.k = 2;
  config.sampled_primes_bound = 20;
  TheoremReport report = run_theorem_pipeline(config);
  Json j = report.to_json();
  for (const auto& item : j["isometry"]["checked"]) {
    CHECK(item["verified"] == true);
    CHECK(item.contains("certificate"));
  }
  CHECK(j["isometry"].contains("beyond_bound"));
  CHECK(j["isometry"]["beyond_bound"]["cases"].size() == 2);
}
