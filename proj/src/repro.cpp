#include "wittlab/repro.hpp"

#include <algorithm>
#include <set>

namespace wittlab::repro {

Json place_json(const Place& place) {
  return place.is_real() ? Json("real") : Json(place.prime_value().get_str());
}

Json square_class_json(const padic::SquareClass& c) {
  Json j;
  j["place"] = place_json(c.place);
  j["representative"] = c.representative.get_str();
  return j;
}

Json padic_scalar_json(const padic::PAdicScalar& s) {
  Json j;
  j["prime"] = s.prime().get_str();
  j["valuation"] = s.valuation();
  j["unit"] = s.unit().get_str();
  j["precision"] = s.precision();
  return j;
}

Json certificate_json(const zp::IsometryCertificate& cert) {
  Json j;
  j["method"] = cert.method_name();
  j["prime"] = cert.prime.get_str();
  j["precision"] = cert.precision;
  switch (cert.method) {
    case zp::CertMethod::Scaling: {
      const auto& data = std::get<zp::ScalingData>(cert.data);
      Json diag = Json::array();
      for (const auto& entry : data.diagonal) diag.push_back(padic_scalar_json(entry));
      j["diagonal"] = diag;
      j["identity"] = "diag(r)^T * A * diag(r) = r^2 * A = -A";
      break;
    }
    case zp::CertMethod::UnimodularDiscriminant: {
      const auto& data = std::get<zp::UnimodularMatchData>(cert.data);
      j["scale"] = data.scale;
      j["rank"] = Json::array({data.rank_lhs, data.rank_rhs});
      j["disc_class"] = Json::array(
          {data.disc_lhs.representative.get_str(), data.disc_rhs.representative.get_str()});
      j["citation"] = "cassels-unimodular-classification";
      break;
    }
    case zp::CertMethod::ExplicitMatrix: {
      const auto& data = std::get<zp::ExplicitMatrixData>(cert.data);
      Json rows = Json::array();
      for (int r = 0; r < 4; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 4; ++c) {
          const auto& e = data.matrix.at(r, c);
          row.push_back(Json::array({e.a.get_str(), e.b.get_str()}));
        }
        rows.push_back(row);
      }
      j["matrix"] = rows;
      j["ring"] = "Z[s]/(s^2+7)";
      j["identity"] = "M^T * diag(-1,-1,-1,-1) * M = diag(1,1,1,1)";
      if (data.sqrt_product) {
        j["sqrt_prime_product"] = padic_scalar_json(*data.sqrt_product);
      }
      break;
    }
  }
  return j;
}

Json csp_json(const l2::CspReport& report) {
  Json j;
  j["variables_ok"] = report.variables_ok;
  j["nonarchimedean_place_ok"] = report.nonarch_place_ok;
  j["witt_sum"] = report.witt_sum;
  Json breakdown = Json::array();
  for (const auto& [place, w] : report.breakdown) {
    Json item;
    item["place"] = place_json(place);
    item["witt_index"] = w;
    breakdown.push_back(item);
  }
  j["witt_breakdown"] = breakdown;
  j["witt_sum_ok"] = report.witt_sum_ok;
  j["conclusion"] = report.conclusion();
  return j;
}

Json factor_json(const l2::LocalFactorDescriptor& d) {
  Json j;
  j["place"] = place_json(d.place);
  j["kind"] = d.kind_name();
  if (d.kind == l2::FactorKind::NonArchimedean) {
    j["rank"] = d.rank;
    j["residue_char"] = d.residue_char.get_str();
  }
  j["provenance"] = d.provenance;
  return j;
}

Json support_json(const l2::SupportSet& s) {
  Json arr = Json::array();
  for (int d : s.degrees) arr.push_back(d);
  return arr;
}

Json local_invariants_json(const qform::LocalInvariants& inv) {
  Json j;
  j["rank"] = inv.rank;
  j["discriminant"] = square_class_json(inv.discriminant);
  j["hasse"] = inv.hasse;
  if (inv.signature) {
    j["signature"] = Json::array({inv.signature->first, inv.signature->second});
  }
  return j;
}

namespace {

std::vector<Int> select_primes(const PipelineConfig& config) {
  if (config.k < 2) {
    throw PipelineError("prime-selection", "k must be >= 2, got " + std::to_string(config.k));
  }
  if (config.primes) {
    const auto& primes = *config.primes;
    if (static_cast<int>(primes.size()) != config.k) {
      throw PipelineError("prime-selection", "expected " + std::to_string(config.k) +
                                                 " primes, got " + std::to_string(primes.size()));
    }
    for (size_t i = 0; i < primes.size(); ++i) {
      const Int& p = primes[i];
      if (!is_prime(p)) throw PipelineError("prime-selection", p.get_str() + " is not prime");
      if (p < 89) throw PipelineError("prime-selection", p.get_str() + " is below 89");
      if (!padic::verify_progression_congruences(p)) {
        throw PipelineError("prime-selection", p.get_str() + " is not 17 mod 24");
      }
      for (size_t j = i + 1; j < primes.size(); ++j) {
        if (primes[j] == p) {
          throw PipelineError("prime-selection", "primes must be distinct, " + p.get_str() +
                                                     " repeats");
        }
      }
    }
    return primes;
  }
  std::vector<Int> out;
  for (const auto& p : padic::primes_in_progression(config.k)) out.push_back(p.value);
  return out;
}

Json int_list_json(const std::vector<Int>& xs) {
  Json arr = Json::array();
  for (const Int& x : xs) arr.push_back(x.get_str());
  return arr;
}

}  // namespace

TheoremReport run_theorem_pipeline(const PipelineConfig& config) {
  TheoremReport report{.config = config,
                       .form_plus = qform::DiagonalForm({Rat(1)}),
                       .form_minus = qform::DiagonalForm({Rat(1)})};

  // 1. Prime selection / validation.
  report.primes = select_primes(config);
  for (const Int& p : report.primes) report.prime_product *= p;
  {
    Json ev;
    ev["primes"] = int_list_json(report.primes);
    ev["congruences"] = "each p is 1 mod 8 and 2 mod 3, i.e. 17 mod 24";
    ev["citation"] = "dirichlet-arithmetic-progressions";
    report.steps.push_back({"prime-selection", true,
                            std::to_string(report.primes.size()) + " progression primes", ev});
  }

  // 2. Form construction.
  report.form_plus = qform::build_signed_form(qform::FormSign::Plus, report.primes);
  report.form_minus = qform::build_signed_form(qform::FormSign::Minus, report.primes);
  {
    Json ev;
    ev["plus"] = qform::format_form(report.form_plus);
    ev["minus"] = qform::format_form(report.form_minus);
    report.steps.push_back({"form-construction", true, "signed forms built", ev});
  }

  // 3. Z_p-isometry certificates for all p <= bound plus {2} and the p_i.
  {
    std::set<Int> sample;
    for (const Int& p : primes_up_to(config.sampled_primes_bound)) sample.insert(p);
    sample.insert(2);
    for (const Int& p : report.primes) sample.insert(p);
    std::vector<Int> rank4{Int(1), Int(1), Int(1), report.prime_product};
    Json checked = Json::array();
    for (const Int& p : sample) {
      auto [ok, cert] = zp::negation_isometric_zp(rank4, p, config.precision);
      bool verified = ok && zp::verify_certificate(cert, rank4);
      if (!verified) {
        throw PipelineError("zp-isometry", "certificate at p = " + p.get_str() +
                                               " failed verification");
      }
      Json item;
      item["p"] = p.get_str();
      item["method"] = cert.method_name();
      item["verified"] = true;
      item["certificate"] = certificate_json(cert);
      checked.push_back(item);
      report.certificates.push_back(std::move(cert));
    }
    Json ev;
    ev["pair"] = Json::array({qform::format_form(qform::DiagonalForm(
                                  {Rat(1), Rat(1), Rat(1), Rat(report.prime_product)})),
                              qform::format_form(qform::DiagonalForm(
                                  {Rat(-1), Rat(-1), Rat(-1), -Rat(report.prime_product)}))});
    ev["checked"] = checked;
    Json beyond;
    beyond["covered_by"] = "uniform residue case split over the remaining primes";
    beyond["cases"] = Json::array(
        {Json{{"residue", "1 mod 4"},
              {"method", "scaling"},
              {"argument", "-1 is a square in Z_p, so diag(sqrt(-1)) flips all four signs"}},
         Json{{"residue", "3 mod 4"},
              {"method", "unimodular-discriminant"},
              {"argument", "p does not divide the prime product, both lattices are unimodular "
                           "with equal unit discriminant"},
              {"citation", "cassels-unimodular-classification"}}});
    ev["beyond_bound"] = beyond;
    ev["fifth_coefficient_note"] =
        "the rank-5 forms share the fixed fifth coefficient 3, which matches itself under the "
        "identity; the certified sign-flip pair is the rank-4 part";
    report.steps.push_back({"zp-isometry", true,
                            std::to_string(report.certificates.size()) +
                                " certificates verified (all primes up to " +
                                std::to_string(config.sampled_primes_bound) + ")",
                            ev});
  }

  // 4. Witt index exactly one at each selected prime.
  {
    Json ev = Json::array();
    for (const Int& p : report.primes) {
      int wp = qform::witt_index_local(report.form_plus, p);
      int wm = qform::witt_index_local(report.form_minus, p);
      auto decp = qform::witt_decompose(report.form_plus, Place::prime(p));
      if (wp != 1 || wm != 1) {
        throw PipelineError("witt-index", "expected Witt index 1 at p = " + p.get_str() +
                                              ", got (" + std::to_string(wp) + ", " +
                                              std::to_string(wm) + ")");
      }
      report.witt_per_prime.push_back({p, {wp, wm}});
      Json item;
      item["p"] = p.get_str();
      item["plus"] = wp;
      item["minus"] = wm;
      item["anisotropic_kernel"] = local_invariants_json(decp.anisotropic);
      item["citation"] = "witt-decomposition";
      ev.push_back(item);
    }
    report.steps.push_back({"witt-index", true, "Witt index 1 at every selected prime",
                            Json{{"per_prime", ev}}});
  }

  // 5 + 6. Real factor kinds and CSP checks with S = {real, p_1, ..., p_k}.
  std::vector<Place> s_places{Place::real()};
  for (const Int& p : report.primes) s_places.push_back(Place::prime(p));
  report.csp_plus = l2::csp_hypotheses(report.form_plus, s_places);
  report.csp_minus = l2::csp_hypotheses(report.form_minus, s_places);
  if (!report.csp_plus.holds() || !report.csp_minus.holds()) {
    throw PipelineError("csp-hypotheses", "a hypothesis check failed; plus: " +
                                              report.csp_plus.conclusion() + ", minus: " +
                                              report.csp_minus.conclusion());
  }
  report.steps.push_back({"csp-hypotheses", true,
                          "all three hypotheses hold for both forms",
                          Json{{"plus", csp_json(report.csp_plus)},
                               {"minus", csp_json(report.csp_minus)},
                               {"citation", "prasad-rapinchuk-metaplectic; kneser-central"}}});

  // 6b. Profinite factor decomposition over the uninverted primes.
  report.profinite = l2::profinite_factor_list(report.form_plus, report.primes, report.csp_plus,
                                               config.sampled_primes_bound);
  {
    Json sample = Json::array();
    for (const Int& p : report.profinite.sample_primes) sample.push_back(p.get_str());
    report.steps.push_back(
        {"profinite-factors", true, report.profinite.description,
         Json{{"factors", report.profinite.description},
              {"sampled_at", sample},
              {"note", "each sampled factor pair is matched by a verified certificate above; "
                       "the remaining primes are covered by the residue case split"},
              {"citation", "strong-approximation-product"}}});
  }

  // 7. Per-factor support sets.
  l2::SupportOptions options{config.assume_small_residue_ok};
  std::vector<l2::SupportSet> parts_plus, parts_minus;
  Json factors_plus = Json::array(), factors_minus = Json::array();
  for (const Place& v : s_places) {
    for (int side = 0; side < 2; ++side) {
      const auto& form = side == 0 ? report.form_plus : report.form_minus;
      auto descriptor = l2::derive_factor(form, v);
      auto local = l2::local_l2_support(descriptor, options);
      if (local.warning) report.warnings.push_back(*local.warning);
      Json fj = factor_json(descriptor);
      fj["support"] = support_json(local.support);
      fj["citation"] = v.is_real()
                           ? (descriptor.kind == l2::FactorKind::ArchimedeanCompact
                                  ? "compact-group-l2"
                                  : "dodziuk-hyperbolic-l2")
                           : "building-cohomology-rank-support";
      if (side == 0) {
        report.factors_plus.push_back(descriptor);
        parts_plus.push_back(local.support);
        factors_plus.push_back(fj);
      } else {
        report.factors_minus.push_back(descriptor);
        parts_minus.push_back(local.support);
        factors_minus.push_back(fj);
      }
    }
  }
  report.steps.push_back({"local-factors", true, "factor kinds and local support recorded",
                          Json{{"plus", factors_plus}, {"minus", factors_minus}}});

  // 8. Kunneth sums.
  report.support_plus = l2::kunneth_support(parts_plus);
  report.support_minus = l2::kunneth_support(parts_minus);
  report.steps.push_back({"kunneth-sum", true,
                          "support(plus) = " + report.support_plus.str() + ", support(minus) = " +
                              report.support_minus.str(),
                          Json{{"plus", support_json(report.support_plus)},
                               {"minus", support_json(report.support_minus)},
                               {"citation", "kunneth-formula-locally-compact"}}});

  // 9. Conclusion.
  l2::SupportSet expected_plus{{config.k}};
  l2::SupportSet expected_minus{{config.k + 2}};
  report.conclusion_ok =
      report.support_plus == expected_plus && report.support_minus == expected_minus;
  if (!report.conclusion_ok) {
    throw PipelineError("conclusion", "support sets " + report.support_plus.str() + " / " +
                                          report.support_minus.str() + " do not match {k} / {k+2}");
  }
  report.steps.push_back(
      {"conclusion", true,
       "support(plus) = {k}, support(minus) = {k+2}, profinite completions isomorphic",
       Json{{"chain", Json::array({"csp-hypotheses", "strong-approximation-product",
                                   "factorwise-zp-isometry"})}}});
  return report;
}

Json TheoremReport::to_json() const {
  Json j;
  j["schema"] = 1;
  {
    Json c;
    c["k"] = config.k;
    c["primes"] = int_list_json(primes);
    c["sampled_primes_bound"] = config.sampled_primes_bound;
    c["precision"] = config.precision;
    c["assume_small_residue_ok"] = config.assume_small_residue_ok;
    j["config"] = c;
  }
  {
    Json f;
    f["plus"] = qform::format_form(form_plus);
    f["minus"] = qform::format_form(form_minus);
    f["prime_product"] = prime_product.get_str();
    j["forms"] = f;
  }
  for (const StepRecord& step : steps) {
    if (step.name == "zp-isometry") j["isometry"] = step.evidence;
    if (step.name == "witt-index") j["witt"] = step.evidence;
  }
  j["csp"] = Json{{"plus", csp_json(csp_plus)}, {"minus", csp_json(csp_minus)}};
  {
    Json f;
    Json fp = Json::array(), fm = Json::array();
    for (const auto& d : factors_plus) fp.push_back(factor_json(d));
    for (const auto& d : factors_minus) fm.push_back(factor_json(d));
    f["plus"] = fp;
    f["minus"] = fm;
    j["factors"] = f;
  }
  j["support"] = Json{{"plus", support_json(support_plus)}, {"minus", support_json(support_minus)}};
  {
    Json c;
    c["support_plus"] = support_json(support_plus);
    c["support_minus"] = support_json(support_minus);
    c["expected_plus"] = Json::array({config.k});
    c["expected_minus"] = Json::array({config.k + 2});
    c["profinite_isomorphism"] =
        Json{{"chain", Json::array({"csp-hypotheses", "strong-approximation-product",
                                    "factorwise-zp-isometry"})},
             {"factors", profinite.description},
             {"detail", "CSP identifies each profinite completion with the product of the "
                        "Z_p-points over primes away from the inverted set; the factors are "
                        "pairwise isomorphic by the certified Z_p-isometries"}};
    c["verified"] = conclusion_ok;
    j["conclusion"] = c;
  }
  if (!warnings.empty()) {
    Json w = Json::array();
    for (const auto& s : warnings) w.push_back(s);
    j["warnings"] = w;
  }
  {
    Json steps_json = Json::array();
    for (const StepRecord& step : steps) {
      Json sj;
      sj["name"] = step.name;
      sj["status"] = step.pass ? "pass" : "fail";
      sj["detail"] = step.detail;
      steps_json.push_back(sj);
    }
    j["steps"] = steps_json;
  }
  return j;
}

}  // namespace wittlab::repro
