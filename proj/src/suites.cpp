#include "triplet/suites.hpp"

#include <algorithm>
#include <set>

#include "triplet/linalg.hpp"

namespace triplet {

namespace {

using nlohmann::ordered_json;

bool all_pass(const std::vector<RelationCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RelationCheck& c) { return c.passed; });
}

ordered_json relation_data(const std::vector<RelationCheck>& checks) {
  ordered_json failed = ordered_json::array();
  for (const RelationCheck& c : checks)
    if (!c.passed) failed.push_back(c.tag);
  ordered_json d;
  d["relationCount"] = checks.size();
  d["failedTags"] = failed;
  return d;
}

template <ScalarRing T>
CheckRecord relations_record(const std::string& name, const std::string& params,
                             const RepCandidate<T>& rep) {
  const auto checks = check_relations(rep);
  return make_record(name, params, all_pass(checks), relation_data(checks));
}

template <ScalarRing T>
bool images_equal(const RepCandidate<T>& a, const RepCandidate<T>& b) {
  return a.images == b.images;
}

template <FieldScalar T>
bool fixed_vector_is_ones(const std::vector<Matrix<T>>& gens) {
  const auto fv = common_fixed_vector(gens);
  if (!fv) return false;
  return std::all_of(fv->begin(), fv->end(), [](const T& v) { return v.is_one(); });
}

RepCandidate<Rational> constant_rep(const RepCandidate<LaurentPoly>& rep) {
  RepCandidate<Rational> out;
  out.presentation = rep.presentation;
  out.name = rep.name;
  out.params = rep.params;
  for (const auto& [label, m] : rep.images) out.images.emplace(label, to_rational(m));
  return out;
}

std::vector<Matrix<Rational>> generator_list(const RepCandidate<Rational>& rep) {
  std::vector<Matrix<Rational>> gens;
  for (const std::string& g : rep.presentation.generators) gens.push_back(rep.image(g));
  return gens;
}

// ---------------------------------------------------------------------------

void add_tits(VerificationReport& report, const SuiteSpec& spec) {
  const int lo = std::max(spec.n_lo.value_or(3), 3);
  const int hi = spec.n_hi.value_or(7);
  for (int n = lo; n <= hi; ++n) {
    const std::string pn = "n=" + std::to_string(n);
    const RepCandidate<Rational> theta = tits_theta(n);
    report.checks.push_back(relations_record("tits_relations", pn, theta));

    const auto irr = irreducibility_test(theta, spec.cap);
    ordered_json d;
    d["spanDimension"] = irr.span_dimension;
    d["fullDimension"] = (n - 1) * (n - 1);
    report.checks.push_back(make_record(
        "tits_irreducible", pn, irr.irreducible && irr.span_dimension == (n - 1) * (n - 1),
        d));

    const TitsLemmaReport lemma = tits_lemma_checks(n);
    ordered_json ld;
    ld["columnActionOk"] = lemma.column_action_ok;
    ld["symbolicRowsOk"] = lemma.symbolic_rows_ok;
    ordered_json coeffs = ordered_json::array();
    for (const Rational& c : lemma.coefficients) coeffs.push_back(c.to_string());
    ld["targetCoefficients"] = coeffs;
    report.checks.push_back(make_record("tits_lemma_rows", pn, lemma.passed, ld));
  }
  const auto dets = det_a_sequence(12);
  bool ok = dets.size() == 12;
  ordered_json values = ordered_json::array();
  for (const auto& [m, v] : dets) {
    values.push_back({m, v.to_string()});
    if (v.is_zero()) ok = false;
  }
  ok = ok && dets[0].second == Rational(-2) && dets[1].second == Rational(3) &&
       dets[2].second == Rational(8);
  ordered_json d;
  d["determinants"] = values;
  report.checks.push_back(make_record("a_matrix_determinants", "m=1..12", ok, d));
}

// ---------------------------------------------------------------------------

void add_mu(VerificationReport& report, const SuiteSpec& spec) {
  const int lo = std::max(spec.n_lo.value_or(2), 2);
  const int hi = spec.n_hi.value_or(6);
  const MuExp sym = MuExp::symbolic();
  for (int n = lo; n <= hi; ++n) {
    const std::string pn = "n=" + std::to_string(n);

    const auto aut_checks = check_mu_automorphism_relations(n, sym);
    report.checks.push_back(make_record("mu_automorphism_relations", pn,
                                        all_pass(aut_checks),
                                        relation_data(aut_checks)));

    const RepCandidate<LaurentPoly> mu = mu_matrix(n, sym);
    report.checks.push_back(relations_record("mu_matrix_relations", pn, mu));

    bool jac_ok = true;
    for (int i = 1; i <= n - 1; ++i)
      if (!(magnus_jacobian(mu_aut(n, i, sym)) == mu.image("l" + std::to_string(i))))
        jac_ok = false;
    report.checks.push_back(make_record("mu_jacobian_blocks", pn, jac_ok));

    // mu'' is the diagonal conjugate of mu' and collapses to 0/1 blocks.
    const RepCandidate<LaurentPoly> mupp = mu_doubleprime(n, sym);
    const Matrix<LaurentPoly> p = mu_conjugator(n, sym);
    bool conj_ok = all_pass(check_relations(mupp));
    for (int i = 1; i <= n - 1; ++i) {
      const std::string label = "l" + std::to_string(i);
      if (!(p * mupp.image(label) == mu.image(label) * p)) conj_ok = false;
    }
    conj_ok = conj_ok && images_equal(mupp, mu_matrix(n, MuExp::concrete(0)));
    report.checks.push_back(make_record("mu_doubleprime_conjugation", pn, conj_ok));

    const bool fixed_ok =
        fixed_vector_is_ones(generator_list(constant_rep(mupp))) &&
        fixed_vector_is_ones(
            generator_list(constant_rep(mu_matrix(n, MuExp::concrete(0)))));
    report.checks.push_back(make_record("mu_fixed_vector_all_ones", pn, fixed_ok));

    if (n <= 3) {
      const bool faithful = faithfulness_by_enumeration(
          mu_matrix(n, MuExp::concrete(1)), triplet_group_elements(n));
      report.checks.push_back(make_record("mu_faithful_small_rank", pn, faithful));
    }

    if (n >= 3) {
      const KernelPurityReport kr = kernel_is_pure_check(n, spec.depth, spec.cap);
      ordered_json kd;
      kd["closureOrder"] = kr.closure_order;
      kd["expectedOrder"] = kr.expected_order;
      kd["witness"] = kr.witness ? render_word(*kr.witness) : "";
      bool pure_ok = true;
      if (kr.witness) {
        const auto proj =
            sn_projection(ProjectionKind::standard,
                          presentation_of(PresentationKind::Triplet, n));
        pure_ok = word_eval(proj, *kr.witness).is_identity();
        kd["witnessProjectsToIdentity"] = pure_ok;
      }
      report.checks.push_back(
          make_record("mu_kernel_order_and_witness", pn, kr.passed && pure_ok, kd));
    }

    const auto spec_irr =
        irreducibility_test(specialize_rep(mu, {{"s", Rational(2)}}), spec.cap);
    ordered_json sd;
    sd["spanDimension"] = spec_irr.span_dimension;
    report.checks.push_back(
        make_record("mu_specialized_reducible", pn + ",t->2", !spec_irr.irreducible, sd));
  }
}

// ---------------------------------------------------------------------------

void add_two_local(VerificationReport& report, const SuiteSpec& spec) {
  const RationalFunction vb = RationalFunction::variable("b");
  const int lo = std::max(spec.n_lo.value_or(3), 3);
  const int hi = spec.n_hi.value_or(6);
  for (int n = lo; n <= hi; ++n)
    report.checks.push_back(relations_record(
        "lambda_relations", "n=" + std::to_string(n), lambda_homog(n, vb)));

  const bool matches = images_equal(
      lambda_homog(3, Rational(1)),
      constant_rep(mu_doubleprime(3, MuExp::concrete(1))));
  report.checks.push_back(make_record("lambda_at_one_is_mu_normal_form", "n=3", matches));

  for (std::uint32_t p : spec.primes) {
    const ClassificationCensus census =
        classify_homog_2local_fp(PresentationKind::Triplet, p);
    const bool ok = census.all_matched() &&
                    census.solutions.size() == static_cast<std::size_t>(p - 1) &&
                    census_solutions_reverify(census);
    report.checks.push_back(make_record("homog_triplet_census", "p=" + std::to_string(p),
                                        ok, census_to_json(census)));
  }
}

// ---------------------------------------------------------------------------

void add_l3_families(VerificationReport& report, const SuiteSpec& spec) {
  const RationalFunction vb = RationalFunction::variable("b");
  const RationalFunction vc = RationalFunction::variable("c");
  const RationalFunction ve = RationalFunction::variable("e");
  const RationalFunction vf = RationalFunction::variable("f");
  const RationalFunction vg = RationalFunction::variable("g");

  report.checks.push_back(relations_record(
      "l3_family_relations", "j=1",
      l3_family<RationalFunction>(1, {{"b", vb}, {"e", ve}, {"f", vf}})));
  report.checks.push_back(relations_record(
      "l3_family_relations", "j=2", l3_family<RationalFunction>(2, {{"b", vb}, {"g", vg}})));
  report.checks.push_back(relations_record(
      "l3_family_relations", "j=3", l3_family<RationalFunction>(3, {{"c", vc}, {"f", vf}})));
  report.checks.push_back(
      relations_record("l3_family_relations", "j=4", l3_family<Rational>(4)));

  {
    const auto rep = l3_family<Rational>(2, {{"b", Rational(1)}, {"g", Rational(0)}});
    const Matrix<Rational> l1 = Matrix<Rational>::from_rows(
        {{Rational(-1, 2), Rational(1), Rational(0)},
         {Rational(3, 4), Rational(1, 2), Rational(0)},
         {Rational(0), Rational(0), Rational(1)}});
    const Matrix<Rational> l2 = Matrix<Rational>::diagonal(
        {Rational(1), Rational(-1), Rational(1)});
    report.checks.push_back(make_record("l3_family_display", "j=2,b=1,g=0",
                                        rep.image("l1") == l1 && rep.image("l2") == l2));
  }

  for (std::uint32_t p : spec.primes) {
    const std::string pp = "p=" + std::to_string(p);
    const ClassificationCensus census = classify_l3_2local_fp(p);
    bool ambiguous = false;
    for (const CensusSolution& s : census.solutions)
      if (s.family.rfind("ambiguous", 0) == 0) ambiguous = true;
    const bool ok =
        census.all_matched() && !ambiguous && census_solutions_reverify(census);
    report.checks.push_back(make_record("l3_census", pp, ok, census_to_json(census)));

    // Forward direction: construct each family over F_p and find its tuple
    // among the census solutions with the right family label.
    auto fe = [&](long long v) { return PrimeFieldElement(v, p); };
    const PrimeFieldElement proto = fe(1);
    std::vector<std::pair<int, RepCandidate<PrimeFieldElement>>> samples;
    samples.emplace_back(
        1, l3_family<PrimeFieldElement>(
               1, {{"b", fe(1)}, {"e", fe(2)}, {"f", fe(1)}}, proto));
    samples.emplace_back(
        2, l3_family<PrimeFieldElement>(2, {{"b", fe(1)}, {"g", fe(0)}}, proto));
    samples.emplace_back(
        3, l3_family<PrimeFieldElement>(3, {{"c", fe(1)}, {"f", fe(1)}}, proto));
    samples.emplace_back(4, l3_family<PrimeFieldElement>(4, {}, proto));
    bool member_ok = true;
    for (const auto& [j, rep] : samples) {
      const Matrix<PrimeFieldElement>& m1 = rep.image("l1");
      const Matrix<PrimeFieldElement>& m2 = rep.image("l2");
      const std::vector<std::uint32_t> tuple{
          m1.at(0, 0).value(), m1.at(0, 1).value(), m1.at(1, 0).value(),
          m1.at(1, 1).value(), m2.at(1, 1).value(), m2.at(1, 2).value(),
          m2.at(2, 1).value(), m2.at(2, 2).value()};
      const std::string want = "family" + std::to_string(j);
      const bool found = std::any_of(
          census.solutions.begin(), census.solutions.end(),
          [&](const CensusSolution& s) { return s.tuple == tuple && s.family == want; });
      if (!found) member_ok = false;
    }
    report.checks.push_back(make_record("l3_family_census_membership", pp, member_ok));
  }
}

// ---------------------------------------------------------------------------

void add_extensions(VerificationReport& report, const SuiteSpec& spec) {
  const RationalFunction vb = RationalFunction::variable("b");
  const RationalFunction vx = RationalFunction::variable("x");
  const int lo = std::max(spec.n_lo.value_or(3), 3);
  const int hi = spec.n_hi.value_or(5);

  for (int n = lo; n <= hi; ++n) {
    const std::string pn = "n=" + std::to_string(n);
    const auto lambda = lambda_homog(n, vb);
    for (int sign : {1, -1}) {
      const auto ext = extend_standard(lambda, sign);
      const std::string ps = pn + ",sign=" + (sign == 1 ? std::string("+1") : "-1");
      report.checks.push_back(relations_record("extension_virtual_relations", ps, ext));
      report.checks.push_back(relations_record(
          "extension_welded_relations", ps,
          with_presentation(ext, presentation_of(PresentationKind::WeldedTriplet, n))));
    }

    const auto w1 = omega(n, 1, vb, vx);
    report.checks.push_back(relations_record("omega1_virtual_relations", pn, w1));
    report.checks.push_back(relations_record(
        "omega1_welded_relations", pn,
        with_presentation(w1, presentation_of(PresentationKind::WeldedTriplet, n))));

    const auto w2 = omega(n, 2, vx, vx);
    report.checks.push_back(relations_record("omega2_virtual_relations", pn, w2));
    const auto welded_checks = check_relations(
        with_presentation(w2, presentation_of(PresentationKind::WeldedTriplet, n)));
    bool some_welded_failed = false, exactly_welded = true;
    for (const RelationCheck& c : welded_checks) {
      const bool is_welded = c.tag.rfind("welded", 0) == 0;
      if (!c.passed && is_welded) some_welded_failed = true;
      if (c.passed == is_welded) exactly_welded = false;
    }
    report.checks.push_back(make_record("omega2_fails_exactly_welded", pn,
                                        some_welded_failed && exactly_welded,
                                        relation_data(welded_checks)));
  }

  {
    bool guarded = false;
    try {
      extend_standard(tits_theta(4), -1);
    } catch (const NotTwoLocal&) {
      guarded = true;
    }
    report.checks.push_back(make_record("extension_rejects_non_two_local", "n=4", guarded));
  }

  {
    // Rank 2: powers of (l1 r1) stay diagonal with entries (b/x)^m, (x/b)^m.
    const auto w1 = omega(2, 1, vb, vx);
    const RationalFunction q = vb * scalar_inverse(vx);
    const GroupWord lr = GroupWord::gen("l1") * GroupWord::gen("r1");
    bool diag_ok = true;
    for (int m = 1; m <= 4; ++m) {
      const Matrix<RationalFunction> expect =
          Matrix<RationalFunction>::diagonal({q.pow(m), q.pow(-m)});
      if (!(word_eval(w1, lr.pow(m)) == expect)) diag_ok = false;
    }
    report.checks.push_back(make_record("omega_power_diagonal", "n=2", diag_ok));

    ordered_json rd;
    const auto m_trivial = root_of_unity_criterion(Rational(2), Rational(2), 24);
    const auto m_neg = root_of_unity_criterion(Rational(2), Rational(-2), 24);
    const auto m_absent = root_of_unity_criterion(Rational(2), Rational(3), 24);
    rd["b=2,x=2"] = m_trivial ? *m_trivial : -1;
    rd["b=2,x=-2"] = m_neg ? *m_neg : -1;
    rd["b=2,x=3"] = m_absent ? *m_absent : -1;
    bool root_ok = m_trivial == 1 && m_neg == 2 && !m_absent;
    const auto wneg = omega(2, 1, Rational(2), Rational(-2));
    const GroupWord rl = GroupWord::gen("r1") * GroupWord::gen("l1");
    root_ok = root_ok && word_eval(wneg, lr.pow(2)).is_identity() &&
              word_eval(wneg, rl.pow(2)).is_identity();
    report.checks.push_back(make_record("root_of_unity_criterion", "n=2", root_ok, rd));
  }

  {
    // Rank 3: (l1 r2)^3 lies in the kernel but projects to a transposition.
    const auto w1 = omega(3, 1, vb, vx);
    const GroupWord w = (GroupWord::gen("l1") * GroupWord::gen("r2")).pow(3);
    const auto proj = sn_projection(
        ProjectionKind::forget_ell, presentation_of(PresentationKind::VirtualTriplet, 3));
    const bool ok = word_eval(w1, w).is_identity() && !word_eval(proj, w).is_identity();
    ordered_json d;
    d["word"] = render_word(w);
    report.checks.push_back(make_record("omega_rank3_kernel_element", "n=3", ok, d));
  }

  {
    // Rank 4: certified kernel witness against the forgetful projection.
    const auto rep = omega(4, 1, Rational(2), Rational(3));
    const auto oracle = sn_projection(
        ProjectionKind::forget_ell, presentation_of(PresentationKind::VirtualTriplet, 4));
    const auto witness = kernel_witness_search(rep, oracle, std::max(spec.depth, 6));
    ordered_json d;
    d["witness"] = witness ? render_word(*witness) : "";
    bool ok = false;
    if (witness)
      ok = word_eval(rep, *witness).is_identity() &&
           !word_eval(oracle, *witness).is_identity();
    report.checks.push_back(make_record("omega_rank4_kernel_witness", "n=4", ok, d));
  }

  for (int n : {3, 4}) {
    const auto irr = irreducibility_test(omega(n, 1, vb, vx), spec.cap);
    ordered_json d;
    d["spanDimension"] = irr.span_dimension;
    report.checks.push_back(make_record("omega_irreducible_generic",
                                        "n=" + std::to_string(n),
                                        irr.irreducible && irr.span_dimension == n * n, d));
  }
  {
    // At b = x the conjugate by diag(b^2, b, 1) turns every image into a
    // permutation matrix, so the normal form fixes the all-ones vector.
    const auto rep = omega(3, 1, vb, vb);
    const auto red = irreducibility_test(rep, spec.cap);
    const Matrix<RationalFunction> p = Matrix<RationalFunction>::diagonal(
        {vb.pow(2), vb, RationalFunction(1)});
    std::vector<Matrix<RationalFunction>> normal_form;
    for (const std::string& g : rep.presentation.generators)
      normal_form.push_back(conjugate(p, rep.image(g)));
    const bool ok = !red.irreducible && fixed_vector_is_ones(normal_form);
    ordered_json d;
    d["spanDimension"] = red.span_dimension;
    report.checks.push_back(make_record("omega_reducible_when_b_equals_x", "n=3", ok, d));
  }
  {
    const auto irr = irreducibility_test(omega(3, 1, Rational(2), Rational(-2)), spec.cap);
    report.checks.push_back(make_record("omega_irreducible_specialized", "n=3,b=2,x=-2",
                                        irr.irreducible));
  }

  for (std::uint32_t p : spec.primes) {
    const std::string pp = "p=" + std::to_string(p);
    const unsigned long long units = p - 1;
    {
      const auto census = classify_homog_2local_fp(PresentationKind::VirtualTriplet, p);
      std::size_t omega1_count = 0, omega2_count = 0;
      for (const CensusSolution& s : census.solutions) {
        if (s.family == "omega1") ++omega1_count;
        if (s.family == "omega2") ++omega2_count;
      }
      const bool ok = census.all_matched() &&
                      omega1_count == units * units && omega2_count == units &&
                      census.solutions.size() == units * units + units &&
                      census_solutions_reverify(census);
      report.checks.push_back(
          make_record("homog_virtual_census", pp, ok, census_to_json(census)));
    }
    {
      const auto census = classify_homog_2local_fp(PresentationKind::WeldedTriplet, p);
      const bool only_omega1 = std::all_of(
          census.solutions.begin(), census.solutions.end(),
          [](const CensusSolution& s) { return s.family == "omega1"; });
      const bool ok = only_omega1 && census.solutions.size() == units * units &&
                      census_solutions_reverify(census);
      report.checks.push_back(
          make_record("homog_welded_census", pp, ok, census_to_json(census)));
    }
  }
}

}  // namespace

bool suite_name_valid(const std::string& name) {
  static const std::set<std::string> names{"tits",        "mu",  "two-local",
                                           "l3-families", "extensions", "all"};
  return names.count(name) > 0;
}

VerificationReport run_suite(const SuiteSpec& spec) {
  VerificationReport report;
  report.suite = spec.suite;
  if (!suite_name_valid(spec.suite)) {
    report.checks.push_back({"suite_lookup", "suite=" + spec.suite, "error",
                             {{"message", "unknown suite"}}});
    return report;
  }
  try {
    if (spec.suite == "tits" || spec.suite == "all") add_tits(report, spec);
    if (spec.suite == "mu" || spec.suite == "all") add_mu(report, spec);
    if (spec.suite == "two-local" || spec.suite == "all") add_two_local(report, spec);
    if (spec.suite == "l3-families" || spec.suite == "all") add_l3_families(report, spec);
    if (spec.suite == "extensions" || spec.suite == "all") add_extensions(report, spec);
  } catch (const std::exception& e) {
    report.checks.push_back(
        {"internal_error", "", "error", {{"message", std::string(e.what())}}});
  }
  return report;
}

}  // namespace triplet
