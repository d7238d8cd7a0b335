#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "support/oracles.hpp"
#include "triplet/reps.hpp"

using namespace triplet;

namespace {

GroupWord w(const std::string& text) {
  GroupWord out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto next = text.find(' ', pos);
    if (next == std::string::npos) next = text.size();
    std::string tok = text.substr(pos, next - pos);
    int exp = 1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      exp = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    out = out * GroupWord::gen(tok, exp);
    pos = next + 1;
  }
  return out;
}

int count_tag_prefix(const Presentation& p, const std::string& prefix) {
  int count = 0;
  for (const Relation& r : p.relations)
    if (r.tag.rfind(prefix, 0) == 0) ++count;
  return count;
}

std::set<std::string> tag_families(const Presentation& p) {
  std::set<std::string> fams;
  for (const Relation& r : p.relations) fams.insert(r.tag.substr(0, r.tag.find(' ')));
  return fams;
}

}  // namespace

TEST_CASE("group words") {
  CHECK(GroupWord::gen("l1").pow(2).to_string() == "l1 l1");
  CHECK(w("l1 r2^-1").to_string() == "l1 r2^-1");
  CHECK(GroupWord().to_string() == "1");
  CHECK(w("l1 l2").inverse() == w("l2^-1 l1^-1"));
  CHECK(GroupWord::gen("l1").pow(0) == GroupWord());
  CHECK_THROWS_AS(GroupWord::gen("l1", 3), DomainViolation);
}

TEST_CASE("presentation catalog shapes") {
  const Presentation t4 = presentation_of(PresentationKind::Triplet, 4);
  CHECK(t4.generators == std::vector<std::string>{"l1", "l2", "l3"});
  CHECK(count_tag_prefix(t4, "inv") == 3);
  CHECK(count_tag_prefix(t4, "braid") == 2);
  CHECK(count_tag_prefix(t4, "comm") == 0);
  CHECK(t4.relations.size() == 5);

  const Presentation t2 = presentation_of(PresentationKind::Triplet, 2);
  CHECK(t2.generators.size() == 1);
  CHECK(t2.relations.size() == 1);
  CHECK(t2.relations[0].tag == "inv l1");

  const Presentation vt3 = presentation_of(PresentationKind::VirtualTriplet, 3);
  CHECK(vt3.generators == std::vector<std::string>{"l1", "l2", "r1", "r2"});
  CHECK(tag_families(vt3) == std::set<std::string>{"inv", "braid", "mixed"});

  CHECK(tag_families(presentation_of(PresentationKind::Triplet, 5)) ==
        std::set<std::string>{"inv", "braid"});
  CHECK(tag_families(presentation_of(PresentationKind::VirtualTriplet, 5)) ==
        std::set<std::string>{"inv", "braid", "comm", "mixed"});
  CHECK(tag_families(presentation_of(PresentationKind::WeldedTriplet, 5)) ==
        std::set<std::string>{"inv", "braid", "comm", "mixed", "welded"});
  CHECK(tag_families(presentation_of(PresentationKind::Braid, 5)) ==
        std::set<std::string>{"braid", "comm"});
  CHECK(tag_families(presentation_of(PresentationKind::VirtualBraid, 5)) ==
        std::set<std::string>{"inv", "braid", "comm", "mixed"});
  CHECK(tag_families(presentation_of(PresentationKind::WeldedBraid, 5)) ==
        std::set<std::string>{"inv", "braid", "comm", "mixed", "welded"});
  CHECK(tag_families(presentation_of(PresentationKind::SymmetricCoxeter, 5)) ==
        std::set<std::string>{"inv", "braid", "comm"});

  CHECK_THROWS_AS(presentation_of(PresentationKind::Triplet, 1), UnsupportedN);
}

TEST_CASE("mixed far commutativity covers both orientations") {
  const Presentation vt4 = presentation_of(PresentationKind::VirtualTriplet, 4);
  std::set<std::string> tags;
  for (const Relation& r : vt4.relations) tags.insert(r.tag);
  CHECK(tags.count("comm l1 r3") == 1);
  CHECK(tags.count("comm l3 r1") == 1);
  CHECK(tags.count("comm r1 r3") == 1);
  CHECK(tags.count("comm l1 l3") == 0);
}

TEST_CASE("pure braid generator words") {
  const Presentation pb = presentation_of(PresentationKind::PureBraidGens, 3);
  CHECK(pb.relations.empty());
  CHECK(std::find(pb.generators.begin(), pb.generators.end(), "a13") != pb.generators.end());

  CHECK(pure_braid_generator(1, 2, 3) == w("s1 s1"));
  CHECK(pure_braid_generator(1, 3, 3) == w("s2 s1 s1 s2^-1"));
  CHECK(pure_braid_generator(2, 4, 4) == w("s3 s2 s2 s3^-1"));
  CHECK_THROWS_AS(pure_braid_generator(2, 1, 3), IndexOrder);
  CHECK_THROWS_AS(pure_braid_generator(1, 5, 3), PositionOutOfRange);
}

TEST_CASE("word evaluation on the Laurent matrix representation") {
  const RepCandidate<LaurentPoly> mu = mu_matrix(3, MuExp::symbolic());
  const LaurentPoly z(0), one(1);
  auto s = [](int e) { return LaurentPoly::variable("s", e); };
  const Matrix<LaurentPoly> expect = Matrix<LaurentPoly>::from_rows(
      {{z, z, s(2)}, {s(-1), z, z}, {z, s(-1), z}});
  CHECK(word_eval(mu, w("l1 l2")) == expect);
  CHECK(word_eval(mu, GroupWord()) == Matrix<LaurentPoly>::identity(3, one));
  CHECK(word_eval(mu, w("l1^-1")) == word_eval(mu, w("l1")));
}

TEST_CASE("word evaluation is multiplicative") {
  const RepCandidate<LaurentPoly> mu = mu_matrix(4, MuExp::concrete(1));
  const std::vector<std::string> labels = mu.presentation.generators;
  for (int trial = 0; trial < 200; ++trial) {
    GroupWord a, b;
    for (int i = 0, n = static_cast<int>(oracles::random_int(0, 4)); i < n; ++i)
      a = a * GroupWord::gen(labels[static_cast<std::size_t>(
          oracles::random_int(0, static_cast<long long>(labels.size()) - 1))]);
    for (int i = 0, n = static_cast<int>(oracles::random_int(0, 4)); i < n; ++i)
      b = b * GroupWord::gen(labels[static_cast<std::size_t>(
          oracles::random_int(0, static_cast<long long>(labels.size()) - 1))]);
    CHECK(word_eval(mu, a * b) == word_eval(mu, a) * word_eval(mu, b));
  }
}

TEST_CASE("word evaluation error paths") {
  RepCandidate<Rational> partial;
  partial.presentation = presentation_of(PresentationKind::Triplet, 3);
  partial.images.emplace("l1", transposition_matrix(3, 1));
  CHECK_THROWS_AS(word_eval(partial, w("l2")), UnassignedGenerator);

  RepCandidate<Rational> shear;
  shear.presentation = presentation_of(PresentationKind::Triplet, 2);
  shear.images.emplace("l1", Matrix<Rational>::from_rows(
                                 {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}}));
  CHECK_THROWS_AS(word_eval(shear, w("l1^-1")), NotInvertibleImage);
  CHECK(word_eval(shear, w("l1")).at(0, 1) == Rational(1));
}

TEST_CASE("relation checking") {
  CHECK(all_relations_pass(tits_theta(5)));

  RepCandidate<Rational> bad;
  bad.presentation = presentation_of(PresentationKind::Triplet, 3);
  const Matrix<Rational> block =
      Matrix<Rational>::diagonal({Rational(1), Rational(-1)});
  bad.images.emplace("l1", block_embed(3, 1, block));
  bad.images.emplace("l2", block_embed(3, 2, block));
  const auto checks = check_relations(bad);
  for (const RelationCheck& c : checks) {
    if (c.tag.rfind("braid", 0) == 0)
      CHECK_FALSE(c.passed);
    else
      CHECK(c.passed);
  }

  const auto w2 = omega(3, 2, Rational(5), Rational(5));
  const auto welded = check_relations(
      with_presentation(w2, presentation_of(PresentationKind::WeldedTriplet, 3)));
  for (const RelationCheck& c : welded)
    CHECK(c.passed == (c.tag.rfind("welded", 0) != 0));
}

TEST_CASE("image closure of the rank-3 matrix representation lists six images") {
  const RepCandidate<LaurentPoly> mu = mu_matrix(3, MuExp::symbolic());
  const auto closure = image_closure(mu, 100);
  CHECK(closure.size() == 6);

  auto s = [](int e) { return LaurentPoly::variable("s", e); };
  const LaurentPoly z(0), one(1);
  const std::vector<Matrix<LaurentPoly>> expected{
      Matrix<LaurentPoly>::identity(3, one),
      Matrix<LaurentPoly>::from_rows({{z, s(1), z}, {s(-1), z, z}, {z, z, one}}),
      Matrix<LaurentPoly>::from_rows({{one, z, z}, {z, z, s(1)}, {z, s(-1), z}}),
      Matrix<LaurentPoly>::from_rows({{z, z, s(2)}, {s(-1), z, z}, {z, s(-1), z}}),
      Matrix<LaurentPoly>::from_rows({{z, s(1), z}, {z, z, s(1)}, {s(-2), z, z}}),
      Matrix<LaurentPoly>::from_rows({{z, z, s(2)}, {z, one, z}, {s(-2), z, z}})};
  for (const auto& m : expected)
    CHECK(std::find(closure.begin(), closure.end(), m) != closure.end());
}

TEST_CASE("image closure sizes and caps") {
  CHECK(image_closure(mu_matrix(4, MuExp::concrete(1)), 100).size() == 24);

  RepCandidate<Rational> trivial;
  trivial.presentation = presentation_of(PresentationKind::Triplet, 3);
  trivial.images.emplace("l1", Matrix<Rational>::identity(2, Rational(1)));
  trivial.images.emplace("l2", Matrix<Rational>::identity(2, Rational(1)));
  CHECK(image_closure(trivial, 10).size() == 1);

  CHECK_THROWS_AS(image_closure(mu_matrix(3, MuExp::concrete(1)), 3), CapExceeded);
  // The faithful integral representation generates an infinite group at
  // rank 4, so a small cap must trip.
  CHECK_THROWS_AS(image_closure(tits_theta(4), 200), CapExceeded);
}

TEST_CASE("kernel witness search") {
  const auto witness = kernel_witness_search(mu_matrix(4, MuExp::concrete(1)),
                                             tits_theta(4), 8);
  REQUIRE(witness.has_value());
  CHECK(witness->to_string() == "l1 l3 l1 l3");

  CHECK_FALSE(kernel_witness_search(tits_theta(3), tits_theta(3), 6).has_value());

  CHECK_THROWS_AS(kernel_witness_search(mu_matrix(4, MuExp::concrete(1)),
                                        tits_theta(3), 4),
                  UnsupportedPresentation);
}

TEST_CASE("symmetric group projections") {
  const auto std3 = sn_projection(ProjectionKind::standard,
                                  presentation_of(PresentationKind::Triplet, 3));
  CHECK(std3.image("l1") == transposition_matrix(3, 1));
  for (int n = 2; n <= 7; ++n)
    CHECK(all_relations_pass(sn_projection(
        ProjectionKind::standard, presentation_of(PresentationKind::Triplet, n))));

  const auto forget = sn_projection(
      ProjectionKind::forget_ell, presentation_of(PresentationKind::VirtualTriplet, 3));
  CHECK(forget.image("l1") == Matrix<Rational>::identity(3, Rational(1)));
  const Matrix<Rational> img = word_eval(forget, w("l1 r2 l1 r2 l1 r2"));
  CHECK(img == transposition_matrix(3, 2));
  CHECK_FALSE(img.is_identity());

  CHECK(all_relations_pass(sn_projection(
      ProjectionKind::forget_ell, presentation_of(PresentationKind::VirtualTriplet, 4))));

  CHECK_THROWS_AS(sn_projection(ProjectionKind::standard,
                                presentation_of(PresentationKind::Braid, 3)),
                  UnsupportedPresentation);
}

TEST_CASE("projection closure has factorial order") {
  for (int n = 2; n <= 6; ++n) {
    const auto proj = sn_projection(ProjectionKind::standard,
                                    presentation_of(PresentationKind::Triplet, n));
    std::size_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= static_cast<std::size_t>(i);
    CHECK(image_closure(proj, 1000).size() == factorial);
  }
}

TEST_CASE("small group element lists") {
  CHECK(triplet_group_elements(2).size() == 2);
  const auto elems = triplet_group_elements(3);
  CHECK(elems.size() == 6);
  const std::set<GroupWord> unique(elems.begin(), elems.end());
  CHECK(unique.size() == 6);
  CHECK_THROWS_AS(triplet_group_elements(4), UnsupportedN);
}

TEST_CASE("candidate validation") {
  RepCandidate<Rational> rep = tits_theta(4);
  CHECK_NOTHROW(rep.validate());
  rep.images.erase("l2");
  CHECK_THROWS_AS(rep.validate(), UnassignedGenerator);
}
