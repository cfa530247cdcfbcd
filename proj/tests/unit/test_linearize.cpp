#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "synapper/synapper.hpp"

namespace synapper {
namespace {

using testing::fixture;
using testing::fixture_names;
using testing::profile;

std::vector<Token> sorted_tokens(const LinearSentence& s) {
  std::vector<Token> out;
  for (const auto& t : s.tokens) out.push_back(t.token);
  std::sort(out.begin(), out.end());
  return out;
}

LanguageProfile with_order(WordOrder w, VerbPlacement v = VerbPlacement::Default) {
  auto p = default_profile(w);
  p.verb_placement = v;
  return p;
}

TEST(DirectionOf, AllSixOrders) {
  EXPECT_EQ(direction_of(WordOrder::SVO), Direction::Clockwise);
  EXPECT_EQ(direction_of(WordOrder::VOS), Direction::Clockwise);
  EXPECT_EQ(direction_of(WordOrder::OSV), Direction::Clockwise);
  EXPECT_EQ(direction_of(WordOrder::SOV), Direction::Counterclockwise);
  EXPECT_EQ(direction_of(WordOrder::OVS), Direction::Counterclockwise);
  EXPECT_EQ(direction_of(WordOrder::VSO), Direction::Counterclockwise);
}

TEST(Linearize, HorseEnglish) {
  EXPECT_EQ(linearize(fixture("horse"), profile("en")).text(), "Jane has a very fast brown horse");
}

TEST(Linearize, HorseFrenchReadsAdjectivesAfterTheNode) {
  EXPECT_EQ(linearize(fixture("horse"), profile("fr")).text(), "Jane has a horse brown very fast");
}

TEST(Linearize, HorseJapaneseGlossKeepsDeterminerBeforeRules) {
  EXPECT_EQ(linearize(fixture("horse"), profile("ja-gloss")).text(), "Jane a very fast brown horse has");
}

TEST(Linearize, HorseWelshGlossBeforeRules) {
  EXPECT_EQ(linearize(fixture("horse"), profile("cy-gloss")).text(), "has Jane a horse brown very fast");
}

TEST(Linearize, TimReadings) {
  const auto tim = fixture("tim");
  EXPECT_EQ(linearize(tim, profile("en")).text(), "Tim is going to the hospital");
  EXPECT_EQ(linearize(tim, profile("ja-gloss")).text(), "Tim the hospital to going is");
  EXPECT_EQ(sentence_case(linearize(tim, profile("vso"))), "Is Tim the hospital to going");
  EXPECT_EQ(sentence_case(linearize(tim, profile("cy-gloss"))), "Is Tim going to the hospital");
}

TEST(Linearize, ColetteNestedLoopsFollowTheMainDirection) {
  const auto colette = fixture("colette");
  EXPECT_EQ(linearize(colette, profile("ja-gloss")).text(), "Colette Willy was that the fact a big secret was");
  EXPECT_EQ(sentence_case(linearize(colette, profile("cy-gloss"))),
            "Was the fact that Colette was Willy a big secret");
  EXPECT_EQ(sentence_case(linearize(colette, profile("en"))), "The fact that Colette was Willy was a big secret");
}

TEST(Linearize, SingleConstituent) {
  for (auto w : kAllWordOrders)
    for (auto v : {VerbPlacement::Default, VerbPlacement::V1, VerbPlacement::V2})
      EXPECT_EQ(linearize(fixture("go"), with_order(w, v)).text(), "Go");
}

TEST(Linearize, ObjectInitialStartsAtFirstObjectClockwiseFromSubject) {
  const auto tim = fixture("tim");
  EXPECT_EQ(linearize(tim, with_order(WordOrder::OSV)).text(), "going to the hospital Tim is");
  EXPECT_EQ(linearize(tim, with_order(WordOrder::OVS)).text(), "going is Tim the hospital to");
}

TEST(Linearize, VerbSecondMovesVerbAfterOneConstituent) {
  const auto horse = fixture("horse");
  EXPECT_EQ(linearize(horse, with_order(WordOrder::SOV, VerbPlacement::V2)).text(),
            "Jane has a very fast brown horse");
  EXPECT_EQ(linearize(horse, with_order(WordOrder::VSO, VerbPlacement::V2)).text(),
            "Jane has a very fast brown horse");
  EXPECT_EQ(linearize(horse, with_order(WordOrder::OSV, VerbPlacement::V2)).text(),
            "a very fast brown horse has Jane");
}

TEST(Linearize, SubjectFinalSurfaceAndNormalization) {
  const auto mary = fixture("mary");
  EXPECT_EQ(linearize(mary, with_order(WordOrder::SOV)).text(), "chocolate loves Mary");
  EXPECT_EQ(linearize(normalize_subject_position(mary), with_order(WordOrder::SOV)).text(), "Mary chocolate loves");
}

TEST(Linearize, PostBranchesMixedOrders) {
  auto p = default_profile(WordOrder::SVO);
  p.branch_rules = {{Category::ADJ, Side::Post, PostOrder::SourceOrder},
                    {Category::ADJP, Side::Post, PostOrder::Reversed},
                    {Category::DET, Side::Post, PostOrder::Reversed}};
  // branches: a(DET,0) very fast(ADJP,1) brown(ADJ,2)
  EXPECT_EQ(linearize(fixture("horse"), p).text(), "Jane has horse very fast a brown");
}

TEST(Linearize, TokensCarryProvenance) {
  const auto s = linearize(fixture("horse"), profile("en"));
  ASSERT_EQ(s.tokens.size(), 7u);
  EXPECT_EQ(s.tokens[0].role, Role::Subject);
  EXPECT_EQ(s.tokens[1].role, Role::Verb);
  EXPECT_EQ(s.tokens[2].origin, Origin::Branch);
  EXPECT_EQ(s.tokens[6].origin, Origin::Node);
  EXPECT_EQ(s.tokens[6].block, 2);
  EXPECT_EQ(s.profile_name, "en");
  EXPECT_EQ(s.word_order, WordOrder::SVO);
}

// --- properties -----------------------------------------------------------

TEST(Properties, PermutationInvarianceOnFixtures) {
  for (const auto& name : fixture_names()) {
    const auto s = fixture(name);
    const auto expected = token_multiset(s);
    for (auto w : kAllWordOrders)
      for (auto v : {VerbPlacement::Default, VerbPlacement::V1, VerbPlacement::V2}) {
        EXPECT_EQ(sorted_tokens(linearize(s, with_order(w, v))), expected) << name;
      }
    for (const auto& p : {"en", "fr", "vso"}) EXPECT_EQ(sorted_tokens(linearize(s, profile(p))), expected);
  }
}

TEST(Properties, PermutationInvarianceOnGeneratedStructures) {
  testing::StructureGenerator gen(2024);
  for (int i = 0; i < 300; ++i) {
    const auto s = gen.next();
    const auto p = gen.profile();
    EXPECT_EQ(sorted_tokens(linearize(s, p)), token_multiset(s)) << canonical_form(s);
  }
}

TEST(Properties, DirectionReversalOnRings) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t c = 0; c < n; ++c)
      EXPECT_EQ(ring_visit_order(n, c, Direction::Counterclockwise),
                testing::reversed_visit(ring_visit_order(n, c, Direction::Clockwise)));
}

Synapper random_ring(testing::StructureGenerator& gen, int size) {
  Loop main;
  std::vector<Role> roles = {Role::Subject, Role::Verb};
  while (static_cast<int>(roles.size()) < size) roles.push_back(Role::Object);
  std::shuffle(roles.begin(), roles.end(), gen.rng());
  for (std::size_t i = 0; i < roles.size(); ++i)
    main.members.push_back({roles[i], std::vector<Token>{{"t" + std::to_string(i), Category::N}}, {}});
  return Synapper::make(std::move(main), WordOrder::SVO);
}

TEST(Properties, DirectionReversalAtTopLevel) {
  std::vector<Synapper> pool;
  for (const auto& name : fixture_names()) pool.push_back(fixture(name));
  testing::StructureGenerator gen(99);
  for (int i = 0; i < 100; ++i) pool.push_back(random_ring(gen, gen.uniform(2, 8)));

  for (const auto& s : pool)
    for (auto w : kAllWordOrders) {
      const auto visit = top_level_visit(s, w);
      ASSERT_FALSE(visit.empty());
      const auto forward = testing::clockwise_visit(s.main().members.size(), visit.front());
      const auto want = direction_of(w) == Direction::Clockwise ? forward : testing::reversed_visit(forward);
      EXPECT_EQ(visit, want) << s.label() << " " << to_string(w);

      // linearize emits whole blocks in visit order when nothing moves
      const auto plain = s.surface_subject_final() ? s.with_surface_subject_final(false) : s;
      const auto sentence = linearize(plain, default_profile(w));
      std::vector<Role> emitted;
      int last_block = -1;
      for (const auto& t : sentence.tokens) {
        EXPECT_GE(t.block, last_block);
        if (t.block != last_block) emitted.push_back(*t.role);
        last_block = t.block;
      }
      ASSERT_EQ(emitted.size(), visit.size());
      for (std::size_t k = 0; k < visit.size(); ++k) EXPECT_EQ(emitted[k], s.main().members[visit[k]].role);
    }
}

// Orders sharing a start role read the same ring in opposite directions.
TEST(Properties, OppositeOrdersReverseWhenStartsAgree) {
  const std::pair<WordOrder, WordOrder> pairs[] = {
      {WordOrder::SVO, WordOrder::SOV}, {WordOrder::VOS, WordOrder::VSO}, {WordOrder::OSV, WordOrder::OVS}};
  for (const auto& name : {"horse", "tim", "colette", "cena_a", "korean_case"}) {
    const auto s = fixture(name);
    for (const auto& [cw, ccw] : pairs)
      EXPECT_EQ(top_level_visit(s, ccw), testing::reversed_visit(top_level_visit(s, cw))) << name;
  }
}

std::vector<std::string> verb_to_front(const LinearSentence& s) {
  std::vector<std::string> verb, rest;
  for (const auto& t : s.tokens) (t.role == Role::Verb ? verb : rest).push_back(t.token.surface);
  verb.insert(verb.end(), rest.begin(), rest.end());
  return verb;
}

TEST(Properties, VerbInitialEqualsVerbRelocatedToFront) {
  std::vector<Synapper> pool;
  for (const auto& name : fixture_names()) pool.push_back(fixture(name));
  testing::StructureGenerator gen(5);
  for (int i = 0; i < 200; ++i) pool.push_back(gen.next());
  for (const auto& s : pool) {
    const auto v1 = linearize(s, with_order(WordOrder::SVO, VerbPlacement::V1));
    const auto plain = linearize(s, with_order(WordOrder::SVO));
    EXPECT_EQ(v1.surfaces(), verb_to_front(plain)) << canonical_form(s);
  }
}

TEST(Properties, Deterministic) {
  testing::StructureGenerator gen(3);
  for (int i = 0; i < 50; ++i) {
    const auto s = gen.next();
    const auto p = gen.profile();
    EXPECT_EQ(linearize(s, p).tokens, linearize(s, p).tokens);
  }
}

TEST(Properties, SixOrdersShareTokensAndSvoDiffersFromSov) {
  for (const auto& name : fixture_names()) {
    const auto s = fixture(name);
    std::vector<std::vector<std::string>> readings;
    for (auto w : kAllWordOrders) {
      const auto r = linearize(s, default_profile(w));
      EXPECT_EQ(sorted_tokens(r), token_multiset(s));
      readings.push_back(r.surfaces());
    }
    if (s.main().members.size() > 1) {
      EXPECT_NE(readings[0], readings[1]) << name;
    }
  }
}

}  // namespace
}  // namespace synapper
