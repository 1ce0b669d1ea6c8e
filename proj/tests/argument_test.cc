#include <gtest/gtest.h>

#include <random>

#include "bbgp/argument.hpp"
#include "oracles.hpp"
#include "rescue_fixture.hpp"

using namespace bbgp;

namespace {

const Argument* by_claim_and_rule(const std::vector<Argument>& pool, const std::string& claim, const std::string& rule) {
  const Literal c = parse_literal(claim);
  for (const Argument& a : pool) {
    if (a.claim != c) continue;
    const Step& last = a.support.last();
    if ((last.is_fact() && rule.empty()) || (!last.is_fact() && last.rule->origin == rule)) return &a;
  }
  return nullptr;
}

std::set<Literal> goals_of(const std::vector<Argument>& args) {
  std::set<Literal> out;
  for (const Argument& a : args) out.insert(*a.goal);
  return out;
}

}  // namespace

class RescueArguments : public ::testing::Test {
 protected:
  void SetUp() override {
    theory = fixture::rescue_theory();
    epistemic = build_epistemic(theory);
    candidates = activation_candidates(theory);
    activation = build_stage(theory, Stage::activation, candidates);
  }
  Theory theory;
  std::vector<Argument> epistemic;
  std::set<Literal> candidates;
  std::vector<Argument> activation;
};

TEST_F(RescueArguments, EpistemicPoolContainsInjuryAndBedArguments) {
  const Argument* a7 = by_claim_and_rule(epistemic, "injured_severe(man_32)", "r_st2");
  ASSERT_NE(a7, nullptr);
  EXPECT_EQ(a7->support.facts(), std::set<Literal>{parse_literal("has_fract_bone(man_32)")});
  const Argument* a8 = by_claim_and_rule(epistemic, "~injured_severe(man_32)", "r_st3");
  ASSERT_NE(a8, nullptr);
  EXPECT_EQ(a8->support.facts(), std::set<Literal>{parse_literal("fract_bone(man_32, arm)")});
  const Argument* a11 = by_claim_and_rule(epistemic, "available(bed, man_32)", "r_st1");
  ASSERT_NE(a11, nullptr);
  EXPECT_EQ(a11->support.facts(), std::set<Literal>{parse_literal("new_supply(bed, man_32)")});
}

TEST_F(RescueArguments, EpistemicPoolIsFactsPlusFourDerived) {
  EXPECT_EQ(epistemic.size(), 12u + 4u);
  for (const Argument& a : epistemic) {
    EXPECT_TRUE(a.is_epistemic());
    EXPECT_FALSE(a.goal.has_value());
    for (const Step& s : a.support.steps())
      if (!s.is_fact()) EXPECT_EQ(s.rule->kind, RuleKind::standard);
  }
  EXPECT_TRUE(std::is_sorted(epistemic.begin(), epistemic.end(),
                             [](const Argument& x, const Argument& y) { return x.id < y.id; }));
}

TEST(Arguments, EmptyTheoryHasNoArguments) { EXPECT_TRUE(build_epistemic(Theory{}).empty()); }

TEST_F(RescueArguments, ActivationCandidatesComeOnlyFromRuleHeads) {
  EXPECT_EQ(candidates, (std::set<Literal>{fixture::g1(), fixture::g2(), fixture::g3()}));
}

TEST_F(RescueArguments, FourActivationArguments) {
  ASSERT_EQ(activation.size(), 4u);
  EXPECT_EQ(goals_of(activation), candidates);
  int hospital = 0;
  for (const Argument& a : activation) {
    EXPECT_EQ(a.category, Category::activation);
    EXPECT_EQ(a.claim, *a.goal);
    EXPECT_EQ(a.support.last().rule->kind, RuleKind::activation);
    if (a.claim == fixture::g2()) ++hospital;
  }
  EXPECT_EQ(hospital, 2);
}

TEST_F(RescueArguments, ReconstructedHospitalSupports) {
  std::set<std::vector<std::string>> shapes;
  for (const Argument& a : activation) {
    if (a.claim != fixture::g2()) continue;
    std::vector<std::string> steps;
    for (const Step& s : a.support.steps()) steps.push_back(s.is_fact() ? "fact" : s.rule->origin);
    shapes.insert(steps);
  }
  EXPECT_EQ(shapes, (std::set<std::vector<std::string>>{{"fact", "r_st2", "r_ac1"}, {"fact", "r_st4", "r_ac1"}}));
}

TEST_F(RescueArguments, DeliberationArgumentFromMostValuable) {
  const auto de = build_stage(theory, Stage::deliberation, {fixture::g1(), fixture::g2()});
  ASSERT_EQ(de.size(), 1u);
  EXPECT_EQ(de[0].claim, chosen_literal(fixture::g2()));
  EXPECT_EQ(*de[0].goal, fixture::g2());
  EXPECT_EQ(de[0].support.last().rule->origin, "r_de2");
  EXPECT_EQ(de[0].support.facts(), std::set<Literal>{parse_literal("most_valuable('take_hospital(man_32)')")});
}

TEST_F(RescueArguments, NoCandidatesNoStageArguments) {
  EXPECT_TRUE(build_stage(theory, Stage::evaluation, {}).empty());
}

TEST_F(RescueArguments, EvaluationArgumentClaimsComplement) {
  const auto ev = build_stage(theory, Stage::evaluation, {fixture::g1(), fixture::g2()});
  ASSERT_EQ(ev.size(), 1u);
  EXPECT_EQ(ev[0].claim, fixture::g2().complement());
  EXPECT_EQ(ev[0].support.last().rule->origin, "r_ev2");
}

TEST_F(RescueArguments, SubArguments) {
  const Argument* a7 = by_claim_and_rule(epistemic, "injured_severe(man_32)", "r_st2");
  const Argument* a2 = by_claim_and_rule(epistemic, "has_fract_bone(man_32)", "");
  auto subs = sub_arguments(*a7, epistemic);
  std::set<std::string> ids;
  for (const Argument* s : subs) ids.insert(s->id);
  EXPECT_EQ(ids, (std::set<std::string>{a2->id, a7->id}));

  EXPECT_EQ(sub_arguments(*a2, epistemic).size(), 1u);

  const Argument* ac2 = nullptr;
  for (const Argument& a : activation)
    for (const GroundRule& r : a.support.defeasible())
      if (r.origin == "r_st2") ac2 = &a;
  ASSERT_NE(ac2, nullptr);
  std::set<std::string> ac2_subs;
  for (const Argument* s : sub_arguments(*ac2, epistemic)) ac2_subs.insert(s->id);
  EXPECT_TRUE(ac2_subs.count(a2->id));
  EXPECT_TRUE(ac2_subs.count(a7->id));

  // brute force: every epistemic argument whose three sets are contained
  std::set<std::string> brute;
  for (const Argument& b : epistemic) {
    auto within = [](const auto& x, const auto& y) { return std::includes(y.begin(), y.end(), x.begin(), x.end()); };
    if (within(b.support.facts(), ac2->support.facts()) && within(b.support.strict(), ac2->support.strict()) &&
        within(b.support.defeasible(), ac2->support.defeasible()))
      brute.insert(b.id);
  }
  EXPECT_EQ(ac2_subs, brute);
}

TEST_F(RescueArguments, ActivationAttacks) {
  std::vector<Argument> pool = epistemic;
  pool.insert(pool.end(), activation.begin(), activation.end());
  const auto attacks = compute_attacks(pool);
  auto id = [&](const std::string& claim, const std::string& rule) { return by_claim_and_rule(pool, claim, rule)->id; };
  const std::string a7 = id("injured_severe(man_32)", "r_st2");
  const std::string a8 = id("~injured_severe(man_32)", "r_st3");
  const std::string a9 = id("injured_severe(man_32)", "r_st4");
  auto has = [&](const std::string& x, const std::string& y) {
    return std::find(attacks.begin(), attacks.end(), Attack{x, y}) != attacks.end();
  };
  EXPECT_TRUE(has(a7, a8));
  EXPECT_TRUE(has(a8, a7));
  EXPECT_TRUE(has(a9, a8));
  EXPECT_FALSE(has(a8, a9)) << "a strict claim is not rebutted by a defeasible one";

  std::map<std::string, std::set<std::string>> mixed;
  for (const Attack& at : attacks) {
    const Argument* t = nullptr;
    for (const Argument& a : activation)
      if (a.id == at.target) t = &a;
    if (!t) continue;
    EXPECT_EQ(at.relation, Relation::mx);
    EXPECT_EQ(at.flavor, Flavor::undercut);
    mixed[to_string(t->claim)].insert(at.attacker);
  }
  EXPECT_EQ(mixed["take_hospital(man_32)"], std::set<std::string>{a8});
  EXPECT_EQ(mixed["send_shelter(man_32)"], (std::set<std::string>{a7, a9}));
  EXPECT_EQ(mixed.count("go(2, 6)"), 0u);
}

TEST_F(RescueArguments, EvaluationUndercut) {
  std::vector<Argument> pool = epistemic;
  const auto ev = build_stage(theory, Stage::evaluation, {fixture::g2()});
  pool.insert(pool.end(), ev.begin(), ev.end());
  const auto attacks = compute_attacks(pool);
  const std::string a11 = by_claim_and_rule(pool, "available(bed, man_32)", "r_st1")->id;
  const std::string a6 = by_claim_and_rule(pool, "~available(bed, man_32)", "")->id;
  auto find = [&](const std::string& x, const std::string& y) {
    return std::find(attacks.begin(), attacks.end(), Attack{x, y});
  };
  ASSERT_NE(find(a11, ev[0].id), attacks.end());
  EXPECT_EQ(find(a11, ev[0].id)->flavor, Flavor::undercut);
  ASSERT_NE(find(a6, a11), attacks.end());
  EXPECT_EQ(find(a6, a11)->flavor, Flavor::rebut);
  ASSERT_NE(find(a11, a6), attacks.end());
}

TEST(Attacks, UnrelatedFactsDoNotAttack) {
  const Theory t = parse_theory("fact a: p(x).\nfact b: q(y).");
  EXPECT_TRUE(compute_attacks(build_epistemic(t)).empty());
}

TEST(Attacks, AttackersAreEpistemicAndConditionsHold) {
  const Theory t = fixture::rescue_theory();
  std::vector<Argument> pool = build_epistemic(t);
  for (Stage s : kStages) {
    std::set<Literal> goals = activation_candidates(t);
    auto stage_args = build_stage(t, s, goals);
    pool.insert(pool.end(), stage_args.begin(), stage_args.end());
  }
  std::map<std::string, const Argument*> by_id;
  for (const Argument& a : pool) by_id[a.id] = &a;
  for (const Attack& at : compute_attacks(pool)) {
    const Argument& x = *by_id.at(at.attacker);
    const Argument& y = *by_id.at(at.target);
    EXPECT_TRUE(x.is_epistemic());
    EXPECT_EQ(at.relation, y.is_epistemic() ? Relation::ep : Relation::mx);
    if (at.flavor == Flavor::rebut) {
      EXPECT_TRUE(y.is_epistemic());
      EXPECT_TRUE(x.claim.is_complement_of(y.claim));
    } else {
      const auto premises = y.is_epistemic() ? y.support.facts() : y.support.seq();
      EXPECT_TRUE(premises.count(x.claim.complement()));
    }
  }
}

TEST(Attacks, RebutIsSymmetricBetweenEqualStrengths) {
  std::mt19937 rng(99);
  int rebuts_seen = 0;
  for (int i = 0; i < 300; ++i) {
    const Theory t = oracle::random_standard_theory(rng, 6, 8);
    const auto pool = build_epistemic(t);
    for (const Argument& a : pool)
      for (const Argument& b : pool) {
        if (!rebuts(a, b)) continue;
        ++rebuts_seen;
        if (a.has_strict_claim() == b.has_strict_claim()) EXPECT_TRUE(rebuts(b, a));
        else EXPECT_TRUE(a.has_strict_claim());
      }
  }
  EXPECT_GT(rebuts_seen, 0);
}

TEST(ArgumentIds, ContentAddressedAndStable) {
  const auto a = build_epistemic(fixture::rescue_theory());
  const auto b = build_epistemic(parse_theory(serialize_theory(fixture::rescue_theory())));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].id, make_argument_id(a[i].category, canonical_text(a[i])));
    EXPECT_EQ(a[i].id.rfind("ep:", 0), 0u);
    EXPECT_EQ(a[i].id.size(), 3u + 12u);
  }
}
