#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "neuroforage/errors.hpp"
#include "neuroforage/experiments/batch.hpp"
#include "neuroforage/experiments/blueprint.hpp"
#include "neuroforage/experiments/output.hpp"
#include "neuroforage/experiments/presets.hpp"
#include "neuroforage/experiments/scenario.hpp"
#include "neuroforage/experiments/simulation.hpp"

using namespace neuroforage;
using namespace neuroforage::experiments;
namespace gn = neuroforage::experiments::group_names;

namespace {

std::string csv_of(const TrialLog& log) {
  std::ostringstream o;
  write_trial_csv(o, log);
  write_pose_csv(o, log);
  write_weights_csv(o, log);
  return o.str();
}

ScenarioConfig shortened(ScenarioConfig c, double seconds) {
  c.duration_s = seconds;
  if (c.world_switch) c.world_switch->at_s = seconds / 2;
  return c;
}

std::string error_of(const nlohmann::json& j) {
  try {
    scenario_from_json(j);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Blueprint, GroupSizes) {
  EXPECT_EQ(standard_blueprint(Architecture::FoodOnly).neuron_count(), 160u);
  EXPECT_EQ(standard_blueprint(Architecture::FoodContainer).neuron_count(), 240u);
  const auto bp = standard_blueprint(Architecture::FoodContainer);
  for (const auto& g : bp.groups) EXPECT_EQ(g.size, g.name == gn::kDopamine ? 40u : 20u) << g.name;
}

TEST(Blueprint, FoodOnlyRuleLayout) {
  const auto bp = standard_blueprint(Architecture::FoodOnly);
  EXPECT_EQ(bp.find_rule(gn::kLeftFood, gn::kLeftMotor), 0u);
  EXPECT_EQ(bp.find_rule(gn::kLeftFood, gn::kRightMotor), 1u);
  EXPECT_EQ(bp.find_rule(gn::kRightFood, gn::kLeftMotor), 2u);
  EXPECT_EQ(bp.find_rule(gn::kRightFood, gn::kRightMotor), 3u);
  EXPECT_EQ(bp.find_rule(gn::kFoodTouch, gn::kDopamine), 4u);
  EXPECT_FALSE(bp.find_rule(gn::kInhibitory, gn::kInhibitory));
  const auto& touch = bp.rules[4];
  EXPECT_FALSE(touch.plastic);
  EXPECT_EQ(touch.initial.lo, 3.0);
  for (std::size_t i = 5; i < bp.rules.size(); ++i) {
    EXPECT_EQ(bp.rules[i].src, gn::kInhibitory);
    EXPECT_EQ(bp.rules[i].initial.lo, -3.0);
    EXPECT_EQ(bp.rules[i].initial.hi, 0.0);
  }
  EXPECT_EQ(bp.rules.size(), 5u + 6u);
}

TEST(Blueprint, EdgeCountsFollowBinomial) {
  const auto bp = standard_blueprint(Architecture::FoodOnly);
  // 20 x 20 candidates at p = 0.85: mean 340, sd sqrt(400 * 0.85 * 0.15).
  const double sd = std::sqrt(400 * 0.85 * 0.15);
  double total = 0;
  constexpr int kSeeds = 50;
  for (int s = 0; s < kSeeds; ++s) {
    Rng rng(static_cast<std::uint64_t>(s));
    const auto net = build_network(bp, rng);
    std::vector<int> per_rule(bp.rules.size(), 0);
    for (std::size_t i = 0; i < net.synapses().size(); ++i) ++per_rule[net.synapses().pathway[i]];
    EXPECT_NEAR(per_rule[1], 340, 5 * sd);
    total += per_rule[1];
    // Touch to dopamine: 20 x 40 at p = 0.1.
    EXPECT_NEAR(per_rule[4], 80, 5 * std::sqrt(800 * 0.1 * 0.9));
  }
  EXPECT_NEAR(total / kSeeds, 340, 4 * sd / std::sqrt(kSeeds));
}

TEST(Blueprint, WeightsAndFlagsOfBuiltSynapses) {
  Rng rng(3);
  const auto net = build_network(standard_blueprint(Architecture::FoodOnly), rng);
  const auto& s = net.synapses();
  for (std::size_t i = 0; i < s.size(); ++i) {
    ASSERT_NE(s.pre[i], s.post[i]);
    if (s.pathway[i] < 4) {
      EXPECT_EQ(s.weight[i], 0.0);
      EXPECT_TRUE(s.plastic[i]);
      EXPECT_EQ(s.group[i], snn::SynapseGroup::FoodTaxis);
    } else if (s.pathway[i] == 4) {
      EXPECT_EQ(s.weight[i], 3.0);
      EXPECT_FALSE(s.plastic[i]);
    } else {
      EXPECT_GE(s.weight[i], -3.0);
      EXPECT_LE(s.weight[i], 0.0);
    }
  }
}

TEST(Blueprint, ZeroProbabilityGivesNoEdges) {
  auto bp = standard_blueprint(Architecture::FoodOnly);
  for (auto& r : bp.rules) r.probability = 0.0;
  Rng rng(1);
  EXPECT_EQ(build_network(bp, rng).synapses().size(), 0u);
}

TEST(Blueprint, MalformedBlueprintsThrow) {
  Rng rng(1);
  auto bp = standard_blueprint(Architecture::FoodOnly);
  bp.rules[0].probability = 1.5;
  EXPECT_THROW(build_network(bp, rng), ConfigError);
  bp = standard_blueprint(Architecture::FoodOnly);
  bp.rules[0].initial = {2.0, 1.0};
  EXPECT_THROW(build_network(bp, rng), ConfigError);
  bp = standard_blueprint(Architecture::FoodOnly);
  bp.rules[0].dst = "nowhere";
  EXPECT_THROW(build_network(bp, rng), ConfigError);
  bp = standard_blueprint(Architecture::FoodOnly);
  bp.groups[0].size = 0;
  EXPECT_THROW(build_network(bp, rng), ConfigError);
  bp = standard_blueprint(Architecture::FoodOnly);
  bp.groups.push_back(bp.groups[0]);
  EXPECT_THROW(build_network(bp, rng), ConfigError);
}

TEST(Variants, SelectorsPickTheRightRules) {
  const auto bp = standard_blueprint(Architecture::FoodContainer);
  const auto cross = select_rules(bp, PathwaySelector::FoodCross);
  ASSERT_EQ(cross.size(), 2u);
  for (auto i : cross) EXPECT_NE(bp.rules[i].src.substr(0, 4), bp.rules[i].dst.substr(0, 4));
  EXPECT_EQ(select_rules(bp, PathwaySelector::SensorMotor).size(), 8u);
  EXPECT_EQ(select_rules(bp, PathwaySelector::ContainerTouchDa).size(), 2u);
  EXPECT_TRUE(select_rules(standard_blueprint(Architecture::FoodOnly), PathwaySelector::ContainerCross).empty());
}

TEST(Variants, EveryVariantResolves) {
  for (auto arch : {Architecture::FoodOnly, Architecture::FoodContainer}) {
    for (auto v : all_robot_variants()) {
      ScenarioConfig c;
      c.architecture = arch;
      c.robot = v;
      const auto bp = resolve_blueprint(c);
      for (const auto& r : bp.rules) {
        EXPECT_LE(r.initial.lo, r.initial.hi);
        if (v == RobotVariant::LearningDisabled || v == RobotVariant::RandomWalk) EXPECT_FALSE(r.plastic);
      }
      EXPECT_EQ(robot_variant_from_string(to_string(v)), v);
    }
  }
  EXPECT_THROW(robot_variant_from_string("nonsense"), ConfigError);
}

TEST(Presets, SixPresetsAllValidate) {
  std::set<std::string> names;
  for (const auto& p : presets()) {
    names.insert(p.name);
    EXPECT_FALSE(p.arms.empty());
    std::set<std::string> labels;
    for (const auto& a : p.arms) {
      EXPECT_NO_THROW(a.config.validate()) << p.name << "/" << a.label;
      EXPECT_TRUE(labels.insert(a.label).second);
    }
  }
  EXPECT_EQ(names, (std::set<std::string>{"orbiting", "food_only", "food_poison", "container_dopamine",
                                          "secondary_behaviour", "dual_learning"}));
  EXPECT_THROW(find_preset("nope"), ConfigError);
  EXPECT_THROW(find_preset("food_only").arm("nope"), ConfigError);
}

TEST(Presets, StatedDurationsAndSwitch) {
  EXPECT_EQ(find_preset("orbiting").config().duration_s, 40.0);
  EXPECT_EQ(find_preset("food_only").config().duration_s, 1000.0);
  const auto& fp = find_preset("food_poison").config();
  EXPECT_EQ(fp.duration_s, 2000.0);
  ASSERT_TRUE(fp.world_switch);
  EXPECT_EQ(fp.world_switch->at_s, 1000.0);
  EXPECT_EQ(find_preset("container_dopamine").config().duration_s, 3000.0);
  EXPECT_EQ(find_preset("secondary_behaviour").config().duration_s, 2000.0);
  EXPECT_EQ(find_preset("dual_learning").config().duration_s, 5000.0);
  EXPECT_EQ(find_preset("orbiting").arm("positive_baseline").dopamine.baseline, 0.0004);
}

TEST(ScenarioJson, RoundTripsEveryArm) {
  for (const auto& p : presets()) {
    for (const auto& a : p.arms) {
      const auto j = scenario_to_json(a.config);
      const auto back = scenario_from_json(j);
      EXPECT_EQ(scenario_to_json(back), j) << p.name << "/" << a.label;
    }
  }
}

TEST(ScenarioJson, MissingAndUnknownFieldsNameTheField) {
  auto j = scenario_to_json(find_preset("food_only").config());
  auto missing = j;
  missing.erase("arena");
  EXPECT_NE(error_of(missing).find("arena"), std::string::npos);
  auto nested = j;
  nested["arena"].erase("height");
  EXPECT_NE(error_of(nested).find("arena.height"), std::string::npos) << error_of(nested);
  auto unknown = j;
  unknown["colour"] = "blue";
  EXPECT_NE(error_of(unknown).find("colour"), std::string::npos);
  auto bad = j;
  bad["duration_s"] = -5;
  EXPECT_NE(error_of(bad).find("duration_s"), std::string::npos);
  auto wrong_type = j;
  wrong_type["arena"]["width"] = "wide";
  EXPECT_NE(error_of(wrong_type).find("arena.width"), std::string::npos) << error_of(wrong_type);
  auto half_start = j;
  half_start["start"] = {{"v_left", 25.0}};
  EXPECT_NE(error_of(half_start).find("start"), std::string::npos);
}

TEST(Criteria, AttractionExamples) {
  EXPECT_TRUE(attraction_criterion(3.0, 1.0));
  EXPECT_FALSE(attraction_criterion(0.4, 0.1));
  EXPECT_FALSE(attraction_criterion(1.0, 0.95));
  EXPECT_TRUE(attraction_criterion(1.0, 0.0));
  EXPECT_FALSE(attraction_criterion(0.5, 0.0));
}

TEST(Criteria, EscapeTimeOnSyntheticLog) {
  TrialLog log;
  log.tracked_object = 0;
  log.tracked_initial_distance = 4.0;
  for (int k = 0; k < 20; ++k) {
    WindowRecord w;
    w.t_ms = k * 70;
    w.tracked_distance = (k == 5 || k >= 10) ? 7.0 : 4.5;
    log.windows.push_back(w);
  }
  // A single excursion at k = 5 does not count; two in a row from k = 10 do.
  ASSERT_TRUE(escape_time(log));
  EXPECT_DOUBLE_EQ(*escape_time(log), 0.7);
  EXPECT_FALSE(escape_time(log, 2.0));
  log.contacts.push_back({300, world::ContactKind::FoodCollected, 0});
  EXPECT_DOUBLE_EQ(*escape_time(log), 0.3);
  log.tracked_initial_distance = NAN;
  EXPECT_FALSE(escape_time(log));
}

TEST(Criteria, WindowHelpers) {
  TrialLog log;
  for (int k = 0; k < 10; ++k) {
    WindowRecord w;
    w.t_ms = k * 70;
    w.mean_w_food_cross = 0.5 * k;
    log.windows.push_back(w);
  }
  log.contacts = {{100, world::ContactKind::FoodCollected, 0},
                  {200, world::ContactKind::PoisonCollected, 1},
                  {300, world::ContactKind::FoodCollected, 2}};
  EXPECT_DOUBLE_EQ(*first_time_at_least(log, &WindowRecord::mean_w_food_cross, 2.0), 0.28);
  EXPECT_FALSE(first_time_at_least(log, &WindowRecord::mean_w_food_cross, 100.0));
  EXPECT_EQ(collections_between(log, world::ContactKind::FoodCollected, 0.0, 0.3), 1u);
  EXPECT_EQ(collections_between(log, world::ContactKind::FoodCollected, 0.0, 0.31), 2u);
  ASSERT_NE(window_at(log, 0.15), nullptr);
  EXPECT_EQ(window_at(log, 0.15)->t_ms, 140);
}

TEST(Simulation, ZeroDurationGivesEmptyRun) {
  const auto log = run_trial(shortened(find_preset("food_only").config(), 0.0), 1);
  EXPECT_LE(log.windows.size(), 1u);
  EXPECT_EQ(log.food_collected, 0u);
  EXPECT_EQ(log.duration_ms, 0);
}

TEST(Simulation, WindowsAreLoggedAtEveryBoundary) {
  const auto log = run_trial(shortened(find_preset("food_only").config(), 7.0), 3);
  ASSERT_GE(log.windows.size(), 100u);
  for (std::size_t i = 0; i < log.windows.size(); ++i) EXPECT_EQ(log.windows[i].t_ms, static_cast<std::int64_t>(i) * 70);
  for (std::size_t i = 1; i < log.windows.size(); ++i) {
    EXPECT_GE(log.windows[i].collected_total, log.windows[i - 1].collected_total);
  }
  EXPECT_TRUE(std::isnan(log.windows.back().mean_w_cont_cross));
}

TEST(Determinism, EveryPresetArmReproduces) {
  TrialOptions opt;
  opt.record_spikes = true;
  for (const auto& p : presets()) {
    for (const auto& a : p.arms) {
      const auto cfg = shortened(a.config, 4.0);
      const auto x = run_trial(cfg, 42, opt);
      const auto y = run_trial(cfg, 42, opt);
      EXPECT_EQ(x.spikes, y.spikes) << p.name << "/" << a.label;
      EXPECT_FALSE(x.spikes.empty());
      EXPECT_EQ(x.final_synapses.weight, y.final_synapses.weight);
      EXPECT_EQ(csv_of(x), csv_of(y));
      EXPECT_EQ(trial_manifest(x), trial_manifest(y));
    }
  }
}

TEST(Determinism, DifferentSeedsDiverge) {
  const auto cfg = shortened(find_preset("food_only").config(), 3.0);
  TrialOptions opt;
  opt.record_spikes = true;
  EXPECT_NE(run_trial(cfg, 1, opt).spikes, run_trial(cfg, 2, opt).spikes);
}

TEST(Batch, TrialSeedsDoNotDependOnBatchSizeOrThreads) {
  const auto cfg = shortened(find_preset("food_only").config(), 3.0);
  const auto one = run_logs(cfg, 1, 1);
  const auto three = run_logs(cfg, 3, 2);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(one[0].seed, three[0].seed);
  EXPECT_EQ(csv_of(one[0]), csv_of(three[0]));
  std::set<std::uint64_t> seeds;
  for (const auto& l : three) seeds.insert(l.seed);
  EXPECT_EQ(seeds.size(), 3u);
  for (std::uint64_t i = 0; i < 3; ++i) EXPECT_EQ(three[i].seed, derive_trial_seed(cfg.seed, i));
}

TEST(Batch, SummaryAggregatesReports) {
  std::vector<CorrectnessReport> r(4);
  const std::size_t food[] = {10, 20, 30, 40};
  for (std::size_t i = 0; i < 4; ++i) {
    r[i].index = i;
    r[i].food_collected = food[i];
    r[i].food_attraction = i % 2 == 0;
    if (i < 3) r[i].escape_time_s = 1.0 + static_cast<double>(i);
  }
  const auto s = summarize(r);
  EXPECT_DOUBLE_EQ(s.mean_food, 25.0);
  EXPECT_NEAR(s.sd_food, std::sqrt(500.0 / 3.0), 1e-12);
  EXPECT_DOUBLE_EQ(s.pct_food_correct, 50.0);
  EXPECT_EQ(s.escapes, 3u);
  EXPECT_DOUBLE_EQ(*s.median_escape_s, 2.0);
}

TEST(Batch, WorkerExceptionPropagates) {
  // Seventeen 14 cm containers cannot be placed without overlap here.
  auto cfg = shortened(find_preset("secondary_behaviour").config(), 1.0);
  cfg.arena_width = 40.0;
  cfg.arena_height = 40.0;
  EXPECT_THROW(run_batch(cfg, 3, 2), ConfigError);
}

TEST(WorldSwitch, OnlyObjectKindsChange) {
  auto with = shortened(find_preset("food_poison").config(), 6.0);
  with.world_switch->at_s = 3.0;
  auto without = with;
  without.world_switch.reset();
  Simulation a(with, 9), b(without, 9);
  a.run_until(3000);
  b.run_until(3000);
  a.step();
  b.step();
  ASSERT_EQ(a.arena().objects.size(), b.arena().objects.size());
  for (std::size_t i = 0; i < a.arena().objects.size(); ++i) {
    const auto& oa = a.arena().objects[i];
    const auto& ob = b.arena().objects[i];
    EXPECT_EQ(oa.position.x, ob.position.x);
    EXPECT_EQ(oa.position.y, ob.position.y);
    if (ob.kind == world::ObjectKind::Food) EXPECT_EQ(oa.kind, world::ObjectKind::Poison);
  }
  EXPECT_EQ(a.arena().count(world::ObjectKind::Food), 0u);
  EXPECT_EQ(a.network().synapses().weight, b.network().synapses().weight);
  EXPECT_EQ(a.network().synapses().eligibility, b.network().synapses().eligibility);
  EXPECT_EQ(a.pose().position.x, b.pose().position.x);
  EXPECT_EQ(a.dopamine().level(), b.dopamine().level());
}

TEST(Baseline, RandomWalkFoodRateIsInTheExpectedRange) {
  // A random walker should collect on the order of 270 items per 1000 s.
  const auto& cfg = find_preset("food_only").arm("learning_disabled");
  const auto s = run_batch(cfg, 3, 1);
  EXPECT_GT(s.mean_food, 0.5 * 269);
  EXPECT_LT(s.mean_food, 1.5 * 269);
}
