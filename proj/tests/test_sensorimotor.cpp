#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "neuroforage/experiments/blueprint.hpp"
#include "neuroforage/experiments/presets.hpp"
#include "neuroforage/experiments/scenario.hpp"
#include "neuroforage/experiments/simulation.hpp"
#include "neuroforage/random.hpp"
#include "neuroforage/sensorimotor/sensorimotor.hpp"

using namespace neuroforage;
using namespace neuroforage::sensorimotor;
namespace ex = neuroforage::experiments;

TEST(Encoding, PoissonMeanMatchesGain) {
  Rng rng(7);
  std::vector<double> out(20);
  double sum = 0;
  constexpr int kDraws = 5000;
  for (int k = 0; k < kDraws; ++k) {
    encode_range(1.0, 30.0, rng, out);
    sum += std::accumulate(out.begin(), out.end(), 0.0);
  }
  const double mean = sum / (kDraws * 20.0);
  // sd of the mean is sqrt(30 / 1e5), about 0.017.
  EXPECT_NEAR(mean, 30.0, 0.1);
}

TEST(Encoding, ZeroValueGivesZeroCurrent) {
  Rng rng(7);
  std::vector<double> out(20, 5.0);
  encode_range(0.0, 30.0, rng, out);
  for (double c : out) EXPECT_EQ(c, 0.0);
  world::SensorReadout r;
  const auto cur = encode_sensors(r, true, 20, SensorimotorParams{}, rng);
  EXPECT_TRUE(cur.left_food.empty());
  EXPECT_TRUE(cur.right_food.empty());
  EXPECT_TRUE(cur.touch_food.empty());
}

TEST(Encoding, RangeOnlyOnPhaseTickTouchWheneverSet) {
  Rng rng(7);
  world::SensorReadout r;
  r.left_food = 0.8;
  r.touch_food = true;
  auto cur = encode_sensors(r, false, 20, SensorimotorParams{}, rng);
  EXPECT_TRUE(cur.left_food.empty());
  EXPECT_EQ(cur.touch_food.size(), 20u);
  cur = encode_sensors(r, true, 20, SensorimotorParams{}, rng);
  EXPECT_EQ(cur.left_food.size(), 20u);
  EXPECT_TRUE(cur.right_food.empty());
}

TEST(Encoding, GroupSpikeCountRisesWithSensorValue) {
  // A 20-neuron sensor group driven once by the encoder; mean spikes over
  // the following window, averaged over repeats, must increase with value.
  const auto bp = ex::standard_blueprint(ex::Architecture::FoodOnly);
  double prev = -1.0;
  for (double value : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
    Rng rng(11);
    auto net = ex::build_network(bp, rng);
    const auto& g = net.group(ex::group_names::kLeftFood);
    std::vector<double> cur(g.size);
    std::uint64_t spikes = 0;
    for (int rep = 0; rep < 60; ++rep) {
      for (int t = 0; t < 70; ++t) {
        if (t == 0) {
          encode_range(value, 30.0, rng, cur);
          net.inject(g, cur);
        }
        for (const auto& s : net.step(rep * 70 + t)) spikes += g.contains(s.neuron_index);
      }
    }
    const double mean = static_cast<double>(spikes) / 60.0;
    EXPECT_GT(mean, prev) << value;
    prev = mean;
  }
}

TEST(PoissonTable, PmfMatchesClosedForm) {
  const PoissonTable table(2.35);
  Rng rng(3);
  std::vector<int> hist(20, 0);
  constexpr int kDraws = 400000;
  for (int k = 0; k < kDraws; ++k) ++hist[std::min(table(rng), 19)];
  double pmf = std::exp(-2.35);
  for (int k = 0; k < 8; ++k) {
    const double p = static_cast<double>(hist[k]) / kDraws;
    EXPECT_NEAR(p, pmf, 5.0 * std::sqrt(pmf * (1 - pmf) / kDraws) + 1e-4) << k;
    pmf *= 2.35 / (k + 1);
  }
  EXPECT_EQ(PoissonTable(0.0)(rng), 0);
}

TEST(Decode, WinnerTakesAllAndTies) {
  const world::SpeedRegime full{25.0, 31.2};
  const world::SpeedRegime half{12.5, 15.6};
  auto w = decode_motors(10, 3, full);
  EXPECT_EQ(w.v_left, 31.2);
  EXPECT_EQ(w.v_right, 25.0);
  w = decode_motors(0, 1, full);
  EXPECT_EQ(w.v_left, 25.0);
  EXPECT_EQ(w.v_right, 31.2);
  w = decode_motors(4, 4, full);
  EXPECT_DOUBLE_EQ(w.v_left, 28.1);
  EXPECT_DOUBLE_EQ(w.v_right, 28.1);
  w = decode_motors(0, 7, half);
  EXPECT_EQ(w.v_left, 12.5);
  EXPECT_EQ(w.v_right, 15.6);
  w = decode_motors(0, 0, half);
  EXPECT_DOUBLE_EQ(w.v_left, 14.05);
}

TEST(Schedule, ExplorationTargetIsFair) {
  PhasicSchedule s(70);
  Rng rng(21);
  int left = 0;
  constexpr int kWindows = 20000;
  for (int k = 0; k < kWindows; ++k) {
    s.begin_window(k * 70, rng);
    left += s.exploration_target() == MotorSide::Left;
  }
  // Binomial(20000, 0.5) has sd about 71.
  EXPECT_NEAR(left, kWindows / 2, 400);
}

TEST(Schedule, BoundariesAndCounters) {
  PhasicSchedule s(70);
  Rng rng(1);
  EXPECT_TRUE(s.is_boundary(0));
  EXPECT_FALSE(s.is_boundary(69));
  EXPECT_TRUE(s.is_boundary(140));
  s.record_motor_spikes(2, 3);
  s.record_motor_spikes(1, 0);
  EXPECT_EQ(s.left_count(), 3);
  EXPECT_EQ(s.right_count(), 3);
  s.begin_window(70, rng);
  EXPECT_EQ(s.left_count(), 0);
  EXPECT_EQ(s.window_start_ms(), 70);
}

TEST(ClosedLoop, RandomWalkCoversAllQuadrants) {
  auto cfg = ex::find_preset("food_only").arm("learning_disabled");
  cfg.robot = ex::RobotVariant::RandomWalk;
  cfg.objects = {};
  cfg.duration_s = 30.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto log = ex::run_trial(cfg, seed);
    std::set<int> quadrants;
    for (const auto& w : log.windows) {
      quadrants.insert((w.x >= cfg.arena_width / 2 ? 1 : 0) + (w.y >= cfg.arena_height / 2 ? 2 : 0));
    }
    EXPECT_EQ(quadrants.size(), 4u) << seed;
  }
}

TEST(ClosedLoop, StrongCrossWeightsOverrideExploration) {
  // Cross weights at the maximum, straight at zero: a full-strength left
  // food reading must win the motor vote for the right motor in more than
  // 90% of windows despite exploration drive into a random motor group.
  auto bp = ex::standard_blueprint(ex::Architecture::FoodOnly);
  ex::apply_overrides(bp, {{ex::PathwaySelector::FoodCross, 4.0, false},
                           {ex::PathwaySelector::FoodStraight, 0.0, false}});
  Rng rng(5);
  auto net = ex::build_network(bp, rng);
  const auto& lf = net.group(ex::group_names::kLeftFood);
  const auto& lm = net.group(ex::group_names::kLeftMotor);
  const auto& rm = net.group(ex::group_names::kRightMotor);
  PhasicSchedule sched(70);
  const PoissonTable explore(2.35);
  std::vector<double> cur(lf.size), drive(lm.size);
  int wins = 0;
  constexpr int kWindows = 500;
  for (int w = 0; w < kWindows; ++w) {
    sched.begin_window(w * 70, rng);
    const auto& target = sched.exploration_target() == MotorSide::Left ? lm : rm;
    for (int k = 0; k < 70; ++k) {
      const std::int64_t t = w * 70 + k;
      if (k == 0) {
        encode_range(1.0, 30.0, rng, cur);
        net.inject(lf, cur);
      }
      exploration_stimulus(explore, rng, drive);
      net.inject(target, drive);
      int l = 0, r = 0;
      for (const auto& s : net.step(t)) {
        l += lm.contains(s.neuron_index);
        r += rm.contains(s.neuron_index);
      }
      sched.record_motor_spikes(l, r);
    }
    wins += sched.right_count() > sched.left_count();
  }
  EXPECT_GT(wins, kWindows * 9 / 10);
}
