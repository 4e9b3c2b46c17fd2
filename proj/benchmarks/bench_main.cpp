#include <numeric>
#include <vector>

#include <benchmark/benchmark.h>

#include "neuroforage/experiments/blueprint.hpp"
#include "neuroforage/experiments/presets.hpp"
#include "neuroforage/experiments/simulation.hpp"
#include "neuroforage/plasticity/plasticity.hpp"
#include "neuroforage/world/world.hpp"

using namespace neuroforage;
namespace nx = neuroforage::experiments;

namespace {

void BM_NetworkStep(benchmark::State& state) {
  const auto arch = state.range(0) ? nx::Architecture::FoodContainer : nx::Architecture::FoodOnly;
  Rng rng(1);
  auto net = nx::build_network(nx::standard_blueprint(arch), rng);
  const auto& motor = net.group(nx::group_names::kLeftMotor);
  std::vector<double> drive(motor.size, 3.0);
  std::int64_t t = 0;
  for (auto _ : state) {
    net.inject(motor, drive);
    benchmark::DoNotOptimize(net.step(t++).size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(net.neuron_count()));
}
BENCHMARK(BM_NetworkStep)->Arg(0)->Arg(1);

void BM_DopamineWeightUpdate(benchmark::State& state) {
  Rng rng(2);
  auto net = nx::build_network(nx::standard_blueprint(nx::Architecture::FoodContainer), rng);
  auto& syn = net.synapses();
  for (auto& c : syn.eligibility) c = rng.uniform(-0.1, 0.1);
  const auto& ids = net.plastic_ids();
  for (auto _ : state) {
    plasticity::apply_dopamine_and_decay(syn, ids, 0.01, 0.0, 4.0, 0.476);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ids.size()));
}
BENCHMARK(BM_DopamineWeightUpdate);

void BM_Sense(benchmark::State& state) {
  world::Arena arena(300, 300);
  Rng rng(3);
  world::WorldParams wp;
  world::populate(arena, wp, rng, 0, 0, 20, 0, {150, 150});
  world::RobotPose pose;
  pose.position = {150, 150};
  for (auto _ : state) {
    pose.heading = world::normalize_heading(pose.heading + 0.01);
    benchmark::DoNotOptimize(world::sense(arena, pose, wp, rng));
  }
}
BENCHMARK(BM_Sense);

void BM_TrialTick(benchmark::State& state) {
  const auto& cfg = state.range(0) ? nx::find_preset("dual_learning").config()
                                   : nx::find_preset("food_only").config();
  nx::Simulation sim(cfg, 4);
  for (auto _ : state) sim.step();
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TrialTick)->Arg(0)->Arg(1)->Iterations(200000);

}  // namespace
BENCHMARK_MAIN();
