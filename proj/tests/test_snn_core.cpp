#include <cmath>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "neuroforage/errors.hpp"
#include "neuroforage/random.hpp"
#include "neuroforage/snn/izhikevich.hpp"
#include "neuroforage/snn/network.hpp"

using namespace neuroforage;
using namespace neuroforage::snn;

namespace {

// Scalar reference written straight from the model equations; shares no code
// with the library.
struct RefNeuron {
  double a, b, c, d, v, u;
  bool tick(double I) {
    if (v >= 30.0) {
      v = c;
      u = u + d;
      return true;
    }
    double vh = v + 0.5 * (0.04 * v * v + 5.0 * v + 140.0 - u + I);
    if (vh >= 30.0) {
      v = c;
      u = u + d;
      return true;
    }
    vh = vh + 0.5 * (0.04 * vh * vh + 5.0 * vh + 140.0 - u + I);
    if (vh >= 30.0) {
      v = c;
      u = u + d;
      return true;
    }
    v = vh;
    u = u + a * (b * v - u);
    return false;
  }
};

Network single_group(std::uint32_t n, NeuronParams p = {}) {
  return Network({{"g", NeuronKind::Excitatory, 0, n}}, std::vector<NeuronParams>(n, p));
}

std::vector<std::vector<NeuronIndex>> run_raster(Network& net, int ticks,
                                                 const std::vector<std::pair<NeuronIndex, double>>& drive) {
  std::vector<std::vector<NeuronIndex>> out;
  for (int t = 0; t < ticks; ++t) {
    for (auto [i, c] : drive) net.inject(i, c);
    std::vector<NeuronIndex> fired;
    for (const auto& s : net.step(t)) fired.push_back(s.neuron_index);
    out.push_back(fired);
  }
  return out;
}

}  // namespace

TEST(Izhikevich, RestingStateStaysBelowThreshold) {
  const NeuronParams p = excitatory_params(0.0);
  auto s = resting_state(p);
  for (int t = 0; t < 1000; ++t) {
    const auto r = izhikevich_step(s, p, 0.0, t);
    ASSERT_FALSE(r.spiked);
    s = r.state;
  }
  EXPECT_LT(s.v, -60.0);
}

TEST(Izhikevich, AboveThresholdResetsImmediately) {
  const NeuronParams p = excitatory_params(0.5);
  NeuronState s;
  s.v = 31.0;
  s.u = -7.25;
  const auto r = izhikevich_step(s, p, 0.0, 42);
  EXPECT_TRUE(r.spiked);
  EXPECT_DOUBLE_EQ(r.state.v, p.c);
  EXPECT_DOUBLE_EQ(r.state.u, -7.25 + p.d);
  ASSERT_TRUE(r.state.last_spike_time.has_value());
  EXPECT_EQ(*r.state.last_spike_time, 42);
}

TEST(Izhikevich, ConstantDriveMatchesScalarReference) {
  const NeuronParams p = excitatory_params(0.0);
  auto s = resting_state(p);
  RefNeuron ref{0.02, 0.2, -65.0, 8.0, -65.0, -13.0};
  std::vector<int> spikes, ref_spikes;
  for (int t = 0; t < 1000; ++t) {
    const auto r = izhikevich_step(s, p, 10.0, t);
    s = r.state;
    if (r.spiked) spikes.push_back(t);
    if (ref.tick(10.0)) ref_spikes.push_back(t);
    ASSERT_DOUBLE_EQ(s.v, ref.v) << "t=" << t;
    ASSERT_DOUBLE_EQ(s.u, ref.u) << "t=" << t;
  }
  ASSERT_EQ(spikes, ref_spikes);
  ASSERT_GT(spikes.size(), 10u);
  // Regular spiking settles to a fixed interval.
  const auto n = spikes.size();
  const int isi = spikes[n - 1] - spikes[n - 2];
  for (std::size_t k = n - 5; k < n; ++k) EXPECT_NEAR(spikes[k] - spikes[k - 1], isi, 1);
}

TEST(Izhikevich, NonFiniteStateIsAFault) {
  NeuronState s;
  s.v = std::nan("");
  EXPECT_THROW(izhikevich_step(s, {}, 0.0), SimulationFault);
}

TEST(Izhikevich, LiteralParameterSetIsTheTransposedPair) {
  const auto lit = excitatory_params(0.3, ExcitatoryParamSet::Literal);
  const auto can = excitatory_params(0.3);
  EXPECT_DOUBLE_EQ(lit.a, can.b);
  EXPECT_DOUBLE_EQ(lit.b, can.a);
  EXPECT_DOUBLE_EQ(lit.c, can.c);
  EXPECT_DOUBLE_EQ(can.c, -65.0 + 15.0 * 0.09);
  EXPECT_DOUBLE_EQ(can.d, 8.0 - 6.0 * 0.09);
}

TEST(Network, ZeroInjectionIsANoOp) {
  auto a = single_group(3);
  auto b = single_group(3);
  for (int t = 0; t < 50; ++t) {
    a.inject(1, 0.0);
    a.step(t);
    b.step(t);
  }
  for (NeuronIndex i = 0; i < 3; ++i) {
    EXPECT_EQ(a.v(i), b.v(i));
    EXPECT_EQ(a.state(i).u, b.state(i).u);
  }
}

TEST(Network, InjectionRaisesPotentialThisTick) {
  auto net = single_group(1);
  const double before = net.v(0);
  net.inject(0, 12.0);
  net.step(0);
  EXPECT_GT(net.v(0), before);
}

TEST(Network, InjectionsAccumulateWithinATick) {
  auto a = single_group(1);
  auto b = single_group(1);
  a.inject(0, 5.0);
  a.inject(0, 7.0);
  b.inject(0, 12.0);
  a.step(0);
  b.step(0);
  EXPECT_EQ(a.v(0), b.v(0));
  // The accumulator does not carry over.
  a.step(1);
  auto c = single_group(1);
  c.inject(0, 12.0);
  c.step(0);
  c.step(1);
  EXPECT_EQ(a.v(0), c.v(0));
}

TEST(Network, OutOfRangeInjectionIsAConfigError) {
  auto net = single_group(2);
  EXPECT_THROW(net.inject(2, 1.0), ConfigError);
  NeuronGroup bogus{"x", NeuronKind::Excitatory, 1, 5};
  std::vector<double> cur(5, 1.0);
  EXPECT_THROW(net.inject(bogus, cur), ConfigError);
  EXPECT_THROW(net.group("missing"), ConfigError);
}

TEST(Network, SynapticCurrentArrivesOneTickLater) {
  auto net = single_group(2);
  auto ctl = single_group(2);
  net.add_synapse(0, 1, 20.0);
  net.set_state(0, 35.0, -13.0);  // fires on the next step
  ctl.set_state(0, 35.0, -13.0);
  const auto& fired = net.step(0);
  ctl.step(0);
  ASSERT_EQ(fired.size(), 1u);
  EXPECT_EQ(fired[0].neuron_index, 0u);
  EXPECT_EQ(net.v(1), ctl.v(1)) << "current delivered in the spike's own tick";
  net.step(1);
  ctl.step(1);
  EXPECT_GT(net.v(1), ctl.v(1) + 5.0);
}

TEST(Network, InhibitoryWeightsEnterNegatively) {
  Network net({{"e", NeuronKind::Excitatory, 0, 1}, {"i", NeuronKind::Inhibitory, 1, 1}},
              {excitatory_params(0.0), inhibitory_params(0.0)});
  auto ctl = net;
  net.add_synapse(1, 0, -3.0);
  net.set_state(1, 35.0, -13.0);
  ctl.set_state(1, 35.0, -13.0);
  net.step(0);
  ctl.step(0);
  net.step(1);
  ctl.step(1);
  EXPECT_LT(net.v(0), ctl.v(0));
}

TEST(Network, SynchronousSensorVolleyDrivesMotorWithinAWindow) {
  // 20 sensor neurons, each wired to one motor neuron at the maximum weight.
  Network net({{"sensor", NeuronKind::Excitatory, 0, 20}, {"motor", NeuronKind::Excitatory, 20, 1}},
              std::vector<NeuronParams>(21, excitatory_params(0.0)));
  for (NeuronIndex i = 0; i < 20; ++i) net.add_synapse(i, 20, 4.0, true);
  const auto& sensor = net.group("sensor");
  bool motor_fired = false;
  for (int t = 0; t < 70 && !motor_fired; ++t) {
    if (t == 0) net.inject_all(sensor, 30.0);
    for (const auto& s : net.step(t)) motor_fired |= s.neuron_index == 20;
  }
  EXPECT_TRUE(motor_fired);
}

TEST(Network, SpikeTimesAreNonDecreasingAndBelowThresholdAtBoundaries) {
  Rng rng(3);
  std::vector<NeuronParams> params;
  for (int i = 0; i < 30; ++i) params.push_back(excitatory_params(rng.uniform()));
  Network net({{"g", NeuronKind::Excitatory, 0, 30}}, params);
  for (NeuronIndex i = 0; i < 30; ++i) {
    for (NeuronIndex j = 0; j < 30; ++j) {
      if (i != j && rng.bernoulli(0.2)) net.add_synapse(i, j, rng.uniform(0.0, 4.0));
    }
  }
  std::int64_t last = -1;
  for (int t = 0; t < 2000; ++t) {
    for (NeuronIndex i = 0; i < 30; ++i) net.inject(i, rng.poisson(3.0));
    for (const auto& s : net.step(t)) {
      ASSERT_GE(s.time_ms, last);
      last = s.time_ms;
    }
    for (NeuronIndex i = 0; i < 30; ++i) ASSERT_LT(net.v(i), kSpikeThreshold);
  }
  EXPECT_GE(last, 0);
}

TEST(Network, RemovingZeroWeightSynapsesLeavesSpikeTrainsUnchanged) {
  Rng rng(11);
  std::vector<NeuronParams> params;
  for (int i = 0; i < 12; ++i) params.push_back(excitatory_params(rng.uniform()));
  Network full({{"g", NeuronKind::Excitatory, 0, 12}}, params);
  for (NeuronIndex i = 0; i < 12; ++i) {
    for (NeuronIndex j = 0; j < 12; ++j) {
      if (i == j) continue;
      full.add_synapse(i, j, rng.bernoulli(0.5) ? 0.0 : rng.uniform(0.5, 3.0));
    }
  }
  auto pruned = full;
  const auto& w = pruned.synapses().weight;
  pruned.remove_synapses_if([&](std::size_t k) { return w[k] == 0.0; });
  ASSERT_LT(pruned.synapses().size(), full.synapses().size());
  std::vector<std::pair<NeuronIndex, double>> drive{{0, 12.0}, {3, 9.0}, {7, 6.5}};
  EXPECT_EQ(run_raster(full, 1000, drive), run_raster(pruned, 1000, drive));
}

TEST(Network, ExtraPositiveCurrentNeverRemovesASpike) {
  Rng rng(5);
  const NeuronParams p = excitatory_params(0.4);
  for (int k = 0; k < 200000; ++k) {
    const double v = rng.uniform(-80.0, 31.0);
    const double u = rng.uniform(-20.0, 10.0);
    const double base = rng.uniform(-10.0, 40.0);
    const double extra = rng.uniform(0.0, 20.0);
    double v1 = v, u1 = u, v2 = v, u2 = u;
    const bool s1 = advance_membrane(v1, u1, p, base);
    const bool s2 = advance_membrane(v2, u2, p, base + extra);
    if (s1) ASSERT_TRUE(s2) << "v=" << v << " u=" << u << " I=" << base << "+" << extra;
  }
}

TEST(Network, FinalizeOrdersPlasticSynapsesFirst) {
  auto net = single_group(4);
  net.add_synapse(0, 1, 1.0, false);
  net.add_synapse(1, 2, 0.5, true);
  net.add_synapse(2, 3, 2.0, false);
  net.add_synapse(3, 0, 0.7, true);
  net.finalize();
  const auto& syn = net.synapses();
  ASSERT_EQ(net.plastic_ids().size(), 2u);
  EXPECT_EQ(syn.plastic[0], 1);
  EXPECT_EQ(syn.plastic[1], 1);
  EXPECT_EQ(syn.pre[0], 1u);
  EXPECT_EQ(syn.pre[1], 3u);
  ASSERT_EQ(net.plastic_out(1).size(), 1u);
  EXPECT_EQ(syn.post[net.plastic_out(1)[0]], 2u);
  ASSERT_EQ(net.plastic_in(0).size(), 1u);
  EXPECT_TRUE(net.plastic_out(0).empty());
}

TEST(Network, DeterministicAcrossCopies) {
  Rng rng(8);
  std::vector<NeuronParams> params;
  for (int i = 0; i < 20; ++i) params.push_back(excitatory_params(rng.uniform()));
  Network a({{"g", NeuronKind::Excitatory, 0, 20}}, params);
  for (NeuronIndex i = 0; i + 1 < 20; ++i) a.add_synapse(i, i + 1, 3.0);
  auto b = a;
  std::vector<std::pair<NeuronIndex, double>> drive{{0, 15.0}};
  EXPECT_EQ(run_raster(a, 500, drive), run_raster(b, 500, drive));
}

TEST(SpikeCsv, WritesHeaderAndRows) {
  std::vector<SpikeEvent> s{{3, 10}, {7, 11}};
  std::ostringstream out;
  write_spikes_csv(out, s);
  EXPECT_EQ(out.str(), "t_ms,neuron_index\n10,3\n11,7\n");
}
