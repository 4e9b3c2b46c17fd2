#include "neuroforage/snn/network.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "neuroforage/errors.hpp"

#include "clones.hpp"

namespace neuroforage::snn {

void SynapseTable::push_back(NeuronIndex from, NeuronIndex to, double w, bool is_plastic,
                             SynapseGroup g, std::uint16_t rule) {
  pre.push_back(from);
  post.push_back(to);
  weight.push_back(w);
  eligibility.push_back(0.0);
  plastic.push_back(is_plastic ? 1 : 0);
  group.push_back(g);
  pathway.push_back(rule);
}

Network::Network(std::vector<NeuronGroup> groups, std::vector<NeuronParams> params)
    : groups_(std::move(groups)), params_(std::move(params)) {
  const std::size_t n = params_.size();
  for (const auto& g : groups_) {
    if (g.end() > n) throw ConfigError("neuron group '" + g.name + "' exceeds network size");
  }
  v_.assign(n, -65.0);
  u_.resize(n);
  for (std::size_t i = 0; i < n; ++i) u_[i] = params_[i].b * v_[i];
  for (const auto& p : params_) {
    a_.push_back(p.a);
    b_.push_back(p.b);
    c_.push_back(p.c);
    d_.push_back(p.d);
  }
  spiked_.assign(n, 0.0);
  external_.assign(n, 0.0);
  synaptic_now_.assign(n, 0.0);
  last_spike_.assign(n, kNever);
  fired_.reserve(n);
}

const NeuronGroup& Network::group(std::string_view name) const {
  for (const auto& g : groups_) {
    if (g.name == name) return g;
  }
  throw ConfigError("unknown neuron group '" + std::string(name) + "'");
}

void Network::check_index(NeuronIndex i) const {
  if (i >= params_.size()) {
    throw ConfigError("neuron index " + std::to_string(i) + " out of range (" +
                      std::to_string(params_.size()) + " neurons)");
  }
}

void Network::add_synapse(NeuronIndex pre, NeuronIndex post, double weight, bool plastic,
                          SynapseGroup group, std::uint16_t pathway) {
  check_index(pre);
  check_index(post);
  syn_.push_back(pre, post, weight, plastic, group, pathway);
  dirty_ = true;
}

namespace {

void build_csr(std::size_t n, const std::vector<std::uint32_t>& ids,
               const std::vector<NeuronIndex>& key, std::vector<std::uint32_t>& offsets,
               std::vector<std::uint32_t>& out) {
  offsets.assign(n + 1, 0);
  for (auto id : ids) ++offsets[key[id] + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  out.assign(ids.size(), 0);
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (auto id : ids) out[cursor[key[id]]++] = id;
}

template <class T>
void permute(std::vector<T>& v, const std::vector<std::uint32_t>& order) {
  std::vector<T> out;
  out.reserve(v.size());
  for (auto i : order) out.push_back(v[i]);
  v = std::move(out);
}

}  // namespace

void Network::finalize() {
  const std::size_t n = params_.size();
  std::vector<std::uint32_t> order(syn_.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_partition(order.begin(), order.end(),
                        [&](std::uint32_t i) { return syn_.plastic[i] != 0; });
  if (!std::is_sorted(order.begin(), order.end())) {
    permute(syn_.pre, order);
    permute(syn_.post, order);
    permute(syn_.weight, order);
    permute(syn_.eligibility, order);
    permute(syn_.plastic, order);
    permute(syn_.group, order);
    permute(syn_.pathway, order);
  }

  std::vector<std::uint32_t> all(syn_.size());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  build_csr(n, all, syn_.pre, out_offsets_, out_ids_);

  plastic_ids_.clear();
  for (std::uint32_t i = 0; i < syn_.size(); ++i) {
    if (syn_.plastic[i]) plastic_ids_.push_back(i);
  }
  build_csr(n, plastic_ids_, syn_.pre, pout_offsets_, pout_ids_);
  build_csr(n, plastic_ids_, syn_.post, pin_offsets_, pin_ids_);
  dirty_ = false;
}

void Network::inject(NeuronIndex i, double current) {
  check_index(i);
  external_[i] += current;
}

void Network::inject(const NeuronGroup& group, std::span<const double> currents) {
  if (currents.size() > group.size || group.end() > params_.size()) {
    throw ConfigError("injection into group '" + group.name + "' out of range");
  }
  for (std::size_t k = 0; k < currents.size(); ++k) external_[group.first + k] += currents[k];
}

void Network::inject_all(const NeuronGroup& group, double current) {
  if (group.end() > params_.size()) throw ConfigError("group '" + group.name + "' out of range");
  for (NeuronIndex i = group.first; i < group.end(); ++i) external_[i] += current;
}

const std::vector<SpikeEvent>& Network::step(std::int64_t t_ms) {
  if (dirty_) finalize();
  fired_.clear();
  const std::size_t n = params_.size();
  if (integrate(n) != 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(v_[i]) || !std::isfinite(u_[i])) {
        throw SimulationFault("non-finite state in neuron " + std::to_string(i) + " at t=" +
                              std::to_string(t_ms) + "ms");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (spiked_[i] == 0.0) continue;
    fired_.push_back({static_cast<NeuronIndex>(i), t_ms});
    last_spike_[i] = t_ms;
  }
  std::fill(external_.begin(), external_.end(), 0.0);
  // Spikes at t become synaptic current at t + 1.
  std::fill(synaptic_now_.begin(), synaptic_now_.end(), 0.0);
  for (const auto& ev : fired_) {
    for (auto k = out_offsets_[ev.neuron_index]; k < out_offsets_[ev.neuron_index + 1]; ++k) {
      const auto id = out_ids_[k];
      synaptic_now_[syn_.post[id]] += syn_.weight[id];
    }
  }
  return fired_;
}

namespace {

// Branch-free form of advance_membrane over all neurons; the arithmetic is
// identical, lanes that spiked early just compute values that are discarded.
// Returns 0 unless some state became non-finite.
NEUROFORAGE_CLONES double integrate_membranes(std::size_t n, double* __restrict v,
                                              double* __restrict u, const double* __restrict ext,
                                              const double* __restrict syn,
                                              const double* __restrict pa,
                                              const double* __restrict pb,
                                              const double* __restrict pc,
                                              const double* __restrict pd,
                                              double* __restrict spiked) {
  double bad = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v0 = v[i];
    const double u0 = u[i];
    const double current = ext[i] + syn[i];
    const double v1 = v0 + 0.5 * (0.04 * v0 * v0 + 5.0 * v0 + 140.0 - u0 + current);
    const double v2 = v1 + 0.5 * (0.04 * v1 * v1 + 5.0 * v1 + 140.0 - u0 + current);
    const double flag = v0 >= 30.0 ? 1.0 : (v1 >= 30.0 ? 1.0 : (v2 >= 30.0 ? 1.0 : 0.0));
    const bool fire = flag != 0.0;
    const double vn = fire ? pc[i] : v2;
    const double un = fire ? u0 + pd[i] : u0 + pa[i] * (pb[i] * v2 - u0);
    v[i] = vn;
    u[i] = un;
    spiked[i] = flag;
    bad += (vn - vn) + (un - un);
  }
  return bad;
}

}  // namespace

double Network::integrate(std::size_t n) noexcept {
  static_assert(kSpikeThreshold == 30.0);
  return integrate_membranes(n, v_.data(), u_.data(), external_.data(), synaptic_now_.data(),
                             a_.data(), b_.data(), c_.data(), d_.data(), spiked_.data());
}

NeuronState Network::state(NeuronIndex i) const {
  check_index(i);
  NeuronState s;
  s.v = v_[i];
  s.u = u_[i];
  s.input_accumulator = external_[i];
  if (last_spike_[i] != kNever) s.last_spike_time = last_spike_[i];
  return s;
}

void Network::set_state(NeuronIndex i, double v, double u) {
  check_index(i);
  v_[i] = v;
  u_[i] = u;
}

std::span<const std::uint32_t> Network::plastic_out(NeuronIndex i) const noexcept {
  return {pout_ids_.data() + pout_offsets_[i], pout_offsets_[i + 1] - pout_offsets_[i]};
}

std::span<const std::uint32_t> Network::plastic_in(NeuronIndex i) const noexcept {
  return {pin_ids_.data() + pin_offsets_[i], pin_offsets_[i + 1] - pin_offsets_[i]};
}

void write_spikes_csv(std::ostream& out, std::span<const SpikeEvent> spikes, bool header) {
  if (header) out << "t_ms,neuron_index\n";
  for (const auto& s : spikes) out << s.time_ms << ',' << s.neuron_index << '\n';
}

}  // namespace neuroforage::snn
