#include "neuroforage/experiments/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#ifndef NEUROFORAGE_VERSION
#define NEUROFORAGE_VERSION "unknown"
#endif

namespace neuroforage::experiments {

std::string_view code_version() noexcept { return NEUROFORAGE_VERSION; }

std::string format_number(double x) {
  if (std::isnan(x)) return {};
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_trial_csv(std::ostream& out, const TrialLog& log) {
  out << kTrialCsvHeader << '\n';
  for (const auto& w : log.windows) {
    out << w.t_ms << ',' << w.collected_total << ',' << format_number(w.da_level) << ','
        << format_number(w.mean_w_food_cross) << ',' << format_number(w.mean_w_food_straight) << ','
        << format_number(w.mean_w_cont_cross) << ',' << format_number(w.mean_w_cont_straight) << ','
        << format_number(w.mean_w_foodtouch_da) << ',' << format_number(w.mean_w_emptytouch_da)
        << ',' << format_number(w.mean_elig_food_cross) << ','
        << format_number(w.mean_elig_food_straight) << '\n';
  }
}

void write_pose_csv(std::ostream& out, const TrialLog& log) {
  out << "t_ms,x,y,heading\n";
  for (const auto& w : log.windows) {
    out << w.t_ms << ',' << format_number(w.x) << ',' << format_number(w.y) << ','
        << format_number(w.heading) << '\n';
  }
}

void write_weights_csv(std::ostream& out, const TrialLog& log) {
  out << "pre,post,pathway,plastic,weight\n";
  const auto& s = log.final_synapses;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << s.pre[i] << ',' << s.post[i] << ',' << log.rule_names.at(s.pathway[i]) << ','
        << static_cast<int>(s.plastic[i]) << ',' << format_number(s.weight[i]) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const BatchSummary& summary) {
  out << "index,seed,food_collected,poison_collected,food_attraction,container_attraction,"
         "escape_time_s,final_mean_w_food_cross,final_mean_w_food_straight\n";
  for (const auto& t : summary.trials) {
    out << t.index << ',' << t.seed << ',' << t.food_collected << ',' << t.poison_collected << ','
        << static_cast<int>(t.food_attraction) << ',';
    if (t.container_attraction) out << static_cast<int>(*t.container_attraction);
    out << ',' << (t.escape_time_s ? format_number(*t.escape_time_s) : std::string()) << ','
        << format_number(t.final_food_cross) << ',' << format_number(t.final_food_straight) << '\n';
  }
}

nlohmann::json trial_manifest(const TrialLog& log) {
  nlohmann::json pathways = nlohmann::json::array();
  for (const auto& p : log.final_pathways) {
    nlohmann::json j = {{"name", p.name}, {"synapses", p.synapses}, {"plastic", p.plastic},
                        {"mean_weight", nullptr}};
    if (std::isfinite(p.mean_weight)) j["mean_weight"] = p.mean_weight;
    pathways.push_back(j);
  }
  return {{"code_version", code_version()},
          {"seed", log.seed},
          {"food_collected", log.food_collected},
          {"poison_collected", log.poison_collected},
          {"dopamine_spikes", log.dopamine_spikes},
          {"final_pathways", pathways},
          {"config", log.config}};
}

namespace {

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  return f;
}

void close_out(std::ofstream& f, const std::filesystem::path& p) {
  f.close();
  if (!f) throw std::runtime_error("error while writing " + p.string());
}

template <class Fn>
void write_file(const std::filesystem::path& p, Fn&& fn) {
  auto f = open_out(p);
  fn(f);
  close_out(f, p);
}

}  // namespace

void write_trial_dir(const std::filesystem::path& dir, const TrialLog& log) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "trial.csv", [&](std::ostream& o) { write_trial_csv(o, log); });
  write_file(dir / "pose.csv", [&](std::ostream& o) { write_pose_csv(o, log); });
  write_file(dir / "weights_final.csv", [&](std::ostream& o) { write_weights_csv(o, log); });
  write_file(dir / "config.json", [&](std::ostream& o) { o << trial_manifest(log).dump(2) << '\n'; });
  if (!log.spikes.empty()) {
    write_file(dir / "spikes.csv", [&](std::ostream& o) { snn::write_spikes_csv(o, log.spikes); });
  }
}

}  // namespace neuroforage::experiments
