#include "neuroforage/experiments/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "neuroforage/random.hpp"

namespace neuroforage::experiments {

CorrectnessReport make_report(const TrialLog& log, std::size_t index, double departure_factor) {
  CorrectnessReport r;
  r.index = index;
  r.seed = log.seed;
  r.food_collected = log.food_collected;
  r.poison_collected = log.poison_collected;
  r.food_attraction = attraction_correct(log, Modality::Food);
  if (log.architecture == Architecture::FoodContainer) {
    r.container_attraction = attraction_correct(log, Modality::Container);
  }
  r.escape_time_s = escape_time(log, departure_factor);
  if (!log.windows.empty()) {
    const auto& w = log.windows.back();
    r.final_food_cross = w.mean_w_food_cross;
    r.final_food_straight = w.mean_w_food_straight;
    r.final_foodtouch_da = w.mean_w_foodtouch_da;
    r.final_emptytouch_da = w.mean_w_emptytouch_da;
  }
  return r;
}

BatchSummary summarize(std::vector<CorrectnessReport> reports) {
  BatchSummary s;
  s.trials = std::move(reports);
  const auto n = s.trials.size();
  if (n == 0) return s;
  double food = 0.0, poison = 0.0, correct = 0.0, cont = 0.0;
  std::size_t cont_n = 0;
  std::vector<double> escapes;
  for (const auto& t : s.trials) {
    food += static_cast<double>(t.food_collected);
    poison += static_cast<double>(t.poison_collected);
    correct += t.food_attraction ? 1.0 : 0.0;
    if (t.container_attraction) {
      ++cont_n;
      cont += *t.container_attraction ? 1.0 : 0.0;
    }
    if (t.escape_time_s) escapes.push_back(*t.escape_time_s);
  }
  const double dn = static_cast<double>(n);
  s.mean_food = food / dn;
  s.mean_poison = poison / dn;
  s.pct_food_correct = 100.0 * correct / dn;
  if (cont_n) s.pct_container_correct = 100.0 * cont / static_cast<double>(cont_n);
  if (n > 1) {
    double ss = 0.0;
    for (const auto& t : s.trials) {
      const double d = static_cast<double>(t.food_collected) - s.mean_food;
      ss += d * d;
    }
    s.sd_food = std::sqrt(ss / (dn - 1.0));
  }
  s.escapes = escapes.size();
  if (!escapes.empty()) {
    std::sort(escapes.begin(), escapes.end());
    const auto m = escapes.size();
    s.median_escape_s = m % 2 ? escapes[m / 2] : 0.5 * (escapes[m / 2 - 1] + escapes[m / 2]);
  }
  return s;
}

nlohmann::json BatchSummary::to_json() const {
  nlohmann::json trials_json = nlohmann::json::array();
  for (const auto& t : trials) {
    nlohmann::json j = {{"index", t.index},
                        {"seed", t.seed},
                        {"food_collected", t.food_collected},
                        {"poison_collected", t.poison_collected},
                        {"food_attraction", t.food_attraction},
                        {"container_attraction", nullptr},
                        {"escape_time_s", nullptr},
                        {"final_mean_w_food_cross", t.final_food_cross},
                        {"final_mean_w_food_straight", t.final_food_straight}};
    if (t.container_attraction) j["container_attraction"] = *t.container_attraction;
    if (t.escape_time_s) j["escape_time_s"] = *t.escape_time_s;
    if (std::isfinite(t.final_foodtouch_da)) j["final_mean_w_foodtouch_da"] = t.final_foodtouch_da;
    if (std::isfinite(t.final_emptytouch_da)) {
      j["final_mean_w_emptytouch_da"] = t.final_emptytouch_da;
    }
    trials_json.push_back(j);
  }
  nlohmann::json j = {{"name", name},
                      {"robot", robot},
                      {"batch_seed", batch_seed},
                      {"n_trials", trials.size()},
                      {"mean_food_collected", mean_food},
                      {"sd_food_collected", sd_food},
                      {"mean_poison_collected", mean_poison},
                      {"pct_food_attraction_correct", pct_food_correct},
                      {"pct_container_attraction_correct", nullptr},
                      {"escapes", escapes},
                      {"median_escape_time_s", nullptr},
                      {"trials", trials_json}};
  if (pct_container_correct) j["pct_container_attraction_correct"] = *pct_container_correct;
  if (median_escape_s) j["median_escape_time_s"] = *median_escape_s;
  return j;
}

BatchSummary run_batch(const ScenarioConfig& config, int n_trials, unsigned parallel,
                       TrialOptions options, const TrialSink& sink) {
  config.validate();
  const auto n = static_cast<std::size_t>(std::max(n_trials, 0));
  std::vector<CorrectnessReport> reports(n);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= n) return;
      {
        std::lock_guard lock(mu);
        if (failure) return;
      }
      try {
        const auto log = run_trial(config, derive_trial_seed(config.seed, i), options);
        auto report = make_report(log, i, config.escape.departure_factor);
        std::lock_guard lock(mu);
        reports[i] = std::move(report);
        if (sink) sink(i, log);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(parallel, static_cast<unsigned>(n)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  auto summary = summarize(std::move(reports));
  summary.name = config.name;
  summary.robot = std::string(to_string(config.robot));
  summary.batch_seed = config.seed;
  return summary;
}

std::vector<TrialLog> run_logs(const ScenarioConfig& config, int n_trials, unsigned parallel,
                               TrialOptions options) {
  std::vector<TrialLog> logs(static_cast<std::size_t>(std::max(n_trials, 0)));
  run_batch(config, n_trials, parallel, options,
            [&](std::size_t i, const TrialLog& log) { logs[i] = log; });
  return logs;
}

}  // namespace neuroforage::experiments
