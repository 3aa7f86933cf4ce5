#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "polysnf/harness/properties.hpp"

namespace polysnf::harness {

struct SuiteConfig {
  std::uint64_t seed = 1;
  /// Overrides of the default case counts, by property name.
  std::map<std::string, std::size_t> cases;
  /// Restrict to these properties (empty means all).
  std::vector<std::string> only;
  /// Multiply every default count (0.1 for a smoke run).
  double scale = 1.0;
  unsigned threads = 0;
  SmithOptions smith;
  /// Replace the gcd with gcd(a, b) = monic(a).
  bool inject_gcd_fault = false;
};

struct CaseFailure {
  std::uint64_t seed;
  std::string detail;
};

struct PropertyReport {
  std::string property;
  std::size_t cases = 0;
  std::vector<CaseFailure> failures;
};

struct SuiteReport {
  std::vector<PropertyReport> properties;

  bool passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyReport& p) { return p.failures.empty(); });
  }
  std::size_t total_failures() const {
    std::size_t n = 0;
    for (const auto& p : properties) n += p.failures.size();
    return n;
  }
};

inline Polynomial faulty_gcd(const Polynomial& a, const Polynomial&) { return a.monic(); }

/// Case i of a property uses Pcg32(seed + i), so a failure replays from its seed alone.
inline CaseResult run_case(const Property& prop, std::uint64_t case_seed, const SmithOptions& opts) {
  Pcg32 rng(case_seed);
  try {
    return prop.check(rng, opts);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

inline std::vector<Property> select_properties(const SuiteConfig& config) {
  auto all = all_properties();
  if (config.only.empty()) return all;
  std::vector<Property> out;
  for (const auto& name : config.only) {
    auto it = std::find_if(all.begin(), all.end(), [&](const Property& p) { return p.name == name; });
    if (it == all.end()) throw InvalidArgument("unknown property: " + name);
    out.push_back(*it);
  }
  std::sort(out.begin(), out.end(), [](const Property& a, const Property& b) { return a.name < b.name; });
  return out;
}

inline SuiteReport run_suite(const SuiteConfig& config) {
  SmithOptions opts = config.smith;
  if (config.inject_gcd_fault) opts.gcd = faulty_gcd;
  auto props = select_properties(config);

  struct Job {
    std::size_t prop;
    std::uint64_t seed;
  };
  SuiteReport report;
  std::vector<Job> jobs;
  for (std::size_t p = 0; p < props.size(); ++p) {
    std::size_t count = static_cast<std::size_t>(static_cast<double>(props[p].default_cases) * config.scale);
    if (auto it = config.cases.find(props[p].name); it != config.cases.end()) count = it->second;
    report.properties.push_back({props[p].name, count, {}});
    for (std::size_t i = 0; i < count; ++i) jobs.push_back({p, config.seed + i});
  }

  unsigned threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      auto result = run_case(props[jobs[j].prop], jobs[j].seed, opts);
      if (!result) continue;
      std::lock_guard<std::mutex> lock(mutex);
      report.properties[jobs[j].prop].failures.push_back({jobs[j].seed, *result});
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& p : report.properties)
    std::sort(p.failures.begin(), p.failures.end(), [](const CaseFailure& a, const CaseFailure& b) { return a.seed < b.seed; });
  return report;
}

}  // namespace polysnf::harness
