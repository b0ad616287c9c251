// One PASS/FAIL line per acceptance criterion. Exit status 1 when any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "geocrystal/json_io.hpp"
#include "geocrystal/verify.hpp"

using namespace geocrystal;

namespace {

struct Group {
  std::string prefix;
  std::size_t min_samples;  // per property
};

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Outcome run_groups(const std::vector<Group>& groups, const RunConfig& cfg) {
  Outcome out;
  std::size_t props = 0, samples = 0;
  for (const auto& g : groups) {
    Report r = run_matching(g.prefix, cfg);
    if (r.results.empty()) {
      out.ok = false;
      out.detail += " no properties under " + g.prefix + ";";
    }
    for (const auto& p : r.results) {
      ++props;
      samples += p.samples;
      if (!p.passed) {
        out.ok = false;
        out.detail += " " + p.full_name() + " failed: " + p.counterexample + ";";
      } else if (p.samples < g.min_samples) {
        out.ok = false;
        out.detail += " " + p.full_name() + " has only " + std::to_string(p.samples) +
                      " samples;";
      }
    }
  }
  out.detail = std::to_string(props) + " properties, " + std::to_string(samples) + " samples" +
               out.detail;
  return out;
}

struct Command {
  int status = -1;
  std::string output;
};

Command run_command(const std::string& cmd) {
  Command c;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return c;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) c.output.append(buf.data(), n);
  c.status = pclose(f);
  return c;
}

Outcome verify_all_cli() {
  const std::string cli = GEOCRYSTAL_CLI_PATH;
  Outcome out;
  Clock clock;
  const Command first = run_command(cli + " --format json verify all");
  const double one_run = clock.seconds();
  const Command second = run_command(cli + " --format json verify all");
  if (first.status != 0 || second.status != 0) {
    out.ok = false;
    out.detail += " nonzero exit;";
  }
  if (first.output != second.output) {
    out.ok = false;
    out.detail += " two runs differ;";
  }

  // The combined run must equal the individual suites merged.
  Json merged = Json::array();
  for (const auto& s : suite_names()) {
    const Command c = run_command(cli + " --format json verify " + s);
    const Json part = Json::parse(c.output);
    for (const auto& r : part.at("results")) merged.push_back(r);
  }
  std::sort(merged.begin(), merged.end(), [](const Json& a, const Json& b) {
    return a.at("property").get<std::string>() < b.at("property").get<std::string>();
  });
  Json all = Json::parse(first.output.empty() ? "{}" : first.output);
  if (!all.contains("results") || all.at("results") != merged) {
    out.ok = false;
    out.detail += " merged suites differ from the combined run;";
  }
  if (!all.value("passed", false)) {
    out.ok = false;
    out.detail += " report not passing;";
  }
  if (one_run >= 180) {
    out.ok = false;
    out.detail += " single run over 180 s;";
  }
  std::ostringstream os;
  os << "single run " << one_run << " s, " << all.value("properties", 0) << " properties";
  out.detail = os.str() + out.detail;
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit;
    std::function<Outcome()> run;
  };

  RunConfig base;
  RunConfig c200 = base;
  c200.trials = 200;
  RunConfig trop = base;
  trop.bridge_b = 5;
  trop.bridge_c = 5;
  trop.relation_b = 5;
  trop.relation_c = 5;
  RunConfig braid = base;
  braid.braid_z = 3;
  braid.braid_c = 3;

  const std::vector<Criterion> criteria = {
      {1, "geometric pre-crystal axioms", 5,
       [&] { return run_groups({{"verma-geometric/pre-crystal-axioms", 100}}, base); }},
      {2, "Verma relations in both orientations", 10,
       [&] { return run_groups({{"verma-geometric/relation-", 100}}, base); }},
      {3, "closed form against recursion and SL matrices", 10,
       [&] {
         return run_groups({{"verma-geometric/closed-form-vs-recursion", 800},
                            {"sln-oracle/e-act-matches-matrices", 400},
                            {"sln-oracle/phi-equals-chi", 400}},
                           c200);
       }},
      {4, "product structure", 5, [&] { return run_groups({{"product/", 200}}, c200); }},
      {5, "tropicalization and crystal Verma relations", 60,
       [&] { return run_groups({{"ud-bridge/", 1}, {"verma-crystal/", 1}}, trop); }},
      {6, "geometric braid moves", 15,
       [&] { return run_groups({{"braid-geometric/", 200}}, c200); }},
      {7, "tropical braid-type isomorphisms", 60,
       [&] { return run_groups({{"braid-tropical/", 1}}, braid); }},
      {8, "symmetric chart of type A", 2,
       [&] {
         return run_groups({{"sln-oracle/symmetric-chart", 100},
                            {"sln-oracle/btilde-matches-tropical-chart", 1}},
                           base);
       }},
      {9, "verify all is deterministic and fast", 180, [&] { return verify_all_cli(); }},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    Clock clock;
    Outcome o = c.run();
    const double t = clock.seconds();
    // Criterion 9 times a single run itself; the whole check runs the suite several times.
    const bool in_time = c.id == 9 || t < c.limit;
    const bool ok = o.ok && in_time;
    all_ok = all_ok && ok;
    std::printf("%s  criterion %d: %s (%.2f s, limit %.0f s) %s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), t, c.limit, o.detail.c_str(), in_time ? "" : " over time limit");
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
