#include "geocrystal/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "verify_util.hpp"

namespace geocrystal {

void RunConfig::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::Parse, what); };
  if (trials < 1) bad("trials must be >= 1");
  if (law_samples < 1) bad("law samples must be >= 1");
  if (max_word_length < 1 || max_word_length > 10) bad("max word length must be in 1..10");
  for (auto b : {bridge_b, relation_b, braid_z})
    if (b < 0 || b > 50) bad("grid bounds must be in 0..50");
  for (auto c : {bridge_c, relation_c, braid_c})
    if (c < 0 || c > 50) bad("power bounds must be in 0..50");
}

bool Report::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.passed; });
}

void Report::merge(const Report& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
  sort();
}

void Report::sort() {
  std::sort(results.begin(), results.end(), [](const PropertyResult& x, const PropertyResult& y) {
    return x.full_name() < y.full_name();
  });
}

Json Report::to_json() const {
  Json props = Json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    Json j;
    j["property"] = r.full_name();
    j["samples"] = r.samples;
    j["passed"] = r.passed;
    if (!r.passed) {
      j["counterexample"] = r.counterexample;
      ++failed;
    }
    props.push_back(std::move(j));
  }
  Json out;
  out["passed"] = failed == 0;
  out["properties"] = results.size();
  out["failed"] = failed;
  out["results"] = std::move(props);
  return out;
}

std::string Report::to_human() const {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "PASS  " : "FAIL  ") << r.full_name() << "  samples=" << r.samples << '\n';
    if (!r.passed) {
      os << "      counterexample: " << r.counterexample << '\n';
      ++failed;
    }
  }
  os << results.size() << " properties, " << failed << " failed\n";
  return os.str();
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::string_view stream) : gen_(splitmix(seed ^ fnv1a(stream))) {}

PosRat Rng::rat() {
  std::uniform_int_distribution<long> d(1, 1000);
  const long p = d(gen_);
  const long q = d(gen_);
  return PosRat(p, q);
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> props = [] {
    std::vector<Property> out;
    props::register_semifield(out);
    props::register_geometric(out);
    props::register_product(out);
    props::register_crystal(out);
    props::register_braid(out);
    props::register_sln(out);
    return out;
  }();
  return props;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "semifield",       "verma-geometric", "verma-crystal",  "product",
      "ud-bridge",       "braid-geometric", "braid-tropical", "sln-oracle"};
  return names;
}

PropertyResult run_property(const Property& p, const RunConfig& cfg) {
  PropertyResult res;
  res.suite = p.suite;
  res.name = p.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    Checker ck(cfg, res);
    p.body(ck);
  } catch (const std::exception& e) {
    res.passed = false;
    res.counterexample = std::string("exception: ") + e.what();
  }
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

Report run_suite(std::string_view name, const RunConfig& cfg) {
  cfg.validate();
  const auto& names = suite_names();
  if (name != "all" && std::find(names.begin(), names.end(), name) == names.end())
    throw Error(ErrorKind::Parse, "unknown suite '" + std::string(name) + "'");
  Report r;
  for (const auto& p : all_properties())
    if (name == "all" || p.suite == name) r.results.push_back(run_property(p, cfg));
  r.sort();
  return r;
}

Report run_matching(std::string_view prefix, const RunConfig& cfg) {
  cfg.validate();
  Report r;
  for (const auto& p : all_properties()) {
    const std::string full = p.suite + "/" + p.name;
    if (full.compare(0, prefix.size(), prefix) == 0) r.results.push_back(run_property(p, cfg));
  }
  r.sort();
  return r;
}

namespace props {

std::string describe_values(const std::vector<std::int64_t>& v) {
  return Json(v).dump();
}

const std::vector<Rank2Case>& rank2_cases() {
  static const std::vector<Rank2Case> cases = [] {
    auto b2 = cartan_types::b2();
    auto g2 = cartan_types::g2();
    return std::vector<Rank2Case>{
        {"a1xa1", cartan_types::a1xa1(), 2}, {"a2", cartan_types::a(2), 3},
        {"b2", b2, 4},                        {"b2-dual", transpose(b2), 4},
        {"g2", g2, 6},                        {"g2-dual", transpose(g2), 6}};
  }();
  return cases;
}

}  // namespace props

}  // namespace geocrystal
