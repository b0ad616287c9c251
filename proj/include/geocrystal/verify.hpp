#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "geocrystal/json_io.hpp"
#include "geocrystal/semifield.hpp"

namespace geocrystal {

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 100;            // random points per property
  std::size_t law_samples = 1000;      // semifield law samples
  std::size_t max_word_length = 6;     // pre-crystal axioms sweep
  std::int64_t bridge_b = 5;           // tropical bridge grid |b_j| <= bridge_b
  std::int64_t bridge_c = 5;           // and 0 <= c <= bridge_c
  std::int64_t relation_b = 4;         // crystal Verma relations grid
  std::int64_t relation_c = 3;
  std::int64_t braid_z = 3;            // braid-type isomorphism grids
  std::int64_t braid_c = 3;

  /// Throws Error{Parse} when a bound is out of range.
  void validate() const;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  std::size_t samples = 0;
  bool passed = true;
  std::string counterexample;
  double seconds = 0;

  std::string full_name() const { return suite + "/" + name; }
};

struct Report {
  std::vector<PropertyResult> results;

  bool passed() const;
  void merge(const Report& other);
  void sort();
  /// Timing is left out so equal seeds give byte-identical output.
  Json to_json() const;
  std::string to_human() const;
};

/// Uniform draws for the harness. p/q rationals with p, q in [1, 1000].
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view stream);
  PosRat rat();
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1)); }

 private:
  std::mt19937_64 gen_;
};

/// Running state handed to a property body.
class Checker {
 public:
  Checker(const RunConfig& cfg, PropertyResult& res)
      : cfg(cfg), rng(cfg.seed, res.full_name()), res_(res) {}

  const RunConfig& cfg;
  Rng rng;

  /// Counts a sample; the first failure records the counterexample.
  template <class Describe>
  bool check(bool ok, Describe&& describe) {
    ++res_.samples;
    if (!ok && res_.passed) {
      res_.passed = false;
      res_.counterexample = describe();
    }
    return ok;
  }
  void add_samples(std::size_t n) { res_.samples += n; }
  bool failed() const { return !res_.passed; }

 private:
  PropertyResult& res_;
};

struct Property {
  std::string suite;
  std::string name;
  std::function<void(Checker&)> body;
};

/// Every registered property in suite order.
const std::vector<Property>& all_properties();

/// semifield, verma-geometric, verma-crystal, product, ud-bridge,
/// braid-geometric, braid-tropical, sln-oracle.
const std::vector<std::string>& suite_names();

/// Runs one property; exceptions turn into failures.
PropertyResult run_property(const Property& p, const RunConfig& cfg);

/// `name` is a suite name or "all". Throws Error{Parse} for unknown names.
Report run_suite(std::string_view name, const RunConfig& cfg);

/// Runs properties whose full name starts with `prefix`.
Report run_matching(std::string_view prefix, const RunConfig& cfg);

}  // namespace geocrystal
