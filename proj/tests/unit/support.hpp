#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "geocrystal/error.hpp"
#include "geocrystal/semifield.hpp"

namespace testing {

template <class F>
geocrystal::ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const geocrystal::Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return geocrystal::ErrorKind::Parse;
}

inline geocrystal::PosRat q(const std::string& s) { return geocrystal::PosRat::parse(s); }

inline std::vector<geocrystal::PosRat> qs(std::initializer_list<const char*> v) {
  std::vector<geocrystal::PosRat> out;
  for (const char* s : v) out.push_back(q(s));
  return out;
}

inline std::vector<geocrystal::TropInt> ts(std::initializer_list<std::int64_t> v) {
  std::vector<geocrystal::TropInt> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

}  // namespace testing
