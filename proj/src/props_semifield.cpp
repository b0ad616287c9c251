#include <sstream>

#include "verify_util.hpp"

namespace geocrystal::props {

namespace {

template <class K>
std::string show3(const K& x, const K& y, const K& z) {
  std::ostringstream os;
  os << "x=" << x << " y=" << y << " z=" << z;
  return os.str();
}

template <class K>
bool laws_hold(const K& x, const K& y, const K& z) {
  const K one = K::one();
  return x + y == y + x && (x + y) + z == x + (y + z) && x * y == y * x &&
         (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z && x / x == one &&
         (x / y) * y == x && x * one == x && pow(x, 3) == x * x * x &&
         pow(x, -2) == one / (x * x) && pow(x, 0) == one;
}

/// One closure per expression family; each maps a vector of semifield
/// values to a vector. The last input is the power c where one is needed.
struct Expression {
  std::string name;
  std::size_t arity;
  std::int64_t c_lo;  // lower bound for the final input
  std::function<std::vector<PosRat>(const std::vector<PosRat>&)> rat;
  std::function<std::vector<TropInt>(const std::vector<TropInt>&)> trop;
};

template <class F>
Expression make_expression(std::string name, std::size_t arity, std::int64_t c_lo, F f) {
  return Expression{std::move(name), arity, c_lo,
                    [f](const std::vector<PosRat>& x) { return f(x); },
                    [f](const std::vector<TropInt>& x) { return f(x); }};
}

std::vector<Expression> expressions() {
  std::vector<Expression> out;
  for (const auto& rc : rank2_cases()) {
    const Word w = alternating(rc.w0_length, 0, 1);
    const CartanPtr a = rc.a;
    const std::size_t k = w.size();
    for (Index i : {Index{0}, Index{1}}) {
      out.push_back(make_expression(
          "e_act/" + rc.name + "/" + std::to_string(i + 1), k + 1, 0, [a, w, i, k](const auto& x) {
            using K = typename std::decay_t<decltype(x)>::value_type;
            GeometricPoint<K> p(a, w, std::vector<K>(x.begin(), x.begin() + k));
            return e_act(p, i, x[k]).coords;
          }));
      out.push_back(make_expression(
          "phi/" + rc.name + "/" + std::to_string(i + 1), k, -100, [a, w, i](const auto& x) {
            using K = typename std::decay_t<decltype(x)>::value_type;
            return std::vector<K>{phi(GeometricPoint<K>(a, w, x), i)};
          }));
    }
  }
  out.push_back(make_expression("braid_A2", 3, -100, [](const auto& x) {
    using K = typename std::decay_t<decltype(x)>::value_type;
    auto d = braid_A2<K>(std::span<const K, 3>(x.data(), 3));
    return std::vector<K>(d.begin(), d.end());
  }));
  out.push_back(make_expression("braid_B2", 4, -100, [](const auto& x) {
    using K = typename std::decay_t<decltype(x)>::value_type;
    auto d = braid_B2<K>(std::span<const K, 4>(x.data(), 4));
    return std::vector<K>(d.begin(), d.end());
  }));
  out.push_back(make_expression("braid_G2", 6, -100, [](const auto& x) {
    using K = typename std::decay_t<decltype(x)>::value_type;
    auto d = braid_G2<K>(std::span<const K, 6>(x.data(), 6));
    return std::vector<K>(d.begin(), d.end());
  }));
  out.push_back(make_expression("product_split", 4, 0, [](const auto& x) {
    auto [c1, c2] = product_split(x[3], x[0], x[1], x[2]);
    using K = typename std::decay_t<decltype(x)>::value_type;
    return std::vector<K>{c1, c2};
  }));
  return out;
}

}  // namespace

void register_semifield(std::vector<Property>& out) {
  out.push_back({"semifield", "posrat-laws", [](Checker& ck) {
                   for (std::size_t s = 0; s < ck.cfg.law_samples && !ck.failed(); ++s) {
                     PosRat x = ck.rng.rat(), y = ck.rng.rat(), z = ck.rng.rat();
                     ck.check(laws_hold(x, y, z), [&] { return show3(x, y, z); });
                   }
                 }});
  out.push_back({"semifield", "tropint-laws", [](Checker& ck) {
                   for (std::size_t s = 0; s < ck.cfg.law_samples && !ck.failed(); ++s) {
                     TropInt x(ck.rng.integer(-1000000, 1000000));
                     TropInt y(ck.rng.integer(-1000000, 1000000));
                     TropInt z(ck.rng.integer(-1000000, 1000000));
                     const bool ok = laws_hold(x, y, z) && TropInt::constant(3) == TropInt(0) &&
                                     x + y == TropInt(std::max(x.value(), y.value()));
                     ck.check(ok, [&] { return show3(x, y, z); });
                   }
                 }});
  out.push_back({"semifield", "tropical-homomorphism", [](Checker& ck) {
                   const auto exprs = expressions();
                   for (const auto& e : exprs) {
                     for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                       std::vector<std::int64_t> m;
                       for (std::size_t k = 0; k + 1 < e.arity; ++k)
                         m.push_back(ck.rng.integer(-3, 3));
                       m.push_back(ck.rng.integer(std::max<std::int64_t>(e.c_lo, -3), 3));
                       auto both = [&](const auto& x) {
                         using K = typename std::decay_t<decltype(x)>::value_type;
                         if constexpr (std::is_same_v<K, PosRat>) return e.rat(x);
                         else return e.trop(x);
                       };
                       auto r = check_tropical_homomorphism(both, m);
                       ck.check(r.ok, [&] {
                         return e.name + " at exponents " + describe_values(m) + ": tropical " +
                                describe_values(r.tropical) + ", degrees " +
                                Json(r.degrees).dump();
                       });
                     }
                   }
                 }});
}

}  // namespace geocrystal::props
