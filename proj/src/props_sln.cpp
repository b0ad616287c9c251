#include "geocrystal/sln_oracle.hpp"
#include "verify_util.hpp"

namespace geocrystal::props {

namespace {

mpq_class signed_rat(Rng& rng) {
  mpq_class v = rng.rat().value();
  return rng.index(2) == 0 ? mpq_class(-v) : v;
}

std::string show_rats(const std::vector<mpq_class>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].get_str();
  return s + "]";
}

}  // namespace

void register_sln(std::vector<Property>& out) {
  const std::string suite = "sln-oracle";

  out.push_back({suite, "phi-equals-chi", [](Checker& ck) {
                   for (std::size_t n : {2, 3}) {
                     const CartanPtr a = cartan_types::a(n);
                     for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                       const Word w = random_word(ck.rng, n, 1, 6);
                       auto p = random_point(ck.rng, a, w);
                       const ExactMatrix b = pi_minus(point_to_matrix(p)).b;
                       bool ok = true;
                       for (Index i = 0; i < n; ++i)
                         if (w.contains(i)) ok = ok && phi(p, i).value() == chi(b, i);
                       ck.check(ok, [&] { return describe(p); });
                     }
                   }
                 }});

  out.push_back({suite, "e-act-matches-matrices", [](Checker& ck) {
                   for (std::size_t n : {2, 3}) {
                     const CartanPtr a = cartan_types::a(n);
                     for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                       const Word w = random_word(ck.rng, n, 1, 6);
                       auto p = random_point(ck.rng, a, w);
                       const Index i = w[ck.rng.index(w.size())];
                       const PosRat c = ck.rng.rat();
                       const mpq_class x = (c.value() - 1) / phi(p, i).value();
                       const ExactMatrix b = pi_minus(gen_x(n, i, x) * point_to_matrix(p)).b;
                       ck.check(point_to_matrix(e_act(p, i, c)) == b, [&] {
                         return "i=" + std::to_string(i + 1) + " c=" + c.str() + " " + describe(p);
                       });
                     }
                   }
                 }});

  out.push_back({suite, "factorization-roundtrip", [](Checker& ck) {
                   for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                     const std::size_t dim = 2 + ck.rng.index(3);
                     ExactMatrix b(dim), u = ExactMatrix::identity(dim);
                     for (std::size_t r = 0; r < dim; ++r) {
                       b(r, r) = signed_rat(ck.rng);
                       for (std::size_t c = 0; c < r; ++c) b(r, c) = signed_rat(ck.rng);
                       for (std::size_t c = r + 1; c < dim; ++c) u(r, c) = signed_rat(ck.rng);
                     }
                     const BUFactors f = pi_minus(b * u);
                     ck.check(f.b == b && f.u == u && f.b.is_lower_triangular() &&
                                  f.u.is_unit_upper_triangular(),
                              [&] { return Json(to_json(b * u)).dump(); });
                   }
                 }});

  out.push_back({suite, "generator-determinants", [](Checker& ck) {
                   for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                     const std::size_t n = 1 + ck.rng.index(3);
                     ExactMatrix g = ExactMatrix::identity(n + 1);
                     for (int k = 0; k < 6; ++k) {
                       const Index i = ck.rng.index(n);
                       switch (ck.rng.index(4)) {
                         case 0: g = g * gen_y(n, i, signed_rat(ck.rng)); break;
                         case 1: g = g * gen_x(n, i, signed_rat(ck.rng)); break;
                         case 2: g = g * gen_alpha_vee(n, i, signed_rat(ck.rng)); break;
                         default: g = g * gen_sbar(n, i); break;
                       }
                     }
                     ck.check(g.determinant() == 1, [&] { return Json(to_json(g)).dump(); });
                   }
                 }});

  out.push_back({suite, "x-y-exchange-relation", [](Checker& ck) {
                   for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                     const std::size_t n = 1 + ck.rng.index(3);
                     const Index i = ck.rng.index(n);
                     const mpq_class a = signed_rat(ck.rng), b = signed_rat(ck.rng);
                     const mpq_class d = 1 + a * b;
                     if (sgn(d) == 0) continue;
                     const bool ok = gen_x(n, i, a) * gen_y(n, i, b) ==
                                     gen_y(n, i, b / d) * gen_alpha_vee(n, i, d) * gen_x(n, i, a / d);
                     ck.check(ok, [&] { return "a=" + a.get_str() + " b=" + b.get_str(); });
                   }
                 }});

  out.push_back({suite, "root-subgroup-commutation", [](Checker& ck) {
                   for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                     const mpq_class a = signed_rat(ck.rng), b = signed_rat(ck.rng);
                     // y_{a1+a2}(t) = exp(t [f_1, f_2]) = I - t E_31
                     ExactMatrix y12 = ExactMatrix::identity(3);
                     y12(2, 0) = -a * b;
                     const bool ok = gen_y(2, 0, a) * gen_y(2, 1, b) ==
                                     y12 * gen_y(2, 1, b) * gen_y(2, 0, a);
                     ck.check(ok, [&] { return "a=" + a.get_str() + " b=" + b.get_str(); });
                   }
                 }});

  out.push_back({suite, "normal-form-extraction", [](Checker& ck) {
                   struct Case {
                     std::size_t n;
                     Word w;
                   };
                   const std::vector<Case> cases = {{1, Word{0}},
                                                    {2, Word{0, 1, 0}},
                                                    {2, Word{1, 0}},
                                                    {3, Word{0, 1, 0, 2, 1, 0}},
                                                    {3, Word{1, 0, 2, 1}}};
                   for (const auto& [n, w] : cases) {
                     const CartanPtr a = cartan_types::a(n);
                     if (!is_reduced(*a, w)) throw Error(ErrorKind::WrongType, "case word not reduced");
                     for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                       std::vector<mpq_class> coords;
                       for (std::size_t k = 0; k < w.size(); ++k) coords.push_back(ck.rng.rat().value());
                       auto cp = extract_yw_coords(n, w, coords);
                       // c' lives in Q^x; it need not stay positive.
                       bool ok = cp.has_value();
                       if (ok) {
                         ExactMatrix prod = ExactMatrix::identity(n + 1);
                         for (std::size_t k = 0; k < w.size(); ++k)
                           prod = prod * gen_y(n, w[k], 1 / (*cp)[k]) * gen_alpha_vee(n, w[k], (*cp)[k]);
                         ok = pi_minus(uw_to_matrix(n, w, coords)).b == prod;
                       }
                       ck.check(ok, [&] { return "a=" + show_rats(coords); });
                     }
                   }
                 }});

  out.push_back({suite, "symmetric-chart", [](Checker& ck) {
                   for (std::size_t n = 1; n <= 4; ++n) {
                     const CartanPtr a = cartan_types::a(n);
                     for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                       std::vector<PosRat> av;
                       std::vector<mpq_class> raw;
                       for (std::size_t k = 0; k < n; ++k) {
                         av.push_back(ck.rng.rat());
                         raw.push_back(av.back().value());
                       }
                       const auto p = symmetric_chart(a, av);
                       bool ok = point_to_matrix(p) == symmetric_chart_matrix(raw);
                       const auto g = gamma(p);
                       for (Index i = 0; i < n; ++i) {
                         ok = ok && phi(p, i) == PosRat::one() / av[i] && g.u[i] == p.coords[i];
                         const PosRat c = ck.rng.rat();
                         auto want = symmetric_chart_inverse(p);
                         want[i] = want[i] * c;
                         want[i + 1] = want[i + 1] / c;
                         ok = ok && symmetric_chart_inverse(e_act(p, i, c)) == want;
                       }
                       ck.check(ok, [&] { return describe(p); });
                     }
                   }
                 }});

  out.push_back({suite, "btilde-matches-tropical-chart", [](Checker& ck) {
                   for (std::size_t n = 1; n <= 3; ++n) {
                     const CartanPtr a = cartan_types::a(n);
                     for_each_grid(n, -3, 3, [&](const std::vector<std::int64_t>& head) {
                       if (ck.failed()) return;
                       std::vector<std::int64_t> x = head;
                       std::int64_t sum = 0;
                       for (auto v : head) sum += v;
                       x.push_back(-sum);
                       const BtildeElement bx(x);
                       const auto p = symmetric_chart(a, to_trop(head));
                       for (Index i = 0; i < n; ++i)
                         for (std::int64_t c = -3; c <= 3; ++c) {
                           const auto got = from_trop(symmetric_chart_inverse(e_act(p, i, TropInt(c))));
                           ck.check(got == btilde_e(bx, i, c).x, [&] {
                             return "x=" + describe_values(x) + " i=" + std::to_string(i + 1) +
                                    " c=" + std::to_string(c);
                           });
                         }
                     });
                   }
                 }});
}

}  // namespace geocrystal::props
