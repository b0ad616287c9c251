#include "verify_util.hpp"

namespace geocrystal::props {

namespace {

/// All words over `rank` letters with lengths 1..max_len.
std::vector<Word> all_words(std::size_t rank, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (Index i = 0; i < rank; ++i) {
        Word v = w;
        v.letters.push_back(i);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

template <Semifield K>
GeometricPoint<K> apply_relation_side(GeometricPoint<K> p, const std::vector<VermaStep>& side,
                                      Index i, Index j, const K& c1, const K& c2) {
  for (auto it = side.rbegin(); it != side.rend(); ++it)
    p = e_act(p, it->on_i ? i : j, pow(c1, it->p) * pow(c2, it->q));
  return p;
}

template <Semifield K>
bool gamma_equivariant(const GeometricPoint<K>& p, const GeometricPoint<K>& q, Index i,
                       const K& c) {
  TorusElement<K> want = gamma(p);
  want.u[i] = want.u[i] * c;
  return gamma(q) == want;
}

std::string relation_label(Rank2Class cls) {
  switch (cls) {
    case Rank2Class::Commuting: return "commuting";
    case Rank2Class::Simply: return "simply-laced";
    case Rank2Class::Double: return "double";
    case Rank2Class::Triple: return "triple";
    case Rank2Class::Free: return "free";
  }
  return "?";
}

}  // namespace

void register_geometric(std::vector<Property>& out) {
  const std::string suite = "verma-geometric";

  out.push_back({suite, "pre-crystal-axioms", [](Checker& ck) {
                   const std::vector<NamedCartan> data = {{"a2", cartan_types::a(2)},
                                                          {"b2", cartan_types::b2()},
                                                          {"g2", cartan_types::g2()},
                                                          {"a1xa1", cartan_types::a1xa1()}};
                   for (const auto& [name, a] : data) {
                     for (const Word& w : all_words(2, ck.cfg.max_word_length)) {
                       for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                         auto p = random_point(ck.rng, a, w);
                         auto t = random_trop_point(ck.rng, a, w, 20);
                         for (Index i = 0; i < 2; ++i) {
                           if (!w.contains(i)) continue;
                           const PosRat c = ck.rng.rat();
                           const auto q = e_act(p, i, c);
                           const TropInt tc(ck.rng.integer(-20, 20));
                           const auto tq = e_act(t, i, tc);
                           const bool ok = e_act(p, i, PosRat::one()) == p &&
                                           gamma_equivariant(p, q, i, c) &&
                                           e_act(t, i, TropInt::one()) == t &&
                                           gamma_equivariant(t, tq, i, tc);
                           ck.check(ok, [&] {
                             return name + " i=" + std::to_string(i + 1) + " c=" + c.str() +
                                    " tropical c=" + std::to_string(tc.value()) + " " +
                                    describe(p) + " " + describe(t);
                           });
                         }
                       }
                     }
                   }
                 }});

  for (const auto& rc : rank2_cases()) {
    const auto [i, j] = verma_roles(*rc.a, 0, 1);
    const Rank2Info info = rank2_class(*rc.a, i, j);
    out.push_back({suite, "relation-" + relation_label(info.cls) + "-" + rc.name,
                   [rc, i, j, info](Checker& ck) {
                     const VermaRelation& rel = verma_relation(info.cls);
                     const Word w = alternating(rc.w0_length, 0, 1);
                     for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                       auto p = random_point(ck.rng, rc.a, w);
                       const PosRat c1 = ck.rng.rat(), c2 = ck.rng.rat();
                       const auto l = apply_relation_side(p, rel.lhs, i, j, c1, c2);
                       const auto r = apply_relation_side(p, rel.rhs, i, j, c1, c2);
                       ck.check(l == r, [&] {
                         return "c1=" + c1.str() + " c2=" + c2.str() + " " + describe(p);
                       });
                     }
                   }});
  }

  out.push_back({suite, "word-independence", [](Checker& ck) {
                   for (const auto& rc : rank2_cases()) {
                     const Word w = alternating(rc.w0_length, 0, 1);
                     const Word v = alternating(rc.w0_length, 1, 0);
                     for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                       auto p = random_point(ck.rng, rc.a, w);
                       TorusElement<PosRat> t(rc.a, {ck.rng.rat(), ck.rng.rat()});
                       ck.check(e_string(w, t, p) == e_string(v, t, p), [&] {
                         return rc.name + " t=(" + t.u[0].str() + "," + t.u[1].str() + ") " +
                                describe(p);
                       });
                     }
                   }
                 }});

  out.push_back({suite, "closed-form-vs-recursion", [](Checker& ck) {
                   const std::vector<NamedCartan> data = {{"a2", cartan_types::a(2)},
                                                          {"b2", cartan_types::b2()},
                                                          {"g2", cartan_types::g2()},
                                                          {"a3", cartan_types::a(3)}};
                   for (const auto& [name, a] : data) {
                     for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                       const Word w = random_word(ck.rng, a->rank(), 1, 6);
                       auto p = random_point(ck.rng, a, w);
                       const Index i = w[ck.rng.index(w.size())];
                       const PosRat c = ck.rng.rat();
                       ck.check(e_act(p, i, c) == e_act_recursive(p, i, c), [&] {
                         return name + " i=" + std::to_string(i + 1) + " c=" + c.str() + " " +
                                describe(p);
                       });
                     }
                   }
                 }});
}

void register_product(std::vector<Property>& out) {
  const std::string suite = "product";
  struct Sample {
    std::string name;
    GeometricPoint<PosRat> p, q;
    Index i;
    PosRat c;
  };
  // Random factors over a2, b2, g2 that both contain the acting letter.
  auto draw = [](Checker& ck, std::size_t s) {
    static const std::vector<NamedCartan> data = {
        {"a2", cartan_types::a(2)}, {"b2", cartan_types::b2()}, {"g2", cartan_types::g2()}};
    const auto& [name, a] = data[s % data.size()];
    const Index i = ck.rng.index(2);
    auto word_with = [&] {
      Word w = random_word(ck.rng, 2, 0, 4);
      w.letters.insert(w.letters.begin() + static_cast<long>(ck.rng.index(w.size() + 1)), i);
      return w;
    };
    Word wx = word_with();
    Word wy = word_with();
    return Sample{name, random_point(ck.rng, a, wx), random_point(ck.rng, a, wy), i, ck.rng.rat()};
  };
  auto show = [](const Sample& x) {
    return x.name + " i=" + std::to_string(x.i + 1) + " c=" + x.c.str() + " x=" + describe(x.p) +
           " y=" + describe(x.q);
  };

  out.push_back({suite, "phi-of-product", [=](Checker& ck) {
                   for (std::size_t s = 0; s < 3 * ck.cfg.trials && !ck.failed(); ++s) {
                     Sample x = draw(ck, s);
                     const PosRat ag = alpha_eval(gamma(x.p), x.i);
                     const bool ok =
                         phi(concat(x.p, x.q), x.i) == phi(x.p, x.i) + phi(x.q, x.i) / ag;
                     ck.check(ok, [&] { return show(x); });
                   }
                 }});
  out.push_back({suite, "gamma-of-product", [=](Checker& ck) {
                   for (std::size_t s = 0; s < 3 * ck.cfg.trials && !ck.failed(); ++s) {
                     Sample x = draw(ck, s);
                     auto gx = gamma(x.p);
                     auto gy = gamma(x.q);
                     auto gz = gamma(concat(x.p, x.q));
                     bool ok = true;
                     for (Index k = 0; k < gz.u.size(); ++k) ok = ok && gz.u[k] == gx.u[k] * gy.u[k];
                     ck.check(ok, [&] { return show(x); });
                   }
                 }});
  out.push_back({suite, "split-multiplies-to-c", [=](Checker& ck) {
                   for (std::size_t s = 0; s < 3 * ck.cfg.trials && !ck.failed(); ++s) {
                     Sample x = draw(ck, s);
                     auto [c1, c2] = product_split(x.c, phi(x.p, x.i), phi(x.q, x.i),
                                                   alpha_eval(gamma(x.p), x.i));
                     ck.check(c1 * c2 == x.c, [&] { return show(x); });
                   }
                 }});
  out.push_back({suite, "action-on-product", [=](Checker& ck) {
                   for (std::size_t s = 0; s < 3 * ck.cfg.trials && !ck.failed(); ++s) {
                     Sample x = draw(ck, s);
                     auto [c1, c2] = product_split(x.c, phi(x.p, x.i), phi(x.q, x.i),
                                                   alpha_eval(gamma(x.p), x.i));
                     const bool ok = e_act(concat(x.p, x.q), x.i, x.c) ==
                                     concat(e_act(x.p, x.i, c1), e_act(x.q, x.i, c2));
                     ck.check(ok, [&] { return show(x); });
                   }
                 }});
}

}  // namespace geocrystal::props
