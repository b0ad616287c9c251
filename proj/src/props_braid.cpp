#include "geocrystal/sln_oracle.hpp"
#include "verify_util.hpp"

namespace geocrystal::props {

namespace {

struct MoveCase {
  std::string name;
  CartanPtr a;
  BraidClass cls;
};

/// Each class in each orientation; the window always starts with letter 1.
const std::vector<MoveCase>& move_cases() {
  static const std::vector<MoveCase> cases = [] {
    std::vector<MoveCase> out;
    for (const auto& rc : rank2_cases()) out.push_back({rc.name, rc.a, *braid_class_for(*rc.a, 0, 1)});
    return out;
  }();
  return cases;
}

BraidMoveSpec forward_spec(const MoveCase& m) { return {m.cls, 0, 1, 0}; }
BraidMoveSpec back_spec(const MoveCase& m) { return {m.cls, 1, 0, 0}; }

}  // namespace

void register_braid(std::vector<Property>& out) {
  const std::string suite = "braid-geometric";
  for (const auto& m : move_cases()) {
    out.push_back({suite, "pre-crystal-isomorphism-" + m.name, [m](Checker& ck) {
                     const Word w = alternating(pattern_length(m.cls), 0, 1);
                     const auto spec = forward_spec(m);
                     for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                       auto p = random_point(ck.rng, m.a, w);
                       auto q = apply_move(p, spec);
                       bool ok = gamma(p) == gamma(q);
                       for (Index i = 0; i < 2; ++i) {
                         const PosRat c = ck.rng.rat();
                         ok = ok && phi(p, i) == phi(q, i) &&
                              apply_move(e_act(p, i, c), spec) == e_act(q, i, c);
                       }
                       ck.check(ok, [&] { return describe(p); });
                     }
                   }});
    out.push_back({suite, "inverse-move-" + m.name, [m](Checker& ck) {
                     const Word w = alternating(pattern_length(m.cls), 0, 1);
                     for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                       auto p = random_point(ck.rng, m.a, w);
                       ck.check(apply_move(apply_move(p, forward_spec(m)), back_spec(m)) == p,
                                [&] { return describe(p); });
                     }
                   }});
  }

  out.push_back({suite, "g2-conservation", [](Checker& ck) {
                   for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                     std::vector<PosRat> c;
                     for (int k = 0; k < 6; ++k) c.push_back(ck.rng.rat());
                     auto d = braid_G2<PosRat>(std::span<const PosRat, 6>(c.data(), 6));
                     const bool ok = d[0] * d[2] * d[4] == c[1] * c[3] * c[5] &&
                                     d[1] * d[3] * d[5] == c[0] * c[2] * c[4];
                     ck.check(ok, [&] {
                       std::string x;
                       for (const auto& v : c) x += v.str() + " ";
                       return x;
                     });
                   }
                 }});

  out.push_back({suite, "a2-matrix-identity", [](Checker& ck) {
                   // Bare move in SL3, then a move inside longer A3 hosts in SL4.
                   struct Host {
                     CartanPtr a;
                     Word w;
                     BraidMoveSpec spec;
                   };
                   const std::vector<Host> hosts = {
                       {cartan_types::a(2), Word{0, 1, 0}, {BraidClass::A2, 0, 1, 0}},
                       {cartan_types::a(3), Word{0, 1, 0, 2}, {BraidClass::A2, 0, 1, 0}},
                       {cartan_types::a(3), Word{2, 1, 2, 1, 0}, {BraidClass::A2, 1, 2, 1}},
                       {cartan_types::a(3), Word{0, 2, 0, 1, 2}, {BraidClass::A1A1, 0, 2, 0}}};
                   for (const auto& h : hosts) {
                     for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                       auto p = random_point(ck.rng, h.a, h.w);
                       auto q = apply_move(p, h.spec);
                       const std::size_t len = pattern_length(h.spec.cls);
                       bool outside = true;
                       for (std::size_t k = 0; k < p.coords.size(); ++k)
                         if (k < h.spec.pos || k >= h.spec.pos + len)
                           outside = outside && p.coords[k] == q.coords[k];
                       ck.check(outside && point_to_matrix(p) == point_to_matrix(q),
                                [&] { return describe(p); });
                     }
                   }
                 }});

  out.push_back({suite, "host-word-isomorphism", [](Checker& ck) {
                   // G2 and B2 windows inside longer words.
                   struct Host {
                     CartanPtr a;
                     Word w;
                     BraidMoveSpec spec;
                   };
                   const std::vector<Host> hosts = {
                       {cartan_types::g2(), Word{1, 0, 1, 0, 1, 0, 1}, {BraidClass::G2, 0, 1, 1}},
                       {cartan_types::b2(), Word{0, 1, 0, 1, 0, 0}, {BraidClass::B2, 0, 1, 0}},
                       {cartan_types::b2(), Word{0, 1, 0, 1, 0}, {BraidClass::B2, 1, 0, 1}}};
                   for (const auto& h : hosts) {
                     for (std::size_t s = 0; s < ck.cfg.trials && !ck.failed(); ++s) {
                       auto p = random_point(ck.rng, h.a, h.w);
                       auto q = apply_move(p, h.spec);
                       bool ok = gamma(p) == gamma(q);
                       for (Index i = 0; i < 2; ++i) {
                         const PosRat c = ck.rng.rat();
                         ok = ok && phi(p, i) == phi(q, i) &&
                              apply_move(e_act(p, i, c), h.spec) == e_act(q, i, c);
                       }
                       ck.check(ok, [&] { return describe(p); });
                     }
                   }
                 }});

  const std::string tsuite = "braid-tropical";
  for (const auto& m : move_cases()) {
    out.push_back({tsuite, "explicit-formula-" + m.name, [m](Checker& ck) {
                     const CartanPtr crystal = transpose(m.a);
                     const std::size_t len = pattern_length(m.cls);
                     const int a_ij = (*m.a)(0, 1), a_ji = (*m.a)(1, 0);
                     const int c_ij = (*crystal)(0, 1), c_ji = (*crystal)(1, 0);
                     for_each_grid(len, -ck.cfg.braid_z, ck.cfg.braid_z,
                                   [&](const std::vector<std::int64_t>& z) {
                                     if (ck.failed()) return;
                                     auto geo = from_trop(braid_window(m.cls, a_ij, a_ji, to_trop(z)));
                                     auto cry = tropical_braid_window(m.cls, c_ij, c_ji, z);
                                     ck.check(geo == cry, [&] {
                                       return "z=" + describe_values(z) + " geometric=" +
                                              describe_values(geo) +
                                              " explicit=" + describe_values(cry);
                                     });
                                   });
                   }});
    out.push_back({tsuite, "commutes-with-e-" + m.name, [m](Checker& ck) {
                     const CartanPtr crystal = transpose(m.a);
                     const Word w = alternating(pattern_length(m.cls), 0, 1);
                     const auto spec = forward_spec(m);
                     for_each_grid(w.size(), -ck.cfg.braid_z, ck.cfg.braid_z,
                                   [&](const std::vector<std::int64_t>& b) {
                                     if (ck.failed()) return;
                                     TensorCrystalElement x(crystal, w, b);
                                     const auto y = tropical_braid(x, spec);
                                     for (Index i = 0; i < 2; ++i)
                                       for (std::int64_t c = 0; c <= ck.cfg.braid_c; ++c)
                                         ck.check(tropical_braid(e_pow(x, i, c), spec) ==
                                                      e_pow(y, i, c),
                                                  [&] {
                                                    return "b=" + describe_values(b) +
                                                           " i=" + std::to_string(i + 1) +
                                                           " c=" + std::to_string(c);
                                                  });
                                   });
                   }});
    out.push_back({tsuite, "inverse-move-" + m.name, [m](Checker& ck) {
                     const CartanPtr crystal = transpose(m.a);
                     const Word w = alternating(pattern_length(m.cls), 0, 1);
                     for_each_grid(w.size(), -ck.cfg.braid_z, ck.cfg.braid_z,
                                   [&](const std::vector<std::int64_t>& b) {
                                     if (ck.failed()) return;
                                     TensorCrystalElement x(crystal, w, b);
                                     ck.check(tropical_braid(tropical_braid(x, forward_spec(m)),
                                                             back_spec(m)) == x,
                                              [&] { return "b=" + describe_values(b); });
                                   });
                   }});
  }

  out.push_back({tsuite, "g2-nine-term-maximum", [](Checker& ck) {
                   for_each_grid(6, -ck.cfg.braid_z, ck.cfg.braid_z,
                                 [&](const std::vector<std::int64_t>& z) {
                                   if (ck.failed()) return;
                                   const auto d = tropical_braid_window(BraidClass::G2, -1, -3, z);
                                   ck.check(g2_d1_nine_term(std::span<const std::int64_t, 6>(
                                                z.data(), 6)) == d[0],
                                            [&] { return "z=" + describe_values(z); });
                                 });
                 }});
}

}  // namespace geocrystal::props
