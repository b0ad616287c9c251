#include <array>

#include "verify_util.hpp"

namespace geocrystal::props {

namespace {

std::vector<Word> words_up_to(std::size_t rank, std::size_t max_len) {
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

std::string show_element(const std::string& name, const Word& w,
                         const std::vector<std::int64_t>& b, const std::string& extra) {
  std::string s = name + " word=[";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k] + 1);
  return s + "] b=" + describe_values(b) + " " + extra;
}

/// Applies a relation side with precomputed plans; the rightmost step acts first.
void run_side(const std::vector<VermaStep>& side, const EPowPlan& pi, const EPowPlan& pj,
              std::int64_t c1, std::int64_t c2, std::int64_t* buf) {
  for (auto it = side.rbegin(); it != side.rend(); ++it)
    (it->on_i ? pi : pj).apply(buf, it->p * c1 + it->q * c2, buf);
}

}  // namespace

void register_crystal(std::vector<Property>& out) {
  // Tropical e_act over A against e_pow over the transpose, exhaustively.
  for (const auto& rc : rank2_cases()) {
    if (rc.name == "a1xa1") continue;
    out.push_back({"ud-bridge", "bridge-" + rc.name, [rc](Checker& ck) {
                     const Word w = alternating(rc.w0_length, 0, 1);
                     const std::int64_t B = ck.cfg.bridge_b, C = ck.cfg.bridge_c;
                     const CartanPtr dual = transpose(rc.a);
                     const std::array<EPowPlan, 2> plans{EPowPlan(*dual, w, 0),
                                                         EPowPlan(*dual, w, 1)};
                     GeometricPoint<TropInt> p(rc.a, w, std::vector<TropInt>(w.size()));
                     std::vector<std::int64_t> crys(w.size());
                     std::size_t count = 0;
                     for_each_grid(w.size(), -B, B, [&](const std::vector<std::int64_t>& b) {
                       if (ck.failed()) return;
                       for (std::size_t k = 0; k < b.size(); ++k) p.coords[k] = TropInt(b[k]);
                       for (Index i = 0; i < 2; ++i)
                         for (std::int64_t c = 0; c <= C; ++c) {
                           const auto geo = e_act(p, i, TropInt(c));
                           plans[i].apply(b.data(), c, crys.data());
                           ++count;
                           if (from_trop(geo.coords) != crys) {
                             ck.check(false, [&] {
                               return show_element(rc.name, w, b,
                                                   "i=" + std::to_string(i + 1) +
                                                       " c=" + std::to_string(c) +
                                                       " geometric=" +
                                                       describe_values(from_trop(geo.coords)) +
                                                       " crystal=" + describe_values(crys));
                             });
                             return;
                           }
                         }
                     });
                     ck.add_samples(count);
                   }});
  }

  out.push_back({"ud-bridge", "iterated-e-equals-power", [](Checker& ck) {
                   for (const auto& rc : rank2_cases()) {
                     for (const Word& w : words_up_to(2, 4)) {
                       for (Index i = 0; i < 2; ++i) {
                         if (!w.contains(i) || ck.failed()) continue;
                         for_each_grid(w.size(), -3, 3, [&](const std::vector<std::int64_t>& b) {
                           if (ck.failed()) return;
                           TensorCrystalElement x(rc.a, w, b);
                           const TensorCrystalElement start = x;
                           for (std::int64_t c = 0; c <= 4; ++c) {
                             ck.check(x == e_pow(start, i, c), [&] {
                               return show_element(rc.name, w, b,
                                                   "i=" + std::to_string(i + 1) +
                                                       " c=" + std::to_string(c));
                             });
                             x = e_kashiwara(x, i);
                           }
                         });
                       }
                     }
                   }
                 }});

  out.push_back({"ud-bridge", "power-composition", [](Checker& ck) {
                   for (const auto& rc : rank2_cases()) {
                     const Word w = alternating(rc.w0_length, 0, 1);
                     for (Index i = 0; i < 2; ++i) {
                       EPowPlan plan(*rc.a, w, i);
                       std::vector<std::int64_t> x(w.size()), y(w.size());
                       for_each_grid(w.size(), -2, 2, [&](const std::vector<std::int64_t>& b) {
                         for (std::int64_t c1 = 0; c1 <= 3 && !ck.failed(); ++c1)
                           for (std::int64_t c2 = 0; c2 <= 3; ++c2) {
                             plan.apply(b.data(), c1 + c2, x.data());
                             plan.apply(b.data(), c2, y.data());
                             plan.apply(y.data(), c1, y.data());
                             ck.check(x == y, [&] {
                               return show_element(rc.name, w, b,
                                                   "i=" + std::to_string(i + 1) +
                                                       " c1=" + std::to_string(c1) +
                                                       " c2=" + std::to_string(c2));
                             });
                           }
                       });
                     }
                   }
                 }});

  out.push_back({"ud-bridge", "crystal-functions", [](Checker& ck) {
                   for (const auto& rc : rank2_cases()) {
                     for (const Word& w : words_up_to(2, 4)) {
                       for_each_grid(w.size(), -3, 3, [&](const std::vector<std::int64_t>& b) {
                         if (ck.failed()) return;
                         TensorCrystalElement x(rc.a, w, b);
                         for (Index i = 0; i < 2; ++i) {
                           const ExtendedInt eps = epsilon(x, i), ph = varphi(x, i);
                           bool ok = eps.is_finite() == w.contains(i) &&
                                     ph.is_finite() == w.contains(i);
                           if (w.contains(i)) {
                             ok = ok && ph.value() == eps.value() + weight_pairing(x, i);
                             const auto y = e_kashiwara(x, i);
                             RootVector wt = weight(x);
                             wt.coeffs[i] += 1;
                             ok = ok && weight(y) == wt && epsilon(y, i) == eps - 1 &&
                                  varphi(y, i) == ph + 1;
                           }
                           ck.check(ok, [&] {
                             return show_element(rc.name, w, b, "i=" + std::to_string(i + 1));
                           });
                         }
                       });
                     }
                   }
                 }});

  // The four rank-2 relations for the crystal powers. The table is read in
  // the labeling of the geometric datum, which is the transpose of the
  // crystal's own.
  for (const auto& rc : rank2_cases()) {
    const CartanPtr geometric = transpose(rc.a);
    const auto [i, j] = verma_roles(*geometric, 0, 1);
    const Rank2Class cls = rank2_class(*geometric, i, j).cls;
    out.push_back({"verma-crystal", "crystal-relation-" + rc.name,
                   [rc, i, j, cls](Checker& ck) {
                     const VermaRelation& rel = verma_relation(cls);
                     const Word w = alternating(rc.w0_length, 0, 1);
                     const EPowPlan pi(*rc.a, w, i), pj(*rc.a, w, j);
                     const std::int64_t B = ck.cfg.relation_b, C = ck.cfg.relation_c;
                     std::vector<std::int64_t> l(w.size()), r(w.size());
                     std::size_t count = 0;
                     for_each_grid(w.size(), -B, B, [&](const std::vector<std::int64_t>& b) {
                       if (ck.failed()) return;
                       for (std::int64_t c1 = 0; c1 <= C; ++c1)
                         for (std::int64_t c2 = 0; c2 <= C; ++c2) {
                           std::copy(b.begin(), b.end(), l.begin());
                           std::copy(b.begin(), b.end(), r.begin());
                           run_side(rel.lhs, pi, pj, c1, c2, l.data());
                           run_side(rel.rhs, pi, pj, c1, c2, r.data());
                           ++count;
                           if (l != r) {
                             ck.check(false, [&] {
                               return show_element(rc.name, w, b,
                                                   "c1=" + std::to_string(c1) +
                                                       " c2=" + std::to_string(c2));
                             });
                             return;
                           }
                         }
                     });
                     ck.add_samples(count);
                   }});
  }
}

}  // namespace geocrystal::props
