#include <map>
#include <queue>

#include "doctest.h"
#include "support.hpp"
#include "geocrystal/cartan.hpp"

using namespace geocrystal;
using testing::kind_of;

namespace {

RootVector rv(std::vector<long> c) { return RootVector{std::move(c)}; }

// A Weyl group element as the images of the simple roots.
using Element = std::vector<RootVector>;

Element identity(std::size_t n) {
  Element e;
  for (Index i = 0; i < n; ++i) e.push_back(RootVector::simple(n, i));
  return e;
}

Element left_mul(const CartanMatrix& a, Index i, Element w) {
  for (auto& r : w) r = reflect(a, i, r);
  return w;
}

// Length function by breadth-first search on the Cayley graph.
std::map<Element, std::size_t> lengths(const CartanMatrix& a) {
  std::map<Element, std::size_t> len;
  std::queue<Element> q;
  len[identity(a.rank())] = 0;
  q.push(identity(a.rank()));
  while (!q.empty()) {
    Element w = q.front();
    q.pop();
    for (Index i = 0; i < a.rank(); ++i) {
      Element v = left_mul(a, i, w);
      if (len.emplace(v, len[w] + 1).second) q.push(v);
    }
  }
  return len;
}

void all_words(std::size_t rank, std::size_t max_len, auto&& f) {
  std::vector<Index> w;
  auto rec = [&](auto&& self) -> void {
    f(Word(w));
    if (w.size() == max_len) return;
    for (Index i = 0; i < rank; ++i) {
      w.push_back(i);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

TEST_CASE("symmetrizer") {
  CHECK(make_cartan({{2}})->symmetrizer() == std::vector<long>{1});
  CHECK(cartan_types::a(2)->symmetrizer() == std::vector<long>{1, 1});
  auto g = make_cartan({{2, -1}, {-3, 2}});
  CHECK(g->symmetrizer() == std::vector<long>{1, 3});
  CHECK((*g)(0, 1) * g->symmetrizer()[1] == (*g)(1, 0) * g->symmetrizer()[0]);
  // Components normalize separately.
  auto two = make_cartan({{2, 0, 0}, {0, 2, -2}, {0, -1, 2}});
  CHECK(two->symmetrizer() == std::vector<long>{1, 2, 1});
}

TEST_CASE("validation errors") {
  CHECK(kind_of([] { make_cartan({{2, 1}, {-1, 2}}); }) == ErrorKind::NotGCM);
  CHECK(kind_of([] { make_cartan({{3}}); }) == ErrorKind::NotGCM);
  CHECK(kind_of([] { make_cartan({{2, 0}, {-1, 2}}); }) == ErrorKind::NotGCM);
  CHECK(kind_of([] { make_cartan({{2, -1}}); }) == ErrorKind::NotGCM);
  // A 3-cycle with inconsistent ratios.
  CHECK(kind_of([] { make_cartan({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}); }) ==
        ErrorKind::NotSymmetrizable);
  auto a = cartan_types::a(2);
  CHECK(kind_of([&] { a->index_of("7"); }) == ErrorKind::BadIndex);
  CHECK(kind_of([&] { check_word(*a, Word{0, 2}); }) == ErrorKind::BadIndex);
}

TEST_CASE("labels and dual") {
  auto a = make_cartan({{2, -2}, {-1, 2}}, {"x", "y"});
  CHECK(a->index_of("y") == 1);
  CHECK(a->label(0) == "x");
  auto d = a->langlands_dual();
  CHECK(d(0, 1) == -1);
  CHECK(d(1, 0) == -2);
  CHECK(d.labels() == a->labels());
  CHECK(to_string(*a, Word{0, 1, 0}) == "(x,y,x)");
}

TEST_CASE("reflect") {
  auto a2 = cartan_types::a(2);
  CHECK(reflect(*a2, 0, rv({1, 0})) == rv({-1, 0}));
  CHECK(reflect(*a2, 0, rv({0, 1})) == rv({1, 1}));
  auto g = make_cartan({{2, -1}, {-3, 2}});
  CHECK(reflect(*g, 1, rv({1, 0})) == rv({1, 3}));

  const std::vector<CartanPtr> data = {cartan_types::a(3), cartan_types::b2(), cartan_types::g2(),
                                       make_cartan({{2, -1, 0}, {-2, 2, -1}, {0, -1, 2}})};
  for (const auto& c : data)
    for (Index i = 0; i < c->rank(); ++i)
      for (long x = -10; x <= 10; x += 3)
        for (long y = -10; y <= 10; y += 4) {
          RootVector b = RootVector::simple(c->rank(), 0);
          b.coeffs[0] = x;
          b.coeffs[1] = y;
          CHECK(reflect(*c, i, reflect(*c, i, b)) == b);
        }
}

TEST_CASE("beta sequence and superscripts") {
  auto a2 = cartan_types::a(2);
  CHECK(beta_sequence(*a2, Word{0}) == std::vector{rv({1, 0})});
  CHECK(beta_sequence(*a2, Word{0, 1, 0}) == std::vector{rv({1, 0}), rv({1, 1}), rv({0, 1})});
  CHECK(beta_sequence(*a2, Word{0, 0}) == std::vector{rv({1, 0}), rv({-1, 0})});
  CHECK(alpha_superscripts(*a2, Word{1}) == std::vector{rv({0, 1})});
  CHECK(alpha_superscripts(*a2, Word{0, 1}) == std::vector{rv({1, 1}), rv({0, 1})});
  CHECK(alpha_superscripts(*a2, Word{1, 0}) == std::vector{rv({1, 1}), rv({1, 0})});
}

TEST_CASE("is_reduced") {
  CHECK(is_reduced(*cartan_types::a(2), Word{0, 1, 0}));
  CHECK_FALSE(is_reduced(*cartan_types::a(2), Word{0, 0}));
  CHECK(is_reduced(*cartan_types::g2(), Word{0, 1, 0, 1, 0, 1}));
  CHECK_FALSE(is_reduced(*cartan_types::g2(), Word{0, 1, 0, 1, 0, 1, 0}));
}

TEST_CASE("is_reduced agrees with the Weyl group length") {
  const std::vector<CartanPtr> data = {cartan_types::a(2), cartan_types::b2(), cartan_types::g2(),
                                       cartan_types::a1xa1(), cartan_types::a(3)};
  for (const auto& a : data) {
    const auto len = lengths(*a);
    all_words(a->rank(), 6, [&](const Word& w) {
      Element e = identity(a->rank());
      for (std::size_t k = w.size(); k-- > 0;) e = left_mul(*a, w[k], e);
      CHECK(is_reduced(*a, w) == (len.at(e) == w.size()));
    });
  }
  CHECK(lengths(*cartan_types::g2()).size() == 12);
  CHECK(lengths(*cartan_types::a(2)).size() == 6);
}

TEST_CASE("rank-2 classes") {
  CHECK(rank2_class(*cartan_types::a1xa1(), 0, 1).cls == Rank2Class::Commuting);
  CHECK(rank2_class(*cartan_types::a(2), 0, 1).cls == Rank2Class::Simply);
  CHECK(rank2_class(*cartan_types::b2(), 0, 1).cls == Rank2Class::Double);
  CHECK(rank2_class(*cartan_types::g2(), 1, 0).cls == Rank2Class::Triple);
  CHECK(rank2_class(*make_cartan({{2, -2}, {-2, 2}}), 0, 1).cls == Rank2Class::Free);
  CHECK(kind_of([] { verma_relation(Rank2Class::Free); }) == ErrorKind::WrongType);
  CHECK(verma_roles(*cartan_types::g2(), 1, 0) == std::pair<Index, Index>{0, 1});
  auto dual = make_cartan({{2, -1}, {-3, 2}});
  CHECK(verma_roles(*dual, 0, 1) == std::pair<Index, Index>{1, 0});
}

// Each side of a relation is an e-string whose exponents are the alpha
// superscripts of its letters, c1 and c2 standing for the two simple-root
// components. The simply-laced rows use the swapped assignment, which is the
// same relation with c1 and c2 exchanged.
TEST_CASE("Verma table matches alpha superscripts") {
  const std::vector<CartanPtr> data = {cartan_types::a1xa1(), cartan_types::a(2),
                                       cartan_types::b2(), cartan_types::g2()};
  for (const auto& a : data) {
    const auto [i, j] = verma_roles(*a, 0, 1);
    const auto& rel = verma_relation(rank2_class(*a, i, j).cls);
    auto matches = [&, i = i, j = j](Index pi, Index qi) {
      for (const auto* side : {&rel.lhs, &rel.rhs}) {
        std::vector<Index> letters;
        for (const auto& s : *side) letters.push_back(s.on_i ? i : j);
        const auto sup = alpha_superscripts(*a, Word(letters));
        for (std::size_t k = 0; k < side->size(); ++k)
          if (sup[k].coeffs[pi] != (*side)[k].p || sup[k].coeffs[qi] != (*side)[k].q) return false;
      }
      return true;
    };
    CHECK((matches(i, j) || matches(j, i)));
  }
}
