#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geocrystal/error.hpp"

namespace geocrystal {

/// Position of a label in the ordered index set I.
using Index = std::size_t;

/// Symmetrizable generalized Cartan matrix over an ordered index set.
///
/// Entries follow the pairing convention a(i, j) = <alpha_i^vee, alpha_j>.
/// The symmetrizer d satisfies a(i, j) d[j] = a(j, i) d[i], i.e. A = D B with
/// B symmetric, normalized to the smallest positive integers on each
/// connected component of the Dynkin diagram. It is computed for validation
/// only; nothing downstream reads it.
class CartanMatrix {
 public:
  /// Validates and builds. Labels default to "1", "2", ... when empty.
  /// Throws Error{NotGCM} or Error{NotSymmetrizable}.
  static CartanMatrix from_entries(std::vector<std::vector<int>> entries,
                                   std::vector<std::string> labels = {});

  std::size_t rank() const noexcept { return labels_.size(); }
  int operator()(Index i, Index j) const { return entries_[i * rank() + j]; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<long>& symmetrizer() const noexcept { return symmetrizer_; }
  std::vector<std::vector<int>> entries() const;

  /// Throws Error{BadIndex} for an unknown label.
  Index index_of(std::string_view label) const;
  const std::string& label(Index i) const { return labels_.at(i); }
  void check_index(Index i) const;

  /// Transpose; the labels are kept.
  CartanMatrix langlands_dual() const;

  bool operator==(const CartanMatrix& other) const = default;

 private:
  CartanMatrix() = default;

  std::vector<std::string> labels_;
  std::vector<int> entries_;
  std::vector<long> symmetrizer_;
};

using CartanPtr = std::shared_ptr<const CartanMatrix>;

CartanPtr make_cartan(std::vector<std::vector<int>> entries,
                      std::vector<std::string> labels = {});

/// Standard test data.
namespace cartan_types {
CartanPtr a(std::size_t n);     // A_n with a(i,i+1) = a(i+1,i) = -1
CartanPtr a1xa1();              // [[2,0],[0,2]]
CartanPtr b2();                 // [[2,-2],[-1,2]]: a(1,2) = -2
CartanPtr g2();                 // [[2,-3],[-1,2]]: a(1,2) = -3
}  // namespace cartan_types

/// Element of the root lattice in the basis of simple roots.
struct RootVector {
  std::vector<long> coeffs;

  static RootVector simple(std::size_t rank, Index i);
  bool is_positive() const;  // nonzero with every coefficient >= 0
  bool operator==(const RootVector&) const = default;
  auto operator<=>(const RootVector&) const = default;
};

/// A finite sequence of letters from I.
struct Word {
  std::vector<Index> letters;

  Word() = default;
  explicit Word(std::vector<Index> ls) : letters(std::move(ls)) {}
  Word(std::initializer_list<Index> ls) : letters(ls) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  Index operator[](std::size_t k) const { return letters[k]; }
  auto begin() const noexcept { return letters.begin(); }
  auto end() const noexcept { return letters.end(); }
  bool contains(Index i) const;
  Word concat(const Word& other) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

/// Throws Error{BadIndex} when a letter is outside the index set.
void check_word(const CartanMatrix& a, const Word& w);

std::string to_string(const CartanMatrix& a, const Word& w);

/// s_i(beta) = beta - <alpha_i^vee, beta> alpha_i.
RootVector reflect(const CartanMatrix& a, Index i, RootVector beta);

/// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}).
std::vector<RootVector> beta_sequence(const CartanMatrix& a, const Word& w);

/// alpha^{(k)} = s_{i_l} ... s_{i_{k+1}}(alpha_{i_k}); the last one is alpha_{i_l}.
std::vector<RootVector> alpha_superscripts(const CartanMatrix& a, const Word& w);

/// A word is reduced iff every entry of its beta sequence is a positive root.
bool is_reduced(const CartanMatrix& a, const Word& w);

enum class Rank2Class { Commuting, Simply, Double, Triple, Free };

std::string_view to_string(Rank2Class cls);

struct Rank2Info {
  Rank2Class cls;
  int a_ij;
  int a_ji;
  /// For Double/Triple: true when a_ij is the -2 (resp. -3) entry.
  bool forward;
};

Rank2Info rank2_class(const CartanMatrix& a, Index i, Index j);

/// One factor e_k^{c1^p c2^q} of a Verma relation, k being i or j.
struct VermaStep {
  bool on_i;
  int p;
  int q;
};

/// lhs = rhs as composites of e-actions; the rightmost factor acts first.
/// Stated for the labeling where a(i, j) is the -2 (resp. -3) entry.
struct VermaRelation {
  Rank2Class cls;
  std::vector<VermaStep> lhs;
  std::vector<VermaStep> rhs;
};

/// Throws Error{WrongType} for Rank2Class::Free.
const VermaRelation& verma_relation(Rank2Class cls);

/// Orders {x, y} as (i, j) so that a(i, j) <= a(j, i), the labeling the
/// relation table expects.
std::pair<Index, Index> verma_roles(const CartanMatrix& a, Index x, Index y);

}  // namespace geocrystal
