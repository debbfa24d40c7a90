#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfcqt/comodule.hpp"
#include "hopfcqt/error.hpp"

namespace hopfcqt {

class NonIntegralMultiplicity : public Error {
 public:
  explicit NonIntegralMultiplicity(std::vector<Scalar> m);
  const std::vector<Scalar>& multiplicities() const { return m_; }

 private:
  std::vector<Scalar> m_;
};

HopfElement char_product(const Character& a, const Character& b);
// multiplicities of x in the basis; NotInSpan / NonIntegralMultiplicity
std::vector<Scalar> decompose(const HopfElement& x, const std::vector<Character>& basis);

struct CharCommute {
  bool commutes = true;
  std::optional<BasisKey> witness;
};
CharCommute commutes(const Character& a, const Character& b);

// Irreducible characters based at the orbit of f: auto-enumerated for abelian
// stabilizers, otherwise taken from `registered` (comodules over that base point).
std::vector<Character> irreducible_characters(const ContextPtr& ctx, const GroupElement& f,
                                              const std::vector<Comodule>& registered = {});
// one representative per G-orbit among the F-components of x's support
std::vector<Character> support_basis(const HopfElement& x, const std::vector<Comodule>& registered = {});
GroupElement orbit_representative(const MatchedPair& mp, const GroupElement& f);

// G = Z_2: simples U_f, V_f (f in S) and W_f (f in T, W_f = W_{g|>f})
struct Z2Label {
  enum Kind { U, V, W } kind = U;
  GroupElement f;
  friend auto operator<=>(const Z2Label&, const Z2Label&) = default;
};
std::string to_string(const MatchedPair& mp, const Z2Label& l);
Z2Label z2_label(const MatchedPair& mp, Z2Label::Kind k, const GroupElement& f);  // validates and canonicalizes
bool z2_in_S(const MatchedPair& mp, const GroupElement& f);
Character z2_character(const ContextPtr& ctx, const Z2Label& l);
// closed-form decomposition, sorted
std::vector<Z2Label> z2_tensor_rule(const ContextPtr& ctx, const Z2Label& a, const Z2Label& b);
// char_product + decompose over the support basis, as labels, sorted
std::vector<Z2Label> z2_tensor_generic(const ContextPtr& ctx, const Z2Label& a, const Z2Label& b);
std::vector<Z2Label> z2_simples(const ContextPtr& ctx, std::size_t word_bound);

struct Z2TableRow {
  Z2Label a, b;
  std::vector<Z2Label> rule, generic;
};
std::vector<Z2TableRow> z2_table(const ContextPtr& ctx, std::size_t word_bound);

CheckReport z2_S_abelian_check(const MatchedPair& mp, std::size_t word_bound);

}  // namespace hopfcqt
