#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfcqt/comodule.hpp"
#include "hopfcqt/hopf.hpp"

namespace hopfcqt {

// Bilinear form R(p_g#f, p_h#f') given by a finite table. Entries are known
// (default 0) on keys whose F-part lies in the window; for infinite F the
// window is the word ball of radius `maxlen`, outside it R is unknown.
class RForm {
 public:
  RForm() = default;
  explicit RForm(ContextPtr ctx, std::optional<std::size_t> maxlen = std::nullopt);

  const ContextPtr& context() const { return ctx_; }
  const std::map<KeyPair, Scalar>& table() const { return table_; }
  std::optional<std::size_t> maxlen() const { return maxlen_; }
  bool exhaustive() const;  // F finite

  bool covers(const BasisKey& k) const;
  Scalar at(const BasisKey& a, const BasisKey& b) const;
  void set(const BasisKey& a, const BasisKey& b, const Scalar& c);  // throws InvalidArgument off-window
  std::vector<GroupElement> window_elements() const;
  std::string scope() const;

  friend bool operator==(const RForm& a, const RForm& b) {
    return a.table_ == b.table_ && a.maxlen_ == b.maxlen_;
  }

 private:
  ContextPtr ctx_;
  std::map<KeyPair, Scalar> table_;
  std::optional<std::size_t> maxlen_;
};

// R(p_g#f, p_h#f') = eps(p_g) eps(p_h)
RForm epsilon_form(const ContextPtr& ctx, std::optional<std::size_t> maxlen = std::nullopt);

// Levels: "CQT0".."CQT4" and "INV" (R(S(a1),b1) R(a2,b2) = R(a1,b1) R(S(a2),b2) = eps(a)eps(b)).
std::vector<CheckReport> verify_R(const RForm& R, const std::vector<std::string>& levels = {"CQT0", "CQT1", "CQT2",
                                                                                            "CQT3"});
bool satisfies_cqt(const RForm& R);  // CQT0..CQT3 hold on every evaluated instance

struct ZeroViolation {
  std::string rule;  // product_order | abelian_stabilizer | stabilizer_unit
  KeyPair entry;
  Scalar value;
};
std::vector<ZeroViolation> structural_zeros(const RForm& R);
CheckReport structural_zero_report(const RForm& R);

// Data for the quotient check: an epimorphism G -> Q onto an abelian group,
// plus characters of Q to try first (values indexed by Q.index).
struct QuotientData {
  Group Q;
  std::vector<GroupElement> images;  // images of G's generators
  std::vector<std::pair<std::string, std::vector<Scalar>>> characters;
};
// all characters of a finite abelian group, trivial first
std::vector<std::vector<Scalar>> group_characters(const Group& Q);

struct BatteryOptions {
  std::size_t maxlen = 4;
  std::vector<Comodule> registered;
  std::vector<QuotientData> quotients;
};
std::vector<CheckReport> necessary_battery(const ContextPtr& ctx, const BatteryOptions& opt = {});
// true when some applicable coquasitriangular condition failed (the dual-orbit
// check concerns quasitriangular structures and is ignored here)
bool battery_excludes_cqt(const std::vector<CheckReport>& reports);

// F elements in sweep order: identity, generators, then the rest of the window.
std::vector<GroupElement> ordered_window(const Group& F, std::size_t maxlen);

// S = {f : G |> f = f}; group-like basis e = sum_g a^g p_g # s of the span of p_g # s.
struct GroupLike {
  std::vector<Scalar> a;  // indexed by GIndex
  GroupElement s;
  std::string label;
};
std::vector<GroupLike> group_likes_over_S(const ContextPtr& ctx, std::size_t maxlen);
HopfElement to_element(const ContextPtr& ctx, const GroupLike& x);
Scalar evaluate(const RForm& R, const HopfElement& a, const HopfElement& b);

struct BicharacterResult {
  CheckReport overall;
  std::vector<CheckReport> parts;  // central_on_S, S_abelian, sigma_symmetric_on_S, group_likes_abelian, bicharacter
};
// R may be null: only the structural conclusions are checked.
BicharacterResult bicharacter_restriction_check(const ContextPtr& ctx, const RForm* R, std::size_t maxlen);

// Z_2 analysis
struct R11Solution {
  Scalar k;                   // R(p_1#1, p_g#1)
  std::array<Scalar, 4> table;  // R11, R1g, Rg1, Rgg at f = f' = 1
};
std::vector<R11Solution> z2_r11_solve();
std::vector<R11Solution> z2_r11_solve(const HopfContext& ctx);  // WrongGroup unless |G| = 2
RForm z2_r11_form(const ContextPtr& ctx, const R11Solution& s);  // table placed at f = f' = 1

struct ShapeVerdict {
  enum Kind { Shape1, Shape2, Nonconforming } kind = Shape1;
  std::optional<Witness> witness;
  std::vector<CheckReport> diagnostics;  // zero-product lemma and the k-dependent alternatives
};
std::string to_string(ShapeVerdict::Kind k);
ShapeVerdict z2_shape_classify(const RForm& R);  // HypothesisNotMet

// Enumerative search for R on finite contexts with |G||F| <= 8. Values of
// branching unknowns are drawn from {0} and (1/d) zeta_N^j; every returned
// form passes CQT0..CQT3.
struct SearchOptions {
  std::vector<unsigned> denominators = {1, 2, 3, 4};
  std::vector<unsigned> root_orders = {12};
  std::size_t node_budget = 20000;
  std::size_t max_solutions = 64;
  bool prune_structural = true;
};
struct SearchResult {
  std::vector<RForm> solutions;
  std::size_t nodes = 0;
  bool exhausted = false;  // search tree fully explored within the budget
};
SearchResult search_R(const ContextPtr& ctx, const SearchOptions& opt = {});

}  // namespace hopfcqt
