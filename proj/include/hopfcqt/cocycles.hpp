#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "hopfcqt/matched_pair.hpp"
#include "hopfcqt/scalar.hpp"

namespace hopfcqt {

struct CocycleTables {
  // sigma(g; f, f'), tau(g, g'; f)
  std::map<std::tuple<GIndex, GroupElement, GroupElement>, Scalar> sigma;
  std::map<std::tuple<GIndex, GIndex, GroupElement>, Scalar> tau;
  std::optional<Scalar> sigma_default = Scalar(1);
  std::optional<Scalar> tau_default = Scalar(1);
};

// Values at normalized arguments are exactly 1; everything else comes from
// the tables or the defaults.
class CocyclePair {
 public:
  CocyclePair() = default;  // trivial
  CocyclePair(const MatchedPair& mp, CocycleTables tables);

  Scalar sigma(GIndex g, const GroupElement& f, const GroupElement& f2) const;
  Scalar tau(GIndex g, GIndex g2, const GroupElement& f) const;

  bool sigma_trivial() const { return sigma_trivial_; }
  bool tau_trivial() const { return tau_trivial_; }
  bool trivial() const { return sigma_trivial_ && tau_trivial_; }
  const CocycleTables& tables() const { return t_; }

 private:
  CocycleTables t_;
  bool sigma_trivial_ = true;
  bool tau_trivial_ = true;
};

std::vector<CheckReport> verify_cocycles(const MatchedPair& mp, const CocyclePair& cp, std::size_t word_bound);

// tau(g,g;ff') = sigma(g;f,f')^2 tau(g,g;f) tau(g,g;f') for G = Z_2
bool tau_square_identity_check(const MatchedPair& mp, const CocyclePair& cp, const GroupElement& f,
                               const GroupElement& f2);

}  // namespace hopfcqt
