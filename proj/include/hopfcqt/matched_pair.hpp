#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "hopfcqt/group.hpp"
#include "hopfcqt/report.hpp"

namespace hopfcqt {

// Elements of the finite group G are addressed by their index in G.elements();
// index 0 is the identity.
using GIndex = std::size_t;

class MatchedPair {
 public:
  using LeftRule = std::function<GroupElement(GIndex g, std::size_t gen)>;
  using RightRule = std::function<GIndex(GIndex g, std::size_t gen)>;

  // left[g][s] = g |> s_s, right[g][s] = g <| s_s for generators s_s of F
  MatchedPair(Group G, Group F, std::vector<std::vector<GroupElement>> left,
              std::vector<std::vector<GIndex>> right);
  static MatchedPair from_rules(Group G, Group F, const LeftRule& left, const RightRule& right);
  static MatchedPair trivial(Group G, Group F);
  // finite F only: left[g][i], right[g][i] for i indexing F.elements()
  static MatchedPair from_full_tables(Group G, Group F, std::vector<std::vector<GroupElement>> left,
                                      std::vector<std::vector<GIndex>> right);

  const Group& G() const { return G_; }
  const Group& F() const { return F_; }
  std::size_t order_G() const { return nG_; }

  GIndex gmul(GIndex a, GIndex b) const { return gtab_[a * nG_ + b]; }
  GIndex ginv(GIndex a) const { return ginv_[a]; }
  GIndex gindex(const GroupElement& g) const { return G_.index(g); }
  GroupElement gelem(GIndex g) const { return G_.element(g); }
  std::string gname(GIndex g) const { return G_.name(G_.element(g)); }
  std::string fname(const GroupElement& f) const { return F_.name(f); }

  GroupElement left(GIndex g, const GroupElement& f) const;  // g |> f
  GIndex right(GIndex g, const GroupElement& f) const;       // g <| f
  // (g <| w, g |> w) by folding the matched-pair extension rule along the word
  std::pair<GIndex, GroupElement> act_word(GIndex g, const Word& w) const;

  bool has_full_tables() const { return full_; }
  const std::vector<std::vector<GroupElement>>& left_on_generators() const { return lgen_; }
  const std::vector<std::vector<GIndex>>& right_on_generators() const { return rgen_; }
  bool left_trivial() const;
  bool right_trivial() const;  // central extension
  bool equivalent(const MatchedPair& o) const;

 private:
  void init();
  Group G_, F_;
  std::size_t nG_ = 0;
  std::vector<GIndex> gtab_, ginv_;
  std::vector<std::vector<GroupElement>> lgen_, linv_;
  std::vector<std::vector<GIndex>> rgen_, rinv_;
  bool inverses_ok_ = true;
  bool full_ = false;
  std::vector<GroupElement> lfull_;  // [g * |F| + i]
  std::vector<GIndex> rfull_;
};

std::vector<CheckReport> verify_matched_pair(const MatchedPair& mp, std::size_t word_bound);
bool all_pass(const std::vector<CheckReport>& reports);

struct OrbitData {
  GroupElement base;
  std::vector<GroupElement> orbit;     // O_f
  std::vector<GIndex> stabilizer;      // G_f
  std::vector<GIndex> transversal;     // T_f, identity first
  std::vector<GIndex> coset_rep;       // z_x for each x in G
  std::vector<GIndex> stab_part;       // g_x for each x in G, x = g_x z_x
  bool in_stabilizer(GIndex g) const;
};

OrbitData orbit_data(const MatchedPair& mp, const GroupElement& f);
std::vector<GroupElement> orbit(const MatchedPair& mp, const GroupElement& f);
std::vector<GIndex> stabilizer(const MatchedPair& mp, const GroupElement& f);
std::vector<GIndex> transversal(const MatchedPair& mp, const GroupElement& f);

struct CommuteWitness {
  bool commutes = true;
  std::optional<GroupElement> witness;  // element of the symmetric difference
};
CommuteWitness orbit_product_commutes(const MatchedPair& mp, const GroupElement& f, const GroupElement& f2);

std::vector<GIndex> dual_orbit(const MatchedPair& mp, GIndex g);
struct DualCommuteWitness {
  bool commutes = true;
  std::optional<GIndex> witness;
};
DualCommuteWitness dual_orbit_product_commutes(const MatchedPair& mp, GIndex g, GIndex g2);

// Window of F used for bounded sweeps: all of F when finite, else the word ball.
std::vector<GroupElement> window(const Group& F, std::size_t word_bound);
bool in_window(const Group& F, const GroupElement& f, std::size_t word_bound);

}  // namespace hopfcqt
