#include "hopfcqt/examples.hpp"

namespace hopfcqt::examples {

MatchedPair right_by_automorphisms(Group G, Group F, const std::vector<std::vector<GroupElement>>& images) {
  std::vector<GroupHom> phi;
  for (const auto& im : images) phi.emplace_back(G, G, im);
  return MatchedPair::from_rules(
      G, F, [&](GIndex, std::size_t s) { return F.generators()[s]; },
      [&](GIndex g, std::size_t s) { return G.index(phi.at(s).apply(G.element(g))); });
}

MatchedPair zn_dinf(unsigned n) {
  Group G = Group::cyclic(n);
  GroupElement g = G.generators()[0];
  return right_by_automorphisms(G, Group::infinite_dihedral(), {{g}, {G.inv(g)}});
}

MatchedPair q8_dinf() {
  Group G = Group::quaternion8();
  GroupElement r = G.parse("r"), s = G.parse("s");
  return right_by_automorphisms(G, Group::infinite_dihedral(), {{s, r}, {s, r}});
}

MatchedPair z3_z() {
  Group G = Group::cyclic(3);
  return right_by_automorphisms(G, Group::integers(), {{G.inv(G.generators()[0])}});
}

MatchedPair q8_z() {
  Group G = Group::quaternion8();
  return right_by_automorphisms(G, Group::integers(), {{G.parse("s"), G.parse("r")}});
}

MatchedPair s3_z2() {
  Group G = Group::cyclic(2), F = Group::symmetric3();
  GroupElement t = F.parse("(1 2)");
  return MatchedPair::from_rules(
      G, F,
      [&](GIndex g, std::size_t s) {
        const GroupElement& v = F.generators()[s];
        return g == 0 ? v : F.mul(t, F.mul(v, t));
      },
      [](GIndex g, std::size_t) { return g; });
}

MatchedPair z2_z() {
  Group G = Group::cyclic(2), F = Group::integers();
  return MatchedPair::from_rules(
      G, F, [&](GIndex g, std::size_t s) { return g == 0 ? F.generators()[s] : F.inv(F.generators()[s]); },
      [](GIndex g, std::size_t) { return g; });
}

MatchedPair z2_z2xz() {
  Group G = Group::cyclic(2), F = Group::product({Group::cyclic(2), Group::integers()});
  return MatchedPair::from_rules(
      G, F,
      [&](GIndex g, std::size_t s) {
        const GroupElement& v = F.generators()[s];
        if (g == 0) return v;
        const Group& Z = F.factors()[1];
        return F.mul(F.embed(F.project(v, 0), 0), F.embed(Z.inv(F.project(v, 1)), 1));
      },
      [](GIndex g, std::size_t) { return g; });
}

MatchedPair z2_dinf_trivial() { return MatchedPair::trivial(Group::cyclic(2), Group::infinite_dihedral()); }
MatchedPair z2_trivial_f() { return MatchedPair::trivial(Group::cyclic(2), Group::trivial()); }
MatchedPair z2_z2() { return MatchedPair::trivial(Group::cyclic(2), Group::cyclic(2)); }

CocyclePair z2_z2_tau(const MatchedPair& mp) {
  CocycleTables t;
  t.tau[{1, 1, mp.F().generators()[0]}] = Scalar(-1);
  return CocyclePair(mp, std::move(t));
}

}  // namespace hopfcqt::examples
