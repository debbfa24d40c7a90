#pragma once

#include "hopfcqt/cocycles.hpp"
#include "hopfcqt/matched_pair.hpp"

// Matched pairs used by the catalog and the tests.
namespace hopfcqt::examples {

MatchedPair zn_dinf(unsigned n);    // trivial |>, g^i <| x^j y^k = g^{(-1)^k i}
MatchedPair q8_dinf();              // trivial |>, r <-> s under x and y
MatchedPair z3_z();                 // trivial |>, g^i <| j = g^{(-1)^j i}
MatchedPair q8_z();                 // trivial |>, r <-> s under odd j
MatchedPair s3_z2();                // G = Z_2 conjugating F = S_3 by (1 2), trivial <|
MatchedPair z2_z();                 // g |> i = -i, trivial <|
MatchedPair z2_z2xz();              // g |> (a, i) = (a, -i), trivial <|
MatchedPair z2_dinf_trivial();      // both actions trivial
MatchedPair z2_trivial_f();         // F trivial
MatchedPair z2_z2();                // both actions trivial, F = Z_2
CocyclePair z2_z2_tau(const MatchedPair& mp);  // tau(g, g; t) = -1

// G-automorphism-valued right action: g <| s = phi_s(g) where phi_s is given
// on the generators of G.
MatchedPair right_by_automorphisms(Group G, Group F, const std::vector<std::vector<GroupElement>>& images);

}  // namespace hopfcqt::examples
