#pragma once

// Reference computations for coquasitriangular structures that go through the
// generic Hopf operations (multiply, comultiply) rather than the explicit
// component formulas used by the library.

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hopfcqt/cqt.hpp"
#include "hopfcqt/examples.hpp"

namespace oracle {

using namespace hopfcqt;

inline Scalar R_of(const RForm& R, const HopfElement& a, const HopfElement& b) {
  Scalar s;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) s += ca * cb * R.at(ka, kb);
  return s;
}

inline std::vector<BasisKey> all_keys(const HopfContext& c) {
  std::vector<BasisKey> ks;
  for (GIndex g = 0; g < c.mp.order_G(); ++g)
    for (const auto& f : c.mp.F().elements()) ks.push_back({g, f});
  return ks;
}

struct Verdict {
  bool unit = true, left = true, right = true, twist = true;
  bool all() const { return unit && left && right && twist; }
};

// Finite F only.
//   unit:  R(1, b) = eps(b), R(a, 1) = eps(a)
//   left:  R(a, bc) = R(a1, c) R(a2, b)
//   right: R(ab, c) = R(a, c1) R(b, c2)
//   twist: R(a1, b1) a2 b2 = b1 a1 R(a2, b2)
inline Verdict generic_axioms(const RForm& R) {
  const ContextPtr& ctx = R.context();
  const auto keys = all_keys(*ctx);
  Verdict v;
  HopfElement one = unit(ctx);
  for (const auto& a : keys) {
    HopfElement A = basis(ctx, a);
    Scalar e = counit(A);
    if (R_of(R, one, A) != e || R_of(R, A, one) != e) v.unit = false;
  }
  for (const auto& a : keys) {
    HopfElement A = basis(ctx, a);
    TensorElement dA = comultiply(A);
    for (const auto& b : keys) {
      HopfElement B = basis(ctx, b);
      TensorElement dB = comultiply(B);
      HopfElement lhs(ctx), rhs(ctx);
      for (const auto& [ka, ca] : dA.terms())
        for (const auto& [kb, cb] : dB.terms()) {
          lhs += (ca * cb * R.at(ka.first, kb.first)) * multiply(basis(ctx, ka.second), basis(ctx, kb.second));
          rhs += (ca * cb * R.at(ka.second, kb.second)) * multiply(basis(ctx, kb.first), basis(ctx, ka.first));
        }
      if (!(lhs == rhs)) v.twist = false;
      for (const auto& c : keys) {
        HopfElement C = basis(ctx, c);
        Scalar l1 = R_of(R, A, multiply(B, C)), r1;
        for (const auto& [ka, ca] : dA.terms()) r1 += ca * R.at(ka.first, c) * R.at(ka.second, b);
        if (l1 != r1) v.left = false;
        Scalar l2 = R_of(R, multiply(A, B), C), r2;
        const TensorElement dC = comultiply(C);
        for (const auto& [kc, cc] : dC.terms()) r2 += cc * R.at(a, kc.first) * R.at(b, kc.second);
        if (l2 != r2) v.right = false;
      }
    }
  }
  return v;
}

inline MatchedPair inversion(unsigned nG, unsigned nF) {  // generator of Z_nG inverts Z_nF
  Group G = Group::cyclic(nG), F = Group::cyclic(nF);
  return MatchedPair::from_rules(
      G, F,
      [=](GIndex g, std::size_t) {
        auto s = F.generators()[0];
        return g % 2 ? F.inv(s) : s;
      },
      [](GIndex g, std::size_t) { return g; });
}

inline MatchedPair right_inversion(unsigned nG, unsigned nF) {  // generator of Z_nF inverts Z_nG
  Group G = Group::cyclic(nG), F = Group::cyclic(nF);
  return MatchedPair::from_rules(
      G, F, [=](GIndex, std::size_t) { return F.generators()[0]; },
      [=](GIndex g, std::size_t) { return (nG - g) % nG; });
}

struct Named {
  std::string name;
  ContextPtr ctx;
};

// Finite contexts on which the search is fast.
inline std::vector<Named> small_contexts() {
  std::vector<Named> out;
  auto add = [&](std::string n, MatchedPair mp, CocyclePair cp = {}) {
    out.push_back({n, make_context(std::move(mp), std::move(cp), n)});
  };
  add("Z2 trivial F", examples::z2_trivial_f());
  add("Z2 x Z2", examples::z2_z2());
  {
    auto mp = examples::z2_z2();
    auto cp = examples::z2_z2_tau(mp);
    add("Z2 x Z2 twisted", mp, cp);
  }
  add("Z2 |> Z3", inversion(2, 3));
  add("Z2 |> Z4", inversion(2, 4));
  add("Z3 <| Z2", right_inversion(3, 2));
  add("Z1 x Z4", MatchedPair::trivial(Group::cyclic(1), Group::cyclic(4)));
  add("Z2 x Z4", MatchedPair::trivial(Group::cyclic(2), Group::cyclic(4)));
  return out;
}

// Random perturbation of R: change between one and three entries by a small root of unity multiple.
inline RForm perturb(const RForm& R, std::mt19937& rng) {
  RForm out = R;
  const auto keys = all_keys(*R.context());
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  std::uniform_int_distribution<int> count(1, 3), root(0, 3), den(1, 2);
  for (int i = count(rng); i > 0; --i) {
    BasisKey a = keys[pick(rng)], b = keys[pick(rng)];
    Scalar d = Scalar::root_of_unity(4, static_cast<unsigned>(root(rng))) / Scalar(static_cast<long>(den(rng)));
    out.set(a, b, out.at(a, b) + d);
  }
  return out;
}

}  // namespace oracle
