#include <doctest.h>

#include <random>

#include "hopfcqt/error.hpp"
#include "hopfcqt/examples.hpp"

using namespace hopfcqt;

namespace {
bool passes(const std::vector<CheckReport>& r) { return all_pass(r); }
const CheckReport* find(const std::vector<CheckReport>& rs, const std::string& n) {
  for (const auto& r : rs)
    if (r.check == n) return &r;
  return nullptr;
}
}  // namespace

TEST_CASE("evaluation and normalization") {
  auto mp = examples::z2_z2();
  CocyclePair triv;
  GroupElement t = mp.F().generators()[0];
  CHECK(triv.sigma(1, t, t).is_one());
  auto cp = examples::z2_z2_tau(mp);
  CHECK(cp.tau(1, 1, t) == Scalar(-1));
  CHECK(cp.tau(0, 1, t).is_one());
  CHECK(cp.tau(1, 1, mp.F().identity()).is_one());

  CocycleTables bad;
  bad.tau[{0, 1, t}] = Scalar(-1);
  CHECK_THROWS_AS(CocyclePair(mp, bad), InvalidArgument);
  CocycleTables zero;
  zero.sigma[{1, t, t}] = Scalar(0);
  CHECK_THROWS_AS(CocyclePair(mp, zero), InvalidArgument);
  CocycleTables nodef;
  nodef.sigma_default.reset();
  CocyclePair partial(mp, nodef);
  CHECK_THROWS_AS(partial.sigma(1, t, t), MissingEntry);
}

TEST_CASE("verify_cocycles") {
  auto mp = examples::z2_z2();
  CHECK(passes(verify_cocycles(mp, CocyclePair(), 4)));
  auto cp = examples::z2_z2_tau(mp);
  auto reps = verify_cocycles(mp, cp, 4);
  CHECK(passes(reps));
  CHECK(find(reps, "tau_cocycle")->instances == 16);

  GroupElement t = mp.F().generators()[0];
  CocycleTables tb;
  tb.sigma[{1, t, t}] = Scalar::root_of_unity(4, 1);
  auto bad = verify_cocycles(mp, CocyclePair(mp, tb), 4);
  const CheckReport* c = find(bad, "compatibility");
  REQUIRE(c);
  CHECK(c->status == Status::Fail);
  CHECK(c->witness.has_value());

  auto z2z = examples::z2_z();
  auto rz = verify_cocycles(z2z, CocyclePair(), 3);
  CHECK(passes(rz));
  CHECK(find(rz, "sigma_cocycle")->note.find("word length 3") != std::string::npos);
}

TEST_CASE("tau square identity") {
  auto mp = examples::z2_z2();
  GroupElement t = mp.F().generators()[0], e = mp.F().identity();
  auto cp = examples::z2_z2_tau(mp);
  CHECK(tau_square_identity_check(mp, CocyclePair(), t, t));
  CHECK(tau_square_identity_check(mp, cp, t, t));
  CocycleTables tb;
  tb.tau[{1, 1, t}] = Scalar(2);
  CHECK_FALSE(tau_square_identity_check(mp, CocyclePair(mp, tb), t, t));
  CHECK_THROWS_AS(tau_square_identity_check(examples::z3_z(), CocyclePair(), e, e), WrongGroup);
}

TEST_CASE("tau square identity off the fixed set") {
  // On G = Z_2 the identity is derived for f, f' fixed by g; a valid pair on
  // Z_2 acting on K_4 by swapping a and b shows it can fail otherwise.
  Group G = Group::cyclic(2), F = Group::klein_four();
  GroupElement a = F.parse("a"), b = F.parse("b"), ab = F.parse("a*b");
  auto mp = MatchedPair::from_rules(
      G, F, [&](GIndex g, std::size_t s) { return g == 0 ? F.generators()[s] : F.generators()[1 - s]; },
      [](GIndex g, std::size_t) { return g; });
  REQUIRE(all_pass(verify_matched_pair(mp, 2)));
  // sigma(g; u, v) = (-1)^{u_1 v_2}, tau(g, g; u) = (-1)^{u_1 u_2} with a = (1,0), b = (0,1)
  CocycleTables tb;
  for (const auto& u : {a, ab})
    for (const auto& v : {b, ab}) tb.sigma[{1, u, v}] = Scalar(-1);
  tb.tau[{1, 1, ab}] = Scalar(-1);
  CocyclePair cp(mp, tb);
  REQUIRE(passes(verify_cocycles(mp, cp, 2)));
  CHECK_FALSE(tau_square_identity_check(mp, cp, a, b));
  CHECK(tau_square_identity_check(mp, cp, ab, ab));
  CHECK(tau_square_identity_check(mp, cp, a, a));
}

TEST_CASE("random cocycle pairs on Z_2 satisfy the tau square identity on the fixed set") {
  std::mt19937 rng(7);
  Group G = Group::cyclic(2), F = Group::klein_four();
  auto mp = MatchedPair::trivial(G, F);
  int valid = 0;
  for (int trial = 0; trial < 300; ++trial) {
    CocycleTables tb;
    for (const auto& f : F.elements())
      if (!F.is_identity(f)) tb.tau[{1, 1, f}] = Scalar::root_of_unity(2, static_cast<long>(rng() % 2));
    for (const auto& f : F.elements())
      for (const auto& f2 : F.elements())
        if (!F.is_identity(f) && !F.is_identity(f2))
          tb.sigma[{1, f, f2}] = Scalar::root_of_unity(2, static_cast<long>(rng() % 2));
    CocyclePair cp(mp, tb);
    if (!passes(verify_cocycles(mp, cp, 2))) continue;
    ++valid;
    for (const auto& f : F.elements())
      for (const auto& f2 : F.elements()) CHECK(tau_square_identity_check(mp, cp, f, f2));
  }
  CHECK(valid > 0);
}
