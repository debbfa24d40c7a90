#include <doctest.h>

#include <chrono>

#include "hopfcqt/error.hpp"
#include "hopfcqt/examples.hpp"
#include "hopfcqt/hopf.hpp"
#include "test_util.hpp"

using namespace hopfcqt;

namespace {
BasisKey key(const ContextPtr& c, const char* g, const char* f) { return parse_key(*c, g, f); }
HopfElement el(const ContextPtr& c, const char* g, const char* f) { return basis(c, key(c, g, f)); }
}  // namespace

TEST_CASE("multiplication") {
  auto c = make_context(examples::q8_dinf());
  CHECK(multiply(el(c, "r", "x"), el(c, "s", "y")) == el(c, "r", "x*y"));
  CHECK(multiply(el(c, "r", "x"), el(c, "r", "y")).is_zero());
  CHECK(multiply(el(c, "r", "1"), el(c, "s", "y")).is_zero());
  CHECK(multiply(unit(c), el(c, "s", "y")) == el(c, "s", "y"));
  CHECK(multiply(el(c, "s", "y"), unit(c)) == el(c, "s", "y"));
  auto other = make_context(examples::q8_dinf());
  CHECK_THROWS_AS(multiply(el(c, "r", "x"), el(other, "r", "x")), ContextMismatch);
}

TEST_CASE("comultiplication, counit, antipode on Z_2 and Z") {
  auto c = make_context(examples::z2_z());
  TensorElement d = comultiply(el(c, "g", "3"));
  TensorElement want = tensor(el(c, "g", "3"), el(c, "1", "3")) + tensor(el(c, "1", "-3"), el(c, "g", "3"));
  CHECK(d == want);
  TensorElement d1 = comultiply(el(c, "1", "0"));
  CHECK(d1 == tensor(el(c, "1", "0"), el(c, "1", "0")) + tensor(el(c, "g", "0"), el(c, "g", "0")));
  CHECK(counit(el(c, "1", "5")) == Scalar(1));
  CHECK(counit(el(c, "g", "5")) == Scalar(0));
  CHECK(counit(Scalar(2) * el(c, "1", "2") + el(c, "g", "-1")) == Scalar(2));
  CHECK(antipode(el(c, "g", "3")) == el(c, "g", "3"));
  CHECK(antipode(el(c, "1", "3")) == el(c, "1", "-3"));
  CHECK(antipode(el(c, "1", "0")) == el(c, "1", "0"));
  CHECK(to_string(el(c, "g", "3")) == "p_g#3");
}

TEST_CASE("antipode with trivial cocycles") {
  auto c = make_context(examples::q8_dinf());
  // S(p_r # x) = p_{(r<|x)^-1} # x^-1 = p_{s^-1} # x
  CHECK(antipode(el(c, "r", "x")) == el(c, "s^3", "x"));
}

TEST_CASE("twisted structure maps") {
  auto mp = examples::z2_z2();
  auto c = make_context(mp, examples::z2_z2_tau(mp));
  std::string t = mp.F().name(mp.F().generators()[0]);
  TensorElement d = comultiply(el(c, "1", t.c_str()));
  CHECK(d.coeff({key(c, "g", t.c_str()), key(c, "g", t.c_str())}) == Scalar(-1));
  CHECK(antipode(el(c, "g", t.c_str())) == Scalar(-1) * el(c, "g", t.c_str()));
}

TEST_CASE("Hopf axioms on S3 x Z2 exhaustively") {
  auto c = make_context(examples::s3_z2());
  auto t0 = std::chrono::steady_clock::now();
  auto reps = verify_hopf_axioms(c, 4);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  INFO(dump(reps));
  CHECK(all_pass(reps));
  CHECK(find_report(reps, "associativity")->instances == 12 * 12 * 12);
  CHECK(find_report(reps, "bialgebra")->instances == 144);
  CHECK(secs < 10.0);
}

TEST_CASE("bounded Hopf axioms on infinite entries") {
  for (auto mp : {examples::z2_z(), examples::zn_dinf(2), examples::zn_dinf(3), examples::q8_dinf(), examples::q8_z()}) {
    auto reps = verify_hopf_axioms(make_context(mp), 4);
    INFO(dump(reps));
    CHECK(all_pass(reps));
    CHECK(find_report(reps, "coassociativity")->note.find("word length 4") != std::string::npos);
  }
}

TEST_CASE("Hopf axioms with nontrivial cocycles") {
  auto mp = examples::z2_z2();
  CHECK(all_pass(verify_hopf_axioms(make_context(mp, examples::z2_z2_tau(mp)), 1)));

  Group G = Group::cyclic(2), F = Group::klein_four();
  GroupElement a = F.parse("a"), b = F.parse("b"), ab = F.parse("a*b");
  auto sw = MatchedPair::from_rules(
      G, F, [&](GIndex g, std::size_t s) { return g == 0 ? F.generators()[s] : F.generators()[1 - s]; },
      [](GIndex g, std::size_t) { return g; });
  CocycleTables tb;
  for (const auto& u : {a, ab})
    for (const auto& v : {b, ab}) tb.sigma[{1, u, v}] = Scalar(-1);
  tb.tau[{1, 1, ab}] = Scalar(-1);
  auto reps = verify_hopf_axioms(make_context(sw, CocyclePair(sw, tb)), 1);
  INFO(dump(reps));
  CHECK(all_pass(reps));
}

TEST_CASE("corrupted sigma breaks bialgebra compatibility") {
  auto mp = examples::z2_z2();
  GroupElement t = mp.F().generators()[0];
  CocycleTables tb;
  tb.sigma[{1, t, t}] = Scalar::root_of_unity(4, 1);
  auto reps = verify_hopf_axioms(make_context(mp, CocyclePair(mp, tb)), 1);
  const CheckReport* r = find_report(reps, "bialgebra");
  CHECK(r->status == Status::Fail);
  CHECK(r->witness.has_value());
}
