#include <doctest.h>

#include "hopfcqt/examples.hpp"
#include "hopfcqt/grothendieck.hpp"
#include "test_util.hpp"

using namespace hopfcqt;

namespace {
HopfElement el(const ContextPtr& c, const char* g, const std::string& f) { return basis(c, parse_key(*c, g, f)); }
Z2Label lab(const ContextPtr& c, Z2Label::Kind k, const char* f) { return z2_label(c->mp, k, c->mp.F().parse(f)); }
std::string show(const ContextPtr& c, const std::vector<Z2Label>& ls) {
  std::string s;
  for (const auto& l : ls) s += to_string(c->mp, l) + " ";
  return s;
}
ContextPtr swapped_k4() {
  Group G = Group::cyclic(2), F = Group::klein_four();
  GroupElement a = F.parse("a"), b = F.parse("b"), ab = F.parse("a*b");
  auto sw = MatchedPair::from_rules(
      G, F, [&](GIndex g, std::size_t s) { return g == 0 ? F.generators()[s] : F.generators()[1 - s]; },
      [](GIndex g, std::size_t) { return g; });
  CocycleTables tb;
  for (const auto& u : {a, ab})
    for (const auto& v : {b, ab}) tb.sigma[{1, u, v}] = Scalar(-1);
  tb.tau[{1, 1, ab}] = Scalar(-1);
  return make_context(sw, CocyclePair(sw, tb));
}
}  // namespace

TEST_CASE("character products and decomposition on Z_2 and Z") {
  auto c = make_context(examples::z2_z());
  Character w1 = z2_character(c, lab(c, Z2Label::W, "1"));
  HopfElement sq = char_product(w1, w1);
  CHECK(sq == el(c, "1", "2") + Scalar(2) * el(c, "1", "0") + el(c, "1", "-2"));
  std::vector<Character> basis = {z2_character(c, lab(c, Z2Label::W, "2")), z2_character(c, lab(c, Z2Label::U, "0")),
                                  z2_character(c, lab(c, Z2Label::V, "0"))};
  CHECK(decompose(sq, basis) == std::vector<Scalar>{Scalar(1), Scalar(1), Scalar(1)});
  Character u0 = z2_character(c, lab(c, Z2Label::U, "0"));
  CHECK(decompose(u0.chi, {u0}) == std::vector<Scalar>{Scalar(1)});
  CHECK(char_product(w1, u0) == w1.chi);
  CHECK(char_product(u0, w1) == w1.chi);

  try {
    decompose(el(c, "g", "0"), {basis[1], basis[2]});
    FAIL("expected NonIntegralMultiplicity");
  } catch (const NonIntegralMultiplicity& e) {
    CHECK(e.multiplicities() == std::vector<Scalar>{Scalar::rational(1, 2), Scalar::rational(-1, 2)});
  }
  CHECK_THROWS_AS(decompose(el(c, "1", "5"), {basis[1]}), NotInSpan);

  auto sb = support_basis(sq);
  CHECK(sb.size() == 3);
  CHECK(decompose(sq, sb).size() == 3);
}

TEST_CASE("commutation of characters") {
  for (unsigned n : {2u, 3u}) {
    auto c = make_context(examples::zn_dinf(n));
    const Group& F = c->mp.F();
    auto cx = irreducible_characters(c, F.parse("x"));
    auto cy = irreducible_characters(c, F.parse("y"));
    auto r = commutes(cx[0], cy[0]);
    CHECK_FALSE(r.commutes);
    REQUIRE(r.witness);
    CHECK(r.witness->g == 0);
    CHECK(r.witness->f == F.mul(F.parse("x"), F.parse("y")));
    CHECK(commutes(cx[0], cx[0]).commutes);
  }
  auto s3 = make_context(examples::s3_z2());
  std::vector<Character> irr;
  std::vector<GroupElement> reps;
  for (const auto& f : s3->mp.F().elements()) {
    GroupElement r = orbit_representative(s3->mp, f);
    if (std::find(reps.begin(), reps.end(), r) != reps.end()) continue;
    reps.push_back(r);
    for (auto& ch : irreducible_characters(s3, r)) irr.push_back(ch);
  }
  CHECK(irr.size() == 6);
  for (const auto& a : irr)
    for (const auto& b : irr) CHECK(commutes(a, b).commutes);
  // dimensions multiply
  for (const auto& a : irr)
    for (const auto& b : irr) {
      HopfElement p = char_product(a, b);
      auto basis = support_basis(p);
      auto m = decompose(p, basis);
      std::size_t d = 0;
      for (std::size_t i = 0; i < m.size(); ++i) d += m[i].rational_value().get_num().get_ui() * basis[i].dim;
      CHECK(d == a.dim * b.dim);
    }
}

TEST_CASE("Z_2 closed-form tensor rules") {
  auto c = make_context(examples::z2_z());
  auto r = z2_tensor_rule(c, lab(c, Z2Label::W, "1"), lab(c, Z2Label::W, "1"));
  std::vector<Z2Label> want = {lab(c, Z2Label::U, "0"), lab(c, Z2Label::V, "0"), lab(c, Z2Label::W, "2")};
  std::sort(want.begin(), want.end());
  CHECK(r == want);
  CHECK(z2_tensor_rule(c, lab(c, Z2Label::U, "0"), lab(c, Z2Label::V, "0")) ==
        std::vector<Z2Label>{lab(c, Z2Label::V, "0")});
  CHECK(z2_tensor_rule(c, lab(c, Z2Label::W, "3"), lab(c, Z2Label::U, "0")) ==
        std::vector<Z2Label>{lab(c, Z2Label::W, "3")});
  CHECK(lab(c, Z2Label::W, "-3") == lab(c, Z2Label::W, "3"));
  CHECK_THROWS_AS(lab(c, Z2Label::U, "2"), LabelNotInST);
  CHECK_THROWS_AS(lab(c, Z2Label::W, "0"), LabelNotInST);
  CHECK_THROWS_AS(z2_tensor_rule(make_context(examples::z3_z()), {}, {}), WrongGroup);
}

TEST_CASE("closed form matches the generic pipeline") {
  auto c = make_context(examples::z2_z());
  auto rows = z2_table(c, 5);
  CHECK(rows.size() == 7 * 7);
  for (const auto& row : rows) {
    INFO(to_string(c->mp, row.a) << " x " << to_string(c->mp, row.b) << ": " << show(c, row.rule) << "| "
                                 << show(c, row.generic));
    CHECK(row.rule == row.generic);
  }
  for (auto ctx : {swapped_k4(), make_context(examples::z2_z2(), examples::z2_z2_tau(examples::z2_z2())),
                   make_context(examples::z2_z2xz())}) {
    for (const auto& row : z2_table(ctx, 3)) {
      INFO(to_string(ctx->mp, row.a) << " x " << to_string(ctx->mp, row.b));
      CHECK(row.rule == row.generic);
    }
  }
}

TEST_CASE("square-root branch flips U and V") {
  auto mp = examples::z2_z2();
  auto c = make_context(mp, examples::z2_z2_tau(mp));
  std::string t = mp.F().name(mp.F().generators()[0]);
  auto r = z2_tensor_rule(c, lab(c, Z2Label::U, t.c_str()), lab(c, Z2Label::U, t.c_str()));
  CHECK(r == std::vector<Z2Label>{lab(c, Z2Label::V, "1")});
}

TEST_CASE("S is abelian") {
  CHECK(z2_S_abelian_check(examples::z2_z(), 4).passed());
  auto r = z2_S_abelian_check(examples::z2_dinf_trivial(), 2);
  CHECK(r.status == Status::Fail);
  CHECK(r.witness.has_value());
  CHECK(z2_S_abelian_check(examples::z2_z2xz(), 3).passed());
}
