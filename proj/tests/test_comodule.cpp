#include <doctest.h>

#include "hopfcqt/comodule.hpp"
#include "hopfcqt/error.hpp"
#include "hopfcqt/examples.hpp"
#include "test_util.hpp"

using namespace hopfcqt;

namespace {
Matrix m1(const Scalar& s) {
  Matrix M(1, 1);
  M.at(0, 0) = s;
  return M;
}
Scalar z(long n, long j) { return Scalar::root_of_unity(n, j); }
HopfElement el(const ContextPtr& c, const char* g, const std::string& f) { return basis(c, parse_key(*c, g, f)); }

ContextPtr z2_tau_ctx() {
  auto mp = examples::z2_z2();
  return make_context(mp, examples::z2_z2_tau(mp));
}
}  // namespace

TEST_CASE("twisted coalgebra comultiplication") {
  auto c = z2_tau_ctx();
  GroupElement t = c->mp.F().generators()[0];
  auto C = make_coalgebra(c, t);
  auto d1 = C->delta(0);
  REQUIRE(d1.size() == 2);
  CHECK(d1[0] == std::make_tuple(GIndex(0), GIndex(0), Scalar(1)));
  CHECK(d1[1] == std::make_tuple(GIndex(1), GIndex(1), Scalar(-1)));
  auto dg = C->delta(1);
  CHECK(dg[0] == std::make_tuple(GIndex(1), GIndex(0), Scalar(1)));
  CHECK(dg[1] == std::make_tuple(GIndex(0), GIndex(1), Scalar(1)));
  CHECK(C->verify().passed());

  auto z2z = make_context(examples::z2_z());
  auto C3 = make_coalgebra(z2z, z2z->mp.F().parse("3"));
  CHECK_THROWS_AS(C3->delta(1), NotInStabilizer);
}

TEST_CASE("Z_2 comodules U and V") {
  auto c = z2_tau_ctx();
  auto C = make_coalgebra(c, c->mp.F().generators()[0]);
  Comodule U = make_comodule(C, {m1(Scalar(1)), m1(z(4, 1))}, "U");
  CHECK(all_pass(verify_comodule(U)));
  CHECK(is_simple(U));
  Comodule V = make_comodule(C, {m1(Scalar(1)), m1(-z(4, 1))}, "V");
  Comodule UV = direct_sum(U, V);
  CHECK(all_pass(verify_comodule(UV)));
  CHECK_FALSE(is_simple(UV));
  Comodule bad = make_comodule(C, {m1(Scalar(1)), m1(Scalar(1))});
  CHECK_FALSE(all_pass(verify_comodule(bad)));

  auto all = enumerate_onedim(C);
  REQUIRE(all.size() == 2);
  CHECK(all[0].a == U.a);
  CHECK(all[1].a == V.a);
}

TEST_CASE("one-dimensional comodules over Z_3 and trivial stabilizers") {
  auto c = make_context(examples::z3_z());
  auto C = make_coalgebra(c, c->mp.F().parse("1"));
  auto all = enumerate_onedim(C);
  REQUIRE(all.size() == 3);
  GIndex g = c->mp.gindex(c->mp.G().parse("g")), g2 = c->mp.gindex(c->mp.G().parse("g^2"));
  CHECK(all[0].coeff(0, 0, g) == Scalar(1));
  CHECK(all[1].coeff(0, 0, g) == z(3, 1));
  CHECK(all[1].coeff(0, 0, g2) == z(3, 2));
  CHECK(all[2].coeff(0, 0, g) == z(3, 2));
  CHECK(all[2].coeff(0, 0, g2) == z(3, 1));

  auto z2z = make_context(examples::z2_z());
  auto triv = enumerate_onedim(make_coalgebra(z2z, z2z->mp.F().parse("3")));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].dim == 1);

  auto k4 = make_context(MatchedPair::trivial(Group::klein_four(), Group::integers()));
  CHECK(enumerate_onedim(make_coalgebra(k4, k4->mp.F().identity())).size() == 4);

  auto q8 = make_context(examples::q8_z());
  CHECK_THROWS_AS(enumerate_onedim(make_coalgebra(q8, q8->mp.F().identity())), NonAbelianStabilizer);
}

TEST_CASE("user supplied two-dimensional Q8 comodule") {
  auto q8 = make_context(examples::q8_z());
  const Group& G = q8->mp.G();
  auto C = make_coalgebra(q8, q8->mp.F().identity());
  Matrix R(2, 2), S(2, 2);
  R.at(0, 0) = z(4, 1);
  R.at(1, 1) = z(4, 3);
  S.at(0, 1) = Scalar(-1);
  S.at(1, 0) = Scalar(1);
  std::vector<Matrix> a(8);
  for (GIndex x = 0; x < 8; ++x) {
    // x = r^i s^j
    Matrix M = Matrix::identity(2);
    GroupElement e = G.element(x);
    bool found = false;
    for (int i = 0; i < 4 && !found; ++i)
      for (int j = 0; j < 2 && !found; ++j)
        if (G.mul(G.pow(G.parse("r"), i), G.pow(G.parse("s"), j)) == e) {
          for (int k = 0; k < i; ++k) M = M * R;
          for (int k = 0; k < j; ++k) M = M * S;
          found = true;
        }
    a[C->pos(x)] = M;
  }
  Comodule V = make_comodule(C, a, "rho2");
  CHECK(all_pass(verify_comodule(V)));
  CHECK(is_simple(V));
  auto W = induce(V);
  CHECK(W.dim() == 2);
  CHECK(all_pass(verify_induced(W)));
  CHECK(trace(W) == character(V).chi);
}

TEST_CASE("induced comodules and characters on Z_2 and Z") {
  auto c = make_context(examples::z2_z());
  const Group& F = c->mp.F();
  // f in T: W_1 is 2-dimensional
  auto C1 = make_coalgebra(c, F.parse("1"));
  auto W1 = enumerate_onedim(C1)[0];
  auto I1 = induce(W1);
  CHECK(I1.dim() == 2);
  CHECK(all_pass(verify_induced(I1)));
  Character chi = character(W1);
  CHECK(chi.chi == el(c, "1", "1") + el(c, "1", "-1"));
  CHECK(chi.dim == 2);
  CHECK(trace(I1) == chi.chi);
  // f in S: U_0 is 1-dimensional
  auto C0 = make_coalgebra(c, F.parse("0"));
  auto us = enumerate_onedim(C0);
  REQUIRE(us.size() == 2);
  auto I0 = induce(us[0]);
  CHECK(I0.dim() == 1);
  CHECK(all_pass(verify_induced(I0)));
  CHECK(character(us[0]).chi == unit(c));
  CHECK(character(us[1]).chi == el(c, "1", "0") - el(c, "g", "0"));
}

TEST_CASE("twisted characters and trace agree") {
  auto c = z2_tau_ctx();
  std::string t = c->mp.F().name(c->mp.F().generators()[0]);
  auto C = make_coalgebra(c, c->mp.F().generators()[0]);
  auto us = enumerate_onedim(C);
  CHECK(character(us[0]).chi == el(c, "1", t) + z(4, 1) * el(c, "g", t));
  for (const auto& U : us) {
    auto I = induce(U);
    CHECK(all_pass(verify_induced(I)));
    CHECK(trace(I) == character(U).chi);
  }
}

TEST_CASE("induction over S3 x Z2 and the swapped K4 pair") {
  auto c = make_context(examples::s3_z2());
  for (const auto& f : c->mp.F().elements()) {
    auto C = make_coalgebra(c, f);
    for (const auto& V : enumerate_onedim(C)) {
      auto I = induce(V);
      INFO(c->mp.fname(f));
      CHECK(all_pass(verify_induced(I)));
      CHECK(trace(I) == character(V).chi);
      Scalar ones;
      for (GIndex z : C->orbit().transversal)
        ones += character(V).chi.coeff({0, c->mp.left(c->mp.ginv(z), f)});
      CHECK(ones == Scalar(static_cast<long>(C->orbit().transversal.size())));
    }
  }
  Group G = Group::cyclic(2), F = Group::klein_four();
  GroupElement a = F.parse("a"), b = F.parse("b"), ab = F.parse("a*b");
  auto sw = MatchedPair::from_rules(
      G, F, [&](GIndex g, std::size_t s) { return g == 0 ? F.generators()[s] : F.generators()[1 - s]; },
      [](GIndex g, std::size_t) { return g; });
  CocycleTables tb;
  for (const auto& u : {a, ab})
    for (const auto& v : {b, ab}) tb.sigma[{1, u, v}] = Scalar(-1);
  tb.tau[{1, 1, ab}] = Scalar(-1);
  auto k = make_context(sw, CocyclePair(sw, tb));
  for (const auto& f : F.elements())
    for (const auto& V : enumerate_onedim(make_coalgebra(k, f))) {
      auto I = induce(V);
      CHECK(all_pass(verify_induced(I)));
      CHECK(trace(I) == character(V).chi);
    }
}
