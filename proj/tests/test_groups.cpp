#include <doctest.h>

#include <random>
#include <string>

#include "hopfcqt/error.hpp"
#include "hopfcqt/group.hpp"

using namespace hopfcqt;

namespace {

// String rewriting for D_inf over letters x, y, Y (= y^-1); x^-1 = x.
// Moves every x to the front: yx -> xY, Yx -> xy; cancels xx, yY, Yy.
std::string rewrite(std::string w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      std::string two = w.substr(i, 2);
      std::string rep;
      bool hit = true;
      if (two == "xx" || two == "yY" || two == "Yy")
        rep = "";
      else if (two == "yx")
        rep = "xY";
      else if (two == "Yx")
        rep = "xy";
      else
        hit = false;
      if (hit) {
        w.replace(i, 2, rep);
        changed = true;
        break;
      }
    }
  }
  return w;
}

GroupElement from_letters(const Group& d, const std::string& w) {
  // independent of Group::mul: read the normal form x^j y^k directly
  std::string r = rewrite(w);
  std::int64_t j = 0, k = 0;
  for (char c : r) {
    if (c == 'x') j = 1;
    if (c == 'y') ++k;
    if (c == 'Y') --k;
  }
  GroupElement e = d.identity();
  e.v[0] = j;
  e.v[1] = k;
  return e;
}

}  // namespace

TEST_CASE("infinite dihedral normal form") {
  Group d = Group::infinite_dihedral();
  auto x = d.parse("x"), y = d.parse("y");
  CHECK(d.name(d.mul(x, y)) == "x*y");
  CHECK(d.mul(d.mul(x, y), x) == d.inv(y));
  CHECK(d.name(d.mul(d.mul(x, y), x)) == "y^-1");
  CHECK(d.mul(x, x) == d.identity());
  CHECK(d.mul(y, x) != d.mul(x, y));
  CHECK_FALSE(d.is_abelian());
  CHECK(d.word_length(d.parse("x*y^-2")) == 3);
  CHECK(d.ball(1).size() == 4);
}

TEST_CASE("D_inf multiplication agrees with the rewriting oracle") {
  Group d = Group::infinite_dihedral();
  std::mt19937 rng(42);
  const std::string alphabet = "xyY";
  std::uniform_int_distribution<int> len(0, 8), pick(0, 2);
  for (int t = 0; t < 500; ++t) {
    std::string u, v;
    int lu = len(rng), lv = len(rng);
    for (int i = 0; i < lu; ++i) u += alphabet[static_cast<std::size_t>(pick(rng))];
    for (int i = 0; i < lv; ++i) v += alphabet[static_cast<std::size_t>(pick(rng))];
    GroupElement a = from_letters(d, u), b = from_letters(d, v);
    CHECK(d.mul(a, b) == from_letters(d, u + v));
    CHECK(d.evaluate(d.word(a)) == a);
  }
}

TEST_CASE("integers") {
  Group z = Group::integers();
  CHECK(z.inv(z.parse("3")) == z.parse("-3"));
  CHECK(z.mul(z.parse("2"), z.parse("-5")) == z.parse("-3"));
  CHECK_THROWS_AS(z.elements(), InfiniteGroup);
  CHECK(z.ball(2).size() == 5);
}

TEST_CASE("finite built-ins") {
  Group z2 = Group::cyclic(2);
  REQUIRE(z2.elements().size() == 2);
  CHECK(z2.name(z2.elements()[0]) == "1");
  CHECK(z2.name(z2.elements()[1]) == "g");

  Group q8 = Group::quaternion8();
  CHECK(q8.order() == 8);
  auto r = q8.parse("r"), s = q8.parse("s");
  CHECK(q8.pow(r, 4) == q8.identity());
  CHECK(q8.mul(r, r) == q8.mul(s, s));
  CHECK(q8.mul(s, r) == q8.mul(q8.inv(r), s));
  CHECK_FALSE(q8.is_abelian());

  Group s3 = Group::symmetric3();
  std::vector<std::string> names;
  for (const auto& e : s3.elements()) names.push_back(s3.name(e));
  CHECK(names == std::vector<std::string>{"(1)", "(1 2)", "(1 3)", "(2 3)", "(1 2 3)", "(1 3 2)"});
  CHECK(s3.mul(s3.parse("(1 2)"), s3.parse("(1 2)")) == s3.identity());

  CHECK(Group::klein_four().is_abelian());
}

TEST_CASE("finite tables are Latin squares and words evaluate back") {
  for (const Group& g : {Group::cyclic(5), Group::klein_four(), Group::symmetric3(), Group::quaternion8()}) {
    const auto& els = g.elements();
    for (const auto& a : els) {
      std::vector<bool> row(els.size()), col(els.size());
      for (const auto& b : els) {
        row[g.index(g.mul(a, b))] = true;
        col[g.index(g.mul(b, a))] = true;
      }
      CHECK(std::find(row.begin(), row.end(), false) == row.end());
      CHECK(std::find(col.begin(), col.end(), false) == col.end());
      CHECK(g.evaluate(g.word(a)) == a);
      CHECK(g.parse(g.name(a)) == a);
    }
  }
}

TEST_CASE("table and permutation constructors") {
  Group t = Group::from_table({{1, 0}, {0, 1}});
  CHECK(t.order() == 2);
  CHECK(t.is_identity(t.elements()[0]));
  CHECK_THROWS_AS(Group::from_table({{0, 1}, {0, 1}}), InvalidArgument);
  Group p = Group::from_permutations({{2, 1, 3}, {2, 3, 1}});
  CHECK(p.order() == 6);
  CHECK_FALSE(p.is_abelian());
}

TEST_CASE("mixed groups are rejected") {
  Group a = Group::cyclic(3), b = Group::cyclic(3);
  CHECK_THROWS_AS(a.mul(a.parse("g"), b.parse("g")), MixedGroups);
}

TEST_CASE("products") {
  Group p = Group::product({Group::cyclic(2), Group::integers()});
  auto e = p.parse("<g;3>");
  CHECK(p.name(p.mul(e, e)) == "<1;6>");
  CHECK(p.word_length(e) == 4);
  CHECK(p.is_abelian());
  CHECK_FALSE(p.is_finite());
  auto ball = p.ball(2);
  CHECK(ball.size() == 8);  // |i|<=2 with t^0 (5) plus t with |i|<=1 (3)
  CHECK(p.is_identity(ball[0]));
  for (const auto& w : p.relators()) CHECK(p.is_identity(p.evaluate(w)));
  Group fin = Group::product({Group::cyclic(2), Group::cyclic(3)});
  CHECK(fin.order() == 6);
  CHECK(fin.is_identity(fin.elements()[0]));
}

TEST_CASE("relators evaluate to the identity") {
  for (const Group& g : {Group::symmetric3(), Group::quaternion8(), Group::infinite_dihedral()})
    for (const auto& w : g.relators()) CHECK(g.is_identity(g.evaluate(w)));
}

TEST_CASE("homomorphisms") {
  Group q8 = Group::quaternion8(), k4 = Group::klein_four();
  GroupHom pi(q8, k4, {k4.parse("a"), k4.parse("b")});
  CHECK(pi.apply(q8.parse("r^3")) == k4.parse("a"));
  CHECK(pi.apply(q8.identity()) == k4.identity());
  Group z = Group::integers(), z2 = Group::cyclic(2);
  GroupHom par(z, z2, {z2.parse("g")});
  CHECK(par.apply(z.parse("5")) == z2.parse("g"));
  CHECK(par.apply(z.parse("-4")) == z2.identity());
  Group z3 = Group::cyclic(3);
  CHECK_THROWS_AS(GroupHom(z3, z2, {z2.parse("g")}), InvalidArgument);
  Group d = Group::infinite_dihedral();
  CHECK_NOTHROW(GroupHom(d, z2, {z2.parse("g"), z2.parse("g")}));
  CHECK_THROWS_AS(GroupHom(d, z3, {z3.identity(), z3.parse("g")}), InvalidArgument);
}

TEST_CASE("descriptors round-trip") {
  for (const Group& g : {Group::cyclic(4), Group::integers(), Group::infinite_dihedral(), Group::quaternion8(),
                         Group::product({Group::cyclic(2), Group::integers()})}) {
    Group h = Group::from_descriptor(g.descriptor());
    CHECK(h.same_structure(g));
  }
  CHECK_THROWS_AS(Group::from_descriptor({{"family", "nope"}}), SchemaError);
}
