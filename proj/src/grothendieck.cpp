#include "hopfcqt/grothendieck.hpp"

#include <algorithm>
#include <map>

namespace hopfcqt {

namespace {
std::string join_scalars(const std::vector<Scalar>& m) {
  std::string s;
  for (const auto& x : m) s += (s.empty() ? "" : ", ") + x.to_string();
  return "(" + s + ")";
}
bool nonneg_integer(const Scalar& x) {
  return x.is_rational() && x.rational_value().get_den() == 1 && x.rational_value() >= 0;
}
}  // namespace

NonIntegralMultiplicity::NonIntegralMultiplicity(std::vector<Scalar> m)
    : Error("NonIntegralMultiplicity", "multiplicities " + join_scalars(m) + " are not nonnegative integers"),
      m_(std::move(m)) {}

HopfElement char_product(const Character& a, const Character& b) { return multiply(a.chi, b.chi); }

std::vector<Scalar> decompose(const HopfElement& x, const std::vector<Character>& basis) {
  std::map<BasisKey, std::size_t> rows;
  for (const auto& [k, c] : x.terms()) rows.emplace(k, 0);
  for (const auto& ch : basis)
    for (const auto& [k, c] : ch.chi.terms()) rows.emplace(k, 0);
  std::size_t r = 0;
  for (auto& [k, i] : rows) i = r++;
  Matrix A(rows.size(), basis.size()), b(rows.size(), 1);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [k, c] : basis[j].chi.terms()) A.at(rows[k], j) = c;
  for (const auto& [k, c] : x.terms()) b.at(rows[k], 0) = c;
  auto sol = solve_linear(A, b);
  if (sol.kind == LinearSolution::Kind::Inconsistent) throw NotInSpan("element is not in the span of the characters");
  if (sol.kind == LinearSolution::Kind::Family) throw InvalidArgument("basis characters are linearly dependent");
  for (const auto& m : sol.particular)
    if (!nonneg_integer(m)) throw NonIntegralMultiplicity(sol.particular);
  return sol.particular;
}

CharCommute commutes(const Character& a, const Character& b) {
  HopfElement ab = char_product(a, b), d = ab - char_product(b, a);
  if (d.is_zero()) return {};
  // prefer a key of a*b
  for (const auto& [k, c] : d.terms())
    if (!ab.coeff(k).is_zero()) return {false, k};
  return {false, d.terms().begin()->first};
}

GroupElement orbit_representative(const MatchedPair& mp, const GroupElement& f) {
  auto o = orbit(mp, f);
  const Group& F = mp.F();
  auto better = [&](const GroupElement& a, const GroupElement& b) {
    if (F.is_finite()) return F.index(a) < F.index(b);
    std::string na = F.name(a), nb = F.name(b);
    auto ka = std::make_tuple(F.word_length(a), na.size(), na), kb = std::make_tuple(F.word_length(b), nb.size(), nb);
    return ka < kb;
  };
  return *std::min_element(o.begin(), o.end(), better);
}

std::vector<Character> irreducible_characters(const ContextPtr& ctx, const GroupElement& f,
                                              const std::vector<Comodule>& registered) {
  std::vector<Character> out;
  auto C = make_coalgebra(ctx, f);
  if (C->abelian()) {
    for (const auto& V : enumerate_onedim(C)) out.push_back(character(V));
    return out;
  }
  for (const auto& V : registered)
    if (V.C->context() == ctx && V.C->base() == f) out.push_back(character(V));
  if (out.empty())
    throw NonAbelianStabilizer("stabilizer of " + ctx->mp.fname(f) + " is not abelian and no comodules are registered");
  return out;
}

std::vector<Character> support_basis(const HopfElement& x, const std::vector<Comodule>& registered) {
  const ContextPtr& ctx = x.context();
  std::vector<GroupElement> reps;
  for (const auto& [k, c] : x.terms()) {
    GroupElement r = orbit_representative(ctx->mp, k.f);
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
  }
  std::vector<Character> out;
  for (const auto& r : reps)
    for (auto& ch : irreducible_characters(ctx, r, registered)) out.push_back(std::move(ch));
  return out;
}

bool z2_in_S(const MatchedPair& mp, const GroupElement& f) {
  if (mp.order_G() != 2) throw WrongGroup("G must be Z_2");
  return mp.left(1, f) == f;
}

std::string to_string(const MatchedPair& mp, const Z2Label& l) {
  static const char* k[] = {"U", "V", "W"};
  return std::string(k[l.kind]) + "_" + mp.fname(l.f);
}

Z2Label z2_label(const MatchedPair& mp, Z2Label::Kind k, const GroupElement& f) {
  bool s = z2_in_S(mp, f);
  if ((k == Z2Label::W) == s)
    throw LabelNotInST(std::string(k == Z2Label::W ? "W" : "U/V") + " label needs f in " + (s ? "T" : "S") +
                       ", got " + mp.fname(f));
  return {k, k == Z2Label::W ? orbit_representative(mp, f) : f};
}

namespace {
Scalar sqrt_tau(const HopfContext& c, const GroupElement& f) { return sqrt_root_of_unity(c.cp.tau(1, 1, f)); }
}  // namespace

Character z2_character(const ContextPtr& ctx, const Z2Label& l) {
  auto all = enumerate_onedim(make_coalgebra(ctx, l.f));
  // enumeration lists +sqrt(tau) first
  Character ch = character(all.at(l.kind == Z2Label::V ? 1 : 0));
  ch.label = to_string(ctx->mp, l);
  return ch;
}

std::vector<Z2Label> z2_tensor_rule(const ContextPtr& ctx, const Z2Label& a, const Z2Label& b) {
  const MatchedPair& mp = ctx->mp;
  const Group& F = mp.F();
  Z2Label la = z2_label(mp, a.kind, a.f), lb = z2_label(mp, b.kind, b.f);
  std::vector<Z2Label> out;
  auto add_S = [&](const GroupElement& h) {
    out.push_back(z2_label(mp, Z2Label::U, h));
    out.push_back(z2_label(mp, Z2Label::V, h));
  };
  auto add = [&](const GroupElement& h) {
    if (z2_in_S(mp, h))
      add_S(h);
    else
      out.push_back(z2_label(mp, Z2Label::W, h));
  };
  if (la.kind != Z2Label::W && lb.kind != Z2Label::W) {
    GroupElement h = F.mul(la.f, lb.f);
    // with the canonical branch, U_f (x) U_f' is U_ff' exactly when
    // sqrt(tau_f) sqrt(tau_f') sigma(g; f, f') = sqrt(tau_ff')
    Scalar s = sqrt_tau(*ctx, la.f) * sqrt_tau(*ctx, lb.f) * ctx->cp.sigma(1, la.f, lb.f) / sqrt_tau(*ctx, h);
    bool same = (la.kind == lb.kind);
    if (s == Scalar(-1))
      same = !same;
    else if (!s.is_one())
      throw HypothesisNotMet("tau square identity fails at (" + mp.fname(la.f) + ", " + mp.fname(lb.f) + ")");
    out.push_back(z2_label(mp, same ? Z2Label::U : Z2Label::V, h));
  } else if (la.kind != Z2Label::W) {
    out.push_back(z2_label(mp, Z2Label::W, F.mul(la.f, lb.f)));
  } else if (lb.kind != Z2Label::W) {
    out.push_back(z2_label(mp, Z2Label::W, F.mul(la.f, lb.f)));
  } else {
    add(F.mul(la.f, lb.f));
    add(F.mul(la.f, mp.left(1, lb.f)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Z2Label> z2_tensor_generic(const ContextPtr& ctx, const Z2Label& a, const Z2Label& b) {
  const MatchedPair& mp = ctx->mp;
  HopfElement x = char_product(z2_character(ctx, a), z2_character(ctx, b));
  // basis in label form over the orbits of the support
  std::vector<Z2Label> labels;
  std::vector<Character> basis;
  for (const auto& [k, c] : x.terms()) {
    GroupElement r = orbit_representative(mp, k.f);
    std::vector<Z2Label> ls;
    if (z2_in_S(mp, r))
      ls = {z2_label(mp, Z2Label::U, r), z2_label(mp, Z2Label::V, r)};
    else
      ls = {z2_label(mp, Z2Label::W, r)};
    for (const auto& l : ls)
      if (std::find(labels.begin(), labels.end(), l) == labels.end()) {
        labels.push_back(l);
        basis.push_back(z2_character(ctx, l));
      }
  }
  auto m = decompose(x, basis);
  std::vector<Z2Label> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (long k = 0; k < m[i].rational_value().get_num().get_si(); ++k) out.push_back(labels[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Z2Label> z2_simples(const ContextPtr& ctx, std::size_t word_bound) {
  const MatchedPair& mp = ctx->mp;
  std::vector<Z2Label> out;
  for (const auto& f : window(mp.F(), word_bound)) {
    if (z2_in_S(mp, f)) {
      out.push_back(z2_label(mp, Z2Label::U, f));
      out.push_back(z2_label(mp, Z2Label::V, f));
    } else {
      Z2Label w = z2_label(mp, Z2Label::W, f);
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
  }
  return out;
}

std::vector<Z2TableRow> z2_table(const ContextPtr& ctx, std::size_t word_bound) {
  auto simples = z2_simples(ctx, word_bound);
  std::vector<Z2TableRow> rows;
  for (const auto& a : simples)
    for (const auto& b : simples)
      rows.push_back({a, b, z2_tensor_rule(ctx, a, b), z2_tensor_generic(ctx, a, b)});
  return rows;
}

CheckReport z2_S_abelian_check(const MatchedPair& mp, std::size_t word_bound) {
  CheckReport r = make_report("S_abelian");
  const Group& F = mp.F();
  std::vector<GroupElement> S;
  for (const auto& f : window(F, word_bound))
    if (z2_in_S(mp, f)) S.push_back(f);
  if (!F.is_finite()) r.note = "S restricted to word length " + std::to_string(word_bound);
  for (const auto& a : S)
    for (const auto& b : S) {
      ++r.instances;
      if (F.mul(a, b) != F.mul(b, a) && r.status == Status::Pass) {
        r.status = Status::Fail;
        r.witness = Witness().add("f", F.name(a)).add("f'", F.name(b));
      }
    }
  return r;
}

}  // namespace hopfcqt
