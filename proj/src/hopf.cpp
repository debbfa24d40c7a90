#include "hopfcqt/hopf.hpp"

#include "hopfcqt/error.hpp"

namespace hopfcqt {

ContextPtr make_context(MatchedPair mp, CocyclePair cp, std::string id) {
  return std::make_shared<const HopfContext>(HopfContext{std::move(mp), std::move(cp), std::move(id)});
}

void check_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a != b) throw ContextMismatch("elements belong to different Hopf algebras");
}

std::string key_name(const HopfContext& ctx, const BasisKey& k) {
  return "p_" + ctx.mp.gname(k.g) + "#" + ctx.mp.fname(k.f);
}

BasisKey parse_key(const HopfContext& ctx, const std::string& g, const std::string& f) {
  return {ctx.mp.gindex(ctx.mp.G().parse(g)), ctx.mp.F().parse(f)};
}

std::optional<std::pair<BasisKey, Scalar>> mul_basis(const HopfContext& c, const BasisKey& a, const BasisKey& b) {
  if (c.mp.right(a.g, a.f) != b.g) return std::nullopt;
  return std::make_pair(BasisKey{a.g, c.mp.F().mul(a.f, b.f)}, c.cp.sigma(a.g, a.f, b.f));
}

std::vector<std::tuple<BasisKey, BasisKey, Scalar>> delta_basis(const HopfContext& c, const BasisKey& a) {
  std::vector<std::tuple<BasisKey, BasisKey, Scalar>> out;
  for (GIndex x = 0; x < c.mp.order_G(); ++x) {
    GIndex gx = c.mp.gmul(a.g, c.mp.ginv(x));
    out.emplace_back(BasisKey{gx, c.mp.left(x, a.f)}, BasisKey{x, a.f}, c.cp.tau(gx, x, a.f));
  }
  return out;
}

std::pair<BasisKey, Scalar> antipode_basis(const HopfContext& c, const BasisKey& a) {
  const Group& F = c.mp.F();
  GroupElement gf = c.mp.left(a.g, a.f), gfi = F.inv(gf);
  GIndex gi = c.mp.ginv(a.g);
  Scalar coef = (c.cp.sigma(gi, gf, gfi) * c.cp.tau(gi, a.g, a.f)).inv();
  return {BasisKey{c.mp.ginv(c.mp.right(a.g, a.f)), gfi}, coef};
}

namespace {
const ContextPtr& ctx_of(const ContextPtr& a, const ContextPtr& b) {
  if (a && b) check_same_context(a, b);
  if (!a && !b) throw ContextMismatch("element without a Hopf algebra");
  return a ? a : b;
}
}  // namespace

HopfElement unit(const ContextPtr& ctx) {
  HopfElement u(ctx);
  for (GIndex x = 0; x < ctx->mp.order_G(); ++x) u.add({x, ctx->mp.F().identity()}, Scalar(1));
  return u;
}

HopfElement basis(const ContextPtr& ctx, const BasisKey& k, Scalar c) { return HopfElement(ctx, k, std::move(c)); }

HopfElement multiply(const HopfElement& a, const HopfElement& b) {
  const ContextPtr& ctx = ctx_of(a.context(), b.context());
  HopfElement r(ctx);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      if (auto p = mul_basis(*ctx, ka, kb)) r.add(p->first, ca * cb * p->second);
  return r;
}

TensorElement comultiply(const HopfElement& a) {
  const ContextPtr& ctx = ctx_of(a.context(), nullptr);
  TensorElement r(ctx);
  for (const auto& [k, c] : a.terms())
    for (const auto& [k1, k2, t] : delta_basis(*ctx, k)) r.add({k1, k2}, c * t);
  return r;
}

Scalar counit(const HopfElement& a) {
  Scalar s;
  for (const auto& [k, c] : a.terms())
    if (k.g == 0) s += c;
  return s;
}

HopfElement antipode(const HopfElement& a) {
  const ContextPtr& ctx = ctx_of(a.context(), nullptr);
  HopfElement r(ctx);
  for (const auto& [k, c] : a.terms()) {
    auto [k2, s] = antipode_basis(*ctx, k);
    r.add(k2, c * s);
  }
  return r;
}

TensorElement tensor(const HopfElement& a, const HopfElement& b) {
  TensorElement r(ctx_of(a.context(), b.context()));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) r.add({ka, kb}, ca * cb);
  return r;
}

TensorElement multiply(const TensorElement& a, const TensorElement& b) {
  const ContextPtr& ctx = ctx_of(a.context(), b.context());
  TensorElement r(ctx);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      auto p1 = mul_basis(*ctx, ka.first, kb.first);
      if (!p1) continue;
      auto p2 = mul_basis(*ctx, ka.second, kb.second);
      if (!p2) continue;
      r.add({p1->first, p2->first}, ca * cb * p1->second * p2->second);
    }
  return r;
}

namespace {
std::string coef_prefix(const Scalar& c) {
  if (c.is_one()) return "";
  if (c == Scalar(-1)) return "-";
  std::string s = c.to_string();
  if (s.find_first_of("+-", 1) != std::string::npos) s = "(" + s + ")";
  return s + "*";
}
std::string join(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += (parts[i][0] == '-' ? " - " + parts[i].substr(1) : " + " + parts[i]);
  return s;
}
}  // namespace

std::string to_string(const HopfElement& a) {
  std::vector<std::string> parts;
  for (const auto& [k, c] : a.terms()) parts.push_back(coef_prefix(c) + key_name(*a.context(), k));
  return join(parts);
}

std::string to_string(const TensorElement& a) {
  std::vector<std::string> parts;
  for (const auto& [k, c] : a.terms())
    parts.push_back(coef_prefix(c) + key_name(*a.context(), k.first) + " (x) " + key_name(*a.context(), k.second));
  return join(parts);
}

std::vector<BasisKey> basis_window(const HopfContext& c, std::size_t word_bound) {
  std::vector<BasisKey> out;
  for (const auto& f : window(c.mp.F(), word_bound))
    for (GIndex g = 0; g < c.mp.order_G(); ++g) out.push_back({g, f});
  return out;
}

namespace {

Tensor3Element delta_left(const HopfContext& c, const ContextPtr& ctx, const BasisKey& k) {
  Tensor3Element r(ctx);
  for (const auto& [a, b, t] : delta_basis(c, k))
    for (const auto& [a1, a2, t2] : delta_basis(c, a)) r.add({a1, a2, b}, t * t2);
  return r;
}

Tensor3Element delta_right(const HopfContext& c, const ContextPtr& ctx, const BasisKey& k) {
  Tensor3Element r(ctx);
  for (const auto& [a, b, t] : delta_basis(c, k))
    for (const auto& [b1, b2, t2] : delta_basis(c, b)) r.add({a, b1, b2}, t * t2);
  return r;
}

}  // namespace

std::vector<CheckReport> verify_hopf_axioms(const ContextPtr& ctx, std::size_t word_bound) {
  const HopfContext& c = *ctx;
  auto keys = basis_window(c, word_bound);
  const std::string scope =
      c.mp.F().is_finite() ? "exhaustive" : "verified up to word length " + std::to_string(word_bound);
  enum { Assoc, Unit, Coassoc, Counit, Bialg, CounitMult, AntiL, AntiR, AntiMult, N };
  std::vector<CheckReport> reps = {make_report("associativity"),        make_report("unit"),
                                   make_report("coassociativity"),      make_report("counit"),
                                   make_report("bialgebra"),            make_report("counit_multiplicative"),
                                   make_report("antipode_left"),        make_report("antipode_right"),
                                   make_report("antipode_antimultiplicative")};
  for (auto& r : reps) r.note = scope;
  auto fail = [&](int i, Witness w) {
    if (reps[i].status == Status::Pass) {
      reps[i].status = Status::Fail;
      reps[i].witness = std::move(w);
    }
  };
  auto nm = [&](const BasisKey& k) { return key_name(c, k); };
  HopfElement one = unit(ctx);

  try {
    for (const auto& a : keys) {
      HopfElement ea = basis(ctx, a);
      // unit
      ++reps[Unit].instances;
      if (multiply(one, ea) != ea || multiply(ea, one) != ea) fail(Unit, Witness().add("a", nm(a)));
      // coassociativity and counit
      ++reps[Coassoc].instances;
      if (delta_left(c, ctx, a) != delta_right(c, ctx, a)) fail(Coassoc, Witness().add("a", nm(a)));
      ++reps[Counit].instances;
      {
        HopfElement l(ctx), r(ctx);
        for (const auto& [k1, k2, t] : delta_basis(c, a)) {
          if (k1.g == 0) l.add(k2, t);
          if (k2.g == 0) r.add(k1, t);
        }
        if (l != ea || r != ea) fail(Counit, Witness().add("a", nm(a)));
      }
      // antipode convolution identities
      HopfElement eps_one = counit(ea) * one;
      HopfElement sl(ctx), sr(ctx);
      for (const auto& [k1, k2, t] : delta_basis(c, a)) {
        auto [s1, c1] = antipode_basis(c, k1);
        if (auto p = mul_basis(c, s1, k2)) sl.add(p->first, t * c1 * p->second);
        auto [s2, c2] = antipode_basis(c, k2);
        if (auto p = mul_basis(c, k1, s2)) sr.add(p->first, t * c2 * p->second);
      }
      ++reps[AntiL].instances;
      if (sl != eps_one) fail(AntiL, Witness().add("a", nm(a)).add("lhs", to_string(sl)).add("rhs", to_string(eps_one)));
      ++reps[AntiR].instances;
      if (sr != eps_one) fail(AntiR, Witness().add("a", nm(a)).add("lhs", to_string(sr)).add("rhs", to_string(eps_one)));

      for (const auto& b : keys) {
        HopfElement eb = basis(ctx, b);
        HopfElement ab = multiply(ea, eb);
        ++reps[Bialg].instances;
        if (comultiply(ab) != multiply(comultiply(ea), comultiply(eb)))
          fail(Bialg, Witness().add("a", nm(a)).add("b", nm(b)));
        ++reps[CounitMult].instances;
        if (counit(ab) != counit(ea) * counit(eb)) fail(CounitMult, Witness().add("a", nm(a)).add("b", nm(b)));
        ++reps[AntiMult].instances;
        if (antipode(ab) != multiply(antipode(eb), antipode(ea)))
          fail(AntiMult, Witness().add("a", nm(a)).add("b", nm(b)));
        // associativity: both sides vanish unless b.g = a.g <| a.f and c.g = b.g <| b.f
        for (const auto& k3 : keys) {
          ++reps[Assoc].instances;
          if (b.g != c.mp.right(a.g, a.f) || k3.g != c.mp.right(b.g, b.f)) continue;
          auto ab1 = mul_basis(c, a, b);
          auto l = mul_basis(c, ab1->first, k3);
          auto bc = mul_basis(c, b, k3);
          auto r = mul_basis(c, a, bc->first);
          Scalar lv = l ? ab1->second * l->second : Scalar();
          Scalar rv = r ? bc->second * r->second : Scalar();
          BasisKey lk = l ? l->first : BasisKey{}, rk = r ? r->first : BasisKey{};
          if (lv != rv || (!lv.is_zero() && lk != rk))
            fail(Assoc, Witness().add("a", nm(a)).add("b", nm(b)).add("c", nm(k3)));
        }
      }
    }
  } catch (const MissingEntry& e) {
    CheckReport r = make_report("cocycle_tables");
    r.status = Status::Fail;
    r.witness = Witness().add("error", e.what());
    reps.push_back(r);
  }
  return reps;
}

}  // namespace hopfcqt
