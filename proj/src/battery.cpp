#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "hopfcqt/cqt.hpp"
#include "hopfcqt/error.hpp"

namespace hopfcqt {

std::vector<GroupElement> ordered_window(const Group& F, std::size_t maxlen) {
  std::vector<GroupElement> out{F.identity()};
  auto push = [&](const GroupElement& f) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  };
  if (F.is_finite() || maxlen >= 1)
    for (const auto& s : F.generators()) push(s);
  for (const auto& f : window(F, maxlen)) push(f);
  return out;
}

std::vector<std::vector<Scalar>> group_characters(const Group& Q) {
  if (!Q.is_finite() || !Q.is_abelian()) throw InvalidArgument("characters need a finite abelian group");
  const auto& els = Q.elements();
  const auto& gens = Q.generators();
  std::vector<std::vector<Scalar>> cand;
  for (const auto& s : gens) {
    unsigned n = 1;
    for (GroupElement p = s; !Q.is_identity(p); p = Q.mul(p, s)) ++n;
    cand.push_back(nth_roots(Scalar(1), n));
  }
  std::vector<std::vector<Scalar>> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  for (;;) {
    std::vector<std::optional<Scalar>> a(els.size());
    a[Q.index(Q.identity())] = Scalar(1);
    std::deque<GroupElement> q{Q.identity()};
    while (!q.empty()) {
      GroupElement h = q.front();
      q.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        GroupElement hs = Q.mul(h, gens[k]);
        if (a[Q.index(hs)]) continue;
        a[Q.index(hs)] = *a[Q.index(h)] * cand[k][choice[k]];
        q.push_back(hs);
      }
    }
    bool hom = true;
    for (std::size_t i = 0; i < els.size() && hom; ++i)
      for (std::size_t j = 0; j < els.size() && hom; ++j)
        hom = *a[Q.index(Q.mul(els[i], els[j]))] == *a[i] * *a[j];
    if (hom) {
      std::vector<Scalar> v;
      for (auto& x : a) v.push_back(*x);
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == cand[k].size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

namespace {

Scalar tr(const Comodule& V, GIndex g) {
  if (!V.C->contains(g)) return Scalar();
  const Matrix& M = V.coeff(g);
  Scalar s;
  for (std::size_t i = 0; i < V.dim; ++i) s += M.at(i, i);
  return s;
}

std::string tuple_string(const std::vector<Scalar>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].to_string();
  return s + ")";
}

struct PulledCharacter {
  std::string label;
  std::vector<Scalar> a;  // indexed by GIndex
};

std::vector<PulledCharacter> pulled_characters(const MatchedPair& mp, const QuotientData& qd, bool registered_only) {
  const Group& Q = qd.Q;
  if (!Q.is_finite() || !Q.is_abelian()) throw InvalidArgument("quotient must be finite abelian");
  GroupHom pi(mp.G(), Q, qd.images);
  std::set<std::size_t> hit;
  for (GIndex g = 0; g < mp.order_G(); ++g) hit.insert(Q.index(pi.apply(mp.gelem(g))));
  if (hit.size() != Q.order()) throw InvalidArgument("quotient map is not surjective");
  std::vector<std::pair<std::string, std::vector<Scalar>>> chars = qd.characters;
  if (!registered_only) {
    auto all = group_characters(Q);
    for (std::size_t i = 0; i < all.size(); ++i) chars.emplace_back(i == 0 ? "trivial" : "chi" + std::to_string(i), all[i]);
  }
  std::vector<PulledCharacter> out;
  for (const auto& [label, chi] : chars) {
    if (chi.size() != Q.order()) throw DimensionMismatch("character '" + label + "' needs one value per element");
    for (std::size_t i = 0; i < chi.size(); ++i)
      for (std::size_t j = 0; j < chi.size(); ++j)
        if (chi[Q.index(Q.mul(Q.element(i), Q.element(j)))] != chi[i] * chi[j])
          throw InvalidArgument("'" + label + "' is not a character of the quotient");
    PulledCharacter pc{label, {}};
    for (GIndex g = 0; g < mp.order_G(); ++g) pc.a.push_back(chi[Q.index(pi.apply(mp.gelem(g)))]);
    out.push_back(std::move(pc));
  }
  return out;
}

Comodule as_comodule(const CoalgebraPtr& C, const std::vector<Scalar>& a, const std::string& label) {
  std::vector<Matrix> m;
  for (GIndex g : C->stabilizer()) {
    Matrix M(1, 1);
    M.at(0, 0) = a[g];
    m.push_back(M);
  }
  return make_comodule(C, std::move(m), label);
}

bool tau_trivial_on(const TwistedCoalgebra& C) {
  for (GIndex a : C.stabilizer())
    for (GIndex b : C.stabilizer())
      if (!C.tau(a, b).is_one()) return false;
  return true;
}

class Battery {
 public:
  Battery(const ContextPtr& ctx, const BatteryOptions& opt) : ctx_(ctx), opt_(opt), mp_(ctx->mp) {
    W_ = ordered_window(mp_.F(), opt.maxlen);
    scope_ = mp_.F().is_finite() ? "exhaustive" : "verified up to word length " + std::to_string(opt.maxlen);
    for (const auto& q : opt.quotients) {
      auto pcs = pulled_characters(mp_, q, false);
      quotient_sets_.push_back(pcs);
      for (auto& pc : pcs) pulled_.push_back(pc);
    }
  }

  // simple comodules over the twisted coalgebra at f (auto-enumerated when possible)
  const std::vector<Comodule>& comodules_at(const GroupElement& f) {
    auto it = cache_.find(f);
    if (it != cache_.end()) return it->second;
    auto C = make_coalgebra(ctx_, f);
    std::vector<Comodule> out;
    if (C->abelian()) {
      out = enumerate_onedim(C);
    } else if (tau_trivial_on(*C)) {
      out.push_back(as_comodule(C, std::vector<Scalar>(mp_.order_G(), Scalar(1)), "trivial@" + mp_.fname(f)));
    }
    if (tau_trivial_on(*C))
      for (const auto& pc : pulled_) out.push_back(as_comodule(C, pc.a, pc.label));
    for (const auto& V : opt_.registered)
      if (V.C->base() == f && V.C->context()->mp.equivalent(mp_)) {
        // rebuild over our coalgebra so positions agree
        out.push_back(make_comodule(C, V.a, V.label));
      }
    return cache_.emplace(f, std::move(out)).first->second;
  }

  CheckReport start(const std::string& name) {
    CheckReport r = make_report(name);
    r.note = scope_;
    return r;
  }
  static CheckReport not_applicable(CheckReport r, const std::string& why) {
    r.status = Status::NotApplicable;
    r.note = why;
    return r;
  }
  static void record(CheckReport& r, bool ok, const std::function<Witness()>& w) {
    ++r.instances;
    if (!ok && r.status != Status::Fail) {
      r.status = Status::Fail;
      r.witness = w();
    }
  }

  bool left_trivial() const { return mp_.left_trivial(); }
  bool cocycles_trivial() const { return ctx_->cp.trivial(); }
  bool tau_trivial() const { return ctx_->cp.tau_trivial(); }
  bool in_stab(GIndex g, const GroupElement& f) const { return mp_.left(g, f) == f; }

  CheckReport orbit_commutation() {
    CheckReport r = start("orbit_commutation");
    const Group& F = mp_.F();
    for (const auto& f : W_)
      for (const auto& f2 : W_) {
        auto cw = orbit_product_commutes(mp_, f, f2);
        record(r, cw.commutes, [&] {
          Witness w;
          w.add("f", F.name(f)).add("f'", F.name(f2)).add("element", F.name(*cw.witness));
          auto o1 = orbit(mp_, f), o2 = orbit(mp_, f2);
          std::set<GroupElement> a, b;
          for (const auto& x : o1)
            for (const auto& y : o2) a.insert(F.mul(x, y)), b.insert(F.mul(y, x));
          auto show = [&](const std::set<GroupElement>& s) {
            std::string t = "{";
            for (const auto& e : s) t += (t.size() > 1 ? ", " : "") + F.name(e);
            return t + "}";
          };
          w.add("O_f O_f'", show(a)).add("O_f' O_f", show(b));
          return w;
        });
      }
    return r;
  }

  CheckReport character_coefficients() {
    CheckReport r = start("character_coefficients");
    const auto& Ws = comodules_at(mp_.F().identity());
    for (const auto& f : W_) {
      const auto& Vs = comodules_at(f);
      OrbitData od = orbit_data(mp_, f);
      for (const auto& V : Vs)
        for (const auto& Wc : Ws)
          for (GIndex g : od.stabilizer)
            for (GIndex z : od.transversal) {
              GIndex zi = mp_.ginv(z);
              GIndex c = mp_.gmul(mp_.gmul(zi, g), z);
              GIndex cf = mp_.right(c, mp_.left(zi, f));
              Scalar lhs = tr(V, g) * tr(Wc, cf), rhs = tr(V, g) * tr(Wc, c);
              record(r, lhs == rhs, [&] {
                return Witness().add("f", mp_.fname(f)).add("V", V.label).add("W", Wc.label).add("g", mp_.gname(g))
                    .add("z", mp_.gname(z)).add("lhs", lhs.to_string()).add("rhs", rhs.to_string());
              });
            }
    }
    return r;
  }

  CheckReport stabilizer_action() {
    CheckReport r = start("stabilizer_action");
    if (!mp_.G().is_abelian()) return not_applicable(r, "needs G abelian");
    if (!tau_trivial()) return not_applicable(r, "needs tau trivial");
    for (const auto& f : W_)
      for (const auto& f2 : W_) {
        auto of = orbit(mp_, f), of2 = orbit(mp_, f2);
        for (GIndex g = 0; g < mp_.order_G(); ++g) {
          if (!in_stab(g, f)) continue;
          if (!in_stab(g, f2)) {
            for (const auto& f3 : of) {
              GIndex gf = mp_.right(g, f3);
              record(r, !in_stab(gf, f2), [&] {
                return Witness().add("part", "1").add("g", mp_.gname(g)).add("f", mp_.fname(f))
                    .add("f'", mp_.fname(f2)).add("f''", mp_.fname(f3)).add("g<|f''", mp_.gname(gf));
              });
            }
          } else {
            bool A = std::any_of(of.begin(), of.end(), [&](const GroupElement& x) { return in_stab(mp_.right(g, x), f2); });
            bool B = std::any_of(of2.begin(), of2.end(), [&](const GroupElement& x) { return in_stab(mp_.right(g, x), f); });
            record(r, A == B, [&] {
              return Witness().add("part", "2").add("g", mp_.gname(g)).add("f", mp_.fname(f)).add("f'", mp_.fname(f2))
                  .add("exists in O_f", A ? "yes" : "no").add("exists in O_f'", B ? "yes" : "no");
            });
          }
        }
      }
    return r;
  }

  CheckReport sigma_symmetry() {
    CheckReport r = start("sigma_symmetry");
    if (!mp_.G().is_abelian() || !mp_.F().is_abelian()) return not_applicable(r, "needs G and F abelian");
    if (!tau_trivial()) return not_applicable(r, "needs tau trivial");
    if (!mp_.right_trivial()) return not_applicable(r, "needs a central extension");
    for (const auto& f : W_)
      for (const auto& f2 : W_)
        for (GIndex g = 0; g < mp_.order_G(); ++g) {
          if (!in_stab(g, f) || !in_stab(g, f2)) continue;
          Scalar a = ctx_->cp.sigma(g, f, f2), b = ctx_->cp.sigma(g, f2, f);
          record(r, a == b, [&] {
            return Witness().add("g", mp_.gname(g)).add("f", mp_.fname(f)).add("f'", mp_.fname(f2))
                .add("sigma(g;f,f')", a.to_string()).add("sigma(g;f',f)", b.to_string());
          });
        }
    return r;
  }

  CheckReport trivial_tau_coefficients() {
    CheckReport r = start("trivial_tau_coefficients");
    if (!tau_trivial()) return not_applicable(r, "needs tau trivial");
    const auto& Ws = comodules_at(mp_.F().identity());
    for (const auto& f : W_) {
      OrbitData od = orbit_data(mp_, f);
      for (const auto& Wc : Ws)
        for (GIndex g : od.stabilizer)
          for (GIndex z : od.transversal) {
            GIndex zi = mp_.ginv(z);
            GIndex c = mp_.gmul(mp_.gmul(zi, g), z);
            GIndex cf = mp_.right(c, mp_.left(zi, f));
            Scalar lhs = tr(Wc, cf), rhs = tr(Wc, c);
            record(r, lhs == rhs, [&] {
              return Witness().add("f", mp_.fname(f)).add("W", Wc.label).add("g", mp_.gname(g)).add("z", mp_.gname(z))
                  .add("lhs", lhs.to_string()).add("rhs", rhs.to_string());
            });
          }
    }
    return r;
  }

  CheckReport trivial_action_coefficients() {
    CheckReport r = start("trivial_action_coefficients");
    if (!left_trivial()) return not_applicable(r, "needs trivial left action");
    for (const auto& f : W_)
      for (const auto& f2 : W_) {
        const auto& Vs = comodules_at(f);
        const auto& Us = comodules_at(f2);
        for (const auto& V : Vs)
          for (const auto& U : Us)
            for (GIndex g = 0; g < mp_.order_G(); ++g) {
              GIndex gf = mp_.right(g, f), gf2 = mp_.right(g, f2);
              Scalar lhs = tr(V, g) * tr(U, gf) * ctx_->cp.sigma(g, f, f2);
              Scalar rhs = tr(V, gf2) * tr(U, g) * ctx_->cp.sigma(g, f2, f);
              record(r, lhs == rhs, [&] {
                return Witness().add("f", mp_.fname(f)).add("f'", mp_.fname(f2)).add("V", V.label).add("W", U.label)
                    .add("g", mp_.gname(g)).add("lhs", lhs.to_string()).add("rhs", rhs.to_string());
              });
            }
      }
    return r;
  }

  CheckReport quotient_characters() {
    CheckReport r = start("quotient_characters");
    if (!left_trivial()) return not_applicable(r, "needs trivial left action");
    if (!cocycles_trivial()) return not_applicable(r, "needs trivial cocycles");
    if (quotient_sets_.empty()) return not_applicable(r, "no quotient registered");
    for (const auto& set : quotient_sets_) {
      // second factor: trivial character first
      std::vector<const PulledCharacter*> second;
      for (const auto& U : set)
        if (std::all_of(U.a.begin(), U.a.end(), [](const Scalar& x) { return x.is_one(); })) second.push_back(&U);
      for (const auto& U : set)
        if (std::find(second.begin(), second.end(), &U) == second.end()) second.push_back(&U);
      for (const auto& V : set)
        for (const auto* Up : second)
          for (GIndex g = 0; g < mp_.order_G(); ++g)
            for (const auto& f : W_)
              for (const auto& f2 : W_) {
                const PulledCharacter& U = *Up;
                GIndex gf = mp_.right(g, f), gf2 = mp_.right(g, f2);
                Scalar lhs = V.a[g] * U.a[gf], rhs = V.a[gf2] * U.a[g];
                record(r, lhs == rhs, [&] {
                  return Witness().add("V", V.label).add("W", U.label).add("g", mp_.gname(g)).add("f", mp_.fname(f))
                      .add("f'", mp_.fname(f2)).add("a^g", V.a[g].to_string()).add("b^(g<|f)", U.a[gf].to_string())
                      .add("g<|f'", mp_.gname(gf2)).add("a^(g<|f')", V.a[gf2].to_string())
                      .add("b^g", U.a[g].to_string());
                });
              }
    }
    return r;
  }

  CheckReport a_g_invariance() {
    CheckReport r = start("a_g_invariance");
    if (!left_trivial()) return not_applicable(r, "needs trivial left action");
    if (!cocycles_trivial()) return not_applicable(r, "needs trivial cocycles");
    for (const auto& V : comodules_at(mp_.F().identity())) {
      if (V.dim != 1) continue;
      std::vector<Scalar> a;
      for (GIndex g = 0; g < mp_.order_G(); ++g) a.push_back(tr(V, g));
      for (const auto& f : W_)
        for (GIndex g = 0; g < mp_.order_G(); ++g) {
          GIndex gf = mp_.right(g, f);
          record(r, a[g] == a[gf], [&] {
            return Witness().add("a", tuple_string(a)).add("V", V.label).add("f", mp_.fname(f)).add("g", mp_.gname(g))
                .add("a^g", a[g].to_string()).add("g<|f", mp_.gname(gf)).add("a^(g<|f)", a[gf].to_string());
          });
        }
    }
    return r;
  }

  CheckReport dual_orbit_commutation() {
    CheckReport r = start("dual_orbit_commutation");
    if (!mp_.F().is_finite()) return not_applicable(r, "needs F finite");
    r.note = "quasitriangular condition";
    for (GIndex g = 0; g < mp_.order_G(); ++g)
      for (GIndex g2 = 0; g2 < mp_.order_G(); ++g2) {
        auto w = dual_orbit_product_commutes(mp_, g, g2);
        record(r, w.commutes, [&] {
          return Witness().add("g", mp_.gname(g)).add("g'", mp_.gname(g2)).add("element", mp_.gname(*w.witness));
        });
      }
    return r;
  }

 private:
  ContextPtr ctx_;
  const BatteryOptions& opt_;
  const MatchedPair& mp_;
  std::vector<GroupElement> W_;
  std::string scope_;
  std::vector<std::vector<PulledCharacter>> quotient_sets_;
  std::vector<PulledCharacter> pulled_;
  std::map<GroupElement, std::vector<Comodule>> cache_;
};

}  // namespace

std::vector<CheckReport> necessary_battery(const ContextPtr& ctx, const BatteryOptions& opt) {
  Battery b(ctx, opt);
  return {b.orbit_commutation(),       b.character_coefficients(),      b.stabilizer_action(),
          b.sigma_symmetry(),          b.trivial_tau_coefficients(),    b.trivial_action_coefficients(),
          b.quotient_characters(),     b.a_g_invariance(),              b.dual_orbit_commutation()};
}

bool battery_excludes_cqt(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.check != "dual_orbit_commutation" && r.status == Status::Fail) return true;
  return false;
}

// ---- bicharacter restriction ----

std::vector<GroupLike> group_likes_over_S(const ContextPtr& ctx, std::size_t maxlen) {
  const MatchedPair& mp = ctx->mp;
  std::vector<GroupLike> out;
  for (const auto& s : ordered_window(mp.F(), maxlen)) {
    bool fixed = true;
    for (GIndex g = 0; g < mp.order_G() && fixed; ++g) fixed = mp.left(g, s) == s;
    if (!fixed) continue;
    auto C = make_coalgebra(ctx, s);
    for (const auto& V : enumerate_onedim(C)) {
      GroupLike x{{}, s, V.label};
      for (GIndex g = 0; g < mp.order_G(); ++g) x.a.push_back(V.coeff(0, 0, g));
      out.push_back(std::move(x));
    }
  }
  return out;
}

HopfElement to_element(const ContextPtr& ctx, const GroupLike& x) {
  HopfElement e(ctx);
  for (GIndex g = 0; g < x.a.size(); ++g) e.add({g, x.s}, x.a[g]);
  return e;
}

Scalar evaluate(const RForm& R, const HopfElement& a, const HopfElement& b) {
  Scalar s;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      if (!R.covers(ka) || !R.covers(kb)) throw InvalidArgument("evaluation outside the window of R");
      s += ca * cb * R.at(ka, kb);
    }
  return s;
}

BicharacterResult bicharacter_restriction_check(const ContextPtr& ctx, const RForm* R, std::size_t maxlen) {
  const MatchedPair& mp = ctx->mp;
  const Group& F = mp.F();
  const std::string scope = F.is_finite() ? "exhaustive" : "verified up to word length " + std::to_string(maxlen);
  BicharacterResult res;
  res.overall = make_report("bicharacter_restriction");
  res.overall.note = scope;
  auto rec = [](CheckReport& r, bool ok, const std::function<Witness()>& w) {
    ++r.instances;
    if (!ok && r.status != Status::Fail) {
      r.status = Status::Fail;
      r.witness = w();
    }
  };
  std::vector<GroupElement> S;
  for (const auto& f : ordered_window(F, maxlen)) {
    bool fixed = true;
    for (GIndex g = 0; g < mp.order_G() && fixed; ++g) fixed = mp.left(g, f) == f;
    if (fixed) S.push_back(f);
  }
  auto hypothesis_failed = [&](CheckReport part, const std::string& why) {
    res.parts.push_back(part);
    res.overall.status = Status::NotApplicable;
    res.overall.note = "HypothesisNotMet: " + why;
    res.overall.witness = part.witness;
    return res;
  };

  CheckReport central = make_report("central_on_S");
  central.note = scope;
  for (const auto& s : S)
    for (GIndex g = 0; g < mp.order_G(); ++g)
      rec(central, mp.right(g, s) == g, [&] {
        return Witness().add("g", mp.gname(g)).add("s", F.name(s)).add("g<|s", mp.gname(mp.right(g, s)));
      });
  if (!central.passed()) return hypothesis_failed(central, "extension is not central on S");

  CheckReport onedim = make_report("one_dimensional_simples");
  onedim.note = scope;
  for (const auto& s : S) {
    auto C = make_coalgebra(ctx, s);
    std::size_t count = C->abelian() ? enumerate_onedim(C).size() : 0;
    rec(onedim, count == mp.order_G(), [&] {
      return Witness().add("s", F.name(s)).add("one-dimensional simples", std::to_string(count))
          .add("|G|", std::to_string(mp.order_G()));
    });
  }
  if (!onedim.passed()) return hypothesis_failed(onedim, "not all simples over S are one-dimensional");
  res.parts.push_back(central);
  res.parts.push_back(onedim);

  CheckReport ab = make_report("S_abelian");
  ab.note = scope;
  for (const auto& s : S)
    for (const auto& t : S)
      rec(ab, F.mul(s, t) == F.mul(t, s), [&] {
        return Witness().add("s", F.name(s)).add("t", F.name(t)).add("st", F.name(F.mul(s, t)))
            .add("ts", F.name(F.mul(t, s)));
      });
  res.parts.push_back(ab);

  CheckReport sym = make_report("sigma_symmetric_on_S");
  sym.note = scope;
  for (const auto& s : S)
    for (const auto& t : S)
      for (GIndex g = 0; g < mp.order_G(); ++g) {
        Scalar a = ctx->cp.sigma(g, s, t), b = ctx->cp.sigma(g, t, s);
        rec(sym, a == b, [&] {
          return Witness().add("g", mp.gname(g)).add("s", F.name(s)).add("t", F.name(t))
              .add("sigma(g;s,t)", a.to_string()).add("sigma(g;t,s)", b.to_string());
        });
      }
  res.parts.push_back(sym);

  auto gl = group_likes_over_S(ctx, maxlen);
  std::vector<HopfElement> el;
  for (const auto& x : gl) el.push_back(to_element(ctx, x));
  auto covered = [&](const HopfElement& e) {
    for (const auto& [k, c] : e.terms())
      if (!in_window(F, k.f, maxlen)) return false;
    return true;
  };
  CheckReport comm = make_report("group_likes_abelian");
  comm.note = scope;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) {
      HopfElement xy = multiply(el[i], el[j]), yx = multiply(el[j], el[i]);
      bool closed = !covered(xy) || std::find(el.begin(), el.end(), xy) != el.end();
      rec(comm, xy == yx && closed, [&] {
        return Witness().add("x", gl[i].label).add("y", gl[j].label).add("xy", to_string(xy)).add("yx", to_string(yx));
      });
    }
  res.parts.push_back(comm);

  if (R) {
    CheckReport bi = make_report("bicharacter");
    bi.note = scope;
    auto beta = [&](const HopfElement& a, const HopfElement& b, bool& skip) {
      if (!covered(a) || !covered(b)) {
        skip = true;
        return Scalar();
      }
      return evaluate(*R, a, b);
    };
    const HopfElement one = unit(ctx);
    auto inst = [&](bool skip, bool ok, const std::function<Witness()>& w) {
      if (skip) {
        ++bi.out_of_window;
        return;
      }
      rec(bi, ok, w);
    };
    for (std::size_t i = 0; i < el.size(); ++i) {
      bool skip = false;
      Scalar a = beta(el[i], one, skip), b = beta(one, el[i], skip);
      inst(skip, a.is_one() && b.is_one(), [&] {
        return Witness().add("law", "unital").add("x", gl[i].label).add("beta(x,1)", a.to_string())
            .add("beta(1,x)", b.to_string());
      });
    }
    for (std::size_t i = 0; i < el.size(); ++i)
      for (std::size_t j = 0; j < el.size(); ++j) {
        HopfElement xy = multiply(el[i], el[j]);
        for (std::size_t k = 0; k < el.size(); ++k) {
          bool skip = false;
          Scalar l1 = beta(xy, el[k], skip), r1 = beta(el[i], el[k], skip) * beta(el[j], el[k], skip);
          inst(skip, l1 == r1, [&] {
            return Witness().add("law", "beta(xy,z) = beta(x,z) beta(y,z)").add("x", gl[i].label)
                .add("y", gl[j].label).add("z", gl[k].label).add("lhs", l1.to_string()).add("rhs", r1.to_string());
          });
          skip = false;
          Scalar l2 = beta(el[k], xy, skip), r2 = beta(el[k], el[i], skip) * beta(el[k], el[j], skip);
          inst(skip, l2 == r2, [&] {
            return Witness().add("law", "beta(z,xy) = beta(z,x) beta(z,y)").add("x", gl[i].label)
                .add("y", gl[j].label).add("z", gl[k].label).add("lhs", l2.to_string()).add("rhs", r2.to_string());
          });
        }
      }
    if (bi.status != Status::Fail && bi.out_of_window) bi.status = Status::OutOfWindow;
    res.parts.push_back(bi);
  }

  for (const auto& p : res.parts) {
    res.overall.instances += p.instances;
    if (p.status == Status::Fail && res.overall.status != Status::Fail) {
      res.overall.status = Status::Fail;
      res.overall.witness = p.witness;
      res.overall.witness->fields.insert(res.overall.witness->fields.begin(), {"part", p.check});
    }
    if (p.status == Status::OutOfWindow && res.overall.status == Status::Pass) res.overall.status = Status::OutOfWindow;
  }
  return res;
}

}  // namespace hopfcqt
