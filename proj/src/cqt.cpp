#include "hopfcqt/cqt.hpp"

#include <functional>

#include "hopfcqt/error.hpp"

namespace hopfcqt {

RForm::RForm(ContextPtr ctx, std::optional<std::size_t> maxlen) : ctx_(std::move(ctx)), maxlen_(maxlen) {
  if (!ctx_) throw InvalidArgument("RForm needs a context");
  if (!ctx_->mp.F().is_finite() && !maxlen_) maxlen_ = 4;
}

bool RForm::exhaustive() const { return ctx_->mp.F().is_finite(); }

bool RForm::covers(const BasisKey& k) const {
  if (exhaustive()) return true;
  return ctx_->mp.F().word_length(k.f) <= *maxlen_;
}

Scalar RForm::at(const BasisKey& a, const BasisKey& b) const {
  auto it = table_.find({a, b});
  return it == table_.end() ? Scalar() : it->second;
}

void RForm::set(const BasisKey& a, const BasisKey& b, const Scalar& c) {
  if (a.g >= ctx_->mp.order_G() || b.g >= ctx_->mp.order_G())
    throw InvalidArgument("R entry with G-index out of range");
  if (!covers(a) || !covers(b))
    throw InvalidArgument("R entry (" + key_name(*ctx_, a) + ", " + key_name(*ctx_, b) + ") lies outside the window");
  if (c.is_zero())
    table_.erase({a, b});
  else
    table_[{a, b}] = c;
}

std::vector<GroupElement> RForm::window_elements() const { return window(ctx_->mp.F(), maxlen_.value_or(0)); }

std::string RForm::scope() const {
  return exhaustive() ? "exhaustive" : "verified up to word length " + std::to_string(*maxlen_);
}

RForm epsilon_form(const ContextPtr& ctx, std::optional<std::size_t> maxlen) {
  RForm R(ctx, maxlen);
  for (const auto& f : R.window_elements())
    for (const auto& f2 : R.window_elements()) R.set({0, f}, {0, f2}, Scalar(1));
  return R;
}

namespace {

// Evaluates R, flagging instances that need an entry outside the window.
struct Eval {
  const RForm& R;
  bool skipped = false;
  Scalar operator()(const BasisKey& a, const BasisKey& b) {
    if (!R.covers(a) || !R.covers(b)) {
      skipped = true;
      return Scalar();
    }
    return R.at(a, b);
  }
};

struct Sweep {
  CheckReport rep;
  void instance(bool skipped, bool ok, const std::function<Witness()>& w) {
    if (skipped) {
      ++rep.out_of_window;
      return;
    }
    ++rep.instances;
    if (!ok && rep.status != Status::Fail) {
      rep.status = Status::Fail;
      rep.witness = w();
    }
  }
  CheckReport finish() {
    if (rep.status != Status::Fail && rep.out_of_window > 0) rep.status = Status::OutOfWindow;
    return rep;
  }
};

}  // namespace

std::vector<CheckReport> verify_R(const RForm& R, const std::vector<std::string>& levels) {
  const HopfContext& c = *R.context();
  const MatchedPair& mp = c.mp;
  const CocyclePair& cp = c.cp;
  const Group& F = mp.F();
  const std::size_t n = mp.order_G();
  const auto W = R.window_elements();
  const GroupElement one = F.identity();
  auto Gn = [&](GIndex g) { return mp.gname(g); };
  auto Fn = [&](const GroupElement& f) { return F.name(f); };
  auto K = [&](const BasisKey& k) { return key_name(c, k); };

  std::vector<CheckReport> out;
  for (const auto& lv : levels) {
    Sweep sw{make_report(lv)};
    sw.rep.note = R.scope();
    if (lv == "CQT0") {
      // sum_x R(p_x#1, p_g#f) = sum_x R(p_g#f, p_x#1) = delta_{g,1}
      for (GIndex g = 0; g < n; ++g)
        for (const auto& f : W) {
          Eval ev{R};
          Scalar left, right;
          for (GIndex x = 0; x < n; ++x) {
            left += ev({x, one}, {g, f});
            right += ev({g, f}, {x, one});
          }
          Scalar want(g == 0 ? 1 : 0);
          sw.instance(ev.skipped, left == want && right == want, [&] {
            return Witness().add("g", Gn(g)).add("f", Fn(f)).add("sum_x R(p_x#1, p_g#f)", left.to_string())
                .add("sum_x R(p_g#f, p_x#1)", right.to_string()).add("expected", want.to_string());
          });
        }
    } else if (lv == "CQT1") {
      // delta_{h<|f', l} sigma(h; f', f'') R(p_g#f, p_h#f'f'')
      //   = sum_x tau(gx^-1, x; f) R(p_{gx^-1}#(x|>f), p_l#f'') R(p_x#f, p_h#f')
      for (GIndex g = 0; g < n; ++g)
        for (GIndex h = 0; h < n; ++h)
          for (GIndex l = 0; l < n; ++l)
            for (const auto& f : W)
              for (const auto& f1 : W)
                for (const auto& f2 : W) {
                  Eval ev{R};
                  Scalar lhs;
                  if (mp.right(h, f1) == l) lhs = cp.sigma(h, f1, f2) * ev({g, f}, {h, F.mul(f1, f2)});
                  Scalar rhs;
                  for (GIndex x = 0; x < n; ++x) {
                    Scalar r2 = ev({x, f}, {h, f1});
                    if (r2.is_zero()) continue;
                    GIndex gx = mp.gmul(g, mp.ginv(x));
                    Scalar r1 = ev({gx, mp.left(x, f)}, {l, f2});
                    if (r1.is_zero()) continue;
                    rhs += cp.tau(gx, x, f) * r1 * r2;
                  }
                  sw.instance(ev.skipped, lhs == rhs, [&] {
                    return Witness().add("g", Gn(g)).add("h", Gn(h)).add("l", Gn(l)).add("f", Fn(f))
                        .add("f'", Fn(f1)).add("f''", Fn(f2)).add("lhs", lhs.to_string()).add("rhs", rhs.to_string());
                  });
                }
    } else if (lv == "CQT2") {
      // delta_{g<|f, h} sigma(g; f, f') R(p_g#ff', p_l#f'')
      //   = sum_x tau(lx^-1, x; f'') R(p_g#f, p_{lx^-1}#(x|>f'')) R(p_h#f', p_x#f'')
      for (GIndex g = 0; g < n; ++g)
        for (GIndex h = 0; h < n; ++h)
          for (GIndex l = 0; l < n; ++l)
            for (const auto& f : W)
              for (const auto& f1 : W)
                for (const auto& f2 : W) {
                  Eval ev{R};
                  Scalar lhs;
                  if (mp.right(g, f) == h) lhs = cp.sigma(g, f, f1) * ev({g, F.mul(f, f1)}, {l, f2});
                  Scalar rhs;
                  for (GIndex x = 0; x < n; ++x) {
                    Scalar r2 = ev({h, f1}, {x, f2});
                    if (r2.is_zero()) continue;
                    GIndex lx = mp.gmul(l, mp.ginv(x));
                    Scalar r1 = ev({g, f}, {lx, mp.left(x, f2)});
                    if (r1.is_zero()) continue;
                    rhs += cp.tau(lx, x, f2) * r1 * r2;
                  }
                  sw.instance(ev.skipped, lhs == rhs, [&] {
                    return Witness().add("g", Gn(g)).add("h", Gn(h)).add("l", Gn(l)).add("f", Fn(f))
                        .add("f'", Fn(f1)).add("f''", Fn(f2)).add("lhs", lhs.to_string()).add("rhs", rhs.to_string());
                  });
                }
    } else if (lv == "CQT3") {
      // Both sides expanded over the basis p_l # (...), compared key by key.
      for (GIndex g = 0; g < n; ++g)
        for (GIndex h = 0; h < n; ++h)
          for (const auto& f : W)
            for (const auto& f1 : W) {
              Eval ev{R};
              HopfElement lhs(R.context()), rhs(R.context());
              const GIndex hf = mp.right(h, f1);
              for (GIndex l = 0; l < n; ++l) {
                const GIndex li = mp.ginv(l);
                const GIndex lf = mp.right(l, f);
                const GIndex hlf = mp.gmul(h, mp.ginv(lf));
                Scalar r = ev({mp.gmul(g, li), mp.left(l, f)}, {hlf, mp.left(lf, f1)});
                if (!r.is_zero())
                  lhs.add({l, F.mul(f, f1)},
                          cp.tau(mp.gmul(g, li), l, f) * cp.tau(hlf, lf, f1) * r * cp.sigma(l, f, f1));
                const GIndex u = mp.gmul(li, h);
                const GIndex uf = mp.right(u, f1);
                const GIndex X = mp.gmul(mp.gmul(uf, mp.ginv(hf)), g);
                Scalar r2 = ev({X, f}, {u, f1});
                if (!r2.is_zero()) {
                  const GroupElement uf1 = mp.left(u, f1), Xf = mp.left(X, f);
                  rhs.add({l, F.mul(uf1, Xf)}, cp.tau(mp.gmul(hf, mp.ginv(uf)), X, f) * cp.tau(l, u, f1) * r2 *
                                                   cp.sigma(l, uf1, Xf));
                }
              }
              bool ok = lhs == rhs;
              sw.instance(ev.skipped, ok, [&] {
                HopfElement d = lhs - rhs;
                const BasisKey& k = d.terms().begin()->first;
                return Witness().add("g", Gn(g)).add("h", Gn(h)).add("f", Fn(f)).add("f'", Fn(f1)).add("key", K(k))
                    .add("lhs", lhs.coeff(k).to_string()).add("rhs", rhs.coeff(k).to_string());
              });
            }
    } else if (lv == "CQT4") {
      // sum_{x,y} tau(gx^-1,x;f) tau(hy^-1,y;f') R(p_{gx^-1}#(x|>f), p_{hy^-1}#(y|>f')) R(p_y#f', p_x#f)
      //   = delta_{g,1} delta_{h,1}
      for (GIndex g = 0; g < n; ++g)
        for (GIndex h = 0; h < n; ++h)
          for (const auto& f : W)
            for (const auto& f1 : W) {
              Eval ev{R};
              Scalar sum;
              for (GIndex x = 0; x < n; ++x)
                for (GIndex y = 0; y < n; ++y) {
                  Scalar r2 = ev({y, f1}, {x, f});
                  if (r2.is_zero()) continue;
                  GIndex gx = mp.gmul(g, mp.ginv(x)), hy = mp.gmul(h, mp.ginv(y));
                  Scalar r1 = ev({gx, mp.left(x, f)}, {hy, mp.left(y, f1)});
                  if (r1.is_zero()) continue;
                  sum += cp.tau(gx, x, f) * cp.tau(hy, y, f1) * r1 * r2;
                }
              Scalar want(g == 0 && h == 0 ? 1 : 0);
              sw.instance(ev.skipped, sum == want, [&] {
                return Witness().add("g", Gn(g)).add("h", Gn(h)).add("f", Fn(f)).add("f'", Fn(f1))
                    .add("lhs", sum.to_string()).add("rhs", want.to_string());
              });
            }
    } else if (lv == "INV") {
      // R^{-1}(a, b) = R(S(a), b) is a two-sided convolution inverse
      for (GIndex g = 0; g < n; ++g)
        for (GIndex h = 0; h < n; ++h)
          for (const auto& f : W)
            for (const auto& f1 : W) {
              Eval ev{R};
              const BasisKey a{g, f}, b{h, f1};
              auto da = delta_basis(c, a), db = delta_basis(c, b);
              Scalar left, right;
              for (const auto& [a1, a2, ca] : da)
                for (const auto& [b1, b2, cb] : db) {
                  auto [sa1, s1] = antipode_basis(c, a1);
                  auto [sa2, s2] = antipode_basis(c, a2);
                  Scalar w = ca * cb;
                  left += w * s1 * ev(sa1, b1) * ev(a2, b2);
                  right += w * ev(a1, b1) * s2 * ev(sa2, b2);
                }
              Scalar want(g == 0 && h == 0 ? 1 : 0);
              sw.instance(ev.skipped, left == want && right == want, [&] {
                return Witness().add("a", K(a)).add("b", K(b)).add("R^-1 * R", left.to_string())
                    .add("R * R^-1", right.to_string()).add("expected", want.to_string());
              });
            }
    } else {
      throw InvalidArgument("unknown level '" + lv + "'");
    }
    out.push_back(sw.finish());
  }
  return out;
}

bool satisfies_cqt(const RForm& R) {
  for (const auto& r : verify_R(R))
    if (!r.holds_in_window()) return false;
  return true;
}

std::vector<ZeroViolation> structural_zeros(const RForm& R) {
  const MatchedPair& mp = R.context()->mp;
  const Group& F = mp.F();
  const bool abelian = F.is_abelian();
  std::vector<ZeroViolation> out;
  for (const auto& [kp, v] : R.table()) {
    const auto& [a, b] = kp;
    // ff' != (h|>f')(g|>f)
    if (F.mul(a.f, b.f) != F.mul(mp.left(b.g, b.f), mp.left(a.g, a.f))) out.push_back({"product_order", kp, v});
    bool ga = mp.left(a.g, a.f) == a.f, gb = mp.left(b.g, b.f) == b.f;
    if (abelian && ga != gb) out.push_back({"abelian_stabilizer", kp, v});
    // g outside G_f paired with p_h#1, in either slot
    if ((F.is_identity(b.f) && !ga) || (F.is_identity(a.f) && !gb)) out.push_back({"stabilizer_unit", kp, v});
  }
  return out;
}

CheckReport structural_zero_report(const RForm& R) {
  CheckReport rep = make_report("structural_zeros");
  rep.note = R.scope();
  rep.instances = R.table().size();
  auto v = structural_zeros(R);
  if (!v.empty()) {
    rep.status = Status::Fail;
    const auto& z = v.front();
    rep.witness = Witness()
                      .add("rule", z.rule)
                      .add("entry", "R(" + key_name(*R.context(), z.entry.first) + ", " +
                                        key_name(*R.context(), z.entry.second) + ")")
                      .add("value", z.value.to_string())
                      .add("violations", std::to_string(v.size()));
  }
  return rep;
}

}  // namespace hopfcqt
