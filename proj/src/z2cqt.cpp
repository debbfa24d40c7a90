#include <algorithm>
#include <functional>

#include "hopfcqt/cqt.hpp"
#include "hopfcqt/error.hpp"
#include "hopfcqt/examples.hpp"

namespace hopfcqt {

namespace {

// polynomials in k with rational coefficients, lowest degree first
using Poly = std::vector<mpq_class>;

Poly padd(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}
Poly pmul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}
Poly pneg(Poly a) {
  for (auto& x : a) x = -x;
  return a;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<R11Solution> z2_r11_solve() {
  auto ctx = make_context(examples::z2_trivial_f(), {}, "Z2_trivialF");
  return z2_r11_solve(*ctx);
}

std::vector<R11Solution> z2_r11_solve(const HopfContext& ctx) {
  if (ctx.mp.order_G() != 2) throw WrongGroup("R11 dichotomy needs G = Z_2");
  // With k = R(p_1#1, p_g#1), the four sums in CQT0 at f = 1 force
  // R(p_1#1,p_1#1) = 1-k, R(p_g#1,p_1#1) = k, R(p_g#1,p_g#1) = -k.
  const Poly k = {0, 1};
  const Poly R11 = {1, -1}, Rg1 = k;
  // CQT1 at g = h = l = 1 and f = f' = f'' = 1:
  //   R11 = R11 R11 + tau(g,g;1) Rg1 Rg1, with tau normalized at f = 1
  Poly P = padd(padd(pmul(R11, R11), pmul(Rg1, Rg1)), pneg(R11));
  while (P.size() > 1 && P.back() == 0) P.pop_back();
  std::vector<mpq_class> roots;
  if (P.size() == 3) {
    mpq_class a = P[2], b = P[1], c = P[0];
    auto s = rational_sqrt(b * b - 4 * a * c);
    if (!s) throw InvalidArgument("R11 quadratic has no rational roots");
    roots.push_back((-b - *s) / (2 * a));
    roots.push_back((-b + *s) / (2 * a));
  } else if (P.size() == 2) {
    roots.push_back(-P[0] / P[1]);
  }
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::vector<R11Solution> out;
  for (const auto& r : roots) {
    Scalar kk(r);
    out.push_back({kk, {Scalar(1) - kk, kk, kk, -kk}});
  }
  return out;
}

RForm z2_r11_form(const ContextPtr& ctx, const R11Solution& s) {
  if (ctx->mp.order_G() != 2) throw WrongGroup("R11 table needs G = Z_2");
  RForm R(ctx);
  const GroupElement one = ctx->mp.F().identity();
  R.set({0, one}, {0, one}, s.table[0]);
  R.set({0, one}, {1, one}, s.table[1]);
  R.set({1, one}, {0, one}, s.table[2]);
  R.set({1, one}, {1, one}, s.table[3]);
  return R;
}

std::string to_string(ShapeVerdict::Kind k) {
  switch (k) {
    case ShapeVerdict::Shape1: return "shape (1)";
    case ShapeVerdict::Shape2: return "shape (2)";
    case ShapeVerdict::Nonconforming: return "nonconforming";
  }
  return "?";
}

ShapeVerdict z2_shape_classify(const RForm& R) {
  const HopfContext& c = *R.context();
  const MatchedPair& mp = c.mp;
  const Group& F = mp.F();
  if (mp.order_G() != 2) throw HypothesisNotMet("shape classification needs G = Z_2");
  if (!F.is_abelian()) throw HypothesisNotMet("shape classification needs F abelian");
  const GIndex g = 1;
  auto inS = [&](const GroupElement& f) { return mp.left(g, f) == f; };
  const auto W = R.window_elements();
  if (std::all_of(W.begin(), W.end(), inS)) throw HypothesisNotMet("F = S on the window (T is empty)");
  auto K = [&](const BasisKey& k) { return key_name(c, k); };
  auto entry = [&](const BasisKey& a, const BasisKey& b) { return "R(" + K(a) + ", " + K(b) + ")"; };

  ShapeVerdict v;
  // zero products
  CheckReport zp = make_report("zero_products");
  zp.note = R.scope();
  auto rec = [](CheckReport& r, bool ok, const std::function<Witness()>& w) {
    ++r.instances;
    if (!ok && r.status != Status::Fail) {
      r.status = Status::Fail;
      r.witness = w();
    }
  };
  for (const auto& [kp, val] : R.table()) {
    const auto& [a, b] = kp;
    if (inS(a.f) && inS(b.f))
      rec(zp, a.g == 0 && b.g == 0, [&] {
        return Witness().add("rule", "entries with g vanish on S x S").add("entry", entry(a, b))
            .add("value", val.to_string());
      });
    if (a.g != 0 || b.g != 0) continue;
    // R(p_1#f, p_1#f') R(p_g#f, p_g#f'') with f, f'' in T
    // R(p_1#f, p_1#f') R(p_g#f'', p_g#f') with f', f'' in T
    for (const auto& [kp2, val2] : R.table()) {
      const auto& [c2, d2] = kp2;
      if (c2.g != g || d2.g != g) continue;
      if (!inS(a.f) && c2.f == a.f && !inS(d2.f))
        rec(zp, false, [&] {
          return Witness().add("rule", "R(p_1#f, p_1#f') R(p_g#f, p_g#f'') = 0, f, f'' in T")
              .add("first", entry(a, b)).add("second", entry(c2, d2))
              .add("product", (val * val2).to_string());
        });
      if (!inS(b.f) && d2.f == b.f && !inS(c2.f))
        rec(zp, false, [&] {
          return Witness().add("rule", "R(p_1#f, p_1#f') R(p_g#f'', p_g#f') = 0, f', f'' in T")
              .add("first", entry(a, b)).add("second", entry(c2, d2))
              .add("product", (val * val2).to_string());
        });
    }
  }
  v.diagnostics.push_back(zp);

  // alternatives depending on k = R(p_1#1, p_g#1)
  const GroupElement one = F.identity();
  const Scalar k = R.at({0, one}, {g, one});
  CheckReport half = make_report("alternatives_half"), zero = make_report("alternatives_zero");
  half.note = zero.note = R.scope();
  auto at = [&](const BasisKey& a, const BasisKey& b, bool& skip) {
    if (!R.covers(a) || !R.covers(b)) {
      skip = true;
      return Scalar();
    }
    return R.at(a, b);
  };
  auto inst = [&](CheckReport& r, bool skip, bool ok, const std::function<Witness()>& w) {
    if (skip) {
      ++r.out_of_window;
      return;
    }
    rec(r, ok, w);
  };
  if (k == Scalar::rational(1, 2)) {
    zero.status = Status::NotApplicable;
    zero.note = "R(p_1#1, p_g#1) = 1/2";
    for (GIndex x = 0; x < 2; ++x)
      for (GIndex h = 0; h < 2; ++h)
        for (const auto& f : W)
          for (const auto& f1 : W) {
            bool skip = false;
            const GroupElement gf = mp.left(g, f);
            Scalar A = at({mp.gmul(x, g), gf}, {h, f1}, skip) * at({g, f}, {h, one}, skip);
            Scalar B = c.cp.tau(g, g, f) * at({g, gf}, {h, one}, skip) * at({g, f}, {h, one}, skip);
            inst(half, skip, A.is_zero() || B == Scalar::rational(1, 4), [&] {
              return Witness().add("x", mp.gname(x)).add("h", mp.gname(h)).add("f", F.name(f)).add("f'", F.name(f1))
                  .add("product", A.to_string()).add("tau R R", B.to_string());
            });
          }
  } else if (k.is_zero()) {
    half.status = Status::NotApplicable;
    half.note = "R(p_1#1, p_g#1) = 0";
    for (GIndex x = 0; x < 2; ++x)
      for (const auto& f : W)
        for (const auto& f1 : W) {
          bool skip = false;
          Scalar e1 = at({x, f}, {0, f1}, skip);
          bool ok1 = e1.is_zero() || (at({0, f}, {0, one}, skip).is_one() && at({x, one}, {0, f1}, skip).is_one());
          Scalar e2 = at({x, f}, {g, f1}, skip);
          bool ok2 = e2.is_zero() ||
                     (at({0, f}, {g, one}, skip).is_one() && at({x, one}, {0, mp.left(g, f1)}, skip).is_one());
          inst(zero, skip, ok1 && ok2, [&] {
            return Witness().add("x", mp.gname(x)).add("f", F.name(f)).add("f'", F.name(f1))
                .add("R(p_x#f, p_1#f')", e1.to_string()).add("R(p_x#f, p_g#f')", e2.to_string());
          });
        }
  } else {
    half.status = zero.status = Status::NotApplicable;
    half.note = zero.note = "R(p_1#1, p_g#1) = " + k.to_string() + " is neither 0 nor 1/2";
  }
  for (auto* r : {&half, &zero})
    if (r->status == Status::Pass && r->out_of_window) r->status = Status::OutOfWindow;
  v.diagnostics.push_back(half);
  v.diagnostics.push_back(zero);

  // support pattern
  bool shape1 = true;
  std::optional<Witness> bad2;
  for (const auto& [kp, val] : R.table()) {
    const auto& [a, b] = kp;
    if (a.g != 0 || b.g != 0) shape1 = false;
    bool sa = inS(a.f), sb = inS(b.f);
    bool ok;
    const char* rule;
    if (a.g == 0 && b.g == 0) ok = sa && sb, rule = "(i) f, f' in S";
    else if (a.g == 0) ok = !sa && sb, rule = "(ii) f in T, f' in S";
    else if (b.g == 0) ok = sa && !sb, rule = "(iii) f in S, f' in T";
    else ok = !sa && !sb, rule = "(iv) f, f' in T";
    if (!ok && !bad2) bad2 = Witness().add("rule", rule).add("entry", entry(a, b)).add("value", val.to_string());
  }
  if (zp.status == Status::Fail) {
    v.kind = ShapeVerdict::Nonconforming;
    v.witness = zp.witness;
  } else if (shape1) {
    v.kind = ShapeVerdict::Shape1;
  } else if (!bad2) {
    v.kind = ShapeVerdict::Shape2;
  } else {
    v.kind = ShapeVerdict::Nonconforming;
    v.witness = bad2;
  }
  return v;
}

}  // namespace hopfcqt
