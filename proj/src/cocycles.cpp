#include "hopfcqt/cocycles.hpp"

#include "hopfcqt/error.hpp"

namespace hopfcqt {

namespace {
bool is_id(const GroupElement& f) { return f.v == std::array<std::int64_t, 4>{0, 0, 0, 0}; }
}  // namespace

CocyclePair::CocyclePair(const MatchedPair& mp, CocycleTables tables) : t_(std::move(tables)) {
  for (const auto& [k, v] : t_.sigma) {
    const auto& [g, f, f2] = k;
    if (g >= mp.order_G() || !mp.F().contains(f) || !mp.F().contains(f2))
      throw InvalidArgument("sigma entry with arguments outside G x F x F");
    if (v.is_zero()) throw InvalidArgument("sigma values must be nonzero");
    if ((g == 0 || is_id(f) || is_id(f2)) && !v.is_one())
      throw InvalidArgument("sigma must be normalized: entry at (" + mp.gname(g) + "; " + mp.fname(f) + ", " +
                            mp.fname(f2) + ") is not 1");
    if (!v.is_one()) sigma_trivial_ = false;
  }
  for (const auto& [k, v] : t_.tau) {
    const auto& [g, g2, f] = k;
    if (g >= mp.order_G() || g2 >= mp.order_G() || !mp.F().contains(f))
      throw InvalidArgument("tau entry with arguments outside G x G x F");
    if (v.is_zero()) throw InvalidArgument("tau values must be nonzero");
    if ((g == 0 || g2 == 0 || is_id(f)) && !v.is_one())
      throw InvalidArgument("tau must be normalized: entry at (" + mp.gname(g) + ", " + mp.gname(g2) + "; " +
                            mp.fname(f) + ") is not 1");
    if (!v.is_one()) tau_trivial_ = false;
  }
  if (t_.sigma_default && t_.sigma_default->is_zero()) throw InvalidArgument("sigma default must be nonzero");
  if (t_.tau_default && t_.tau_default->is_zero()) throw InvalidArgument("tau default must be nonzero");
  if (!t_.sigma_default || !t_.sigma_default->is_one()) sigma_trivial_ = false;
  if (!t_.tau_default || !t_.tau_default->is_one()) tau_trivial_ = false;
}

Scalar CocyclePair::sigma(GIndex g, const GroupElement& f, const GroupElement& f2) const {
  if (g == 0 || is_id(f) || is_id(f2) || sigma_trivial_) return Scalar(1);
  auto it = t_.sigma.find({g, f, f2});
  if (it != t_.sigma.end()) return it->second;
  if (!t_.sigma_default) throw MissingEntry("sigma has no entry and no default");
  return *t_.sigma_default;
}

Scalar CocyclePair::tau(GIndex g, GIndex g2, const GroupElement& f) const {
  if (g == 0 || g2 == 0 || is_id(f) || tau_trivial_) return Scalar(1);
  auto it = t_.tau.find({g, g2, f});
  if (it != t_.tau.end()) return it->second;
  if (!t_.tau_default) throw MissingEntry("tau has no entry and no default");
  return *t_.tau_default;
}

std::vector<CheckReport> verify_cocycles(const MatchedPair& mp, const CocyclePair& cp, std::size_t word_bound) {
  const Group& F = mp.F();
  const std::size_t n = mp.order_G();
  auto dom = window(F, word_bound);
  const std::string scope = F.is_finite() ? "exhaustive" : "verified up to word length " + std::to_string(word_bound);
  std::vector<CheckReport> reps = {make_report("normalization"), make_report("sigma_cocycle"),
                                   make_report("tau_cocycle"), make_report("compatibility")};
  for (auto& r : reps) r.note = scope;
  auto fail = [&](std::size_t i, Witness w) {
    if (reps[i].status == Status::Pass) {
      reps[i].status = Status::Fail;
      reps[i].witness = std::move(w);
    }
  };
  auto Gn = [&](GIndex g) { return mp.gname(g); };
  auto Fn = [&](const GroupElement& f) { return F.name(f); };
  const GroupElement one = F.identity();
  if (cp.trivial()) {
    for (auto& r : reps) r.note += "; trivial cocycles";
    return reps;
  }
  try {
    for (GIndex g = 0; g < n; ++g)
      for (const auto& f : dom) {
        reps[0].instances += 3;
        if (!cp.sigma(g, one, f).is_one() || !cp.sigma(g, f, one).is_one())
          fail(0, Witness().add("sigma", Gn(g) + "; " + Fn(f)));
        if (!cp.sigma(0, f, f).is_one()) fail(0, Witness().add("sigma", "1; " + Fn(f)));
        for (GIndex g2 = 0; g2 < n; ++g2)
          if (!cp.tau(0, g2, f).is_one() || !cp.tau(g2, 0, f).is_one() || !cp.tau(g, g2, one).is_one())
            fail(0, Witness().add("tau", Gn(g) + ", " + Gn(g2) + "; " + Fn(f)));
      }
    // sigma(g<|f; f', f'') sigma(g; f, f'f'') = sigma(g; f, f') sigma(g; ff', f'')
    for (GIndex g = 0; g < n; ++g)
      for (const auto& f : dom) {
        GIndex grf = mp.right(g, f);
        for (const auto& f2 : dom)
          for (const auto& f3 : dom) {
            ++reps[1].instances;
            Scalar lhs = cp.sigma(grf, f2, f3) * cp.sigma(g, f, F.mul(f2, f3));
            Scalar rhs = cp.sigma(g, f, f2) * cp.sigma(g, F.mul(f, f2), f3);
            if (lhs != rhs)
              fail(1, Witness().add("g", Gn(g)).add("f", Fn(f)).add("f'", Fn(f2)).add("f''", Fn(f3))
                          .add("lhs", lhs.to_string()).add("rhs", rhs.to_string()));
          }
      }
    // tau(g, g'; g''|>f) tau(gg', g''; f) = tau(g, g'g''; f) tau(g', g''; f)
    for (GIndex g = 0; g < n; ++g)
      for (GIndex g2 = 0; g2 < n; ++g2)
        for (GIndex g3 = 0; g3 < n; ++g3)
          for (const auto& f : dom) {
            ++reps[2].instances;
            Scalar lhs = cp.tau(g, g2, mp.left(g3, f)) * cp.tau(mp.gmul(g, g2), g3, f);
            Scalar rhs = cp.tau(g, mp.gmul(g2, g3), f) * cp.tau(g2, g3, f);
            if (lhs != rhs)
              fail(2, Witness().add("g", Gn(g)).add("g'", Gn(g2)).add("g''", Gn(g3)).add("f", Fn(f))
                          .add("lhs", lhs.to_string()).add("rhs", rhs.to_string()));
          }
    // sigma(gg'; f, f') tau(g, g'; ff') =
    //   sigma(g; g'|>f, (g'<|f)|>f') sigma(g'; f, f') tau(g, g'; f) tau(g<|(g'|>f), g'<|f; f')
    for (GIndex g = 0; g < n; ++g)
      for (GIndex g2 = 0; g2 < n; ++g2)
        for (const auto& f : dom) {
          GroupElement g2f = mp.left(g2, f);
          GIndex g2rf = mp.right(g2, f);
          GIndex grg2f = mp.right(g, g2f);
          for (const auto& f2 : dom) {
            ++reps[3].instances;
            Scalar lhs = cp.sigma(mp.gmul(g, g2), f, f2) * cp.tau(g, g2, F.mul(f, f2));
            Scalar rhs = cp.sigma(g, g2f, mp.left(g2rf, f2)) * cp.sigma(g2, f, f2) * cp.tau(g, g2, f) *
                         cp.tau(grg2f, g2rf, f2);
            if (lhs != rhs)
              fail(3, Witness().add("g", Gn(g)).add("g'", Gn(g2)).add("f", Fn(f)).add("f'", Fn(f2))
                          .add("lhs", lhs.to_string()).add("rhs", rhs.to_string()));
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

bool tau_square_identity_check(const MatchedPair& mp, const CocyclePair& cp, const GroupElement& f,
                               const GroupElement& f2) {
  if (mp.order_G() != 2) throw WrongGroup("tau square identity needs G = Z_2");
  const GIndex g = 1;
  Scalar s = cp.sigma(g, f, f2);
  return cp.tau(g, g, mp.F().mul(f, f2)) == s * s * cp.tau(g, g, f) * cp.tau(g, g, f2);
}

}  // namespace hopfcqt
