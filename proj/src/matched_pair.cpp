#include "hopfcqt/matched_pair.hpp"

#include <algorithm>

#include "hopfcqt/error.hpp"

namespace hopfcqt {

MatchedPair::MatchedPair(Group G, Group F, std::vector<std::vector<GroupElement>> left,
                         std::vector<std::vector<GIndex>> right)
    : G_(std::move(G)), F_(std::move(F)), lgen_(std::move(left)), rgen_(std::move(right)) {
  init();
}

MatchedPair MatchedPair::from_rules(Group G, Group F, const LeftRule& left, const RightRule& right) {
  std::size_t n = G.order(), k = F.generators().size();
  std::vector<std::vector<GroupElement>> l(n, std::vector<GroupElement>(k));
  std::vector<std::vector<GIndex>> r(n, std::vector<GIndex>(k));
  for (GIndex g = 0; g < n; ++g)
    for (std::size_t s = 0; s < k; ++s) {
      l[g][s] = left(g, s);
      r[g][s] = right(g, s);
    }
  return MatchedPair(std::move(G), std::move(F), std::move(l), std::move(r));
}

MatchedPair MatchedPair::trivial(Group G, Group F) {
  return from_rules(G, F, [&](GIndex, std::size_t s) { return F.generators()[s]; },
                    [](GIndex g, std::size_t) { return g; });
}

MatchedPair MatchedPair::from_full_tables(Group G, Group F, std::vector<std::vector<GroupElement>> left,
                                          std::vector<std::vector<GIndex>> right) {
  if (!F.is_finite()) throw InfiniteGroup("full action tables need a finite F");
  std::size_t n = G.order(), m = F.order();
  if (left.size() != n || right.size() != n) throw InvalidArgument("full tables need one row per element of G");
  std::vector<std::vector<GroupElement>> lg(n);
  std::vector<std::vector<GIndex>> rg(n);
  for (GIndex g = 0; g < n; ++g) {
    if (left[g].size() != m || right[g].size() != m) throw InvalidArgument("full tables need one column per element of F");
    for (const auto& s : F.generators()) {
      lg[g].push_back(left[g][F.index(s)]);
      rg[g].push_back(right[g][F.index(s)]);
    }
  }
  MatchedPair mp(G, F, std::move(lg), std::move(rg));
  mp.full_ = true;
  mp.lfull_.clear();
  mp.rfull_.clear();
  for (GIndex g = 0; g < n; ++g)
    for (std::size_t i = 0; i < m; ++i) {
      if (!F.contains(left[g][i]) || right[g][i] >= n) throw InvalidArgument("action table entry out of range");
      mp.lfull_.push_back(left[g][i]);
      mp.rfull_.push_back(right[g][i]);
    }
  return mp;
}

void MatchedPair::init() {
  if (!G_.is_finite()) throw InfiniteGroup("G must be finite");
  nG_ = G_.order();
  const auto& els = G_.elements();
  gtab_.resize(nG_ * nG_);
  ginv_.resize(nG_);
  for (GIndex a = 0; a < nG_; ++a) {
    ginv_[a] = G_.index(G_.inv(els[a]));
    for (GIndex b = 0; b < nG_; ++b) gtab_[a * nG_ + b] = G_.index(G_.mul(els[a], els[b]));
  }
  std::size_t k = F_.generators().size();
  if (lgen_.size() != nG_ || rgen_.size() != nG_)
    throw UndefinedGeneratorAction("action tables need one row per element of G");
  for (GIndex g = 0; g < nG_; ++g) {
    if (lgen_[g].size() != k || rgen_[g].size() != k)
      throw UndefinedGeneratorAction("action of " + G_.name(els[g]) + " missing on some generator");
    for (std::size_t s = 0; s < k; ++s) {
      if (!F_.contains(lgen_[g][s])) throw MixedGroups("left action value outside F");
      if (rgen_[g][s] >= nG_) throw UndefinedGeneratorAction("right action value outside G");
    }
  }
  // inverse letters: g' <| s^-1 = g where g <| s = g', and g' |> s^-1 = (g |> s)^-1
  linv_.assign(nG_, std::vector<GroupElement>(k, F_.identity()));
  rinv_.assign(nG_, std::vector<GIndex>(k, 0));
  inverses_ok_ = true;
  for (std::size_t s = 0; s < k; ++s) {
    std::vector<bool> hit(nG_, false);
    for (GIndex g = 0; g < nG_; ++g) {
      GIndex t = rgen_[g][s];
      if (hit[t]) inverses_ok_ = false;
      hit[t] = true;
      rinv_[t][s] = g;
      linv_[t][s] = F_.inv(lgen_[g][s]);
    }
  }
  if (F_.is_finite() && !full_) {
    const auto& fe = F_.elements();
    lfull_.resize(nG_ * fe.size());
    rfull_.resize(nG_ * fe.size());
    for (GIndex g = 0; g < nG_; ++g)
      for (std::size_t i = 0; i < fe.size(); ++i) {
        auto [r, l] = act_word(g, F_.word(fe[i]));
        lfull_[g * fe.size() + i] = l;
        rfull_[g * fe.size() + i] = r;
      }
  }
}

std::pair<GIndex, GroupElement> MatchedPair::act_word(GIndex g, const Word& w) const {
  GroupElement res = F_.identity();
  GIndex cur = g;
  for (const Letter& l : w) {
    std::size_t s = static_cast<std::size_t>(l.generator);
    if (l.power > 0) {
      res = F_.mul(res, lgen_[cur][s]);
      cur = rgen_[cur][s];
    } else {
      if (!inverses_ok_)
        throw UndefinedGeneratorAction("right action of a generator is not a bijection of G; inverse letters undefined");
      res = F_.mul(res, linv_[cur][s]);
      cur = rinv_[cur][s];
    }
  }
  return {cur, res};
}

GroupElement MatchedPair::left(GIndex g, const GroupElement& f) const {
  if (F_.is_finite()) return lfull_[g * F_.order() + F_.index(f)];
  return act_word(g, F_.word(f)).second;
}

GIndex MatchedPair::right(GIndex g, const GroupElement& f) const {
  if (F_.is_finite()) return rfull_[g * F_.order() + F_.index(f)];
  return act_word(g, F_.word(f)).first;
}

bool MatchedPair::left_trivial() const {
  for (GIndex g = 0; g < nG_; ++g)
    for (std::size_t s = 0; s < F_.generators().size(); ++s)
      if (lgen_[g][s] != F_.generators()[s]) return false;
  if (full_) {
    const auto& fe = F_.elements();
    for (GIndex g = 0; g < nG_; ++g)
      for (std::size_t i = 0; i < fe.size(); ++i)
        if (lfull_[g * fe.size() + i] != fe[i]) return false;
  }
  return true;
}

bool MatchedPair::right_trivial() const {
  for (GIndex g = 0; g < nG_; ++g)
    for (std::size_t s = 0; s < F_.generators().size(); ++s)
      if (rgen_[g][s] != g) return false;
  if (full_)
    for (GIndex g = 0; g < nG_; ++g)
      for (std::size_t i = 0; i < F_.order(); ++i)
        if (rfull_[g * F_.order() + i] != g) return false;
  return true;
}

bool MatchedPair::equivalent(const MatchedPair& o) const {
  if (!G_.same_structure(o.G_) || !F_.same_structure(o.F_) || full_ != o.full_) return false;
  for (GIndex g = 0; g < nG_; ++g)
    for (std::size_t s = 0; s < F_.generators().size(); ++s) {
      if (rgen_[g][s] != o.rgen_[g][s]) return false;
      if (F_.name(lgen_[g][s]) != o.F_.name(o.lgen_[g][s])) return false;
    }
  if (full_) {
    if (rfull_ != o.rfull_) return false;
    for (std::size_t i = 0; i < lfull_.size(); ++i)
      if (F_.name(lfull_[i]) != o.F_.name(o.lfull_[i])) return false;
  }
  return true;
}

std::vector<GroupElement> window(const Group& F, std::size_t word_bound) {
  if (F.is_finite()) return F.elements();
  return F.ball(word_bound);
}

bool in_window(const Group& F, const GroupElement& f, std::size_t word_bound) {
  return F.is_finite() || F.word_length(f) <= word_bound;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

std::vector<CheckReport> verify_matched_pair(const MatchedPair& mp, std::size_t word_bound) {
  const Group& F = mp.F();
  const std::size_t n = mp.order_G();
  auto dom = window(F, word_bound);
  const std::string scope = F.is_finite() ? "exhaustive" : "verified up to word length " + std::to_string(word_bound);
  const char* names[] = {"right_action", "left_action", "matched_pair_left", "matched_pair_right",
                         "remark_left_inverse", "remark_right_inverse"};
  std::vector<CheckReport> reps;
  for (const char* nm : names) {
    reps.push_back(make_report(nm));
    reps.back().note = scope;
  }
  auto fail = [&](std::size_t i, Witness w) {
    if (reps[i].status == Status::Pass) {
      reps[i].status = Status::Fail;
      reps[i].witness = std::move(w);
    }
  };
  auto G = [&](GIndex g) { return mp.gname(g); };
  auto Fn = [&](const GroupElement& f) { return F.name(f); };
  try {
    for (GIndex g = 0; g < n; ++g) {
      if (mp.right(g, F.identity()) != g) fail(0, Witness().add("g", G(g)).add("f", "1"));
      if (!F.is_identity(mp.left(g, F.identity()))) fail(1, Witness().add("g", G(g)).add("f", "1"));
    }
    for (const auto& f : dom) {
      if (mp.left(0, f) != f) fail(1, Witness().add("g", "1").add("f", Fn(f)));
      if (mp.right(0, f) != 0) fail(0, Witness().add("g", "1").add("f", Fn(f)));
    }
    for (GIndex g = 0; g < n; ++g)
      for (GIndex g2 = 0; g2 < n; ++g2)
        for (const auto& f : dom) {
          GroupElement g2f = mp.left(g2, f);
          GIndex g2rf = mp.right(g2, f);
          for (const auto& f2 : dom) {
            for (auto& r : reps) ++r.instances;
            GroupElement ff2 = F.mul(f, f2);
            // right action: g <| (f f2) = (g <| f) <| f2
            if (mp.right(g, ff2) != mp.right(mp.right(g, f), f2))
              fail(0, Witness().add("g", G(g)).add("f", Fn(f)).add("f'", Fn(f2)));
            // left action: (g g2) |> f = g |> (g2 |> f)
            if (mp.left(mp.gmul(g, g2), f) != mp.left(g, g2f))
              fail(1, Witness().add("g", G(g)).add("g'", G(g2)).add("f", Fn(f)));
            // g |> (f f2) = (g |> f)((g <| f) |> f2)
            GroupElement lhs = mp.left(g, ff2);
            GroupElement rhs = F.mul(mp.left(g, f), mp.left(mp.right(g, f), f2));
            if (lhs != rhs)
              fail(2, Witness().add("g", G(g)).add("f", Fn(f)).add("f'", Fn(f2)).add("lhs", Fn(lhs)).add("rhs", Fn(rhs)));
            // (g g2) <| f = (g <| (g2 |> f))(g2 <| f)
            GIndex l2 = mp.right(mp.gmul(g, g2), f);
            GIndex r2 = mp.gmul(mp.right(g, g2f), g2rf);
            if (l2 != r2)
              fail(3, Witness().add("g", G(g)).add("g'", G(g2)).add("f", Fn(f)).add("lhs", G(l2)).add("rhs", G(r2)));
            // (g |> f)^-1 = (g <| f) |> f^-1
            if (F.inv(mp.left(g, f)) != mp.left(mp.right(g, f), F.inv(f)))
              fail(4, Witness().add("g", G(g)).add("f", Fn(f)));
            // (g <| f)^-1 = g^-1 <| (g |> f)
            if (mp.ginv(mp.right(g, f)) != mp.right(mp.ginv(g), mp.left(g, f)))
              fail(5, Witness().add("g", G(g)).add("f", Fn(f)));
          }
        }
    if (!F.is_finite()) {
      CheckReport rel = make_report("relators");
      rel.note = "defining relations of F act trivially";
      for (const Word& w : F.relators())
        for (GIndex g = 0; g < n; ++g) {
          ++rel.instances;
          auto [r, l] = mp.act_word(g, w);
          if ((r != g || !F.is_identity(l)) && rel.status == Status::Pass) {
            rel.status = Status::Fail;
            std::string ws;
            for (const Letter& le : w)
              ws += F.generator_names()[static_cast<std::size_t>(le.generator)] + (le.power < 0 ? "^-1 " : " ");
            rel.witness = Witness().add("g", G(g)).add("relator", ws).add("g<|r", G(r)).add("g|>r", Fn(l));
          }
        }
      reps.push_back(rel);
    }
  } catch (const UndefinedGeneratorAction& e) {
    CheckReport r = make_report("generator_actions");
    r.status = Status::Fail;
    r.witness = Witness().add("error", e.what());
    reps.push_back(r);
  }
  return reps;
}

bool OrbitData::in_stabilizer(GIndex g) const {
  return std::find(stabilizer.begin(), stabilizer.end(), g) != stabilizer.end();
}

OrbitData orbit_data(const MatchedPair& mp, const GroupElement& f) {
  OrbitData d;
  d.base = f;
  const std::size_t n = mp.order_G();
  for (GIndex g = 0; g < n; ++g) {
    GroupElement h = mp.left(g, f);
    if (std::find(d.orbit.begin(), d.orbit.end(), h) == d.orbit.end()) d.orbit.push_back(h);
    if (h == f) d.stabilizer.push_back(g);
  }
  d.coset_rep.assign(n, n);
  d.stab_part.assign(n, n);
  for (GIndex x = 0; x < n; ++x) {
    if (d.coset_rep[x] != n) continue;
    d.transversal.push_back(x);
    for (GIndex h : d.stabilizer) {
      GIndex y = mp.gmul(h, x);
      if (d.coset_rep[y] != n) throw InvalidArgument("stabilizer is not a subgroup");
      d.coset_rep[y] = x;
      d.stab_part[y] = h;
    }
  }
  if (d.orbit.size() * d.stabilizer.size() != n || d.transversal.size() != d.orbit.size())
    throw InvalidArgument("orbit-stabilizer count fails; the left action is not an action");
  std::vector<GroupElement> seen;
  for (GIndex z : d.transversal) {
    GroupElement h = mp.left(mp.ginv(z), f);
    if (std::find(seen.begin(), seen.end(), h) != seen.end() ||
        std::find(d.orbit.begin(), d.orbit.end(), h) == d.orbit.end())
      throw InvalidArgument("transversal does not parametrize the orbit");
    seen.push_back(h);
  }
  return d;
}

std::vector<GroupElement> orbit(const MatchedPair& mp, const GroupElement& f) { return orbit_data(mp, f).orbit; }
std::vector<GIndex> stabilizer(const MatchedPair& mp, const GroupElement& f) { return orbit_data(mp, f).stabilizer; }
std::vector<GIndex> transversal(const MatchedPair& mp, const GroupElement& f) { return orbit_data(mp, f).transversal; }

CommuteWitness orbit_product_commutes(const MatchedPair& mp, const GroupElement& f, const GroupElement& f2) {
  const Group& F = mp.F();
  auto o1 = orbit(mp, f), o2 = orbit(mp, f2);
  std::set<GroupElement> a, b;
  for (const auto& x : o1)
    for (const auto& y : o2) {
      a.insert(F.mul(x, y));
      b.insert(F.mul(y, x));
    }
  CommuteWitness w;
  for (const auto& x : a)
    if (!b.count(x)) {
      w.commutes = false;
      w.witness = x;
      return w;
    }
  for (const auto& x : b)
    if (!a.count(x)) {
      w.commutes = false;
      w.witness = x;
      return w;
    }
  return w;
}

std::vector<GIndex> dual_orbit(const MatchedPair& mp, GIndex g) {
  std::vector<GIndex> out{g};
  const Group& F = mp.F();
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t s = 0; s < F.generators().size(); ++s)
      for (int pw : {1, -1}) {
        GIndex h = mp.act_word(out[k], Word{Letter{static_cast<int>(s), pw}}).first;
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
      }
  std::sort(out.begin(), out.end());
  return out;
}

DualCommuteWitness dual_orbit_product_commutes(const MatchedPair& mp, GIndex g, GIndex g2) {
  auto o1 = dual_orbit(mp, g), o2 = dual_orbit(mp, g2);
  std::set<GIndex> a, b;
  for (GIndex x : o1)
    for (GIndex y : o2) {
      a.insert(mp.gmul(x, y));
      b.insert(mp.gmul(y, x));
    }
  DualCommuteWitness w;
  if (a != b) {
    w.commutes = false;
    for (GIndex x : a)
      if (!b.count(x)) {
        w.witness = x;
        return w;
      }
    for (GIndex x : b)
      if (!a.count(x)) {
        w.witness = x;
        return w;
      }
  }
  return w;
}

}  // namespace hopfcqt
