// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "hopfcqt/catalog.hpp"
#include "hopfcqt/examples.hpp"
#include "hopfcqt/grothendieck.hpp"
#include "oracles.hpp"

using namespace hopfcqt;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream why;
  void require(bool c, const std::string& what) {
    if (!c && ok) {
      ok = false;
      why << what;
    }
  }
};

bool holds(const std::vector<CheckReport>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckReport& r) { return r.holds_in_window(); });
}

const CheckReport* find(const std::vector<CheckReport>& rs, const std::string& n) {
  for (const auto& r : rs)
    if (r.check == n) return &r;
  return nullptr;
}

// O_f O_f' computed from explicit orbit lists
std::set<GroupElement> orbit_product(const MatchedPair& mp, const GroupElement& f, const GroupElement& f2, bool swap) {
  std::set<GroupElement> s;
  for (const auto& a : orbit(mp, f))
    for (const auto& b : orbit(mp, f2)) s.insert(swap ? mp.F().mul(b, a) : mp.F().mul(a, b));
  return s;
}

void c1(Verdict& v) {
  auto s3 = make_context(examples::s3_z2());
  auto t0 = std::chrono::steady_clock::now();
  auto rs = verify_hopf_axioms(s3, 4);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.require(basis_window(*s3, 4).size() == 12, "S3_Z2 basis is not 12-dimensional");
  v.require(all_pass(rs), "S3_Z2 Hopf axioms fail");
  v.require(secs < 10.0, "S3_Z2 exhaustive check took " + std::to_string(secs) + " s");
  for (auto mp : {examples::z2_z(), examples::zn_dinf(2), examples::zn_dinf(3), examples::q8_dinf(), examples::q8_z()}) {
    auto r = verify_hopf_axioms(make_context(mp), 4);
    v.require(holds(r) && !r.empty(), "bounded Hopf check failed");
  }
  v.why << "S3_Z2 exhaustive in " << secs << " s";
}

void c2(Verdict& v) {
  auto mp = examples::s3_z2();
  std::size_t pairs = 0;
  for (const auto& f : mp.F().elements())
    for (const auto& f2 : mp.F().elements()) {
      ++pairs;
      bool lib = orbit_product_commutes(mp, f, f2).commutes;
      bool ref = orbit_product(mp, f, f2, false) == orbit_product(mp, f, f2, true);
      v.require(lib && ref, "S3_Z2 pair does not commute");
    }
  v.require(pairs == 36, "expected 36 pairs");
  for (auto m : {examples::zn_dinf(2), examples::zn_dinf(3), examples::q8_dinf()}) {
    GroupElement x = m.F().parse("x"), y = m.F().parse("y");
    auto cw = orbit_product_commutes(m, x, y);
    v.require(!cw.commutes && cw.witness.has_value(), "D_inf pair (x,y) commutes");
    auto A = orbit_product(m, x, y, false), B = orbit_product(m, x, y, true);
    v.require(A != B, "oracle: orbit products agree");
    if (cw.witness) v.require(A.count(*cw.witness) != B.count(*cw.witness), "witness not in symmetric difference");
  }
}

void c3(Verdict& v) {
  auto battery = [](const std::string& id) {
    const CatalogEntry& e = catalog_entry(id);
    return necessary_battery(e.ctx, e.battery);
  };
  {
    auto rs = battery("Z3_Z");
    const CheckReport* r = find(rs, "a_g_invariance");
    const Scalar w = Scalar::root_of_unity(3, 1);
    const std::string a = "(1, " + w.to_string() + ", " + (w * w).to_string() + ")";
    v.require(r && r->status == Status::Fail && r->witness && r->witness->get("a") == a,
              "Z3_Z: a^g = a^{g<|f} does not fail with (1, w, w^2)");
    v.require(battery_excludes_cqt(rs), "Z3_Z not excluded");
  }
  {
    auto rs = battery("Q8_Z");
    const CheckReport* r = find(rs, "quotient_characters");
    v.require(r && r->status == Status::Fail && r->witness && r->witness->get("V") == "X",
              "Q8_Z: quotient check does not fail with X");
  }
  for (const std::string id : {"Q8_Dinf", "Z2_Dinf", "Z3_Dinf"}) {
    auto rs = battery(id);
    const CheckReport* r = find(rs, "orbit_commutation");
    v.require(r && r->status == Status::Fail && r->witness->get("f") == "x" && r->witness->get("f'") == "y",
              id + ": orbit commutation does not fail at (x, y)");
  }
  {
    auto rs = battery("S3_Z2");
    for (const auto& r : rs) v.require(r.status == Status::Pass || r.status == Status::NotApplicable, "S3_Z2: " + r.check);
    const CheckReport* d = find(rs, "dual_orbit_commutation");
    v.require(d && d->status == Status::Pass, "S3_Z2: dual orbit check missing");
  }
}

void c4(Verdict& v) {
  auto c = make_context(examples::z2_z());
  auto rows = z2_table(c, 5);
  for (const auto& r : rows) v.require(r.rule == r.generic, "tensor rule differs from char_product + decompose");
  v.require(rows.size() > 0, "empty table");
  v.why << rows.size() << " pairs with |f| <= 5";
}

void c5(Verdict& v) {
  auto sols = z2_r11_solve();
  const Scalar h = Scalar::rational(1, 2);
  v.require(sols.size() == 2 && sols[0].k == Scalar() && sols[1].k == h, "roots are not {0, 1/2}");
  if (!v.ok) return;
  v.require(sols[0].table == std::array<Scalar, 4>{Scalar(1), Scalar(), Scalar(), Scalar()}, "k = 0 table");
  v.require(sols[1].table == std::array<Scalar, 4>{h, h, h, -h}, "k = 1/2 table");
  auto c = make_context(examples::z2_trivial_f());
  RForm R = z2_r11_form(c, sols[1]);
  v.require(all_pass(verify_R(R)), "k = 1/2 table fails CQT0-3");
  v.require(oracle::generic_axioms(R).all(), "oracle rejects the k = 1/2 table");
  const GroupElement one = c->mp.F().identity();
  R.set({1, one}, {1, one}, h);
  auto bad = verify_R(R);
  const CheckReport* q1 = find(bad, "CQT1");
  v.require(q1 && q1->status == Status::Fail && q1->witness && !q1->witness->fields.empty(),
            "perturbed table has no CQT1 witness");
}

void c6(Verdict& v) {
  std::size_t perturbations = 0;
  for (unsigned n : {2u, 3u})
    for (unsigned m : {2u, 3u}) {
      auto c = make_context(MatchedPair::trivial(Group::cyclic(n), Group::cyclic(m)));
      RForm e = epsilon_form(c);
      v.require(all_pass(verify_R(e, {"CQT0", "CQT1", "CQT2", "CQT3", "CQT4"})), "eps (x) eps fails");
      for (const auto& a : oracle::all_keys(*c))
        for (const auto& b : oracle::all_keys(*c)) {
          RForm p = e;
          p.set(a, b, e.at(a, b) + Scalar(1));
          ++perturbations;
          bool witnessed = false;
          for (const auto& r : verify_R(p, {"CQT0", "CQT1", "CQT2", "CQT3", "CQT4"}))
            witnessed |= r.status == Status::Fail && r.witness && !r.witness->fields.empty();
          v.require(witnessed, "a perturbation went unnoticed");
        }
    }
  v.why << perturbations << " perturbations rejected";
}

void c7(Verdict& v) {
  std::mt19937 rng(2024);
  // structural zeros
  {
    auto pool = oracle::small_contexts();
    std::map<std::string, std::vector<RForm>> sols;
    SearchOptions o;
    o.prune_structural = false;
    for (const auto& n : pool) sols[n.name] = search_R(n.ctx, o).solutions;
    std::size_t trials = 0;
    while (trials < 100) {
      const auto& n = pool[rng() % pool.size()];
      const auto& s = sols[n.name];
      if (s.empty()) continue;
      RForm R = s[rng() % s.size()];
      RForm p = oracle::perturb(R, rng);
      if (oracle::generic_axioms(p).all()) R = p;
      if (!satisfies_cqt(R)) continue;
      ++trials;
      v.require(structural_zeros(R).empty(), "structural zero violated on " + n.name);
    }
  }
  // sqrt of roots of unity
  for (int t = 0; t < 100; ++t) {
    Scalar x = Scalar::root_of_unity(1 + static_cast<long>(rng() % 36), static_cast<long>(rng() % 200) - 100);
    Scalar s = sqrt_root_of_unity(x);
    v.require(s * s == x, "sqrt^2 != x");
  }
  // tau-square identity on S x S for random valid cocycle pairs with G = Z_2
  {
    Group G = Group::cyclic(2);
    std::vector<MatchedPair> mps = {MatchedPair::trivial(G, Group::klein_four()), MatchedPair::trivial(G, Group::cyclic(4)),
                                    oracle::inversion(2, 4), oracle::inversion(2, 3), examples::z2_z2()};
    {
      Group K = Group::klein_four();
      mps.push_back(MatchedPair::from_rules(
          G, K, [K](GIndex g, std::size_t s) { return g == 0 ? K.generators()[s] : K.generators()[1 - s]; },
          [](GIndex g, std::size_t) { return g; }));
    }
    std::size_t valid = 0, attempts = 0;
    while (valid < 100 && attempts < 200000) {
      ++attempts;
      const MatchedPair& mp = mps[rng() % mps.size()];
      const Group& F = mp.F();
      const long order = rng() % 2 ? 2 : 4;
      CocycleTables tb;
      for (const auto& f : F.elements())
        if (!F.is_identity(f)) tb.tau[{1, 1, f}] = Scalar::root_of_unity(order, static_cast<long>(rng() % order));
      for (const auto& f : F.elements())
        for (const auto& f2 : F.elements())
          if (!F.is_identity(f) && !F.is_identity(f2) && rng() % 2)
            tb.sigma[{1, f, f2}] = Scalar::root_of_unity(order, static_cast<long>(rng() % order));
      CocyclePair cp(mp, tb);
      if (!all_pass(verify_cocycles(mp, cp, 2))) continue;
      ++valid;
      for (const auto& f : F.elements())
        for (const auto& f2 : F.elements())
          if (mp.left(1, f) == f && mp.left(1, f2) == f2)
            v.require(tau_square_identity_check(mp, cp, f, f2), "tau square identity fails on S x S");
    }
    v.require(valid >= 100, "only " + std::to_string(valid) + " valid cocycle pairs");
  }
  // character formula against induced traces on catalog simples
  {
    std::size_t compared = 0;
    for (const auto& id : catalog_ids()) {
      const CatalogEntry& e = catalog_entry(id);
      const MatchedPair& mp = e.ctx->mp;
      std::vector<GroupElement> reps;
      for (const auto& f : ordered_window(mp.F(), 2)) {
        GroupElement b = orbit_representative(mp, f);
        if (std::find(reps.begin(), reps.end(), b) == reps.end()) reps.push_back(b);
      }
      for (const auto& f : reps) {
        auto C = make_coalgebra(e.ctx, f);
        std::vector<Comodule> simples;
        if (C->abelian()) simples = enumerate_onedim(C);
        for (const auto& V : e.battery.registered)
          if (V.C->base() == C->base()) simples.push_back(V);
        for (const auto& V : simples) {
          ++compared;
          v.require(trace(induce(V)) == character(V).chi, id + ": trace differs from the character formula");
        }
      }
    }
    v.require(compared >= 100, "only " + std::to_string(compared) + " simples compared");
    v.why << compared << " simples";
  }
}

void c8(Verdict& v) {
  const std::size_t L = 2;
  const CatalogEntry& e = catalog_entry("Z2_Z2xZ");
  const ContextPtr& c = e.ctx;
  const Group& F = c->mp.F();
  auto parts = [&](const GroupElement& f) {
    return std::pair<long, long>{F.factors()[0].is_identity(F.project(f, 0)) ? 0 : 1, F.project(f, 1).v[0]};
  };
  using Phi = std::function<Scalar(long, long, long, long)>;  // (a, i), (b, j)
  const Scalar im = Scalar::root_of_unity(4, 1);
  std::vector<Phi> phis = {
      [](long, long, long, long) { return Scalar(1); },
      [](long a, long, long b, long) { return a * b % 2 ? Scalar(-1) : Scalar(1); },
      [](long a, long, long, long j) { return (a * j) % 2 ? Scalar(-1) : Scalar(1); },
      [](long, long i, long b, long) { return (i * b) % 2 ? Scalar(-1) : Scalar(1); },
      [](long, long i, long, long j) { return (i * j) % 2 ? Scalar(-1) : Scalar(1); },
      [im](long, long i, long, long j) { return im.pow(((i * j) % 4 + 4) % 4); },
      [](long, long i, long, long j) { return Scalar::root_of_unity(3, ((i * j) % 3 + 3) % 3); },
  };
  std::vector<RForm> cands;
  for (const auto& phi : phis) {
    RForm R(c, L);
    for (const auto& f : R.window_elements())
      for (const auto& f2 : R.window_elements()) {
        auto [a, i] = parts(f);
        auto [b, j] = parts(f2);
        R.set({0, f}, {0, f2}, phi(a, i, b, j));
      }
    cands.push_back(R);
  }
  std::mt19937 rng(8);
  const std::size_t base = cands.size();
  for (std::size_t t = 0; t < 3 * base; ++t) {
    RForm p = cands[t % base];
    auto W = p.window_elements();
    BasisKey a{0, W[rng() % W.size()]}, b{0, W[rng() % W.size()]};
    p.set(a, b, -p.at(a, b));
    cands.push_back(p);
  }
  std::size_t passing = 0;
  for (const auto& R : cands) {
    if (!satisfies_cqt(R)) continue;
    ++passing;
    auto res = bicharacter_restriction_check(c, &R, L);
    v.require(res.overall.passed(), "passing R does not restrict to a bicharacter: " + res.overall.to_text());
  }
  v.require(passing >= 2, "fewer than two candidates pass CQT0-3");
  auto st = bicharacter_restriction_check(c, nullptr, L);
  for (const char* n : {"S_abelian", "sigma_symmetric_on_S"}) {
    const CheckReport* r = find(st.parts, n);
    v.require(r && r->passed(), std::string(n) + " does not pass");
  }
  v.why << passing << " of " << cands.size() << " candidates pass CQT0-3";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"Hopf axioms (exhaustive S3_Z2, bounded infinite cases)", c1},
      {"orbit commutation (S3_Z2 all pairs; D_inf cases fail at (x,y))", c2},
      {"necessary battery verdicts", c3},
      {"Z2 and Z: tensor rule equals char_product + decompose", c4},
      {"R11 dichotomy", c5},
      {"eps (x) eps and single-entry perturbations", c6},
      {"randomized property suites", c7},
      {"bicharacter restriction on Z2 and Z2 x Z", c8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.ok = false;
      v.why << "exception: " << e.what();
    }
    std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!v.why.str().empty()) std::cout << " [" << v.why.str() << "]";
    std::cout << "\n";
    failed += !v.ok;
  }
  return failed ? 1 : 0;
}
