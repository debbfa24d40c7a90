#include <algorithm>
#include <map>

#include "hopfcqt/cqt.hpp"
#include "hopfcqt/error.hpp"

namespace hopfcqt {

namespace {

using Row = std::vector<std::pair<std::size_t, Scalar>>;

// sum lin + sum quad = 0
struct Quad {
  Row lin;
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> quad;
};

struct Problem {
  ContextPtr ctx;
  std::vector<BasisKey> keys;
  std::map<BasisKey, std::size_t> idx;
  std::size_t nB = 0;
  std::vector<std::pair<Row, Scalar>> linear;  // row = rhs
  std::vector<Quad> quads;

  std::size_t u(const BasisKey& a, const BasisKey& b) const { return idx.at(a) * nB + idx.at(b); }
};

Problem build(const ContextPtr& ctx, bool prune) {
  Problem P;
  P.ctx = ctx;
  const MatchedPair& mp = ctx->mp;
  const CocyclePair& cp = ctx->cp;
  const Group& F = mp.F();
  const std::size_t n = mp.order_G();
  const auto& Fe = F.elements();
  const GroupElement one = F.identity();
  for (GIndex g = 0; g < n; ++g)
    for (const auto& f : Fe) {
      P.idx[{g, f}] = P.keys.size();
      P.keys.push_back({g, f});
    }
  P.nB = P.keys.size();

  // CQT0
  for (GIndex g = 0; g < n; ++g)
    for (const auto& f : Fe) {
      Row l, r;
      for (GIndex x = 0; x < n; ++x) {
        l.emplace_back(P.u({x, one}, {g, f}), Scalar(1));
        r.emplace_back(P.u({g, f}, {x, one}), Scalar(1));
      }
      P.linear.emplace_back(l, Scalar(g == 0 ? 1 : 0));
      P.linear.emplace_back(r, Scalar(g == 0 ? 1 : 0));
    }
  // CQT3, coefficientwise
  for (GIndex g = 0; g < n; ++g)
    for (GIndex h = 0; h < n; ++h)
      for (const auto& f : Fe)
        for (const auto& f1 : Fe) {
          std::map<BasisKey, Row> rows;
          const GIndex hf = mp.right(h, f1);
          for (GIndex l = 0; l < n; ++l) {
            const GIndex li = mp.ginv(l), lf = mp.right(l, f), hlf = mp.gmul(h, mp.ginv(lf));
            rows[{l, F.mul(f, f1)}].emplace_back(
                P.u({mp.gmul(g, li), mp.left(l, f)}, {hlf, mp.left(lf, f1)}),
                cp.tau(mp.gmul(g, li), l, f) * cp.tau(hlf, lf, f1) * cp.sigma(l, f, f1));
            const GIndex uu = mp.gmul(li, h), uf = mp.right(uu, f1);
            const GIndex X = mp.gmul(mp.gmul(uf, mp.ginv(hf)), g);
            const GroupElement uf1 = mp.left(uu, f1), Xf = mp.left(X, f);
            rows[{l, F.mul(uf1, Xf)}].emplace_back(
                P.u({X, f}, {uu, f1}), -(cp.tau(mp.gmul(hf, mp.ginv(uf)), X, f) * cp.tau(l, uu, f1) * cp.sigma(l, uf1, Xf)));
          }
          for (auto& [k, row] : rows) P.linear.emplace_back(std::move(row), Scalar());
        }
  if (prune) {
    for (const auto& a : P.keys)
      for (const auto& b : P.keys) {
        RForm one_entry(ctx);
        one_entry.set(a, b, Scalar(1));
        if (!structural_zeros(one_entry).empty()) P.linear.push_back({{{P.u(a, b), Scalar(1)}}, Scalar()});
      }
  }
  // CQT1 and CQT2
  for (GIndex g = 0; g < n; ++g)
    for (GIndex h = 0; h < n; ++h)
      for (GIndex l = 0; l < n; ++l)
        for (const auto& f : Fe)
          for (const auto& f1 : Fe)
            for (const auto& f2 : Fe) {
              Quad q1;
              if (mp.right(h, f1) == l) q1.lin.emplace_back(P.u({g, f}, {h, F.mul(f1, f2)}), cp.sigma(h, f1, f2));
              for (GIndex x = 0; x < n; ++x) {
                GIndex gx = mp.gmul(g, mp.ginv(x));
                q1.quad.emplace_back(P.u({gx, mp.left(x, f)}, {l, f2}), P.u({x, f}, {h, f1}), -cp.tau(gx, x, f));
              }
              P.quads.push_back(std::move(q1));
              Quad q2;
              if (mp.right(g, f) == h) q2.lin.emplace_back(P.u({g, F.mul(f, f1)}, {l, f2}), cp.sigma(g, f, f1));
              for (GIndex x = 0; x < n; ++x) {
                GIndex lx = mp.gmul(l, mp.ginv(x));
                q2.quad.emplace_back(P.u({g, f}, {lx, mp.left(x, f2)}), P.u({h, f1}, {x, f2}), -cp.tau(lx, x, f2));
              }
              P.quads.push_back(std::move(q2));
            }
  return P;
}

struct State {
  LinearAccumulator acc;
  std::vector<char> consumed;
};

class Searcher {
 public:
  Searcher(Problem P, const SearchOptions& opt) : P_(std::move(P)), opt_(opt) {
    cands_.push_back(Scalar());
    for (unsigned d : opt.denominators)
      for (unsigned N : opt.root_orders)
        for (unsigned j = 0; j < N; ++j) {
          Scalar v = Scalar::root_of_unity(N, j) / Scalar(static_cast<long>(d));
          if (std::find(cands_.begin(), cands_.end(), v) == cands_.end()) cands_.push_back(v);
        }
  }

  SearchResult run() {
    const std::size_t N = P_.nB * P_.nB;
    State s{LinearAccumulator(N), std::vector<char>(P_.quads.size(), 0)};
    for (const auto& [row, rhs] : P_.linear)
      if (!s.acc.add(row, rhs)) {
        res_.exhausted = true;
        return res_;
      }
    aborted_ = false;
    dfs(std::move(s));
    res_.exhausted = !aborted_;
    return res_;
  }

 private:
  // Linearize quadratic equations whose products have a determined factor.
  bool propagate(State& s) {
    for (bool changed = true; changed;) {
      changed = false;
      auto par = s.acc.parametrize();
      auto det = [&](std::size_t v) { return par[v].terms.empty(); };
      for (std::size_t e = 0; e < P_.quads.size(); ++e) {
        if (s.consumed[e]) continue;
        const Quad& q = P_.quads[e];
        Row row;
        Scalar c;
        bool linear = true;
        for (const auto& [v, k] : q.lin) {
          if (det(v))
            c += k * par[v].constant;
          else
            row.emplace_back(v, k);
        }
        for (const auto& [v, w, k] : q.quad) {
          bool dv = det(v), dw = det(w);
          if (dv && dw) {
            c += k * par[v].constant * par[w].constant;
          } else if (dv) {
            if (!par[v].constant.is_zero()) row.emplace_back(w, k * par[v].constant);
          } else if (dw) {
            if (!par[w].constant.is_zero()) row.emplace_back(v, k * par[w].constant);
          } else {
            linear = false;
            break;
          }
        }
        if (!linear) continue;
        s.consumed[e] = 1;
        std::size_t before = s.acc.rank();
        if (!s.acc.add(row, -c)) return false;
        if (s.acc.rank() != before) changed = true;
      }
    }
    return true;
  }

  void dfs(State s) {
    if (res_.solutions.size() >= opt_.max_solutions) return;
    if (++res_.nodes > opt_.node_budget) {
      aborted_ = true;
      return;
    }
    if (!propagate(s)) return;
    auto par = s.acc.parametrize();
    // branch on the free unknown occurring most often in unresolved products
    std::vector<std::size_t> weight(par.size(), 0);
    bool open = false;
    for (std::size_t e = 0; e < P_.quads.size(); ++e) {
      if (s.consumed[e]) continue;
      open = true;
      for (const auto& [v, w, k] : P_.quads[e].quad)
        for (std::size_t x : {v, w})
          for (const auto& [fv, c] : par[x].terms) weight[fv] += 1;
    }
    auto frees = s.acc.free_variables();
    if (!open) {
      // remaining free unknowns are unconstrained; pin them to zero
      for (std::size_t fv : frees)
        if (!s.acc.add({{fv, Scalar(1)}}, Scalar())) return;
      emit(s);
      return;
    }
    if (frees.empty()) return;
    std::size_t best = frees.front();
    for (std::size_t fv : frees)
      if (weight[fv] > weight[best]) best = fv;
    for (const auto& v : cands_) {
      if (aborted_ || res_.solutions.size() >= opt_.max_solutions) return;
      State t = s;
      if (!t.acc.add({{best, Scalar(1)}}, v)) continue;
      dfs(std::move(t));
    }
  }

  void emit(const State& s) {
    auto par = s.acc.parametrize();
    RForm R(P_.ctx);
    for (std::size_t v = 0; v < par.size(); ++v)
      if (!par[v].constant.is_zero()) R.set(P_.keys[v / P_.nB], P_.keys[v % P_.nB], par[v].constant);
    if (!satisfies_cqt(R)) return;
    if (std::find(res_.solutions.begin(), res_.solutions.end(), R) == res_.solutions.end())
      res_.solutions.push_back(std::move(R));
  }

  Problem P_;
  const SearchOptions& opt_;
  std::vector<Scalar> cands_;
  SearchResult res_;
  bool aborted_ = false;
};

}  // namespace

SearchResult search_R(const ContextPtr& ctx, const SearchOptions& opt) {
  const MatchedPair& mp = ctx->mp;
  if (!mp.F().is_finite()) throw InfiniteGroup("search_R needs a finite F");
  if (mp.order_G() * mp.F().order() > 8) throw InvalidArgument("search_R is limited to |G||F| <= 8");
  Searcher s(build(ctx, opt.prune_structural), opt);
  return s.run();
}

}  // namespace hopfcqt
