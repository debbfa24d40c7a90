#include "hopfcqt/comodule.hpp"

#include <deque>

#include "hopfcqt/error.hpp"

namespace hopfcqt {

TwistedCoalgebra::TwistedCoalgebra(ContextPtr ctx, GroupElement f) : ctx_(std::move(ctx)) {
  od_ = orbit_data(ctx_->mp, f);
  pos_.assign(ctx_->mp.order_G(), npos);
  for (std::size_t i = 0; i < od_.stabilizer.size(); ++i) pos_[od_.stabilizer[i]] = i;
}

CoalgebraPtr make_coalgebra(ContextPtr ctx, const GroupElement& f) {
  return std::make_shared<const TwistedCoalgebra>(std::move(ctx), f);
}

std::size_t TwistedCoalgebra::pos(GIndex g) const {
  if (g >= pos_.size() || pos_[g] == npos)
    throw NotInStabilizer(mp().gname(g) + " does not fix " + mp().fname(od_.base));
  return pos_[g];
}

bool TwistedCoalgebra::abelian() const {
  for (GIndex a : od_.stabilizer)
    for (GIndex b : od_.stabilizer)
      if (mp().gmul(a, b) != mp().gmul(b, a)) return false;
  return true;
}

std::vector<std::tuple<GIndex, GIndex, Scalar>> TwistedCoalgebra::delta(GIndex g) const {
  pos(g);
  std::vector<std::tuple<GIndex, GIndex, Scalar>> out;
  for (GIndex x : od_.stabilizer) {
    GIndex gx = mp().gmul(g, mp().ginv(x));
    out.emplace_back(gx, x, tau(gx, x));
  }
  return out;
}

CheckReport TwistedCoalgebra::verify() const {
  CheckReport r = make_report("twisted_coalgebra");
  for (GIndex g : od_.stabilizer) {
    ++r.instances;
    std::map<std::tuple<GIndex, GIndex, GIndex>, Scalar> l, rr;
    for (const auto& [a, b, t] : delta(g)) {
      for (const auto& [a1, a2, t2] : delta(a)) l[{a1, a2, b}] += t * t2;
      for (const auto& [b1, b2, t2] : delta(b)) rr[{a, b1, b2}] += t * t2;
    }
    auto clean = [](auto& m) {
      for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
    };
    clean(l);
    clean(rr);
    bool counit_ok = true;
    for (const auto& [a, b, t] : delta(g))
      if ((a == 0 && !(b == g && t.is_one())) || (b == 0 && !(a == g && t.is_one()))) counit_ok = false;
    if ((l != rr || !counit_ok) && r.status == Status::Pass) {
      r.status = Status::Fail;
      r.witness = Witness().add("g", mp().gname(g)).add("f", mp().fname(od_.base));
    }
  }
  return r;
}

Comodule make_comodule(CoalgebraPtr C, std::vector<Matrix> a, std::string label) {
  if (a.size() != C->stabilizer().size())
    throw DimensionMismatch("one coefficient matrix per stabilizer element is required");
  std::size_t m = a.empty() ? 0 : a[0].rows();
  for (const auto& M : a)
    if (M.rows() != m || M.cols() != m) throw DimensionMismatch("coefficient matrices must be square of equal size");
  return Comodule{std::move(C), m, std::move(a), std::move(label)};
}

std::vector<CheckReport> verify_comodule(const Comodule& V) {
  const TwistedCoalgebra& C = *V.C;
  const auto& stab = C.stabilizer();
  CheckReport co = make_report("comodule_coassociativity"), cu = make_report("comodule_counit");
  // A^h A^x = tau(h, x; f) A^{hx}
  for (GIndex h : stab)
    for (GIndex x : stab) {
      ++co.instances;
      Matrix lhs = V.coeff(h) * V.coeff(x);
      Matrix rhs = V.coeff(C.mp().gmul(h, x));
      Scalar t = C.tau(h, x);
      for (std::size_t i = 0; i < V.dim; ++i)
        for (std::size_t j = 0; j < V.dim; ++j) rhs.at(i, j) *= t;
      if (lhs != rhs && co.status == Status::Pass) {
        co.status = Status::Fail;
        co.witness = Witness().add("h", C.mp().gname(h)).add("x", C.mp().gname(x));
      }
    }
  ++cu.instances;
  if (V.coeff(0) != Matrix::identity(V.dim)) {
    cu.status = Status::Fail;
    cu.witness = Witness().add("g", C.mp().gname(0));
  }
  return {co, cu};
}

bool is_simple(const Comodule& V) { return commutant_dimension(V.a, V.dim) == 1; }

std::vector<Comodule> enumerate_onedim(const CoalgebraPtr& C) {
  if (!C->abelian()) throw NonAbelianStabilizer("stabilizer of " + C->mp().fname(C->base()) + " is not abelian");
  const MatchedPair& mp = C->mp();
  const auto& stab = C->stabilizer();
  // generating set of the stabilizer
  std::vector<GIndex> gens;
  std::vector<bool> in(mp.order_G(), false);
  in[0] = true;
  auto close = [&] {
    std::deque<GIndex> q;
    for (GIndex g = 0; g < in.size(); ++g)
      if (in[g]) q.push_back(g);
    while (!q.empty()) {
      GIndex g = q.front();
      q.pop_front();
      for (GIndex s : gens) {
        GIndex h = mp.gmul(g, s);
        if (!in[h]) {
          in[h] = true;
          q.push_back(h);
        }
      }
    }
  };
  for (GIndex g : stab)
    if (!in[g]) {
      gens.push_back(g);
      close();
    }
  // candidates for a^s: (a^s)^n = prod_{i=1}^{n-1} tau(s^i, s)
  std::vector<std::vector<Scalar>> cand;
  for (GIndex s : gens) {
    Scalar prod(1);
    unsigned n = 1;
    for (GIndex p = s; p != 0; p = mp.gmul(p, s), ++n) prod *= C->tau(p, s);
    cand.push_back(nth_roots(prod, n));
  }
  std::vector<Comodule> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    // a(h s) = a(h) a(s) / tau(h, s), filled by BFS from the identity
    std::vector<std::optional<Scalar>> a(mp.order_G());
    a[0] = Scalar(1);
    std::deque<GIndex> q = {0};
    while (!q.empty()) {
      GIndex h = q.front();
      q.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        GIndex hs = mp.gmul(h, gens[k]);
        if (a[hs]) continue;
        a[hs] = *a[h] * cand[k][choice[k]] / C->tau(h, gens[k]);
        q.push_back(hs);
      }
    }
    std::vector<Matrix> mats;
    for (GIndex g : stab) {
      Matrix M(1, 1);
      M.at(0, 0) = *a[g];
      mats.push_back(M);
    }
    Comodule V = make_comodule(C, std::move(mats));
    if (all_pass(verify_comodule(V))) {
      bool dup = false;
      for (const auto& W : out) dup = dup || W.a == V.a;
      if (!dup) out.push_back(std::move(V));
    }
    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == cand[k].size()) choice[k++] = 0;
    if (k == gens.size()) break;
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].label = "chi" + std::to_string(i) + "@" + mp.fname(C->base());
  return out;
}

Comodule direct_sum(const Comodule& U, const Comodule& V) {
  if (U.C != V.C) throw ContextMismatch("direct sum of comodules over different coalgebras");
  std::vector<Matrix> a;
  for (std::size_t p = 0; p < U.a.size(); ++p) {
    Matrix M(U.dim + V.dim, U.dim + V.dim);
    for (std::size_t i = 0; i < U.dim; ++i)
      for (std::size_t j = 0; j < U.dim; ++j) M.at(i, j) = U.a[p].at(i, j);
    for (std::size_t i = 0; i < V.dim; ++i)
      for (std::size_t j = 0; j < V.dim; ++j) M.at(U.dim + i, U.dim + j) = V.a[p].at(i, j);
    a.push_back(M);
  }
  return make_comodule(U.C, std::move(a), U.label + "+" + V.label);
}

InducedComodule induce(const Comodule& V) {
  const TwistedCoalgebra& C = *V.C;
  const MatchedPair& mp = C.mp();
  const ContextPtr& ctx = C.context();
  const OrbitData& od = C.orbit();
  const GroupElement& f = od.base;
  InducedComodule W{V, {}, {}};
  std::vector<std::size_t> zpos(mp.order_G());
  for (std::size_t t = 0; t < od.transversal.size(); ++t) zpos[od.transversal[t]] = t;
  const std::size_t nT = od.transversal.size();
  for (std::size_t i = 0; i < V.dim; ++i)
    for (GIndex z : od.transversal) W.basis.emplace_back(i, z);
  auto idx = [&](std::size_t i, GIndex z) { return i * nT + zpos[z]; };
  W.coeff.assign(W.dim(), std::vector<HopfElement>(W.dim(), HopfElement(ctx)));
  for (GIndex z : od.transversal) {
    GIndex zi = mp.ginv(z);
    GroupElement zf = mp.left(zi, f);
    for (GIndex x = 0; x < mp.order_G(); ++x) {
      GIndex gx = od.stab_part[x], zx = od.coset_rep[x];
      GIndex gxi = mp.ginv(gx), zxi = mp.ginv(zx);
      Scalar c = C.tau(zxi, gxi).inv() * C.tau(mp.gmul(mp.gmul(zxi, gxi), z), zi);
      BasisKey k{mp.gmul(mp.ginv(x), z), zf};
      const Matrix& A = V.coeff(gxi);
      for (std::size_t i = 0; i < V.dim; ++i)
        for (std::size_t l = 0; l < V.dim; ++l) W.coeff[idx(l, zx)][idx(i, z)].add(k, c * A.at(l, i));
    }
  }
  return W;
}

std::vector<CheckReport> verify_induced(const InducedComodule& W) {
  CheckReport co = make_report("induced_coassociativity"), cu = make_report("induced_counit");
  const std::size_t n = W.dim();
  const ContextPtr& ctx = W.source.C->context();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j) {
      ++co.instances;
      TensorElement rhs(ctx);
      for (std::size_t k = 0; k < n; ++k) rhs += tensor(W.coeff[l][k], W.coeff[k][j]);
      if (comultiply(W.coeff[l][j]) != rhs && co.status == Status::Pass) {
        co.status = Status::Fail;
        co.witness = Witness().add("l", std::to_string(l)).add("j", std::to_string(j));
      }
      ++cu.instances;
      if (counit(W.coeff[l][j]) != Scalar(l == j ? 1 : 0) && cu.status == Status::Pass) {
        cu.status = Status::Fail;
        cu.witness = Witness().add("l", std::to_string(l)).add("j", std::to_string(j));
      }
    }
  return {co, cu};
}

HopfElement trace(const InducedComodule& W) {
  HopfElement t(W.source.C->context());
  for (std::size_t j = 0; j < W.dim(); ++j) t += W.coeff[j][j];
  return t;
}

Character character(const Comodule& V) {
  const TwistedCoalgebra& C = *V.C;
  const MatchedPair& mp = C.mp();
  const OrbitData& od = C.orbit();
  HopfElement chi(C.context());
  for (GIndex z : od.transversal) {
    GIndex zi = mp.ginv(z);
    GroupElement zf = mp.left(zi, od.base);
    for (GIndex g : od.stabilizer) {
      GIndex conj = mp.gmul(mp.gmul(zi, g), z);
      Scalar c = C.tau(zi, g).inv() * C.tau(conj, zi);
      Scalar tr;
      for (std::size_t i = 0; i < V.dim; ++i) tr += V.coeff(i, i, g);
      chi.add({conj, zf}, c * tr);
    }
  }
  return Character{chi, V.label, od.base, V.dim * od.transversal.size()};
}

}  // namespace hopfcqt
