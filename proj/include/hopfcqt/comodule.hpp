#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfcqt/hopf.hpp"
#include "hopfcqt/matrix.hpp"

namespace hopfcqt {

// k^{G_f} with Delta(p_g) = sum_{x in G_f} tau(gx^-1, x; f) p_{gx^-1} (x) p_x
class TwistedCoalgebra {
 public:
  TwistedCoalgebra(ContextPtr ctx, GroupElement f);
  const ContextPtr& context() const { return ctx_; }
  const MatchedPair& mp() const { return ctx_->mp; }
  const GroupElement& base() const { return od_.base; }
  const OrbitData& orbit() const { return od_; }
  const std::vector<GIndex>& stabilizer() const { return od_.stabilizer; }
  bool contains(GIndex g) const { return pos_[g] != npos; }
  std::size_t pos(GIndex g) const;  // position in stabilizer(); throws NotInStabilizer
  bool abelian() const;
  Scalar tau(GIndex a, GIndex b) const { return ctx_->cp.tau(a, b, od_.base); }
  std::vector<std::tuple<GIndex, GIndex, Scalar>> delta(GIndex g) const;
  CheckReport verify() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  ContextPtr ctx_;
  OrbitData od_;
  std::vector<std::size_t> pos_;
};
using CoalgebraPtr = std::shared_ptr<const TwistedCoalgebra>;
CoalgebraPtr make_coalgebra(ContextPtr ctx, const GroupElement& f);

// rho(v_i) = sum_l v_l (x) sum_g a_{li}^g p_g; a[pos(g)] holds the matrix (a_{li}^g)_{l,i}
struct Comodule {
  CoalgebraPtr C;
  std::size_t dim = 0;
  std::vector<Matrix> a;
  std::string label;

  const Matrix& coeff(GIndex g) const { return a.at(C->pos(g)); }
  Scalar coeff(std::size_t l, std::size_t i, GIndex g) const { return coeff(g).at(l, i); }
};
Comodule make_comodule(CoalgebraPtr C, std::vector<Matrix> a, std::string label = {});

std::vector<CheckReport> verify_comodule(const Comodule& V);
bool is_simple(const Comodule& V);
// 1-dimensional comodules, a^1 = 1; throws NonAbelianStabilizer
std::vector<Comodule> enumerate_onedim(const CoalgebraPtr& C);
// direct sum
Comodule direct_sum(const Comodule& U, const Comodule& V);

struct InducedComodule {
  Comodule source;
  std::vector<std::pair<std::size_t, GIndex>> basis;  // (i, z), z in T_f
  std::vector<std::vector<HopfElement>> coeff;        // rho(e_j) = sum_l e_l (x) coeff[l][j]
  std::size_t dim() const { return basis.size(); }
};
InducedComodule induce(const Comodule& V);
std::vector<CheckReport> verify_induced(const InducedComodule& W);
HopfElement trace(const InducedComodule& W);

struct Character {
  HopfElement chi;
  std::string label;
  GroupElement base;
  std::size_t dim = 0;
};
// closed formula over i, z in T_f, g in G_f
Character character(const Comodule& V);

}  // namespace hopfcqt
