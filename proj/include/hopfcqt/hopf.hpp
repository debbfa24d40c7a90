#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcqt/cocycles.hpp"

namespace hopfcqt {

struct HopfContext {
  MatchedPair mp;
  CocyclePair cp;
  std::string id;
};
using ContextPtr = std::shared_ptr<const HopfContext>;
ContextPtr make_context(MatchedPair mp, CocyclePair cp = {}, std::string id = {});

// p_g # f
struct BasisKey {
  GIndex g = 0;
  GroupElement f;
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};
std::string key_name(const HopfContext& ctx, const BasisKey& k);
BasisKey parse_key(const HopfContext& ctx, const std::string& g, const std::string& f);

using KeyPair = std::pair<BasisKey, BasisKey>;
using KeyTriple = std::tuple<BasisKey, BasisKey, BasisKey>;

template <class K>
class Sparse {
 public:
  Sparse() = default;
  explicit Sparse(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  Sparse(ContextPtr ctx, const K& k, Scalar c = Scalar(1)) : ctx_(std::move(ctx)) { add(k, std::move(c)); }

  const ContextPtr& context() const { return ctx_; }
  const std::map<K, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }
  void add(const K& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  Sparse& operator+=(const Sparse& o) {
    same(o);
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Sparse& operator-=(const Sparse& o) {
    same(o);
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Sparse& operator*=(const Scalar& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend Sparse operator+(Sparse a, const Sparse& b) { return a += b; }
  friend Sparse operator-(Sparse a, const Sparse& b) { return a -= b; }
  friend Sparse operator*(Scalar s, Sparse a) { return a *= s; }
  friend bool operator==(const Sparse& a, const Sparse& b) { return a.terms_ == b.terms_; }
  void same(const Sparse& o) const;

 private:
  ContextPtr ctx_;
  std::map<K, Scalar> terms_;
};

using HopfElement = Sparse<BasisKey>;
using TensorElement = Sparse<KeyPair>;
using Tensor3Element = Sparse<KeyTriple>;

void check_same_context(const ContextPtr& a, const ContextPtr& b);
template <class K>
void Sparse<K>::same(const Sparse& o) const {
  if (ctx_ && o.ctx_) check_same_context(ctx_, o.ctx_);
}

// basis-level structure maps
std::optional<std::pair<BasisKey, Scalar>> mul_basis(const HopfContext& c, const BasisKey& a, const BasisKey& b);
std::vector<std::tuple<BasisKey, BasisKey, Scalar>> delta_basis(const HopfContext& c, const BasisKey& a);
std::pair<BasisKey, Scalar> antipode_basis(const HopfContext& c, const BasisKey& a);

HopfElement unit(const ContextPtr& ctx);
HopfElement basis(const ContextPtr& ctx, const BasisKey& k, Scalar c = Scalar(1));
HopfElement multiply(const HopfElement& a, const HopfElement& b);
TensorElement comultiply(const HopfElement& a);
Scalar counit(const HopfElement& a);
HopfElement antipode(const HopfElement& a);

TensorElement tensor(const HopfElement& a, const HopfElement& b);
TensorElement multiply(const TensorElement& a, const TensorElement& b);

std::string to_string(const HopfElement& a);
std::string to_string(const TensorElement& a);

// basis keys with F-component in the window
std::vector<BasisKey> basis_window(const HopfContext& c, std::size_t word_bound);

std::vector<CheckReport> verify_hopf_axioms(const ContextPtr& ctx, std::size_t word_bound);

}  // namespace hopfcqt
