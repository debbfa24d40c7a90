#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hopfcqt {

enum class GroupFamily { Finite, Integers, InfiniteDihedral, Product };

// Payload layout per family:
//   Finite: v[0] = index into the element list (identity is 0)
//   Integers: v[0] = the integer
//   InfiniteDihedral: x^v[0] y^v[1] with v[0] in {0,1}
//   Product: factor payloads concatenated
struct GroupElement {
  std::uint32_t group = 0;
  std::array<std::int64_t, 4> v{};
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct Letter {
  int generator;
  int power;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

namespace detail {
struct GroupData;
}

class Group {
 public:
  Group() = default;
  static Group cyclic(unsigned n);
  static Group trivial() { return cyclic(1); }
  static Group klein_four();
  static Group symmetric3();
  static Group quaternion8();
  static Group integers();
  static Group infinite_dihedral();
  // table[i][j] = index of e_i * e_j
  static Group from_table(const std::vector<std::vector<int>>& table, std::vector<std::string> names = {},
                          std::vector<int> generators = {});
  // generators as images of 1..n
  static Group from_permutations(const std::vector<std::vector<int>>& generators);
  static Group product(const std::vector<Group>& factors);
  static Group from_descriptor(const nlohmann::json& j);

  bool valid() const { return d_ != nullptr; }
  GroupFamily family() const;
  std::uint32_t uid() const;
  bool is_finite() const;
  std::size_t order() const;  // throws InfiniteGroup
  bool is_abelian() const;

  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement pow(const GroupElement& a, long e) const;
  bool is_identity(const GroupElement& a) const;
  bool contains(const GroupElement& a) const;

  const std::vector<GroupElement>& elements() const;  // finite only
  std::size_t index(const GroupElement& a) const;      // finite only
  GroupElement element(std::size_t i) const;           // finite only

  const std::vector<GroupElement>& generators() const;
  std::vector<std::string> generator_names() const;
  Word word(const GroupElement& a) const;
  GroupElement evaluate(const Word& w) const;
  std::size_t word_length(const GroupElement& a) const;
  // All elements of word length <= radius, ordered by length (identity first).
  std::vector<GroupElement> ball(std::size_t radius) const;
  std::vector<Word> relators() const;

  std::string name(const GroupElement& a) const;
  GroupElement parse(std::string_view s) const;

  const nlohmann::json& descriptor() const;
  bool same_structure(const Group& o) const;
  const std::vector<Group>& factors() const;  // Product only
  GroupElement project(const GroupElement& a, std::size_t factor) const;
  GroupElement embed(const GroupElement& a, std::size_t factor) const;

  friend bool operator==(const Group& a, const Group& b) { return a.d_ == b.d_; }

 private:
  explicit Group(std::shared_ptr<const detail::GroupData> d) : d_(std::move(d)) {}
  void check(const GroupElement& a) const;
  std::shared_ptr<const detail::GroupData> d_;
};

class GroupHom {
 public:
  // images[i] is the image of domain.generators()[i]; relations are checked.
  GroupHom(Group domain, Group codomain, std::vector<GroupElement> images);
  const Group& domain() const { return dom_; }
  const Group& codomain() const { return cod_; }
  GroupElement apply(const GroupElement& a) const;

 private:
  Group dom_, cod_;
  std::vector<GroupElement> images_;
  std::vector<GroupElement> table_;  // finite domain
};

}  // namespace hopfcqt
