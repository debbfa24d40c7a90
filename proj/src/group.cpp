#include "hopfcqt/group.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

#include "hopfcqt/error.hpp"

namespace hopfcqt {

namespace detail {

struct GroupData {
  GroupFamily family = GroupFamily::Finite;
  std::uint32_t uid = 0;
  nlohmann::json desc;
  std::size_t slots = 1;
  bool abelian = true;

  // finite
  std::size_t n = 0;
  std::vector<int> table;
  std::vector<int> inverse;
  std::vector<std::string> names;
  std::map<std::string, int> name_index;
  std::vector<Word> words;
  std::vector<GroupElement> elements;

  // product
  std::vector<Group> factors;
  std::vector<std::size_t> offsets;       // slot offsets
  std::vector<std::size_t> gen_offsets;   // generator index offsets

  std::vector<GroupElement> generators;
  std::vector<std::string> gen_names;
};

}  // namespace detail

using detail::GroupData;

namespace {

std::uint32_t next_uid() {
  static std::atomic<std::uint32_t> counter{1};
  return counter++;
}

std::size_t slots_of(const Group& g) {
  switch (g.family()) {
    case GroupFamily::Finite:
    case GroupFamily::Integers:
      return 1;
    case GroupFamily::InfiniteDihedral:
      return 2;
    case GroupFamily::Product: {
      std::size_t s = 0;
      for (const auto& f : g.factors()) s += slots_of(f);
      return s;
    }
  }
  return 1;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '<' || c == '[') ++depth;
    if (c == ')' || c == '>' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

bool parse_long(const std::string& s, long& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  out = std::stol(s);
  return true;
}

std::string cycle_notation(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "(1)" : out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().power == -l.power)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.power = -l.power;
  return out;
}

std::shared_ptr<GroupData> finite_data(const std::vector<std::vector<int>>& table_in, std::vector<std::string> names,
                                       std::vector<int> gens, nlohmann::json desc) {
  const std::size_t n = table_in.size();
  if (n == 0) throw InvalidArgument("empty multiplication table");
  for (const auto& row : table_in)
    if (row.size() != n) throw InvalidArgument("multiplication table is not square");
  for (const auto& row : table_in)
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw InvalidArgument("table entry out of range");
  // identity
  int e = -1;
  for (std::size_t i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = table_in[i][j] == static_cast<int>(j) && table_in[j][i] == static_cast<int>(j);
    if (ok) e = static_cast<int>(i);
  }
  if (e < 0) throw InvalidArgument("table has no identity");
  // reorder so identity comes first
  std::vector<int> perm(n), back(n);
  perm[0] = e;
  for (std::size_t i = 0, k = 1; i < n; ++i)
    if (static_cast<int>(i) != e) perm[k++] = static_cast<int>(i);
  for (std::size_t i = 0; i < n; ++i) back[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);

  auto d = std::make_shared<GroupData>();
  d->family = GroupFamily::Finite;
  d->uid = next_uid();
  d->desc = std::move(desc);
  d->n = n;
  d->table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d->table[i * n + j] = back[static_cast<std::size_t>(table_in[static_cast<std::size_t>(perm[i])][static_cast<std::size_t>(perm[j])])];
  auto T = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(d->table[a * n + b]); };
  // Latin square + associativity
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> r(n), c(n);
    for (std::size_t j = 0; j < n; ++j) {
      r[T(i, j)] = true;
      c[T(j, i)] = true;
    }
    if (std::find(r.begin(), r.end(), false) != r.end() || std::find(c.begin(), c.end(), false) != c.end())
      throw InvalidArgument("multiplication table is not a Latin square");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (T(T(a, b), c) != T(a, T(b, c))) throw InvalidArgument("multiplication table is not associative");
  d->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (T(a, b) == 0) d->inverse[a] = static_cast<int>(b);
  d->abelian = true;
  for (std::size_t a = 0; a < n && d->abelian; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (T(a, b) != T(b, a)) {
        d->abelian = false;
        break;
      }
  if (!names.empty()) {
    if (names.size() != n) throw InvalidArgument("wrong number of element names");
    std::vector<std::string> re(n);
    for (std::size_t i = 0; i < n; ++i) re[i] = names[static_cast<std::size_t>(perm[i])];
    d->names = std::move(re);
  } else {
    d->names.resize(n);
    d->names[0] = "1";
    for (std::size_t i = 1; i < n; ++i) d->names[i] = "e" + std::to_string(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!d->name_index.emplace(d->names[i], static_cast<int>(i)).second)
      throw InvalidArgument("duplicate element name " + d->names[i]);
  }
  for (auto& g : gens) g = back.at(static_cast<std::size_t>(g));
  auto closure = [&](const std::vector<int>& gs) {
    std::vector<bool> in(n, false);
    std::deque<std::size_t> q{0};
    in[0] = true;
    while (!q.empty()) {
      std::size_t a = q.front();
      q.pop_front();
      for (int g : gs) {
        std::size_t b = T(a, static_cast<std::size_t>(g));
        if (!in[b]) {
          in[b] = true;
          q.push_back(b);
        }
      }
    }
    return in;
  };
  if (gens.empty()) {
    auto in = closure(gens);
    for (std::size_t i = 1; i < n; ++i)
      if (!in[i]) {
        gens.push_back(static_cast<int>(i));
        in = closure(gens);
      }
  } else {
    auto in = closure(gens);
    if (std::find(in.begin(), in.end(), false) != in.end())
      throw InvalidArgument("generators do not generate the group");
  }
  for (std::size_t i = 0; i < n; ++i) d->elements.push_back(GroupElement{d->uid, {static_cast<std::int64_t>(i), 0, 0, 0}});
  for (int g : gens) {
    d->generators.push_back(d->elements[static_cast<std::size_t>(g)]);
    d->gen_names.push_back(d->names[static_cast<std::size_t>(g)]);
  }
  // BFS geodesic words
  d->words.assign(n, Word{});
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<std::size_t> q{0};
  while (!q.empty()) {
    std::size_t a = q.front();
    q.pop_front();
    for (int pw : {1, -1})
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::size_t s = static_cast<std::size_t>(gens[k]);
        std::size_t b = T(a, pw == 1 ? s : static_cast<std::size_t>(d->inverse[s]));
        if (seen[b]) continue;
        seen[b] = true;
        d->words[b] = d->words[a];
        d->words[b].push_back(Letter{static_cast<int>(k), pw});
        q.push_back(b);
      }
  }
  return d;
}

}  // namespace

GroupFamily Group::family() const { return d_->family; }
std::uint32_t Group::uid() const { return d_->uid; }
bool Group::is_finite() const {
  if (d_->family == GroupFamily::Finite) return true;
  if (d_->family != GroupFamily::Product) return false;
  for (const auto& f : d_->factors)
    if (!f.is_finite()) return false;
  return true;
}
bool Group::is_abelian() const { return d_->abelian; }
const nlohmann::json& Group::descriptor() const { return d_->desc; }
bool Group::same_structure(const Group& o) const { return d_->desc == o.d_->desc; }
const std::vector<Group>& Group::factors() const { return d_->factors; }
const std::vector<GroupElement>& Group::generators() const { return d_->generators; }
std::vector<std::string> Group::generator_names() const { return d_->gen_names; }

void Group::check(const GroupElement& a) const {
  if (a.group != d_->uid) throw MixedGroups("element does not belong to this group");
}

bool Group::contains(const GroupElement& a) const { return a.group == d_->uid; }

std::size_t Group::order() const {
  if (d_->family == GroupFamily::Finite) return d_->n;
  if (d_->family == GroupFamily::Product && is_finite()) return elements().size();
  throw InfiniteGroup("group is infinite");
}

GroupElement Group::identity() const { return GroupElement{d_->uid, {0, 0, 0, 0}}; }

bool Group::is_identity(const GroupElement& a) const {
  check(a);
  return a.v == std::array<std::int64_t, 4>{0, 0, 0, 0};
}

GroupElement Group::project(const GroupElement& a, std::size_t i) const {
  check(a);
  const Group& f = d_->factors.at(i);
  GroupElement out{f.uid(), {0, 0, 0, 0}};
  std::size_t off = d_->offsets[i];
  for (std::size_t k = 0; k < slots_of(f); ++k) out.v[k] = a.v[off + k];
  return out;
}

GroupElement Group::embed(const GroupElement& a, std::size_t i) const {
  const Group& f = d_->factors.at(i);
  f.check(a);
  GroupElement out = identity();
  std::size_t off = d_->offsets[i];
  for (std::size_t k = 0; k < slots_of(f); ++k) out.v[off + k] = a.v[k];
  return out;
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  GroupElement r{d_->uid, {0, 0, 0, 0}};
  switch (d_->family) {
    case GroupFamily::Finite:
      r.v[0] = d_->table[static_cast<std::size_t>(a.v[0]) * d_->n + static_cast<std::size_t>(b.v[0])];
      break;
    case GroupFamily::Integers:
      r.v[0] = a.v[0] + b.v[0];
      break;
    case GroupFamily::InfiniteDihedral:
      // (x^j y^k)(x^j' y^k') = x^(j+j') y^(+-k + k')
      r.v[0] = (a.v[0] + b.v[0]) % 2;
      r.v[1] = (b.v[0] ? -a.v[1] : a.v[1]) + b.v[1];
      break;
    case GroupFamily::Product:
      for (std::size_t i = 0; i < d_->factors.size(); ++i) {
        const Group& f = d_->factors[i];
        GroupElement p = f.mul(project(a, i), project(b, i));
        for (std::size_t k = 0; k < slots_of(f); ++k) r.v[d_->offsets[i] + k] = p.v[k];
      }
      break;
  }
  return r;
}

GroupElement Group::inv(const GroupElement& a) const {
  check(a);
  GroupElement r{d_->uid, {0, 0, 0, 0}};
  switch (d_->family) {
    case GroupFamily::Finite:
      r.v[0] = d_->inverse[static_cast<std::size_t>(a.v[0])];
      break;
    case GroupFamily::Integers:
      r.v[0] = -a.v[0];
      break;
    case GroupFamily::InfiniteDihedral:
      r.v[0] = a.v[0];
      r.v[1] = a.v[0] ? a.v[1] : -a.v[1];
      break;
    case GroupFamily::Product:
      for (std::size_t i = 0; i < d_->factors.size(); ++i) {
        const Group& f = d_->factors[i];
        GroupElement p = f.inv(project(a, i));
        for (std::size_t k = 0; k < slots_of(f); ++k) r.v[d_->offsets[i] + k] = p.v[k];
      }
      break;
  }
  return r;
}

GroupElement Group::pow(const GroupElement& a, long e) const {
  GroupElement base = e < 0 ? inv(a) : a;
  GroupElement r = identity();
  for (long k = 0; k < std::labs(e); ++k) r = mul(r, base);
  return r;
}

const std::vector<GroupElement>& Group::elements() const {
  if (!is_finite()) throw InfiniteGroup("cannot enumerate an infinite group");
  return d_->elements;
}

std::size_t Group::index(const GroupElement& a) const {
  check(a);
  if (d_->family == GroupFamily::Finite) return static_cast<std::size_t>(a.v[0]);
  const auto& els = elements();
  auto it = std::lower_bound(els.begin(), els.end(), a);
  return static_cast<std::size_t>(it - els.begin());
}

GroupElement Group::element(std::size_t i) const { return elements().at(i); }

Word Group::word(const GroupElement& a) const {
  check(a);
  switch (d_->family) {
    case GroupFamily::Finite:
      return d_->words[static_cast<std::size_t>(a.v[0])];
    case GroupFamily::Integers: {
      Word w;
      for (std::int64_t k = 0; k < std::llabs(a.v[0]); ++k) w.push_back(Letter{0, a.v[0] > 0 ? 1 : -1});
      return w;
    }
    case GroupFamily::InfiniteDihedral: {
      Word w;
      if (a.v[0]) w.push_back(Letter{0, 1});
      for (std::int64_t k = 0; k < std::llabs(a.v[1]); ++k) w.push_back(Letter{1, a.v[1] > 0 ? 1 : -1});
      return w;
    }
    case GroupFamily::Product: {
      Word w;
      for (std::size_t i = 0; i < d_->factors.size(); ++i)
        for (Letter l : d_->factors[i].word(project(a, i))) {
          l.generator += static_cast<int>(d_->gen_offsets[i]);
          w.push_back(l);
        }
      return w;
    }
  }
  return {};
}

GroupElement Group::evaluate(const Word& w) const {
  GroupElement r = identity();
  for (const Letter& l : w) {
    const GroupElement& g = d_->generators.at(static_cast<std::size_t>(l.generator));
    r = mul(r, l.power > 0 ? g : inv(g));
  }
  return r;
}

std::size_t Group::word_length(const GroupElement& a) const {
  check(a);
  switch (d_->family) {
    case GroupFamily::Finite:
      return d_->words[static_cast<std::size_t>(a.v[0])].size();
    case GroupFamily::Integers:
      return static_cast<std::size_t>(std::llabs(a.v[0]));
    case GroupFamily::InfiniteDihedral:
      return static_cast<std::size_t>(a.v[0] + std::llabs(a.v[1]));
    case GroupFamily::Product: {
      std::size_t s = 0;
      for (std::size_t i = 0; i < d_->factors.size(); ++i) s += d_->factors[i].word_length(project(a, i));
      return s;
    }
  }
  return 0;
}

std::vector<GroupElement> Group::ball(std::size_t radius) const {
  std::vector<GroupElement> out;
  switch (d_->family) {
    case GroupFamily::Finite: {
      for (std::size_t len = 0; len <= radius; ++len)
        for (std::size_t i = 0; i < d_->n; ++i)
          if (d_->words[i].size() == len) out.push_back(d_->elements[i]);
      break;
    }
    case GroupFamily::Integers: {
      out.push_back(identity());
      for (std::int64_t k = 1; k <= static_cast<std::int64_t>(radius); ++k) {
        out.push_back(GroupElement{d_->uid, {k, 0, 0, 0}});
        out.push_back(GroupElement{d_->uid, {-k, 0, 0, 0}});
      }
      break;
    }
    case GroupFamily::InfiniteDihedral: {
      out.push_back(identity());
      for (std::int64_t len = 1; len <= static_cast<std::int64_t>(radius); ++len) {
        out.push_back(GroupElement{d_->uid, {0, len, 0, 0}});
        out.push_back(GroupElement{d_->uid, {0, -len, 0, 0}});
        out.push_back(GroupElement{d_->uid, {1, len - 1, 0, 0}});
        if (len > 1) out.push_back(GroupElement{d_->uid, {1, -(len - 1), 0, 0}});
      }
      break;
    }
    case GroupFamily::Product: {
      std::vector<std::vector<GroupElement>> balls;
      for (const auto& f : d_->factors) balls.push_back(f.ball(radius));
      std::vector<std::pair<std::size_t, GroupElement>> all;
      std::vector<std::size_t> idx(balls.size(), 0);
      for (;;) {
        GroupElement e = identity();
        std::size_t len = 0;
        for (std::size_t i = 0; i < balls.size(); ++i) {
          len += d_->factors[i].word_length(balls[i][idx[i]]);
          e = mul(e, embed(balls[i][idx[i]], i));
        }
        if (len <= radius) all.emplace_back(len, e);
        bool done = true;
        for (std::size_t i = balls.size(); i-- > 0;) {
          if (++idx[i] < balls[i].size()) {
            done = false;
            break;
          }
          idx[i] = 0;
        }
        if (done) break;
      }
      std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& [len, e] : all) out.push_back(e);
      break;
    }
  }
  return out;
}

std::vector<Word> Group::relators() const {
  std::vector<Word> out;
  switch (d_->family) {
    case GroupFamily::Finite:
      for (std::size_t i = 0; i < d_->n; ++i)
        for (std::size_t k = 0; k < d_->generators.size(); ++k) {
          Word w = d_->words[i];
          w.push_back(Letter{static_cast<int>(k), 1});
          std::size_t j = static_cast<std::size_t>(d_->table[i * d_->n + static_cast<std::size_t>(d_->generators[k].v[0])]);
          for (const Letter& l : inverse_word(d_->words[j])) w.push_back(l);
          w = free_reduce(w);
          if (!w.empty()) out.push_back(w);
        }
      break;
    case GroupFamily::Integers:
      break;
    case GroupFamily::InfiniteDihedral:
      out.push_back({{0, 1}, {0, 1}});
      out.push_back({{0, 1}, {1, 1}, {0, 1}, {1, 1}});
      break;
    case GroupFamily::Product:
      for (std::size_t i = 0; i < d_->factors.size(); ++i)
        for (Word w : d_->factors[i].relators()) {
          for (auto& l : w) l.generator += static_cast<int>(d_->gen_offsets[i]);
          out.push_back(w);
        }
      for (std::size_t i = 0; i < d_->factors.size(); ++i)
        for (std::size_t j = i + 1; j < d_->factors.size(); ++j)
          for (std::size_t a = 0; a < d_->factors[i].generators().size(); ++a)
            for (std::size_t b = 0; b < d_->factors[j].generators().size(); ++b) {
              int ga = static_cast<int>(d_->gen_offsets[i] + a), gb = static_cast<int>(d_->gen_offsets[j] + b);
              out.push_back({{ga, 1}, {gb, 1}, {ga, -1}, {gb, -1}});
            }
      break;
  }
  return out;
}

std::string Group::name(const GroupElement& a) const {
  check(a);
  switch (d_->family) {
    case GroupFamily::Finite:
      return d_->names[static_cast<std::size_t>(a.v[0])];
    case GroupFamily::Integers:
      return std::to_string(a.v[0]);
    case GroupFamily::InfiniteDihedral: {
      if (a.v[0] == 0 && a.v[1] == 0) return "1";
      std::string s = a.v[0] ? "x" : "";
      if (a.v[1] != 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (a.v[1] != 1) s += "^" + std::to_string(a.v[1]);
      }
      return s;
    }
    case GroupFamily::Product: {
      std::string s = "<";
      for (std::size_t i = 0; i < d_->factors.size(); ++i) {
        if (i) s += ";";
        s += d_->factors[i].name(project(a, i));
      }
      return s + ">";
    }
  }
  return "?";
}

GroupElement Group::parse(std::string_view text) const {
  std::string s = trim(text);
  auto fail = [&]() -> GroupElement { throw ParseError("cannot parse group element '" + s + "'"); };
  if (d_->family == GroupFamily::Finite) {
    auto it = d_->name_index.find(s);
    if (it != d_->name_index.end()) return d_->elements[static_cast<std::size_t>(it->second)];
    if (s == "1" || s == "()" || s == "(1)" || s == "e") return identity();
  }
  if (d_->family == GroupFamily::Integers) {
    long v;
    if (!parse_long(s, v)) return fail();
    return GroupElement{d_->uid, {v, 0, 0, 0}};
  }
  if (d_->family == GroupFamily::Product) {
    if (s.size() < 2 || s.front() != '<' || s.back() != '>') return fail();
    auto parts = split_top(std::string_view(s).substr(1, s.size() - 2), ';');
    if (parts.size() != d_->factors.size()) return fail();
    GroupElement r = identity();
    for (std::size_t i = 0; i < parts.size(); ++i) r = mul(r, embed(d_->factors[i].parse(parts[i]), i));
    return r;
  }
  // word in generator names
  if (s == "1") return identity();
  GroupElement r = identity();
  for (const std::string& tok : split_top(s, '*')) {
    std::string base = tok;
    long e = 1;
    auto caret = tok.rfind('^');
    if (caret != std::string::npos && tok.find(')', caret) == std::string::npos) {
      base = trim(std::string_view(tok).substr(0, caret));
      if (!parse_long(trim(std::string_view(tok).substr(caret + 1)), e)) return fail();
    }
    if (base == "1") continue;
    std::size_t k = 0;
    while (k < d_->gen_names.size() && d_->gen_names[k] != base) ++k;
    if (k == d_->gen_names.size()) return fail();
    r = mul(r, pow(d_->generators[k], e));
  }
  return r;
}

Group Group::cyclic(unsigned n) {
  if (n == 0) throw InvalidArgument("Z_n needs n >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (unsigned i = 0; i < n; ++i) {
    names[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    for (unsigned j = 0; j < n; ++j) t[i][j] = static_cast<int>((i + j) % n);
  }
  std::vector<int> gens;
  if (n > 1) gens.push_back(1);
  return Group(finite_data(t, names, gens, {{"family", "Zn"}, {"n", n}}));
}

Group Group::klein_four() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return Group(finite_data(t, {"1", "a", "b", "a*b"}, {1, 2}, {{"family", "K4"}}));
}

Group Group::quaternion8() {
  // index a + 4b for r^a s^b
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int a = i % 4, b = i / 4, c = j % 4, d = j / 4;
      int r = a + (b ? -c : c);
      int s = b + d;
      if (s == 2) {
        s = 0;
        r += 2;
      }
      r = ((r % 4) + 4) % 4;
      t[i][j] = r + 4 * s;
    }
  return Group(finite_data(t, {"1", "r", "r^2", "r^3", "s", "r*s", "r^2*s", "r^3*s"}, {1, 4}, {{"family", "Q8"}}));
}

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  // (ab)(i) = a(b(i))
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

std::shared_ptr<GroupData> perm_data(std::vector<std::vector<int>> perms, const std::vector<int>& gens, nlohmann::json desc,
                 const std::vector<std::vector<int>>& ordering) {
  if (!ordering.empty()) perms = ordering;
  std::size_t n = perms.size();
  std::map<std::vector<int>, int> idx;
  for (std::size_t i = 0; i < n; ++i) idx[perms[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = idx.at(compose(perms[i], perms[j]));
  std::vector<std::string> names;
  for (const auto& p : perms) names.push_back(cycle_notation(p));
  return finite_data(t, names, gens, std::move(desc));
}

}  // namespace

Group Group::symmetric3() {
  std::vector<std::vector<int>> order = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  return Group(perm_data({}, {1, 4}, {{"family", "S3"}}, order));
}

Group Group::from_permutations(const std::vector<std::vector<int>>& generators) {
  if (generators.empty()) throw InvalidArgument("perm group needs generators");
  std::size_t deg = generators[0].size();
  std::vector<std::vector<int>> gens0;
  for (const auto& g : generators) {
    if (g.size() != deg) throw InvalidArgument("permutations of different degree");
    std::vector<int> p(deg);
    std::vector<bool> hit(deg, false);
    for (std::size_t i = 0; i < deg; ++i) {
      int v = g[i] - 1;
      if (v < 0 || static_cast<std::size_t>(v) >= deg || hit[static_cast<std::size_t>(v)])
        throw InvalidArgument("not a permutation of 1..n");
      hit[static_cast<std::size_t>(v)] = true;
      p[i] = v;
    }
    gens0.push_back(p);
  }
  std::vector<int> id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
  std::vector<std::vector<int>> els{id};
  std::set<std::vector<int>> seen{id};
  for (std::size_t k = 0; k < els.size(); ++k)
    for (const auto& g : gens0) {
      auto c = compose(els[k], g);
      if (seen.insert(c).second) els.push_back(c);
    }
  std::vector<int> gidx;
  for (const auto& g : gens0) gidx.push_back(static_cast<int>(std::find(els.begin(), els.end(), g) - els.begin()));
  // drop duplicate generators (e.g. identity)
  std::vector<int> uniq;
  for (int g : gidx)
    if (g != 0 && std::find(uniq.begin(), uniq.end(), g) == uniq.end()) uniq.push_back(g);
  return Group(perm_data(els, uniq, {{"family", "perm"}, {"generators", generators}}, {}));
}

Group Group::from_table(const std::vector<std::vector<int>>& table, std::vector<std::string> names,
                        std::vector<int> generators) {
  nlohmann::json desc = {{"family", "finite"}, {"table", table}};
  if (!names.empty()) desc["names"] = names;
  if (!generators.empty()) desc["generators"] = generators;
  return Group(finite_data(table, std::move(names), std::move(generators), std::move(desc)));
}

Group Group::integers() {
  auto d = std::make_shared<GroupData>();
  d->family = GroupFamily::Integers;
  d->uid = next_uid();
  d->desc = {{"family", "Z"}};
  d->generators.push_back(GroupElement{d->uid, {1, 0, 0, 0}});
  d->gen_names.push_back("1");
  return Group(d);
}

Group Group::infinite_dihedral() {
  auto d = std::make_shared<GroupData>();
  d->family = GroupFamily::InfiniteDihedral;
  d->uid = next_uid();
  d->desc = {{"family", "Dinf"}};
  d->slots = 2;
  d->abelian = false;
  d->generators.push_back(GroupElement{d->uid, {1, 0, 0, 0}});
  d->generators.push_back(GroupElement{d->uid, {0, 1, 0, 0}});
  d->gen_names = {"x", "y"};
  return Group(d);
}

Group Group::product(const std::vector<Group>& factors) {
  if (factors.size() < 2) throw InvalidArgument("product needs at least two factors");
  auto d = std::make_shared<GroupData>();
  d->family = GroupFamily::Product;
  d->uid = next_uid();
  d->factors = factors;
  nlohmann::json fs = nlohmann::json::array();
  std::size_t off = 0, goff = 0;
  for (const auto& f : factors) {
    fs.push_back(f.descriptor());
    d->offsets.push_back(off);
    d->gen_offsets.push_back(goff);
    off += slots_of(f);
    goff += f.generators().size();
    d->abelian = d->abelian && f.is_abelian();
  }
  if (off > 4) throw InvalidArgument("product group too large for element payload");
  d->slots = off;
  d->desc = {{"family", "product"}, {"factors", fs}};
  Group g(d);
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (const auto& gen : factors[i].generators()) {
      d->generators.push_back(g.embed(gen, i));
      d->gen_names.push_back(g.name(d->generators.back()));
    }
  bool finite = true;
  for (const auto& f : factors) finite = finite && f.is_finite();
  if (finite) {
    std::vector<GroupElement> els{g.identity()};
    for (std::size_t i = 0; i < factors.size(); ++i) {
      std::vector<GroupElement> next;
      for (const auto& e : els)
        for (const auto& fe : factors[i].elements()) next.push_back(g.mul(e, g.embed(fe, i)));
      els = std::move(next);
    }
    std::sort(els.begin(), els.end());
    d->elements = std::move(els);
  }
  return g;
}

Group Group::from_descriptor(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw SchemaError("group", "missing string field 'family'");
  std::string fam = j["family"];
  try {
    if (fam == "Zn") return cyclic(j.at("n").get<unsigned>());
    if (fam == "Z") return integers();
    if (fam == "Dinf") return infinite_dihedral();
    if (fam == "K4") return klein_four();
    if (fam == "S3") return symmetric3();
    if (fam == "Q8") return quaternion8();
    if (fam == "perm") return from_permutations(j.at("generators").get<std::vector<std::vector<int>>>());
    if (fam == "finite")
      return from_table(j.at("table").get<std::vector<std::vector<int>>>(),
                        j.value("names", std::vector<std::string>{}), j.value("generators", std::vector<int>{}));
    if (fam == "product") {
      std::vector<Group> fs;
      for (const auto& f : j.at("factors")) fs.push_back(from_descriptor(f));
      return product(fs);
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("group." + fam, e.what());
  }
  throw SchemaError("group.family", "unknown family '" + fam + "'");
}

GroupHom::GroupHom(Group domain, Group codomain, std::vector<GroupElement> images)
    : dom_(std::move(domain)), cod_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != dom_.generators().size()) throw InvalidArgument("one image per generator required");
  for (const auto& im : images_)
    if (!cod_.contains(im)) throw MixedGroups("image not in codomain");
  auto eval = [&](const Word& w) {
    GroupElement r = cod_.identity();
    for (const Letter& l : w) {
      const GroupElement& g = images_[static_cast<std::size_t>(l.generator)];
      r = cod_.mul(r, l.power > 0 ? g : cod_.inv(g));
    }
    return r;
  };
  if (dom_.is_finite()) {
    const auto& els = dom_.elements();
    for (const auto& e : els) table_.push_back(eval(dom_.word(e)));
    for (std::size_t a = 0; a < els.size(); ++a)
      for (std::size_t b = 0; b < els.size(); ++b)
        if (table_[dom_.index(dom_.mul(els[a], els[b]))] != cod_.mul(table_[a], table_[b]))
          throw InvalidArgument("generator images do not define a homomorphism");
  } else {
    for (const Word& r : dom_.relators())
      if (!cod_.is_identity(eval(r))) throw InvalidArgument("generator images violate a defining relation");
  }
}

GroupElement GroupHom::apply(const GroupElement& a) const {
  if (!dom_.contains(a)) throw MixedGroups("element not in domain");
  if (!table_.empty()) return table_[dom_.index(a)];
  GroupElement r = cod_.identity();
  for (const Letter& l : dom_.word(a)) {
    const GroupElement& g = images_[static_cast<std::size_t>(l.generator)];
    r = cod_.mul(r, l.power > 0 ? g : cod_.inv(g));
  }
  return r;
}

}  // namespace hopfcqt
