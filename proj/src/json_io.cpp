#include "hopfcqt/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hopfcqt/error.hpp"

namespace hopfcqt {

namespace {

std::string at(const std::string& where, const std::string& field) { return where + "." + field; }
std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& field(const json& j, const std::string& where, const std::string& name) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError(at(where, name), "missing field");
  return *it;
}

const json& array_field(const json& j, const std::string& where, const std::string& name) {
  const json& a = field(j, where, name);
  if (!a.is_array()) throw SchemaError(at(where, name), "expected an array");
  return a;
}

std::string string_of(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where, "expected a string");
  return j.get<std::string>();
}

GroupElement element_of(const Group& grp, const json& j, const std::string& where) {
  std::string s = string_of(j, where);
  try {
    return grp.parse(s);
  } catch (const Error& e) {
    throw SchemaError(where, "unknown group element '" + s + "'");
  }
}

GIndex gindex_of(const MatchedPair& mp, const json& j, const std::string& where) {
  return mp.gindex(element_of(mp.G(), j, where));
}

Group group_of(const json& j, const std::string& where) {
  try {
    return Group::from_descriptor(j);
  } catch (const SchemaError& e) {
    throw SchemaError(where + "." + e.location(), e.what());
  } catch (const Error& e) {
    throw SchemaError(where, e.what());
  }
}

std::size_t size_of(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw SchemaError(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

json optional_scalar(const std::optional<Scalar>& s) { return s ? scalar_to_json(*s) : json(nullptr); }

}  // namespace

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw SchemaError(where, "expected a scalar string");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(where, "malformed scalar '" + j.get<std::string>() + "'");
  }
}

json context_to_json(const HopfContext& c) {
  const MatchedPair& mp = c.mp;
  const Group& F = mp.F();
  json j;
  j["id"] = c.id;
  j["G"] = mp.G().descriptor();
  j["F"] = F.descriptor();
  json left = json::array(), right = json::array();
  for (GIndex g = 0; g < mp.order_G(); ++g) {
    json l = json::array(), r = json::array();
    for (const auto& f : mp.left_on_generators()[g]) l.push_back(F.name(f));
    for (GIndex x : mp.right_on_generators()[g]) r.push_back(mp.gname(x));
    left.push_back(l);
    right.push_back(r);
  }
  j["left"] = left;
  j["right"] = right;
  const CocycleTables& t = c.cp.tables();
  json sig = json::array(), tau = json::array();
  for (const auto& [k, v] : t.sigma) {
    const auto& [g, f, f2] = k;
    sig.push_back({{"g", mp.gname(g)}, {"f", F.name(f)}, {"f2", F.name(f2)}, {"c", scalar_to_json(v)}});
  }
  for (const auto& [k, v] : t.tau) {
    const auto& [g, g2, f] = k;
    tau.push_back({{"g", mp.gname(g)}, {"g2", mp.gname(g2)}, {"f", F.name(f)}, {"c", scalar_to_json(v)}});
  }
  j["cocycles"] = {{"sigma", sig},
                   {"tau", tau},
                   {"sigma_default", optional_scalar(t.sigma_default)},
                   {"tau_default", optional_scalar(t.tau_default)}};
  return j;
}

ContextPtr context_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  Group G = group_of(field(j, where, "G"), at(where, "G"));
  Group F = group_of(field(j, where, "F"), at(where, "F"));
  if (!G.is_finite()) throw SchemaError(at(where, "G"), "G must be finite");
  const std::size_t nG = G.order(), nS = F.generators().size();
  const json& L = array_field(j, where, "left");
  const json& Rr = array_field(j, where, "right");
  if (L.size() != nG) throw SchemaError(at(where, "left"), "expected one row per element of G");
  if (Rr.size() != nG) throw SchemaError(at(where, "right"), "expected one row per element of G");
  std::vector<std::vector<GroupElement>> left(nG);
  std::vector<std::vector<GIndex>> right(nG);
  for (std::size_t g = 0; g < nG; ++g) {
    const std::string wl = at(at(where, "left"), g), wr = at(at(where, "right"), g);
    if (!L[g].is_array() || L[g].size() != nS) throw SchemaError(wl, "expected one entry per generator of F");
    if (!Rr[g].is_array() || Rr[g].size() != nS) throw SchemaError(wr, "expected one entry per generator of F");
    for (std::size_t s = 0; s < nS; ++s) {
      left[g].push_back(element_of(F, L[g][s], at(wl, s)));
      right[g].push_back(G.index(element_of(G, Rr[g][s], at(wr, s))));
    }
  }
  std::optional<MatchedPair> mp;
  try {
    mp.emplace(G, F, left, right);
  } catch (const Error& e) {
    throw SchemaError(where, std::string("not a matched pair: ") + e.what());
  }
  CocyclePair cp;
  if (j.contains("cocycles") && !j["cocycles"].is_null()) {
    const std::string wc = at(where, "cocycles");
    const json& c = j["cocycles"];
    if (!c.is_object()) throw SchemaError(wc, "expected an object");
    CocycleTables t;
    if (c.contains("sigma")) {
      const json& a = array_field(c, wc, "sigma");
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string w = at(at(wc, "sigma"), i);
        t.sigma[{gindex_of(*mp, field(a[i], w, "g"), at(w, "g")), element_of(F, field(a[i], w, "f"), at(w, "f")),
                 element_of(F, field(a[i], w, "f2"), at(w, "f2"))}] = scalar_from_json(field(a[i], w, "c"), at(w, "c"));
      }
    }
    if (c.contains("tau")) {
      const json& a = array_field(c, wc, "tau");
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string w = at(at(wc, "tau"), i);
        t.tau[{gindex_of(*mp, field(a[i], w, "g"), at(w, "g")), gindex_of(*mp, field(a[i], w, "g2"), at(w, "g2")),
               element_of(F, field(a[i], w, "f"), at(w, "f"))}] = scalar_from_json(field(a[i], w, "c"), at(w, "c"));
      }
    }
    for (const char* d : {"sigma_default", "tau_default"}) {
      std::optional<Scalar> v = Scalar(1);
      if (c.contains(d)) v = c[d].is_null() ? std::nullopt : std::optional<Scalar>(scalar_from_json(c[d], at(wc, d)));
      (std::string(d) == "sigma_default" ? t.sigma_default : t.tau_default) = v;
    }
    try {
      cp = CocyclePair(*mp, std::move(t));
    } catch (const Error& e) {
      throw SchemaError(wc, e.what());
    }
  }
  std::string id = j.contains("id") ? string_of(j["id"], at(where, "id")) : std::string();
  return make_context(std::move(*mp), std::move(cp), std::move(id));
}

bool same_context(const HopfContext& a, const HopfContext& b) { return context_to_json(a) == context_to_json(b); }

json rform_to_json(const RForm& R) {
  const HopfContext& c = *R.context();
  const MatchedPair& mp = c.mp;
  json e = json::array();
  for (const auto& [kp, v] : R.table()) {
    const auto& [a, b] = kp;
    e.push_back({{"g", mp.gname(a.g)}, {"f", mp.fname(a.f)}, {"h", mp.gname(b.g)}, {"f2", mp.fname(b.f)},
                 {"c", scalar_to_json(v)}});
  }
  json w = {{"maxlen", R.maxlen() ? json(*R.maxlen()) : json(nullptr)}};
  return {{"entries", e}, {"window", w}};
}

RForm rform_from_json(const ContextPtr& ctx, const json& j, const std::string& where) {
  const MatchedPair& mp = ctx->mp;
  std::optional<std::size_t> maxlen;
  if (j.is_object() && j.contains("window")) {
    const json& w = j["window"];
    if (!w.is_object()) throw SchemaError(at(where, "window"), "expected an object");
    if (w.contains("maxlen") && !w["maxlen"].is_null()) maxlen = size_of(w["maxlen"], at(at(where, "window"), "maxlen"));
  }
  RForm R(ctx, maxlen);
  const json& e = array_field(j, where, "entries");
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::string w = at(at(where, "entries"), i);
    BasisKey a{gindex_of(mp, field(e[i], w, "g"), at(w, "g")), element_of(mp.F(), field(e[i], w, "f"), at(w, "f"))};
    BasisKey b{gindex_of(mp, field(e[i], w, "h"), at(w, "h")), element_of(mp.F(), field(e[i], w, "f2"), at(w, "f2"))};
    Scalar c = scalar_from_json(field(e[i], w, "c"), at(w, "c"));
    try {
      R.set(a, b, R.at(a, b) + c);
    } catch (const InvalidArgument& x) {
      throw SchemaError(w, "entry outside the window");
    }
  }
  return R;
}

json comodule_to_json(const Comodule& V) {
  const TwistedCoalgebra& C = *V.C;
  json co = json::array();
  for (GIndex g : C.stabilizer()) {
    const Matrix& M = V.coeff(g);
    json m = json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) {
      json row = json::array();
      for (std::size_t k = 0; k < M.cols(); ++k) row.push_back(scalar_to_json(M.at(r, k)));
      m.push_back(row);
    }
    co.push_back({{"g", C.mp().gname(g)}, {"matrix", m}});
  }
  return {{"base", C.mp().fname(C.base())}, {"label", V.label}, {"dim", V.dim}, {"coefficients", co}};
}

Comodule comodule_from_json(const ContextPtr& ctx, const json& j, const std::string& where) {
  const MatchedPair& mp = ctx->mp;
  GroupElement f = element_of(mp.F(), field(j, where, "base"), at(where, "base"));
  std::size_t dim = size_of(field(j, where, "dim"), at(where, "dim"));
  std::string label = j.contains("label") ? string_of(j["label"], at(where, "label")) : std::string();
  CoalgebraPtr C = make_coalgebra(ctx, f);
  if (C->base() != f) throw SchemaError(at(where, "base"), "base point must be the orbit representative");
  std::vector<Matrix> mats(C->stabilizer().size());
  std::vector<char> seen(mats.size(), 0);
  const json& co = array_field(j, where, "coefficients");
  for (std::size_t i = 0; i < co.size(); ++i) {
    const std::string w = at(at(where, "coefficients"), i);
    GIndex g = gindex_of(mp, field(co[i], w, "g"), at(w, "g"));
    if (!C->contains(g)) throw SchemaError(at(w, "g"), "not in the stabilizer of the base point");
    const std::size_t p = C->pos(g);
    if (seen[p]) throw SchemaError(at(w, "g"), "duplicate stabilizer element");
    seen[p] = 1;
    const json& m = array_field(co[i], w, "matrix");
    const std::string wm = at(w, "matrix");
    if (m.size() != dim) throw SchemaError(wm, "expected " + std::to_string(dim) + " rows");
    Matrix M(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (!m[r].is_array() || m[r].size() != dim) throw SchemaError(at(wm, r), "expected " + std::to_string(dim) + " columns");
      for (std::size_t k = 0; k < dim; ++k) M.at(r, k) = scalar_from_json(m[r][k], at(at(wm, r), k));
    }
    mats[p] = std::move(M);
  }
  for (std::size_t p = 0; p < seen.size(); ++p)
    if (!seen[p])
      throw SchemaError(at(where, "coefficients"), "missing matrix for " + mp.gname(C->stabilizer()[p]));
  return make_comodule(C, std::move(mats), std::move(label));
}

bool same_comodule(const Comodule& a, const Comodule& b) {
  return a.C->context() == b.C->context() && a.C->base() == b.C->base() && a.dim == b.dim && a.label == b.label &&
         a.a == b.a;
}

json element_to_json(const HopfElement& x) {
  const MatchedPair& mp = x.context()->mp;
  json t = json::array();
  for (const auto& [k, c] : x.terms()) t.push_back({{"g", mp.gname(k.g)}, {"f", mp.fname(k.f)}, {"c", scalar_to_json(c)}});
  return {{"terms", t}};
}

HopfElement element_from_json(const ContextPtr& ctx, const json& j, const std::string& where) {
  const MatchedPair& mp = ctx->mp;
  HopfElement x(ctx);
  const json& t = array_field(j, where, "terms");
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string w = at(at(where, "terms"), i);
    BasisKey k{gindex_of(mp, field(t[i], w, "g"), at(w, "g")), element_of(mp.F(), field(t[i], w, "f"), at(w, "f"))};
    x.add(k, scalar_from_json(field(t[i], w, "c"), at(w, "c")));
  }
  return x;
}

json quotient_to_json(const QuotientData& q) {
  json im = json::array(), ch = json::array();
  for (const auto& e : q.images) im.push_back(q.Q.name(e));
  for (const auto& [label, vals] : q.characters) {
    json v = json::array();
    for (const auto& s : vals) v.push_back(scalar_to_json(s));
    ch.push_back({{"label", label}, {"values", v}});
  }
  return {{"Q", q.Q.descriptor()}, {"images", im}, {"characters", ch}};
}

QuotientData quotient_from_json(const json& j, const std::string& where) {
  QuotientData q{group_of(field(j, where, "Q"), at(where, "Q")), {}, {}};
  const json& im = array_field(j, where, "images");
  for (std::size_t i = 0; i < im.size(); ++i) q.images.push_back(element_of(q.Q, im[i], at(at(where, "images"), i)));
  if (j.contains("characters")) {
    const json& ch = array_field(j, where, "characters");
    for (std::size_t i = 0; i < ch.size(); ++i) {
      const std::string w = at(at(where, "characters"), i);
      std::string label = string_of(field(ch[i], w, "label"), at(w, "label"));
      const json& v = array_field(ch[i], w, "values");
      std::vector<Scalar> vals;
      for (std::size_t k = 0; k < v.size(); ++k) vals.push_back(scalar_from_json(v[k], at(at(w, "values"), k)));
      q.characters.push_back({label, vals});
    }
  }
  return q;
}

CatalogEntry entry_from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("document", "expected an object");
  CatalogEntry e;
  e.ctx = context_from_json(field(doc, "document", "context"), "context");
  e.id = e.ctx->id;
  if (doc.contains("R")) {
    RForm R = rform_from_json(e.ctx, doc["R"], "R");
    e.R = [R](std::size_t) { return R; };
  }
  if (doc.contains("comodules")) {
    const json& a = array_field(doc, "document", "comodules");
    for (std::size_t i = 0; i < a.size(); ++i) e.battery.registered.push_back(comodule_from_json(e.ctx, a[i], at("comodules", i)));
  }
  if (doc.contains("quotients")) {
    const json& a = array_field(doc, "document", "quotients");
    for (std::size_t i = 0; i < a.size(); ++i) e.battery.quotients.push_back(quotient_from_json(a[i], at("quotients", i)));
  }
  if (doc.contains("expected")) {
    const json& a = array_field(doc, "document", "expected");
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string w = at("expected", i);
      Expectation x;
      x.check = string_of(field(a[i], w, "check"), at(w, "check"));
      try {
        x.status = status_from_string(string_of(field(a[i], w, "status"), at(w, "status")));
      } catch (const Error&) {
        throw SchemaError(at(w, "status"), "unknown status");
      }
      if (a[i].contains("citation")) x.citation = string_of(a[i]["citation"], at(w, "citation"));
      if (a[i].contains("failing"))
        for (std::size_t k = 0; k < a[i]["failing"].size(); ++k)
          x.failing.push_back(string_of(a[i]["failing"][k], at(at(w, "failing"), k)));
      e.expected.push_back(std::move(x));
    }
  }
  return e;
}

json entry_to_json(const CatalogEntry& e, std::size_t maxlen) {
  json doc;
  doc["context"] = context_to_json(*e.ctx);
  if (e.R) doc["R"] = rform_to_json(e.R(maxlen));
  if (!e.battery.registered.empty()) {
    doc["comodules"] = json::array();
    for (const auto& V : e.battery.registered) doc["comodules"].push_back(comodule_to_json(V));
  }
  if (!e.battery.quotients.empty()) {
    doc["quotients"] = json::array();
    for (const auto& q : e.battery.quotients) doc["quotients"].push_back(quotient_to_json(q));
  }
  doc["expected"] = json::array();
  for (const auto& x : e.expected) {
    json j = {{"check", x.check}, {"status", to_string(x.status)}, {"citation", x.citation}};
    if (!x.failing.empty()) j["failing"] = x.failing;
    doc["expected"].push_back(j);
  }
  return doc;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path, e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace hopfcqt
