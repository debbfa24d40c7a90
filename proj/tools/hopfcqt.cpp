#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfcqt/catalog.hpp"
#include "hopfcqt/error.hpp"
#include "hopfcqt/grothendieck.hpp"
#include "hopfcqt/json_io.hpp"

using namespace hopfcqt;
using nlohmann::json;

namespace {

struct Options {
  std::string entry, input, a, b, f;
  std::size_t maxlen = 4;
  bool json_out = false, text_out = false;
  std::vector<std::string> levels, checks;
};

struct Source {
  CatalogEntry e;
  json doc;  // input document, empty for catalog entries
};

Source load(const Options& o) {
  if (o.entry.empty() == o.input.empty()) throw InvalidArgument("give exactly one of --entry and --input");
  if (!o.entry.empty()) return {catalog_entry(o.entry), json()};
  json doc = read_json_file(o.input);
  return {entry_from_json(doc), doc};
}

BasisKey parse_basis(const HopfContext& c, std::string s) {
  if (s.rfind("p_", 0) == 0) s = s.substr(2);
  auto pos = s.find('#');
  if (pos == std::string::npos) throw InvalidArgument("basis element '" + s + "' must look like g#f");
  return parse_key(c, s.substr(0, pos), s.substr(pos + 1));
}

HopfElement element_arg(const Source& src, const std::string& name, const std::string& arg) {
  if (!arg.empty()) return basis(src.e.ctx, parse_basis(*src.e.ctx, arg));
  if (src.doc.is_object() && src.doc.contains(name)) return element_from_json(src.e.ctx, src.doc[name], name);
  throw InvalidArgument("missing element --" + name);
}

// "f:i" is the i-th simple based at the orbit of f; "U:f", "V:f", "W:f" name the Z_2 simples
Character character_arg(const Source& src, const std::string& text) {
  const ContextPtr& c = src.e.ctx;
  auto pos = text.find(':');
  if (pos == std::string::npos) throw InvalidArgument("character '" + text + "' must look like f:i or U:f");
  std::string head = text.substr(0, pos), tail = text.substr(pos + 1);
  if (c->mp.order_G() == 2 && (head == "U" || head == "V" || head == "W")) {
    Z2Label::Kind k = head == "U" ? Z2Label::U : head == "V" ? Z2Label::V : Z2Label::W;
    return z2_character(c, z2_label(c->mp, k, c->mp.F().parse(tail)));
  }
  auto chars = irreducible_characters(c, c->mp.F().parse(head), src.e.battery.registered);
  std::size_t i = std::stoul(tail);
  if (i >= chars.size()) throw InvalidArgument("only " + std::to_string(chars.size()) + " simples at " + head);
  return chars[i];
}

std::optional<RForm> r_of(const Source& src, std::size_t L) {
  if (src.e.R) return src.e.R(L);
  return std::nullopt;
}

class Printer {
 public:
  explicit Printer(const Options& o) : json_(o.json_out) {}

  void report(const CheckReport& r, const json& result = json()) {
    if (json_) {
      json j = r.to_json();
      if (!result.is_null()) j["result"] = result;
      items_.push_back(j);
    } else {
      std::cout << r.to_text() << "\n";
      if (!result.is_null()) std::cout << "  result: " << (result.is_string() ? result.get<std::string>() : result.dump()) << "\n";
    }
  }
  void flush(const json& wrapper = json()) {
    if (!json_) return;
    if (!wrapper.is_null()) {
      json w = wrapper;
      w["reports"] = items_;
      std::cout << w.dump(2) << "\n";
    } else if (items_.size() == 1) {
      std::cout << items_[0].dump(2) << "\n";
    } else {
      std::cout << json(items_).dump(2) << "\n";
    }
  }

 private:
  bool json_;
  std::vector<json> items_;
};

// Runs a catalog check; the exit status reflects agreement with the recorded
// expectation, or absence of failure when none is recorded.
int checked(const Options& o, const std::string& check) {
  Source src = load(o);
  EntryResult res = run_entry(src.e, {check}, o.maxlen);
  const EntryCheckResult& r = res.checks.front();
  const CheckOutcome& out = r.outcome;
  if (o.json_out) {
    json j = out.report.to_json();
    if (r.expected) j["expected"] = to_string(r.expected->status);
    j["matches"] = r.matches;
    if (!out.parts.empty()) {
      j["parts"] = json::array();
      for (const auto& p : out.parts) j["parts"].push_back(p.to_json());
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << out.report.to_text() << "\n";
    for (const auto& p : out.parts) std::cout << "  - " << p.to_text() << "\n";
    if (r.expected) std::cout << "expected " << to_string(r.expected->status) << ": " << (r.matches ? "match" : "MISMATCH") << "\n";
  }
  return r.matches ? 0 : 1;
}

int cmd_orbits(const Options& o) {
  Source src = load(o);
  const MatchedPair& mp = src.e.ctx->mp;
  Printer p(o);
  std::vector<GroupElement> pts;
  if (!o.f.empty()) pts.push_back(mp.F().parse(o.f));
  else
    for (const auto& f : ordered_window(mp.F(), o.maxlen)) {
      GroupElement b = orbit_representative(mp, f);
      if (std::find(pts.begin(), pts.end(), b) == pts.end()) pts.push_back(b);
    }
  json all = json::array();
  for (const auto& f : pts) {
    OrbitData od = orbit_data(mp, f);
    json j;
    j["base"] = mp.fname(od.base);
    for (const auto& x : od.orbit) j["orbit"].push_back(mp.fname(x));
    for (GIndex g : od.stabilizer) j["stabilizer"].push_back(mp.gname(g));
    for (GIndex g : od.transversal) j["transversal"].push_back(mp.gname(g));
    all.push_back(j);
  }
  CheckReport r = make_report("orbits");
  r.instances = pts.size();
  p.report(r, all);
  p.flush();
  return 0;
}

int cmd_hopf(const Options& o, const std::string& what) {
  Source src = load(o);
  Printer p(o);
  HopfElement a = element_arg(src, "a", o.a);
  CheckReport r = make_report("hopf-" + what);
  if (what == "mul") {
    HopfElement b = element_arg(src, "b", o.b);
    HopfElement ab = multiply(a, b);
    p.report(r, o.json_out ? element_to_json(ab) : json(to_string(ab)));
  } else if (what == "delta") {
    p.report(r, to_string(comultiply(a)));
  } else {
    HopfElement s = antipode(a);
    p.report(r, o.json_out ? element_to_json(s) : json(to_string(s)));
  }
  p.flush();
  return 0;
}

std::vector<Comodule> comodules_of(const Source& src, const Options& o) {
  std::vector<Comodule> vs = src.e.battery.registered;
  if (!o.f.empty()) {
    GroupElement f = src.e.ctx->mp.F().parse(o.f);
    auto C = make_coalgebra(src.e.ctx, f);
    std::vector<Comodule> at;
    for (const auto& V : vs)
      if (V.C->base() == C->base()) at.push_back(V);
    if (at.empty() && C->abelian()) at = enumerate_onedim(C);
    return at;
  }
  return vs;
}

int cmd_comodule(const Options& o) {
  Source src = load(o);
  Printer p(o);
  auto vs = comodules_of(src, o);
  if (vs.empty()) throw InvalidArgument("no comodules: give --f or list them in the input");
  bool ok = true;
  for (const auto& V : vs) {
    CheckReport r = aggregate("comodule " + V.label, verify_comodule(V));
    r.note = is_simple(V) ? "simple" : "not simple";
    ok = ok && r.status != Status::Fail;
    p.report(r);
  }
  p.flush();
  return ok ? 0 : 1;
}

int cmd_char(const Options& o, bool induced) {
  Source src = load(o);
  Printer p(o);
  if (o.f.empty()) throw InvalidArgument("--f is required");
  const ContextPtr& c = src.e.ctx;
  bool ok = true;
  if (!induced) {
    for (const auto& ch : irreducible_characters(c, c->mp.F().parse(o.f), src.e.battery.registered)) {
      CheckReport r = make_report("char " + ch.label);
      r.note = "dimension " + std::to_string(ch.dim);
      p.report(r, o.json_out ? element_to_json(ch.chi) : json(to_string(ch.chi)));
    }
  } else {
    for (const auto& V : comodules_of(src, o)) {
      InducedComodule W = induce(V);
      CheckReport r = aggregate("induce " + V.label, verify_induced(W));
      HopfElement tr = trace(W);
      ++r.instances;
      if (!(tr == character(V).chi) && r.status != Status::Fail) {
        r.status = Status::Fail;
        r.witness = Witness().add("trace", to_string(tr)).add("character", to_string(character(V).chi));
      }
      r.note = "dimension " + std::to_string(W.dim());
      ok = ok && r.status != Status::Fail;
      p.report(r, o.json_out ? element_to_json(tr) : json(to_string(tr)));
    }
  }
  p.flush();
  return ok ? 0 : 1;
}

int cmd_gr(const Options& o, bool decompose_it) {
  Source src = load(o);
  Printer p(o);
  Character A = character_arg(src, o.a), B = character_arg(src, o.b);
  HopfElement ab = char_product(A, B);
  CheckReport r = make_report(decompose_it ? "gr-decompose" : "gr-product");
  if (!decompose_it) {
    p.report(r, o.json_out ? element_to_json(ab) : json(to_string(ab)));
  } else {
    auto basis_chars = support_basis(ab, src.e.battery.registered);
    auto m = decompose(ab, basis_chars);
    json res = json::array();
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i].is_zero()) continue;
      res.push_back({{"simple", basis_chars[i].label}, {"multiplicity", m[i].to_string()}});
      s += (s.empty() ? "" : " + ") + (m[i].is_one() ? "" : m[i].to_string() + " ") + basis_chars[i].label;
    }
    p.report(r, o.json_out ? res : json(s));
  }
  p.flush();
  return 0;
}

int cmd_cqt_verify(const Options& o) {
  if (o.levels.empty()) return checked(o, "cqt_verify");
  Source src = load(o);
  Printer p(o);
  auto R = r_of(src, o.maxlen);
  if (!R) throw InvalidArgument("no R: the entry or input has none");
  bool ok = true;
  for (const auto& r : verify_R(*R, o.levels)) {
    ok = ok && r.status != Status::Fail;
    p.report(r);
  }
  p.flush();
  return ok ? 0 : 1;
}

int cmd_classify(const Options& o) {
  Source src = load(o);
  Printer p(o);
  auto R = r_of(src, o.maxlen);
  if (!R) throw InvalidArgument("no R: the entry or input has none");
  ShapeVerdict v = z2_shape_classify(*R);
  CheckReport r = make_report("cqt-z2-classify");
  r.witness = v.witness;
  r.note = to_string(v.kind);
  if (v.kind == ShapeVerdict::Nonconforming) r.status = Status::Fail;
  p.report(r, to_string(v.kind));
  for (const auto& d : v.diagnostics) p.report(d);
  p.flush();
  return r.status == Status::Fail ? 1 : 0;
}

int cmd_run(const Options& o) {
  EntryResult res = o.entry.empty() ? run_entry(load(o).e, o.checks, o.maxlen) : run_entry(o.entry, o.checks, o.maxlen);
  const std::string& id = res.id;
  const auto& results = res.checks;
  bool ok = true;
  json reps = json::array();
  for (const auto& r : results) {
    ok = ok && r.matches;
    if (o.json_out) {
      json j = r.outcome.report.to_json();
      if (r.expected) j["expected"] = to_string(r.expected->status);
      j["matches"] = r.matches;
      reps.push_back(j);
    } else {
      std::cout << (r.matches ? "[match]    " : "[MISMATCH] ") << r.outcome.report.to_text() << "\n";
      if (r.expected) std::cout << "  expected: " << to_string(r.expected->status) << "\n";
    }
  }
  if (o.json_out)
    std::cout << json({{"entry", id}, {"matches", ok}, {"reports", reps}}).dump(2) << "\n";
  else
    std::cout << id << ": " << (ok ? "all checks match" : "some checks do not match") << "\n";
  return ok ? 0 : 1;
}

int cmd_export(const Options& o) {
  Source src = load(o);
  std::cout << entry_to_json(src.e, o.maxlen).dump(2) << "\n";
  return 0;
}

int cmd_list(const Options& o) {
  json all = json::array();
  for (const auto& id : catalog_ids()) {
    const CatalogEntry& e = catalog_entry(id);
    json checks = json::array();
    for (const auto& x : e.expected) checks.push_back(x.check);
    all.push_back({{"id", id}, {"description", e.description}, {"checks", checks}});
    if (!o.json_out) std::cout << id << "  " << e.description << "\n";
  }
  if (o.json_out) std::cout << all.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double crossproduct Hopf algebras: axioms, comodules, Grothendieck rings, coquasitriangular checks"};
  app.require_subcommand(1);
  Options o;
  int rc = 0;

  auto common = [&](CLI::App* s) {
    auto* e = s->add_option("--entry", o.entry, "catalog entry id");
    auto* i = s->add_option("--input", o.input, "JSON input document");
    e->excludes(i);
    s->add_option("--maxlen", o.maxlen, "word-length window for infinite F")->capture_default_str();
    auto* j = s->add_flag("--json", o.json_out, "JSON output");
    auto* t = s->add_flag("--text", o.text_out, "text output (default)");
    j->excludes(t);
    return s;
  };
  auto sub = [&](const std::string& name, const std::string& help, std::function<int()> fn) {
    auto* s = common(app.add_subcommand(name, help));
    s->callback([&rc, fn] { rc = fn(); });
    return s;
  };

  sub("verify-mp", "check the matched pair axioms", [&] { return checked(o, "verify_mp"); });
  sub("verify-cocycles", "check the cocycle conditions", [&] { return checked(o, "verify_cocycles"); });
  sub("hopf-verify", "check the Hopf algebra axioms", [&] { return checked(o, "verify_hopf"); });
  sub("orbit-commutes", "check O_f O_f' = O_f' O_f on the window", [&] { return checked(o, "orbit_commutes_all"); });
  sub("gr-commutes", "check commutativity of simple characters", [&] { return checked(o, "gr_commutes_all"); });
  sub("gr-z2-table", "compare the Z_2 tensor rules with generic decomposition", [&] { return checked(o, "z2_gr_table"); });
  sub("cqt-necessary", "run the necessary-condition battery", [&] { return checked(o, "necessary_battery"); });
  sub("cqt-zeros", "check the structural zeros of R", [&] { return checked(o, "structural_zeros"); });
  sub("cqt-z2-r11", "solve for R at f = f' = 1 over Z_2", [&] { return checked(o, "cqt_r11"); });
  sub("cqt-bicharacter", "restriction of R to group-likes over S", [&] { return checked(o, "bicharacter"); });
  sub("orbits", "orbits, stabilizers and transversals", [&] { return cmd_orbits(o); })
      ->add_option("--f", o.f, "base point");
  for (std::string w : {"mul", "delta", "antipode"}) {
    auto* s = sub("hopf-" + w, "structure map on basis elements g#f", [&, w] { return cmd_hopf(o, w); });
    s->add_option("--a", o.a, "basis element g#f");
    if (w == "mul") s->add_option("--b", o.b, "basis element g#f");
  }
  sub("comodule-verify", "check comodule axioms", [&] { return cmd_comodule(o); })->add_option("--f", o.f, "base point");
  sub("char", "simple characters based at f", [&] { return cmd_char(o, false); })->add_option("--f", o.f, "base point")->required();
  sub("induce", "induced comodules and their traces", [&] { return cmd_char(o, true); })
      ->add_option("--f", o.f, "base point")
      ->required();
  for (bool d : {false, true}) {
    auto* s = sub(d ? "gr-decompose" : "gr-product", d ? "decompose a product of simples" : "product of characters",
                  [&, d] { return cmd_gr(o, d); });
    s->add_option("--a", o.a, "simple: f:i, or U:f / V:f / W:f over Z_2")->required();
    s->add_option("--b", o.b, "simple: f:i, or U:f / V:f / W:f over Z_2")->required();
  }
  sub("cqt-verify", "check CQT0..CQT3 (or --levels) for R", [&] { return cmd_cqt_verify(o); })
      ->add_option("--levels", o.levels, "CQT0 CQT1 CQT2 CQT3 CQT4 INV");
  sub("cqt-z2-classify", "shape of R over Z_2", [&] { return cmd_classify(o); });
  sub("run", "run catalog checks against recorded expectations", [&] { return cmd_run(o); })
      ->add_option("--check", o.checks, "check names (default: all recorded)");
  sub("export", "write the entry as an input document", [&] { return cmd_export(o); });
  sub("list", "list catalog entries", [&] { return cmd_list(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    if (o.json_out)
      std::cout << json({{"error", e.kind()}, {"message", e.what()}}).dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
