#include <sstream>

#include "drg/classcount.hpp"
#include "drg/cli.hpp"
#include "drg/corpus.hpp"
#include "drg/weyl.hpp"

namespace drg::cli {

using nlohmann::json;

namespace {

// Integers go out as decimal strings so that no consumer loses precision.
std::string num(std::uint64_t v) { return std::to_string(v); }

json report_json(const DerangementReport& d) {
  return {{"delta", d.delta.to_string()},
          {"derangements", num(d.derangements)},
          {"population", num(d.population)},
          {"degree", num(d.n)},
          {"status", std::string(to_string(d.status))},
          {"frobenius", d.frobenius},
          {"frobenius_order_nn1", d.frobenius_order_nn1},
          {"frobenius_order_half", d.frobenius_order_half}};
}

json action_inputs(const ActionSpec& s) {
  json in{{"name", s.name},
          {"group_order", num(s.action.group().order())},
          {"degree", num(s.action.size())}};
  if (s.normal) in["normal_order"] = num(s.normal->order());
  if (s.element) in["element"] = s.element->to_cycles();
  return in;
}

CosetSetting coset_setting(const ActionSpec& s) {
  if (!s.normal) throw Error(ErrorKind::InvalidInput, "coset commands need a 'normal' field in the spec");
  if (!s.element) throw Error(ErrorKind::InvalidInput, "coset commands need an 'element' field in the spec");
  return CosetSetting::make(s.action, *s.normal, *s.element);
}

json orbital_json(const Orbital& o) { return {{"x", num(o.x)}, {"y", num(o.y)}, {"size", num(o.size)}}; }

json rows_json(const SuiteReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"instance", row.instance}, {"check", row.check}, {"pass", row.pass}, {"detail", row.detail}});
  }
  return rows;
}

Report finish(json doc, bool pass) {
  doc["pass"] = pass;
  return {std::move(doc), pass ? kExitOk : kExitFailed};
}

Report run_delta(const RunConfig& c, json doc) {
  ActionSpec s = parse_action_spec(load_spec(c.spec), c.cap);
  doc["inputs"] = action_inputs(s);
  DerangementReport d = delta(s.action);
  doc["results"] = report_json(d);
  return finish(std::move(doc), d.status != BoundStatus::BelowOneOverN);
}

Report run_coset_delta(const RunConfig& c, json doc) {
  ActionSpec s = parse_action_spec(load_spec(c.spec), c.cap);
  doc["inputs"] = action_inputs(s);
  CosetSetting setting = coset_setting(s);
  DerangementReport d = coset_delta(setting);
  CosetSum sum = coset_fixed_point_sum(setting);
  json res = report_json(d);
  res["fixed_point_sum"] = num(sum.sum);
  res["common_orbits"] = num(sum.common_orbits);
  res["sum_identity"] = sum.holds();
  doc["results"] = res;
  const bool bound = d.delta.is_zero() || d.status != BoundStatus::BelowOneOverN;
  return finish(std::move(doc), bound && sum.holds());
}

Report run_exceptional(const RunConfig& c, json doc) {
  ActionSpec s = parse_action_spec(load_spec(c.spec), c.cap);
  doc["inputs"] = action_inputs(s);
  CosetSetting setting = coset_setting(s);
  ExceptionalityCertificate cert = is_exceptional(setting);
  DerangementReport d = coset_delta(setting);
  json common = json::array();
  for (const auto& o : cert.common) common.push_back(orbital_json(o));
  doc["results"] = {{"exceptional", cert.exceptional},
                    {"common_orbitals", common},
                    {"ambient_orbitals", num(cert.ambient_orbitals)},
                    {"normal_orbitals", num(cert.normal_orbitals)},
                    {"coset_delta", d.delta.to_string()}};
  // exceptional exactly when the coset has no derangements
  return finish(std::move(doc), cert.exceptional == d.delta.is_zero());
}

Report run_hall_build(const RunConfig& c, json doc) {
  ActionSpec s = parse_action_spec(load_spec(c.spec), c.cap);
  doc["inputs"] = action_inputs(s);
  if (!s.normal) throw Error(ErrorKind::InvalidInput, "hall-build needs a 'normal' field in the spec");
  HallConstruction built = exceptional_from_hall(s.action.group(), *s.normal, c.cap);
  ExceptionalityCertificate cert = is_exceptional(built.setting);
  DerangementReport d = coset_delta(built.setting);
  json gens = json::array();
  for (const auto& g : built.complement.generators()) gens.push_back(g.to_cycles());
  doc["results"] = {{"complement_order", num(built.complement.order())},
                    {"complement_generators", gens},
                    {"normalizer_order", num(built.normalizer.order())},
                    {"degree", num(built.setting.action().size())},
                    {"coset_rep", built.setting.coset_rep().to_cycles()},
                    {"exceptional", cert.exceptional},
                    {"coset_delta", d.delta.to_string()}};
  return finish(std::move(doc), cert.exceptional && d.delta.is_zero());
}

Report run_weyl_delta(const RunConfig& c, json doc) {
  if (c.weyl_type.empty()) throw Error(ErrorKind::InvalidInput, "weyl-delta needs --type");
  WeylType t = parse_weyl_type(c.weyl_type);
  WeylGroup w = weyl_group(t, c.rank, c.cap);
  json in{{"type", std::string(to_string(t))}, {"rank", num(c.rank)}, {"order", num(w.order())}};
  PermGroup w0 = w.group();
  Permutation tau = Permutation::identity(w.group().degree());
  if (!c.young.empty()) {
    if (t != WeylType::A) throw Error(ErrorKind::FamilyMismatch, "--young needs type A");
    w0 = young_subgroup(w, c.young);
    json parts = json::array();
    for (auto p : c.young) parts.push_back(num(p));
    in["young"] = parts;
  } else if (c.weyl_subgroup == "D") {
    if (t != WeylType::B) throw Error(ErrorKind::FamilyMismatch, "--subgroup D needs type B");
    w0 = d_in_b(w);
    in["subgroup"] = "D";
    if (c.nontrivial_coset) tau = b_sign_flip(w);
  } else if (c.weyl_subgroup == "A2") {
    if (t != WeylType::G2) throw Error(ErrorKind::FamilyMismatch, "--subgroup A2 needs type G2");
    w0 = g2_long_a2(w);
    in["subgroup"] = "A2";
  } else {
    throw Error(ErrorKind::InvalidInput, "weyl-delta needs --young or --subgroup D|A2");
  }
  if (c.nontrivial_coset && c.weyl_subgroup != "D") {
    throw Error(ErrorKind::InvalidInput, "--sign-flip applies only to --subgroup D");
  }
  in["coset"] = tau.is_identity() ? "identity" : "sign-flip";
  doc["inputs"] = in;
  ClassMassReport m = class_mass(w, w0, tau);
  json classes = json::array();
  for (const auto& cl : m.meeting) classes.push_back({{"label", cl.label}, {"size", num(cl.size)}});
  json res{{"mass", m.mass.to_string()}, {"limiting_delta", m.limiting_delta.to_string()}, {"classes", classes}};
  bool pass = true;
  if (tau.is_identity()) {
    ParabolicDelta pd = limiting_delta_parabolic(w, w0);
    res["coset_action_delta"] = pd.delta.to_string();
    res["agrees"] = pd.agrees;
    pass = pd.agrees;
  }
  doc["results"] = res;
  return finish(std::move(doc), pass);
}

ClassicalSpecDoc classical_from(const RunConfig& c) {
  if (!c.spec.empty()) return parse_classical_spec(load_spec(c.spec));
  if (c.family.empty()) throw Error(ErrorKind::InvalidInput, "needs --family, --n and --q (or --spec)");
  return {parse_family(c.family), c.n, c.q};
}

json classical_inputs(const ClassicalSpecDoc& s) {
  return {{"family", std::string(to_string(s.family))}, {"n", num(s.n)}, {"q", num(s.q)}};
}

Report run_class_count(const RunConfig& c, json doc) {
  ClassicalSpecDoc s = classical_from(c);
  json in = classical_inputs(s);
  in["method"] = c.method;
  doc["inputs"] = in;
  ClassCountRecord rec = class_count(s.family, s.n, s.q, c.method, c.cap);
  json res{{"k", num(rec.k)}, {"method", rec.method}};
  if (c.method != "genfun") res["k_p"] = num(rec.k_p);
  doc["results"] = res;
  return finish(std::move(doc), true);
}

Report run_check_bound(const RunConfig& c, json doc) {
  ClassicalSpecDoc s = classical_from(c);
  doc["inputs"] = classical_inputs(s);
  BoundCheck b = bound_check(class_count(s.family, s.n, s.q, "brute", c.cap));
  doc["results"] = {{"item", b.item},
                    {"rank", num(b.rank)},
                    {"k", num(b.k)},
                    {"rational_part", b.rational_part.to_string()},
                    {"sqrt_coefficient", b.sqrt_coefficient.to_string()},
                    {"rhs", b.rhs}};
  return finish(std::move(doc), b.pass);
}

Report run_rss(const RunConfig& c, json doc) {
  ClassicalSpecDoc s = classical_from(c);
  doc["inputs"] = classical_inputs(s);
  ClassicalGroup g = build_classical(s.family, s.n, s.q, c.cap);
  RssReport r = rss_report(g);
  SemisimpleReport ss = semisimple_report(g);
  doc["results"] = {{"proportion", r.proportion.to_string()},
                    {"lower_bound", r.lower_bound.to_string()},
                    {"bound_positive", r.bound_positive},
                    {"exact_criterion", r.exact_criterion},
                    {"semisimple_classes", num(ss.count)},
                    {"q_to_rank", ss.q_to_rank.str()},
                    {"simply_connected", ss.simply_connected},
                    {"semisimple_at_most", ss.at_most},
                    {"semisimple_equality", ss.equality}};
  return finish(std::move(doc), r.pass);
}

Report run_limit(const RunConfig& c, json doc) {
  if (c.family.empty()) throw Error(ErrorKind::InvalidInput, "limit needs --family and --q");
  Family f = parse_family(c.family);
  doc["inputs"] = {{"family", std::string(to_string(f))}, {"q", num(c.q)}, {"depth", num(c.depth)}};
  LimitEval e = limit_partial(f, c.q, c.depth);
  doc["results"] = {{"item", e.item},
                    {"value", e.value.to_string()},
                    {"value_approx", e.value.to_double()},
                    {"last_deviation", e.last_deviation.to_double()}};
  return finish(std::move(doc), true);
}

Report run_verify(const RunConfig& c, json doc) {
  if (c.suite.empty()) throw Error(ErrorKind::InvalidInput, "verify needs a suite name");
  doc["inputs"] = {{"suite", c.suite}, {"cap", num(c.cap)}};
  SuiteReport r = verify_suite(c.suite, c.cap);
  doc["results"] = {{"rows", rows_json(r)}, {"checks", num(r.rows.size())}, {"failures", num(r.failures())}};
  return finish(std::move(doc), r.all_pass());
}

Report run_corpus(const RunConfig& c, json doc) {
  doc["inputs"] = {{"name", c.suite}};
  doc["results"] = corpus::describe(c.suite);
  return finish(std::move(doc), true);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void flatten(const json& v, const std::string& prefix, std::ostringstream& out) {
  if (v.is_object()) {
    for (const auto& [k, sub] : v.items()) flatten(sub, prefix.empty() ? k : prefix + "." + k, out);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
  } else {
    out << csv_field(prefix) << ',' << csv_field(v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

} // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CapExceeded: return kExitCap;
    case ErrorKind::NoComplementFound: return kExitFailed;
    case ErrorKind::Internal: return kExitInternal;
    default: return kExitInvalid;
  }
}

Report run(const RunConfig& c) {
  json doc{{"command", c.subcommand}, {"inputs", json::object()}, {"results", json::object()}};
  try {
    if (c.cap == 0) throw Error(ErrorKind::InvalidInput, "--cap must be positive");
    if (c.depth == 0) throw Error(ErrorKind::InvalidInput, "--depth must be positive");
    const std::string& s = c.subcommand;
    if (s == "delta") return run_delta(c, std::move(doc));
    if (s == "coset-delta") return run_coset_delta(c, std::move(doc));
    if (s == "exceptional") return run_exceptional(c, std::move(doc));
    if (s == "hall-build") return run_hall_build(c, std::move(doc));
    if (s == "weyl-delta") return run_weyl_delta(c, std::move(doc));
    if (s == "class-count") return run_class_count(c, std::move(doc));
    if (s == "check-bound") return run_check_bound(c, std::move(doc));
    if (s == "rss") return run_rss(c, std::move(doc));
    if (s == "limit") return run_limit(c, std::move(doc));
    if (s == "verify") return run_verify(c, std::move(doc));
    if (s == "corpus") return run_corpus(c, std::move(doc));
    throw Error(ErrorKind::InvalidInput, "unknown subcommand '" + s + "'");
  } catch (const Error& e) {
    doc["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    doc["pass"] = false;
    return {std::move(doc), exit_code_for(e.kind())};
  } catch (const json::exception& e) {
    doc["error"] = {{"kind", "InvalidInput"}, {"message", e.what()}};
    doc["pass"] = false;
    return {std::move(doc), kExitInvalid};
  } catch (const std::exception& e) {
    doc["error"] = {{"kind", "Internal"}, {"message", e.what()}};
    doc["pass"] = false;
    return {std::move(doc), kExitInternal};
  }
}

std::string render(const Report& report, Format format) {
  const json& d = report.document;
  if (format == Format::Json) return d.dump(2) + "\n";
  std::ostringstream out;
  if (d.contains("error")) {
    out << "key,value\n";
    flatten(d["error"], "error", out);
    return out.str();
  }
  if (d.value("command", "") == "verify") {
    out << "instance,check,pass,detail\n";
    for (const auto& r : d["results"]["rows"]) {
      out << csv_field(r["instance"].get<std::string>()) << ',' << csv_field(r["check"].get<std::string>()) << ','
          << (r["pass"].get<bool>() ? "true" : "false") << ',' << csv_field(r["detail"].get<std::string>()) << '\n';
    }
    return out.str();
  }
  out << "key,value\n";
  flatten(d["inputs"], "inputs", out);
  flatten(d["results"], "results", out);
  out << "pass," << (d.value("pass", false) ? "true" : "false") << '\n';
  return out.str();
}

} // namespace drg::cli
