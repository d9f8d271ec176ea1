#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "drg/cli.hpp"
#include "drg/corpus.hpp"
#include "drg/fixtures.hpp"

namespace drg::cli {

using nlohmann::json;
namespace fx = drg::fixtures;

namespace {

void reject_unknown(const json& doc, const std::set<std::string>& allowed, const std::string& where) {
  if (!doc.is_object()) throw Error(ErrorKind::InvalidInput, where + " must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!allowed.count(key)) throw Error(ErrorKind::InvalidInput, "unknown field '" + key + "' in " + where);
  }
}

const json& require(const json& doc, const std::string& key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(ErrorKind::InvalidInput, "missing field '" + key + "' in " + where);
  return *it;
}

std::uint64_t positive_int(const json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
    throw Error(ErrorKind::InvalidInput, "field '" + field + "' must be a positive integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<Permutation> parse_list(const json& v, std::size_t degree, const std::string& field) {
  if (!v.is_array()) throw Error(ErrorKind::InvalidInput, "field '" + field + "' must be an array of permutations");
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(parse_permutation(v[i], degree, field + "[" + std::to_string(i) + "]"));
  }
  if (out.empty()) out.push_back(Permutation::identity(degree));
  return out;
}

} // namespace

Permutation parse_permutation(const json& value, std::size_t degree, const std::string& field) {
  try {
    if (value.is_string()) return Permutation::from_cycles(value.get<std::string>(), degree);
    if (!value.is_array()) throw Error(ErrorKind::InvalidInput, "expected an image array or cycle string");
    std::vector<Point> img;
    for (const auto& x : value) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() > 65535) {
        throw Error(ErrorKind::InvalidGenerator, "images must be integers in [0, degree)");
      }
      img.push_back(static_cast<Point>(x.get<std::int64_t>()));
    }
    if (img.size() != degree) {
      throw Error(ErrorKind::DegreeMismatch,
                  "has " + std::to_string(img.size()) + " images, degree is " + std::to_string(degree));
    }
    return Permutation::from_images(std::move(img));
  } catch (const Error& e) {
    throw Error(e.kind(), "field '" + field + "': " + e.what());
  }
}

ActionSpec parse_action_spec(const json& doc, std::size_t cap) {
  reject_unknown(doc, {"name", "degree", "generators", "action", "normal", "element"}, "group spec");
  const std::uint64_t degree = positive_int(require(doc, "degree", "group spec"), "degree");
  if (degree > 65535) throw Error(ErrorKind::TooLarge, "field 'degree' exceeds 65535");
  std::string name = "group";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(ErrorKind::InvalidInput, "field 'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  PermGroup group = PermGroup::close(parse_list(require(doc, "generators", "group spec"), degree, "generators"), cap);

  std::optional<GroupAction> action;
  if (doc.contains("action")) {
    const json& a = doc["action"];
    reject_unknown(a, {"kind", "subgroup", "k"}, "action");
    const json& kind = require(a, "kind", "action");
    if (!kind.is_string()) throw Error(ErrorKind::InvalidInput, "field 'action.kind' must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "natural") {
      action = GroupAction::natural(group);
    } else if (k == "cosets") {
      auto gens = parse_list(require(a, "subgroup", "action"), degree, "action.subgroup");
      action = GroupAction::cosets(group, subgroup(group, gens, cap));
    } else if (k == "subsets") {
      action = GroupAction::subsets(group, positive_int(require(a, "k", "action"), "action.k"));
    } else {
      throw Error(ErrorKind::InvalidInput, "field 'action.kind' must be natural, cosets or subsets");
    }
  } else {
    action = GroupAction::natural(group);
  }

  ActionSpec spec{name, *action, std::nullopt, std::nullopt};
  if (doc.contains("normal")) spec.normal = subgroup(group, parse_list(doc["normal"], degree, "normal"), cap);
  if (doc.contains("element")) spec.element = parse_permutation(doc["element"], degree, "element");
  return spec;
}

ClassicalSpecDoc parse_classical_spec(const json& doc) {
  reject_unknown(doc, {"family", "n", "q"}, "classical spec");
  const json& f = require(doc, "family", "classical spec");
  if (!f.is_string()) throw Error(ErrorKind::InvalidInput, "field 'family' must be a string");
  ClassicalSpecDoc s{parse_family(f.get<std::string>()), 0, 0};
  s.n = positive_int(require(doc, "n", "classical spec"), "n");
  s.q = static_cast<unsigned>(positive_int(require(doc, "q", "classical spec"), "q"));
  return s;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names{"S{n}-natural", "A{n}-natural", "C{n}-regular", "D8-square", "S{n}-pairs",
                                 "AGL1-{q}",     "AGL1half-{q}", "AGammaL1-{q}", "PGL2-{q}", "PSL2-{q}",
                                 "PSL27-7",      "PSL27-8"};
  for (const auto& c : corpus::cosets()) names.push_back(c.name);
  for (const auto& h : corpus::hall_pairs()) names.push_back("hall:" + h.name);
  return names;
}

json fixture(const std::string& name) {
  std::smatch m;
  static const std::regex sym(R"(S(\d+)-natural)"), alt(R"(A(\d+)-natural)"), cyc(R"(C(\d+)-regular)"),
      pairs(R"(S(\d+)-pairs)"), agl(R"(AGL1-(\d+))"), half(R"(AGL1half-(\d+))"), gam(R"(AGammaL1-(\d+))"),
      pgl(R"(PGL2-(\d+))"), psl(R"(PSL2-(\d+))");
  auto num = [&]() { return static_cast<unsigned>(std::stoul(m[1].str())); };
  auto plain = [&](const PermGroup& g) { return corpus::group_document(name, g); };
  if (std::regex_match(name, m, sym)) return plain(fx::symmetric(num()));
  if (std::regex_match(name, m, alt)) return plain(fx::alternating(num()));
  if (std::regex_match(name, m, cyc)) return plain(fx::cyclic(num()));
  if (std::regex_match(name, m, pairs)) {
    json doc = plain(fx::symmetric(num()));
    doc["action"] = {{"kind", "subsets"}, {"k", 2}};
    return doc;
  }
  if (std::regex_match(name, m, agl)) return plain(fx::agl1(num()));
  if (std::regex_match(name, m, half)) return plain(fx::half_agl1(num()));
  if (std::regex_match(name, m, gam)) return plain(fx::agaml1(num()));
  if (std::regex_match(name, m, pgl)) return plain(fx::pgl2(num()));
  if (std::regex_match(name, m, psl)) return plain(fx::psl2(num()));
  if (name == "PSL27-7") return plain(fx::gl32_on_points());
  if (name == "PSL27-8") return plain(fx::psl2(7));
  if (name == "D8-square") return plain(fx::dihedral(4));
  for (const auto& doc : corpus::describe("cosets")) {
    if (doc["name"] == name) return doc;
  }
  throw Error(ErrorKind::InvalidInput, "unknown fixture '" + name + "'");
}

json load_spec(const std::string& spec) {
  auto parse = [](const std::string& text, const std::string& source) {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::InvalidInput, "cannot parse " + source + ": " + e.what());
    }
  };
  if (spec.empty()) throw Error(ErrorKind::InvalidInput, "missing --spec");
  if (spec.front() == '{') return parse(spec, "inline spec");
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), spec);
  }
  return fixture(spec);
}

} // namespace drg::cli
