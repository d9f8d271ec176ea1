#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "drg/classcount.hpp"
#include "drg/cli.hpp"
#include "drg/derange.hpp"
#include "drg/weyl.hpp"

namespace py = pybind11;
using namespace drg;

namespace {

// Ratios cross the boundary as (numerator, denominator) decimal strings; the
// Python side turns them into fractions.Fraction.
std::pair<std::string, std::string> split(const ExactRatio& r) { return {r.numerator().str(), r.denominator().str()}; }

PermGroup group_from(std::size_t degree, const std::vector<std::vector<Point>>& generators, std::size_t cap) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.size() != degree) throw Error(ErrorKind::DegreeMismatch, "generator length differs from degree");
    gens.push_back(Permutation::from_images(g));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(degree));
  return PermGroup::close(gens, cap);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Derangement proportions and conjugacy-class counts";
  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.attr("DEFAULT_CAP") = kDefaultCap;

  m.def(
      "derangement_proportion",
      [](std::size_t degree, const std::vector<std::vector<Point>>& generators, std::size_t cap) {
        return split(delta(GroupAction::natural(group_from(degree, generators, cap))).delta);
      },
      py::arg("degree"), py::arg("generators"), py::arg("cap") = kDefaultCap);

  m.def(
      "group_order",
      [](std::size_t degree, const std::vector<std::vector<Point>>& generators, std::size_t cap) {
        return group_from(degree, generators, cap).order();
      },
      py::arg("degree"), py::arg("generators"), py::arg("cap") = kDefaultCap);

  m.def(
      "class_count",
      [](const std::string& family, std::size_t n, unsigned q, const std::string& method, std::size_t cap) {
        ClassCountRecord r = class_count(parse_family(family), n, q, method, cap);
        return std::make_pair(r.k, r.k_p);
      },
      py::arg("family"), py::arg("n"), py::arg("q"), py::arg("method") = "brute", py::arg("cap") = kDefaultCap);

  m.def(
      "gl_class_count",
      [](std::size_t n, std::uint64_t q) { return k_gl_genfun(n, q).str(); }, py::arg("n"), py::arg("q"));

  m.def(
      "limit_partial",
      [](const std::string& family, unsigned q, std::size_t depth) {
        LimitEval e = limit_partial(parse_family(family), q, depth);
        return std::make_tuple(e.item, split(e.value));
      },
      py::arg("family"), py::arg("q"), py::arg("depth") = 40);

  m.def(
      "young_limiting_delta",
      [](std::size_t n, std::size_t k, std::size_t cap) {
        WeylGroup w = weyl_group(WeylType::A, n - 1, cap);
        return split(limiting_delta_parabolic(w, young_subgroup(w, {k, n - k})).delta);
      },
      py::arg("n"), py::arg("k"), py::arg("cap") = kDefaultCap);

  m.def(
      "verify",
      [](const std::string& suite, std::size_t cap) {
        std::vector<std::tuple<std::string, std::string, bool, std::string>> rows;
        for (const auto& r : cli::verify_suite(suite, cap).rows) rows.emplace_back(r.instance, r.check, r.pass, r.detail);
        return rows;
      },
      py::arg("suite"), py::arg("cap") = kDefaultCap);

  m.def(
      "run_json",
      [](const std::string& subcommand, const std::string& spec, std::size_t cap) {
        cli::RunConfig c;
        c.subcommand = subcommand;
        c.spec = spec;
        c.cap = cap;
        cli::Report r = cli::run(c);
        return std::make_pair(r.document.dump(), r.exit_code);
      },
      py::arg("subcommand"), py::arg("spec"), py::arg("cap") = kDefaultCap,
      "Runs a spec-driven command (delta, coset-delta, exceptional, hall-build, class-count, check-bound, rss) "
      "and returns (json document, exit code).");
}
