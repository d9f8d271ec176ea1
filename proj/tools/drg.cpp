#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "drg/cli.hpp"

namespace {

void add_common(CLI::App* sub, drg::cli::RunConfig& c, std::string& format) {
  sub->add_option("--cap", c.cap, "Maximum number of group elements to materialize");
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output", c.output, "Write the report to this file instead of stdout");
}

void add_classical(CLI::App* sub, drg::cli::RunConfig& c) {
  sub->add_option("--spec", c.spec, "Classical-group document {family, n, q} or a path to one");
  sub->add_option("--family", c.family, "GL, SL, GU, SU, Sp, O+, O-, SO");
  sub->add_option("--n", c.n, "Dimension");
  sub->add_option("--q", c.q, "Field size");
}

} // namespace

int main(int argc, char** argv) {
  drg::cli::RunConfig c;
  std::string format = "json";
  CLI::App app{"Derangement proportions, coset bounds and conjugacy-class counts"};
  app.require_subcommand(1);

  for (const char* name : {"delta", "coset-delta", "exceptional", "hall-build"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--spec", c.spec, "Fixture name, inline JSON or path")->required();
    add_common(sub, c, format);
  }
  app.get_subcommand("delta")->description("Derangement proportion of a permutation action");
  app.get_subcommand("coset-delta")->description("Derangement proportion of a coset aG");
  app.get_subcommand("exceptional")->description("Common-orbital test for a coset setting");
  app.get_subcommand("hall-build")->description("Exceptional setting built from a normal Hall subgroup");

  auto* weyl = app.add_subcommand("weyl-delta", "Class mass of a Weyl-group coset");
  weyl->add_option("--type", c.weyl_type, "A, B, D or G2")->required();
  weyl->add_option("--rank", c.rank, "Rank")->required();
  weyl->add_option("--young", c.young, "Young subgroup block sizes (type A)")->delimiter(',');
  weyl->add_option("--subgroup", c.weyl_subgroup, "D (inside B) or A2 (inside G2)");
  weyl->add_flag("--sign-flip", c.nontrivial_coset, "Use the non-identity coset of D in B");
  add_common(weyl, c, format);

  auto* cc = app.add_subcommand("class-count", "Number of conjugacy classes of a classical group");
  add_classical(cc, c);
  cc->add_option("--method", c.method, "brute, genfun or both")->check(CLI::IsMember({"brute", "genfun", "both"}));
  add_common(cc, c, format);

  auto* cb = app.add_subcommand("check-bound", "Class count against the explicit bound for its family");
  add_classical(cb, c);
  add_common(cb, c, format);

  auto* rss = app.add_subcommand("rss", "Regular semisimple proportion and semisimple class count");
  add_classical(rss, c);
  add_common(rss, c, format);

  auto* lim = app.add_subcommand("limit", "Truncated limiting class-count constant");
  lim->add_option("--family", c.family, "GL, GU, Sp, O+, O-, SO")->required();
  lim->add_option("--q", c.q, "Field size")->required();
  lim->add_option("--depth", c.depth, "Number of factors");
  add_common(lim, c, format);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", c.suite, "bounds, cosets, hall, lemmas, classical, weyl, limits, shadow")->required();
  add_common(ver, c, format);

  auto* cor = app.add_subcommand("corpus", "Print a built-in corpus as JSON");
  cor->add_option("name", c.suite, "Corpus name")->required();
  add_common(cor, c, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : drg::cli::kExitInvalid;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  c.format = format == "csv" ? drg::cli::Format::Csv : drg::cli::Format::Json;

  drg::cli::Report report = drg::cli::run(c);
  const std::string text = drg::cli::render(report, c.format);
  if (c.output) {
    std::ofstream out(*c.output);
    if (!out) {
      std::cerr << "cannot write " << *c.output << "\n";
      return drg::cli::kExitInvalid;
    }
    out << text;
  } else {
    std::cout << text;
  }
  if (report.document.contains("error")) std::cerr << report.document["error"]["message"].get<std::string>() << "\n";
  return report.exit_code;
}
