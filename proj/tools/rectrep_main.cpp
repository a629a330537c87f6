#include "rectrep/cli/commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>

namespace {

struct Flags {
  rectrep::cli::CommandOptions opts;
  std::size_t max_rank = 0;
  std::uint64_t max_dim = 0;
  std::uint64_t seed = 0;
  bool json = true;
  bool pretty = false;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--algebra", f.opts.algebra, "semisimple algebra, e.g. A1*B3");
  sub->add_option("--rep", f.opts.rep, "representation, e.g. \"sym4*spin + triv*spin\"");
  sub->add_option("--max-rank", f.max_rank, "rank bound (census: n)");
  sub->add_option("--max-dim", f.max_dim, "dimension bound");
  sub->add_option("--seed", f.seed, "seed for the unimodular transform (rect)");
  sub->add_flag("--json,!--no-json", f.json, "JSON report on stdout (default on)");
  sub->add_flag("--pretty", f.pretty, "summary table on stderr");
  sub->add_flag("--dry-run", f.opts.dry_run, "print estimated counts only");
  sub->add_flag("--exhaustive", f.opts.exhaustive, "search whole algebras instead of blocks");
  sub->add_option("--exclude", f.opts.exclude, "catalogue kinds to drop (verify-catalogue)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rectrep::cli;
  CLI::App app{"rectrep: rectangular representations of semisimple Lie algebras"};
  app.require_subcommand(1);
  Flags flags;
  std::string chosen;
  const std::map<std::string, std::string> about{
      {"char", "formal character of a representation"},
      {"rect", "rectangularity certificate and lengths"},
      {"decompose", "split a faithful rectangular representation into catalogue factors"},
      {"enumerate", "all faithful rectangular representations within the bounds"},
      {"verify-catalogue", "compare enumeration with the catalogue closure"},
      {"verify-howe", "multiplicity-free irreducibles against the published list"},
      {"census", "root-plane and long-root censuses of B_n (n = --max-rank)"},
  };
  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name, about.at(name));
    add_flags(sub, flags);
    sub->callback([&chosen, name] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) {
    if (sub->count("--max-rank")) flags.opts.max_rank = flags.max_rank;
    if (sub->count("--max-dim")) flags.opts.max_dim = flags.max_dim;
    if (sub->count("--seed")) flags.opts.seed = flags.seed;
  }

  const CommandResult res = run_command(chosen, flags.opts);
  if (flags.json) std::cout << res.report.dump(2) << "\n";
  if (flags.pretty) std::cerr << res.table;
  return res.exit_code;
}
