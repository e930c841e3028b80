// Command-line front end: one descriptor per invocation, report on stdout.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chevchow/commands.hpp"
#include "chevchow/io.hpp"

using namespace chevchow;

namespace {

enum Exit { kOk = 0, kFailure = 1, kInvalid = 2, kParse = 3 };

struct Options {
  std::string command;
  std::string file;
  std::string subgroup;
  std::string format = "json";
  std::size_t cap = kDefaultGroupCap;
  std::optional<std::size_t> max_degree;
  bool rational = false;
  bool integral = false;
};

CommandOptions command_options(const Options& o) {
  CommandOptions c;
  c.subgroup = o.subgroup;
  c.max_degree = o.max_degree;
  c.rational = o.rational;
  c.integral = o.integral;
  c.limits.group_cap = o.cap;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picard groups, Chow rings and structure checks of algebraic groups from finite descriptors"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const std::string& name, const std::string& help, int subgroup) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("descriptor", o.file, "descriptor JSON file")->required();
    if (subgroup == 2) sub->add_option("subgroup", o.subgroup, "subgroup name (or trivial, T, B, G_aff)")->required();
    if (subgroup == 1) sub->add_option("subgroup", o.subgroup, "subgroup name (or trivial, T, B, G_aff)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--cap", o.cap, "enumeration cap for finite groups")->check(CLI::PositiveNumber);
    sub->callback([&o, name] { o.command = name; });
    return sub;
  };

  add("validate", "check a descriptor and its subgroups", 1);
  add("picard", "Pic(G) as NS part plus formal Pic0", 0);
  add("ns", "NS(G), or NS(G/H) with a subgroup", 1);
  auto* chow = add("chow", "presentation of A*(G)", 0);
  chow->add_option("--max-degree", o.max_degree, "truncation degree");
  chow->add_flag("--rational", o.rational, "A*(G)_Q instead of the integral presentation");
  auto* hchow = add("hchow", "A*(G/H)_Q", 2);
  hchow->add_option("--max-degree", o.max_degree, "truncation degree");
  auto* hpic = add("hpic", "Pic(G/H)", 2);
  hpic->add_flag("--integral", o.integral, "integral sequence (H inside G_aff)");
  add("complete", "completeness of G/H", 2);
  add("structure", "Albanese, affinization and fibration checks", 1);
  add("cover", "isogenous cover with factorial G_aff and trivial affinization torsor", 0);
  add("echo", "canonical re-emission of the descriptor", 0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const Format format = o.format == "text" ? Format::text : Format::json;

  std::ifstream in(o.file, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << o.file << "\n";
    return kParse;
  }
  std::ostringstream bytes;
  bytes << in.rdbuf();

  DescriptorDocument doc;
  try {
    doc = parse_descriptor(bytes.str());
  } catch (const SyntaxError& e) {
    std::cerr << o.file << ":" << e.what() << "\n";
    return kParse;
  } catch (const SchemaError& e) {
    std::cerr << o.file << ": schema error at " << e.what() << "\n";
    return kParse;
  }

  try {
    if (o.command == "echo" && format == Format::json) {
      std::cout << emit_descriptor(doc);
      return kOk;
    }
    CommandResult r = run_command(o.command, doc, command_options(o));
    std::cout << emit_report(o.command, doc.group.name, r.result, format);
    return r.ok ? kOk : kInvalid;
  } catch (const ValidationFailed& v) {
    std::cout << emit_report("validate", doc.group.name, v.report(), format);
    std::cerr << "error: descriptor failed validation\n";
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
