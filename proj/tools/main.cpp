#include <CLI11.hpp>
#include <boost/algorithm/string.hpp>
#include <iostream>
#include <regex>

#include "realblocks/blocks.hpp"
#include "realblocks/corpus.hpp"
#include "realblocks/errors.hpp"
#include "realblocks/suite.hpp"
#include "realblocks/witness.hpp"

using namespace realblocks;

namespace {

std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> parts;
  boost::algorithm::split(parts, text, boost::algorithm::is_any_of(";"));
  std::vector<std::string> out;
  for (auto& p : parts) {
    boost::algorithm::trim(p);
    if (!p.empty()) out.push_back(p);
  }
  return out;
}

std::size_t largest_point(const std::vector<std::string>& gens) {
  static const std::regex number("[0-9]+");
  std::size_t n = 1;
  for (const auto& g : gens)
    for (auto it = std::sregex_iterator(g.begin(), g.end(), number); it != std::sregex_iterator(); ++it)
      n = std::max<std::size_t>(n, std::stoul(it->str()));
  return n;
}

PermGroup group_from(const std::vector<std::string>& gens, std::size_t degree) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(parse_cycles(g, degree));
  if (perms.empty()) return PermGroup::trivial(degree);
  return PermGroup::from_generators(perms, degree);
}

int run_analyze(const std::string& corpus_path, const std::vector<std::uint32_t>& primes, const std::string& checks,
                const std::string& out, const std::string& cache, unsigned jobs) {
  SuiteOptions options;
  options.primes = primes;
  options.checks = parse_checks(checks);
  options.jobs = std::max(1u, jobs);
  for (auto p : primes)
    if (p < 2) throw InputError("--prime must be a prime");
  if (!cache.empty()) TableCache::global().set_directory(cache);
  auto corpus = load_corpus(corpus_path);
  auto report = run_suite(corpus, options);
  emit_report(report, out);
  std::size_t failures = count_failures(report);
  if (out != "-") {
    std::cerr << corpus.size() << " entries, " << failures << " failures\n";
  }
  return failures == 0 ? 0 : 1;
}

int run_construct(const std::string& e_text, const std::string& d_text, std::uint32_t q, std::size_t degree,
                  const std::string& emit, const std::string& name) {
  auto e_gens = split_generators(e_text);
  auto d_gens = split_generators(d_text);
  if (e_gens.empty()) throw InputError("--e needs at least one generator");
  if (degree == 0) {
    auto all = e_gens;
    all.insert(all.end(), d_gens.begin(), d_gens.end());
    degree = largest_point(all);
  }
  PermGroup e = group_from(e_gens, degree);
  PermGroup d = group_from(d_gens, degree);
  if (!d.is_subgroup_of(e)) throw InputError("D is not a subgroup of E");
  auto ext = construct_cq_extension(e, d, q);

  CorpusEntry entry;
  entry.name = name.empty() ? "C" + std::to_string(q) + "xE" + std::to_string(e.size()) : name;
  entry.degree = ext.group.degree();
  for (const auto& g : ext.group.generators()) entry.generators.push_back(g.to_cycle_string());
  entry.primes = {2, q};
  entry.order = ext.group.size();
  entry.tags = {"witness"};
  if (emit == "entry") {
    std::cout << entry.to_line() << "\n";
  } else {
    throw InputError("unknown --emit value '" + emit + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real blocks and Frobenius-Schur indicators of finite permutation groups"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Analyze every group in a corpus file");
  std::string corpus_path, out = "-", checks, cache;
  std::vector<std::uint32_t> primes;
  unsigned jobs = 1;
  analyze->add_option("corpus", corpus_path, "Corpus file")->required();
  analyze->add_option("--prime", primes, "Prime to analyze (repeatable); overrides the corpus");
  analyze->add_option("--checks", checks, "Comma list of A,B,C,loc,gm,podd,hhs,solv,star,props");
  analyze->add_option("--out", out, "Report path, - for stdout");
  analyze->add_option("--cache", cache, "Directory for cached character tables");
  analyze->add_option("--jobs", jobs, "Worker threads");

  auto* construct = app.add_subcommand("construct", "Build C_q x| E with C_E(C_q) = D");
  std::string e_text, d_text, emit = "entry", name;
  std::uint32_t q = 3;
  std::size_t degree = 0;
  construct->add_option("--e", e_text, "Generators of E, separated by ';'")->required();
  construct->add_option("--d", d_text, "Generators of D, separated by ';'")->required();
  construct->add_option("--q", q, "Odd prime q");
  construct->add_option("--degree", degree, "Degree of E (default: largest point mentioned)");
  construct->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"entry"}));
  construct->add_option("--name", name, "Entry name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return run_analyze(corpus_path, primes, checks, out, cache, jobs);
    return run_construct(e_text, d_text, q, degree, emit, name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
