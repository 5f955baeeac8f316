#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "realblocks/blocks.hpp"
#include "realblocks/corpus.hpp"
#include "realblocks/errors.hpp"
#include "realblocks/suite.hpp"
#include "realblocks/witness.hpp"

namespace py = pybind11;
using namespace realblocks;

namespace {

PermGroup group_from(const std::vector<std::string>& gens, std::size_t degree) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(parse_cycles(g, degree));
  if (perms.empty()) return PermGroup::trivial(degree);
  return PermGroup::from_generators(perms, degree);
}

std::string analyze(const std::string& corpus_text, const std::vector<std::uint32_t>& primes, const std::string& checks,
                     unsigned jobs) {
  SuiteOptions options;
  options.primes = primes;
  options.checks = parse_checks(checks);
  options.jobs = jobs;
  auto corpus = parse_corpus(corpus_text);
  nlohmann::json report;
  {
    py::gil_scoped_release release;
    report = run_suite(corpus, options);
  }
  return report.dump();
}

py::dict table_summary(const std::vector<std::string>& gens, std::size_t degree) {
  PermGroup g = group_from(gens, degree);
  auto t = TableCache::global().get(g);
  std::vector<std::uint64_t> degrees;
  std::vector<int> indicators;
  for (std::size_t i = 0; i < t->size(); ++i) {
    degrees.push_back(t->degree(i));
    indicators.push_back(t->fs_indicator(i));
  }
  py::dict out;
  out["order"] = g.size();
  out["classes"] = t->classes().size();
  out["degrees"] = degrees;
  out["indicators"] = indicators;
  return out;
}

std::vector<std::vector<std::size_t>> blocks_of(const std::vector<std::string>& gens, std::size_t degree, std::uint32_t p) {
  auto sys = BlockSystem::get(group_from(gens, degree), p);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : sys->blocks()) out.push_back(b.members);
  return out;
}

std::string construct_entry(const std::vector<std::string>& e_gens, const std::vector<std::string>& d_gens,
                            std::size_t degree, std::uint32_t q, const std::string& name) {
  auto ext = construct_cq_extension(group_from(e_gens, degree), group_from(d_gens, degree), q);
  CorpusEntry entry;
  entry.name = name;
  entry.degree = ext.group.degree();
  for (const auto& g : ext.group.generators()) entry.generators.push_back(g.to_cycle_string());
  entry.primes = {2, q};
  entry.order = ext.group.size();
  return entry.to_line();
}

}  // namespace

PYBIND11_MODULE(_realblocks, m) {
  m.doc() = "Blocks and Frobenius-Schur indicators of permutation groups";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  m.attr("__version__") = kToolVersion;
  m.def("analyze", &analyze, py::arg("corpus_text"), py::arg("primes") = std::vector<std::uint32_t>{},
        py::arg("checks") = "", py::arg("jobs") = 1, "Run the suite on corpus text; returns the report as JSON text.");
  m.def("table_summary", &table_summary, py::arg("generators"), py::arg("degree"));
  m.def("blocks", &blocks_of, py::arg("generators"), py::arg("degree"), py::arg("p"),
        "Member rows of each p-block.");
  m.def("construct_entry", &construct_entry, py::arg("e"), py::arg("d"), py::arg("degree"), py::arg("q") = 3,
        py::arg("name") = "witness");
}
