#include "realblocks/suite.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/asio/post.hpp>
#include <boost/asio/thread_pool.hpp>
#include <fstream>
#include <iostream>

#include "realblocks/errors.hpp"
#include "realblocks/group_algorithms.hpp"

namespace realblocks {

using nlohmann::json;

std::set<std::string> parse_checks(const std::string& text) {
  std::vector<std::string> parts;
  boost::algorithm::split(parts, text, boost::algorithm::is_any_of(","));
  std::set<std::string> out;
  for (auto& p : parts) {
    boost::algorithm::trim(p);
    if (p.empty()) continue;
    if (std::find(kCheckNames.begin(), kCheckNames.end(), p) == kCheckNames.end())
      throw InputError("unknown check '" + p + "'");
    out.insert(p);
  }
  return out;
}

namespace {

json to_json(const VerdictRecord& r) {
  json j{{"statement", r.statement}, {"block", r.block}, {"status", to_string(r.status)}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

json generators_json(const PermGroup& g) {
  json out = json::array();
  for (const auto& x : g.generators()) out.push_back(x.to_cycle_string());
  return out;
}

// A verifier that throws produces a fail record carrying the error.
template <class F>
void run_guarded(std::vector<VerdictRecord>& out, const std::string& statement, const std::string& block, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    VerdictRecord r;
    r.statement = statement;
    r.block = block;
    r.status = Status::fail;
    r.reason = std::string("error: ") + e.what();
    out.push_back(std::move(r));
  }
}

}  // namespace

std::vector<VerdictRecord> verify_block(const BlockAnalysis& a, const std::set<std::string>& checks) {
  auto on = [&](const char* c) { return checks.empty() || checks.count(c) > 0; };
  std::vector<VerdictRecord> out;
  auto one = [&](const char* check, const char* st, VerdictRecord (*f)(const BlockAnalysis&)) {
    if (on(check)) run_guarded(out, st, a.id(), [&] { out.push_back(f(a)); });
  };
  one("A", "thmA", verify_theorem_A);
  one("B", "conjB", verify_conjecture_B);
  one("C", "conjC", verify_conjecture_C);
  one("loc", "thmLoc", verify_theorem_loc);
  one("loc", "lemBrauer", verify_lemma_brauer);
  if (on("gm")) {
    run_guarded(out, "gowMurray", a.id(), [&] {
      auto v = verify_gowmurray(a);
      out.insert(out.end(), v.begin(), v.end());
    });
  }
  one("gm", "corCor", verify_corollary);
  one("gm", "thmAbel", verify_abelian);
  one("podd", "podd", verify_podd);
  one("hhs", "hhs", verify_hhs);
  one("solv", "solvIdentity", verify_solvable_identity);
  one("star", "starCheck", verify_star);
  one("props", "pairUnique", verify_pair_uniqueness);
  return out;
}

json analyze_group(const std::string& name, const PermGroup& g, const std::vector<std::uint32_t>& primes,
                   const SuiteOptions& options) {
  json out;
  out["name"] = name;
  out["degree"] = g.degree();
  out["order"] = g.size();
  auto table = TableCache::global().get(g);
  const auto& cc = table->classes();
  out["classes"] = cc.size();
  out["exponent"] = cc.exponent();
  out["hash"] = group_hash(g);
  std::vector<int> indicators;
  for (std::size_t i = 0; i < table->size(); ++i) indicators.push_back(table->fs_indicator(i));
  out["indicators"] = indicators;
  auto on = [&](const char* c) { return options.checks.empty() || options.checks.count(c) > 0; };
  std::vector<VerdictRecord> props;
  if (on("props")) {
    run_guarded(props, "orthogonality", "table", [&] { props.push_back(verify_orthogonality(*table)); });
    run_guarded(props, "sqrtIdentity", "table", [&] { props.push_back(verify_square_root_identity(*table)); });
  }
  json plist = json::array();
  for (auto p : primes) {
    json pj;
    pj["p"] = p;
    auto sys = BlockSystem::get(g, p, 0, options.generator_choice);
    pj["field"] = sys->reducer().description();
    if (on("props")) {
      std::vector<VerdictRecord> ps;
      run_guarded(ps, "partitionStable", "p" + std::to_string(p), [&] { ps.push_back(verify_partition_stable(*sys)); });
      props.insert(props.end(), ps.begin(), ps.end());
    }
    json blocks = json::array();
    for (std::size_t i = 0; i < sys->size(); ++i) {
      const Block& b = (*sys)[i];
      BlockAnalysis a(sys, i);
      json bj;
      bj["index"] = i;
      bj["members"] = b.members;
      std::vector<std::uint64_t> degrees;
      std::vector<int> eps;
      for (auto row : b.members) {
        degrees.push_back(table->degree(row));
        eps.push_back(table->fs_indicator(row));
      }
      bj["degrees"] = degrees;
      bj["heights"] = b.heights;
      std::sort(eps.begin(), eps.end());
      bj["indicators"] = eps;
      bj["defect"] = b.defect;
      bj["defect_class"] = b.defect_class;
      bj["principal"] = b.is_principal;
      bj["real"] = b.is_real;
      bj["D"] = {{"order", b.D().size()}, {"generators", generators_json(b.D())}};
      if (b.defect_pair) bj["E"] = {{"order", b.E().size()}, {"generators", generators_json(b.E())}};
      try {
        bj["certificate"] = to_string(a.certificate());
      } catch (const std::exception& e) {
        bj["certificate"] = std::string("error: ") + e.what();
      }
      json verdicts = json::array();
      for (const auto& r : verify_block(a, options.checks)) verdicts.push_back(to_json(r));
      bj["verdicts"] = verdicts;
      blocks.push_back(bj);
    }
    pj["blocks"] = blocks;
    plist.push_back(pj);
  }
  json pv = json::array();
  for (const auto& r : props) pv.push_back(to_json(r));
  out["properties"] = pv;
  out["primes"] = plist;
  return out;
}

json run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options) {
  std::vector<json> results(corpus.size());
  auto work = [&](std::size_t i) {
    const auto& e = corpus[i];
    try {
      auto primes = options.primes.empty() ? e.primes : options.primes;
      results[i] = analyze_group(e.name, e.group(), primes, options);
      if (!e.tags.empty()) results[i]["tags"] = e.tags;
    } catch (const std::exception& ex) {
      results[i] = json{{"name", e.name}, {"error", ex.what()}};
    }
  };
  if (options.jobs <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
  } else {
    boost::asio::thread_pool pool(options.jobs);
    for (std::size_t i = 0; i < corpus.size(); ++i) boost::asio::post(pool, [&, i] { work(i); });
    pool.join();
  }

  json summary = json::object();
  std::size_t errors = 0;
  auto count = [&](const json& v) {
    auto& s = summary[v["statement"].get<std::string>()];
    if (s.is_null()) s = json{{"pass", 0}, {"fail", 0}, {"skipped", 0}};
    s[v["status"].get<std::string>()] = s[v["status"].get<std::string>()].get<int>() + 1;
  };
  for (const auto& r : results) {
    if (r.contains("error")) {
      ++errors;
      continue;
    }
    for (const auto& v : r["properties"]) count(v);
    for (const auto& p : r["primes"])
      for (const auto& b : p["blocks"])
        for (const auto& v : b["verdicts"]) count(v);
  }
  json report;
  report["schema"] = "realblocks-report";
  report["schema_version"] = kReportSchema;
  report["tool_version"] = kToolVersion;
  report["field_embedding"] = {{"generator_choice", options.generator_choice},
                               {"modulus", "lexicographically first primitive polynomial"}};
  report["groups"] = results;
  report["summary"] = {{"statements", summary}, {"entries", corpus.size()}, {"entry_errors", errors}};
  return report;
}

std::size_t count_failures(const json& report) {
  std::size_t n = report["summary"]["entry_errors"].get<std::size_t>();
  for (const auto& [k, v] : report["summary"]["statements"].items()) n += v["fail"].get<std::size_t>();
  return n;
}

void emit_report(const json& report, const std::string& path) {
  std::string text = report.dump(2) + "\n";
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write report to " + path);
  out << text;
}

}  // namespace realblocks
