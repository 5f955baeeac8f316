#include "realblocks/corpus.hpp"

#include <boost/algorithm/string.hpp>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "realblocks/errors.hpp"
#include "realblocks/group_algorithms.hpp"

namespace realblocks {

namespace {

std::vector<std::string> split_trim(const std::string& s, const char* sep) {
  std::vector<std::string> parts;
  boost::algorithm::split(parts, s, boost::algorithm::is_any_of(sep));
  for (auto& p : parts) boost::algorithm::trim(p);
  return parts;
}

std::uint64_t parse_uint(const std::string& s, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError(std::string("bad ") + what + " '" + s + "'", line);
  return v;
}

std::string strip_comment(const std::string& raw) {
  auto pos = raw.find('#');
  std::string s = pos == std::string::npos ? raw : raw.substr(0, pos);
  boost::algorithm::trim(s);
  return s;
}

}  // namespace

PermGroup CorpusEntry::group() const {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    try {
      gens.push_back(parse_cycles(g, degree));
    } catch (const InputError& e) {
      throw ParseError(name + ": " + e.what(), line);
    }
  }
  PermGroup grp = PermGroup::from_generators(gens, degree);
  if (order && grp.size() != *order)
    throw InputError(name + ": generators give order " + std::to_string(grp.size()) + ", declared " +
                     std::to_string(*order));
  return grp;
}

std::string CorpusEntry::to_line() const {
  std::string out = name + " | " + std::to_string(degree) + " | " + boost::algorithm::join(generators, ";") + " | ";
  for (std::size_t i = 0; i < primes.size(); ++i) out += (i ? "," : "") + std::to_string(primes[i]);
  if (order) out += " | order=" + std::to_string(*order);
  if (!tags.empty()) out += " | tags=" + boost::algorithm::join(tags, ",");
  return out;
}

CorpusEntry parse_corpus_line(const std::string& raw, std::size_t line) {
  std::string s = strip_comment(raw);
  auto fields = split_trim(s, "|");
  if (fields.size() < 4) throw ParseError("expected 'name | degree | generators | primes'", line);
  CorpusEntry e;
  e.line = line;
  e.name = fields[0];
  if (e.name.empty()) throw ParseError("empty name", line);
  e.degree = parse_uint(fields[1], line, "degree");
  if (e.degree == 0) throw ParseError("degree must be positive", line);
  for (auto& g : split_trim(fields[2], ";")) {
    if (g.empty()) continue;
    try {
      parse_cycles(g, e.degree);
    } catch (const InputError& ex) {
      throw ParseError(std::string("bad generator '") + g + "': " + ex.what(), line);
    }
    e.generators.push_back(g);
  }
  for (auto& p : split_trim(fields[3], ",")) {
    if (p.empty()) continue;
    auto v = parse_uint(p, line, "prime");
    if (!is_prime(v)) throw ParseError("'" + p + "' is not prime", line);
    e.primes.push_back(static_cast<std::uint32_t>(v));
  }
  for (std::size_t i = 4; i < fields.size(); ++i) {
    auto eq = fields[i].find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + fields[i] + "'", line);
    std::string key = boost::algorithm::trim_copy(fields[i].substr(0, eq));
    std::string value = boost::algorithm::trim_copy(fields[i].substr(eq + 1));
    if (key == "order") {
      e.order = parse_uint(value, line, "order");
    } else if (key == "tags") {
      for (auto& t : split_trim(value, ","))
        if (!t.empty()) e.tags.push_back(t);
    } else {
      throw ParseError("unknown key '" + key + "'", line);
    }
  }
  return e;
}

std::vector<CorpusEntry> parse_corpus(const std::string& text) {
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (strip_comment(line).empty()) continue;
    auto e = parse_corpus_line(line, n);
    if (!names.insert(e.name).second) throw ParseError("duplicate name '" + e.name + "'", n);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read corpus file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

std::vector<DefectPairEntry> load_defect_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read defect pair list " + path);
  std::vector<DefectPairEntry> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    auto fields = split_trim(s, "|");
    if (fields.size() != 4) throw ParseError("expected 'name | |E| | E generators | D generators'", n);
    std::size_t degree = parse_uint(fields[1], n, "order");
    std::vector<Permutation> eg, dg;
    for (auto& g : split_trim(fields[2], ";")) eg.push_back(parse_cycles(g, degree));
    for (auto& g : split_trim(fields[3], ";")) dg.push_back(parse_cycles(g, degree));
    DefectPairEntry e{fields[0], PermGroup::from_generators(eg, degree), PermGroup::from_generators(dg, degree)};
    if (e.e.size() != degree || !e.d.is_subgroup_of(e.e) || e.e.size() != 2 * e.d.size())
      throw ParseError("not a pair of index 2 with E regular", n);
    out.push_back(std::move(e));
  }
  return out;
}

std::string data_path(const std::string& file) {
#ifdef REALBLOCKS_DATA_DIR
  return std::string(REALBLOCKS_DATA_DIR) + "/" + file;
#else
  return "data/" + file;
#endif
}

std::string default_defect_pairs_path() { return data_path("defect_pairs.txt"); }

}  // namespace realblocks
