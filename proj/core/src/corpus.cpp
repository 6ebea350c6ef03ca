#include "congruma/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "congruma/parser.hpp"
#include "congruma/residuated.hpp"
#include "congruma/spectrum.hpp"

namespace congruma {

namespace {

struct ManifestSection {
  std::string name;
  std::map<std::string, std::string> keys;
  int line = 0;
};

std::vector<ManifestSection> parse_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus manifest '" + path.string() + "'");
  std::vector<ManifestSection> sections;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      // keep '#' inside quotes
      bool in_quotes = false;
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_quotes = !in_quotes;
        if (line[i] == '#' && !in_quotes) {
          line.erase(i);
          break;
        }
      }
    }
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError(number, "malformed section header '" + line + "'");
      sections.push_back({line.substr(1, line.size() - 2), {}, number});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(number, "expected 'key = value', got '" + line + "'");
    if (sections.empty())
      throw ParseError(number, "key outside of any [section]");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto trim = [](std::string s) {
      auto f = s.find_first_not_of(" \t");
      auto l = s.find_last_not_of(" \t");
      return f == std::string::npos ? std::string() : s.substr(f, l - f + 1);
    };
    key = trim(key);
    value = trim(value);
    if (!value.empty() && value.front() == '"') {
      if (value.size() < 2 || value.back() != '"')
        throw ParseError(number, "unterminated string value");
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) throw ParseError(number, "empty key");
    if (!sections.back().keys.emplace(key, value).second)
      throw ParseError(number, "duplicate key '" + key + "'");
  }
  return sections;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

Verdict3 parse_verdict(const std::string& v, const std::string& where) {
  if (v == "yes") return Verdict3::Yes;
  if (v == "no") return Verdict3::No;
  if (v == "na" || v == "n/a") return Verdict3::NA;
  throw Error(where + ": expected yes|no|na, got '" + v + "'");
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw Error("corpus directory '" + dir.string() + "' does not exist");

  std::vector<std::filesystem::path> ua_files, hom_files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".ua") ua_files.push_back(e.path());
    if (e.path().extension() == ".hom") hom_files.push_back(e.path());
  }
  std::sort(ua_files.begin(), ua_files.end());
  std::sort(hom_files.begin(), hom_files.end());

  Document pool;
  for (const auto& f : ua_files) {
    Document d = parse_file(f);
    for (auto& a : d.algebras) {
      if (pool.find_algebra(a->name))
        throw Error("corpus: duplicate algebra '" + a->name + "' in " +
                    f.string());
      pool.algebras.push_back(a);
    }
    if (!d.homs.empty())
      throw Error("corpus: hom blocks belong in .hom files, found one in " +
                  f.string());
  }
  std::map<std::string, Homomorphism> homs;
  for (const auto& f : hom_files) {
    Document d = parse_file(f);
    for (auto& a : d.algebras) {
      if (pool.find_algebra(a->name))
        throw Error("corpus: duplicate algebra '" + a->name + "' in " +
                    f.string());
      pool.algebras.push_back(a);
    }
    for (const auto& spec : d.homs) {
      if (homs.count(spec.name))
        throw Error("corpus: duplicate hom '" + spec.name + "' in " +
                    f.string());
      homs.emplace(spec.name, resolve_hom(spec, pool, dir));
    }
  }

  std::vector<CorpusEntry> entries;
  for (const auto& sec : parse_manifest(dir / "expected.toml")) {
    CorpusEntry e;
    e.id = sec.name;
    e.group = sec.name.substr(0, sec.name.find('_'));

    auto it = homs.find(sec.name);
    if (it != homs.end())
      e.hom = it->second;
    else if (auto a = pool.find_algebra(sec.name))
      e.algebra = a;
    else
      throw Error("corpus manifest section [" + sec.name +
                  "] matches no algebra or hom in " + dir.string());

    for (const auto& [key, value] : sec.keys) {
      if (key == "con_size")
        e.con_size = std::stoi(value);
      else if (key == "con")
        e.con_blocks = split_ws(value);
      else if (key == "spec")
        e.spec_blocks = split_ws(value);
      else if (key == "kernel")
        e.kernel_blocks = value;
      else if (key == "admissible")
        e.admissible = value == "yes";
      else if (key == "gu")
        e.gu = parse_verdict(value, e.id);
      else if (key == "lo")
        e.lo = parse_verdict(value, e.id);
      else if (key == "filt_size")
        e.filt_size = std::stoi(value);
      else if (key == "filt_iso")
        e.filt_iso = value == "yes";
      else
        throw Error("corpus manifest [" + sec.name + "]: unknown key '" + key +
                    "'");
    }
    if (e.hom && !e.admissible)
      throw Error("corpus manifest [" + sec.name +
                  "]: morphism entries need an 'admissible' key");
    entries.push_back(std::move(e));
  }
  return entries;
}

namespace {

std::string join_sorted(std::vector<std::string> xs) {
  std::sort(xs.begin(), xs.end());
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " ";
    out += xs[i];
  }
  return out;
}

}  // namespace

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries,
                        const std::string& only) {
  CorpusReport report;
  std::map<const FiniteAlgebra*, SpectrumAnalysis> cache;
  auto analysis_of = [&](const AlgebraPtr& a) -> const SpectrumAnalysis& {
    auto it = cache.find(a.get());
    if (it == cache.end())
      it = cache.emplace(a.get(), analyze_spectrum(a)).first;
    return it->second;
  };
  auto mismatch = [&](const std::string& id, const std::string& field,
                      const std::string& expected, const std::string& actual) {
    report.mismatches.push_back({id, field, expected, actual});
  };

  for (const auto& e : entries) {
    if (!only.empty() && e.id.find(only) == std::string::npos) continue;
    ++report.entries_run;

    if (e.algebra) {
      const auto& s = analysis_of(e.algebra);
      if (e.con_size && *e.con_size != s.con.count())
        mismatch(e.id, "con_size", std::to_string(*e.con_size),
                 std::to_string(s.con.count()));
      if (!e.con_blocks.empty()) {
        std::vector<std::string> actual;
        for (const auto& c : s.con.cons)
          actual.push_back(render(c, *e.algebra));
        std::string want = join_sorted(e.con_blocks);
        std::string got = join_sorted(actual);
        if (want != got) mismatch(e.id, "con", want, got);
      }
      if (!e.spec_blocks.empty()) {
        std::vector<std::string> actual;
        for (int i : s.report.spec)
          actual.push_back(render(s.con.cons[i], *e.algebra));
        std::string want = join_sorted(e.spec_blocks);
        std::string got = join_sorted(actual);
        if (want != got) mismatch(e.id, "spec", want, got);
      }
      if (e.filt_size || e.filt_iso) {
        try {
          ResiduatedView v = residuated_view(*e.algebra);
          if (e.filt_size) {
            int got = static_cast<int>(filters(*e.algebra, v).size());
            if (*e.filt_size != got)
              mismatch(e.id, "filt_size", std::to_string(*e.filt_size),
                       std::to_string(got));
          }
          if (e.filt_iso) {
            bool got = filters_match_congruences(*e.algebra, v, s.con);
            if (*e.filt_iso != got)
              mismatch(e.id, "filt_iso", *e.filt_iso ? "yes" : "no",
                       got ? "yes" : "no");
          }
        } catch (const Error& err) {
          mismatch(e.id, "residuated", "a residuated lattice", err.what());
        }
      }
    }

    if (e.hom) {
      const auto& f = *e.hom;
      const auto& src = analysis_of(f.source);
      const auto& dst = analysis_of(f.target);
      MorphismVerdict v = analyze_morphism(f, src, dst);
      if (e.admissible && *e.admissible != v.admissible)
        mismatch(e.id, "admissible", *e.admissible ? "yes" : "no",
                 v.admissible ? "yes" : "no");
      if (e.gu && *e.gu != v.gu)
        mismatch(e.id, "gu", to_string(*e.gu), to_string(v.gu));
      if (e.lo && *e.lo != v.lo)
        mismatch(e.id, "lo", to_string(*e.lo), to_string(v.lo));
      if (e.kernel_blocks) {
        std::string got = render(kernel(f), *f.source);
        if (*e.kernel_blocks != got)
          mismatch(e.id, "kernel", *e.kernel_blocks, got);
      }
    }
  }
  return report;
}

std::string render_corpus_report(const CorpusReport& r) {
  std::ostringstream out;
  out << "corpus: " << r.entries_run << " entries checked, "
      << r.mismatches.size() << " mismatches\n";
  for (const auto& m : r.mismatches)
    out << "MISMATCH " << m.entry_id << "." << m.field << ": expected "
        << m.expected << ", got " << m.actual << "\n";
  return out.str();
}

}  // namespace congruma
