// Command-line front end: parse algebra/morphism files, run analyses, print
// deterministic reports, emit DOT diagrams.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "congruma/constructions.hpp"
#include "congruma/corpus.hpp"
#include "congruma/dot.hpp"
#include "congruma/induced.hpp"
#include "congruma/parser.hpp"

namespace {

using namespace congruma;
using nlohmann::json;

struct GlobalOpts {
  std::string format = "text";
  std::string strategy = "auto";
  int cap = kDefaultElementCap;
};

CommutatorStrategy strategy_of(const GlobalOpts& g) {
  if (g.strategy == "meet") return CommutatorStrategy::Meet;
  if (g.strategy == "delta") return CommutatorStrategy::Delta;
  return CommutatorStrategy::Auto;
}

/// "file.ua" or "file.ua:Name" -> the named (or first) algebra.
AlgebraPtr load_algebra(const std::string& arg) {
  std::string path = arg, name;
  if (auto colon = arg.rfind(':');
      colon != std::string::npos && colon > 1 && !std::filesystem::exists(arg)) {
    path = arg.substr(0, colon);
    name = arg.substr(colon + 1);
  }
  Document doc = parse_file(path);
  if (doc.algebras.empty())
    throw Error("'" + path + "' defines no algebra");
  if (name.empty()) return doc.algebras.front();
  if (auto a = doc.find_algebra(name)) return a;
  throw Error("'" + path + "' defines no algebra named '" + name + "'");
}

Homomorphism load_hom(const std::string& path, const std::string& name) {
  Document doc = parse_file(path);
  if (doc.homs.empty()) throw Error("'" + path + "' defines no hom");
  const HomSpec* spec = nullptr;
  if (name.empty()) {
    spec = &doc.homs.front();
  } else {
    for (const auto& h : doc.homs)
      if (h.name == name) spec = &h;
    if (!spec)
      throw Error("'" + path + "' defines no hom named '" + name + "'");
  }
  return resolve_hom(*spec, doc, std::filesystem::path(path).parent_path());
}

json con_json(const SpectrumAnalysis& s) {
  const FiniteAlgebra& a = s.algebra();
  json cons = json::array();
  for (int i = 0; i < s.con.count(); ++i) {
    const auto& pc = s.report.per_con[i];
    cons.push_back({{"partition", render(s.con.cons[i], a)},
                    {"classes", pc.class_count},
                    {"prime", pc.prime},
                    {"maximal", pc.maximal},
                    {"minimal_prime", pc.minimal_prime},
                    {"two_class", pc.two_class}});
  }
  auto names = [&](const std::vector<int>& xs) {
    json out = json::array();
    for (int i : xs) out.push_back(render(s.con.cons[i], a));
    return out;
  };
  return {{"algebra", a.name},
          {"size", a.size},
          {"congruences", cons},
          {"spec", names(s.report.spec)},
          {"max", names(s.report.max)},
          {"min", names(s.report.min)},
          {"con2", names(s.report.con2)}};
}

int run(int argc, char** argv) {
  CLI::App app{"congruma: congruence lattices, prime spectra and morphism "
               "analysis for finite algebras"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--strategy", g.strategy, "Commutator strategy")
      ->check(CLI::IsMember({"auto", "meet", "delta"}))
      ->capture_default_str();
  app.add_option("--cap", g.cap, "Element cap for Con enumeration")
      ->envname("CONGRUMA_CAP")
      ->capture_default_str();

  std::string file, expr1, expr2, hom_name, alg_name, what = "con";
  std::vector<std::string> files, exprs;
  std::string corpus_dir = "corpus", only;

  auto* c_con = app.add_subcommand("con", "List the congruence lattice");
  c_con->add_option("file", file)->required();
  c_con->add_option("--algebra", alg_name, "Algebra name inside the file");

  auto* c_spec = app.add_subcommand("spec", "Spectral report");
  c_spec->add_option("file", file)->required();
  c_spec->add_option("--algebra", alg_name);

  auto* c_comm = app.add_subcommand("commutator", "Commutator of two congruences");
  c_comm->add_option("file", file)->required();
  c_comm->add_option("alpha", expr1, "{{...},{...}} or cg{(a,b),...}")->required();
  c_comm->add_option("beta", expr2)->required();

  auto* c_hc = app.add_subcommand("hom-check", "Validate a morphism file");
  c_hc->add_option("file", file)->required();
  c_hc->add_option("--hom", hom_name);

  auto* c_an = app.add_subcommand("analyze", "Admissibility / GU / LO verdicts");
  c_an->add_option("file", file)->required();
  c_an->add_option("--hom", hom_name);

  auto* c_prod = app.add_subcommand("product", "Direct product of algebras");
  c_prod->add_option("files", files, "file.ua[:Name] ...")->expected(-2);

  auto* c_osum = app.add_subcommand("osum", "Ordinal sum of bounded lattices");
  c_osum->add_option("files", files)->expected(-2);

  auto* c_quot = app.add_subcommand("quotient", "Quotient algebra");
  c_quot->add_option("file", file)->required();
  c_quot->add_option("congruence", expr1)->required();

  auto* c_clo = app.add_subcommand("closure", "Stone closure of a set of primes");
  c_clo->add_option("file", file)->required();
  c_clo->add_option("primes", exprs, "partition expressions")->expected(-1);

  auto* c_corp = app.add_subcommand("corpus", "Run the bundled example corpus");
  c_corp->add_option("--dir", corpus_dir)->capture_default_str();
  c_corp->add_option("--only", only, "Filter entries by id substring");

  auto* c_dot = app.add_subcommand("dot", "Emit a DOT Hasse diagram");
  c_dot->add_option("file", file)->required();
  c_dot->add_option("--what", what)
      ->check(CLI::IsMember({"algebra-order", "con", "spec"}))
      ->capture_default_str();
  c_dot->add_option("--algebra", alg_name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ConOptions opts{g.cap};

  try {
    if (c_con->parsed()) {
      AlgebraPtr a = load_algebra(alg_name.empty() ? file : file + ":" + alg_name);
      CongruenceLattice con = enumerate_con(a, opts);
      if (g.format == "json") {
        json out = {{"algebra", a->name}, {"congruences", json::array()}};
        for (const auto& c : con.cons)
          out["congruences"].push_back(render(c, *a));
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "Con(" << a->name << "): " << con.count()
                  << " congruences\n";
        for (const auto& c : con.cons) std::cout << render(c, *a) << "\n";
      }
    } else if (c_spec->parsed()) {
      AlgebraPtr a = load_algebra(alg_name.empty() ? file : file + ":" + alg_name);
      SpectrumAnalysis s = analyze_spectrum(a, opts, strategy_of(g));
      if (g.format == "json")
        std::cout << con_json(s).dump(2) << "\n";
      else
        std::cout << render_report(s);
    } else if (c_comm->parsed()) {
      AlgebraPtr a = load_algebra(file);
      CongruenceLattice con = enumerate_con(a, opts);
      Partition alpha = parse_congruence_expr(expr1, a);
      Partition beta = parse_congruence_expr(expr2, a);
      Partition c = commutator(con, alpha, beta, strategy_of(g));
      std::cout << render(c, *a) << "\n";
    } else if (c_hc->parsed()) {
      Homomorphism h = load_hom(file, hom_name);
      std::cout << "hom " << h.source->name << " -> " << h.target->name
                << ": valid" << (h.is_injective() ? ", injective" : "")
                << (h.is_surjective() ? ", surjective" : "") << "\n";
    } else if (c_an->parsed()) {
      Homomorphism h = load_hom(file, hom_name);
      SpectrumAnalysis src = analyze_spectrum(h.source, opts, strategy_of(g));
      SpectrumAnalysis dst = analyze_spectrum(h.target, opts, strategy_of(g));
      MorphismVerdict v = analyze_morphism(h, src, dst);
      if (g.format == "json") {
        json out = {{"hom", h.source->name + " -> " + h.target->name},
                    {"admissible", v.admissible},
                    {"gu", to_string(v.gu)},
                    {"lo", to_string(v.lo)},
                    {"kernel", render(kernel(h), *h.source)}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "hom " << h.source->name << " -> " << h.target->name
                  << "\n"
                  << render_verdict(v, h);
      }
    } else if (c_prod->parsed()) {
      std::vector<AlgebraPtr> factors;
      for (const auto& f : files) factors.push_back(load_algebra(f));
      Product p = direct_product(std::move(factors));
      std::cout << render_ua(*p.algebra);
    } else if (c_osum->parsed()) {
      std::vector<AlgebraPtr> summands;
      for (const auto& f : files) summands.push_back(load_algebra(f));
      OrdinalSum s = ordinal_sum(std::move(summands));
      std::cout << render_ua(*s.algebra);
    } else if (c_quot->parsed()) {
      AlgebraPtr a = load_algebra(file);
      Partition theta = parse_congruence_expr(expr1, a);
      Quotient q = quotient(a, theta);
      std::cout << render_ua(*q.algebra);
    } else if (c_clo->parsed()) {
      AlgebraPtr a = load_algebra(file);
      SpectrumAnalysis s = analyze_spectrum(a, opts, strategy_of(g));
      std::vector<int> set;
      for (const auto& e : exprs) {
        Partition p = parse_congruence_expr(e, a);
        int idx = s.con.index_of(p);
        if (idx < 0 || !s.is_prime(idx))
          throw Error(render(p, *a) + " is not a prime congruence of " +
                      a->name);
        set.push_back(idx);
      }
      auto closed = stone_closure(s, set);
      std::cout << "closure: {";
      for (std::size_t i = 0; i < closed.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << render(s.con.cons[closed[i]], *a);
      }
      std::cout << "}\n";
    } else if (c_corp->parsed()) {
      auto entries = load_corpus(corpus_dir);
      CorpusReport r = run_corpus(entries, only);
      if (g.format == "json") {
        json out = {{"entries_run", r.entries_run},
                    {"mismatches", json::array()}};
        for (const auto& m : r.mismatches)
          out["mismatches"].push_back({{"entry", m.entry_id},
                                       {"field", m.field},
                                       {"expected", m.expected},
                                       {"actual", m.actual}});
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << render_corpus_report(r);
      }
      return r.ok() ? 0 : 1;
    } else if (c_dot->parsed()) {
      AlgebraPtr a = load_algebra(alg_name.empty() ? file : file + ":" + alg_name);
      if (what == "algebra-order") {
        std::cout << emit_dot_order(*a);
      } else {
        SpectrumAnalysis s = analyze_spectrum(a, opts, strategy_of(g));
        std::cout << emit_dot(s, what == "con" ? DotWhat::Con : DotWhat::Spec);
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
