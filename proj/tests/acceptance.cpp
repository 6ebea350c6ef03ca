// Acceptance suite: every criterion prints one pass/fail line and the binary
// exits nonzero if any fails. Budgets are wall-clock seconds and are part of
// the criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "congruma/corpus.hpp"
#include "congruma/induced.hpp"
#include "congruma/residuated.hpp"
#include "support/build.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace congruma;
using namespace testsupport;

namespace {

struct Checker {
  int failures = 0;
  std::ostringstream log;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      log << "    FAILED: " << what << "\n";
    }
  }
  void note(const std::string& what) { log << "    note: " << what << "\n"; }
};

struct Harness {
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, Homomorphism> homs;
  std::map<const FiniteAlgebra*, SpectrumAnalysis> spectra;

  const SpectrumAnalysis& spectrum(const AlgebraPtr& a, int cap = 200) {
    auto it = spectra.find(a.get());
    if (it == spectra.end())
      it = spectra.emplace(a.get(), analyze_spectrum(a, ConOptions{cap}))
               .first;
    return it->second;
  }
  MorphismVerdict verdict(const Homomorphism& f) {
    return analyze_morphism(f, spectrum(f.source), spectrum(f.target));
  }
};

Harness& harness() {
  static Harness h = [] {
    Harness x;
    for (const auto& n : {"L2sq", "D", "P", "H", "K", "E", "F", "L", "Q", "R",
                          "S", "T", "goedel3", "goedel4", "lukasiewicz4",
                          "boolean4"})
      x.algebras.emplace(n, corpus_algebra(n));
    for (const auto& [file, name] :
         std::vector<std::pair<std::string, std::string>>{
             {"exadm", "exadm_i"},
             {"exadm", "exadm_j"},
             {"exadm", "exadm_h"},
             {"exadm", "exadm_k"},
             {"meproud", "meproud_i"},
             {"exadmgulo", "exadmgulo_j"},
             {"exadmgulo", "exadmgulo_k"},
             {"exadmgulo", "exadmgulo_l"},
             {"exadmgulo", "exadmgulo_m"},
             {"exadmgulo", "exadmgulo_q"},
             {"exadmgulo", "exadmgulo_r"}})
      x.homs.emplace(name, corpus_hom(file, name));
    return x;
  }();
  return h;
}

// ---- criterion 1: Example exadm exactness -------------------------------

void criterion1(Checker& c) {
  auto& h = harness();
  c.expect(h.spectrum(h.algebras["D"]).con.count() == 2, "Con(D) size 2");
  c.expect(h.spectrum(h.algebras["L2sq"]).con.count() == 4,
           "Con(L2sq) size 4");

  const auto& sp = h.spectrum(h.algebras["P"]);
  c.expect(sp.con.count() == 5, "Con(P) size 5");
  std::set<std::string> spec;
  for (int i : sp.report.spec)
    spec.insert(render(sp.con.cons[i], *h.algebras["P"]));
  c.expect(spec == std::set<std::string>{"{{0},{x},{y},{z},{1}}",
                                         "{{0,y,z},{x,1}}",
                                         "{{0,x},{y,z,1}}"},
           "Spec(P) = {delta, alpha, beta}");
  int gamma = sp.con.index_of(
      parse_partition("{{0},{x},{y,z},{1}}", *h.algebras["P"]));
  c.expect(gamma >= 0 && !sp.is_prime(gamma), "gamma excluded from Spec(P)");

  c.expect(!h.verdict(h.homs.at("exadm_i")).admissible, "i not admissible");
  c.expect(!h.verdict(h.homs.at("exadm_j")).admissible, "j not admissible");
  c.expect(!h.verdict(h.homs.at("exadm_h")).admissible, "h not admissible");
  c.expect(h.verdict(h.homs.at("exadm_k")).admissible, "k admissible");
}

// ---- criterion 2: Example meproud exactness ------------------------------

void criterion2(Checker& c) {
  auto& h = harness();
  const auto& sh = h.spectrum(h.algebras["H"]);
  c.expect(sh.con.count() == 3, "Con(H) size 3");
  c.expect(sh.con.index_of(parse_partition(
               "{{0},{a,x},{b},{c,z},{y,1}}", *h.algebras["H"])) >= 0,
           "chi has the exact blocks");
  c.expect(h.spectrum(h.algebras["K"]).con.count() == 2, "Con(K) size 2");

  auto v = h.verdict(h.homs.at("meproud_i"));
  c.expect(v.admissible, "i admissible");
  c.expect(v.gu == Verdict3::No, "i fails GU");
  c.expect(v.lo == Verdict3::No, "i fails LO");
  c.expect(v.gu_witness.has_value() && v.lo_witness.has_value(),
           "witnesses reported");
}

// ---- criterion 3: Example exadmgulo exactness ----------------------------

void criterion3(Checker& c) {
  auto& h = harness();
  const std::vector<std::pair<std::string, int>> sizes{
      {"E", 3}, {"F", 4}, {"L", 5}, {"Q", 5}, {"R", 3}, {"S", 3}, {"T", 5}};
  for (const auto& [name, want] : sizes)
    c.expect(h.spectrum(h.algebras[name]).con.count() == want,
             "Con(" + name + ") size " + std::to_string(want));

  const std::vector<std::pair<std::string, std::string>> named{
      {"E", "{{0},{a},{b,d},{c},{1}}"},
      {"F", "{{0},{a},{b},{c},{x},{y,t},{z},{1}}"},
      {"F", "{{0},{a,x},{b},{c,z},{y,t,1}}"},
      {"L", "{{0},{a},{b,d},{c},{x},{y},{z},{1}}"},
      {"L", "{{0},{a,x},{b},{c,z},{d},{y,1}}"},
      {"L", "{{0},{a,x},{b,d},{c,z},{y,1}}"},
      {"Q", "{{0},{a,x},{b},{c},{z},{1}}"},
      {"Q", "{{0},{a},{b},{c,z},{x},{1}}"},
      {"Q", "{{0},{a,x},{b},{c,z},{1}}"},
      {"R", "{{0},{a},{b,d},{c},{x},{y},{z},{u},{1}}"},
      {"S", "{{0},{a},{b},{c},{x},{y},{z},{u,v},{1}}"},
      {"T", "{{0},{a},{b},{c},{d},{x},{y},{z},{u,v},{1}}"},
      {"T", "{{0},{a},{b,d},{c},{x},{y},{z},{u},{v},{1}}"},
      {"T", "{{0},{a},{b,d},{c},{x},{y},{z},{u,v},{1}}"}};
  for (const auto& [name, blocks] : named)
    c.expect(h.spectrum(h.algebras[name])
                     .con.index_of(
                         parse_partition(blocks, *h.algebras[name])) >= 0,
             name + " carries " + blocks);

  auto expect3 = [&](const std::string& name, bool adm, Verdict3 gu,
                     Verdict3 lo) {
    auto v = h.verdict(h.homs.at(name));
    c.expect(v.admissible == adm, name + " admissible verdict");
    c.expect(v.gu == gu, name + " GU verdict");
    c.expect(v.lo == lo, name + " LO verdict");
  };
  expect3("exadmgulo_j", true, Verdict3::No, Verdict3::No);
  expect3("exadmgulo_k", false, Verdict3::NA, Verdict3::NA);
  expect3("exadmgulo_l", true, Verdict3::Yes, Verdict3::Yes);
  expect3("exadmgulo_m", true, Verdict3::Yes, Verdict3::Yes);
  expect3("exadmgulo_q", true, Verdict3::Yes, Verdict3::Yes);
  expect3("exadmgulo_r", true, Verdict3::Yes, Verdict3::Yes);
}

// ---- criterion 4: theorem suite on random lattices ------------------------

struct Sampled {
  Homomorphism hom;
  const SpectrumAnalysis* src;
  const SpectrumAnalysis* dst;
  MorphismVerdict verdict;
};

void criterion4(Checker& c) {
  Rng rng(20240511);
  auto& h = harness();

  std::vector<AlgebraPtr> pool;
  for (int i = 0; i < 200; ++i)
    pool.push_back(random_lattice(rng, 4, 8, "r" + std::to_string(i)));

  // (c) lattice-level: distributive implies Spec = Max = Con2
  int distributive_seen = 0;
  for (const auto& a : pool) {
    const auto& s = h.spectrum(a);
    if (!lattice_is_distributive(lattice_view(*a))) continue;
    ++distributive_seen;
    c.expect(s.report.spec == s.report.max && s.report.max == s.report.con2,
             "distributive " + a->name + ": Spec = Max = Con2");
  }
  c.expect(distributive_seen >= 20, "enough distributive samples");

  // sample morphisms: searched maps, projections, embeddings
  std::vector<Sampled> ms;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  while (ms.size() < 140) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    auto f = random_lattice_hom(a, b, rng);
    if (!f) continue;
    Sampled s{*f, &h.spectrum(a), &h.spectrum(b), {}};
    s.verdict = analyze_morphism(s.hom, *s.src, *s.dst);
    ms.push_back(std::move(s));
  }
  for (int i = 0; i < 35; ++i) {
    const auto& a = pool[pick(rng)];
    const auto& s = h.spectrum(a);
    Homomorphism p = random_projection(a, s.con, rng);
    Sampled smp{p, &s, &h.spectrum(p.target), {}};
    smp.verdict = analyze_morphism(smp.hom, *smp.src, *smp.dst);
    ms.push_back(std::move(smp));
  }
  for (int i = 0; i < 30; ++i) {
    const auto& a = pool[pick(rng)];
    Homomorphism e = random_embedding(a, rng);
    Sampled smp{e, &h.spectrum(e.source), &h.spectrum(a), {}};
    smp.verdict = analyze_morphism(smp.hom, *smp.src, *smp.dst);
    ms.push_back(std::move(smp));
  }
  c.expect(ms.size() >= 200, "at least 200 sampled morphisms");

  int lo_without_gu = 0;
  for (const auto& m : ms) {
    const auto& f = m.hom;
    const auto& v = m.verdict;
    const std::string tag = f.source->name + "->" + f.target->name;

    // (a) surjective forces all three
    if (f.is_surjective())
      c.expect(v.admissible && v.gu == Verdict3::Yes && v.lo == Verdict3::Yes,
               "(a) surjection " + tag);
    // (b) GU forces LO in this class
    if (v.admissible && v.gu == Verdict3::Yes)
      c.expect(v.lo == Verdict3::Yes, "(b) GU implies LO " + tag);
    // (c) both sides distributive: admissible and GU
    if (lattice_is_distributive(lattice_view(*f.source)) &&
        lattice_is_distributive(lattice_view(*f.target)))
      c.expect(v.admissible && v.gu == Verdict3::Yes,
               "(c) distributive morphism " + tag);

    if (!v.admissible) continue;
    if (v.lo == Verdict3::Yes && v.gu == Verdict3::No) ++lo_without_gu;

    // (d) four-way equivalence
    bool gu = v.gu == Verdict3::Yes;
    bool closed = spec_map_closed(f, *m.src, *m.dst);
    bool all_fbeta_lo = true;
    for (int b = 0; b < m.dst->con.count() && all_fbeta_lo; ++b) {
      auto ind = induced_f_beta(f, m.dst->con.cons[b]);
      auto ss = analyze_spectrum(ind.source_q.algebra);
      auto sd = analyze_spectrum(ind.target_q.algebra);
      auto vi = analyze_morphism(ind.hom, ss, sd);
      if (!vi.admissible || vi.lo != Verdict3::Yes) all_fbeta_lo = false;
    }
    bool prime_surj = true;
    for (int b : m.dst->report.spec) {
      auto ind = induced_f_beta(f, m.dst->con.cons[b]);
      auto ss = analyze_spectrum(ind.source_q.algebra);
      auto sd = analyze_spectrum(ind.target_q.algebra);
      std::set<int> image;
      for (int chi : sd.report.spec)
        image.insert(ss.con.index_of(preimage(ind.hom, sd.con.cons[chi])));
      for (int phi : ss.report.spec)
        if (!image.count(phi)) prime_surj = false;
    }
    c.expect(gu == closed && closed == all_fbeta_lo &&
                 all_fbeta_lo == prime_surj,
             "(d) four-way GU equivalence " + tag);

    // (e) radical characterization of LO
    c.expect(lo_char_radical(f, *m.src, *m.dst) == (v.lo == Verdict3::Yes),
             "(e) radical characterization " + tag);

    // (g) quotient transfer for sampled thetas, always including Ker(f)
    std::vector<int> thetas{m.src->con.index_of(kernel(f))};
    std::uniform_int_distribution<int> pt(0, m.src->con.count() - 1);
    thetas.push_back(pt(rng));
    thetas.push_back(pt(rng));
    for (int t : thetas) {
      auto ind = induced_f_bracket(f, m.src->con.cons[t]);
      auto ss = analyze_spectrum(ind.source_q.algebra);
      auto sd = analyze_spectrum(ind.target_q.algebra);
      auto vi = analyze_morphism(ind.hom, ss, sd);
      c.expect(vi.admissible, "(g) f_[theta] admissible " + tag);
      if (v.gu == Verdict3::Yes)
        c.expect(vi.gu == Verdict3::Yes, "(g) GU transfers to f_[theta] " + tag);
      if (v.lo == Verdict3::Yes)
        c.expect(vi.lo == Verdict3::Yes, "(g) LO transfers to f_[theta] " + tag);
      if (m.src->con.cons[t] == kernel(f)) {
        c.expect((vi.gu == Verdict3::Yes) == (v.gu == Verdict3::Yes),
                 "(g) GU reflects from f_[Ker] " + tag);
        c.expect((vi.lo == Verdict3::Yes) == (v.lo == Verdict3::Yes),
                 "(g) LO reflects from f_[Ker] " + tag);
      }
    }
  }
  if (lo_without_gu == 0)
    c.note("no lattice morphism with LO but not GU found in this sample");
  else
    c.note(std::to_string(lo_without_gu) +
           " sampled morphisms fulfill LO but not GU");

  // (f) composition laws on composable triples
  int triples = 0;
  for (int trial = 0; trial < 400 && triples < 60; ++trial) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const auto& cc = pool[pick(rng)];
    auto f = random_lattice_hom(a, b, rng);
    if (!f) continue;
    auto g = random_lattice_hom(b, cc, rng);
    if (!g) continue;
    ++triples;
    auto gf = compose(*g, *f);
    auto vf = analyze_morphism(*f, h.spectrum(a), h.spectrum(b));
    auto vg = analyze_morphism(*g, h.spectrum(b), h.spectrum(cc));
    auto vgf = analyze_morphism(gf, h.spectrum(a), h.spectrum(cc));
    const std::string tag =
        a->name + "->" + b->name + "->" + cc->name;
    if (vf.admissible && vg.admissible) {
      c.expect(vgf.admissible, "(f) composition admissible " + tag);
      if (vf.gu == Verdict3::Yes && vg.gu == Verdict3::Yes)
        c.expect(vgf.gu == Verdict3::Yes, "(f) GU composes " + tag);
      if (f->is_surjective() && vg.lo == Verdict3::Yes)
        c.expect(vgf.lo == Verdict3::Yes,
                 "(f) surjective then LO composes " + tag);
      if (vf.lo == Verdict3::Yes && vg.lo == Verdict3::Yes &&
          g->is_injective())
        c.expect(vgf.lo == Verdict3::Yes, "(f) LO composes via injection " + tag);
      if (vgf.gu == Verdict3::Yes && g->is_injective() &&
          vg.lo == Verdict3::Yes)
        c.expect(vf.gu == Verdict3::Yes, "(f) GU reflects along injections " + tag);
    }
  }
  c.expect(triples >= 40, "enough composable triples");
}

// ---- criterion 5: products and ordinal sums ------------------------------

void criterion5(Checker& c) {
  auto& h = harness();
  const std::vector<std::string> names{"L2sq", "D", "P", "H", "K", "E",
                                       "F",    "L", "Q", "R", "S", "T"};

  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i; j < names.size(); ++j) {
      const auto& a = h.algebras[names[i]];
      const auto& b = h.algebras[names[j]];
      const std::string tag = names[i] + "x" + names[j];

      Product pr = direct_product({a, b});
      auto s = analyze_spectrum(pr.algebra, ConOptions{200});
      const auto& sa = h.spectrum(a);
      const auto& sb = h.spectrum(b);

      // Spec formula: a prime in one slot, nabla in the other.
      std::set<Partition> expect;
      for (int phi : sa.report.spec) {
        std::vector<Partition> parts{sa.con.cons[phi],
                                     Partition::nabla(b->size)};
        expect.insert(pr.combine(parts));
      }
      for (int phi : sb.report.spec) {
        std::vector<Partition> parts{Partition::nabla(a->size),
                                     sb.con.cons[phi]};
        expect.insert(pr.combine(parts));
      }
      std::set<Partition> got;
      for (int p : s.report.spec) got.insert(s.con.cons[p]);
      c.expect(expect == got, "product spectrum formula " + tag);

      // Commutator product law over all congruence pairs.
      auto comm = commutator_table(s.con);
      auto comm_a = commutator_table(sa.con);
      auto comm_b = commutator_table(sb.con);
      bool law = true;
      for (int x = 0; x < s.con.count() && law; ++x)
        for (int y = 0; y < s.con.count() && law; ++y) {
          auto dx = pr.decompose(s.con.cons[x]);
          auto dy = pr.decompose(s.con.cons[y]);
          if (!dx || !dy) {
            law = false;
            break;
          }
          int xa = sa.con.index_of((*dx)[0]);
          int xb = sb.con.index_of((*dx)[1]);
          int ya = sa.con.index_of((*dy)[0]);
          int yb = sb.con.index_of((*dy)[1]);
          std::vector<Partition> parts{sa.con.cons[comm_a[xa][ya]],
                                       sb.con.cons[comm_b[xb][yb]]};
          if (s.con.cons[comm[x][y]] != pr.combine(parts)) law = false;
        }
      c.expect(law, "commutator product law " + tag);

      // Ordinal sum spectrum formula.
      OrdinalSum os = ordinal_sum({a, b});
      auto so = analyze_spectrum(os.algebra, ConOptions{200});
      std::set<Partition> expect_sum;
      for (int phi : sa.report.spec) {
        std::vector<Partition> parts{sa.con.cons[phi],
                                     Partition::nabla(b->size)};
        expect_sum.insert(os.combine(parts));
      }
      for (int phi : sb.report.spec) {
        std::vector<Partition> parts{Partition::nabla(a->size),
                                     sb.con.cons[phi]};
        expect_sum.insert(os.combine(parts));
      }
      std::set<Partition> got_sum;
      for (int p : so.report.spec) got_sum.insert(so.con.cons[p]);
      c.expect(expect_sum == got_sum, "ordinal sum spectrum formula " +
                                          names[i] + "+" + names[j]);
    }

  // Componentwise criteria for product and sum morphisms.
  const std::vector<std::string> hom_names{"exadm_h", "exadm_k", "meproud_i",
                                           "exadmgulo_l", "exadmgulo_q"};
  for (const auto& n1 : hom_names)
    for (const auto& n2 : hom_names) {
      const auto& f1 = h.homs.at(n1);
      const auto& f2 = h.homs.at(n2);
      const std::string tag = n1 + "*" + n2;
      auto v1 = h.verdict(f1);
      auto v2 = h.verdict(f2);
      bool want_adm = v1.admissible && v2.admissible;
      std::vector<Homomorphism> fs{f1, f2};

      Product src = direct_product({f1.source, f2.source});
      Product dst = direct_product({f1.target, f2.target});
      Homomorphism fp = product_hom(src, dst, fs);
      auto vp = analyze_morphism(fp, analyze_spectrum(src.algebra, ConOptions{200}),
                                 analyze_spectrum(dst.algebra, ConOptions{200}));
      c.expect(vp.admissible == want_adm, "product admissibility " + tag);
      if (want_adm) {
        c.expect((vp.gu == Verdict3::Yes) ==
                     (v1.gu == Verdict3::Yes && v2.gu == Verdict3::Yes),
                 "product GU componentwise " + tag);
        c.expect((vp.lo == Verdict3::Yes) ==
                     (v1.lo == Verdict3::Yes && v2.lo == Verdict3::Yes),
                 "product LO componentwise " + tag);
      }

      OrdinalSum ssrc = ordinal_sum({f1.source, f2.source});
      OrdinalSum sdst = ordinal_sum({f1.target, f2.target});
      Homomorphism fo = ordinal_sum_hom(ssrc, sdst, fs);
      auto vo = analyze_morphism(fo, analyze_spectrum(ssrc.algebra, ConOptions{200}),
                                 analyze_spectrum(sdst.algebra, ConOptions{200}));
      c.expect(vo.admissible == want_adm, "sum admissibility " + tag);
      if (want_adm) {
        c.expect((vo.gu == Verdict3::Yes) ==
                     (v1.gu == Verdict3::Yes && v2.gu == Verdict3::Yes),
                 "sum GU componentwise " + tag);
        c.expect((vo.lo == Verdict3::Yes) ==
                     (v1.lo == Verdict3::Yes && v2.lo == Verdict3::Yes),
                 "sum LO componentwise " + tag);
      }
    }
}

// ---- criterion 6: oracle equivalence --------------------------------------

void criterion6(Checker& c) {
  auto& h = harness();
  Rng rng(424242);
  std::vector<AlgebraPtr> subjects;
  for (const auto& [name, a] : h.algebras)
    if (a->size <= 6) subjects.push_back(a);
  for (int i = 0; i < 50; ++i)
    subjects.push_back(random_lattice(rng, 4, 6, "o" + std::to_string(i)));

  for (const auto& a : subjects) {
    auto con = enumerate_con(a);
    auto brute = brute_con(*a);
    bool same = con.count() == static_cast<int>(brute.size());
    for (int i = 0; same && i < con.count(); ++i)
      if (con.cons[i] != brute[i]) same = false;
    c.expect(same, "Con(" + a->name + ") equals the set-partition scan");

    for (Element x = 0; x < a->size; ++x)
      for (Element y = x + 1; y < a->size; ++y) {
        std::vector<std::pair<Element, Element>> pairs{{x, y}};
        if (cg_generated(*a, pairs) != brute_cg(*a, pairs)) {
          c.expect(false, "Cg oracle on " + a->name);
          break;
        }
      }
    std::uniform_int_distribution<Element> pe(0, a->size - 1);
    for (int t = 0; t < 5; ++t) {
      std::vector<std::pair<Element, Element>> pairs{{pe(rng), pe(rng)},
                                                     {pe(rng), pe(rng)}};
      c.expect(cg_generated(*a, pairs) == brute_cg(*a, pairs),
               "two-generator Cg oracle on " + a->name);
    }
  }
}

// ---- criterion 7: commutator cross-validation -----------------------------

void criterion7(Checker& c) {
  auto& h = harness();
  for (const auto& name : {"L2sq", "D", "P", "H", "K", "E", "F", "L", "Q",
                           "R", "S", "T"}) {
    const auto& s = h.spectrum(h.algebras[name]);
    auto meet_t = commutator_table(s.con, CommutatorStrategy::Meet);
    auto delta_t = commutator_table(s.con, CommutatorStrategy::Delta);
    c.expect(meet_t == delta_t,
             std::string("delta equals meet on ") + name);

    const auto& con = s.con;
    const int m = con.count();
    bool laws = true;
    for (int i = 0; i < m && laws; ++i)
      for (int j = 0; j < m && laws; ++j) {
        if (delta_t[i][j] != delta_t[j][i]) laws = false;
        if (!con.leq[delta_t[i][j]][con.meet_table[i][j]]) laws = false;
        for (int k = 0; k < m && laws; ++k) {
          if (con.leq[j][k] && !con.leq[delta_t[i][j]][delta_t[i][k]])
            laws = false;
          if (delta_t[i][con.join_table[j][k]] !=
              con.join_table[delta_t[i][j]][delta_t[i][k]])
            laws = false;
        }
      }
    c.expect(laws, std::string("commutator laws hold on ") + name);
  }
}

// ---- criterion 8: residuated lattices -------------------------------------

void criterion8(Checker& c) {
  auto& h = harness();
  const std::vector<std::string> rls{"goedel3", "goedel4", "lukasiewicz4",
                                     "boolean4"};
  std::map<std::string, ResiduatedView> views;
  for (const auto& name : rls) {
    const auto& a = h.algebras[name];
    try {
      views.emplace(name, residuated_view(*a));
    } catch (const Error& e) {
      c.expect(false, name + std::string(": ") + e.what());
      return;
    }
    c.expect(filters_match_congruences(*a, views.at(name),
                                       h.spectrum(a).con),
             name + ": Filt is isomorphic to Con via F -> ~F");
  }

  int morphisms = 0;
  for (const auto& sn : rls)
    for (const auto& tn : rls) {
      const auto& src = h.algebras[sn];
      const auto& dst = h.algebras[tn];
      // exhaustive map search
      std::vector<Element> map(src->size, 0);
      const int n = src->size, m = dst->size;
      std::size_t total = 1;
      for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(m);
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t t = code;
        for (int i = 0; i < n; ++i) {
          map[i] = static_cast<Element>(t % m);
          t /= m;
        }
        Homomorphism f;
        try {
          f = validate_hom(src, dst, map);
        } catch (const Error&) {
          continue;
        }
        ++morphisms;
        auto v = h.verdict(f);
        c.expect(v.admissible && v.gu == Verdict3::Yes &&
                     v.lo == Verdict3::Yes,
                 "residuated morphism " + sn + "->" + tn +
                     " admissible with GU and LO");
      }
    }
  c.expect(morphisms >= 10, "the exhaustive search found morphisms");
  c.note(std::to_string(morphisms) + " residuated-lattice morphisms checked");
}

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  void (*run)(Checker&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "corpus exactness: first worked example", 1.0, criterion1},
      {2, "corpus exactness: embedding without GU/LO", 1.0, criterion2},
      {3, "corpus exactness: seven-lattice example", 2.0, criterion3},
      {4, "theorem suite on random lattices", 60.0, criterion4},
      {5, "product and ordinal sum suite", 30.0, criterion5},
      {6, "oracle equivalence", 60.0, criterion6},
      {7, "commutator cross-validation", 30.0, criterion7},
      {8, "residuated lattice corollary", 60.0, criterion8},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    c.expect(secs < cr.budget_s,
             "runtime " + std::to_string(secs) + "s exceeds budget " +
                 std::to_string(cr.budget_s) + "s");
    bool ok = c.failures == 0;
    if (!ok) ++failed;
    std::printf("criterion %d (%s): %s (%.2fs)\n", cr.id, cr.name.c_str(),
                ok ? "PASS" : "FAIL", secs);
    std::fputs(c.log.str().c_str(), stdout);
  }
  return failed == 0 ? 0 : 1;
}
