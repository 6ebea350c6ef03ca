#include "congruma/spectrum.hpp"

#include <algorithm>
#include <sstream>

namespace congruma {

namespace {

/// [alpha,beta] via the subalgebra A(alpha) of A^2: Delta is the congruence
/// of A(alpha) generated by {((b,b),(b',b')) : (b,b') in beta}; the result
/// collects the pairs (a,a') with ((a,a'),(a',a')) in Delta.
Partition commutator_delta(const AlgebraPtr& a, const Partition& alpha,
                           const Partition& beta) {
  const int n = a->size;
  SquareAlgebra sq = square_algebra(a);

  std::vector<Element> carrier;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (alpha.related(x, y)) carrier.push_back(sq.index_of(x, y));
  Subalgebra sub = subalgebra_generate(sq.algebra, carrier);

  std::vector<int> to_sub(n * n, -1);
  for (std::size_t i = 0; i < sub.carrier.size(); ++i)
    to_sub[sub.carrier[i]] = static_cast<int>(i);

  std::vector<std::pair<Element, Element>> gens;
  for (Element b = 0; b < n; ++b)
    for (Element b2 = 0; b2 < n; ++b2)
      if (beta.related(b, b2))
        gens.emplace_back(to_sub[sq.index_of(b, b)],
                          to_sub[sq.index_of(b2, b2)]);
  Partition delta = cg_generated(*sub.algebra, gens);

  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!alpha.related(x, y)) continue;
      int p = to_sub[sq.index_of(x, y)];
      int q = to_sub[sq.index_of(y, y)];
      if (delta.related(p, q)) {
        int rx = find(x), ry = find(y);
        if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
      }
    }
  std::vector<int> raw(n);
  for (int e = 0; e < n; ++e) raw[e] = find(e);
  return Partition::from_assignment(std::move(raw));
}

bool distributive_cached(const CongruenceLattice& con) {
  // cheap enough to recompute for the sizes this library targets
  return con_is_distributive(con);
}

}  // namespace

Partition commutator(const CongruenceLattice& con, int i, int j,
                     CommutatorStrategy strategy) {
  if (i < 0 || i >= con.count() || j < 0 || j >= con.count())
    throw Error("commutator: congruence index out of range");
  if (strategy == CommutatorStrategy::Auto)
    strategy = distributive_cached(con) ? CommutatorStrategy::Meet
                                        : CommutatorStrategy::Delta;
  if (strategy == CommutatorStrategy::Meet) {
    if (!distributive_cached(con))
      throw Error("meet commutator requested but Con(" + con.algebra->name +
                  ") is not distributive");
    return con.cons[con.meet_table[i][j]];
  }
  return commutator_delta(con.algebra, con.cons[i], con.cons[j]);
}

Partition commutator(const CongruenceLattice& con, const Partition& alpha,
                     const Partition& beta, CommutatorStrategy strategy) {
  int i = con.index_of(alpha);
  int j = con.index_of(beta);
  if (i < 0)
    throw Error("commutator: " + render(alpha) + " is not a congruence of " +
                con.algebra->name);
  if (j < 0)
    throw Error("commutator: " + render(beta) + " is not a congruence of " +
                con.algebra->name);
  return commutator(con, i, j, strategy);
}

std::vector<std::vector<int>> commutator_table(const CongruenceLattice& con,
                                               CommutatorStrategy strategy) {
  if (strategy == CommutatorStrategy::Auto)
    strategy = distributive_cached(con) ? CommutatorStrategy::Meet
                                        : CommutatorStrategy::Delta;
  const int m = con.count();
  std::vector<std::vector<int>> comm(m, std::vector<int>(m, -1));
  if (strategy == CommutatorStrategy::Meet) {
    if (!distributive_cached(con))
      throw Error("meet commutator requested but Con(" + con.algebra->name +
                  ") is not distributive");
    comm = con.meet_table;
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Partition c =
            commutator_delta(con.algebra, con.cons[i], con.cons[j]);
        int idx = con.index_of(c);
        if (idx < 0)
          throw Error("delta commutator of " + render(con.cons[i]) + " and " +
                      render(con.cons[j]) + " is not a congruence of " +
                      con.algebra->name);
        comm[i][j] = idx;
      }
  }
  return comm;
}

bool is_prime(const CongruenceLattice& con,
              const std::vector<std::vector<int>>& comm, int theta) {
  if (theta == con.nabla_index) return false;
  const int n = con.algebra->size;
  // Principal-pair reduction, in index order with short-circuit.
  std::vector<int> principals;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) principals.push_back(con.principal[a][b]);
  std::sort(principals.begin(), principals.end());
  principals.erase(std::unique(principals.begin(), principals.end()),
                   principals.end());
  for (int p : principals)
    for (int q : principals)
      if (con.leq[comm[p][q]][theta] && !con.leq[p][theta] &&
          !con.leq[q][theta])
        return false;
  return true;
}

SpectrumAnalysis analyze_spectrum(CongruenceLattice con,
                                  CommutatorStrategy strategy) {
  SpectrumAnalysis s;
  if (strategy == CommutatorStrategy::Auto)
    strategy = distributive_cached(con) ? CommutatorStrategy::Meet
                                        : CommutatorStrategy::Delta;
  s.comm = commutator_table(con, strategy);
  s.con = std::move(con);

  const int m = s.con.count();
  auto& rep = s.report;
  rep.strategy_used = strategy;
  rep.per_con.resize(m);
  for (int i = 0; i < m; ++i) {
    auto& pc = rep.per_con[i];
    pc.class_count = s.con.cons[i].num_blocks;
    pc.two_class = pc.class_count == 2;
    pc.prime = is_prime(s.con, s.comm, i);
    if (i != s.con.nabla_index) {
      pc.maximal = true;
      for (int j = 0; j < m; ++j)
        if (j != i && j != s.con.nabla_index && s.con.leq[i][j])
          pc.maximal = false;
    }
  }
  for (int i = 0; i < m; ++i) {
    if (!rep.per_con[i].prime) continue;
    bool minimal = true;
    for (int j = 0; j < m; ++j)
      if (j != i && rep.per_con[j].prime && s.con.leq[j][i]) minimal = false;
    rep.per_con[i].minimal_prime = minimal;
  }
  for (int i = 0; i < m; ++i) {
    if (rep.per_con[i].prime) rep.spec.push_back(i);
    if (rep.per_con[i].maximal) rep.max.push_back(i);
    if (rep.per_con[i].minimal_prime) rep.min.push_back(i);
    if (rep.per_con[i].two_class) rep.con2.push_back(i);
  }
  return s;
}

SpectrumAnalysis analyze_spectrum(const AlgebraPtr& a, const ConOptions& opts,
                                  CommutatorStrategy strategy) {
  return analyze_spectrum(enumerate_con(a, opts), strategy);
}

std::vector<int> v_set(const SpectrumAnalysis& s, int theta) {
  std::vector<int> out;
  for (int p : s.report.spec)
    if (s.con.leq[theta][p]) out.push_back(p);
  return out;
}

std::vector<int> d_set(const SpectrumAnalysis& s, int theta) {
  std::vector<int> out;
  for (int p : s.report.spec)
    if (!s.con.leq[theta][p]) out.push_back(p);
  return out;
}

Partition radical(const SpectrumAnalysis& s, int theta) {
  auto above = v_set(s, theta);
  if (above.empty()) return Partition::nabla(s.algebra().size);
  int acc = above[0];
  for (std::size_t i = 1; i < above.size(); ++i)
    acc = s.con.meet_table[acc][above[i]];
  return s.con.cons[acc];
}

std::vector<int> stone_closure(const SpectrumAnalysis& s,
                               std::span<const int> primes) {
  for (int p : primes)
    if (!s.is_prime(p))
      throw Error("stone_closure: " + render(s.con.cons[p]) +
                  " is not a prime congruence");
  if (primes.empty()) return {};
  int acc = primes[0];
  for (std::size_t i = 1; i < primes.size(); ++i)
    acc = s.con.meet_table[acc][primes[i]];
  return v_set(s, acc);
}

bool is_m_system(const SpectrumAnalysis& s,
                 std::span<const std::pair<Element, Element>> pairs) {
  if (pairs.empty()) return false;
  for (auto [a, b] : pairs)
    for (auto [c, d] : pairs) {
      int p = s.con.principal[a][b];
      int q = s.con.principal[c][d];
      const Partition& comm = s.con.cons[s.comm[p][q]];
      bool hit = false;
      for (auto [x, y] : pairs)
        if (comm.related(x, y)) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
  return true;
}

std::string render_report(const SpectrumAnalysis& s) {
  const FiniteAlgebra& a = s.algebra();
  std::ostringstream out;
  out << "algebra " << a.name << ": " << a.size << " elements, "
      << s.con.count() << " congruences (commutator: "
      << (s.report.strategy_used == CommutatorStrategy::Meet ? "meet"
                                                             : "delta")
      << ")\n";
  for (int i = 0; i < s.con.count(); ++i) {
    const auto& pc = s.report.per_con[i];
    out << "[" << i << "] " << render(s.con.cons[i], a)
        << "  classes=" << pc.class_count;
    if (pc.prime) out << " prime";
    if (pc.maximal) out << " maximal";
    if (pc.minimal_prime) out << " minimal-prime";
    if (pc.two_class) out << " two-class";
    out << "\n";
  }
  auto list = [&](const char* tag, const std::vector<int>& xs) {
    out << tag << " = {";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out << ", ";
      out << render(s.con.cons[xs[i]], a);
    }
    out << "}\n";
  };
  list("Spec", s.report.spec);
  list("Max", s.report.max);
  list("Min", s.report.min);
  list("Con2", s.report.con2);
  return out.str();
}

}  // namespace congruma
