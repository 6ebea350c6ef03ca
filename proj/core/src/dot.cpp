#include "congruma/dot.hpp"

#include <sstream>

namespace congruma {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string emit_dot_order(const FiniteAlgebra& a) {
  LatticeView v = lattice_view(a);
  std::ostringstream out;
  out << "digraph " << quote(a.name) << " {\n  rankdir=BT;\n";
  for (Element e = 0; e < a.size; ++e)
    out << "  n" << e << " [label=" << quote(a.label(e)) << "];\n";
  for (auto [lo, hi] : v.covers())
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot(const SpectrumAnalysis& s, DotWhat what) {
  if (what == DotWhat::AlgebraOrder) return emit_dot_order(s.algebra());

  const FiniteAlgebra& a = s.algebra();
  std::ostringstream out;
  if (what == DotWhat::Con) {
    out << "digraph " << quote("Con(" + a.name + ")") << " {\n  rankdir=BT;\n";
    for (int i = 0; i < s.con.count(); ++i)
      out << "  n" << i << " [label=" << quote(render(s.con.cons[i], a))
          << "];\n";
    for (auto [lo, hi] : s.con.covers())
      out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
  }

  // Spec poset: the congruence order restricted to the primes.
  const auto& spec = s.report.spec;
  out << "digraph " << quote("Spec(" + a.name + ")") << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < spec.size(); ++i)
    out << "  n" << i << " [label=" << quote(render(s.con.cons[spec[i]], a))
        << "];\n";
  for (std::size_t i = 0; i < spec.size(); ++i)
    for (std::size_t j = 0; j < spec.size(); ++j) {
      if (i == j || !s.con.leq[spec[i]][spec[j]]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < spec.size() && cover; ++k)
        if (k != i && k != j && s.con.leq[spec[i]][spec[k]] &&
            s.con.leq[spec[k]][spec[j]])
          cover = false;
      if (cover) out << "  n" << i << " -> n" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace congruma
