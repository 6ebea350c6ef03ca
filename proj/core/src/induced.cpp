#include "congruma/induced.hpp"

namespace congruma {

InducedHom induced_f_beta(const Homomorphism& f, const Partition& beta) {
  if (!is_congruence(*f.target, beta))
    throw Error("f_beta: " + render(beta, *f.target) +
                " is not a congruence of " + f.target->name);
  InducedHom out;
  out.source_q = quotient(f.source, preimage(f, beta));
  out.target_q = quotient(f.target, beta);

  std::vector<Element> map(out.source_q.algebra->size);
  for (std::size_t c = 0; c < out.source_q.reps.size(); ++c)
    map[c] = out.target_q.projection.map[f.map[out.source_q.reps[c]]];
  out.hom = validate_hom(out.source_q.algebra, out.target_q.algebra,
                         std::move(map));

  // The square with the two canonical projections must commute, and f_beta
  // must be injective.
  for (Element a = 0; a < f.source->size; ++a)
    if (out.hom.map[out.source_q.projection.map[a]] !=
        out.target_q.projection.map[f.map[a]])
      throw Error("internal: f_beta square does not commute");
  if (!out.hom.is_injective())
    throw Error("internal: f_beta is not injective");
  return out;
}

InducedHom induced_f_bracket(const Homomorphism& f, const Partition& theta) {
  Partition target_con = pushforward_cg(f, theta);
  InducedHom out;
  out.source_q = quotient(f.source, theta);
  out.target_q = quotient(f.target, target_con);

  std::vector<Element> map(out.source_q.algebra->size);
  for (std::size_t c = 0; c < out.source_q.reps.size(); ++c)
    map[c] = out.target_q.projection.map[f.map[out.source_q.reps[c]]];
  out.hom = validate_hom(out.source_q.algebra, out.target_q.algebra,
                         std::move(map));

  for (Element a = 0; a < f.source->size; ++a)
    if (out.hom.map[out.source_q.projection.map[a]] !=
        out.target_q.projection.map[f.map[a]])
      throw Error("internal: f_[theta] square does not commute");
  return out;
}

Partition phi_f(const Homomorphism& f, const Quotient& by_kernel,
                const Partition& beta) {
  if (!same_algebra(by_kernel.base, f.source) || by_kernel.theta != kernel(f))
    throw Error("phi_f: quotient is not by Ker(f)");
  return by_kernel.push(preimage(f, beta));
}

bool lo_char_radical(const Homomorphism& f, const SpectrumAnalysis& src,
                     const SpectrumAnalysis& dst) {
  int ker = src.con.index_of(kernel(f));
  for (int theta = 0; theta < src.con.count(); ++theta) {
    if (!src.con.leq[ker][theta]) continue;
    Partition pushed = pushforward_cg(f, src.con.cons[theta]);
    int pushed_idx = dst.con.index_of(pushed);
    if (pushed_idx < 0)
      throw Error("internal: pushforward congruence missing from Con(" +
                  f.target->name + ")");
    Partition lhs = preimage(f, radical(dst, pushed_idx));
    if (lhs != radical(src, theta)) return false;
  }
  return true;
}

bool gu_char_msystem(const Homomorphism& f, const SpectrumAnalysis& src,
                     const SpectrumAnalysis& dst) {
  if (!f.is_injective())
    throw Error("gu_char_msystem applies to embeddings only");

  for (int phi : src.report.spec) {
    const Partition& p = src.con.cons[phi];
    // Image of the m-system nabla_A minus phi.
    std::vector<std::pair<Element, Element>> avoid;
    for (Element a = 0; a < f.source->size; ++a)
      for (Element b = 0; b < f.source->size; ++b)
        if (!p.related(a, b)) avoid.emplace_back(f.map[a], f.map[b]);

    auto avoids = [&](int theta) {
      const Partition& t = dst.con.cons[theta];
      for (auto [x, y] : avoid)
        if (t.related(x, y)) return false;
      return true;
    };
    for (int psi = 0; psi < dst.con.count(); ++psi) {
      if (psi == dst.con.nabla_index || !avoids(psi)) continue;
      bool maximal = true;
      for (int chi = 0; chi < dst.con.count(); ++chi)
        if (chi != psi && chi != dst.con.nabla_index &&
            dst.con.leq[psi][chi] && avoids(chi)) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      if (preimage(f, dst.con.cons[psi]) != p) return false;
    }
  }
  return true;
}

}  // namespace congruma
