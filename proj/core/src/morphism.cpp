#include "congruma/morphism.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace congruma {

bool Homomorphism::is_injective() const {
  std::set<Element> seen(map.begin(), map.end());
  return static_cast<int>(seen.size()) == source->size;
}

bool Homomorphism::is_surjective() const {
  std::set<Element> seen(map.begin(), map.end());
  return static_cast<int>(seen.size()) == target->size;
}

Homomorphism validate_hom(AlgebraPtr source, AlgebraPtr target,
                          std::vector<Element> map) {
  const FiniteAlgebra& a = *source;
  const FiniteAlgebra& b = *target;
  if (static_cast<int>(map.size()) != a.size)
    throw Error("hom " + a.name + " -> " + b.name + ": map has " +
                std::to_string(map.size()) + " entries for " +
                std::to_string(a.size) + " elements");
  for (Element v : map)
    if (v < 0 || v >= b.size)
      throw Error("hom " + a.name + " -> " + b.name + ": image " +
                  std::to_string(v) + " outside the target carrier");
  if (!a.same_signature(b))
    throw Error("hom " + a.name + " -> " + b.name + ": signature mismatch");

  for (std::size_t k = 0; k < a.ops.size(); ++k) {
    const auto& opa = a.ops[k];
    const auto& opb = b.ops[k];
    std::size_t tuples = 1;
    for (int s = 0; s < opa.arity; ++s)
      tuples *= static_cast<std::size_t>(a.size);
    std::vector<Element> args(opa.arity), mapped(opa.arity);
    for (std::size_t t = 0; t < tuples; ++t) {
      std::size_t v = t;
      for (int s = opa.arity - 1; s >= 0; --s) {
        args[s] = static_cast<Element>(v % a.size);
        v /= a.size;
      }
      for (int s = 0; s < opa.arity; ++s) mapped[s] = map[args[s]];
      Element lhs = map[opa.arity == 0 ? opa.eval() : opa.eval(args)];
      Element rhs = opb.arity == 0 ? opb.eval() : opb.eval(mapped);
      if (lhs != rhs) {
        std::ostringstream os;
        os << "hom " << a.name << " -> " << b.name
           << ": compatibility fails for op '" << opa.name << "' at (";
        for (int s = 0; s < opa.arity; ++s) {
          if (s) os << ",";
          os << a.label(args[s]);
        }
        os << "): maps " << b.label(lhs) << " but computes " << b.label(rhs);
        throw Error(os.str());
      }
    }
  }
  Homomorphism h;
  h.source = std::move(source);
  h.target = std::move(target);
  h.map = std::move(map);
  return h;
}

Homomorphism identity_hom(const AlgebraPtr& a) {
  std::vector<Element> id(a->size);
  for (int i = 0; i < a->size; ++i) id[i] = i;
  Homomorphism h;
  h.source = a;
  h.target = a;
  h.map = std::move(id);
  return h;
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (!same_algebra(f.target, g.source))
    throw Error("compose: target of " + f.source->name + " -> " +
                f.target->name + " is not the source of " + g.source->name +
                " -> " + g.target->name);
  Homomorphism h;
  h.source = f.source;
  h.target = g.target;
  h.map.resize(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) h.map[i] = g.map[f.map[i]];
  return h;
}

Partition preimage(const Homomorphism& f, const Partition& beta) {
  if (beta.size() != f.target->size)
    throw Error("preimage: partition carrier does not match " +
                f.target->name);
  if (!is_congruence(*f.target, beta))
    throw Error("preimage: " + render(beta, *f.target) +
                " is not a congruence of " + f.target->name);
  std::vector<int> raw(f.source->size);
  for (int e = 0; e < f.source->size; ++e) raw[e] = beta.block[f.map[e]];
  return Partition::from_assignment(std::move(raw));
}

Partition kernel(const Homomorphism& f) {
  std::vector<int> raw(f.source->size);
  for (int e = 0; e < f.source->size; ++e) raw[e] = f.map[e];
  return Partition::from_assignment(std::move(raw));
}

ImageFactorization image_algebra(const Homomorphism& f) {
  std::vector<Element> range(f.map.begin(), f.map.end());
  std::sort(range.begin(), range.end());
  range.erase(std::unique(range.begin(), range.end()), range.end());
  ImageFactorization out;
  out.image = subalgebra_generate(f.target, range);

  std::vector<int> to_sub(f.target->size, -1);
  for (std::size_t i = 0; i < out.image.carrier.size(); ++i)
    to_sub[out.image.carrier[i]] = static_cast<int>(i);

  std::vector<Element> surj(f.source->size);
  for (int e = 0; e < f.source->size; ++e) surj[e] = to_sub[f.map[e]];
  out.surjection = validate_hom(f.source, out.image.algebra, std::move(surj));
  out.embedding =
      validate_hom(out.image.algebra, f.target, out.image.carrier);
  return out;
}

Partition pushforward_cg(const Homomorphism& f, const Partition& theta) {
  if (!is_congruence(*f.source, theta))
    throw Error("pushforward: " + render(theta, *f.source) +
                " is not a congruence of " + f.source->name);
  std::vector<std::pair<Element, Element>> pairs;
  for (auto [a, b] : theta.pairs()) pairs.emplace_back(f.map[a], f.map[b]);
  return cg_generated(*f.target, pairs);
}

std::string to_string(Verdict3 v) {
  switch (v) {
    case Verdict3::No: return "no";
    case Verdict3::Yes: return "yes";
    default: return "n/a";
  }
}

namespace {

void check_contexts(const Homomorphism& f, const SpectrumAnalysis& src,
                    const SpectrumAnalysis& dst) {
  if (!same_algebra(src.con.algebra, f.source) ||
      !same_algebra(dst.con.algebra, f.target))
    throw Error("morphism analysis: spectra do not belong to the morphism's "
                "algebras");
}

}  // namespace

MorphismVerdict analyze_morphism(const Homomorphism& f,
                                 const SpectrumAnalysis& src,
                                 const SpectrumAnalysis& dst) {
  check_contexts(f, src, dst);
  MorphismVerdict v;

  // Admissibility: every prime of the target pulls back to a prime.
  std::vector<int> pulled(dst.con.count(), -1);
  for (int i = 0; i < dst.con.count(); ++i) {
    std::vector<int> raw(f.source->size);
    for (int e = 0; e < f.source->size; ++e)
      raw[e] = dst.con.cons[i].block[f.map[e]];
    int idx = src.con.index_of(Partition::from_assignment(std::move(raw)));
    if (idx < 0)
      throw Error("internal: preimage of a congruence is not a congruence");
    pulled[i] = idx;
  }

  v.admissible = true;
  for (int psi : dst.report.spec) {
    if (!src.is_prime(pulled[psi])) {
      v.admissible = false;
      v.adm_witness = MorphismVerdict::AdmissibilityWitness{
          dst.con.cons[psi], src.con.cons[pulled[psi]]};
      break;
    }
  }
  if (!v.admissible) {
    v.gu = Verdict3::NA;
    v.lo = Verdict3::NA;
    return v;
  }

  // GU: V_A(f*(psi)) inside f*(V_B(psi)) for every prime psi of B.
  v.gu = Verdict3::Yes;
  for (int psi : dst.report.spec) {
    std::set<int> hit;
    for (int chi : v_set(dst, psi)) hit.insert(pulled[chi]);
    for (int phi : v_set(src, pulled[psi])) {
      if (!hit.count(phi)) {
        v.gu = Verdict3::No;
        v.gu_witness = MorphismVerdict::GuWitness{
            src.con.cons[pulled[psi]], src.con.cons[phi], dst.con.cons[psi]};
        break;
      }
    }
    if (v.gu == Verdict3::No) break;
  }

  // LO: V_A(Ker f) inside f*(Spec B).
  v.lo = Verdict3::Yes;
  int ker = pulled[dst.con.delta_index];
  std::set<int> image_primes;
  for (int psi : dst.report.spec) image_primes.insert(pulled[psi]);
  for (int phi : v_set(src, ker)) {
    if (!image_primes.count(phi)) {
      v.lo = Verdict3::No;
      v.lo_witness = MorphismVerdict::LoWitness{src.con.cons[phi]};
      break;
    }
  }
  return v;
}

bool spec_map_closed(const Homomorphism& f, const SpectrumAnalysis& src,
                     const SpectrumAnalysis& dst) {
  check_contexts(f, src, dst);
  for (int theta = 0; theta < dst.con.count(); ++theta) {
    std::vector<int> image;
    for (int chi : v_set(dst, theta)) {
      int idx = src.con.index_of(preimage(f, dst.con.cons[chi]));
      if (!src.is_prime(idx))
        throw Error("spec_map_closed requires an admissible morphism");
      image.push_back(idx);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (stone_closure(src, image) != image) return false;
  }
  return true;
}

std::string render_verdict(const MorphismVerdict& v, const Homomorphism& f) {
  const FiniteAlgebra& a = *f.source;
  const FiniteAlgebra& b = *f.target;
  std::ostringstream out;
  out << "admissible: " << (v.admissible ? "yes" : "no") << "\n";
  out << "GU: " << to_string(v.gu) << "\n";
  out << "LO: " << to_string(v.lo) << "\n";
  if (v.adm_witness) {
    out << "witness (admissibility): prime " << render(v.adm_witness->psi, b)
        << " of " << b.name << " pulls back to "
        << render(v.adm_witness->preimage, a) << ", not prime in " << a.name
        << "\n";
  }
  if (v.gu_witness) {
    out << "witness (GU): phi = " << render(v.gu_witness->phi, a)
        << " <= psi = " << render(v.gu_witness->psi, a) << ", phi1 = "
        << render(v.gu_witness->phi1, b)
        << " pulls back to phi but no prime above phi1 pulls back to psi\n";
  }
  if (v.lo_witness) {
    out << "witness (LO): prime " << render(v.lo_witness->phi, a)
        << " above Ker lies outside the image of Spec(" << b.name << ")\n";
  }
  return out.str();
}

}  // namespace congruma
