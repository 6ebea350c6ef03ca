// Random bounded lattices and random bounded-lattice morphisms for the
// property suites. Lattices are sampled as intersection-closed set families
// (every such family ordered by inclusion is a lattice, and every finite
// lattice arises this way); morphisms by backtracking search over a linear
// extension with join/meet consistency pruning.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "congruma/congruence.hpp"
#include "congruma/constructions.hpp"
#include "congruma/morphism.hpp"

namespace testsupport {

using namespace congruma;
using Rng = std::mt19937_64;

inline AlgebraPtr random_lattice(Rng& rng, int min_size, int max_size,
                                 const std::string& name) {
  const int ground = 5;
  const unsigned full = (1u << ground) - 1;
  for (;;) {
    std::vector<unsigned> family{full};
    std::uniform_int_distribution<unsigned> pick(0, full);
    int additions = std::uniform_int_distribution<int>(2, 7)(rng);
    for (int i = 0; i < additions; ++i) {
      unsigned m = pick(rng);
      if (std::find(family.begin(), family.end(), m) == family.end())
        family.push_back(m);
      // close under pairwise intersection to a fixpoint
      for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
          unsigned c = family[a] & family[b];
          if (std::find(family.begin(), family.end(), c) == family.end())
            family.push_back(c);
        }
      if (static_cast<int>(family.size()) > max_size) break;
    }
    int n = static_cast<int>(family.size());
    if (n < min_size || n > max_size) continue;

    std::sort(family.begin(), family.end(), [](unsigned a, unsigned b) {
      int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    // unique bottom required (the global intersection); top is `full`
    bool bottom_ok = true;
    for (unsigned m : family)
      if ((family[0] & m) != family[0]) bottom_ok = false;
    if (!bottom_ok) continue;

    BoundedLatticeSpec spec;
    spec.name = name;
    for (int i = 0; i < n; ++i) spec.labels.push_back("e" + std::to_string(i));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if ((family[i] & family[j]) != family[i]) continue;  // need i <= j
        bool cover = true;
        for (int k = 0; k < n && cover; ++k) {
          if (k == i || k == j) continue;
          if ((family[i] & family[k]) == family[i] &&
              (family[k] & family[j]) == family[k])
            cover = false;
        }
        if (cover) spec.covers.emplace_back(i, j);
      }
    spec.bottom = 0;
    spec.top = n - 1;
    return lattice_from_covers(spec);
  }
}

/// All bounded-lattice morphisms src -> dst, up to `limit` (backtracking in
/// a linear extension order; value order shuffled by the rng).
inline std::vector<Homomorphism> enumerate_lattice_homs(
    const AlgebraPtr& src, const AlgebraPtr& dst, Rng& rng,
    std::size_t limit = 64) {
  LatticeView va = lattice_view(*src);
  LatticeView vb = lattice_view(*dst);
  const int n = src->size;

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> rank(n, 0);
  for (int e = 0; e < n; ++e)
    for (int x = 0; x < n; ++x)
      if (x != e && va.leq[x][e]) ++rank[e];
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return rank[a] != rank[b] ? rank[a] < rank[b]
                                                          : a < b; });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  std::vector<int> values(dst->size);
  for (int i = 0; i < dst->size; ++i) values[i] = i;
  std::shuffle(values.begin(), values.end(), rng);

  std::vector<Element> map(n, -1);
  std::vector<Homomorphism> found;

  std::function<void(int)> rec = [&](int step) {
    if (found.size() >= limit) return;
    if (step == n) {
      try {
        found.push_back(validate_hom(src, dst, map));
      } catch (const Error&) {
      }
      return;
    }
    int e = order[step];
    auto consistent = [&](Element v) {
      if (e == va.bottom && v != vb.bottom) return false;
      if (e == va.top && v != vb.top) return false;
      for (int s = 0; s < step; ++s) {
        int e2 = order[s];
        if (va.leq[e2][e] && !vb.leq[map[e2]][v]) return false;
        if (va.leq[e][e2] && !vb.leq[v][map[e2]]) return false;
        // joins/meets of earlier pairs that land on e
        for (int s2 = 0; s2 <= s; ++s2) {
          int e3 = order[s2];
          if (va.join(e2, e3) == e && vb.join(map[e2], map[e3]) != v)
            return false;
          if (va.meet(e2, e3) == e && vb.meet(map[e2], map[e3]) != v)
            return false;
        }
      }
      return true;
    };
    for (Element v : values) {
      if (!consistent(v)) continue;
      map[e] = v;
      rec(step + 1);
      map[e] = -1;
      if (found.size() >= limit) return;
    }
  };
  rec(0);
  return found;
}

/// One random morphism src -> dst, when any exists.
inline std::optional<Homomorphism> random_lattice_hom(const AlgebraPtr& src,
                                                      const AlgebraPtr& dst,
                                                      Rng& rng) {
  auto all = enumerate_lattice_homs(src, dst, rng, 32);
  if (all.empty()) return std::nullopt;
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(
      rng)];
}

/// Random quotient projection of `a`.
inline Homomorphism random_projection(const AlgebraPtr& a,
                                      const CongruenceLattice& con, Rng& rng) {
  int idx = std::uniform_int_distribution<int>(0, con.count() - 1)(rng);
  return quotient(a, con.cons[idx]).projection;
}

/// Random bounded sublattice embedding into `a`.
inline Homomorphism random_embedding(const AlgebraPtr& a, Rng& rng) {
  LatticeView v = lattice_view(*a);
  std::vector<Element> seed{v.bottom, v.top};
  std::uniform_int_distribution<int> pick(0, a->size - 1);
  int extra = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < extra; ++i) seed.push_back(pick(rng));
  Subalgebra sub = subalgebra_generate(a, seed);
  return validate_hom(sub.algebra, a, sub.carrier);
}

}  // namespace testsupport
