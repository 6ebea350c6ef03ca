#include "congruma/residuated.hpp"

#include <algorithm>

namespace congruma {

ResiduatedView residuated_view(const FiniteAlgebra& a) {
  ResiduatedView v;
  v.lattice = lattice_view(a);
  v.prod_op = a.op_index("prod");
  v.impl_op = a.op_index("impl");
  if (v.prod_op < 0 || v.impl_op < 0 || a.ops[v.prod_op].arity != 2 ||
      a.ops[v.impl_op].arity != 2)
    throw Error("algebra '" + a.name +
                "' does not carry a residuated signature (prod/2, impl/2)");

  const auto& prod = a.ops[v.prod_op];
  const auto& impl = a.ops[v.impl_op];
  const auto& leq = v.lattice.leq;
  const Element one = v.lattice.top;
  const int n = a.size;

  for (int x = 0; x < n; ++x) {
    if (prod.eval(x, one) != x)
      throw Error("residuated lattice '" + a.name + "': top is not a unit at " +
                  a.label(x));
    for (int y = 0; y < n; ++y) {
      if (prod.eval(x, y) != prod.eval(y, x))
        throw Error("residuated lattice '" + a.name +
                    "': prod is not commutative at (" + a.label(x) + "," +
                    a.label(y) + ")");
      for (int z = 0; z < n; ++z) {
        if (prod.eval(x, prod.eval(y, z)) != prod.eval(prod.eval(x, y), z))
          throw Error("residuated lattice '" + a.name +
                      "': prod is not associative at (" + a.label(x) + "," +
                      a.label(y) + "," + a.label(z) + ")");
        bool lhs = leq[x][impl.eval(y, z)];
        bool rhs = leq[prod.eval(x, y)][z];
        if (lhs != rhs)
          throw Error("residuated lattice '" + a.name +
                      "': residuation fails at (" + a.label(x) + "," +
                      a.label(y) + "," + a.label(z) + ")");
      }
    }
  }
  return v;
}

bool is_residuated_lattice(const FiniteAlgebra& a) {
  try {
    residuated_view(a);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::vector<Element>> filters(const FiniteAlgebra& a,
                                          const ResiduatedView& v) {
  const int n = a.size;
  if (n > 20) throw Error("filter enumeration capped at 20 elements");
  const auto& prod = a.ops[v.prod_op];
  const auto& leq = v.lattice.leq;
  const Element one = v.lattice.top;

  std::vector<std::vector<Element>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> one & 1u)) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!(mask >> x & 1u)) continue;
      for (int y = 0; y < n && ok; ++y) {
        if (leq[x][y] && !(mask >> y & 1u)) ok = false;  // upward closure
        if ((mask >> y & 1u) && !(mask >> prod.eval(x, y) & 1u)) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<Element> f;
    for (int x = 0; x < n; ++x)
      if (mask >> x & 1u) f.push_back(x);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const auto& f, const auto& g) {
    if (f.size() != g.size()) return f.size() < g.size();
    return f < g;
  });
  return out;
}

Partition filter_congruence(const FiniteAlgebra& a, const ResiduatedView& v,
                            std::span<const Element> filter) {
  const auto& impl = a.ops[v.impl_op];
  const auto& mt = a.ops[v.lattice.meet_op];
  std::vector<bool> in(a.size, false);
  for (Element e : filter) in[e] = true;

  const int n = a.size;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Element biimp = mt.eval(impl.eval(x, y), impl.eval(y, x));
      if (in[biimp]) {
        int rx = find(x), ry = find(y);
        if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
      }
    }
  std::vector<int> raw(n);
  for (int e = 0; e < n; ++e) raw[e] = find(e);
  return Partition::from_assignment(std::move(raw));
}

bool filters_match_congruences(const FiniteAlgebra& a, const ResiduatedView& v,
                               const CongruenceLattice& con) {
  auto fs = filters(a, v);
  if (static_cast<int>(fs.size()) != con.count()) return false;
  std::vector<Partition> images;
  for (const auto& f : fs) {
    Partition p = filter_congruence(a, v, f);
    if (con.index_of(p) < 0) return false;
    images.push_back(std::move(p));
  }
  // injective (hence bijective by the count check)
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] == images[j]) return false;
  // order-preserving both ways
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j) {
      bool sub = std::includes(fs[j].begin(), fs[j].end(), fs[i].begin(),
                               fs[i].end());
      if (sub != images[i].refines(images[j])) return false;
    }
  return true;
}

}  // namespace congruma
