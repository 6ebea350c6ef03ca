#include "congruma/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace congruma {

namespace {

std::size_t table_size(int carrier, int arity) {
  std::size_t s = 1;
  for (int i = 0; i < arity; ++i) s *= static_cast<std::size_t>(carrier);
  return s;
}

}  // namespace

Element Product::index_of(std::span<const Element> tuple) const {
  Element idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    idx += tuple[i] * strides[i];
  return idx;
}

std::vector<Element> Product::tuple_of(Element e) const {
  std::vector<Element> t(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    t[i] = e / strides[i];
    e %= strides[i];
  }
  return t;
}

Partition Product::combine(std::span<const Partition> parts) const {
  if (parts.size() != factors.size())
    throw Error("product combine: wrong number of components");
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].size() != factors[i]->size)
      throw Error("product combine: component " + std::to_string(i) +
                  " has the wrong carrier");
  std::vector<int> raw(algebra->size);
  for (Element e = 0; e < algebra->size; ++e) {
    auto t = tuple_of(e);
    int code = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
      code = code * parts[i].num_blocks + parts[i].block[t[i]];
    raw[e] = code;
  }
  return Partition::from_assignment(std::move(raw));
}

std::optional<std::vector<Partition>> Product::decompose(
    const Partition& theta) const {
  if (theta.size() != algebra->size)
    throw Error("product decompose: carrier mismatch");
  std::vector<Partition> parts;
  std::vector<Element> zero(factors.size(), 0);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const int ni = factors[i]->size;
    std::vector<int> raw(ni);
    std::vector<Element> probe = zero;
    std::vector<int> rep(ni);
    for (Element a = 0; a < ni; ++a) {
      probe[i] = a;
      rep[a] = index_of(probe);
    }
    for (Element a = 0; a < ni; ++a) raw[a] = theta.block[rep[a]];
    parts.push_back(Partition::from_assignment(std::move(raw)));
  }
  if (combine(parts) != theta) return std::nullopt;
  return parts;
}

Product direct_product(std::vector<AlgebraPtr> factors) {
  if (factors.empty()) throw Error("product of no factors");
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (!factors[0]->same_signature(*factors[i]))
      throw Error("product: factors '" + factors[0]->name + "' and '" +
                  factors[i]->name + "' have different signatures");

  Product p;
  p.factors = factors;
  p.strides.resize(factors.size());
  std::size_t total = 1;
  for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
    p.strides[i] = static_cast<int>(total);
    total *= static_cast<std::size_t>(factors[i]->size);
  }
  if (total > 1u << 20)
    throw Error("product carrier too large");
  const int n = static_cast<int>(total);

  std::vector<OperationTable> ops;
  for (std::size_t k = 0; k < factors[0]->ops.size(); ++k) {
    const int arity = factors[0]->ops[k].arity;
    OperationTable op{factors[0]->ops[k].name, arity, n,
                      std::vector<Element>(table_size(n, arity))};
    std::vector<Element> args(arity);
    std::vector<std::vector<Element>> tuples(arity);
    std::vector<Element> out_tuple(factors.size());
    std::vector<Element> local(arity);
    for (std::size_t idx = 0; idx < op.table.size(); ++idx) {
      std::size_t t = idx;
      for (int s = arity - 1; s >= 0; --s) {
        args[s] = static_cast<Element>(t % n);
        t /= n;
      }
      for (int s = 0; s < arity; ++s) tuples[s] = p.tuple_of(args[s]);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        for (int s = 0; s < arity; ++s) local[s] = tuples[s][i];
        const auto& fop = factors[i]->ops[k];
        out_tuple[i] = arity == 0 ? fop.eval() : fop.eval(local);
      }
      op.table[idx] = p.index_of(out_tuple);
    }
    ops.push_back(std::move(op));
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element e = 0; e < n; ++e) {
    auto t = p.tuple_of(e);
    std::string l;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) l += ".";
      l += factors[i]->label(t[i]);
    }
    labels.push_back(std::move(l));
  }
  std::string name;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) name += "x";
    name += factors[i]->name;
  }
  p.algebra = make_algebra(std::move(name), n, std::move(ops), std::move(labels));
  return p;
}

Homomorphism product_hom(const Product& src, const Product& dst,
                         std::span<const Homomorphism> fs) {
  if (fs.size() != src.factors.size() || fs.size() != dst.factors.size())
    throw Error("product_hom: factor count mismatch");
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!same_algebra(fs[i].source, src.factors[i]) ||
        !same_algebra(fs[i].target, dst.factors[i]))
      throw Error("product_hom: component " + std::to_string(i) +
                  " does not map the matching factors");
  std::vector<Element> map(src.algebra->size);
  std::vector<Element> out(fs.size());
  for (Element e = 0; e < src.algebra->size; ++e) {
    auto t = src.tuple_of(e);
    for (std::size_t i = 0; i < fs.size(); ++i) out[i] = fs[i].map[t[i]];
    map[e] = dst.index_of(out);
  }
  Homomorphism h = validate_hom(src.algebra, dst.algebra, std::move(map));

  std::vector<Partition> kers;
  for (const auto& f : fs) kers.push_back(kernel(f));
  if (kernel(h) != src.combine(kers))
    throw Error("internal: product kernel is not the product of kernels");
  return h;
}

Partition Quotient::push(const Partition& gamma) const {
  if (!theta.refines(gamma))
    throw Error("quotient push: partition does not contain theta");
  std::vector<int> raw(algebra->size);
  for (std::size_t c = 0; c < reps.size(); ++c) raw[c] = gamma.block[reps[c]];
  return Partition::from_assignment(std::move(raw));
}

Partition Quotient::lift(const Partition& q) const {
  if (q.size() != algebra->size)
    throw Error("quotient lift: carrier mismatch");
  std::vector<int> raw(base->size);
  for (Element e = 0; e < base->size; ++e)
    raw[e] = q.block[projection.map[e]];
  return Partition::from_assignment(std::move(raw));
}

Quotient quotient(const AlgebraPtr& a, const Partition& theta) {
  if (!is_congruence(*a, theta))
    throw Error("quotient: " + render(theta, *a) +
                " is not a congruence of " + a->name);
  Quotient q;
  q.base = a;
  q.theta = theta;
  const int m = theta.num_blocks;
  q.reps.assign(m, -1);
  for (Element e = a->size - 1; e >= 0; --e) q.reps[theta.block[e]] = e;

  std::vector<OperationTable> ops;
  for (const auto& op : a->ops) {
    OperationTable qop{op.name, op.arity, m,
                       std::vector<Element>(table_size(m, op.arity))};
    std::vector<Element> args(op.arity);
    for (std::size_t idx = 0; idx < qop.table.size(); ++idx) {
      std::size_t t = idx;
      for (int s = op.arity - 1; s >= 0; --s) {
        args[s] = q.reps[t % m];
        t /= m;
      }
      Element out = op.arity == 0 ? op.eval() : op.eval(args);
      qop.table[idx] = theta.block[out];
    }
    ops.push_back(std::move(qop));
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int c = 0; c < m; ++c)
    labels.push_back("[" + a->label(q.reps[c]) + "]");
  q.algebra = make_algebra(a->name + ".q", m, std::move(ops), std::move(labels));

  std::vector<Element> proj(a->size);
  for (Element e = 0; e < a->size; ++e) proj[e] = theta.block[e];
  q.projection = validate_hom(a, q.algebra, std::move(proj));
  return q;
}

Element OrdinalSum::to_global(int summand, Element local) const {
  const auto& v = views[summand];
  if (summand > 0 && local == v.bottom)
    return to_global(summand - 1, views[summand - 1].top);
  int idx = offsets[summand];
  for (Element e = 0; e < local; ++e)
    if (!(summand > 0 && e == v.bottom)) ++idx;
  // offsets[summand] points at the first owned element of the summand; skip
  // the glued bottom when counting.
  return idx;
}

Partition OrdinalSum::combine(std::span<const Partition> parts) const {
  if (static_cast<int>(parts.size()) != count())
    throw Error("ordinal sum combine: wrong number of components");
  const int n = algebra->size;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s = 0; s < count(); ++s) {
    if (parts[s].size() != summands[s]->size)
      throw Error("ordinal sum combine: component " + std::to_string(s) +
                  " has the wrong carrier");
    if (!is_congruence(*summands[s], parts[s]))
      throw Error("ordinal sum combine: component " + std::to_string(s) +
                  " is not a congruence of " + summands[s]->name);
    for (auto [a, b] : parts[s].pairs()) {
      int x = find(to_global(s, a)), y = find(to_global(s, b));
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::vector<int> raw(n);
  for (int e = 0; e < n; ++e) raw[e] = find(e);
  return Partition::from_assignment(std::move(raw));
}

OrdinalSum ordinal_sum(std::vector<AlgebraPtr> summands) {
  if (summands.empty()) throw Error("ordinal sum of no summands");
  OrdinalSum os;
  os.summands = summands;
  for (const auto& s : summands) os.views.push_back(lattice_view(*s));

  int total = 0;
  os.offsets.resize(summands.size());
  for (std::size_t i = 0; i < summands.size(); ++i) {
    os.offsets[i] = total;
    total += summands[i]->size - (i > 0 ? 1 : 0);
  }
  // offsets[i] = first element owned by summand i; for i>0 the bottom is not
  // owned (it is the previous top), so owned elements of i start right after
  // summand i-1's block.

  const int n = total;
  std::vector<std::pair<int, Element>> owner(n);  // global -> (summand, local)
  for (std::size_t i = 0; i < summands.size(); ++i) {
    int idx = os.offsets[i];
    for (Element e = 0; e < summands[i]->size; ++e) {
      if (i > 0 && e == os.views[i].bottom) continue;
      owner[idx++] = {static_cast<int>(i), e};
    }
  }

  auto region = [&](Element g) { return owner[g].first; };
  auto local = [&](Element g) { return owner[g].second; };

  OperationTable jn{"join", 2, n, std::vector<Element>(n * n)};
  OperationTable mt{"meet", 2, n, std::vector<Element>(n * n)};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element j, m;
      int rx = region(x), ry = region(y);
      if (rx == ry) {
        const auto& v = os.views[rx];
        j = os.to_global(rx, v.join(local(x), local(y)));
        m = os.to_global(rx, v.meet(local(x), local(y)));
      } else if (rx < ry) {
        j = y;
        m = x;
      } else {
        j = x;
        m = y;
      }
      jn.table[x * n + y] = j;
      mt.table[x * n + y] = m;
    }
  OperationTable bot{"bot", 0, n, {os.to_global(0, os.views[0].bottom)}};
  OperationTable top{
      "top", 0, n,
      {os.to_global(static_cast<int>(summands.size()) - 1,
                    os.views.back().top)}};

  std::vector<std::string> labels(n);
  std::set<std::string> used;
  for (Element g = 0; g < n; ++g) {
    std::string l = summands[owner[g].first]->label(owner[g].second);
    if (used.count(l)) l += "_" + std::to_string(owner[g].first);
    while (used.count(l)) l += "'";
    used.insert(l);
    labels[g] = std::move(l);
  }
  std::string name;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) name += "+";
    name += summands[i]->name;
  }
  os.algebra = make_algebra(std::move(name), n, {jn, mt, bot, top},
                            std::move(labels));
  return os;
}

Homomorphism ordinal_sum_hom(const OrdinalSum& src, const OrdinalSum& dst,
                             std::span<const Homomorphism> hs) {
  if (hs.size() != src.summands.size() || hs.size() != dst.summands.size())
    throw Error("ordinal_sum_hom: summand count mismatch");
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (!same_algebra(hs[i].source, src.summands[i]) ||
        !same_algebra(hs[i].target, dst.summands[i]))
      throw Error("ordinal_sum_hom: component " + std::to_string(i) +
                  " does not map the matching summands");

  std::vector<Element> map(src.algebra->size, -1);
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (Element e = 0; e < src.summands[i]->size; ++e)
      map[src.to_global(static_cast<int>(i), e)] =
          dst.to_global(static_cast<int>(i), hs[i].map[e]);
  return validate_hom(src.algebra, dst.algebra, std::move(map));
}

}  // namespace congruma
