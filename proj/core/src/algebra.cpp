#include "congruma/algebra.hpp"

#include <algorithm>
#include <cmath>
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

std::optional<Element> FiniteAlgebra::element_of(const std::string& lbl) const {
  if (labels.empty()) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(lbl, &pos);
      if (pos == lbl.size() && v >= 0 && v < size) return v;
    } catch (...) {
    }
    return std::nullopt;
  }
  for (int i = 0; i < size; ++i)
    if (labels[i] == lbl) return i;
  return std::nullopt;
}

bool FiniteAlgebra::same_signature(const FiniteAlgebra& other) const {
  if (ops.size() != other.ops.size()) return false;
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (ops[i].name != other.ops[i].name || ops[i].arity != other.ops[i].arity)
      return false;
  return true;
}

AlgebraPtr make_algebra(std::string name, int size,
                        std::vector<OperationTable> ops,
                        std::vector<std::string> labels) {
  if (size < 1) throw Error("algebra '" + name + "' must be non-empty");
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != size)
      throw Error("algebra '" + name + "': " + std::to_string(labels.size()) +
                  " labels for " + std::to_string(size) + " elements");
    std::set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second)
        throw Error("algebra '" + name + "': duplicate label '" + l + "'");
  }
  for (auto& op : ops) {
    if (op.arity < 0)
      throw Error("op '" + op.name + "': negative arity");
    op.carrier = size;
    std::size_t want = table_size(size, op.arity);
    if (op.table.size() != want)
      throw Error("op '" + op.name + "': table has " +
                  std::to_string(op.table.size()) + " entries, expected " +
                  std::to_string(want));
    for (std::size_t i = 0; i < op.table.size(); ++i)
      if (op.table[i] < 0 || op.table[i] >= size)
        throw Error("op '" + op.name + "': entry " +
                    std::to_string(op.table[i]) + " at tuple index " +
                    std::to_string(i) + " is outside the carrier [0," +
                    std::to_string(size) + ")");
  }
  auto a = std::make_shared<FiniteAlgebra>();
  a->name = std::move(name);
  a->size = size;
  a->labels = std::move(labels);
  a->ops = std::move(ops);
  return a;
}

namespace {

/// Reflexive-transitive closure of the covers; throws on cycles.
std::vector<std::vector<bool>> order_from_covers(
    int n, const std::vector<std::pair<int, int>>& covers,
    const std::string& name) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [lo, hi] : covers) leq[lo][hi] = true;
  // Floyd-Warshall style closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        throw Error("lattice '" + name + "': covers are cyclic (" +
                    std::to_string(i) + " and " + std::to_string(j) +
                    " are mutually below each other)");
  return leq;
}

void check_lattice_laws(const FiniteAlgebra& a, const LatticeView& v);

}  // namespace

AlgebraPtr lattice_from_covers(const BoundedLatticeSpec& spec) {
  const int n = static_cast<int>(spec.labels.size());
  if (n < 1) throw Error("lattice '" + spec.name + "' has no elements");
  auto leq = order_from_covers(n, spec.covers, spec.name);

  for (int i = 0; i < n; ++i) {
    if (!leq[spec.bottom][i])
      throw Error("lattice '" + spec.name + "': bottom '" +
                  spec.labels[spec.bottom] + "' is not below '" +
                  spec.labels[i] + "'");
    if (!leq[i][spec.top])
      throw Error("lattice '" + spec.name + "': top '" +
                  spec.labels[spec.top] + "' is not above '" + spec.labels[i] +
                  "'");
  }

  auto bound = [&](int x, int y, bool upper) -> int {
    std::vector<int> cands;
    for (int z = 0; z < n; ++z) {
      bool ok = upper ? (leq[x][z] && leq[y][z]) : (leq[z][x] && leq[z][y]);
      if (ok) cands.push_back(z);
    }
    // least (resp. greatest) element of cands, if unique
    for (int z : cands) {
      bool extremal = true;
      for (int w : cands)
        if (upper ? !leq[z][w] : !leq[w][z]) {
          extremal = false;
          break;
        }
      if (extremal) return z;
    }
    return -1;
  };

  OperationTable jn{"join", 2, n, std::vector<Element>(n * n)};
  OperationTable mt{"meet", 2, n, std::vector<Element>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int j = bound(x, y, true);
      if (j < 0)
        throw Error("lattice '" + spec.name + "': elements '" +
                    spec.labels[x] + "' and '" + spec.labels[y] +
                    "' have no unique join");
      int m = bound(x, y, false);
      if (m < 0)
        throw Error("lattice '" + spec.name + "': elements '" +
                    spec.labels[x] + "' and '" + spec.labels[y] +
                    "' have no unique meet");
      jn.table[x * n + y] = j;
      mt.table[x * n + y] = m;
    }
  OperationTable bot{"bot", 0, n, {spec.bottom}};
  OperationTable top{"top", 0, n, {spec.top}};

  auto alg = make_algebra(spec.name, n, {jn, mt, bot, top}, spec.labels);

  // Self-check at build time for desk-scale lattices.
  if (n <= 12) {
    LatticeView v;
    v.size = n;
    v.join_op = 0;
    v.meet_op = 1;
    v.bottom = spec.bottom;
    v.top = spec.top;
    v.leq = leq;
    check_lattice_laws(*alg, v);
  }
  return alg;
}

Subalgebra subalgebra_generate(const AlgebraPtr& parent,
                               std::span<const Element> seed) {
  if (seed.empty()) throw Error("subalgebra seed must be non-empty");
  const FiniteAlgebra& a = *parent;
  std::vector<bool> in(a.size, false);
  std::vector<Element> carrier;
  auto add = [&](Element e) {
    if (!in[e]) {
      in[e] = true;
      carrier.push_back(e);
    }
  };
  for (Element e : seed) {
    if (e < 0 || e >= a.size)
      throw Error("seed element " + std::to_string(e) + " outside carrier");
    add(e);
  }
  // Close under all operations.
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& op : a.ops) {
      std::vector<Element> args(op.arity, 0);
      std::vector<int> pos(op.arity, 0);
      const int m = static_cast<int>(carrier.size());
      bool done = op.arity > 0 && m == 0;
      while (!done) {
        for (int s = 0; s < op.arity; ++s) args[s] = carrier[pos[s]];
        Element out = op.arity == 0 ? op.eval() : op.eval(args);
        if (!in[out]) {
          add(out);
          grew = true;
        }
        int s = op.arity - 1;
        for (; s >= 0; --s) {
          if (++pos[s] < m) break;
          pos[s] = 0;
        }
        if (s < 0) done = true;
        if (op.arity == 0) done = true;
      }
    }
  }
  std::sort(carrier.begin(), carrier.end());

  std::vector<int> to_sub(a.size, -1);
  for (std::size_t i = 0; i < carrier.size(); ++i) to_sub[carrier[i]] = i;
  const int m = static_cast<int>(carrier.size());

  std::vector<OperationTable> ops;
  for (const auto& op : a.ops) {
    OperationTable sub{op.name, op.arity, m,
                       std::vector<Element>(table_size(m, op.arity))};
    std::vector<Element> args(op.arity, 0);
    std::size_t count = sub.table.size();
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t t = idx;
      for (int s = op.arity - 1; s >= 0; --s) {
        args[s] = carrier[t % m];
        t /= m;
      }
      Element out = op.arity == 0 ? op.eval() : op.eval(args);
      sub.table[idx] = to_sub[out];
    }
    ops.push_back(std::move(sub));
  }
  std::vector<std::string> labels;
  if (!a.labels.empty())
    for (Element e : carrier) labels.push_back(a.labels[e]);

  Subalgebra out;
  out.algebra = make_algebra(a.name + ".sub", m, std::move(ops), std::move(labels));
  out.carrier = std::move(carrier);
  return out;
}

SquareAlgebra square_algebra(const AlgebraPtr& base) {
  const FiniteAlgebra& a = *base;
  const int n = a.size;
  const int n2 = n * n;
  std::vector<OperationTable> ops;
  for (const auto& op : a.ops) {
    OperationTable sq{op.name, op.arity, n2,
                      std::vector<Element>(table_size(n2, op.arity))};
    std::vector<Element> left(op.arity), right(op.arity);
    for (std::size_t idx = 0; idx < sq.table.size(); ++idx) {
      std::size_t t = idx;
      for (int s = op.arity - 1; s >= 0; --s) {
        int e = static_cast<int>(t % n2);
        left[s] = e / n;
        right[s] = e % n;
        t /= n2;
      }
      Element lo = op.arity == 0 ? op.eval() : op.eval(left);
      Element ro = op.arity == 0 ? op.eval() : op.eval(right);
      sq.table[idx] = lo * n + ro;
    }
    ops.push_back(std::move(sq));
  }
  std::vector<std::string> labels;
  if (!a.labels.empty()) {
    labels.reserve(n2);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        labels.push_back(a.labels[x] + "." + a.labels[y]);
  }
  SquareAlgebra out;
  out.algebra =
      make_algebra(a.name + "^2", n2, std::move(ops), std::move(labels));
  out.base_size = n;
  return out;
}

Element LatticeView::join(Element a, Element b) const {
  for (Element z = 0; z < size; ++z)
    if (leq[a][z] && leq[b][z]) {
      bool least = true;
      for (Element w = 0; w < size; ++w)
        if (leq[a][w] && leq[b][w] && !leq[z][w]) {
          least = false;
          break;
        }
      if (least) return z;
    }
  return -1;
}

Element LatticeView::meet(Element a, Element b) const {
  for (Element z = 0; z < size; ++z)
    if (leq[z][a] && leq[z][b]) {
      bool greatest = true;
      for (Element w = 0; w < size; ++w)
        if (leq[w][a] && leq[w][b] && !leq[w][z]) {
          greatest = false;
          break;
        }
      if (greatest) return z;
    }
  return -1;
}

std::vector<std::pair<Element, Element>> LatticeView::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < size; ++a)
    for (Element b = 0; b < size; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool cover = true;
      for (Element c = 0; c < size && cover; ++c)
        if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

namespace {

void check_lattice_laws(const FiniteAlgebra& a, const LatticeView& v) {
  const auto& jn = a.ops[v.join_op];
  const auto& mt = a.ops[v.meet_op];
  const int n = a.size;
  for (int x = 0; x < n; ++x) {
    if (jn.eval(x, x) != x || mt.eval(x, x) != x)
      throw Error("lattice '" + a.name + "': idempotence fails at " +
                  a.label(x));
    for (int y = 0; y < n; ++y) {
      if (jn.eval(x, y) != jn.eval(y, x) || mt.eval(x, y) != mt.eval(y, x))
        throw Error("lattice '" + a.name + "': commutativity fails at (" +
                    a.label(x) + "," + a.label(y) + ")");
      if (jn.eval(x, mt.eval(x, y)) != x || mt.eval(x, jn.eval(x, y)) != x)
        throw Error("lattice '" + a.name + "': absorption fails at (" +
                    a.label(x) + "," + a.label(y) + ")");
      for (int z = 0; z < n; ++z) {
        if (jn.eval(x, jn.eval(y, z)) != jn.eval(jn.eval(x, y), z) ||
            mt.eval(x, mt.eval(y, z)) != mt.eval(mt.eval(x, y), z))
          throw Error("lattice '" + a.name + "': associativity fails at (" +
                      a.label(x) + "," + a.label(y) + "," + a.label(z) + ")");
      }
    }
  }
}

}  // namespace

LatticeView lattice_view(const FiniteAlgebra& a) {
  LatticeView v;
  v.size = a.size;
  v.join_op = a.op_index("join");
  v.meet_op = a.op_index("meet");
  int bot_op = a.op_index("bot");
  int top_op = a.op_index("top");
  if (v.join_op < 0 || v.meet_op < 0 || bot_op < 0 || top_op < 0 ||
      a.ops[v.join_op].arity != 2 || a.ops[v.meet_op].arity != 2 ||
      a.ops[bot_op].arity != 0 || a.ops[top_op].arity != 0)
    throw Error("algebra '" + a.name +
                "' does not carry a bounded-lattice signature "
                "(join/2, meet/2, bot/0, top/0)");
  v.bottom = a.ops[bot_op].eval();
  v.top = a.ops[top_op].eval();

  check_lattice_laws(a, v);

  const auto& jn = a.ops[v.join_op];
  v.leq.assign(a.size, std::vector<bool>(a.size, false));
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y) v.leq[x][y] = jn.eval(x, y) == y;
  for (int x = 0; x < a.size; ++x) {
    if (!v.leq[v.bottom][x])
      throw Error("algebra '" + a.name + "': bot is not the least element");
    if (!v.leq[x][v.top])
      throw Error("algebra '" + a.name + "': top is not the greatest element");
    const auto& mt = a.ops[v.meet_op];
    for (int y = 0; y < a.size; ++y)
      if (v.leq[x][y] != (mt.eval(x, y) == x))
        throw Error("algebra '" + a.name +
                    "': join and meet induce different orders");
  }
  return v;
}

bool is_bounded_lattice(const FiniteAlgebra& a) {
  try {
    lattice_view(a);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool lattice_is_distributive(const LatticeView& v) {
  for (int x = 0; x < v.size; ++x)
    for (int y = 0; y < v.size; ++y)
      for (int z = 0; z < v.size; ++z)
        if (v.meet(x, v.join(y, z)) != v.join(v.meet(x, y), v.meet(x, z)))
          return false;
  return true;
}

}  // namespace congruma
