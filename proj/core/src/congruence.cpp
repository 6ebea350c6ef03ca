#include "congruma/congruence.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace congruma {

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  if (p.size() != a.size)
    throw Error("partition carrier does not match algebra '" + a.name + "'");
  const int n = a.size;
  for (const auto& op : a.ops) {
    if (op.arity == 0) continue;
    std::vector<Element> lhs(op.arity), rhs(op.arity);
    // For each tuple and each slot, swap one coordinate with a related
    // element; multi-slot changes follow by transitivity.
    std::size_t tuples = 1;
    for (int s = 0; s < op.arity; ++s) tuples *= static_cast<std::size_t>(n);
    for (std::size_t t = 0; t < tuples; ++t) {
      std::size_t v = t;
      for (int s = op.arity - 1; s >= 0; --s) {
        lhs[s] = static_cast<Element>(v % n);
        v /= n;
      }
      Element base = op.eval(lhs);
      rhs = lhs;
      for (int s = 0; s < op.arity; ++s) {
        for (Element e = lhs[s] + 1; e < n; ++e) {
          if (!p.related(lhs[s], e)) continue;
          rhs[s] = e;
          if (!p.related(base, op.eval(rhs))) return false;
        }
        rhs[s] = lhs[s];
      }
    }
  }
  return true;
}

Partition cg_generated(const FiniteAlgebra& a,
                       std::span<const std::pair<Element, Element>> pairs) {
  const int n = a.size;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  // Worklist of merged root pairs; every union event is propagated through
  // every operation slot, so each congruence class stays connected by
  // processed pairs.
  std::vector<std::pair<Element, Element>> work;
  auto unite = [&](Element x, Element y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return;
    parent[std::max(rx, ry)] = std::min(rx, ry);
    work.emplace_back(std::min(rx, ry), std::max(rx, ry));
  };

  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw Error("generator pair outside the carrier of '" + a.name + "'");
    unite(x, y);
  }

  std::vector<Element> args;
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (const auto& op : a.ops) {
      if (op.arity == 0) continue;
      if (op.arity == 1) {
        unite(op.table[x], op.table[y]);
        continue;
      }
      if (op.arity == 2) {
        const Element* t = op.table.data();
        const Element* rx = t + static_cast<std::size_t>(x) * n;
        const Element* ry = t + static_cast<std::size_t>(y) * n;
        for (int k = 0; k < n; ++k) unite(rx[k], ry[k]);
        for (int k = 0; k < n; ++k)
          unite(t[static_cast<std::size_t>(k) * n + x],
                t[static_cast<std::size_t>(k) * n + y]);
        continue;
      }
      // general case, slot by slot
      args.assign(op.arity, 0);
      for (int slot = 0; slot < op.arity; ++slot) {
        std::size_t rest = 1;
        for (int s = 0; s < op.arity - 1; ++s)
          rest *= static_cast<std::size_t>(n);
        for (std::size_t t = 0; t < rest; ++t) {
          std::size_t v = t;
          for (int s = op.arity - 1; s >= 0; --s) {
            if (s == slot) continue;
            args[s] = static_cast<Element>(v % n);
            v /= n;
          }
          args[slot] = x;
          Element u = op.eval(args);
          args[slot] = y;
          Element w = op.eval(args);
          unite(u, w);
        }
      }
    }
  }

  std::vector<int> raw(n);
  for (int e = 0; e < n; ++e) raw[e] = find(e);
  return Partition::from_assignment(std::move(raw));
}

int CongruenceLattice::index_of(const Partition& p) const {
  auto it = std::lower_bound(cons.begin(), cons.end(), p);
  if (it != cons.end() && *it == p)
    return static_cast<int>(it - cons.begin());
  return -1;
}

std::vector<int> CongruenceLattice::up_set(int theta) const {
  std::vector<int> out;
  for (int i = 0; i < count(); ++i)
    if (leq[theta][i]) out.push_back(i);
  return out;
}

std::vector<std::pair<int, int>> CongruenceLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  const int m = count();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < m && cover; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

CongruenceLattice enumerate_con(const AlgebraPtr& a, const ConOptions& opts) {
  const FiniteAlgebra& alg = *a;
  const int n = alg.size;
  if (n > opts.cap) throw CapExceeded(n, opts.cap);

  CongruenceLattice con;
  con.algebra = a;

  std::unordered_map<Partition, int, PartitionHash> seen;
  std::vector<Partition> pool;
  auto intern = [&](Partition p) -> int {
    auto it = seen.find(p);
    if (it != seen.end()) return it->second;
    int id = static_cast<int>(pool.size());
    seen.emplace(p, id);
    pool.push_back(std::move(p));
    return id;
  };

  intern(Partition::delta(n));
  std::vector<std::vector<int>> principal_pool(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      std::pair<Element, Element> p{x, y};
      int id = intern(cg_generated(alg, std::span(&p, 1)));
      principal_pool[x][y] = principal_pool[y][x] = id;
    }
  for (int x = 0; x < n; ++x) principal_pool[x][x] = 0;

  // Close under binary join. Every congruence is a join of principals, so
  // this reaches all of Con(A).
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Partition jn = join(pool[i], pool[j]);
      intern(std::move(jn));
    }

  // Meets must stay inside (Con(A) is closed under intersection).
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Partition mt = meet(pool[i], pool[j]);
      if (seen.find(mt) == seen.end())
        throw Error("internal: Con(" + alg.name +
                    ") not meet-closed; meet of " + render(pool[i]) + " and " +
                    render(pool[j]) + " missing");
    }

  // Canonical order: lexicographic on normalized block vectors.
  std::vector<int> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return pool[x] < pool[y]; });
  std::vector<int> rank(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

  con.cons.reserve(pool.size());
  for (int id : order) con.cons.push_back(pool[id]);
  con.principal.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      con.principal[x][y] = rank[principal_pool[x][y]];

  const int m = con.count();
  con.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      con.leq[i][j] = con.cons[i].refines(con.cons[j]);
  con.join_table.assign(m, std::vector<int>(m));
  con.meet_table.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) {
      int jj = con.index_of(join(con.cons[i], con.cons[j]));
      int mm = con.index_of(meet(con.cons[i], con.cons[j]));
      con.join_table[i][j] = con.join_table[j][i] = jj;
      con.meet_table[i][j] = con.meet_table[j][i] = mm;
    }
  con.delta_index = con.index_of(Partition::delta(n));
  con.nabla_index = con.index_of(Partition::nabla(n));
  return con;
}

bool con_is_distributive(const CongruenceLattice& con) {
  const int m = con.count();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (con.meet_table[x][con.join_table[y][z]] !=
            con.join_table[con.meet_table[x][y]][con.meet_table[x][z]])
          return false;
  return true;
}

bool con_is_modular(const CongruenceLattice& con) {
  const int m = con.count();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        if (!con.leq[x][z]) continue;
        // x <= z implies x v (y ^ z) = (x v y) ^ z
        if (con.join_table[x][con.meet_table[y][z]] !=
            con.meet_table[con.join_table[x][y]][z])
          return false;
      }
  return true;
}

}  // namespace congruma
