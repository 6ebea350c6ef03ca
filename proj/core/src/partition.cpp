#include "congruma/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace congruma {

namespace {

void check_same_carrier(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw Error("partition carrier mismatch: " + std::to_string(p.size()) +
                " vs " + std::to_string(q.size()));
}

}  // namespace

Partition Partition::delta(int n) {
  Partition p;
  p.block.resize(n);
  for (int i = 0; i < n; ++i) p.block[i] = i;
  p.num_blocks = n;
  return p;
}

Partition Partition::nabla(int n) {
  Partition p;
  p.block.assign(n, 0);
  p.num_blocks = n > 0 ? 1 : 0;
  return p;
}

Partition Partition::from_assignment(std::vector<int> raw) {
  Partition p;
  p.block.assign(raw.size(), -1);
  std::map<int, int> renumber;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, fresh] = renumber.try_emplace(raw[i], p.num_blocks);
    if (fresh) ++p.num_blocks;
    p.block[i] = it->second;
  }
  return p;
}

Partition Partition::from_blocks(int n,
                                 const std::vector<std::vector<Element>>& blocks) {
  std::vector<int> raw(n, -1);
  int id = 0;
  for (const auto& blk : blocks) {
    for (Element e : blk) {
      if (e < 0 || e >= n)
        throw Error("partition block element " + std::to_string(e) +
                    " out of range [0," + std::to_string(n) + ")");
      if (raw[e] != -1)
        throw Error("element " + std::to_string(e) +
                    " occurs in two partition blocks");
      raw[e] = id;
    }
    ++id;
  }
  for (int e = 0; e < n; ++e)
    if (raw[e] == -1)
      throw Error("element " + std::to_string(e) + " missing from partition");
  return from_assignment(std::move(raw));
}

bool Partition::refines(const Partition& other) const {
  check_same_carrier(*this, other);
  std::vector<int> image(num_blocks, -1);
  for (int e = 0; e < size(); ++e) {
    int& img = image[block[e]];
    if (img == -1)
      img = other.block[e];
    else if (img != other.block[e])
      return false;
  }
  return true;
}

std::vector<std::vector<Element>> Partition::blocks() const {
  std::vector<std::vector<Element>> out(num_blocks);
  for (int e = 0; e < size(); ++e) out[block[e]].push_back(e);
  return out;
}

std::vector<std::pair<Element, Element>> Partition::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (block[a] == block[b]) out.emplace_back(a, b);
  return out;
}

Partition meet(const Partition& p, const Partition& q) {
  check_same_carrier(p, q);
  std::vector<int> raw(p.size());
  for (int e = 0; e < p.size(); ++e)
    raw[e] = p.block[e] * q.num_blocks + q.block[e];
  return Partition::from_assignment(std::move(raw));
}

Partition join(const Partition& p, const Partition& q) {
  check_same_carrier(p, q);
  const int n = p.size();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  std::vector<int> first_p(p.num_blocks, -1), first_q(q.num_blocks, -1);
  for (int e = 0; e < n; ++e) {
    int& fp = first_p[p.block[e]];
    if (fp == -1)
      fp = e;
    else
      unite(fp, e);
    int& fq = first_q[q.block[e]];
    if (fq == -1)
      fq = e;
    else
      unite(fq, e);
  }
  std::vector<int> raw(n);
  for (int e = 0; e < n; ++e) raw[e] = find(e);
  return Partition::from_assignment(std::move(raw));
}

namespace {

std::string render_impl(const Partition& p, const FiniteAlgebra* a) {
  std::string out = "{";
  bool first_block = true;
  for (const auto& blk : p.blocks()) {
    if (!first_block) out += ",";
    first_block = false;
    out += "{";
    bool first = true;
    for (Element e : blk) {
      if (!first) out += ",";
      first = false;
      out += a ? a->label(e) : std::to_string(e);
    }
    out += "}";
  }
  out += "}";
  return out;
}

}  // namespace

std::string render(const Partition& p, const FiniteAlgebra& a) {
  return render_impl(p, &a);
}

std::string render(const Partition& p) { return render_impl(p, nullptr); }

Partition parse_partition(const std::string& text, const FiniteAlgebra& a) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw Error("malformed partition '" + text + "': expected '" +
                  std::string(1, c) + "'");
    ++i;
  };
  std::vector<std::vector<Element>> blocks;
  expect('{');
  skip_ws();
  while (i < text.size() && text[i] != '}') {
    expect('{');
    std::vector<Element> blk;
    skip_ws();
    while (i < text.size() && text[i] != '}') {
      std::string token;
      while (i < text.size() && text[i] != ',' && text[i] != '}' &&
             !std::isspace(static_cast<unsigned char>(text[i])))
        token += text[i++];
      if (token.empty())
        throw Error("malformed partition '" + text + "': empty element");
      auto e = a.element_of(token);
      if (!e)
        throw Error("unknown element '" + token + "' in partition for algebra " +
                    a.name);
      blk.push_back(*e);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    expect('}');
    blocks.push_back(std::move(blk));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      skip_ws();
    }
  }
  expect('}');
  skip_ws();
  if (i != text.size())
    throw Error("malformed partition '" + text + "': trailing text");
  return Partition::from_blocks(a.size, blocks);
}

}  // namespace congruma
