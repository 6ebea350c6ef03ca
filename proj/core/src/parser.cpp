#include "congruma/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "congruma/congruence.hpp"

namespace congruma {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

bool valid_name(const std::string& t) {
  if (t.empty()) return false;
  for (char c : t)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' ||
        c == ',' || c == ';' || c == '<' || c == '>' || c == '#' || c == ':' ||
        c == '(' || c == ')')
      return false;
  return true;
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    Line line;
    line.number = number;
    std::string tok;
    auto flush = [&] {
      if (!tok.empty()) {
        line.tokens.push_back(tok);
        tok.clear();
      }
    };
    for (char c : raw) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else if (c == ';' || c == '<' || c == '>' || c == ':') {
        // '<' in covers, ';' separators, "->" arrows are handled tokenwise
        if (c == '>' && !tok.empty() && tok.back() == '-') {
          tok.pop_back();
          flush();
          line.tokens.push_back("->");
        } else {
          flush();
          line.tokens.push_back(std::string(1, c));
        }
      } else {
        tok += c;
      }
    }
    flush();
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int to_int(const std::string& t, int line) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(t, &pos);
    if (pos != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (...) {
    throw ParseError(line, "expected an integer, got '" + t + "'");
  }
}

class BlockParser {
 public:
  explicit BlockParser(const std::string& text) : lines_(tokenize(text)) {}

  Document parse() {
    Document doc;
    while (pos_ < lines_.size()) {
      const auto& head = lines_[pos_].tokens[0];
      if (head == "algebra")
        doc.algebras.push_back(parse_algebra());
      else if (head == "lattice")
        doc.algebras.push_back(parse_lattice());
      else if (head == "hom")
        doc.homs.push_back(parse_hom());
      else
        throw ParseError(lines_[pos_].number,
                         "expected 'algebra', 'lattice' or 'hom', got '" +
                             head + "'");
    }
    return doc;
  }

 private:
  const Line& cur() const { return lines_[pos_]; }
  bool at_block_start() const {
    if (pos_ >= lines_.size()) return true;
    const auto& h = cur().tokens[0];
    return h == "algebra" || h == "lattice" || h == "hom";
  }

  AlgebraPtr parse_algebra() {
    const Line& head = cur();
    if (head.tokens.size() != 2 || !valid_name(head.tokens[1]))
      throw ParseError(head.number, "usage: algebra <name>");
    std::string name = head.tokens[1];
    ++pos_;

    if (pos_ >= lines_.size() || cur().tokens[0] != "elements")
      throw ParseError(head.number,
                       "algebra '" + name + "': missing 'elements' line");
    const Line& elems = cur();
    if (elems.tokens.size() < 2)
      throw ParseError(elems.number, "usage: elements <n> [labels...]");
    int n = to_int(elems.tokens[1], elems.number);
    if (n < 1) throw ParseError(elems.number, "algebras must be non-empty");
    std::vector<std::string> labels(elems.tokens.begin() + 2,
                                    elems.tokens.end());
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
      throw ParseError(elems.number,
                       std::to_string(labels.size()) + " labels for " +
                           std::to_string(n) + " elements");
    for (const auto& l : labels)
      if (!valid_name(l))
        throw ParseError(elems.number, "invalid label '" + l + "'");
    ++pos_;

    auto resolve = [&](const std::string& t, int line) -> Element {
      if (!labels.empty()) {
        auto it = std::find(labels.begin(), labels.end(), t);
        if (it != labels.end())
          return static_cast<Element>(it - labels.begin());
      }
      int v = to_int(t, line);
      if (v < 0 || v >= n)
        throw ParseError(line, "element " + t + " outside [0," +
                                   std::to_string(n) + ")");
      return v;
    };

    std::vector<OperationTable> ops;
    while (pos_ < lines_.size() && cur().tokens[0] == "op") {
      const Line& oph = cur();
      if (oph.tokens.size() != 3 || !valid_name(oph.tokens[1]))
        throw ParseError(oph.number, "usage: op <name> <arity>");
      OperationTable op;
      op.name = oph.tokens[1];
      op.arity = to_int(oph.tokens[2], oph.number);
      if (op.arity < 0) throw ParseError(oph.number, "negative arity");
      op.carrier = n;
      std::size_t want = 1;
      for (int i = 0; i < op.arity; ++i) want *= static_cast<std::size_t>(n);
      ++pos_;
      while (op.table.size() < want) {
        if (pos_ >= lines_.size() || at_block_start() ||
            cur().tokens[0] == "op")
          throw ParseError(oph.number, "op '" + op.name + "': expected " +
                                           std::to_string(want) +
                                           " entries, got " +
                                           std::to_string(op.table.size()));
        for (const auto& t : cur().tokens) {
          if (op.table.size() >= want)
            throw ParseError(cur().number,
                             "op '" + op.name + "': too many entries");
          op.table.push_back(resolve(t, cur().number));
        }
        ++pos_;
      }
      ops.push_back(std::move(op));
    }
    try {
      return make_algebra(std::move(name), n, std::move(ops),
                          std::move(labels));
    } catch (const Error& e) {
      throw ParseError(head.number, e.what());
    }
  }

  AlgebraPtr parse_lattice() {
    const Line& head = cur();
    if (head.tokens.size() != 2 || !valid_name(head.tokens[1]))
      throw ParseError(head.number, "usage: lattice <name>");
    BoundedLatticeSpec spec;
    spec.name = head.tokens[1];
    ++pos_;

    if (pos_ >= lines_.size() || cur().tokens[0] != "elements")
      throw ParseError(head.number,
                       "lattice '" + spec.name + "': missing 'elements' line");
    {
      const Line& elems = cur();
      for (std::size_t i = 1; i < elems.tokens.size(); ++i) {
        const auto& l = elems.tokens[i];
        if (!valid_name(l))
          throw ParseError(elems.number, "invalid label '" + l + "'");
        if (std::find(spec.labels.begin(), spec.labels.end(), l) !=
            spec.labels.end())
          throw ParseError(elems.number, "duplicate label '" + l + "'");
        spec.labels.push_back(l);
      }
      if (spec.labels.empty())
        throw ParseError(elems.number, "lattice has no elements");
      ++pos_;
    }
    auto resolve = [&](const std::string& t, int line) -> int {
      auto it = std::find(spec.labels.begin(), spec.labels.end(), t);
      if (it == spec.labels.end())
        throw ParseError(line, "unknown element '" + t + "'");
      return static_cast<int>(it - spec.labels.begin());
    };

    while (pos_ < lines_.size() && !at_block_start()) {
      const Line& l = cur();
      const auto& key = l.tokens[0];
      if (key == "bottom" || key == "top") {
        if (l.tokens.size() != 2)
          throw ParseError(l.number, "usage: " + key + " <label>");
        (key == "bottom" ? spec.bottom : spec.top) =
            resolve(l.tokens[1], l.number);
      } else if (key == "covers") {
        // covers a < b ; c < d ; ...
        std::size_t i = 1;
        while (i < l.tokens.size()) {
          if (i + 2 >= l.tokens.size() || l.tokens[i + 1] != "<")
            throw ParseError(l.number, "covers expects '<a> < <b>' pairs");
          spec.covers.emplace_back(resolve(l.tokens[i], l.number),
                                   resolve(l.tokens[i + 2], l.number));
          i += 3;
          if (i < l.tokens.size()) {
            if (l.tokens[i] != ";")
              throw ParseError(l.number, "cover pairs are separated by ';'");
            ++i;
          }
        }
      } else {
        throw ParseError(l.number, "unexpected '" + key + "' in lattice block");
      }
      ++pos_;
    }
    if (spec.bottom < 0)
      throw ParseError(head.number,
                       "lattice '" + spec.name + "': missing 'bottom'");
    if (spec.top < 0)
      throw ParseError(head.number, "lattice '" + spec.name + "': missing 'top'");
    try {
      return lattice_from_covers(spec);
    } catch (const Error& e) {
      throw ParseError(head.number, e.what());
    }
  }

  HomSpec parse_hom() {
    const Line& head = cur();
    // hom <name> : <source> -> <target>
    if (head.tokens.size() != 6 || head.tokens[2] != ":" ||
        head.tokens[4] != "->" || !valid_name(head.tokens[1]))
      throw ParseError(head.number,
                       "usage: hom <name> : <source> -> <target>");
    HomSpec spec;
    spec.name = head.tokens[1];
    spec.source = head.tokens[3];
    spec.target = head.tokens[5];
    spec.line = head.number;
    ++pos_;
    while (pos_ < lines_.size() && cur().tokens[0] == "map") {
      const Line& l = cur();
      std::size_t i = 1;
      while (i < l.tokens.size()) {
        if (i + 2 >= l.tokens.size() || l.tokens[i + 1] != "->")
          throw ParseError(l.number, "map expects '<src> -> <dst>' pairs");
        spec.entries.emplace_back(l.tokens[i], l.tokens[i + 2]);
        i += 3;
        if (i < l.tokens.size()) {
          if (l.tokens[i] != ";")
            throw ParseError(l.number, "map pairs are separated by ';'");
          ++i;
        }
      }
      ++pos_;
    }
    if (spec.entries.empty())
      throw ParseError(head.number, "hom '" + spec.name + "' has no map");
    return spec;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraPtr Document::find_algebra(const std::string& name) const {
  for (const auto& a : algebras)
    if (a->name == name) return a;
  return nullptr;
}

Document parse_document(const std::string& text) {
  return BlockParser(text).parse();
}

Document parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

Homomorphism resolve_hom(const HomSpec& spec, const Document& doc,
                         const std::filesystem::path& dir) {
  auto lookup = [&](const std::string& name) -> AlgebraPtr {
    if (auto a = doc.find_algebra(name)) return a;
    auto sibling = dir / (name + ".ua");
    if (std::filesystem::exists(sibling)) {
      Document d = parse_file(sibling);
      if (auto a = d.find_algebra(name)) return a;
    }
    throw Error("hom '" + spec.name + "': algebra '" + name +
                "' not found in the document or as " +
                (dir / (name + ".ua")).string());
  };
  AlgebraPtr src = lookup(spec.source);
  AlgebraPtr dst = lookup(spec.target);

  std::vector<Element> map(src->size, -1);
  for (const auto& [from, to] : spec.entries) {
    auto s = src->element_of(from);
    if (!s)
      throw Error("hom '" + spec.name + "': unknown source element '" + from +
                  "'");
    auto d = dst->element_of(to);
    if (!d)
      throw Error("hom '" + spec.name + "': unknown target element '" + to +
                  "'");
    if (map[*s] != -1)
      throw Error("hom '" + spec.name + "': source element '" + from +
                  "' mapped twice");
    map[*s] = *d;
  }
  for (Element e = 0; e < src->size; ++e)
    if (map[e] == -1)
      throw Error("hom '" + spec.name + "': source element '" +
                  src->label(e) + "' is unmapped");
  return validate_hom(std::move(src), std::move(dst), std::move(map));
}

std::string render_ua(const FiniteAlgebra& a) {
  std::ostringstream out;
  out << "algebra " << a.name << "\n";
  out << "elements " << a.size;
  for (const auto& l : a.labels) out << " " << l;
  out << "\n";
  for (const auto& op : a.ops) {
    out << "op " << op.name << " " << op.arity << "\n";
    if (op.table.empty()) continue;
    // row-major, one row of the last coordinate per line
    std::size_t row = op.arity >= 1 ? static_cast<std::size_t>(a.size) : 1;
    for (std::size_t i = 0; i < op.table.size(); ++i) {
      out << a.label(op.table[i]);
      out << ((i + 1) % row == 0 ? "\n" : " ");
    }
  }
  return out.str();
}

Partition parse_congruence_expr(const std::string& text, const AlgebraPtr& a) {
  std::string t = text;
  auto notspace = [](unsigned char c) { return !std::isspace(c); };
  t.erase(t.begin(), std::find_if(t.begin(), t.end(), notspace));
  t.erase(std::find_if(t.rbegin(), t.rend(), notspace).base(), t.end());

  Partition p;
  if (t.rfind("cg{", 0) == 0 && t.back() == '}') {
    std::string body = t.substr(3, t.size() - 4);
    std::vector<std::pair<Element, Element>> pairs;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < body.size() &&
             std::isspace(static_cast<unsigned char>(body[i])))
        ++i;
    };
    skip_ws();
    while (i < body.size()) {
      if (body[i] != '(')
        throw Error("malformed generator list '" + t + "': expected '('");
      ++i;
      auto read_label = [&]() {
        std::string tok;
        skip_ws();
        while (i < body.size() && body[i] != ',' && body[i] != ')' &&
               !std::isspace(static_cast<unsigned char>(body[i])))
          tok += body[i++];
        skip_ws();
        auto e = a->element_of(tok);
        if (!e)
          throw Error("unknown element '" + tok + "' in generator list for " +
                      a->name);
        return *e;
      };
      Element x = read_label();
      if (i >= body.size() || body[i] != ',')
        throw Error("malformed generator list '" + t + "': expected ','");
      ++i;
      Element y = read_label();
      if (i >= body.size() || body[i] != ')')
        throw Error("malformed generator list '" + t + "': expected ')'");
      ++i;
      pairs.emplace_back(x, y);
      skip_ws();
      if (i < body.size() && body[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (pairs.empty())
      throw Error("generator list '" + t + "' is empty");
    p = cg_generated(*a, pairs);
  } else if (!t.empty() && t.front() == '{') {
    p = parse_partition(t, *a);
    if (!is_congruence(*a, p))
      throw Error(render(p, *a) + " is not a congruence of " + a->name);
  } else {
    throw Error("expected a partition {{...},{...}} or cg{(a,b),...}, got '" +
                text + "'");
  }
  return p;
}

}  // namespace congruma
