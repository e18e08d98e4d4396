#include "cplanar/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cplanar {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

EmbeddedClusteredGraph Instance::embedded() const {
  if (!embedding) throw std::invalid_argument("instance has no rotation system");
  return {*embedding, graph.tree};
}

namespace {

struct Token {
  enum Kind { Word, Open, Close, Newline, End } kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance();
    } else if (c == '\n') {
      out.push_back({Token::Newline, "\n", line, col});
      advance();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (c == '(' || c == ')') {
      out.push_back({c == '(' ? Token::Open : Token::Close, std::string(1, c), line, col});
      advance();
    } else {
      Token t{Token::Word, "", line, col};
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '(' && s[i] != ')' &&
             s[i] != '#') {
        t.text += s[i];
        advance();
      }
      out.push_back(std::move(t));
    }
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Instance run() {
    while (peek().kind != Token::End) {
      if (peek().kind == Token::Newline) {
        ++pos_;
        continue;
      }
      const Token kw = next();
      if (kw.kind != Token::Word) fail(kw, "expected a statement keyword");
      if (kw.text == "vertices") {
        vertices(kw);
      } else if (kw.text == "edge") {
        edge(kw);
      } else if (kw.text == "tree") {
        tree(kw);
      } else if (kw.text == "rotation") {
        rotation(kw);
      } else if (kw.text == "outer") {
        outer(kw);
      } else {
        fail(kw, "unknown statement '" + kw.text + "'");
      }
    }
    return finish();
  }

 private:
  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  void end_of_statement() {
    const Token& t = peek();
    if (t.kind != Token::Newline && t.kind != Token::End) fail(t, "unexpected '" + t.text + "'");
  }

  static long parse_int(const Token& t, const char* what) {
    if (t.kind != Token::Word) fail(t, std::string("expected ") + what);
    try {
      std::size_t used = 0;
      const long v = std::stol(t.text, &used);
      if (used != t.text.size()) throw std::invalid_argument(t.text);
      return v;
    } catch (const std::exception&) {
      fail(t, std::string("expected ") + what + ", found '" + t.text + "'");
    }
  }

  void vertices(const Token&) {
    while (peek().kind == Token::Word) {
      const Token t = next();
      const VertexId v = static_cast<VertexId>(parse_int(t, "a vertex id"));
      if (!declared_.insert(v).second) fail(t, "duplicate vertex " + t.text);
      inst_.graph.vertices.push_back(v);
    }
    end_of_statement();
  }

  void edge(const Token& kw) {
    const Token ti = next(), tu = next(), tv = next();
    const EdgeId id = static_cast<EdgeId>(parse_int(ti, "an edge id"));
    const VertexId u = static_cast<VertexId>(parse_int(tu, "a vertex id"));
    const VertexId v = static_cast<VertexId>(parse_int(tv, "a vertex id"));
    if (!edge_ids_.insert(id).second) fail(ti, "duplicate edge id " + ti.text);
    if (!declared_.count(u)) fail(tu, "edge endpoint " + tu.text + " is not a declared vertex");
    if (!declared_.count(v)) fail(tv, "edge endpoint " + tv.text + " is not a declared vertex");
    inst_.graph.edges.push_back({id, u, v});
    end_of_statement();
    (void)kw;
  }

  void tree(const Token& kw) {
    if (tree_seen_) fail(kw, "tree given twice");
    tree_seen_ = true;
    skip_newlines();
    const Token open = next();
    if (open.kind != Token::Open) fail(open, "expected '(' to start the tree");
    const Token label = next();
    if (label.kind != Token::Word) fail(label, "expected the root label");
    inst_.graph.tree.set_root_label(label.text);
    items(inst_.graph.tree.root());
    end_of_statement();
  }

  void skip_newlines() {
    while (peek().kind == Token::Newline) ++pos_;
  }

  // Items of a node up to and including its ')'.
  void items(NodeId parent) {
    while (true) {
      skip_newlines();
      const Token t = next();
      if (t.kind == Token::Close) return;
      if (t.kind == Token::End) fail(t, "unterminated tree");
      if (t.kind == Token::Open) {
        skip_newlines();
        const Token label = next();
        if (label.kind != Token::Word) fail(label, "expected a cluster label");
        items(inst_.graph.tree.add_cluster(parent, label.text));
        continue;
      }
      const VertexId v = static_cast<VertexId>(parse_int(t, "a vertex id or '('"));
      if (!declared_.count(v)) fail(t, "leaf " + t.text + " is not a declared vertex");
      if (!leaves_.insert(v).second) fail(t, "vertex " + t.text + " appears twice in the tree");
      inst_.graph.tree.add_leaf(parent, v);
    }
  }

  struct End {
    EdgeId id;
    bool second;
    Token at;
  };

  End end_token(const Token& t) {
    if (t.kind != Token::Word) fail(t, "expected an edge end");
    std::string s = t.text;
    bool second = false;
    if (!s.empty() && s.back() == '\'') {
      second = true;
      s.pop_back();
    }
    Token bare = t;
    bare.text = s;
    return {static_cast<EdgeId>(parse_int(bare, "an edge id")), second, t};
  }

  void rotation(const Token& kw) {
    if (!first_rotation_) first_rotation_ = kw;
    const Token tv = next();
    const VertexId v = static_cast<VertexId>(parse_int(tv, "a vertex id"));
    if (!declared_.count(v)) fail(tv, "rotation for undeclared vertex " + tv.text);
    if (rotations_.count(v)) fail(tv, "rotation for vertex " + tv.text + " given twice");
    auto& ends = rotations_[v];
    while (peek().kind == Token::Word) ends.push_back(end_token(next()));
    end_of_statement();
  }

  void outer(const Token& kw) {
    if (outer_) fail(kw, "outer face given twice");
    const End e = end_token(next());
    const Token tv = next();
    outer_ = std::pair{e, static_cast<VertexId>(parse_int(tv, "a vertex id"))};
    outer_at_ = kw;
    end_of_statement();
  }

  Dart resolve(const End& e, VertexId v, std::vector<bool>& used) const {
    std::size_t k = inst_.graph.edges.size();
    for (std::size_t i = 0; i < inst_.graph.edges.size(); ++i)
      if (inst_.graph.edges[i].id == e.id) k = i;
    if (k == inst_.graph.edges.size()) fail(e.at, "unknown edge " + std::to_string(e.id));
    const Edge& ed = inst_.graph.edges[k];
    const Dart base = static_cast<Dart>(2 * k);
    Dart d = -1;
    if (ed.is_loop()) {
      if (ed.u != v) fail(e.at, "edge " + std::to_string(e.id) + " does not end at " + std::to_string(v));
      if (e.second) {
        d = base + 1;
      } else {
        d = used[static_cast<std::size_t>(base)] ? base + 1 : base;
      }
    } else {
      if (e.second) fail(e.at, "only loops have a second end");
      if (ed.u == v) {
        d = base;
      } else if (ed.v == v) {
        d = base + 1;
      } else {
        fail(e.at, "edge " + std::to_string(e.id) + " does not end at " + std::to_string(v));
      }
    }
    if (used[static_cast<std::size_t>(d)]) fail(e.at, "edge end listed twice");
    used[static_cast<std::size_t>(d)] = true;
    return d;
  }

  Instance finish() {
    const Token& eof = toks_.back();
    if (!tree_seen_) fail(eof, "missing tree statement");
    const ValidationReport r = validate(inst_.graph);
    if (!r.ok()) fail(eof, "invalid instance: " + r.to_string());

    if (rotations_.empty()) {
      if (outer_) fail(*outer_at_, "outer face given without rotations");
      return inst_;
    }
    std::vector<bool> used(2 * inst_.graph.edges.size(), false);
    std::map<VertexId, std::vector<Dart>> darts;
    for (const auto& [v, ends] : rotations_)
      for (const End& e : ends) darts[v].push_back(resolve(e, v, used));
    Dart outer = -1;
    if (outer_) {
      std::vector<bool> scratch(used.size(), false);
      outer = resolve(outer_->first, outer_->second, scratch);
    }
    try {
      CombinatorialMap m =
          CombinatorialMap::from_dart_rotations(inst_.graph.vertices, inst_.graph.edges, darts, outer);
      m.require_valid();
      inst_.embedding = std::move(m);
    } catch (const std::invalid_argument& ex) {
      fail(*first_rotation_, ex.what());
    }
    return inst_;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Instance inst_;
  std::set<VertexId> declared_, leaves_;
  std::set<EdgeId> edge_ids_;
  bool tree_seen_ = false;
  std::map<VertexId, std::vector<End>> rotations_;
  std::optional<std::pair<End, VertexId>> outer_;
  std::optional<Token> outer_at_, first_rotation_;
};

std::string label_text(const std::string& l) {
  if (l.empty()) return "_";
  std::string out;
  for (char c : l) out += (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '#') ? '_' : c;
  return out;
}

void write_node(std::ostream& os, const ClusterTree& t, NodeId n) {
  const auto& nd = t.node(n);
  if (nd.vertex) {
    os << *nd.vertex;
    return;
  }
  os << '(' << label_text(nd.label);
  for (NodeId c : nd.children) {
    os << ' ';
    write_node(os, t, c);
  }
  os << ')';
}

void write_graph(std::ostream& os, const ClusteredGraph& g) {
  std::vector<VertexId> vs = g.vertices;
  std::sort(vs.begin(), vs.end());
  os << "vertices";
  for (VertexId v : vs) os << ' ' << v;
  os << '\n';
  std::vector<Edge> es = g.edges;
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (const Edge& e : es) os << "edge " << e.id << ' ' << e.u << ' ' << e.v << '\n';
  os << "tree ";
  write_node(os, g.tree, g.tree.root());
  os << '\n';
}

}  // namespace

Instance parse_instance(std::string_view text) { return Parser(text).run(); }

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string serialize(const ClusteredGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

std::string serialize(const EmbeddedClusteredGraph& g) {
  std::ostringstream os;
  write_graph(os, g.graph());
  const CombinatorialMap& m = g.map;
  // Ends are ordered by (edge id, side), which is dart order once edges are
  // sorted by id.
  auto key = [&](Dart d) { return std::pair(m.edge_of(d).id, d % 2); };
  auto end_text = [&](Dart d) {
    const Edge& e = m.edge_of(d);
    return std::to_string(e.id) + (e.is_loop() && d % 2 == 1 ? "'" : "");
  };
  for (VertexId v : m.vertices()) {
    auto rot = m.rotation(v);
    if (rot.empty()) continue;
    const auto first = std::min_element(rot.begin(), rot.end(), [&](Dart a, Dart b) { return key(a) < key(b); });
    std::rotate(rot.begin(), first, rot.end());
    os << "rotation " << v;
    for (Dart d : rot) os << ' ' << end_text(d);
    os << '\n';
  }
  if (m.outer() >= 0) {
    const auto fs = m.faces();
    const auto& darts = fs[m.outer_face(fs)].darts;
    const Dart o = *std::min_element(darts.begin(), darts.end(), [&](Dart a, Dart b) { return key(a) < key(b); });
    os << "outer " << end_text(o) << ' ' << m.tail(o) << '\n';
  }
  return os.str();
}

}  // namespace cplanar
