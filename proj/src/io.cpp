#include "stt/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stt {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

[[noreturn]] void fail(const Token& at, const std::string& msg) {
  std::ostringstream os;
  os << "line " << at.line << ", col " << at.col << ": " << msg;
  throw std::runtime_error(os.str());
}

[[noreturn]] void fail_line(int line, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line << ": " << msg;
  throw std::runtime_error(os.str());
}

std::vector<std::vector<Token>> tokenize(std::istream& in) {
  std::vector<std::vector<Token>> lines;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      toks.push_back({raw.substr(start, i - start), lineno,
                      static_cast<int>(start) + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

long long parse_int(const Token& t) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    fail(t, "expected an integer, got '" + t.text + "'");
  }
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

Word parse_output(const Token& t, int n) {
  if (t.text == "-") return {};
  Word w;
  std::istringstream is(t.text);
  std::string item;
  while (std::getline(is, item, ',')) {
    Token part{item, t.line, t.col};
    long long v = parse_int(part);
    if (v < 0 || v >= n) fail(t, "output letter " + item + " outside the alphabet");
    w.push_back(static_cast<Letter>(v));
  }
  if (w.empty()) fail(t, "empty output; use - for the empty word");
  return w;
}

}  // namespace

Document parse_document(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) fail_line(1, "empty document");

  Document d;
  std::size_t li = 0;

  {
    auto& l = lines[li++];
    if (l[0].text != "alphabet") fail(l[0], "expected 'alphabet <n>' first");
    if (l.size() != 2) fail(l[0], "alphabet takes one argument");
    long long n = parse_int(l[1]);
    if (n < 2 || n > 1000) fail(l[1], "alphabet size out of range");
    d.t.n = static_cast<int>(n);
  }
  std::map<std::string, int> index;
  {
    if (li >= lines.size()) fail_line(lines.back()[0].line + 1, "missing 'states' line");
    auto& l = lines[li++];
    if (l[0].text != "states") fail(l[0], "expected 'states <id> ...' second");
    if (l.size() < 2) fail(l[0], "states needs at least one id");
    for (std::size_t i = 1; i < l.size(); ++i) {
      if (!valid_identifier(l[i].text))
        fail(l[i], "bad state id '" + l[i].text + "'");
      if (!index.emplace(l[i].text, static_cast<int>(i - 1)).second)
        fail(l[i], "duplicate state '" + l[i].text + "'");
      d.t.names.push_back(l[i].text);
    }
  }
  const int m = d.t.states();
  d.t.step_to.assign(static_cast<std::size_t>(m) * d.t.n, -1);
  d.t.out.assign(static_cast<std::size_t>(m) * d.t.n, {});
  std::vector<bool> has_edge(static_cast<std::size_t>(m) * d.t.n, false);
  std::vector<std::optional<long long>> annot(m);
  bool any_annot = false;

  auto state_of = [&](const Token& t) {
    auto it = index.find(t.text);
    if (it == index.end()) fail(t, "unknown state '" + t.text + "'");
    return it->second;
  };

  for (; li < lines.size(); ++li) {
    auto& l = lines[li];
    const std::string& kw = l[0].text;
    if (kw == "edge") {
      if (l.size() != 5) fail(l[0], "edge takes: state letter target output");
      int q = state_of(l[1]);
      long long x = parse_int(l[2]);
      if (x < 0 || x >= d.t.n) fail(l[2], "letter outside the alphabet");
      int to = state_of(l[3]);
      std::size_t slot = static_cast<std::size_t>(q) * d.t.n + x;
      if (has_edge[slot])
        fail(l[0], "duplicate edge for (" + l[1].text + ", " + l[2].text + ")");
      has_edge[slot] = true;
      d.t.step_to[slot] = to;
      d.t.out[slot] = parse_output(l[4], d.t.n);
    } else if (kw == "initial") {
      if (l.size() != 2) fail(l[0], "initial takes one state");
      if (d.initial) fail(l[0], "initial given twice");
      d.initial = state_of(l[1]);
    } else if (kw == "annot") {
      if (l.size() != 3) fail(l[0], "annot takes: state integer");
      int q = state_of(l[1]);
      if (annot[q]) fail(l[1], "annot for '" + l[1].text + "' given twice");
      annot[q] = parse_int(l[2]);
      any_annot = true;
    } else {
      fail(l[0], "unknown directive '" + kw + "'");
    }
  }

  for (int q = 0; q < m; ++q)
    for (int x = 0; x < d.t.n; ++x)
      if (!has_edge[static_cast<std::size_t>(q) * d.t.n + x])
        fail_line(lines.back()[0].line,
                  "missing edge for (" + d.t.names[q] + ", " + std::to_string(x) + ")");

  if (any_annot) {
    std::vector<long long> values(m);
    for (int q = 0; q < m; ++q) {
      if (!annot[q])
        fail_line(lines.back()[0].line,
                  "annot lines must cover every state; '" + d.t.names[q] +
                      "' has none");
      values[q] = *annot[q];
    }
    d.annot = std::move(values);
  }
  return d;
}

Document parse_document_string(const std::string& text) {
  std::istringstream is(text);
  return parse_document(is);
}

Document load_document(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  return parse_document(f);
}

namespace {

std::string output_field(const Word& w) {
  if (w.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace

std::string serialize_document(const Document& d) {
  std::ostringstream os;
  os << "alphabet " << d.t.n << "\n";
  os << "states";
  for (const std::string& s : d.t.names) os << ' ' << s;
  os << "\n";
  if (d.initial) os << "initial " << d.t.names[*d.initial] << "\n";
  for (int q = 0; q < d.t.states(); ++q)
    for (int x = 0; x < d.t.n; ++x)
      os << "edge " << d.t.names[q] << ' ' << x << ' '
         << d.t.names[d.t.next(q, x)] << ' ' << output_field(d.t.output(q, x))
         << "\n";
  if (d.annot)
    for (int q = 0; q < d.t.states(); ++q)
      os << "annot " << d.t.names[q] << ' ' << (*d.annot)[q] << "\n";
  return os.str();
}

std::string dot_export(const Document& d) {
  std::ostringstream os;
  os << "digraph transducer {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int q = 0; q < d.t.states(); ++q) {
    os << "  " << d.t.names[q] << " [label=\"" << d.t.names[q];
    if (d.annot) os << "\\n" << (*d.annot)[q];
    os << "\"";
    if (d.initial && *d.initial == q) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (int q = 0; q < d.t.states(); ++q)
    for (int x = 0; x < d.t.n; ++x) {
      const Word& w = d.t.output(q, x);
      os << "  " << d.t.names[q] << " -> " << d.t.names[d.t.next(q, x)]
         << " [label=\"" << x << "|" << (w.empty() ? "e" : show_word(w))
         << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

BlockMapDocument parse_block_map(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) fail_line(1, "empty block map");
  BlockMapDocument d;
  std::size_t li = 0;
  {
    auto& l = lines[li++];
    if (l[0].text != "alphabet" || l.size() != 2)
      fail(l[0], "expected 'alphabet <n>' first");
    long long n = parse_int(l[1]);
    if (n < 2 || n > 1000) fail(l[1], "alphabet size out of range");
    d.map.n = static_cast<int>(n);
  }
  {
    if (li >= lines.size()) fail_line(lines.back()[0].line + 1, "missing 'width' line");
    auto& l = lines[li++];
    if (l[0].text != "width" || l.size() != 2) fail(l[0], "expected 'width <m>'");
    long long w = parse_int(l[1]);
    if (w < 1 || w > 30) fail(l[1], "width out of range");
    d.map.width = static_cast<int>(w);
  }
  long long cells = 1;
  for (int i = 0; i < d.map.width; ++i) cells *= d.map.n;
  d.map.table.assign(cells, -1);

  for (; li < lines.size(); ++li) {
    auto& l = lines[li];
    if (l[0].text == "shift") {
      if (l.size() != 2) fail(l[0], "shift takes one integer");
      if (d.shift) fail(l[0], "shift given twice");
      d.shift = parse_int(l[1]);
    } else if (l[0].text == "entry") {
      if (l.size() != 3) fail(l[0], "entry takes: block letter");
      Word block;
      try {
        block = parse_word(l[1].text, d.map.n);
      } catch (const std::exception& ex) {
        fail(l[1], ex.what());
      }
      if (static_cast<int>(block.size()) != d.map.width)
        fail(l[1], "block has the wrong width");
      long long v = parse_int(l[2]);
      if (v < 0 || v >= d.map.n) fail(l[2], "letter outside the alphabet");
      long long cell = block_index(block, d.map.n);
      if (d.map.table[cell] != -1) fail(l[1], "duplicate entry for this block");
      d.map.table[cell] = static_cast<Letter>(v);
    } else {
      fail(l[0], "unknown directive '" + l[0].text + "'");
    }
  }
  for (long long c = 0; c < cells; ++c)
    if (d.map.table[c] == -1)
      fail_line(lines.back()[0].line,
                "missing entry for block " +
                    show_word(block_at(c, d.map.n, d.map.width)));
  return d;
}

BlockMapDocument load_block_map(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  return parse_block_map(f);
}

std::string serialize_block_map(const BlockMap& f, std::optional<long long> shift) {
  std::ostringstream os;
  os << "alphabet " << f.n << "\nwidth " << f.width << "\n";
  if (shift) os << "shift " << *shift << "\n";
  long long cells = static_cast<long long>(f.table.size());
  for (long long c = 0; c < cells; ++c) {
    Word b = block_at(c, f.n, f.width);
    os << "entry ";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) os << ',';
      os << b[i];
    }
    os << ' ' << f.table[c] << "\n";
  }
  return os.str();
}

}  // namespace stt
