#include "stt/transducer.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stt {

Letter BlockMap::apply(const Word& block) const {
  if (static_cast<int>(block.size()) != width)
    throw std::invalid_argument("block map applied to block of wrong width");
  return table[block_index(block, n)];
}

bool Transducer::synchronous() const {
  return std::all_of(out.begin(), out.end(),
                     [](const Word& w) { return w.size() == 1; });
}

int Transducer::max_output_len() const {
  std::size_t m = 0;
  for (const Word& w : out) m = std::max(m, w.size());
  return static_cast<int>(m);
}

int Transducer::state_index(const std::string& name) const {
  for (int i = 0; i < states(); ++i)
    if (names[i] == name) return i;
  return -1;
}

bool same_shape(const Transducer& a, const Transducer& b) {
  return a.n == b.n && a.step_to == b.step_to && a.out == b.out;
}

std::vector<std::string> validate(const Transducer& t) {
  std::vector<std::string> report;
  if (t.n < 2) report.push_back("alphabet size must be at least 2");
  const int m = t.states();
  if (m == 0) {
    report.push_back("no states");
    return report;
  }
  {
    std::set<std::string> seen;
    for (const std::string& s : t.names)
      if (!seen.insert(s).second)
        report.push_back("duplicate state name '" + s + "'");
  }
  const std::size_t want = static_cast<std::size_t>(m) * t.n;
  if (t.step_to.size() != want || t.out.size() != want) {
    report.push_back("transition/output tables have wrong size");
    return report;
  }
  for (int q = 0; q < m; ++q)
    for (int x = 0; x < t.n; ++x) {
      int to = t.next(q, x);
      if (to < 0 || to >= m) {
        std::ostringstream os;
        os << "edge (" << t.names[q] << ", " << x << ") targets state index "
           << to << " out of range";
        report.push_back(os.str());
      }
      for (Letter y : t.output(q, x))
        if (y < 0 || y >= t.n) {
          std::ostringstream os;
          os << "edge (" << t.names[q] << ", " << x << ") writes letter " << y
             << " outside the alphabet";
          report.push_back(os.str());
        }
    }
  if (!report.empty()) return report;

  // A cycle along empty-output edges would read forever without writing;
  // such machines define no map on streams. Depth-first cycle check on the
  // empty-output subgraph.
  std::vector<int> mark(m, 0);  // 0 fresh, 1 on stack, 2 done
  std::vector<std::pair<int, int>> stack;
  for (int start = 0; start < m; ++start) {
    if (mark[start] != 0) continue;
    stack.push_back({start, 0});
    mark[start] = 1;
    while (!stack.empty()) {
      auto& [q, x] = stack.back();
      if (x == t.n) {
        mark[q] = 2;
        stack.pop_back();
        continue;
      }
      int x0 = x++;
      if (!t.output(q, x0).empty()) continue;
      int to = t.next(q, x0);
      if (mark[to] == 1) {
        report.push_back("cycle of empty outputs through state '" +
                         t.names[to] + "'");
        return report;
      }
      if (mark[to] == 0) {
        mark[to] = 1;
        stack.push_back({to, 0});
      }
    }
  }
  return report;
}

void require_valid(const Transducer& t) {
  auto report = validate(t);
  if (!report.empty()) throw std::invalid_argument(report.front());
}

std::pair<int, Word> run(const Transducer& t, int q, const Word& w) {
  Word acc;
  for (Letter x : w) {
    const Word& o = t.output(q, x);
    acc.insert(acc.end(), o.begin(), o.end());
    q = t.next(q, x);
  }
  return {q, acc};
}

Transducer product_raw(const Transducer& t, const Transducer& u) {
  if (t.n != u.n)
    throw std::invalid_argument("product of transducers over different alphabets");
  Transducer p;
  p.n = t.n;
  const int nu = u.states();
  p.names.reserve(static_cast<std::size_t>(t.states()) * nu);
  for (int a = 0; a < t.states(); ++a)
    for (int b = 0; b < nu; ++b) p.names.push_back(t.names[a] + "_" + u.names[b]);
  {
    std::set<std::string> seen(p.names.begin(), p.names.end());
    if (static_cast<int>(seen.size()) != static_cast<int>(p.names.size()))
      for (std::size_t i = 0; i < p.names.size(); ++i)
        p.names[i] = "s" + std::to_string(i);
  }
  p.step_to.resize(p.names.size() * p.n);
  p.out.resize(p.names.size() * p.n);
  for (int a = 0; a < t.states(); ++a)
    for (int b = 0; b < nu; ++b)
      for (int x = 0; x < p.n; ++x) {
        const Word& w = t.output(a, x);
        auto [b2, v] = run(u, b, w);
        int idx = (a * nu + b) * p.n + x;
        p.step_to[idx] = t.next(a, x) * nu + b2;
        p.out[idx] = std::move(v);
      }
  return p;
}

Transducer de_bruijn(int n, int m) {
  if (n < 2 || m < 0) throw std::invalid_argument("de_bruijn: bad parameters");
  Transducer t;
  t.n = n;
  long long count = 1;
  for (int i = 0; i < m; ++i) count *= n;
  for (long long s = 0; s < count; ++s) {
    Word w = block_at(s, n, m);
    t.names.push_back(m == 0 ? std::string("e") : show_word(w));
  }
  t.step_to.resize(count * n);
  t.out.resize(count * n);
  for (long long s = 0; s < count; ++s) {
    Word w = block_at(s, n, m);
    for (int x = 0; x < n; ++x) {
      Word w2(w.begin() + (m > 0 ? 1 : 0), w.end());
      w2.push_back(x);
      t.step_to[s * n + x] =
          static_cast<int>(block_index(Word(w2.end() - m, w2.end()), n));
    }
  }
  return t;
}

Transducer identity_transducer(int n) {
  Transducer t;
  t.n = n;
  t.names = {"q0"};
  t.step_to.assign(n, 0);
  for (int x = 0; x < n; ++x) t.out.push_back({x});
  return t;
}

Transducer shift_transducer(int n) {
  Transducer t;
  t.n = n;
  for (int q = 0; q < n; ++q) t.names.push_back("q" + std::to_string(q));
  t.step_to.resize(static_cast<std::size_t>(n) * n);
  t.out.resize(static_cast<std::size_t>(n) * n);
  for (int q = 0; q < n; ++q)
    for (int x = 0; x < n; ++x) {
      t.step_to[q * n + x] = x;
      t.out[q * n + x] = {q};
    }
  return t;
}

Transducer constant_transducer(int n, const Word& x) {
  if (x.empty()) throw std::invalid_argument("constant transducer needs a nonempty word");
  Transducer t;
  t.n = n;
  t.names = {"z"};
  t.step_to.assign(n, 0);
  t.out.assign(n, x);
  return t;
}

Transducer transducer_from_block_map(const BlockMap& f) {
  if (f.width < 1) throw std::invalid_argument("block map width must be positive");
  long long want = 1;
  for (int i = 0; i < f.width; ++i) want *= f.n;
  if (static_cast<long long>(f.table.size()) != want)
    throw std::invalid_argument("block map table size does not match width");
  const int m = f.width - 1;
  Transducer t = de_bruijn(f.n, m);
  for (int s = 0; s < t.states(); ++s) {
    Word block = block_at(s, f.n, m);
    for (int x = 0; x < f.n; ++x) {
      Word b = block;
      b.push_back(x);
      t.out[s * f.n + x] = {f.apply(b)};
    }
  }
  return t;
}

std::optional<Transducer> invert_synchronous(const Transducer& t) {
  if (!t.synchronous())
    throw std::invalid_argument("invert_synchronous: transducer is not synchronous");
  Transducer r;
  r.n = t.n;
  r.names = t.names;
  r.step_to.assign(t.step_to.size(), 0);
  r.out.assign(t.out.size(), {});
  for (int q = 0; q < t.states(); ++q) {
    std::vector<int> pre(t.n, -1);
    for (int x = 0; x < t.n; ++x) {
      Letter y = t.output(q, x)[0];
      if (pre[y] != -1) return std::nullopt;
      pre[y] = x;
    }
    for (int y = 0; y < t.n; ++y) {
      int x = pre[y];
      r.step_to[q * t.n + y] = t.next(q, x);
      r.out[q * t.n + y] = {x};
    }
  }
  return r;
}

}  // namespace stt
