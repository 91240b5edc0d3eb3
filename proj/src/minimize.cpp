#include "stt/minimize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stt {

namespace {

// Eventually periodic stream head . cycle^w with a primitive cycle.
struct StreamSpec {
  Word head;
  Word cycle;
};

Letter stream_at(const StreamSpec& s, long long i) {
  if (i < static_cast<long long>(s.head.size())) return s.head[i];
  return s.cycle[(i - s.head.size()) % s.cycle.size()];
}

Word stream_prefix(const StreamSpec& s, long long len) {
  Word w(len);
  for (long long i = 0; i < len; ++i) w[i] = stream_at(s, i);
  return w;
}

// Positions p1 and p2 see the same suffix. Comparing past both the head and
// two full cycles pins the phase, since the cycle is primitive.
bool suffix_equal(const StreamSpec& s, long long p1, long long p2) {
  long long span = static_cast<long long>(s.head.size()) +
                   2 * static_cast<long long>(s.cycle.size());
  for (long long i = 0; i < span; ++i)
    if (stream_at(s, p1 + i) != stream_at(s, p2 + i)) return false;
  return true;
}

long long normalize_pos(const StreamSpec& s, long long p) {
  long long h = static_cast<long long>(s.head.size());
  if (p < h) return p;
  return h + (p - h) % static_cast<long long>(s.cycle.size());
}

// When every stream out of q is the same one, return it. The candidate is
// read off the all-zeros path; the check assigns each reachable state a
// position in the candidate and verifies every edge writes the stream.
std::optional<StreamSpec> constant_image(const Transducer& t, int q) {
  StreamSpec spec;
  {
    std::vector<int> seen_at(t.states(), -1);
    std::vector<Word> outs;
    int cur = q;
    while (seen_at[cur] == -1) {
      seen_at[cur] = static_cast<int>(outs.size());
      outs.push_back(t.output(cur, 0));
      cur = t.next(cur, 0);
    }
    int loop_start = seen_at[cur];
    Word raw;
    for (int i = loop_start; i < static_cast<int>(outs.size()); ++i)
      raw.insert(raw.end(), outs[i].begin(), outs[i].end());
    if (raw.empty())
      throw std::logic_error("constant_image: empty cycle output survived validation");
    for (int i = 0; i < loop_start; ++i)
      spec.head.insert(spec.head.end(), outs[i].begin(), outs[i].end());
    spec.cycle = primitive_root(raw);
  }

  std::vector<long long> pos(t.states(), -1);
  pos[q] = 0;
  std::vector<int> queue = {q};
  while (!queue.empty()) {
    int s = queue.back();
    queue.pop_back();
    for (int x = 0; x < t.n; ++x) {
      const Word& w = t.output(s, x);
      for (std::size_t i = 0; i < w.size(); ++i)
        if (stream_at(spec, pos[s] + i) != w[i]) return std::nullopt;
      long long p2 = normalize_pos(spec, pos[s] + w.size());
      int to = t.next(s, x);
      if (pos[to] == -1) {
        pos[to] = p2;
        queue.push_back(to);
      } else if (!suffix_equal(spec, pos[to], p2)) {
        return std::nullopt;
      }
    }
  }
  return spec;
}

}  // namespace

std::vector<Extent> extents(const Transducer& t) {
  require_valid(t);
  const int m = t.states();
  std::vector<std::optional<StreamSpec>> constant(m);
  for (int q = 0; q < m; ++q) constant[q] = constant_image(t, q);

  const long long bound =
      static_cast<long long>(m) * std::max(1, t.max_output_len());
  const long long cap = bound + 2;

  std::vector<Word> cur(m);
  for (int q = 0; q < m; ++q)
    if (constant[q]) cur[q] = stream_prefix(*constant[q], cap);

  // Kleene iteration of l(q) = lcp over x of output(q,x) . l(next(q,x)),
  // capped; values only grow, so this reaches the least fixpoint.
  for (;;) {
    bool changed = false;
    std::vector<Word> next = cur;
    for (int q = 0; q < m; ++q) {
      if (constant[q]) continue;
      Word v;
      for (int x = 0; x < t.n; ++x) {
        Word piece = t.output(q, x);
        const Word& tail = cur[t.next(q, x)];
        piece.insert(piece.end(), tail.begin(), tail.end());
        if (static_cast<long long>(piece.size()) > cap) piece.resize(cap);
        v = (x == 0) ? piece : lcp(v, piece);
      }
      if (v != cur[q]) changed = true;
      next[q] = std::move(v);
    }
    cur.swap(next);
    if (!changed) break;
  }

  std::vector<Extent> out(m);
  for (int q = 0; q < m; ++q) {
    if (constant[q]) {
      out[q] = {false, necklace_of(constant[q]->cycle)};
    } else {
      if (static_cast<long long>(cur[q].size()) > bound)
        throw std::logic_error("extents: finite extent exceeded its bound");
      out[q] = {true, cur[q]};
    }
  }
  return out;
}

Extent extent(const Transducer& t, int q) { return extents(t)[q]; }

Word lcp_at_depth(const Transducer& t, int q, int d) {
  Word acc;
  bool first = true;
  for (const Word& w : all_words(t.n, d)) {
    Word o = run(t, q, w).second;
    acc = first ? o : lcp(acc, o);
    first = false;
  }
  return acc;
}

Word big_lambda(const Transducer& t, int q, const Word& w) {
  auto [q2, v] = run(t, q, w);
  Extent e = extent(t, q2);
  if (!e.finite)
    throw std::domain_error("big_lambda: landing state has an infinite extent");
  v.insert(v.end(), e.value.begin(), e.value.end());
  return v;
}

namespace {

// Rewrite outputs so that each state's extent is already delivered:
// out'(q, x) = out(q, x) . ext(next) minus the leading ext(q).
Transducer shifted_outputs(const Transducer& t, const std::vector<Extent>& ext) {
  Transducer r = t;
  for (int q = 0; q < t.states(); ++q)
    for (int x = 0; x < t.n; ++x) {
      Word w = t.output(q, x);
      const Word& tail = ext[t.next(q, x)].value;
      w.insert(w.end(), tail.begin(), tail.end());
      const Word& pre = ext[q].value;
      if (!is_prefix(pre, w))
        throw std::logic_error("shifted_outputs: extent is not a prefix of the edge value");
      r.out[q * t.n + x] = Word(w.begin() + pre.size(), w.end());
    }
  return r;
}

}  // namespace

Initial remove_incomplete_response(const Transducer& t, int q) {
  require_valid(t);
  auto ext = extents(t);
  for (const Extent& e : ext)
    if (!e.finite)
      throw std::invalid_argument(
          "remove_incomplete_response: transducer has infinite extents");
  Transducer r = shifted_outputs(t, ext);
  std::string name = "init";
  while (r.state_index(name) != -1) name += "_";
  int start = r.states();
  r.names.push_back(name);
  r.step_to.resize(r.names.size() * r.n);
  r.out.resize(r.names.size() * r.n);
  for (int x = 0; x < t.n; ++x) {
    // The start replays q with its pending prefix delivered up front.
    Word w = t.output(q, x);
    const Word& tail = ext[t.next(q, x)].value;
    w.insert(w.end(), tail.begin(), tail.end());
    r.step_to[start * r.n + x] = t.next(q, x);
    r.out[start * r.n + x] = std::move(w);
  }
  return {std::move(r), start};
}

std::vector<int> behaviour_classes(const Transducer& t) {
  const int m = t.states();
  std::vector<int> cls(m, 0);
  int count;
  {
    std::map<std::vector<Word>, int> ids;
    for (int q = 0; q < m; ++q) {
      std::vector<Word> row(t.out.begin() + q * t.n, t.out.begin() + (q + 1) * t.n);
      cls[q] = ids.emplace(std::move(row), static_cast<int>(ids.size())).first->second;
    }
    count = static_cast<int>(ids.size());
  }
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> next(m);
    for (int q = 0; q < m; ++q) {
      std::vector<int> succ(t.n);
      for (int x = 0; x < t.n; ++x) succ[x] = cls[t.next(q, x)];
      next[q] = ids.emplace(std::make_pair(cls[q], std::move(succ)),
                            static_cast<int>(ids.size()))
                    .first->second;
    }
    if (static_cast<int>(ids.size()) == count) return cls;
    count = static_cast<int>(ids.size());
    cls.swap(next);
  }
}

bool omega_equivalent(const Transducer& t, int p, int q) {
  auto ext = extents(t);
  if (!ext[p].finite || !ext[q].finite) {
    if (ext[p].finite != ext[q].finite) return false;
    auto sp = constant_image(t, p);
    auto sq = constant_image(t, q);
    long long len = static_cast<long long>(sp->head.size() + sq->head.size()) +
                    2ll * sp->cycle.size() * sq->cycle.size();
    return stream_prefix(*sp, len) == stream_prefix(*sq, len);
  }
  if (ext[p] != ext[q]) return false;
  Transducer sh = shifted_outputs(t, ext);
  auto cls = behaviour_classes(sh);
  return cls[p] == cls[q];
}

MinimizeResult minimize(const Transducer& t) {
  auto level = sync_level(t);
  if (!level)
    throw std::invalid_argument("minimize: transducer is not strongly synchronizing");
  if (!is_core(t))
    throw std::invalid_argument("minimize: transducer is not its own core");

  MinimizeResult res;
  res.state_extents = extents(t);

  if (!res.state_extents[0].finite) {
    // The core is strongly connected, so one constant state makes them all
    // constant on the same tail.
    for (const Extent& e : res.state_extents)
      if (e.finite) throw std::logic_error("minimize: mixed extent kinds in a core");
    res.constant = true;
    res.constant_root = res.state_extents[0].value;
    res.minimal = canonical_form(constant_transducer(t.n, res.constant_root));
    res.kappa.assign(t.states(), 0);
    return res;
  }

  Transducer sh = shifted_outputs(t, res.state_extents);
  std::vector<int> cls = behaviour_classes(sh);
  int nclasses = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<int> rep(nclasses, -1);
  for (int q = 0; q < t.states(); ++q)
    if (rep[cls[q]] == -1) rep[cls[q]] = q;

  Transducer quo;
  quo.n = t.n;
  for (int c = 0; c < nclasses; ++c) quo.names.push_back("c" + std::to_string(c));
  quo.step_to.resize(static_cast<std::size_t>(nclasses) * t.n);
  quo.out.resize(static_cast<std::size_t>(nclasses) * t.n);
  for (int c = 0; c < nclasses; ++c)
    for (int x = 0; x < t.n; ++x) {
      quo.step_to[c * t.n + x] = cls[sh.next(rep[c], x)];
      quo.out[c * t.n + x] = sh.output(rep[c], x);
    }

  CanonicalResult canon = canonical_with_map(quo);
  res.minimal = std::move(canon.t);
  res.kappa.resize(t.states());
  for (int q = 0; q < t.states(); ++q) res.kappa[q] = canon.rank[cls[q]];
  return res;
}

Transducer weak_minimize(const Transducer& t) {
  if (!t.synchronous())
    throw std::invalid_argument("weak_minimize: transducer is not synchronous");
  require_valid(t);
  std::vector<int> cls = behaviour_classes(t);
  int nclasses = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<int> rep(nclasses, -1);
  for (int q = 0; q < t.states(); ++q)
    if (rep[cls[q]] == -1) rep[cls[q]] = q;
  Transducer quo;
  quo.n = t.n;
  for (int c = 0; c < nclasses; ++c) quo.names.push_back("c" + std::to_string(c));
  quo.step_to.resize(static_cast<std::size_t>(nclasses) * t.n);
  quo.out.resize(static_cast<std::size_t>(nclasses) * t.n);
  for (int c = 0; c < nclasses; ++c)
    for (int x = 0; x < t.n; ++x) {
      quo.step_to[c * t.n + x] = cls[t.next(rep[c], x)];
      quo.out[c * t.n + x] = t.output(rep[c], x);
    }
  return canonical_form(quo);
}

}  // namespace stt
