#include "stt/monoid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stt {

MonoidElement monoid_identity(int n) {
  MonoidElement e;
  e.n = n;
  e.t = canonical_form(identity_transducer(n));
  return e;
}

MonoidElement constant_element(int n, const Word& root) {
  MonoidElement e;
  e.n = n;
  e.constant = true;
  e.root = necklace_of(root);
  return e;
}

MonoidElement to_element(const Transducer& t) {
  MinimizeResult r = minimize(core(t));
  if (r.constant) return constant_element(t.n, r.constant_root);
  MonoidElement e;
  e.n = t.n;
  e.t = std::move(r.minimal);
  return e;
}

MonoidElement m_product(const MonoidElement& a, const MonoidElement& b) {
  if (a.n != b.n) throw std::invalid_argument("m_product: alphabet mismatch");
  if (b.constant) return b;
  if (a.constant) {
    // Feed the constant stream root^w through b; the image's eventual cycle
    // is what survives.
    std::vector<int> seen_at(b.t.states(), -1);
    std::vector<Word> outs;
    int cur = 0;
    while (seen_at[cur] == -1) {
      seen_at[cur] = static_cast<int>(outs.size());
      auto [to, w] = run(b.t, cur, a.root);
      outs.push_back(std::move(w));
      cur = to;
    }
    Word cycle;
    for (int i = seen_at[cur]; i < static_cast<int>(outs.size()); ++i)
      cycle.insert(cycle.end(), outs[i].begin(), outs[i].end());
    if (cycle.empty())
      throw std::logic_error("m_product: empty image cycle survived validation");
    return constant_element(a.n, necklace_of(cycle));
  }
  return to_element(product_raw(a.t, b.t));
}

Transducer spn_product(const Transducer& a, const Transducer& b) {
  if (!a.synchronous() || !b.synchronous())
    throw std::invalid_argument("spn_product: inputs must be synchronous");
  return weak_minimize(core(product_raw(a, b)));
}

bool transducer_lipschitz(const Transducer& t) {
  require_valid(t);
  std::vector<long long> pot(t.states());
  std::vector<bool> set(t.states(), false);
  for (int start = 0; start < t.states(); ++start) {
    if (set[start]) continue;
    pot[start] = 0;
    set[start] = true;
    std::vector<int> queue = {start};
    while (!queue.empty()) {
      int q = queue.back();
      queue.pop_back();
      for (int x = 0; x < t.n; ++x) {
        long long want =
            pot[q] + static_cast<long long>(t.output(q, x).size()) - 1;
        int to = t.next(q, x);
        if (!set[to]) {
          pot[to] = want;
          set[to] = true;
          queue.push_back(to);
        } else if (pot[to] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_lipschitz(const MonoidElement& e) {
  if (e.constant) return e.root.size() == 1;
  return transducer_lipschitz(e.t);
}

bool states_injective(const Transducer& t) {
  if (!t.synchronous())
    throw std::invalid_argument("states_injective: transducer is not synchronous");
  require_valid(t);
  const int m = t.states();
  auto id = [m](int p, int q) {
    if (p > q) std::swap(p, q);
    return p * m + q;
  };
  // A pair is alive when some output-matched edge pair leads to an alive
  // pair; the greatest fixpoint keeps exactly the pairs with infinite
  // matched runs.
  std::vector<bool> alive(static_cast<std::size_t>(m) * m, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (int p = 0; p < m; ++p)
      for (int q = p; q < m; ++q) {
        if (!alive[id(p, q)]) continue;
        bool ok = false;
        for (int a = 0; a < t.n && !ok; ++a)
          for (int b = 0; b < t.n && !ok; ++b)
            if (t.output(p, a) == t.output(q, b))
              ok = alive[id(t.next(p, a), t.next(q, b))];
        if (!ok) {
          alive[id(p, q)] = false;
          changed = true;
        }
      }
  }
  for (int s = 0; s < m; ++s)
    for (int a = 0; a < t.n; ++a)
      for (int b = a + 1; b < t.n; ++b)
        if (t.output(s, a) == t.output(s, b) &&
            alive[id(t.next(s, a), t.next(s, b))])
          return false;
  return true;
}

ImageBasis image_basis(const Transducer& t, int q) {
  if (!t.synchronous())
    throw std::invalid_argument("image_basis: transducer is not synchronous");
  require_valid(t);

  using Subset = std::vector<int>;
  auto step = [&](const Subset& s, Letter y) {
    std::set<int> img;
    for (int p : s)
      for (int a = 0; a < t.n; ++a)
        if (t.output(p, a)[0] == y) img.insert(t.next(p, a));
    return Subset(img.begin(), img.end());
  };

  // Explore every subset reachable from {q} along output letters.
  std::map<Subset, int> ids;
  std::vector<Subset> subs;
  std::vector<std::vector<int>> succ;  // -1 for empty
  {
    Subset s0 = {q};
    ids[s0] = 0;
    subs.push_back(s0);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      succ.emplace_back(t.n, -1);
      for (int y = 0; y < t.n; ++y) {
        Subset next = step(subs[i], y);
        if (next.empty()) continue;
        auto [it, fresh] = ids.emplace(next, static_cast<int>(subs.size()));
        if (fresh) subs.push_back(next);
        succ[i][y] = it->second;
      }
    }
  }

  // Full subsets: every letter remains producible forever.
  std::vector<bool> full(subs.size(), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!full[i]) continue;
      for (int y = 0; y < t.n; ++y)
        if (succ[i][y] == -1 || !full[succ[i][y]]) {
          full[i] = false;
          changed = true;
          break;
        }
    }
  }

  ImageBasis res;
  if (full[0]) {
    res.basis.push_back({});
    return res;
  }

  // The boundary region must be acyclic for the image to be clopen.
  {
    std::vector<int> mark(subs.size(), 0);
    std::vector<std::pair<int, int>> stack = {{0, 0}};
    mark[0] = 1;
    while (!stack.empty()) {
      auto& [i, y] = stack.back();
      if (y == t.n) {
        mark[i] = 2;
        stack.pop_back();
        continue;
      }
      int j = succ[i][y++];
      if (j == -1 || full[j]) continue;
      if (mark[j] == 1) {
        res.clopen = false;
        return res;
      }
      if (mark[j] == 0) {
        mark[j] = 1;
        stack.push_back({j, 0});
      }
    }
  }

  // Cut the prefix tree at full subsets; the boundary is a DAG so this
  // terminates.
  std::vector<std::pair<int, Word>> frontier = {{0, {}}};
  while (!frontier.empty()) {
    auto [i, w] = frontier.back();
    frontier.pop_back();
    for (int y = 0; y < t.n; ++y) {
      int j = succ[i][y];
      if (j == -1) continue;
      Word w2 = w;
      w2.push_back(y);
      if (full[j])
        res.basis.push_back(std::move(w2));
      else
        frontier.push_back({j, std::move(w2)});
    }
  }
  std::sort(res.basis.begin(), res.basis.end());
  return res;
}

int sig(const Transducer& t) {
  require_valid(t);
  int result = -1;
  for (int q = 0; q < t.states(); ++q) {
    ImageBasis b = image_basis(t, q);
    if (!b.clopen)
      throw std::runtime_error("sig: image of state '" + t.names[q] +
                               "' is not clopen");
    long long m = static_cast<long long>(b.basis.size());
    int r = t.n == 2 ? 1
                     : static_cast<int>(mod_floor(m - 1, t.n - 1)) + 1;
    if (result == -1)
      result = r;
    else if (result != r)
      throw std::runtime_error("sig: states disagree on the residue");
  }
  return result;
}

std::set<int> divisor_subgroup(int n) {
  if (n < 2) throw std::invalid_argument("divisor_subgroup: n must be >= 2");
  if (n == 2) return {1};
  auto reduce = [n](long long v) {
    return static_cast<int>(mod_floor(v - 1, n - 1)) + 1;
  };
  std::set<int> g;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) g.insert(reduce(d));
  for (bool grew = true; grew;) {
    grew = false;
    std::set<int> next = g;
    for (int a : g)
      for (int b : g)
        if (next.insert(reduce(static_cast<long long>(a) * b)).second) grew = true;
    g.swap(next);
  }
  return g;
}

bool stabilizer_check(long long s, long long r, int n) {
  if (n < 2) throw std::invalid_argument("stabilizer_check: n must be >= 2");
  return mod_floor(s * r - r, n - 1) == 0;
}

std::optional<int> order_bounded(const MonoidElement& e, int bound) {
  MonoidElement acc = e;
  MonoidElement one = monoid_identity(e.n);
  for (int m = 1; m <= bound; ++m) {
    if (acc == one) return m;
    acc = m_product(acc, e);
  }
  return std::nullopt;
}

}  // namespace stt
