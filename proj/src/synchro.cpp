#include "stt/synchro.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace stt {

namespace {

using Family = std::set<std::vector<int>>;

Family start_family(const Transducer& t) {
  std::vector<int> all(t.states());
  for (int i = 0; i < t.states(); ++i) all[i] = i;
  return {all};
}

Family advance(const Transducer& t, const Family& fam) {
  Family next;
  for (const auto& s : fam)
    for (int x = 0; x < t.n; ++x) {
      std::set<int> img;
      for (int q : s) img.insert(t.next(q, x));
      next.insert(std::vector<int>(img.begin(), img.end()));
    }
  return next;
}

bool all_singletons(const Family& fam) {
  return std::all_of(fam.begin(), fam.end(),
                     [](const std::vector<int>& s) { return s.size() == 1; });
}

}  // namespace

std::optional<int> sync_level(const Transducer& t) {
  require_valid(t);
  Family fam = start_family(t);
  std::set<Family> seen;
  int level = 0;
  for (;;) {
    if (all_singletons(fam)) return level;
    if (!seen.insert(fam).second) return std::nullopt;
    fam = advance(t, fam);
    ++level;
  }
}

bool is_strongly_synchronizing(const Transducer& t) {
  return sync_level(t).has_value();
}

int forced_state(const Transducer& t, int level, const Word& w) {
  if (static_cast<int>(w.size()) < level)
    throw std::invalid_argument("forced_state: word shorter than the level");
  Word suffix(w.end() - level, w.end());
  return run(t, 0, suffix).first;
}

std::vector<std::optional<Word>> forcing_words(const Transducer& t, int level) {
  std::vector<std::optional<Word>> out(t.states());
  for (const Word& w : all_words(t.n, level)) {
    // Forced only if every start state agrees.
    int q = run(t, 0, w).first;
    bool forced = true;
    for (int s = 1; s < t.states() && forced; ++s)
      forced = (run(t, s, w).first == q);
    if (forced && !out[q]) out[q] = w;
  }
  return out;
}

CoreResult core_with_map(const Transducer& t) {
  auto level = sync_level(t);
  if (!level)
    throw std::invalid_argument("core: transducer is not strongly synchronizing");
  // Image of the reachable-set iteration; decreasing once past the level,
  // so iterate a bit beyond and then to a fixpoint.
  std::set<int> s;
  for (int q = 0; q < t.states(); ++q) s.insert(q);
  for (int d = 0; d < *level; ++d) {
    std::set<int> next;
    for (int q : s)
      for (int x = 0; x < t.n; ++x) next.insert(t.next(q, x));
    s.swap(next);
  }
  for (;;) {
    std::set<int> next;
    for (int q : s)
      for (int x = 0; x < t.n; ++x) next.insert(t.next(q, x));
    if (next == s) break;
    s.swap(next);
  }
  CoreResult res;
  res.from.assign(s.begin(), s.end());
  std::vector<int> back(t.states(), -1);
  for (std::size_t i = 0; i < res.from.size(); ++i) back[res.from[i]] = static_cast<int>(i);
  Transducer& c = res.t;
  c.n = t.n;
  for (int q : res.from) c.names.push_back(t.names[q]);
  c.step_to.resize(res.from.size() * t.n);
  c.out.resize(res.from.size() * t.n);
  for (std::size_t i = 0; i < res.from.size(); ++i)
    for (int x = 0; x < t.n; ++x) {
      int to = back[t.next(res.from[i], x)];
      if (to < 0) throw std::logic_error("core: image set not closed");
      c.step_to[i * t.n + x] = to;
      c.out[i * t.n + x] = t.output(res.from[i], x);
    }
  return res;
}

Transducer core(const Transducer& t) { return core_with_map(t).t; }

bool is_core(const Transducer& t) {
  return core_with_map(t).from.size() == static_cast<std::size_t>(t.states());
}

CanonicalResult canonical_with_map(const Transducer& t) {
  auto level = sync_level(t);
  if (!level)
    throw std::invalid_argument("canonical_form: not strongly synchronizing");
  auto words = forcing_words(t, *level);
  for (int q = 0; q < t.states(); ++q)
    if (!words[q])
      throw std::invalid_argument("canonical_form: state '" + t.names[q] +
                                  "' is outside the core");
  std::vector<int> order(t.states());
  for (int i = 0; i < t.states(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return *words[a] < *words[b]; });
  CanonicalResult res;
  res.rank.resize(t.states());
  for (int i = 0; i < t.states(); ++i) res.rank[order[i]] = i;
  Transducer& c = res.t;
  c.n = t.n;
  c.step_to.resize(t.step_to.size());
  c.out.resize(t.out.size());
  for (int i = 0; i < t.states(); ++i) {
    c.names.push_back("q" + std::to_string(i));
    int q = order[i];
    for (int x = 0; x < t.n; ++x) {
      c.step_to[i * t.n + x] = res.rank[t.next(q, x)];
      c.out[i * t.n + x] = t.output(q, x);
    }
  }
  return res;
}

Transducer canonical_form(const Transducer& t) { return canonical_with_map(t).t; }

bool isomorphic(const Transducer& a, const Transducer& b) {
  return same_shape(canonical_form(a), canonical_form(b));
}

}  // namespace stt
