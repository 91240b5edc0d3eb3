#include "stt/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stt {

bool is_right_permutive(const BlockMap& f) {
  for (const Word& p : all_words(f.n, f.width - 1)) {
    std::set<Letter> seen;
    for (int x = 0; x < f.n; ++x) {
      Word b = p;
      b.push_back(x);
      seen.insert(f.apply(b));
    }
    if (static_cast<int>(seen.size()) != f.n) return false;
  }
  return true;
}

bool is_left_permutive(const BlockMap& f) {
  for (const Word& s : all_words(f.n, f.width - 1)) {
    std::set<Letter> seen;
    for (int x = 0; x < f.n; ++x) {
      Word b = {x};
      b.insert(b.end(), s.begin(), s.end());
      seen.insert(f.apply(b));
    }
    if (static_cast<int>(seen.size()) != f.n) return false;
  }
  return true;
}

bool points_equal(const PeriodicPoint& a, const PeriodicPoint& b) {
  if (a.period.empty() || b.period.empty())
    throw std::invalid_argument("points_equal: empty period");
  return primitive_root(a.period) == primitive_root(b.period);
}

PeriodicPoint apply_block_map_periodic(const BlockMap& f, const PeriodicPoint& x) {
  const long long p = static_cast<long long>(x.period.size());
  if (p == 0) throw std::invalid_argument("apply_block_map_periodic: empty period");
  PeriodicPoint y;
  y.period.resize(p);
  for (long long i = 0; i < p; ++i) {
    Word block(f.width);
    for (int j = 0; j < f.width; ++j)
      block[j] = x.period[mod_floor(i - f.width + 1 + j, p)];
    y.period[i] = f.apply(block);
  }
  return y;
}

namespace {

// Forced states around the cycle and the weights needed to place outputs.
struct ActSetup {
  const Transducer* t;
  const std::vector<long long>* w;
  int level;
};

ActSetup setup(const Annotated& e) {
  if (e.elem.constant)
    throw std::logic_error("setup: constant element has no carrier");
  if (e.ann.infinite || !validate_annotation(e.elem.t, e.ann.values))
    throw std::invalid_argument("act: element carries no valid finite annotation");
  auto level = sync_level(e.elem.t);
  if (!level)
    throw std::invalid_argument("act: transducer is not strongly synchronizing");
  return {&e.elem.t, &e.ann.values, *level};
}

}  // namespace

PeriodicPoint act_periodic(const Annotated& e, const PeriodicPoint& x) {
  const long long p = static_cast<long long>(x.period.size());
  if (p == 0) throw std::invalid_argument("act_periodic: empty period");
  if (e.elem.constant) {
    if (e.elem.root.size() != 1)
      throw std::invalid_argument("act_periodic: constant with a non-letter root");
    return {e.elem.root};
  }
  ActSetup s = setup(e);
  const Transducer& t = *s.t;

  PeriodicPoint y;
  y.period.assign(p, -1);
  long long written = 0;
  for (long long i = 0; i < p; ++i) {
    Word hist(s.level);
    for (int j = 0; j < s.level; ++j)
      hist[j] = x.period[mod_floor(i - s.level + j, p)];
    int q = forced_state(t, s.level, hist);
    const Word& o = t.output(q, x.period[i]);
    long long start = i + (*s.w)[q];
    for (std::size_t k = 0; k < o.size(); ++k) {
      long long pos = mod_floor(start + static_cast<long long>(k), p);
      if (y.period[pos] != -1)
        throw std::logic_error("act_periodic: output positions overlap");
      y.period[pos] = o[k];
      ++written;
    }
  }
  if (written != p)
    throw std::logic_error("act_periodic: output does not tile one period");
  return y;
}

Word act_window(const Annotated& e, const Word& context, const Word& center) {
  if (e.elem.constant) {
    if (e.elem.root.size() != 1)
      throw std::invalid_argument("act_window: constant with a non-letter root");
    return Word(center.size(), e.elem.root[0]);
  }
  ActSetup s = setup(e);
  const Transducer& t = *s.t;

  // Absolute positions: context occupies [-C, 0), center [0, M).
  const long long C = static_cast<long long>(context.size());
  const long long M = static_cast<long long>(center.size());
  auto letter = [&](long long i) {
    return i < 0 ? context[i + C] : center[i];
  };

  Word out(center.size(), -1);
  std::vector<bool> have(center.size(), false);
  for (long long i = -C + s.level; i < M; ++i) {
    Word hist(s.level);
    for (int j = 0; j < s.level; ++j) hist[j] = letter(i - s.level + j);
    int q = forced_state(t, s.level, hist);
    const Word& o = t.output(q, letter(i));
    long long start = i + (*s.w)[q];
    for (std::size_t k = 0; k < o.size(); ++k) {
      long long pos = start + static_cast<long long>(k);
      if (pos < 0 || pos >= M) continue;
      out[pos] = o[k];
      have[pos] = true;
    }
  }
  for (long long j = 0; j < M; ++j)
    if (!have[j]) {
      long long maxw = *std::max_element(s.w->begin(), s.w->end());
      std::ostringstream os;
      if (j < s.level + maxw) {
        os << "act_window: center position " << j
           << " is undetermined; need at least " << (s.level + maxw)
           << " letters of left context";
      } else {
        os << "act_window: center position " << j
           << " is written only by letters right of the window; shorten the "
              "center";
      }
      throw std::invalid_argument(os.str());
    }
  return out;
}

AlignedBlockMap to_block_map(const Annotated& e) {
  if (e.elem.constant) {
    if (e.elem.root.size() != 1)
      throw std::invalid_argument("to_block_map: constant with a non-letter root");
    AlignedBlockMap r;
    r.shift = 0;
    r.map.n = e.elem.n;
    r.map.width = 1;
    r.map.table.assign(e.elem.n, e.elem.root[0]);
    return r;
  }
  ActSetup s = setup(e);
  const Transducer& t = *s.t;
  const long long maxw = *std::max_element(s.w->begin(), s.w->end());
  const long long minw = *std::min_element(s.w->begin(), s.w->end());
  const int width = static_cast<int>(s.level + (maxw - minw) + 1);

  AlignedBlockMap r;
  r.shift = minw;
  r.map.n = t.n;
  r.map.width = width;

  // Window letters sit at absolute positions [0, width); the output position
  // they pin down is j = level + maxw. Exactly one available input position
  // writes it.
  const long long j = s.level + maxw;
  for (const Word& v : all_words(t.n, width)) {
    int found = -1;
    Letter value = -1;
    for (long long i = s.level; i < width; ++i) {
      Word hist(v.begin() + (i - s.level), v.begin() + i);
      int q = forced_state(t, s.level, hist);
      const Word& o = t.output(q, v[i]);
      long long start = i + (*s.w)[q];
      if (start <= j && j < start + static_cast<long long>(o.size())) {
        if (found != -1)
          throw std::logic_error("to_block_map: two writers for one position");
        found = static_cast<int>(i);
        value = o[j - start];
      }
    }
    if (found == -1)
      throw std::logic_error("to_block_map: no writer for a window");
    r.map.table.push_back(value);
  }
  return r;
}

Word pi_word(const MonoidElement& e, const Word& gamma) {
  if (!is_prime_word(gamma))
    throw std::invalid_argument("pi_word: circuit word must be prime");
  for (Letter x : gamma)
    if (x < 0 || x >= e.n)
      throw std::invalid_argument("pi_word: letter outside the alphabet");
  if (e.constant) return necklace_of(e.root);
  int circuit = -1;
  for (int q = 0; q < e.t.states(); ++q)
    if (run(e.t, q, gamma).first == q) {
      if (circuit != -1)
        throw std::logic_error("pi_word: several states close the circuit");
      circuit = q;
    }
  if (circuit == -1)
    throw std::logic_error("pi_word: no state closes the circuit");
  return necklace_of(run(e.t, circuit, gamma).second);
}

std::vector<std::pair<Word, Word>> pi_table(const MonoidElement& e, int k) {
  std::vector<std::pair<Word, Word>> out;
  for (const Word& g : prime_necklaces(e.n, k)) out.push_back({g, pi_word(e, g)});
  return out;
}

bool pi_bijective_upto(const MonoidElement& e, int k) {
  std::vector<Word> images;
  std::multiset<std::size_t> source_lengths, image_lengths;
  for (int len = 1; len <= k; ++len)
    for (const Word& g : prime_necklaces(e.n, len)) {
      Word im = pi_word(e, g);
      source_lengths.insert(g.size());
      image_lengths.insert(im.size());
      images.push_back(std::move(im));
    }
  std::set<Word> distinct(images.begin(), images.end());
  return distinct.size() == images.size() && source_lengths == image_lengths;
}

std::optional<Annotated> invert_automorphism(const Annotated& e, int dmax) {
  if (e.elem.constant) return std::nullopt;
  ActSetup s = setup(e);
  const int n = e.elem.n;
  const long long maxw = *std::max_element(s.w->begin(), s.w->end());
  const long long minw = *std::min_element(s.w->begin(), s.w->end());
  const long long spread = s.level + (maxw > 0 ? maxw : -minw) + 2;

  Annotated one = asl_identity(n);
  for (int w = 1; w <= dmax; ++w) {
    // Constrain a width-w table on images of short periodic points; the
    // exponent j aligns the candidate's sliding window.
    std::vector<PeriodicPoint> xs, ys;
    for (int len = 1; len <= w + 2; ++len)
      for (const Word& u : all_words(n, len)) {
        PeriodicPoint x{u};
        xs.push_back(x);
        ys.push_back(act_periodic(e, x));
      }
    for (long long jabs = 0; jabs <= w + spread; ++jabs)
      for (int sign = 0; sign < (jabs == 0 ? 1 : 2); ++sign) {
        long long j = sign == 0 ? jabs : -jabs;
        long long cells = 1;
        for (int i = 0; i < w; ++i) cells *= n;
        std::vector<Letter> table(cells, -1);
        bool ok = true;
        for (std::size_t pi = 0; pi < xs.size() && ok; ++pi) {
          const Word& u = xs[pi].period;
          const Word& y = ys[pi].period;
          const long long L = static_cast<long long>(u.size());
          for (long long i = 0; i < L && ok; ++i) {
            // Require shift^j of the candidate's sliding image of y to be x:
            // table(y[i-j-w+1 .. i-j]) = u[i].
            Word win(w);
            for (int v = 0; v < w; ++v)
              win[v] = y[mod_floor(i - j - w + 1 + v,
                                   static_cast<long long>(y.size()))];
            long long cell = block_index(win, n);
            if (table[cell] == -1)
              table[cell] = u[i];
            else if (table[cell] != u[i])
              ok = false;
          }
        }
        if (!ok) continue;
        for (Letter& v : table)
          if (v == -1) v = 0;
        BlockMap g{n, w, std::move(table)};
        Annotated cand = phi(j, transducer_from_block_map(g));
        if (cand.elem.constant) continue;
        if (asl_equal(asl_product(e, cand), one) &&
            asl_equal(asl_product(cand, e), one))
          return cand;
      }
  }
  return std::nullopt;
}

}  // namespace stt
