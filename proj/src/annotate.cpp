#include "stt/annotate.hpp"

#include <algorithm>
#include <stdexcept>

namespace stt {

bool validate_annotation(const Transducer& t, const std::vector<long long>& a) {
  if (a.size() != static_cast<std::size_t>(t.states())) return false;
  for (int q = 0; q < t.states(); ++q)
    for (int x = 0; x < t.n; ++x)
      if (a[t.next(q, x)] !=
          a[q] + static_cast<long long>(t.output(q, x).size()) - 1)
        return false;
  return true;
}

int zero_loop_state(const Transducer& t) {
  int found = -1;
  for (int q = 0; q < t.states(); ++q)
    if (t.next(q, 0) == q) {
      if (found != -1)
        throw std::runtime_error("zero_loop_state: several states loop on 0");
      found = q;
    }
  if (found == -1)
    throw std::runtime_error("zero_loop_state: no state loops on 0");
  return found;
}

std::optional<std::vector<long long>> propagate_annotation(const Transducer& t,
                                                           int anchor,
                                                           long long value) {
  std::vector<long long> a(t.states(), 0);
  std::vector<bool> set(t.states(), false);
  a[anchor] = value;
  set[anchor] = true;
  std::vector<int> queue = {anchor};
  while (!queue.empty()) {
    int q = queue.back();
    queue.pop_back();
    for (int x = 0; x < t.n; ++x) {
      long long want = a[q] + static_cast<long long>(t.output(q, x).size()) - 1;
      int to = t.next(q, x);
      if (!set[to]) {
        a[to] = want;
        set[to] = true;
        queue.push_back(to);
      } else if (a[to] != want) {
        return std::nullopt;
      }
    }
  }
  if (!std::all_of(set.begin(), set.end(), [](bool b) { return b; }))
    return std::nullopt;
  return a;
}

std::vector<long long> canonical_annotation_of(const Transducer& t) {
  auto level = sync_level(t);
  if (!level)
    throw std::invalid_argument("canonical_annotation: not strongly synchronizing");
  auto words = forcing_words(t, *level);
  int anchor = -1;
  for (int q = 0; q < t.states(); ++q) {
    if (!words[q])
      throw std::invalid_argument("canonical_annotation: input is not a core");
    if (anchor == -1 || *words[q] < *words[anchor]) anchor = q;
  }
  auto a = propagate_annotation(t, anchor, 0);
  if (!a)
    throw std::runtime_error("canonical_annotation: transducer is not Lipschitz");
  return *a;
}

Annotation canonical_annotation(const MonoidElement& e) {
  if (e.constant)
    throw std::invalid_argument("canonical_annotation: constants carry no finite annotation");
  return {false, canonical_annotation_of(e.t)};
}

Annotation zero_loop_annotation(const MonoidElement& e) {
  if (e.constant)
    throw std::invalid_argument("zero_loop_annotation: constants carry no finite annotation");
  auto a = propagate_annotation(e.t, zero_loop_state(e.t), 0);
  if (!a)
    throw std::runtime_error("zero_loop_annotation: transducer is not Lipschitz");
  return {false, *a};
}

Annotated annotation_from_extents(const Transducer& p, long long i) {
  if (!p.synchronous())
    throw std::invalid_argument("annotation_from_extents: transducer is not synchronous");
  MinimizeResult r = minimize(p);
  if (r.constant)
    return {constant_element(p.n, r.constant_root), {true, {}}};
  Annotation ann;
  ann.values.assign(r.minimal.states(), 0);
  std::vector<bool> set(r.minimal.states(), false);
  for (int q = 0; q < p.states(); ++q) {
    long long v = i + static_cast<long long>(r.state_extents[q].value.size());
    int c = r.kappa[q];
    if (!set[c]) {
      ann.values[c] = v;
      set[c] = true;
    } else if (ann.values[c] != v) {
      throw std::logic_error("annotation_from_extents: extent lengths disagree on a class");
    }
  }
  MonoidElement e;
  e.n = p.n;
  e.t = std::move(r.minimal);
  return {std::move(e), std::move(ann)};
}

Annotated phi(long long i, const Transducer& p) {
  return annotation_from_extents(p, i);
}

Annotated asl_identity(int n) {
  return {monoid_identity(n), {false, {0}}};
}

bool asl_equal(const Annotated& a, const Annotated& b) {
  if (a.elem.n != b.elem.n) return false;
  if (a.elem.constant || b.elem.constant)
    return a.elem.constant && b.elem.constant && a.elem.root == b.elem.root;
  return a.elem == b.elem && a.ann == b.ann;
}

Annotated asl_product(const Annotated& a, const Annotated& b) {
  if (a.elem.n != b.elem.n)
    throw std::invalid_argument("asl_product: alphabet mismatch");
  if (a.elem.constant || b.elem.constant) {
    MonoidElement e = m_product(a.elem, b.elem);
    return {std::move(e), {true, {}}};
  }
  Transducer raw = product_raw(a.elem.t, b.elem.t);
  CoreResult cr = core_with_map(raw);
  MinimizeResult mr = minimize(cr.t);
  if (mr.constant)
    return {constant_element(a.elem.n, mr.constant_root), {true, {}}};

  const int bstates = b.elem.t.states();
  Annotation ann;
  ann.values.assign(mr.minimal.states(), 0);
  std::vector<bool> set(mr.minimal.states(), false);
  for (int j = 0; j < cr.t.states(); ++j) {
    int orig = cr.from[j];
    int s = orig / bstates, u = orig % bstates;
    long long v = a.ann.values[s] + b.ann.values[u] +
                  static_cast<long long>(mr.state_extents[j].value.size());
    int c = mr.kappa[j];
    if (!set[c]) {
      ann.values[c] = v;
      set[c] = true;
    } else if (ann.values[c] != v) {
      throw std::logic_error("asl_product: induced annotation is inconsistent");
    }
  }
  MonoidElement e;
  e.n = a.elem.n;
  e.t = std::move(mr.minimal);
  return {std::move(e), std::move(ann)};
}

long long cocycle_c(const MonoidElement& t, const MonoidElement& u) {
  if (t.constant || u.constant)
    throw std::invalid_argument("cocycle_c: inputs must be non-constant");
  if (t.n != u.n) throw std::invalid_argument("cocycle_c: alphabet mismatch");
  int q0 = zero_loop_state(t.t);
  int p0 = zero_loop_state(u.t);
  Transducer raw = product_raw(t.t, u.t);
  Extent e = extent(raw, q0 * u.t.states() + p0);
  if (!e.finite)
    throw std::runtime_error("cocycle_c: pair state has an infinite extent");
  return static_cast<long long>(e.value.size());
}

bool coboundary_check(const MonoidElement& t, const std::vector<long long>& bt,
                      const MonoidElement& u, const std::vector<long long>& bu,
                      const std::vector<long long>& btu) {
  if (t.constant || u.constant)
    throw std::invalid_argument("coboundary_check: inputs must be non-constant");
  if (!validate_annotation(t.t, bt) || !validate_annotation(u.t, bu))
    throw std::invalid_argument("coboundary_check: invalid section annotation");
  MonoidElement tu = m_product(t, u);
  if (tu.constant)
    throw std::invalid_argument("coboundary_check: product is constant");
  if (!validate_annotation(tu.t, btu))
    throw std::invalid_argument("coboundary_check: invalid product annotation");

  long long c = cocycle_c(t, u);
  long long dt = bt[zero_loop_state(t.t)];
  long long du = bu[zero_loop_state(u.t)];
  long long dtu = btu[zero_loop_state(tu.t)];
  long long cp = dt + du + c - dtu;

  Annotated prod = asl_product({t, {false, bt}}, {u, {false, bu}});
  if (prod.elem.constant || !(prod.elem == tu)) return false;
  for (int q = 0; q < tu.t.states(); ++q)
    if (prod.ann.values[q] != btu[q] + cp) return false;
  return cp - c == dt + du - dtu;
}

bool splits(int n) {
  if (n < 2) throw std::invalid_argument("splits: n must be >= 2");
  for (long long m = 2; m * m <= n; ++m)
    for (long long p = m * m; p <= n; p *= m)
      if (p == n) return false;
  return true;
}

}  // namespace stt
