#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stt/annotate.hpp"
#include "stt/dynamics.hpp"
#include "stt/io.hpp"
#include "stt/minimize.hpp"
#include "stt/monoid.hpp"
#include "stt/synchro.hpp"
#include "stt/transducer.hpp"

using namespace stt;

namespace {

// Thrown for a well-posed question whose answer is "no"; exit status 1.
struct Negative {
  std::string message;
};

std::string word_text(const Word& w) { return w.empty() ? "e" : show_word(w); }

std::string extent_text(const Extent& e) {
  if (!e.finite) return "infinite, cycle root " + word_text(e.value);
  return word_text(e.value);
}

void print_element(const MonoidElement& e) {
  if (e.constant) {
    std::cout << serialize_document({constant_transducer(e.n, e.root), {}, {}});
    std::cout << "# constant element, root " << word_text(e.root) << "\n";
  } else {
    std::cout << serialize_document({e.t, {}, {}});
  }
}

// Annotation for a document: annot lines carry over minimization as
// a(q) + |extent(q)| at kappa(q); without them the canonical annotation.
Annotated annotated_of(const Document& d) {
  MonoidElement e = to_element(d.t);
  if (!d.annot) return {e, canonical_annotation(e)};
  if (e.constant)
    throw std::runtime_error("annot lines cannot attach to a constant element");
  MinimizeResult r = minimize(core(d.t));
  std::vector<long long> v(e.t.states(), 0);
  std::vector<bool> seen(e.t.states(), false);
  CoreResult cr = core_with_map(d.t);
  for (int c = 0; c < cr.t.states(); ++c) {
    long long val = (*d.annot)[cr.from[c]] +
                    static_cast<long long>(r.state_extents[c].value.size());
    int k = r.kappa[c];
    if (seen[k] && v[k] != val)
      throw std::runtime_error("annot lines disagree after minimization");
    seen[k] = true;
    v[k] = val;
  }
  if (!validate_annotation(e.t, v))
    throw std::runtime_error("annot lines do not satisfy the annotation rule");
  return {e, Annotation{false, v}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strongly synchronizing transducer toolkit"};
  app.require_subcommand(1);

  std::string file, file_b;
  std::string word_arg;
  int alpha = 2, win = 1, k_arg = 1, bound = 1, dmax = 6, split_n = 2;
  long long from_i = 0;
  bool raw = false, spn = false, mprod = false;
  bool canon = false, zloop = false, from_ext = false;
  bool lip = false, inj = false, clo = false;
  int pi_bij = 0;

  auto* validate_cmd =
      app.add_subcommand("validate", "check a transducer file");
  validate_cmd->add_option("file", file)->required();
  validate_cmd->callback([&] {
    Document d;
    try {
      d = load_document(file);
    } catch (const std::exception& e) {
      throw Negative{std::string("invalid: ") + e.what()};
    }
    auto problems = validate(d.t);
    if (!problems.empty()) {
      std::string m;
      for (const auto& p : problems) m += "invalid: " + p + "\n";
      m.pop_back();
      throw Negative{m};
    }
    std::cout << "valid: " << d.t.states() << " states over alphabet "
              << d.t.n << "\n";
  });

  auto* debruijn_cmd =
      app.add_subcommand("debruijn", "de Bruijn automaton, empty outputs");
  debruijn_cmd->add_option("n", alpha)->required();
  debruijn_cmd->add_option("m", win)->required();
  debruijn_cmd->callback(
      [&] { std::cout << serialize_document({de_bruijn(alpha, win), {}, {}}); });

  auto* fbm_cmd =
      app.add_subcommand("from-blockmap", "transducer of a block map table");
  fbm_cmd->add_option("file", file)->required();
  fbm_cmd->callback([&] {
    BlockMapDocument b = load_block_map(file);
    std::cout << serialize_document({transducer_from_block_map(b.map), {}, {}});
    if (b.shift && *b.shift != 0)
      std::cout << "# shift " << *b.shift << " not represented here\n";
  });

  auto* sync_cmd =
      app.add_subcommand("sync", "synchronization level of a transducer");
  sync_cmd->add_option("file", file)->required();
  sync_cmd->callback([&] {
    auto level = sync_level(load_document(file).t);
    if (!level) throw Negative{"not strongly synchronizing"};
    std::cout << "strongly synchronizing at level " << *level << "\n";
  });

  auto* core_cmd = app.add_subcommand("core", "forced-state subautomaton");
  core_cmd->add_option("file", file)->required();
  core_cmd->callback([&] {
    std::cout << serialize_document({core(load_document(file).t), {}, {}});
  });

  auto* min_cmd =
      app.add_subcommand("minimize", "minimal form with kappa and extents");
  min_cmd->add_option("file", file)->required();
  min_cmd->callback([&] {
    Document d = load_document(file);
    MinimizeResult r = minimize(d.t);
    std::cout << serialize_document({r.minimal, {}, {}});
    if (r.constant)
      std::cout << "# constant, root " << word_text(r.constant_root) << "\n";
    for (int q = 0; q < d.t.states(); ++q)
      std::cout << "# kappa " << d.t.names[q] << " -> "
                << r.minimal.names[r.kappa[q]] << "\n";
    for (int q = 0; q < d.t.states(); ++q)
      std::cout << "# extent " << d.t.names[q] << " "
                << extent_text(r.state_extents[q]) << "\n";
  });

  auto* prod_cmd = app.add_subcommand("product", "compose two transducers");
  prod_cmd->add_option("first", file)->required();
  prod_cmd->add_option("second", file_b)->required();
  prod_cmd->add_flag("--raw", raw, "plain pair product");
  prod_cmd->add_flag("--spn", spn, "synchronous product, minimized core");
  prod_cmd->add_flag("--m", mprod, "product in the monoid of minimal forms");
  prod_cmd->callback([&] {
    if (raw + spn + mprod != 1)
      throw std::runtime_error("product: pick exactly one of --raw --spn --m");
    Transducer a = load_document(file).t;
    Transducer b = load_document(file_b).t;
    if (raw)
      std::cout << serialize_document({product_raw(a, b), {}, {}});
    else if (spn)
      std::cout << serialize_document({spn_product(a, b), {}, {}});
    else
      print_element(m_product(to_element(a), to_element(b)));
  });

  auto* ann_cmd =
      app.add_subcommand("annotate", "attach an annotation to the minimal form");
  ann_cmd->add_option("file", file)->required();
  ann_cmd->add_flag("--canonical", canon, "anchor the least forcing word at 0");
  ann_cmd->add_flag("--zero-loop", zloop, "anchor the 0-loop state at 0");
  ann_cmd->add_option("--from-extents", from_i, "read the input at level i")
      ->expected(1);
  ann_cmd->callback([&] {
    from_ext = ann_cmd->count("--from-extents") > 0;
    if (canon + zloop + from_ext != 1)
      throw std::runtime_error(
          "annotate: pick exactly one of --canonical --zero-loop "
          "--from-extents");
    Document d = load_document(file);
    Annotated a;
    if (from_ext) {
      a = annotation_from_extents(d.t, from_i);
    } else {
      a.elem = to_element(d.t);
      a.ann = canon ? canonical_annotation(a.elem) : zero_loop_annotation(a.elem);
    }
    if (a.elem.constant || a.ann.infinite) {
      print_element(a.elem);
      std::cout << "# annotation infinite\n";
    } else {
      std::cout << serialize_document({a.elem.t, {}, a.ann.values});
    }
  });

  auto* act_cmd = app.add_subcommand("act", "apply to a periodic point");
  act_cmd->add_option("file", file)->required();
  act_cmd->add_option("--periodic", word_arg, "period word of the point")
      ->required();
  act_cmd->callback([&] {
    Document d = load_document(file);
    Annotated a = annotated_of(d);
    PeriodicPoint y = act_periodic(a, {parse_word(word_arg, d.t.n)});
    std::cout << word_text(y.period) << "\n";
  });

  auto* tbm_cmd =
      app.add_subcommand("to-blockmap", "sliding block code of the action");
  tbm_cmd->add_option("file", file)->required();
  tbm_cmd->callback([&] {
    AlignedBlockMap m = to_block_map(annotated_of(load_document(file)));
    std::cout << serialize_block_map(m.map, m.shift);
  });

  auto* pi_cmd =
      app.add_subcommand("pi", "necklace action on prime cyclic words");
  pi_cmd->add_option("file", file)->required();
  pi_cmd->add_option("--k", k_arg, "largest necklace length")->required();
  pi_cmd->callback([&] {
    MonoidElement e = to_element(load_document(file).t);
    for (int len = 1; len <= k_arg; ++len)
      for (const auto& [g, img] : pi_table(e, len))
        std::cout << word_text(g) << " -> " << word_text(img) << "\n";
  });

  auto* check_cmd = app.add_subcommand("check", "boolean predicates");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_flag("--lipschitz", lip, "bounded stream displacement");
  check_cmd->add_flag("--injective", inj, "every state map injective");
  check_cmd->add_flag("--clopen", clo, "every state image clopen");
  check_cmd->add_option("--pi-bijective", pi_bij,
                        "necklace action bijective up to length K")
      ->expected(1);
  check_cmd->callback([&] {
    bool pib = check_cmd->count("--pi-bijective") > 0;
    if (lip + inj + clo + pib != 1)
      throw std::runtime_error(
          "check: pick exactly one of --lipschitz --injective --clopen "
          "--pi-bijective");
    Document d = load_document(file);
    bool ok;
    if (lip) {
      ok = transducer_lipschitz(d.t);
    } else if (inj) {
      ok = states_injective(d.t);
    } else if (clo) {
      ok = true;
      for (int q = 0; q < d.t.states() && ok; ++q)
        ok = image_basis(d.t, q).clopen;
    } else {
      ok = pi_bijective_upto(to_element(d.t), pi_bij);
    }
    if (!ok) throw Negative{"false"};
    std::cout << "true\n";
  });

  auto* sig_cmd = app.add_subcommand("sig", "image size residue mod n-1");
  sig_cmd->add_option("file", file)->required();
  sig_cmd->callback(
      [&] { std::cout << sig(load_document(file).t) << "\n"; });

  auto* coc_cmd =
      app.add_subcommand("cocycle", "extension cocycle of two elements");
  coc_cmd->add_option("first", file)->required();
  coc_cmd->add_option("second", file_b)->required();
  coc_cmd->callback([&] {
    MonoidElement a = to_element(load_document(file).t);
    MonoidElement b = to_element(load_document(file_b).t);
    std::cout << cocycle_c(a, b) << "\n";
  });

  auto* inv_cmd = app.add_subcommand("invert", "search for an inverse");
  inv_cmd->add_option("file", file)->required();
  inv_cmd->add_option("--dmax", dmax, "largest block map width tried");
  inv_cmd->callback([&] {
    auto inv = invert_automorphism(annotated_of(load_document(file)), dmax);
    if (!inv) throw Negative{"no inverse found within width " +
                             std::to_string(dmax)};
    std::cout << serialize_document({inv->elem.t, {}, inv->ann.values});
  });

  auto* ord_cmd = app.add_subcommand("order", "bounded order search");
  ord_cmd->add_option("file", file)->required();
  ord_cmd->add_option("--bound", bound, "largest power tried")->required();
  ord_cmd->callback([&] {
    auto o = order_bounded(to_element(load_document(file).t), bound);
    if (!o) throw Negative{"no finite order up to " + std::to_string(bound)};
    std::cout << *o << "\n";
  });

  auto* splits_cmd =
      app.add_subcommand("splits", "does the shift extension split at n");
  splits_cmd->add_option("n", split_n)->required();
  splits_cmd->callback([&] {
    if (!splits(split_n)) throw Negative{"false"};
    std::cout << "true\n";
  });

  auto* dot_cmd = app.add_subcommand("dot", "GraphViz export");
  dot_cmd->add_option("file", file)->required();
  dot_cmd->callback([&] { std::cout << dot_export(load_document(file)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Negative& n) {
    std::cout << n.message << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
