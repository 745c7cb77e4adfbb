#include "qsg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qsg/json_io.hpp"
#include "qsg/sampling.hpp"

namespace qsg {

namespace {

// Per-instance sampling bounds, chosen so every suite keeps a nonempty
// safe core at its default window.
struct GenParams {
  long base_bound;          // magnitude of word letters
  std::size_t word_len;     // word length for eq7 / ideal lemmas
  std::size_t prod_word_len;  // word length inside product elements
  long elem_bound;          // magnitude of sampled p, q
  long denom;               // half-line grid denominator
};

GenParams gen_params(const Semigroup& s) {
  switch (s.kind()) {
    case Kind::lattice:
      if (s.rank() >= 2) return {1, 6, 4, 2, 1};
      return {4, 6, 6, 6, 1};
    case Kind::numerical:
      return {4, 6, 6, 6, 1};
    case Kind::half_line:
      return {4, 6, 6, 4, 4};
  }
  return {4, 6, 6, 6, 1};
}

std::string instance_tag(const Semigroup& s) {
  return instance_to_json(s).dump();
}

void record_params(Report& rep, const Semigroup& s, std::uint64_t seed,
                   long window, long samples) {
  rep.params["instance"] = instance_tag(s);
  rep.params["seed"] = std::to_string(seed);
  rep.params["window"] = std::to_string(window);
  rep.params["samples"] = std::to_string(samples);
}

// Pair columns (a,b) whose W_d / T_c intermediates all stay inside the
// window: every such point is bounded coordinatewise by a.b.c, so it is
// enough that a.b.c still lies in the window.
std::vector<std::size_t> pair_core_columns(const Semigroup& s,
                                           const Window& win,
                                           const GroupElem& c) {
  const std::size_t n = win.size();
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < n; ++i) {
    const GroupElem ac = s.multiply(win[i], c);
    for (std::size_t j = 0; j < n; ++j)
      if (win.contains(s.multiply(ac, win[j]))) cols.push_back(i * n + j);
  }
  return cols;
}

}  // namespace

long default_window(const Semigroup& s, const std::string& suite) {
  const bool wide = !(s.kind() == Kind::lattice && s.rank() >= 2);
  if (suite == "eq7" || suite == "products") return wide ? 64 : 12;
  if (suite == "ideals") {
    if (!wide) return 8;
    return s.kind() == Kind::half_line ? 12 : 20;
  }
  if (suite == "wd") {
    if (!wide) return 8;
    return s.kind() == Kind::half_line ? 16 : 32;
  }
  if (suite == "quotient") return 512;
  if (suite == "cros") return 16;
  if (suite == "independence") return 16;
  return 64;
}

CaseResult verify_element_product(const Semigroup& s, const Element& x,
                                  const Element& y, const Window& win,
                                  std::string id) {
  const long radius = element_radius(s, x) + element_radius(s, y);
  const auto core = win.core_indices(radius);
  if (core.empty())
    return {std::move(id), CaseStatus::window_too_small,
            "displacement " + std::to_string(radius) + " fills window"};
  RatMatrix lhs =
      matrix_of_element(s, x, win).multiply(matrix_of_element(s, y, win));
  RatMatrix rhs = matrix_of_element(s, mul(s, x, y), win);
  const bool ok = lhs.equal_on_columns(rhs, core);
  return {std::move(id), ok ? CaseStatus::pass : CaseStatus::fail,
          ok ? "" : "x=" + x.str() + " y=" + y.str()};
}

CaseResult verify_eq7(const Semigroup& s, const Word& w, const Window& win,
                      std::string id) {
  const long radius = word_radius(s, w);
  const auto core = win.core_indices(radius);
  if (core.empty())
    return {std::move(id), CaseStatus::window_too_small,
            "word displacement " + std::to_string(radius) + " fills window"};
  RatMatrix lhs = RatMatrix::identity(win.size());
  for (const Letter& l : w.letters)
    lhs = lhs.multiply(matrix_of_letter(s, l, win));
  RatMatrix rhs = matrix_of_element(s, from_word(s, w), win);
  const bool ok = lhs.equal_on_columns(rhs, core);
  return {std::move(id), ok ? CaseStatus::pass : CaseStatus::fail,
          ok ? "" : "word " + w.str()};
}

RatMatrix build_wd(const Semigroup& s, const GroupElem& d, const Window& win) {
  if (!s.in_semigroup(d)) throw Error("build_wd: d not in S");
  const std::size_t n = win.size();
  RatMatrix w(n * n, n * n);
  for (std::size_t ia = 0; ia < n; ++ia) {
    const GroupElem da = s.multiply(d, s.inverse(win[ia]));
    for (std::size_t ib = 0; ib < n; ++ib) {
      GroupElem t = s.multiply(da, win[ib]);
      if (!s.in_semigroup(t)) continue;
      if (auto it = win.index_of(t))
        w.add(ia * n + ib, ia * n + *it, QQi::one());
    }
  }
  return w;
}

CaseResult verify_wd_isometry(const Semigroup& s, const GroupElem& d,
                              const Window& win, std::string id) {
  const std::size_t n = win.size();
  const long rd = elem_radius(s, d);
  if (win.core_indices(rd).empty())
    return {std::move(id), CaseStatus::window_too_small, "d too large"};
  const RatMatrix w = build_wd(s, d, win);
  const RatMatrix ww = w.multiply(w.adjoint());
  const RatMatrix wsw = w.adjoint().multiply(w);
  const GroupElem dinv = s.inverse(d);

  for (std::size_t ia = 0; ia < n; ++ia) {
    for (std::size_t ib = 0; ib < n; ++ib) {
      const std::size_t r = ia * n + ib;
      // W W* = I_d on rows whose second leg keeps d a^{-1} b inside the
      // window whenever it lies in S.
      if (win.in_core(win[ib], rd)) {
        const GroupElem t =
            s.multiply(s.multiply(d, s.inverse(win[ia])), win[ib]);
        const QQi want = s.in_semigroup(t) ? QQi::one() : QQi::zero();
        if (ww.get(r, r) != want)
          return {std::move(id), CaseStatus::fail,
                  "WW* diagonal mismatch at (" + win[ia].str() + "," +
                      win[ib].str() + ")"};
        for (const auto& [j, v] : ww.row(r))
          if (j != r)
            return {std::move(id), CaseStatus::fail, "WW* not diagonal"};
      }
      // W* W = I'_d on rows with a+b still inside the window.
      if (win.contains(s.multiply(win[ia], win[ib]))) {
        const GroupElem t =
            s.multiply(s.multiply(win[ia], dinv), win[ib]);
        const QQi want = s.in_semigroup(t) ? QQi::one() : QQi::zero();
        if (wsw.get(r, r) != want)
          return {std::move(id), CaseStatus::fail,
                  "W*W diagonal mismatch at (" + win[ia].str() + "," +
                      win[ib].str() + ")"};
        for (const auto& [j, v] : wsw.row(r))
          if (j != r)
            return {std::move(id), CaseStatus::fail, "W*W not diagonal"};
      }
    }
  }
  return {std::move(id), CaseStatus::pass, ""};
}

CaseResult verify_intertwining(const Semigroup& s, const GroupElem& c,
                               const GroupElem& d, const Window& win,
                               std::string id) {
  const auto cols = pair_core_columns(s, win, c);
  if (cols.empty())
    return {std::move(id), CaseStatus::window_too_small,
            "c,d displacement fills window"};
  const std::size_t n = win.size();
  const RatMatrix w = build_wd(s, d, win);
  const RatMatrix eye = RatMatrix::identity(n);
  const RatMatrix tc = matrix_of_letter(s, Letter{c, +1}, win);
  const RatMatrix tcs = matrix_of_letter(s, Letter{c, -1}, win);

  // I'_d, the initial-space projection of the partial isometry W_d.
  const GroupElem dinv = s.inverse(d);
  RatMatrix iprime(n * n, n * n);
  for (std::size_t ia = 0; ia < n; ++ia) {
    const GroupElem adi = s.multiply(win[ia], dinv);
    for (std::size_t ib = 0; ib < n; ++ib)
      if (s.in_semigroup(s.multiply(adi, win[ib])))
        iprime.add(ia * n + ib, ia * n + ib, QQi::one());
  }

  // Delta(T_c) W_d agrees with W_d (T_c x 1) on the initial space of W_d
  // and kills its complement; T_c x T_c reads the zero extension off
  // S x S, so the bare right-hand side overshoots there.
  const RatMatrix lhs = tc.kron(tc).multiply(w);
  const RatMatrix rhs = w.multiply(tc.kron(eye)).multiply(iprime);
  if (!lhs.equal_on_columns(rhs, cols))
    return {std::move(id), CaseStatus::fail,
            "Delta(T_c)W_d != W_d(T_c x 1)I'_d for c=" + c.str() +
                " d=" + d.str()};

  // the starred generator intertwines strictly
  const RatMatrix lhs2 = tcs.kron(tcs).multiply(w);
  const RatMatrix rhs2 = w.multiply(tcs.kron(eye));
  if (!lhs2.equal_on_columns(rhs2, cols))
    return {std::move(id), CaseStatus::fail,
            "Delta(T_c*)W_d != W_d(T_c* x 1) for c=" + c.str() +
                " d=" + d.str()};
  return {std::move(id), CaseStatus::pass, ""};
}

CaseResult verify_wd_range(const Semigroup& s, const GroupElem& c,
                           const GroupElem& d, const Window& win,
                           std::string id) {
  const auto cols = pair_core_columns(s, win, c);
  if (cols.empty())
    return {std::move(id), CaseStatus::window_too_small,
            "c,d displacement fills window"};
  const RatMatrix w = build_wd(s, d, win);
  const RatMatrix tc = matrix_of_letter(s, Letter{c, +1}, win);
  const RatMatrix img = tc.kron(tc).multiply(w);
  const RatMatrix proj = w.multiply(w.adjoint());
  const bool ok = proj.multiply(img).equal_on_columns(img, cols);
  return {std::move(id), ok ? CaseStatus::pass : CaseStatus::fail,
          ok ? "" : "range of W_d not invariant, c=" + c.str() +
                        " d=" + d.str()};
}

GroupElem find_d_for_finite_set(
    const Semigroup& s,
    const std::vector<std::pair<GroupElem, GroupElem>>& k) {
  GroupElem d = s.identity();
  for (const auto& [a, b] : k) {
    if (!s.in_semigroup(a) || !s.in_semigroup(b))
      throw Error("find_d: K must lie in S x S");
    d = s.upper_bound(d, a);
  }
  for (const auto& [a, b] : k)
    if (!s.in_semigroup(s.multiply(s.multiply(d, s.inverse(a)), b)))
      throw Error("find_d: verification failed");
  return d;
}

QuotientNormCase quotient_norm_check(const Semigroup& s, const Element& x,
                                     long window_n, long grid, std::string id,
                                     double tol) {
  const bool zed = (s.kind() == Kind::lattice && s.rank() == 1) ||
                   s.kind() == Kind::numerical;
  if (!zed) throw Error("quotient norm check requires G = Z");

  QuotientNormCase out;
  out.sigma = symbol_sup_norm(s, quotient_to_group_algebra(s, x), grid);
  Window win(s, window_n);
  out.nu = operator_norm(float_matrix_of_element(s, x, win));

  std::ostringstream w;
  w << "sigma=" << out.sigma << " nu=" << out.nu
    << " gap=" << out.nu - out.sigma;
  // sigma is a grid lower bound of the symbol norm and nu converges to it
  // from below; tol covers the truncation residue at window_n.
  const bool ok = out.sigma <= out.nu * (1.0 + tol);
  out.result = {std::move(id), ok ? CaseStatus::pass : CaseStatus::fail,
                w.str()};
  return out;
}

Report run_ideal_lemmas_suite(const Semigroup& s, const SuiteConfig& cfg) {
  const GenParams p = gen_params(s);
  const long w0 = cfg.window ? cfg.window : default_window(s, "ideals");
  const long samples = cfg.samples ? cfg.samples : 1000;
  Window win(s, w0, p.denom);
  Sampler smp(cfg.seed);
  Report rep;
  rep.suite = "ideals";
  record_params(rep, s, cfg.seed, w0, samples);

  const GIdeal full = full_ideal(s);
  for (long i = 0; i < samples; ++i) {
    const std::string tag = "#" + std::to_string(i);
    Word w1 = smp.word(s, p.word_len, p.base_bound, p.denom);
    Word w2 = smp.word(s, p.word_len, p.base_bound, p.denom);
    const GIdeal i1 = act(s, w1, full);
    const GIdeal i2 = act(s, w2, full);
    const GIdeal i12 = act(s, concat(w1, w2), full);
    const std::string ws = "w1=[" + w1.str() + "] w2=[" + w2.str() + "]";

    rep.add("s1" + tag, is_subset(s, i12, i1), ws);
    rep.add("s2" + tag, i1 == act(s, concat(w1, word_inverse(w1)), full), ws);
    rep.add("s3" + tag,
            i12 == intersect(s, i1, g_act(s, evaluate(s, w1), i2)), ws);
    // vS ∩ wS = w w^{-1} v S with v = w1, w = w2
    rep.add("s4" + tag,
            intersect(s, i1, i2) ==
                act(s, concat(w2, concat(word_inverse(w2), w1)), full),
            ws);
    rep.add("act_vs_brute" + tag,
            brute_force_ideal(s, w1, win) == ideal_slice(s, i1, win), ws);
  }
  return rep;
}

Report run_eq7_suite(const Semigroup& s, const SuiteConfig& cfg) {
  const GenParams p = gen_params(s);
  const long w0 = cfg.window ? cfg.window : default_window(s, "eq7");
  const long samples = cfg.samples ? cfg.samples : 500;
  Window win(s, w0, p.denom);
  Sampler smp(cfg.seed);
  Report rep;
  rep.suite = "eq7";
  record_params(rep, s, cfg.seed, w0, samples);
  for (long i = 0; i < samples; ++i) {
    Word w = smp.word(s, p.word_len, p.base_bound, p.denom);
    rep.cases.push_back(verify_eq7(s, w, win, "eq7#" + std::to_string(i)));
  }
  return rep;
}

Report run_products_suite(const Semigroup& s, const SuiteConfig& cfg) {
  const GenParams p = gen_params(s);
  const long w0 = cfg.window ? cfg.window : default_window(s, "products");
  const long samples = cfg.samples ? cfg.samples : 500;
  Window win(s, w0, p.denom);
  Sampler smp(cfg.seed);
  Report rep;
  rep.suite = "products";
  record_params(rep, s, cfg.seed, w0, samples);
  for (long i = 0; i < samples; ++i) {
    Element x = smp.element(s, 5, p.prod_word_len, p.base_bound, p.denom);
    Element y = smp.element(s, 5, p.prod_word_len, p.base_bound, p.denom);
    rep.cases.push_back(verify_element_product(
        s, x, y, win, "product#" + std::to_string(i)));
  }
  return rep;
}

Report run_relations_suite(const Semigroup& s, const SuiteConfig& cfg) {
  const GenParams p = gen_params(s);
  const long samples = cfg.samples ? cfg.samples : 500;
  Sampler smp(cfg.seed);
  std::vector<RelationSample> data;
  data.reserve(static_cast<std::size_t>(samples));
  for (long i = 0; i < samples; ++i)
    data.push_back(RelationSample{
        smp.elem_in_s(s, p.elem_bound, p.denom),
        smp.elem_in_s(s, p.elem_bound, p.denom),
        smp.ideal(s, 4, p.base_bound, p.denom),
        smp.ideal(s, 4, p.base_bound, p.denom)});
  Report rep = check_universal_relations(s, data);
  record_params(rep, s, cfg.seed, 0, samples);
  return rep;
}

Report run_wd_suite(const Semigroup& s, const SuiteConfig& cfg) {
  const long w0 = cfg.window ? cfg.window : default_window(s, "wd");
  const long samples = cfg.samples ? cfg.samples : 100;
  const long denom = s.kind() == Kind::half_line ? 2 : 1;
  const long bound = (s.kind() == Kind::lattice && s.rank() >= 2) ? 1
                     : s.kind() == Kind::half_line               ? 2
                                                                 : 5;
  Window win(s, w0, denom);
  Sampler smp(cfg.seed);
  Report rep;
  rep.suite = "wd";
  record_params(rep, s, cfg.seed, w0, samples);
  for (long i = 0; i < samples; ++i) {
    const std::string tag = "#" + std::to_string(i);
    GroupElem c = smp.elem_in_s(s, bound, denom);
    GroupElem d = smp.elem_in_s(s, bound, denom);
    rep.cases.push_back(verify_wd_isometry(s, d, win, "wd_isometry" + tag));
    rep.cases.push_back(
        verify_intertwining(s, c, d, win, "intertwining" + tag));
    rep.cases.push_back(verify_wd_range(s, c, d, win, "wd_range" + tag));

    std::vector<std::pair<GroupElem, GroupElem>> k;
    const long pairs = smp.uniform(1, 4);
    for (long j = 0; j < pairs; ++j)
      k.emplace_back(smp.elem_in_s(s, 8, denom), smp.elem_in_s(s, 8, denom));
    bool ok = true;
    std::string witness;
    try {
      GroupElem d2 = find_d_for_finite_set(s, k);
      for (const auto& [a, b] : k)
        ok = ok &&
             s.in_semigroup(s.multiply(s.multiply(d2, s.inverse(a)), b));
    } catch (const Error& e) {
      ok = false;
      witness = e.what();
    }
    rep.add("find_d" + tag, ok, witness);
  }
  return rep;
}

Report run_quotient_suite(const Semigroup& s, const SuiteConfig& cfg) {
  const long samples = cfg.samples ? cfg.samples : 20;
  const long grid = cfg.symbol_grid;
  std::vector<long> ladder;
  if (cfg.window)
    ladder = {cfg.window};
  else
    ladder = {64, 128, 256, 512};

  Sampler smp(cfg.seed);
  Report rep;
  rep.suite = "quotient";
  record_params(rep, s, cfg.seed, ladder.back(), samples);
  rep.params["grid"] = std::to_string(grid);

  for (long i = 0; i < samples; ++i) {
    const std::string tag = "poly#" + std::to_string(i);
    // four distinct translations with ideals g_k S
    std::vector<long> gs;
    while (gs.size() < 4) {
      long g = smp.uniform(-4, 4);
      if (std::find(gs.begin(), gs.end(), g) == gs.end()) gs.push_back(g);
    }
    Element x;
    for (long g : gs) {
      GroupElem ge = s.elem(g);
      x = add(x, scale(smp.nonzero_coeff(),
                       from_word(s, word_of_group_elem(s, ge))));
    }

    double sigma = 0.0;
    std::vector<double> nus;
    for (long n : ladder) {
      // wider headroom below the final window, 5% at the final one
      const double tol = n < ladder.back() ? 0.10 : 0.05;
      auto qc = quotient_norm_check(s, x, n, grid,
                                    tag + "/N=" + std::to_string(n), tol);
      sigma = qc.sigma;
      nus.push_back(qc.nu);
      rep.cases.push_back(qc.result);
    }
    if (ladder.size() > 1) {
      bool monotone = true;
      for (std::size_t j = 1; j < nus.size(); ++j)
        if (nus[j] + 1e-3 * std::max(1.0, sigma) < nus[j - 1])
          monotone = false;
      std::ostringstream w;
      w << "nu=[";
      for (double nu : nus) w << nu << " ";
      w << "] sigma=" << sigma;
      rep.add(tag + "/gap_monotone", monotone, w.str());
      const double nu_last = nus.back();
      rep.add(tag + "/final_gap",
              sigma > 0 && std::abs(nu_last - sigma) / sigma <= 0.05,
              w.str());
    }
  }

  for (long i = 0; i < samples; ++i) {
    const std::string tag = "kernel#" + std::to_string(i);
    GroupElem g = s.elem(smp.uniform(-3, 3));
    GIdeal base = act(s, word_of_group_elem(s, g), full_ideal(s));
    GroupElem t;
    do {
      t = smp.elem_in_s(s, 4);
    } while (t == s.identity());
    GIdeal smaller = translate_fwd(s, t, base);
    Element x = sub(Element::monomial(s, smaller, g),
                    Element::monomial(s, base, g));

    const bool qzero = quotient_to_group_algebra(s, x).is_zero();
    const double sigma =
        symbol_sup_norm(s, quotient_to_group_algebra(s, x), grid);
    Window win(s, ladder.back());
    const double nu = operator_norm(float_matrix_of_element(s, x, win));
    std::ostringstream w;
    w << "sigma=" << sigma << " nu=" << nu;
    rep.add(tag, qzero && sigma == 0.0 && nu >= 0.5, w.str());
  }
  return rep;
}

Report verify_cros_unitary(long grid_m, long samples, std::uint64_t seed) {
  if (grid_m < 2) throw Error("cros grid must have at least 2 points");
  const std::size_t m = static_cast<std::size_t>(grid_m);
  const std::size_t n2 = m * m;
  Sampler smp(seed);
  Report rep;
  rep.suite = "cros";
  rep.params["grid"] = std::to_string(grid_m);
  rep.params["seed"] = std::to_string(seed);
  rep.params["samples"] = std::to_string(samples);

  auto idx = [m](std::size_t a, std::size_t b) { return a * m + b; };

  // W xi(x,y) = xi(x, x+y): column (a,b) maps to row (a, b-a mod M).
  RatMatrix w(n2, n2);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      w.add(idx(a, (b + m - a) % m), idx(a, b), QQi::one());

  bool perm = true;
  std::vector<int> col_hits(n2, 0);
  for (std::size_t r = 0; r < n2; ++r) {
    if (w.row(r).size() != 1) perm = false;
    for (const auto& [j, v] : w.row(r)) {
      ++col_hits[j];
      if (!(v == QQi::one())) perm = false;
    }
  }
  for (int h : col_hits) perm = perm && h == 1;
  rep.add("permutation", perm, "W is not a permutation of the grid");

  auto shift_matrix = [&](long g) {
    RatMatrix l(m, m);
    for (std::size_t a = 0; a < m; ++a)
      l.add((a + static_cast<std::size_t>(g)) % m, a, QQi::one());
    return l;
  };

  const RatMatrix eye = RatMatrix::identity(m);
  const RatMatrix wadj = w.adjoint();
  for (long k = 0; k < samples; ++k) {
    const std::string tag = "#" + std::to_string(k);
    const long g = smp.uniform(0, grid_m - 1);
    RatMatrix lg = shift_matrix(g);
    RatMatrix lhs = w.multiply(lg.kron(lg)).multiply(wadj);
    RatMatrix rhs = lg.kron(eye);
    rep.add("conjugation" + tag, lhs == rhs, "g=" + std::to_string(g));

    // diagonal indicator of a random first-leg subset
    RatMatrix diag(n2, n2);
    for (std::size_t a = 0; a < m; ++a) {
      if (!smp.chance(0.5)) continue;
      for (std::size_t b = 0; b < m; ++b)
        diag.add(idx(a, b), idx(a, b), QQi::one());
    }
    rep.add("diag_invariance" + tag,
            w.multiply(diag).multiply(wadj) == diag, "indicator diagonal");
  }
  return rep;
}

Report run_cros_suite(const Semigroup& s, const SuiteConfig& cfg) {
  (void)s;  // the surrogate grid is instance independent
  const long grid_m = cfg.window ? cfg.window : default_window(s, "cros");
  const long samples = cfg.samples ? cfg.samples : 8;
  Report rep = verify_cros_unitary(grid_m, samples, cfg.seed);
  rep.params["instance"] = instance_tag(s);
  return rep;
}

Report run_independence_suite(const Semigroup& s, const SuiteConfig& cfg) {
  const GenParams p = gen_params(s);
  const long w0 = cfg.window ? cfg.window : default_window(s, "independence");
  const long samples = cfg.samples ? cfg.samples : 10000;
  Window win(s, w0, p.denom);
  Sampler smp(cfg.seed);
  Report rep;
  rep.suite = "independence";
  record_params(rep, s, cfg.seed, w0, samples);

  long violations = 0;
  for (long i = 0; i < samples; ++i) {
    GIdeal x = smp.ideal(s, 4, p.base_bound, p.denom);
    std::vector<GIdeal> family;
    const long members = smp.uniform(1, 4);
    for (long j = 0; j < members; ++j) {
      GIdeal y = smp.ideal(s, 4, p.base_bound, p.denom);
      if (smp.chance(0.3))
        y = intersect(s, y, smp.ideal(s, 4, p.base_bound, p.denom));
      family.push_back(std::move(y));
    }
    if (!independence_check(s, x, family, win)) {
      ++violations;
      rep.add_fail("violation#" + std::to_string(i), "X=" + x.str());
    }
  }
  rep.add("no_violation", violations == 0,
          std::to_string(violations) + " violations in " +
              std::to_string(samples) + " families");
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "eq7",      "products", "relations",   "wd",
      "quotient", "cros",     "ideals",      "independence"};
  return names;
}

Report run_suite(const Semigroup& s, const std::string& name,
                 const SuiteConfig& cfg) {
  if (name == "eq7") return run_eq7_suite(s, cfg);
  if (name == "products") return run_products_suite(s, cfg);
  if (name == "relations") return run_relations_suite(s, cfg);
  if (name == "wd") return run_wd_suite(s, cfg);
  if (name == "quotient") return run_quotient_suite(s, cfg);
  if (name == "cros") return run_cros_suite(s, cfg);
  if (name == "ideals") return run_ideal_lemmas_suite(s, cfg);
  if (name == "independence") return run_independence_suite(s, cfg);
  throw Error("unknown suite '" + name + "'");
}

}  // namespace qsg
