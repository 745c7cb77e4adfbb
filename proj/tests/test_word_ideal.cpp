#include <doctest.h>

#include "qsg/ideal.hpp"
#include "qsg/sampling.hpp"

using namespace qsg;

namespace {

const Semigroup& zplus() {
  static Semigroup s = Semigroup::lattice(1);
  return s;
}
const Semigroup& lat2() {
  static Semigroup s = Semigroup::lattice(2);
  return s;
}
const Semigroup& num23() {
  static Semigroup s = Semigroup::numerical({Int(2), Int(3)});
  return s;
}
const Semigroup& half() {
  static Semigroup s = Semigroup::half_line();
  return s;
}

Word w_of(const Semigroup& s, const std::string& text) {
  return parse_word(s, text);
}

GIdeal num_ideal(const Semigroup& s, long offset, const std::string& bits) {
  std::vector<bool> mask;
  for (char c : bits) mask.push_back(c == '1');
  return GIdeal::numerical_set(s, Int(offset), std::move(mask));
}

std::vector<const Semigroup*> all_instances() {
  return {&zplus(), &lat2(), &num23(), &half()};
}

}  // namespace

TEST_CASE("concat is free: no cancellation") {
  const Semigroup& s = zplus();
  Word w = w_of(s, "2 3^-1");
  CHECK(concat(Word{}, w) == w);
  Word aa = concat(w_of(s, "2^-1"), w_of(s, "2"));
  CHECK(aa.size() == 2);
  CHECK(concat(w_of(s, "2"), w_of(s, "3^-1")) == w);
}

TEST_CASE("word_inverse reverses and flips") {
  const Semigroup& s = zplus();
  Word w = w_of(s, "3^-1 5");
  Word wi = word_inverse(w);
  CHECK(wi == w_of(s, "5^-1 3"));
  CHECK(word_inverse(Word{}) == Word{});
  CHECK(word_inverse(word_inverse(w)) == w);
}

TEST_CASE("evaluate is a homomorphism to G") {
  const Semigroup& s = zplus();
  CHECK(evaluate(s, w_of(s, "3^-1 5")) == s.elem(2));
  CHECK(evaluate(s, Word{}) == s.identity());
  CHECK(evaluate(s, w_of(s, "4 4^-1")) == s.identity());
  for (const Semigroup* sp : all_instances()) {
    Sampler smp(3);
    for (int i = 0; i < 200; ++i) {
      Word w1 = smp.word(*sp, 5, 4);
      Word w2 = smp.word(*sp, 5, 4);
      CHECK(evaluate(*sp, concat(w1, w2)) ==
            sp->multiply(evaluate(*sp, w1), evaluate(*sp, w2)));
      CHECK(evaluate(*sp, word_inverse(w1)) ==
            sp->inverse(evaluate(*sp, w1)));
    }
  }
}

TEST_CASE("word_of_group_elem evaluates back and drops unit p") {
  const Semigroup& z = zplus();
  CHECK(word_of_group_elem(z, z.elem(-3)) == w_of(z, "3^-1 0"));
  CHECK(word_of_group_elem(z, z.elem(2)) == w_of(z, "2"));
  const Semigroup& n = num23();
  CHECK(word_of_group_elem(n, n.elem(1)) == w_of(n, "2^-1 3"));
  for (const Semigroup* sp : all_instances()) {
    Sampler smp(5);
    for (int i = 0; i < 200; ++i) {
      GroupElem g = smp.group_elem(*sp, 12);
      CHECK(evaluate(*sp, word_of_group_elem(*sp, g)) == g);
    }
  }
}

TEST_CASE("full and empty ideals") {
  CHECK(full_ideal(half()) == GIdeal::half_line_from(Rat(0)));
  CHECK(full_ideal(lat2()) == GIdeal::lattice_based({Int(0), Int(0)}));
  CHECK(empty_ideal(zplus()).is_empty());
  GIdeal x = GIdeal::lattice_based({Int(2)});
  CHECK(is_subset(zplus(), empty_ideal(zplus()), x));
  CHECK(member(zplus(), zplus().elem(2), x));
  CHECK_FALSE(member(zplus(), zplus().elem(1), x));
}

TEST_CASE("translations on canonical ideals") {
  const Semigroup& z = zplus();
  GIdeal two = GIdeal::lattice_based({Int(2)});
  CHECK(translate_fwd(z, z.elem(3), two) == GIdeal::lattice_based({Int(5)}));
  CHECK(translate_back(z, z.elem(3), GIdeal::lattice_based({Int(5)})) == two);
  CHECK(translate_back(z, z.elem(3), GIdeal::lattice_based({Int(1)})) ==
        full_ideal(z));
  CHECK(translate_fwd(z, z.elem(3), empty_ideal(z)).is_empty());

  const Semigroup& n = num23();
  // 2 + S = {2,4,5,...}
  CHECK(translate_fwd(n, n.elem(2), full_ideal(n)) == num_ideal(n, 2, "10"));
  // 2^-1 (3+S) = {3,4,5,...}
  CHECK(translate_back(n, n.elem(2),
                       translate_fwd(n, n.elem(3), full_ideal(n))) ==
        num_ideal(n, 3, "11"));
}

TEST_CASE("g_translate does not clamp to S") {
  const Semigroup& z = zplus();
  GIdeal x = g_translate(z, z.elem(-3), GIdeal::lattice_based({Int(1)}));
  CHECK(x == GIdeal::lattice_based({Int(-2)}));
  CHECK_FALSE(contained_in_s(z, x));
  CHECK(g_translate(z, z.identity(), x) == x);

  const Semigroup& n = num23();
  GIdeal y = g_translate(n, n.elem(-2),
                         translate_fwd(n, n.elem(3), full_ideal(n)));
  CHECK(y == num_ideal(n, 1, "10"));
  CHECK(restrict_to_s(n, y) == num_ideal(n, 3, "11"));
}

TEST_CASE("intersect matches brute-force set intersection") {
  const Semigroup& l = lat2();
  GIdeal a = GIdeal::lattice_based({Int(1), Int(0)});
  GIdeal b = GIdeal::lattice_based({Int(0), Int(1)});
  GIdeal meet = intersect(l, a, b);
  CHECK(meet == GIdeal::lattice_based({Int(1), Int(1)}));
  Window win(l, 8);
  for (const GroupElem& g : win.elements())
    CHECK(member(l, g, meet) == (member(l, g, a) && member(l, g, b)));

  const Semigroup& h = half();
  CHECK(intersect(h, GIdeal::half_line_from(Rat(2)),
                  GIdeal::half_line_from(Rat(7, 2))) ==
        GIdeal::half_line_from(Rat(7, 2)));

  for (const Semigroup* sp : all_instances()) {
    Sampler smp(9);
    for (int i = 0; i < 200; ++i) {
      GIdeal x = smp.ideal(*sp, 4, 3);
      CHECK(intersect(*sp, x, full_ideal(*sp)) == x);
      CHECK(intersect(*sp, x, empty_ideal(*sp)).is_empty());
    }
  }
}

TEST_CASE("p^-1 p X = X") {
  for (const Semigroup* sp : all_instances()) {
    Sampler smp(13);
    for (int i = 0; i < 300; ++i) {
      GIdeal x = smp.ideal(*sp, 4, 3);
      GroupElem p = smp.elem_in_s(*sp, 5);
      CHECK(translate_back(*sp, p, translate_fwd(*sp, p, x)) == x);
    }
  }
}

TEST_CASE("numerical ideals stay closed under adding S") {
  const Semigroup& n = num23();
  Sampler smp(17);
  for (int i = 0; i < 300; ++i) {
    GIdeal x = smp.ideal(n, 5, 4);
    if (x.is_empty()) continue;
    for (const Int& a : n.generators()) {
      GIdeal shifted = translate_fwd(n, GroupElem(a), x);
      CHECK(is_subset(n, shifted, x));
    }
  }
}

TEST_CASE("act: spec examples") {
  const Semigroup& z = zplus();
  CHECK(act(z, w_of(z, "3^-1 5"), full_ideal(z)) ==
        GIdeal::lattice_based({Int(2)}));
  GIdeal x = GIdeal::lattice_based({Int(4)});
  CHECK(act(z, Word{}, x) == x);
  const Semigroup& n = num23();
  CHECK(act(n, w_of(n, "2^-1 3"), full_ideal(n)) == num_ideal(n, 3, "11"));
}

TEST_CASE("act agrees with the chain-condition oracle") {
  struct Setup {
    const Semigroup* s;
    long window;
    long base;
  };
  for (const Setup& cfg : {Setup{&zplus(), 20, 4}, Setup{&lat2(), 8, 1},
                           Setup{&num23(), 20, 4}, Setup{&half(), 12, 4}}) {
    const Semigroup& s = *cfg.s;
    Window win(s, cfg.window, s.kind() == Kind::half_line ? 4 : 1);
    Sampler smp(19);
    for (int i = 0; i < 1000; ++i) {
      Word w = smp.word(s, 6, cfg.base);
      CHECK(brute_force_ideal(s, w, win) ==
            ideal_slice(s, act(s, w, full_ideal(s)), win));
    }
  }
}

TEST_CASE("brute force oracle: frozen examples") {
  const Semigroup& z = zplus();
  Window win(z, 20);
  auto set = brute_force_ideal(z, w_of(z, "3^-1 5"), win);
  REQUIRE(set.size() == 19);  // {2..20}
  CHECK(set.front() == z.elem(2));
  CHECK(set.back() == z.elem(20));

  auto all = brute_force_ideal(z, Word{}, win);
  CHECK(all.size() == 21);

  const Semigroup& n = num23();
  Window nwin(n, 20);
  auto nset = brute_force_ideal(n, w_of(n, "2^-1 3"), nwin);
  REQUIRE(nset.size() == 18);  // {3..20}
  CHECK(nset.front() == n.elem(3));
}

TEST_CASE("lemma s1/s2/s3/s4 hold exactly") {
  for (const Semigroup* sp : all_instances()) {
    const Semigroup& s = *sp;
    const long base = s.kind() == Kind::lattice && s.rank() >= 2 ? 1 : 4;
    Sampler smp(23);
    const GIdeal full = full_ideal(s);
    for (int i = 0; i < 500; ++i) {
      Word w1 = smp.word(s, 6, base);
      Word w2 = smp.word(s, 6, base);
      GIdeal i1 = act(s, w1, full);
      GIdeal i2 = act(s, w2, full);
      GIdeal i12 = act(s, concat(w1, w2), full);

      CHECK(is_subset(s, i12, i1));  // w1 w2 S inside w1 S
      CHECK(i1 == act(s, concat(w1, word_inverse(w1)), full));
      CHECK(i12 == intersect(s, i1, g_act(s, evaluate(s, w1), i2)));
      CHECK(intersect(s, i1, i2) ==
            act(s, concat(w2, concat(word_inverse(w2), w1)), full));
    }
  }
}

TEST_CASE("the action of g is independent of the chosen fraction") {
  for (const Semigroup* sp : all_instances()) {
    const Semigroup& s = *sp;
    Sampler smp(29);
    for (int i = 0; i < 400; ++i) {
      GroupElem g = smp.group_elem(s, 8);
      GIdeal x = smp.ideal(s, 4, 3);
      auto [p, q] = s.canonical_fraction(g);
      // alternative fraction (p s0)^-1 (q s0)
      GroupElem s0 = smp.elem_in_s(s, 6);
      Word alt = make_word(
          s, {Letter{s.multiply(p, s0), -1}, Letter{s.multiply(q, s0), +1}});
      CHECK(act(s, alt, x) == act(s, word_of_group_elem(s, g), x));
      CHECK(act(s, word_of_group_elem(s, g), x) == g_act(s, g, x));
    }
  }
}

TEST_CASE("canonical equality is sound for window slices") {
  for (const Semigroup* sp : all_instances()) {
    const Semigroup& s = *sp;
    const Int denom = s.kind() == Kind::half_line ? 4 : 1;
    Window win(s, 16, denom);
    // large enough to separate any two canonical forms sampled below
    Window big(s, 40, denom);
    Sampler smp(31);
    for (int i = 0; i < 300; ++i) {
      GIdeal x = smp.ideal(s, 4, 3);
      GIdeal y = smp.ideal(s, 4, 3);
      if (x == y) {
        CHECK(ideal_slice(s, x, win) == ideal_slice(s, y, win));
      } else {
        CHECK(ideal_slice(s, x, big) != ideal_slice(s, y, big));
      }
    }
  }
}

TEST_CASE("independence falsifier") {
  const Semigroup& z = zplus();
  Window win(z, 16);
  GIdeal x1 = GIdeal::lattice_based({Int(1)});
  GIdeal x3 = GIdeal::lattice_based({Int(3)});
  CHECK(independence_check(z, x1, {x1, x3}, win));  // X equals a member

  const Semigroup& l = lat2();
  Window lwin(l, 8);
  GIdeal s_full = full_ideal(l);
  GIdeal a = GIdeal::lattice_based({Int(1), Int(0)});
  GIdeal b = GIdeal::lattice_based({Int(0), Int(1)});
  CHECK(independence_check(l, s_full, {a, b}, lwin));  // (0,0) uncovered

  // a genuine violation is reported: X covered by {X} trivially is fine,
  // but a synthetic proper cover must be flagged on the half-line
  const Semigroup& h = half();
  Window hwin(h, 8, 2);
  GIdeal t0 = GIdeal::half_line_from(Rat(1));
  GIdeal t1 = GIdeal::half_line_from(Rat(1));
  CHECK(independence_check(h, t0, {t1}, hwin));  // equal member, no violation

  // instances where the independence assumption holds: never a violation
  for (const Semigroup* sp : {&zplus(), &lat2(), &half()}) {
    Sampler smp(37);
    Window w(*sp, 12, sp->kind() == Kind::half_line ? 4 : 1);
    for (int i = 0; i < 500; ++i) {
      GIdeal x = smp.ideal(*sp, 4, 2);
      std::vector<GIdeal> fam;
      for (long j = smp.uniform(1, 4); j > 0; --j)
        fam.push_back(smp.ideal(*sp, 4, 2));
      CHECK(independence_check(*sp, x, fam, w));
    }
  }
}

TEST_CASE("independence genuinely fails on <2,3> and the falsifier sees it") {
  // [3,inf) = (3+S) u [4,inf) with both members proper constructible ideals
  const Semigroup& n = num23();
  GIdeal x = act(n, w_of(n, "2^-1 3"), full_ideal(n));
  GIdeal y1 = translate_fwd(n, n.elem(3), full_ideal(n));
  GIdeal y2 = act(n, w_of(n, "2^-1 3 2^-1 3"), full_ideal(n));
  CHECK(y1 != x);
  CHECK(y2 != x);
  CHECK(is_subset(n, y1, x));
  CHECK(is_subset(n, y2, x));
  Window win(n, 24);
  for (const GroupElem& g : win.elements())
    CHECK(member(n, g, x) == (member(n, g, y1) || member(n, g, y2)));
  CHECK_FALSE(independence_check(n, x, {y1, y2}, win));
}

TEST_CASE("numerical <1> has conductor 0 and empty masks") {
  Semigroup n1 = Semigroup::numerical({Int(1)});
  CHECK(n1.conductor() == 0);
  CHECK(n1.in_semigroup(n1.elem(0)));
  CHECK_FALSE(n1.in_semigroup(n1.elem(-1)));
  GIdeal x = act(n1, parse_word(n1, "3^-1 5"), full_ideal(n1));
  CHECK(x.offset() == 2);
  CHECK(x.mask().empty());
  Window win(n1, 20);
  CHECK(brute_force_ideal(n1, parse_word(n1, "3^-1 5"), win) ==
        ideal_slice(n1, x, win));
  Sampler smp(47);
  for (int i = 0; i < 200; ++i) {
    Word w = smp.word(n1, 6, 4);
    CHECK(brute_force_ideal(n1, w, win) ==
          ideal_slice(n1, act(n1, w, full_ideal(n1)), win));
  }
}

TEST_CASE("restrict_to_s certifies containment") {
  for (const Semigroup* sp : all_instances()) {
    Sampler smp(41);
    for (int i = 0; i < 200; ++i) {
      GIdeal x = smp.ideal(*sp, 4, 3);
      GroupElem g = smp.group_elem(*sp, 6);
      GIdeal moved = g_translate(*sp, g, x);
      GIdeal back = restrict_to_s(*sp, moved);
      CHECK(contained_in_s(*sp, back));
      CHECK(is_subset(*sp, back, moved));
    }
  }
}

TEST_CASE("adjoint/word consistency: w^-1 S = (w)_G^-1 . wS restricted") {
  for (const Semigroup* sp : all_instances()) {
    const Semigroup& s = *sp;
    Sampler smp(43);
    for (int i = 0; i < 400; ++i) {
      Word w = smp.word(s, 6, 3);
      GIdeal ws = act(s, w, full_ideal(s));
      GIdeal lhs = act(s, word_inverse(w), full_ideal(s));
      GIdeal rhs = restrict_to_s(
          s, g_translate(s, s.inverse(evaluate(s, w)), ws));
      CHECK(lhs == rhs);
    }
  }
}
