#include <doctest.h>

#include <algorithm>
#include <set>

#include "hopfcoh/rootsystem.hpp"

using namespace hopfcoh;

namespace {

// Independent oracle: close the simple roots under all simple reflections;
// the positive roots are the closure intersected with the positive cone.
std::set<std::vector<int>> closure_positive_roots(const CartanMatrix& m) {
  std::set<std::vector<int>> all;
  std::vector<Root> queue;
  for (int i = 0; i < m.rank(); ++i) {
    Root r = simple_root(m.rank(), i);
    all.insert(r.coords);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.back();
    queue.pop_back();
    for (int i = 0; i < m.rank(); ++i) {
      Root s = reflect(m, i, r);
      if (all.insert(s.coords).second) queue.push_back(s);
    }
  }
  std::set<std::vector<int>> pos;
  for (const auto& c : all) {
    bool nonneg = std::all_of(c.begin(), c.end(), [](int v) { return v >= 0; });
    if (nonneg) pos.insert(c);
  }
  return pos;
}

const CartanMatrix kA1{{{2}}};
const CartanMatrix kA2{{{2, -1}, {-1, 2}}};
const CartanMatrix kG2{{{2, -1}, {-3, 2}}};
const CartanMatrix kB2{{{2, -2}, {-1, 2}}};
const CartanMatrix kA1A1{{{2, 0}, {0, 2}}};
const CartanMatrix kA3{{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}};
const CartanMatrix kB3{{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}};

}  // namespace

TEST_SUITE("rootsystem") {
  TEST_CASE("classify") {
    CHECK(classify(kA1)[0].label == "A1");
    CHECK(classify(kA2)[0].label == "A2");
    // brute force: a12 a21 = 3 only occurs for G2 in the finite-type table
    CHECK(kG2(0, 1) * kG2(1, 0) == 3);
    CHECK(classify(kG2)[0].label == "G2");
    CHECK(classify(kB2)[0].label == "B2");
    auto comps = classify(kA1A1);
    CHECK(comps.size() == 2);
    CHECK(comps[0].vertices == std::vector<int>{0});
    CHECK(classify(kA3)[0].label == "A3");
    CHECK(classify(kB3)[0].label[0] == 'B');
    CartanMatrix affine{{{2, -2}, {-2, 2}}};  // affine A1: not finite type
    CHECK_THROWS_AS(classify(affine), NotFiniteType);
    CartanMatrix d4{{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}};
    CHECK(classify(d4)[0].label == "D4");
  }

  TEST_CASE("longest word") {
    CHECK(longest_word(kA1) == std::vector<int>{0});
    // brute force over the 6-element A2 Weyl group: the longest element has
    // length 3 and sends every positive root negative
    std::vector<int> w = longest_word(kA2);
    CHECK(w.size() == 3);
    for (int i = 0; i < 2; ++i) {
      Root img = simple_root(2, i);
      for (size_t t = w.size(); t-- > 0;) img = reflect(kA2, w[t], img);
      // w0 applied on the left: compute w0(alpha_i) by applying the word
      // right-to-left; every coordinate must be nonpositive
      Root img2 = simple_root(2, i);
      for (size_t t = 0; t < w.size(); ++t) img2 = reflect(kA2, w[w.size() - 1 - t], img2);
      CHECK(std::all_of(img2.coords.begin(), img2.coords.end(), [](int v) { return v <= 0; }));
    }
    CHECK(longest_word(kG2).size() == 6);
    CHECK(longest_word(kG2).size() == closure_positive_roots(kG2).size());
  }

  TEST_CASE("positive roots") {
    auto r11 = positive_roots(kA1A1);
    REQUIRE(r11.size() == 2);
    CHECK(r11[0].coords == std::vector<int>{1, 0});
    CHECK(r11[1].coords == std::vector<int>{0, 1});

    auto ra2 = positive_roots(kA2);  // greedy word is [0, 1, 0]
    REQUIRE(ra2.size() == 3);
    CHECK(ra2[0].coords == std::vector<int>{1, 0});
    CHECK(ra2[1].coords == std::vector<int>{1, 1});
    CHECK(ra2[2].coords == std::vector<int>{0, 1});
    CHECK(height(ra2[0]) == 1);
    CHECK(height(ra2[1]) == 2);
    CHECK(height(ra2[2]) == 1);
  }

  TEST_CASE("height") {
    CHECK(height(simple_root(3, 0)) == 1);
    CHECK(height(Root{{1, 1, 0}}) == 2);
    CHECK(height(Root{{0, 0, 0}}) == 0);
  }

  TEST_CASE("definitional recomputation of beta_j") {
    for (const CartanMatrix* m : {&kA2, &kB2, &kG2, &kA3, &kB3}) {
      std::vector<int> w = longest_word(*m);
      std::vector<Root> roots = positive_roots(*m);
      REQUIRE(w.size() == roots.size());
      for (size_t j = 0; j < w.size(); ++j) {
        Root v = simple_root(m->rank(), w[j]);
        for (size_t t = j; t-- > 0;) v = reflect(*m, w[t], v);
        CHECK(v == roots[j]);
      }
    }
  }

  TEST_CASE("closure oracle agreement for rank <= 4") {
    CartanMatrix d4{{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}};
    CartanMatrix f4{{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}};
    std::vector<const CartanMatrix*> cases{&kA1, &kA2, &kB2, &kG2, &kA3, &kB3, &d4, &f4};
    for (const CartanMatrix* m : cases) {
      auto roots = positive_roots(*m);
      auto oracle = closure_positive_roots(*m);
      CHECK(roots.size() == oracle.size());
      std::set<std::vector<int>> got;
      for (const Root& r : roots) {
        CHECK(std::all_of(r.coords.begin(), r.coords.end(), [](int v) { return v >= 0; }));
        got.insert(r.coords);
      }
      CHECK(got == oracle);  // distinct and exactly the closure positives
    }
  }
}
