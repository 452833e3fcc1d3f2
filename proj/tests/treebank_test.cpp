#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "srl/treebank/bio.hpp"
#include "srl/treebank/conllx.hpp"
#include "srl/treebank/props.hpp"
#include "srl/treebank/tree_ops.hpp"
#include "test_support.hpp"

using namespace srl;
using namespace srltest;

TEST_CASE("conllx: worked example parses into the expected tree") {
  auto blocks = parse_conllx(fig_conllx());
  REQUIRE(blocks.size() == 1);
  const auto& [sent, tree] = blocks[0];
  CHECK(sent.tokens == std::vector<std::string>{"Ms.", "Haag", "plays", "Elianti", "."});
  CHECK(tree.heads == std::vector<int>{1, 2, -1, 2, 2});
  CHECK(tree.labels == std::vector<std::string>{"nn", "nsubj", "root", "dobj", "punct"});
  CHECK(tree.root() == 2);
}

TEST_CASE("conllx: two-node cycle is rejected with a line number") {
  const char* text =
      "1\ta\t_\t_\t_\t_\t2\tx\n"
      "2\tb\t_\t_\t_\t_\t1\tx\n";
  CHECK_THROWS_WITH_AS(parse_conllx(text), doctest::Contains("line 1"), DataError);
}

TEST_CASE("conllx: single-token block is a root-only tree") {
  auto blocks = parse_conllx("1\thello\t_\t_\t_\t_\t0\troot\n");
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].second.heads == std::vector<int>{-1});
}

TEST_CASE("conllx: malformed rows carry their line number") {
  CHECK_THROWS_WITH_AS(parse_conllx("1\tonly\tthree\n"), doctest::Contains("line 1"), DataError);
  const char* bad_id =
      "1\ta\t_\t_\t_\t_\t0\troot\n"
      "3\tb\t_\t_\t_\t_\t1\tx\n";
  CHECK_THROWS_WITH_AS(parse_conllx(bad_id), doctest::Contains("line 2"), DataError);
  CHECK_THROWS_AS(parse_conllx("1\ta\t_\t_\t_\t_\tzz\tx\n"), DataError);
}

TEST_CASE("conllx: multiple roots rejected") {
  const char* text =
      "1\ta\t_\t_\t_\t_\t0\troot\n"
      "2\tb\t_\t_\t_\t_\t0\troot\n";
  CHECK_THROWS_WITH_AS(parse_conllx(text), doctest::Contains("root"), DataError);
}

TEST_CASE("tree validation: exhaustive over all head arrays for n <= 4") {
  // Oracle: a head array is a valid tree iff exactly one node has head -1,
  // no node is its own head, and repeated parent-following from every node
  // reaches the root within n steps.
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> heads(n, -1);
    long total = 1;
    for (int i = 0; i < n; ++i) total *= n + 1;  // heads in [-1, n-1]
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = 0; i < n; ++i) {
        heads[i] = static_cast<int>(c % (n + 1)) - 1;
        c /= n + 1;
      }
      bool ok = true;
      int roots = 0;
      for (int i = 0; i < n; ++i) {
        if (heads[i] == -1) ++roots;
        if (heads[i] == i) ok = false;
      }
      if (roots != 1) ok = false;
      if (ok) {
        for (int i = 0; i < n && ok; ++i) {
          int v = i;
          for (int steps = 0; heads[v] != -1; ++steps, v = heads[v])
            if (steps > n) {
              ok = false;
              break;
            }
        }
      }
      DependencyTree t;
      t.heads = heads;
      t.labels.assign(n, "x");
      if (ok) {
        CHECK_NOTHROW(validate_tree(t));
      } else {
        CHECK_THROWS_AS(validate_tree(t), DataError);
      }
    }
  }
}

TEST_CASE("lca: worked examples and properties") {
  auto tree = fig_tree();
  CHECK(lca(tree, 0, 2) == 2);  // "plays" is its own ancestor
  CHECK(lca(tree, 0, 3) == 2);
  for (int i = 0; i < 5; ++i) CHECK(lca(tree, i, i) == i);

  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 10)(rng);
    auto t = random_tree(rng, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int a = lca(t, i, j);
        CHECK(a == lca(t, j, i));
        CHECK(a == lca_oracle(t, i, j));
        auto anc_i = ancestors_of(t, i);
        auto anc_j = ancestors_of(t, j);
        CHECK(std::count(anc_i.begin(), anc_i.end(), a) == 1);
        CHECK(std::count(anc_j.begin(), anc_j.end(), a) == 1);
      }
    }
  }
}

TEST_CASE("path_to_ancestor: endpoints included, distances match BFS") {
  auto tree = fig_tree();
  CHECK(path_to_ancestor(tree, 0, 2) == std::vector<int>{0, 1, 2});
  CHECK(path_to_ancestor(tree, 3, 3) == std::vector<int>{3});
  CHECK_THROWS_AS(path_to_ancestor(tree, 3, 1), std::invalid_argument);

  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 12)(rng);
    auto t = random_tree(rng, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int a = lca(t, i, j);
        CHECK(static_cast<int>(path_to_ancestor(t, i, a).size()) - 1 == bfs_distance(t, i, a));
      }
    }
  }
}

TEST_CASE("spans_to_bio: worked example and edge cases") {
  CHECK(spans_to_bio(fig_frame(), 5) ==
        TagSequence{"B-A0", "I-A0", "B-V", "B-A1", "O"});

  PredicateFrame empty;
  empty.predicate = 0;
  CHECK(spans_to_bio(empty, 3) == TagSequence{"B-V", "O", "O"});

  PredicateFrame overlapping;
  overlapping.predicate = 0;
  overlapping.spans = {{"A0", 1, 3}, {"A1", 2, 4}};
  CHECK_THROWS_AS(spans_to_bio(overlapping, 5), DataError);
}

TEST_CASE("bio_to_spans: separates V and rejects illegal sequences") {
  auto spans = bio_to_spans({"B-A0", "I-A0", "B-V", "B-A1", "O"});
  CHECK(spans == std::vector<LabeledSpan>{{"A0", 0, 1}, {"A1", 3, 3}});

  CHECK_THROWS_AS(bio_to_spans({"I-A0", "O"}), DataError);
  CHECK_THROWS_AS(bio_to_spans({"O", "I-A0"}), DataError);
  CHECK_THROWS_AS(bio_to_spans({"B-A1", "I-A0"}), DataError);
}

TEST_CASE("spans<->bio round-trip on random frames") {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 14)(rng);
    auto f = random_frame(rng, n);
    auto tags = spans_to_bio(f, n);
    auto back = bio_to_frame(tags);
    CHECK(back.predicate == f.predicate);
    CHECK(back.spans == f.spans);
    CHECK(bio_to_spans(tags) == f.spans);
  }
}

TEST_CASE("props: worked example block") {
  const char* text =
      "-      (A0*\n"
      "-      *)\n"
      "plays  (V*)\n"
      "-      (A1*)\n"
      "-      *\n";
  auto sentences = parse_props(text);
  REQUIRE(sentences.size() == 1);
  REQUIRE(sentences[0].size() == 1);
  const auto& f = sentences[0][0];
  CHECK(f.predicate == 2);
  CHECK(f.lemma == "plays");
  CHECK(f.spans == std::vector<LabeledSpan>{{"A0", 0, 1}, {"A1", 3, 3}});
}

TEST_CASE("props: block with no predicates yields an empty frame list") {
  auto sentences = parse_props("-\n-\n-\n");
  REQUIRE(sentences.size() == 1);
  CHECK(sentences[0].empty());
}

TEST_CASE("props: unbalanced and overlapping spans are rejected") {
  CHECK_THROWS_AS(parse_props("x  (V*\n-  (A0*)\n"), DataError);   // V left open at (A0*
  CHECK_THROWS_AS(parse_props("x  (V*)\n-  (A0*\n"), DataError);   // unclosed at block end
  CHECK_THROWS_AS(parse_props("x  *)\n"), DataError);              // close without open
  CHECK_THROWS_AS(parse_props("x  (V*)\n-  *\n-  junk\n"), DataError);
}

TEST_CASE("props: round-trip on random frames, byte-identical on canonical text") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    std::vector<std::vector<PredicateFrame>> sentences(1);
    int n_frames = std::uniform_int_distribution<int>(0, 2)(rng);
    std::set<int> used_predicates;
    for (int k = 0; k < n_frames; ++k) {
      auto f = random_frame(rng, n);
      if (used_predicates.count(f.predicate)) continue;
      used_predicates.insert(f.predicate);
      sentences[0].push_back(f);
    }
    std::sort(sentences[0].begin(), sentences[0].end(),
              [](const PredicateFrame& a, const PredicateFrame& b) {
                return a.predicate < b.predicate;
              });
    const std::string text = write_props(sentences, {n});
    auto parsed = parse_props(text);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0] == sentences[0]);
    CHECK(write_props(parsed, {n}) == text);
  }
}

TEST_CASE("props: writer rejects overlapping argument spans") {
  PredicateFrame f;
  f.predicate = 0;
  f.lemma = "x";
  f.spans = {{"A0", 1, 3}, {"A1", 3, 4}};
  CHECK_THROWS_AS(write_props_block({f}, 5), DataError);
}
