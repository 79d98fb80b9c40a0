#include "orthdet/combinat.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace orthdet;

namespace {

// Partitions of n with parts <= max_part, built by plain recursion.
int count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  int total = 0;
  for (int p = std::min(n, max_part); p >= 1; --p) total += count_partitions(n - p, p);
  return total;
}

// Every filling of the diagram by 1..n that increases along rows and columns.
std::set<std::vector<std::vector<int>>> brute_force_syt(const Partition& shape) {
  std::vector<int> perm(static_cast<std::size_t>(shape.size()));
  std::iota(perm.begin(), perm.end(), 1);
  std::set<std::vector<std::vector<int>>> out;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int len : shape.parts()) {
      rows.emplace_back(perm.begin() + static_cast<long>(pos), perm.begin() + static_cast<long>(pos + len));
      pos += static_cast<std::size_t>(len);
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r)
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c > 0 && rows[r][c - 1] > rows[r][c]) ok = false;
        if (r > 0 && rows[r - 1][c] > rows[r][c]) ok = false;
      }
    if (ok) out.insert(rows);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST(Partition, ParseAndPrint) {
  const Partition p = Partition::parse("3,1,1");
  EXPECT_EQ(p.size(), 5);
  EXPECT_EQ(p.length(), 3);
  EXPECT_EQ(p.csv(), "3,1,1");
  EXPECT_EQ(p.to_string(), "(3,1,1)");
  EXPECT_EQ(p.part(1), 3);
  EXPECT_EQ(p.part(4), 0);
  EXPECT_TRUE(Partition::parse("").empty());
  EXPECT_TRUE(Partition::parse("0").empty());
}

TEST(Partition, RejectsMalformed) {
  EXPECT_THROW(Partition::parse("1,3"), ArgumentError);
  EXPECT_THROW(Partition::parse("2,,1"), ArgumentError);
  EXPECT_THROW(Partition::parse("2,0"), ArgumentError);
  EXPECT_THROW(Partition::parse("a"), ArgumentError);
  EXPECT_THROW(Partition::parse("-1"), ArgumentError);
  EXPECT_THROW(Partition({2, 3}), ArgumentError);
}

TEST(Partition, ConjugateAndWeightedSize) {
  EXPECT_EQ(Partition({3, 1, 1}).conjugate(), Partition({3, 1, 1}));
  EXPECT_EQ(Partition({4, 2}).conjugate(), Partition({2, 2, 1, 1}));
  EXPECT_EQ(Partition({3, 1, 1}).weighted_size(), 3);
  EXPECT_EQ(Partition({2, 2}).weighted_size(), 2);
  EXPECT_EQ(Partition({5}).weighted_size(), 0);
  for (int n = 1; n <= 9; ++n)
    for (const auto& p : enumerate_partitions(n)) EXPECT_EQ(p.conjugate().conjugate(), p);
}

TEST(Partition, EnumerationCountsAndOrder) {
  for (int n = 1; n <= 14; ++n) {
    const auto parts = enumerate_partitions(n);
    EXPECT_EQ(static_cast<int>(parts.size()), count_partitions(n, n)) << n;
    EXPECT_TRUE(std::is_sorted(parts.rbegin(), parts.rend()));
    EXPECT_EQ(parts.front(), Partition({n}));
  }
  EXPECT_THROW(enumerate_partitions(0), ArgumentError);
}

TEST(Hooks, HookLengthsOf311) {
  const auto h = hook_lengths(Partition({3, 1, 1}));
  EXPECT_EQ(h.at({1, 1}), 5);
  EXPECT_EQ(h.at({1, 2}), 2);
  EXPECT_EQ(h.at({1, 3}), 1);
  EXPECT_EQ(h.at({2, 1}), 2);
  EXPECT_EQ(h.at({3, 1}), 1);
  EXPECT_EQ(hook_length_count(Partition({3, 1, 1})), 6);
  EXPECT_EQ(hook_length_count(Partition({2, 2})), 2);
}

TEST(Tableaux, EnumerationMatchesBruteForce) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      const TableauGraph g = enumerate_syt(shape);
      std::set<std::vector<std::vector<int>>> found;
      for (const auto& t : g.nodes()) found.insert(t.rows());
      EXPECT_EQ(found.size(), g.size()) << shape.to_string();
      EXPECT_EQ(found, brute_force_syt(shape)) << shape.to_string();
      EXPECT_EQ(BigInt(g.size()), hook_length_count(shape)) << shape.to_string();
    }
}

TEST(Tableaux, SquaredCountsSumToFactorial) {
  for (int n = 1; n <= 12; ++n) {
    BigInt sum = 0;
    for (const auto& shape : enumerate_partitions(n)) sum += hook_length_count(shape) * hook_length_count(shape);
    EXPECT_EQ(sum, factorial(n)) << n;
  }
}

TEST(Tableaux, GraphOf311) {
  const TableauGraph g = enumerate_syt(Partition({3, 1, 1}));
  ASSERT_EQ(g.size(), 6U);
  EXPECT_EQ(g.node(0).rows(), (std::vector<std::vector<int>>{{1, 2, 3}, {4}, {5}}));
  EXPECT_EQ(g.edges().size(), 6U);
  const auto idx = g.find(StandardTableau({{1, 2, 4}, {3}, {5}}));
  ASSERT_TRUE(idx.has_value());
  EXPECT_EQ(g.length(*idx), 1);
  ASSERT_EQ(g.incoming(*idx).size(), 1U);
  EXPECT_EQ(g.edges()[g.incoming(*idx)[0]].k, 3);
  const auto top = g.find(StandardTableau({{1, 4, 5}, {2}, {3}}));
  ASSERT_TRUE(top.has_value());
  EXPECT_EQ(g.length(*top), 4);
}

TEST(Tableaux, EdgesRaiseLengthByOne) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      const TableauGraph g = enumerate_syt(shape);
      for (const auto& e : g.edges()) {
        EXPECT_TRUE(raises_length(e.k, g.node(e.lower)));
        EXPECT_EQ(g.length(e.upper), g.length(e.lower) + 1);
        EXPECT_EQ(*apply_simple_transposition(e.k, g.node(e.lower)), g.node(e.upper));
      }
    }
}

TEST(Tableaux, SimpleTranspositionRejectsNonStandard) {
  const StandardTableau t({{1, 2, 3}, {4}, {5}});
  EXPECT_FALSE(apply_simple_transposition(1, t).has_value());
  EXPECT_FALSE(apply_simple_transposition(4, t).has_value());
  EXPECT_TRUE(apply_simple_transposition(3, t).has_value());
  EXPECT_THROW(apply_simple_transposition(5, t), ArgumentError);
  EXPECT_THROW(StandardTableau({{2, 1}}), ArgumentError);
  EXPECT_THROW(StandardTableau({{1, 4}, {2, 3}}), ArgumentError);
}

TEST(Tableaux, WordRebuildsTableau) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      const TableauGraph g = enumerate_syt(shape);
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto word = tableau_word(g.node(i));
        EXPECT_EQ(static_cast<int>(word.size()), g.length(i));
        StandardTableau t = g.node(0);
        for (auto it = word.rbegin(); it != word.rend(); ++it) t = *apply_simple_transposition(*it, t);
        EXPECT_EQ(t, g.node(i));
      }
    }
  EXPECT_EQ(tableau_word(StandardTableau({{1, 3, 4}, {2}, {5}})), (std::vector<int>{2, 3}));
}

TEST(Tableaux, ResourceGuard) {
  EXPECT_THROW(enumerate_syt(Partition({9, 8}), 16), ResourceGuardError);
  EXPECT_NO_THROW(enumerate_syt(Partition({9, 8}), 17));
}
