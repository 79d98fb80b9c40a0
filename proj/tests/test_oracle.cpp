#include "orthdet/oracle.hpp"

#include <gtest/gtest.h>

using namespace orthdet;

namespace {

// Plain rational Gaussian elimination with row swaps.
BigRational gauss_det(RationalMatrix m) {
  const std::size_t n = m.rows();
  BigRational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigRational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

std::vector<Partition> even_shapes(int n_max) {
  std::vector<Partition> out;
  for (int n = 2; n <= n_max; ++n)
    for (const auto& p : enumerate_partitions(n))
      if (is_even(hook_length_count(p))) out.push_back(p);
  return out;
}

}  // namespace

TEST(Matrix, BareissMatchesElimination) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    RationalMatrix m(n, n);
    std::vector<std::vector<BigInt>> ints(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        ints[i][j] = static_cast<std::int64_t>(rng() % 7) - 3;
        m(i, j) = BigRational(ints[i][j]);
      }
    EXPECT_EQ(BigRational(bareiss_determinant(ints)), gauss_det(m));
    EXPECT_EQ(determinant(m), gauss_det(m));
  }
  RationalMatrix half = RationalMatrix::identity(2);
  half(0, 0) = BigRational(1, 2);
  EXPECT_EQ(determinant(half), BigRational(1, 2));
}

TEST(Seminormal, DimensionsAndRelations) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& shape : enumerate_partitions(n))
      for (int q : {1, 3, 5}) {
        const SeminormalRep rep = build_seminormal(shape, q);
        EXPECT_EQ(BigInt(rep.dim()), hook_length_count(shape));
        EXPECT_EQ(static_cast<int>(rep.generators.size()), n - 1);
        const RationalMatrix id = RationalMatrix::identity(rep.dim());
        for (int i = 1; i < n; ++i) {
          const RationalMatrix& t = rep.generator(i);
          EXPECT_EQ(t * t, BigRational(q) * id + BigRational(q - 1) * t);
        }
      }
}

TEST(Seminormal, OneDimensionalShapes) {
  const SeminormalRep triv = build_seminormal(Partition({4}), 3);
  const SeminormalRep sgn = build_seminormal(Partition({1, 1, 1, 1}), 3);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(triv.generator(i)(0, 0), 3);
    EXPECT_EQ(sgn.generator(i)(0, 0), -1);
  }
}

TEST(Seminormal, WordImages) {
  const SeminormalRep rep = build_seminormal(Partition({3, 2}), 5);
  EXPECT_EQ(word_image(rep, {}), RationalMatrix::identity(rep.dim()));
  EXPECT_EQ(word_image(rep, {1, 2, 1}), word_image(rep, {2, 1, 2}));
  EXPECT_EQ(word_image(rep, {1, 3}), word_image(rep, {3, 1}));
  EXPECT_THROW(word_image(rep, {5}), ArgumentError);
}

TEST(Permutations, LengthsAndWords) {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& w : perms) {
      const auto word = reduced_word(w);
      EXPECT_EQ(static_cast<int>(word.size()), coxeter_length(w));
      Permutation rebuilt = identity_permutation(n);
      for (auto it = word.rbegin(); it != word.rend(); ++it) rebuilt = left_multiply(*it, rebuilt);
      EXPECT_EQ(rebuilt, w);
      EXPECT_EQ(inverse(inverse(w)), w);
      EXPECT_EQ(coxeter_length(inverse(w)), coxeter_length(w));
    }
  }
}

TEST(GramForm, InvariantSymmetricAndNondegenerate) {
  for (const auto& shape : even_shapes(5))
    for (int q : {1, 3, 5}) {
      const SeminormalRep rep = build_seminormal(shape, q);
      const GramForm g = gram_form(rep);
      EXPECT_EQ(g.matrix, g.matrix.transpose());
      for (const auto& t : rep.generators) EXPECT_EQ(t.transpose() * g.matrix, g.matrix * t);
      EXPECT_EQ(BigRational(g.determinant), gauss_det(g.matrix));
      EXPECT_NE(g.determinant, 0);
    }
}

TEST(GramForm, TrivialShape) {
  const GramForm g = gram_form(build_seminormal(Partition({3}), 3));
  ASSERT_EQ(g.matrix.rows(), 1U);
  EXPECT_EQ(g.matrix(0, 0), 1);
}

TEST(OracleDet, Examples) {
  EXPECT_EQ(oracle_det(Partition({2, 1}), 3), class_of_integer(39));
  EXPECT_EQ(oracle_det(Partition({2, 1}), 5), class_of_integer(155));
  EXPECT_EQ(oracle_det(Partition({2, 2}), 3), class_of_integer(39));
  EXPECT_EQ(oracle_det(Partition({3, 1, 1}), 3), SquareClass{});
  EXPECT_EQ(oracle_det(Partition({3, 1, 1}), 1), class_of_integer(5));
}

TEST(OracleDet, Preconditions) {
  EXPECT_THROW(oracle_det(Partition({3, 2}), 3), PreconditionError);
  EXPECT_THROW(oracle_det(Partition({3, 1, 1}), 3, 4), ResourceGuardError);
}

TEST(SkewElement, AgreesWithGramForm) {
  for (const auto& shape : even_shapes(4))
    for (int q : {1, 3, 7})
      for (std::uint64_t seed : {1U, 2U, 3U})
        EXPECT_EQ(skew_element_det(shape, q, seed), oracle_det(shape, q)) << shape.to_string();
  EXPECT_EQ(skew_element_det(Partition({3, 1, 1}), 3, 11), SquareClass{});
}

TEST(SkewElement, ReproducibleAndBudgeted) {
  EXPECT_EQ(skew_element_det(Partition({2, 2}), 3, 99), skew_element_det(Partition({2, 2}), 3, 99));
  SkewOptions none;
  none.attempts = 0;
  EXPECT_THROW(skew_element_det(Partition({2, 2}), 3, 1, none), ResourceGuardError);
}

TEST(RegularStructure, TraceForm) {
  for (int n = 1; n <= 4; ++n)
    for (int q : {1, 3}) EXPECT_TRUE(regular_structure_check(n, q));
  EXPECT_THROW(regular_structure_check(6, 3), PreconditionError);
}

TEST(RegularStructure, QuadraticRelationTrace) {
  // tau(T_s T_s) = tau(q + (q-1) T_s) = q.
  const detail::HeckeElement ts{{Permutation{2, 1}, BigInt(1)}};
  const auto sq = detail::left_multiply_generator(1, ts, 3);
  EXPECT_EQ(sq.at(identity_permutation(2)), 3);
  EXPECT_EQ(sq.at(Permutation{2, 1}), 2);
}
