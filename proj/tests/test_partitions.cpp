#include "gzwb/partitions.hpp"
#include "gzwb/finite_group.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace gzwb;

namespace {

// p(n) via the standard coin-change recurrence.
std::size_t partition_count(int n)
{
  std::vector<std::size_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - part)];
  return p[static_cast<std::size_t>(n)];
}

// Number of standard tableaux by removing corners recursively.
std::uint64_t tableaux(const Partition& p)
{
  if (p.empty()) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
    Partition q = p;
    if (--q[i] == 0) q.pop_back();
    total += tableaux(q);
  }
  return total;
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

} // namespace

TEST(Partitions, CountsAndOrder)
{
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), partition_count(n)) << n;
  auto p4 = partitions_of(4);
  EXPECT_EQ(p4.front(), (Partition{4}));
  EXPECT_EQ(p4.back(), (Partition{1, 1, 1, 1}));
  for (const auto& p : p4) EXPECT_TRUE(is_partition(p));
}

TEST(Partitions, LabelsRoundTrip)
{
  EXPECT_EQ(label(Partition{2, 1}), "(2,1)");
  EXPECT_EQ(label(Partition{}), "()");
  EXPECT_EQ(parse_partition("(3, 1,1)"), (Partition{3, 1, 1}));
  EXPECT_EQ(parse_partition("()"), Partition{});
  EXPECT_THROW(parse_partition("(1,2)"), std::invalid_argument);
  EXPECT_THROW(parse_partition("2,1"), std::invalid_argument);
}

TEST(Partitions, ConjugateIsInvolutive)
{
  EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
  for (const auto& p : partitions_of(7)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Partitions, HookLengthsCountTableaux)
{
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t squares = 0;
    for (const auto& p : partitions_of(n)) {
      auto d = hook_length_dimension(p);
      EXPECT_EQ(d, tableaux(p)) << label(p);
      squares += d * d;
    }
    EXPECT_EQ(squares, factorial(n));
  }
  EXPECT_EQ(hook_length_dimension(Partition{3, 2}), 5u);
}

TEST(Partitions, AddBox)
{
  std::vector<Partition> got;
  for (const auto& [q, content] : add_box(Partition{2, 1})) got.push_back(q);
  std::sort(got.begin(), got.end());
  std::vector<Partition> want{{2, 1, 1}, {2, 2}, {3, 1}};
  EXPECT_EQ(got, want);
  std::map<Partition, int> contents;
  for (const auto& [q, content] : add_box(Partition{2, 1})) contents[q] = content;
  EXPECT_EQ(contents[(Partition{3, 1})], 2);
  EXPECT_EQ(contents[(Partition{2, 2})], 0);
  EXPECT_EQ(contents[(Partition{2, 1, 1})], -2);
  EXPECT_TRUE(contained_with_one_box(Partition{2}, Partition{2, 1}));
  EXPECT_FALSE(contained_with_one_box(Partition{1, 1}, Partition{3}));
}

TEST(Characters, S3Table)
{
  EXPECT_EQ(mn_character({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(mn_character({2, 1}, {2, 1}), 0);
  EXPECT_EQ(mn_character({2, 1}, {3}), -1);
  EXPECT_EQ(mn_character({1, 1, 1}, {2, 1}), -1);
  EXPECT_EQ(mn_character({3}, {3}), 1);
}

TEST(Characters, AgreeWithBruteForceClassSizesAndOrthogonality)
{
  for (int n = 2; n <= 6; ++n) {
    auto G = symmetric_group(n);
    std::map<Partition, std::size_t> sizes;
    for (const auto& g : G->elements()) {
      auto ct = g.cycle_type(n);
      sizes[Partition(ct.begin(), ct.end())]++;
    }
    auto parts = partitions_of(n);
    for (const auto& rho : parts) EXPECT_EQ(class_size(rho), mpz_class(static_cast<unsigned long>(sizes[rho])));
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        mpz_class s = 0;
        for (const auto& rho : parts) s += class_size(rho) * mn_character(a, rho) * mn_character(b, rho);
        EXPECT_EQ(s, a == b ? mpz_class(static_cast<unsigned long>(factorial(n))) : mpz_class(0));
      }
      Partition ones(static_cast<std::size_t>(n), 1);
      EXPECT_EQ(static_cast<std::uint64_t>(mn_character(a, ones)), hook_length_dimension(a));
    }
  }
}
