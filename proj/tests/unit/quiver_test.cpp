#include <gmpxx.h>
#include <gtest/gtest.h>

#include "quiverhh/errors.hpp"
#include "quiverhh/quiver.hpp"

using namespace quiverhh;

namespace {

Quiver two_loops() {
  Quiver q;
  q.add_vertex("v");
  q.add_arrow("a", 0, 0);
  q.add_arrow("b", 0, 0);
  return q;
}

Quiver kronecker() {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 0, 1);
  return q;
}

Quiver beilinson(std::size_t n) {
  Quiver q;
  for (std::size_t t = 0; t <= n; ++t) q.add_vertex(std::to_string(t));
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t i = 0; i <= n; ++i) q.add_arrow("x" + std::to_string(t) + "_" + std::to_string(i), t, t + 1);
  }
  return q;
}

// rank of the cycle space by elimination over the rationals on the incidence matrix
std::size_t cycle_space_rank(const Quiver& q) {
  std::vector<std::vector<mpq_class>> rows(q.num_vertices(), std::vector<mpq_class>(q.num_arrows()));
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    rows[q.arrow(a).source][a] += 1;
    rows[q.arrow(a).target][a] -= 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < q.num_arrows() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t k = 0; k < q.num_arrows(); ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return q.num_arrows() - r;
}

}  // namespace

TEST(Quiver, RejectsDuplicates) {
  Quiver q;
  q.add_vertex("v");
  EXPECT_THROW(q.add_vertex("v"), InputError);
  q.add_arrow("a", 0, 0);
  EXPECT_THROW(q.add_arrow("a", 0, 0), InputError);
  EXPECT_THROW(q.add_arrow("b", 0, 3), InputError);
}

TEST(Betti, Examples) {
  EXPECT_EQ(betti_number(two_loops()), 2u);
  EXPECT_EQ(betti_number(kronecker()), 1u);
  EXPECT_EQ(betti_number(beilinson(2)), 4u);
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(betti_number(beilinson(n)), cycle_space_rank(beilinson(n)));
}

TEST(Paths, DeglexOrder) {
  Quiver q = two_loops();
  Path a = Path::of_arrow(q, 0), b = Path::of_arrow(q, 1);
  Path ab = *compose(a, b), ba = *compose(b, a), aa = *compose(a, a);
  EXPECT_LT(Path::trivial(0), a);
  EXPECT_LT(a, b);
  EXPECT_LT(b, aa);
  EXPECT_LT(aa, ab);
  EXPECT_LT(ab, ba);
  EXPECT_EQ(ab.to_string(q), "a*b");
  EXPECT_EQ(Path::trivial(0).to_string(q), "e(v)");
  EXPECT_EQ(find_subpath(*compose(ab, a), ba), 1u);
  EXPECT_EQ(arrow_counts(q, *compose(ab, a)), (std::vector<long>{2, 1}));
}

TEST(Paths, ComposeChecksEndpoints) {
  Quiver q = kronecker();
  EXPECT_FALSE(compose(Path::of_arrow(q, 0), Path::of_arrow(q, 1)));
  EXPECT_TRUE(compose(Path::trivial(0), Path::of_arrow(q, 1)));
}

TEST(WalkSystem, SingleVertex) {
  Quiver q;
  q.add_vertex("v");
  auto w = spanning_walk_system(q);
  ASSERT_EQ(w.walks.size(), 1u);
  EXPECT_TRUE(w.walks[0].steps.empty());
}

TEST(WalkSystem, A2) {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", 0, 1);
  auto w = spanning_walk_system(q);
  EXPECT_TRUE(w.walks[0].steps.empty());
  ASSERT_EQ(w.walks[1].steps.size(), 1u);
  EXPECT_EQ(w.walks[1].steps[0], (Step{0, false}));
  EXPECT_TRUE(chord_loops(q, w).empty());
}

TEST(WalkSystem, KroneckerUsesFirstArrow) {
  Quiver q = kronecker();
  auto w = spanning_walk_system(q);
  EXPECT_EQ(w.walks[1].steps, (std::vector<Step>{{0, false}}));
  EXPECT_EQ(w.walks, spanning_walk_system(q).walks);
  auto loops = chord_loops(q, w);
  ASSERT_EQ(loops.size(), 1u);
  EXPECT_EQ(loops[0].steps, (std::vector<Step>{{1, false}, {0, true}}));
  EXPECT_EQ(loops[0].to_string(q), "b*a^-1");
}

TEST(WalkSystem, OneLoop) {
  Quiver q;
  q.add_vertex("v");
  q.add_arrow("u", 0, 0);
  auto loops = chord_loops(q, spanning_walk_system(q));
  ASSERT_EQ(loops.size(), 1u);
  EXPECT_EQ(loops[0].steps, (std::vector<Step>{{0, false}}));
}

TEST(WalkSystem, PriorityChangesTree) {
  Quiver q = kronecker();
  auto w = spanning_walk_system(q, {1, 0});
  EXPECT_EQ(w.walks[1].steps, (std::vector<Step>{{1, false}}));
  EXPECT_EQ(chord_arrows(q, w), std::vector<std::size_t>{0});
}

TEST(WalkSystem, ComponentsGetOwnBase) {
  Quiver q;
  for (auto v : {"1", "2", "3"}) q.add_vertex(v);
  q.add_arrow("a", 1, 2);
  EXPECT_EQ(q.num_components(), 2u);
  auto w = spanning_walk_system(q);
  EXPECT_EQ(w.base.size(), 2u);
  EXPECT_EQ(betti_number(q), 0u);
}
