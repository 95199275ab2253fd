#include <doctest.h>

#include <set>

#include "stiefel/designs.hpp"
#include "stiefel/errors.hpp"

using namespace stiefel;

namespace {

const std::vector<std::vector<int>> kK4 = {{1, 2}, {3, 4}, {1, 3}, {2, 4}, {1, 4}, {2, 3}};
const std::vector<std::vector<int>> kFano = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                             {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};

// Lines of AG(2,3) written out by hand from the grid
//   1 2 3 / 4 5 6 / 7 8 9.
const std::vector<std::vector<int>> kAG23 = {
    {1, 2, 3}, {4, 5, 6}, {7, 8, 9},  // rows
    {1, 4, 7}, {2, 5, 8}, {3, 6, 9},  // columns
    {1, 5, 9}, {2, 6, 7}, {3, 4, 8},  // diagonals
    {1, 6, 8}, {2, 4, 9}, {3, 5, 7}}; // anti-diagonals

// Independent resolution check: every class covers each point once, and
// every block is used once.
bool resolution_oracle(const BIBD& d, const Resolution& res) {
  std::multiset<int> used;
  for (const auto& cls : res.classes) {
    std::multiset<int> pts;
    for (int bi : cls) {
      if (bi < 0 || bi >= d.b) return false;
      used.insert(bi);
      for (int p : d.blocks[static_cast<std::size_t>(bi)]) pts.insert(p);
    }
    std::multiset<int> want;
    for (int p = 1; p <= d.v; ++p) want.insert(p);
    if (pts != want) return false;
  }
  std::multiset<int> all;
  for (int bi = 0; bi < d.b; ++bi) all.insert(bi);
  return used == all;
}

}  // namespace

TEST_CASE("verify_bibd examples") {
  const BIBD k4 = make_bibd(4, kK4);
  CHECK(k4.b == 6);
  CHECK(k4.rep == 3);
  CHECK(k4.k == 2);
  CHECK(k4.lambda == 1);
  CHECK(verify_bibd(k4));

  auto dup = kK4;
  dup.push_back({1, 2});
  const auto bad = verify_bibd(make_bibd(4, dup));
  CHECK_FALSE(bad);
  CHECK_FALSE(bad.diagnostic.empty());

  const BIBD ag = make_bibd(9, kAG23);
  CHECK(ag.b == 12);
  CHECK(ag.rep == 4);
  CHECK(ag.k == 3);
  CHECK(ag.lambda == 1);
  CHECK(verify_bibd(ag));
  CHECK(verify_bibd(make_bibd(7, kFano)));
}

TEST_CASE("verify_bibd diagnostics name a count") {
  auto short_block = kK4;
  short_block[3] = {2};
  const auto v = verify_bibd(make_bibd(4, short_block));
  CHECK_FALSE(v);
  auto out_of_range = kK4;
  out_of_range[0] = {1, 5};
  CHECK_FALSE(verify_bibd(make_bibd(4, out_of_range)));
}

TEST_CASE("verify_resolution examples") {
  const BIBD k4 = make_bibd(4, kK4);
  CHECK(verify_resolution(k4, Resolution{{{0, 1}, {2, 3}, {4, 5}}}));
  // {12|13}: point 1 twice.
  CHECK_FALSE(verify_resolution(k4, Resolution{{{0, 2}, {1, 3}, {4, 5}}}));
  CHECK_FALSE(verify_resolution(k4, Resolution{{{0, 1}, {2, 3}}}));
  CHECK_FALSE(verify_resolution(k4, Resolution{{{0, 1}, {2, 3}, {4, 5}, {0, 1}}}));

  const BIBD ag = make_bibd(9, kAG23);
  CHECK(verify_resolution(ag, Resolution{{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}}}));
}

TEST_CASE("find_resolution") {
  const BIBD k4 = make_bibd(4, kK4);
  const auto r = find_resolution(k4);
  REQUIRE(r);
  CHECK(r->classes.size() == 3);
  CHECK(verify_resolution(k4, *r));
  CHECK(resolution_oracle(k4, *r));

  const BIBD ag = make_bibd(9, kAG23);
  const auto ra = find_resolution(ag);
  REQUIRE(ra);
  CHECK(ra->classes.size() == 4);
  CHECK(resolution_oracle(ag, *ra));

  CHECK_FALSE(find_resolution(make_bibd(7, kFano)));

  const auto ag5 = affine_plane(5).design;
  const auto r5 = find_resolution(ag5);
  REQUIRE(r5);
  CHECK(resolution_oracle(ag5, *r5));
}

TEST_CASE("builtin designs") {
  const auto k4 = builtin_design("k4-edges");
  CHECK(k4.design.v == 4);
  CHECK(k4.design.b == 6);
  CHECK(k4.design.blocks == kK4);
  CHECK(k4.resolution.classes == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});

  const auto ag22 = builtin_design("ag-2-2");
  CHECK(ag22.design.v == 4);
  CHECK(ag22.design.b == 6);
  CHECK(ag22.design.k == 2);
  std::set<std::vector<int>> a(ag22.design.blocks.begin(), ag22.design.blocks.end());
  std::set<std::vector<int>> b(kK4.begin(), kK4.end());
  CHECK(a == b);

  const auto ag23 = builtin_design("ag-2-3");
  CHECK(ag23.design.v == 9);
  CHECK(ag23.design.b == 12);
  CHECK(ag23.design.rep == 4);
  CHECK(ag23.design.k == 3);
  CHECK(ag23.design.lambda == 1);
  std::set<std::vector<int>> c(ag23.design.blocks.begin(), ag23.design.blocks.end());
  std::set<std::vector<int>> e(kAG23.begin(), kAG23.end());
  CHECK(c == e);

  CHECK_THROWS_AS(builtin_design("fano"), UnknownDesign);
}

TEST_CASE("builtin designs verify, and rep = (v-1) lambda / (k-1)") {
  for (const auto& name : builtin_design_names()) {
    CAPTURE(name);
    const auto rd = builtin_design(name);
    CHECK(verify_bibd(rd.design));
    CHECK(verify_resolution(rd.design, rd.resolution));
    CHECK(resolution_oracle(rd.design, rd.resolution));
    CHECK(rd.design.rep * (rd.design.k - 1) == (rd.design.v - 1) * rd.design.lambda);
    CHECK(rd.design.b * rd.design.k == rd.design.v * rd.design.rep);
  }
  for (int q : {2, 3, 5, 7}) {
    const auto rd = affine_plane(q);
    CHECK(verify_bibd(rd.design));
    CHECK(resolution_oracle(rd.design, rd.resolution));
    CHECK(rd.design.rep * (rd.design.k - 1) == (rd.design.v - 1) * rd.design.lambda);
  }
}

TEST_CASE("find_resolution rejects non-designs") {
  auto dup = kK4;
  dup.push_back({1, 2});
  CHECK_THROWS_AS(find_resolution(make_bibd(4, dup)), InvalidParameter);
}
