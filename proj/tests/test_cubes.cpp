#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <map>

#include "dio/cubes.hpp"
#include "testutil.hpp"

using namespace dio;
using testutil::Rng;

TEST_CASE("zigzag examples and round trip") {
  CHECK(zigzag(0) == 0);
  CHECK(zigzag(1) == -1);
  CHECK(zigzag(2) == 1);
  CHECK(zigzag(3) == -2);
  CHECK(zigzag(4) == 2);
  for (std::uint64_t n = 0; n <= 2000; ++n) CHECK(zigzag_inv(zigzag(n)) == n);
  for (std::int64_t v = -1000; v <= 1000; ++v) CHECK(zigzag(zigzag_inv(v)) == v);
}

TEST_CASE("skip predicate matches cubic residues mod 9") {
  // Cube residues mod 9 are 0 and +-1, so sums of three cubes cover exactly
  // the residues other than 4 and 5.
  std::vector<bool> reachable(9, false);
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y)
      for (int z = 0; z < 9; ++z)
        reachable[(x * x * x + y * y * y + z * z * z) % 9] = true;
  for (std::uint64_t k = 0; k <= 50; ++k) CHECK(cubes_skipped(k) == !reachable[k % 9]);
}

TEST_CASE("frontier finds the documented small targets") {
  CubesState st;
  auto rep = cubes_run(st, 3, 1000);
  CHECK(rep.status == CubesStatus::completed);
  REQUIRE(st.found.size() == 4);

  CHECK(st.found[0] == CubeHit{0, 0, 0, 0, 0});
  CHECK(st.found[1] == CubeHit{1, 0, 0, 1, 5});
  CHECK(st.found[2] == CubeHit{2, 1, 0, 1, 17});
  CHECK(st.found[3] == CubeHit{3, 1, 1, 1, 107});

  for (const auto& h : st.found)
    CHECK(h.x * h.x * h.x + h.y * h.y * h.y + h.z * h.z * h.z == Int(h.k));
}

TEST_CASE("skipped targets consume no budget and are never searched") {
  CubesState st;
  auto rep = cubes_run(st, 5, 200000);
  CHECK(rep.status == CubesStatus::completed);
  CHECK(st.k == 6);
  for (const auto& h : st.found) {
    CHECK(h.k % 9 != 4);
    CHECK(h.k % 9 != 5);
  }
  // 0..3 solved, 4 and 5 skipped.
  CHECK(st.found.size() == 4);
}

TEST_CASE("hits carry the least candidate code") {
  CubesState st;
  cubes_run(st, 9, 1000000);
  for (const auto& h : st.found) {
    for (Nat n = 0; n < h.code; ++n) {
      auto t = decode_k(3, n);
      Int x = zigzag(t[0]), y = zigzag(t[1]), z = zigzag(t[2]);
      CHECK_FALSE(x * x * x + y * y * y + z * z * z == Int(h.k));
    }
  }
}

TEST_CASE("stall reports the frontier and leaves state resumable") {
  CubesState st;
  auto rep = cubes_run(st, 3, 50);  // k=3 needs code 107, so budget 50 stalls
  CHECK(rep.status == CubesStatus::stalled);
  CHECK(st.k == 3);
  CHECK(st.next_code == 50);
  CHECK(st.found.size() == 3);

  // A bigger budget picks up where the stall left off.
  auto rep2 = cubes_run(st, 3, 1000);
  CHECK(rep2.status == CubesStatus::completed);
  CHECK(st.found.back() == CubeHit{3, 1, 1, 1, 107});
}

TEST_CASE("budget one stalls immediately on an unsolved-at-zero target") {
  CubesState st;
  st.k = 1;  // code 0 gives (0,0,0), which does not cube to 1
  auto rep = cubes_run(st, 1, 1);
  CHECK(rep.status == CubesStatus::stalled);
  CHECK(st.k == 1);
  CHECK(st.next_code == 1);
  CHECK(st.found.empty());
}

TEST_CASE("split runs with step limits reproduce the single run") {
  const Nat max_k = 9;
  const Nat budget = 1000000;

  CubesState whole;
  auto rep_whole = cubes_run(whole, max_k, budget);
  CHECK(rep_whole.status == CubesStatus::completed);

  Rng rng(0x5eed0040);
  for (int trial = 0; trial < 5; ++trial) {
    CubesState split;
    Nat total = 0;
    while (true) {
      Nat chunk = testutil::rand_nat(rng, 40) + 1;
      auto rep = cubes_run(split, max_k, budget, chunk);
      total += rep.codes_checked;
      if (rep.status != CubesStatus::paused) {
        CHECK(rep.status == CubesStatus::completed);
        break;
      }
    }
    CHECK(split == whole);
    CHECK(total == rep_whole.codes_checked);
  }
}

TEST_CASE("state text round trip") {
  CubesState st;
  cubes_run(st, 9, 1000000);
  CubesState back = parse_cubes_state(serialize_cubes_state(st));
  CHECK(back == st);

  CubesState fresh;
  CHECK(parse_cubes_state(serialize_cubes_state(fresh)) == fresh);
}

TEST_CASE("state files survive a disk round trip") {
  std::string path = "cubes_state_test.tmp";
  CubesState st;
  cubes_run(st, 3, 1000);
  st.next_code = 12345;
  save_cubes_state(path, st);
  CubesState back = load_cubes_state(path);
  CHECK(back == st);
  std::remove(path.c_str());
}

TEST_CASE("corrupt state files are rejected") {
  CHECK_THROWS_AS(parse_cubes_state(""), std::runtime_error);
  CHECK_THROWS_AS(parse_cubes_state("dio-cubes-state v999\nk 0\nn 0\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_cubes_state("dio-cubes-state v1\nk 0\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_cubes_state("dio-cubes-state v1\nk 0\nn 0\nwat 1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_cubes_state("dio-cubes-state v1\nk 0\nn 0\nsol 1 2 3\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_cubes_state("dio-cubes-state v1\nk x\nn 0\n"), std::runtime_error);
}

TEST_CASE("checkpoint comments and blank lines are tolerated") {
  std::string text =
      "dio-cubes-state v1\n"
      "# hand-written checkpoint\n"
      "\n"
      "k 7\n"
      "n 19\n"
      "sol 6 -1 -1 2 40\n";
  CubesState st = parse_cubes_state(text);
  CHECK(st.k == 7);
  CHECK(st.next_code == 19);
  REQUIRE(st.found.size() == 1);
  CHECK(st.found[0] == CubeHit{6, -1, -1, 2, 40});
}
