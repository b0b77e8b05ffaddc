#include <catch2/catch_amalgamated.hpp>

#include "clonelab/election.hpp"
#include "clonelab/io.hpp"

using namespace clonelab;

namespace {

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR "/") + name;
}

Election load(const std::string& name) {
  return parse_election(read_text_file(fixture(name)));
}

}  // namespace

TEST_CASE("election accessors") {
  Election e({"a", "b"}, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(e.num_candidates() == 2);
  CHECK(e.num_voters() == 3);
  CHECK(e.label(0) == "a");
  CHECK(e.vote(1) == std::vector<int>{1, 0});
  CHECK(e.candidate("b") == 1);
}

TEST_CASE("election rejects malformed input") {
  CHECK_THROWS_AS(Election({}, {{}}), InvalidElection);
  CHECK_THROWS_AS(Election({"a"}, {}), InvalidElection);
  CHECK_THROWS_AS(Election({"a", "a"}, {{0, 1}}), InvalidElection);
  CHECK_THROWS_AS(Election({"a", "b,c"}, {{0, 1}}), InvalidElection);
  CHECK_THROWS_AS(Election({"a", "b"}, {{0}}), InvalidElection);
  CHECK_THROWS_AS(Election({"a", "b"}, {{0, 0}}), InvalidElection);
  CHECK_THROWS_AS(Election({"a", "b"}, {{0, 2}}), InvalidElection);
}

TEST_CASE("label charset") {
  CHECK(valid_label("John Smith"));
  CHECK(valid_label("x_1"));
  CHECK_FALSE(valid_label(""));
  CHECK_FALSE(valid_label("a>b"));
  CHECK_FALSE(valid_label("a:b"));
  CHECK_FALSE(valid_label(" a"));
  CHECK_FALSE(valid_label("a "));
}

TEST_CASE("position matrix") {
  Election e({"a", "b", "c"}, {{2, 0, 1}});
  auto pos = position_matrix(e);
  CHECK(pos[0][2] == 0);
  CHECK(pos[0][0] == 1);
  CHECK(pos[0][1] == 2);
}

TEST_CASE("pairwise matrix on a fixed profile") {
  auto e = load("m5.election");
  auto w = pairwise_matrix(e);
  const int a = e.candidate("a"), b = e.candidate("b"), c = e.candidate("c");
  CHECK(w[a][b] == 3);
  CHECK(w[b][a] == 2);
  CHECK(w[a][c] == 3);
  CHECK(w[c][a] == 2);
  CHECK(w[c][b] == 4);
  CHECK(w[b][c] == 1);
  for (int x = 0; x < 3; ++x) CHECK(w[x][x] == 0);
}

TEST_CASE("pareto domination") {
  Election dominated({"a", "c"}, {{0, 1}, {0, 1}});
  CHECK(is_pareto_undominated(dominated, 0));
  CHECK_FALSE(is_pareto_undominated(dominated, 1));
  auto e = load("m5.election");
  for (int x = 0; x < e.num_candidates(); ++x)
    CHECK(is_pareto_undominated(e, x));
}

TEST_CASE("condorcet status") {
  auto e = load("example46.election");
  auto st = condorcet_status(e);
  REQUIRE(st.winner.has_value());
  REQUIRE(st.loser.has_value());
  CHECK(e.label(*st.winner) == "a");
  CHECK(e.label(*st.loser) == "c");

  Election lone({"a"}, {{0}});
  auto solo = condorcet_status(lone);
  CHECK(solo.winner == 0);

  Election tie({"a", "b"}, {{0, 1}, {1, 0}});
  auto none = condorcet_status(tie);
  CHECK_FALSE(none.winner.has_value());
  CHECK_FALSE(none.loser.has_value());
}
