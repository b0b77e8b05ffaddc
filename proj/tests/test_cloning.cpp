#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "clonelab/cloning.hpp"
#include "clonelab/io.hpp"
#include "clonelab/rng.hpp"
#include "clonelab/rules.hpp"

using namespace clonelab;

namespace {

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR "/") + name;
}

Election load(const std::string& name) {
  return parse_election(read_text_file(fixture(name)));
}

Election random_election(int m, int n, SplitMix64& g) {
  std::vector<std::string> labels;
  for (int c = 0; c < m; ++c) labels.push_back(std::string(1, char('a' + c)));
  std::vector<std::vector<int>> votes;
  for (int i = 0; i < n; ++i) votes.push_back(random_permutation<int>(m, g));
  return Election(labels, votes);
}

}  // namespace

TEST_CASE("cloning vector validation") {
  auto e = load("p3.election");
  CHECK_THROWS_AS(validate_cloning_vector(e, {1}), MalformedAssignment);
  CHECK_THROWS_AS(validate_cloning_vector(e, {0, 1}), MalformedAssignment);
  CHECK_THROWS_AS(validate_cloning_vector(e, {1, 256}), InvalidSize);
  CHECK_NOTHROW(validate_cloning_vector(e, {255, 1}));
  CHECK(total_clones({3, 1, 2}) == 6);
  CHECK(extra_clones({3, 1, 2}) == 3);
}

TEST_CASE("assignment validation") {
  auto e = load("p3.election");
  CloningVector v{2, 1};
  auto o = identity_assignment(e, v);
  CHECK_NOTHROW(validate_assignment(e, v, o));
  o.perms[0][0] = {0, 0};
  CHECK_THROWS_AS(validate_assignment(e, v, o), MalformedAssignment);
  o.perms[0][0] = {0};
  CHECK_THROWS_AS(validate_assignment(e, v, o), MalformedAssignment);
  OrderingAssignment wrong;
  CHECK_THROWS_AS(validate_assignment(e, v, wrong), MalformedAssignment);
}

TEST_CASE("expansion keeps blocks contiguous and order intact") {
  auto e = load("p3.election");  // 2 of a > c, 1 of c > a
  CloningVector v{2, 1};
  auto o = identity_assignment(e, v);
  o.perms[2][0] = {1, 0};  // the c voter flips a's block
  auto ex = apply_cloning(e, v, o);
  REQUIRE(ex.election.num_candidates() == 3);
  CHECK(ex.election.label(0) == "a#1");
  CHECK(ex.election.label(1) == "a#2");
  CHECK(ex.election.label(2) == "c#1");
  CHECK(ex.family == std::vector<int>{0, 0, 1});
  CHECK(ex.offset == std::vector<int>{0, 2});
  CHECK(ex.election.vote(0) == std::vector<int>{0, 1, 2});
  CHECK(ex.election.vote(2) == std::vector<int>{2, 1, 0});
}

TEST_CASE("assignment space counts") {
  auto e = load("p3.election");
  CHECK(assignment_space(e, {1, 1}) == 1);
  CHECK(assignment_space(e, {2, 1}) == 8);  // (2!)^3 ballots
  auto b5 = load("b5.election");
  CloningVector v(b5.num_candidates(), 1);
  v[b5.candidate("c")] = 2;
  CHECK(assignment_space(b5, v) == 16);
}

TEST_CASE("success mode factory") {
  CHECK(SuccessMode::zero_plus().str() == "0plus");
  CHECK(SuccessMode::one().str() == "1");
  CHECK(SuccessMode::threshold(Rational(3, 4)).str() == "3/4");
  CHECK_THROWS_AS(SuccessMode::threshold(Rational(0)), InvalidThreshold);
  CHECK_THROWS_AS(SuccessMode::threshold(Rational(1)), InvalidThreshold);
  CHECK_THROWS_AS(SuccessMode::threshold(Rational(5, 4)), InvalidThreshold);
}

TEST_CASE("exact check finds the first split that helps") {
  auto e = load("p3.election");
  const int c = e.candidate("c");
  CloningVector v{2, 1};
  auto res = check_success_exact(e, Rule::plurality(), c, v, SuccessModeKind::ZeroPlus, 100);
  REQUIRE(res.outcome == ExactCheckResult::Outcome::Success);
  CHECK(res.assignments_checked == 3);
  REQUIRE(res.witness.has_value());
  // lexicographically least witness: only the second a voter flips its block
  CHECK(res.witness->perms[0][0] == std::vector<std::uint8_t>{0, 1});
  CHECK(res.witness->perms[1][0] == std::vector<std::uint8_t>{1, 0});
  CHECK(res.witness->perms[2][0] == std::vector<std::uint8_t>{0, 1});
  CHECK(cloning_succeeds(e, Rule::plurality(), c, v, *res.witness));
}

TEST_CASE("exact check in the all-orderings mode") {
  auto e = load("p3.election");
  const int c = e.candidate("c");
  CloningVector v{2, 1};
  auto res = check_success_exact(e, Rule::plurality(), c, v, SuccessModeKind::One, 100);
  REQUIRE(res.outcome == ExactCheckResult::Outcome::Failure);
  CHECK(res.assignments_checked == 1);  // the identity assignment already fails
  REQUIRE(res.counterexample.has_value());
  CHECK_FALSE(cloning_succeeds(e, Rule::plurality(), c, v, *res.counterexample));

  auto v5 = load("veto5.election");
  const int cv = v5.candidate("c");
  CloningVector shield(v5.num_candidates(), 1);
  shield[cv] = 2;
  auto all = check_success_exact(v5, Rule::veto(), cv, shield, SuccessModeKind::One,
                                 1'000'000);
  CHECK(all.outcome == ExactCheckResult::Outcome::Success);
  CHECK(all.assignments_checked == 32);  // (2!)^5
  CHECK(all.note == "every ordering assignment succeeds");
}

TEST_CASE("exact check edge cases") {
  auto e = load("p3.election");
  const int a = e.candidate("a");
  CloningVector ones{1, 1};
  auto already = check_success_exact(e, Rule::plurality(), a, ones,
                                     SuccessModeKind::ZeroPlus, 100);
  CHECK(already.outcome == ExactCheckResult::Outcome::NotApplicable);

  const int c = e.candidate("c");
  auto trivial = check_success_exact(e, Rule::plurality(), c, ones,
                                     SuccessModeKind::ZeroPlus, 100);
  CHECK(trivial.outcome == ExactCheckResult::Outcome::Failure);
  CHECK(trivial.assignments_checked == 1);

  CHECK_THROWS_AS(check_success_exact(e, Rule::plurality(), c, {2, 1},
                                      SuccessModeKind::ZeroPlus, 4),
                  SearchSpaceTooLarge);
  CHECK_THROWS_AS(check_success_exact(e, Rule::plurality(), c, {2, 1},
                                      SuccessModeKind::Threshold, 100),
                  Unsupported);
}

TEST_CASE("exact success counting") {
  auto e = load("p3.election");
  const int c = e.candidate("c");
  auto sc = exact_success_count(e, Rule::plurality(), c, {2, 1}, 100);
  CHECK(sc.total == 8);
  CHECK(sc.successes == 4);  // c wins exactly when the two a voters disagree
}

TEST_CASE("sampled estimates are deterministic and consistent") {
  auto e = load("p3.election");
  const int c = e.candidate("c");
  CloningVector v{2, 1};
  auto r1 = estimate_success_probability(e, Rule::plurality(), c, v, 400, 7);
  auto r2 = estimate_success_probability(e, Rule::plurality(), c, v, 400, 7);
  CHECK(r1.successes == r2.successes);
  CHECK(r1.samples == 400);
  CHECK(r1.estimate == Rational(static_cast<std::int64_t>(r1.successes), 400));
  // the true rate is 1/2; a 400-sample draw stays well inside (0, 1)
  CHECK(r1.successes > 100);
  CHECK(r1.successes < 300);
  CHECK_THROWS_AS(estimate_success_probability(e, Rule::plurality(), c, v, 0, 1),
                  InvalidSize);
}

TEST_CASE("an all-orderings success implies a favorable-ordering success") {
  SplitMix64 g(41);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 2 + static_cast<int>(bounded(g, 2));
    int n = 1 + static_cast<int>(bounded(g, 3));
    auto e = random_election(m, n, g);
    CloningVector v(m, 1);
    v[bounded(g, m)] = 2;
    for (Rule r : {Rule::plurality(), Rule::borda(), Rule::maximin()}) {
      for (int c = 0; c < m; ++c) {
        if (is_winner(e, r, c)) continue;
        auto one = check_success_exact(e, r, c, v, SuccessModeKind::One, 100000);
        if (one.outcome != ExactCheckResult::Outcome::Success) continue;
        auto zp = check_success_exact(e, r, c, v, SuccessModeKind::ZeroPlus, 100000);
        CHECK(zp.outcome == ExactCheckResult::Outcome::Success);
      }
    }
  }
}

TEST_CASE("success counts sandwich the two exact modes") {
  SplitMix64 g(43);
  for (int trial = 0; trial < 25; ++trial) {
    int m = 2 + static_cast<int>(bounded(g, 2));
    int n = 2 + static_cast<int>(bounded(g, 2));
    auto e = random_election(m, n, g);
    CloningVector v(m, 1);
    v[bounded(g, m)] = 2 + static_cast<int>(bounded(g, 2));
    int c = static_cast<int>(bounded(g, m));
    if (is_winner(e, Rule::veto(), c)) continue;
    auto count = exact_success_count(e, Rule::veto(), c, v, 1'000'000);
    auto zp = check_success_exact(e, Rule::veto(), c, v, SuccessModeKind::ZeroPlus,
                                  1'000'000);
    auto one = check_success_exact(e, Rule::veto(), c, v, SuccessModeKind::One,
                                   1'000'000);
    CHECK((count.successes > 0) ==
          (zp.outcome == ExactCheckResult::Outcome::Success));
    CHECK((count.successes == count.total) ==
          (one.outcome == ExactCheckResult::Outcome::Success));
  }
}
