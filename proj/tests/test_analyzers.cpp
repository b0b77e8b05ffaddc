#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "clonelab/analyzers.hpp"
#include "clonelab/io.hpp"
#include "clonelab/rng.hpp"

using namespace clonelab;

namespace {

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR "/") + name;
}

Election load(const std::string& name) {
  return parse_election(read_text_file(fixture(name)));
}

Election load_spec(const std::string& name) {
  return mcgarvey_realize(parse_majority_spec(read_text_file(fixture(name))));
}

Election random_election(int m, int n, SplitMix64& g) {
  std::vector<std::string> labels;
  for (int c = 0; c < m; ++c) labels.push_back(std::string(1, char('a' + c)));
  std::vector<std::vector<int>> votes;
  for (int i = 0; i < n; ++i) votes.push_back(random_permutation<int>(m, g));
  return Election(labels, votes);
}

const WitnessCert& witness_of(const Strategy& st) {
  REQUIRE(certificate_kind(st.certificate) == "witness");
  return std::get<WitnessCert>(st.certificate);
}

}  // namespace

TEST_CASE("plurality favorable-ordering analysis") {
  auto e = load("tideman.election");
  const int c = e.candidate("c");
  auto rep = plurality_0plus(e, c);
  CHECK(rep.verdict == Verdict::Manipulable);
  CHECK(rep.derived.at("s") == Rational(13));
  CHECK(rep.derived.at("k_rival") == Rational(2));
  REQUIRE(rep.strategies.size() == 1);
  const auto& st = rep.strategies[0];
  CHECK(st.label == "split-top");
  CHECK(st.vector == CloningVector{1, 2});
  CHECK(cloning_succeeds(e, Rule::plurality(), c, st.vector, witness_of(st).assignment));

  CHECK(plurality_0plus(e, e.candidate("rival")).verdict == Verdict::AlreadyWinner);
  CHECK(plurality_one(e, c).verdict == Verdict::NotManipulable);

  Election hopeless({"a", "c"}, {{0, 1}, {0, 1}});
  CHECK(plurality_0plus(hopeless, 1).verdict == Verdict::NotManipulable);
}

TEST_CASE("plurality threshold analysis") {
  auto e = load("p3.election");
  const int c = e.candidate("c");
  auto rep = plurality_q(e, c, Rational(1, 2));
  CHECK(rep.verdict == Verdict::Manipulable);
  CHECK(rep.derived.at("s") == Rational(1));
  CHECK(rep.derived.at("spread_factor") == Rational(2));
  CHECK(rep.derived.at("k_a") == Rational(2));
  REQUIRE(rep.strategies.size() == 1);
  const auto& st = rep.strategies[0];
  CHECK(st.label == "plurality-spread");
  CHECK(st.vector == CloningVector{2, 1});
  REQUIRE(certificate_kind(st.certificate) == "sampled-evidence");
  auto cert = std::get<SampledEvidenceCert>(st.certificate);
  CHECK(cert.samples == 200);
  CHECK(cert.seed == 1);
  // the true success rate is exactly 1/2
  CHECK(cert.successes > 60);
  CHECK(cert.successes < 140);
}

TEST_CASE("veto analysis in both modes") {
  auto e = load("veto5.election");
  const int c = e.candidate("c");
  auto zp = veto_strategy(e, c, SuccessMode::zero_plus());
  CHECK(zp.verdict == Verdict::Manipulable);
  CHECK(zp.derived.at("k") == Rational(2));
  CHECK(zp.derived.at("ell") == Rational(4));
  REQUIRE(zp.strategies.size() == 1);
  CHECK(zp.strategies[0].label == "veto-shield");
  CHECK(zp.strategies[0].vector == CloningVector{1, 1, 2});
  witness_of(zp.strategies[0]);

  auto one = veto_strategy(e, c, SuccessMode::one());
  CHECK(one.verdict == Verdict::Manipulable);
  CHECK(one.derived.at("k_prime") == Rational(3));
  CHECK(one.derived.at("ell_prime") == Rational(1));
  CHECK(one.derived.at("r") == Rational(1));
  CHECK(one.derived.at("clones_total") == Rational(2));
  REQUIRE(one.strategies.size() == 1);
  CHECK(one.strategies[0].label == "veto-flood");
  CHECK(one.strategies[0].vector == CloningVector{1, 1, 2});
  CHECK(certificate_kind(one.strategies[0].certificate) == "all-orderings");

  CHECK(veto_strategy(e, e.candidate("a"), SuccessMode::one()).verdict ==
        Verdict::AlreadyWinner);
}

TEST_CASE("veto flood when a rival is never vetoed") {
  Election e({"a", "c"}, {{0, 1}, {0, 1}, {0, 1}});
  auto rep = veto_strategy(e, 1, SuccessMode::one());
  CHECK(rep.verdict == Verdict::Manipulable);
  CHECK(rep.derived.at("clones_total") == Rational(4));
  CHECK(rep.derived.count("r") == 0);
  CHECK(rep.strategies[0].vector == CloningVector{1, 4});
  // the sizing is tight: one clone fewer admits a losing ordering
  auto good = check_success_exact(e, Rule::veto(), 1, {1, 4}, SuccessModeKind::One,
                                  1'000'000);
  CHECK(good.outcome == ExactCheckResult::Outcome::Success);
  auto bad = check_success_exact(e, Rule::veto(), 1, {1, 3}, SuccessModeKind::One,
                                 1'000'000);
  CHECK(bad.outcome == ExactCheckResult::Outcome::Failure);
}

TEST_CASE("borda favorable-ordering stack") {
  auto e = load("b5.election");
  const int c = e.candidate("c");
  auto rep = borda_0plus_strategy(e, c);
  CHECK(rep.verdict == Verdict::Manipulable);
  CHECK(rep.derived.at("s_a") == Rational(1));
  CHECK(rep.derived.at("n_a") == Rational(3));
  CHECK(rep.derived.at("extra_clones") == Rational(1));
  CHECK(rep.derived.at("total_clones") == Rational(2));
  REQUIRE(rep.strategies.size() == 1);
  CHECK(rep.strategies[0].label == "borda-stack");
  CHECK(rep.strategies[0].vector == CloningVector{2, 1, 1, 1, 1});
  witness_of(rep.strategies[0]);

  // a tie rescued by the stack counts as a win
  auto e54 = load("example54.election");
  auto tie = borda_0plus_strategy(e54, e54.candidate("c"));
  CHECK(tie.verdict == Verdict::Manipulable);
  CHECK(tie.derived.at("total_clones") == Rational(2));

  Election hopeless({"a", "c"}, {{0, 1}, {0, 1}});
  CHECK(borda_0plus_strategy(hopeless, 1).verdict == Verdict::NotManipulable);
}

TEST_CASE("borda clone-the-preferred analysis, even electorate") {
  auto b5 = load("b5.election");
  const int c = b5.candidate("c");
  auto rep = borda_clone_c_analysis(b5, c);
  CHECK(rep.verdict == Verdict::Manipulable);
  CHECK(rep.derived.at("r_plus") == Rational(1));
  CHECK(rep.derived.at("clones_total") == Rational(2));
  REQUIRE(rep.strategies.size() == 1);
  CHECK(rep.strategies[0].label == "borda-clone-preferred");
  CHECK(rep.strategies[0].vector == CloningVector{2, 1, 1, 1, 1});
  CHECK(certificate_kind(rep.strategies[0].certificate) == "all-orderings");
  auto all = check_success_exact(b5, Rule::borda(), c, {2, 1, 1, 1, 1},
                                 SuccessModeKind::One, 100);
  CHECK(all.outcome == ExactCheckResult::Outcome::Success);
  CHECK(all.assignments_checked == 16);

  auto e54 = load("example54.election");
  auto no = borda_clone_c_analysis(e54, e54.candidate("c"));
  CHECK(no.verdict == Verdict::NotManipulable);
  CHECK(no.derived.at("r_plus").is_infinite());
}

TEST_CASE("borda clone-the-preferred analysis, odd electorate") {
  Election fails({"a", "b", "c"}, {{0, 2, 1}, {0, 2, 1}, {2, 0, 1}});
  auto nf = borda_clone_c_analysis(fails, 2);
  CHECK(nf.verdict == Verdict::NecessaryConditionFails);
  CHECK(nf.derived.count("r_hat_plus") == 1);

  Election open({"a", "b", "c"},
                {{0, 1, 2}, {0, 1, 2}, {2, 0, 1}, {2, 0, 1}, {2, 0, 1}});
  REQUIRE_FALSE(is_winner(open, Rule::borda(), 2));
  auto oc = borda_clone_c_analysis(open, 2);
  CHECK(oc.verdict == Verdict::Inconclusive);
  CHECK(oc.derived.at("r_hat_plus") == Rational(1));
}

TEST_CASE("borda clone-the-preferred verdicts split by electorate parity") {
  SplitMix64 g(59);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 3 + static_cast<int>(bounded(g, 2));
    int n = 3 + static_cast<int>(bounded(g, 2));
    auto e = random_election(m, n, g);
    for (int c = 0; c < m; ++c) {
      auto rep = borda_clone_c_analysis(e, c);
      if (rep.verdict == Verdict::AlreadyWinner) continue;
      if (n % 2 == 1) {
        bool odd_ok = rep.verdict == Verdict::NecessaryConditionFails ||
                      rep.verdict == Verdict::Inconclusive;
        CHECK(odd_ok);
      } else {
        bool even_ok = rep.verdict == Verdict::Manipulable ||
                       rep.verdict == Verdict::NotManipulable;
        CHECK(even_ok);
        long long total =
            rep.verdict == Verdict::Manipulable
                ? rep.derived.at("clones_total").ceil()
                : 3;
        CloningVector v(m, 1);
        v[c] = static_cast<int>(std::min<long long>(total, 4));
        if (assignment_space(e, v, 25000) > 25000) continue;
        auto chk = check_success_exact(e, Rule::borda(), c, v,
                                       SuccessModeKind::One, 25000);
        if (rep.verdict == Verdict::Manipulable && total <= 4)
          CHECK(chk.outcome == ExactCheckResult::Outcome::Success);
        if (rep.verdict == Verdict::NotManipulable)
          CHECK(chk.outcome == ExactCheckResult::Outcome::Failure);
      }
    }
  }
}

TEST_CASE("adversarial clone orders hit the worst-case gain exactly") {
  auto gains = [](int n, int k) {
    auto perms = borda_adversarial_ordering(n, k);
    REQUIRE(static_cast<int>(perms.size()) == n);
    for (const auto& p : perms) {
      REQUIRE(static_cast<int>(p.size()) == k);
      std::vector<char> seen(k, 0);
      for (auto s : p) {
        REQUIRE(s < k);
        REQUIRE(!seen[s]);
        seen[s] = 1;
      }
    }
    Election e(std::vector<std::string>{"x"},
               std::vector<std::vector<int>>(n, std::vector<int>{0}));
    CloningVector v{k};
    auto o = identity_assignment(e, v);
    for (int i = 0; i < n; ++i)
      o.perms[i][0].assign(perms[i].begin(), perms[i].end());
    return scores(apply_cloning(e, v, o).election, Rule::borda());
  };

  for (int n = 2; n <= 7; ++n) {
    if (n % 2 == 1 && n < 3) continue;
    for (int k = 1; k <= 5; ++k) {
      auto sc = gains(n, k);
      long long even_gain = static_cast<long long>(n) * (k - 1) / 2;
      if (n % 2 == 0 || k % 2 == 1) {
        for (int s = 0; s < k; ++s) CHECK(sc[s] == even_gain);
      } else {
        long long high = (static_cast<long long>(n) * (k - 1) + 1) / 2;
        for (int s = 0; s + 1 < k; ++s) CHECK(sc[s] == high);
        CHECK(sc[k - 1] == static_cast<long long>(k - 1) * (n - 1) / 2);
      }
    }
  }

  auto frozen = borda_adversarial_ordering(3, 3);
  CHECK(frozen[0] == std::vector<std::uint8_t>{2, 0, 1});
  CHECK(frozen[1] == std::vector<std::uint8_t>{1, 2, 0});
  CHECK(frozen[2] == std::vector<std::uint8_t>{0, 1, 2});

  CHECK_THROWS_AS(borda_adversarial_ordering(1, 3), Unsupported);
  CHECK_THROWS_AS(borda_adversarial_ordering(0, 3), InvalidSize);
  CHECK_THROWS_AS(borda_adversarial_ordering(4, 0), InvalidSize);
}

TEST_CASE("approval saturation") {
  auto e = load("camera.election");
  const int s = e.candidate("S");
  auto rep = kapproval_saturate(e, s, 2);
  CHECK(rep.verdict == Verdict::Manipulable);
  CHECK(rep.derived.at("top_votes") == Rational(6));
  CHECK(rep.derived.at("flood") == Rational(20));
  REQUIRE(rep.strategies.size() == 1);
  CHECK(rep.strategies[0].label == "approval-saturate");
  CHECK(rep.strategies[0].vector == CloningVector{1, 20, 20});
  CHECK(cloning_succeeds(e, Rule::k_approval(2), s, rep.strategies[0].vector,
                         witness_of(rep.strategies[0]).assignment));

  // a window as wide as the roster approves everybody
  CHECK(kapproval_saturate(e, s, 3).verdict == Verdict::AlreadyWinner);

  Election unranked({"a", "c"}, {{0, 1}});
  CHECK(kapproval_saturate(unranked, 1, 1).verdict == Verdict::Inconclusive);
}

TEST_CASE("runoff strategies for a plurality leader") {
  auto e = load("example46.election");
  const int c = e.candidate("c");
  auto rep = runoff_strategy(e, c, SuccessMode::zero_plus());
  CHECK(rep.verdict == Verdict::Manipulable);
  CHECK(rep.derived.at("s") == Rational(8));
  REQUIRE(rep.strategies.size() == 1);
  CHECK(rep.strategies[0].label == "runoff-split-preferred");
  CHECK(rep.strategies[0].vector == CloningVector{1, 1, 2, 1});
  CHECK(cloning_succeeds(e, Rule::runoff(), c, rep.strategies[0].vector,
                         witness_of(rep.strategies[0]).assignment));
}

TEST_CASE("runoff strategies through a beatable partner") {
  auto e = load("r5.election");
  const int c = e.candidate("c");
  auto rep = runoff_strategy(e, c, SuccessMode::zero_plus());
  CHECK(rep.verdict == Verdict::Manipulable);
  CHECK(rep.derived.at("s") == Rational(1));
  REQUIRE(rep.strategies.size() == 2);
  CHECK(rep.strategies[0].label == "runoff-pair-a");
  CHECK(rep.strategies[0].vector == CloningVector{1, 1, 2});
  CHECK(rep.strategies[1].label == "runoff-pair-w");
  CHECK(rep.strategies[1].vector == CloningVector{1, 2, 1});
  for (const auto& st : rep.strategies)
    CHECK(cloning_succeeds(e, Rule::runoff(), c, st.vector,
                           witness_of(st).assignment));

  CHECK(runoff_strategy(e, c, SuccessMode::one()).verdict ==
        Verdict::NotManipulable);
  CHECK(runoff_strategy(e, e.candidate("a"), SuccessMode::zero_plus()).verdict ==
        Verdict::AlreadyWinner);
}

TEST_CASE("runoff threshold spread") {
  auto e = load("r5.election");
  const int c = e.candidate("c");
  auto rep = runoff_strategy(e, c, SuccessMode::threshold(Rational(1, 2)));
  CHECK(rep.verdict == Verdict::Manipulable);
  CHECK(rep.derived.at("spread_factor") == Rational(6));
  REQUIRE(rep.strategies.size() == 1);
  CHECK(rep.strategies[0].label == "runoff-spread");
  CHECK(rep.strategies[0].vector == CloningVector{1, 6, 6});
  REQUIRE(certificate_kind(rep.strategies[0].certificate) == "sampled-evidence");
  auto cert = std::get<SampledEvidenceCert>(rep.strategies[0].certificate);
  CHECK(cert.samples == 200);
  CHECK(2 * cert.successes >= cert.samples);
}

TEST_CASE("runoff hopeless cases") {
  // no top vote at all
  Election none({"a", "b", "c"}, {{0, 1, 2}, {1, 0, 2}});
  CHECK(runoff_strategy(none, 2, SuccessMode::zero_plus()).verdict ==
        Verdict::NotManipulable);
  // one top vote and every supported rival wins the head-to-head
  Election lone({"a", "c"}, {{0, 1}, {0, 1}, {1, 0}});
  CHECK(runoff_strategy(lone, 1, SuccessMode::zero_plus()).verdict ==
        Verdict::NotManipulable);
}

TEST_CASE("maximin rotation strategy") {
  auto e = load("m5.election");
  const int c = e.candidate("c");
  auto rep = maximin_strategy(e, c);
  CHECK(rep.verdict == Verdict::Manipulable);
  CHECK(rep.derived.at("s") == Rational(2));
  CHECK(rep.derived.at("clones_per_rival") == Rational(3));
  REQUIRE(rep.strategies.size() == 1);
  CHECK(rep.strategies[0].label == "maximin-cyclic");
  CHECK(rep.strategies[0].vector == CloningVector{3, 1, 1});
  CHECK(cloning_succeeds(e, Rule::maximin(), c, rep.strategies[0].vector,
                         witness_of(rep.strategies[0]).assignment));

  Election dominated({"a", "c"}, {{0, 1}, {0, 1}});
  CHECK(maximin_strategy(dominated, 1).verdict == Verdict::NotManipulable);
  CHECK(maximin_one(e, c).verdict == Verdict::NotManipulable);
  CHECK(maximin_one(e, e.candidate("a")).verdict == Verdict::AlreadyWinner);
}

TEST_CASE("copeland with an odd electorate") {
  auto e = load_spec("t5.spec");
  REQUIRE(e.num_voters() == 21);
  const int c = e.candidate("c");
  auto rep = copeland_strategy(e, c);
  CHECK(rep.verdict == Verdict::Manipulable);
  CHECK(rep.derived.at("clones_preferred") == Rational(11));
  CHECK(rep.derived.at("clones_downset") == Rational(21));
  REQUIRE(rep.strategies.size() == 1);
  const auto& st = rep.strategies[0];
  CHECK(st.label == "copeland-uncovered");
  CHECK(st.certifies.kind == SuccessModeKind::One);
  CHECK(certificate_kind(st.certificate) == "all-orderings");
  CloningVector expect(e.num_candidates(), 1);
  expect[c] = 11;
  expect[e.candidate("p")] = 21;
  CHECK(st.vector == expect);
  // random orderings always elect a clone of c
  auto est = estimate_success_probability(e, Rule::copeland(), c, st.vector, 50, 3);
  CHECK(est.successes == 50);

  CHECK(copeland_strategy(e, e.candidate("p")).verdict == Verdict::AlreadyWinner);
}

TEST_CASE("copeland with an even electorate") {
  auto e511 = load_spec("example511.spec");
  REQUIRE(e511.num_voters() == 12);
  auto no = copeland_strategy(e511, e511.candidate("c"));
  CHECK(no.verdict == Verdict::NotManipulable);
  CHECK(no.derived.at("s_u") == Rational(3));
  CHECK(no.derived.at("s_w") == Rational(3));

  Election covered({"a", "c"}, {{0, 1}, {0, 1}});
  auto cov = copeland_strategy(covered, 1);
  CHECK(cov.verdict == Verdict::NotManipulable);
  CHECK(cov.condition.find("covers") != std::string::npos);

  MajoritySpec spec;
  spec.labels = {"c", "a", "b"};
  spec.beats = {{1, 0}, {2, 1}};  // a beats c, b beats a, the rest tie
  spec.parity = Parity::Even;
  auto ef = mcgarvey_realize(spec);
  REQUIRE(ef.num_voters() == 4);
  auto yes = copeland_strategy(ef, 0);
  CHECK(yes.verdict == Verdict::Manipulable);
  CHECK(yes.derived.at("s_a") == Rational(1));
  CHECK(yes.derived.at("q_b") == Rational(1));
  REQUIRE(yes.strategies.size() == 1);
  CHECK(yes.strategies[0].label == "copeland-balanced");
  CHECK(yes.strategies[0].vector == CloningVector{6, 1, 2});
  CHECK(cloning_succeeds(ef, Rule::copeland(), 0, yes.strategies[0].vector,
                         witness_of(yes.strategies[0]).assignment));

  CopelandSearch tiny;
  tiny.max_nodes = 1;
  CHECK(copeland_strategy(ef, 0, tiny).verdict == Verdict::Inconclusive);
}

TEST_CASE("dispatcher composites") {
  auto b5 = load("b5.election");
  auto bt = analyze(b5, Rule::borda(), b5.candidate("c"),
                    SuccessMode::threshold(Rational(1, 2)));
  CHECK(bt.verdict == Verdict::Manipulable);
  REQUIRE(bt.strategies.size() == 1);
  CHECK(bt.strategies[0].certifies.kind == SuccessModeKind::One);

  // favorable orderings exist but the all-orderings route is closed
  auto e54 = load("example54.election");
  auto open = analyze(e54, Rule::borda(), e54.candidate("c"),
                      SuccessMode::threshold(Rational(1, 2)));
  CHECK(open.verdict == Verdict::Inconclusive);

  Election hopeless({"a", "c"}, {{0, 1}, {0, 1}});
  CHECK(analyze(hopeless, Rule::borda(), 1, SuccessMode::threshold(Rational(1, 2)))
            .verdict == Verdict::NotManipulable);

  auto m5 = load("m5.election");
  CHECK(analyze(m5, Rule::maximin(), m5.candidate("c"),
                SuccessMode::threshold(Rational(1, 2)))
            .verdict == Verdict::Inconclusive);
  CHECK(analyze(hopeless, Rule::maximin(), 1, SuccessMode::threshold(Rational(1, 2)))
            .verdict == Verdict::NotManipulable);

  auto camera = load("camera.election");
  auto kap = analyze(camera, Rule::k_approval(2), camera.candidate("S"),
                     SuccessMode::one());
  CHECK(kap.verdict == Verdict::Inconclusive);

  auto v5 = load("veto5.election");
  auto vt = analyze(v5, Rule::veto(), v5.candidate("c"),
                    SuccessMode::threshold(Rational(9, 10)));
  CHECK(vt.verdict == Verdict::Manipulable);
  CHECK(vt.strategies[0].certifies.kind == SuccessModeKind::One);
}

TEST_CASE("dispatcher folds even-electorate copeland guarantees") {
  MajoritySpec spec;
  spec.labels = {"c", "a", "b"};
  spec.beats = {{1, 0}, {2, 1}};
  spec.parity = Parity::Even;
  auto ef = mcgarvey_realize(spec);
  CHECK(analyze(ef, Rule::copeland(), 0, SuccessMode::zero_plus()).verdict ==
        Verdict::Manipulable);
  CHECK(analyze(ef, Rule::copeland(), 0, SuccessMode::one()).verdict ==
        Verdict::Inconclusive);

  auto t5 = load_spec("t5.spec");
  auto odd = analyze(t5, Rule::copeland(), t5.candidate("c"), SuccessMode::one());
  CHECK(odd.verdict == Verdict::Manipulable);
  CHECK(odd.mode.kind == SuccessModeKind::One);

  auto e511 = load_spec("example511.spec");
  CHECK(analyze(e511, Rule::copeland(), e511.candidate("c"),
                SuccessMode::threshold(Rational(1, 3)))
            .verdict == Verdict::NotManipulable);
}

TEST_CASE("analyzer input validation") {
  auto e = load("p3.election");
  CHECK_THROWS_AS(plurality_0plus(e, 5), UnknownCandidate);
  CHECK_THROWS_AS(analyze(e, Rule::maximin(), -1, SuccessMode::zero_plus()),
                  UnknownCandidate);
}
