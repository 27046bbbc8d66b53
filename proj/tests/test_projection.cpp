#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "binsub/combinatorics.hpp"
#include "binsub/projection.hpp"
#include "oracles.hpp"

using namespace binsub;

TEST_CASE("subset unranking matches sequential enumeration") {
  for (auto [m, k] : {std::pair{7, 3}, {9, 4}, {6, 6}, {10, 2}}) {
    std::vector<int> subset(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<size_t>(i)] = i;
    std::uint64_t idx = 0;
    do {
      CHECK(unrank_subset(idx, m, k) == subset);
      ++idx;
    } while (next_subset(subset, m));
    CHECK(idx == binomial(m, k));
  }
}

namespace {

SubgroupModel separation_model() {
  return make_model(validate_spec({{7, 11, 13, 14}}), false);
}

}  // namespace

TEST_CASE("ktuple_status on pairs and triples") {
  SubgroupModel b018 = builtin_b0(18, 2);
  std::vector<int> pair{0, 1};
  KtupleStatus st = ktuple_status(b018, pair);
  CHECK(st.per_letter.size() == 2);
  CHECK(st.per_letter[0].is_onto());
  CHECK(st.combined.is_onto());

  std::vector<int> triple{0, 1, 2};
  for (int m : {3, 8, 18}) {
    KtupleStatus t = ktuple_status(builtin_b0(m, 2), triple);
    CHECK(t.per_letter[0] == LatticeImageStatus::infinite(2));
    CHECK(t.combined.kind == LatticeImageStatus::Kind::InfiniteIndex);
  }
}

TEST_CASE("ktuple_status on the diagonal family quadruple") {
  // factors 2..5 of the diagonal model have block rank 3
  std::vector<int> quad{1, 2, 3, 4};
  for (int m : {5, 9, 18}) {
    KtupleStatus t = ktuple_status(builtin_b1_diagonal(m, 2), quad);
    CHECK(t.per_letter[0] == LatticeImageStatus::infinite(3));
    CHECK(t.per_letter[1] == LatticeImageStatus::infinite(3));
  }
}

TEST_CASE("surjection profile of b0(8)") {
  SurjectionProfile p = surjection_profile(builtin_b0(8, 2));
  CHECK(p.at_k(2).onto_all);
  CHECK(p.at_k(2).virtual_all);
  CHECK_FALSE(p.at_k(2).witness.has_value());
  CHECK_FALSE(p.at_k(3).onto_all);
  CHECK_FALSE(p.at_k(3).virtual_all);
  REQUIRE(p.at_k(3).witness.has_value());
  CHECK(p.at_k(3).witness->subset == std::vector<int>{0, 1, 2});
  CHECK(p.at_k(3).witness->letter == 0);
  CHECK(p.at_k(3).witness->status.kind ==
        LatticeImageStatus::Kind::InfiniteIndex);
}

TEST_CASE("surjection profile of the full diagonal model") {
  SurjectionProfile p = surjection_profile(builtin_b1_diagonal(4, 1));
  for (int k = 2; k <= 4; ++k) {
    CHECK(p.at_k(k).onto_all);
    CHECK(p.at_k(k).virtual_all);
  }
}

TEST_CASE("surjection profile separates onto from virtual") {
  SurjectionProfile p = surjection_profile(separation_model());
  CHECK(p.at_k(2).onto_all);
  CHECK(p.at_k(3).onto_all);
  CHECK_FALSE(p.at_k(4).onto_all);
  CHECK(p.at_k(4).virtual_all);
  REQUIRE(p.at_k(4).witness.has_value());
  CHECK(p.at_k(4).witness->status.kind ==
        LatticeImageStatus::Kind::FiniteIndex);
  CHECK(p.at_k(4).witness->status.index == 3);
}

TEST_CASE("wfp_max") {
  for (int m : {5, 8, 12}) {
    CHECK(wfp_max(surjection_profile(builtin_b0(m, 2))) == WfpLevel{false, 2});
    CHECK(wfp_max(surjection_profile(builtin_b1_diagonal(m, 2))) ==
          WfpLevel{false, 3});
  }
  CHECK(wfp_max(surjection_profile(builtin_b1_diagonal(4, 1))).all);
  CHECK(wfp_max(surjection_profile(builtin_b1_diagonal(3, 1))).all);
  // b0(m) for m in {3,4}: still stops at pairs
  CHECK(wfp_max(surjection_profile(builtin_b0(3, 2))) == WfpLevel{false, 2});
}

TEST_CASE("conilpotency upper bound") {
  for (int m : {3, 6, 10, 18}) {
    SurjectionProfile p0 = surjection_profile(builtin_b0(m, 2));
    CHECK(conilpotency_upper(p0, m) == m - 1);
  }
  SurjectionProfile p6 = surjection_profile(builtin_b1_diagonal(6, 2));
  CHECK(conilpotency_upper(p6, 6) == 3);  // ceil(5/2)
  SurjectionProfile p9 = surjection_profile(builtin_b1_diagonal(9, 2));
  CHECK(conilpotency_upper(p9, 9) == 4);  // ceil(8/2)
  // a model onto at k = m gets the trivial bound
  SurjectionProfile p4 = surjection_profile(builtin_b1_diagonal(4, 1));
  CHECK(conilpotency_upper(p4, 4) == 1);
}

TEST_CASE("generator count and H1 rank") {
  SubgroupModel b0 = builtin_b0(18, 2);
  CHECK(generator_count(b0) == 10);
  CHECK(h1_rank_lower_bound(b0) == 10);

  SubgroupModel b1 = builtin_b1_diagonal(18, 2);
  CHECK(generator_count(b1) == 12);
  CHECK(h1_rank_lower_bound(b1) == 12);

  SubgroupModel tiny = make_model(validate_spec({{1, 3}}), false);
  CHECK(generator_count(tiny) == 2);
  CHECK(h1_rank_lower_bound(tiny) == 2);
}

TEST_CASE("analyze assembles the headline invariants") {
  AnalysisReport r0 = analyze(builtin_b0(18, 2));
  CHECK(r0.generator_count == 10);
  CHECK(r0.h1_rank_lower_bound == 10);
  CHECK(r0.rank_bound_attained);
  CHECK(r0.wfp_max == WfpLevel{false, 2});
  CHECK(r0.conilpotency_upper == 17);
  REQUIRE(r0.conilpotency_excluded.has_value());
  CHECK(*r0.conilpotency_excluded <= r0.conilpotency_upper);
  CHECK(r0.codes.k_f2 == 2);

  AnalysisReport r1 = analyze(builtin_b1_diagonal(18, 2));
  CHECK(r1.generator_count == 12);
  CHECK(r1.wfp_max == WfpLevel{false, 3});
  CHECK(r1.conilpotency_upper == 9);
  CHECK(r1.codes.k_f2 == 3);

  AnalysisReport r3 = analyze(builtin_b1_diagonal(3, 1));
  CHECK(r3.wfp_max.all);
  CHECK_FALSE(r3.conilpotency_excluded.has_value());  // needs two letters
}

TEST_CASE("the 2k+1 family and the diagonal family analyze identically") {
  for (int m = 2; m <= 12; ++m) {
    AnalysisReport a = analyze(builtin_b1(m, 1));
    AnalysisReport b = analyze(builtin_b1_diagonal(m, 1));
    CHECK(a == b);
  }
  CHECK(analyze(builtin_b1(7, 2)) == analyze(builtin_b1_diagonal(7, 2)));
}

TEST_CASE("row merge does not change the analysis") {
  SubgroupModel base = builtin_b0(2, 1);
  CHECK(analyze(row_merge(base, 0, 0, 1)) == analyze(base));
}

TEST_CASE("pair surjectivity and witness re-verification on random models") {
  std::mt19937_64 rng(321321);
  for (int iter = 0; iter < 40; ++iter) {
    SubgroupModel model = testing::random_model(rng, 9, 3, 5);
    SurjectionProfile p = surjection_profile(model);
    CHECK(p.at_k(2).onto_all);  // every valid model surjects pairs
    for (const auto& s : p.by_k) {
      if (!s.witness) continue;
      IntMatrix block = block_matrix(model, s.witness->letter);
      LatticeImageStatus again =
          lattice_status(column_submatrix(block, s.witness->subset));
      CHECK(again == s.witness->status);
      CHECK_FALSE(again.is_onto());
    }
  }
}

TEST_CASE("mod-2 necessity against the code profile on random models") {
  std::mt19937_64 rng(777777);
  for (int iter = 0; iter < 25; ++iter) {
    SubgroupModel model = testing::random_model(rng, 9, 2, 5);
    AnalysisReport rep = analyze(model);
    for (const auto& s : rep.profile.by_k) {
      if (s.known && s.onto_all) CHECK(s.k <= rep.codes.k_f2);
    }
    if (rep.conilpotency_excluded) {
      CHECK(*rep.conilpotency_excluded <= rep.conilpotency_upper);
    }
  }
}

TEST_CASE("profile is deterministic across thread counts") {
  SubgroupModel model = builtin_b1_diagonal(9, 2);
  AnalyzeOptions one;
  one.threads = 1;
  AnalyzeOptions many;
  many.threads = 5;
  CHECK(surjection_profile(model, one) == surjection_profile(model, many));
  CHECK(analyze(model, one) == analyze(model, many));
}

TEST_CASE("max_k truncates the profile and flags the report") {
  AnalyzeOptions options;
  options.max_k = 3;
  AnalysisReport rep = analyze(builtin_b0(10, 2), options);
  CHECK(rep.profile.max_k == 3);
  CHECK(rep.profile.by_k.size() == 2);
  bool noted = false;
  for (const auto& note : rep.assumption_notes) {
    if (note.find("not computed for every k") != std::string::npos) noted = true;
  }
  CHECK(noted);
}

TEST_CASE("budgeted profiles mark unknown levels instead of guessing") {
  AnalyzeOptions options;
  options.budget_seconds = 1e-9;  // expires immediately
  SurjectionProfile p = surjection_profile(builtin_b1_diagonal(16, 2), options);
  CHECK(p.at_k(2).known);  // pairs are exempt from the budget
  CHECK(p.at_k(2).onto_all);
  bool any_unknown = false;
  for (const auto& s : p.by_k) any_unknown = any_unknown || !s.known;
  CHECK(any_unknown);
}
