#include <doctest.h>

#include <stdexcept>

#include "multirank/counting.hpp"
#include "multirank/verify.hpp"

using namespace multirank;

TEST_SUITE("counting") {

TEST_CASE("family spec parsing") {
  CHECK(FamilySpec::parse("cubic") == FamilySpec::cubic());
  CHECK(FamilySpec::parse("colored-over:2") == FamilySpec::colored_over(2));
  CHECK(FamilySpec::parse("generalized:1,2,2,2") ==
        FamilySpec::generalized(1, 2, 2, 2));
  CHECK(FamilySpec::parse("fourcolor:1,4") == FamilySpec::four_color(1, 4));
  // Normalization via the rank-preserving swap.
  CHECK(FamilySpec::four_color(4, 1) == FamilySpec::four_color(1, 4));

  CHECK_FALSE(FamilySpec::parse("qubic").has_value());
  CHECK_FALSE(FamilySpec::parse("colored-over").has_value());
  CHECK_FALSE(FamilySpec::parse("colored-over:x").has_value());
  CHECK_FALSE(FamilySpec::parse("generalized:1,2").has_value());
  CHECK_FALSE(FamilySpec::parse("fourcolor:0,2").has_value());

  for (const FamilySpec& f :
       {FamilySpec::cubic(), FamilySpec::colored_pod(3),
        FamilySpec::generalized(2, 1, 3, 4), FamilySpec::four_color(2, 5)}) {
    CHECK(FamilySpec::parse(f.to_string()) == f);
  }
}

TEST_CASE("counting series values") {
  const IntSeries a = counting_series(FamilySpec::cubic(), 8);
  // a(n): 1, 1, 3, 4, 9, 12, 23, 31, 54
  const std::vector<long> a_frozen = {1, 1, 3, 4, 9, 12, 23, 31, 54};
  for (int n = 0; n <= 8; ++n) CHECK(a[n] == a_frozen[n]);
  CHECK(a[5] == 12);

  CHECK(counting_series(FamilySpec::generalized(1, 2, 2, 2), 0)[0] == 1);
  CHECK(counting_series(FamilySpec::colored_over(2), 2)[2] == 12);

  const IntSeries abar = counting_series(FamilySpec::overcubic(), 8);
  const std::vector<long> abar_frozen = {1, 2, 6, 12, 26, 48, 92, 160, 282};
  for (int n = 0; n <= 8; ++n) CHECK(abar[n] == abar_frozen[n]);

  const IntSeries phat2 = counting_series(FamilySpec::colored_pod(2), 10);
  const std::vector<long> phat2_frozen = {1, 2, 3, 6, 11, 18, 28, 44, 69, 104, 152};
  for (int n = 0; n <= 10; ++n) CHECK(phat2[n] == phat2_frozen[n]);

  // generalized(1,2,2,2) is the cubic-pair function b(n) = fourcolor(1,2).
  CHECK(counting_series(FamilySpec::generalized(1, 2, 2, 2), 30) ==
        counting_series(FamilySpec::four_color(1, 2), 30));

  // Larger anchors.
  CHECK(counting_series(FamilySpec::colored_plain(1), 50)[50] == 204226);
  CHECK(counting_series(FamilySpec::colored_over(1), 24)[24] == 23528);
  CHECK(counting_series(FamilySpec::cubic(), 12)[12] == 246);
}

TEST_CASE("counting series totals match brute-force enumeration") {
  struct Case {
    FamilySpec family;
    Statistic stat;
    int t;
    int n_max;
  };
  const std::vector<Case> cases = {
      {FamilySpec::colored_plain(2), Statistic::Rbar, 5, 25},
      {FamilySpec::colored_plain(3), Statistic::Rstar, 3, 25},
      {FamilySpec::colored_over(2), Statistic::Rbar, 3, 25},
      {FamilySpec::colored_pod(2), Statistic::Rbar, 3, 25},
      {FamilySpec::cubic(), Statistic::RetiCrank, 3, 25},
      {FamilySpec::overcubic(), Statistic::RetiCrank, 3, 20},
      {FamilySpec::four_color(1, 2), Statistic::Rank4c, 5, 14},
      {FamilySpec::four_color(2, 5), Statistic::Rank4c, 5, 14},
  };
  for (const Case& c : cases) {
    CAPTURE(c.family.to_string());
    const IntSeries series = counting_series(c.family, c.n_max);
    const auto stat = object_components(c.family, c.stat);
    for (int n = 0; n <= c.n_max; ++n) {
      CHECK(class_counts_bruteforce(stat, c.t, n).total == series[n]);
    }
  }

  // Generalized families carry no statistic; count their objects with a
  // zero-weighted spec so the enumeration side still runs.
  const FamilySpec gen = FamilySpec::generalized(2, 3, 3, 1);
  const std::vector<StatComponent> gen_stat = {
      {BaseFamily::Plain, 2, Measure::Length, 0},
      {BaseFamily::Plain, 2, Measure::Length, 0},
      {BaseFamily::Plain, 2, Measure::Length, 0},
      {BaseFamily::Plain, 3, Measure::Length, 0}};
  const IntSeries gen_series = counting_series(gen, 25);
  for (int n = 0; n <= 25; ++n) {
    const ClassCountTable table = class_counts_bruteforce(gen_stat, 2, n);
    CHECK(table.total == gen_series[n]);
    CHECK(table.counts[0] == gen_series[n]);  // all statistics are zero
  }
}

TEST_CASE("class-count tables are symmetric for rbar") {
  // Component reversal negates rbar, so N(m,n) = N(-m,n) class by class.
  for (const auto& [family, t] :
       {std::pair{FamilySpec::colored_over(2), 3},
        std::pair{FamilySpec::colored_pod(2), 3},
        std::pair{FamilySpec::colored_plain(4), 5}}) {
    const auto stat = object_components(family, Statistic::Rbar);
    for (int n = 0; n <= 10; ++n) {
      const ClassCountTable table = class_counts_bruteforce(stat, t, n);
      for (int i = 1; i < t; ++i) {
        CHECK(table.counts[static_cast<std::size_t>(i)] ==
              table.counts[static_cast<std::size_t>(t - i)]);
      }
    }
  }
}

TEST_CASE("rank gf at roots: published vanishing examples") {
  // Overpartition pairs, rbar at zeta_3: n = 2 is a QNR mod 3.
  const CycSeries over = rank_gf_at_root(FamilySpec::colored_over(2),
                                         Statistic::Rbar, 3, 1, 8);
  CHECK(over[2].is_zero());
  CHECK(over[5].is_zero());
  CHECK_FALSE(over[1].is_zero());

  // Overcubic at zeta_3: coefficient of q^{3n+2} vanishes.
  const CycSeries oc = rank_gf_at_root(FamilySpec::overcubic(),
                                       Statistic::RetiCrank, 3, 1, 8);
  CHECK(oc[2].is_zero());
  CHECK(oc[5].is_zero());
  CHECK(oc[8].is_zero());

  // Four-color type (1,4) at zeta_5: Table 3 row (1,4) gives a = 2, 3.
  const CycSeries fc = rank_gf_at_root(FamilySpec::four_color(1, 4),
                                       Statistic::Rank4c, 5, 1, 8);
  CHECK(fc[2].is_zero());
  CHECK(fc[3].is_zero());
  CHECK(fc[7].is_zero());
  CHECK(fc[8].is_zero());
  CHECK_FALSE(fc[4].is_zero());

  // Pod pairs at zeta_3: vanishes when 8n+1 is a QNR mod 3 (n = 2 mod 3).
  const CycSeries pod = rank_gf_at_root(FamilySpec::colored_pod(2),
                                        Statistic::Rbar, 3, 1, 8);
  CHECK(pod[2].is_zero());
  CHECK(pod[5].is_zero());
  CHECK(pod[8].is_zero());

  CHECK_THROWS_AS(rank_gf_at_root(FamilySpec::colored_over(2),
                                  Statistic::Rbar, 3, 0, 8),
                  std::invalid_argument);
  CHECK_THROWS_AS(rank_gf_at_root(FamilySpec::colored_over(3),
                                  Statistic::Rbar, 3, 1, 8),
                  std::invalid_argument);
  CHECK_THROWS_AS(closed_form_rhs(FamilySpec::cubic(), Statistic::RetiCrank,
                                  5, 8),
                  std::invalid_argument);
}

TEST_CASE("proof chain: specialization equals reduced closed form") {
  for (int t : {3, 5, 7}) {
    for (const auto& entry : supported_rank_entries(t)) {
      const FamilySpec& family = entry.first;
      const Statistic stat = entry.second;
      CAPTURE(t);
      CAPTURE(family.to_string());
      CAPTURE(to_string(stat));
      CHECK(rank_gf_at_root(family, stat, t, 1, 40) ==
            closed_form_rhs(family, stat, t, 40));
    }
  }
}

TEST_CASE("dft class counts: published examples") {
  const ClassCountTable over2 =
      class_counts_dft(FamilySpec::colored_over(2), Statistic::Rbar, 3, 2);
  CHECK(over2.counts == std::vector<Int>{Int(4), Int(4), Int(4)});
  CHECK(over2.total == 12);

  const ClassCountTable cubic5 =
      class_counts_dft(FamilySpec::cubic(), Statistic::RetiCrank, 3, 5);
  CHECK(cubic5.counts == std::vector<Int>{Int(4), Int(4), Int(4)});

  const ClassCountTable zero =
      class_counts_dft(FamilySpec::colored_pod(4), Statistic::Rbar, 5, 0);
  CHECK(zero.counts ==
        std::vector<Int>{Int(1), Int(0), Int(0), Int(0), Int(0)});
}

TEST_CASE("dft equals brute force on every supported combination") {
  struct Case {
    FamilySpec family;
    Statistic stat;
    int t;
    int n_max;
  };
  const std::vector<Case> cases = {
      {FamilySpec::colored_over(2), Statistic::Rbar, 3, 14},
      {FamilySpec::colored_pod(2), Statistic::Rbar, 3, 20},
      {FamilySpec::colored_plain(3), Statistic::Rstar, 3, 18},
      {FamilySpec::colored_over(3), Statistic::Rstar, 3, 10},
      {FamilySpec::colored_pod(3), Statistic::Rstar, 3, 16},
      {FamilySpec::cubic(), Statistic::RetiCrank, 3, 20},
      {FamilySpec::overcubic(), Statistic::RetiCrank, 3, 12},
      {FamilySpec::colored_over(4), Statistic::Rbar, 5, 8},
      {FamilySpec::colored_pod(4), Statistic::Rbar, 5, 10},
      {FamilySpec::colored_plain(4), Statistic::Rbar, 5, 12},
      {FamilySpec::colored_plain(2), Statistic::Rbar, 5, 16},
      {FamilySpec::colored_plain(5), Statistic::Rstar, 5, 8},
      {FamilySpec::four_color(1, 2), Statistic::Rank4c, 5, 12},
      {FamilySpec::four_color(1, 4), Statistic::Rank4c, 5, 10},
      {FamilySpec::four_color(5, 5), Statistic::Rank4c, 5, 10},
      {FamilySpec::colored_plain(4), Statistic::Rbar, 7, 10},
  };
  for (const Case& c : cases) {
    CAPTURE(c.family.to_string());
    CAPTURE(c.t);
    const auto dft = class_counts_dft_range(c.family, c.stat, c.t, c.n_max);
    const auto stat = object_components(c.family, c.stat);
    const IntSeries totals = counting_series(c.family, c.n_max);
    for (int n = 0; n <= c.n_max; ++n) {
      const ClassCountTable bf = class_counts_bruteforce(stat, c.t, n);
      CHECK(dft[n].counts == bf.counts);
      CHECK(dft[n].total == totals[n]);
    }
  }
}

TEST_CASE("vector crank vanishing") {
  CHECK(vector_crank_targets(5, 54) ==
        std::vector<long>{4, 9, 14, 19, 24, 29, 34, 39, 44, 49, 54});
  CHECK(vector_crank_vanishing(5, 54) == vector_crank_targets(5, 54));
  CHECK(vector_crank_vanishing(7, 40) == vector_crank_targets(7, 40));
  CHECK(vector_crank_vanishing(11, 28) ==
        std::vector<long>{6, 17, 28});
  CHECK_THROWS_AS(vector_crank_vanishing(4, 20), std::invalid_argument);
  CHECK_THROWS_AS(vector_crank_vanishing(13, 20), std::invalid_argument);
}

TEST_CASE("generalized families reject rank statistics") {
  CHECK_FALSE(rank_combination_supported(FamilySpec::generalized(1, 2, 2, 2),
                                         Statistic::Rank4c, 5));
  CHECK(rank_combination_supported(FamilySpec::four_color(1, 2),
                                   Statistic::Rank4c, 5));
  CHECK_FALSE(rank_combination_supported(FamilySpec::four_color(1, 2),
                                         Statistic::Rank4c, 7));
}

}  // TEST_SUITE
