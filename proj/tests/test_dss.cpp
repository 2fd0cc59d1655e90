#include <doctest.h>

#include <cmath>

#include "udseq/dss.hpp"
#include "udseq/sequences.hpp"

using namespace udseq;

TEST_SUITE("dss") {

TEST_CASE("rate families evaluate consistently in direct and log space") {
    const std::vector<RateFunction> rates{
        RateFunction::power(3.0, 1.5), RateFunction::kiefer(0.5),
        RateFunction::polylog(4.0, 2)};
    for (const auto& f : rates)
        for (uint64_t N : {16ull, 100ull, 4096ull, 1000000ull}) {
            const double direct = std::log(f.value(N));
            const double logged = f.log_value(std::log(static_cast<double>(N)));
            CHECK(std::fabs(direct - logged) <= 1e-9 * std::fabs(direct) + 1e-12);
        }
}

TEST_CASE("rate validation") {
    CHECK_THROWS_AS(RateFunction::power(0.0, 1.0), validation_error);
    CHECK_THROWS_AS(RateFunction::polylog(1.0, -1), validation_error);
    CHECK_THROWS_AS(RateFunction::kiefer(0.5).value(2), validation_error);
    CHECK_THROWS_AS(RateFunction::table({}), validation_error);
    CHECK_THROWS_AS(RateFunction::table({{1, 0.5}, {2, 0.7}}), validation_error);
    // step lookup
    auto t = RateFunction::table({{1, 0.5}, {10, 0.25}});
    CHECK(t.value(1) == 0.5);
    CHECK(t.value(9) == 0.5);
    CHECK(t.value(10) == 0.25);
    CHECK(t.value(1000) == 0.25);
}

TEST_CASE("make_schedule pinned values") {
    CHECK(make_schedule(ScheduleKind::square_exp, 2.0, 3).indices ==
          std::vector<uint64_t>{2, 16, 512});
    CHECK(make_schedule(ScheduleKind::triple_exp, 2.0, 3).indices ==
          std::vector<uint64_t>{8, 512, 134217728});
    CHECK(make_schedule(ScheduleKind::geometric, 2.0, 5).indices ==
          std::vector<uint64_t>{2, 4, 8, 16, 32});
}

TEST_CASE("make_schedule rejects bad input") {
    CHECK_THROWS_AS(
        make_schedule(ScheduleKind::explicit_list, 2.0, 0, {5, 3, 9}),
        validation_error);
    CHECK_THROWS_WITH_AS(make_schedule(ScheduleKind::triple_exp, 2.0, 4),
                         doctest::Contains("max feasible horizon is 3"),
                         guard_error);
    CHECK_THROWS_AS(make_schedule(ScheduleKind::geometric, 1.0, 3),
                    validation_error);
}

TEST_CASE("schedule blocks partition the prefix") {
    Schedule s = make_schedule(ScheduleKind::geometric, 2.0, 6);
    CHECK(s.lower(1) == 0);
    uint64_t covered = 0;
    for (size_t k = 1; k <= s.blocks(); ++k) {
        CHECK(s.lower(k) == (k == 1 ? 0 : s.indices[k - 2]));
        covered += s.upper(k) - s.lower(k);
    }
    CHECK(covered == s.indices.back());
}

TEST_CASE("check_dss: constant rate fails the lacunarity condition") {
    PointList seq = gen_iid_uniform(1, 1, 8);
    Schedule sched(std::vector<uint64_t>{2, 4, 8});
    auto rep = check_dss(seq, sched, RateFunction::power(1.0, 0.0));
    for (const auto& r : rep.records) CHECK(r.pass);
    CHECK(rep.tail_sup == 4.0);
    CHECK(rep.verdict == DssVerdict::fail);
}

TEST_CASE("check_dss: van der Corput against 4 log(N)/N on the M^(j^2) schedule") {
    // Every per-index discrepancy check passes by a wide margin, but the
    // finite-horizon tail N_1 v(N_2) = 2 ln 16 / 4 = 2 ln 2 exceeds 1, so
    // the verdict over all checked indices is fail.
    PointList seq = gen_radical_inverse({2}, 65536);
    Schedule sched = make_schedule(ScheduleKind::square_exp, 2.0, 4);
    auto rep = check_dss(seq, sched, RateFunction::polylog(4.0, 1));

    REQUIRE(rep.records.size() == 4);
    // exact extreme discrepancies of the 2^m prefixes: N D_N = 1.5
    CHECK(rep.records[0].discrepancy == doctest::Approx(0.75).epsilon(1e-13));
    CHECK(rep.records[1].discrepancy ==
          doctest::Approx(3.0 / 32.0).epsilon(1e-13));
    CHECK(rep.records[2].discrepancy ==
          doctest::Approx(1.5 / 512.0).epsilon(1e-13));
    CHECK(rep.records[3].discrepancy ==
          doctest::Approx(1.5 / 65536.0).epsilon(1e-13));
    for (const auto& r : rep.records) CHECK(r.pass);

    CHECK(rep.tail_sup ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
    CHECK(rep.verdict == DssVerdict::fail);
}

TEST_CASE("check_dss: kiefer rate on a short triple-exponential schedule") {
    PointList seq = gen_iid_uniform(5, 1, 512);
    Schedule sched = make_schedule(ScheduleKind::triple_exp, 2.0, 2);
    auto rep = check_dss(seq, sched, RateFunction::kiefer(0.5));
    CHECK(rep.records.size() == 2);
    for (const auto& r : rep.records) CHECK_FALSE(r.skipped);
    CHECK((rep.verdict == DssVerdict::pass || rep.verdict == DssVerdict::fail));
    CHECK(rep.tail_sup ==
          doctest::Approx(8.0 * RateFunction::kiefer(0.5).value(512))
              .epsilon(1e-13));
}

TEST_CASE("check_dss verdict is monotone in v") {
    PointList seq = gen_iid_uniform(9, 1, 64);
    Schedule sched(std::vector<uint64_t>{4, 16, 64});
    auto small = check_dss(seq, sched, RateFunction::power(0.05, 0.0));
    auto large = check_dss(seq, sched, RateFunction::power(0.5, 0.0));
    for (size_t i = 0; i < small.records.size(); ++i)
        if (small.records[i].pass) CHECK(large.records[i].pass);
}

TEST_CASE("check_dss requires the prefix to cover the schedule") {
    PointList seq = gen_iid_uniform(1, 1, 10);
    Schedule sched(std::vector<uint64_t>{4, 16});
    CHECK_THROWS_AS(check_dss(seq, sched, RateFunction::power(1.0, 0.5)),
                    validation_error);
}

TEST_CASE("singleton schedule has tail_sup 0") {
    PointList seq = gen_iid_uniform(3, 1, 32);
    Schedule sched(std::vector<uint64_t>{32});
    CHECK(check_dss(seq, sched, RateFunction::power(1.0, 0.1)).tail_sup == 0.0);
}

TEST_CASE("c-regularity scans") {
    Schedule geo = make_schedule(ScheduleKind::geometric, 2.0, 8);

    SUBCASE("1/N is 1/2-regular from the start") {
        auto r = check_c_regular([](uint64_t N) { return 1.0 / N; }, geo, 0.5);
        REQUIRE(r.holds_from.has_value());
        CHECK(*r.holds_from == 1);
    }
    SUBCASE("1/log N never becomes 1/2-regular") {
        auto r = check_c_regular(
            [](uint64_t N) { return 1.0 / std::log(static_cast<double>(N)); },
            geo, 0.5);
        CHECK_FALSE(r.holds_from.has_value());
    }
    SUBCASE("N^-2 on the square-exponential schedule") {
        Schedule sq = make_schedule(ScheduleKind::square_exp, 2.0, 5);
        auto r = check_c_regular(RateFunction::power(1.0, 2.0), sq, 0.9);
        REQUIRE(r.holds_from.has_value());
        CHECK(*r.holds_from == 1);
    }
    SUBCASE("scale invariance") {
        auto f1 = check_c_regular([](uint64_t N) { return 1.0 / N; }, geo, 0.6);
        auto f2 = check_c_regular([](uint64_t N) { return 77.0 / N; }, geo, 0.6);
        CHECK(f1.holds_from == f2.holds_from);
    }
    SUBCASE("c outside (0,1) is rejected") {
        CHECK_THROWS_AS(
            check_c_regular([](uint64_t N) { return 1.0 / N; }, geo, 1.0),
            validation_error);
    }
}

TEST_CASE("propose_schedule output re-verifies as pass") {
    PointList seq = gen_radical_inverse({2}, 40000);
    const auto v = RateFunction::polylog(4.0, 1);
    Schedule sched = propose_schedule(seq, v, 0.1);
    CHECK(sched.blocks() >= 1);
    CHECK(check_dss(seq, sched, v).verdict == DssVerdict::pass);
}

TEST_CASE("propose_schedule: larger slack gives a sparser schedule") {
    PointList seq = gen_radical_inverse({2}, 40000);
    const auto v = RateFunction::polylog(4.0, 1);
    Schedule dense = propose_schedule(seq, v, 0.1);
    Schedule sparse = propose_schedule(seq, v, 0.99);
    CHECK(sparse.blocks() < dense.blocks());
}

TEST_CASE("propose_schedule: v == 0 yields the empty-schedule error") {
    PointList seq = gen_radical_inverse({2}, 256);
    auto zero = RateFunction::table({{1, 0.0}});
    CHECK_THROWS_AS(propose_schedule(seq, zero, 0.1), validation_error);
}

}  // TEST_SUITE
