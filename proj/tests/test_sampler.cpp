#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <unordered_map>

#include "../src/sampler_tables.hpp"
#include "pp/chisq.hpp"
#include "pp/funceq.hpp"
#include "pp/gf.hpp"
#include "pp/oracle.hpp"
#include "pp/sampler.hpp"

using namespace pp;
using namespace pp::sampler;

namespace {

BigInt series_coeff(const TruncatedSeries& s, int m) {
    return to_integer(s.coeff(m).as_constant());
}

TruncatedSeries eval111(const TruncatedSeries& s) {
    return s.subst_value(Var::u, Rational(1))
        .subst_value(Var::w, Rational(1))
        .subst_value(Var::x, Rational(1));
}

std::set<oracle::Cells> oracle_sets(int m, unsigned need) {
    std::set<oracle::Cells> out;
    for (const oracle::PolygonRecord& r :
         oracle::enumerate(m, oracle::PPClass::all, true).records)
        if ((r.classes & need) == need) out.insert(r.cells);
    return out;
}

std::set<oracle::Cells> tree_sets(SampleClass c, int m) {
    std::vector<oracle::Cells> v = descend_all(c, m);
    std::set<oracle::Cells> out(v.begin(), v.end());
    REQUIRE(out.size() == v.size());  // the tree builds each polygon once
    return out;
}

bool same_cells(const std::vector<SampledPolygon>& a,
                const std::vector<SampledPolygon>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].cells != b[i].cells) return false;
    return true;
}

}  // namespace

TEST_CASE("flat label domains match their slab enumeration") {
    for (SampleClass c : {SampleClass::kThree, SampleClass::kAll}) {
        for (int S : {2, 3, 4, 5, 8, 13}) {
            detail::Domain d(c, S);
            std::vector<char> hit(d.size(), 0);
            size_t seen = 0;
            for (const auto& sl : d.slabs())
                d.visit_slab(sl, [&](const Label& a, size_t i) {
                    REQUIRE(i < d.size());
                    REQUIRE(!hit[i]);
                    hit[i] = 1;
                    ++seen;
                    REQUIRE(d.index(a) == i);
                    REQUIRE(d.checked_index(a) == i);
                });
            CHECK(seen == d.size());
        }
    }
    // out-of-budget labels must be rejected, not mapped
    detail::Domain d(SampleClass::kAll, 6);
    CHECK(d.checked_index(Label{0, false, 6, 1, 1}) == detail::Domain::npos);
    CHECK(d.checked_index(Label{2, true, 2, 2, 2}) == detail::Domain::npos);
}

TEST_CASE("level counts reproduce the counting series") {
    gf::GfCatalog cat(25);
    TruncatedSeries two = cat.bargraph1();
    TruncatedSeries three = cat.r11();
    TruncatedSeries all = eval111(funceq::solve_feq4sd(27).F);
    for (int m = 2; m <= 25; ++m) {
        CHECK(level_count(SampleClass::kTwo, m) == series_coeff(two, m));
        CHECK(level_count(SampleClass::kThree, m) == series_coeff(three, m));
        CHECK(level_count(SampleClass::kAll, m) == series_coeff(all, m));
    }
    CHECK_THROWS_AS(level_count(SampleClass::kAll, 1), std::invalid_argument);
}

TEST_CASE("exhaustive tree descent equals the oracle cell sets") {
    for (int m = 2; m <= 8; ++m) {
        CHECK(tree_sets(SampleClass::kTwo, m) ==
              oracle_sets(m, oracle::kTwo | oracle::kClassF));
        CHECK(tree_sets(SampleClass::kThree, m) ==
              oracle_sets(m, oracle::kThree | oracle::kClassF));
        if (m <= 7) CHECK(tree_sets(SampleClass::kAll, m) == oracle_sets(m, oracle::kClassF));
    }
    CHECK_THROWS_AS(descend_all(SampleClass::kAll, 15), std::invalid_argument);
}

TEST_CASE("sampled polygons survive the oracle round trip") {
    struct Probe {
        SampleClass c;
        int m;
        unsigned bits;
    };
    for (const Probe& pr : {Probe{SampleClass::kTwo, 10, oracle::kTwo},
                            Probe{SampleClass::kThree, 11, oracle::kThree},
                            Probe{SampleClass::kAll, 12, oracle::kAll}}) {
        std::vector<SampledPolygon> s = sample(pr.c, pr.m, 50, 97);
        REQUIRE(s.size() == 50);
        for (const SampledPolygon& p : s) {
            CHECK(p.half_perimeter == pr.m);
            CHECK((int)p.cells.size() >= pr.m - 1);
            std::vector<oracle::Vertex> walk =
                oracle::extract_boundary_walk(p.cells, {1, 0}, true);
            CHECK(walk.size() == size_t(2 * pr.m));
            unsigned cls = oracle::classify(walk);
            CHECK((cls & pr.bits) == pr.bits);
            CHECK((cls & oracle::kClassF) == oracle::kClassF);
        }
    }
}

TEST_CASE("sample streams are reproducible and batching-independent") {
    std::vector<SampledPolygon> base = sample(SampleClass::kThree, 12, 7, 42);
    CHECK(same_cells(base, sample(SampleClass::kThree, 12, 7, 42)));
    CHECK(!same_cells(base, sample(SampleClass::kThree, 12, 7, 43)));
    for (size_t i = 0; i < base.size(); ++i) CHECK(base[i].index == i);

    // a shorter run yields a prefix of the same stream
    std::vector<SampledPolygon> head = sample(SampleClass::kThree, 12, 3, 42);
    for (size_t i = 0; i < head.size(); ++i) CHECK(head[i].cells == base[i].cells);

    // jobs must not change the stream either
    CHECK(same_cells(base, sample(SampleClass::kThree, 12, 7, 42, 4)));
}

TEST_CASE("memo and slice tiers draw identical samples") {
    for (int m : {30, 32}) {
        std::vector<SampledPolygon> a =
            sample(SampleClass::kAll, m, 10, 7, 1, Tier::kMemo);
        std::vector<SampledPolygon> b =
            sample(SampleClass::kAll, m, 10, 7, 1, Tier::kSlices);
        CHECK(same_cells(a, b));
    }
    for (int m : {60, 62}) {
        std::vector<SampledPolygon> a =
            sample(SampleClass::kThree, m, 10, 7, 1, Tier::kMemo);
        std::vector<SampledPolygon> b =
            sample(SampleClass::kThree, m, 10, 7, 1, Tier::kSlices);
        CHECK(same_cells(a, b));
    }
    CHECK(same_cells(sample(SampleClass::kAll, 2, 3, 1, 1, Tier::kSlices),
                     sample(SampleClass::kAll, 2, 3, 1, 1, Tier::kMemo)));
}

TEST_CASE("long walks stay within budget") {
    std::vector<SampledPolygon> two = sample(SampleClass::kTwo, 250, 2, 5);
    std::vector<SampledPolygon> three = sample(SampleClass::kThree, 100, 2, 5);
    std::vector<SampledPolygon> all = sample(SampleClass::kAll, 50, 2, 5);
    for (const auto* batch : {&two, &three, &all})
        for (const SampledPolygon& p : *batch) {
            std::vector<oracle::Vertex> walk =
                oracle::extract_boundary_walk(p.cells, {1, 0}, true);
            CHECK(walk.size() == size_t(2 * p.half_perimeter));
        }
}

TEST_CASE("sampler argument validation") {
    CHECK_THROWS_AS(sample(SampleClass::kTwo, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample(SampleClass::kTwo, 301, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample(SampleClass::kAll, 81, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample(SampleClass::kAll, 10, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample(SampleClass::kTwo, 10, 1, 0, 1, Tier::kSlices),
                    std::invalid_argument);
    CHECK(sample(SampleClass::kAll, 80, 0, 0).empty());
    CHECK(sample(SampleClass::kTwo, 300, 0, 0).empty());
}

TEST_CASE("growing polygon applies only legal steps") {
    GrowingPolygon g;
    CHECK(g.cells() == oracle::Cells{{0, 0}});
    CHECK_THROWS_AS(g.apply({StepType::kNewTopRow, 2}), std::invalid_argument);
    CHECK_THROWS_AS(g.apply({StepType::kNewTopRow, 0}), std::invalid_argument);
    g.apply({StepType::kNewTopRow, 1});
    g.apply({StepType::kExtendTopLeft, 0});
    oracle::Cells want{{-1, 1}, {0, 0}, {0, 1}};
    oracle::Cells got = g.cells();
    std::sort(got.begin(), got.end());
    CHECK(got == want);
}

TEST_CASE("uniform_below is exact and frugal") {
    std::mt19937_64 a(5), b(5);
    CHECK(uniform_below(a, 1) == 0);
    CHECK(a() == b());  // the trivial draw consumed no entropy

    std::mt19937_64 rng(99);
    std::vector<int> seen(7, 0);
    for (int i = 0; i < 7000; ++i) {
        BigInt r = uniform_below(rng, 7);
        REQUIRE(r >= 0);
        REQUIRE(r < 7);
        ++seen[size_t(r.get_ui())];
    }
    for (int s : seen) CHECK(s > 800);  // ~1000 each

    BigInt big = (BigInt(1) << 130) + 3;
    for (int i = 0; i < 50; ++i) {
        BigInt r = uniform_below(rng, big);
        REQUIRE(r >= 0);
        REQUIRE(r < big);
    }
    CHECK_THROWS_AS(uniform_below(rng, 0), std::invalid_argument);
}

TEST_CASE("cells_hash is order-invariant and shape-sensitive") {
    oracle::Cells a{{0, 0}, {1, 0}, {1, 1}};
    oracle::Cells b{{1, 1}, {0, 0}, {1, 0}};
    CHECK(cells_hash(a) == cells_hash(b));
    CHECK(cells_hash(a) != cells_hash(oracle::Cells{{0, 0}, {1, 0}, {0, 1}}));
    CHECK(cells_hash(a) != cells_hash(oracle::Cells{{0, 0}, {1, 0}}));
}

TEST_CASE("chi-square machinery") {
    CHECK(stats::chi_square_pvalue(0, 5) == doctest::Approx(1.0));
    CHECK(stats::chi_square_pvalue(3.841, 1) == doctest::Approx(0.05).epsilon(1e-2));
    CHECK(stats::chi_square_pvalue(31.410, 20) == doctest::Approx(0.05).epsilon(1e-2));
    CHECK(stats::chi_square_pvalue(10, 10) == doctest::Approx(0.440493).epsilon(1e-4));
    CHECK(stats::chi_square_pvalue(5, 10) >
          stats::chi_square_pvalue(6, 10));
    CHECK_THROWS_AS(stats::chi_square_pvalue(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(stats::chi_square_pvalue(1, 0), std::invalid_argument);

    stats::Uniformity flat = stats::uniformity({25, 25, 25, 25}, 4);
    CHECK(flat.statistic == doctest::Approx(0.0));
    CHECK(flat.p_value == doctest::Approx(1.0));
    CHECK_THROWS_AS(stats::uniformity({}, 4), std::invalid_argument);
    CHECK_THROWS_AS(stats::uniformity({1, -1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(stats::uniformity({1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("extension numbers satisfy the child-sum recursion") {
    // walk random branches and assert EX(pi, s) = sum EX(child, s-1) on the
    // labels encountered, for each class
    std::mt19937_64 rng(3);
    for (SampleClass c : {SampleClass::kTwo, SampleClass::kThree, SampleClass::kAll}) {
        detail::MemoTable mt(c);
        const int S = 14;
        mt.ex(root_label(c), S);
        std::vector<Child> ch;
        for (int trial = 0; trial < 20; ++trial) {
            Label lab = root_label(c);
            for (int s = S; s > 0; --s) {
                BigInt sum;
                children(c, lab, ch);
                for (const Child& cc : ch) sum += mt.ex(cc.label, s - 1);
                CHECK(mt.ex(lab, s) == sum);
                lab = ch[size_t(rng() % ch.size())].label;
            }
            CHECK(mt.ex(lab, 0) == 1);
        }
    }
}

TEST_CASE("samples pass a uniformity test over whole classes") {
    auto run = [](SampleClass c, int m, long bins) {
        REQUIRE(level_count(c, m) == bins);
        std::vector<SampledPolygon> s = sample(c, m, 100000, 20260819);
        std::unordered_map<uint64_t, long long> cnt;
        for (const SampledPolygon& p : s) ++cnt[cells_hash(p.cells)];
        // every member hit, and no hash collisions hiding a skew
        CHECK((long long)cnt.size() == bins);
        std::vector<long long> obs;
        obs.reserve(cnt.size());
        for (const auto& [h, n] : cnt) obs.push_back(n);
        stats::Uniformity u = stats::uniformity(obs, bins);
        INFO("class ", class_name(c), " m=", m, " p=", u.p_value);
        CHECK(u.p_value > 0.001);
    };
    run(SampleClass::kTwo, 6, 35);
    run(SampleClass::kThree, 8, 758);
}

TEST_CASE("uniformity_test wrapper") {
    stats::Uniformity u = uniformity_test(SampleClass::kThree, 4, 6000, 11);
    CHECK(u.dof == doctest::Approx(5.0));  // 6 generic three-sided PPs at m=4
    CHECK(u.p_value > 0.001);

    stats::Uniformity deg = uniformity_test(SampleClass::kTwo, 2, 10, 1);
    CHECK(deg.statistic == doctest::Approx(0.0));
    CHECK(deg.observed_bins == 1);
    CHECK(deg.p_value == doctest::Approx(1.0));

    // 10^4-bin cap: two-sided counts pass 10^4 at m = 16
    CHECK_THROWS_AS(uniformity_test(SampleClass::kTwo, 16, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(uniformity_test(SampleClass::kTwo, 6, 0, 1),
                    std::invalid_argument);
}
