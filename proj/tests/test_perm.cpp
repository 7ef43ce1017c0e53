#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "permpat/perm.hpp"
#include "test_support.hpp"

using namespace permpat;
using testsupport::all_perms;
using testsupport::all_perms_up_to;

TEST_CASE("parsing and rendering") {
    CHECK(Perm::parse("364251") == Perm{3, 6, 4, 2, 5, 1});
    CHECK(Perm::parse("3,6,4,2,5,1") == Perm{3, 6, 4, 2, 5, 1});
    CHECK(Perm::parse("-") == Perm{});
    CHECK(Perm::parse("-").str() == "-");
    CHECK(Perm::parse("10,2,3,4,5,6,7,8,9,1").str() == "10,2,3,4,5,6,7,8,9,1");
    CHECK(Perm{1, 2, 3}.str() == "123");
    CHECK_THROWS_AS(Perm::parse("102"), std::invalid_argument);   // '0' digit
    CHECK_THROWS_AS(Perm::parse("1,2,x"), std::invalid_argument);
    CHECK_THROWS_AS(Perm::parse("122"), std::invalid_argument);   // repeated value
    CHECK_THROWS_AS(Perm::parse("13"), std::invalid_argument);    // not 1..n
}

TEST_CASE("standardize") {
    const std::vector<int> sub{3, 7, 5};
    CHECK(standardize(sub) == Perm{1, 3, 2});
    CHECK(standardize(std::vector<int>{}) == Perm{});
    CHECK(standardize(std::vector<int>{9, 2, 5}) == Perm{3, 1, 2});
    CHECK_THROWS_AS(standardize(std::vector<int>{4, 4}), std::invalid_argument);
}

TEST_CASE("pattern_at") {
    const Perm p = Perm::parse("3175624");
    CHECK(pattern_at(p, IndexSet{{1, 3, 4}}) == Perm::parse("132"));
    CHECK(pattern_at(p, IndexSet{{2, 5, 6, 7}}) == Perm::parse("1423"));
    CHECK(pattern_at(p, IndexSet{{1, 2, 3, 4, 5, 6, 7}}) == p);
    CHECK(pattern_at(Perm::parse("31425786"), IndexSet{{6, 7, 8}}) == Perm::parse("231"));
    CHECK_THROWS_AS(pattern_at(p, IndexSet{{1, 9}}), std::out_of_range);
    CHECK_THROWS_AS(pattern_at(p, IndexSet{{3, 2}}), std::invalid_argument);
}

TEST_CASE("find_occurrence") {
    const Perm pi = Perm::parse("364251");
    const auto occ = find_occurrence(pi, Perm::parse("132"), 3);
    REQUIRE(occ.has_value());
    CHECK(occ->indices == std::vector<int>{1, 2, 3});
    CHECK(!find_occurrence(Perm::parse("123"), Perm::parse("321")));
    CHECK(!find_occurrence(pi, Perm::parse("1324")));
    // lexicographically least witness
    const auto w = find_occurrence(Perm::parse("1324"), Perm::parse("132"));
    REQUIRE(w.has_value());
    CHECK(w->indices == std::vector<int>{1, 2, 3});
    // forced position must carry the pattern's last value slot
    CHECK(!find_occurrence(pi, Perm::parse("132"), 6));  // value 1 cannot be the '2'
    CHECK_THROWS_AS(find_occurrence(pi, Perm::parse("132"), 7), std::out_of_range);
}

TEST_CASE("contains agrees with the brute-force subset oracle") {
    const std::vector<Perm> patterns = {Perm::parse("132"), Perm::parse("1324"), Perm::parse("21"),
                                        Perm::parse("4321"), Perm::parse("2143")};
    all_perms_up_to(6, [&](const Perm& pi) {
        for (const Perm& pat : patterns) CHECK(contains(pi, pat) == testsupport::brute_contains(pi, pat));
    });
    CHECK(contains(Perm::parse("1324"), Perm::parse("132")));
    CHECK(contains(Perm::parse("31425786"), Perm::parse("3142")));
    CHECK(contains(Perm::parse("123"), Perm{}));  // empty pattern is everywhere
    CHECK(avoids(Perm::parse("12"), Perm::parse("123")));
}

TEST_CASE("direct and skew sums") {
    CHECK(direct_sum(Perm::parse("231"), Perm::parse("3142")) == Perm::parse("2316475"));
    CHECK(skew_sum(Perm::parse("231"), Perm::parse("3142")) == Perm::parse("6753142"));
    const Perm p = Perm::parse("4231");
    CHECK(direct_sum(p, Perm{}) == p);
    CHECK(direct_sum(Perm{}, p) == p);
    CHECK(skew_sum(p, Perm{}) == p);
}

TEST_CASE("components") {
    const auto comps = components(Perm::parse("31425786"));
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == Perm::parse("3142"));
    CHECK(comps[1] == Perm::parse("1"));
    CHECK(comps[2] == Perm::parse("231"));
    CHECK(components(Perm::identity(3)) == std::vector<Perm>(3, Perm::parse("1")));
    CHECK(components(Perm::parse("321")) == std::vector<Perm>{Perm::parse("321")});
    CHECK(components(Perm{}).empty());
}

TEST_CASE("components fold back and are indecomposable (exhaustive n <= 8)") {
    all_perms_up_to(8, [&](const Perm& pi) {
        Perm folded;
        for (const Perm& c : components(pi)) {
            CHECK(is_indecomposable(c));
            folded = direct_sum(folded, c);
        }
        CHECK(folded == pi);
    });
}

TEST_CASE("inversions") {
    CHECK(inversions(Perm::parse("352614")) == 8);
    CHECK(inversions(Perm::identity(6)) == 0);
    for (int n : {2, 5, 8}) {
        const Perm rev = reverse_complement(Perm::identity(n));  // n n-1 ... 1
        CHECK(inversions(rev) == n * (n - 1) / 2);
    }
}

TEST_CASE("inversion tables") {
    CHECK(inversion_table(Perm::parse("352614")) == InversionTable{{2, 3, 1, 2, 0, 0}});
    CHECK(inversion_table(Perm::parse("65723148")) == InversionTable{{5, 4, 4, 1, 1, 0, 0, 0}});
    CHECK(inversion_table(Perm::identity(5)) == InversionTable{{0, 0, 0, 0, 0}});
    CHECK(perm_from_inversion_table(InversionTable{{2, 3, 1, 2, 0, 0}}) == Perm::parse("352614"));
    CHECK_THROWS_AS(perm_from_inversion_table(InversionTable{{3, 0, 0}}), std::invalid_argument);
}

TEST_CASE("inversion table round trip and sum (exhaustive n <= 8)") {
    all_perms_up_to(8, [&](const Perm& pi) {
        const InversionTable t = inversion_table(pi);
        CHECK(perm_from_inversion_table(t) == pi);
        int sum = 0;
        for (int b : t.entries) sum += b;
        CHECK(sum == inversions(pi));
    });
}

TEST_CASE("inversions add over sums (exhaustive sizes <= 5)") {
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5 - 0; ++b) {
            if (a > 3 || b > 3) continue;  // keep the double loop quick
            all_perms(a, [&](const Perm& s) {
                all_perms(b, [&](const Perm& t) {
                    CHECK(inversions(direct_sum(s, t)) == inversions(s) + inversions(t));
                    CHECK(inversions(skew_sum(s, t)) == inversions(s) + inversions(t) + a * b);
                });
            });
        }
    // one larger spot check at the boundary sizes
    all_perms(5, [&](const Perm& s) {
        const Perm t = Perm::parse("45312");
        CHECK(inversions(skew_sum(s, t)) == inversions(s) + inversions(t) + 25);
    });
}

TEST_CASE("reverse_complement") {
    CHECK(reverse_complement(Perm::parse("21")) == Perm::parse("21"));
    CHECK(reverse_complement(Perm::parse("132")) == Perm::parse("213"));
    all_perms_up_to(8, [&](const Perm& pi) {
        CHECK(reverse_complement(reverse_complement(pi)) == pi);
    });
}

TEST_CASE("reverse_complement swaps 132- and 213-avoiders (exhaustive n <= 8)") {
    const Perm p132 = Perm::parse("132"), p213 = Perm::parse("213");
    all_perms_up_to(8, [&](const Perm& pi) {
        CHECK(avoids(pi, p132) == avoids(reverse_complement(pi), p213));
    });
}

TEST_CASE("layers") {
    const auto lc = layers(Perm::parse("321465798"));
    REQUIRE(lc.has_value());
    CHECK(lc->layer_sizes == std::vector<int>{3, 1, 2, 1, 2});
    const auto id = layers(Perm::identity(4));
    REQUIRE(id.has_value());
    CHECK(id->layer_sizes == std::vector<int>(4, 1));
    CHECK(!layers(Perm::parse("231")).has_value());
    CHECK(is_layered(Perm{}));
}

TEST_CASE("fibonacci permutations") {
    CHECK(is_fibonacci(Perm::parse("124365")));
    CHECK(is_fibonacci(Perm::parse("1324")));
    CHECK(!is_fibonacci(Perm::parse("321")));
    // equivalent formulation: layered with all layers of size <= 2
    all_perms_up_to(7, [&](const Perm& pi) {
        const auto lc = layers(pi);
        const bool small_layers =
            lc && std::all_of(lc->layer_sizes.begin(), lc->layer_sizes.end(), [](int s) { return s <= 2; });
        CHECK(is_fibonacci(pi) == small_layers);
    });
}

TEST_CASE("core and padding") {
    const CorePadding cp = core_padding(Perm::parse("124365"));
    CHECK(cp.core == std::vector<Perm>{Perm::parse("21"), Perm::parse("21")});
    CHECK(cp.profile == std::vector<int>{2, 0, 0});
    const CorePadding id = core_padding(Perm::identity(5));
    CHECK(id.core.empty());
    CHECK(id.profile == std::vector<int>{5});
    const CorePadding big = core_padding(Perm::parse("31425786"));
    CHECK(big.core == std::vector<Perm>{Perm::parse("3142"), Perm::parse("231")});
    CHECK(big.profile == std::vector<int>{0, 1, 0});
}

TEST_CASE("core_padding reassembles (exhaustive n <= 8)") {
    all_perms_up_to(8, [&](const Perm& pi) {
        const CorePadding cp = core_padding(pi);
        for (const Perm& beta : cp.core) {
            CHECK(is_indecomposable(beta));
            CHECK(beta.size() >= 2);
        }
        CHECK(reassemble(cp) == pi);
    });
}

TEST_CASE("132-avoidance is weak decrease of the inversion table (exhaustive n <= 8)") {
    const Perm p132 = Perm::parse("132");
    all_perms_up_to(8, [&](const Perm& pi) {
        const InversionTable t = inversion_table(pi);
        const bool weakly_decreasing = std::is_sorted(t.entries.rbegin(), t.entries.rend());
        CHECK(avoids(pi, p132) == weakly_decreasing);
    });
}

TEST_CASE("inversions >= length - component count (exhaustive n <= 8)") {
    all_perms_up_to(8, [&](const Perm& pi) {
        CHECK(inversions(pi) >= pi.size() - static_cast<int>(components(pi).size()));
    });
}
