#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "oracles.hpp"
#include "tamap/tamari.hpp"

using namespace tamap;

namespace {
std::vector<std::string> words(const std::vector<GridPath>& g) {
    std::vector<std::string> out;
    for (const auto& x : g) out.push_back(x.word());
    return out;
}
}  // namespace

TEST_CASE("covers in Tam(v)", "[tamari]") {
    CHECK(words(tam_covers(GridPath("EN"), GridPath("EN"))) == std::vector<std::string>{"NE"});
    CHECK(tam_covers(GridPath("EN"), GridPath("NE")).empty());
    CHECK(tam_covers(GridPath("NE"), GridPath("NE")).empty());
    CHECK(tam_covers(GridPath("EEN"), GridPath("NEE")).empty());
    CHECK_THROWS_AS(tam_covers(GridPath("NE"), GridPath("EN")), invalid_object);
    for (std::size_t len = 0; len <= 6; ++len)
        for (const auto& v : all_grid_paths(len))
            for (const auto& a : enumerate_tam(v))
                for (const auto& b : tam_covers(v, a)) {
                    CHECK(weakly_above(b, v));
                    CHECK(weakly_above(b, a));
                    CHECK(b != a);
                }
}

TEST_CASE("elements of Tam(v)", "[tamari]") {
    CHECK(words(enumerate_tam(GridPath("EN"))) == std::vector<std::string>{"EN", "NE"});
    CHECK(enumerate_tam(GridPath("NNN")).size() == 1);
    CHECK(enumerate_tam(GridPath("EEN")).size() == 3);
    CHECK(enumerate_tam(GridPath("")).size() == 1);
    for (std::size_t len = 0; len <= 7; ++len)
        for (const auto& v : all_grid_paths(len)) CHECK(words(enumerate_tam(v)) == oracle::tam_elements(v.word()));
}

TEST_CASE("Tam(v) has a unique minimum v and a unique maximum", "[tamari]") {
    for (std::size_t len = 0; len <= 6; ++len)
        for (const auto& v : all_grid_paths(len)) {
            const TamLattice lat(v);
            const auto iv = *lat.index_of(v);
            std::size_t maxima = 0;
            for (std::size_t a = 0; a < lat.elements().size(); ++a) {
                CHECK(lat.leq(iv, a));
                maxima += lat.covers()[a].empty();
            }
            CHECK(maxima == 1);
        }
}

TEST_CASE("partition of the Tamari lattice by type", "[tamari]") {
    for (int n = 1; n <= 10; ++n) {
        std::uint64_t total = 0;
        for (const auto& v : all_grid_paths(static_cast<std::size_t>(n - 1))) total += enumerate_tam(v).size();
        CHECK(total == oracle::catalan(n));
    }
}

TEST_CASE("Tamari order by distance vectors", "[tamari]") {
    CHECK(tamari_leq(DyckPath("udud"), DyckPath("uudd")));
    CHECK(tamari_leq(DyckPath("uudd"), DyckPath("uudd")));
    CHECK_FALSE(tamari_leq(DyckPath("uudd"), DyckPath("udud")));
    CHECK_THROWS_AS(tamari_leq(DyckPath("ud"), DyckPath("udud")), std::invalid_argument);
    for (int n = 1; n <= 6; ++n) {
        const auto order = oracle::rotation_order(n);
        const auto ps = all_dyck_paths(static_cast<std::size_t>(n));
        for (const auto& p : ps)
            for (const auto& q : ps) REQUIRE(tamari_leq(p, q) == order.contains({p.word(), q.word()}));
    }
}

TEST_CASE("rotation covers", "[tamari]") {
    CHECK(dyck_rotation_covers(DyckPath("udud")) == std::vector<DyckPath>{DyckPath("uudd")});
    CHECK(dyck_rotation_covers(DyckPath("uuuddd")).empty());
    CHECK_FALSE(dyck_rotation_covers(DyckPath("ududud")).empty());
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : all_dyck_paths(static_cast<std::size_t>(n))) {
            std::set<std::string> mine, ref;
            for (const auto& q : dyck_rotation_covers(p)) mine.insert(q.word());
            for (const auto& q : oracle::rotations(p.word())) ref.insert(q);
            CHECK(mine == ref);
        }
}

TEST_CASE("Dyck paths and path pairs", "[tamari]") {
    auto pp = [](const char* w) {
        const PathPair x = dyck_to_pathpair(DyckPath(w));
        return std::pair{x.upper.word(), x.canopy.word()};
    };
    CHECK(pp("ud") == std::pair<std::string, std::string>{"", ""});
    CHECK(pp("udud") == std::pair<std::string, std::string>{"N", "N"});
    CHECK(pp("uudd") == std::pair<std::string, std::string>{"E", "E"});
    CHECK(pathpair_to_dyck({GridPath(""), GridPath("")}).word() == "ud");
    CHECK(pathpair_to_dyck({GridPath("N"), GridPath("N")}).word() == "udud");
    CHECK(pathpair_to_dyck({GridPath("E"), GridPath("E")}).word() == "uudd");
    CHECK_THROWS_AS(pathpair_to_dyck({GridPath("EN"), GridPath("NE")}), invalid_object);
    CHECK_THROWS_AS(dyck_to_pathpair(DyckPath("")), invalid_object);

    for (int n = 1; n <= 8; ++n) {
        std::map<std::pair<std::string, std::string>, std::string> inverse;
        for (const auto& w : oracle::dyck_words(n)) inverse.emplace(oracle::pathpair(w), w);
        REQUIRE(inverse.size() == oracle::catalan(n));  // the oracle is itself injective
        for (const auto& p : all_dyck_paths(static_cast<std::size_t>(n))) {
            const PathPair x = dyck_to_pathpair(p);
            CHECK(std::pair{x.upper.word(), x.canopy.word()} == oracle::pathpair(p.word()));
            CHECK(x.valid());
            CHECK(pathpair_to_dyck(x) == p);
        }
        for (const auto& [pair, w] : inverse)
            CHECK(pathpair_to_dyck({GridPath(pair.first), GridPath(pair.second)}).word() == w);
    }
    CHECK(oracle::pathpair_inverse("NE", "EN") == std::optional<std::string>(pathpair_to_dyck({GridPath("NE"), GridPath("EN")}).word()));
}

TEST_CASE("path pairs give an order isomorphism I(v) -> Tam(v) sending covers to covers", "[tamari]") {
    for (int n = 1; n <= 7; ++n) {
        std::map<std::string, std::vector<DyckPath>> fibers;
        for (const auto& p : all_dyck_paths(static_cast<std::size_t>(n))) fibers[type_of(p).word()].push_back(p);
        for (const auto& [type, members] : fibers) {
            const TamLattice lat{GridPath(type)};
            REQUIRE(members.size() == lat.elements().size());
            for (const auto& p : members)
                for (const auto& q : members) {
                    const auto a = dyck_to_pathpair(p).upper, b = dyck_to_pathpair(q).upper;
                    REQUIRE(tamari_leq(p, q) == lat.leq(a, b));
                    // q covers p inside the fiber
                    bool covers = tamari_leq(p, q) && p != q;
                    for (const auto& r : members)
                        if (covers && r != p && r != q && tamari_leq(p, r) && tamari_leq(r, q)) covers = false;
                    const auto tc = tam_covers(GridPath(type), a);
                    CHECK(covers == (std::find(tc.begin(), tc.end(), b) != tc.end()));
                }
        }
    }
}

TEST_CASE("synchronized intervals", "[tamari]") {
    const std::vector<std::size_t> expected{1, 1, 2, 6, 22, 91, 408, 1938};
    for (std::size_t n = 1; n <= 7; ++n) CHECK(enumerate_sync_intervals(n).size() == expected[n]);
    CHECK(enumerate_sync_intervals(0).size() == 1);
    CHECK(to_string(enumerate_sync_intervals(1).front()) == "ud|ud");
    std::set<std::string> two;
    for (const auto& i : enumerate_sync_intervals(2)) two.insert(to_string(i));
    CHECK(two == std::set<std::string>{"uudd|uudd", "udud|udud"});
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> mine;
        for (const auto& i : enumerate_sync_intervals(static_cast<std::size_t>(n))) {
            CHECK(is_synchronized(i));
            mine.insert(to_string(i));
        }
        CHECK(mine == oracle::sync_intervals(n));
    }
    CHECK_FALSE(is_synchronized(DyckPath("uudd"), DyckPath("udud")));
    CHECK_FALSE(is_synchronized(DyckPath("ududud"), DyckPath("uuuddd")));
}

TEST_CASE("canopy intervals", "[tamari]") {
    CHECK(enumerate_canopy_intervals(0).size() == 1);
    CHECK(enumerate_canopy_intervals(2).size() == 6);
    std::map<std::string, std::size_t> fibers;
    for (const auto& c : enumerate_canopy_intervals(2)) ++fibers[c.canopy.word()];
    CHECK(fibers == std::map<std::string, std::size_t>{{"NN", 1}, {"NE", 1}, {"EN", 3}, {"EE", 1}});
    for (int len = 0; len <= 7; ++len) {
        std::size_t total = 0;
        for (const auto& v : all_grid_paths(static_cast<std::size_t>(len))) total += TamLattice(v).interval_count();
        CHECK(total == oracle::closed_form(len));
        CHECK(enumerate_canopy_intervals(static_cast<std::size_t>(len)).size() == total);
    }
    CHECK(is_canopy_interval({GridPath("NE"), GridPath("EN"), GridPath("EN")}));
    CHECK_FALSE(is_canopy_interval({GridPath("EN"), GridPath("NE"), GridPath("EN")}));
    CHECK_FALSE(is_canopy_interval({GridPath("EN"), GridPath("EN"), GridPath("NE")}));
}

TEST_CASE("synchronized and canopy intervals correspond", "[tamari]") {
    const auto c1 = sync_to_canopy({DyckPath("ud"), DyckPath("ud")});
    CHECK(to_string(c1) == "||");
    CHECK(to_string(sync_to_canopy({DyckPath("udud"), DyckPath("udud")})) == "N|N|N");
    CHECK(to_string(canopy_to_sync(parse_canopy_interval("N|N|N"))) == "udud|udud");
    CHECK(to_string(canopy_to_sync(parse_canopy_interval("||"))) == "ud|ud");
    CHECK_THROWS_AS(sync_to_canopy({DyckPath("uudd"), DyckPath("udud")}), invalid_object);
    CHECK_THROWS_AS(canopy_to_sync(parse_canopy_interval("EN|NE|EN")), invalid_object);
    for (std::size_t n = 1; n <= 7; ++n) {
        std::set<CanopyInterval> images;
        for (const auto& i : enumerate_sync_intervals(n)) {
            const CanopyInterval c = sync_to_canopy(i);
            CHECK(c.size() == n - 1);
            CHECK(is_canopy_interval(c));
            CHECK(canopy_to_sync(c) == i);
            images.insert(c);
        }
        const auto all = enumerate_canopy_intervals(n - 1);
        CHECK(images == std::set<CanopyInterval>(all.begin(), all.end()));
    }
}

TEST_CASE("composition of intervals", "[tamari]") {
    CHECK(to_string(compose_intervals({}, {})) == "ud|ud");
    const SyncInterval c = compose_intervals({{DyckPath("udud"), DyckPath("udud")}, 2}, {});
    CHECK(to_string(c) == "uuddud|uududd");
    CHECK(is_synchronized(c));
    const auto [pointed, rest] = decompose_interval(c);
    CHECK(pointed.cut == 2);
    CHECK(to_string(pointed.base) == "udud|udud");
    CHECK(rest.lower.empty());
    CHECK_THROWS_AS(decompose_interval({}), invalid_object);

    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& i : enumerate_sync_intervals(n)) {
            const auto [p1, i2] = decompose_interval(i);
            REQUIRE(is_properly_pointed(p1));
            REQUIRE(is_synchronized(i2));
            CHECK(p1.base.size() + i2.size() + 1 == n);
            CHECK(compose_intervals(p1, i2) == i);
            // contacts(P) - 1 = contacts(P1^r) + contacts(P2) - 1
            CHECK(contacts(i.lower) - 1 == contacts(p1.right()) + contacts(i2.lower) - 1);
        }

    // every (pointed, interval) pair of total size n-1 composes to a distinct element of I_n
    for (std::size_t n = 1; n <= 6; ++n) {
        std::set<SyncInterval> seen;
        for (std::size_t a = 0; a < n; ++a)
            for (const auto& p1 : enumerate_pointed_intervals(a))
                for (const auto& i2 : enumerate_sync_intervals(n - 1 - a)) {
                    const SyncInterval i = compose_intervals(p1, i2);
                    CHECK(is_synchronized(i));
                    CHECK(seen.insert(i).second);
                }
        CHECK(seen.size() == enumerate_sync_intervals(n).size());
    }
}

TEST_CASE("interval text encodings", "[tamari]") {
    CHECK(to_string(parse_interval("udud|uudd")) == "udud|uudd");
    CHECK(to_string(parse_canopy_interval("NE|EN|EN")) == "NE|EN|EN");
    CHECK_THROWS_AS(parse_interval("udud"), parse_error);
    CHECK_THROWS_AS(parse_interval("ud|ud|ud"), parse_error);
    CHECK_THROWS_AS(parse_interval("ux|ud"), parse_error);
    CHECK_THROWS_AS(parse_canopy_interval("N|N"), parse_error);
    for (const auto& c : enumerate_canopy_intervals(4)) CHECK(parse_canopy_interval(to_string(c)) == c);
}
