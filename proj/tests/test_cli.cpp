#include <catch_amalgamated.hpp>

#include <sstream>

#include "tamap/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
    args.insert(args.begin(), "tamap");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = tamap::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count", "[cli]") {
    auto r = run({"count", "sync-intervals", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\nclosed form 2 (match)\n");
    CHECK(run({"count", "nonsep-maps", "4"}).out.rfind("6\n", 0) == 0);
    CHECK(run({"count", "canopy-intervals", "2"}).out.rfind("6\n", 0) == 0);
    CHECK(run({"count", "decorated-trees", "5"}).out.rfind("91\n", 0) == 0);
    CHECK(run({"count", "--object", "sync-intervals", "-n", "3"}).out.rfind("6\n", 0) == 0);
    CHECK(run({"count", "sync-intervals", "4", "--format", "tsv"}).out ==
          "object\tsize\tcount\tclosed_form\nsync-intervals\t4\t22\t22\n");
}

TEST_CASE("size caps and usage errors", "[cli]") {
    auto r = run({"count", "nonsep-maps", "7"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--unsafe-size") != std::string::npos);
    CHECK(run({"count", "nonsep-maps", "7", "--unsafe-size"}).code == 0);
    CHECK(run({"count", "nonsep-maps", "1"}).code == 2);
    CHECK(run({"count", "widgets", "3"}).code == 2);
    CHECK(run({"count", "sync-intervals", "2", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "roundtrip", "99"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("convert along the chain", "[cli]") {
    CHECK(run({"convert", "--from", "interval", "--to", "tree"}, "ud|ud\n").out == "(-1)\n");
    const auto m = run({"convert", "--from", "interval", "--to", "map"}, "ud|ud\n");
    REQUIRE(m.code == 0);
    const auto pm = tamap::parse_map(m.out);
    CHECK(pm.edge_count() == 2);
    CHECK(pm.vertex_count() == 2);
    CHECK(run({"convert", "--from", "map", "--to", "tree"}, m.out).out == "(-1)\n");
    CHECK(run({"convert", "--from", "tree", "--to", "canopy"}, "((0 -1))\n(-1 -1 -1)\n").out == "NE|NE|EN\nNN|NN|NN\n");
    CHECK(run({"convert", "--from", "canopy", "--to", "interval"}, "NE|EN|EN\n").out == "uuddud|uududd\n");
    CHECK(run({"convert", "--from", "tree", "--to", "tree"}, "( -1  -1 )\n").out == "(-1 -1)\n");
    CHECK(run({"convert", "--from", "dyck", "--to", "pathpair"}, "udud\nuudd\n").out == "N|N\nE|E\n");
    CHECK(run({"convert", "--from", "pathpair", "--to", "dyck"}, "N|N\n").out == "udud\n");
    CHECK(run({"convert", "--from", "tree", "--to", "map", "--format", "dot"}, "(-1)\n").out.rfind("graph planar_map", 0) == 0);

    // map -> interval -> map keeps every map up to isomorphism
    const auto maps = run({"enumerate", "nonsep-maps", "5"});
    const auto intervals = run({"convert", "--from", "map", "--to", "interval"}, maps.out);
    const auto back = run({"convert", "--from", "interval", "--to", "map"}, intervals.out);
    REQUIRE(back.code == 0);
    const auto a = tamap::cli::detail::split_objects(maps.out, true);
    const auto b = tamap::cli::detail::split_objects(back.out, true);
    REQUIRE(a.size() == 22);
    REQUIRE(b.size() == 22);
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(tamap::canonical_code(tamap::parse_map(a[k])) == tamap::canonical_code(tamap::parse_map(b[k])));
}

TEST_CASE("convert rejects invalid input with a diagnostic", "[cli]") {
    auto r = run({"convert", "--from", "tree", "--to", "interval"}, "((0))\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("condition 2") != std::string::npos);
    r = run({"convert", "--from", "interval", "--to", "tree"}, "uududd|uuddud\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("not below") != std::string::npos);
    r = run({"convert", "--from", "interval", "--to", "tree"}, "uudd|udud\n");
    CHECK(r.err.find("types") != std::string::npos);
    CHECK(run({"convert", "--from", "map", "--to", "tree"}, "darts 4\nroot 1\nsigma 1 4 3 2\n").code == 2);
    CHECK(run({"convert", "--from", "map", "--to", "tree"}, "darts 4\nroot 1\n").code == 2);
    CHECK(run({"convert", "--from", "canopy", "--to", "tree"}, "EN|NE|EN\n").code == 2);
    CHECK(run({"convert", "--from", "dyck", "--to", "tree"}, "ud\n").code == 2);
    CHECK(run({"convert", "--from", "tree", "--to", "map", "--file", "/nonexistent/file"}).code == 2);
}

TEST_CASE("verify", "[cli]") {
    auto r = run({"verify", "roundtrip", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("roundtrip: all checks passed") != std::string::npos);
    CHECK(run({"verify", "partition", "8"}).code == 0);
    CHECK(run({"verify", "--suite", "order-oracle", "--size", "4"}).code == 0);
    CHECK(run({"verify", "series", "5"}).code == 0);
    CHECK(run({"verify", "stats", "4"}).code == 0);
}

TEST_CASE("series and dot exports", "[cli]") {
    auto r = run({"series", "3"});
    CHECK(r.out == "n\tx^0\tx^1\tx^2\tx^3\n1\t0\t1\t0\t0\n2\t0\t1\t1\t0\n3\t0\t2\t3\t1\n");
    CHECK(run({"series", "3", "--object", "maps"}).out == r.out);
    CHECK(run({"series", "2", "--format", "text"}).out == "t^1: 0 1  (total 1)\nt^2: 0 1 1  (total 2)\n");
    CHECK(run({"export-dot", "--object", "tamari", "-n", "3"}).out.rfind("digraph tamari", 0) == 0);
    CHECK(run({"dot", "--object", "tree"}, "((-1))\n").out.rfind("graph decorated_tree", 0) == 0);
    CHECK(run({"dot", "--object", "tam"}, "EN\n").out.find("\"EN\" -> \"NE\"") != std::string::npos);
    CHECK(run({"dot", "--object", "map"}, "").code == 2);
    CHECK(run({"dot", "--object", "tree"}, "((0))\n").code == 2);
}

TEST_CASE("output is deterministic", "[cli]") {
    CHECK(run({"enumerate", "decorated-trees", "4"}).out == run({"enumerate", "decorated-trees", "4"}).out);
    CHECK(run({"enumerate", "canopy-intervals", "3"}).out == run({"enumerate", "canopy-intervals", "3"}).out);
}
