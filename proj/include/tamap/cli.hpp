#pragma once

// Command-line front end. run() is the whole program; main only forwards
// the standard streams so tests can drive it in memory.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "tamap/bijections.hpp"
#include "tamap/dot.hpp"
#include "tamap/error.hpp"
#include "tamap/maps.hpp"
#include "tamap/paths.hpp"
#include "tamap/series.hpp"
#include "tamap/tamari.hpp"
#include "tamap/trees.hpp"
#include "tamap/verify.hpp"

namespace tamap::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

/// Size caps per object or suite; larger sizes need --unsafe-size.
inline const std::map<std::string, std::size_t>& size_caps() {
    static const std::map<std::string, std::size_t> caps{
        {"sync-intervals", 10}, {"canopy-intervals", 9}, {"decorated-trees", 9}, {"nonsep-maps", 6},
        {"roundtrip", 8},       {"partition", 12},       {"order-oracle", 7},    {"series", 10},
        {"stats", 6},           {"tamari", 6},           {"series-order", 30},
    };
    return caps;
}

namespace detail {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check_size(const std::string& what, std::size_t size, bool unsafe) {
    const std::size_t cap = size_caps().at(what);
    if (!unsafe && size > cap)
        throw usage_error(what + ": size " + std::to_string(size) + " exceeds the cap " + std::to_string(cap) +
                          " (pass --unsafe-size to override)");
}

/// Smallest size each counted object accepts, and its closed-form index.
inline std::size_t min_size(const std::string& object) {
    if (object == "nonsep-maps") return 2;
    if (object == "canopy-intervals") return 0;
    return 1;
}

inline long closed_form_index(const std::string& object, std::size_t size) {
    const long n = static_cast<long>(size);
    if (object == "canopy-intervals") return n;
    if (object == "nonsep-maps") return n - 2;
    return n - 1;
}

inline std::string read_all(std::istream& in, const std::string& file) {
    if (file.empty() || file == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream f(file);
    if (!f) throw usage_error("cannot open " + file);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

/// Line-based formats give one object per nonempty line; maps are blocks
/// separated by blank lines.
inline std::vector<std::string> split_objects(const std::string& text, bool blocks) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line, block;
    while (std::getline(is, line)) {
        const std::string t = trim(line);
        if (!blocks) {
            if (!t.empty() && t.front() != '#') out.push_back(t);
            continue;
        }
        if (t.empty()) {
            if (!block.empty()) out.push_back(block);
            block.clear();
        } else if (t.front() != '#') {
            block += t + '\n';
        }
    }
    if (!block.empty()) out.push_back(block);
    return out;
}

using ChainObject = std::variant<PlanarMap, DecoratedTree, SyncInterval, CanopyInterval>;

inline const std::vector<std::string>& chain_formats() {
    static const std::vector<std::string> f{"map", "tree", "interval", "canopy"};
    return f;
}

inline std::size_t chain_stage(const std::string& format) {
    const auto& f = chain_formats();
    return static_cast<std::size_t>(std::find(f.begin(), f.end(), format) - f.begin());
}

inline ChainObject parse_chain(const std::string& format, const std::string& text) {
    switch (chain_stage(format)) {
        case 0: {
            PlanarMap m = parse_map(text);
            if (!is_non_separable(m)) throw invalid_object("map is not non-separable (needs >= 2 edges, no loop, no cut vertex)");
            return m;
        }
        case 1: {
            DecoratedTree t = parse_tree(text);
            const auto v = validate(t);
            if (!v.empty()) {
                std::string msg = "invalid decorated tree " + to_string(t) + ":";
                for (const auto& x : v) msg += "\n  " + x.message;
                throw invalid_object(msg);
            }
            return t;
        }
        case 2: {
            SyncInterval i = parse_interval(text);
            if (i.lower.size() != i.upper.size()) throw invalid_object("interval: paths have different sizes");
            if (type_of(i.lower) != type_of(i.upper)) throw invalid_object("interval: paths have different types");
            if (!tamari_leq(i.lower, i.upper)) throw invalid_object("interval: lower path is not below upper path");
            return i;
        }
        default: {
            CanopyInterval c = parse_canopy_interval(text);
            if (!is_canopy_interval(c)) throw invalid_object("canopy interval: v1 <= v2 in Tam(v) does not hold");
            return c;
        }
    }
}

/// One step along map - tree - interval - canopy.
inline ChainObject step(const ChainObject& o, bool forward) {
    return std::visit(
        [&](const auto& x) -> ChainObject {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, PlanarMap>) return map_to_tree(x);
            else if constexpr (std::is_same_v<X, DecoratedTree>) {
                if (forward) return tree_to_interval(x);
                return tree_to_map(x);
            } else if constexpr (std::is_same_v<X, SyncInterval>) {
                if (forward) return sync_to_canopy(x);
                return interval_to_tree(x);
            } else {
                return canopy_to_sync(x);
            }
        },
        o);
}

inline std::string render(const ChainObject& o, bool dot) {
    return std::visit(
        [&](const auto& x) -> std::string {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, PlanarMap>) return dot ? to_dot(x) : to_text(x);
            else if constexpr (std::is_same_v<X, DecoratedTree>) return dot ? to_dot(x) : to_string(x) + '\n';
            else {
                if (dot) throw usage_error("no DOT rendering for intervals");
                return to_string(x) + '\n';
            }
        },
        o);
}

inline std::string render_bigrow(const std::vector<BigInt>& row, std::size_t width) {
    std::string s;
    for (std::size_t k = 0; k < width; ++k) s += (k ? " " : "") + (k < row.size() ? row[k].str() : std::string("0"));
    return s;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tamari intervals, decorated trees and non-separable planar maps"};
    app.name("tamap");
    app.require_subcommand(1);
    app.fallthrough();

    bool unsafe = false;
    std::string format = "text";
    std::string file;
    app.add_flag("--unsafe-size", unsafe, "Allow sizes above the built-in caps");

    const std::vector<std::string> count_objects{"sync-intervals", "canopy-intervals", "decorated-trees", "nonsep-maps"};
    const std::vector<std::string> suites{"roundtrip", "partition", "order-oracle", "series", "stats"};

    std::string object;
    std::size_t size = 0;

    auto* count = app.add_subcommand("count", "Enumerate objects of one size and compare with the closed form");
    count->add_option("object,--object", object, "Object family")->required()->check(CLI::IsMember(count_objects));
    count->add_option("size,-n,--size", size, "Size (edges for maps, path length for canopies)")->required();
    count->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "tsv"}));

    auto* enumerate = app.add_subcommand("enumerate", "List every object of one size in its text encoding");
    enumerate->add_option("object,--object", object, "Object family")->required()->check(CLI::IsMember(count_objects));
    enumerate->add_option("size,-n,--size", size, "Size")->required();

    std::string from, to;
    const std::vector<std::string> formats{"map", "tree", "interval", "canopy", "dyck", "pathpair"};
    auto* convert = app.add_subcommand("convert", "Convert objects read from stdin or --file");
    convert->add_option("--from", from, "Input format")->required()->check(CLI::IsMember(formats));
    convert->add_option("--to", to, "Output format")->required()->check(CLI::IsMember(formats));
    convert->add_option("--file", file, "Input file (default stdin)");
    convert->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "dot"}));

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
    verify->add_option("suite,--suite", suite, "Suite")->required()->check(CLI::IsMember(suites));
    verify->add_option("size,-n,--size", size, "Largest size checked")->required();

    auto* dot = app.add_subcommand("export-dot", "Render an object as Graphviz DOT");
    dot->alias("dot");
    dot->add_option("--object", object, "map or tree (read from input), tamari (size), tam (canopy word from input)")
        ->required()
        ->check(CLI::IsMember({"map", "tree", "tamari", "tam"}));
    dot->add_option("size,-n,--size", size, "Size for --object tamari");
    dot->add_option("--file", file, "Input file (default stdin)");

    auto* series = app.add_subcommand("series", "Coefficients of the generating functions");
    series->add_option("size,-n,--size", size, "Truncation order")->required();
    series->add_option("--object", object, "intervals (contacts) or maps (outer-face degree)")
        ->check(CLI::IsMember({"intervals", "maps"}));
    series->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "tsv"}));

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*count) {
            detail::check_size(object, size, unsafe);
            if (size < detail::min_size(object))
                throw detail::usage_error(object + ": size must be at least " + std::to_string(detail::min_size(object)));
            std::size_t enumerated = 0;
            if (object == "sync-intervals") enumerated = enumerate_sync_intervals(size).size();
            else if (object == "canopy-intervals") enumerated = enumerate_canopy_intervals(size).size();
            else if (object == "decorated-trees") enumerated = enumerate_decorated_trees(size).size();
            else enumerated = enumerate_nonseparable(static_cast<int>(size)).size();
            const BigInt expected = closed_form(static_cast<unsigned>(detail::closed_form_index(object, size)));
            const bool match = expected == enumerated;
            if (format == "tsv")
                out << "object\tsize\tcount\tclosed_form\n" << object << '\t' << size << '\t' << enumerated << '\t' << expected << '\n';
            else
                out << enumerated << "\nclosed form " << expected << (match ? " (match)" : " (MISMATCH)") << '\n';
            return match ? kOk : kFailed;
        }

        if (*enumerate) {
            detail::check_size(object, size, unsafe);
            if (size < detail::min_size(object))
                throw detail::usage_error(object + ": size must be at least " + std::to_string(detail::min_size(object)));
            if (object == "sync-intervals")
                for (const auto& i : enumerate_sync_intervals(size)) out << to_string(i) << '\n';
            else if (object == "canopy-intervals")
                for (const auto& c : enumerate_canopy_intervals(size)) out << to_string(c) << '\n';
            else if (object == "decorated-trees")
                for (const auto& t : enumerate_decorated_trees(size)) out << to_string(t) << '\n';
            else {
                bool first = true;
                for (const auto& m : enumerate_nonseparable(static_cast<int>(size))) {
                    out << (first ? "" : "\n") << to_text(m);
                    first = false;
                }
            }
            return kOk;
        }

        if (*convert) {
            const std::string text = detail::read_all(in, file);
            const bool path_level = from == "dyck" || from == "pathpair" || to == "dyck" || to == "pathpair";
            if (path_level) {
                if (!((from == "dyck" || from == "pathpair") && (to == "dyck" || to == "pathpair")))
                    throw detail::usage_error("dyck and pathpair convert only between each other");
                if (format == "dot") throw detail::usage_error("no DOT rendering for paths");
                for (const auto& s : detail::split_objects(text, false)) {
                    if (from == "dyck") {
                        const DyckPath p = DyckPath::parse(s);
                        if (to == "dyck") out << p.word() << '\n';
                        else {
                            if (p.empty()) throw invalid_object("dyck: the empty path has no path pair");
                            const PathPair pp = dyck_to_pathpair(p);
                            out << pp.upper.word() << '|' << pp.canopy.word() << '\n';
                        }
                    } else {
                        const auto parts = split_bars(s);
                        if (parts.size() != 2) throw parse_error("pathpair: expected 'v1|v'");
                        const PathPair pp{GridPath::parse(parts[0]), GridPath::parse(parts[1])};
                        if (pp.upper.size() != pp.canopy.size() || pp.upper.east_steps() != pp.canopy.east_steps() ||
                            !pp.valid())
                            throw invalid_object("pathpair: v1 must share endpoints with v and stay weakly above it");
                        if (to == "pathpair") out << pp.upper.word() << '|' << pp.canopy.word() << '\n';
                        else out << pathpair_to_dyck(pp).word() << '\n';
                    }
                }
                return kOk;
            }
            const std::size_t a = detail::chain_stage(from), b = detail::chain_stage(to);
            bool first = true;
            for (const auto& s : detail::split_objects(text, from == "map")) {
                detail::ChainObject o = detail::parse_chain(from, s);
                for (std::size_t k = a; k < b; ++k) o = detail::step(o, true);
                for (std::size_t k = a; k > b; --k) o = detail::step(o, false);
                if (!first && (to == "map" || format == "dot")) out << '\n';
                out << detail::render(o, format == "dot");
                first = false;
            }
            return kOk;
        }

        if (*verify) {
            detail::check_size(suite, size, unsafe);
            if (size < 1) throw detail::usage_error("verify: size must be at least 1");
            Report r;
            if (suite == "roundtrip") r = verify_roundtrip(size);
            else if (suite == "partition") r = verify_partition(size);
            else if (suite == "order-oracle") r = verify_order_oracle(size);
            else if (suite == "series") r = verify_series(size);
            else r = verify_stats(size);
            r.print(out);
            return r.ok() ? kOk : kFailed;
        }

        if (*dot) {
            if (object == "tamari") {
                detail::check_size("tamari", size, unsafe);
                if (size < 1) throw detail::usage_error("export-dot: --object tamari needs a size >= 1");
                out << tamari_hasse_dot(size);
                return kOk;
            }
            const auto objects = detail::split_objects(detail::read_all(in, file), object == "map");
            if (objects.size() != 1) throw detail::usage_error("export-dot: expected exactly one object on input");
            if (object == "tam") {
                const GridPath v = GridPath::parse(objects.front());
                detail::check_size("tamari", v.size() + 1, unsafe);
                out << tam_hasse_dot(v);
            } else if (object == "map") {
                out << to_dot(parse_map(objects.front()));
            } else {
                out << to_dot(std::get<DecoratedTree>(detail::parse_chain("tree", objects.front())));
            }
            return kOk;
        }

        if (*series) {
            detail::check_size("series-order", size, unsafe);
            if (size < 1) throw detail::usage_error("series: order must be at least 1");
            const BiSeries s = object == "maps" ? solve_map_equation(size) : solve_interval_equation(size);
            if (series->count("--format") > 0 && format == "text") {
                for (std::size_t n = 1; n <= size; ++n)
                    out << "t^" << n << ": " << detail::render_bigrow(s.row(n), n + 1) << "  (total "
                        << s.at_x_one()[n] << ")\n";
            } else {
                write_tsv(out, s);
            }
            return kOk;
        }
    } catch (const detail::usage_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace tamap::cli
