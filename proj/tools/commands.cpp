#include "commands.hpp"

#include <resolvelab/characterize.hpp>
#include <resolvelab/clique.hpp>
#include <resolvelab/constructions.hpp>
#include <resolvelab/dimension.hpp>
#include <resolvelab/ek.hpp>
#include <resolvelab/enumerate.hpp>
#include <resolvelab/errors.hpp>
#include <resolvelab/graph_io.hpp>
#include <resolvelab/multicover.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>

namespace resolvelab::cli {

namespace {
    constexpr std::size_t shown_counterexamples = 10;

    auto lower(std::string text) -> std::string
    {
        for (auto & c : text)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return text;
    }

    auto graph_format(const std::string & path, const std::optional<std::string> & forced) -> std::string
    {
        if (forced) {
            if (*forced != "el" && *forced != "g6")
                throw UsageError("format must be el or g6, not " + *forced);
            return *forced;
        }
        auto dot = path.rfind('.');
        auto ext = dot == std::string::npos ? std::string{} : lower(path.substr(dot + 1));
        if (ext == "el" || ext == "g6")
            return ext;
        throw UsageError("cannot tell the format of " + path + " (use .el, .g6 or --format)");
    }

    auto read_graph(const std::string & path, const std::optional<std::string> & forced) -> Graph
    {
        auto format = graph_format(path, forced);
        std::ifstream in(path);
        if (! in)
            throw UsageError("cannot open " + path);
        if (format == "el")
            return graph_from_edge_list(in);

        std::string line, found;
        std::size_t number = 0, found_line = 0;
        while (std::getline(in, line)) {
            ++number;
            if (line.starts_with(">>graph6<<"))
                line.erase(0, 10);
            while (! line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (line.empty())
                continue;
            if (found_line)
                throw ParseError(number, "graph6 file holds more than one graph");
            found = line;
            found_line = number;
        }
        if (! found_line)
            throw ParseError(0, path + " holds no graph");
        try {
            return graph_from_graph6(found);
        }
        catch (const ParseError & e) {
            throw ParseError(found_line, e.what());
        }
    }

    auto write_graph(const std::string & path, const Graph & g, const std::optional<std::string> & forced) -> void
    {
        auto format = graph_format(path, forced);
        std::ofstream out(path);
        if (! out)
            throw UsageError("cannot write " + path);
        if (format == "el")
            out << graph_to_edge_list(g);
        else
            out << graph_to_graph6(g) << '\n';
    }

    auto parse_list(const std::string & text, const std::string & what) -> std::vector<long>
    {
        std::vector<long> values;
        if (! text.empty() && text.back() == ',')
            throw UsageError("empty entry in " + what + " '" + text + "'");
        std::stringstream in(text);
        std::string piece;
        while (std::getline(in, piece, ',')) {
            auto first = piece.find_first_not_of(' ');
            auto last = piece.find_last_not_of(' ');
            if (first == std::string::npos)
                throw UsageError("empty entry in " + what + " '" + text + "'");
            piece = piece.substr(first, last - first + 1);
            std::size_t used = 0;
            long value = 0;
            try {
                value = std::stol(piece, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != piece.size())
                throw UsageError("bad number '" + piece + "' in " + what);
            values.push_back(value);
        }
        return values;
    }

    auto parse_set(const std::string & text) -> LandmarkSet
    {
        LandmarkSet s;
        for (auto value : parse_list(text, "set")) {
            if (value < 0)
                throw UsageError("negative vertex " + std::to_string(value) + " in set");
            s.push_back(static_cast<Vertex>(value));
        }
        return s;
    }

    auto parse_coords(const std::string & text) -> std::vector<int>
    {
        std::vector<int> result;
        for (auto value : parse_list(text, "coordinates"))
            result.push_back(static_cast<int>(value));
        return result;
    }

    auto set_json(const LandmarkSet & s) -> Json
    {
        Json a = Json::array();
        for (auto v : s)
            a.push_back(v);
        return a;
    }

    template <typename Body>
    auto guarded(std::string command, Json inputs, Body body) -> RunReport
    {
        RunReport r;
        r.command = std::move(command);
        r.inputs = std::move(inputs);
        const auto start = std::chrono::steady_clock::now();
        try {
            body(r);
        }
        catch (const TheoremViolation & e) {
            r.status = Status::violation;
            r.results["error"] = e.what();
        }
        catch (const ConstructionError & e) {
            r.status = Status::violation;
            r.results["error"] = e.what();
        }
        catch (const std::exception & e) {
            r.status = Status::error;
            r.results = Json::object();
            r.results["error"] = e.what();
        }
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return r;
    }

    // One theorem-backed check in a verify report.
    struct Check
    {
        std::string name;
        bool passed = true;
        std::string detail;
        std::vector<std::string> counterexamples;

        auto json() const -> Json
        {
            Json j;
            j["name"] = name;
            j["passed"] = passed;
            j["detail"] = detail;
            Json list = Json::array();
            for (std::size_t i = 0; i < std::min(counterexamples.size(), shown_counterexamples); ++i)
                list.push_back(counterexamples[i]);
            j["counterexamples"] = list;
            return j;
        }
    };

    auto finish(RunReport & r, const std::vector<Check> & checks) -> void
    {
        Json list = Json::array();
        std::size_t passed = 0;
        for (const auto & c : checks) {
            list.push_back(c.json());
            passed += c.passed;
        }
        r.results["passed"] = passed;
        r.results["failed"] = checks.size() - passed;
        r.results["checks"] = list;
        r.status = passed == checks.size() ? Status::ok : Status::violation;
    }

    auto equivalence_check(std::size_t n_max, const Variant & v, Equivalence which) -> Check
    {
        auto report = run_equivalence_suite(n_max, v, which);
        Check c{equivalence_name(which) + " " + v.name(), report.holds(), {}, {}};
        c.detail = std::to_string(report.graphs_checked) + " graphs, " + std::to_string(report.mismatches.size()) + " mismatches";
        for (const auto & m : report.mismatches)
            c.counterexamples.push_back(m.graph6 + " (structure " + (m.structural ? "yes" : "no") + ", " + m.detail + ")");
        return c;
    }

    auto characterization_checks(std::size_t n_max) -> std::vector<Check>
    {
        const std::vector<Variant> variants{
            Variant::metric(), Variant::edge(), Variant::truncated(1), Variant::truncated(2), Variant::local()};
        std::vector<Check> checks;
        for (const auto & v : variants)
            checks.push_back(equivalence_check(n_max, v, Equivalence::dim1_ft2));
        for (const auto & v : variants)
            checks.push_back(equivalence_check(n_max, v, Equivalence::ft_equals_n));
        checks.push_back(equivalence_check(n_max, Variant::metric(), Equivalence::dim_n_minus_1));
        checks.push_back(equivalence_check(n_max, Variant::local(), Equivalence::dim_n_minus_1));
        return checks;
    }

    auto sharp_check(const std::string & name, const LabeledFamily & f, const Variant & v, std::size_t expected) -> Check
    {
        auto dm = all_pairs_distances(f.graph);
        Check c{name, true, {}, {}};
        if (! is_resolving(f.graph, dm, v, f.designated_landmarks)) {
            c.passed = false;
            c.detail = "designated landmarks do not resolve under " + v.name();
            return c;
        }
        auto bound = landmark_degree_bound(v, f.designated_landmarks.size());
        std::string degrees;
        for (auto m : f.designated_landmarks) {
            degrees += (degrees.empty() ? "" : ",") + std::to_string(f.graph.degree(m));
            c.passed = c.passed && f.graph.degree(m) == expected && bound && *bound == expected;
        }
        c.detail = "landmark degrees " + degrees + ", expected " + std::to_string(expected);
        return c;
    }

    auto degree_checks(std::size_t n_max, unsigned k_max) -> std::vector<Check>
    {
        std::vector<Check> checks;
        for (const auto & v : {Variant::metric(), Variant::edge(), Variant::truncated(1), Variant::truncated(2)}) {
            auto report = run_degree_suite(n_max, v);
            Check c{"degree bound " + v.name(), report.violations.empty(), {}, {}};
            c.detail = std::to_string(report.graphs_checked) + " graphs, " + std::to_string(report.landmarks_checked) + " landmarks, "
                + std::to_string(report.violations.size()) + " violations";
            for (const auto & m : report.violations)
                c.counterexamples.push_back(m.graph6 + " (" + m.detail + ")");
            checks.push_back(std::move(c));
        }
        for (unsigned k = 2; k <= k_max; ++k) {
            const auto ks = std::to_string(k);
            checks.push_back(sharp_check("sharp edge H_" + ks, build_H(k), Variant::edge(), std::size_t{1} << (k - 1)));
            checks.push_back(sharp_check("sharp trunc=1 A_" + ks, build_A(k), Variant::truncated(1), (std::size_t{1} << (k - 1)) + k - 1));
            std::size_t power = 1;
            for (unsigned i = 1; i < k; ++i)
                power *= 3;
            checks.push_back(sharp_check("sharp metric I_" + ks + "(1)", build_I(k, 1), Variant::metric(), power));
        }
        return checks;
    }

    auto lower_bound_checks(unsigned k_max) -> std::vector<Check>
    {
        std::vector<Check> checks;
        auto family_check = [&](const std::string & name, const LabeledFamily & f, const Variant & v, std::size_t k, long ft_floor) {
            auto dm = all_pairs_distances(f.graph);
            auto dim = min_resolving(f.graph, dm, v).dimension;
            auto ft = min_fault_tolerant(f.graph, dm, v).dimension;
            Check exact{name + " " + v.name() + " dimension", dim == k, "found " + std::to_string(dim) + ", expected " + std::to_string(k), {}};
            Check lower{name + " " + v.name() + " fault tolerance", static_cast<long>(ft) >= ft_floor,
                "found " + std::to_string(ft) + ", lower bound " + std::to_string(ft_floor), {}};
            checks.push_back(std::move(exact));
            checks.push_back(std::move(lower));
        };
        for (unsigned k = 2; k <= k_max; ++k) {
            long three = 1, two = 1;
            for (unsigned i = 1; i < k; ++i) {
                three *= 3;
                two *= 2;
            }
            const auto ks = std::to_string(k);
            auto j = build_J(k);
            family_check("J_" + ks, j, Variant::metric(), k, three - k);
            family_check("H_" + ks, build_H(k), Variant::edge(), k, two + 1);
            family_check("A_" + ks, build_A(k), Variant::truncated(1), k, two);

            auto ft2 = min_fault_tolerant(j.graph, Variant::truncated(2)).dimension;
            checks.push_back({"J_" + ks + " trunc=2 fault tolerance", static_cast<long>(ft2) >= three - k,
                "found " + std::to_string(ft2) + ", lower bound " + std::to_string(three - k), {}});
        }
        return checks;
    }

    auto upper_bound_checks(std::size_t n_max) -> std::vector<Check>
    {
        const std::vector<Variant> variants{Variant::metric(), Variant::edge(), Variant::truncated(2)};
        std::vector<Check> checks;
        for (const auto & v : variants)
            checks.push_back({"construction " + v.name(), true, {}, {}});
        std::vector<std::size_t> counts(variants.size(), 0);
        std::mutex lock;
        for (std::size_t n = 2; n <= n_max; ++n)
            parallel_for(labeled_graph_count(n), [&](std::size_t code) {
                auto g = labeled_graph(n, code);
                if (! is_connected(g))
                    return;
                auto dm = all_pairs_distances(g);
                for (std::size_t i = 0; i < variants.size(); ++i) {
                    auto basis = min_resolving(g, dm, variants[i]).witness;
                    auto built = ft_construct(g, variants[i], basis);
                    bool good = ! built.empty() && is_fault_tolerant(g, dm, variants[i], built)
                        && built.size() <= ft_construct_bound(variants[i], basis.size());
                    std::lock_guard guard(lock);
                    ++counts[i];
                    if (! good) {
                        checks[i].passed = false;
                        checks[i].counterexamples.push_back(graph_to_graph6(g) + " (basis " + std::to_string(basis.size()) + ", built "
                            + std::to_string(built.size()) + ", bound " + std::to_string(ft_construct_bound(variants[i], basis.size())) + ")");
                    }
                }
            });
        for (std::size_t i = 0; i < variants.size(); ++i) {
            std::sort(checks[i].counterexamples.begin(), checks[i].counterexamples.end());
            checks[i].detail = std::to_string(counts[i]) + " connected graphs, " + std::to_string(checks[i].counterexamples.size()) + " violations";
        }
        return checks;
    }

    auto ek_checks(unsigned k, std::size_t n_max) -> std::vector<Check>
    {
        auto report = verify_mc_ek(k, n_max);
        const auto ks = std::to_string(k);
        std::vector<Check> checks;
        checks.push_back({"ek(" + ks + ") witness graph", report.construction_ok,
            "ek = " + std::to_string(report.ek) + ", witness graph order " + std::to_string(report.witness_order) + ", edim "
                + std::to_string(report.witness_edim) + ", clique " + std::to_string(report.witness_clique),
            {}});

        auto fg = family_to_graph(report.witness);
        Check trip{"ek(" + ks + ") clique round trip", true, {}, {}};
        if (report.witness.members.empty())
            trip.detail = "empty witness";
        else {
            auto back = clique_to_family(fg.graph, fg.clique, fg.landmarks);
            trip.passed = back.members.size() == report.witness.members.size() && is_union_distinct(back);
            trip.detail = "recovered " + family_to_string(back);
        }
        checks.push_back(std::move(trip));

        Check scan{"no graph with n <= " + std::to_string(n_max) + " has edim <= " + ks + " and clique > " + std::to_string(report.ek),
            report.counterexamples.empty(),
            std::to_string(report.graphs_scanned) + " graphs, " + std::to_string(report.large_cliques) + " with a larger clique",
            report.counterexamples};
        checks.push_back(std::move(scan));
        return checks;
    }

    auto render_value(const Json & j) -> std::string
    {
        if (j.is_string())
            return j.get<std::string>();
        if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json & x) { return x.is_primitive(); })) {
            std::string text;
            for (const auto & x : j)
                text += (text.empty() ? "" : " ") + render_value(x);
            return text.empty() ? "-" : text;
        }
        return j.dump();
    }
}

auto status_name(Status s) -> std::string
{
    switch (s) {
    case Status::ok:
        return "OK";
    case Status::violation:
        return "VIOLATION";
    case Status::error:
        return "ERROR";
    }
    return {};
}

auto exit_code(Status s) -> int
{
    switch (s) {
    case Status::ok:
        return 0;
    case Status::violation:
        return 1;
    case Status::error:
        return 2;
    }
    return 2;
}

auto to_json(const RunReport & r, bool timing) -> Json
{
    Json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["results"] = r.results;
    j["status"] = status_name(r.status);
    j["elapsed_ms"] = timing ? std::round(r.elapsed_ms * 1000) / 1000 : 0.0;
    return j;
}

auto render_table(const RunReport & r) -> std::string
{
    std::ostringstream out;
    out << r.command << ": " << status_name(r.status) << '\n';
    for (const auto & [key, value] : r.inputs.items())
        if (! value.is_null())
            out << "  " << key << " = " << render_value(value) << '\n';
    for (const auto & [key, value] : r.results.items()) {
        if (key == "checks") {
            for (const auto & c : value) {
                out << "  [" << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "] " << c["name"].get<std::string>() << ": "
                    << c["detail"].get<std::string>() << '\n';
                for (const auto & x : c["counterexamples"])
                    out << "         " << x.get<std::string>() << '\n';
            }
            continue;
        }
        if (value.is_object()) {
            out << "  " << key << ":\n";
            for (const auto & [inner, v] : value.items())
                out << "    " << inner << ": " << render_value(v) << '\n';
            continue;
        }
        out << "  " << key << ": " << render_value(value) << '\n';
    }
    return out.str();
}

auto cmd_dim(const DimOptions & o) -> RunReport
{
    Json inputs;
    inputs["input"] = o.input;
    inputs["variant"] = o.variant;
    inputs["ft"] = o.ft;
    inputs["format"] = o.format ? Json(*o.format) : Json();
    return guarded("dim", inputs, [&](RunReport & r) {
        auto v = Variant::parse(o.variant);
        auto g = read_graph(o.input, o.format);
        auto dm = all_pairs_distances(g);
        auto found = o.ft ? min_fault_tolerant(g, dm, v) : min_resolving(g, dm, v);

        bool verified = true;
        if (o.ft && ! found.no_nonempty_set)
            verified = is_fault_tolerant(g, dm, v, found.witness).ok;
        else if (! o.ft)
            verified = is_resolving(g, dm, v, found.witness).ok;

        r.results["order"] = g.order();
        r.results["size"] = g.size();
        r.results["measure"] = o.ft ? "fault-tolerant" : "resolving";
        r.results["dimension"] = found.dimension;
        r.results["witness"] = set_json(found.witness);
        r.results["verified"] = verified;
        if (o.ft)
            r.results["no_nonempty_set"] = found.no_nonempty_set;
        r.status = verified ? Status::ok : Status::violation;
    });
}

auto cmd_gen(const GenOptions & o) -> RunReport
{
    Json inputs;
    inputs["family"] = o.family;
    inputs["k"] = o.k;
    inputs["q"] = o.q ? Json(*o.q) : Json();
    inputs["lo"] = o.lo ? Json(*o.lo) : Json();
    inputs["hi"] = o.hi ? Json(*o.hi) : Json();
    inputs["out"] = o.out ? Json(*o.out) : Json();
    inputs["labels"] = o.labels ? Json(*o.labels) : Json();
    return guarded("gen", inputs, [&](RunReport & r) {
        const auto name = lower(o.family);
        LabeledFamily f;
        if (name == "j")
            f = build_J(o.k);
        else if (name == "h")
            f = build_H(o.k);
        else if (name == "a")
            f = build_A(o.k);
        else if (name == "i") {
            if (! o.q)
                throw UsageError("family I needs --q");
            f = build_I(o.k, *o.q);
        }
        else if (name == "dbox") {
            if (! o.lo || ! o.hi)
                throw UsageError("family Dbox needs --lo and --hi");
            f = build_D_box(o.k, parse_coords(*o.lo), parse_coords(*o.hi));
        }
        else
            throw UsageError("unknown family " + o.family + " (J, H, A, I or Dbox)");

        if (o.out)
            write_graph(*o.out, f.graph, o.format);
        if (o.labels) {
            std::ofstream out(*o.labels);
            if (! out)
                throw UsageError("cannot write " + *o.labels);
            for (Vertex v = 0; v < f.graph.order(); ++v)
                out << v << '\t' << f.labels[v].to_string() << '\n';
        }

        r.results["order"] = f.graph.order();
        r.results["size"] = f.graph.size();
        r.results["variant"] = f.variant.name();
        r.results["designated_landmarks"] = set_json(f.designated_landmarks);
        if (name == "i")
            r.results["coordinate_check"] = "passed";
        if (! o.out && f.graph.order() <= 62)
            r.results["graph6"] = graph_to_graph6(f.graph);
    });
}

auto cmd_ftbuild(const FtBuildOptions & o) -> RunReport
{
    Json inputs;
    inputs["input"] = o.input;
    inputs["variant"] = o.variant;
    inputs["set"] = o.set;
    inputs["format"] = o.format ? Json(*o.format) : Json();
    return guarded("ftbuild", inputs, [&](RunReport & r) {
        auto v = Variant::parse(o.variant);
        auto g = read_graph(o.input, o.format);
        auto s = parse_set(o.set);
        auto built = ft_construct(g, v, s);
        auto dm = all_pairs_distances(g);
        bool tolerant = ! built.empty() && is_fault_tolerant(g, dm, v, built).ok;
        auto bound = ft_construct_bound(v, s.size());

        r.results["input_set"] = set_json(s);
        r.results["output_set"] = set_json(built);
        r.results["size"] = built.size();
        r.results["bound"] = bound;
        r.results["fault_tolerant"] = tolerant;
        r.results["within_bound"] = built.size() <= bound;
        r.status = tolerant && built.size() <= bound ? Status::ok : Status::violation;
    });
}

auto cmd_verify(const VerifyOptions & o) -> RunReport
{
    Json inputs;
    inputs["suite"] = o.suite;
    inputs["max_n"] = o.max_n ? Json(*o.max_n) : Json();
    inputs["k"] = o.k ? Json(*o.k) : Json();
    return guarded("verify", inputs, [&](RunReport & r) {
        auto n_max = [&](std::size_t fallback) {
            auto n = o.max_n.value_or(fallback);
            if (n < 1 || n > 6)
                throw UsageError("--max-n must be between 1 and 6");
            return n;
        };
        auto k_in = [&](unsigned fallback, unsigned least) {
            auto k = o.k.value_or(fallback);
            if (k < least || k > 3)
                throw UsageError("--k must be between " + std::to_string(least) + " and 3");
            return k;
        };

        if (o.suite == "characterizations")
            finish(r, characterization_checks(n_max(5)));
        else if (o.suite == "degree")
            finish(r, degree_checks(n_max(6), k_in(3, 2)));
        else if (o.suite == "lower-bounds")
            finish(r, lower_bound_checks(k_in(3, 2)));
        else if (o.suite == "upper-bounds")
            finish(r, upper_bound_checks(n_max(6)));
        else if (o.suite == "ek")
            finish(r, ek_checks(k_in(2, 1), n_max(6)));
        else
            throw UsageError("unknown suite " + o.suite + " (characterizations, degree, lower-bounds, upper-bounds, ek)");
    });
}

auto cmd_ek(const EkOptions & o) -> RunReport
{
    Json inputs;
    inputs["k"] = o.k;
    inputs["strict"] = o.strict;
    inputs["out"] = o.out ? Json(*o.out) : Json();
    inputs["construct_graph"] = o.construct_graph ? Json(*o.construct_graph) : Json();
    return guarded("ek", inputs, [&](RunReport & r) {
        auto found = ek_bruteforce(o.k, o.strict);
        r.results["value"] = found.value;
        Json members = Json::array();
        for (auto m : found.witness.members)
            members.push_back(subset_to_string(m));
        r.results["witness"] = members;

        if (o.out) {
            std::ofstream out(*o.out);
            if (! out)
                throw UsageError("cannot write " + *o.out);
            write_family(out, found.witness);
        }
        if (o.construct_graph) {
            auto fg = family_to_graph(found.witness);
            write_graph(*o.construct_graph, fg.graph, std::nullopt);
            auto edim = min_resolving(fg.graph, Variant::edge()).dimension;
            auto clique = clique_number(fg.graph);
            Json graph;
            graph["order"] = fg.graph.order();
            graph["size"] = fg.graph.size();
            graph["landmarks"] = set_json(fg.landmarks);
            graph["edim"] = edim;
            graph["clique"] = clique;
            r.results["graph"] = graph;
            if (edim > o.k || clique < found.value)
                r.status = Status::violation;
        }
    });
}

auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Exact resolving-set computations, extremal constructions and verification suites"};
    app.require_subcommand(1);
    bool json = false, no_timing = false;
    app.add_flag("--json", json, "Print the JSON report instead of a table");
    app.add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 so reports are byte-stable");

    DimOptions dim;
    auto * dim_cmd = app.add_subcommand("dim", "Minimum resolving or fault-tolerant set of a graph");
    dim_cmd->add_option("--input", dim.input, "Graph file (.el or .g6)")->required();
    dim_cmd->add_option("--variant", dim.variant, "metric, edge, local, adjacency or trunc=K");
    dim_cmd->add_flag("--ft", dim.ft, "Fault-tolerant version");
    dim_cmd->add_option("--format", dim.format, "Override format detection (el or g6)");

    GenOptions gen;
    auto * gen_cmd = app.add_subcommand("gen", "Generate J, H, A, I or Dbox graphs");
    gen_cmd->add_option("--family", gen.family, "J, H, A, I or Dbox")->required();
    gen_cmd->add_option("--k", gen.k, "Family parameter")->required();
    gen_cmd->add_option("--q", gen.q, "Scale for I");
    gen_cmd->add_option("--lo", gen.lo, "Lower box corner for Dbox, e.g. 0,0");
    gen_cmd->add_option("--hi", gen.hi, "Upper box corner for Dbox, e.g. 2,2");
    gen_cmd->add_option("--out", gen.out, "Graph output file (.el or .g6)");
    gen_cmd->add_option("--labels", gen.labels, "Vertex label file");
    gen_cmd->add_option("--format", gen.format, "Override output format (el or g6)");

    FtBuildOptions ft;
    auto * ft_cmd = app.add_subcommand("ftbuild", "Grow a fault-tolerant set from a resolving set");
    ft_cmd->add_option("--input", ft.input, "Graph file (.el or .g6)")->required();
    ft_cmd->add_option("--variant", ft.variant, "metric, edge, adjacency or trunc=K");
    ft_cmd->add_option("--set", ft.set, "Resolving set, e.g. 0,3")->required();
    ft_cmd->add_option("--format", ft.format, "Override format detection (el or g6)");

    VerifyOptions verify;
    auto * verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", verify.suite, "characterizations, degree, lower-bounds, upper-bounds or ek")->required();
    verify_cmd->add_option("--max-n", verify.max_n, "Largest graph order scanned (at most 6)");
    verify_cmd->add_option("--k", verify.k, "Family or ground set parameter (at most 3)");

    EkOptions ek;
    auto * ek_cmd = app.add_subcommand("ek", "Largest union-distinct family over {1..k}");
    ek_cmd->add_option("--k", ek.k, "Ground set size")->required();
    ek_cmd->add_flag("--strict", ek.strict, "Also count a member with itself");
    ek_cmd->add_option("--out", ek.out, "Write the witness family here");
    ek_cmd->add_option("--construct-graph", ek.construct_graph, "Write the witness graph here (.el or .g6)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    RunReport report;
    if (dim_cmd->parsed())
        report = cmd_dim(dim);
    else if (gen_cmd->parsed())
        report = cmd_gen(gen);
    else if (ft_cmd->parsed())
        report = cmd_ftbuild(ft);
    else if (verify_cmd->parsed())
        report = cmd_verify(verify);
    else
        report = cmd_ek(ek);

    if (json)
        out << to_json(report, ! no_timing).dump(2) << '\n';
    else
        out << render_table(report);
    if (report.status == Status::error && ! json)
        err << "error: " << report.results.value("error", std::string{}) << '\n';
    return exit_code(report.status);
}

}
