#include <vdw/cli.hpp>
#include <vdw/ap.hpp>
#include <vdw/cond_expect.hpp>
#include <vdw/error.hpp>
#include <vdw/gf2p.hpp>
#include <vdw/lll_derand.hpp>
#include <vdw/moser_fix.hpp>
#include <vdw/oracle.hpp>
#include <vdw/prob_construct.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace vdw::cli
{
    namespace
    {
        using Json = nlohmann::ordered_json;

        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        const std::vector<std::string> methods{"random", "condexp", "algebraic", "corollary", "moser", "mt-random", "lll-det"};

        auto uses_seed(const std::string & method) -> bool
        {
            return method == "random" || method == "moser" || method == "mt-random";
        }

        struct RunReport
        {
            std::string method;
            int k = 0;
            std::optional<double> epsilon;
            Number n = 0;
            std::optional<std::uint64_t> seed;
            std::string outcome;
            std::int64_t recolor_or_fix_calls = 0;
            double elapsed_ms = 0;
            std::optional<std::string> output_path;
        };

        template <typename T>
        auto or_null(const std::optional<T> & v) -> Json
        {
            return v ? Json(*v) : Json(nullptr);
        }

        auto to_json(const RunReport & r) -> Json
        {
            Json j;
            j["method"] = r.method;
            j["k"] = r.k;
            j["epsilon"] = or_null(r.epsilon);
            j["n"] = r.n;
            j["seed"] = or_null(r.seed);
            j["outcome"] = r.outcome;
            j["recolor_or_fix_calls"] = r.recolor_or_fix_calls;
            j["elapsed_ms"] = r.elapsed_ms;
            j["output_path"] = or_null(r.output_path);
            return j;
        }

        auto print_report(const RunReport & r, bool json, std::ostream & out) -> void
        {
            if (json) {
                out << to_json(r).dump() << "\n";
                return;
            }
            auto row = [&] (const std::string & key, const std::string & value) {
                out << std::left << std::setw(22) << key << value << "\n";
            };
            row("method", r.method);
            row("k", std::to_string(r.k));
            if (r.epsilon) {
                std::ostringstream e;
                e << *r.epsilon;
                row("epsilon", e.str());
            }
            row("n", std::to_string(r.n));
            if (r.seed)
                row("seed", std::to_string(*r.seed));
            row("outcome", r.outcome);
            row("recolor_or_fix_calls", std::to_string(r.recolor_or_fix_calls));
            std::ostringstream ms;
            ms << std::fixed << std::setprecision(3) << r.elapsed_ms;
            row("elapsed_ms", ms.str());
            row("output_path", r.output_path.value_or("-"));
        }

        struct ConstructRequest
        {
            std::string method;
            int k = 0;
            double epsilon = 0.5;
            std::uint64_t seed = 0;
            std::optional<Number> n;
            std::optional<int> t;
            std::optional<std::string> out;
            std::optional<std::string> dump_forest;
            std::optional<std::string> dump_table;
        };

        struct MethodRun
        {
            RunReport report;
            std::optional<Coloring> coloring;
        };

        auto write_file(const std::string & path, const std::string & content) -> void
        {
            std::ofstream f{path, std::ios::binary | std::ios::trunc};
            if (! f)
                throw std::runtime_error("cannot open " + path + " for writing");
            f << content;
            if (! f)
                throw std::runtime_error("failed writing " + path);
        }

        auto read_file(const std::string & path) -> std::string
        {
            std::ifstream f{path, std::ios::binary};
            if (! f)
                throw UsageError("cannot open " + path);
            std::ostringstream s;
            s << f.rdbuf();
            return s.str();
        }

        // Sizes always come from the modules; this only dispatches.
        auto run_method(const ConstructRequest & req) -> MethodRun
        {
            MethodRun run;
            auto & r = run.report;
            r.method = req.method;
            r.k = req.k;
            if (uses_seed(req.method))
                r.seed = req.seed;

            auto start = std::chrono::steady_clock::now();
            try {
                if (req.method == "random") {
                    auto res = construct_randomized(req.k, req.seed);
                    r.n = res.n;
                    run.coloring = res.coloring;
                }
                else if (req.method == "condexp") {
                    run.coloring = construct_derandomized(req.k);
                    r.n = run.coloring->n();
                }
                else if (req.method == "algebraic") {
                    const int p = req.k - 1;
                    if (! gf2p::is_prime(p))
                        throw UsageError("--method algebraic needs k-1 prime (k-1 = " + std::to_string(p)
                                + "); use --method corollary to pick the largest prime <= k-1 automatically");
                    run.coloring = gf2p::berlekamp_coloring(p);
                    r.n = run.coloring->n();
                }
                else if (req.method == "corollary") {
                    run.coloring = gf2p::corollary_coloring(req.k);
                    r.n = run.coloring->n();
                }
                else if (req.method == "moser") {
                    auto res = construct_moser(req.k, req.seed);
                    r.n = res.n;
                    r.recolor_or_fix_calls = res.forest.total_calls();
                    run.coloring = res.coloring;
                    if (req.dump_forest)
                        write_file(*req.dump_forest, res.forest.dump());
                }
                else if (req.method == "mt-random") {
                    auto res = construct_mt_randomized(req.k, req.seed);
                    r.n = res.n;
                    r.recolor_or_fix_calls = res.steps;
                    run.coloring = res.coloring;
                }
                else if (req.method == "lll-det") {
                    r.epsilon = req.epsilon;
                    if (req.n.has_value() != req.t.has_value())
                        throw UsageError("--n and --t must be given together");
                    std::optional<LllParameters> overrides;
                    if (req.n)
                        overrides = LllParameters{*req.n, *req.t};
                    r.n = overrides ? overrides->n : det_lll_parameters(req.k, req.epsilon).n;
                    auto res = construct_det_lll(req.k, req.epsilon, overrides);
                    r.recolor_or_fix_calls = res.recolorings;
                    run.coloring = std::move(res.coloring);
                    if (req.dump_table && res.table)
                        write_file(*req.dump_table, res.table->dump());
                }
                else
                    throw UsageError("unknown method " + req.method);

                r.outcome = run.coloring ? "proper" : "failed";
            }
            catch (const Error & e) {
                r.outcome = "error:" + std::string(to_string(e.code()));
                run.coloring.reset();
            }
            catch (const std::invalid_argument & e) {
                throw UsageError(e.what());
            }
            r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return run;
        }

        auto parse_range(const std::string & text) -> std::pair<int, int>
        {
            auto dots = text.find("..");
            if (dots == std::string::npos)
                throw UsageError("--k-range must look like A..B");
            try {
                std::size_t used = 0;
                int a = std::stoi(text.substr(0, dots), &used);
                if (used != dots)
                    throw UsageError("bad --k-range");
                auto rest = text.substr(dots + 2);
                int b = std::stoi(rest, &used);
                if (used != rest.size() || a > b)
                    throw UsageError("bad --k-range");
                return {a, b};
            }
            catch (const std::logic_error &) {
                throw UsageError("--k-range must look like A..B");
            }
        }
    }

    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Constructs and checks 2-colorings of [n] without monochromatic k-term arithmetic progressions", "vdw"};
        app.require_subcommand(1);

        ConstructRequest req;
        bool json = false;
        auto construct = app.add_subcommand("construct", "build a coloring with one of the construction methods");
        construct->add_option("--method", req.method, "construction method")->required()->check(CLI::IsMember(methods));
        construct->add_option("--k", req.k, "progression length")->required();
        construct->add_option("--epsilon", req.epsilon, "epsilon for lll-det")->capture_default_str();
        construct->add_option("--seed", req.seed, "seed for randomized methods")->capture_default_str();
        construct->add_option("--n", req.n, "lll-det domain size override (with --t)");
        construct->add_option("--t", req.t, "lll-det tree size override (with --n)");
        construct->add_option("--out", req.out, "write the coloring here");
        construct->add_option("--dump-forest", req.dump_forest, "moser: write the FIX forest here");
        construct->add_option("--dump-table", req.dump_table, "lll-det: write the color table here");
        construct->add_flag("--json", json, "print the report as JSON");

        int verify_k = 0;
        std::string verify_file;
        auto verify = app.add_subcommand("verify", "check a coloring file for monochromatic k-APs");
        verify->add_option("--k", verify_k, "progression length")->required();
        verify->add_option("--file", verify_file, "coloring file")->required();

        int oracle_k = 0;
        std::optional<Number> max_n;
        auto oracle = app.add_subcommand("oracle", "exact W(k,2) by backtracking (k = 3, 4), or colorability of [max-n]");
        oracle->add_option("--k", oracle_k, "progression length")->required();
        oracle->add_option("--max-n", max_n, "search bound");

        std::string bench_method, bench_range;
        int bench_seeds = 1;
        double bench_epsilon = 0.5;
        auto bench = app.add_subcommand("bench", "one JSON report line per (k, seed)");
        bench->add_option("--method", bench_method, "construction method")->required()->check(CLI::IsMember(methods));
        bench->add_option("--k-range", bench_range, "inclusive range A..B")->required();
        bench->add_option("--seeds", bench_seeds, "seeds 0..S-1 per k")->required()->check(CLI::PositiveNumber);
        bench->add_option("--epsilon", bench_epsilon, "epsilon for lll-det")->capture_default_str();

        std::vector<const char *> argv;
        for (const auto & a : args)
            argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? 0 : 2;
        }

        try {
            if (*construct) {
                if (req.k < 3)
                    throw UsageError("--k must be at least 3");
                auto run = run_method(req);
                if (run.coloring && req.out) {
                    write_file(*req.out, format_coloring(*run.coloring, req.k));
                    run.report.output_path = req.out;
                }
                print_report(run.report, json, out);
                return run.coloring ? 0 : 1;
            }

            if (*verify) {
                if (verify_k < 3)
                    throw UsageError("--k must be at least 3");
                ParsedColoring parsed;
                try {
                    parsed = parse_coloring(read_file(verify_file));
                }
                catch (const Error & e) {
                    err << "error: " << verify_file << ": " << e.what() << "\n";
                    return 1;
                }
                auto report = verify_proper(parsed.coloring, verify_k);
                if (report.proper) {
                    out << "proper k=" << verify_k << " n=" << parsed.coloring.n() << " aps_checked=" << report.aps_checked << "\n";
                    return 0;
                }
                const auto & w = *report.witness;
                out << "improper k=" << verify_k << " n=" << parsed.coloring.n()
                    << " witness a=" << w.a << " d=" << w.d << " color=" << int{parsed.coloring.color(w.a)} << "\n";
                return 1;
            }

            if (*oracle) {
                if (oracle_k < 3)
                    throw UsageError("--k must be at least 3");
                if (oracle_k == 3 || oracle_k == 4) {
                    try {
                        out << exact_w(oracle_k, max_n.value_or(64)) << "\n";
                        return 0;
                    }
                    catch (const Error & e) {
                        if (e.code() != ErrorCode::not_resolved)
                            throw;
                        out << "W(" << oracle_k << ",2) > " << *max_n << "\n";
                        return 1;
                    }
                }
                if (! max_n)
                    throw UsageError("exact values are only computed for k = 3, 4; give --max-n to test colorability of [max-n]");
                auto res = exists_proper(*max_n, oracle_k);
                if (res.coloring) {
                    out << "proper coloring of [" << *max_n << "] exists: " << res.coloring->to_string() << "\n";
                    return 0;
                }
                out << "no proper coloring of [" << *max_n << "]\n";
                return 1;
            }

            if (*bench) {
                auto [lo, hi] = parse_range(bench_range);
                if (lo < 3)
                    throw UsageError("--k-range must start at 3 or more");
                for (int k = lo ; k <= hi ; ++k)
                    for (int s = 0 ; s < bench_seeds ; ++s) {
                        ConstructRequest cell;
                        cell.method = bench_method;
                        cell.k = k;
                        cell.seed = static_cast<std::uint64_t>(s);
                        cell.epsilon = bench_epsilon;
                        auto run = run_method(cell);
                        out << to_json(run.report).dump() << "\n";
                    }
                return 0;
            }
        }
        catch (const UsageError & e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
        catch (const Error & e) {
            err << "error:" << to_string(e.code()) << ": " << e.what() << "\n";
            return 1;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << "\n";
            return 1;
        }
        return 2;
    }
}
