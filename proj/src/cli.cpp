#include "ufr/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ufr/counting.hpp"
#include "ufr/errors.hpp"
#include "ufr/fubini.hpp"
#include "ufr/oracle.hpp"
#include "ufr/parking.hpp"
#include "ufr/permutation.hpp"
#include "ufr/weak_order.hpp"

namespace ufr {

namespace {

using nlohmann::json;

// Display form shared by tuples and permutations: digit word up to n = 9,
// comma-separated beyond.
std::string tuple_display(const PreferenceTuple& a) {
    return a.size() <= 9 ? a.to_word() : a.to_string();
}

std::string space_separated(const std::vector<int>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ' ';
        os << values[i];
    }
    return os.str();
}

std::string index_set_display(const std::vector<int>& index_set) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < index_set.size(); ++i) {
        if (i) os << ',';
        os << index_set[i];
    }
    os << '}';
    return os.str();
}

json interval_json(const BooleanInterval& b) {
    return json{{"min", b.min().to_string()},
                {"max", b.max().to_string()},
                {"index_set", b.index_set()},
                {"rank", b.rank()}};
}

json fiber_row_json(const PreferenceTuple& a, const BooleanInterval& b) {
    json row = interval_json(b);
    row["ufr"] = a.values();
    return row;
}

int workers_or_default(int workers) {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct CommandContext {
    CliConfig cfg;
    std::ostream& out;
    int exit_code = 0;
};

void cmd_count(CommandContext& ctx, int n, std::optional<int> rank, bool brute) {
    const ExactCount count = rank ? f_closed(n, *rank) : f_total(n);
    std::optional<ExactCount> oracle;
    if (brute) {
        if (rank) {
            const int cap = ctx.cfg.force ? std::max(n, kIntervalScanCap) : kIntervalScanCap;
            std::uint64_t hits = 0;
            for (const BruteInterval& b : brute_boolean_intervals(n, cap)) {
                if (b.rank == *rank) ++hits;
            }
            oracle = ExactCount(hits);
        } else {
            const int cap = ctx.cfg.force ? std::max(n, kTupleScanCap) : kTupleScanCap;
            oracle = ExactCount(
                scan_tuples(n, workers_or_default(ctx.cfg.workers), false, cap).unit_fubini);
        }
        if (*oracle != count) ctx.exit_code = 1;
    }
    const bool match = oracle && *oracle == count;
    switch (ctx.cfg.format) {
        case OutputFormat::Table:
            if (!brute) {
                ctx.out << count.to_string() << "\n";
            } else {
                ctx.out << "count " << count.to_string() << "\n";
                ctx.out << "brute " << oracle->to_string() << "\n";
                ctx.out << (match ? "MATCH" : "MISMATCH") << "\n";
            }
            break;
        case OutputFormat::Json: {
            json row{{"n", n}, {"count", count.to_string()}};
            if (rank) row["rank"] = *rank;
            if (brute) {
                row["brute"] = oracle->to_string();
                row["match"] = match;
            }
            ctx.out << row.dump() << "\n";
            break;
        }
        case OutputFormat::Csv:
            ctx.out << "n,rank,count" << (brute ? ",brute,match" : "") << "\n";
            ctx.out << n << ',' << (rank ? std::to_string(*rank) : "") << ','
                    << count.to_string();
            if (brute) {
                ctx.out << ',' << oracle->to_string() << ',' << (match ? "true" : "false");
            }
            ctx.out << "\n";
            break;
    }
}

void cmd_fiber(CommandContext& ctx, const std::string& pi_text) {
    const Permutation pi = Permutation::parse(pi_text);
    const AscentBlocks blocks = pi.ascent_blocks();
    const ExactCount count = fiber_count(pi);
    const std::vector<PreferenceTuple> elements = fiber(pi);

    std::vector<BooleanInterval> images;
    images.reserve(elements.size());
    for (const PreferenceTuple& a : elements) images.push_back(phi(a));

    switch (ctx.cfg.format) {
        case OutputFormat::Table: {
            ctx.out << "pi " << pi.to_string() << "\n";
            ctx.out << "fiber_count " << count.to_string() << "\n";
            ctx.out << "ascent_blocks";
            if (blocks.empty()) ctx.out << " -";
            for (const IndexRun& b : blocks) {
                ctx.out << " [" << b.first;
                if (b.last != b.first) ctx.out << ".." << b.last;
                ctx.out << "]";
            }
            ctx.out << "\n";
            ctx.out << "fibonacci_factors";
            if (blocks.empty()) ctx.out << " -";
            for (const IndexRun& b : blocks) {
                ctx.out << " F" << b.length() + 2 << "="
                        << fibonacci(b.length() + 2).to_string();
            }
            ctx.out << "\n";
            for (std::size_t i = 0; i < elements.size(); ++i) {
                const BooleanInterval& b = images[i];
                ctx.out << tuple_display(elements[i]) << " [" << b.min().to_string() << ", "
                        << b.max().to_string() << "] I=" << index_set_display(b.index_set())
                        << " rank=" << b.rank() << "\n";
            }
            break;
        }
        case OutputFormat::Json: {
            json blocks_json = json::array();
            json factors_json = json::array();
            for (const IndexRun& b : blocks) {
                blocks_json.push_back({b.first, b.last});
                factors_json.push_back(fibonacci(b.length() + 2).to_string());
            }
            ctx.out << json{{"pi", pi.to_string()},
                            {"fiber_count", count.to_string()},
                            {"ascent_blocks", blocks_json},
                            {"fibonacci_factors", factors_json}}
                           .dump()
                    << "\n";
            for (std::size_t i = 0; i < elements.size(); ++i) {
                ctx.out << fiber_row_json(elements[i], images[i]).dump() << "\n";
            }
            break;
        }
        case OutputFormat::Csv: {
            ctx.out << "ufr,min,max,index_set,rank\n";
            for (std::size_t i = 0; i < elements.size(); ++i) {
                const BooleanInterval& b = images[i];
                ctx.out << space_separated(elements[i].values()) << ','
                        << space_separated(b.min().one_line()) << ','
                        << space_separated(b.max().one_line()) << ','
                        << space_separated(b.index_set()) << ',' << b.rank() << "\n";
            }
            ctx.out << "total," << elements.size() << "\n";
            break;
        }
    }
}

void cmd_park(CommandContext& ctx, const std::string& pref_text, bool classify) {
    const PreferenceTuple a = PreferenceTuple::parse(pref_text);
    const ParkingResult r = park(a);

    const bool pf = is_parking_function(a);
    const bool upf = pf && is_unit_interval_pf(a);
    const bool fr = is_fubini_ranking(a);
    const bool ufr = is_unit_fubini(a);

    switch (ctx.cfg.format) {
        case OutputFormat::Table:
            if (r.success()) {
                ctx.out << "outcome " << r.outcome->to_string() << "\n";
            } else {
                ctx.out << "car " << r.failed_car << " could not park (preference "
                        << a[r.failed_car] << "; spots " << a[r.failed_car] << ".." << a.size()
                        << " already taken)\n";
                ctx.out << "occupancy";
                for (int spot = 1; spot <= a.size(); ++spot) {
                    const int car = r.occupancy[static_cast<std::size_t>(spot) - 1];
                    ctx.out << ' ' << (car == 0 ? "-" : std::to_string(car));
                }
                ctx.out << "\n";
            }
            if (classify) {
                ctx.out << "parking_function " << (pf ? "true" : "false") << "\n";
                ctx.out << "unit_interval_pf " << (upf ? "true" : "false") << "\n";
                ctx.out << "fubini_ranking " << (fr ? "true" : "false") << "\n";
                ctx.out << "unit_fubini " << (ufr ? "true" : "false") << "\n";
                if (ufr) ctx.out << "distinct_ranks " << distinct_ranks(a) << "\n";
            }
            break;
        case OutputFormat::Json: {
            json row{{"pref", a.values()}};
            if (r.success()) {
                row["outcome"] = r.outcome->to_string();
            } else {
                row["failed_car"] = r.failed_car;
                row["occupancy"] = r.occupancy;
            }
            if (classify) {
                row["parking_function"] = pf;
                row["unit_interval_pf"] = upf;
                row["fubini_ranking"] = fr;
                row["unit_fubini"] = ufr;
                if (ufr) row["distinct_ranks"] = distinct_ranks(a);
            }
            ctx.out << row.dump() << "\n";
            break;
        }
        case OutputFormat::Csv:
            ctx.out << "pref,outcome,failed_car";
            if (classify) ctx.out << ",parking_function,unit_interval_pf,fubini_ranking,unit_fubini,distinct_ranks";
            ctx.out << "\n";
            ctx.out << space_separated(a.values()) << ','
                    << (r.success() ? space_separated(r.outcome->one_line()) : "") << ','
                    << (r.success() ? "" : std::to_string(r.failed_car));
            if (classify) {
                ctx.out << ',' << (pf ? "true" : "false") << ',' << (upf ? "true" : "false")
                        << ',' << (fr ? "true" : "false") << ',' << (ufr ? "true" : "false")
                        << ',' << (ufr ? std::to_string(distinct_ranks(a)) : "");
            }
            ctx.out << "\n";
            break;
    }
}

void cmd_verify(CommandContext& ctx, int n) {
    VerifyOptions opts;
    opts.workers = workers_or_default(ctx.cfg.workers);
    if (ctx.cfg.force) {
        opts.tuple_cap = std::max(n, opts.tuple_cap);
        opts.interval_cap = std::max(n, opts.interval_cap);
    }
    const VerificationReport report = verify_suite(n, opts);
    switch (ctx.cfg.format) {
        case OutputFormat::Table:
            ctx.out << report.to_table();
            break;
        case OutputFormat::Json:
            ctx.out << report.to_json().dump() << "\n";
            break;
        case OutputFormat::Csv:
            ctx.out << "name,expected,actual,pass,elapsed_ms\n";
            for (const CheckResult& c : report.checks) {
                ctx.out << c.name << ",\"" << c.expected << "\",\"" << c.actual << "\","
                        << (c.pass ? "true" : "false") << ',' << c.elapsed_ms << "\n";
            }
            break;
    }
    if (!report.all_pass()) ctx.exit_code = 1;
}

void cmd_dot(CommandContext& ctx, int n, const std::string& highlight_min,
             const std::string& highlight_indices) {
    std::optional<BooleanInterval> highlight;
    if (!highlight_min.empty()) {
        std::vector<int> index_set;
        if (!highlight_indices.empty()) {
            std::stringstream ss{highlight_indices};
            std::string tok;
            while (std::getline(ss, tok, ',')) index_set.push_back(std::stoi(tok));
        }
        highlight.emplace(Permutation::parse(highlight_min), std::move(index_set));
    } else if (!highlight_indices.empty()) {
        throw std::invalid_argument("--highlight-I needs --highlight-min");
    }
    ctx.out << hasse_dot(n, highlight);
}

void cmd_enumerate(CommandContext& ctx, int n, const std::string& what,
                   std::optional<int> rank, std::optional<int> distinct) {
    if (what != "ufr" && what != "intervals" && what != "ufr-weakly-increasing") {
        throw std::invalid_argument("--what must be ufr, intervals, or ufr-weakly-increasing");
    }
    if (rank && distinct && *rank != n - *distinct) {
        throw std::invalid_argument("--rank " + std::to_string(*rank) + " and --distinct-ranks " +
                                    std::to_string(*distinct) + " contradict (rank = n - distinct)");
    }
    std::optional<int> rank_filter = rank;
    if (!rank_filter && distinct) rank_filter = n - *distinct;

    const int cap = ctx.cfg.force ? std::max(n, ctx.cfg.enumeration_cap) : ctx.cfg.enumeration_cap;
    std::uint64_t total = 0;

    auto emit_tuple = [&](const PreferenceTuple& a) {
        ++total;
        switch (ctx.cfg.format) {
            case OutputFormat::Table: ctx.out << tuple_display(a) << "\n"; break;
            case OutputFormat::Json: ctx.out << json{{"ufr", a.values()}}.dump() << "\n"; break;
            case OutputFormat::Csv: ctx.out << space_separated(a.values()) << "\n"; break;
        }
    };

    if (ctx.cfg.format == OutputFormat::Csv) {
        ctx.out << (what == "intervals" ? "min,max,index_set,rank" : "ufr") << "\n";
    }

    if (what == "ufr") {
        TupleStream stream(n, TuplePredicate::UnitFubini, cap);
        while (auto a = stream.next()) {
            if (rank_filter && distinct_ranks(*a) != n - *rank_filter) continue;
            emit_tuple(*a);
        }
    } else if (what == "ufr-weakly-increasing") {
        for (const PreferenceTuple& a : brute_weakly_increasing_ufr(n, std::max(cap, 12))) {
            if (rank_filter && distinct_ranks(a) != n - *rank_filter) continue;
            emit_tuple(a);
        }
    } else {
        BooleanIntervalStream stream(n, rank_filter, cap);
        while (auto b = stream.next()) {
            ++total;
            switch (ctx.cfg.format) {
                case OutputFormat::Table:
                    ctx.out << b->min().to_string() << ' ' << b->max().to_string() << " I="
                            << index_set_display(b->index_set()) << " rank=" << b->rank() << "\n";
                    break;
                case OutputFormat::Json: ctx.out << interval_json(*b).dump() << "\n"; break;
                case OutputFormat::Csv:
                    ctx.out << space_separated(b->min().one_line()) << ','
                            << space_separated(b->max().one_line()) << ','
                            << space_separated(b->index_set()) << ',' << b->rank() << "\n";
                    break;
            }
        }
    }

    switch (ctx.cfg.format) {
        case OutputFormat::Table: ctx.out << "total " << total << "\n"; break;
        case OutputFormat::Json: ctx.out << json{{"total", total}}.dump() << "\n"; break;
        case OutputFormat::Csv: ctx.out << "total," << total << "\n"; break;
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boolean intervals in the weak order of S_n and unit Fubini rankings"};
    app.require_subcommand(1);

    CommandContext ctx{CliConfig{}, out};

    std::map<std::string, OutputFormat> format_names{{"table", OutputFormat::Table},
                                                     {"json", OutputFormat::Json},
                                                     {"csv", OutputFormat::Csv}};
    app.add_option("--format", ctx.cfg.format, "output format: table, json, csv")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    app.add_option("--cap", ctx.cfg.enumeration_cap, "enumeration cap (default 8)")
        ->envname("UFR_ENUM_CAP");
    app.add_option("--workers", ctx.cfg.workers, "worker threads (0 = all cores)");
    app.add_flag("--force", ctx.cfg.force, "raise brute-force caps to the requested n");

    // global flags may also appear after the subcommand name
    auto add_subcommand = [&app](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };

    // count
    auto* count_cmd = add_subcommand("count", "Boolean interval counts f(n) and f(n,k)");
    int count_n = 0;
    std::optional<int> count_rank;
    bool count_brute = false;
    count_cmd->add_option("--n", count_n, "symmetric group size")->required();
    count_cmd->add_option("--rank", count_rank, "interval rank k");
    count_cmd->add_flag("--brute", count_brute, "cross-check against the brute-force oracle");
    count_cmd->callback([&]() { cmd_count(ctx, count_n, count_rank, count_brute); });

    // fiber
    auto* fiber_cmd =
        add_subcommand("fiber", "unit Fubini rankings parking to a given outcome");
    std::string fiber_pi;
    fiber_cmd->add_option("--pi", fiber_pi, "outcome permutation, one-line")->required();
    fiber_cmd->callback([&]() { cmd_fiber(ctx, fiber_pi); });

    // park
    auto* park_cmd = add_subcommand("park", "run the parking process on a preference tuple");
    std::string park_pref;
    bool park_classify = false;
    park_cmd->add_option("--pref", park_pref, "preference tuple, comma-separated")->required();
    park_cmd->add_flag("--classify", park_classify, "also report predicate classification");
    park_cmd->callback([&]() { cmd_park(ctx, park_pref, park_classify); });

    // verify
    auto* verify_cmd = add_subcommand("verify", "run the brute-force cross-check suite");
    int verify_n = 0;
    verify_cmd->add_option("--n", verify_n, "size to verify")->required();
    verify_cmd->callback([&]() { cmd_verify(ctx, verify_n); });

    // dot
    auto* dot_cmd = add_subcommand("dot", "emit the Hasse diagram of W(S_n) as DOT");
    int dot_n = 0;
    std::string dot_min, dot_indices;
    dot_cmd->add_option("--n", dot_n, "symmetric group size")->required();
    dot_cmd->add_option("--highlight-min", dot_min, "minimal element of interval to highlight");
    dot_cmd->add_option("--highlight-I", dot_indices,
                        "comma-separated index set of the highlighted interval");
    dot_cmd->callback([&]() { cmd_dot(ctx, dot_n, dot_min, dot_indices); });

    // enumerate
    auto* enum_cmd = add_subcommand("enumerate", "stream UFRs or Boolean intervals");
    int enum_n = 0;
    std::string enum_what;
    std::optional<int> enum_rank, enum_distinct;
    enum_cmd->add_option("--n", enum_n, "size")->required();
    enum_cmd->add_option("--what", enum_what, "ufr, intervals, or ufr-weakly-increasing")
        ->required();
    enum_cmd->add_option("--rank", enum_rank, "filter: interval rank k");
    enum_cmd->add_option("--distinct-ranks", enum_distinct, "filter: number of distinct ranks");
    enum_cmd->callback(
        [&]() { cmd_enumerate(ctx, enum_n, enum_what, enum_rank, enum_distinct); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return ctx.exit_code;
}

} // namespace ufr
