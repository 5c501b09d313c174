#pragma once

// Command implementations for the `alcuin` executable. Every command writes to
// caller-supplied streams and returns the process exit status:
//   0 success, 1 domain or verification failure, 2 usage error.

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "alcuin/alcuin.hpp"

namespace alcuin::cli {

using Json = nlohmann::basic_json<nlohmann::ordered_map, std::vector, std::string, bool, Int, unsigned __int128, double>;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// T(0..24) as published for Alcuin's sequence.
inline constexpr std::array<int, 25> kPublishedPrefix{0, 0, 0, 1, 0, 1, 1, 2, 1, 3, 2, 4, 3,
                                                      5, 4, 7, 5, 8, 7, 10, 8, 12, 10, 14, 12};

enum class OutputFormat { PlainText, Csv, Json };

inline std::optional<OutputFormat> parse_format(std::string_view text) {
    std::string key(text);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (key == "plain" || key == "text") return OutputFormat::PlainText;
    if (key == "csv") return OutputFormat::Csv;
    if (key == "json") return OutputFormat::Json;
    return std::nullopt;
}

/// Parses a decimal integer >= min_value; rejects signs, blanks and trailing junk.
inline std::optional<Int> parse_integer(std::string_view text, Int min_value) {
    if (text.empty()) return std::nullopt;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    if (value < min_value) return std::nullopt;
    return static_cast<Int>(value);
}

inline Int isqrt(Int n) {
    if (n < 0) throw std::domain_error("isqrt of a negative number");
    if (n < 2) return n;
    auto x = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
    // fix up the floating-point estimate
    while (x > 0 && x > n / x) --x;
    while (x + 1 <= n / (x + 1)) ++x;
    return x;
}

/// E = sqrt(area_sq_432 / 432) rounded half-to-even at `digits` decimals,
/// computed from the exact integer.
inline std::string area_decimal(Int area_sq_432, int digits = 6) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale = checked_mul(scale, 10);
    const Int num = checked_mul(area_sq_432, checked_mul(scale, scale));  // E^2 * scale^2 = num / 432
    Int s = isqrt(num / 432);
    // compare sqrt(num/432) with s + 1/2: 4*num vs 432*(2s+1)^2
    const Int lhs = checked_mul(4, num);
    const Int odd = checked_add(checked_mul(2, s), 1);
    const Int rhs = checked_mul(432, checked_mul(odd, odd));
    if (lhs > rhs || (lhs == rhs && s % 2 == 1)) ++s;

    std::string text = to_string(s);
    if (digits == 0) return text;
    if (text.size() <= static_cast<std::size_t>(digits)) text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
    text.insert(text.size() - static_cast<std::size_t>(digits), 1, '.');
    return text;
}

inline int cmd_count(Int p, CountMethod method, OutputFormat format, std::ostream& out) {
    const Int value = count(p, method);
    switch (format) {
    case OutputFormat::PlainText: out << to_string(value) << '\n'; break;
    case OutputFormat::Csv:
        out << "p,method,count\n" << to_string(p) << ',' << method_name(method) << ',' << to_string(value) << '\n';
        break;
    case OutputFormat::Json: {
        Json j;
        j["p"] = p;
        j["method"] = std::string(method_name(method));
        j["count"] = value;
        out << j.dump() << '\n';
        break;
    }
    }
    return kExitOk;
}

inline int cmd_enumerate(Int p, OutputFormat format, std::ostream& out) {
    const auto triples = enumerate_triples(p);
    switch (format) {
    case OutputFormat::PlainText:
        for (const auto& t : triples) out << to_string(t.a()) << ' ' << to_string(t.b()) << ' ' << to_string(t.c()) << '\n';
        break;
    case OutputFormat::Csv:
        out << "a,b,c\n";
        for (const auto& t : triples) out << to_string(t.a()) << ',' << to_string(t.b()) << ',' << to_string(t.c()) << '\n';
        break;
    case OutputFormat::Json: {
        Json j = Json::array();
        for (const auto& t : triples) j.push_back(Json::array({t.a(), t.b(), t.c()}));
        out << j.dump() << '\n';
        break;
    }
    }
    return kExitOk;
}

inline int cmd_max_area(Int p, OutputFormat format, std::ostream& out, std::ostream& err) {
    std::optional<MaxAreaResult> found;
    try {
        found = max_area_triple(p);
    } catch (const NoTriangle& e) {
        err << "alcuin: " << e.what() << '\n';
        return kExitFailure;
    }
    const MaxAreaResult& result = *found;
    const auto& t = result.triple;
    const std::string approx = area_decimal(result.area_sq_432);
    switch (format) {
    case OutputFormat::PlainText:
        out << "triple: " << to_string(t.a()) << ' ' << to_string(t.b()) << ' ' << to_string(t.c()) << '\n'
            << "v: " << result.v << '\n'
            << "area_sq_432: " << to_string(result.area_sq_432) << '\n'
            << "area: " << approx << '\n';
        break;
    case OutputFormat::Csv:
        out << "p,a,b,c,v,area_sq_432,area_approx\n"
            << to_string(p) << ',' << to_string(t.a()) << ',' << to_string(t.b()) << ',' << to_string(t.c()) << ','
            << result.v << ',' << to_string(result.area_sq_432) << ',' << approx << '\n';
        break;
    case OutputFormat::Json: {
        Json j;
        j["p"] = p;
        j["triple"] = Json::array({t.a(), t.b(), t.c()});
        j["v"] = result.v;
        j["area_sq_432"] = result.area_sq_432;
        j["area_approx"] = std::stod(approx);
        out << j.dump() << '\n';
        break;
    }
    }
    return kExitOk;
}

inline int cmd_table(Int p_min, Int p_max, OutputFormat format, std::ostream& out) {
    switch (format) {
    case OutputFormat::PlainText:
        for (Int p = p_min; p <= p_max; ++p) out << to_string(p) << ',' << to_string(count_closed_form(p)) << '\n';
        break;
    case OutputFormat::Csv:
        out << "p,count\n";
        for (Int p = p_min; p <= p_max; ++p) out << to_string(p) << ',' << to_string(count_closed_form(p)) << '\n';
        break;
    case OutputFormat::Json: {
        Json j = Json::array();
        for (Int p = p_min; p <= p_max; ++p) {
            Json row;
            row["p"] = p;
            row["count"] = count_closed_form(p);
            j.push_back(std::move(row));
        }
        out << j.dump() << '\n';
        break;
    }
    }
    return kExitOk;
}

struct Mismatch {
    std::string check;
    Int p = 0;
    std::optional<CountMethod> method;
    Int expected = 0;
    Int actual = 0;
};

struct VerifyReport {
    Int p_min = 1;
    Int p_max = 0;
    std::vector<CountMethod> methods;
    std::vector<std::pair<std::string, bool>> checks;
    std::optional<Mismatch> first_mismatch;
    std::vector<std::pair<CountMethod, double>> elapsed_ms;

    bool ok() const { return !first_mismatch.has_value(); }
};

namespace detail {

inline void keep_first(std::optional<Mismatch>& slot, Mismatch candidate) {
    if (!slot || candidate.p < slot->p) slot = std::move(candidate);
}

} // namespace detail

/// Checks every selected method against the brute-force count for p in
/// 1..p_max, then the series product, max-area argmax, bijection listing,
/// published prefix and odd-shift identity. The p-range is dealt round-robin
/// to `jobs` workers; the reported mismatch is the smallest p regardless of
/// which worker found it.
inline VerifyReport run_verify(Int p_max, std::vector<CountMethod> methods, unsigned jobs = 1) {
    using clock = std::chrono::steady_clock;
    VerifyReport report;
    report.p_max = p_max;
    report.methods = methods;
    jobs = std::max(1u, jobs);

    const auto limit = static_cast<std::size_t>(p_max);
    std::vector<Int> oracle(limit + 1, 0);
    std::vector<double> elapsed(kAllMethods.size(), 0.0);
    std::optional<Mismatch> agreement;
    std::mutex merge;

    auto index_of = [](CountMethod m) { return static_cast<std::size_t>(m); };

    auto worker = [&](unsigned id) {
        std::vector<double> local_elapsed(kAllMethods.size(), 0.0);
        std::optional<Mismatch> local;
        for (std::size_t p = 1 + id; p <= limit; p += jobs) {
            const auto start = clock::now();
            const Int expected = count_bruteforce(static_cast<Int>(p));
            local_elapsed[index_of(CountMethod::BruteForce)] +=
                std::chrono::duration<double, std::milli>(clock::now() - start).count();
            oracle[p] = expected;
            for (const auto m : methods) {
                if (m == CountMethod::BruteForce) continue;
                const auto t0 = clock::now();
                const Int actual = count(static_cast<Int>(p), m);
                local_elapsed[index_of(m)] += std::chrono::duration<double, std::milli>(clock::now() - t0).count();
                if (actual != expected && (!local || static_cast<Int>(p) < local->p))
                    local = Mismatch{"method-agreement", static_cast<Int>(p), m, expected, actual};
            }
        }
        std::lock_guard lock(merge);
        for (std::size_t i = 0; i < elapsed.size(); ++i) elapsed[i] += local_elapsed[i];
        if (local) detail::keep_first(agreement, *local);
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    }

    std::optional<Mismatch> first = agreement;
    report.checks.emplace_back("method agreement", !agreement.has_value());

    bool prefix_ok = true;
    for (std::size_t p = 0; p <= std::min<std::size_t>(limit, kPublishedPrefix.size() - 1); ++p) {
        if (oracle[p] != kPublishedPrefix[p]) {
            prefix_ok = false;
            detail::keep_first(first, Mismatch{"sequence-prefix", static_cast<Int>(p), std::nullopt,
                                               kPublishedPrefix[p], oracle[p]});
            break;
        }
    }
    report.checks.emplace_back("sequence prefix", prefix_ok);

    const auto product_gap = series::first_product_mismatch(limit);
    if (product_gap) {
        const auto table = series::alcuin_coefficients(limit);
        const auto product =
            series::series_multiply(series::series_multiply(series::geometric_series(2, limit), series::geometric_series(3, limit)),
                                    series::geometric_series(4, limit));
        detail::keep_first(first, Mismatch{"series-product", static_cast<Int>(*product_gap), std::nullopt,
                                           table.coefficients[*product_gap], product[*product_gap]});
    }
    report.checks.emplace_back("series product", !product_gap.has_value());

    bool argmax_ok = true;
    const Int geometry_limit = std::min<Int>(p_max, 2000);
    for (Int p = 3; p <= geometry_limit && argmax_ok; ++p) {
        if (p == 4) continue;
        const auto closed = max_area_triple(p);
        std::optional<TriangleTriple> scanned;
        try {
            scanned = area_argmax_bruteforce(p);
        } catch (const std::logic_error&) {
            // tie for the maximum
        }
        const bool identity = checked_mul(27, heron_16esq(closed.triple).value) == closed.area_sq_432;
        if (!scanned || *scanned != closed.triple || !identity) {
            argmax_ok = false;
            detail::keep_first(first, Mismatch{"max-area", p, std::nullopt, closed.area_sq_432,
                                               checked_mul(27, heron_16esq(scanned.value_or(closed.triple)).value)});
        }
    }
    report.checks.emplace_back("max-area argmax", argmax_ok);

    bool bijection_ok = true;
    for (Int p = 1; p <= geometry_limit && bijection_ok; ++p) {
        auto listed = enumerate_triples(p);
        auto generated = enumerate_bijection(p);
        std::sort(generated.begin(), generated.end());
        const bool distinct = std::adjacent_find(generated.begin(), generated.end()) == generated.end();
        if (!distinct || generated != listed) {
            bijection_ok = false;
            detail::keep_first(first, Mismatch{"bijection", p, std::nullopt, static_cast<Int>(listed.size()),
                                               static_cast<Int>(generated.size())});
        }
    }
    report.checks.emplace_back("bijection enumeration", bijection_ok);

    bool shift_ok = true;
    for (std::size_t p = 1; p + 3 <= limit; p += 2) {
        if (oracle[p] != oracle[p + 3]) {
            shift_ok = false;
            detail::keep_first(first, Mismatch{"odd-shift", static_cast<Int>(p), std::nullopt, oracle[p], oracle[p + 3]});
            break;
        }
    }
    report.checks.emplace_back("odd-shift identity", shift_ok);

    report.first_mismatch = first;
    for (const auto m : kAllMethods) {
        const bool selected = std::find(methods.begin(), methods.end(), m) != methods.end();
        if (selected || m == CountMethod::BruteForce) report.elapsed_ms.emplace_back(m, elapsed[index_of(m)]);
    }
    return report;
}

inline std::string format_ms(double ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ms;
    return os.str();
}

inline int cmd_verify(Int p_max, const std::vector<CountMethod>& methods, OutputFormat format, bool timing,
                      unsigned jobs, std::ostream& out) {
    const VerifyReport report = run_verify(p_max, methods, jobs);
    std::string names;
    for (const auto m : report.methods) names += (names.empty() ? "" : ",") + std::string(method_name(m));

    switch (format) {
    case OutputFormat::PlainText:
        out << "verify p=" << to_string(report.p_min) << ".." << to_string(report.p_max) << " methods=" << names << '\n';
        for (const auto& [name, ok] : report.checks) out << name << (ok ? " OK" : " FAILED") << '\n';
        if (report.first_mismatch) {
            const auto& m = *report.first_mismatch;
            out << "first mismatch: check=" << m.check << " p=" << to_string(m.p);
            if (m.method) out << " method=" << method_name(*m.method);
            out << " expected=" << to_string(m.expected) << " actual=" << to_string(m.actual) << '\n';
        }
        if (timing)
            for (const auto& [m, ms] : report.elapsed_ms) out << "elapsed " << method_name(m) << ' ' << format_ms(ms) << " ms\n";
        out << (report.ok() ? "OK" : "FAILED") << '\n';
        break;
    case OutputFormat::Csv:
        out << "check,status\n";
        for (const auto& [name, ok] : report.checks) out << name << ',' << (ok ? "ok" : "failed") << '\n';
        if (timing) {
            out << "method,elapsed_ms\n";
            for (const auto& [m, ms] : report.elapsed_ms) out << method_name(m) << ',' << format_ms(ms) << '\n';
        }
        break;
    case OutputFormat::Json: {
        Json j;
        j["p_min"] = report.p_min;
        j["p_max"] = report.p_max;
        j["methods"] = Json::array();
        for (const auto m : report.methods) j["methods"].push_back(std::string(method_name(m)));
        j["checks"] = Json::object();
        for (const auto& [name, ok] : report.checks) j["checks"][name] = ok;
        if (report.first_mismatch) {
            const auto& m = *report.first_mismatch;
            Json mm;
            mm["check"] = m.check;
            mm["p"] = m.p;
            mm["method"] = m.method ? Json(std::string(method_name(*m.method))) : Json(nullptr);
            mm["expected"] = m.expected;
            mm["actual"] = m.actual;
            j["first_mismatch"] = mm;
        } else {
            j["first_mismatch"] = nullptr;
        }
        if (timing) {
            j["elapsed_ms"] = Json::object();
            for (const auto& [m, ms] : report.elapsed_ms) j["elapsed_ms"][std::string(method_name(m))] = ms;
        }
        j["ok"] = report.ok();
        out << j.dump() << '\n';
        break;
    }
    }
    return report.ok() ? kExitOk : kExitFailure;
}

/// Wall-clock totals for computing T(1..p_max) `reps` times with each method.
inline int cmd_bench(Int p_max, int reps, const std::vector<CountMethod>& methods, OutputFormat format, bool timing,
                     std::ostream& out) {
    using clock = std::chrono::steady_clock;
    struct Row {
        CountMethod method;
        double total_ms;
        Int checksum;
    };
    std::vector<Row> rows;
    for (const auto m : methods) {
        Int checksum = 0;
        const auto start = clock::now();
        for (int r = 0; r < reps; ++r)
            for (Int p = 1; p <= p_max; ++p) checksum += count(p, m);
        rows.push_back({m, std::chrono::duration<double, std::milli>(clock::now() - start).count(), checksum / reps});
    }

    switch (format) {
    case OutputFormat::PlainText:
        out << "bench p=1.." << to_string(p_max) << " reps=" << reps << '\n';
        for (const auto& row : rows) {
            out << std::left << std::setw(14) << method_name(row.method) << " sum=" << to_string(row.checksum);
            if (timing) out << " total_ms=" << format_ms(row.total_ms);
            out << '\n';
        }
        break;
    case OutputFormat::Csv:
        out << (timing ? "method,p_max,reps,sum,total_ms\n" : "method,p_max,reps,sum\n");
        for (const auto& row : rows) {
            out << method_name(row.method) << ',' << to_string(p_max) << ',' << reps << ',' << to_string(row.checksum);
            if (timing) out << ',' << format_ms(row.total_ms);
            out << '\n';
        }
        break;
    case OutputFormat::Json: {
        Json j = Json::array();
        for (const auto& row : rows) {
            Json o;
            o["method"] = std::string(method_name(row.method));
            o["p_max"] = p_max;
            o["reps"] = reps;
            o["sum"] = row.checksum;
            if (timing) o["total_ms"] = row.total_ms;
            j.push_back(std::move(o));
        }
        out << j.dump() << '\n';
        break;
    }
    }
    return kExitOk;
}

/// Parses `args` (without the program name) and runs the selected command.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Count, list and area-optimize integer triangles of a given perimeter", "alcuin"};
    app.require_subcommand(1);

    std::string format_text = "plain";
    std::string output_path;
    std::vector<std::string> method_texts;
    int reps = 1;
    bool no_timing = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string p_text, p_min_text, p_max_text;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "plain, csv or json");
        sub->add_option("--output", output_path, "write to this file instead of standard output");
    };

    auto* count_cmd = app.add_subcommand("count", "number of triangles with perimeter p");
    count_cmd->add_option("p", p_text, "perimeter")->required();
    count_cmd->add_option("--method", method_texts, "closed-form, mod12, bijection-sum, series or brute-force");
    common(count_cmd);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list triangles with perimeter p");
    enumerate_cmd->add_option("p", p_text, "perimeter")->required();
    common(enumerate_cmd);

    auto* max_area_cmd = app.add_subcommand("max-area", "largest-area triangle with perimeter p");
    max_area_cmd->add_option("p", p_text, "perimeter")->required();
    common(max_area_cmd);

    auto* table_cmd = app.add_subcommand("table", "T(p) for p in [p_min, p_max]");
    table_cmd->add_option("p_min", p_min_text, "first perimeter")->required();
    table_cmd->add_option("p_max", p_max_text, "last perimeter")->required();
    common(table_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "cross-check all methods for p in 1..p_max");
    verify_cmd->add_option("p_max", p_text, "last perimeter")->required();
    verify_cmd->add_option("--method", method_texts, "methods to compare (default: all)")->delimiter(',');
    verify_cmd->add_flag("--no-timing", no_timing, "omit timings");
    verify_cmd->add_option("--jobs", jobs, "worker threads");
    common(verify_cmd);

    auto* bench_cmd = app.add_subcommand("bench", "time each method over p in 1..p_max");
    bench_cmd->add_option("p_max", p_text, "last perimeter")->required();
    bench_cmd->add_option("--method", method_texts, "methods to time (default: all)")->delimiter(',');
    bench_cmd->add_option("--reps", reps, "repetitions");
    bench_cmd->add_flag("--no-timing", no_timing, "omit timings");
    common(bench_cmd);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto usage = [&](const std::string& message) {
        err << "alcuin: " << message << '\n';
        return kExitUsage;
    };

    const auto format = parse_format(format_text);
    if (!format) return usage("unknown format '" + format_text + "' (expected plain, csv or json)");

    std::vector<CountMethod> methods;
    for (const auto& text : method_texts) {
        const auto m = parse_method(text);
        if (!m) return usage("unknown method '" + text + "'");
        if (std::find(methods.begin(), methods.end(), *m) == methods.end()) methods.push_back(*m);
    }

    auto positive = [&](const std::string& text) { return parse_integer(text, 1); };

    std::ofstream file;
    std::ostream* sink = &out;
    auto open_output = [&]() -> bool {
        if (output_path.empty()) return true;
        file.open(output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "alcuin: cannot open '" << output_path << "' for writing\n";
            return false;
        }
        sink = &file;
        return true;
    };
    auto finish = [&](int status) {
        if (file.is_open()) {
            file.flush();
            if (!file) {
                err << "alcuin: error writing '" << output_path << "'\n";
                return kExitFailure;
            }
        }
        return status;
    };

    try {
        if (count_cmd->parsed()) {
            const auto p = positive(p_text);
            if (!p) return usage("count expects a positive integer perimeter, got '" + p_text + "'");
            if (methods.size() > 1) return usage("count takes a single --method");
            if (!open_output()) return kExitFailure;
            return finish(cmd_count(*p, methods.empty() ? CountMethod::ClosedForm : methods.front(), *format, *sink));
        }
        if (enumerate_cmd->parsed()) {
            const auto p = positive(p_text);
            if (!p) return usage("enumerate expects a positive integer perimeter, got '" + p_text + "'");
            if (!open_output()) return kExitFailure;
            return finish(cmd_enumerate(*p, *format, *sink));
        }
        if (max_area_cmd->parsed()) {
            const auto p = positive(p_text);
            if (!p) return usage("max-area expects a positive integer perimeter, got '" + p_text + "'");
            if (!open_output()) return kExitFailure;
            return finish(cmd_max_area(*p, *format, *sink, err));
        }
        if (table_cmd->parsed()) {
            const auto lo = parse_integer(p_min_text, 0);
            const auto hi = parse_integer(p_max_text, 0);
            if (!lo || !hi) return usage("table expects non-negative integers p_min p_max");
            if (*lo > *hi) return usage("table range is empty: p_min " + p_min_text + " > p_max " + p_max_text);
            if (!open_output()) return kExitFailure;
            return finish(cmd_table(*lo, *hi, *format, *sink));
        }
        if (verify_cmd->parsed()) {
            const auto p = positive(p_text);
            if (!p) return usage("verify expects a positive integer p_max, got '" + p_text + "'");
            if (methods.empty()) methods.assign(kAllMethods.begin(), kAllMethods.end());
            if (jobs < 1) return usage("--jobs must be at least 1");
            if (!open_output()) return kExitFailure;
            return finish(cmd_verify(*p, methods, *format, !no_timing, jobs, *sink));
        }
        if (bench_cmd->parsed()) {
            const auto p = positive(p_text);
            if (!p) return usage("bench expects a positive integer p_max, got '" + p_text + "'");
            if (reps < 1) return usage("--reps must be at least 1");
            if (methods.empty()) methods.assign(kAllMethods.begin(), kAllMethods.end());
            if (!open_output()) return kExitFailure;
            return finish(cmd_bench(*p, reps, methods, *format, !no_timing, *sink));
        }
    } catch (const RangeError& e) {
        err << "alcuin: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace alcuin::cli
