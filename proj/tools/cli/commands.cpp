#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "cli/parse_poly.hpp"
#include "knotsurg/error.hpp"

namespace knotsurg::cli {

namespace {

Integer parse_integer(const std::string& s, const char* flag)
{
    Integer n;
    std::string body = s;
    if (!body.empty() && body.front() == '+')
        body.erase(0, 1);
    if (body.empty() || body.find_first_not_of("-0123456789") != std::string::npos ||
        n.set_str(body, 10) != 0)
        throw ValidationError(std::string(flag) + " expects an integer, got '" + s + "'");
    return n;
}

std::uint64_t parse_u64(const std::string& s, const char* flag)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ValidationError(std::string(flag) + " expects a nonnegative integer, got '" + s + "'");
    return v;
}

SurgeryCoefficient parse_coefficient(const std::string& s)
{
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return SurgeryCoefficient(parse_integer(s, "--coeff"), 1);
    return SurgeryCoefficient(parse_integer(s.substr(0, slash), "--coeff"),
                              parse_integer(s.substr(slash + 1), "--coeff"));
}

AlexanderPolynomial read_delta(const std::string& s) { return normalize_alexander(parse_poly(s)); }

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// ------------------------------------------------------------ commands

json cmd_norm(const std::string& poly, const std::string& d)
{
    const NormValue v = norm_d(parse_poly(poly), CyclotomicIndex(parse_u64(d, "--d")));
    return {{"norm", big(v.value())}};
}

json cmd_norm_total(const std::string& poly, const std::string& d)
{
    const NormValue v = norm_total(parse_poly(poly), CyclotomicIndex(parse_u64(d, "--d")));
    return {{"norm_total", big(v.value())}};
}

json cmd_knot_invariants(const std::string& delta)
{
    const AlexanderPolynomial a = read_delta(delta);
    return to_json(check_arf_consistency(a), a);
}

json cmd_check_t11(const std::string& delta, const std::string& coeff)
{
    return to_json(check_theorem_seifert(read_delta(delta), parse_coefficient(coeff)));
}

json cmd_check_main1(const std::string& delta, const std::string& q, const std::string& lifted)
{
    std::optional<AlexanderPolynomial> lifted_poly;
    if (!lifted.empty())
        lifted_poly = read_delta(lifted);
    const CoveringData cov = build_covering(read_delta(delta), parse_integer(q, "--q"), std::move(lifted_poly));
    return to_json(check_main1(cov));
}

json cmd_check_main2(const std::string& delta, const std::string& q, const std::string& x5,
                     const std::string& lambda_sigma)
{
    const Integer x5v = parse_integer(x5, "--x5");
    if (x5v < 0)
        throw ValidationError("--x5 must be nonnegative");
    return to_json(check_main2(parse_integer(lambda_sigma, "--lambda-sigma"), read_delta(delta),
                               parse_integer(q, "--q"), NormValue(x5v)));
}

json cmd_candidates(const std::string& m, int n)
{
    json list = json::array();
    for (const auto& c : multiplicity_candidates(parse_u64(m, "--m"), n)) {
        json entry = json::array();
        for (auto x : c)
            entry.push_back(std::to_string(x));
        list.push_back(std::move(entry));
    }
    return {{"m", m}, {"n", n}, {"candidates", std::move(list)}};
}

// ---------------------------------------------------------- scan-table

ReportEnvelope process_record(const TableRecord& rec, const ScanTemplate& t)
{
    ReportEnvelope env;
    env.command = {{"subcommand", t.command}, {"name", rec.name}, {"delta", rec.alexander}};
    if (t.command == "knot-invariants") {
        env.result = cmd_knot_invariants(rec.alexander);
    } else if (t.command == "check-t11") {
        env.command["coeff"] = t.coeff;
        env.result = cmd_check_t11(rec.alexander, t.coeff);
    } else if (t.command == "check-main1") {
        env.command["q"] = t.q;
        env.result = cmd_check_main1(rec.alexander, t.q, "");
    } else if (t.command == "norm" || t.command == "norm-total") {
        const std::string d = std::to_string(t.d);
        env.command["d"] = d;
        // Table entries are knot polynomials; normalize before taking norms.
        const std::string normalized = to_string(read_delta(rec.alexander).poly());
        env.result = t.command == "norm" ? cmd_norm(normalized, d) : cmd_norm_total(normalized, d);
    } else {
        throw ValidationError("unsupported scan-table command '" + t.command + "'");
    }
    return env;
}

void add_poly_option(CLI::App* sub, const char* flag, std::string& target, const char* help)
{
    sub->add_option(flag, target, help)->required();
}

} // namespace

std::vector<TableRecord> read_table(const std::string& path, std::vector<std::string>& warnings)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot read knot table '" + path + "'");
    std::vector<TableRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            const json j = json::parse(line);
            records.push_back({lineno, j.at("name").get<std::string>(), j.at("alexander").get<std::string>()});
        } catch (const json::exception& e) {
            warnings.push_back("line " + std::to_string(lineno) + ": malformed record: " + e.what());
        }
    }
    return records;
}

TableScan scan_table(const std::vector<TableRecord>& records, const ScanTemplate& tmpl)
{
    static const std::vector<std::string> supported = {"knot-invariants", "check-t11", "check-main1", "norm",
                                                       "norm-total"};
    if (std::find(supported.begin(), supported.end(), tmpl.command) == supported.end())
        throw ValidationError("unsupported scan-table command '" + tmpl.command + "'");

    // Collect-then-emit: workers fill slots, output follows input order.
    std::vector<std::optional<ReportEnvelope>> slots(records.size());
    std::vector<std::string> errors(records.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < records.size(); i = next++) {
            try {
                slots[i] = process_record(records[i], tmpl);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(tmpl.jobs, static_cast<unsigned>(records.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < jobs; ++k)
            pool.emplace_back(worker);
    }

    TableScan scan;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (slots[i])
            scan.results.push_back(std::move(*slots[i]));
        else
            scan.warnings.push_back("line " + std::to_string(records[i].line) + " (" + records[i].name +
                                    "): " + errors[i]);
    }
    return scan;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact knot and Dehn-surgery invariants with Seifert-surgery obstruction reports", "knotsurg"};
    app.require_subcommand(1);
    bool stamp = false;
    app.add_flag("--stamp", stamp, "Add a UTC timestamp to the output envelope");

    std::string poly, d, delta, coeff, q, lifted, x5, lambda_sigma, m, table, tmpl_command = "knot-invariants";
    int n = 3;
    unsigned jobs = 1;

    auto* norm = app.add_subcommand("norm", "Cyclotomic norm |f|_d");
    add_poly_option(norm, "--poly", poly, "Laurent polynomial in t");
    norm->add_option("--d", d, "Root-of-unity order d >= 1")->required();

    auto* norm_tot = app.add_subcommand("norm-total", "Total norm ||f||_d over the divisors of d");
    add_poly_option(norm_tot, "--poly", poly, "Laurent polynomial in t");
    norm_tot->add_option("--d", d, "Root-of-unity order d >= 1")->required();

    auto* inv = app.add_subcommand("knot-invariants", "Normalized Alexander polynomial, determinant, a2, Arf");
    add_poly_option(inv, "--delta", delta, "Alexander polynomial of K");

    auto* t11 = app.add_subcommand("check-t11", "Surgery coefficients on knots with Delta = t^2-3t+1");
    add_poly_option(t11, "--delta", delta, "Alexander polynomial of K");
    t11->add_option("--coeff", coeff, "Surgery coefficient p/q")->required();

    auto* main1 = app.add_subcommand("check-main1", "Fiber count of Sigma(K; 2/q)");
    add_poly_option(main1, "--delta", delta, "Alexander polynomial of K");
    main1->add_option("--q", q, "Odd surgery denominator")->required();
    main1->add_option("--delta-lifted", lifted, "Alexander polynomial of the lifted knot in the double branched cover");

    auto* main2 = app.add_subcommand("check-main2", "Non-Seifert certificate for Sigma(K; 2/q)");
    add_poly_option(main2, "--delta", delta, "Alexander polynomial of K");
    main2->add_option("--q", q, "Odd surgery denominator")->required();
    main2->add_option("--x5", x5, "The invariant |X|_5 of the double cover X")->required();
    main2->add_option("--lambda-sigma", lambda_sigma, "Lescop invariant of the ambient homology sphere")->required();

    auto* cand = app.add_subcommand("candidates", "Odd pairwise-coprime factorizations p_3...p_N = m");
    cand->add_option("--m", m, "Odd m >= 3")->required();
    cand->add_option("--n", n, "Number of singular fibers N >= 3")->required();

    auto* scan = app.add_subcommand("scan-table", "Apply a command to every record of a JSON-lines knot table");
    scan->add_option("--table", table, "Path to the JSONL table")->required();
    scan->add_option("--command", tmpl_command, "knot-invariants | check-t11 | check-main1 | norm | norm-total")
        ->capture_default_str();
    scan->add_option("--coeff", coeff, "Surgery coefficient for check-t11");
    scan->add_option("--q", q, "Odd q for check-main1");
    scan->add_option("--d", d, "d for norm / norm-total");
    scan->add_option("--jobs,-j", jobs, "Worker threads")->capture_default_str();

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("knotsurg");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitInputError;
    }

    try {
        if (const char* cap = std::getenv("KNOTSURG_MAX_D"); cap && *cap)
            set_max_cyclotomic_index(parse_u64(cap, "KNOTSURG_MAX_D"));

        ReportEnvelope env;
        if (norm->parsed()) {
            env.command = {{"subcommand", "norm"}, {"poly", poly}, {"d", d}};
            env.result = cmd_norm(poly, d);
        } else if (norm_tot->parsed()) {
            env.command = {{"subcommand", "norm-total"}, {"poly", poly}, {"d", d}};
            env.result = cmd_norm_total(poly, d);
        } else if (inv->parsed()) {
            env.command = {{"subcommand", "knot-invariants"}, {"delta", delta}};
            env.result = cmd_knot_invariants(delta);
        } else if (t11->parsed()) {
            env.command = {{"subcommand", "check-t11"}, {"delta", delta}, {"coeff", coeff}};
            env.result = cmd_check_t11(delta, coeff);
        } else if (main1->parsed()) {
            env.command = {{"subcommand", "check-main1"}, {"delta", delta}, {"q", q}};
            if (!lifted.empty())
                env.command["delta_lifted"] = lifted;
            env.result = cmd_check_main1(delta, q, lifted);
        } else if (main2->parsed()) {
            env.command = {{"subcommand", "check-main2"}, {"delta", delta}, {"q", q}, {"x5", x5},
                           {"lambda_sigma", lambda_sigma}};
            env.result = cmd_check_main2(delta, q, x5, lambda_sigma);
        } else if (cand->parsed()) {
            env.command = {{"subcommand", "candidates"}, {"m", m}, {"n", n}};
            env.result = cmd_candidates(m, n);
        } else if (scan->parsed()) {
            ScanTemplate tmpl;
            tmpl.command = tmpl_command;
            tmpl.coeff = coeff;
            tmpl.q = q;
            tmpl.jobs = jobs;
            env.command = {{"subcommand", "scan-table"}, {"table", table}, {"command", tmpl_command}};
            if (tmpl_command == "check-t11") {
                if (coeff.empty())
                    throw ValidationError("scan-table --command check-t11 requires --coeff");
                env.command["coeff"] = coeff;
            } else if (tmpl_command == "check-main1") {
                if (q.empty())
                    throw ValidationError("scan-table --command check-main1 requires --q");
                env.command["q"] = q;
            } else if (tmpl_command == "norm" || tmpl_command == "norm-total") {
                if (d.empty())
                    throw ValidationError("scan-table --command " + tmpl_command + " requires --d");
                tmpl.d = parse_u64(d, "--d");
                env.command["d"] = d;
            }
            auto records = read_table(table, env.warnings);
            TableScan result = scan_table(records, tmpl);
            json list = json::array();
            for (const auto& r : result.results)
                list.push_back(r);
            env.result = std::move(list);
            env.warnings.insert(env.warnings.end(), result.warnings.begin(), result.warnings.end());
        }
        if (stamp)
            env.timestamp = utc_timestamp();
        out << emit(env);
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitInputError;
}

} // namespace knotsurg::cli
