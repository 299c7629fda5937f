#include "frob/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frob/bounds.hpp"
#include "frob/oracle.hpp"
#include "frob/representability.hpp"
#include "frob/sequential.hpp"
#include "frob/solver.hpp"
#include "frob/table1.hpp"

namespace frob::cli {

using json = nlohmann::json;

std::vector<integer> parse_integer_list(std::string_view text) {
    std::vector<integer> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == '#') {
            while (pos < text.size() && text[pos] != '\n')
                ++pos;
            continue;
        }
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && text[end] != ',' && text[end] != '#' &&
               !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        const std::string_view token = text.substr(pos, end - pos);
        const char* first = token.data();
        if (!token.empty() && token.front() == '+')
            ++first;
        integer value = 0;
        const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw error(errc::invalid_input, "not an integer: '" + std::string(token) + "'");
        out.push_back(value);
        pos = end;
    }
    return out;
}

std::vector<std::vector<integer>> random_bases(std::size_t count, integer max_element, integer max_arity,
                                               std::uint64_t seed) {
    if (count == 0)
        return {};
    if (max_element < 3)
        throw error(errc::invalid_input, "--max must be >= 3");
    if (max_arity < 2 || max_arity > max_element - 1)
        throw error(errc::invalid_input, "--arity must lie in [2, max - 1]");

    Lcg64 engine(seed);
    auto draw = [&](integer range) { return static_cast<integer>((engine() >> 32) % static_cast<std::uint64_t>(range)); };

    std::vector<std::vector<integer>> out;
    out.reserve(count);
    while (out.size() < count) {
        const integer arity = 2 + draw(max_arity - 1);
        std::vector<integer> basis;
        while (static_cast<integer>(basis.size()) < arity) {
            const integer v = 2 + draw(max_element - 1);
            if (std::find(basis.begin(), basis.end(), v) == basis.end())
                basis.push_back(v);
        }
        if (gcd_all(basis) != 1)
            continue;
        std::sort(basis.begin(), basis.end());
        out.push_back(std::move(basis));
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string format_ms(double ms) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << ms;
    return s.str();
}

struct OutputRecord {
    std::vector<integer> basis;
    integer result = 0;
    std::string algorithm;
    double elapsed_ms = 0;
    bool verified_against_oracle = false;
};

json to_json(const OutputRecord& r) {
    return json{{"basis", r.basis},
                {"result", r.result},
                {"algorithm", r.algorithm},
                {"elapsed_ms", r.elapsed_ms},
                {"verified_against_oracle", r.verified_against_oracle}};
}

std::string basis_label(std::span<const integer> b, std::size_t max_shown = 8) {
    if (b.size() <= max_shown)
        return join(b, ",");
    return join(b.first(max_shown), ",") + ",... (" + std::to_string(b.size()) + " generators)";
}

// Positional integers and --file contents are combined, then normalized.
struct BasisInput {
    std::vector<std::string> positional;
    std::string file;

    void attach(CLI::App* cmd, const std::string& desc = "basis elements") {
        cmd->add_option("basis", positional, desc);
        cmd->add_option("--file", file, "read basis elements from a file (whitespace/comma separated, # comments)");
    }

    Basis load() const {
        std::vector<integer> raw;
        for (const auto& s : positional) {
            const auto v = parse_integer_list(s);
            raw.insert(raw.end(), v.begin(), v.end());
        }
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in)
                throw error(errc::invalid_input, "cannot open " + file);
            std::stringstream buf;
            buf << in.rdbuf();
            const auto v = parse_integer_list(buf.str());
            raw.insert(raw.end(), v.begin(), v.end());
        }
        return normalize_basis(raw);
    }
};

int cmd_compute(const BasisInput& input, const std::string& algorithm, bool as_json, bool verify, bool parallel,
                std::ostream& out, std::ostream& err) {
    const Basis basis = input.load();
    const Method method = algorithm == "oracle"       ? Method::oracle
                          : algorithm == "sequential" ? Method::sequential
                                                      : Method::paper;
    const auto mode = parallel ? ScanMode::parallel : ScanMode::serial;

    const auto start = Clock::now();
    const FrobeniusResult res = frobenius(basis, method, mode);
    const double elapsed = ms_since(start);

    OutputRecord rec{{basis.elements().begin(), basis.elements().end()},
                     res.value,
                     std::string(to_string(res.algorithm)),
                     elapsed,
                     false};
    if (verify && !basis.contains_one()) {
        const integer expected = frobenius_oracle(basis);
        if (expected != res.value) {
            err << "disagreement on {" << join(basis.elements()) << "}: " << to_string(res.algorithm) << " = "
                << res.value << ", oracle = " << expected << '\n';
            return exit_disagreement;
        }
        rec.verified_against_oracle = true;
    }

    if (as_json) {
        out << to_json(rec).dump() << '\n';
    } else {
        out << res.value << '\n';
        out << "basis {" << basis_label(basis.elements()) << "}, algorithm " << rec.algorithm << ", U = "
            << res.upper_bound_used << ", candidates scanned " << res.candidates_scanned << ", "
            << (rec.verified_against_oracle ? "verified against oracle" : "not verified") << ", "
            << format_ms(elapsed) << " ms\n";
    }
    return exit_ok;
}

struct VerifyCase {
    std::vector<integer> basis;
    integer paper = 0, sequential = 0, oracle = 0;
    double elapsed_ms = 0;
    bool agree() const { return paper == oracle && sequential == oracle; }
};

int cmd_verify(std::size_t count, integer max_element, integer max_arity, std::uint64_t seed, bool as_json,
               bool timing, std::ostream& out, std::ostream& err) {
    const auto bases = random_bases(count, max_element, max_arity, seed);
    std::vector<VerifyCase> cases(bases.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < bases.size(); ++i) {
        try {
            const Basis basis = normalize_basis(bases[i]);
            VerifyCase c;
            c.basis = bases[i];
            const auto start = Clock::now();
            c.paper = frobenius_paper(basis).value;
            c.elapsed_ms = ms_since(start);
            c.sequential = frobenius_sequential(basis).value;
            c.oracle = frobenius_oracle(basis);
            cases[i] = std::move(c);
        } catch (...) {
#pragma omp critical(frob_verify_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    std::size_t agreed = 0;
    for (const auto& c : cases) {
        if (c.agree())
            ++agreed;
        else
            err << "disagreement on {" << join(c.basis) << "}: paper = " << c.paper
                << ", sequential = " << c.sequential << ", oracle = " << c.oracle << '\n';
        if (as_json) {
            OutputRecord rec{c.basis, c.paper, "paper-descent", timing ? c.elapsed_ms : 0.0, c.agree()};
            out << to_json(rec).dump() << '\n';
        }
    }
    (as_json ? err : out) << agreed << '/' << cases.size() << " agree\n";
    return agreed == cases.size() ? exit_ok : exit_disagreement;
}

int cmd_table1(bool as_json, bool parallel, std::ostream& out, std::ostream& err) {
    const auto mode = parallel ? ScanMode::parallel : ScanMode::serial;
    bool all_consistent = true;
    const auto rows = table1_rows();
    if (!as_json)
        out << "row  basis                                      paper   oracle  printed  match  ms\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const Basis basis = normalize_basis(row.generators);
        const auto start = Clock::now();
        const integer paper = frobenius_paper(basis, mode).value;
        const double elapsed = ms_since(start);
        const integer oracle = frobenius_oracle(basis);
        const bool consistent = paper == oracle;
        all_consistent = all_consistent && consistent;

        if (as_json) {
            OutputRecord rec{row.generators, paper, "paper-descent", elapsed, consistent};
            out << to_json(rec).dump() << '\n';
        } else {
            std::ostringstream line;
            line << std::left << std::setw(5) << i + 1 << std::setw(43) << basis_label(row.generators, 5)
                 << std::setw(8) << paper << std::setw(8) << oracle << std::setw(9) << row.printed
                 << std::setw(7) << (paper == row.printed && consistent ? "yes" : "no") << format_ms(elapsed);
            out << line.str() << '\n';
        }
        if (oracle != row.printed)
            (as_json ? err : out) << "paper-mismatch row " << i + 1 << ": printed " << row.printed
                                  << ", oracle " << oracle << '\n';
        if (!consistent)
            err << "disagreement row " << i + 1 << ": paper algorithm " << paper << ", oracle " << oracle << '\n';
    }
    return all_consistent ? exit_ok : exit_disagreement;
}

json optional_list(const std::vector<std::optional<integer>>& chain) {
    json arr = json::array();
    for (const auto& c : chain)
        arr.push_back(c ? json(*c) : json(nullptr));
    return arr;
}

std::string chain_text(const std::vector<std::optional<integer>>& chain) {
    std::string s = "[";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i)
            s += ", ";
        s += chain[i] ? std::to_string(*chain[i]) : "undefined";
    }
    return s + "]";
}

int cmd_bounds(const BasisInput& input, bool as_json, std::ostream& out) {
    const Basis basis = input.load();
    const BoundReport r = bound_report(basis);
    if (as_json) {
        json j{{"basis", std::vector<integer>(basis.elements().begin(), basis.elements().end())},
               {"erdos_graham", r.erdos_graham},
               {"selmer", r.selmer},
               {"selmer_vacuous", r.selmer_vacuous},
               {"vitek", to_decimal(r.vitek)},
               {"vitek_exact", to_string(r.vitek)},
               {"vitek_vacuous", r.vitek_vacuous},
               {"beck", r.beck ? json(to_decimal(*r.beck)) : json(nullptr)},
               {"beck_exact", r.beck ? json(to_string(*r.beck)) : json(nullptr)},
               {"chain", optional_list(r.chain)},
               {"tightest", r.tightest}};
        out << j.dump() << '\n';
        return exit_ok;
    }
    const auto vac = [](bool v) { return v ? "  (vacuous)" : ""; };
    out << "basis         {" << basis_label(basis.elements()) << "}\n";
    out << "erdos-graham  " << r.erdos_graham << '\n';
    out << "selmer        " << r.selmer << vac(r.selmer_vacuous) << '\n';
    out << "vitek         " << to_string(r.vitek) << vac(r.vitek_vacuous) << '\n';
    if (r.beck)
        out << "beck          " << to_decimal(*r.beck) << "  (upper approximation, error < 1e-6)\n";
    else
        out << "beck          n/a  (vacuous: needs 3 generators)\n";
    out << "chain         " << chain_text(r.chain) << '\n';
    out << "tightest      " << r.tightest << '\n';
    return exit_ok;
}

int cmd_hasrep(const std::vector<std::string>& args, const std::string& file, bool as_json, std::ostream& out) {
    if (args.empty())
        throw error(errc::invalid_input, "hasrep needs a target: hasrep <a> -- <basis...>");
    const auto target = parse_integer_list(args.front());
    if (target.size() != 1)
        throw error(errc::invalid_input, "hasrep target must be a single integer");
    BasisInput input{{args.begin() + 1, args.end()}, file};
    const Basis basis = input.load();
    const auto w = find_witness(target.front(), basis);

    if (as_json) {
        json j{{"a", target.front()},
               {"basis", std::vector<integer>(basis.elements().begin(), basis.elements().end())},
               {"representable", w.has_value()},
               {"witness", w ? json(w->coefficients) : json(nullptr)}};
        out << j.dump() << '\n';
        return exit_ok;
    }
    out << (w ? "true" : "false") << '\n';
    if (w) {
        out << target.front() << " =";
        bool first = true;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (w->coefficients[i] == 0)
                continue;
            out << (first ? " " : " + ") << w->coefficients[i] << '*' << basis[i];
            first = false;
        }
        if (first)
            out << " 0";
        out << '\n';
    }
    return exit_ok;
}

int cmd_trace(const BasisInput& input, bool as_json, bool h_values, bool parallel, std::ostream& out) {
    const Basis basis = input.load();
    const auto trace = sequential_trace(basis, h_values, parallel ? ScanMode::parallel : ScanMode::serial);
    if (as_json) {
        json j{{"basis", std::vector<integer>(basis.elements().begin(), basis.elements().end())},
               {"upper", trace.upper},
               {"deltas", trace.deltas},
               {"result", trace.result}};
        if (trace.h_values) {
            json h = json::array();
            for (const auto& v : *trace.h_values)
                h.push_back(to_string(v));
            j["h_values"] = h;
        }
        out << j.dump() << '\n';
        return exit_ok;
    }
    out << "U      " << trace.upper << '\n';
    out << "delta  ";
    for (int d : trace.deltas)
        out << d;
    out << '\n';
    if (trace.h_values) {
        for (std::size_t i = 0; i < trace.h_values->size(); ++i)
            out << "H(" << i + 1 << ") = " << to_string((*trace.h_values)[i]) << '\n';
    }
    out << "g      " << trace.result << '\n';
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frobenius numbers of coprime bases", "frobenius"};
    app.require_subcommand(1);

    bool as_json = false;
    bool parallel = false;
    app.add_flag("--json", as_json, "emit one JSON object per line");
    app.add_flag("--parallel", parallel, "use the OpenMP kernels");

    BasisInput compute_in;
    std::string algorithm = "paper";
    bool no_verify = false;
    auto* compute = app.add_subcommand("compute", "compute the Frobenius number")->fallthrough();
    compute_in.attach(compute);
    compute->add_option("--algorithm", algorithm, "paper | oracle | sequential")
        ->check(CLI::IsMember({"paper", "oracle", "sequential"}));
    compute->add_flag("--no-verify", no_verify, "skip the oracle cross-check");

    std::size_t count = 100;
    integer max_element = 200;
    integer max_arity = 5;
    std::uint64_t seed = 42;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "cross-check paper, sequential and oracle on random bases")
                       ->fallthrough();
    verify->add_option("--count", count, "number of random bases");
    verify->add_option("--max", max_element, "largest element");
    verify->add_option("--arity", max_arity, "largest arity");
    verify->add_option("--seed", seed, "LCG seed");
    verify->add_flag("--timing", timing, "report wall-clock elapsed_ms in JSON records");

    auto* table1 = app.add_subcommand("table1", "reproduce the seven reference instances")->fallthrough();

    BasisInput bounds_in;
    auto* bounds = app.add_subcommand("bounds", "classical upper bounds and the prefix chain")->fallthrough();
    bounds_in.attach(bounds);

    std::vector<std::string> hasrep_args;
    std::string hasrep_file;
    auto* hasrep = app.add_subcommand("hasrep", "representability test: hasrep <a> -- <basis...>")->fallthrough();
    std::string hasrep_target;
    hasrep->add_option("a", hasrep_target, "integer to test");
    hasrep->add_option("basis", hasrep_args, "basis elements");
    hasrep->add_option("--file", hasrep_file, "read basis elements from a file");

    BasisInput trace_in;
    bool h_values = false;
    auto* trace = app.add_subcommand("trace", "delta vector of the floor-function form")->fallthrough();
    trace_in.attach(trace);
    trace->add_flag("--h-values", h_values, "also print the exact H products (small bases only)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (*compute)
            return cmd_compute(compute_in, algorithm, as_json, !no_verify, parallel, out, err);
        if (*verify)
            return cmd_verify(count, max_element, max_arity, seed, as_json, timing, out, err);
        if (*table1)
            return cmd_table1(as_json, parallel, out, err);
        if (*bounds)
            return cmd_bounds(bounds_in, as_json, out);
        if (*hasrep)
        {
            if (!hasrep_target.empty())
                hasrep_args.insert(hasrep_args.begin(), hasrep_target);
            return cmd_hasrep(hasrep_args, hasrep_file, as_json, out);
        }
        if (*trace)
            return cmd_trace(trace_in, as_json, h_values, parallel, out);
    } catch (const error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}

} // namespace frob::cli
