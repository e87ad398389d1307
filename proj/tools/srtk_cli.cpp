// srtk: analyze finite simplicial complexes through their Stanley-Reisner rings.
//
// Subcommands:
//   report  full analysis of one complex (text or JSON)
//   check   classification predicate with pass/fail exit code
//   bounds  face-vector bound checks only
//   expand  d-binomial expansion and Macaulay growth of one integer

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "srtk/artinian.hpp"
#include "srtk/builtins.hpp"
#include "srtk/enumeration.hpp"
#include "srtk/errors.hpp"
#include "srtk/homology.hpp"
#include "srtk/report.hpp"
#include "srtk/simplicial_complex.hpp"

#include <nlohmann/json.hpp>

namespace {

using Json = nlohmann::ordered_json;

constexpr std::int64_t kDefaultChar = 32003;

std::int64_t default_characteristic() {
    if (const char* env = std::getenv("SRTK_CHAR")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            srtk::fail(srtk::Errc::parse_error, std::string("SRTK_CHAR is not an integer: ") + env);
        }
    }
    return kDefaultChar;
}

struct InputOptions {
    std::string file;
    std::string builtin_name;
    std::int64_t p = 0;
    std::uint64_t seed = 0;
    int nseeds = 1;
    bool json = false;
};

void add_input_options(CLI::App* cmd, InputOptions& opt, bool with_seeds) {
    cmd->add_option("input", opt.file, "facet-list file ('n d' header, one facet per line)");
    cmd->add_option("--builtin", opt.builtin_name, "built-in complex name (see 'srtk list')");
    cmd->add_option("--char", opt.p, "field characteristic (prime; default " + std::to_string(kDefaultChar) +
                                         ", overridable via SRTK_CHAR)");
    if (with_seeds) {
        cmd->add_option("--seed", opt.seed, "base RNG seed for lsop sampling (default 0)");
        cmd->add_option("--seeds", opt.nseeds, "number of consecutive seeds to sample (default 1)")
            ->check(CLI::PositiveNumber);
    }
    cmd->add_flag("--json", opt.json, "emit JSON instead of text");
}

std::pair<srtk::SimplicialComplex, std::string> load_input(const InputOptions& opt) {
    if (opt.file.empty() == opt.builtin_name.empty())
        srtk::fail(srtk::Errc::parse_error, "give exactly one of a facet-list file or --builtin NAME");
    if (!opt.builtin_name.empty()) return {srtk::builtin(opt.builtin_name), opt.builtin_name};
    return {srtk::parse_facet_file(opt.file), opt.file};
}

std::int64_t resolve_char(const InputOptions& opt, const srtk::SimplicialComplex& c) {
    std::int64_t p = opt.p != 0 ? opt.p : default_characteristic();
    if (!srtk::PrimeField::is_prime(p))
        srtk::fail(srtk::Errc::parse_error, "--char must be prime, got " + std::to_string(p));
    if (p <= c.n())
        std::cerr << "warning: p = " << p << " <= n = " << c.n()
                  << "; generic linear forms may not exist over so small a field\n";
    return p;
}

int run_report(const InputOptions& opt) {
    auto [complex, name] = load_input(opt);
    std::int64_t p = resolve_char(opt, complex);
    srtk::AnalysisReport rep = srtk::analyze(complex, name, p, opt.seed, opt.nseeds);
    std::cout << (opt.json ? srtk::to_json(rep) : srtk::to_text(rep));
    return 0;
}

int run_check(const std::string& what, const InputOptions& opt) {
    auto [complex, name] = load_input(opt);
    std::int64_t p = resolve_char(opt, complex);
    srtk::PrimeField field(p);

    bool pass = false;
    Json detail = Json::object();
    if (what == "cm") {
        pass = srtk::is_cohen_macaulay(complex, field);
    } else if (what == "buchsbaum") {
        pass = srtk::is_buchsbaum(complex, field);
    } else if (what == "2cm") {
        pass = srtk::is_two_cm(complex, field);
    } else if (what == "bstar") {
        pass = true;
        Json per_seed = Json::array();
        for (int i = 0; i < opt.nseeds; ++i) {
            srtk::BstarCheck bc = srtk::buchsbaum_star_check(complex, field, opt.seed + static_cast<std::uint64_t>(i));
            pass = pass && bc.passed();
            Json s;
            s["seed"] = bc.seed;
            s["pass"] = bc.passed();
            if (!bc.reason.empty()) s["reason"] = bc.reason;
            Json rows = Json::array();
            for (const auto& row : bc.rows)
                rows.push_back(Json::object({{"degree", row.degree}, {"actual", row.actual}, {"expected", row.expected}}));
            s["socle"] = std::move(rows);
            per_seed.push_back(std::move(s));
        }
        detail["seeds"] = std::move(per_seed);
    } else if (what == "level") {
        pass = true;
        srtk::BettiTable betti = srtk::reduced_betti(complex, field);
        Json per_seed = Json::array();
        for (int i = 0; i < opt.nseeds; ++i) {
            srtk::LevelQuotient lq = srtk::level_quotient(complex, field, opt.seed + static_cast<std::uint64_t>(i));
            bool ok = lq.is_level() && lq.algebra.top_degree() == complex.d() &&
                      lq.cm_type == betti.beta(complex.d() - 1);
            pass = pass && ok;
            Json s;
            s["seed"] = opt.seed + static_cast<std::uint64_t>(i);
            s["dims"] = lq.dims();
            s["type"] = lq.cm_type;
            s["pass"] = ok;
            per_seed.push_back(std::move(s));
        }
        detail["seeds"] = std::move(per_seed);
    } else {
        srtk::fail(srtk::Errc::parse_error, "unknown check '" + what + "' (cm|buchsbaum|2cm|bstar|level)");
    }

    if (opt.json) {
        Json j;
        j["check"] = what;
        j["complex"] = name;
        j["p"] = p;
        j["pass"] = pass;
        for (auto& [k, v] : detail.items()) j[k] = v;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "check " << what << " on " << name << " over GF(" << p << "): " << (pass ? "pass" : "fail")
                  << "\n";
    }
    return pass ? 0 : 1;
}

int run_bounds(const InputOptions& opt) {
    auto [complex, name] = load_input(opt);
    std::int64_t p = resolve_char(opt, complex);
    srtk::PrimeField field(p);
    srtk::BettiTable betti = srtk::reduced_betti(complex, field);
    srtk::HVectorBundle bundle = srtk::make_bundle(complex, betti);

    bool include_b = betti.beta(bundle.d - 1) > 0;
    srtk::BstarBoundsReport bounds = srtk::check_bstar_bounds(bundle, include_b);
    srtk::SoderbergReport soder = srtk::soderberg_check(bundle.h_double_prime, bundle.n, bundle.d);
    bool hpp_nonneg = true;
    for (long long x : bundle.h_double_prime) hpp_nonneg = hpp_nonneg && x >= 0;
    srtk::MacaulayReport mac;
    if (hpp_nonneg) {
        std::vector<long long> rev(bundle.h_double_prime.rbegin(), bundle.h_double_prime.rend());
        mac = srtk::check_module_macaulay(rev, bundle.n);
    }
    bool pass = bounds.pass && soder.pass && (!hpp_nonneg || mac.pass) && hpp_nonneg;

    if (opt.json) {
        Json j;
        j["complex"] = name;
        j["p"] = p;
        j["n"] = bundle.n;
        j["d"] = bundle.d;
        j["h_prime"] = bundle.h_prime;
        j["h_double_prime"] = bundle.h_double_prime;
        j["part_b_included"] = include_b;
        j["bounds_pass"] = bounds.pass;
        j["soderberg_pass"] = soder.pass;
        j["macaulay_applicable"] = hpp_nonneg;
        if (hpp_nonneg) j["macaulay_pass"] = mac.pass;
        j["pass"] = pass;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "bounds for " << name << " over GF(" << p << "), n = " << bundle.n << ", d = " << bundle.d
                  << "\n";
        for (const auto& row : bounds.part_a) {
            std::cout << "  (a) j=" << row.j << ": h'_" << row.j + 1 << " = " << row.lhs << " <= min{";
            if (row.evaluable)
                std::cout << row.branch_growth.str() << ", " << row.branch_duality.str();
            else
                std::cout << "not evaluable: " << row.note;
            std::cout << "}  " << (row.pass ? "ok" : "FAIL") << "\n";
        }
        if (bounds.part_a.empty()) std::cout << "  (a) empty range (d <= 2)\n";
        if (!include_b)
            std::cout << "  (b) skipped: beta_{d-1} = 0\n";
        else
            for (const auto& row : bounds.part_b)
                std::cout << "  (b) j=" << row.j << ": h''_" << bundle.d - row.j << " = " << row.lhs
                          << " >= h''_" << row.j << "/type = " << row.rhs << "/" << betti.beta(bundle.d - 1) << "  "
                          << (row.pass ? "ok" : "FAIL") << "\n";
        for (const auto& row : soder.rows)
            std::cout << "  soderberg j=" << row.j << ": det = " << row.det.str() << "  "
                      << (row.pass ? "ok" : "FAIL") << "\n";
        if (hpp_nonneg) {
            for (const auto& row : mac.rows)
                std::cout << "  macaulay (reversed h'') j=" << row.j << ": " << row.value
                          << " <= " << row.bound.str() << "  " << (row.pass ? "ok" : "FAIL") << "\n";
        } else {
            std::cout << "  macaulay (reversed h''): not applicable, h'' has negative entries\n";
        }
        std::cout << (pass ? "all bounds hold" : "some bound FAILED") << "\n";
    }
    return pass ? 0 : 1;
}

int run_expand(long long b, int n, int d, bool json) {
    srtk::BinomialExpansion e = srtk::d_binomial_expansion(b, n, d);
    srtk::BigInt g = e.growth();
    if (json) {
        Json j;
        j["b"] = b;
        j["n"] = n;
        j["d"] = d;
        j["m_top"] = e.m_top;
        Json terms = Json::array();
        for (auto [i, m] : e.terms) terms.push_back(Json::object({{"i", i}, {"m", m}}));
        j["terms"] = std::move(terms);
        j["expansion"] = e.str();
        j["growth"] = g.str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << b << " = " << e.str() << "\n";
        std::cout << b << "^<" << d << "> = " << g.str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stanley-Reisner toolkit: exact face-vector, homology and socle analysis of simplicial complexes"};
    app.require_subcommand(1);

    InputOptions report_opt;
    CLI::App* report = app.add_subcommand("report", "full analysis report");
    add_input_options(report, report_opt, true);

    InputOptions check_opt;
    std::string check_what;
    CLI::App* check = app.add_subcommand("check", "classification check (exit 0 on pass, 1 on fail)");
    check->add_option("what", check_what, "cm|buchsbaum|2cm|bstar|level")->required();
    add_input_options(check, check_opt, true);

    InputOptions bounds_opt;
    CLI::App* bounds = app.add_subcommand("bounds", "face-vector bound checks");
    add_input_options(bounds, bounds_opt, false);

    long long expand_b = 0;
    int expand_n = 0, expand_d = 0;
    bool expand_json = false;
    CLI::App* expand = app.add_subcommand("expand", "d-binomial expansion and Macaulay growth");
    expand->add_option("b", expand_b, "non-negative integer to expand")->required();
    expand->add_option("n", expand_n, "number of variables")->required();
    expand->add_option("d", expand_d, "expansion degree")->required();
    expand->add_flag("--json", expand_json, "emit JSON instead of text");

    CLI::App* list = app.add_subcommand("list", "list built-in complexes");

    try {
        app.parse(argc, argv);
        if (report->parsed()) return run_report(report_opt);
        if (check->parsed()) return run_check(check_what, check_opt);
        if (bounds->parsed()) return run_bounds(bounds_opt);
        if (expand->parsed()) return run_expand(expand_b, expand_n, expand_d, expand_json);
        if (list->parsed()) {
            for (const std::string& name : srtk::builtin_names()) std::cout << name << "\n";
            return 0;
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const srtk::Error& e) {
        std::cerr << "error (" << srtk::errc_name(e.code()) << "): " << e.what() << "\n";
        return e.code() == srtk::Errc::lsop_not_found ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
