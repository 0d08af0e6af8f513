// diracgate — exact unitarity gate for highest-weight parameters of the
// five classical Hermitian symmetric families.
//
// Subcommands:
//   check   classify one parameter (human text or --json)
//   margin  exact Dirac margin of one parameter against one Schmid module
//   sweep   CSV classification along one varying coordinate
//   verify  run a built-in verification suite (seeded, reproducible)
//   rho     print the family's rho vector
//
// Exit codes: 0 success, 1 input error, 2 verification failure.

#include "diracgate/diracgate.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <iostream>
#include <string>

namespace {

using namespace diracgate;

std::string check_human_text(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::NotUnitary:
            return "NOT UNITARY, witness s=" + to_string(*v.witness) + " level " +
                   std::to_string(level(*v.witness));
        case VerdictKind::Boundary:
            return "BOUNDARY at s=" + to_string(*v.witness) + " level " +
                   std::to_string(level(*v.witness));
        case VerdictKind::UnitaryIrreducible:
            return "UNITARY (N(λ) irreducible), guaranteed by " + v.guarantee.reason;
        case VerdictKind::InconclusiveAtCap:
            return "INCONCLUSIVE: every margin positive up to level " + std::to_string(v.cap) +
                   ", no guarantee applies";
    }
    return {};
}

nlohmann::json verdict_to_json(const Verdict& v) {
    nlohmann::json j;
    j["verdict"] = to_string(v.kind);
    if (v.witness)
        j["witness"] = {{"coeffs", v.witness->coeffs}, {"level", level(*v.witness)}};
    else
        j["witness"] = nullptr;
    j["cap"] = v.cap;
    return j;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// Fixed coordinates of a sweep: comma-separated scalars; a single '|' is
// accepted (and ignored) so su tails can be written in block notation.
std::vector<Scalar> parse_tail(const std::string& text) {
    std::vector<Scalar> out;
    std::string cleaned;
    int bars = 0;
    for (char c : text) {
        if (c == '|') {
            ++bars;
            cleaned += ',';
        } else {
            cleaned += c;
        }
    }
    if (bars > 1) throw Error(ErrorKind::ParseError, "tail has more than one '|'");
    std::size_t pos = 0;
    while (pos <= cleaned.size() && !cleaned.empty()) {
        std::size_t comma = cleaned.find(',', pos);
        std::string tok = cleaned.substr(pos, comma == std::string::npos ? std::string::npos
                                                                         : comma - pos);
        out.push_back(parse_scalar(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int run_sweep(const Family& f, int coord, const Scalar& from, const Scalar& to,
              const Scalar& step, const std::string& tail_text, int cap) {
    const int n = f.coord_count();
    if (coord < 1 || coord > n)
        throw Error(ErrorKind::IndexOutOfRange,
                    "coordinate index must be in [1, " + std::to_string(n) + "], got " +
                        std::to_string(coord));
    if (step <= 0) throw Error(ErrorKind::ParseError, "step must be > 0");
    std::vector<Scalar> tail = parse_tail(tail_text);
    if (static_cast<int>(tail.size()) != n - 1)
        throw Error(ErrorKind::LengthMismatch,
                    "tail needs " + std::to_string(n - 1) + " fixed coordinates, got " +
                        std::to_string(tail.size()));

    std::cout << "lambda,verdict,witness,witness_level,margin_at_witness\n";
    Weight w(n);
    for (Scalar v = from; v <= to; v += step) {
        int t = 0;
        for (int i = 0; i < n; ++i) w[i] = (i == coord - 1) ? v : tail[t++];
        std::string lambda_text = to_string(f, w);
        Verdict verdict;
        try {
            verdict = classify(f, w, cap);
        } catch (const Error& e) {
            std::cerr << "skipped " << lambda_text << ": " << e.what() << "\n";
            continue;
        }
        std::cout << csv_quote(lambda_text) << "," << to_string(verdict.kind) << ",";
        if (verdict.witness) {
            std::cout << csv_quote(to_string(*verdict.witness)) << ","
                      << level(*verdict.witness) << "," << to_string(*verdict.witness_margin);
        } else {
            std::cout << ",,";
        }
        std::cout << "\n";
    }
    return 0;
}

int run_verify(const std::string& target, std::uint64_t trials, std::uint64_t seed,
               int max_rank, int cap) {
    SuiteReport r;
    if (target == "red-sp-1" || target == "red-sp-2" || target == "red-sp-3") {
        r = run_red_sp_suite(target.back() - '0', trials, seed, max_rank);
        std::cout << (r.total - r.failures) << "/" << r.total << " pass\n";
    } else if (target == "gen-prv") {
        r = run_gen_prv_suite(max_rank, 3, 100000, seed);
        std::cout << (r.total - r.failures) << "/" << r.total << " pass\n";
    } else if (target == "crosscheck") {
        r = run_crosscheck_suite(max_rank, cap);
        std::cout << r.failures << " mismatches (" << r.total << " weights checked)\n";
    } else {
        throw Error(ErrorKind::ParseError,
                    "unknown verify target '" + target +
                        "' (expected red-sp-1, red-sp-2, red-sp-3, gen-prv, crosscheck)");
    }
    if (r.failures) {
        std::cerr << "first failure: " << r.first_failure << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Dirac-inequality unitarity gate for the five Hermitian families "
                 "(sp:N, so*:N, su:P,Q, so-even:N, so-odd:N)"};
    app.require_subcommand(1);

    std::string family_text, lambda_text, schmid_text, tail_text, target;
    std::string from_text = "0", to_text = "0", step_text = "1";
    int cap = diracgate::default_cap();
    int coord = 1, max_rank = 4;
    std::uint64_t trials = 10000, seed = 0;
    bool as_json = false;

    CLI::App* check = app.add_subcommand("check", "Classify a highest-weight parameter");
    check->add_option("family", family_text, "family text, e.g. sp:2 or su:1,3")->required();
    check->add_option("lambda", lambda_text, "weight text, e.g. \"-3,0,0,0\" or \"0|0\"")
        ->required();
    check->add_option("--cap", cap, "level cap for the witness scan");
    check->add_flag("--json", as_json, "emit the JSON verdict object");

    CLI::App* margin = app.add_subcommand("margin", "Exact margin at one Schmid module");
    margin->add_option("family", family_text, "family text")->required();
    margin->add_option("lambda", lambda_text, "weight text")->required();
    margin->add_option("schmid", schmid_text,
                       "Schmid coefficients \"c1,c2,...\" or \"weight:<weight-text>\"")
        ->required();

    CLI::App* sweep = app.add_subcommand("sweep", "CSV classification along one coordinate");
    sweep->add_option("family", family_text, "family text")->required();
    sweep->add_option("--coord", coord, "1-based index of the varying coordinate");
    sweep->add_option("--from", from_text, "range start (exact rational)")->required();
    sweep->add_option("--to", to_text, "range end (exact rational)")->required();
    sweep->add_option("--step", step_text, "range step (exact rational > 0)");
    sweep->add_option("--tail", tail_text, "fixed values of the other coordinates");
    sweep->add_option("--cap", cap, "level cap for the witness scan");

    CLI::App* verify = app.add_subcommand("verify", "Run a built-in verification suite");
    verify->add_option("target", target, "red-sp-1 | red-sp-2 | red-sp-3 | gen-prv | crosscheck")
        ->required();
    verify->add_option("--trials", trials, "random instances for red-sp targets");
    verify->add_option("--seed", seed, "random seed (default 0, reproducible)");
    verify->add_option("--max-rank", max_rank, "rank budget for the suite's families");
    verify->add_option("--cap", cap, "level cap for crosscheck scans");

    CLI::App* rho_cmd = app.add_subcommand("rho", "Print the family's rho vector");
    rho_cmd->add_option("family", family_text, "family text")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    using namespace diracgate;
    try {
        if (*check) {
            Family f = Family::parse(family_text);
            Weight lam = parse_weight(f, lambda_text);
            Verdict v = classify(f, lam, cap);
            if (as_json)
                std::cout << verdict_to_json(v).dump() << "\n";
            else
                std::cout << check_human_text(v) << "\n";
            return 0;
        }
        if (*margin) {
            Family f = Family::parse(family_text);
            Weight lam = parse_weight(f, lambda_text);
            SchmidCoeffs s = parse_schmid(f, schmid_text);
            Margin m = dirac_margin(f, lam, s);
            std::cout << to_string(m.value) << " (" << to_string(m.sign) << ")\n";
            return 0;
        }
        if (*sweep) {
            Family f = Family::parse(family_text);
            return run_sweep(f, coord, parse_scalar(from_text), parse_scalar(to_text),
                             parse_scalar(step_text), tail_text, cap);
        }
        if (*verify) return run_verify(target, trials, seed, max_rank, cap);
        if (*rho_cmd) {
            Family f = Family::parse(family_text);
            std::cout << to_string(f, rho(f)) << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
