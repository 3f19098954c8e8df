// detmult: multiplicity, shifts, and Betti-table calculator for
// determinantal ideals given by their degree matrix.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "detmult/conjecture.hpp"
#include "detmult/multiplicity.hpp"

namespace {

using detmult::BigInt;
using detmult::BigRat;
using detmult::DegreeMatrix;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strict comma-separated integer list; no whitespace accepted.
std::vector<long long> parse_int_list(const std::string& text) {
    static const std::regex shape("-?[0-9]+(,-?[0-9]+)*");
    if (!std::regex_match(text, shape)) {
        throw UsageError("malformed integer list: '" + text + "'");
    }
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(std::stoll(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

std::string rational_str(const BigRat& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

struct MatrixInput {
    std::string cols;
    std::string rows;
    std::string file;
};

void add_matrix_flags(CLI::App* cmd, MatrixInput& in) {
    cmd->add_option("--cols", in.cols, "column degrees, comma separated");
    cmd->add_option("--rows", in.rows, "row degrees, comma separated");
    cmd->add_option("--input", in.file,
                    "JSON file with {\"cols\":[...],\"rows\":[...]} or {\"u\":[[...],...]}");
}

DegreeMatrix resolve_matrix(const MatrixInput& in) {
    const bool haveVectors = !in.cols.empty() || !in.rows.empty();
    const bool haveFile = !in.file.empty();
    if (haveVectors == haveFile) {
        throw UsageError("give exactly one of --cols/--rows or --input");
    }
    if (haveVectors) {
        if (in.cols.empty() || in.rows.empty()) {
            throw UsageError("--cols and --rows must be given together");
        }
        return DegreeMatrix::from_vectors(parse_int_list(in.cols),
                                          parse_int_list(in.rows));
    }
    std::ifstream stream(in.file);
    if (!stream) {
        throw UsageError("cannot open input file: " + in.file);
    }
    json doc;
    try {
        doc = json::parse(stream);
    } catch (const json::parse_error& err) {
        throw UsageError(std::string("invalid JSON input: ") + err.what());
    }
    if (doc.contains("u")) {
        std::vector<std::vector<long long>> grid;
        for (const auto& row : doc.at("u")) {
            grid.push_back(row.get<std::vector<long long>>());
        }
        return DegreeMatrix::from_full_matrix(grid);
    }
    if (doc.contains("cols") && doc.contains("rows")) {
        return DegreeMatrix::from_vectors(
            doc.at("cols").get<std::vector<long long>>(),
            doc.at("rows").get<std::vector<long long>>());
    }
    throw UsageError("input JSON needs either \"u\" or \"cols\"+\"rows\"");
}

std::uint64_t enum_cap_from_env(std::uint64_t fallback) {
    if (const char* env = std::getenv("DETMULT_ENUM_CAP")) {
        return std::stoull(env);
    }
    return fallback;
}

json betti_json(const detmult::BettiTable& bt) {
    json list = json::array();
    for (const auto& [step, row] : bt.entries) {
        for (const auto& [shift, count] : row) {
            list.push_back(
                {{"step", step}, {"shift", shift}, {"count", count.str()}});
        }
    }
    return list;
}

std::string betti_diagram(const detmult::BettiTable& bt) {
    std::vector<long long> shifts;
    for (const auto& [step, row] : bt.entries) {
        for (const auto& [shift, count] : row) shifts.push_back(shift);
    }
    std::sort(shifts.begin(), shifts.end());
    shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());

    std::ostringstream out;
    out << "shift";
    for (int s = 0; s <= bt.c; ++s) out << '\t' << s;
    out << '\n';
    for (long long shift : shifts) {
        out << shift;
        for (int s = 0; s <= bt.c; ++s) {
            const BigInt& n = bt.count(s, shift);
            out << '\t' << (n == 0 ? "." : n.str());
        }
        out << '\n';
    }
    return out.str();
}

json summary_json(const detmult::CampaignSummary& summary) {
    json checks = json::object();
    for (std::size_t k = 0; k < detmult::kCheckNames.size(); ++k) {
        checks[detmult::kCheckNames[k]] = summary.checkPasses[k];
    }
    json violations = json::array();
    for (const auto& v : summary.violations) {
        violations.push_back({{"seed", v.seed},
                              {"trial", v.trial},
                              {"check", v.check},
                              {"cols", v.cols},
                              {"rows", v.rows}});
    }
    json out = {{"trials", summary.trials},
                {"passed", summary.passed},
                {"checks", checks},
                {"violations", violations}};
    if (summary.hasMinSlack) {
        out["minSlack"] = {{"instance",
                            {{"cols", summary.minSlackCols},
                             {"rows", summary.minSlackRows}}},
                           {"slack", rational_str(summary.minSlack)}};
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"determinantal-ideal multiplicity and Betti calculator"};
    app.require_subcommand(1);

    MatrixInput in;

    auto* cmdShifts = app.add_subcommand("shifts", "minimal and maximal shifts");
    add_matrix_flags(cmdShifts, in);

    auto* cmdBetti = app.add_subcommand("betti", "graded Betti table");
    add_matrix_flags(cmdBetti, in);
    bool pretty = false, enumerate = false;
    cmdBetti->add_flag("--pretty", pretty, "triangular diagram instead of JSON");
    cmdBetti->add_flag("--enumerate", enumerate, "use the enumeration path");

    auto* cmdMult = app.add_subcommand("mult", "multiplicity e(R/I)");
    add_matrix_flags(cmdMult, in);
    std::string method = "auto";
    cmdMult->add_option("--method", method, "auto|en|linkage")
        ->check(CLI::IsMember({"auto", "en", "linkage"}));

    auto* cmdCheck = app.add_subcommand("check", "multiplicity bounds report");
    add_matrix_flags(cmdCheck, in);

    auto* cmdPure = app.add_subcommand("pure", "equidegree closed forms");
    long long pureT = 0, pureC = 0, pureD = 0;
    cmdPure->add_option("--t", pureT)->required();
    cmdPure->add_option("--c", pureC)->required();
    cmdPure->add_option("--d", pureD)->required();

    auto* cmdFuzz = app.add_subcommand("fuzz", "seeded random verification campaign");
    detmult::FuzzConfig cfg;
    cmdFuzz->add_option("--trials", cfg.trials);
    cmdFuzz->add_option("--seed", cfg.seed);
    cmdFuzz->add_option("--max-t", cfg.maxT)->check(CLI::PositiveNumber);
    cmdFuzz->add_option("--max-c", cfg.maxC)->check(CLI::PositiveNumber);
    cmdFuzz->add_option("--max-b", cfg.maxB)->check(CLI::NonNegativeNumber);
    cmdFuzz->add_option("--max-gap", cfg.maxGap)->check(CLI::NonNegativeNumber);
    std::optional<std::uint64_t> enumCapFlag;
    cmdFuzz->add_option("--enum-cap", enumCapFlag);
    bool serial = false;
    cmdFuzz->add_flag("--serial", serial, "disable trial-level parallelism");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) {
            return app.exit(err); // --help
        }
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (cmdShifts->parsed()) {
            const DegreeMatrix dm = resolve_matrix(in);
            json out = {{"m", detmult::min_shifts(dm).values},
                        {"M", detmult::max_shifts(dm).values}};
            std::cout << out.dump() << '\n';
        } else if (cmdBetti->parsed()) {
            const DegreeMatrix dm = resolve_matrix(in);
            const detmult::BettiTable bt =
                enumerate ? detmult::betti_table_enumerated(
                                dm, enum_cap_from_env(detmult::kDefaultEnumCap))
                          : detmult::betti_table(dm);
            if (pretty) {
                std::cout << betti_diagram(bt);
            } else {
                std::cout << betti_json(bt).dump() << '\n';
            }
        } else if (cmdMult->parsed()) {
            const DegreeMatrix dm = resolve_matrix(in);
            const detmult::MultMethod mm =
                method == "en"        ? detmult::MultMethod::en
                : method == "linkage" ? detmult::MultMethod::linkage
                                      : detmult::MultMethod::automatic;
            json out = {{"e", detmult::multiplicity(dm, mm).str()},
                        {"method", method}};
            std::cout << out.dump() << '\n';
        } else if (cmdCheck->parsed()) {
            const DegreeMatrix dm = resolve_matrix(in);
            const detmult::MultiplicityReport report = detmult::check_bounds(dm);
            json out = {{"e", report.e.str()},
                        {"lower", rational_str(report.lower)},
                        {"upper", rational_str(report.upper)},
                        {"lowerHolds", report.lowerHolds},
                        {"upperHolds", report.upperHolds},
                        {"m", report.m.values},
                        {"M", report.M.values}};
            std::cout << out.dump() << '\n';
        } else if (cmdPure->parsed()) {
            const BigInt e = detmult::multiplicity_pure(pureT, pureC, pureD);
            std::vector<long long> shifts(pureC);
            for (long long i = 1; i <= pureC; ++i) {
                shifts[i - 1] = pureT * pureD + (i - 1) * pureD;
            }
            json out = {{"e", e.str()}, {"m", shifts}, {"M", shifts}};
            std::cout << out.dump() << '\n';
        } else if (cmdFuzz->parsed()) {
            cfg.enumCap =
                enumCapFlag.value_or(enum_cap_from_env(detmult::kDefaultEnumCap));
            const detmult::CampaignSummary summary =
                serial ? detmult::fuzz_campaign_serial(cfg)
                       : detmult::fuzz_campaign(cfg);
            std::cout << summary_json(summary).dump() << '\n';
            if (!summary.violations.empty()) return kExitInvariant;
        }
    } catch (const UsageError& err) {
        std::cerr << "usage error: " << err.what() << '\n';
        return kExitUsage;
    } catch (const detmult::validation_error& err) {
        std::cerr << "invalid input: " << err.what() << '\n';
        return kExitValidation;
    } catch (const detmult::invariant_violation& err) {
        std::cerr << "internal invariant violated: " << err.what() << '\n';
        return kExitInvariant;
    }
    return kExitOk;
}
