// thetaquartic: command-line front end for the theta/bitangent library.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "thetaquartic/bitangents.hpp"
#include "thetaquartic/characteristics.hpp"
#include "thetaquartic/error.hpp"
#include "thetaquartic/harness.hpp"
#include "thetaquartic/io.hpp"
#include "thetaquartic/theta.hpp"
#include "thetaquartic/weber.hpp"

namespace tq = thetaquartic;
using tq::io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitNumerical = 4;

struct RunConfig {
    double tol = 1e-12;
    double compare_tol = tq::kDefaultCompareTol;
    std::uint64_t seed = 1;
    double radius_cap = 64.0;
    std::string output_path;
    bool json = false;

    tq::ThetaOptions theta() const { return {tol, radius_cap}; }
};

std::optional<double> env_number(const char* name) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0')
        throw tq::Error(tq::ErrorCode::InvalidArgument, std::string(name) + " is not a number: " + raw);
    return v;
}

int exit_code_for(tq::ErrorCode code) {
    switch (code) {
        case tq::ErrorCode::InvalidArgument:
        case tq::ErrorCode::GenusMismatch:
        case tq::ErrorCode::RepeatedCharacteristic:
        case tq::ErrorCode::UnsupportedGenus:
        case tq::ErrorCode::NotSymplectic:
        case tq::ErrorCode::NotSymmetric:
        case tq::ErrorCode::NotPositiveDefinite:
        case tq::ErrorCode::ZeroVector:
        case tq::ErrorCode::ParseError:
            return kExitInvalid;
        case tq::ErrorCode::HyperellipticOrDegenerate:
            return kExitDegenerate;
        default:
            return kExitNumerical;
    }
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw tq::Error(tq::ErrorCode::InvalidArgument, "cannot write " + path);
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void emit_json(const RunConfig& cfg, const Json& j) {
    Output out(cfg.output_path);
    out.stream() << j.dump(2) << '\n';
}

void emit_text(const RunConfig& cfg, const std::string& text) {
    Output out(cfg.output_path);
    out.stream() << text;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

tq::SiegelPoint load_tau(const std::string& path) {
    return tq::io::period_matrix_from_json(tq::io::read_json_file(path));
}

tq::BitangentSet load_bitangents(const std::string& path) {
    return tq::io::bitangents_from_json(tq::io::read_json_file(path));
}

int report_weber(const RunConfig& cfg, const std::vector<tq::WeberTrial>& trials) {
    const tq::WeberTrial* first_bad = nullptr;
    for (const auto& t : trials)
        if (!(t.residual < cfg.compare_tol)) {
            first_bad = &t;
            break;
        }
    if (cfg.json) {
        Json rows = Json::array();
        for (const auto& t : trials)
            rows.push_back(Json{{"m1", t.m1.to_string()}, {"m2", t.m2.to_string()}, {"residual", t.residual}});
        Json report{{"trials", rows}, {"tolerance", cfg.compare_tol}, {"passed", first_bad == nullptr}};
        if (first_bad) report["first_failure"] = Json{{"m1", first_bad->m1.to_string()}, {"m2", first_bad->m2.to_string()}};
        emit_json(cfg, report);
    } else {
        std::ostringstream os;
        for (const auto& t : trials) os << t.m1.to_string() << ' ' << t.m2.to_string() << ' ' << sci(t.residual) << '\n';
        emit_text(cfg, os.str());
    }
    if (first_bad) {
        std::cerr << "weber-verify: trial m1=" << first_bad->m1.to_string() << " m2=" << first_bad->m2.to_string()
                  << " has residual " << sci(first_bad->residual) << " >= " << sci(cfg.compare_tol) << '\n';
        return kExitFailed;
    }
    return kExitOk;
}

std::string aronhold_line(const tq::AronholdSet& s) {
    std::string line;
    for (const auto& n : s.members) {
        if (!line.empty()) line += ' ';
        line += n.to_string();
    }
    return line;
}

Json aronhold_json(const tq::AronholdSet& s) {
    Json members = Json::array();
    for (const auto& n : s.members) members.push_back(n.to_string());
    return Json{{"members", members}, {"sum", s.sum.to_string()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus-3 theta constants, bitangents of plane quartics and Weber's formula"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_help_all_flag("--help-all");

    RunConfig cfg;
    std::optional<double> tol_flag;
    std::optional<double> compare_tol_flag;
    std::optional<double> radius_cap_flag;
    app.add_option("--tol", tol_flag, "Absolute tolerance for theta series truncation (default 1e-12)");
    app.add_option("--compare-tol", compare_tol_flag, "Tolerance for residuals and fingerprint comparison (default 1e-6)");
    app.add_option("--radius-cap", radius_cap_flag, "Largest lattice box radius before giving up (default 64)");
    app.add_option("--seed", cfg.seed, "Seed for random draws");
    app.add_flag("--json", cfg.json, "Machine-readable output, including errors");
    app.add_option("-o,--output", cfg.output_path, "Write the result to this file instead of stdout");

    std::string tau_file;
    auto* bitangents = app.add_subcommand("bitangents", "Extract the 28 bitangents from a period matrix");
    bitangents->add_option("tau_file", tau_file, "Period-matrix JSON")->required();

    std::string weber_tau;
    int weber_random = 0;
    bool weber_corrupt = false;
    auto* weber = app.add_subcommand("weber-verify", "Check Weber's formula on a period matrix or random ones");
    auto* weber_tau_opt = weber->add_option("tau_file", weber_tau, "Period-matrix JSON");
    auto* weber_random_opt = weber->add_option("--random", weber_random, "Number of random (tau, pair) trials");
    weber_tau_opt->excludes(weber_random_opt);
    weber->add_flag("--corrupt", weber_corrupt, "Perturb one bitangent per trial (harness check)");
    weber->add_option("--seed", cfg.seed, "Seed for random draws");

    std::string lines_file;
    auto* fingerprint = app.add_subcommand("fingerprint", "Theta^4 fingerprint reconstructed from bitangents");
    fingerprint->add_option("bitangents_file", lines_file, "Bitangent-set JSON")->required();

    std::string file_a;
    std::string file_b;
    auto* compare = app.add_subcommand("compare", "Decide whether two bitangent sets come from the same curve");
    compare->add_option("file_a", file_a, "Bitangent-set JSON")->required();
    compare->add_option("file_b", file_b, "Bitangent-set JSON")->required();

    auto* aronhold = app.add_subcommand("aronhold", "Aronhold sets of odd genus-3 characteristics");
    aronhold->require_subcommand(1);
    auto* ar_enum = aronhold->add_subcommand("enumerate", "List all Aronhold sets");
    std::string ar_m1;
    std::string ar_m2;
    auto* ar_find = aronhold->add_subcommand("find", "An Aronhold set adapted to an even pair (m1, m2)");
    ar_find->add_option("--m1", ar_m1, "Even characteristic, e.g. 000|000")->required();
    ar_find->add_option("--m2", ar_m2, "Even characteristic, e.g. 100|000")->required();

    auto* transform = app.add_subcommand("transform-check", "Transformation laws under random Sp(6, Z) words");
    transform->add_option("--seed", cfg.seed, "Seed for random draws");

    auto* theta_cmd = app.add_subcommand("theta", "Theta function evaluation");
    theta_cmd->require_subcommand(1);
    std::string eval_char;
    std::string eval_tau;
    std::string eval_z;
    auto* theta_eval = theta_cmd->add_subcommand("eval", "Evaluate theta[m](tau, z)");
    theta_eval->add_option("--char", eval_char, "Characteristic, e.g. 101|010")->required();
    theta_eval->add_option("--tau", eval_tau, "Period-matrix JSON file")->required();
    theta_eval->add_option("--z", eval_z, "z as a JSON array of [re, im] pairs (default 0)");

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite and print a scoreboard");
    selftest->add_option("--seed", cfg.seed, "Seed for random draws");

    auto* random_tau_cmd = app.add_subcommand("random-tau", "Write a random genus-3 period matrix");
    double conditioning = 0.3;
    random_tau_cmd->add_option("--seed", cfg.seed, "Seed for random draws");
    random_tau_cmd->add_option("--conditioning", conditioning, "Off-diagonal size of Im tau (0 <= rho < 1)");

    // JSON mode has to be known before CLI11 reports a parse error.
    for (int i = 1; i < argc; ++i)
        if (std::string_view(argv[i]) == "--json") cfg.json = true;

    auto fail = [&](const std::string& code, const std::string& message, int exit_code) {
        if (cfg.json) {
            std::cout << Json{{"error", {{"code", code}, {"message", message}, {"exit_code", exit_code}}}}.dump() << '\n';
        } else {
            std::cerr << "error (" << code << "): " << message << '\n';
        }
        return exit_code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("UsageError", e.what(), kExitInvalid);
    }

    try {
        if (auto v = env_number("THETAQUARTIC_TOL")) cfg.tol = *v;
        if (auto v = env_number("THETAQUARTIC_COMPARE_TOL")) cfg.compare_tol = *v;
        if (auto v = env_number("THETAQUARTIC_RADIUS_CAP")) cfg.radius_cap = *v;
        if (tol_flag) cfg.tol = *tol_flag;
        if (compare_tol_flag) cfg.compare_tol = *compare_tol_flag;
        if (radius_cap_flag) cfg.radius_cap = *radius_cap_flag;
        if (!(cfg.tol > 0.0)) throw tq::Error(tq::ErrorCode::InvalidArgument, "--tol must be positive");
        if (!(cfg.compare_tol > cfg.tol))
            throw tq::Error(tq::ErrorCode::InvalidArgument, "--compare-tol must exceed --tol");
        if (!(cfg.radius_cap > 0.0)) throw tq::Error(tq::ErrorCode::InvalidArgument, "--radius-cap must be positive");

        if (*bitangents) {
            const tq::SiegelPoint tau = load_tau(tau_file);
            emit_json(cfg, tq::io::bitangents_to_json(tq::extract_bitangents(tau, cfg.theta())));
            return kExitOk;
        }

        if (*weber) {
            tq::WeberVerifyOptions opts;
            opts.theta = cfg.theta();
            opts.corrupt = weber_corrupt;
            if (weber_random_opt->count() > 0) return report_weber(cfg, tq::weber_verify_random(weber_random, cfg.seed, opts));
            if (weber_tau.empty())
                throw tq::Error(tq::ErrorCode::InvalidArgument, "weber-verify needs a tau file or --random n");
            return report_weber(cfg, tq::weber_verify_tau(load_tau(weber_tau), opts));
        }

        if (*fingerprint) {
            emit_json(cfg, tq::io::fingerprint_to_json(tq::fingerprint_from_bitangents(load_bitangents(lines_file))));
            return kExitOk;
        }

        if (*compare) {
            const tq::CurveComparison cmp =
                tq::compare_curves(load_bitangents(file_a), load_bitangents(file_b), cfg.compare_tol);
            const bool same = cmp.verdict == tq::Verdict::Same;
            if (cfg.json) {
                emit_json(cfg, tq::io::comparison_to_json(cmp));
            } else {
                emit_text(cfg, std::string(same ? "SAME" : "DIFFERENT") + " max_deviation=" +
                                   sci(cmp.deviations.max_deviation) + " tolerance=" + sci(cmp.tolerance) + '\n');
            }
            return same ? kExitOk : kExitFailed;
        }

        if (*ar_enum) {
            const auto sets = tq::enumerate_aronhold_sets();
            if (cfg.json) {
                Json all = Json::array();
                for (const auto& s : sets) all.push_back(aronhold_json(s));
                emit_json(cfg, all);
            } else {
                std::string text;
                for (const auto& s : sets) text += aronhold_line(s) + '\n';
                emit_text(cfg, text);
            }
            return kExitOk;
        }

        if (*ar_find) {
            const tq::AronholdSet s = tq::aronhold_for_pair(tq::Characteristic::parse(ar_m1), tq::Characteristic::parse(ar_m2));
            if (cfg.json) emit_json(cfg, aronhold_json(s));
            else emit_text(cfg, aronhold_line(s) + '\n');
            return kExitOk;
        }

        if (*transform) {
            tq::TransformOptions opts;
            opts.theta = cfg.theta();
            const tq::TransformReport r = tq::transform_check(cfg.seed, opts);
            constexpr double kLimit = 1e-8;
            const bool ok = r.max_theta_spread < kLimit && r.max_gradient_spread < kLimit && r.max_jacobian_spread < kLimit;
            if (cfg.json) {
                Json cases = Json::array();
                for (const auto& c : r.cases)
                    cases.push_back(Json{{"word", c.word},
                                         {"tau", c.tau},
                                         {"theta_spread", c.theta_spread},
                                         {"gradient_spread", c.gradient_spread},
                                         {"jacobian_spread", c.jacobian_spread}});
                emit_json(cfg, Json{{"cases", cases},
                                    {"max_theta_spread", r.max_theta_spread},
                                    {"max_gradient_spread", r.max_gradient_spread},
                                    {"max_jacobian_spread", r.max_jacobian_spread},
                                    {"limit", kLimit},
                                    {"passed", ok}});
            } else {
                emit_text(cfg, "theta " + sci(r.max_theta_spread) + "\ngradient " + sci(r.max_gradient_spread) +
                                   "\njacobian " + sci(r.max_jacobian_spread) + '\n' + (ok ? "PASS" : "FAIL") + '\n');
            }
            return ok ? kExitOk : kExitFailed;
        }

        if (*theta_eval) {
            const tq::SiegelPoint tau = load_tau(eval_tau);
            const tq::Characteristic m = tq::Characteristic::parse(eval_char);
            if (m.genus() != tau.genus()) throw tq::Error(tq::ErrorCode::GenusMismatch, "characteristic and tau differ in genus");
            tq::CVector z = tq::CVector::Zero(tau.genus());
            if (!eval_z.empty()) {
                z = tq::io::vector_from_json(tq::io::parse_json(eval_z));
                if (z.size() != tau.genus()) throw tq::Error(tq::ErrorCode::InvalidArgument, "--z must have genus entries");
            }
            const tq::ThetaValue v = tq::theta(m, tau, z, cfg.theta());
            if (cfg.json) {
                emit_json(cfg, Json{{"char", m.to_string()},
                                    {"value", tq::io::complex_to_json(v.value)},
                                    {"tail_bound", v.tail_bound},
                                    {"radius", v.radius_used}});
            } else {
                char buf[128];
                std::snprintf(buf, sizeof buf, "%.17g %+.17gi  (tail <= %.2e, radius %.1f)\n", v.value.real(),
                              v.value.imag(), v.tail_bound, v.radius_used);
                emit_text(cfg, buf);
            }
            return kExitOk;
        }

        if (*selftest) {
            const auto results = tq::run_acceptance(cfg.seed);
            int failed = 0;
            for (const auto& r : results) failed += r.passed ? 0 : 1;
            if (cfg.json) {
                Json rows = Json::array();
                for (const auto& r : results)
                    rows.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                emit_json(cfg, Json{{"criteria", rows}, {"failed", failed}});
            } else {
                std::string text;
                for (const auto& r : results)
                    text += std::string(r.passed ? "PASS " : "FAIL ") + r.id + "  " + r.name + " -- " + r.detail + '\n';
                text += std::to_string(results.size() - static_cast<std::size_t>(failed)) + "/" +
                        std::to_string(results.size()) + " passed\n";
                emit_text(cfg, text);
            }
            return failed == 0 ? kExitOk : kExitFailed;
        }

        if (*random_tau_cmd) {
            emit_json(cfg, tq::io::period_matrix_to_json(tq::random_tau(cfg.seed, 3, conditioning)));
            return kExitOk;
        }
    } catch (const tq::Error& e) {
        return fail(std::string(tq::to_string(e.code())), e.what(), exit_code_for(e.code()));
    } catch (const std::exception& e) {
        return fail("InternalError", e.what(), kExitNumerical);
    }
    return kExitOk;
}
