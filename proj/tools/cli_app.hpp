#pragma once

// Command-line front end. Every code path writes one JSON document (or, with
// --output text, flattened "key = value" lines) and reports pass/fail only
// through the exit code:
//   0 success / pass, 1 verification or tolerance failure,
//   2 invalid input or domain error, 3 convergence or evaluation failure.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lerchint/json_io.hpp>
#include <lerchint/lerchint.hpp>

namespace lerchint::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitConvergence = 3;

struct Config {
    double tol = 1e-10;
    std::size_t qmc_points = 65536;
    int qmc_replicates = 8;
    std::uint64_t seed = 1;
    std::string output = "json";
    int threads = 1;
};

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("LERCHINT_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
        }
    }
    return 1;
}

inline void emit(std::ostream& out, const Json& j, const std::string& mode) {
    if (mode == "text") {
        const Json flat = j.flatten();
        for (const auto& [key, value] : flat.items()) out << key << " = " << value.dump() << '\n';
    } else {
        out << j.dump(2) << '\n';
    }
}

inline int emit_error(std::ostream& out, const std::string& mode, const std::string& kind,
                      const std::string& message, int code) {
    emit(out, Json{{"error", message}, {"kind", kind}}, mode);
    return code;
}

inline void check_config(const Config& c) {
    if (!(c.tol >= 1e-14 && c.tol <= 1e-2)) throw DomainError("--tol must lie in [1e-14, 1e-2]");
    const auto p = c.qmc_points;
    if (p < (1u << 8) || p > (1u << 22) || (p & (p - 1)) != 0)
        throw DomainError("--qmc-points must be a power of two in [2^8, 2^22]");
    if (c.qmc_replicates < 2) throw DomainError("--qmc-replicates must be at least 2");
    if (c.output != "json" && c.output != "text") throw DomainError("--output must be json or text");
}

struct SpecFlags {
    std::string family;
    int m = 0;
    std::string z = "0";
    std::string s = "0";
    std::string u;
    std::string v;
    std::vector<std::string> us = std::vector<std::string>(kMaxDimension);
};

inline void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
    cmd->add_option("--m", f.m, "dimension m");
    cmd->add_option("--z", f.z, "z as a complex literal");
    cmd->add_option("--s", f.s, "s as a complex literal");
    cmd->add_option("--u", f.u, "exponent u");
    cmd->add_option("--v", f.v, "exponent v (pair form)");
    for (int i = 0; i < kMaxDimension; ++i)
        cmd->add_option("--u" + std::to_string(i + 1), f.us[i], "exponent u_i (distinct exponents)");
}

inline IntegrandSpec spec_from_flags(Family family, const SpecFlags& f) {
    IntegrandSpec spec;
    spec.family = family;
    spec.m = f.m;
    spec.z = parse_complex(f.z);
    spec.s = parse_complex(f.s);
    auto need = [](const std::string& text, const char* flag) {
        if (text.empty()) throw DomainError(std::string("missing ") + flag);
        return parse_complex(text);
    };
    switch (family) {
    case Family::symmetric:
    case Family::theorem4_kernel: spec.exponents = {need(f.u, "--u")}; break;
    case Family::f_kernel: spec.exponents = {need(f.u, "--u"), need(f.v, "--v")}; break;
    case Family::distinct_exponents:
        if (f.m < 1 || f.m > kMaxDimension) throw DomainError("--m must lie in [1, 20]");
        for (int i = 0; i < f.m; ++i)
            spec.exponents.push_back(need(f.us[i], ("--u" + std::to_string(i + 1)).c_str()));
        break;
    }
    validate(spec);
    return spec;
}

inline Family family_from_theorem(const std::string& t) {
    if (t == "t3-pair") return Family::f_kernel;
    if (t == "t3-sym") return Family::symmetric;
    if (t == "t4") return Family::theorem4_kernel;
    if (t == "t5") return Family::distinct_exponents;
    throw DomainError("--theorem must be one of t3-pair, t3-sym, t4, t5");
}

inline Json read_json_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw DomainError("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Lerch transcendent evaluation and cube-integral identity verification"};
    app.fallthrough();
    app.require_subcommand(1);
    Config cfg;
    cfg.seed = default_seed();
    app.add_option("--tol", cfg.tol, "tolerance (default 1e-10)");
    app.add_option("--qmc-points", cfg.qmc_points, "QMC points per replicate (power of two)");
    app.add_option("--qmc-replicates", cfg.qmc_replicates, "QMC random-shift replicates");
    app.add_option("--seed", cfg.seed, "QMC seed (default $LERCHINT_SEED or 1)");
    app.add_option("--output", cfg.output, "json or text");
    app.add_option("--threads", cfg.threads, "worker threads for QMC replicates");

    auto* phi_cmd = app.add_subcommand("phi", "evaluate Phi(z, s, u)");
    std::string pz, ps, pu;
    bool allow_quadrature = false;
    phi_cmd->add_option("--z", pz)->required();
    phi_cmd->add_option("--s", ps)->required();
    phi_cmd->add_option("--u", pu)->required();
    phi_cmd->add_flag("--allow-quadrature", allow_quadrature, "permit the integral fallback");

    auto* verify_cmd = app.add_subcommand("verify", "verify one cube-integral identity");
    std::string theorem, qmc_switch = "off";
    SpecFlags vflags;
    verify_cmd->add_option("--theorem", theorem)->required();
    verify_cmd->add_option("--qmc", qmc_switch, "on or off");
    add_spec_flags(verify_cmd, vflags);

    auto* const_cmd = app.add_subcommand("constants", "gamma or ln(4/pi) as cube integrals");
    std::string cname, cmethod = "reduced";
    int cm = 2;
    const_cmd->add_option("--name", cname)->required();
    const_cmd->add_option("--m", cm);
    const_cmd->add_option("--method", cmethod, "reduced or qmc");

    auto* reduce_cmd = app.add_subcommand("reduce", "print the one-dimensional reduction");
    std::string spec_path;
    SpecFlags rflags;
    reduce_cmd->add_option("--spec", spec_path, "IntegrandSpec JSON file ('-' for stdin)");
    reduce_cmd->add_option("--family", rflags.family);
    add_spec_flags(reduce_cmd, rflags);

    auto* eval_cmd = app.add_subcommand("eval-reduced", "integrate a reduction given as JSON");
    std::string eval_path;
    eval_cmd->add_option("--input", eval_path, "ReducedIntegrand JSON file ('-' for stdin)")->required();

    std::string mode = "json";
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return emit_error(out, mode, "usage", e.what(), kExitDomain);
    }
    mode = cfg.output == "text" ? "text" : "json";

    try {
        check_config(cfg);
        if (*phi_cmd) {
            LerchArgs args{parse_complex(pz), parse_complex(ps), parse_complex(pu)};
            PhiOptions po;
            po.allow_quadrature = allow_quadrature;
            emit(out, to_json(phi(args, cfg.tol, po)), mode);
            return kExitOk;
        }
        if (*verify_cmd) {
            const IntegrandSpec spec = spec_from_flags(family_from_theorem(theorem), vflags);
            VerifyOptions vo;
            vo.tol = cfg.tol;
            if (qmc_switch == "on") {
                vo.qmc = QmcOptions{cfg.qmc_points, cfg.qmc_replicates, cfg.seed, cfg.threads};
            } else if (qmc_switch != "off") {
                throw DomainError("--qmc must be on or off");
            }
            const VerificationReport report = verify(spec, vo);
            emit(out, to_json(report), mode);
            if (!report.error.empty()) return kExitConvergence;
            return report.pass ? kExitOk : kExitFail;
        }
        if (*const_cmd) {
            ConstantName name;
            if (cname == "gamma")
                name = ConstantName::euler_gamma;
            else if (cname == "ln4pi")
                name = ConstantName::ln_4_over_pi;
            else
                throw DomainError("--name must be gamma or ln4pi");
            ConstantMethod method;
            if (cmethod == "reduced")
                method = ConstantMethod::reduced;
            else if (cmethod == "qmc")
                method = ConstantMethod::qmc;
            else
                throw DomainError("--method must be reduced or qmc");
            ConstantOptions co;
            co.points = cfg.qmc_points;
            co.replicates = cfg.qmc_replicates;
            co.seed = cfg.seed;
            co.threads = cfg.threads;
            const ConstantResult r = constant_via_integral(name, cm, method, co);
            emit(out, to_json(r), mode);
            return r.pass ? kExitOk : kExitFail;
        }
        if (*reduce_cmd) {
            IntegrandSpec spec;
            if (!spec_path.empty()) {
                spec = spec_from_json(read_json_file(spec_path));
            } else {
                if (rflags.family.empty()) throw DomainError("reduce needs --spec or --family");
                spec = spec_from_flags(family_from_string(rflags.family), rflags);
            }
            emit(out, to_json(reduce(spec)), mode);
            return kExitOk;
        }
        if (*eval_cmd) {
            const ReducedIntegrand r = reduced_from_json(read_json_file(eval_path));
            emit(out, to_json(reduced_eval(r, std::min(1e-12, cfg.tol))), mode);
            return kExitOk;
        }
    } catch (const DomainError& e) {
        return emit_error(out, mode, "domain", e.what(), kExitDomain);
    } catch (const ConvergenceError& e) {
        return emit_error(out, mode, "convergence", e.what(), kExitConvergence);
    } catch (const EvaluationError& e) {
        return emit_error(out, mode, "evaluation", e.what(), kExitConvergence);
    }
    return emit_error(out, mode, "usage", "no subcommand", kExitDomain);
}

} // namespace lerchint::cli
