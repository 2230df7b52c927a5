#pragma once

// JSON encoding of the library's value types. Complex numbers are
// {"re": x, "im": y}; on input a bare number or an "a+bi" string is also
// accepted.

#include <string>

#include <json.hpp>

#include "complex.hpp"
#include "constants.hpp"
#include "identities.hpp"
#include "quad1d.hpp"
#include "simplex.hpp"
#include "special.hpp"

namespace lerchint {

using Json = nlohmann::json;

inline Json to_json(const Complex& c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

inline Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_string()) return parse_complex(j.get<std::string>());
    if (j.is_object() && j.contains("re")) {
        const double re = j.at("re").get<double>();
        const double im = j.contains("im") ? j.at("im").get<double>() : 0.0;
        return {re, im};
    }
    throw DomainError("expected a complex value {\"re\":..,\"im\":..}");
}

inline Json to_json(const EvalResult& r) {
    return Json{{"value", to_json(r.value)},
                {"abs_err", r.abs_err},
                {"method", std::string(to_string(r.method))},
                {"work", r.work}};
}

inline Json to_json(const QuadResult& r) {
    return Json{{"value", to_json(r.value)}, {"abs_err", r.abs_err}, {"nodes", r.nodes}};
}

inline Json to_json(const QmcResult& r) {
    return Json{{"estimate", to_json(r.estimate)},
                {"std_err", r.std_err},
                {"points", r.points},
                {"replicates", r.replicates},
                {"seed", r.seed}};
}

inline Json to_json(const IntegrandSpec& s) {
    Json ex = Json::array();
    for (const auto& u : s.exponents) ex.push_back(to_json(u));
    return Json{{"m", s.m},
                {"family", std::string(to_string(s.family))},
                {"exponents", ex},
                {"z", to_json(s.z)},
                {"s", to_json(s.s)}};
}

inline IntegrandSpec spec_from_json(const Json& j) {
    try {
        IntegrandSpec s;
        s.m = j.at("m").get<int>();
        s.family = family_from_string(j.at("family").get<std::string>());
        for (const auto& e : j.at("exponents")) s.exponents.push_back(complex_from_json(e));
        s.z = complex_from_json(j.at("z"));
        s.s = complex_from_json(j.at("s"));
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("invalid IntegrandSpec JSON: ") + e.what());
    }
}

inline Json to_json(const ReducedIntegrand& r) {
    Json terms = Json::array();
    for (const auto& t : r.terms)
        terms.push_back(Json{{"coeff", to_json(t.coeff)},
                             {"w", to_json(t.w)},
                             {"p", to_json(t.p)},
                             {"z", to_json(t.z)}});
    return Json{{"prefactor", r.prefactor}, {"terms", terms}};
}

inline ReducedIntegrand reduced_from_json(const Json& j) {
    try {
        ReducedIntegrand r;
        r.prefactor = j.value("prefactor", 1.0);
        for (const auto& t : j.at("terms"))
            r.terms.push_back({complex_from_json(t.at("coeff")), complex_from_json(t.at("w")),
                               complex_from_json(t.at("p")), complex_from_json(t.at("z"))});
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("invalid ReducedIntegrand JSON: ") + e.what());
    }
}

inline Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json to_json(const VerificationReport& r) {
    Json j{{"spec", to_json(r.spec)},
           {"rhs", to_json(r.rhs)},
           {"rhs_abs_err", r.rhs_abs_err},
           {"lhs_reduced", to_json(r.lhs_reduced)},
           {"lhs_qmc", r.lhs_qmc ? to_json(*r.lhs_qmc) : Json(nullptr)},
           {"abs_gap_reduced", finite_or_null(r.abs_gap_reduced)},
           {"rel_gap_reduced", finite_or_null(r.rel_gap_reduced)},
           {"qmc_sigma_gap", r.qmc_sigma_gap ? finite_or_null(*r.qmc_sigma_gap) : Json(nullptr)},
           {"tolerances", Json{{"rel_gap", r.tol}, {"qmc_sigma", r.qmc_sigma_limit}}},
           {"cancellation_warning", r.cancellation_warning},
           {"pass", r.pass}};
    if (!r.qmc_skipped_reason.empty()) j["qmc_skipped_reason"] = r.qmc_skipped_reason;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

inline Json to_json(const ConstantResult& r) {
    Json j{{"name", std::string(to_string(r.name))},
           {"m", r.m},
           {"method", std::string(to_string(r.method))},
           {"value", r.value},
           {"reference", r.reference},
           {"work", r.work},
           {"pass", r.pass}};
    j[r.method == ConstantMethod::reduced ? "abs_err" : "std_err"] = r.error;
    return j;
}

} // namespace lerchint
