#include "moser/io.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace moser {

namespace {

Rational rational_from_json(const nlohmann::json& entry) {
    if (entry.is_number_integer()) return Rational(static_cast<long>(entry.get<long long>()));
    if (entry.is_string()) return parse_rational(entry.get<std::string>());
    throw std::invalid_argument("multiset entries must be integers or \"num/den\" strings");
}

}  // namespace

NumberMultiset parse_multiset(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty multiset input");

    std::vector<Rational> elements;
    if (text[first] == '[') {
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("multiset JSON parse error: ") + e.what());
        }
        if (!parsed.is_array()) throw std::invalid_argument("multiset JSON must be an array");
        for (const auto& entry : parsed) elements.push_back(rational_from_json(entry));
    } else {
        std::istringstream stream(text);
        std::string token;
        while (stream >> token) elements.push_back(parse_rational(token));
    }
    if (elements.empty()) throw std::invalid_argument("empty multiset input");
    return NumberMultiset(std::move(elements));
}

nlohmann::json qpolynomial_to_json(const QPolynomial& q) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lam, coeff] : q.terms()) {
        nlohmann::json partition = nlohmann::json::array();
        for (unsigned part : lam.parts()) partition.push_back(part);
        terms.push_back({{"partition", partition}, {"coeff", to_string(coeff)}});
    }
    return {{"s", q.s()}, {"k", q.k()}, {"n", q.n()}, {"terms", terms}};
}

nlohmann::json solvability_to_json(const SolvabilityReport& report) {
    nlohmann::json values = nlohmann::json::array();
    for (const BigInt& v : report.values) values.push_back(to_string(v));
    return {{"n", report.n},
            {"s", report.s},
            {"values", values},
            {"vanishing_k", report.vanishing_k},
            {"solvable", report.solvable}};
}

namespace {

std::string residual_string(double residual) {
    if (residual == 0.0) return "0";
    std::ostringstream oss;
    oss.precision(17);
    oss << residual;
    return oss.str();
}

}  // namespace

nlohmann::json recovery_to_json(const RecoveryResult& result) {
    nlohmann::json out;
    out["mode"] = result.mode == RecoveryMode::Exact ? "exact" : "numeric";
    nlohmann::json multiset = nlohmann::json::array();
    if (result.mode == RecoveryMode::Exact) {
        for (const Rational& v : result.multiset.elements()) multiset.push_back(to_string(v));
    } else {
        for (const ComplexApprox& v : result.approx) multiset.push_back({v.real(), v.imag()});
    }
    out["multiset"] = multiset;
    out["residual"] = residual_string(result.residual);
    nlohmann::json sums = nlohmann::json::array();
    for (const Rational& v : result.power_sums.values) sums.push_back(to_string(v));
    out["power_sums"] = sums;
    return out;
}

}  // namespace moser
