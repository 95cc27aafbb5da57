#include <json.hpp>
#include <istream>

#include "dcheb/errors.hpp"
#include "dcheb/harness.hpp"

namespace dcheb {
namespace {

double real_field(const nlohmann::json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    }
    throw DomainError("json: expected a number");
}

}  // namespace

std::vector<ErrorRecord> parse_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("json: ") + e.what());
    }
    if (!doc.is_array()) throw DomainError("json: expected an array of records");
    std::vector<ErrorRecord> out;
    for (const auto& o : doc) {
        try {
            ErrorRecord r;
            r.n = o.at("n").get<long>();
            r.x = o.at("x").get<long>();
            r.capN = o.at("capN").get<long>();
            const auto reg = parse_regime(o.at("regime").get<std::string>());
            if (!reg) throw DomainError("json: unknown regime");
            r.regime = *reg;
            r.exact = {o.at("exact_sign").get<int>(), real_field(o.at("exact_log"))};
            r.approx = {o.at("approx_sign").get<int>(), real_field(o.at("approx_log"))};
            r.rel_err = real_field(o.at("rel_err"));
            r.sign_match = o.at("sign_match").get<bool>();
            out.push_back(r);
        } catch (const nlohmann::json::exception& e) {
            throw DomainError(std::string("json: ") + e.what());
        }
    }
    return out;
}

}  // namespace dcheb
