#include "ljb/io/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "ljb/errors.hpp"
#include "ljb/io/json_writer.hpp"

namespace ljb::io {

namespace {

using nlohmann::json;

std::string text_double(double v) { return format_double(v); }

} // namespace

void ReductionReport::add_check(const std::string& name, double value,
                                double threshold) {
    if (!std::isfinite(value) || !std::isfinite(threshold)) {
        throw ValidationError("report: non-finite check value for " + name);
    }
    const bool ok = value <= threshold;
    checks.push_back({name, value, threshold, ok});
    if (!ok) passed = false;
}

void ReductionReport::add_flag(const std::string& name, bool ok) {
    checks.push_back({name, ok ? 1.0 : 0.0, 1.0, ok});
    if (!ok) passed = false;
}

std::string ReductionReport::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("format").value("ljb-report/1");
    w.key("command").value(command);
    w.key("input_digest").value(input_digest);
    w.key("inputs").begin_array();
    for (const auto& [k, v] : inputs) {
        w.begin_object().key("option").value(k).key("value").value(v).end_object();
    }
    w.end_array();
    w.key("stage_dims").begin_array();
    for (const auto& [k, v] : stage_dims) {
        w.begin_object().key("stage").value(k).key("dim").value(v).end_object();
    }
    w.end_array();
    w.key("axiom_residuals").begin_array();
    for (const auto& [k, v] : axiom_residuals) {
        w.begin_object().key("axiom").value(k).key("residual").value(v).end_object();
    }
    w.end_array();
    w.key("rank_decisions").begin_array();
    for (const RankDecision& rd : rank_decisions) {
        w.begin_object();
        w.key("stage").value(rd.stage);
        w.key("threshold").value(rd.threshold);
        w.key("kernel_dim").value(rd.kernel_dim);
        w.key("singular_values").begin_array();
        for (double s : rd.singular_values) w.value(s);
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.key("checks").begin_array();
    for (const CheckResult& c : checks) {
        w.begin_object();
        w.key("name").value(c.name);
        w.key("value").value(c.value);
        w.key("threshold").value(c.threshold);
        w.key("passed").value(c.passed);
        w.end_object();
    }
    w.end_array();
    w.key("warnings").begin_array();
    for (const std::string& s : warnings) w.value(s);
    w.end_array();
    w.key("passed").value(passed);
    w.end_object();
    return w.str() + "\n";
}

std::string ReductionReport::to_text() const {
    std::ostringstream os;
    os << "ljb report: " << command << "\n";
    os << "input digest: " << input_digest << "\n";
    if (!inputs.empty()) {
        os << "inputs:\n";
        for (const auto& [k, v] : inputs) os << "  " << k << " = " << v << "\n";
    }
    if (!stage_dims.empty()) {
        os << "stage dimensions:\n";
        for (const auto& [k, v] : stage_dims) {
            os << "  " << k << " = " << v << "\n";
        }
    }
    if (!axiom_residuals.empty()) {
        os << "axiom residuals:\n";
        for (const auto& [k, v] : axiom_residuals) {
            os << "  " << k << " = " << text_double(v) << "\n";
        }
    }
    if (!rank_decisions.empty()) {
        os << "rank decisions:\n";
        for (const RankDecision& rd : rank_decisions) {
            os << "  " << rd.stage << ": kernel dim " << rd.kernel_dim
               << ", threshold " << text_double(rd.threshold)
               << ", singular values [";
            for (std::size_t i = 0; i < rd.singular_values.size(); ++i) {
                if (i > 0) os << ", ";
                os << text_double(rd.singular_values[i]);
            }
            os << "]\n";
        }
    }
    if (!checks.empty()) {
        os << "checks:\n";
        for (const CheckResult& c : checks) {
            os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name
               << ": " << text_double(c.value) << " vs "
               << text_double(c.threshold) << "\n";
        }
    }
    if (!warnings.empty()) {
        os << "warnings:\n";
        for (const std::string& s : warnings) os << "  - " << s << "\n";
    }
    os << "result: " << (passed ? "PASS" : "FAIL") << "\n";
    return os.str();
}

ReductionReport ReductionReport::from_json(const std::string& bytes) {
    json root;
    try {
        root = json::parse(bytes);
    } catch (const json::parse_error& e) {
        std::ostringstream os;
        os << "report: JSON parse failed at byte " << e.byte << ": " << e.what();
        throw ParseError(os.str());
    }
    if (!root.is_object() ||
        root.value("format", std::string()) != "ljb-report/1") {
        throw ValidationError("report: missing or unsupported format");
    }
    ReductionReport r;
    r.command = root.value("command", std::string());
    r.input_digest = root.value("input_digest", std::string());
    for (const json& j : root.value("inputs", json::array())) {
        r.inputs.emplace_back(j.at("option").get<std::string>(),
                              j.at("value").get<std::string>());
    }
    for (const json& j : root.value("stage_dims", json::array())) {
        r.stage_dims.emplace_back(j.at("stage").get<std::string>(),
                                  j.at("dim").get<int>());
    }
    for (const json& j : root.value("axiom_residuals", json::array())) {
        r.axiom_residuals.emplace_back(j.at("axiom").get<std::string>(),
                                       j.at("residual").get<double>());
    }
    for (const json& j : root.value("rank_decisions", json::array())) {
        RankDecision rd;
        rd.stage = j.at("stage").get<std::string>();
        rd.threshold = j.at("threshold").get<double>();
        rd.kernel_dim = j.at("kernel_dim").get<int>();
        for (const json& s : j.at("singular_values")) {
            rd.singular_values.push_back(s.get<double>());
        }
        r.rank_decisions.push_back(std::move(rd));
    }
    for (const json& j : root.value("checks", json::array())) {
        CheckResult c;
        c.name = j.at("name").get<std::string>();
        c.value = j.at("value").get<double>();
        c.threshold = j.at("threshold").get<double>();
        c.passed = j.at("passed").get<bool>();
        r.checks.push_back(std::move(c));
    }
    for (const json& j : root.value("warnings", json::array())) {
        r.warnings.push_back(j.get<std::string>());
    }
    r.passed = root.value("passed", false);
    return r;
}

} // namespace ljb::io
