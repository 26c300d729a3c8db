#include "ljb/io/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ljb/errors.hpp"
#include "ljb/io/json_writer.hpp"

namespace ljb::io {

namespace {

using nlohmann::json;

CMat parse_matrix(const json& jm, int dim, const char* field, std::size_t index) {
    std::ostringstream name;
    name << field << "[" << index << "]";
    if (!jm.is_array() || static_cast<int>(jm.size()) != dim) {
        throw ShapeError("scenario: " + name.str() + " must be a " +
                         std::to_string(dim) + "-row matrix");
    }
    CMat m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const json& row = jm[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw ShapeError("scenario: " + name.str() + " row " +
                             std::to_string(r) + " must have " +
                             std::to_string(dim) + " entries");
        }
        for (int c = 0; c < dim; ++c) {
            const json& e = row[static_cast<std::size_t>(c)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
                !e[1].is_number()) {
                throw ValidationError("scenario: " + name.str() + " entry (" +
                                      std::to_string(r) + "," +
                                      std::to_string(c) +
                                      ") must be an [re, im] pair");
            }
            m(r, c) = std::complex<double>(e[0].get<double>(),
                                           e[1].get<double>());
        }
    }
    const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (!(dev <= 1e-10)) {
        std::ostringstream os;
        os << "scenario: " << name.str() << " is not Hermitian (deviation "
           << dev << ")";
        throw ValidationError(os.str());
    }
    return m;
}

std::vector<CMat> parse_element_list(const json& list,
                                     const std::vector<CMat>& basis, int dim,
                                     const char* field) {
    if (!list.is_array()) {
        throw ValidationError(std::string("scenario: ") + field +
                              " must be an array");
    }
    std::vector<CMat> out;
    out.reserve(list.size());
    for (std::size_t k = 0; k < list.size(); ++k) {
        const json& item = list[k];
        if (item.is_object() && item.contains("coords")) {
            const json& jc = item["coords"];
            if (!jc.is_array() || jc.size() != basis.size()) {
                throw ShapeError(std::string("scenario: ") + field + "[" +
                                 std::to_string(k) + "].coords must have " +
                                 std::to_string(basis.size()) + " entries");
            }
            CMat m = CMat::Zero(dim, dim);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (!jc[i].is_number()) {
                    throw ValidationError(std::string("scenario: ") + field +
                                          " coordinates must be real numbers");
                }
                m += jc[i].get<double>() * basis[i];
            }
            out.push_back(std::move(m));
        } else if (item.is_object() && item.contains("matrix")) {
            out.push_back(parse_matrix(item["matrix"], dim, field, k));
        } else {
            throw ValidationError(std::string("scenario: ") + field + "[" +
                                  std::to_string(k) +
                                  "] must carry 'coords' or 'matrix'");
        }
    }
    return out;
}

void emit_matrix(JsonWriter& w, const CMat& m) {
    w.begin_array();
    for (int r = 0; r < m.rows(); ++r) {
        w.begin_array();
        for (int c = 0; c < m.cols(); ++c) {
            w.begin_array().value(m(r, c).real()).value(m(r, c).imag()).end_array();
        }
        w.end_array();
    }
    w.end_array();
}

} // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

ScenarioFile parse_scenario(const std::string& bytes) {
    json root;
    try {
        root = json::parse(bytes);
    } catch (const json::parse_error& e) {
        std::ostringstream os;
        os << "scenario: JSON parse failed at byte " << e.byte << ": "
           << e.what();
        throw ParseError(os.str());
    }
    if (!root.is_object()) throw ParseError("scenario: root must be an object");
    if (root.value("format", std::string()) != "ljb-scenario/1") {
        throw ValidationError(
            "scenario: missing or unsupported format (want \"ljb-scenario/1\")");
    }

    ScenarioFile sc;
    sc.digest = fnv1a_hex(bytes);
    if (!root.contains("hbar") || !root["hbar"].is_number()) {
        throw ValidationError("scenario: hbar must be a number");
    }
    sc.hbar = root["hbar"].get<double>();
    if (!(sc.hbar > 0.0)) throw ValidationError("scenario: hbar must be positive");
    if (!root.contains("dim") || !root["dim"].is_number_integer()) {
        throw ValidationError("scenario: dim must be an integer");
    }
    sc.dim = root["dim"].get<int>();
    if (sc.dim < 1) throw ValidationError("scenario: dim must be >= 1");

    if (!root.contains("basis") || !root["basis"].is_array() ||
        root["basis"].empty()) {
        throw ValidationError("scenario: basis must be a nonempty array");
    }
    const json& jb = root["basis"];
    sc.basis.reserve(jb.size());
    for (std::size_t k = 0; k < jb.size(); ++k) {
        sc.basis.push_back(parse_matrix(jb[k], sc.dim, "basis", k));
    }

    if (root.contains("constraints")) {
        sc.has_constraints = true;
        sc.constraints =
            parse_element_list(root["constraints"], sc.basis, sc.dim,
                               "constraints");
    }
    if (root.contains("generators")) {
        sc.has_generators = true;
        sc.generators = parse_element_list(root["generators"], sc.basis,
                                           sc.dim, "generators");
    }
    if (root.contains("metadata")) {
        const json& jm = root["metadata"];
        if (!jm.is_object()) {
            throw ValidationError("scenario: metadata must be an object");
        }
        for (auto it = jm.begin(); it != jm.end(); ++it) {
            if (!it.value().is_string()) {
                throw ValidationError(
                    "scenario: metadata values must be strings");
            }
            sc.metadata[it.key()] = it.value().get<std::string>();
        }
    }
    return sc;
}

ScenarioFile load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("scenario: cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_scenario(const ScenarioFile& sc) {
    JsonWriter w;
    w.begin_object();
    w.key("format").value("ljb-scenario/1");
    w.key("hbar").value(sc.hbar);
    w.key("dim").value(sc.dim);
    w.key("basis").begin_array();
    for (const CMat& m : sc.basis) emit_matrix(w, m);
    w.end_array();
    if (sc.has_constraints) {
        w.key("constraints").begin_array();
        for (const CMat& m : sc.constraints) {
            w.begin_object().key("matrix");
            emit_matrix(w, m);
            w.end_object();
        }
        w.end_array();
    }
    if (sc.has_generators) {
        w.key("generators").begin_array();
        for (const CMat& m : sc.generators) {
            w.begin_object().key("matrix");
            emit_matrix(w, m);
            w.end_object();
        }
        w.end_array();
    }
    if (!sc.metadata.empty()) {
        w.key("metadata").begin_object();
        for (const auto& [k, v] : sc.metadata) w.key(k).value(v);
        w.end_object();
    }
    w.end_object();
    return w.str() + "\n";
}

void save_scenario(const ScenarioFile& sc, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("scenario: cannot write file: " + path);
    out << serialize_scenario(sc);
    if (!out) throw ParseError("scenario: write failed: " + path);
}

} // namespace ljb::io
