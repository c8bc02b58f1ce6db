// io.hpp — JSON exchange format for states/operators and the CSV report
// schemas
//
// Doubles are serialized with their shortest round-trip representation, so a
// written value parses back bit-exactly.

#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ergoflow/errors.hpp"
#include "ergoflow/matrix.hpp"
#include "ergoflow/reproduction.hpp"
#include "ergoflow/states.hpp"
#include "ergoflow/thermo.hpp"

namespace ergoflow {

using nlohmann::json;

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// ----------------------------- matrix JSON -----------------------------------

// {"dim": n, "entries_re": [...], "entries_im": [...], "dims": [d1, d2]}
inline json matrix_to_json(const ComplexMatrix& m) {
    std::vector<double> re, im;
    re.reserve(m.size());
    im.reserve(m.size());
    for (const auto& e : m.entries()) {
        re.push_back(e.real());
        im.push_back(e.imag());
    }
    return json{{"dim", m.dim()}, {"entries_re", re}, {"entries_im", im}};
}

inline ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries_re") ||
        !j.contains("entries_im"))
        throw DimensionMismatchError(
            "matrix_from_json: expected object with dim, entries_re, entries_im");
    const auto dim = j.at("dim").get<std::size_t>();
    const auto re = j.at("entries_re").get<std::vector<double>>();
    const auto im = j.at("entries_im").get<std::vector<double>>();
    if (re.size() != dim * dim || im.size() != dim * dim)
        throw DimensionMismatchError("matrix_from_json: entry arrays must have length dim^2");
    std::vector<Complex> entries(dim * dim);
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = Complex(re[i], im[i]);
    return ComplexMatrix(dim, std::move(entries));
}

inline json state_to_json(const DensityMatrix& rho) {
    json j = matrix_to_json(rho.matrix());
    j["dims"] = rho.dims();
    return j;
}

inline DensityMatrix state_from_json(const json& j) {
    ComplexMatrix m = matrix_from_json(j);
    std::vector<std::size_t> dims;
    if (j.contains("dims")) dims = j.at("dims").get<std::vector<std::size_t>>();
    return DensityMatrix(std::move(m), std::move(dims));
}

inline DensityMatrix load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw OutOfRangeError("load_state_file: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw OutOfRangeError("load_state_file: " + path + " is not valid JSON: " + e.what());
    }
    return state_from_json(j);
}

// ----------------------------- CSV report schemas ----------------------------

inline std::string thermo_csv_header() {
    return "state,model,omega,J,hbar,beta,ergotropy,exergy_total,exergy_passive,"
           "S_initial,S_passive,S_thermal,heat,balance_residual";
}

inline std::string thermo_csv_row(const std::string& state_id, ModelKind model,
                                  const HamiltonianParams& p, const ThermoReport& r) {
    std::ostringstream os;
    os << state_id << ',' << to_string(model) << ',' << format_double(p.omega) << ','
       << format_double(p.coupling) << ',' << format_double(p.hbar) << ','
       << format_double(r.beta) << ',' << format_double(r.ergotropy) << ','
       << format_double(r.exergy_total) << ',' << format_double(r.exergy_passive) << ','
       << format_double(r.entropy_initial) << ',' << format_double(r.entropy_passive) << ','
       << format_double(r.entropy_thermal) << ',' << format_double(r.heat) << ','
       << format_double(r.balance_residual);
    return os.str();
}

inline json thermo_to_json(const std::string& state_id, ModelKind model,
                           const HamiltonianParams& p, const ThermoReport& r) {
    return json{{"state", state_id},
                {"model", to_string(model)},
                {"omega", p.omega},
                {"J", p.coupling},
                {"hbar", p.hbar},
                {"beta", r.beta},
                {"ergotropy", r.ergotropy},
                {"exergy_total", r.exergy_total},
                {"exergy_passive", r.exergy_passive},
                {"S_initial", r.entropy_initial},
                {"S_passive", r.entropy_passive},
                {"S_thermal", r.entropy_thermal},
                {"heat", r.heat},
                {"balance_residual", r.balance_residual}};
}

// One correlation-report row; optional fields render as empty CSV cells
// (tdd for non-X states, oz_closed when the state is not a known Werner form).
struct CorrelationRow {
    std::string state_id;
    std::optional<double> epsilon;
    double concurrence = 0.0;
    std::optional<double> tdd;
    std::optional<double> oz_closed;
    double oz_numeric = 0.0;
    double oz_theta = 0.0;
    double oz_phi = 0.0;
};

inline std::string correlation_csv_header() {
    return "state_id,epsilon,concurrence,tdd,oz_closed,oz_numeric,oz_theta,oz_phi";
}

inline std::string correlation_csv_row(const CorrelationRow& r) {
    const auto opt = [](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string{};
    };
    std::ostringstream os;
    os << r.state_id << ',' << opt(r.epsilon) << ',' << format_double(r.concurrence) << ','
       << opt(r.tdd) << ',' << opt(r.oz_closed) << ',' << format_double(r.oz_numeric) << ','
       << format_double(r.oz_theta) << ',' << format_double(r.oz_phi);
    return os.str();
}

inline json correlation_to_json(const CorrelationRow& r) {
    json j{{"state_id", r.state_id},
           {"concurrence", r.concurrence},
           {"oz_numeric", r.oz_numeric},
           {"oz_theta", r.oz_theta},
           {"oz_phi", r.oz_phi}};
    j["epsilon"] = r.epsilon ? json(*r.epsilon) : json();
    j["tdd"] = r.tdd ? json(*r.tdd) : json();
    j["oz_closed"] = r.oz_closed ? json(*r.oz_closed) : json();
    return j;
}

inline std::string closed_form_csv_header() {
    return "model,regime,epsilon,omega,coupling,hbar,beta,ergotropy_cf,ergotropy_num,"
           "exergy_passive_cf,exergy_passive_num,s_passive_cf,s_passive_num,z_cf,z_num,"
           "max_abs_err";
}

inline std::string closed_form_csv_row(const ClosedFormRow& r) {
    std::ostringstream os;
    os << to_string(r.model) << ',' << r.regime << ',' << format_double(r.epsilon) << ','
       << format_double(r.omega) << ',' << format_double(r.coupling) << ','
       << format_double(r.hbar) << ',' << format_double(r.beta) << ','
       << format_double(r.ergotropy_cf) << ',' << format_double(r.ergotropy_num) << ','
       << format_double(r.exergy_passive_cf) << ',' << format_double(r.exergy_passive_num) << ','
       << format_double(r.s_passive_cf) << ',' << format_double(r.s_passive_num) << ','
       << format_double(r.z_cf) << ',' << format_double(r.z_num) << ','
       << format_double(r.max_abs_err);
    return os.str();
}

inline json closed_form_to_json(const ClosedFormRow& r) {
    return json{{"model", to_string(r.model)},
                {"regime", r.regime},
                {"epsilon", r.epsilon},
                {"omega", r.omega},
                {"coupling", r.coupling},
                {"hbar", r.hbar},
                {"beta", r.beta},
                {"ergotropy_cf", r.ergotropy_cf},
                {"ergotropy_num", r.ergotropy_num},
                {"exergy_passive_cf", r.exergy_passive_cf},
                {"exergy_passive_num", r.exergy_passive_num},
                {"s_passive_cf", r.s_passive_cf},
                {"s_passive_num", r.s_passive_num},
                {"z_cf", r.z_cf},
                {"z_num", r.z_num},
                {"max_abs_err", r.max_abs_err}};
}

} // namespace ergoflow
