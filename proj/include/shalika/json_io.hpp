#pragma once

// JSON input parsing and JSON/TSV report serialization for the command
// line tools. Input validation throws std::invalid_argument with messages
// naming the offending field; output is byte-deterministic.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "shalika/engine.hpp"
#include "shalika/langlands.hpp"
#include "shalika/orbits.hpp"

namespace shalika {

using Json = nlohmann::ordered_json;

inline ArchField field_from_json(const Json& j) {
    if (!j.contains("field") || !j["field"].is_string())
        throw std::invalid_argument("input needs a string field \"field\" equal to \"R\" or \"C\"");
    std::string f = j["field"].get<std::string>();
    if (f == "R") return ArchField::Real;
    if (f == "C") return ArchField::Complex;
    throw std::invalid_argument("field must be \"R\" or \"C\", got \"" + f + "\"");
}

inline GaussRat gauss_from_json(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw std::invalid_argument(where + " must be a string like \"1/2\" or \"1/2+3i\"");
    try {
        return GaussRat::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + ": " + e.what());
    }
}

inline CuspidalFactor factor_from_json(const Json& j, ArchField field, int index) {
    std::string where = "factors[" + std::to_string(index) + "]";
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw std::invalid_argument(where + " needs a string field \"type\" (\"chi\" or \"D\")");
    if (!j.contains("k") || !j["k"].is_number_integer())
        throw std::invalid_argument(where + " needs an integer field \"k\"");
    std::int64_t k = j["k"].get<std::int64_t>();
    GaussRat lambda = gauss_from_json(j.contains("lambda") ? j["lambda"] : Json(), where + ".lambda");
    std::string type = j["type"].get<std::string>();
    if (type == "chi") return CuspidalFactor::character(MultChar(field, k, lambda));
    if (type == "D") {
        if (field != ArchField::Real)
            throw std::invalid_argument(where + ": discrete series factors live over R");
        if (k < 0) throw std::invalid_argument(where + ": D needs k >= 0");
        return CuspidalFactor::disc(k, lambda);
    }
    throw std::invalid_argument(where + ".type must be \"chi\" or \"D\", got \"" + type + "\"");
}

// A standard module from {"field":..., "factors":[...]}. Factors may come
// in any order; they are sorted into the standard (non-increasing
// exponent) order.
inline StandardModule module_from_json(const Json& j) {
    ArchField field = field_from_json(j);
    if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
        throw std::invalid_argument("input needs a non-empty array \"factors\"");
    std::vector<CuspidalFactor> factors;
    int idx = 0;
    for (const auto& f : j["factors"]) factors.push_back(factor_from_json(f, field, idx++));
    return StandardModule::normalized(field, std::move(factors));
}

inline MultChar eta_from_json(const Json& j, ArchField field) {
    if (!j.contains("eta") || !j["eta"].is_object())
        throw std::invalid_argument("input needs an object \"eta\" with fields \"k\" and \"z\"");
    const Json& e = j["eta"];
    if (!e.contains("k") || !e["k"].is_number_integer())
        throw std::invalid_argument("eta needs an integer field \"k\"");
    GaussRat z = gauss_from_json(e.contains("z") ? e["z"] : Json(), "eta.z");
    return MultChar(field, e["k"].get<std::int64_t>(), z);
}

inline Rat psi_a_from_json(const Json& j) {
    if (!j.contains("psi_a")) return Rat(1);
    if (!j["psi_a"].is_string())
        throw std::invalid_argument("psi_a must be a string rational like \"1\" or \"-2/3\"");
    Rat a = Rat::parse(j["psi_a"].get<std::string>());
    if (a.is_zero()) throw std::invalid_argument("psi_a must be nonzero");
    return a;
}

inline bool assume_generic_from_json(const Json& j) {
    if (!j.contains("assume_generic")) return false;
    if (!j["assume_generic"].is_boolean())
        throw std::invalid_argument("assume_generic must be a boolean");
    return j["assume_generic"].get<bool>();
}

// --- serialization -------------------------------------------------------

inline Json roots_to_json(const RootSet& roots) {
    Json arr = Json::array();
    for (const auto& r : roots) arr.push_back(Json::array({r.first, r.second}));
    return arr;
}

inline std::string roots_to_text(const RootSet& roots) {
    if (roots.empty()) return "-";
    std::ostringstream os;
    for (const auto& r : roots) os << '(' << r.first << ',' << r.second << ')';
    return os.str();
}

inline std::string ints_to_text(const std::vector<int>& v) {
    if (v.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

inline Json orbit_to_json(const OrbitDescriptor& d) {
    Json j;
    j["omega"] = d.omega.str();
    j["gamma"] = d.gamma.str();
    j["sigma"] = d.sigma.str();
    j["length"] = d.length();
    j["class"] = d.cls ? orbit_class_name(*d.cls) : "?";
    j["psi"] = roots_to_json(d.psi.psi);
    j["psi_wh"] = roots_to_json(d.psi.wh);
    j["psi_ma"] = roots_to_json(d.psi.ma);
    j["psi_um"] = roots_to_json(d.psi.um);
    if (d.cls == OrbitClass::Matching) {
        Json s = Json::array();
        for (int v : d.s) s.push_back(v);
        j["s"] = s;
        j["conormal_dim"] = static_cast<int>(d.conormal.size());
    }
    return j;
}

inline Json orbits_to_json(const std::vector<OrbitDescriptor>& orbits) {
    Json arr = Json::array();
    for (const auto& d : orbits) arr.push_back(orbit_to_json(d));
    return arr;
}

inline std::string orbit_tsv_header() {
    return "omega\tlength\tclass\tpsi\tpsi_wh\tpsi_ma\tpsi_um\ts\tconormal_dim";
}

inline std::string orbit_to_tsv(const OrbitDescriptor& d) {
    std::ostringstream os;
    os << d.omega.str() << '\t' << d.length() << '\t'
       << (d.cls ? orbit_class_name(*d.cls) : "?") << '\t' << roots_to_text(d.psi.psi) << '\t'
       << roots_to_text(d.psi.wh) << '\t' << roots_to_text(d.psi.ma) << '\t'
       << roots_to_text(d.psi.um) << '\t';
    if (d.cls == OrbitClass::Matching)
        os << ints_to_text(d.s) << '\t' << d.conormal.size();
    else
        os << "-\t-";
    return os.str();
}

inline Json pairing_to_json(const SymplecticDecision& dec) {
    Json arr = Json::array();
    for (const auto& pr : dec.pairing) arr.push_back(Json::array({pr.first, pr.second}));
    return arr;
}

inline Json param_check_to_json(const StandardModule& m, const LParameter& phi,
                                const SymplecticDecision& dec) {
    Json j;
    j["field"] = field_name(m.field());
    j["module"] = m.str();
    Json parts = Json::array();
    for (const auto& w : phi.parts()) parts.push_back(w.str());
    j["parameter"] = parts;
    j["dim"] = phi.dim();
    j["symplectic"] = dec.value;
    j["pairing"] = pairing_to_json(dec);
    return j;
}

inline std::string param_check_to_tsv(const StandardModule& m, const LParameter& phi,
                                      const SymplecticDecision& dec) {
    std::ostringstream pairs;
    if (dec.pairing.empty()) pairs << '-';
    for (const auto& pr : dec.pairing) pairs << '(' << pr.first << ',' << pr.second << ')';
    std::ostringstream os;
    os << "module\tdim\tsymplectic\tpairing\n"
       << m.str() << '\t' << phi.dim() << '\t' << (dec.value ? "true" : "false") << '\t'
       << pairs.str();
    return os.str();
}

inline Json period_report_to_json(const StandardModule& m, const PeriodReport& rep) {
    Json j;
    j["module"] = m.str();
    j["necessary"] = rep.necessary;
    j["matching_orbits"] = rep.matching_orbits;
    j["compatible_orbits"] = rep.compatible_orbits;
    j["dim_upper_bound"] = rep.dim_upper_bound;
    j["witness_omega"] = rep.witness ? Json(rep.witness->omega.str()) : Json(nullptr);
    j["verdict"] = verdict_name(rep.verdict);
    return j;
}

inline std::string period_report_to_tsv(const StandardModule& m, const PeriodReport& rep) {
    std::ostringstream os;
    os << "module\tnecessary\tmatching_orbits\tcompatible_orbits\tdim_upper_bound\twitness_"
          "omega\tverdict\n"
       << m.str() << '\t' << (rep.necessary ? "true" : "false") << '\t' << rep.matching_orbits
       << '\t' << rep.compatible_orbits << '\t' << rep.dim_upper_bound << '\t'
       << (rep.witness ? rep.witness->omega.str() : "-") << '\t' << verdict_name(rep.verdict);
    return os.str();
}

inline Json epsilon_report_to_json(const StandardModule& m, const EpsilonReport& rep) {
    Json j;
    j["module"] = m.str();
    j["p"] = rep.p;
    j["q"] = rep.q;
    j["epsilon"] = rep.epsilon;
    return j;
}

inline std::string epsilon_report_to_tsv(const StandardModule& m, const EpsilonReport& rep) {
    std::ostringstream os;
    os << "module\tp\tq\tepsilon\n"
       << m.str() << '\t' << rep.p << '\t' << rep.q << '\t' << rep.epsilon;
    return os.str();
}

} // namespace shalika
