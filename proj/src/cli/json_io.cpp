#include "orderspec/cli/json_io.hpp"

#include <cmath>

namespace orderspec::cli {

Json big_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt(static_cast<unsigned long>(kMaxSafeInteger))) return Json(static_cast<std::uint64_t>(v.get_ui()));
    return Json(v.get_str());
}

Json big_list_json(const std::vector<BigInt>& values) {
    Json a = Json::array();
    for (const auto& v : values) a.push_back(big_json(v));
    return a;
}

Json tau_json(const TauCriterionResult& r) {
    Json j;
    j["verdict"] = r.verdict == TauVerdict::Equal ? "Equal" : "Witness";
    j["case"] = r.verdict == TauVerdict::Equal ? Json(nullptr) : Json(r.case_index);
    j["witness"] = r.verdict == TauVerdict::Equal ? Json(nullptr) : big_json(r.witness);
    Json cases = Json::array();
    for (const auto& c : r.triggered) cases.push_back(Json{{"case", c.index}, {"witness", big_json(c.witness)}});
    j["all_triggered_cases"] = cases;
    return j;
}

Json coset_json(const CosetResult& r) {
    Json j;
    if (const auto* u = std::get_if<Unsupported>(&r)) {
        j["supported"] = false;
        j["reason"] = u->reason;
        return j;
    }
    const auto& cs = std::get<CosetSpectrum>(r);
    j["supported"] = true;
    Json pieces = Json::array();
    for (const auto& p : cs.pieces()) {
        Json pj;
        pj["multiplier"] = big_json(p.multiplier);
        pj["base_generators"] = big_list_json(p.base.generators());
        pj["constraint"] = constraint_name(p.constraint);
        pieces.push_back(pj);
    }
    j["pieces"] = pieces;
    j["maximal_elements"] = big_list_json(cs.maximal_elements());
    return j;
}

Json admissibility_json(const AdmissibilityReport& r) {
    const OutGroup out(r.socle);
    Json j;
    j["spec"] = r.socle.display();
    j["d"] = r.d;
    j["b"] = r.b;
    j["out_order"] = out.size();
    j["eta"] = r.eta ? Json(out.to_string(*r.eta)) : Json(nullptr);
    j["phi_hat"] = r.phi_hat ? Json(out.to_string(*r.phi_hat)) : Json(nullptr);
    j["psi"] = out.to_string(r.psi);
    j["tau_admissible"] = r.tau_admissible;
    j["tau_test"] = tau_json(r.tau);
    Json gens = Json::array();
    for (const auto& g : r.generators) gens.push_back(out.to_string(g));
    j["generators"] = gens;
    j["rows"] = r.rows;
    j["diagnostics"] = r.diagnostics;
    if (r.class_count_total) {
        j["class_count_total"] = *r.class_count_total;
        j["class_count_nontrivial"] = *r.class_count_total - 1;
    } else {
        j["class_count_total"] = nullptr;
        j["class_count_nontrivial"] = nullptr;
    }
    return j;
}

Json verify_json(const oracle::VerifyReport& r) {
    Json j;
    j["spec"] = r.spec;
    j["group"] = r.group;
    j["mode"] = oracle::mode_name(r.mode);
    j["seed"] = r.seed <= kMaxSafeInteger ? Json(r.seed) : Json(std::to_string(r.seed));
    j["order_kind"] = oracle::order_kind_name(r.kind);
    j["attained"] = r.attained;
    j["formula"] = big_list_json(r.formula);
    j["verdict"] = r.pass ? "PASS" : "FAIL";
    j["detail"] = r.detail;
    j["processed"] = r.processed;
    j["sampler"] = r.sampler;
    j["wall_clock_ms"] = std::round(r.wall_clock_ms * 1000) / 1000;
    return j;
}

Json gamma_json(const oracle::GammaReport& r) {
    Json j;
    j["group"] = r.group;
    j["elements"] = r.elements;
    j["gamma_size"] = r.gamma_size;
    j["accepted_size"] = r.accepted_size;
    j["gamma_not_accepted"] = r.gamma_not_accepted;
    j["accepted_not_gamma"] = r.accepted_not_gamma;
    j["verdict"] = r.equal ? "PASS" : "FAIL";
    j["wall_clock_ms"] = std::round(r.wall_clock_ms * 1000) / 1000;
    return j;
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace orderspec::cli
