#pragma once

#include <json.hpp>

#include <string>

#include "algebra.hpp"
#include "element.hpp"
#include "enumerate.hpp"
#include "images.hpp"
#include "oracle.hpp"
#include "scalar.hpp"

// JSON forms of the library's exchange types. Scalars travel as exact
// strings ("2/5"), never as floating point.

namespace nullfil {

using json = nlohmann::ordered_json;

inline json to_json(const AlgebraHandle& alg) {
    if (alg.is_finite()) return json{{"n", alg.dim()}};
    return json("inf");
}

inline AlgebraHandle algebra_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return AlgebraHandle::infinite();
    if (j.is_object() && j.contains("n")) return AlgebraHandle::finite(j.at("n").get<unsigned>());
    throw error("bad_json", "algebra must be {\"n\":N} or \"inf\"");
}

// {"algebra":{"n":4}, "coeffs":{"1":"1","3":"2/5"}}
template <RingScalar S>
json to_json(const Element<S>& u) {
    json coeffs = json::object();
    for (unsigned i : u.support()) coeffs[std::to_string(i)] = u.coeff(i).str();
    return json{{"algebra", to_json(u.algebra())}, {"coeffs", coeffs}};
}

template <ScalarDomain D>
typename D::scalar_type scalar_from_string(const std::string& text, const D& dom) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    auto slash = s.find('/');
    BigInt num(slash == std::string::npos ? s : s.substr(0, slash));
    BigInt den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (negative) num = -num;
    return dom.from_ratio(num, den);
}

template <ScalarDomain D>
Element<typename D::scalar_type> element_from_json(const json& j, const D& dom) {
    AlgebraHandle alg = algebra_from_json(j.at("algebra"));
    auto out = Element<typename D::scalar_type>::zero(alg, dom.zero());
    for (const auto& [key, value] : j.at("coeffs").items()) {
        std::string coeff = value;
        out.set(static_cast<unsigned>(std::stoul(key)), scalar_from_string(coeff, dom));
    }
    return out;
}

// {"kind":"zero"} | {"kind":"power_ideal","k":K}
// | {"kind":"punctured_cone","d":D,"closure_required":true}
inline json to_json(const ImageDescriptor& desc) {
    switch (desc.kind) {
        case ImageKind::zero: return json{{"kind", "zero"}};
        case ImageKind::power_ideal: return json{{"kind", "power_ideal"}, {"k", desc.index}};
        case ImageKind::punctured_cone:
            return json{{"kind", "punctured_cone"}, {"d", desc.index}, {"closure_required", desc.closure_required}};
    }
    throw error("bad_descriptor", "unknown descriptor kind");
}

inline ImageDescriptor descriptor_from_json(const json& j, AlgebraHandle alg) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "zero") return ImageDescriptor::zero(alg);
    if (kind == "power_ideal") return ImageDescriptor::power_ideal(alg, j.at("k").get<unsigned>());
    if (kind == "punctured_cone") return ImageDescriptor::punctured_cone(alg, j.at("d").get<unsigned>());
    throw error("bad_json", "unknown descriptor kind " + kind);
}

// {"n":3,"m":2,"by_degree":{"1":2,"2":4,"3":4},"unit":1,"total":11}
inline json to_json(const BasisCatalog& cat, bool include_words = false) {
    json by_degree = json::object();
    for (const auto& [s, words] : cat.by_degree) by_degree[std::to_string(s)] = words.size();
    json out{{"n", cat.n},
             {"m", cat.m},
             {"by_degree", by_degree},
             {"unit", cat.includes_unit ? 1 : 0},
             {"total", cat.total()}};
    if (include_words) {
        json listing = json::object();
        for (const auto& [s, words] : cat.by_degree) {
            json arr = json::array();
            for (const auto& w : words) arr.push_back(detail::format_word(w));
            listing[std::to_string(s)] = arr;
        }
        out["words"] = listing;
    }
    return out;
}

// {"f":"...","n":3,"p":3,"descriptor":{...},"inclusion":true,"equality":"exact"}
inline json to_json(const CrossCheckReport& rep) {
    json out{{"f", rep.f_text},
             {"n", rep.n},
             {"p", rep.p},
             {"descriptor", to_json(rep.descriptor)},
             {"inclusion", rep.inclusion},
             {"equality", equality_mode_name(rep.equality)},
             {"case", image_case_name(rep.kase)},
             {"ok", rep.ok}};
    if (!rep.detail.empty()) out["detail"] = rep.detail;
    return out;
}

}  // namespace nullfil
