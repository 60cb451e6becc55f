#pragma once

// JSON forms of towers, groups, cocycle tables, rings and codes.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "xprod/classify.hpp"
#include "xprod/cocycles.hpp"
#include "xprod/codes.hpp"
#include "xprod/cohomology.hpp"
#include "xprod/crossring.hpp"
#include "xprod/error.hpp"
#include "xprod/ffield.hpp"
#include "xprod/groups.hpp"

namespace xprod::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const FieldTower& t) {
    return Json{{"q", t.q()}, {"r", t.r()}, {"modulus", t.modulus()}, {"generator", t.generator_coeffs()}};
}

inline Json to_json(const GroupSpec& g) {
    if (g.is_cyclic()) return Json{{"kind", "cyclic"}, {"n", g.n()}};
    if (g.is_elab()) return Json{{"kind", "elab"}, {"p", g.p()}, {"s", g.s()}};
    return Json{{"kind", "abelian"}, {"factors", g.factors()}};
}

namespace detail {

inline i64 get_int(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        throw Error(ErrorKind::Parse, std::string("missing integer field \"") + key + "\"");
    return j.at(key).get<i64>();
}

}  // namespace detail

inline GroupSpec group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) throw Error(ErrorKind::Parse, "group needs a \"kind\"");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") return GroupSpec::cyclic(detail::get_int(j, "n"));
    if (kind == "elab") return GroupSpec::elab(detail::get_int(j, "p"), detail::get_int(j, "s"));
    if (kind == "abelian") {
        if (!j.contains("factors") || !j.at("factors").is_array()) throw Error(ErrorKind::Parse, "abelian group needs \"factors\"");
        return GroupSpec::abelian(j.at("factors").get<std::vector<i64>>());
    }
    throw Error(ErrorKind::Parse, "unknown group kind \"" + kind + "\"");
}

inline Json to_json(const CocycleTable& f) {
    Json table = Json::array();
    for (std::size_t g = 0; g < f.group.order(); ++g) {
        Json row = Json::array();
        for (std::size_t h = 0; h < f.group.order(); ++h) row.push_back(f(g, h));
        table.push_back(std::move(row));
    }
    return Json{{"group", to_json(f.group)}, {"N", f.N()}, {"action_multipliers", f.coeff.multipliers()}, {"table", std::move(table)}};
}

/// Parses and validates a normalized cocycle table.
inline CocycleTable cocycle_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group")) throw Error(ErrorKind::Parse, "cocycle needs a \"group\"");
    const auto group = group_from_json(j.at("group"));
    const i64 N = detail::get_int(j, "N");
    if (!j.contains("action_multipliers") || !j.at("action_multipliers").is_array())
        throw Error(ErrorKind::Parse, "cocycle needs \"action_multipliers\"");
    CoeffModule coeff(group, N, j.at("action_multipliers").get<std::vector<i64>>());
    if (!j.contains("table") || !j.at("table").is_array() || j.at("table").size() != group.order())
        throw Error(ErrorKind::Parse, "table must have |G| rows");
    CocycleTable f(group, coeff);
    for (std::size_t g = 0; g < group.order(); ++g) {
        const auto& row = j.at("table").at(g);
        if (!row.is_array() || row.size() != group.order()) throw Error(ErrorKind::Parse, "table rows must have |G| entries");
        for (std::size_t h = 0; h < group.order(); ++h) {
            if (!row.at(h).is_number_integer()) throw Error(ErrorKind::Parse, "table entries must be integers");
            f.at(g, h) = row.at(h).get<i64>();
        }
    }
    if (auto v = validate(f)) {
        const char* what = v->kind == Violation::Kind::NotNormalized ? "not normalized"
                           : v->kind == Violation::Kind::OutOfRange  ? "entry out of range"
                                                                     : "cocycle condition fails";
        throw Error(ErrorKind::InvalidCocycle, std::string("cocycle table ") + what + " at (" + std::to_string(v->where[0]) + ", " +
                                                   std::to_string(v->where[1]) + ", " + std::to_string(v->where[2]) + ")");
    }
    return f;
}

inline Json to_json(const CompatAut& a) {
    if (const auto* c = std::get_if<CyclicAut>(&a)) return c->j;
    const auto& l = std::get<LinearAut>(a);
    Json rows = Json::array();
    for (i64 i = 0; i < l.s; ++i) {
        Json row = Json::array();
        for (i64 k = 0; k < l.s; ++k) row.push_back(l.matrix[static_cast<std::size_t>(i * l.s + k)]);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Coefficients as discrete logs; zero is null.
inline Json to_json(const RingElem& a) {
    Json out = Json::array();
    for (const auto& c : a.coeffs) out.push_back(c.is_zero() ? Json(nullptr) : Json(c.log()));
    return out;
}

inline Json to_json(const CrossedRing& ring) {
    Json j{{"tower", to_json(ring.tower())},
           {"group", to_json(ring.group())},
           {"action_multipliers", ring.cocycle().coeff.multipliers()},
           {"frobenius_exponents", ring.frobenius_exponents()},
           {"kernel_order", ring.kernel_order()}};
    if (ring.group().is_cyclic()) j["beta"] = beta_of(ring.cocycle());
    return j;
}

inline Json to_json(const Code& c) {
    Json gens = Json::array();
    for (const auto& b : c.basis) gens.push_back(to_json(b));
    return Json{{"rank", c.rank}, {"min_distance", c.min_distance ? Json(*c.min_distance) : Json(nullptr)}, {"generators", std::move(gens)}};
}

inline Json to_json(const ElabClass& c) {
    return Json{{"i", c.i},
                {"matrix_size", c.matrix_size},
                {"copies", c.copies},
                {"radical_rank", c.radical_rank},
                {"simple", c.simple()},
                {"irreducible_codes", c.irreducible_codes},
                {"total_codes_log2", c.total_codes_log2}};
}

inline Json to_json(const CyclicClassification& c) {
    return Json{{"m", c.m}, {"classes", c.classes}, {"semisimple", c.semisimple}, {"classical", c.classical}};
}

inline Json to_json(const ElabClassification& c) {
    Json w = Json::array();
    for (const auto& e : c.wedderburn) w.push_back(to_json(e));
    return Json{{"i_values", c.i_values}, {"wedderburn", std::move(w)}, {"count", c.count}};
}

}  // namespace xprod::io
