/*
   Copyright 2026 The twistgab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TWISTGAB_JSON_IO_HPP
#define TWISTGAB_JSON_IO_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codes.hpp"
#include "covering.hpp"
#include "field_tower.hpp"
#include "mrdcheck.hpp"

// Elements are written as coordinate arrays over F_q: [c_0, ..., c_{m-1}] for
// the basis 1, y, ..., y^{m-1}. When e = 1 each c_i is an integer mod p; when
// e > 1 each c_i is itself [d_0, ..., d_{e-1}] over F_p. On input a bare
// integer is also accepted and read as the packed code sum c_i q^i.

namespace twistgab::json_io {

using json = nlohmann::json;

inline constexpr const char* schema = "twistgab/1";

inline json fq_to_json(const BaseField& F, std::uint32_t c) {
    if (F.e() == 1) return c;
    return F.digits(c);
}

inline std::uint32_t fq_from_json(const BaseField& F, const json& j) {
    if (j.is_array()) return F.from_digits(j.get<std::vector<std::uint32_t>>());
    if (!j.is_number_unsigned() && !j.is_number_integer())
        throw std::invalid_argument("F_q coefficient must be an integer or a residue array");
    const auto v = j.get<long long>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= F.q()) throw std::invalid_argument("F_q coefficient out of range");
    if (F.e() > 1 && static_cast<std::uint64_t>(v) >= F.p())
        throw std::invalid_argument("F_q coefficient must be a residue array when e > 1");
    return static_cast<std::uint32_t>(v);
}

inline json element_to_json(const FieldTower& T, Element x) {
    json out = json::array();
    for (auto c : T.coords(x)) out.push_back(fq_to_json(T.base(), c));
    return out;
}

inline Element element_from_json(const FieldTower& T, const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) {
        const auto v = j.get<long long>();
        if (v < 0 || static_cast<std::uint64_t>(v) >= T.order())
            throw std::invalid_argument("element code " + std::to_string(v) + " outside the field");
        return static_cast<Element>(v);
    }
    if (!j.is_array()) throw std::invalid_argument("element must be a coordinate array or an integer code");
    if (j.size() != T.m())
        throw std::invalid_argument("element needs " + std::to_string(T.m()) + " coordinates, got " +
                                    std::to_string(j.size()));
    std::vector<std::uint32_t> c;
    for (const auto& x : j) c.push_back(fq_from_json(T.base(), x));
    return T.from_coords(c);
}

inline json vector_to_json(const FieldTower& T, const std::vector<Element>& v) {
    json out = json::array();
    for (Element x : v) out.push_back(element_to_json(T, x));
    return out;
}

inline std::vector<Element> vector_from_json(const FieldTower& T, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of elements");
    std::vector<Element> out;
    for (const auto& x : j) out.push_back(element_from_json(T, x));
    return out;
}

/// Matrix over F_q (subspace witnesses) as rows of coefficients.
inline json fq_matrix_to_json(const BaseField& F, const Matrix& M) {
    json out = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(fq_to_json(F, M(i, j)));
        out.push_back(row);
    }
    return out;
}

inline json subset_to_json(const std::vector<std::size_t>& I) {
    json out = json::array();
    for (auto i : I) out.push_back(i + 1);
    return out;
}

// ---- field

inline TowerParams tower_params_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("field spec must be a JSON object");
    TowerParams p;
    p.p = j.at("p").get<std::uint32_t>();
    p.e = j.value("e", 1u);
    p.m = j.at("m").get<unsigned>();
    if (j.contains("base_modulus")) p.base_modulus = j.at("base_modulus").get<std::vector<std::uint32_t>>();
    if (j.contains("top_modulus")) {
        // coefficients are F_q values; decoded once the base field exists
        BaseField F(p.p, p.e, p.base_modulus.empty() ? BaseField::default_modulus(p.p, p.e) : p.base_modulus);
        for (const auto& c : j.at("top_modulus")) p.top_modulus.push_back(fq_from_json(F, c));
    }
    return p;
}

inline json field_to_json(const FieldTower& T) {
    json top = json::array();
    for (auto c : T.params().top_modulus) top.push_back(fq_to_json(T.base(), c));
    return {{"p", T.p()}, {"e", T.e()}, {"m", T.m()}, {"base_modulus", T.params().base_modulus}, {"top_modulus", top}};
}

// ---- code

inline CodeSpec code_from_json(const FieldTower& T, const json& j) {
    if (!j.is_object()) throw std::invalid_argument("code spec must be a JSON object");
    CodeSpec s;
    s.alpha = vector_from_json(T, j.at("alpha"));
    s.k = j.at("k").get<std::size_t>();
    s.h = j.value("h", std::size_t{0});
    if (j.contains("twists"))
        for (const auto& tw : j.at("twists")) s.twists.push_back({tw.at("t").get<std::size_t>(), element_from_json(T, tw.at("eta"))});
    return s;
}

inline json code_to_json(const FieldTower& T, const CodeSpec& s) {
    json tw = json::array();
    for (const auto& t : s.twists) tw.push_back({{"t", t.t}, {"eta", element_to_json(T, t.eta)}});
    return {{"alpha", vector_to_json(T, s.alpha)}, {"k", s.k}, {"h", s.h}, {"twists", tw}};
}

// ---- sweep

struct SweepGrid {
    std::vector<Element> alpha;
    std::vector<std::size_t> ks, hs;
    std::vector<std::vector<std::size_t>> twist_sets;
    bool all_nonzero = true;
    std::vector<std::vector<Element>> eta_tuples;  // explicit tuples when !all_nonzero
};

inline SweepGrid sweep_from_json(const FieldTower& T, const json& j) {
    if (!j.is_object()) throw std::invalid_argument("sweep spec must be a JSON object");
    SweepGrid g;
    g.alpha = vector_from_json(T, j.at("alpha"));
    g.ks = j.at("k").get<std::vector<std::size_t>>();
    g.hs = j.value("h", std::vector<std::size_t>{0});
    g.twist_sets = j.value("twist_sets", std::vector<std::vector<std::size_t>>{{0}});
    const json eta = j.value("eta", json("nonzero"));
    if (eta.is_string()) {
        if (eta.get<std::string>() != "nonzero") throw std::invalid_argument("sweep eta must be \"nonzero\" or a list");
    } else {
        g.all_nonzero = false;
        if (!eta.is_array()) throw std::invalid_argument("sweep eta must be \"nonzero\" or a list");
        // each entry is a tuple of elements; a bare integer is a one-element tuple
        for (const auto& tup : eta) {
            std::vector<Element> t = tup.is_array() ? vector_from_json(T, tup) : std::vector<Element>{element_from_json(T, tup)};
            g.eta_tuples.push_back(t);
        }
    }
    return g;
}

/// Every valid spec in the grid, in grid order; invalid combinations are counted, not raised.
inline std::vector<CodeSpec> expand_sweep(const FieldTower& T, const SweepGrid& g, std::size_t* skipped = nullptr) {
    std::vector<CodeSpec> out;
    std::size_t skip = 0;
    for (auto k : g.ks)
        for (auto h : g.hs)
            for (const auto& ts : g.twist_sets) {
                if (ts.empty() && h != g.hs.front()) continue;  // Gabidulin codes ignore h
                std::vector<std::vector<Element>> tuples;
                if (g.all_nonzero || ts.empty()) {
                    tuples.push_back({});
                    for (std::size_t j = 0; j < ts.size(); ++j) {
                        std::vector<std::vector<Element>> next;
                        for (const auto& t : tuples)
                            for (Element e = 1; e < T.order(); ++e) {
                                auto u = t;
                                u.push_back(e);
                                next.push_back(u);
                            }
                        tuples = std::move(next);
                    }
                } else {
                    for (const auto& t : g.eta_tuples)
                        if (t.size() == ts.size()) tuples.push_back(t);
                }
                for (const auto& etas : tuples) {
                    CodeSpec s{g.alpha, k, ts.empty() ? 0 : h, {}};
                    for (std::size_t j = 0; j < ts.size(); ++j) s.twists.push_back({ts[j], etas[j]});
                    try {
                        validate(T, s);
                        out.push_back(s);
                    } catch (const std::invalid_argument&) {
                        ++skip;
                    }
                }
            }
    if (skipped) *skipped = skip;
    return out;
}

// ---- reports

inline json distance_report_to_json(const FieldTower& T, const DistanceReport& r) {
    json cond = {{"cond_i", r.conditions.cond_i}, {"cond_ii", r.conditions.cond_ii}, {"cond_iii", r.conditions.cond_iii}};
    cond["dependent_k_subset"] = r.conditions.dependent_k_subset ? subset_to_json(*r.conditions.dependent_k_subset) : json();
    json sub = {{"is_mrd", r.subspace.holds}, {"subspaces", r.subspace.enumerated}};
    sub["witness_V"] = r.subspace.witness ? fq_matrix_to_json(T.base(), *r.subspace.witness) : json();
    return {{"n", r.n},
            {"k", r.k},
            {"d_rank", r.d_rank},
            {"d_hamming", r.d_hamming},
            {"dual_d_hamming", r.dual_d_hamming},
            {"is_mrd", r.is_mrd},
            {"is_mds", r.is_mds},
            {"is_amds", r.is_amds},
            {"is_nmds", r.is_nmds},
            {"label", to_string(r.label)},
            {"codewords_enumerated", r.codewords_enumerated},
            {"witnesses",
             {{"rank", {{"message", vector_to_json(T, r.rank_witness_message)}, {"codeword", vector_to_json(T, r.rank_witness)}}},
              {"hamming",
               {{"message", vector_to_json(T, r.hamming_witness_message)}, {"codeword", vector_to_json(T, r.hamming_witness)}}}}},
            {"column_conditions", cond},
            {"subspace_criterion", sub}};
}

inline json hamming_certificate_to_json(const HammingCertificate& hc) {
    json van = json::array();
    for (const auto& I : hc.vanishing) van.push_back(subset_to_json(I));
    json out = {{"label", to_string(hc.label)}, {"vanishing_k_subsets", van}, {"nmds_by_theorem", hc.nmds_by_theorem}};
    out["uncovered_k_plus_1_subset"] = hc.uncovered ? subset_to_json(*hc.uncovered) : json();
    out["cond_i_checked"] = hc.cond_i_checked ? json(*hc.cond_i_checked) : json();
    return out;
}

inline json norm_condition_to_json(const FieldTower& T, const NormCondition& nc) {
    json out = {{"holds", nc.holds},
                {"norm_eta", fq_to_json(T.base(), nc.norm_eta)},
                {"sign", fq_to_json(T.base(), nc.sign)},
                {"provenance", "theorem (sufficient only)"}};
    out["witness"] = nc.witness ? json::array({fq_to_json(T.base(), nc.witness->first), fq_to_json(T.base(), nc.witness->second)})
                                : json();
    return out;
}

/// One-twist sets carry values of 1/eta; the report also lists the eta values themselves.
inline json forbidden_set_to_json(const FieldTower& T, const ForbiddenSet& fs) {
    json entries = json::array();
    for (const auto& e : fs.entries) {
        json row = {{"value", vector_to_json(T, e.value)}};
        if (e.value.size() == 1 && e.value[0] != 0) row["eta"] = element_to_json(T, T.inv(e.value[0]));
        if (e.V) row["witness_V"] = fq_matrix_to_json(T.base(), *e.V);
        if (e.I) row["witness_I"] = subset_to_json(*e.I);
        entries.push_back(row);
    }
    return {{"arity", fs.arity}, {"provenance", fs.provenance}, {"enumerated", fs.enumerated}, {"size", fs.entries.size()},
            {"entries", entries}};
}

inline json covering_report_to_json(const FieldTower& T, const CoveringReport& r) {
    json holes = json::array();
    for (const auto& d : r.deep_holes) holes.push_back({{"u", vector_to_json(T, d.u)}, {"distance", d.distance}});
    json out = {{"n", r.n},
                {"k", r.k},
                {"method", r.exhaustive ? "exhaustive" : "theorem-bound"},
                {"lower_bound", {{"value", r.lower_bound}, {"provenance", r.lower_provenance}}},
                {"upper_bound", {{"value", r.upper_bound}, {"provenance", r.upper_provenance}}},
                {"cosets", r.cosets},
                {"deepest_vectors", holes}};
    out["rho"] = r.rho ? json(*r.rho) : json();
    return out;
}

inline json construction_to_json(const FieldTower& T, const Construction& c) {
    json out = {{"kind", to_string(c.kind)}, {"degrees", c.degrees}, {"subspaces", c.subspaces}, {"code", code_to_json(T, c.spec)}};
    out["verified_mrd"] = c.verified_mrd ? json(*c.verified_mrd) : json();
    out["provenance"] = c.verified_mrd ? "theorem + subspace criterion" : "theorem (verification over budget)";
    return out;
}

}  // namespace twistgab::json_io

#endif  // TWISTGAB_JSON_IO_HPP
