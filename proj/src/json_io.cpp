#include "kneser/json_io.hpp"

#include <fstream>

namespace kneser {

namespace {

int get_int(const Json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw BadInput(std::string("missing or non-integer field \"") + field + "\"");
    return j[field].get<int>();
}

}  // namespace

Json set_system_to_json(const SetSystem& s) {
    Json j;
    j["n"] = s.n;
    Json edges = Json::array();
    for (Mask e : s.edges) edges.push_back(mask_to_elements(e));
    j["edges"] = std::move(edges);
    return j;
}

SetSystem set_system_from_json(const Json& j) {
    int n = get_int(j, "n");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw BadInput("missing or non-array field \"edges\"");
    std::vector<Mask> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array()) throw BadInput("field \"edges\" must hold arrays of elements");
        std::vector<int> elems;
        for (const auto& x : e) {
            if (!x.is_number_integer()) throw BadInput("edge element is not an integer");
            elems.push_back(x.get<int>());
        }
        try {
            edges.push_back(elements_to_mask(elems, n));
        } catch (const std::invalid_argument& ex) {
            throw BadInput(std::string("field \"edges\": ") + ex.what());
        }
    }
    try {
        return SetSystem::make(n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw BadInput(std::string("field \"edges\": ") + ex.what());
    }
}

Json coloring_to_json(const Coloring& c) {
    Json j;
    j["colors"] = c.colors;
    return j;
}

Coloring coloring_from_json(const Json& j) {
    if (!j.contains("colors") || !j["colors"].is_array())
        throw BadInput("missing or non-array field \"colors\"");
    std::vector<int> colors;
    int m = 0;
    for (const auto& x : j["colors"]) {
        if (!x.is_number_integer() || x.get<int>() < 1)
            throw BadInput("field \"colors\" must hold positive integers");
        colors.push_back(x.get<int>());
        m = std::max(m, colors.back());
    }
    return Coloring::make(m, std::move(colors));
}

Json octa_labeling_to_json(const OctaLabeling& lab, int n) {
    Json j;
    j["n"] = n;
    j["labels"] = lab;
    return j;
}

std::pair<OctaLabeling, int> octa_labeling_from_json(const Json& j) {
    int n = get_int(j, "n");
    if (!j.contains("labels") || !j["labels"].is_array())
        throw BadInput("missing or non-array field \"labels\"");
    OctaLabeling lab;
    for (const auto& x : j["labels"]) {
        if (!x.is_number_integer()) throw BadInput("field \"labels\" must hold integers");
        lab.push_back(x.get<int>());
    }
    std::uint64_t expect = 1;
    for (int i = 0; i < n; ++i) expect *= 3;
    if (lab.size() != expect - 1)
        throw BadInput("field \"labels\" must have 3^n - 1 entries");
    return {std::move(lab), n};
}

Json zp_labeling_to_json(const ZpLabeling& lab, const ZpFaceSet& faces) {
    Json j;
    j["n"] = faces.n;
    j["p"] = faces.p;
    j["s"] = faces.s.s;
    Json labels = Json::array();
    for (const ZpLabel& l : lab) labels.push_back(Json::array({l.sign, l.value}));
    j["labels"] = std::move(labels);
    return j;
}

std::pair<ZpLabeling, ZpFaceSet> zp_labeling_from_json(const Json& j) {
    int n = get_int(j, "n");
    int p = get_int(j, "p");
    if (!j.contains("s") || !j["s"].is_array())
        throw BadInput("missing or non-array field \"s\"");
    std::vector<int> sv;
    for (const auto& x : j["s"]) {
        if (!x.is_number_integer()) throw BadInput("field \"s\" must hold integers");
        sv.push_back(x.get<int>());
    }
    ZpFaceSet faces;
    try {
        faces = zp_faces(n, p, MultiplicityVector(std::move(sv)));
    } catch (const std::invalid_argument& ex) {
        throw BadInput(std::string("field \"s\": ") + ex.what());
    }
    if (!j.contains("labels") || !j["labels"].is_array())
        throw BadInput("missing or non-array field \"labels\"");
    ZpLabeling lab;
    for (const auto& x : j["labels"]) {
        if (!x.is_array() || x.size() != 2 || !x[0].is_number_integer() ||
            !x[1].is_number_integer())
            throw BadInput("field \"labels\" must hold [sign, value] pairs");
        lab.push_back(ZpLabel{x[0].get<int>(), x[1].get<int>()});
    }
    if (static_cast<int>(lab.size()) != faces.count())
        throw BadInput("field \"labels\" must have one entry per admissible face");
    return {std::move(lab), std::move(faces)};
}

Json bound_report_to_json(const BoundReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["r"] = r.r;
    j["s"] = r.s;
    j["t"] = r.t;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    if (r.exact) j["exact"] = *r.exact;
    else j["exact"] = nullptr;
    j["lower_is_exact"] = r.lower_is_exact();
    j["upper_is_exact"] = r.upper_is_exact();
    return j;
}

Json mono_family_to_json(const MonochromaticFamily& f, const SetSystem& s) {
    Json j;
    j["members"] = f.members;
    Json sets = Json::array();
    for (int idx : f.members) sets.push_back(mask_to_elements(s.edges[idx]));
    j["sets"] = std::move(sets);
    j["color"] = f.color;
    return j;
}

Json tucker_pair_to_json(const TuckerPair& p, int n) {
    Json j;
    j["a"] = p.a.str(n);
    j["b"] = p.b.str(n);
    j["label_a"] = p.label_a;
    return j;
}

Json zp_witness_to_json(const ZpChainWitness& w, const ZpFaceSet& faces) {
    Json j;
    Json chain = Json::array();
    for (std::uint64_t code : w.chain) {
        Json cols = Json::array();
        for (int col = 0; col < faces.p; ++col)
            cols.push_back(mask_to_elements(zp_column(code, faces.n, col)));
        chain.push_back(std::move(cols));
    }
    j["chain"] = std::move(chain);
    j["value"] = w.value;
    j["signs"] = w.signs;
    return j;
}

Json stable_scan_to_json(const StableScanReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["r"] = r.r;
    j["chi"] = r.chi;
    j["conjectured"] = r.conjectured;
    j["matches"] = r.matches;
    j["chi_after_delete"] = r.chi_after_delete;
    j["vertex_critical"] = r.vertex_critical;
    j["divisibility"] = r.divisibility;
    j["noncritical_expected"] = r.noncritical_expected;
    return j;
}

Json pipeline_report_to_json(const PipelineReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["xi"] = Json{{"chain_map", r.xi_ok},
                   {"equivariant", r.xi_equivariant},
                   {"augmentation", r.xi_augmentation}};
    Json zetas = Json::array();
    for (size_t i = 0; i < r.zeta_levels.size(); ++i)
        zetas.push_back(Json{{"level", r.zeta_levels[i]},
                             {"chain_map", static_cast<bool>(r.zeta_ok[i])},
                             {"equivariant", static_cast<bool>(r.zeta_equivariant[i])},
                             {"augmentation", static_cast<bool>(r.zeta_augmentation[i])}});
    j["zeta"] = std::move(zetas);
    j["c_hat"] = Json{{"chain_map", r.c_hat_ok},
                      {"equivariant", r.c_hat_equivariant},
                      {"augmentation", r.c_hat_augmentation}};
    j["delta"] = Json{{"chain_map", r.delta_ok},
                      {"equivariant", r.delta_equivariant},
                      {"augmentation", r.delta_augmentation}};
    j["i_equivariant"] = r.i_equivariant;
    j["i_image_in_cone"] = r.i_image_in_cone;
    j["composite"] = Json{{"chain_map", r.composite_ok},
                          {"equivariant", r.composite_equivariant},
                          {"augmentation", r.composite_augmentation},
                          {"lefschetz", r.composite_lefschetz},
                          {"parity_ok", r.parity_ok}};
    j["cone_lambda_id"] = r.cone_lambda_id;
    j["cone_lambda_const"] = r.cone_lambda_const;
    j["all_ok"] = r.all_ok();
    return j;
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& ex) {
        throw BadInput(std::string("malformed JSON in ") + path + ": " + ex.what());
    }
    return j;
}

}  // namespace kneser
