// Command-line front end: instance generation, defects and bounds, exact
// chromatic numbers, certificate searches, refutations, and chain-map
// verification, all speaking JSON on stdout.
//
// Exit codes: 0 computed/verified, 1 property violation or witness of
// improperness found, 2 invalid input.

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kneser/chains.hpp"
#include "kneser/json_io.hpp"
#include "kneser/schrijver.hpp"

namespace {

using namespace kneser;

struct InstanceOpts {
    std::string family = "k-subsets";
    int n = 0, k = 0, t = 2;
    std::string input;
};

void add_instance_flags(CLI::App* cmd, InstanceOpts& opts) {
    cmd->add_option("--family", opts.family, "k-subsets | t-stable")
        ->check(CLI::IsMember({"k-subsets", "t-stable"}));
    cmd->add_option("--n", opts.n, "ground set size");
    cmd->add_option("--k", opts.k, "subset cardinality");
    cmd->add_option("--t", opts.t, "stability distance (t-stable family)");
    cmd->add_option("--input", opts.input, "SetSystem JSON file instead of a generator");
}

SetSystem resolve_instance(const InstanceOpts& opts) {
    if (!opts.input.empty()) return set_system_from_json(parse_json_file(opts.input));
    if (opts.family == "t-stable") return gen_t_stable(opts.n, opts.k, opts.t);
    return gen_k_subsets(opts.n, opts.k);
}

MultiplicityVector resolve_s(const std::vector<int>& s_opt, int n) {
    if (s_opt.empty()) return MultiplicityVector::uniform(n, 1);
    if (s_opt.size() == 1) return MultiplicityVector::uniform(n, s_opt[0]);
    if (static_cast<int>(s_opt.size()) != n)
        throw BadInput("field \"s\": need one value or one per ground element");
    return MultiplicityVector(s_opt);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_gen(const InstanceOpts& inst) {
    emit(set_system_to_json(resolve_instance(inst)));
    return 0;
}

int run_defect(const InstanceOpts& inst, int r, const std::vector<int>& s_opt, int limit) {
    SetSystem sys = resolve_instance(inst);
    MultiplicityVector s = resolve_s(s_opt, sys.n);
    Json j;
    j["exact"] = cd_exact(sys, r, s, full_mask(sys.n), limit);
    if (inst.input.empty() && s.constant()) {
        int t = inst.family == "t-stable" ? inst.t : 1;
        j["formula"] = cd_formula_stable(inst.n, inst.k, t, r, s.s[0]);
    } else {
        j["formula"] = nullptr;
    }
    emit(j);
    return 0;
}

int run_bounds(int n, int k, int r, int s, int t, int max_vertices) {
    emit(bound_report_to_json(verify_sandwich(n, k, r, s, t, max_vertices)));
    return 0;
}

int run_chi(const InstanceOpts& inst, int r, const std::vector<int>& s_opt, int max_colors) {
    SetSystem sys = resolve_instance(inst);
    MultiplicityVector s = resolve_s(s_opt, sys.n);
    ChiResult res = chi_exact(sys, r, s, max_colors);
    Json j;
    if (res.exceeded) {
        j["chi"] = nullptr;
        j["exceeded"] = true;
    } else {
        j["chi"] = res.chi;
        j["exceeded"] = false;
        j["coloring"] = res.coloring.colors;
    }
    emit(j);
    return 0;
}

int run_color(const InstanceOpts& inst, int r, const std::vector<int>& s_opt, bool star,
              const std::string& validate_file) {
    if (!validate_file.empty()) {
        SetSystem sys = resolve_instance(inst);
        MultiplicityVector sv = resolve_s(s_opt, sys.n);
        Coloring c = coloring_from_json(parse_json_file(validate_file));
        auto witness = validate_coloring(sys, r, sv, c);
        Json j;
        j["proper"] = !witness.has_value();
        if (witness) j["witness"] = mono_family_to_json(*witness, sys);
        emit(j);
        return witness ? 1 : 0;
    }
    int s = s_opt.size() == 1 ? s_opt[0] : 1;
    Coloring c = star ? star_plus_edge_coloring(inst.n)
                      : explicit_coloring(inst.n, inst.k, r, s);
    Json j = coloring_to_json(c);
    j["m"] = c.m;
    j["validated"] = true;
    emit(j);
    return 0;
}

int run_tucker_octa(const std::string& labeling_file) {
    auto [lab, n] = octa_labeling_from_json(parse_json_file(labeling_file));
    TuckerPair pair = octahedral_tucker_search(lab, n);
    emit(tucker_pair_to_json(pair, n));
    return 0;
}

int run_tucker_zp(const std::string& labeling_file, int m) {
    auto [lab, faces] = zp_labeling_from_json(parse_json_file(labeling_file));
    ZpChainWitness w = zp_tucker_search(faces, lab, m);
    emit(zp_witness_to_json(w, faces));
    return 0;
}

int run_refute_dolnikov(const InstanceOpts& inst, const std::string& coloring_file) {
    SetSystem sys = resolve_instance(inst);
    Coloring c = coloring_from_json(parse_json_file(coloring_file));
    MonochromaticFamily fam = dolnikov_refute(sys, c);
    emit(mono_family_to_json(fam, sys));
    return 1;
}

int run_refute_main(const InstanceOpts& inst, const std::string& coloring_file, int p,
                    const std::vector<int>& s_opt) {
    SetSystem sys = resolve_instance(inst);
    MultiplicityVector s = resolve_s(s_opt, sys.n);
    Coloring c = coloring_from_json(parse_json_file(coloring_file));
    MonochromaticFamily fam = main_refute(sys, s, c, p);
    emit(mono_family_to_json(fam, sys));
    return 1;
}

int run_refute_schrijver(int n, int k, const std::string& coloring_file) {
    Coloring c = coloring_from_json(parse_json_file(coloring_file));
    SetSystem stab = gen_t_stable(n, k, 2);
    MonochromaticFamily fam = schrijver_refute(n, k, c);
    emit(mono_family_to_json(fam, stab));
    return 1;
}

int run_scan(int n, int k, int r, int limit) {
    emit(stable_scan_to_json(scan_r_stable(n, k, r, limit)));
    return 0;
}

int run_verify_chains(int n, int k, std::uint64_t seed, int trials) {
    Json j;
    // cone lemma on a small cone, with a seeded random battery of
    // augmentation-preserving self-maps (apex collapses)
    Complex cone = complex_from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    j["cone_lambda_id"] = verify_cone_lemma(cone, identity_chain_map(cone));
    j["cone_lambda_const"] = verify_cone_lemma(cone, constant_chain_map(cone, 0));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 1);
    bool random_ok = true;
    for (int t = 0; t < trials; ++t) {
        std::vector<int> vmap(cone.nverts);
        for (int v = 0; v < cone.nverts; ++v) vmap[v] = coin(rng) ? v : 0;
        random_ok = random_ok &&
                    verify_cone_lemma(cone, induced_chain_map(cone, cone, vmap)) == 1;
    }
    j["cone_lambda_random_ok"] = random_ok;
    // xi / zeta sweep (chain-map identity checked at construction)
    Json zetas = Json::array();
    for (auto [d, l] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 4}, {3, 5}}) {
        ZetaResult z = zeta_chain_map(d, l);
        zetas.push_back(Json{{"d", d},
                             {"l", l},
                             {"chain_map", verify_chain_map(z.map, z.src.complex)},
                             {"equivariant", is_equivariant(z.map, z.src.complex, z.tgt.complex)},
                             {"augmentation", is_augmentation_preserving(z.map, z.src.complex)}});
    }
    j["zeta"] = std::move(zetas);
    Json xis = Json::array();
    for (int d : {2, 3}) {
        XiResult x = xi_chain_map(d);
        xis.push_back(Json{{"d", d},
                           {"chain_map", verify_chain_map(x.map, x.susp)},
                           {"equivariant", is_equivariant(x.map, x.susp, x.target.complex)},
                           {"augmentation", is_augmentation_preserving(x.map, x.susp)}});
    }
    j["xi"] = std::move(xis);
    j["pipeline"] = pipeline_report_to_json(verify_pipeline(n, k));
    bool ok = j["pipeline"]["all_ok"].get<bool>() && random_ok;
    for (const auto& z : j["zeta"])
        ok = ok && z["chain_map"].get<bool>() && z["equivariant"].get<bool>() &&
             z["augmentation"].get<bool>();
    for (const auto& x : j["xi"])
        ok = ok && x["chain_map"].get<bool>() && x["equivariant"].get<bool>() &&
             x["augmentation"].get<bool>();
    j["all_ok"] = ok;
    emit(j);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Kneser hypergraph toolkit"};
    app.require_subcommand(1);

    InstanceOpts inst;
    std::vector<int> s_opt;
    int r = 2, p = 2, n = 0, k = 0, s_scalar = 1, t = 1, m = 1;
    int max_colors = -1, limit = 12, max_vertices = 64, trials = 50;
    std::uint64_t seed = 0;
    bool star = false;
    std::string coloring_file, labeling_file, validate_file;

    auto* gen = app.add_subcommand("gen", "emit a SetSystem as JSON");
    add_instance_flags(gen, inst);

    auto* defect = app.add_subcommand("defect", "exact colorability defect plus closed form");
    add_instance_flags(defect, inst);
    defect->add_option("--r", r, "number of color classes");
    defect->add_option("--s", s_opt, "multiplicities (scalar or per element)");
    defect->add_option("--limit", limit, "ground size guard for the exhaustive search");

    auto* bounds_cmd = app.add_subcommand("bounds", "defect/coloring sandwich report");
    bounds_cmd->add_option("--n", n)->required();
    bounds_cmd->add_option("--k", k)->required();
    bounds_cmd->add_option("--r", r)->required();
    bounds_cmd->add_option("--s", s_scalar);
    bounds_cmd->add_option("--t", t);
    bounds_cmd->add_option("--max-vertices", max_vertices,
                           "skip the exact solve above this vertex count");

    auto* chi = app.add_subcommand("chi", "exact chromatic number of KG^r_s");
    add_instance_flags(chi, inst);
    chi->add_option("--r", r, "uniformity");
    chi->add_option("--s", s_opt, "multiplicities");
    chi->add_option("--max-colors", max_colors, "give up beyond this many colors");

    auto* color = app.add_subcommand("color", "emit or validate explicit colorings");
    add_instance_flags(color, inst);
    color->add_option("--r", r);
    color->add_option("--s", s_opt, "multiplicities (scalar or per element)");
    color->add_flag("--star-r4s2", star, "star-plus-edge coloring of KG^4_{(2,..,2)}");
    color->add_option("--validate", validate_file, "coloring JSON to validate");

    auto* tucker = app.add_subcommand("tucker", "certificate search on a labeling file");
    auto* octa = tucker->add_subcommand("octa", "octahedral Tucker search");
    octa->add_option("--labeling", labeling_file)->required();
    auto* zp = tucker->add_subcommand("zp", "Z_p-Tucker chain search");
    zp->add_option("--labeling", labeling_file)->required();
    zp->add_option("--m", m, "label value bound")->required();

    auto* refute = app.add_subcommand("refute", "turn an under-coloring into a witness");
    auto* dol = refute->add_subcommand("dolnikov");
    add_instance_flags(dol, inst);
    dol->add_option("--coloring", coloring_file)->required();
    auto* mainp = refute->add_subcommand("main");
    add_instance_flags(mainp, inst);
    mainp->add_option("--coloring", coloring_file)->required();
    mainp->add_option("--p", p, "prime uniformity")->required();
    mainp->add_option("--s", s_opt, "multiplicities");
    auto* schr = refute->add_subcommand("schrijver");
    schr->add_option("--n", n)->required();
    schr->add_option("--k", k)->required();
    schr->add_option("--coloring", coloring_file)->required();

    auto* verify = app.add_subcommand("verify-chains", "cone lemma, xi/zeta sweeps, pipeline");
    verify->add_option("--n", n)->default_val(5);
    verify->add_option("--k", k)->default_val(2);
    verify->add_option("--seed", seed)->default_val(0);
    verify->add_option("--trials", trials)->default_val(50);

    auto* scan = app.add_subcommand("scan", "r-stable chromatic number exploration");
    scan->add_option("--n", n)->required();
    scan->add_option("--k", k)->required();
    scan->add_option("--r", r)->required();
    scan->add_option("--limit", max_vertices, "vertex count guard");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return run_gen(inst);
        if (defect->parsed()) return run_defect(inst, r, s_opt, limit);
        if (bounds_cmd->parsed()) return run_bounds(n, k, r, s_scalar, t, max_vertices);
        if (chi->parsed()) return run_chi(inst, r, s_opt, max_colors);
        if (color->parsed()) return run_color(inst, r, s_opt, star, validate_file);
        if (tucker->parsed()) {
            if (octa->parsed()) return run_tucker_octa(labeling_file);
            if (zp->parsed()) return run_tucker_zp(labeling_file, m);
            std::cerr << "tucker needs a subcommand (octa | zp)\n";
            return 2;
        }
        if (refute->parsed()) {
            if (dol->parsed()) return run_refute_dolnikov(inst, coloring_file);
            if (mainp->parsed()) return run_refute_main(inst, coloring_file, p, s_opt);
            if (schr->parsed()) return run_refute_schrijver(n, k, coloring_file);
            std::cerr << "refute needs a subcommand (dolnikov | main | schrijver)\n";
            return 2;
        }
        if (verify->parsed()) return run_verify_chains(n, k, seed, trials);
        if (scan->parsed()) return run_scan(n, k, r, max_vertices);
    } catch (const BadInput& ex) {
        std::cerr << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        // property violations (antipodality, equivariance, defect hypothesis,
        // cone/augmentation failures) and internal assertion failures
        std::cerr << ex.what() << "\n";
        return 1;
    }
    return 2;
}
