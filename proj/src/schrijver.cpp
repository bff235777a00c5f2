#include "kneser/schrijver.hpp"

#include <algorithm>
#include <cassert>

namespace kneser {

int AltComplex::index_of(const SignVector& x) const {
    auto it = id_by_code.find(x.code(m));
    return it == id_by_code.end() ? -1 : it->second;
}

SignVector AltComplex::appended(const SignVector& x, int sign) const {
    SignVector out = x;
    if (sign > 0) out.plus |= bit(m);
    if (sign < 0) out.minus |= bit(m);
    return out;
}

AltComplex build_sigma(int m, int d, int guard) {
    if (d < 1 || m < d) throw std::invalid_argument("build_sigma needs m >= d >= 1");
    if (m > guard) throw std::invalid_argument("build_sigma: length above size guard");
    AltComplex out;
    out.m = m;
    out.d = d;
    int tau = m - d + 1;
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (std::uint64_t code = 1; code < total; ++code) {
        SignVector x = SignVector::from_code(code, m);
        if (alt(x, m) >= tau) {
            out.id_by_code[code] = static_cast<int>(out.verts.size());
            out.verts.push_back(x);
        }
    }
    int nv = static_cast<int>(out.verts.size());
    out.in_pos.resize(nv);
    out.in_neg.resize(nv);
    out.in_equator.resize(nv);
    for (int v = 0; v < nv; ++v) {
        out.in_equator[v] = alt(out.verts[v], m) >= tau + 1;
        out.in_pos[v] = alt_appended(out.verts[v], m, 1) >= tau + 1;
        out.in_neg[v] = alt_appended(out.verts[v], m, -1) >= tau + 1;
        if (!out.in_pos[v] && !out.in_neg[v])
            throw std::logic_error("vertex in no hemisphere (bug)");
    }
    // faces: all chains under the componentwise order; codes ascend along
    // chains, so vertex ids do too
    std::vector<std::vector<int>> above(nv);
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (out.verts[i].leq(out.verts[j])) above[i].push_back(j);
    out.complex.nverts = nv;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int last) -> void {
        int dim = static_cast<int>(cur.size()) - 1;
        if (dim >= static_cast<int>(out.complex.faces.size()))
            out.complex.faces.resize(dim + 1);
        out.complex.faces[dim].push_back(cur);
        for (int nxt : above[last]) {
            cur.push_back(nxt);
            self(self, nxt);
            cur.pop_back();
        }
    };
    for (int v = 0; v < nv; ++v) {
        cur = {v};
        dfs(dfs, v);
    }
    out.complex.group_order = 2;
    out.complex.action.resize(nv);
    for (int v = 0; v < nv; ++v) {
        int neg = out.index_of(out.verts[v].negated());
        assert(neg >= 0);
        out.complex.action[v] = neg;
    }
    out.complex.finalize();
    return out;
}

DeltaResult delta_map(int m, int d) {
    DeltaResult out;
    out.src = build_sigma(m, d);
    out.tgt = build_sigma(m - 1, d);
    if (out.src.threshold() < 2)
        throw std::invalid_argument("delta_map needs alt >= 2 on the source");
    std::vector<int> vmap(out.src.verts.size());
    for (size_t v = 0; v < out.src.verts.size(); ++v) {
        SignVector trunc = out.src.verts[v];
        trunc.plus &= full_mask(m - 1);
        trunc.minus &= full_mask(m - 1);
        int id = out.tgt.index_of(trunc);
        if (id < 0) throw std::logic_error("delta image missing (bug)");
        vmap[v] = id;
    }
    out.map = induced_chain_map(out.src.complex, out.tgt.complex, vmap);
    return out;
}

namespace {

// Signed staircase shared by xi and zeta case 3: the image of a simplex
// whose minimal vertex sticks out of the equator on hemisphere `side`.
// head(t) gives the leading target vertex of term t = 0 (the polar/interior
// simplex); the equator tail Y_1..Y_k arrives as target ids for both the
// appended-0 and appended-side copies.
Chain staircase(const std::vector<int>& tail_zero, const std::vector<int>& tail_side,
                int head_side) {
    int k = static_cast<int>(tail_zero.size());
    Chain img;
    img.dim = k;
    {
        Simplex t0;
        t0.push_back(head_side);
        t0.insert(t0.end(), tail_side.begin(), tail_side.end());
        img.add(t0, 1);
    }
    long long sign = -1;
    for (int t = 1; t <= k; ++t) {
        Simplex term;
        for (int i = 0; i < t; ++i) term.push_back(tail_zero[i]);
        for (int i = t - 1; i < k; ++i) term.push_back(tail_side[i]);
        img.add(term, sign);
        sign = -sign;
    }
    return img;
}

}  // namespace

XiResult xi_chain_map(int d) {
    if (d < 2) throw std::invalid_argument("xi_chain_map needs d >= 2");
    XiResult out;
    out.base = build_sigma(d - 1, d - 1);
    out.susp = suspension_over(out.base.complex);
    out.target = build_sigma(d, d);
    const int vplus = 0, vminus = 1;
    int pole_plus = out.target.index_of(SignVector{bit(d - 1), 0});
    int pole_minus = out.target.index_of(SignVector{0, bit(d - 1)});
    assert(pole_plus >= 0 && pole_minus >= 0);
    auto target_id = [&](int base_vertex, int sign) {
        int id = out.target.index_of(out.base.appended(out.base.verts[base_vertex], sign));
        assert(id >= 0);
        return id;
    };
    std::vector<std::map<Simplex, Chain>> images(out.susp.faces.size());
    for (int dim = 0; dim <= out.susp.dim(); ++dim)
        for (const Simplex& s : out.susp.faces[dim]) {
            // at most one pole per face, and it sorts first
            bool has_plus = s[0] == vplus;
            bool has_minus = s[0] == vminus;
            std::vector<int> tail;  // base vertices of the simplex
            for (int v : s)
                if (v >= 2) tail.push_back(v - 2);
            Chain img;
            img.dim = dim;
            if (!has_plus && !has_minus) {
                Simplex eq;
                for (int v : tail) eq.push_back(target_id(v, 0));
                img.add(eq, 1);
            } else {
                int side = has_plus ? 1 : -1;
                std::vector<int> tz, ts;
                for (int v : tail) {
                    tz.push_back(target_id(v, 0));
                    ts.push_back(target_id(v, side));
                }
                img = staircase(tz, ts, side > 0 ? pole_plus : pole_minus);
            }
            images[dim].emplace(s, std::move(img));
        }
    out.map = make_chain_map(out.susp, out.target.complex, std::move(images));
    return out;
}

ZetaResult zeta_chain_map(int d, int l) {
    if (l <= d) throw std::invalid_argument("zeta_chain_map needs l > d");
    ZetaResult out;
    out.src = build_sigma(l - 1, d);
    out.tgt = build_sigma(l, d);
    auto target_id = [&](int v, int sign) {
        int id = out.tgt.index_of(out.src.appended(out.src.verts[v], sign));
        assert(id >= 0);
        return id;
    };
    std::vector<std::map<Simplex, Chain>> images(out.src.complex.faces.size());
    for (int dim = 0; dim <= out.src.complex.dim(); ++dim)
        for (const Simplex& s : out.src.complex.faces[dim]) {
            // alt never drops along a chain, so off-equator vertices form a
            // prefix of the simplex
            int off = 0;
            while (off < static_cast<int>(s.size()) && !out.src.in_equator[s[off]]) ++off;
            for (int i = off; i < static_cast<int>(s.size()); ++i)
                assert(out.src.in_equator[s[i]]);
            Chain img;
            img.dim = dim;
            if (off == 0) {              // case 1: equator simplex, append 0
                Simplex eq;
                for (int v : s) eq.push_back(target_id(v, 0));
                img.add(eq, 1);
            } else {
                // the off-equator prefix determines the hemisphere
                int side = out.src.in_pos[s[0]] ? 1 : -1;
                for (int i = 0; i < off; ++i) {
                    char tag = side > 0 ? out.src.in_pos[s[i]] : out.src.in_neg[s[i]];
                    if (!tag)
                        throw std::logic_error("simplex straddles both hemispheres (bug)");
                }
                if (off >= 2) {          // case 2: append the hemisphere sign
                    Simplex hemi;
                    for (int v : s) hemi.push_back(target_id(v, side));
                    img.add(hemi, 1);
                } else {                 // case 3: staircase over the equator facet
                    std::vector<int> tz, ts;
                    for (size_t i = 1; i < s.size(); ++i) {
                        tz.push_back(target_id(s[i], 0));
                        ts.push_back(target_id(s[i], side));
                    }
                    img = staircase(tz, ts, target_id(s[0], side));
                }
            }
            images[dim].emplace(s, std::move(img));
        }
    out.map = make_chain_map(out.src.complex, out.tgt.complex, std::move(images));
    return out;
}

namespace {

struct ColorSets {
    std::uint32_t plus = 0, minus = 0;
};

ColorSets color_sets(const SchrijverScan& scan, const Coloring& c, int vertex) {
    ColorSets cs;
    std::uint64_t pe = scan.plus_edges[vertex], me = scan.minus_edges[vertex];
    while (pe) {
        cs.plus |= 1u << c.of(std::countr_zero(pe));
        pe &= pe - 1;
    }
    while (me) {
        cs.minus |= 1u << c.of(std::countr_zero(me));
        me &= me - 1;
    }
    return cs;
}

}  // namespace

SchrijverScan build_schrijver_scan(int n, int k) {
    if (n < 2 * k || k < 2) throw std::invalid_argument("need n >= 2k, k >= 2");
    SchrijverScan scan;
    scan.n = n;
    scan.k = k;
    scan.d = n - 2 * k + 1;
    scan.stab = gen_t_stable(n, k, 2);
    if (scan.stab.edge_count() > 63)
        throw std::invalid_argument("too many stable sets for the scan tables");
    int tau = n - scan.d + 1;  // = 2k
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::uint64_t code = 1; code < total; ++code) {
        SignVector x = SignVector::from_code(code, n);
        if (alt(x, n) < tau) continue;
        std::uint64_t pe = 0, me = 0;
        for (int e = 0; e < scan.stab.edge_count(); ++e) {
            if (subset_of(scan.stab.edges[e], x.plus)) pe |= std::uint64_t{1} << e;
            if (subset_of(scan.stab.edges[e], x.minus)) me |= std::uint64_t{1} << e;
        }
        // alt(X) >= 2k places a stable k-set in each part
        if (pe == 0 || me == 0)
            throw std::logic_error("empty stable family in a scanned part (bug)");
        scan.verts.push_back(x);
        scan.plus_edges.push_back(pe);
        scan.minus_edges.push_back(me);
    }
    return scan;
}

MonochromaticFamily schrijver_refute(const SchrijverScan& scan, const Coloring& c) {
    if (c.size() != scan.stab.edge_count())
        throw std::invalid_argument("coloring does not cover the stable sets");
    if (c.m > scan.d)
        throw std::invalid_argument("refutation needs at most n-2k+1 colors");
    for (size_t v = 0; v < scan.verts.size(); ++v) {
        ColorSets cs = color_sets(scan, c, static_cast<int>(v));
        std::uint32_t both = cs.plus & cs.minus;
        if (!both) continue;
        int color = std::countr_zero(both);
        int ep = -1, em = -1;
        for (std::uint64_t pe = scan.plus_edges[v]; pe; pe &= pe - 1) {
            int e = std::countr_zero(pe);
            if (c.of(e) == color) { ep = e; break; }
        }
        for (std::uint64_t me = scan.minus_edges[v]; me; me &= me - 1) {
            int e = std::countr_zero(me);
            if (c.of(e) == color) { em = e; break; }
        }
        assert(ep >= 0 && em >= 0 && ep != em);
        MonochromaticFamily fam;
        fam.members = {std::min(ep, em), std::max(ep, em)};
        fam.color = color;
        return fam;
    }
    throw std::logic_error(
        "no failure vertex: a proper (n-2k+1)-coloring would make the composite "
        "chain map have Lefschetz number both even and 1");
}

MonochromaticFamily schrijver_refute(int n, int k, const Coloring& c) {
    return schrijver_refute(build_schrijver_scan(n, k), c);
}

CHatResult c_hat_map(int n, int k, const Coloring& c) {
    CHatResult out;
    int d = n - 2 * k + 1;
    out.src = build_sigma(n, d);
    out.tgt = build_sigma(c.m, c.m - 1);
    SetSystem stab = gen_t_stable(n, k, 2);
    if (c.size() != stab.edge_count())
        throw std::invalid_argument("coloring does not cover the stable sets");
    std::vector<int> vmap(out.src.verts.size());
    for (size_t v = 0; v < out.src.verts.size(); ++v) {
        const SignVector& x = out.src.verts[v];
        std::uint32_t cp = 0, cm = 0;
        for (int e = 0; e < stab.edge_count(); ++e) {
            if (subset_of(stab.edges[e], x.plus)) cp |= 1u << c.of(e);
            if (subset_of(stab.edges[e], x.minus)) cm |= 1u << c.of(e);
        }
        if (cp == 0 || cm == 0) throw std::logic_error("empty color set (bug)");
        if (cp & cm)
            throw std::invalid_argument(
                "coloring improper on a scanned vertex; use schrijver_refute");
        SignVector img;
        for (int col = 1; col <= c.m; ++col) {
            if (cp & (1u << col)) img.plus |= bit(col - 1);
            if (cm & (1u << col)) img.minus |= bit(col - 1);
        }
        int id = out.tgt.index_of(img);
        if (id < 0) throw std::logic_error("c_hat image has alt < 2 (bug)");
        vmap[v] = id;
    }
    out.map = induced_chain_map(out.src.complex, out.tgt.complex, vmap);
    return out;
}

bool PipelineReport::all_ok() const {
    bool zetas = true;
    for (size_t i = 0; i < zeta_ok.size(); ++i)
        zetas = zetas && zeta_ok[i] && zeta_equivariant[i] && zeta_augmentation[i];
    return xi_ok && xi_equivariant && xi_augmentation && zetas && c_hat_ok &&
           c_hat_equivariant && c_hat_augmentation && delta_ok && delta_equivariant &&
           delta_augmentation && i_equivariant && i_image_in_cone && composite_ok &&
           composite_equivariant && composite_augmentation && parity_ok &&
           cone_lambda_id == 1 && cone_lambda_const == 1;
}

PipelineReport verify_pipeline(int n, int k, std::optional<Coloring> coloring) {
    PipelineReport rep;
    rep.n = n;
    rep.k = k;
    rep.d = n - 2 * k + 1;
    int d = rep.d;
    if (d < 2) throw std::invalid_argument("verify_pipeline needs n - 2k + 1 >= 2");
    SetSystem stab = gen_t_stable(n, k, 2);
    Coloring c;
    if (coloring) c = *coloring;
    else c = chi_exact(stab, 2, MultiplicityVector::uniform(n, 1)).coloring;
    if (c.m != d + 1)
        throw std::invalid_argument("verify_pipeline expects a proper (d+1)-coloring");

    // xi and the cone/suspension embeddings
    XiResult xi = xi_chain_map(d);
    rep.xi_ok = verify_chain_map(xi.map, xi.susp);
    rep.xi_equivariant = is_equivariant(xi.map, xi.susp, xi.target.complex);
    rep.xi_augmentation = is_augmentation_preserving(xi.map, xi.susp);

    Complex cone = cone_over(xi.base.complex);
    {
        // i = i'' i' : base -> suspension, equivariant, lands in the cone part
        std::vector<int> i_map(xi.base.complex.nverts);
        for (int v = 0; v < xi.base.complex.nverts; ++v) i_map[v] = v + 2;
        ChainMap i_sharp = induced_chain_map(xi.base.complex, xi.susp, i_map);
        rep.i_equivariant = is_equivariant(i_sharp, xi.base.complex, xi.susp);
        rep.i_image_in_cone = true;
        for (int dim = 0; dim <= xi.base.complex.dim(); ++dim)
            for (const Simplex& s : xi.base.complex.faces[dim])
                for (const auto& [t, cc] : i_sharp.image_of(s).terms) {
                    (void)cc;
                    if (std::binary_search(t.begin(), t.end(), 1))
                        rep.i_image_in_cone = false;
                }
    }
    rep.cone_lambda_id = verify_cone_lemma(cone, identity_chain_map(cone));
    rep.cone_lambda_const = verify_cone_lemma(cone, constant_chain_map(cone, 0));

    // zeta ladder and the over-colored c_hat closing a self-map of
    // C(Sigma^{d-1}(d+1))
    CHatResult chat = c_hat_map(n, k, c);
    rep.c_hat_ok = verify_chain_map(chat.map, chat.src.complex);
    rep.c_hat_equivariant = is_equivariant(chat.map, chat.src.complex, chat.tgt.complex);
    rep.c_hat_augmentation = is_augmentation_preserving(chat.map, chat.src.complex);

    DeltaResult delta = delta_map(d + 1, d);
    rep.delta_ok = verify_chain_map(delta.map, delta.src.complex);
    rep.delta_equivariant = is_equivariant(delta.map, delta.src.complex, delta.tgt.complex);
    rep.delta_augmentation = is_augmentation_preserving(delta.map, delta.src.complex);

    ChainMap ladder;  // zeta^n ... zeta^{d+2} : C(Sigma(d+1,d)) -> C(Sigma(n,d))
    bool first = true;
    for (int l = d + 1; l <= n; ++l) {
        ZetaResult z = zeta_chain_map(d, l);
        rep.zeta_levels.push_back(l);
        rep.zeta_ok.push_back(verify_chain_map(z.map, z.src.complex));
        rep.zeta_equivariant.push_back(is_equivariant(z.map, z.src.complex, z.tgt.complex));
        rep.zeta_augmentation.push_back(is_augmentation_preserving(z.map, z.src.complex));
        if (l >= d + 2) {
            ladder = first ? z.map : compose(z.map, ladder);
            first = false;
        }
    }
    ChainMap composite = compose(chat.map, ladder);
    Complex loop = build_sigma(d + 1, d).complex;
    rep.composite_ok = verify_chain_map(composite, loop);
    rep.composite_equivariant = is_equivariant(composite, loop, loop);
    rep.composite_augmentation = is_augmentation_preserving(composite, loop);
    rep.composite_lefschetz = lefschetz(composite, loop);
    rep.parity_ok = rep.composite_lefschetz % 2 == 0 && rep.composite_lefschetz != 1;
    return rep;
}

}  // namespace kneser
