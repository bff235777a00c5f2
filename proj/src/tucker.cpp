#include "kneser/tucker.hpp"

#include <algorithm>
#include <cassert>

#include "kneser/bounds.hpp"

namespace kneser {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

std::uint64_t pow3(int n) {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) v *= 3;
    return v;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

// ---------------------------------------------------------------- octahedral

TuckerPair octahedral_tucker_search(const OctaLabeling& lab, int n) {
    std::uint64_t total = pow3(n) - 1;
    if (lab.size() != total) throw std::invalid_argument("labeling table size mismatch");
    int maxabs = 0;
    for (std::uint64_t code = 1; code <= total; ++code) {
        int v = lab[code - 1];
        if (v == 0) throw std::invalid_argument("labeling value 0 is not allowed");
        maxabs = std::max(maxabs, std::abs(v));
        SignVector x = SignVector::from_code(code, n);
        std::uint64_t neg = x.negated().code(n);
        if (lab[neg - 1] != -v) throw AntipodalityViolation(code);
    }
    // supersets of a share its signs and add signs on free positions
    for (std::uint64_t code_a = 1; code_a <= total; ++code_a) {
        SignVector a = SignVector::from_code(code_a, n);
        int want = -lab[code_a - 1];
        std::vector<int> free_pos;
        for (int i = 0; i < n; ++i)
            if (!has_bit(a.support(), i)) free_pos.push_back(i);
        std::vector<std::uint64_t> supers;
        int f = static_cast<int>(free_pos.size());
        for (int pat = 1; pat < (1 << (2 * f)); ++pat) {
            // two bits per free position: 0 skip, 1 plus, 2 minus
            SignVector b = a;
            bool ok = true;
            for (int i = 0; i < f; ++i) {
                int trit = (pat >> (2 * i)) & 3;
                if (trit == 3) { ok = false; break; }
                if (trit == 1) b.plus |= bit(free_pos[i]);
                if (trit == 2) b.minus |= bit(free_pos[i]);
            }
            if (ok) supers.push_back(b.code(n));
        }
        std::sort(supers.begin(), supers.end());
        for (std::uint64_t code_b : supers)
            if (lab[code_b - 1] == want)
                return TuckerPair{a, SignVector::from_code(code_b, n), lab[code_a - 1]};
    }
    if (maxabs > n - 1)
        throw NoPairFound("no pair: labeling codomain exceeds +-(n-1)");
    throw std::logic_error("octahedral Tucker lemma falsified (bug)");
}

OctaLabeling dolnikov_labeling(const SetSystem& S, const Coloring& c, int m,
                               bool verify_defect) {
    int n = S.n;
    if (c.size() != S.edge_count()) throw std::invalid_argument("coloring size mismatch");
    if (m < c.m) throw std::invalid_argument("m below the coloring's color count");
    if (verify_defect) {
        int cd = cd_exact(S, 2, MultiplicityVector::uniform(n, 1));
        if (cd <= m) throw std::invalid_argument("need m < cd^2(S)");
    }
    std::uint64_t total = pow3(n) - 1;
    OctaLabeling lab(total, 0);
    for (std::uint64_t code = 1; code <= total; ++code) {
        SignVector x = SignVector::from_code(code, n);
        int size = popcount(x.support());
        if (size >= n - m) {
            // smallest edge (canonical order) inside either part
            int found = -1, sign = 0;
            for (int i = 0; i < S.edge_count() && found < 0; ++i) {
                if (subset_of(S.edges[i], x.plus)) { found = i; sign = 1; }
                else if (subset_of(S.edges[i], x.minus)) { found = i; sign = -1; }
            }
            if (found < 0) throw DefectHypothesisFails(code);
            lab[code - 1] = sign * c.of(found);
        } else {
            int sign;
            if (x.minus == 0) sign = 1;
            else if (x.plus == 0) sign = -1;
            else sign = x.plus < x.minus ? 1 : -1;
            lab[code - 1] = sign * (m + size);
        }
    }
    return lab;
}

MonochromaticFamily dolnikov_refute(const SetSystem& S, const Coloring& c) {
    int n = S.n;
    int m = c.m;
    OctaLabeling lab = dolnikov_labeling(S, c, m);
    TuckerPair pair = octahedral_tucker_search(lab, n);
    // both ends must fall into case 1 of the labeling
    assert(popcount(pair.a.support()) >= n - m);
    assert(popcount(pair.b.support()) >= n - m);
    auto smallest_in = [&](Mask part) {
        for (int i = 0; i < S.edge_count(); ++i)
            if (subset_of(S.edges[i], part)) return i;
        return -1;
    };
    int ea, eb;
    if (pair.label_a > 0) {
        ea = smallest_in(pair.a.plus);
        eb = smallest_in(pair.b.minus);
    } else {
        ea = smallest_in(pair.a.minus);
        eb = smallest_in(pair.b.plus);
    }
    assert(ea >= 0 && eb >= 0 && ea != eb);
    assert(c.of(ea) == c.of(eb));
    MonochromaticFamily fam;
    fam.members = {std::min(ea, eb), std::max(ea, eb)};
    fam.color = c.of(ea);
    return fam;
}

OctaLabeling random_antipodal_labeling(int n, std::mt19937_64& rng) {
    std::uint64_t total = pow3(n) - 1;
    OctaLabeling lab(total, 0);
    std::uniform_int_distribution<int> value(1, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::uint64_t code = 1; code <= total; ++code) {
        if (lab[code - 1] != 0) continue;
        SignVector x = SignVector::from_code(code, n);
        int v = value(rng) * (coin(rng) ? 1 : -1);
        lab[code - 1] = v;
        lab[x.negated().code(n) - 1] = -v;
    }
    return lab;
}

// --------------------------------------------------------------- chessboard

int ZpFaceSet::index_of(std::uint64_t code) const {
    auto it = std::lower_bound(codes.begin(), codes.end(), code);
    if (it == codes.end() || *it != code) return -1;
    return static_cast<int>(it - codes.begin());
}

ZpFaceSet zp_faces(int n, int p, const MultiplicityVector& s) {
    if (p < 2) throw std::invalid_argument("p < 2");
    if (s.size() != n) throw std::invalid_argument("multiplicity vector size mismatch");
    if (!s.below(p)) throw std::invalid_argument("need 1 <= s_i < p");
    if (n * p > 24) throw std::invalid_argument("chessboard too large (n*p > 24)");
    ZpFaceSet out;
    out.n = n;
    out.p = p;
    out.s = s;
    std::uint64_t limit = std::uint64_t{1} << (n * p);
    for (std::uint64_t code = 1; code < limit; ++code) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            int cnt = 0;
            for (int j = 0; j < p; ++j)
                if (has_bit(code, j * n + i)) ++cnt;
            if (cnt > s.of(i + 1)) ok = false;
        }
        if (ok) out.codes.push_back(code);
    }
    return out;
}

std::uint64_t zp_make(const std::vector<Mask>& cols, int n) {
    std::uint64_t code = 0;
    for (size_t j = 0; j < cols.size(); ++j) code |= cols[j] << (j * n);
    return code;
}

std::uint64_t zp_action(std::uint64_t code, int n, int p, int k) {
    k = ((k % p) + p) % p;
    std::uint64_t out = 0;
    for (int j = 0; j < p; ++j)
        out |= zp_column(code, n, j) << (((j + k) % p) * n);
    return out;
}

bool zp_action_is_free(const ZpFaceSet& faces) {
    for (std::uint64_t code : faces.codes)
        for (int k = 1; k < faces.p; ++k)
            if (zp_action(code, faces.n, faces.p, k) == code) return false;
    return true;
}

namespace {

void check_equivariance(const ZpFaceSet& faces, const ZpLabeling& lab, int m) {
    if (lab.size() != faces.codes.size())
        throw std::invalid_argument("labeling table size mismatch");
    for (int i = 0; i < faces.count(); ++i) {
        const ZpLabel& l = lab[i];
        if (l.sign < 0 || l.sign >= faces.p || l.value < 1 || l.value > m)
            throw std::invalid_argument("label outside Z_p x [m]");
        std::uint64_t rot = zp_action(faces.codes[i], faces.n, faces.p, 1);
        int ri = faces.index_of(rot);
        assert(ri >= 0);
        if (lab[ri].sign != (l.sign + 1) % faces.p || lab[ri].value != l.value)
            throw EquivarianceViolation(faces.codes[i]);
    }
}

// Ordered DFS over chains inside one value group; accept() filters
// witnesses so callers can demand extra properties of the unpacking.
template <typename Accept>
bool chain_search(const ZpFaceSet& faces, const ZpLabeling& lab,
                  const std::vector<int>& group, size_t start, int depth,
                  std::vector<int>& picked, unsigned& used_signs, Accept&& accept,
                  ZpChainWitness& out) {
    if (depth == faces.p) {
        ZpChainWitness w;
        w.value = lab[picked[0]].value;
        for (int idx : picked) {
            w.chain.push_back(faces.codes[idx]);
            w.signs.push_back(lab[idx].sign);
        }
        if (!accept(w)) return false;
        out = std::move(w);
        return true;
    }
    for (size_t g = start; g < group.size(); ++g) {
        int idx = group[g];
        if (used_signs & (1u << lab[idx].sign)) continue;
        if (depth > 0) {
            std::uint64_t prev = faces.codes[picked.back()];
            std::uint64_t cur = faces.codes[idx];
            if (prev == cur || !subset_of(prev, cur)) continue;
        }
        picked.push_back(idx);
        used_signs |= 1u << lab[idx].sign;
        if (chain_search(faces, lab, group, g + 1, depth + 1, picked, used_signs,
                         accept, out))
            return true;
        used_signs &= ~(1u << lab[idx].sign);
        picked.pop_back();
    }
    return false;
}

template <typename Accept>
ZpChainWitness zp_search_impl(const ZpFaceSet& faces, const ZpLabeling& lab, int m,
                              Accept&& accept) {
    if (!is_prime(faces.p)) throw std::invalid_argument("p must be prime");
    int n_bar = faces.s.total();
    if (m > (n_bar - 1) / (faces.p - 1))
        throw std::invalid_argument("need m <= floor((n_bar-1)/(p-1))");
    check_equivariance(faces, lab, m);
    // faces grouped by label value, each group in ascending code order
    std::vector<std::vector<int>> groups(m + 1);
    for (int i = 0; i < faces.count(); ++i) groups[lab[i].value].push_back(i);
    ZpChainWitness best;
    bool found = false;
    for (int v = 1; v <= m && !found; ++v) {
        std::vector<int> picked;
        unsigned used = 0;
        found = chain_search(faces, lab, groups[v], 0, 0, picked, used, accept, best);
    }
    if (!found) throw std::logic_error("Z_p-Tucker lemma falsified (bug)");
    return best;
}

}  // namespace

ZpChainWitness zp_tucker_search(const ZpFaceSet& faces, const ZpLabeling& lab, int m) {
    return zp_search_impl(faces, lab, m, [](const ZpChainWitness&) { return true; });
}

namespace {

// Equivariant choice of a column from a nonempty proper subset of Z_p:
// the start of the rotation-least incidence word. Unique for prime p.
int canonical_column(unsigned cols, int p) {
    int best = -1;
    unsigned best_word = ~0u;
    for (int j = 0; j < p; ++j) {
        if (!(cols & (1u << j))) continue;
        unsigned word = 0;
        for (int t = 0; t < p; ++t)
            if (cols & (1u << ((j + t) % p))) word |= 1u << (p - 1 - t);
        if (word < best_word) {
            best_word = word;
            best = j;
        }
    }
    return best;
}

// case-1 content of a face: globally smallest edge inside a column, and the
// canonical column holding it; {-1,-1} when no column contains an edge
std::pair<int, int> smallest_edge_in(const SetSystem& S, const ZpFaceSet& faces,
                                     std::uint64_t code) {
    for (int e = 0; e < S.edge_count(); ++e) {
        unsigned cols = 0;
        for (int j = 0; j < faces.p; ++j)
            if (subset_of(S.edges[e], zp_column(code, faces.n, j))) cols |= 1u << j;
        if (cols) return {e, canonical_column(cols, faces.p)};
    }
    return {-1, -1};
}

}  // namespace

ZpLabeling main_labeling(const SetSystem& S, const MultiplicityVector& s,
                         const Coloring& c, int p, const ZpFaceSet& faces,
                         bool verify_defect) {
    if (!is_prime(p) || p != faces.p) throw std::invalid_argument("p must be prime");
    if (faces.n != S.n || s.size() != S.n)
        throw std::invalid_argument("face set does not match the ground set");
    int n_bar = s.total();
    int K = c.m;
    if ((n_bar - 1) % (p - 1) != 0)
        throw std::invalid_argument("need (p-1) | (n_bar - 1); extend the ground set first");
    if (verify_defect) {
        int cd = cd_exact(S, p, s);
        if (cd <= (p - 1) * K) throw std::invalid_argument("need (p-1)K < cd^p_s(S)");
    }
    ZpLabeling lab(faces.count());
    for (int i = 0; i < faces.count(); ++i) {
        std::uint64_t code = faces.codes[i];
        int size = popcount(code);
        if (size >= n_bar - (p - 1) * K) {
            auto [edge, col] = smallest_edge_in(S, faces, code);
            if (edge < 0) throw DefectHypothesisFails(code);
            lab[i] = {col, c.of(edge)};
        } else {
            // smallest nonempty column; equal columns resolved equivariantly
            Mask best = ~Mask{0};
            for (int j = 0; j < p; ++j) {
                Mask col = zp_column(code, faces.n, j);
                if (col != 0 && col < best) best = col;
            }
            unsigned cols = 0;
            for (int j = 0; j < p; ++j)
                if (zp_column(code, faces.n, j) == best) cols |= 1u << j;
            lab[i] = {canonical_column(cols, p), K + ceil_div(size, p - 1)};
        }
    }
    return lab;
}

MonochromaticFamily main_refute(const SetSystem& S, const MultiplicityVector& s,
                                const Coloring& c, int p) {
    auto [ext, ext_s] = extend_ground_set(S, s, p);
    ZpFaceSet faces = zp_faces(ext.n, p, ext_s);
    ZpLabeling lab = main_labeling(ext, ext_s, c, p, faces);
    int n_bar = ext_s.total();
    int m = (n_bar - 1) / (p - 1);
    int K = c.m;

    auto unpack = [&](const ZpChainWitness& w, MonochromaticFamily& fam) {
        // the shared value must be a color: at most p-1 chain members can
        // share one case-2 value
        if (w.value > K) return false;
        fam.members.clear();
        fam.color = w.value;
        for (size_t i = 0; i < w.chain.size(); ++i) {
            auto [edge, col] = smallest_edge_in(ext, faces, w.chain[i]);
            assert(edge >= 0 && col == w.signs[i]);
            assert(c.of(edge) == w.value);
            fam.members.push_back(edge);
        }
        std::sort(fam.members.begin(), fam.members.end());
        return std::adjacent_find(fam.members.begin(), fam.members.end()) ==
               fam.members.end();
    };

    MonochromaticFamily fam;
    zp_search_impl(faces, lab, m, [&](const ZpChainWitness& cand) {
        if (cand.value > K)
            throw std::logic_error("all-case-2 witness chain contradicts the pigeonhole bound");
        return unpack(cand, fam);
    });
    return fam;
}

ZpLabeling random_equivariant_labeling(const ZpFaceSet& faces, int m,
                                       std::mt19937_64& rng) {
    ZpLabeling lab(faces.count(), ZpLabel{-1, 0});
    std::uniform_int_distribution<int> value(1, m);
    std::uniform_int_distribution<int> sign(0, faces.p - 1);
    for (int i = 0; i < faces.count(); ++i) {
        if (lab[i].value != 0) continue;
        int s0 = sign(rng), v0 = value(rng);
        for (int k = 0; k < faces.p; ++k) {
            int idx = faces.index_of(zp_action(faces.codes[i], faces.n, faces.p, k));
            lab[idx] = {(s0 + k) % faces.p, v0};
        }
    }
    return lab;
}

}  // namespace kneser
