#include "kneser/chains.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace kneser {

namespace {

long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("chain coefficient overflow");
    return out;
}

long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("chain coefficient overflow");
    return out;
}

// sorts in place; parity of the sorting permutation, 0 when a vertex repeats
int canonical_sign(std::vector<int>& v) {
    int sign = 1;
    for (size_t i = 1; i < v.size(); ++i)
        for (size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
            if (v[j - 1] == v[j]) return 0;
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

bool Complex::has_face(const Simplex& s) const { return lookup.count(s) > 0; }

long long Complex::face_count() const {
    long long total = 0;
    for (const auto& level : faces) total += static_cast<long long>(level.size());
    return total;
}

long long Complex::euler() const {
    long long e = 0;
    long long sign = 1;
    for (const auto& level : faces) {
        e += sign * static_cast<long long>(level.size());
        sign = -sign;
    }
    return e;
}

Simplex Complex::act(const Simplex& s, int power) const {
    if (action.empty()) return s;
    Simplex out = s;
    for (int t = 0; t < ((power % group_order) + group_order) % group_order; ++t)
        for (int& v : out) v = action[v];
    std::sort(out.begin(), out.end());
    return out;
}

void Complex::finalize() {
    lookup.clear();
    for (auto& level : faces) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        for (const auto& s : level) lookup.insert(s);
    }
}

Complex complex_from_faces(int nverts, const std::vector<Simplex>& maximal) {
    std::set<Simplex> all;
    // close downward by peeling one vertex at a time
    std::vector<Simplex> stack;
    for (Simplex s : maximal) {
        std::sort(s.begin(), s.end());
        stack.push_back(std::move(s));
    }
    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        if (s.empty() || !all.insert(s).second) continue;
        if (s.size() > 1)
            for (size_t i = 0; i < s.size(); ++i) {
                Simplex sub;
                for (size_t j = 0; j < s.size(); ++j)
                    if (j != i) sub.push_back(s[j]);
                stack.push_back(std::move(sub));
            }
    }
    Complex k;
    k.nverts = nverts;
    for (const Simplex& s : all) {
        int d = static_cast<int>(s.size()) - 1;
        if (d >= static_cast<int>(k.faces.size())) k.faces.resize(d + 1);
        k.faces[d].push_back(s);
    }
    k.finalize();
    return k;
}

namespace {

Complex join_with_apexes(const Complex& base, int apexes) {
    Complex out;
    out.nverts = base.nverts + apexes;
    int top_dim = base.dim() + 1;
    out.faces.resize(std::max(top_dim + 1, 1));
    for (int a = 0; a < apexes; ++a) out.faces[0].push_back({a});
    for (int d = 0; d <= base.dim(); ++d)
        for (const Simplex& s : base.faces[d]) {
            Simplex shifted;
            for (int v : s) shifted.push_back(v + apexes);
            out.faces[d].push_back(shifted);
            for (int a = 0; a < apexes; ++a) {
                Simplex joined{a};
                joined.insert(joined.end(), shifted.begin(), shifted.end());
                out.faces[d + 1].push_back(joined);
            }
        }
    out.finalize();
    return out;
}

}  // namespace

Complex cone_over(const Complex& base) { return join_with_apexes(base, 1); }

Complex suspension_over(const Complex& base) {
    Complex out = join_with_apexes(base, 2);
    if (!base.action.empty()) {
        out.group_order = base.group_order;
        out.action.resize(out.nverts);
        out.action[0] = 1;
        out.action[1] = 0;
        for (int v = 0; v < base.nverts; ++v) out.action[v + 2] = base.action[v] + 2;
    }
    return out;
}

long long Chain::coeff(const Simplex& s) const {
    auto it = terms.find(s);
    return it == terms.end() ? 0 : it->second;
}

void Chain::add(const Simplex& s, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(s, 0);
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms.erase(it);
}

void Chain::add_oriented(std::vector<int> verts, long long c) {
    int sign = canonical_sign(verts);
    if (sign == 0) return;
    add(verts, sign > 0 ? c : -c);
}

void Chain::add_chain(const Chain& other, long long scale) {
    for (const auto& [s, c] : other.terms) add(s, checked_mul(c, scale));
}

Chain boundary(const Chain& c) {
    Chain out;
    out.dim = c.dim - 1;
    if (c.dim <= 0) return out;  // boundary of a 0-chain vanishes
    for (const auto& [s, coeff] : c.terms) {
        long long sign = 1;
        for (size_t i = 0; i < s.size(); ++i) {
            Simplex facet;
            for (size_t j = 0; j < s.size(); ++j)
                if (j != i) facet.push_back(s[j]);
            out.add(facet, sign * coeff);
            sign = -sign;
        }
    }
    return out;
}

const Chain& ChainMap::image_of(const Simplex& s) const {
    int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d >= static_cast<int>(images.size()))
        throw std::invalid_argument("simplex dimension outside the chain map");
    auto it = images[d].find(s);
    if (it == images[d].end()) throw std::invalid_argument("simplex not in the source basis");
    return it->second;
}

Chain ChainMap::apply(const Chain& c) const {
    Chain out;
    out.dim = c.dim;
    for (const auto& [s, coeff] : c.terms) out.add_chain(image_of(s), coeff);
    return out;
}

namespace {

Chain chain_of(const Simplex& s) {
    Chain c;
    c.dim = static_cast<int>(s.size()) - 1;
    c.add(s, 1);
    return c;
}

}  // namespace

ChainMap make_chain_map(const Complex& src, const Complex& tgt,
                        std::vector<std::map<Simplex, Chain>> images) {
    ChainMap nu;
    nu.images = std::move(images);
    if (nu.images.size() < src.faces.size())
        throw std::invalid_argument("chain map missing top dimensions");
    for (int d = 0; d <= src.dim(); ++d)
        for (const Simplex& s : src.faces[d]) {
            auto it = nu.images[d].find(s);
            if (it == nu.images[d].end())
                throw std::invalid_argument("chain map not total on the source basis");
            for (const auto& [t, c] : it->second.terms) {
                (void)c;
                if (static_cast<int>(t.size()) != d + 1 || !tgt.has_face(t))
                    throw std::invalid_argument("image term is not a target face");
            }
        }
    for (int d = 1; d <= src.dim(); ++d)
        for (const Simplex& s : src.faces[d]) {
            Chain lhs = boundary(nu.images[d].at(s));
            Chain rhs = nu.apply(boundary(chain_of(s)));
            if (!(lhs == rhs))
                throw std::invalid_argument("boundary does not commute: not a chain map");
        }
    return nu;
}

ChainMap induced_chain_map(const Complex& src, const Complex& tgt,
                           const std::vector<int>& vertex_map) {
    if (static_cast<int>(vertex_map.size()) != src.nverts)
        throw std::invalid_argument("vertex map size mismatch");
    std::vector<std::map<Simplex, Chain>> images(src.faces.size());
    for (int d = 0; d <= src.dim(); ++d)
        for (const Simplex& s : src.faces[d]) {
            std::vector<int> mapped;
            mapped.reserve(s.size());
            for (int v : s) mapped.push_back(vertex_map[v]);
            Chain img;
            img.dim = d;
            img.add_oriented(mapped, 1);
            if (!img.zero() && !tgt.has_face(img.terms.begin()->first))
                throw LabelChainExists(s);
            images[d].emplace(s, std::move(img));
        }
    return make_chain_map(src, tgt, std::move(images));
}

ChainMap identity_chain_map(const Complex& k) {
    std::vector<int> id(k.nverts);
    std::iota(id.begin(), id.end(), 0);
    return induced_chain_map(k, k, id);
}

ChainMap constant_chain_map(const Complex& k, int vertex) {
    std::vector<int> cm(k.nverts, vertex);
    return induced_chain_map(k, k, cm);
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
    ChainMap out;
    out.images.resize(g.images.size());
    for (size_t d = 0; d < g.images.size(); ++d)
        for (const auto& [s, c] : g.images[d]) out.images[d].emplace(s, f.apply(c));
    return out;
}

bool verify_chain_map(const ChainMap& nu, const Complex& src) {
    for (int d = 1; d <= src.dim(); ++d)
        for (const Simplex& s : src.faces[d]) {
            if (!(boundary(nu.image_of(s)) == nu.apply(boundary(chain_of(s)))))
                return false;
        }
    return true;
}

bool is_augmentation_preserving(const ChainMap& nu, const Complex& src) {
    for (const Simplex& v : src.faces[0]) {
        long long sum = 0;
        for (const auto& [t, c] : nu.image_of(v).terms) {
            (void)t;
            sum = checked_add(sum, c);
        }
        if (sum != 1) return false;
    }
    return true;
}

bool is_equivariant(const ChainMap& nu, const Complex& src, const Complex& tgt) {
    if (src.action.empty() || tgt.action.empty() || src.group_order != tgt.group_order)
        return false;
    for (int d = 0; d <= src.dim(); ++d)
        for (const Simplex& s : src.faces[d]) {
            Chain lhs = nu.image_of(src.act(s));
            // compare against the signed action image of nu(s)
            Chain expect;
            expect.dim = d;
            {
                // the action permutes vertices of s; track its orientation sign
                std::vector<int> av;
                av.reserve(s.size());
                for (int v : s) av.push_back(src.action[v]);
                int sgn = canonical_sign(av);
                for (const auto& [t, c] : nu.image_of(s).terms) {
                    std::vector<int> tv;
                    tv.reserve(t.size());
                    for (int v : t) tv.push_back(tgt.action[v]);
                    expect.add_oriented(std::move(tv), sgn > 0 ? c : -c);
                }
            }
            if (!(lhs == expect)) return false;
        }
    return true;
}

bool complex_action_is_free(const Complex& k) {
    if (k.action.empty() || k.group_order < 2) return false;
    for (int d = 0; d <= k.dim(); ++d)
        for (const Simplex& s : k.faces[d])
            for (int t = 1; t < k.group_order; ++t)
                if (k.act(s, t) == s) return false;
    return true;
}

long long lefschetz(const ChainMap& nu, const Complex& k) {
    long long total = 0;
    long long sign = 1;
    for (int d = 0; d <= k.dim(); ++d) {
        for (const Simplex& s : k.faces[d])
            total = checked_add(total, sign * nu.image_of(s).coeff(s));
        sign = -sign;
    }
    return total;
}

int find_cone_apex(const Complex& k) {
    for (int v = 0; v < k.nverts; ++v) {
        bool ok = true;
        for (int d = 0; d <= k.dim() && ok; ++d)
            for (const Simplex& s : k.faces[d]) {
                if (std::binary_search(s.begin(), s.end(), v)) continue;
                Simplex joined = s;
                joined.insert(std::lower_bound(joined.begin(), joined.end(), v), v);
                if (!k.has_face(joined)) { ok = false; break; }
            }
        if (ok) return v;
    }
    return -1;
}

Chain ChainHomotopy::apply(const Chain& c) const {
    Chain out;
    out.dim = c.dim + 1;
    if (c.dim < 0) return out;
    for (const auto& [s, coeff] : c.terms) {
        auto it = images[c.dim].find(s);
        if (it == images[c.dim].end()) throw std::invalid_argument("simplex not in basis");
        out.add_chain(it->second, coeff);
    }
    return out;
}

ChainHomotopy cone_homotopy(const Complex& cone) {
    int apex = find_cone_apex(cone);
    if (apex < 0) throw NotACone("complex is not a cone");
    ChainHomotopy D;
    D.apex = apex;
    D.images.resize(cone.faces.size());
    for (int d = 0; d <= cone.dim(); ++d)
        for (const Simplex& s : cone.faces[d]) {
            Chain img;
            img.dim = d + 1;
            if (!std::binary_search(s.begin(), s.end(), apex)) {
                std::vector<int> joined;
                joined.push_back(apex);
                joined.insert(joined.end(), s.begin(), s.end());
                img.add_oriented(std::move(joined), 1);
            }
            D.images[d].emplace(s, std::move(img));
        }
    // dD + Dd = id - a on every basis simplex
    ChainMap a = constant_chain_map(cone, apex);
    for (int d = 0; d <= cone.dim(); ++d)
        for (const Simplex& s : cone.faces[d]) {
            Chain lhs = boundary(D.images[d].at(s));
            lhs.add_chain(D.apply(boundary(chain_of(s))));
            Chain rhs = chain_of(s);
            rhs.add_chain(a.image_of(s), -1);
            if (!(lhs == rhs)) throw std::logic_error("cone homotopy identity failed (bug)");
        }
    return D;
}

long long verify_cone_lemma(const Complex& cone, const ChainMap& nu) {
    if (!is_augmentation_preserving(nu, cone))
        throw NotAugmentationPreserving("map does not preserve vertex coefficient sums");
    ChainHomotopy D = cone_homotopy(cone);
    // telescoping: the chain map dD' + D'd with D' = D nu has Lefschetz number 0
    ChainMap mu;
    mu.images.resize(cone.faces.size());
    for (int d = 0; d <= cone.dim(); ++d)
        for (const Simplex& s : cone.faces[d]) {
            Chain val = boundary(D.apply(nu.image_of(s)));
            val.add_chain(D.apply(nu.apply(boundary(chain_of(s)))));
            val.dim = d;
            mu.images[d].emplace(s, std::move(val));
        }
    if (lefschetz(mu, cone) != 0)
        throw std::logic_error("telescoping Lefschetz sum is nonzero (bug)");
    long long lam = lefschetz(nu, cone);
    if (lam != 1) throw std::logic_error("cone lemma violated: Lefschetz number != 1");
    return lam;
}

Subdivision barycentric_sd(const Complex& base) {
    Subdivision out;
    // sd-vertices: faces of the base ordered by (cardinality, lex); ids then
    // ascend along chains of the face poset
    for (int d = 0; d <= base.dim(); ++d)
        for (const Simplex& s : base.faces[d]) out.vertex_face.push_back(s);
    std::map<Simplex, int> id_of;
    for (size_t i = 0; i < out.vertex_face.size(); ++i)
        id_of[out.vertex_face[i]] = static_cast<int>(i);

    int nv = static_cast<int>(out.vertex_face.size());
    // comparability lists: strictly larger faces of each face
    std::vector<std::vector<int>> above(nv);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            if (out.vertex_face[i].size() >= out.vertex_face[j].size()) continue;
            if (std::includes(out.vertex_face[j].begin(), out.vertex_face[j].end(),
                              out.vertex_face[i].begin(), out.vertex_face[i].end()))
                above[i].push_back(j);
        }
    std::vector<Simplex> chains;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int last) -> void {
        chains.push_back(cur);
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
    out.sd.nverts = nv;
    for (const Simplex& c : chains) {
        int d = static_cast<int>(c.size()) - 1;
        if (d >= static_cast<int>(out.sd.faces.size())) out.sd.faces.resize(d + 1);
        out.sd.faces[d].push_back(c);
    }
    if (!base.action.empty()) {
        out.sd.group_order = base.group_order;
        out.sd.action.resize(nv);
        for (int i = 0; i < nv; ++i) out.sd.action[i] = id_of.at(base.act(out.vertex_face[i]));
    }
    out.sd.finalize();

    // canonical chain map sd(sigma) = b_sigma * sd(boundary sigma), memoized
    std::vector<std::map<Simplex, Chain>> images(base.faces.size());
    for (const Simplex& v : base.faces[0]) {
        Chain c;
        c.dim = 0;
        c.add({id_of.at(v)}, 1);
        images[0].emplace(v, std::move(c));
    }
    for (int d = 1; d <= base.dim(); ++d)
        for (const Simplex& s : base.faces[d]) {
            int b = id_of.at(s);
            Chain img;
            img.dim = d;
            Chain below = boundary(chain_of(s));
            for (const auto& [facet, fc] : below.terms)
                for (const auto& [t, tc] : images[d - 1].at(facet).terms) {
                    std::vector<int> joined;
                    joined.push_back(b);
                    joined.insert(joined.end(), t.begin(), t.end());
                    img.add_oriented(std::move(joined), checked_mul(fc, tc));
                }
            images[d].emplace(s, std::move(img));
        }
    out.map = make_chain_map(base, out.sd, std::move(images));
    return out;
}

Complex board_complex(int rows, int cols, const MultiplicityVector& caps) {
    ZpFaceSet fs = zp_faces(rows, cols, caps);
    Complex k;
    k.nverts = rows * cols;
    for (std::uint64_t code : fs.codes) {
        Simplex s = code_to_simplex(code);
        int d = static_cast<int>(s.size()) - 1;
        if (d >= static_cast<int>(k.faces.size())) k.faces.resize(d + 1);
        k.faces[d].push_back(std::move(s));
    }
    k.group_order = cols;
    k.action.resize(k.nverts);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) k.action[j * rows + i] = ((j + 1) % cols) * rows + i;
    k.finalize();
    return k;
}

std::uint64_t simplex_to_code(const Simplex& s) {
    std::uint64_t code = 0;
    for (int v : s) code |= std::uint64_t{1} << v;
    return code;
}

Simplex code_to_simplex(std::uint64_t code) {
    Simplex s;
    while (code) {
        s.push_back(std::countr_zero(code));
        code &= code - 1;
    }
    return s;
}

KappaMap kappa_map(int n, int p, const MultiplicityVector& s, int m) {
    if (s.size() != n) throw std::invalid_argument("multiplicity vector size mismatch");
    KappaMap km;
    km.n = n;
    km.p = p;
    km.m = m;
    int ranks = m * (p - 1);
    int n_bar = s.total();
    if (ranks > n_bar)
        throw DimensionShortfall("m(p-1) exceeds the total multiplicity");
    km.poset = zp_faces(m, p, MultiplicityVector::uniform(m, p - 1));
    km.row_of_rank.assign(ranks + 2, 0);
    {
        int row = 1, used = 0;
        for (int l = 1; l <= ranks + 1; ++l) {
            while (row <= n && used + s.of(row) < l) { used += s.of(row); ++row; }
            km.row_of_rank[l] = l <= n_bar ? row : -1;
        }
    }
    // at most s_i rank levels land in row i, so every chain image obeys the
    // row caps: that is the simpliciality of kappa
    {
        std::vector<int> per_row(n + 1, 0);
        for (int l = 1; l <= ranks; ++l) ++per_row[km.row_of_rank[l]];
        for (int i = 1; i <= n; ++i)
            if (per_row[i] > s.of(i)) throw std::logic_error("rank map violates row caps (bug)");
    }
    km.cell_of.resize(km.poset.count());
    for (int i = 0; i < km.poset.count(); ++i) {
        std::uint64_t code = km.poset.codes[i];
        // orbit representative: least code under column rotation
        std::uint64_t rep = code;
        int shift = 0;
        for (int k = 1; k < p; ++k) {
            std::uint64_t rot = zp_action(code, m, p, k);
            if (rot < rep) { rep = rot; shift = k; }
        }
        // code = rep rotated by (p - shift): the representative goes to
        // column 0, so code goes to column (p - shift) mod p
        int col = (p - shift) % p;
        int row = km.row_of_rank[popcount(code)];
        km.cell_of[i] = col * n + (row - 1);
    }
    // orbitwise equivariance of the vertex map
    for (int i = 0; i < km.poset.count(); ++i) {
        int j = km.poset.index_of(zp_action(km.poset.codes[i], m, p, 1));
        int cell = km.cell_of[i];
        int rotated = ((cell / n + 1) % p) * n + cell % n;
        if (km.cell_of[j] != rotated) throw std::logic_error("kappa not equivariant (bug)");
    }
    if (ranks + 1 <= n_bar) km.hat_cell = km.row_of_rank[ranks + 1] - 1;  // column 0
    return km;
}

SquareResult compose_square(int n, int p, const MultiplicityVector& s, int m,
                            const ZpLabeling& lab) {
    if (m * (p - 1) > s.total())
        throw DimensionShortfall("m(p-1) exceeds the total multiplicity");
    SquareResult out;
    out.board = board_complex(n, p, s);
    ZpFaceSet faces = zp_faces(n, p, s);
    if (static_cast<int>(lab.size()) != faces.count())
        throw std::invalid_argument("labeling table size mismatch");
    Subdivision sd_x = barycentric_sd(out.board);
    Complex target = board_complex(m, p, MultiplicityVector::uniform(m, p - 1));
    // the labeling as a vertex map on sd-vertices: face A -> cell
    // (row lambda_2(A), column lambda_1(A)) of the m x p board
    std::vector<int> vmap(sd_x.sd.nverts);
    for (int v = 0; v < sd_x.sd.nverts; ++v) {
        int idx = faces.index_of(simplex_to_code(sd_x.vertex_face[v]));
        assert(idx >= 0);
        const ZpLabel& l = lab[idx];
        if (l.sign < 0 || l.sign >= p || l.value < 1 || l.value > m)
            throw std::invalid_argument("label outside Z_p x [m]");
        vmap[v] = l.sign * m + (l.value - 1);
    }
    ChainMap lambda_sharp = induced_chain_map(sd_x.sd, target, vmap);
    Subdivision sd_t = barycentric_sd(target);
    KappaMap km = kappa_map(n, p, s, m);
    std::vector<int> kappa_vmap(sd_t.sd.nverts);
    for (int v = 0; v < sd_t.sd.nverts; ++v) {
        int idx = km.poset.index_of(simplex_to_code(sd_t.vertex_face[v]));
        assert(idx >= 0);
        kappa_vmap[v] = km.cell_of[idx];
    }
    ChainMap kappa_sharp = induced_chain_map(sd_t.sd, out.board, kappa_vmap);
    out.nu = compose(kappa_sharp, compose(sd_t.map, compose(lambda_sharp, sd_x.map)));
    if (!verify_chain_map(out.nu, out.board))
        throw std::logic_error("composed square is not a chain map (bug)");
    if (!is_augmentation_preserving(out.nu, out.board))
        throw std::logic_error("composed square is not augmentation preserving (bug)");
    if (!is_equivariant(out.nu, out.board, out.board))
        throw std::logic_error("composed square is not equivariant (bug)");
    out.lefschetz_value = lefschetz(out.nu, out.board);
    return out;
}

}  // namespace kneser
