#include "kneser/hypercore.hpp"

#include <algorithm>
#include <stdexcept>

namespace kneser {

MultiplicityVector::MultiplicityVector(std::vector<int> v) : s(std::move(v)) {
    for (int x : s)
        if (x < 1) throw std::invalid_argument("multiplicities must be >= 1");
}

MultiplicityVector MultiplicityVector::uniform(int n, int value) {
    if (n < 0 || value < 1) throw std::invalid_argument("bad multiplicity vector");
    return MultiplicityVector(std::vector<int>(n, value));
}

int MultiplicityVector::total() const {
    int t = 0;
    for (int x : s) t += x;
    return t;
}

bool MultiplicityVector::constant() const {
    for (int x : s)
        if (x != s[0]) return false;
    return true;
}

bool MultiplicityVector::below(int r) const {
    for (int x : s)
        if (x >= r) return false;
    return true;
}

SetSystem SetSystem::make(int n, std::vector<Mask> raw) {
    if (n < 0 || n > max_ground) throw std::invalid_argument("ground size must be in [0,63]");
    Mask full = full_mask(n);
    for (Mask e : raw) {
        if (!subset_of(e, full)) throw std::invalid_argument("edge not a subset of [n]");
        if (popcount(e) < 2) throw std::invalid_argument("loop edge (cardinality < 2)");
    }
    std::sort(raw.begin(), raw.end());
    if (std::adjacent_find(raw.begin(), raw.end()) != raw.end())
        throw std::invalid_argument("duplicate edge");
    SetSystem s;
    s.n = n;
    s.edges = std::move(raw);
    return s;
}

int SetSystem::index_of(Mask e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return -1;
    return static_cast<int>(it - edges.begin());
}

std::uint64_t SignVector::code(int n) const {
    std::uint64_t c = 0, p = 1;
    for (int i = 0; i < n; ++i, p *= 3) {
        if (has_bit(plus, i)) c += p;
        else if (has_bit(minus, i)) c += 2 * p;
    }
    return c;
}

SignVector SignVector::from_code(std::uint64_t c, int n) {
    SignVector x;
    for (int i = 0; i < n; ++i) {
        switch (c % 3) {
            case 1: x.plus |= bit(i); break;
            case 2: x.minus |= bit(i); break;
            default: break;
        }
        c /= 3;
    }
    return x;
}

std::string SignVector::str(int n) const {
    std::string out(n, '0');
    for (int i = 0; i < n; ++i) {
        if (has_bit(plus, i)) out[i] = '+';
        else if (has_bit(minus, i)) out[i] = '-';
    }
    return out;
}

namespace {

void check_nk(int n, int k) {
    if (n < 0 || n > max_ground) throw std::invalid_argument("n out of range");
    if (k < 2) throw std::invalid_argument("k < 2 would create loop edges");
    if (k > n) throw std::invalid_argument("k > n");
}

}  // namespace

SetSystem gen_k_subsets(int n, int k) {
    check_nk(n, k);
    std::vector<Mask> edges;
    // Gosper's hack walks k-subsets in ascending mask order
    Mask m = full_mask(k);
    Mask limit = Mask{1} << n;
    while (m < limit) {
        edges.push_back(m);
        Mask c = m & -m, r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    SetSystem s;
    s.n = n;
    s.edges = std::move(edges);
    return s;
}

SetSystem gen_t_stable(int n, int k, int t) {
    check_nk(n, k);
    if (t < 1) throw std::invalid_argument("t < 1");
    SetSystem s;
    s.n = n;
    if (n < t * k) return s;  // no t-stable k-subset exists
    SetSystem all = gen_k_subsets(n, k);
    for (Mask e : all.edges) {
        auto elems = mask_to_elements(e);
        bool ok = true;
        for (size_t a = 0; a < elems.size() && ok; ++a)
            for (size_t b = a + 1; b < elems.size() && ok; ++b) {
                int d = elems[b] - elems[a];
                if (d < t || d > n - t) ok = false;
            }
        if (ok) s.edges.push_back(e);
    }
    return s;
}

bool is_s_disjoint(std::span<const Mask> family, const MultiplicityVector& s) {
    for (int i = 0; i < s.size(); ++i) {
        int cnt = 0;
        for (Mask f : family)
            if (has_bit(f, i)) ++cnt;
        if (cnt > s.s[i]) return false;
    }
    return true;
}

namespace {

struct KneserEnum {
    const SetSystem& S;
    int r;
    const MultiplicityVector& s;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<int> use;  // per-element usage count
    std::vector<int> chosen;
    bool stopped = false;

    bool fits(Mask e) const {
        bool ok = true;
        for_each_element(e, [&](int el) {
            if (use[el - 1] + 1 > s.of(el)) ok = false;
        });
        return ok;
    }

    void rec(int from) {
        if (stopped) return;
        if (static_cast<int>(chosen.size()) == r) {
            if (!visit(chosen)) stopped = true;
            return;
        }
        int need = r - static_cast<int>(chosen.size());
        for (int i = from; i + need <= S.edge_count(); ++i) {
            Mask e = S.edges[i];
            if (!fits(e)) continue;
            for_each_element(e, [&](int el) { ++use[el - 1]; });
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
            for_each_element(e, [&](int el) { --use[el - 1]; });
            if (stopped) return;
        }
    }
};

}  // namespace

void kneser_edges(const SetSystem& S, int r, const MultiplicityVector& s,
                  const std::function<bool(const std::vector<int>&)>& visit) {
    if (r < 2) throw std::invalid_argument("r < 2");
    if (s.size() != S.n) throw std::invalid_argument("multiplicity vector size mismatch");
    if (!s.below(r)) throw std::invalid_argument("need 1 <= s_i < r");
    KneserEnum en{S, r, s, visit, std::vector<int>(S.n, 0), {}, false};
    en.rec(0);
}

std::vector<std::vector<int>> kneser_edge_list(const SetSystem& S, int r,
                                               const MultiplicityVector& s) {
    std::vector<std::vector<int>> out;
    kneser_edges(S, r, s, [&](const std::vector<int>& fam) {
        out.push_back(fam);
        return true;
    });
    return out;
}

int alt(const SignVector& x, int n) {
    int count = 0, last = 0;
    for (int i = 0; i < n; ++i) {
        int sgn = has_bit(x.plus, i) ? 1 : has_bit(x.minus, i) ? -1 : 0;
        if (sgn != 0 && sgn != last) {
            ++count;
            last = sgn;
        }
    }
    return count;
}

int alt_appended(const SignVector& x, int n, int sign) {
    int base = alt(x, n);
    int last = 0;
    for (int i = n - 1; i >= 0 && last == 0; --i) {
        if (has_bit(x.plus, i)) last = 1;
        else if (has_bit(x.minus, i)) last = -1;
    }
    return base + (sign != last ? 1 : 0);
}

SetSystem restrict_to(const SetSystem& S, Mask m) {
    return restrict_with_map(S, m).first;
}

std::pair<SetSystem, std::vector<int>> restrict_with_map(const SetSystem& S, Mask m) {
    SetSystem out;
    out.n = S.n;
    std::vector<int> origin;
    for (int i = 0; i < S.edge_count(); ++i)
        if (subset_of(S.edges[i], m)) {
            out.edges.push_back(S.edges[i]);
            origin.push_back(i);
        }
    return {std::move(out), std::move(origin)};
}

}  // namespace kneser
