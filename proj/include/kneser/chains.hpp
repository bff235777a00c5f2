#ifndef KNESER_CHAINS_HPP
#define KNESER_CHAINS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "kneser/tucker.hpp"

namespace kneser {

// Oriented simplex: ascending vertex ids. Orientation signs relative to this
// canonical order are tracked by the chain arithmetic.
using Simplex = std::vector<int>;

struct NotACone : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAugmentationPreserving : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionShortfall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LabelChainExists : std::runtime_error {
    Simplex chain;  // sd-vertices whose images overfill a target row
    explicit LabelChainExists(Simplex c)
        : std::runtime_error("labeling admits a witness chain; not simplicial into "
                             "the target"),
          chain(std::move(c)) {}
};

// Finite abstract simplicial complex with an optional cyclic group action
// (generator permutation of the vertices; faces map to faces).
struct Complex {
    int nverts = 0;
    std::vector<std::vector<Simplex>> faces;  // faces[k]: k-dimensional, sorted
    std::vector<int> action;                  // generator, empty when trivial
    int group_order = 1;

    int dim() const { return static_cast<int>(faces.size()) - 1; }
    bool has_face(const Simplex& s) const;
    long long face_count() const;
    long long euler() const;  // independent alternating face count
    Simplex act(const Simplex& s, int power = 1) const;
    void finalize();  // sorts faces, builds the lookup set

  private:
    std::set<Simplex> lookup;
};

// Builds the downward closure of the given faces.
Complex complex_from_faces(int nverts, const std::vector<Simplex>& maximal);

// join with one apex (id 0, base shifted by 1) or two (ids 0 and 1, base
// shifted by 2); the suspension's two apexes are never joined to each other,
// and a base Z2 action extends by swapping them
Complex cone_over(const Complex& base);
Complex suspension_over(const Complex& base);

// integer chain: sparse signed sum of canonical simplices of one dimension
struct Chain {
    int dim = -1;
    std::map<Simplex, long long> terms;

    bool zero() const { return terms.empty(); }
    long long coeff(const Simplex& s) const;
    void add(const Simplex& s, long long c);           // s already canonical
    void add_oriented(std::vector<int> verts, long long c);  // sorts, signs, drops degenerate
    void add_chain(const Chain& other, long long scale = 1);
    bool operator==(const Chain&) const = default;
};

Chain boundary(const Chain& c);

// dimension-graded map defined on every basis simplex of a source complex
struct ChainMap {
    std::vector<std::map<Simplex, Chain>> images;

    const Chain& image_of(const Simplex& s) const;
    Chain apply(const Chain& c) const;
};

// verifies totality, image well-formedness, and the chain-map identity
ChainMap make_chain_map(const Complex& src, const Complex& tgt,
                        std::vector<std::map<Simplex, Chain>> images);
// chain map induced by a simplicial vertex map (degenerate images drop to 0);
// throws LabelChainExists when some face's image is not a face of the target
ChainMap induced_chain_map(const Complex& src, const Complex& tgt,
                           const std::vector<int>& vertex_map);
ChainMap identity_chain_map(const Complex& k);
ChainMap constant_chain_map(const Complex& k, int vertex);
// f after g
ChainMap compose(const ChainMap& f, const ChainMap& g);

bool verify_chain_map(const ChainMap& nu, const Complex& src);
bool is_augmentation_preserving(const ChainMap& nu, const Complex& src);
// nu(g.sigma) = g.nu(sigma) for the generator of both actions
bool is_equivariant(const ChainMap& nu, const Complex& src, const Complex& tgt);
// no face fixed setwise by a nontrivial group element
bool complex_action_is_free(const Complex& k);

// Lefschetz number of a chain self-map: sum_k (-1)^k trace(nu_k)
long long lefschetz(const ChainMap& nu, const Complex& k);

// vertex v0 such that sigma + v0 is a face for every face sigma; -1 if none
int find_cone_apex(const Complex& k);

// chain homotopy D between id and the constant map to the apex:
// D(sigma) = v0 * sigma if v0 not in sigma, else 0; dD + Dd = id - a
struct ChainHomotopy {
    int apex = -1;
    std::vector<std::map<Simplex, Chain>> images;  // degree +1
    Chain apply(const Chain& c) const;
};
ChainHomotopy cone_homotopy(const Complex& cone);

// Checks nu is augmentation preserving, computes Lambda(nu), asserts it is 1,
// and verifies the telescoping identity Lambda(dD' + D'd) = 0 for D' = D nu.
long long verify_cone_lemma(const Complex& cone, const ChainMap& nu);

// barycentric subdivision: the order complex of the face poset plus the
// canonical chain map sd(sigma) = b_sigma * sd(boundary sigma)
struct Subdivision {
    Complex sd;
    std::vector<Simplex> vertex_face;  // sd-vertex id -> face of the base
    ChainMap map;                      // C(base) -> C(sd)
};
Subdivision barycentric_sd(const Complex& base);

// chessboard complex: rows x cols board, at most caps[i] ones in row i,
// Z_cols action rotating columns; cell (i,j) has vertex id j*rows + i
Complex board_complex(int rows, int cols, const MultiplicityVector& caps);
std::uint64_t simplex_to_code(const Simplex& s);
Simplex code_to_simplex(std::uint64_t code);

// Rank-level map from the face poset of (sigma^{p-1}_{p-2})^{*m} onto the
// n x p chessboard: rank level l goes to row min{t : l <= s_1+...+s_t}, the
// orbit representative (least code) to column 0, the rest by the action.
struct KappaMap {
    int n = 0, p = 0, m = 0;
    ZpFaceSet poset;                  // faces of the m x p board, rank = popcount
    std::vector<int> row_of_rank;     // 1-based rank -> 1-based row
    std::vector<int> cell_of;         // poset index -> vertex id in the n x p board
    int hat_cell = -1;                // image of the added top element; -1 if n_bar < m(p-1)+1
};
KappaMap kappa_map(int n, int p, const MultiplicityVector& s, int m);

// The equivariant square nu = kappa_sharp . sd . lambda_sharp . sd as a
// chain self-map of C((sigma^{n-1})^{*p}_s). Throws LabelChainExists when
// the labeling admits a witness chain (lambda_sharp not simplicial).
struct SquareResult {
    Complex board;
    ChainMap nu;
    long long lefschetz_value = 0;
};
SquareResult compose_square(int n, int p, const MultiplicityVector& s, int m,
                            const ZpLabeling& lab);

}  // namespace kneser

#endif
