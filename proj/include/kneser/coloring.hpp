#ifndef KNESER_COLORING_HPP
#define KNESER_COLORING_HPP

#include <stdexcept>
#include <vector>

namespace kneser {

// Vertex coloring of a Kneser hypergraph KG^r_s(S): one color in [m] per
// edge index of the underlying SetSystem.
struct Coloring {
    int m = 0;
    std::vector<int> colors;

    static Coloring make(int m, std::vector<int> colors) {
        if (m < 0) throw std::invalid_argument("negative color count");
        for (int c : colors)
            if (c < 1 || c > m) throw std::invalid_argument("color out of [1,m]");
        return Coloring{m, std::move(colors)};
    }
    int of(int vertex) const { return colors[vertex]; }
    int size() const { return static_cast<int>(colors.size()); }
};

// Refutation witness: an s-disjoint r-family of edge indices, all one color.
struct MonochromaticFamily {
    std::vector<int> members;
    int color = 0;
};

}  // namespace kneser

#endif
