#include "render.hpp"

#include <algorithm>
#include <sstream>

namespace layoutalg::render {

Grid grid_of(const Layout& l) {
    if (l.shape().is_integer()) {
        Grid g;
        for (Int x = 0; x < l.size(); ++x) g.push_back({eval(l, x)});
        return g;
    }
    if (l.rank() > 2) {
        throw Error(ErrorKind::Unrenderable,
                    "cannot draw a layout of rank " + std::to_string(l.rank()) +
                        " as a grid; use --flatten-to 2");
    }
    if (l.rank() == 0) return {{0}};
    const Int rows = l.mode(0).size();
    const Int cols = l.rank() == 2 ? l.mode(1).size() : 1;
    Grid g(static_cast<std::size_t>(rows), std::vector<Int>(static_cast<std::size_t>(cols)));
    for (Int i = 0; i < rows; ++i) {
        for (Int j = 0; j < cols; ++j) {
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = eval(l, i + rows * j);
        }
    }
    return g;
}

Layout flatten_to_two(const Layout& l) {
    if (l.shape().is_integer() || l.rank() <= 2) return l;
    std::vector<Layout> rest;
    for (std::size_t i = 1; i < l.rank(); ++i) rest.push_back(l.mode(i));
    const Layout tail = concat(rest);
    return concat({l.mode(0), tail});
}

std::string format_text(const Grid& g) {
    std::size_t width = 1;
    for (const auto& row : g) {
        for (Int v : row) width = std::max(width, std::to_string(v).size());
    }
    std::ostringstream os;
    for (const auto& row : g) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            const std::string cell = std::to_string(row[j]);
            if (j > 0) os << ' ';
            os << std::string(width - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

std::string format_tikz(const Grid& g) {
    std::ostringstream os;
    os << "\\begin{tikzpicture}[x={(0.5cm,0cm)},y={(0cm,-0.5cm)}]\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g[i].size(); ++j) {
            os << "  \\draw (" << j << "," << i << ") rectangle (" << j + 1 << "," << i + 1
               << ") node[pos=.5] {" << g[i][j] << "};\n";
        }
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace layoutalg::render
