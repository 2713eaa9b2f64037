#include "reachtopo/homology.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace reachtopo {

namespace {

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 1469598103934665603ULL;
        for (int v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

using Column = std::vector<int>;

void add_into(Column& a, const Column& b, Column& scratch) {
    scratch.clear();
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(scratch));
    a.swap(scratch);
}

// Rank of a GF(2) matrix given by columns, skipping columns flagged in `skip`.
// Pivot rows of the reduced matrix are reported through `pivot_rows`.
std::size_t reduce(std::vector<Column>& cols, std::size_t n_rows, const std::vector<char>& skip,
                   std::vector<char>& pivot_rows) {
    std::vector<int> owner(n_rows, -1);
    pivot_rows.assign(n_rows, 0);
    Column scratch;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!skip.empty() && skip[j]) continue;
        Column& c = cols[j];
        while (!c.empty() && owner[c.back()] >= 0) add_into(c, cols[owner[c.back()]], scratch);
        if (!c.empty()) {
            owner[c.back()] = static_cast<int>(j);
            pivot_rows[c.back()] = 1;
            ++rank;
        }
    }
    return rank;
}

}  // namespace

std::vector<std::size_t> coboundary_ranks(const SimplicialComplex& complex, int up_to) {
    if (up_to < 0) throw InvalidArgument("betti: up_to must be >= 0");
    const int top = std::min(complex.top_dim(), up_to + 1);
    std::vector<std::vector<const Simplex*>> by_dim(std::max(top + 1, 0));
    std::vector<std::unordered_map<Simplex, int, SimplexHash>> index(by_dim.size());
    for (const auto& s : complex.simplices) {
        const int d = static_cast<int>(s.size()) - 1;
        if (d > top) break;
        index[d].emplace(s, static_cast<int>(by_dim[d].size()));
        by_dim[d].push_back(&s);
    }
    std::vector<std::size_t> ranks(up_to + 1, 0);
    std::vector<char> cleared;
    Simplex face;
    for (int k = 0; k <= up_to && k + 1 <= top; ++k) {
        // delta_k: columns are k-simplices, rows are (k+1)-simplices.
        std::vector<Column> cols(by_dim[k].size());
        for (std::size_t t = 0; t < by_dim[k + 1].size(); ++t) {
            const Simplex& s = *by_dim[k + 1][t];
            face.resize(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                for (std::size_t a = 0, m = 0; a < s.size(); ++a)
                    if (a != drop) face[m++] = s[a];
                auto it = index[k].find(face);
                if (it == index[k].end()) throw InvalidArgument("betti: complex is not closed under faces");
                cols[it->second].push_back(static_cast<int>(t));
            }
        }
        std::vector<char> pivots;
        ranks[k] = reduce(cols, by_dim[k + 1].size(), cleared, pivots);
        // A (k+1)-simplex that is a pivot row of delta_k indexes a column of delta_{k+1}
        // that reduces to zero.
        cleared = std::move(pivots);
    }
    return ranks;
}

std::vector<int> betti_simplicial(const SimplicialComplex& complex, int up_to) {
    auto ranks = coboundary_ranks(complex, up_to);
    std::vector<int> b(up_to + 1, 0);
    for (int k = 0; k <= up_to; ++k) {
        const long long n = static_cast<long long>(complex.count(k));
        long long v = n - static_cast<long long>(ranks[k]);
        if (k > 0) v -= static_cast<long long>(ranks[k - 1]);
        b[k] = static_cast<int>(v);
    }
    return b;
}

std::pair<int, int> betti_grid_2d(const GridField& field) {
    field.validate();
    const int nx = field.nx(), ny = field.ny();
    auto occ = [&](int i, int j) { return i >= 0 && j >= 0 && i < nx && j < ny && field.occupied(i, j); };
    std::vector<int> parent(static_cast<std::size_t>(nx) * ny);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    long long V = 0, E = 0, F = 0;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            if (!occ(i, j)) continue;
            ++V;
            const int id = j * nx + i;
            if (occ(i + 1, j)) {
                ++E;
                parent[find(id)] = find(id + 1);
            }
            if (occ(i, j + 1)) {
                ++E;
                parent[find(id)] = find(id + nx);
            }
            if (occ(i + 1, j) && occ(i, j + 1) && occ(i + 1, j + 1)) ++F;
        }
    int b0 = 0;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            if (occ(i, j) && find(j * nx + i) == j * nx + i) ++b0;
    const long long chi = V - E + F;
    return {b0, static_cast<int>(b0 - chi)};
}

}  // namespace reachtopo
