#include "fintop/chains.hpp"

#include "fintop/errors.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace fintop {

std::size_t OrderComplex::total() const {
    std::size_t n = 0;
    for (const auto& level : simplices) n += level.size();
    return n;
}

OrderComplex order_complex(const FinitePoset& X, std::size_t budget) {
    if (X.size() == 0) throw EmptySpace("order complex of the empty space");
    OrderComplex K;
    K.space = X;
    std::size_t total = 0;
    std::vector<int> chain;

    // Depth-first chain extension; tuples come out in lexicographic order.
    auto extend = [&](auto&& self, int last) -> void {
        const int dim = static_cast<int>(chain.size()) - 1;
        if (dim >= K.dimensions()) K.simplices.emplace_back();
        K.simplices[dim].push_back(chain);
        if (++total > budget)
            throw SimplexBudgetExceeded("order complex exceeds " + std::to_string(budget) + " simplices");
        for (int y = 0; y < X.size(); ++y)
            if (X.less(last, y)) {
                chain.push_back(y);
                self(self, y);
                chain.pop_back();
            }
    };
    for (int x = 0; x < X.size(); ++x) {
        chain.assign(1, x);
        extend(extend, x);
    }
    return K;
}

void validate(const ChainComplex& C) {
    if (C.boundary.size() != C.basis.size()) throw InvalidInput("chain complex: degree count mismatch");
    for (int r = 0; r < C.degrees(); ++r) {
        const int expect_rows = r == 0 ? 0 : C.dim(r - 1);
        if (C.boundary[r].rows() != expect_rows || C.boundary[r].cols() != C.dim(r))
            throw InvalidInput("chain complex: boundary shape mismatch in degree " + std::to_string(r));
        if (r >= 1 && !(C.boundary[r - 1] * C.boundary[r]).is_zero())
            throw InvalidInput("chain complex: boundary does not square to zero in degree " +
                               std::to_string(r));
    }
}

namespace {

std::string simplex_label(const FinitePoset& X, std::span<const int> tuple) {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += "<";
        s += X.label(tuple[i]);
    }
    return s + ")";
}

int simplex_index(const std::vector<std::vector<int>>& level, const std::vector<int>& tuple) {
    auto it = std::lower_bound(level.begin(), level.end(), tuple);
    if (it == level.end() || *it != tuple) throw std::logic_error("simplex not found in basis");
    return static_cast<int>(it - level.begin());
}

// Pointwise composite of the contraction maps; steps may be empty.
std::vector<int> composite_point_map(const FinitePoset& start, std::span<const EdgeContraction> steps) {
    std::vector<int> comp(start.size());
    for (int x = 0; x < start.size(); ++x) comp[x] = x;
    const FinitePoset* cur = &start;
    for (const auto& step : steps) {
        if (step.source != *cur) throw InvalidInput("contraction steps do not chain");
        for (int& v : comp) v = step.kappa.img[v];
        cur = &step.result;
    }
    return comp;
}

const FinitePoset& end_space_of(const FinitePoset& start, std::span<const EdgeContraction> steps) {
    return steps.empty() ? start : steps.back().result;
}

// Image tuple with duplicates collapsed; empty optional when degenerate.
std::optional<std::vector<int>> map_simplex(const std::vector<int>& comp, const std::vector<int>& tuple) {
    std::vector<int> img;
    img.reserve(tuple.size());
    for (int v : tuple) {
        int w = comp[v];
        if (img.empty() || img.back() != w) img.push_back(w);
    }
    if (img.size() != tuple.size()) return std::nullopt;
    return img;
}

} // namespace

ChainComplex chain_complex(const OrderComplex& K) {
    ChainComplex C;
    C.basis.resize(K.dimensions());
    C.boundary.resize(K.dimensions());
    for (int r = 0; r < K.dimensions(); ++r) {
        C.basis[r].reserve(K.simplices[r].size());
        for (const auto& tuple : K.simplices[r]) C.basis[r].push_back(simplex_label(K.space, tuple));

        const int rows = r == 0 ? 0 : K.count(r - 1);
        IntMat d(rows, K.count(r));
        if (r >= 1) {
            for (int j = 0; j < K.count(r); ++j) {
                const auto& tuple = K.simplices[r][j];
                std::vector<int> face(tuple.size() - 1);
                for (std::size_t i = 0; i < tuple.size(); ++i) {
                    face.clear();
                    for (std::size_t k = 0; k < tuple.size(); ++k)
                        if (k != i) face.push_back(tuple[k]);
                    d(simplex_index(K.simplices[r - 1], face), j) = (i % 2 == 0) ? 1 : -1;
                }
            }
        }
        C.boundary[r] = std::move(d);
    }
    return C;
}

InducedChainMap induced_map(const FinitePoset& start, std::span<const EdgeContraction> steps,
                            std::size_t budget) {
    const std::vector<int> comp = composite_point_map(start, steps);
    OrderComplex KS = order_complex(start, budget);
    OrderComplex KT = order_complex(end_space_of(start, steps), budget);

    InducedChainMap out{chain_complex(KS), chain_complex(KT), {}};
    out.matrix.resize(out.source.degrees());
    for (int r = 0; r < out.source.degrees(); ++r) {
        IntMat M(out.target.dim(r), out.source.dim(r));
        for (int j = 0; j < out.source.dim(r); ++j)
            if (auto img = map_simplex(comp, KS.simplices[r][j]))
                M(simplex_index(KT.simplices[r], *img), j) = 1;
        out.matrix[r] = std::move(M);
    }

    // A simplicial map must commute with the boundaries.
    for (int r = 1; r < out.source.degrees(); ++r) {
        const IntMat target_bd = r < out.target.degrees()
                                     ? out.target.boundary[r]
                                     : IntMat(out.target.dim(r - 1), 0);
        const IntMat lhs = target_bd * out.matrix[r];
        const IntMat rhs = out.matrix[r - 1] * out.source.boundary[r];
        if (lhs != rhs) throw std::logic_error("induced chain map does not commute with boundaries");
    }
    return out;
}

bool image_membership(std::span<const int> simplex, const FinitePoset& start,
                      std::span<const EdgeContraction> steps) {
    const std::vector<int> comp = composite_point_map(start, steps);
    std::vector<std::vector<int>> fiber(end_space_of(start, steps).size());
    for (int x = 0; x < start.size(); ++x) fiber[comp[x]].push_back(x);

    std::vector<int> lift;
    auto search = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == simplex.size()) return true;
        for (int cand : fiber[simplex[pos]]) {
            if (!lift.empty() && !start.less(lift.back(), cand)) continue;
            lift.push_back(cand);
            if (self(self, pos + 1)) return true;
            lift.pop_back();
        }
        return false;
    };
    return search(search, 0);
}

CokernelComplex cokernel_complex(const FinitePoset& start, std::span<const EdgeContraction> steps,
                                 std::size_t budget) {
    const FinitePoset& end = end_space_of(start, steps);
    OrderComplex KT = order_complex(end, budget);
    ChainComplex ambient = chain_complex(KT);

    CokernelComplex out;
    out.complex.basis.resize(ambient.degrees());
    out.complex.boundary.resize(ambient.degrees());
    out.simplices.resize(ambient.degrees());

    // new index per ambient simplex, -1 for image simplices
    std::vector<std::vector<int>> keep(ambient.degrees());
    for (int r = 0; r < ambient.degrees(); ++r) {
        keep[r].assign(ambient.dim(r), -1);
        for (int j = 0; j < ambient.dim(r); ++j) {
            if (image_membership(KT.simplices[r][j], start, steps)) continue;
            keep[r][j] = static_cast<int>(out.simplices[r].size());
            out.simplices[r].push_back(KT.simplices[r][j]);
            out.complex.basis[r].push_back(ambient.basis[r][j]);
        }
    }
    for (int r = 0; r < ambient.degrees(); ++r) {
        const int rows = r == 0 ? 0 : static_cast<int>(out.simplices[r - 1].size());
        IntMat d(rows, static_cast<int>(out.simplices[r].size()));
        if (r >= 1) {
            for (int j = 0; j < ambient.dim(r); ++j) {
                if (keep[r][j] < 0) continue;
                for (int i = 0; i < ambient.dim(r - 1); ++i)
                    if (keep[r - 1][i] >= 0) d(keep[r - 1][i], keep[r][j]) = ambient.boundary[r](i, j);
            }
        }
        out.complex.boundary[r] = std::move(d);
    }
    return out;
}

KernelComplex kernel_complex(const FinitePoset& start, std::span<const EdgeContraction> steps,
                             std::size_t budget) {
    const std::vector<int> comp = composite_point_map(start, steps);
    OrderComplex KS = order_complex(start, budget);
    OrderComplex KT = order_complex(end_space_of(start, steps), budget);
    ChainComplex source = chain_complex(KS);

    // The induced matrix has at most one +1 per column, so the kernel has an
    // explicit basis: one vector e_c per degenerate chain c, and e_c - e_rep
    // for every non-leading chain c of a group sharing an image simplex.
    const int degs = source.degrees();
    std::vector<std::vector<int>> target_of(degs); // image simplex id, -1 when degenerate
    for (int r = 0; r < degs; ++r) {
        target_of[r].assign(source.dim(r), -1);
        for (int j = 0; j < source.dim(r); ++j)
            if (auto img = map_simplex(comp, KS.simplices[r][j]))
                target_of[r][j] = simplex_index(KT.simplices[r], *img);
    }

    struct BasisVec {
        int col;
        int rep; // -1 for a plain degenerate-chain vector
    };
    std::vector<std::vector<BasisVec>> basis(degs);
    // leader[r][c]: first column of c's image group, or -1 for degenerate c.
    std::vector<std::vector<int>> leader(degs);
    // pos_of[r][c]: index of the basis vector whose "free" column is c, else -1.
    std::vector<std::vector<int>> pos_of(degs);

    KernelComplex out;
    out.complex.basis.resize(degs);
    out.complex.boundary.resize(degs);
    out.embedding.resize(degs);

    for (int r = 0; r < degs; ++r) {
        std::vector<int> first_of_group(KT.count(r), -1);
        leader[r].assign(source.dim(r), -1);
        pos_of[r].assign(source.dim(r), -1);
        for (int c = 0; c < source.dim(r); ++c) {
            const int t = target_of[r][c];
            if (t < 0) {
                pos_of[r][c] = static_cast<int>(basis[r].size());
                basis[r].push_back({c, -1});
            } else if (first_of_group[t] < 0) {
                first_of_group[t] = c;
                leader[r][c] = c;
            } else {
                leader[r][c] = first_of_group[t];
                pos_of[r][c] = static_cast<int>(basis[r].size());
                basis[r].push_back({c, first_of_group[t]});
            }
        }

        IntMat emb(source.dim(r), static_cast<int>(basis[r].size()));
        out.complex.basis[r].reserve(basis[r].size());
        for (std::size_t k = 0; k < basis[r].size(); ++k) {
            const auto& v = basis[r][k];
            emb(v.col, static_cast<int>(k)) = 1;
            if (v.rep >= 0) {
                emb(v.rep, static_cast<int>(k)) = -1;
                out.complex.basis[r].push_back(source.basis[r][v.col] + "-" + source.basis[r][v.rep]);
            } else {
                out.complex.basis[r].push_back(source.basis[r][v.col]);
            }
        }
        out.embedding[r] = std::move(emb);
    }

    // Coordinates of a kernel vector w: the entry at each basis vector's free
    // column; leader-column entries are determined and checked.
    auto coords = [&](int r, const std::vector<Integer>& w, IntMat& into, int col) {
        std::vector<Integer> residue(source.dim(r));
        for (int c = 0; c < source.dim(r); ++c) {
            if (pos_of[r][c] >= 0) {
                into(pos_of[r][c], col) = w[c];
                if (leader[r][c] >= 0) residue[leader[r][c]] += w[c];
            }
        }
        for (int c = 0; c < source.dim(r); ++c)
            if (leader[r][c] == c && w[c] + residue[c] != 0)
                throw std::logic_error("kernel complex: boundary left the kernel");
    };

    for (int r = 0; r < degs; ++r) {
        const int k = static_cast<int>(basis[r].size());
        const int rows = r == 0 ? 0 : static_cast<int>(basis[r - 1].size());
        IntMat d(rows, k);
        if (r >= 1) {
            for (int j = 0; j < k; ++j) {
                std::vector<Integer> w(source.dim(r - 1));
                const auto& v = basis[r][j];
                for (int i = 0; i < source.dim(r - 1); ++i) {
                    w[i] = source.boundary[r](i, v.col);
                    if (v.rep >= 0) w[i] -= source.boundary[r](i, v.rep);
                }
                coords(r - 1, w, d, j);
            }
        }
        out.complex.boundary[r] = std::move(d);
    }
    return out;
}

} // namespace fintop
