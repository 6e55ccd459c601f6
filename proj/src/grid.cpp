#include "esrhd/grid.hpp"

#include "esrhd/errors.hpp"
#include "esrhd/state.hpp"

namespace esrhd {

template <int Dim>
Grid<Dim>::Grid(std::array<int, Dim> n_, std::array<double, Dim> lo_, std::array<double, Dim> hi_, int ghost_)
    : n(n_), lo(lo_), hi(hi_), ghost(ghost_) {
    for (int a = 0; a < Dim; ++a) {
        if (n[a] < 1) throw DomainError("grid: cell count must be positive");
        if (!(hi[a] > lo[a])) throw DomainError("grid: empty domain");
    }
    if (ghost < 1) throw DomainError("grid: ghost width must be positive");
}

template <int Dim>
double Grid<Dim>::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < Dim; ++a) v *= dx(a);
    return v;
}

template <int Dim>
std::size_t Grid<Dim>::interior_cells() const {
    std::size_t c = 1;
    for (int a = 0; a < Dim; ++a) c *= static_cast<std::size_t>(n[a]);
    return c;
}

template <int Dim>
std::size_t Grid<Dim>::padded_cells() const {
    std::size_t c = 1;
    for (int a = 0; a < Dim; ++a) c *= static_cast<std::size_t>(padded(a));
    return c;
}

template <int Dim>
std::size_t Grid<Dim>::index(int i, int j) const {
    if constexpr (Dim == 1) {
        return static_cast<std::size_t>(i + ghost);
    } else {
        return static_cast<std::size_t>(j + ghost) * padded(0) + static_cast<std::size_t>(i + ghost);
    }
}

template <int Dim>
std::size_t Grid<Dim>::interior_index(int i, int j) const {
    if constexpr (Dim == 1) {
        return static_cast<std::size_t>(i);
    } else {
        return static_cast<std::size_t>(j) * n[0] + static_cast<std::size_t>(i);
    }
}

template <int Dim>
BoundarySpec<Dim> BoundarySpec<Dim>::all(BcKind kind) {
    BoundarySpec b;
    for (auto& s : b.side) s.kind = kind;
    return b;
}

template <int Dim>
void BoundarySpec<Dim>::validate() const {
    for (int a = 0; a < Dim; ++a) {
        const bool lp = side[2 * a].kind == BcKind::Periodic;
        const bool hp = side[2 * a + 1].kind == BcKind::Periodic;
        if (lp != hp) throw DomainError("boundary: periodic must be set on both sides of an axis");
    }
}

namespace {

// Sources are the wrapped, nearest and mirrored interior cells for this ghost.
template <int Dim>
void fill_ghost(Field<Dim>& f, const SideBc<Dim>& s, int axis, std::size_t dst, std::size_t periodic_src,
                std::size_t near_src, std::size_t mirror_src, const EosModel& eos) {
    switch (s.kind) {
        case BcKind::Periodic:
            f.U[dst] = f.U[periodic_src];
            f.V[dst] = f.V[periodic_src];
            break;
        case BcKind::Outflow:
            f.U[dst] = f.U[near_src];
            f.V[dst] = f.V[near_src];
            break;
        case BcKind::Reflective:
            f.U[dst] = f.U[mirror_src];
            f.V[dst] = f.V[mirror_src];
            f.U[dst][1 + axis] = -f.U[dst][1 + axis];
            f.V[dst].v[axis] = -f.V[dst].v[axis];
            break;
        case BcKind::Inflow:
            f.V[dst] = s.state;
            f.U[dst] = prim_to_cons(eos, s.state);
            break;
    }
}

}  // namespace

template <int Dim>
void apply_bc(Field<Dim>& f, const BoundarySpec<Dim>& bc, const EosModel& eos) {
    const Grid<Dim>& g = f.grid;
    const int G = g.ghost;
    const int nx = g.n[0];
    const int rows = Dim == 2 ? g.n[Dim - 1] : 1;
    for (int j = 0; j < rows; ++j) {
        for (int m = 0; m < G; ++m) {
            // x- side: ghost at -1-m
            fill_ghost(f, bc.side[0], 0, g.index(-1 - m, j),
                       g.index(((nx - 1 - m) % nx + nx) % nx, j), g.index(0, j),
                       g.index(std::min(m, nx - 1), j), eos);
            fill_ghost(f, bc.side[1], 0, g.index(nx + m, j), g.index(m % nx, j),
                       g.index(nx - 1, j), g.index(std::max(nx - 1 - m, 0), j), eos);
        }
    }
    if constexpr (Dim == 2) {
        const int ny = g.n[1];
        for (int i = 0; i < nx; ++i) {
            for (int m = 0; m < G; ++m) {
                fill_ghost(f, bc.side[2], 1, g.index(i, -1 - m),
                           g.index(i, ((ny - 1 - m) % ny + ny) % ny), g.index(i, 0),
                           g.index(i, std::min(m, ny - 1)), eos);
                fill_ghost(f, bc.side[3], 1, g.index(i, ny + m), g.index(i, m % ny),
                           g.index(i, ny - 1), g.index(i, std::max(ny - 1 - m, 0)), eos);
            }
        }
    }
}

template struct Grid<1>;
template struct Grid<2>;
template struct BoundarySpec<1>;
template struct BoundarySpec<2>;
template void apply_bc<1>(Field<1>&, const BoundarySpec<1>&, const EosModel&);
template void apply_bc<2>(Field<2>&, const BoundarySpec<2>&, const EosModel&);

}  // namespace esrhd
