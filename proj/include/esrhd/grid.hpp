#pragma once

#include <array>
#include <string>
#include <vector>

#include "esrhd/eos.hpp"
#include "esrhd/types.hpp"

namespace esrhd {

/// Uniform grid with `ghost` layers on every side.
template <int Dim>
struct Grid {
    std::array<int, Dim> n{};
    std::array<double, Dim> lo{};
    std::array<double, Dim> hi{};
    int ghost = 4;

    Grid() = default;
    Grid(std::array<int, Dim> n_, std::array<double, Dim> lo_, std::array<double, Dim> hi_, int ghost_ = 4);

    double dx(int axis) const { return (hi[axis] - lo[axis]) / n[axis]; }
    double center(int axis, int i) const { return lo[axis] + (i + 0.5) * dx(axis); }
    double cell_volume() const;
    std::size_t interior_cells() const;
    int padded(int axis) const { return n[axis] + 2 * ghost; }
    std::size_t padded_cells() const;
    /// Linear padded index of interior coordinates (may be negative / >= n for ghosts).
    std::size_t index(int i, int j = 0) const;
    /// Linear interior index, row-major over (j, i).
    std::size_t interior_index(int i, int j = 0) const;
};

enum class BcKind { Periodic, Outflow, Reflective, Inflow };

template <int Dim>
struct SideBc {
    BcKind kind = BcKind::Outflow;
    Prim<Dim> state{};  // exterior state for Inflow
};

/// Sides ordered x-, x+, y-, y+.
template <int Dim>
struct BoundarySpec {
    std::array<SideBc<Dim>, 2 * Dim> side{};

    static BoundarySpec all(BcKind kind);
    /// Throws DomainError if only one side of a periodic pair is periodic.
    void validate() const;
};

/// Per-cell conservative and primitive storage including ghost layers.
template <int Dim>
struct Field {
    Grid<Dim> grid;
    std::vector<Vec<Dim>> U;
    std::vector<Prim<Dim>> V;

    Field() = default;
    explicit Field(const Grid<Dim>& g) : grid(g), U(g.padded_cells(), Vec<Dim>::Zero()), V(g.padded_cells()) {}
};

/// Fill ghost cells (both U and V) from the interior.
template <int Dim>
void apply_bc(Field<Dim>& f, const BoundarySpec<Dim>& bc, const EosModel& eos);

}  // namespace esrhd
