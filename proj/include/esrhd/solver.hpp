#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esrhd/dissipation.hpp"
#include "esrhd/flux_ec.hpp"
#include "esrhd/grid.hpp"
#include "esrhd/reconstruct.hpp"

namespace esrhd {

enum class SchemeKind { EC2, EC4, EC6, ES4, ES5, LLF, NonES5RF, NonES5RP3, Custom };

/// Sinusoidal dissipation coefficient of the non-ES comparison fluxes.
enum class NonEsVariant { RF, RP3 };
double non_es_coefficient(NonEsVariant variant, double t);

/// Spatial discretization: EC flux order 2k plus optional dissipation.
struct Scheme {
    SchemeKind kind = SchemeKind::EC2;
    int k = 1;
    bool dissipative = false;
    ReconKind recon = ReconKind::Jump;
    bool llf = false;

    /// ec2, ec4, ec6, es4, es5, llf, nones5_rf, nones5_rp3.
    static Scheme from_name(const std::string& name);
    /// EC order 2k with dissipation reconstructed by `recon` (coefficient 1/2).
    static Scheme custom(int k, bool dissipative, ReconKind recon);
    static const std::vector<std::string>& names();
    std::string name() const;

    /// Factor in front of R |Lambda| <<omega>> at time t.
    double dissipation_coef(double t) const;
    /// Ghost cells needed.
    int half_width() const;
};

/// Abstract semi-discrete system du/dt = L(t, u) on a flat state vector.
class OdeSystem {
public:
    virtual ~OdeSystem() = default;
    virtual std::size_t size() const = 0;
    /// Writes L(t, u) and returns sum_i W(u_i) . L_i * volume.
    virtual double rhs(double t, std::span<const double> u, std::span<double> dudt) = 0;
    /// Total entropy of u.
    virtual double entropy(std::span<const double> u) = 0;
    /// entropy(u + g d) - entropy(u); override for a cancellation-free form.
    virtual double entropy_change(std::span<const double> u, std::span<const double> d, double g);
    /// g -> entropy_change(u, d, g) for repeated evaluation; u and d must outlive the result.
    virtual std::function<double(double)> entropy_change_fn(std::span<const double> u, std::span<const double> d);
};

/// Right-hand side of the finite-difference scheme on a uniform grid.
template <int Dim>
class SemiDiscrete final : public OdeSystem {
public:
    static constexpr int kVars = Dim + 2;

    SemiDiscrete(const Grid<Dim>& grid, const EosModel& eos, const Scheme& scheme, DissipationMode mode,
                 const BoundarySpec<Dim>& bc);

    const Grid<Dim>& grid() const { return field_.grid; }
    const EosModel& eos() const { return eos_; }
    const Scheme& scheme() const { return scheme_; }
    const BoundarySpec<Dim>& boundary() const { return bc_; }

    std::size_t size() const override { return field_.grid.interior_cells() * kVars; }
    double rhs(double t, std::span<const double> u, std::span<double> dudt) override;
    double entropy(std::span<const double> u) override;
    double entropy_change(std::span<const double> u, std::span<const double> d, double g) override;
    std::function<double(double)> entropy_change_fn(std::span<const double> u, std::span<const double> d) override;

    /// Recover primitives of u, fill ghosts; afterwards field() holds u.
    void load(std::span<const double> u);
    const Field<Dim>& field() const { return field_; }

    /// sum over directions of max|lambda| / dx, for the state last loaded.
    double max_rate() const;
    /// CFL step for u: cfl / max_rate.
    double cfl_dt(std::span<const double> u, double cfl);

    /// Flat interior vector from primitive samples.
    std::vector<double> pack(const std::vector<Prim<Dim>>& prims) const;
    /// Primitive state of each interior cell of u.
    std::vector<Prim<Dim>> unpack(std::span<const double> u);

    /// Interface fluxes along the line of direction `dir` through interior
    /// row/column `line` of the loaded field; F[i + 1] is the flux at i + 1/2.
    void line_fluxes(double t, int dir, int line, std::vector<Vec<Dim>>& F);

private:
    Prim<Dim> recover(const Vec<Dim>& U, std::size_t cell, bool store);
    void prepare_cells();

    Field<Dim> field_;
    EosModel eos_;
    Scheme scheme_;
    DissipationMode mode_;
    BoundarySpec<Dim> bc_;
    std::vector<double> p_guess_;
    std::vector<ParamVars<Dim>> z_;
    std::vector<Vec<Dim>> W_;
    // per-line work buffers
    std::vector<std::size_t> line_idx_;
    std::vector<Vec<Dim>> two_point_[3];
    std::vector<Vec<Dim>> flux_buf_;
    std::vector<Vec<Dim>> phys_;
    std::vector<double> speed_;
    std::vector<double> cell_work_;
};

}  // namespace esrhd
