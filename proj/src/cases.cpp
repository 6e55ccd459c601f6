#include "esrhd/cases.hpp"

#include <cmath>

#include "esrhd/errors.hpp"
#include "esrhd/state.hpp"

namespace esrhd {

double riemann_invariant_minus(double gamma, double v, double cs) {
    const double s = std::sqrt(gamma - 1.0);
    return std::atanh(v) - std::log((s + cs) / (s - cs)) / s;
}

double isentropic_velocity(double gamma, double K, double rho) {
    if (!(gamma > 1.0 && gamma <= 2.0) || !(K > 0.0) || !(rho > 0.0))
        throw DomainError("isentropic_velocity: need 1 < gamma <= 2, K > 0, rho > 0");
    const EosModel eos(EosKind::ID, gamma);
    const auto cs = [&](double r) { return std::sqrt(eos.sound_speed_sq(K * std::pow(r, gamma - 1.0))); };
    const double s = std::sqrt(gamma - 1.0);
    const double j0 = riemann_invariant_minus(gamma, 0.0, cs(1.0));
    // atanh(v) is explicit once c_s is fixed by rho
    const double c = cs(rho);
    const double v = std::tanh(j0 + std::log((s + c) / (s - c)) / s);
    if (!(std::abs(v) < 1.0)) throw DomainError("isentropic_velocity: superluminal result");
    return v;
}

namespace {

Prim1 p1(double rho, double v, double p) {
    Prim1 V;
    V.rho = rho;
    V.v = {v};
    V.p = p;
    return V;
}

Prim2 p2(double rho, double v1, double v2, double p) {
    Prim2 V;
    V.rho = rho;
    V.v = {v1, v2};
    V.p = p;
    return V;
}

CaseSpec riemann_1d(const std::string& id, const std::string& eos, Prim1 L, Prim1 R, double cfl,
                    const std::string& desc) {
    CaseSpec c;
    c.id = id;
    c.description = desc;
    c.eos = eos;
    c.n = {400, 1};
    c.t_final = 0.4;
    c.cfl = cfl;
    c.reference = ReferencePolicy::Llf;
    c.sample1 = [L, R](double x, double) { return x < 0.5 ? L : R; };
    return c;
}

CaseSpec riemann_2d(const std::string& id, const std::string& eos, Prim2 ne, Prim2 nw, Prim2 sw, Prim2 se,
                    const std::string& desc) {
    CaseSpec c;
    c.id = id;
    c.description = desc;
    c.dim = 2;
    c.eos = eos;
    c.n = {400, 400};
    c.t_final = 0.4;
    c.sample2 = [=](double x, double y, double) {
        const bool east = x >= 0.5, north = y >= 0.5;
        if (north) return east ? ne : nw;
        return east ? se : sw;
    };
    return c;
}

CaseSpec shock_bubble(const std::string& id, double rho_b, const std::string& desc) {
    CaseSpec c;
    c.id = id;
    c.description = desc;
    c.dim = 2;
    c.eos = "rc";
    c.lo = {0.0, 0.0};
    c.hi = {325.0, 90.0};
    c.n = {650, 180};
    c.t_final = 450.0;
    c.snapshot_times = {90.0, 180.0, 270.0, 360.0, 450.0};
    const Prim2 pre = p2(1.0, 0.0, 0.0, 0.05);
    const Prim2 post = p2(1.941272902134272, -0.200661045980881, 0.0, 0.15);
    const Prim2 bubble = p2(rho_b, 0.0, 0.0, 0.05);
    c.bc2.side[0].kind = BcKind::Outflow;
    c.bc2.side[1].kind = BcKind::Inflow;
    c.bc2.side[1].state = post;
    c.bc2.side[2].kind = BcKind::Reflective;
    c.bc2.side[3].kind = BcKind::Reflective;
    c.sample2 = [=](double x, double y, double) {
        if (x >= 265.0) return post;
        if (std::hypot(x - 215.0, y - 45.0) <= 25.0) return bubble;
        return pre;
    };
    return c;
}

std::vector<CaseSpec> build_catalog() {
    std::vector<CaseSpec> cat;
    {
        CaseSpec c;
        c.id = "smooth1d";
        c.description = "sine wave advected at v = 0.2, TM EOS, periodic";
        c.eos = "tm";
        c.lo = {0.0, 0.0};
        c.hi = {2.0 * M_PI, 1.0};
        c.n = {40, 1};
        c.t_final = 1.5;
        c.reference = ReferencePolicy::Exact;
        c.bc1 = BoundarySpec<1>::all(BcKind::Periodic);
        c.sample1 = [](double x, double t) { return p1(1.0 + 0.2 * std::sin(x - 0.2 * t), 0.2, 1.0); };
        cat.push_back(c);
    }
    {
        CaseSpec c;
        c.id = "isentropic";
        c.description = "isentropic pulse with constant J-, ID EOS gamma = 5/3, K = 100, L = 0.3";
        c.eos = "id";
        c.gamma = 5.0 / 3.0;
        c.lo = {-0.4, 0.0};
        c.hi = {2.0, 1.0};
        c.n = {200, 1};
        c.t_final = 0.8;
        c.cfl = 0.2;
        c.bc1 = BoundarySpec<1>::all(BcKind::Periodic);
        c.sample1 = [g = c.gamma](double x, double) {
            constexpr double K = 100.0, L = 0.3;
            const double rho = std::abs(x) < L ? 1.0 + std::exp(-1.0 / (1.0 - x * x / (L * L))) : 1.0;
            const double v = std::abs(x) < L ? isentropic_velocity(g, K, rho) : 0.0;
            return p1(rho, v, K * std::pow(rho, g));
        };
        cat.push_back(c);
    }
    {
        CaseSpec c;
        c.id = "density_pert";
        c.description = "shock running into a sine density perturbation, RC EOS";
        c.eos = "rc";
        c.n = {400, 1};
        c.t_final = 0.376;
        c.reference = ReferencePolicy::Llf;
        c.sample1 = [](double x, double) {
            return x < 0.5 ? p1(5.0, 0.0, 50.0) : p1(2.0 + 0.3 * std::sin(50.0 * x), 0.0, 5.0);
        };
        cat.push_back(c);
    }
    {
        CaseSpec c;
        c.id = "blast";
        c.description = "interaction of two blast waves, TM EOS";
        c.eos = "tm";
        c.n = {4000, 1};
        c.t_final = 0.43;
        c.reference = ReferencePolicy::Llf;
        c.sample1 = [](double x, double) {
            if (x < 0.1) return p1(1.0, 0.0, 1e3);
            if (x < 0.9) return p1(1.0, 0.0, 1e-2);
            return p1(1.0, 0.0, 1e2);
        };
        cat.push_back(c);
    }
    cat.push_back(riemann_1d("rp1", "rc", p1(10.0, 0.0, 40.0 / 3.0), p1(1.0, 0.0, 1e-6), 0.1,
                             "Riemann problem I: rarefaction, contact, shock; RC EOS"));
    cat.push_back(riemann_1d("rp2", "tm", p1(1.0, 0.0, 1e3), p1(1.0, 0.0, 1e-2), 0.4,
                             "Riemann problem II: thin shell behind the shock; TM EOS"));
    cat.push_back(riemann_1d("rp3", "rc", p1(1.0, 0.9, 1.0), p1(1.0, 0.0, 10.0), 0.4,
                             "Riemann problem III: two shocks and a contact; RC EOS"));
    cat.push_back(riemann_1d("rp4", "ip", p1(1.0, -0.7, 20.0), p1(1.0, 0.7, 20.0), 0.4,
                             "Riemann problem IV: two rarefactions and a contact; IP EOS"));
    {
        CaseSpec c;
        c.id = "smooth2d";
        c.description = "diagonal sine wave advected at v = (0.2, 0.2), periodic";
        c.dim = 2;
        c.eos = "rc";
        c.lo = {0.0, 0.0};
        c.hi = {2.0 * M_PI, 2.0 * M_PI};
        c.n = {40, 40};
        c.t_final = 0.1;
        c.reference = ReferencePolicy::Exact;
        c.bc2 = BoundarySpec<2>::all(BcKind::Periodic);
        c.sample2 = [](double x, double y, double t) {
            return p2(1.0 + 0.2 * std::sin(x + y - 0.4 * t), 0.2, 0.2, 1.0);
        };
        cat.push_back(c);
    }
    cat.push_back(riemann_2d("rp2d_1", "ip", p2(0.5, 0.5, -0.5, 5.0), p2(1.0, 0.5, 0.5, 5.0),
                             p2(3.0, -0.5, 0.5, 5.0), p2(1.5, -0.5, -0.5, 5.0),
                             "2D Riemann problem I: four contacts forming a spiral; IP EOS"));
    cat.push_back(riemann_2d("rp2d_2", "tm", p2(1.0, 0.0, 0.0, 1.0), p2(0.5771, -0.3529, 0.0, 0.4),
                             p2(1.0, -0.3529, -0.3529, 1.0), p2(0.5771, 0.0, -0.3529, 0.4),
                             "2D Riemann problem II: four rarefactions; TM EOS"));
    cat.push_back(riemann_2d("rp2d_3", "rc", p2(0.035145216124503, 0.0, 0.0, 0.162931056509027),
                             p2(0.1, 0.7, 0.0, 1.0), p2(0.5, 0.0, 0.0, 1.0), p2(0.1, 0.0, 0.7, 1.0),
                             "2D Riemann problem III: two contacts and two shocks; RC EOS"));
    cat.push_back(shock_bubble("shock_bubble_light", 0.1358, "shock hitting a light bubble; RC EOS"));
    cat.push_back(shock_bubble("shock_bubble_heavy", 3.1538, "shock hitting a heavy bubble; RC EOS"));
    return cat;
}

}  // namespace

const std::vector<CaseSpec>& catalog() {
    static const std::vector<CaseSpec> cat = build_catalog();
    return cat;
}

const CaseSpec& find_case(const std::string& id) {
    for (const auto& c : catalog())
        if (c.id == id) return c;
    std::string ids;
    for (const auto& c : catalog()) ids += (ids.empty() ? "" : ", ") + c.id;
    throw DomainError("unknown case '" + id + "' (known: " + ids + ")");
}

}  // namespace esrhd
