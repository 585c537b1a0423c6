#include "pzt/fd_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace pzt {

namespace {

// General banded matrix, kl sub- and ku super-diagonals, stored column-major
// LAPACK style with kl extra rows of headroom for pivot fill (so the same
// buffer can be factored in place).
class BandMatrix {
public:
    BandMatrix(int n, int kl, int ku)
        : n_(n), kl_(kl), ku_(ku), ld_(2 * kl + ku + 1),
          ab_(static_cast<std::size_t>(ld_) * n_, 0.0)
    {
    }

    int size() const { return n_; }
    int kl() const { return kl_; }
    int ku() const { return ku_; }

    bool in_band(int i, int j) const { return i - j <= kl_ && j - i <= ku_; }

    double& at(int i, int j) { return ab_[index(i, j)]; }
    double get(int i, int j) const { return ab_[index(i, j)]; }

    template <typename Fn> void for_each(Fn&& fn) const
    {
        for (int j = 0; j < n_; ++j) {
            const int lo = std::max(0, j - ku_);
            const int hi = std::min(n_ - 1, j + kl_);
            for (int i = lo; i <= hi; ++i)
                fn(i, j, ab_[index(i, j)]);
        }
    }

    template <typename Fn> void for_each_mut(Fn&& fn)
    {
        for (int j = 0; j < n_; ++j) {
            const int lo = std::max(0, j - ku_);
            const int hi = std::min(n_ - 1, j + kl_);
            for (int i = lo; i <= hi; ++i)
                fn(i, j, ab_[index(i, j)]);
        }
    }

private:
    std::size_t index(int i, int j) const
    {
        // row offset kl+ku keeps i in [j-ku-kl, j+kl] representable
        return static_cast<std::size_t>(j) * ld_ + (kl_ + ku_ + i - j);
    }

    int n_, kl_, ku_, ld_;
    std::vector<double> ab_;
};

// LU factors of a band matrix with partial pivoting.  The effective upper
// bandwidth grows to kl+ku from row interchanges.
class BandLU {
public:
    explicit BandLU(const BandMatrix& a)
        : n_(a.size()), kl_(a.kl()), kuf_(a.kl() + a.ku()), ld_(2 * a.kl() + a.ku() + 1),
          fab_(static_cast<std::size_t>(ld_) * n_, 0.0), piv_(n_)
    {
        a.for_each([&](int i, int j, double v) { entry(i, j) = v; });
        factor();
    }

    bool singular() const { return singular_; }

    void solve(std::vector<double>& b) const
    {
        for (int j = 0; j < n_; ++j) {
            if (piv_[j] != j)
                std::swap(b[j], b[piv_[j]]);
            const int hi = std::min(n_ - 1, j + kl_);
            for (int i = j + 1; i <= hi; ++i)
                b[i] -= entry_const(i, j) * b[j];
        }
        for (int j = n_ - 1; j >= 0; --j) {
            b[j] /= entry_const(j, j);
            const int lo = std::max(0, j - kuf_);
            for (int i = lo; i < j; ++i)
                b[i] -= entry_const(i, j) * b[j];
        }
    }

private:
    // Entry (i, j) for i in [j - kuf, j + kl]; offset kuf + i - j spans
    // [0, kuf + kl] = [0, ld - 1].
    double& entry(int i, int j)
    {
        return fab_[static_cast<std::size_t>(j) * ld_ + (kuf_ + i - j)];
    }

    double entry_const(int i, int j) const
    {
        return fab_[static_cast<std::size_t>(j) * ld_ + (kuf_ + i - j)];
    }

    void factor()
    {
        for (int j = 0; j < n_; ++j) {
            const int hi = std::min(n_ - 1, j + kl_);
            int ip = j;
            double vmax = std::fabs(entry(j, j));
            for (int i = j + 1; i <= hi; ++i) {
                const double v = std::fabs(entry(i, j));
                if (v > vmax) {
                    vmax = v;
                    ip = i;
                }
            }
            piv_[j] = ip;
            if (vmax == 0.0) {
                singular_ = true;
                return;
            }
            const int jhi = std::min(n_ - 1, j + kuf_);
            if (ip != j)
                for (int jj = j; jj <= jhi; ++jj)
                    std::swap(entry(j, jj), entry(ip, jj));
            const double d = entry(j, j);
            for (int i = j + 1; i <= hi; ++i) {
                const double l = entry(i, j) / d;
                entry(i, j) = l;
                if (l != 0.0)
                    for (int jj = j + 1; jj <= jhi; ++jj)
                        entry(i, jj) -= l * entry(j, jj);
            }
        }
    }

    int n_, kl_, kuf_, ld_;
    std::vector<double> fab_;
    std::vector<int> piv_;
    bool singular_ = false;
};

// Symmetric (Ruiz) scaling: a few sweeps of dividing rows and columns by the
// square roots of their largest magnitudes.  The assembled system mixes
// stiffness-scale and permittivity-scale rows, so this is what keeps the
// pivots meaningful across many decades.
struct Scaling {
    std::vector<double> row, col;
};

Scaling equilibrate(BandMatrix& a)
{
    const int n = a.size();
    Scaling s{std::vector<double>(n, 1.0), std::vector<double>(n, 1.0)};
    for (int sweep = 0; sweep < 4; ++sweep) {
        std::vector<double> rmax(n, 0.0), cmax(n, 0.0);
        a.for_each([&](int i, int j, double v) {
            const double m = std::fabs(v);
            rmax[i] = std::max(rmax[i], m);
            cmax[j] = std::max(cmax[j], m);
        });
        std::vector<double> rs(n), cs(n);
        for (int i = 0; i < n; ++i)
            rs[i] = rmax[i] > 0.0 ? 1.0 / std::sqrt(rmax[i]) : 1.0;
        for (int j = 0; j < n; ++j)
            cs[j] = cmax[j] > 0.0 ? 1.0 / std::sqrt(cmax[j]) : 1.0;
        a.for_each_mut([&](int i, int j, double& v) { v *= rs[i] * cs[j]; });
        for (int i = 0; i < n; ++i)
            s.row[i] *= rs[i];
        for (int j = 0; j < n; ++j)
            s.col[j] *= cs[j];
    }
    return s;
}

// Solves A x = b for the unscaled system: equilibrate, factor, solve, then
// one iterative-refinement step with the residual accumulated in long double
// against the original matrix.
std::vector<double> solve_banded(const BandMatrix& a_orig, const std::vector<double>& b)
{
    BandMatrix a = a_orig;
    const Scaling s = equilibrate(a);
    BandLU lu(a);
    if (lu.singular())
        fail(Errc::singular_system, "zero pivot in the banded factorization");

    const int n = a.size();
    auto scaled_solve = [&](const std::vector<double>& rhs) {
        std::vector<double> y(n);
        for (int i = 0; i < n; ++i)
            y[i] = rhs[i] * s.row[i];
        lu.solve(y);
        for (int j = 0; j < n; ++j)
            y[j] *= s.col[j];
        return y;
    };

    std::vector<double> x = scaled_solve(b);
    std::vector<long double> res(n);
    for (int i = 0; i < n; ++i)
        res[i] = b[i];
    a_orig.for_each(
        [&](int i, int j, double v) { res[i] -= static_cast<long double>(v) * x[j]; });
    std::vector<double> resd(n);
    for (int i = 0; i < n; ++i)
        resd[i] = static_cast<double>(res[i]);
    const std::vector<double> dx = scaled_solve(resd);
    for (int j = 0; j < n; ++j)
        x[j] += dx[j];
    return x;
}

// Scalar coefficients of the five nodal equations for one orientation:
// mechanical rows carry (stiffness, thermal, piezo) multipliers of
// (u_f'', T', phi''); the heat and charge rows are shared via ReducedParams.
struct RowCoeffs {
    // mechanical equation of displacement component f: cu[f]*u_f'' +
    // ep[f]*phi'' - bt[f]*T' = 0
    double cu[3], ep[3], bt[3];
};

RowCoeffs interior_rows(const Material& m, Orientation o)
{
    RowCoeffs r{};
    if (o == Orientation::thickness1) {
        r.cu[0] = m.c11;
        r.bt[0] = m.beta1;
        r.cu[1] = m.c66;
        r.cu[2] = m.c44;
        r.ep[2] = m.e15;
    } else {
        r.cu[0] = m.c44;
        r.cu[1] = m.c44;
        r.cu[2] = m.c33;
        r.bt[2] = m.beta3;
        r.ep[2] = m.e33;
    }
    return r;
}

// Traction rows at the upper face: tbar[k] = sum_f cu[k][f]*u_f' +
// ep[k]*phi' - bt[k]*T.  Component ordering matches the boundary data.
struct TractionRow {
    double cu[3]{}, ep = 0, bt = 0, datum = 0;
};

std::array<TractionRow, 3> traction_rows(const ProblemSpec& spec)
{
    const Material& m = spec.material;
    const BoundaryData& d = spec.data;
    std::array<TractionRow, 3> rows{};
    if (spec.orientation == Orientation::thickness1) {
        rows[0].cu[0] = m.c11;
        rows[0].bt = m.beta1;
        rows[0].datum = d.tbar1; // t11
        rows[1].cu[1] = m.c66;
        rows[1].datum = d.tbar2; // t12
        rows[2].cu[2] = m.c44;
        rows[2].ep = m.e15;
        rows[2].datum = d.tbar3; // t13
    } else {
        rows[0].cu[2] = m.c33;
        rows[0].ep = m.e33;
        rows[0].bt = m.beta3;
        rows[0].datum = d.tbar1; // t33
        rows[1].cu[1] = m.c44;
        rows[1].datum = d.tbar2; // t32
        rows[2].cu[0] = m.c44;
        rows[2].datum = d.tbar3; // t31
    }
    return rows;
}

} // namespace

DiscreteSolution solve_fd(const ProblemSpec& spec, const Grid& grid)
{
    check_problem(spec);
    validate_material(spec.material);
    if (grid.n < 8)
        fail(Errc::grid_too_coarse, "finite-difference grid needs at least 8 intervals");
    if (grid.h != spec.h)
        fail(Errc::spec_mismatch, "grid half-thickness differs from the problem's");

    const int n = grid.n;
    const int nodes = n + 1;
    const int nun = 5 * nodes;
    const double dx = grid.spacing();
    const ReducedParams p = reduce(spec.material, spec.orientation);
    const RowCoeffs rc = interior_rows(spec.material, spec.orientation);
    const BoundaryData& d = spec.data;

    // Each row touches at most three consecutive nodes of five unknowns.
    BandMatrix A(nun, 14, 14);
    std::vector<double> b(nun, 0.0);
    auto idx = [](int node, int field) { return 5 * node + field; };

    const double inv_dx2 = 1.0 / (dx * dx);
    const double inv_2dx = 1.0 / (2.0 * dx);

    // Interior nodes: five field equations with central stencils.
    for (int i = 1; i < n; ++i) {
        for (int f = 0; f < 3; ++f) {
            const int row = idx(i, f);
            A.at(row, idx(i - 1, f)) += rc.cu[f] * inv_dx2;
            A.at(row, idx(i, f)) += -2.0 * rc.cu[f] * inv_dx2;
            A.at(row, idx(i + 1, f)) += rc.cu[f] * inv_dx2;
            if (rc.ep[f] != 0.0) {
                A.at(row, idx(i - 1, 4)) += rc.ep[f] * inv_dx2;
                A.at(row, idx(i, 4)) += -2.0 * rc.ep[f] * inv_dx2;
                A.at(row, idx(i + 1, 4)) += rc.ep[f] * inv_dx2;
            }
            if (rc.bt[f] != 0.0) {
                A.at(row, idx(i + 1, 3)) += -rc.bt[f] * inv_2dx;
                A.at(row, idx(i - 1, 3)) += rc.bt[f] * inv_2dx;
            }
        }
        {
            // heat: -k T'' + k' phi'' = 0
            const int row = idx(i, 3);
            A.at(row, idx(i - 1, 3)) += -p.k * inv_dx2;
            A.at(row, idx(i, 3)) += 2.0 * p.k * inv_dx2;
            A.at(row, idx(i + 1, 3)) += -p.k * inv_dx2;
            A.at(row, idx(i - 1, 4)) += p.kprime * inv_dx2;
            A.at(row, idx(i, 4)) += -2.0 * p.kprime * inv_dx2;
            A.at(row, idx(i + 1, 4)) += p.kprime * inv_dx2;
        }
        {
            // charge: e u3'' + omega T' - eps phi'' = 0
            const int row = idx(i, 4);
            A.at(row, idx(i - 1, 2)) += p.e * inv_dx2;
            A.at(row, idx(i, 2)) += -2.0 * p.e * inv_dx2;
            A.at(row, idx(i + 1, 2)) += p.e * inv_dx2;
            A.at(row, idx(i + 1, 3)) += p.omega * inv_2dx;
            A.at(row, idx(i - 1, 3)) += -p.omega * inv_2dx;
            A.at(row, idx(i - 1, 4)) += -p.eps * inv_dx2;
            A.at(row, idx(i, 4)) += 2.0 * p.eps * inv_dx2;
            A.at(row, idx(i + 1, 4)) += -p.eps * inv_dx2;
        }
    }

    // Lower face x = -h: clamped displacements, prescribed inward heat flux,
    // and the variant's electric condition.  One-sided first derivative:
    // f'(x_0) ~ (-3 f_0 + 4 f_1 - f_2) / (2 dx).
    const double os0 = -3.0 * inv_2dx, os1 = 4.0 * inv_2dx, os2 = -1.0 * inv_2dx;
    for (int f = 0; f < 3; ++f) {
        A.at(idx(0, f), idx(0, f)) = 1.0;
        b[idx(0, f)] = f == 0 ? d.ubar1 : (f == 1 ? d.ubar2 : d.ubar3);
    }
    {
        // inward flux: -q = k T' - k' phi' = qbar
        const int row = idx(0, 3);
        A.at(row, idx(0, 3)) += p.k * os0;
        A.at(row, idx(1, 3)) += p.k * os1;
        A.at(row, idx(2, 3)) += p.k * os2;
        A.at(row, idx(0, 4)) += -p.kprime * os0;
        A.at(row, idx(1, 4)) += -p.kprime * os1;
        A.at(row, idx(2, 4)) += -p.kprime * os2;
        b[row] = d.qbar;
    }
    {
        const int row = idx(0, 4);
        if (spec.variant == Variant::charge) {
            // inward normal electric displacement: -e u3' + eps phi' - omega T = Dbar
            A.at(row, idx(0, 2)) += -p.e * os0;
            A.at(row, idx(1, 2)) += -p.e * os1;
            A.at(row, idx(2, 2)) += -p.e * os2;
            A.at(row, idx(0, 4)) += p.eps * os0;
            A.at(row, idx(1, 4)) += p.eps * os1;
            A.at(row, idx(2, 4)) += p.eps * os2;
            A.at(row, idx(0, 3)) += -p.omega;
            b[row] = d.Dbar;
        } else {
            A.at(row, idx(0, 4)) = 1.0;
            b[row] = d.phibar2;
        }
    }

    // Upper face x = +h: three tractions, then temperature and potential.
    // One-sided derivative: f'(x_n) ~ (3 f_n - 4 f_{n-1} + f_{n-2}) / (2 dx).
    const double on0 = 3.0 * inv_2dx, on1 = -4.0 * inv_2dx, on2 = 1.0 * inv_2dx;
    const auto tr = traction_rows(spec);
    for (int k = 0; k < 3; ++k) {
        const int row = idx(n, k);
        for (int f = 0; f < 3; ++f) {
            if (tr[k].cu[f] == 0.0)
                continue;
            A.at(row, idx(n, f)) += tr[k].cu[f] * on0;
            A.at(row, idx(n - 1, f)) += tr[k].cu[f] * on1;
            A.at(row, idx(n - 2, f)) += tr[k].cu[f] * on2;
        }
        if (tr[k].ep != 0.0) {
            A.at(row, idx(n, 4)) += tr[k].ep * on0;
            A.at(row, idx(n - 1, 4)) += tr[k].ep * on1;
            A.at(row, idx(n - 2, 4)) += tr[k].ep * on2;
        }
        if (tr[k].bt != 0.0)
            A.at(row, idx(n, 3)) += -tr[k].bt;
        b[row] = tr[k].datum;
    }
    A.at(idx(n, 3), idx(n, 3)) = 1.0;
    b[idx(n, 3)] = d.Tbar;
    A.at(idx(n, 4), idx(n, 4)) = 1.0;
    b[idx(n, 4)] = d.phibar;

    const std::vector<double> x = solve_banded(A, b);

    // Scaled residual of the linear system (solver quality check).
    double rnorm = 0.0, bnorm = 0.0, axnorm = 0.0;
    {
        std::vector<long double> res(nun);
        for (int i = 0; i < nun; ++i) {
            res[i] = b[i];
            bnorm = std::max(bnorm, std::fabs(b[i]));
        }
        std::vector<double> arow(nun, 0.0);
        A.for_each([&](int i, int j, double v) {
            res[i] -= static_cast<long double>(v) * x[j];
            arow[i] += std::fabs(v) * std::fabs(x[j]);
        });
        for (int i = 0; i < nun; ++i) {
            axnorm = std::max(axnorm, arow[i]);
            rnorm = std::max(rnorm, static_cast<double>(std::fabs(res[i])));
        }
    }

    DiscreteSolution sol;
    sol.spec = spec;
    sol.grid = grid;
    sol.residual_norm = rnorm / std::max(1.0, axnorm + bnorm);
    sol.u1.resize(nodes);
    sol.u2.resize(nodes);
    sol.u3.resize(nodes);
    sol.T.resize(nodes);
    sol.phi.resize(nodes);
    for (int i = 0; i < nodes; ++i) {
        sol.u1[i] = x[idx(i, 0)];
        sol.u2[i] = x[idx(i, 1)];
        sol.u3[i] = x[idx(i, 2)];
        sol.T[i] = x[idx(i, 3)];
        sol.phi[i] = x[idx(i, 4)];
    }
    return sol;
}

} // namespace pzt
