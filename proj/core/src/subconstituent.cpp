#include "tautdrg/subconstituent.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "tautdrg/error.hpp"

namespace tautdrg {

namespace {

double dbl(std::int64_t v) { return static_cast<double>(v); }

// ||a - b|| / max(1, ||a||, ||b||)
double vres(const Vector& a, const Vector& b)
{
    return (a - b).norm() / std::max({1.0, a.norm(), b.norm()});
}

double rel(double a, double b, double scale = 0)
{
    return std::abs(a - b) / std::max({1.0, std::abs(b), std::abs(scale)});
}

std::string at_x(int x) { return "x=" + std::to_string(x); }

std::string at(int x, const char* what, int i)
{
    return at_x(x) + " " + what + "=" + std::to_string(i);
}

// Tracks the worst residual of a family of checks and where it happened.
struct Worst {
    double value = 0;
    std::string where;

    void see(double r, const std::string& w)
    {
        if (where.empty() || r > value) {
            value = r;
            where = w;
        }
    }
};

std::vector<double> real_eigenvalues(const Matrix& m)
{
    if (m.rows() == 0)
        return {};
    Eigen::EigenSolver<Matrix> es(m, false);
    std::vector<double> out;
    for (int i = 0; i < m.rows(); ++i)
        out.push_back(es.eigenvalues()[i].real());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<double> tridiagonal_spectrum(const std::vector<double>& sub,
                                         const std::vector<double>& super)
{
    const int m = static_cast<int>(sub.size()) + 1;
    Matrix t = Matrix::Zero(m, m);
    for (int j = 0; j + 1 < m; ++j) {
        t(j + 1, j) = sub[j];
        t(j, j + 1) = super[j];
    }
    return real_eigenvalues(t);
}

double max_list_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size())
        return 1e300;
    double r = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        r = std::max(r, rel(a[i], b[i]));
    return r;
}

// E*_2 A_2 E*_2 v
Vector local_op(const GlobalContext& ctx, const DualIdempotents& duals, const Vector& v)
{
    return duals.apply(2, ctx.dm.A_i(2) * duals.apply(2, v));
}

double tau_local(const GlobalContext& ctx)
{
    return ctx.tol.cluster_for(dbl(ctx.p222));
}

bool near(double a, double b, double tau) { return std::abs(a - b) <= tau; }

}  // namespace

Vector DualIdempotents::apply(int i, const Vector& v) const
{
    Vector out = Vector::Zero(v.size());
    if (i < 0 || i > D)
        return out;
    for (int y : parts[i])
        out[y] = v[y];
    return out;
}

Matrix DualIdempotents::matrix(int i) const
{
    const int n = static_cast<int>(level.size());
    Matrix m = Matrix::Zero(n, n);
    for (int y : parts[i])
        m(y, y) = 1;
    return m;
}

DualIdempotents dual_idempotents(const GlobalContext& ctx, int x, VerificationReport& report)
{
    const int n = ctx.n();
    const int D = ctx.D();
    if (x < 0 || x >= n)
        throw ParseError("base vertex " + std::to_string(x) + " out of range 0.." +
                         std::to_string(n - 1));
    DualIdempotents duals;
    duals.x = x;
    duals.D = D;
    duals.level.resize(n);
    duals.parts.assign(D + 1, {});
    for (int y = 0; y < n; ++y) {
        duals.level[y] = ctx.dd(x, y);
        duals.parts[duals.level[y]].push_back(y);
    }

    // each vertex in exactly one part, so the E*_i are orthogonal idempotents summing to I
    std::size_t total = 0;
    bool sizes = true;
    for (int i = 0; i <= D; ++i) {
        total += duals.parts[i].size();
        sizes = sizes && dbl(duals.size(i)) == dbl(ctx.ia().k_i(i));
    }
    report.add_flag("dual idempotents partition", "sum E*_i = I, E*_i E*_j = delta_ij E*_i",
                    total == static_cast<std::size_t>(n) && sizes, at_x(x));

    if (n <= 100) {
        // count[h][j][i] = #{(y, z) : d(x,y) = h, d(x,z) = j, d(y,z) = i}
        const int s = D + 1;
        std::vector<std::int64_t> count(static_cast<std::size_t>(s) * s * s, 0);
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                ++count[(duals.level[y] * s + duals.level[z]) * s + ctx.dd(y, z)];
        bool ok = true;
        std::string witness;
        for (int h = 0; h <= D; ++h)
            for (int j = 0; j <= D; ++j)
                for (int i = 0; i <= D; ++i) {
                    const bool block_zero = count[(h * s + j) * s + i] == 0;
                    const bool p_zero = ctx.pnum(h, i, j) == 0;
                    if (block_zero != p_zero && ok) {
                        ok = false;
                        witness = "h=" + std::to_string(h) + " i=" + std::to_string(i) +
                                  " j=" + std::to_string(j);
                    }
                }
        report.add_flag("E*_h A_i E*_j vanishing pattern", "E*_h A_i E*_j = 0 iff p^h_ij = 0", ok,
                        at_x(x) + (witness.empty() ? "" : " " + witness));
    }
    return duals;
}

StandardVectors standard_vectors(const GlobalContext& ctx, const DualIdempotents& duals,
                                 VerificationReport& report)
{
    const int n = ctx.n();
    StandardVectors sv;
    sv.xhat = Vector::Zero(n);
    sv.xhat[duals.x] = 1;
    Worst w_act, w_norm;
    for (int i = 0; i <= duals.D; ++i) {
        Vector s = Vector::Zero(n);
        for (int y : duals.parts[i])
            s[y] = 1;
        w_act.see(vres(ctx.dm.A_i(i) * sv.xhat, s), at(duals.x, "i", i));
        w_norm.see(rel(s.squaredNorm(), dbl(ctx.ia().k_i(i))), at(duals.x, "i", i));
        sv.s.push_back(std::move(s));
    }
    report.add("s_i = A_i xhat", "s_i = A_i xhat", w_act.value, ctx.tol.module, w_act.where);
    report.add("||s_i||^2 = k_i", "||s_i||^2 = k_i", w_norm.value, ctx.tol.module, w_norm.where);
    return sv;
}

TModuleDescriptor module_V0(const GlobalContext& ctx, const DualIdempotents& duals,
                            const StandardVectors& sv, VerificationReport& report)
{
    const int D = ctx.D();
    const int x = duals.x;
    const auto& ia = ctx.ia();
    const double n = ctx.n();
    const Matrix& A = ctx.dm.A();

    std::vector<Vector> ex;
    Worst w_norm, w_orth;
    for (int i = 0; i <= D; ++i) {
        ex.push_back(ctx.idem.E[i].col(x));
        w_norm.see(rel(ex[i].squaredNorm(), dbl(ctx.spec.mult[i]) / n), at(x, "i", i));
    }
    for (int i = 0; i <= D; ++i)
        for (int j = i + 1; j <= D; ++j)
            w_orth.see(std::abs(ex[i].dot(ex[j])), at(x, "i", i) + " j=" + std::to_string(j));
    report.add("||E_i xhat||^2 = m_i/|X|", "||E_i xhat||^2 = m_i |X|^-1", w_norm.value,
               ctx.tol.module, w_norm.where);
    report.add("E_i xhat orthogonal", "<E_i xhat, E_j xhat> = 0 (i != j)", w_orth.value,
               ctx.tol.module, w_orth.where);

    Worst w_act, w_trans;
    const Vector zero = Vector::Zero(ctx.n());
    for (int j = 0; j <= D; ++j) {
        Vector rhs = zero;
        if (j > 0)
            rhs += dbl(ia.b(j - 1)) * sv.s[j - 1];
        if (j < D)
            rhs += dbl(ia.c(j + 1)) * sv.s[j + 1];
        w_act.see(vres(A * sv.s[j], rhs), at(x, "j", j));
        Vector t = zero;
        for (int h = 0; h <= D; ++h)
            t += ctx.f.f[j](ctx.spec.theta[h]) * ex[h];
        w_trans.see(vres(sv.s[j], t), at(x, "i", j));
    }
    report.add("A on s_i", "A s_j = b_{j-1} s_{j-1} + c_{j+1} s_{j+1}", w_act.value, ctx.tol.module,
               w_act.where);
    report.add("s_i from E_h xhat", "s_i = sum_h f_i(theta_h) E_h xhat", w_trans.value,
               ctx.tol.module, w_trans.where);

    TModuleDescriptor m;
    m.endpoint = 0;
    m.dimension = D + 1;
    m.thin = true;
    m.level_dims.assign(D + 1, 1);
    m.basis = sv.s;
    for (int i = 0; i <= D; ++i) {
        m.basis_norms.push_back(sv.s[i].squaredNorm());
        if (i < D) {
            m.sub.push_back(dbl(ia.c(i + 1)));
            m.super.push_back(dbl(ia.b(i)));
        }
    }
    m.tridiagonal_eigenvalues = tridiagonal_spectrum(m.sub, m.super);
    report.add("endpoint-0 tridiagonal spectrum", "eigenvalues of the endpoint-0 action = theta_0..theta_D",
               max_list_diff(m.tridiagonal_eigenvalues, ctx.spec.theta), ctx.tol.module, at_x(x));
    m.multiplicity = 1;
    return m;
}

Endpoint1Space endpoint1_space(const GlobalContext& ctx, const DualIdempotents& duals,
                               const StandardVectors& sv, VerificationReport& report)
{
    const int x = duals.x;
    const int D = ctx.D();
    const int N = ctx.n();
    const auto& ia = ctx.ia();
    const double n = N, k = ctx.k();
    const Matrix& A = ctx.dm.A();

    std::vector<Vector> raw;
    const auto& l1 = duals.parts[1];
    for (std::size_t j = 1; j < l1.size(); ++j) {
        Vector v = Vector::Zero(N);
        v[l1[0]] = 1;
        v[l1[j]] = -1;
        raw.push_back(v);
    }
    Endpoint1Space out;
    out.seeds = orthonormalize(raw, N, ctx.tol.rank);
    report.add_flag("endpoint-1 seed dimension", "dim(E*_1 V orthogonal to s_1) = k - 1",
                    out.seeds.dim() == static_cast<int>(ia.valency()) - 1, at_x(x));
    double seed_orth = 0;
    for (int j = 0; j < out.seeds.dim(); ++j)
        seed_orth = std::max(seed_orth, std::abs(out.seeds.vector(j).dot(sv.s[1])));
    report.add("endpoint-1 seeds orthogonal to s_1", "<v, s_1> = 0", seed_orth, ctx.tol.module,
               at_x(x));

    Worst w_en, w_wn, w_wp, w_act, w_tail, w_trans, w_local;
    std::vector<Vector> second;
    std::vector<Vector> first_basis;
    for (int sidx = 0; sidx < out.seeds.dim(); ++sidx) {
        const Vector v = out.seeds.vector(sidx);
        const double nv2 = v.squaredNorm();
        const std::string where = at(x, "seed", sidx);
        std::vector<Vector> ev;
        for (int i = 0; i <= D; ++i) {
            ev.push_back(ctx.idem.E[i] * v);
            const double th = ctx.spec.theta[i];
            const double pred = dbl(ctx.spec.mult[i]) * (k * k - th * th) / (n * k * (k - 1)) * nv2;
            w_en.see(rel(ev[i].squaredNorm(), pred, nv2), where + " i=" + std::to_string(i));
        }
        // w_i = E*_{i+1} A_i v, i = 0..D-1
        std::vector<Vector> w;
        for (int i = 0; i <= D - 1; ++i)
            w.push_back(duals.apply(i + 1, ctx.dm.A_i(i) * v));
        double ratio = 1;
        for (int i = 0; i <= D - 2; ++i) {
            if (i > 0)
                ratio *= dbl(ia.b(i + 1)) / dbl(ia.c(i));
            w_wn.see(rel(w[i].squaredNorm(), ratio * nv2, nv2), where + " i=" + std::to_string(i));
            w_wp.see(vres(w[i], ctx.p.p[i].apply(A, v)), where + " i=" + std::to_string(i));
            Vector t = Vector::Zero(N);
            for (int h = 1; h <= D - 1; ++h)
                t += ctx.p.p[i](ctx.spec.theta[h]) * ev[h];
            w_trans.see(vres(w[i], t), where + " i=" + std::to_string(i));
        }
        w_tail.see(w[D - 1].norm(), where);
        for (int j = 0; j <= D - 2; ++j) {
            Vector rhs = dbl(ia.c(j + 1)) * w[j + 1];
            if (j > 0)
                rhs += dbl(ia.b(j + 1)) * w[j - 1];
            w_act.see(vres(A * w[j], rhs), where + " j=" + std::to_string(j));
        }
        const Vector y2 = duals.apply(2, A * v);
        w_local.see(vres(local_op(ctx, duals, y2), dbl(ia.b(3) - 1) * y2), where);
        second.push_back(y2);
        if (sidx == 0)
            first_basis.assign(w.begin(), w.end() - 1);
    }
    const double tm = ctx.tol.module;
    report.add("endpoint-1 ||E_i v||^2", "||E_i v||^2 = m_i (k^2 - theta_i^2) ||v||^2 / (|X| k (k-1))",
               w_en.value, tm, w_en.where);
    report.add("endpoint-1 ||E*_{i+1} A_i v||^2",
               "||E*_{i+1} A_i v||^2 = b_2..b_{i+1} / (c_1..c_i) ||v||^2", w_wn.value, tm, w_wn.where);
    report.add("endpoint-1 E*_{i+1} A_i v = p_i(A) v", "E*_{i+1} A_i v = p_i(A) v", w_wp.value, tm,
               w_wp.where);
    report.add("endpoint-1 E*_D A_{D-1} v = 0", "E*_D A_{D-1} v = 0", w_tail.value, tm, w_tail.where);
    report.add("endpoint-1 action", "A w_j = b_{j+1} w_{j-1} + c_{j+1} w_{j+1}", w_act.value, tm,
               w_act.where);
    report.add("endpoint-1 transition", "E*_{i+1} A_i v = sum_h p_i(theta_h) E_h v", w_trans.value,
               tm, w_trans.where);
    report.add("endpoint-1 local eigenvalue", "E*_2 A_2 E*_2 (E*_2 A v) = (b_3 - 1) E*_2 A v",
               w_local.value, tm, w_local.where);
    out.second_level = orthonormalize(second, N, ctx.tol.rank);
    report.add_flag("dim E*_2 Y = k - 1", "dim E*_2 Y = k - 1",
                    out.second_level.dim() == static_cast<int>(ia.valency()) - 1, at_x(x));

    auto& m = out.module;
    m.endpoint = 1;
    m.dimension = D - 1;
    m.thin = true;
    m.level_dims.assign(D + 1, 0);
    for (int i = 1; i <= D - 1; ++i)
        m.level_dims[i] = 1;
    m.vanishing_E = {0, D};
    m.basis = first_basis;
    for (const auto& b : first_basis)
        m.basis_norms.push_back(b.squaredNorm());
    for (int j = 0; j + 1 <= D - 2; ++j) {
        m.sub.push_back(dbl(ia.c(j + 1)));
        m.super.push_back(dbl(ia.b(j + 2)));
    }
    m.tridiagonal_eigenvalues = tridiagonal_spectrum(m.sub, m.super);
    const std::vector<double> inner(ctx.spec.theta.begin() + 1, ctx.spec.theta.end() - 1);
    report.add("endpoint-1 tridiagonal spectrum",
               "eigenvalues of the endpoint-1 action = theta_1..theta_{D-1}",
               max_list_diff(m.tridiagonal_eigenvalues, inner), tm, at_x(x));
    m.multiplicity = ia.valency() - 1;
    return out;
}

ExtReal tilde(ExtReal z, double b2, double b3)
{
    if (z.infinite)
        return {-1.0, false};
    const double den = z.value * z.value - b2;
    if (std::abs(den) <= 1e-12 * std::max(1.0, std::abs(b2)))
        return ExtReal::inf();
    return {-1.0 - b2 * b3 / den, false};
}

int LocalSpectrum::mult(double value, double tau) const
{
    for (const auto& e : phi)
        if (near(e.eta, value, tau))
            return e.mult;
    return 0;
}

LocalSpectrum local_spectrum(const GlobalContext& ctx, const DualIdempotents& duals,
                             VerificationReport& report)
{
    const int x = duals.x;
    const auto& ia = ctx.ia();
    const int k = static_cast<int>(ia.valency());
    const double b2 = dbl(ia.b(2)), b3 = dbl(ia.b(3));
    const double p222 = dbl(ctx.p222);
    const double tau = tau_local(ctx);

    LocalSpectrum ls;
    ls.vertices = duals.parts[2];
    const int m = static_cast<int>(ls.vertices.size());
    ls.adjacency = Matrix::Zero(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (ctx.dd(ls.vertices[a], ls.vertices[b]) == 2) {
                ls.edges.emplace_back(a, b);
                ls.adjacency(a, b) = ls.adjacency(b, a) = 1;
            }
    bool regular = true;
    for (int a = 0; a < m; ++a)
        regular = regular && ls.adjacency.row(a).sum() == p222;
    report.add_flag("local graph regular", "local graph is p^2_22-regular on k_2 vertices",
                    regular && dbl(m) == dbl(ia.k_i(2)), at_x(x));

    const auto dec = sym_eigen(ls.adjacency);
    report.append(verify_decomposition(ls.adjacency, dec, ctx.tol));
    std::vector<double> rest(dec.values.data(), dec.values.data() + dec.values.size());

    auto take = [&](double target, const char* what) {
        auto best = rest.end();
        for (auto it = rest.begin(); it != rest.end(); ++it)
            if (best == rest.end() || std::abs(*it - target) < std::abs(*best - target))
                best = it;
        if (best == rest.end() || !near(*best, target, tau))
            throw VerificationError(std::string("local spectrum at ") + at_x(x) + " lacks " + what);
        ls.eta.push_back(target);
        rest.erase(best);
    };
    take(p222, "p^2_22");
    for (int i = 1; i < k; ++i)
        take(b3 - 1, "k-1 copies of b_3 - 1");
    // eta_1 and eta_2..eta_k are stored at their exact values; the rest as computed
    std::sort(rest.begin(), rest.end(), std::greater<>());
    ls.eta.insert(ls.eta.end(), rest.begin(), rest.end());

    ls.theta_tilde_1 = tilde({ctx.spec.theta[1], false}, b2, b3).value;
    ls.theta_tilde_d = tilde({ctx.spec.theta[ctx.d()], false}, b2, b3).value;
    for (const auto& c : cluster_eigenvalues(rest, tau).clusters)
        ls.phi.push_back({c.value, c.count});

    report.add_flag("tilde theta_1 < -1", "tilde(theta_1) < -1", ls.theta_tilde_1 < -1, at_x(x));
    report.add_flag("tilde theta_d >= 0", "tilde(theta_d) >= 0", ls.theta_tilde_d >= -tau, at_x(x));
    if (ctx.D() % 2 == 0)
        report.add("tilde theta_d = b_3 - 1 (D even)", "tilde(theta_d) = b_3 - 1",
                   std::abs(ls.theta_tilde_d - (b3 - 1)), tau, at_x(x));

    double viol = 0;
    for (double e : rest)
        viol = std::max({viol, ls.theta_tilde_1 - e, e - ls.theta_tilde_d});
    report.add("local eigenvalue bounds", "tilde(theta_1) <= eta_i <= tilde(theta_d), i > k", viol,
               tau, at_x(x));

    int msum = 0;
    double s1 = 0, s2 = 0, a1 = 0, a2 = 0;
    for (const auto& e : ls.phi) {
        msum += e.mult;
        s1 += e.eta * e.mult;
        s2 += e.eta * e.eta * e.mult;
        a1 += std::abs(e.eta) * e.mult;
    }
    a2 = s2;
    report.add_flag("trace identity (count)", "k + sum mult_eta = k_2",
                    dbl(k + msum) == dbl(ia.k_i(2)), at_x(x));
    const double t1 = p222 + (k - 1) * (b3 - 1) + s1;
    report.add("trace identity (first moment)", "p^2_22 + (k-1)(b_3-1) + sum eta mult_eta = 0",
               std::abs(t1) / std::max({1.0, p222 + (k - 1) * std::abs(b3 - 1) + a1}), ctx.tol.module,
               at_x(x));
    const double t2 = p222 * p222 + (k - 1) * (b3 - 1) * (b3 - 1) + s2;
    report.add("trace identity (second moment)",
               "(p^2_22)^2 + (k-1)(b_3-1)^2 + sum eta^2 mult_eta = k_2 p^2_22",
               rel(t2, dbl(ia.k_i(2)) * p222, a2), ctx.tol.module, at_x(x));
    return ls;
}

SubspaceU subspace_U(const GlobalContext& ctx, const DualIdempotents& duals,
                     const StandardVectors& sv, const Endpoint1Space& y, const LocalSpectrum& ls,
                     VerificationReport& report)
{
    const int x = duals.x;
    const int N = ctx.n();
    const auto& lvl = duals.parts[2];
    const int k2 = static_cast<int>(lvl.size());
    const double tau = tau_local(ctx);

    Matrix e2 = Matrix::Zero(N, k2);
    for (int a = 0; a < k2; ++a)
        e2(lvl[a], a) = 1;
    const Subspace level2 = Subspace::from_orthonormal(e2);
    const Subspace s2 = orthonormalize(std::vector<Vector>{sv.s[2]}, N, ctx.tol.rank);
    const Subspace inner = span_union(s2, y.second_level, ctx.tol.rank);

    SubspaceU out;
    out.U = orth_complement_within(level2, inner, ctx.tol.rank);
    const int expected = k2 - static_cast<int>(ctx.ia().valency());
    if (out.U.dim() != expected)
        throw VerificationError("dim U = " + std::to_string(out.U.dim()) + " at " + at_x(x) +
                                ", expected k_2 - k = " + std::to_string(expected));
    const Matrix& B = out.U.basis();
    double orth = 0;
    if (B.cols() > 0) {
        orth = (B.transpose() * sv.s[2]).cwiseAbs().maxCoeff();
        if (y.second_level.dim() > 0)
            orth = std::max(orth, (B.transpose() * y.second_level.basis()).cwiseAbs().maxCoeff());
    }
    report.add("U orthogonal to s_2 and E*_2 Y", "<u, s_2> = 0 and u orthogonal to E*_2 Y", orth,
               ctx.tol.module, at_x(x));

    // E*_2 A_2 E*_2 restricted to U
    Matrix AU = ctx.dm.A_i(2) * B;
    for (int r = 0; r < N; ++r)
        if (duals.level[r] != 2)
            AU.row(r).setZero();
    Matrix R = B.transpose() * AU;
    R = 0.5 * (R + R.transpose());
    const double leak = B.cols() == 0 ? 0.0 : (AU - B * R).norm() / std::max(1.0, AU.norm());
    report.add("U invariant under E*_2 A_2 E*_2", "E*_2 A_2 E*_2 U contained in U", leak,
               ctx.tol.module, at_x(x));

    if (B.cols() == 0) {
        if (!ls.phi.empty())
            throw VerificationError("U = 0 but the local spectrum has eta beyond index k at " + at_x(x));
        return out;
    }
    const auto dec = sym_eigen(R);
    std::vector<double> vals(dec.values.data(), dec.values.data() + dec.values.size());
    const auto clusters = cluster_eigenvalues(vals, tau).clusters;
    if (clusters.size() != ls.phi.size())
        throw VerificationError("U has " + std::to_string(clusters.size()) +
                                " distinct eigenvalues but the local spectrum has " +
                                std::to_string(ls.phi.size()) + " at " + at_x(x));
    int col = 0;
    for (const auto& c : clusters) {
        const int mult = ls.mult(c.value, tau);
        if (mult != c.count)
            throw VerificationError("dim U_eta = " + std::to_string(c.count) + " but mult_eta = " +
                                    std::to_string(mult) + " for eta = " + std::to_string(c.value) +
                                    " at " + at_x(x));
        Matrix basis = B * dec.vectors.middleCols(col, c.count);
        out.parts.push_back({c.value, Subspace::from_orthonormal(std::move(basis))});
        col += c.count;
    }
    return out;
}

NormPattern verify_norm_formula(const GlobalContext& ctx, const LocalSpectrum& ls, const Vector& v,
                                double eta, VerificationReport& report)
{
    const int D = ctx.D();
    const int d = ctx.d();
    const auto& ia = ctx.ia();
    const double n = ctx.n(), k = ctx.k();
    const double b1 = dbl(ia.b(1)), b2 = dbl(ia.b(2)), b3 = dbl(ia.b(3));
    const double tau = tau_local(ctx);
    const double nv2 = v.squaredNorm();

    NormPattern np;
    const bool minus_one = std::abs(eta + 1) <= tau;
    const double psi = minus_one ? 0.0 : b2 * (1 - b3 / (1 + eta));
    const bool is1 = near(eta, ls.theta_tilde_1, tau);
    const bool isd = near(eta, ls.theta_tilde_d, tau);
    Worst w;
    for (int i = 0; i <= D; ++i) {
        const double th = ctx.spec.theta[i];
        const double m = dbl(ctx.spec.mult[i]);
        const double norm2 = (ctx.idem.E[i] * v).squaredNorm();
        const double pred = minus_one
                                ? m * (k - th) * (k + th) / (n * k * b1) * nv2
                                : m * (th - k) * (th + k) * (th * th - psi) / (n * k * b1 * (psi - b2)) * nv2;
        w.see(std::abs(norm2 - pred) / std::max(nv2, std::abs(pred)), "i=" + std::to_string(i));
        np.norms2.push_back(norm2);
        np.vanishes.push_back(std::sqrt(norm2) < ctx.tol.module * std::sqrt(nv2));
        const bool zero = i == 0 || i == D || (is1 && (i == 1 || i == D - 1)) ||
                          (isd && (i == d || i == D - d));
        np.predicted.push_back(zero);
        if (!np.vanishes.back())
            ++np.dim_Mv;
    }
    np.expected_dim_Mv = is1 || (isd && D % 2 == 1) ? D - 3 : (isd ? D - 2 : D - 1);

    const std::string where = "eta=" + std::to_string(eta) + " " + w.where;
    report.add("||E_i v||^2 for v in U_eta",
               minus_one ? "||E_i v||^2 = m_i (k - theta_i)(k + theta_i) ||v||^2 / (|X| k b_1)"
                         : "||E_i v||^2 = m_i (theta_i^2 - k^2)(theta_i^2 - psi) ||v||^2 / (|X| k b_1 (psi - b_2))",
               w.value, ctx.tol.module, where);
    report.add_flag("E_i v vanishing pattern", "E_i v = 0 exactly where eta predicts",
                    np.vanishes == np.predicted, "eta=" + std::to_string(eta));
    report.add_flag("dim Mv", "dim Mv = D-3, D-2 or D-1 by eta", np.dim_Mv == np.expected_dim_Mv,
                    "eta=" + std::to_string(eta) + " dim=" + std::to_string(np.dim_Mv));
    return np;
}

TModuleDescriptor construct_endpoint2_module(const GlobalContext& ctx, const DualIdempotents& duals,
                                             const LocalSpectrum& ls, const Vector& v, int n_idx,
                                             VerificationReport& report)
{
    (void)ls;
    const int x = duals.x;
    const int D = ctx.D();
    const int N = ctx.n();
    const auto& ia = ctx.ia();
    const double n = N, k = ctx.k();
    const double b1 = dbl(ia.b(1)), b2 = dbl(ia.b(2)), b3 = dbl(ia.b(3));
    const Matrix& A = ctx.dm.A();
    const double tm = ctx.tol.module;

    const auto gi = ctx.g.find(n_idx);
    if (gi == ctx.g.end())
        throw VerificationError("no explicit endpoint-2 basis for n = " + std::to_string(n_idx) +
                                " when D = " + std::to_string(D));
    const PolyFamilyG& G = gi->second;
    const double theta = ctx.spec.theta[n_idx];
    const double eta = tilde({theta, false}, b2, b3).value;
    const double off = vres(local_op(ctx, duals, v), eta * v);
    if (off > tm)
        throw VerificationError("vector is not in U_eta for eta = tilde(theta_" +
                                std::to_string(n_idx) + ") at " + at_x(x) +
                                " (residual " + std::to_string(off) + ")");

    const double nv2 = v.squaredNorm();
    const std::string tag = at(x, "n", n_idx);

    std::vector<int> gone = {0, n_idx, D - n_idx, D};
    std::sort(gone.begin(), gone.end());
    gone.erase(std::unique(gone.begin(), gone.end()), gone.end());
    auto survives = [&](int j) { return !std::binary_search(gone.begin(), gone.end(), j); };

    std::vector<Vector> ev;
    Worst w_t6;
    for (int i = 0; i <= D; ++i) {
        ev.push_back(ctx.idem.E[i] * v);
        const double th = ctx.spec.theta[i];
        const double pred = dbl(ctx.spec.mult[i]) * (th * th - k * k) * (th * th - theta * theta) /
                            (n * k * b1 * (theta * theta - b2)) * nv2;
        w_t6.see(std::abs(ev[i].squaredNorm() - pred) / std::max(nv2, std::abs(pred)),
                 tag + " i=" + std::to_string(i));
    }
    report.add("endpoint-2 ||E_i v||^2",
               "||E_i v||^2 = m_i (theta_i^2 - k^2)(theta_i^2 - theta_n^2) ||v||^2 / (|X| k b_1 (theta_n^2 - b_2))",
               w_t6.value, tm, w_t6.where);

    // w_i = E*_{i+2} A_i v, i = 0..D-2
    std::vector<Vector> w;
    for (int i = 0; i <= D - 2; ++i)
        w.push_back(duals.apply(i + 2, ctx.dm.A_i(i) * v));

    Worst w_t3, w_g, w_tail, w_t4, w_t7;
    for (int i = 0; i <= D - 2; ++i) {
        w_g.see(vres(w[i], G.g[i].apply(A, v)), tag + " i=" + std::to_string(i));
        if (i >= D - 3) {
            w_tail.see(w[i].norm(), tag + " i=" + std::to_string(i));
            continue;
        }
        const double pred = dbl(ia.k_i(i)) * dbl(ia.b(i)) * dbl(ia.b(i + 1)) * dbl(ia.c(i + 1)) *
                            dbl(ia.c(i + 2)) / (k * b1 * (theta * theta - b2)) *
                            G.p_at_theta[i + 2] / G.p_at_theta[i] * nv2;
        w_t3.see(rel(w[i].squaredNorm(), pred, nv2), tag + " i=" + std::to_string(i));
        Vector t = Vector::Zero(N);
        for (int j = 0; j <= D; ++j)
            if (survives(j))
                t += G.g[i](ctx.spec.theta[j]) * ev[j];
        w_t7.see(vres(w[i], t), tag + " i=" + std::to_string(i));
        Vector rhs = dbl(ia.c(i + 1)) * w[i + 1];
        if (i > 0)
            rhs += G.omega[i] * w[i - 1];
        w_t4.see(vres(A * w[i], rhs), tag + " j=" + std::to_string(i));
    }
    report.add("endpoint-2 E*_{i+2} A_i v = g_i(A) v", "E*_{i+2} A_i v = g_i(A) v", w_g.value, tm,
               w_g.where);
    report.add("endpoint-2 E*_{i+2} A_i v = 0 for i = D-3, D-2", "E*_{D-1} A_{D-3} v = E*_D A_{D-2} v = 0",
               w_tail.value, tm, w_tail.where);
    report.add("endpoint-2 ||E*_{i+2} A_i v||^2",
               "||w_i||^2 = k_i b_i b_{i+1} c_{i+1} c_{i+2} p_{i+2}(theta_n) ||v||^2 / (k b_1 (theta_n^2 - b_2) p_i(theta_n))",
               w_t3.value, tm, w_t3.where);
    report.add("endpoint-2 action", "A w_j = c_{j+1} w_{j+1} + omega_j w_{j-1}", w_t4.value, tm,
               w_t4.where);
    report.add("endpoint-2 transition", "w_i = sum_{j not in {0,n,D-n,D}} g_i(theta_j) E_j v",
               w_t7.value, tm, w_t7.where);

    const int dim = D - 3;
    Matrix W(N, dim);
    for (int i = 0; i < dim; ++i)
        W.col(i) = w[i];
    const Subspace span = orthonormalize(W, ctx.tol.rank);
    report.add_flag("endpoint-2 basis independent", "E*_{i+2} A_i v (0 <= i <= D-4) independent",
                    span.dim() == dim, tag);
    std::vector<Vector> evs;
    for (int j = 0; j <= D; ++j)
        if (survives(j))
            evs.push_back(ev[j]);
    report.add_flag("endpoint-2 E-basis spans Mv", "E_j v (j not in {0,n,D-n,D}) span Mv",
                    orthonormalize(evs, N, ctx.tol.rank).dim() == dim &&
                        span_union(span, orthonormalize(evs, N, ctx.tol.rank), ctx.tol.rank).dim() == dim,
                    tag);

    // observed matrix of A in the w basis
    const Matrix G2 = W.transpose() * W;
    const Matrix Mobs = G2.ldlt().solve(W.transpose() * (A * W));
    double mres = (A * W - W * Mobs).norm() / std::max(1.0, (A * W).norm());
    TModuleDescriptor m;
    for (int j = 0; j + 1 < dim; ++j) {
        m.sub.push_back(Mobs(j + 1, j));
        m.super.push_back(Mobs(j, j + 1));
    }
    double shape = 0;
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            double expect = 0;
            if (r == c + 1)
                expect = dbl(ia.c(c + 1));
            else if (c == r + 1)
                expect = G.omega[c];
            shape = std::max(shape, rel(Mobs(r, c), expect));
        }
    report.add("endpoint-2 matrix of A", "matrix of A on w_0..w_{D-4}: c_i below, omega_i above",
               std::max(mres, shape), tm, tag);

    std::vector<double> surviving;
    for (int j = 0; j <= D; ++j)
        if (survives(j))
            surviving.push_back(ctx.spec.theta[j]);
    m.tridiagonal_eigenvalues = tridiagonal_spectrum(m.sub, m.super);
    report.add("endpoint-2 tridiagonal spectrum",
               "eigenvalues of the endpoint-2 action = theta_j, j not in {0,n,D-n,D}",
               max_list_diff(m.tridiagonal_eigenvalues, surviving), tm, tag);

    m.endpoint = 2;
    m.dimension = dim;
    m.thin = true;
    m.level_dims.assign(D + 1, 0);
    for (int i = 2; i <= D - 2; ++i)
        m.level_dims[i] = 1;
    m.eta = eta;
    m.n = n_idx;
    m.vanishing_E = gone;
    for (int i = 0; i < dim; ++i) {
        m.basis.push_back(w[i]);
        m.basis_norms.push_back(w[i].squaredNorm());
    }
    return m;
}

VerificationReport verify_endpoint2_identities(const GlobalContext& ctx,
                                               const DualIdempotents& duals, const Vector& v,
                                               int n_idx)
{
    VerificationReport report;
    const int D = ctx.D();
    const int N = ctx.n();
    const double tm = ctx.tol.module;
    const auto& star = ctx.duals.at(n_idx).star;
    const std::string tag = at(duals.x, "n", n_idx);
    const Matrix& A = ctx.dm.A();

    std::vector<Vector> av;  // A_j v
    for (int j = 0; j <= D; ++j)
        av.push_back(ctx.dm.A_i(j) * v);
    auto ea = [&](int i, int j) { return duals.apply(i, av[j]); };
    const Vector zero = Vector::Zero(N);

    Worst c1, c2, cs, c1a, c1b, c1c, c3, t1;
    for (int i = 0; i <= D; ++i) {
        Vector sum = zero, wsum = zero;
        for (int j = 0; j <= D; ++j) {
            const Vector e = ea(i, j);
            if (std::abs(i - j) > 2 || (i + j) % 2 == 1)
                c1.see(e.norm(), tag + " i=" + std::to_string(i) + " j=" + std::to_string(j));
            if (i <= 1 || i >= D - 1)
                c1c.see(e.norm(), tag + " i=" + std::to_string(i) + " j=" + std::to_string(j));
            sum += e;
            wsum += star[j] * e;
        }
        c2.see(sum.norm(), tag + " i=" + std::to_string(i));
        cs.see(wsum.norm() / std::max(1.0, std::abs(star[0])), tag + " i=" + std::to_string(i));
    }
    for (int i = 2; i <= D - 2; ++i) {
        const Vector base = ea(i, i - 2);
        const double ra = (star[i - 2] - star[i + 2]) / (star[i + 2] - star[i]);
        const double rb = (star[i - 2] - star[i]) / (star[i] - star[i + 2]);
        c1a.see(vres(ea(i, i), ra * base), tag + " i=" + std::to_string(i));
        c1b.see(vres(ea(i, i + 2), rb * base), tag + " i=" + std::to_string(i));
    }
    std::vector<Vector> pv;  // p_h(A) v
    for (int h = 0; h <= D; ++h)
        pv.push_back(ctx.p.p[h].apply(A, v));
    for (int i = 0; i <= D - 2; ++i) {
        c3.see(vres(pv[i], ea(i + 2, i) - ea(i, i + 2)), tag + " i=" + std::to_string(i));
        Vector rhs = zero;
        for (int h = i; h >= 0; h -= 2)
            rhs += (star[h] - star[h + 2]) / (star[i] - star[i + 2]) * pv[h];
        const Vector lhs = ea(i + 2, i);
        t1.see(vres(lhs, rhs), tag + " i=" + std::to_string(i));
        if (i >= D - 3)
            t1.see(std::max(lhs.norm(), rhs.norm()), tag + " zero i=" + std::to_string(i));
    }
    const double tail = std::max(pv[D - 1].norm(), pv[D].norm());

    report.add("E*_i A_j v = 0 off the band", "E*_i A_j v = 0 if |i-j| > 2 or i+j odd", c1.value, tm,
               c1.where);
    report.add("sum_j E*_i A_j v = 0", "sum_j E*_i A_j v = 0", c2.value, tm, c2.where);
    report.add("sum_j theta*_j E*_i A_j v = 0", "sum_j theta*_j E*_i A_j v = 0", cs.value, tm,
               cs.where);
    report.add("E*_i A_i v ratio",
               "E*_i A_i v = (theta*_{i-2} - theta*_{i+2})/(theta*_{i+2} - theta*_i) E*_i A_{i-2} v",
               c1a.value, tm, c1a.where);
    report.add("E*_i A_{i+2} v ratio",
               "E*_i A_{i+2} v = (theta*_{i-2} - theta*_i)/(theta*_i - theta*_{i+2}) E*_i A_{i-2} v",
               c1b.value, tm, c1b.where);
    report.add("E*_i A_j v = 0 at the ends", "E*_0 A_i v = E*_1 A_i v = E*_{D-1} A_i v = E*_D A_i v = 0",
               c1c.value, tm, c1c.where);
    report.add("p_i(A) v as a difference", "p_i(A) v = E*_{i+2} A_i v - E*_i A_{i+2} v", c3.value, tm,
               c3.where);
    report.add("p_{D-1}(A) v = p_D(A) v = 0", "p_{D-1}(A) v = 0, p_D(A) v = 0", tail, tm, tag);
    report.add("E*_{i+2} A_i v through p_h(A) v",
               "E*_{i+2} A_i v = sum_h (theta*_h - theta*_{h+2})/(theta*_i - theta*_{i+2}) p_h(A) v",
               t1.value, tm, t1.where);
    return report;
}

TModuleDescriptor thinness_and_endpoint(const GlobalContext& ctx, const DualIdempotents& duals,
                                        const Vector& v)
{
    const int D = ctx.D();
    const int N = ctx.n();
    const Matrix& A = ctx.dm.A();
    const double thr = ctx.tol.rank * std::max(1.0, ctx.k());

    std::vector<std::vector<Vector>> levels(D + 1);
    std::vector<std::pair<int, Vector>> queue;
    int total = 0;
    auto offer = [&](int i, Vector piece, double cutoff) {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : levels[i])
                piece -= b.dot(piece) * b;
        const double r = piece.norm();
        if (r <= cutoff)
            return;
        piece /= r;
        levels[i].push_back(piece);
        queue.emplace_back(i, piece);
        if (++total > N)
            throw VerificationError("module closure exceeded |X| at " + at_x(duals.x));
    };
    const double vn = v.norm();
    for (int i = 0; i <= D; ++i)
        offer(i, duals.apply(i, v / vn), ctx.tol.rank);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const int i = queue[q].first;
        const Vector au = A * queue[q].second;
        for (int j = std::max(0, i - 1); j <= std::min(D, i + 1); ++j)
            offer(j, duals.apply(j, au), thr);
    }

    TModuleDescriptor m;
    m.dimension = total;
    m.endpoint = -1;
    m.thin = true;
    for (int i = 0; i <= D; ++i) {
        const int dim = static_cast<int>(levels[i].size());
        m.level_dims.push_back(dim);
        if (dim > 0 && m.endpoint < 0)
            m.endpoint = i;
        m.thin = m.thin && dim <= 1;
        for (auto& b : levels[i]) {
            m.basis.push_back(std::move(b));
            m.basis_norms.push_back(1.0);
        }
    }
    return m;
}

std::vector<MultiplicityRow> multiplicity_report(const GlobalContext& ctx, VertexAnalysis& an)
{
    const int D = ctx.D();
    const auto& ia = ctx.ia();
    const double tau = tau_local(ctx);
    const double b2 = dbl(ia.b(2)), b3 = dbl(ia.b(3));
    std::vector<MultiplicityRow> rows;
    std::int64_t thin_total = 0;
    for (int n_idx : module_indices(D)) {
        MultiplicityRow row;
        row.n = n_idx;
        row.eta = tilde({ctx.spec.theta[n_idx], false}, b2, b3).value;
        for (const auto& part : an.U.parts)
            if (near(part.eta, row.eta, tau))
                row.dim_U = part.space.dim();
        row.mult = an.local.mult(row.eta, tau);

        const TModuleDescriptor* first = nullptr;
        double spread = 0;
        for (const auto& mod : an.modules) {
            if (!mod.module || mod.module->n != n_idx)
                continue;
            if (!(mod.closure.thin && mod.closure.endpoint == 2 && near(mod.eta, row.eta, tau)))
                continue;
            ++row.mu;
            if (!first) {
                first = &*mod.module;
                continue;
            }
            for (std::size_t j = 0; j < first->sub.size(); ++j)
                spread = std::max({spread, rel(mod.module->sub[j], first->sub[j]),
                                   rel(mod.module->super[j], first->super[j])});
        }
        an.report.add("isomorphic modules share the action",
                      "equal matrices of A for thin endpoint-2 modules with equal eta", spread,
                      ctx.tol.module, at(an.x, "n", n_idx));
        if (row.mu != row.dim_U || row.dim_U != row.mult)
            throw VerificationError("multiplicity mismatch at " + at(an.x, "n", n_idx) + ": mu = " +
                                    std::to_string(row.mu) + ", dim U_eta = " +
                                    std::to_string(row.dim_U) + ", mult_eta = " +
                                    std::to_string(row.mult));
        an.report.add_flag("mu_eta = dim U_eta = mult_eta", "mu_eta = dim U_eta = mult_eta", true,
                           at(an.x, "n", n_idx));
        for (auto& mod : an.modules)
            if (mod.module && mod.module->n == n_idx)
                mod.module->multiplicity = row.mu;
        thin_total += static_cast<std::int64_t>(row.mu) * (D - 3);
        rows.push_back(row);
    }

    auto& acc = an.accounting;
    acc.total = ctx.n();
    acc.endpoint0 = D + 1;
    acc.endpoint1 = (ia.valency() - 1) * (D - 1);
    acc.endpoint2_thin = thin_total;
    acc.residual = acc.total - acc.endpoint0 - acc.endpoint1 - acc.endpoint2_thin;
    if (acc.residual < 0)
        throw VerificationError("module dimensions exceed |X| at " + at_x(an.x));
    an.report.add_flag("dimension accounting", "(D+1) + (k-1)(D-1) + sum mu_eta (D-3) <= |X|", true,
                       at_x(an.x) + " residual=" + std::to_string(acc.residual));
    return rows;
}

VertexAnalysis analyze_vertex(const GlobalContext& ctx, int x)
{
    VertexAnalysis an;
    an.x = x;
    auto& rep = an.report;
    const int D = ctx.D();
    const int N = ctx.n();
    const double tm = ctx.tol.module;
    const double tau = tau_local(ctx);
    const auto& ia = ctx.ia();
    const double b2 = dbl(ia.b(2)), b3 = dbl(ia.b(3));

    an.duals = dual_idempotents(ctx, x, rep);
    an.sv = standard_vectors(ctx, an.duals, rep);
    an.V0 = module_V0(ctx, an.duals, an.sv, rep);
    an.Y = endpoint1_space(ctx, an.duals, an.sv, rep);
    an.local = local_spectrum(ctx, an.duals, rep);
    an.U = subspace_U(ctx, an.duals, an.sv, an.Y, an.local, rep);

    const auto indices = module_indices(D);
    for (const auto& part : an.U.parts)
        for (int c = 0; c < part.space.dim(); ++c) {
            EndpointTwoModule mod;
            mod.eta = part.eta;
            mod.seed = part.space.vector(c);
            mod.closure = thinness_and_endpoint(ctx, an.duals, mod.seed);
            mod.closure.eta = part.eta;
            mod.norms = verify_norm_formula(ctx, an.local, mod.seed, part.eta, rep);
            for (int n_idx : indices) {
                const double target = tilde({ctx.spec.theta[n_idx], false}, b2, b3).value;
                if (!near(part.eta, target, tau))
                    continue;
                mod.module = construct_endpoint2_module(ctx, an.duals, an.local, mod.seed, n_idx, rep);
                rep.append(verify_endpoint2_identities(ctx, an.duals, mod.seed, n_idx));
                const auto& cl = mod.closure;
                rep.add_flag("closure of v matches Mv", "Tv = Mv: thin, endpoint 2, E*_i Tv = 0 iff i in {0,1,D-1,D}",
                             cl.thin && cl.endpoint == 2 && cl.level_dims == mod.module->level_dims,
                             at(x, "n", n_idx) + " dim=" + std::to_string(cl.dimension));
                mod.closure.n = n_idx;
            }
            an.modules.push_back(std::move(mod));
        }

    an.multiplicities = multiplicity_report(ctx, an);

    // matrix identity for E*_2 E_i E*_2 on the level-2 block
    {
        const auto& lvl = an.duals.parts[2];
        const int m = static_cast<int>(lvl.size());
        Worst w;
        for (int i = 0; i <= D; ++i) {
            const auto& st = ctx.duals[i].star;
            Matrix lhs(m, m);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    lhs(a, b) = N * ctx.idem.E[i](lvl[a], lvl[b]);
            const Matrix rhs = (st[0] - st[4]) * Matrix::Identity(m, m) +
                               (st[2] - st[4]) * an.local.adjacency + st[4] * Matrix::Ones(m, m);
            w.see((lhs - rhs).cwiseAbs().maxCoeff() / std::max(1.0, rhs.cwiseAbs().maxCoeff()),
                  at(x, "i", i));
        }
        rep.add("|X| E*_2 E_i E*_2 expansion",
                "|X| E*_2 E E*_2 = (theta*_0 - theta*_4) E*_2 + (theta*_2 - theta*_4) E*_2 A_2 E*_2 + theta*_4 E*_2 J E*_2",
                w.value, tm, w.where);
    }

    // equivalent characterizations of v orthogonal to s_2, v in E*_2 V
    {
        std::vector<Vector> probes;
        for (int c = 0; c < an.U.U.dim(); ++c)
            probes.push_back(an.U.U.vector(c));
        for (int c = 0; c < an.Y.second_level.dim(); ++c)
            probes.push_back(an.Y.second_level.vector(c));
        probes.push_back(an.sv.s[2].normalized());
        std::mt19937 rng(9001u + static_cast<unsigned>(x));
        std::normal_distribution<double> gauss;
        Vector r = Vector::Zero(N);
        for (int y : an.duals.parts[2])
            r[y] = gauss(rng);
        probes.push_back(r.normalized());
        bool agree = true;
        std::string bad;
        for (std::size_t pi = 0; pi < probes.size(); ++pi) {
            const Vector& v = probes[pi];
            const bool c[] = {
                std::abs(v.dot(an.sv.s[2])) <= tm * an.sv.s[2].norm(),
                (ctx.idem.E[0] * v).norm() <= tm,
                (ctx.dm.J * v).norm() <= tm * N,
                (ctx.idem.E[D] * v).norm() <= tm,
                (ctx.dm.Jprime * v).norm() <= tm * N,
            };
            for (bool b : c)
                if (b != c[0] && agree) {
                    agree = false;
                    bad = " probe=" + std::to_string(pi);
                }
        }
        rep.add_flag("orthogonality to s_2 characterizations",
                     "v orthogonal to s_2 iff E_0 v = 0 iff J v = 0 iff E_D v = 0 iff J' v = 0", agree,
                     at_x(x) + bad);
    }

    // modules with different local eigenvalues are orthogonal
    {
        double worst = 0;
        for (std::size_t a = 0; a < an.modules.size(); ++a)
            for (std::size_t b = a + 1; b < an.modules.size(); ++b) {
                if (near(an.modules[a].eta, an.modules[b].eta, tau))
                    continue;
                for (const auto& u : an.modules[a].closure.basis)
                    for (const auto& w : an.modules[b].closure.basis)
                        worst = std::max(worst, std::abs(u.dot(w)));
            }
        rep.add("modules with different eta orthogonal", "<W, W'> = 0 for different local eigenvalues",
                worst, tm, at_x(x));
    }
    return an;
}

}  // namespace tautdrg
