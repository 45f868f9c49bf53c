#include "tautdrg/bose_mesner.hpp"

#include <cmath>
#include <string>

#include "tautdrg/error.hpp"

namespace tautdrg {

namespace {

double max_abs(const Matrix& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::string idx(const char* prefix, int i)
{
    return std::string(prefix) + std::to_string(i);
}

}  // namespace

DistanceMatrices distance_matrices(const DistanceData& dd, const ValidatedArray& va,
                                   VerificationReport& report)
{
    const auto& ia = va.array();
    const int n = dd.order();
    const int D = dd.diameter();
    if (D != ia.diameter())
        throw VerificationError("distance data and intersection array disagree on the diameter");

    DistanceMatrices dm;
    dm.n = n;
    dm.D = D;
    dm.exact.assign(D + 1, IntMatrix::Zero(n, n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            dm.exact[dd(x, y)](x, y) = 1;
    dm.real.reserve(D + 1);
    for (const auto& a : dm.exact)
        dm.real.push_back(a.cast<double>());
    dm.J = Matrix::Ones(n, n);
    dm.Jprime = Matrix::Zero(n, n);
    for (int i = 0; i <= D; ++i)
        dm.Jprime += (i % 2 == 0 ? 1.0 : -1.0) * dm.real[i];

    report.add_flag("A_0 = I", "A_0 = I", dm.exact[0] == IntMatrix::Identity(n, n));
    IntMatrix sum = IntMatrix::Zero(n, n);
    for (const auto& a : dm.exact)
        sum += a;
    report.add_flag("sum A_i = J", "A_0 + A_1 + ... + A_D = J", sum == IntMatrix::Ones(n, n));

    const IntersectionNumbers p(ia);
    std::int64_t worst = 0;
    std::string witness;
    if (n <= 512) {
        // (A_i A_j)_{xy} = #{z : d(x,z) = i, d(z,y) = j}
        std::vector<std::int64_t> cnt(static_cast<std::size_t>(D + 1) * (D + 1));
        for (int x = 0; x < n; ++x)
            for (int y = x; y < n; ++y) {
                std::fill(cnt.begin(), cnt.end(), 0);
                for (int z = 0; z < n; ++z)
                    ++cnt[dd(x, z) * (D + 1) + dd(z, y)];
                const int h = dd(x, y);
                for (int i = 0; i <= D; ++i)
                    for (int j = 0; j <= D; ++j) {
                        const auto diff = std::abs(cnt[i * (D + 1) + j] - p(h, i, j));
                        if (diff > worst) {
                            worst = diff;
                            witness = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                        }
                    }
            }
    } else {
        for (int j = 0; j <= D; ++j) {
            const IntMatrix prod = dm.exact[1] * dm.exact[j];
            IntMatrix rhs = IntMatrix::Zero(n, n);
            for (int h = 0; h <= D; ++h)
                rhs += p(h, 1, j) * dm.exact[h];
            const auto diff = (prod - rhs).cwiseAbs().maxCoeff();
            if (diff > worst) {
                worst = diff;
                witness = "i=1 j=" + std::to_string(j);
            }
        }
    }
    report.add("A_i A_j expansion", "A_i A_j = sum_h p^h_ij A_h", static_cast<double>(worst), 0.0,
               witness);
    return dm;
}

std::vector<double> intersection_matrix_eigenvalues(const IntersectionArray& ia)
{
    const int D = ia.diameter();
    std::vector<double> diag(D + 1), off(D);
    for (int i = 0; i <= D; ++i)
        diag[i] = static_cast<double>(ia.a(i));
    for (int i = 0; i < D; ++i)
        off[i] = std::sqrt(static_cast<double>(ia.b(i) * ia.c(i + 1)));
    return tridiagonal_eigenvalues(diag, off);
}

std::int64_t Spectrum::vertex_count() const
{
    std::int64_t s = 0;
    for (auto m : mult)
        s += m;
    return s;
}

Spectrum spectrum(const ValidatedArray& va, const DistanceMatrices& dm, const Tolerances& tol,
                  VerificationReport& report)
{
    const auto& ia = va.array();
    Spectrum spec;
    spec.D = ia.diameter();
    spec.theta = intersection_matrix_eigenvalues(ia);

    const auto dec = sym_eigen(dm.A());
    report.append(verify_decomposition(dm.A(), dec, tol));
    spec.adjacency_eigenvalues.assign(dec.values.data(), dec.values.data() + dec.values.size());

    const double tau = tol.cluster_for(dm.A().norm());
    const auto clusters = cluster_eigenvalues(spec.adjacency_eigenvalues, tau);
    if (clusters.clusters.size() != spec.theta.size())
        throw VerificationError("adjacency matrix has " + std::to_string(clusters.clusters.size()) +
                                " distinct eigenvalues, intersection matrix has " +
                                std::to_string(spec.theta.size()));
    double gap = 0;
    for (std::size_t i = 0; i < spec.theta.size(); ++i)
        gap = std::max(gap, std::abs(clusters.clusters[i].value - spec.theta[i]));
    if (gap > tau)
        throw VerificationError("intersection-matrix and adjacency spectra differ by " +
                                std::to_string(gap));
    report.add("two-route spectrum", "roots of intersection matrix = clustered spectrum of A", gap,
               tau);

    // trace E_i = sum over the full spectrum of the Lagrange basis polynomial
    const int D = spec.D;
    spec.mult.resize(D + 1);
    double worst = 0;
    for (int i = 0; i <= D; ++i) {
        double trace = 0;
        for (double lam : spec.adjacency_eigenvalues) {
            double term = 1;
            for (int j = 0; j <= D; ++j)
                if (j != i)
                    term *= (lam - spec.theta[j]) / (spec.theta[i] - spec.theta[j]);
            trace += term;
        }
        const double rounded = std::round(trace);
        worst = std::max(worst, std::abs(trace - rounded));
        if (std::abs(trace - rounded) > 1e-6 || rounded < 1)
            throw VerificationError("trace of E_" + std::to_string(i) + " is " + std::to_string(trace) +
                                    ", not a positive integer");
        spec.mult[i] = static_cast<std::int64_t>(rounded);
        if (clusters.clusters[i].count != spec.mult[i])
            throw VerificationError("multiplicity of theta_" + std::to_string(i) +
                                    " disagrees with the eigenvalue cluster size");
    }
    report.add("multiplicities integral", "trace E_i within 1e-6 of an integer", worst, 1e-6);
    return spec;
}

PrimitiveIdempotents primitive_idempotents(const Spectrum& spec, const Matrix& A,
                                           const Tolerances& tol, VerificationReport& report)
{
    const int D = spec.D;
    const auto n = A.rows();
    const Matrix I = Matrix::Identity(n, n);
    PrimitiveIdempotents idem;
    idem.E.reserve(D + 1);
    for (int i = 0; i <= D; ++i) {
        Matrix e = I;
        for (int j = 0; j <= D; ++j)
            if (j != i)
                e = (e * (A - spec.theta[j] * I)) / (spec.theta[i] - spec.theta[j]);
        idem.E.push_back(0.5 * (e + e.transpose()));
    }

    const double thr = tol.eig * static_cast<double>(n);
    double prod = 0, eig = 0, tr = 0;
    Matrix sum = Matrix::Zero(n, n);
    for (int i = 0; i <= D; ++i) {
        sum += idem.E[i];
        for (int j = i; j <= D; ++j) {
            const Matrix p = idem.E[i] * idem.E[j];
            prod = std::max(prod, max_abs(i == j ? Matrix(p - idem.E[i]) : p));
        }
        eig = std::max(eig, max_abs(A * idem.E[i] - spec.theta[i] * idem.E[i]));
        tr = std::max(tr, std::abs(idem.E[i].trace() - static_cast<double>(spec.mult[i])));
    }
    report.add("E_i E_j = delta_ij E_i", "E_i E_j = delta_ij E_i", prod, thr);
    report.add("sum E_i = I", "E_0 + ... + E_D = I", max_abs(sum - I), thr);
    report.add("E_0 = J/n", "E_0 = |X|^-1 J",
               max_abs(idem.E[0] - Matrix::Ones(n, n) / static_cast<double>(n)), thr);
    report.add("A E_i = theta_i E_i", "A E_i = theta_i E_i", eig, thr);
    report.add("trace E_i = m_i", "trace E_i = m_i", tr, 1e-6);
    return idem;
}

DualEigenvalueSequence dual_eigenvalues(const PrimitiveIdempotents& idem, const Spectrum& spec,
                                        const DistanceData& dd, int i, const Tolerances& tol,
                                        VerificationReport& report)
{
    if (i < 0 || i > spec.D)
        throw VerificationError("dual_eigenvalues: index out of range");
    const int n = dd.order();
    const int D = spec.D;
    const Matrix& e = idem.E[i];
    DualEigenvalueSequence seq;
    seq.index = i;
    seq.theta = spec.theta[i];
    seq.star.assign(D + 1, 0);
    std::vector<bool> seen(D + 1, false);
    double spread = 0;
    for (int y = 0; y < n; ++y) {
        const int j = dd(0, y);
        if (!seen[j]) {
            seen[j] = true;
            seq.star[j] = n * e(0, y);
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            spread = std::max(spread, std::abs(n * e(x, y) - seq.star[dd(x, y)]));
    report.add(idx("dual sequence constant, i=", i), "|X| (E_i)_{xy} depends only on d(x,y)", spread,
               tol.eig * n * std::max(1.0, static_cast<double>(spec.mult[i])));
    return seq;
}

VerificationReport verify_bipartite_spectrum(const ValidatedArray& va, std::int64_t counted_p222,
                                             const DistanceMatrices& dm, const Spectrum& spec,
                                             const PrimitiveIdempotents& idem,
                                             const std::vector<DualEigenvalueSequence>& duals,
                                             const Tolerances& tol)
{
    const auto& ia = va.array();
    VerificationReport r;
    const int D = spec.D;
    const int d = spec.d();
    const double n = dm.n;
    const double k = static_cast<double>(ia.valency());
    const double thr = tol.eig * n;
    const auto& th = spec.theta;

    r.add("theta_0 = k", "theta_0 = k", std::abs(th[0] - k), thr);
    r.add_flag("m_0 = 1", "m_0 = 1", spec.mult[0] == 1);
    r.add_flag("sum m_i = |X|", "m_0 + ... + m_D = |X|", spec.vertex_count() == dm.n);

    double sym = 0;
    bool msym = true;
    for (int i = 0; i <= D; ++i) {
        sym = std::max(sym, std::abs(th[D - i] + th[i]));
        msym = msym && spec.mult[D - i] == spec.mult[i];
    }
    r.add("spectrum symmetric", "theta_{D-i} = -theta_i", sym, thr);
    r.add_flag("multiplicities symmetric", "m_{D-i} = m_i", msym);

    r.add_flag("-1 < theta_1 < k", "-1 < theta_1 < k", th[1] > -1 && th[1] < k);
    r.add_flag("theta_D < -1", "a_1 - k <= theta_D < -1",
               th[D] < -1 && th[D] >= static_cast<double>(ia.a(1)) - k - thr);

    const double b2 = static_cast<double>(ia.b(2));
    r.add_flag("theta_1^2 > b_2 > theta_d^2", "theta_1^2 > b_2 > theta_d^2",
               th[1] * th[1] > b2 && b2 > th[d] * th[d],
               "theta_1^2=" + std::to_string(th[1] * th[1]) + " b_2=" + std::to_string(b2) +
                   " theta_d^2=" + std::to_string(th[d] * th[d]));
    if (D % 2 == 0)
        r.add("theta_d = 0 (D even)", "theta_d = 0", std::abs(th[d]), thr);
    else {
        r.add_flag("theta_d > 0 (D odd)", "theta_d > 0", th[d] > thr);
        r.add("theta_{d+1} = -theta_d (D odd)", "theta_{d+1} = -theta_d", std::abs(th[d + 1] + th[d]),
              thr);
    }

    // dual sequences
    double rec = 0, prim = 0, first = 0, ratio = 0;
    for (const auto& seq : duals) {
        const auto& s = seq.star;
        const double t = seq.theta;
        const double scale = std::max(1.0, static_cast<double>(spec.mult[seq.index]));
        for (int j = 0; j <= D; ++j) {
            const double lhs = static_cast<double>(ia.c(j)) * (j > 0 ? s[j - 1] : 0.0) +
                               static_cast<double>(ia.b(j)) * (j < D ? s[j + 1] : 0.0);
            rec = std::max(rec, std::abs(lhs - t * s[j]) / (scale * std::max(1.0, k)));
        }
        Matrix rebuilt = Matrix::Zero(dm.n, dm.n);
        for (int j = 0; j <= D; ++j)
            rebuilt += s[j] * dm.real[j];
        prim = std::max(prim, max_abs(n * idem.E[seq.index] - rebuilt) / scale);
        first = std::max(first, std::abs(s[0] - static_cast<double>(spec.mult[seq.index])));
        ratio = std::max(ratio, std::abs(s[1] / s[0] - t / k));
        ratio = std::max(ratio, std::abs(s[2] / s[0] - (t * t - k) / (k * static_cast<double>(ia.b(1)))));
    }
    r.add("|X| E = sum theta*_j A_j", "|X| E = sum_j theta*_j A_j", prim, thr);
    r.add("dual recurrence", "c_j theta*_{j-1} + b_j theta*_{j+1} = theta theta*_j", rec, thr);
    r.add("theta*_0 = m", "theta*_0 = m_i", first, thr);
    r.add("dual ratios", "theta*_1/theta*_0 = theta/k, theta*_2/theta*_0 = (theta^2-k)/(k b_1)", ratio,
          thr);

    double opp = 0;
    for (const auto& a : duals)
        for (const auto& b : duals)
            if (a.index + b.index == D)
                for (int j = 0; j <= D; ++j)
                    opp = std::max(opp, std::abs(b.star[j] - (j % 2 == 0 ? 1 : -1) * a.star[j]) /
                                            std::max(1.0, std::abs(a.star[0])));
    r.add("opposite eigenvalue duals", "-theta has duals (theta*_0, -theta*_1, theta*_2, ...)", opp,
          thr);

    r.add("E_D = J'/|X|", "E_D = |X|^-1 J'", max_abs(idem.E[D] - dm.Jprime / n), thr);
    r.add("J' J = 0", "J' J = 0", max_abs(dm.Jprime * dm.J), thr);

    const auto num = ia.b(2) * (ia.c(3) - 1) + ia.c(2) * (ia.valency() - 2);
    r.add_flag("p^2_22 closed form", "p^2_22 = (b_2(c_3-1) + c_2(k-2))/c_2",
               num % ia.c(2) == 0 && num / ia.c(2) == counted_p222,
               "counted " + std::to_string(counted_p222));
    return r;
}

}  // namespace tautdrg
