#include "speclab/spectral.hpp"

#include "speclab/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace speclab {

namespace {

struct ComponentResult {
    double rho = 0.0;
    std::vector<double> x;  // indexed by position within the component
    double residual = 0.0;
    std::size_t iterations = 0;
};

ComponentResult power_iterate(const std::vector<std::vector<std::uint32_t>>& adj, double tol,
                              std::size_t max_iter)
{
    const std::size_t k = adj.size();
    ComponentResult out;
    std::vector<double> x(k, 1.0);
    std::vector<double> ax(k, 0.0);

    auto multiply = [&] {
        for (std::size_t u = 0; u < k; ++u) {
            double sum = 0.0;
            for (auto v : adj[u])
                sum += x[v];
            ax[u] = sum;
        }
    };

    for (std::size_t it = 0;; ++it) {
        multiply();
        double num = 0.0;
        double den = 0.0;
        for (std::size_t u = 0; u < k; ++u) {
            num += x[u] * ax[u];
            den += x[u] * x[u];
        }
        const double rho = num / den;
        double res = 0.0;
        for (std::size_t u = 0; u < k; ++u)
            res = std::max(res, std::abs(ax[u] - rho * x[u]));
        if (res <= tol) {
            out.rho = rho;
            out.x = x;
            out.residual = res;
            out.iterations = it;
            return out;
        }
        if (it >= max_iter) {
            std::ostringstream msg;
            msg << "power iteration did not reach residual " << tol << " in " << max_iter
                << " iterations (last residual " << res << ")";
            throw Error(ErrorCode::ConvergenceFailure, msg.str());
        }
        // x <- (A + I) x, renormalised to max entry 1.
        double top = 0.0;
        for (std::size_t u = 0; u < k; ++u) {
            ax[u] += x[u];
            top = std::max(top, ax[u]);
        }
        for (std::size_t u = 0; u < k; ++u)
            x[u] = ax[u] / top;
    }
}

// Largest root of a monic polynomial with all-real roots, by Newton's method
// started above every root (the iterates then decrease monotonically).
double largest_real_root(const std::vector<long double>& monic, long double upper)
{
    auto eval = [&](long double x, long double& deriv) {
        long double p = 0.0L;
        deriv = 0.0L;
        for (auto c : monic) {
            deriv = deriv * x + p;
            p = p * x + c;
        }
        return p;
    };
    long double x = upper;
    for (int i = 0; i < 500; ++i) {
        long double d = 0.0L;
        const long double p = eval(x, d);
        if (d == 0.0L)
            break;
        const long double next = x - p / d;
        if (!(next < x))
            break;
        x = next;
    }
    return static_cast<double>(x);
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol, std::size_t max_iter)
{
    if (g.order() == 0)
        throw Error(ErrorCode::EmptyGraph, "spectral radius of the null graph");
    if (!(tol > 0.0))
        throw Error(ErrorCode::PreconditionFailed, "tolerance must be positive");

    SpectralResult best;
    bool have = false;
    for (const auto& comp : connected_components(g)) {
        const auto members = comp.members();
        std::vector<std::uint32_t> local(g.order(), 0);
        for (std::size_t i = 0; i < members.size(); ++i)
            local[members[i]] = static_cast<std::uint32_t>(i);
        std::vector<std::vector<std::uint32_t>> adj(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Vertex v : g.neighbors(members[i]))
                adj[i].push_back(local[v]);

        auto r = power_iterate(adj, tol, max_iter);
        if (!have || r.rho > best.rho) {
            best.rho = r.rho;
            best.vector.assign(g.order(), 0.0);
            for (std::size_t i = 0; i < members.size(); ++i)
                best.vector[members[i]] = r.x[i];
            best.residual = r.residual;
            have = true;
        }
        best.iterations = std::max(best.iterations, r.iterations);
    }
    return best;
}

double quotient_spectral_radius(const std::vector<std::vector<double>>& q)
{
    const std::size_t k = q.size();
    for (const auto& row : q)
        if (row.size() != k)
            throw Error(ErrorCode::PreconditionFailed, "quotient matrix is not square");
    if (k == 0)
        throw Error(ErrorCode::EmptyGraph, "empty quotient matrix");

    // Characteristic polynomial det(xI - Q) by the Faddeev-LeVerrier recurrence.
    using Matrix = std::vector<std::vector<long double>>;
    Matrix m(k, std::vector<long double>(k, 0.0L));
    std::vector<long double> coeffs{1.0L};
    Matrix qm(k, std::vector<long double>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            qm[i][j] = q[i][j];
    long double c = 1.0L;
    for (std::size_t step = 1; step <= k; ++step) {
        // M_step = Q M_{step-1} + c_{step-1} I
        Matrix next(k, std::vector<long double>(k, 0.0L));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                long double s = 0.0L;
                for (std::size_t l = 0; l < k; ++l)
                    s += qm[i][l] * m[l][j];
                next[i][j] = s + (i == j ? c : 0.0L);
            }
        }
        m = next;
        long double trace = 0.0L;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l)
                trace += qm[i][l] * m[l][i];
        c = -trace / static_cast<long double>(step);
        coeffs.push_back(c);
    }

    long double upper = 0.0L;
    for (const auto& row : q) {
        long double sum = 0.0L;
        for (double v : row)
            sum += std::abs(v);
        upper = std::max(upper, sum);
    }
    return largest_real_root(coeffs, upper + 1.0L);
}

double rho_closed_form(const FamilySpec& spec)
{
    spec.validate();
    switch (spec.kind) {
    case FamilyKind::Complete:
        return static_cast<double>(spec.at("n") - 1);
    case FamilyKind::Cycle:
        return 2.0;
    case FamilyKind::CompleteBipartite:
        return std::sqrt(static_cast<double>(spec.at("a")) * static_cast<double>(spec.at("b")));
    case FamilyKind::KsJoinIndependent: {
        // Quotient [[s-1, n-s], [s, 0]]: x^2 - (s-1)x - s(n-s) = 0.
        const double s = spec.at("s");
        const double n = spec.at("n");
        return ((s - 1.0) + std::sqrt((s - 1.0) * (s - 1.0) + 4.0 * s * (n - s))) / 2.0;
    }
    case FamilyKind::KtJoinMatching: {
        const int t = spec.at("t");
        const int n = spec.at("n");
        const int rest = n - t;
        if (rest % 2 == 0) {
            // Quotient [[t-1, n-t], [t, 1]]: x^2 - t x + (t-1) - t(n-t) = 0.
            const double td = t;
            const double disc = td * td - 4.0 * ((td - 1.0) - td * rest);
            return (td + std::sqrt(disc)) / 2.0;
        }
        // Cells: clique, matched vertices, the isolated vertex of M_{n-t}.
        const double matched = rest - 1;
        if (matched == 0)
            return quotient_spectral_radius({{t - 1.0, 1.0}, {static_cast<double>(t), 0.0}});
        return quotient_spectral_radius({{t - 1.0, matched, 1.0},
                                         {static_cast<double>(t), 1.0, 0.0},
                                         {static_cast<double>(t), 0.0, 0.0}});
    }
    default:
        throw Error(ErrorCode::UnsupportedFamily,
                    "no closed form for family '" + std::string(family_name(spec.kind)) + "'");
    }
}

PerronAudit verify_perron_bound(const Graph& g, const SpectralResult& result, double tol)
{
    if (!is_connected(g) || g.order() == 0)
        throw Error(ErrorCode::Disconnected, "Perron bound audit needs a connected graph");
    if (result.vector.size() != g.order())
        throw Error(ErrorCode::PreconditionFailed, "spectral result does not belong to this graph");
    PerronAudit a;
    const auto it = std::min_element(result.vector.begin(), result.vector.end());
    a.min_entry = *it;
    a.argmin = static_cast<Vertex>(it - result.vector.begin());
    a.inverse_rho = result.rho > 0.0 ? 1.0 / result.rho : INFINITY;
    a.margin = a.min_entry - a.inverse_rho;
    a.satisfied = a.margin >= -tol;
    return a;
}

}  // namespace speclab
