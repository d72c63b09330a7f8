#include <netrobust/errors.hpp>
#include <netrobust/spectral.hpp>

#include "small_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace netrobust {

std::string_view toString(EigenMethod method) {
    return method == EigenMethod::Lanczos ? "lanczos" : "power";
}

EigenMethod parseEigenMethod(std::string_view name) {
    if (name == "lanczos")
        return EigenMethod::Lanczos;
    if (name == "power")
        return EigenMethod::ShiftedPower;
    throw ConfigError("unknown eigen method '" + std::string(name) + "' (expected lanczos or power)");
}

void multiplyAdjacency(const Graph &g, const std::vector<double> &x, std::vector<double> &y) {
    const count n = g.numberOfNodes();
    const auto off = g.offsets();
    const auto adj = g.adjacency();
    y.resize(n);
    for (count u = 0; u < n; ++u) {
        double sum = 0.0;
        for (count e = off[u]; e < off[u + 1]; ++e)
            sum += x[adj[e]];
        y[u] = sum;
    }
}

namespace {

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(const std::vector<double> &a) {
    return std::sqrt(dot(a, a));
}

double residualNorm(const std::vector<double> &ax, const std::vector<double> &x, double theta) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = ax[i] - theta * x[i];
        s += r * r;
    }
    return std::sqrt(s);
}

// Flip to the non-negative orientation, clear rounding-level negatives, renormalize.
void orientPerron(std::vector<double> &x) {
    const double sum = std::accumulate(x.begin(), x.end(), 0.0);
    if (sum < 0.0)
        for (double &v : x)
            v = -v;
    for (double &v : x)
        v = std::max(v, 0.0);
    const double nrm = norm(x);
    if (nrm > 0.0)
        for (double &v : x)
            v /= nrm;
}

constexpr std::size_t kKrylovDim = 30;

Eigenpair lanczos(const Graph &g, const SpectralOptions &opt) {
    const count n = g.numberOfNodes();
    const std::size_t dim = static_cast<std::size_t>(std::min<count>(n, kKrylovDim));

    std::vector<std::vector<double>> basis(dim + 1, std::vector<double>(n));
    std::vector<double> alpha(dim), beta(dim);
    std::vector<double> w(n), y(n), ay(n);
    std::vector<double> tri, values, vectors;

    std::vector<double> start(n, 1.0 / std::sqrt(static_cast<double>(n)));
    count matvecs = 0;
    double best = 0.0;
    double bestResidual = INFINITY;

    while (true) {
        basis[0] = start;
        std::size_t steps = 0;
        bool invariant = false;
        double scale = 0.0;
        // the Krylov space is cut short when the product budget runs out
        for (std::size_t j = 0; j < dim && (j == 0 || matvecs < opt.max_iter); ++j) {
            multiplyAdjacency(g, basis[j], w);
            ++matvecs;
            if (j > 0)
                for (count t = 0; t < n; ++t)
                    w[t] -= beta[j - 1] * basis[j - 1][t];
            alpha[j] = dot(basis[j], w);
            for (count t = 0; t < n; ++t)
                w[t] -= alpha[j] * basis[j][t];
            // one full reorthogonalization pass keeps the basis orthonormal to rounding
            for (std::size_t i = 0; i <= j; ++i) {
                const double c = dot(basis[i], w);
                for (count t = 0; t < n; ++t)
                    w[t] -= c * basis[i][t];
            }
            beta[j] = norm(w);
            scale = std::max(scale, std::abs(alpha[j]) + beta[j]);
            steps = j + 1;
            if (beta[j] <= 1e-12 * std::max(scale, 1.0)) {
                invariant = true;
                break;
            }
            for (count t = 0; t < n; ++t)
                basis[j + 1][t] = w[t] / beta[j];
        }

        tri.assign(steps * steps, 0.0);
        for (std::size_t j = 0; j < steps; ++j) {
            tri[j * steps + j] = alpha[j];
            if (j + 1 < steps) {
                tri[j * steps + j + 1] = beta[j];
                tri[(j + 1) * steps + j] = beta[j];
            }
        }
        detail::jacobiEigen(tri, steps, values, vectors);
        const std::size_t top = static_cast<std::size_t>(
            std::max_element(values.begin(), values.end()) - values.begin());
        const double theta = values[top];

        std::fill(y.begin(), y.end(), 0.0);
        for (std::size_t j = 0; j < steps; ++j) {
            const double s = vectors[j * steps + top];
            for (count t = 0; t < n; ++t)
                y[t] += s * basis[j][t];
        }
        const double ynorm = norm(y);
        for (double &v : y)
            v /= ynorm;

        const double estimate = invariant ? 0.0 : std::abs(beta[steps - 1] * vectors[(steps - 1) * steps + top]);
        const double threshold = opt.tol * std::max(1.0, std::abs(theta));
        if (estimate <= threshold || matvecs >= opt.max_iter) {
            multiplyAdjacency(g, y, ay);
            ++matvecs;
            const double res = residualNorm(ay, y, theta);
            if (res < bestResidual) {
                best = theta;
                bestResidual = res;
            }
            if (res <= threshold) {
                orientPerron(y);
                return {theta, std::move(y), matvecs, res};
            }
            if (matvecs >= opt.max_iter)
                throw NumericalError("Lanczos did not converge within "
                                         + std::to_string(opt.max_iter) + " matrix-vector products",
                                     best, bestResidual, y);
        }
        start = y;
    }
}

Eigenpair shiftedPower(const Graph &g, const SpectralOptions &opt) {
    const count n = g.numberOfNodes();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(n);
    double theta = 0.0;
    double res = INFINITY;
    for (count it = 1; it <= opt.max_iter; ++it) {
        multiplyAdjacency(g, x, ax);
        theta = dot(x, ax);
        res = residualNorm(ax, x, theta);
        if (res <= opt.tol * std::max(1.0, std::abs(theta))) {
            orientPerron(x);
            return {theta, std::move(x), it, res};
        }
        for (count t = 0; t < n; ++t)
            ax[t] += x[t];
        const double nrm = norm(ax);
        for (count t = 0; t < n; ++t)
            x[t] = ax[t] / nrm;
    }
    throw NumericalError("power iteration did not converge within "
                             + std::to_string(opt.max_iter) + " iterations",
                         theta, res, x);
}

} // namespace

Eigenpair dominantEigenpair(const Graph &g, const SpectralOptions &options) {
    const count n = g.numberOfNodes();
    if (n == 0)
        return {};
    if (g.numberOfEdges() == 0)
        return {0.0, std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n))), 0, 0.0};
    return options.method == EigenMethod::Lanczos ? lanczos(g, options) : shiftedPower(g, options);
}

SpectralRadius spectralRadius(const Graph &g, const SpectralOptions &options) {
    auto pair = dominantEigenpair(g, options);
    return {std::max(pair.value, 0.0), pair.iterations, pair.residual};
}

ComponentSummary connectedComponents(const Graph &g) {
    const count n = g.numberOfNodes();
    constexpr count unseen = ~count{0};
    ComponentSummary out;
    out.component_of.assign(n, unseen);

    std::vector<node> queue;
    queue.reserve(n);
    count bestRoot = 0;
    for (node root = 0; root < n; ++root) {
        if (out.component_of[root] != unseen)
            continue;
        const count id = out.component_count++;
        queue.clear();
        queue.push_back(root);
        out.component_of[root] = id;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (node v : g.neighbors(queue[head]))
                if (out.component_of[v] == unseen) {
                    out.component_of[v] = id;
                    queue.push_back(v);
                }
        if (queue.size() > out.lcc_size) {
            out.lcc_size = queue.size();
            bestRoot = id;
        }
    }
    if (n > 0) {
        out.lcc_members.reserve(out.lcc_size);
        for (node u = 0; u < n; ++u)
            if (out.component_of[u] == bestRoot)
                out.lcc_members.push_back(u);
    }
    return out;
}

count largestComponentSize(const Graph &g) {
    const count n = g.numberOfNodes();
    std::vector<char> seen(n, 0);
    std::vector<node> queue;
    queue.reserve(n);
    count best = 0;
    for (node root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        queue.clear();
        queue.push_back(root);
        seen[root] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (node v : g.neighbors(queue[head]))
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
        best = std::max<count>(best, queue.size());
    }
    return best;
}

} // namespace netrobust
