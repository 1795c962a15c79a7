#include "gb/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gb {

namespace {

// Divided differences are reserved for small orders; beyond this the
// cancellation in the recursion outgrows double precision.
constexpr std::size_t kMaxDividedDifferenceOrder = 12;

void check_t_domain(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("parameter t must lie in [0,1]");
}

}  // namespace

double power_ft(double t, double x) {
    return std::pow(t, x);  // pow(0,0) = 1 per IEEE, matching H^n_0(0) = 1
}

DividedDifferenceTable divided_difference_table(std::vector<double> nodes, double t) {
    check_t_domain(t);
    if (nodes.empty()) throw InvalidArgument("divided_difference: no nodes");
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (nodes[i] - nodes[i - 1] < ExponentSequence::kGapMin)
            throw NodeCollision("divided_difference: node gap below minimum");

    DividedDifferenceTable table;
    table.nodes = nodes;
    table.t = t;
    const std::size_t n = nodes.size();
    table.columns.reserve(n);
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = power_ft(t, nodes[i]);
    table.columns.push_back(col);
    for (std::size_t l = 1; l < n; ++l) {
        std::vector<double> next(n - l);
        const std::vector<double>& prev = table.columns.back();
        for (std::size_t i = 0; i + l < n; ++i)
            next[i] = (prev[i + 1] - prev[i]) / (nodes[i + l] - nodes[i]);
        table.columns.push_back(std::move(next));
    }

    // Symmetric-sum closed form, kept as an independent route for the
    // conditioning cross-check.
    double sym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double denom = 1.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) denom *= nodes[i] - nodes[j];
        sym += power_ft(t, nodes[i]) / denom;
    }
    table.symmetric_sum = sym;

    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < n; ++i) min_gap = std::min(min_gap, nodes[i] - nodes[i - 1]);
    const double scale = std::max(std::abs(table.value()), std::abs(sym));
    if (n > 1 && min_gap >= 1e-3 && scale > 0.0 &&
        std::abs(table.value() - sym) > DividedDifferenceTable::kDdAgreeTol * scale)
        table.conditioning_warning = true;
    return table;
}

double divided_difference(std::vector<double> nodes, double t) {
    return divided_difference_table(std::move(nodes), t).value();
}

namespace {

double gelfond_bernstein_dd(const ExponentSequence& seq, std::size_t k, double t) {
    const std::size_t n = seq.order();
    const std::vector<double>& r = seq.values();
    if (k == n) return power_ft(t, r[n]);
    std::vector<double> nodes(r.begin() + static_cast<long>(k), r.end());
    const double dd = divided_difference(std::move(nodes), t);
    double factor = 1.0;
    for (std::size_t j = k + 1; j <= n; ++j) factor *= r[j];
    const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
    return sign * factor * dd;
}

}  // namespace

std::vector<double> basis_row(const ExponentSequence& seq, double t) {
    check_t_domain(t);
    const std::size_t n = seq.order();
    std::vector<double> row(n + 1, 0.0);
    if (t == 0.0) {
        row[0] = 1.0;
        return row;
    }
    if (t == 1.0) {
        row[n] = 1.0;
        return row;
    }
    if (n == 0) {
        row[0] = 1.0;  // H^0_0 = t^0
        return row;
    }
    const std::vector<double>& r = seq.values();
    const double rate_max = r[n];
    const double lambda = -std::log(t);
    const double mu = lambda * rate_max;  // Poisson mean of the uniformized clock

    // For t deep below the exponent scale the chain is certainly absorbed:
    // a Chernoff bound on the total holding time caps the mass outside
    // state 0 by e * r_1 * lambda * t^{r_1} / prod(1 - r_1/r_j). When that
    // is below 1e-18 the row is e_0 to well under double roundoff.
    if (lambda * r[1] > 1.0) {
        double log_eta1 = 0.0;
        for (std::size_t j = 2; j <= n; ++j) log_eta1 += std::log1p(-r[1] / r[j]);
        const double log_bound = 1.0 + std::log(r[1] * lambda) - r[1] * lambda - log_eta1;
        if (log_bound < std::log(1e-18)) {
            row[0] = 1.0;
            return row;
        }
    }

    // v starts as the indicator of state n and is advanced through the
    // uniformized one-step kernel: state j moves down with probability
    // r_j / r_n and stays put otherwise. Everything remains nonnegative.
    std::vector<double> v(n + 1, 0.0);
    v[n] = 1.0;
    std::vector<double> stay(n + 1), move(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        move[j] = r[j] / rate_max;
        stay[j] = 1.0 - move[j];
    }

    const std::size_t steps =
        static_cast<std::size_t>(std::ceil(mu + 10.0 * std::sqrt(mu + 1.0) + 30.0));
    const double log_mu = std::log(mu);
    for (std::size_t q = 0; q <= steps; ++q) {
        const double lw = -mu + static_cast<double>(q) * log_mu -
                          std::lgamma(static_cast<double>(q) + 1.0);
        if (lw > -745.0) {  // below this the Poisson weight underflows anyway
            const double w = std::exp(lw);
            for (std::size_t kk = 0; kk <= n; ++kk) row[kk] += w * v[kk];
        }
        if (q == steps) break;
        double carry = 0.0;  // probability arriving from the state above
        for (std::size_t j = n + 1; j-- > 0;) {
            const double down = move[j] * v[j];
            v[j] = stay[j] * v[j] + carry;
            carry = down;
        }
    }
    return row;
}

double gelfond_bernstein(const ExponentSequence& seq, std::size_t k, double t) {
    check_t_domain(t);
    const std::size_t n = seq.order();
    if (k > n) throw IndexOutOfRange("gelfond_bernstein: k exceeds sequence order");
    // Endpoint values are exact: positivity plus partition of unity pin them.
    if (t == 0.0) return k == 0 ? 1.0 : 0.0;
    if (t == 1.0) return k == n ? 1.0 : 0.0;
    if (n <= kMaxDividedDifferenceOrder) return gelfond_bernstein_dd(seq, k, t);
    return basis_row(seq, t)[k];
}

GelfondCurve::GelfondCurve(ExponentSequence exps, std::vector<Point> points)
    : exponents(std::move(exps)), control_points(std::move(points)) {
    if (control_points.size() != exponents.size())
        throw InvalidArgument("GelfondCurve: control point count must equal exponent count");
    const std::size_t dim = control_points.front().size();
    if (dim == 0) throw InvalidArgument("GelfondCurve: zero-dimensional points");
    for (const Point& p : control_points) {
        if (p.size() != dim)
            throw InvalidArgument("GelfondCurve: inconsistent point dimensions");
        for (double c : p)
            if (!std::isfinite(c)) throw InvalidArgument("GelfondCurve: non-finite coordinate");
    }
}

Point eval_curve(const GelfondCurve& curve, double t) {
    const std::vector<double> row = basis_row(curve.exponents, t);
    Point out(curve.dimension(), 0.0);
    for (std::size_t k = 0; k < row.size(); ++k)
        for (std::size_t d = 0; d < out.size(); ++d)
            out[d] += row[k] * curve.control_points[k][d];
    return out;
}

double hirschman_widder(const GeneratorSpec& gen, std::size_t m,
                        const std::function<double(double)>& f, double x) {
    if (m < 1) throw InvalidArgument("hirschman_widder: m must be >= 1");
    const ExponentSequence seq = extend(gen, m);
    const double r1 = seq[1];
    if (!(r1 > 0.0)) throw InvalidArgument("hirschman_widder: r_1 must be positive");
    const std::vector<double> nodes = eta_row(seq, 0);
    const std::vector<double> row = basis_row(seq, x);
    double sum = 0.0;
    for (std::size_t i = 0; i <= m; ++i) {
        const double node = nodes[i] > 0.0 ? std::pow(nodes[i], 1.0 / r1) : 0.0;
        sum += f(node) * row[i];
    }
    return sum;
}

double LemmaResiduals::max() const {
    return std::max(elevation, std::max(t_shift, scaling));
}

LemmaResiduals lemma_identities(const ExponentSequence& seq, double t, double alpha) {
    check_t_domain(t);
    if (seq.size() < 2) throw InvalidArgument("lemma_identities: sequence too short");
    if (!(alpha > 0.0)) throw InvalidArgument("lemma_identities: alpha must be positive");
    const std::vector<double>& r = seq.values();
    LemmaResiduals res;

    // One-step elevation identity between the sequence and its prefix:
    // H^n_{k} = ((r_{n+1}-r_k)/r_{n+1}) H^{n+1}_{k} + (r_{k+1}/r_{n+1}) H^{n+1}_{k+1}.
    {
        const std::size_t n1 = seq.order();  // order of the longer sequence
        const ExponentSequence prefix(
            std::vector<double>(r.begin(), r.end() - 1));
        const double r_top = r[n1];
        for (std::size_t k = 0; k + 1 <= n1; ++k) {
            const double lhs = gelfond_bernstein(prefix, k, t);
            const double rhs = (r_top - r[k]) / r_top * gelfond_bernstein(seq, k, t) +
                               r[k + 1] / r_top * gelfond_bernstein(seq, k + 1, t);
            res.elevation = std::max(res.elevation, std::abs(lhs - rhs));
        }
    }

    // t-shift identity: t H^n_{k,Lambda} = prod_{j=k+1}^n (r_j/(r_j+1)) H^{n+1}_{k+1,Lambda'}
    // with Lambda' = (0, 1, r_1+1, ..., r_n+1).
    {
        const std::size_t n = seq.order();
        std::vector<double> shifted;
        shifted.reserve(n + 2);
        shifted.push_back(0.0);
        shifted.push_back(1.0);
        for (std::size_t j = 1; j <= n; ++j) shifted.push_back(r[j] + 1.0);
        const ExponentSequence lam1(std::move(shifted));
        for (std::size_t k = 0; k <= n; ++k) {
            double coeff = 1.0;
            for (std::size_t j = k + 1; j <= n; ++j) coeff *= r[j] / (r[j] + 1.0);
            const double lhs = t * gelfond_bernstein(seq, k, t);
            const double rhs = coeff * gelfond_bernstein(lam1, k + 1, t);
            res.t_shift = std::max(res.t_shift, std::abs(lhs - rhs));
        }
    }

    // Exponent-scaling identity: H^n_{k,Lambda}(t^alpha) = H^n_{k,alpha Lambda}(t).
    {
        std::vector<double> scaled(r);
        for (double& x : scaled) x *= alpha;
        const ExponentSequence lam2(std::move(scaled));
        const double t_alpha = std::pow(t, alpha);
        for (std::size_t k = 0; k < seq.size(); ++k) {
            const double lhs = gelfond_bernstein(seq, k, t_alpha);
            const double rhs = gelfond_bernstein(lam2, k, t);
            res.scaling = std::max(res.scaling, std::abs(lhs - rhs));
        }
    }
    return res;
}

}  // namespace gb
