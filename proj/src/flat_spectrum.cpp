#include "orbiheat/flat_spectrum.hpp"

#include "orbiheat/compensated_sum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

namespace orbiheat::flat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPiSquared = 4.0 * kPi * kPi;

// Affine isometry x -> A x + b of R^2/Z^2 with b in (1/2)Z^2, stored as 2b.
struct DeckElement {
    int a11, a12, a21, a22;
    int twice_bx, twice_by;
};

std::vector<DeckElement> deck_group(FlatModel model) {
    constexpr DeckElement identity{1, 0, 0, 1, 0, 0};
    switch (model) {
        case FlatModel::Torus: return {identity};
        case FlatModel::KleinBottle: return {identity, {1, 0, 0, -1, 1, 0}};
        case FlatModel::Pillowcase: return {identity, {-1, 0, 0, -1, 0, 0}};
        case FlatModel::Square:
            return {identity, {-1, 0, 0, 1, 0, 0}, {1, 0, 0, -1, 0, 0}, {-1, 0, 0, -1, 0, 0}};
        case FlatModel::MirrorTorus: return {identity, {-1, 0, 0, 1, 0, 0}};
    }
    return {identity};
}

// Trace of f -> f o g on the span of the characters with k^2 + l^2 = s.
// chi_n(Ax + b) = exp(2 pi i n.b) chi_{A^T n}(x): only characters fixed by A^T
// contribute, each with the sign exp(2 pi i n.b) = (-1)^{n.(2b)}.
long long character_trace(const DeckElement& g, const std::vector<std::pair<long long, long long>>& shell) {
    long long trace = 0;
    for (const auto& [k, l] : shell) {
        const long long tk = g.a11 * k + g.a21 * l;
        const long long tl = g.a12 * k + g.a22 * l;
        if (tk != k || tl != l) continue;
        const long long phase = k * g.twice_bx + l * g.twice_by;
        trace += (phase % 2 == 0) ? 1 : -1;
    }
    return trace;
}

}  // namespace

const char* to_string(FlatModel model) {
    switch (model) {
        case FlatModel::Torus: return "torus";
        case FlatModel::KleinBottle: return "klein";
        case FlatModel::Pillowcase: return "pillowcase";
        case FlatModel::Square: return "square";
        case FlatModel::MirrorTorus: return "mirror-torus";
    }
    return "?";
}

FlatModel model_from_string(const std::string& name) {
    for (FlatModel m : kAllModels) {
        if (name == to_string(m)) return m;
    }
    throw std::invalid_argument("unknown flat model '" + name +
                                "' (expected torus, klein, pillowcase, square, mirror-torus)");
}

double area(FlatModel model) {
    switch (model) {
        case FlatModel::Torus: return 1.0;
        case FlatModel::KleinBottle: return 0.5;
        case FlatModel::Pillowcase: return 0.5;
        case FlatModel::Square: return 0.25;
        case FlatModel::MirrorTorus: return 0.5;
    }
    return 0.0;
}

double mirror_length(FlatModel model) {
    switch (model) {
        case FlatModel::Square:
        case FlatModel::MirrorTorus: return 2.0;
        default: return 0.0;
    }
}

OrbifoldSignature signature(FlatModel model) {
    switch (model) {
        case FlatModel::Torus: return OrbifoldSignature::surface_of_genus(1);
        case FlatModel::KleinBottle: return {0, 2, {}};
        case FlatModel::Pillowcase: return OrbifoldSignature::cones({2, 2, 2, 2});
        case FlatModel::Square: return {0, 0, {}, {{2, 2, 2, 2}}};
        case FlatModel::MirrorTorus: return {0, 0, {}, {{}, {}}};
    }
    return {};
}

MetricData metric(FlatModel model) {
    MetricData m;
    m.curvature = 0.0;
    m.area = area(model);
    m.mirror_length = mirror_length(model);
    return m;
}

double theta1(double t, double eps) {
    if (!(t > 0.0)) throw std::domain_error("theta1 needs t > 0");
    if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("theta1 needs 0 < eps < 1");
    const double a = kFourPiSquared * t;
    CompensatedSum sum;
    sum.add(1.0);
    for (long long k = 1;; ++k) {
        const double kk = static_cast<double>(k);
        const double term = 2.0 * std::exp(-a * kk * kk);
        // (k+i)^2 >= k^2 + (2k+1) i, so the tail from k on is at most term / (1 - q).
        const double q = std::exp(-a * (2.0 * kk + 1.0));
        if (term == 0.0 || term / (1.0 - q) < eps * sum.value()) break;
        sum.add(term);
    }
    return sum.value();
}

double heat_trace(FlatModel model, double t) {
    const double theta = theta1(t);
    const double theta_sq = theta * theta;
    switch (model) {
        case FlatModel::Torus: return theta_sq;
        case FlatModel::KleinBottle: return theta1(4.0 * t) + (theta_sq - theta) / 2.0;
        case FlatModel::Pillowcase: return (theta_sq + 1.0) / 2.0;
        case FlatModel::Square: return ((theta + 1.0) / 2.0) * ((theta + 1.0) / 2.0);
        case FlatModel::MirrorTorus: return (theta_sq + theta) / 2.0;
    }
    return 0.0;
}

std::vector<InvariantEigenvalue> invariant_spectrum(FlatModel model, double cutoff) {
    if (!(cutoff > 0.0)) throw std::domain_error("eigenvalue cutoff must be positive");
    // Inclusive cutoff, tolerant of the rounding in cutoff / (4 pi^2).
    const auto max_norm = static_cast<long long>(std::floor(cutoff / kFourPiSquared * (1.0 + 1e-12)));
    const auto radius = static_cast<long long>(std::floor(std::sqrt(static_cast<double>(max_norm)))) + 1;

    std::vector<std::vector<std::pair<long long, long long>>> shells(static_cast<std::size_t>(max_norm) + 1);
    for (long long k = -radius; k <= radius; ++k) {
        for (long long l = -radius; l <= radius; ++l) {
            const long long s = k * k + l * l;
            if (s <= max_norm) shells[static_cast<std::size_t>(s)].emplace_back(k, l);
        }
    }

    const auto group = deck_group(model);
    const auto order = static_cast<long long>(group.size());
    std::vector<InvariantEigenvalue> out;
    for (long long s = 0; s <= max_norm; ++s) {
        const auto& shell = shells[static_cast<std::size_t>(s)];
        if (shell.empty()) continue;
        long long total = 0;
        for (const auto& g : group) total += character_trace(g, shell);
        if (total % order != 0) {
            throw std::logic_error("group average is not an integer dimension");
        }
        if (total / order > 0) {
            out.push_back({s, kFourPiSquared * static_cast<double>(s), total / order});
        }
    }
    return out;
}

double brute_force_trace(FlatModel model, double t, double cutoff) {
    CompensatedSum sum;
    for (const auto& e : invariant_spectrum(model, cutoff)) {
        sum.add(static_cast<double>(e.multiplicity) * std::exp(-e.eigenvalue * t));
    }
    return sum.value();
}

TraceSamples::TraceSamples(std::vector<TraceSample> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        if (!(p.t > 0.0) || !std::isfinite(p.t) || !std::isfinite(p.value)) {
            throw std::invalid_argument("trace samples need positive finite t and finite values");
        }
        if (i > 0 && !(p.t < points_[i - 1].t)) {
            throw std::invalid_argument("trace sample times must be strictly decreasing");
        }
    }
}

std::vector<double> SampleGrid::times() const {
    if (!(t0 > 0.0) || !(ratio > 0.0 && ratio < 1.0) || count < 1) {
        throw std::invalid_argument("sample grid needs t0 > 0, 0 < ratio < 1, count >= 1");
    }
    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) ts.push_back(t0 * std::pow(ratio, i));
    return ts;
}

TraceSamples sample_trace(FlatModel model, const SampleGrid& grid) {
    std::vector<TraceSample> points;
    for (double t : grid.times()) points.push_back({t, heat_trace(model, t)});
    return TraceSamples(std::move(points));
}

void write_csv(const TraceSamples& samples, std::ostream& os) {
    const auto old_precision = os.precision(17);
    os << "t,value\n";
    for (const auto& p : samples.points()) os << p.t << ',' << p.value << '\n';
    os.precision(old_precision);
}

TraceSamples read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("empty samples CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t,value") throw std::invalid_argument("samples CSV must start with header 't,value'");
    std::vector<TraceSample> points;
    int line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        try {
            if (comma == std::string::npos) throw std::invalid_argument("missing comma");
            std::size_t used_t = 0;
            std::size_t used_v = 0;
            const std::string t_text = line.substr(0, comma);
            const std::string v_text = line.substr(comma + 1);
            const double t = std::stod(t_text, &used_t);
            const double v = std::stod(v_text, &used_v);
            if (used_t != t_text.size() || used_v != v_text.size()) throw std::invalid_argument("trailing text");
            points.push_back({t, v});
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed samples CSV at line " + std::to_string(line_no));
        }
    }
    return TraceSamples(std::move(points));
}

FitResult fit_expansion(const TraceSamples& samples, std::span<const Degree> degrees) {
    const auto n = static_cast<Eigen::Index>(samples.size());
    const auto p = static_cast<Eigen::Index>(degrees.size());
    if (p == 0 || n < p) {
        throw FitError(FitError::Kind::InsufficientSamples,
                       std::to_string(n) + " samples cannot determine " + std::to_string(p) + " coefficients");
    }

    Eigen::MatrixXd design(n, p);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = samples.points()[static_cast<std::size_t>(i)];
        rhs(i) = s.value;
        for (Eigen::Index j = 0; j < p; ++j) design(i, j) = std::pow(s.t, exponent(degrees[static_cast<std::size_t>(j)]));
    }

    // Equilibrate columns so the condition number reflects the basis, not its units.
    const Eigen::VectorXd scale = design.colwise().norm().transpose();
    const Eigen::MatrixXd scaled = design * scale.cwiseInverse().asDiagonal();

    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled);
    const auto& sv = svd.singularValues();
    const double cond = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
    if (!(cond <= kMaxFitCondition)) {
        std::ostringstream msg;
        msg << "design matrix condition number " << cond << " exceeds " << kMaxFitCondition;
        throw FitError(FitError::Kind::IllConditioned, msg.str());
    }

    const Eigen::VectorXd y = scaled.colPivHouseholderQr().solve(rhs);
    const Eigen::VectorXd coeffs = y.cwiseQuotient(scale);

    FitResult result;
    for (Eigen::Index j = 0; j < p; ++j) result.coefficients[degrees[static_cast<std::size_t>(j)]] = coeffs(j);
    result.residual_norm = (design * coeffs - rhs).norm();
    result.condition_number = cond;
    return result;
}

bool DegreeComparison::within(double tol) const {
    return predicted != 0.0 ? rel_err <= tol : abs_err <= tol;
}

bool VerifyReport::within(double tol) const {
    return std::all_of(degrees.begin(), degrees.end(), [tol](const auto& d) { return d.within(tol); });
}

VerifyReport verify_model(FlatModel model, const SampleGrid& grid) {
    const HeatExpansion predicted = full_expansion(signature(model), metric(model));
    const FitResult fit = fit_expansion(sample_trace(model, grid), kFlatFitDegrees);

    VerifyReport report{model, {}, fit.residual_norm};
    for (Degree d : kFlatFitDegrees) {
        const double fitted = fit.coefficients.at(d);
        const double expected = predicted.coefficient(d);
        const double abs_err = std::abs(fitted - expected);
        const double rel_err =
            expected != 0.0 ? abs_err / std::abs(expected) : std::numeric_limits<double>::quiet_NaN();
        report.degrees.push_back({d, fitted, expected, abs_err, rel_err});
    }
    return report;
}

}  // namespace orbiheat::flat
