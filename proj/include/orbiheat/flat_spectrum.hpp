#pragma once

#include "orbiheat/heat_invariants.hpp"
#include "orbiheat/signature.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbiheat::flat {

/// Flat orbifolds obtained as quotients of the unit square torus R^2/Z^2.
///
///   Torus        trivial group
///   KleinBottle  glide (x,y) -> (x+1/2, -y)
///   Pillowcase   (x,y) -> (-x,-y)
///   Square       Klein four group generated by (x,y) -> (-x,y), (x,-y)
///   MirrorTorus  reflection (x,y) -> (-x,y)
enum class FlatModel { Torus, KleinBottle, Pillowcase, Square, MirrorTorus };

inline constexpr std::array<FlatModel, 5> kAllModels{FlatModel::Torus, FlatModel::KleinBottle, FlatModel::Pillowcase,
                                                     FlatModel::Square, FlatModel::MirrorTorus};

/// "torus", "klein", "pillowcase", "square", "mirror-torus".
const char* to_string(FlatModel model);
/// Inverse of to_string. Throws std::invalid_argument.
FlatModel model_from_string(const std::string& name);

double area(FlatModel model);
double mirror_length(FlatModel model);
OrbifoldSignature signature(FlatModel model);
/// K = 0 with the model's area and mirror length.
MetricData metric(FlatModel model);

inline constexpr double kDefaultThetaTolerance = 1e-17;

/// sum_{k in Z} exp(-4 pi^2 k^2 t). Summation stops once a bound on the whole
/// omitted tail falls below eps times the running sum.
double theta1(double t, double eps = kDefaultThetaTolerance);

/// Closed-form heat trace of the model at time t, built from theta1.
double heat_trace(FlatModel model, double t);

/// One eigenvalue 4 pi^2 s (s = k^2 + l^2) of the quotient and the dimension of
/// its deck-group-invariant eigenspace.
struct InvariantEigenvalue {
    long long lattice_norm;
    double eigenvalue;
    long long multiplicity;
};

/// Invariant spectrum up to the cutoff, ascending, zero multiplicities omitted.
/// Obtained by averaging the deck group over the torus characters
/// exp(2 pi i (kx + ly)) of each eigenvalue.
std::vector<InvariantEigenvalue> invariant_spectrum(FlatModel model, double cutoff);

/// sum of multiplicity * exp(-lambda t) over invariant_spectrum(model, cutoff).
double brute_force_trace(FlatModel model, double t, double cutoff);

struct TraceSample {
    double t;
    double value;
};

/// Trace samples with t strictly decreasing toward 0 and finite values.
class TraceSamples {
public:
    TraceSamples() = default;
    /// Throws std::invalid_argument when the ordering or finiteness invariants fail.
    explicit TraceSamples(std::vector<TraceSample> points);

    const std::vector<TraceSample>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<TraceSample> points_;
};

/// Geometric sampling grid t_i = t0 * ratio^i, i = 0..count-1.
struct SampleGrid {
    double t0 = 1e-2;
    double ratio = 0.7;
    int count = 12;

    std::vector<double> times() const;
};

TraceSamples sample_trace(FlatModel model, const SampleGrid& grid = {});

/// CSV with header "t,value".
void write_csv(const TraceSamples& samples, std::ostream& os);
TraceSamples read_csv(std::istream& is);

class FitError : public std::runtime_error {
public:
    enum class Kind { IllConditioned, InsufficientSamples };
    FitError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Condition numbers above this are rejected as IllConditioned.
inline constexpr double kMaxFitCondition = 1e12;

struct FitResult {
    std::map<Degree, double> coefficients;
    double residual_norm = 0.0;
    /// 2-norm condition number of the column-equilibrated design matrix.
    double condition_number = 0.0;
};

/// Least-squares fit of value_i = sum_d c_d t_i^d via column-pivoted QR.
FitResult fit_expansion(const TraceSamples& samples, std::span<const Degree> degrees);

/// Degrees fitted for the flat models: t^-1, t^-1/2, t^0.
inline constexpr std::array<Degree, 3> kFlatFitDegrees{Degree::MinusOne, Degree::MinusHalf, Degree::Zero};

struct DegreeComparison {
    Degree degree;
    double fitted;
    double predicted;
    double abs_err;
    /// abs_err / |predicted|; NaN when the prediction is exactly 0.
    double rel_err;

    /// rel_err <= tol for nonzero predictions, abs_err <= tol otherwise.
    bool within(double tol) const;
};

struct VerifyReport {
    FlatModel model;
    std::vector<DegreeComparison> degrees;
    double residual_norm;

    bool within(double tol) const;
};

/// Fits sampled traces and compares against full_expansion(signature, metric).
VerifyReport verify_model(FlatModel model, const SampleGrid& grid = {});

}  // namespace orbiheat::flat
