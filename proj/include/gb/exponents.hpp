#ifndef GB_EXPONENTS_HPP
#define GB_EXPONENTS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gb/errors.hpp"

namespace gb {

/// Closed-form rules for continuing an exponent sequence past its stored prefix.
enum class GeneratorKind {
    Linear,    ///< r_j = a*j + b
    Power,     ///< r_j = j^p
    Bounded,   ///< r_j = c - 1/j  (bounded above by c, so r_j does not tend to infinity)
    Explicit,  ///< finite tail list, no rule beyond it
    Custom,    ///< arbitrary callable, not serializable
};

/**
 * @brief Rule for generating exponents r_1 < r_2 < ... on demand.
 *
 * The prefix holds the explicitly chosen initial exponents r_1..r_n0 (the
 * implicit r_0 = 0 is never stored here); the kind supplies r_j for j > n0.
 */
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Explicit;
    std::vector<double> prefix;  // r_1..r_n0
    double a = 0.0, b = 0.0;     // Linear
    double p = 0.0;              // Power
    double c = 0.0;              // Bounded
    std::vector<double> tail;    // Explicit continuation r_{n0+1}, ...
    std::function<double(std::size_t)> rule;  // Custom

    static GeneratorSpec linear(std::vector<double> prefix, double a, double b = 0.0);
    static GeneratorSpec power(std::vector<double> prefix, double p);
    static GeneratorSpec bounded(std::vector<double> prefix, double c);
    static GeneratorSpec explicit_list(std::vector<double> prefix, std::vector<double> tail = {});
    static GeneratorSpec custom(std::vector<double> prefix, std::function<double(std::size_t)> rule);

    /// r_j for j >= 1 (prefix entry or generated continuation).
    /// Throws NoGenerator when j is past what the kind can produce.
    double value_at(std::size_t j) const;

    /// Largest j for which value_at is defined, or SIZE_MAX for unbounded kinds.
    std::size_t max_index() const;

    std::string kind_name() const;
};

/**
 * @brief The sequence Lambda_m = (0 = r_0, r_1, ..., r_m).
 *
 * Strictly increasing, finite, nonnegative, with a minimum gap guard of
 * kGapMin between consecutive entries (divided differences elsewhere divide
 * by exponent gaps). Immutable after construction.
 */
class ExponentSequence {
public:
    static constexpr double kGapMin = 1e-9;

    explicit ExponentSequence(std::vector<double> values,
                              std::optional<GeneratorSpec> generator = std::nullopt);

    /// Seed sequence (0, prefix...) carrying the generator for extension.
    static ExponentSequence from_generator(GeneratorSpec generator);

    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    /// m, where the sequence is (r_0, ..., r_m).
    std::size_t order() const { return values_.size() - 1; }
    std::size_t size() const { return values_.size(); }

    const std::optional<GeneratorSpec>& generator() const { return generator_; }

private:
    std::vector<double> values_;
    std::optional<GeneratorSpec> generator_;
};

/// Materialize exactly m+1 values (r_0..r_m); the stored prefix is preserved
/// bit-exactly and a longer sequence is truncated.
ExponentSequence extend(const ExponentSequence& seq, std::size_t m);
ExponentSequence extend(const GeneratorSpec& gen, std::size_t m);

/// Difference operator: Delta^k Lambda_m = (0, r_{k+1}-r_k, ..., r_m-r_k).
ExponentSequence delta(const ExponentSequence& seq, std::size_t k);

/// eta_i^{(k)}(Lambda_m): i-th control coefficient of t^{r_{k+1}-r_k} with
/// respect to the Muntz space of Delta^k Lambda_m,
///   eta_i^{(k)} = prod_{j=i+k+1}^{m} (1 - (r_{k+1}-r_k)/(r_j-r_k)),
/// with the conventions eta = 0 for i <= 0 and eta = 1 for i = m-k.
double eta(const ExponentSequence& seq, std::size_t k, long i);

/// All eta_i^{(k)} for i = 0..m-k in one backward pass.
std::vector<double> eta_row(const ExponentSequence& seq, std::size_t k = 0);

enum class MuntzVerdict { Diverges, Converges, Unknown };

/**
 * @brief Analytic verdict on the Muntz condition sum 1/r_i = infinity.
 *
 * The verdict is decided by the generator kind alone; partial sums are
 * reported as evidence, never used to infer divergence.
 */
struct MuntzReport {
    MuntzVerdict verdict = MuntzVerdict::Unknown;
    bool limit_certified = false;  ///< lim r_s classifiable from the kind
    bool limit_finite = false;     ///< certified finite limit (dichotomy hypothesis fails)
    std::vector<std::pair<std::size_t, double>> partial_sums;  ///< (N, sum_{i<=N} 1/r_i)
};

const char* to_string(MuntzVerdict v);

MuntzReport muntz_condition(const GeneratorSpec& gen);

/// Partial product prod_{j=2}^{m} (1 - r_1/r_j) and, when the generator kind
/// admits it, the extrapolated limit delta = lim_m of that product.
struct GapEstimate {
    double partial = 0.0;
    std::optional<double> limit;
};

GapEstimate gap_delta(const GeneratorSpec& gen, std::size_t m_max);
GapEstimate gap_delta(const ExponentSequence& seq, std::size_t m_max);

}  // namespace gb

#endif
