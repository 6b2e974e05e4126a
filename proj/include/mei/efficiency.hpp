#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

#include "mei/error.hpp"

// Parameter counting, expressiveness, and the optimal-partition-size
// criterion. Expressiveness counts the degrees of freedom of the
// transformation system: each of the |R| relations generates K local
// C x C matching matrices, giving E = |R| * K * C^2 = |R| * D * C.
// Parameter efficiency is P = E / T with the per-partition-core count
// T = |E|*D + |R|*D + K*C^3; P reduces to |R|*C / (|E| + |R| + C^2),
// independent of D and K, and attains its maximum near sqrt(|E|+|R|).

namespace mei {

// Exact trainable-parameter count. Entity and relation embeddings are
// assumed to share the size D = K*C.
inline std::int64_t param_count(std::int64_t num_entities, std::int64_t num_relations,
                                std::int64_t d, std::int64_t k, std::int64_t c,
                                bool shared_core) {
    if (k < 1 || c < 1 || d != k * c)
        throw ConfigError("param_count: D must equal K*C");
    const std::int64_t cores = shared_core ? 1 : k;
    return (num_entities + num_relations) * d + cores * c * c * c;
}

inline std::int64_t expressiveness(std::int64_t num_relations, std::int64_t d, std::int64_t c) {
    return num_relations * d * c;
}

// P = E / T using the per-partition core count. Independent of D.
inline double efficiency(std::int64_t num_entities, std::int64_t num_relations, std::int64_t d,
                         std::int64_t k, std::int64_t c) {
    const double t = static_cast<double>(param_count(num_entities, num_relations, d, k, c, false));
    const double e = static_cast<double>(expressiveness(num_relations, d, c));
    return e / t;
}

namespace detail {

// P as a function of C alone, up to the constant factor |R|.
inline double efficiency_profile(std::int64_t num_entities, std::int64_t num_relations,
                                 std::int64_t c) {
    return static_cast<double>(c) /
           (static_cast<double>(num_entities + num_relations) + static_cast<double>(c) * c);
}

}  // namespace detail

// C* = min(round_P(sqrt(|E| + |R|)), D) where round_P picks floor or
// ceiling of the square root by evaluating P at both (ties go to the
// floor, which keeps the result deterministic).
inline std::int64_t optimal_partition_size(std::int64_t num_entities, std::int64_t num_relations,
                                           std::int64_t d) {
    if (num_entities < 1 || num_relations < 1 || d < 1)
        throw ConfigError("optimal_partition_size: inputs must be positive");
    const double root = std::sqrt(static_cast<double>(num_entities + num_relations));
    const std::int64_t lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(root)));
    const std::int64_t hi = static_cast<std::int64_t>(std::ceil(root));
    const double p_lo = detail::efficiency_profile(num_entities, num_relations, lo);
    const double p_hi = detail::efficiency_profile(num_entities, num_relations, hi);
    const std::int64_t c_star = p_hi > p_lo ? hi : lo;
    return std::min(c_star, d);
}

// The Theorem-1 quantities for one configuration. T and P use the
// per-partition core count exactly as in the theorem; the shared-core
// count is reported separately since the two are easy to conflate.
struct EfficiencyReport {
    std::int64_t num_entities = 0;
    std::int64_t num_relations = 0;
    std::int64_t d = 0;
    std::int64_t k = 0;
    std::int64_t c = 0;
    bool shared_core = false;
    std::int64_t total_params = 0;         // T = |E|D + |R|D + K*C^3
    std::int64_t shared_core_params = 0;   // |E|D + |R|D + C^3
    std::int64_t core_params = 0;          // core tensor entries only
    std::int64_t expressiveness = 0;       // E = |R|*D*C
    double parameter_efficiency = 0.0;     // P = E / T
    std::int64_t optimal_c = 0;            // C* for this |E|, |R|, D
};

inline EfficiencyReport efficiency_report(std::int64_t num_entities, std::int64_t num_relations,
                                          std::int64_t d, std::int64_t k, std::int64_t c,
                                          bool shared_core) {
    EfficiencyReport rep;
    rep.num_entities = num_entities;
    rep.num_relations = num_relations;
    rep.d = d;
    rep.k = k;
    rep.c = c;
    rep.shared_core = shared_core;
    rep.total_params = param_count(num_entities, num_relations, d, k, c, false);
    rep.shared_core_params = param_count(num_entities, num_relations, d, k, c, true);
    rep.core_params = (shared_core ? 1 : k) * c * c * c;
    rep.expressiveness = expressiveness(num_relations, d, c);
    rep.parameter_efficiency = efficiency(num_entities, num_relations, d, k, c);
    rep.optimal_c = optimal_partition_size(num_entities, num_relations, d);
    return rep;
}

// Tab-separated record: one line, fixed field order.
inline std::string to_tsv(const EfficiencyReport& r) {
    std::ostringstream out;
    out << r.num_entities << '\t' << r.num_relations << '\t' << r.d << '\t' << r.k << '\t' << r.c
        << '\t' << (r.shared_core ? 1 : 0) << '\t' << r.total_params << '\t'
        << r.shared_core_params << '\t' << r.expressiveness << '\t' << r.parameter_efficiency
        << '\t' << r.optimal_c;
    return out.str();
}

inline std::ostream& operator<<(std::ostream& out, const EfficiencyReport& r) {
    out << "entities            " << r.num_entities << '\n'
        << "relations           " << r.num_relations << '\n'
        << "embedding size D    " << r.d << " (" << r.k << " x " << r.c << ")\n"
        << "core mode           " << (r.shared_core ? "shared" : "per-partition") << '\n'
        << "core params         " << r.core_params << '\n'
        << "params (K cores)    " << r.total_params << '\n'
        << "params (shared)     " << r.shared_core_params << '\n'
        << "expressiveness      " << r.expressiveness << '\n'
        << "efficiency P        " << r.parameter_efficiency << '\n'
        << "optimal C           " << r.optimal_c << '\n';
    return out;
}

}  // namespace mei
