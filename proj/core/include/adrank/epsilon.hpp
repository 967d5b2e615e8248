#pragma once

#include "adrank/instance.hpp"

namespace adrank {

enum class EpsilonMode { analytic, brute_force };

/// Minimum positive marginal value over all (scenario, subset, element)
/// triples. Analytic mode uses the per-application closed forms (1/max K_i,
/// 1/(m-1), 1/(m-min t_i), 1/max |outside own part|, and for region products
/// the documented lower bound min_i prod 1/|D_j^c|); it throws
/// std::invalid_argument on instances without an application tag or without
/// any positive marginal. Brute-force mode scans every subset (n <= 20,
/// SizeError otherwise) and works for any oracle.
double epsilon_of(const Instance& inst, EpsilonMode mode);

}  // namespace adrank
