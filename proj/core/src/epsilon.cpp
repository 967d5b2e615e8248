#include "adrank/epsilon.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "adrank/errors.hpp"

namespace adrank {

namespace {

constexpr double kMarginTol = 1e-12;

double analytic_epsilon(const Instance& inst) {
  int m = inst.num_scenarios();
  switch (inst.app()) {
    case App::mir: {
      auto ks = inst.mir_k();
      if (ks.empty()) throw std::logic_error("mir instance without thresholds");
      int kmax = *std::max_element(ks.begin(), ks.end());
      return 1.0 / kmax;
    }
    case App::odt: {
      if (m < 2)
        throw std::invalid_argument("single-scenario instance has no positive marginal");
      return 1.0 / (m - 1);
    }
    case App::godt: {
      auto ts = inst.godt_t();
      if (ts.empty()) throw std::logic_error("godt instance without thresholds");
      int tmin = *std::min_element(ts.begin(), ts.end());
      return 1.0 / (m - tmin);
    }
    case App::ecd: {
      auto cls = inst.ecd_class();
      if (cls.empty()) throw std::logic_error("ecd instance without class ids");
      std::vector<int> size_of_class;
      for (int c : cls) {
        if (c >= static_cast<int>(size_of_class.size())) size_of_class.resize(c + 1, 0);
        ++size_of_class[c];
      }
      int largest_outside = 0;
      for (int i = 0; i < m; ++i)
        largest_outside = std::max(largest_outside, m - size_of_class[cls[i]]);
      if (largest_outside == 0)
        throw std::invalid_argument("every scenario pre-covered: no positive marginal");
      return 1.0 / largest_outside;
    }
    case App::drd: {
      const auto& regions = inst.drd_regions();
      if (regions.empty()) throw std::logic_error("drd instance without regions");
      double eps = -1.0;
      for (int i = 0; i < m; ++i) {
        double prod = 1.0;
        bool pre_covered = false;
        for (const auto& region : regions) {
          if (std::find(region.begin(), region.end(), i) == region.end()) continue;
          int outside = m - static_cast<int>(region.size());
          if (outside == 0) {
            pre_covered = true;
            break;
          }
          prod /= outside;
        }
        if (pre_covered) continue;
        if (eps < 0.0 || prod < eps) eps = prod;
      }
      if (eps < 0.0)
        throw std::invalid_argument("every scenario pre-covered: no positive marginal");
      return eps;
    }
    default:
      throw std::invalid_argument("analytic epsilon unsupported for app '" +
                                  app_name(inst.app()) + "'");
  }
}

/// Fills val[S] = f(S) for all subsets by cloning evaluation contexts down a
/// binary recursion over elements.
void fill_values(const OracleEval& eval, int next, int n, std::uint32_t mask,
                 std::vector<double>& val) {
  if (next == n) {
    val[mask] = eval.value();
    return;
  }
  fill_values(eval, next + 1, n, mask, val);
  auto with = eval.clone();
  with->add(next);
  fill_values(*with, next + 1, n, mask | (std::uint32_t{1} << next), val);
}

double brute_epsilon(const Instance& inst) {
  int n = inst.num_elements();
  if (n > 20)
    throw SizeError("brute-force epsilon limited to 20 elements, got " +
                    std::to_string(n));
  std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<double> val(subsets);
  double eps = -1.0;
  for (int i = 0; i < inst.num_scenarios(); ++i) {
    fill_values(*inst.oracle(i).start(), 0, n, 0, val);
    for (std::uint32_t s = 0; s < subsets; ++s) {
      for (int e = 0; e < n; ++e) {
        if (s & (std::uint32_t{1} << e)) continue;
        double d = val[s | (std::uint32_t{1} << e)] - val[s];
        if (d > kMarginTol && (eps < 0.0 || d < eps)) eps = d;
      }
    }
  }
  if (eps < 0.0)
    throw std::invalid_argument("no positive marginal in any scenario function");
  return eps;
}

}  // namespace

double epsilon_of(const Instance& inst, EpsilonMode mode) {
  return mode == EpsilonMode::analytic ? analytic_epsilon(inst) : brute_epsilon(inst);
}

}  // namespace adrank
