#include "adrank/oracle.hpp"

#include <sstream>

#include "adrank/errors.hpp"
#include "adrank/rng.hpp"

namespace adrank {

void OracleEval::add_weighted_gains(const DynBitset& displayed, double w,
                                    std::span<double> acc) const {
  int n = displayed.size();
  for (int e = 0; e < n; ++e) {
    if (displayed.test(e)) continue;
    double g = gain(e);
    if (g > 0.0) acc[e] += w * g;
  }
}

double SubmodularOracle::value(std::span<const int> elements) const {
  auto eval = start();
  for (int e : elements) eval->add(e);
  return eval->value();
}

namespace {

constexpr double kPropTol = 1e-12;

std::string set_str(const std::vector<int>& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

std::vector<int> mask_to_set(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int e = 0; e < n; ++e)
    if (mask & (1u << e)) out.push_back(e);
  return out;
}

void check_exhaustive(const SubmodularOracle& oracle, SubmodularityReport& rep) {
  int n = oracle.ground_size();
  if (n > 16) throw SizeError("exhaustive submodularity check limited to 16 elements");
  std::uint32_t total = std::uint32_t{1} << n;
  // Cache all 2^n values; each from scratch is O(n) oracle adds.
  std::vector<double> val(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    auto elems = mask_to_set(mask, n);
    val[mask] = oracle.value(elems);
  }
  if (std::abs(val[0]) > kPropTol)
    rep.violations.push_back("f(empty) = " + std::to_string(val[0]));
  if (std::abs(val[total - 1] - 1.0) > kPropTol)
    rep.violations.push_back("f(ground set) = " + std::to_string(val[total - 1]));
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    for (int e = 0; e < n; ++e) {
      if (mask & (1u << e)) continue;
      std::uint32_t me = mask | (1u << e);
      if (val[me] < val[mask] - kPropTol) {
        rep.violations.push_back("monotonicity fails at S=" +
                                 set_str(mask_to_set(mask, n)) + " e=" +
                                 std::to_string(e));
        if (rep.violations.size() > 20) return;
      }
      // Local characterization: marginals of e shrink when e' joins S.
      for (int e2 = e + 1; e2 < n; ++e2) {
        if (mask & (1u << e2)) continue;
        std::uint32_t m2 = mask | (1u << e2);
        std::uint32_t m12 = me | (1u << e2);
        if (val[me] + val[m2] < val[m12] + val[mask] - kPropTol) {
          rep.violations.push_back("submodularity fails at S=" +
                                   set_str(mask_to_set(mask, n)) + " e=" +
                                   std::to_string(e) + " e'=" + std::to_string(e2));
          if (rep.violations.size() > 20) return;
        }
      }
    }
  }
}

void check_sampled(const SubmodularOracle& oracle, int trials, std::uint64_t seed,
                   SubmodularityReport& rep) {
  int n = oracle.ground_size();
  Rng rng = make_rng(seed, "submodularity");
  double at_empty = oracle.value({});
  if (std::abs(at_empty) > kPropTol)
    rep.violations.push_back("f(empty) = " + std::to_string(at_empty));
  std::vector<int> full(n);
  for (int e = 0; e < n; ++e) full[e] = e;
  double at_full = oracle.value(full);
  if (std::abs(at_full - 1.0) > kPropTol)
    rep.violations.push_back("f(ground set) = " + std::to_string(at_full));

  auto random_subset = [&](double density) {
    std::vector<int> s;
    for (int e = 0; e < n; ++e)
      if (next_double(rng) < density) s.push_back(e);
    return s;
  };
  auto set_union = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    for (int e : b)
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    return out;
  };
  auto set_inter = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    for (int e : a)
      if (std::find(b.begin(), b.end(), e) != b.end()) out.push_back(e);
    return out;
  };

  for (int t = 0; t < trials && rep.violations.size() <= 20; ++t) {
    // Lattice inequality on a random pair.
    auto a = random_subset(next_double(rng));
    auto b = random_subset(next_double(rng));
    double fa = oracle.value(a), fb = oracle.value(b);
    double fu = oracle.value(set_union(a, b)), fi = oracle.value(set_inter(a, b));
    if (fa + fb < fu + fi - kPropTol)
      rep.violations.push_back("lattice inequality fails at A=" + set_str(a) +
                               " B=" + set_str(b));

    // Diminishing marginals on a random nested pair A subset of B, element e.
    auto big = random_subset(next_double(rng));
    std::vector<int> small;
    for (int e : big)
      if (next_double(rng) < 0.5) small.push_back(e);
    int e = static_cast<int>(next_index(rng, static_cast<std::uint64_t>(n)));
    if (std::find(big.begin(), big.end(), e) != big.end()) continue;
    auto small_e = small, big_e = big;
    small_e.push_back(e);
    big_e.push_back(e);
    double margin_small = oracle.value(small_e) - oracle.value(small);
    double margin_big = oracle.value(big_e) - oracle.value(big);
    if (margin_small < -kPropTol)
      rep.violations.push_back("monotonicity fails at S=" + set_str(small) +
                               " e=" + std::to_string(e));
    if (margin_big > margin_small + kPropTol)
      rep.violations.push_back("diminishing marginals fail at A=" + set_str(small) +
                               " B=" + set_str(big) + " e=" + std::to_string(e));
  }
}

}  // namespace

SubmodularityReport check_submodular(const SubmodularOracle& oracle, int trials,
                                     std::uint64_t seed) {
  SubmodularityReport rep;
  if (trials <= 0)
    check_exhaustive(oracle, rep);
  else
    check_sampled(oracle, trials, seed, rep);
  return rep;
}

}  // namespace adrank
