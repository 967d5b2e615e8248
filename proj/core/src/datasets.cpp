#include "adrank/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "adrank/errors.hpp"
#include "adrank/functions.hpp"

namespace adrank {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

Rational pow2_inv(int exponent) {  // 2^-exponent
  return Rational(BigInt(1), BigInt(1) << exponent);
}

std::vector<Rational> syn_prob_rationals(int k, double eps) {
  Rational eps_r(eps);
  std::vector<Rational> p(2 * k + 3);
  for (int j = 0; j < k; ++j) p[2 * j] = p[2 * j + 1] = pow2_inv(j + 3);
  p[2 * k] = p[2 * k + 1] = pow2_inv(k + 2) - eps_r;
  p[2 * k + 2] = Rational(1, 2) + 2 * eps_r;
  return p;
}

void check_syn_params(const SynParams& params, double eps) {
  if (params.k < 1)
    throw std::invalid_argument("syn parameter k must be positive");
  double upper = std::ldexp(1.0, -params.k - 2);
  if (!(eps > 0.0) || !(eps < upper)) {
    std::ostringstream msg;
    msg << "syn eps " << eps << " outside (0, 2^-" << params.k + 2 << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

double SynParams::eps_or_default() const {
  return eps < 0.0 ? std::ldexp(1.0, -k - 3) : eps;
}

bool syn_probs_sum_to_one(const SynParams& params) {
  double eps = params.eps_or_default();
  check_syn_params(params, eps);
  Rational sum = 0;
  for (const Rational& p : syn_prob_rationals(params.k, eps)) sum += p;
  return sum == 1;
}

Instance gen_syn(const SynParams& params) {
  int k = params.k;
  double eps = params.eps_or_default();
  check_syn_params(params, eps);
  if (!syn_probs_sum_to_one(params))
    throw std::logic_error("syn probability formulas failed the exact-sum check");

  int m = 2 * k + 3;
  int n = k + 2;
  std::vector<std::vector<int>> sets(m);
  for (int e = 0; e < k; ++e) {
    sets[2 * e].push_back(e);
    sets[2 * e + 1].push_back(e);
  }
  for (int i = 0; i < m; i += 2) sets[i].push_back(k);
  for (int i = 1; i < m - 1; i += 2) sets[i].push_back(k + 1);
  sets[m - 1].push_back(k + 1);
  for (auto& s : sets) std::sort(s.begin(), s.end());

  std::vector<double> probs;
  probs.reserve(m);
  for (const Rational& p : syn_prob_rationals(k, eps))
    probs.push_back(p.convert_to<double>());
  return make_odt_instance(std::vector<double>(n, 1.0), std::move(probs), sets);
}

// ---------------- ratings ingestion ---------------- //

double RatingsMatrix::mean_degree() const {
  if (users == 0) return 0.0;
  return static_cast<double>(memberships) / users;
}

double RatingsMatrix::stdev_degree() const {
  if (users == 0) return 0.0;
  double mean = mean_degree();
  double acc = 0.0;
  for (int u = 0; u < users; ++u) {
    double d = static_cast<double>(liked[u].size()) - mean;
    acc += d * d;
  }
  return std::sqrt(acc / users);
}

RatingsMatrix ingest_movielens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open ratings file: " + path);
  std::vector<std::set<int>> liked_sets;
  int max_user = 0, max_item = 0;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    long user = 0, item = 0, rating = 0;
    long long timestamp = 0;
    if (!(fields >> user >> item >> rating >> timestamp))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'user item rating timestamp'");
    std::string extra;
    if (fields >> extra)
      throw ParseError("line " + std::to_string(line_no) +
                       ": unexpected trailing field '" + extra + "'");
    if (user < 1 || item < 1)
      throw ParseError("line " + std::to_string(line_no) +
                       ": user and item ids must be positive");
    max_user = std::max(max_user, static_cast<int>(user));
    max_item = std::max(max_item, static_cast<int>(item));
    if (rating >= 3) {
      if (static_cast<int>(liked_sets.size()) < max_user) liked_sets.resize(max_user);
      liked_sets[user - 1].insert(static_cast<int>(item) - 1);
    }
  }
  RatingsMatrix matrix;
  matrix.users = max_user;
  matrix.items = max_item;
  matrix.liked.resize(max_user);
  liked_sets.resize(max_user);
  for (int u = 0; u < max_user; ++u) {
    matrix.liked[u].assign(liked_sets[u].begin(), liked_sets[u].end());
    matrix.memberships += static_cast<std::int64_t>(matrix.liked[u].size());
  }
  return matrix;
}

// ---------------- threshold rules ---------------- //

KRule parse_k_rule(const std::string& name) {
  if (name == "full") return KRule::full;
  if (name == "s2-s") return KRule::half_to_full;
  if (name == "s4-s") return KRule::quarter_to_full;
  if (name == "1-s2") return KRule::one_to_half;
  if (name == "1-s4") return KRule::one_to_quarter;
  throw std::invalid_argument("unknown satisfaction-threshold rule '" + name +
                              "' (expected full, s2-s, s4-s, 1-s2, 1-s4)");
}

TRule parse_t_rule(const std::string& name) {
  if (name == "1") return TRule::one;
  if (name == "1-5") return TRule::low;
  if (name == "5-10") return TRule::high;
  throw std::invalid_argument("unknown stopping-threshold rule '" + name +
                              "' (expected 1, 1-5, 5-10)");
}

std::string k_rule_name(KRule rule) {
  switch (rule) {
    case KRule::full: return "full";
    case KRule::half_to_full: return "s2-s";
    case KRule::quarter_to_full: return "s4-s";
    case KRule::one_to_half: return "1-s2";
    case KRule::one_to_quarter: return "1-s4";
  }
  return "?";
}

std::string t_rule_name(TRule rule) {
  switch (rule) {
    case TRule::one: return "1";
    case TRule::low: return "1-5";
    case TRule::high: return "5-10";
  }
  return "?";
}

int draw_k(KRule rule, int set_size, Rng& rng) {
  if (set_size < 1) throw std::invalid_argument("empty interest set has no threshold");
  int s = set_size;
  int lo = 1, hi = s;
  switch (rule) {
    case KRule::full:
      return s;
    case KRule::half_to_full:
      lo = std::max(1, (s + 1) / 2);
      hi = s;
      break;
    case KRule::quarter_to_full:
      lo = std::max(1, (s + 3) / 4);
      hi = s;
      break;
    case KRule::one_to_half:
      lo = 1;
      hi = std::max(1, s / 2);
      break;
    case KRule::one_to_quarter:
      lo = 1;
      hi = std::max(1, s / 4);
      break;
  }
  hi = std::max(lo, hi);
  return next_int(rng, lo, hi);
}

int draw_t(TRule rule, Rng& rng) {
  switch (rule) {
    case TRule::one: return 1;
    case TRule::low: return next_int(rng, 1, 4);
    case TRule::high: return next_int(rng, 5, 9);
  }
  return 1;
}

// ---------------- instances from ratings ---------------- //

BuiltInstance mir_instance_from_ratings(const RatingsMatrix& matrix,
                                        std::span<const double> probs,
                                        KRule rule, std::uint64_t seed) {
  if (static_cast<int>(probs.size()) != matrix.users)
    throw std::invalid_argument("probability vector size must match user count");
  BuiltInstance out;
  std::vector<std::vector<int>> sets;
  std::vector<double> kept_probs;
  double kept_mass = 0.0;
  for (int u = 0; u < matrix.users; ++u) {
    if (matrix.liked[u].empty()) {
      out.warnings.push_back("user " + std::to_string(u + 1) +
                             " has no liked items and cannot be satisfied; dropped");
      continue;
    }
    out.kept_users.push_back(u);
    sets.push_back(matrix.liked[u]);
    kept_probs.push_back(probs[u]);
    kept_mass += probs[u];
  }
  if (sets.empty() || kept_mass <= 0.0)
    throw std::invalid_argument("no user with liked items and positive probability");
  for (double& p : kept_probs) p /= kept_mass;

  Rng rng = make_rng(seed, "thresholds");
  std::vector<int> ks;
  ks.reserve(sets.size());
  for (const auto& s : sets) ks.push_back(draw_k(rule, static_cast<int>(s.size()), rng));
  out.instance = make_mir_instance(std::vector<double>(matrix.items, 1.0),
                                   std::move(kept_probs), sets, std::move(ks));
  return out;
}

BuiltInstance odt_instance_from_ratings(const RatingsMatrix& matrix,
                                        std::span<const double> probs,
                                        TRule rule, std::uint64_t seed) {
  if (static_cast<int>(probs.size()) != matrix.users)
    throw std::invalid_argument("probability vector size must match user count");
  BuiltInstance out;
  out.kept_users.resize(matrix.users);
  for (int u = 0; u < matrix.users; ++u) out.kept_users[u] = u;

  Rng rng = make_rng(seed, "thresholds");
  std::vector<int> ts;
  ts.reserve(matrix.users);
  for (int u = 0; u < matrix.users; ++u) ts.push_back(draw_t(rule, rng));
  out.instance = make_godt_instance(std::vector<double>(matrix.items, 1.0),
                                    std::vector<double>(probs.begin(), probs.end()),
                                    matrix.liked, std::move(ts));
  return out;
}

// ---------------- scenario distributions ---------------- //

std::vector<double> uniform_probs(int m) {
  if (m < 1) throw std::invalid_argument("need at least one scenario");
  return std::vector<double>(m, 1.0 / m);
}

std::vector<double> powerlaw_probs(int m, double alpha, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("need at least one scenario");
  if (alpha < 1.0)
    throw std::invalid_argument("power-law exponent must be at least 1");
  Rng rng = make_rng(seed, "distribution");
  std::vector<double> x(m);
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    x[i] = std::pow(next_double_open(rng), 1.0 / alpha);
    sum += x[i];
  }
  for (double& v : x) v /= sum;
  return x;
}

std::vector<double> permute_probs(std::span<const double> probs, std::uint64_t seed) {
  std::vector<double> out(probs.begin(), probs.end());
  Rng rng = make_rng(seed, "permute");
  for (std::size_t j = out.size(); j > 1; --j)
    std::swap(out[j - 1], out[next_index(rng, j)]);
  return out;
}

}  // namespace adrank
