#include "adrank/instance.hpp"

#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace adrank {

std::string app_name(App app) {
  switch (app) {
    case App::none: return "none";
    case App::mir: return "mir";
    case App::odt: return "odt";
    case App::godt: return "godt";
    case App::ecd: return "ecd";
    case App::drd: return "drd";
    case App::ranking: return "ranking";
  }
  return "none";
}

Instance::Instance(App app, std::vector<double> costs, std::vector<double> probs,
                   std::vector<Symbol> feedback, Symbol alphabet,
                   std::vector<std::shared_ptr<const SubmodularOracle>> oracles)
    : n_(static_cast<int>(costs.size())),
      m_(static_cast<int>(probs.size())),
      alphabet_(alphabet),
      app_(app),
      costs_(std::move(costs)),
      probs_(std::move(probs)),
      feedback_(std::move(feedback)),
      oracles_(std::move(oracles)) {
  if (feedback_.size() != std::size_t(n_) * m_)
    throw std::invalid_argument("feedback table size mismatch");
  if (oracles_.size() != std::size_t(m_))
    throw std::invalid_argument("oracle count mismatch");
  if (alphabet_ < 2) throw std::invalid_argument("alphabet must have at least 2 symbols");
  for (Symbol s : feedback_)
    if (s >= alphabet_) throw std::invalid_argument("feedback symbol out of alphabet");
  interest_.reserve(m_);
  for (int i = 0; i < m_; ++i) {
    DynBitset row(n_);
    const Symbol* fb = feedback_row(i);
    for (int e = 0; e < n_; ++e)
      if (fb[e] == kYes) row.set(e);
    interest_.push_back(std::move(row));
  }
}

std::vector<int> Instance::interest_set(int i) const {
  std::vector<int> out;
  interest_[i].for_each_set([&](int e) { out.push_back(e); });
  return out;
}

Instance Instance::with_probs(std::vector<double> probs) const {
  if (probs.size() != std::size_t(m_))
    throw std::invalid_argument("probability vector size mismatch");
  Instance copy = *this;
  copy.probs_ = std::move(probs);
  return copy;
}

namespace {

void fnv_bytes(std::uint64_t& h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
}

void fnv_doubles(std::uint64_t& h, std::span<const double> xs) {
  for (double x : xs) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof(bits));
    fnv_bytes(h, &bits, sizeof(bits));
  }
}

void fnv_ints(std::uint64_t& h, std::span<const int> xs) {
  for (int x : xs) fnv_bytes(h, &x, sizeof(x));
}

}  // namespace

std::uint64_t Instance::fingerprint() const {
  std::uint64_t h = 14695981039346656037ull;
  std::string app = app_name(app_);
  fnv_bytes(h, app.data(), app.size());
  fnv_bytes(h, &n_, sizeof(n_));
  fnv_bytes(h, &m_, sizeof(m_));
  fnv_bytes(h, &alphabet_, sizeof(alphabet_));
  fnv_doubles(h, costs_);
  fnv_doubles(h, probs_);
  fnv_bytes(h, feedback_.data(), feedback_.size());
  fnv_ints(h, mir_k_);
  fnv_ints(h, godt_t_);
  fnv_ints(h, ecd_class_);
  for (const auto& region : drd_regions_) fnv_ints(h, region);
  return h;
}

bool Instance::same_content(const Instance& o) const {
  return app_ == o.app_ && n_ == o.n_ && m_ == o.m_ && alphabet_ == o.alphabet_ &&
         costs_ == o.costs_ && probs_ == o.probs_ && feedback_ == o.feedback_ &&
         mir_k_ == o.mir_k_ && godt_t_ == o.godt_t_ && ecd_class_ == o.ecd_class_ &&
         drd_regions_ == o.drd_regions_;
}

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> report;
  auto fmt = [](double x) {
    std::ostringstream os;
    os << x;
    return os.str();
  };

  for (int e = 0; e < inst.num_elements(); ++e) {
    if (!(inst.cost(e) > 0.0)) {
      report.push_back("nonpositive cost " + fmt(inst.cost(e)) + " for element " +
                       std::to_string(e));
    }
  }

  double sum = 0.0;
  for (int i = 0; i < inst.num_scenarios(); ++i) {
    double p = inst.prob(i);
    if (p < 0.0 || p > 1.0)
      report.push_back("probability " + fmt(p) + " for scenario " +
                       std::to_string(i) + " outside [0,1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    report.push_back("probabilities sum to " + fmt(sum));

  std::vector<int> full(inst.num_elements());
  for (int e = 0; e < inst.num_elements(); ++e) full[e] = e;
  for (int i = 0; i < inst.num_scenarios(); ++i) {
    const auto& oracle = inst.oracle(i);
    double at_empty = oracle.value({});
    // Constant-one oracles (pre-covered scenarios) legitimately start at 1.
    if (at_empty != 0.0 && at_empty < 1.0 - kCoverTol)
      report.push_back("scenario " + std::to_string(i) + " oracle has f(empty) = " +
                       fmt(at_empty));
    double at_full = oracle.value(full);
    if (at_full < 1.0 - kCoverTol)
      report.push_back("scenario " + std::to_string(i) +
                       " is uncoverable: f(full ground set) = " + fmt(at_full));
  }
  return report;
}

void ensure_valid(const Instance& inst) {
  auto report = validate_instance(inst);
  if (report.empty()) return;
  std::string msg = "invalid instance:";
  for (const auto& line : report) msg += "\n  " + line;
  throw std::invalid_argument(msg);
}

}  // namespace adrank
