#include "adrank/functions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace adrank {

// ---------------- CoverageUniverse ---------------- //

CoverageUniverse::CoverageUniverse(int n, int m, Symbol alphabet,
                                   std::vector<Symbol> feedback)
    : n_(n),
      m_(m),
      words_((m + 63) / 64),
      alphabet_(alphabet),
      feedback_(std::move(feedback)) {
  if (feedback_.size() != std::size_t(n_) * m_)
    throw std::invalid_argument("feedback table size mismatch");
  int r = m_ & 63;
  tail_mask_ = r == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << r) - 1);
  group_.assign(std::size_t(n_) * alphabet_ * words_, 0);
  for (int i = 0; i < m_; ++i) {
    const Symbol* row = feedback_.data() + std::size_t(i) * n_;
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    int word = i >> 6;
    for (int e = 0; e < n_; ++e)
      group_[(std::size_t(e) * alphabet_ + row[e]) * words_ + word] |= bit;
  }
}

std::shared_ptr<const CoverageUniverse> CoverageUniverse::from_sets(
    int n, const std::vector<std::vector<int>>& sets) {
  return std::make_shared<CoverageUniverse>(
      n, static_cast<int>(sets.size()), Symbol{2}, feedback_from_sets(n, sets));
}

DynBitset CoverageUniverse::t_set(int e, int i) const {
  DynBitset out(m_);
  auto g = group(e, feedback(i, e));
  auto w = out.words();
  for (int k = 0; k < words_; ++k) w[k] = ~g[k];
  w[words_ - 1] &= tail_mask_;
  return out;
}

int CoverageUniverse::t_size(int e, int i) const {
  auto g = group(e, feedback(i, e));
  int members = 0;
  for (int k = 0; k < words_; ++k) members += std::popcount(g[k]);
  return m_ - members;
}

bool CoverageUniverse::identifiable(int i) const {
  std::vector<std::uint64_t> acc(words_, 0);
  for (int e = 0; e < n_; ++e) {
    auto g = group(e, feedback(i, e));
    for (int k = 0; k < words_; ++k) acc[k] |= ~g[k];
  }
  acc[words_ - 1] &= tail_mask_;
  int covered = 0;
  for (auto w : acc) covered += std::popcount(w);
  return covered == m_ - 1;  // everything except i itself
}

std::vector<Symbol> feedback_from_sets(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<Symbol> fb(std::size_t(n) * sets.size(), kNo);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (int e : sets[i]) {
      if (e < 0 || e >= n) throw std::invalid_argument("interest-set element out of range");
      fb[i * n + e] = kYes;
    }
  }
  return fb;
}

// ---------------- Constant-one oracle ---------------- //

namespace {

class ConstantOneEval final : public OracleEval {
 public:
  double value() const override { return 1.0; }
  double gain(int) const override { return 0.0; }
  void add(int) override {}
  bool covered() const override { return true; }
  std::unique_ptr<OracleEval> clone() const override {
    return std::make_unique<ConstantOneEval>(*this);
  }
  void add_weighted_gains(const DynBitset&, double, std::span<double>) const override {}
};

class ConstantOneOracle final : public SubmodularOracle {
 public:
  explicit ConstantOneOracle(int n) : n_(n) {}
  int ground_size() const override { return n_; }
  std::unique_ptr<OracleEval> start() const override {
    return std::make_unique<ConstantOneEval>();
  }
  std::string describe() const override { return "constant-one"; }

 private:
  int n_;
};

// ---------------- Threshold coverage (mir) ---------------- //

class MirOracle;

class MirEval final : public OracleEval {
 public:
  MirEval(const DynBitset& members, int k) : remaining_(members), k_(k) {}
  double value() const override {
    return cnt_ >= k_ ? 1.0 : static_cast<double>(cnt_) / k_;
  }
  double gain(int e) const override {
    return (cnt_ < k_ && remaining_.test(e)) ? 1.0 / k_ : 0.0;
  }
  void add(int e) override {
    if (remaining_.test(e)) {
      remaining_.reset(e);
      ++cnt_;
    }
  }
  bool covered() const override { return cnt_ >= k_; }
  std::unique_ptr<OracleEval> clone() const override {
    return std::make_unique<MirEval>(*this);
  }
  void add_weighted_gains(const DynBitset& displayed, double w,
                          std::span<double> acc) const override {
    if (cnt_ >= k_) return;
    double g = w / k_;
    remaining_.for_each_set([&](int e) {
      if (!displayed.test(e)) acc[e] += g;
    });
  }

 private:
  DynBitset remaining_;  // interest members not yet added
  int k_;
  int cnt_ = 0;
};

class MirOracle final : public SubmodularOracle {
 public:
  MirOracle(int n, std::span<const int> interest, int k) : members_(n), k_(k) {
    for (int e : interest) {
      if (e < 0 || e >= n) throw std::invalid_argument("interest-set element out of range");
      members_.set(e);
    }
    int size = members_.count();
    if (k < 1 || k > size)
      throw std::invalid_argument("mir threshold " + std::to_string(k) +
                                  " outside [1, |S_i|] with |S_i| = " +
                                  std::to_string(size));
  }
  int ground_size() const override { return members_.size(); }
  std::unique_ptr<OracleEval> start() const override {
    return std::make_unique<MirEval>(members_, k_);
  }
  std::string describe() const override {
    return "mir(k=" + std::to_string(k_) + ",|S|=" + std::to_string(members_.count()) + ")";
  }

 private:
  DynBitset members_;
  int k_;
};

// ---------------- Coverage-style identification oracles ---------------- //

// Counts hypotheses from `mask` eliminated by the union of distinguishing
// sets; covering means reaching `needed` eliminations.
class CoverageOracle final : public SubmodularOracle {
 public:
  CoverageOracle(std::shared_ptr<const CoverageUniverse> u, int scenario,
                 DynBitset mask, int needed, std::string kind)
      : u_(std::move(u)),
        scenario_(scenario),
        mask_(std::move(mask)),
        needed_(needed),
        kind_(std::move(kind)) {}

  int ground_size() const override { return u_->num_elements(); }
  std::unique_ptr<OracleEval> start() const override;
  std::string describe() const override { return kind_; }

  const CoverageUniverse& universe() const { return *u_; }
  int scenario() const { return scenario_; }
  const DynBitset& mask() const { return mask_; }
  int needed() const { return needed_; }

 private:
  std::shared_ptr<const CoverageUniverse> u_;
  int scenario_;
  DynBitset mask_;
  int needed_;
  std::string kind_;
};

class CoverageEval final : public OracleEval {
 public:
  explicit CoverageEval(const CoverageOracle* o)
      : o_(o), acc_(o->universe().num_scenarios()) {}

  double value() const override {
    return cnt_ >= o_->needed() ? 1.0
                                : static_cast<double>(cnt_) / o_->needed();
  }
  bool covered() const override { return cnt_ >= o_->needed(); }

  double gain(int e) const override {
    int fresh = new_eliminations(e);
    if (fresh == 0 || cnt_ >= o_->needed()) return 0.0;
    int capped = std::min(cnt_ + fresh, o_->needed());
    return static_cast<double>(capped - cnt_) / o_->needed();
  }

  void add(int e) override {
    const auto& u = o_->universe();
    auto g = u.group(e, u.feedback(o_->scenario(), e));
    auto acc = acc_.words();
    auto mask = o_->mask().words();
    int fresh = 0;
    for (int k = 0; k < u.words(); ++k) {
      std::uint64_t t = ~g[k] & (k + 1 == u.words() ? u.tail_mask() : ~std::uint64_t{0});
      fresh += std::popcount(t & mask[k] & ~acc[k]);
      acc[k] |= t;
    }
    cnt_ += fresh;
  }

  std::unique_ptr<OracleEval> clone() const override {
    return std::make_unique<CoverageEval>(*this);
  }

  void add_weighted_gains(const DynBitset& displayed, double w,
                          std::span<double> acc) const override {
    if (cnt_ >= o_->needed()) return;
    const auto& u = o_->universe();
    const Symbol* row = u.row(o_->scenario());
    double scale = w / o_->needed();
    int headroom = o_->needed() - cnt_;
    auto mine = acc_.words();
    auto mask = o_->mask().words();
    int words = u.words();
    for (int e = 0; e < u.num_elements(); ++e) {
      if (displayed.test(e)) continue;
      auto g = u.group(e, row[e]);
      int fresh = 0;
      for (int k = 0; k < words; ++k)
        fresh += std::popcount(~g[k] & mask[k] & ~mine[k]);
      if (fresh > 0) acc[e] += scale * std::min(fresh, headroom);
    }
  }

 private:
  int new_eliminations(int e) const {
    const auto& u = o_->universe();
    auto g = u.group(e, u.feedback(o_->scenario(), e));
    auto acc = acc_.words();
    auto mask = o_->mask().words();
    int fresh = 0;
    for (int k = 0; k < u.words(); ++k)
      fresh += std::popcount(~g[k] & mask[k] & ~acc[k]);
    return fresh;
  }

  const CoverageOracle* o_;
  DynBitset acc_;
  int cnt_ = 0;
};

std::unique_ptr<OracleEval> CoverageOracle::start() const {
  return std::make_unique<CoverageEval>(this);
}

// ---------------- Region elimination (drd) ---------------- //

class DrdOracle final : public SubmodularOracle {
 public:
  DrdOracle(std::shared_ptr<const CoverageUniverse> u, int scenario,
            std::vector<DynBitset> masks, std::vector<int> denoms)
      : u_(std::move(u)),
        scenario_(scenario),
        masks_(std::move(masks)),
        denoms_(std::move(denoms)) {
    exact_ = denoms_.size() <= 8;
    if (exact_) {
      unsigned __int128 prod = 1;
      for (int d : denoms_) {
        prod *= static_cast<unsigned>(d);
        if (prod > (static_cast<unsigned __int128>(1) << 120)) {
          exact_ = false;
          break;
        }
      }
    }
  }

  int ground_size() const override { return u_->num_elements(); }
  std::unique_ptr<OracleEval> start() const override;
  std::string describe() const override {
    return "drd(regions=" + std::to_string(denoms_.size()) + ")";
  }

  const CoverageUniverse& universe() const { return *u_; }
  int scenario() const { return scenario_; }
  const std::vector<DynBitset>& masks() const { return masks_; }
  const std::vector<int>& denoms() const { return denoms_; }
  bool exact() const { return exact_; }

 private:
  std::shared_ptr<const CoverageUniverse> u_;
  int scenario_;
  std::vector<DynBitset> masks_;
  std::vector<int> denoms_;
  bool exact_;
};

class DrdEval final : public OracleEval {
 public:
  explicit DrdEval(const DrdOracle* o)
      : o_(o), acc_(o->universe().num_scenarios()), cnt_(o->denoms().size(), 0) {}

  double value() const override { return value_for(cnt_); }

  bool covered() const override {
    for (std::size_t j = 0; j < cnt_.size(); ++j)
      if (cnt_[j] >= o_->denoms()[j]) return true;
    return false;
  }

  double gain(int e) const override {
    const auto& u = o_->universe();
    auto g = u.group(e, u.feedback(o_->scenario(), e));
    auto acc = acc_.words();
    std::vector<int> next = cnt_;
    for (std::size_t j = 0; j < cnt_.size(); ++j) {
      auto mask = o_->masks()[j].words();
      for (int k = 0; k < u.words(); ++k)
        next[j] += std::popcount(~g[k] & mask[k] & ~acc[k]);
    }
    double before = value_for(cnt_), after = value_for(next);
    return after > before ? after - before : 0.0;
  }

  void add(int e) override {
    const auto& u = o_->universe();
    auto g = u.group(e, u.feedback(o_->scenario(), e));
    auto acc = acc_.words();
    for (int k = 0; k < u.words(); ++k) {
      std::uint64_t t = ~g[k] & (k + 1 == u.words() ? u.tail_mask() : ~std::uint64_t{0});
      std::uint64_t fresh = t & ~acc[k];
      if (fresh) {
        for (std::size_t j = 0; j < cnt_.size(); ++j)
          cnt_[j] += std::popcount(fresh & o_->masks()[j].words()[k]);
        acc[k] |= t;
      }
    }
  }

  std::unique_ptr<OracleEval> clone() const override {
    return std::make_unique<DrdEval>(*this);
  }

 private:
  // 1 - prod_j (1 - cnt_j / denom_j); exact integer product when enabled so
  // coverage equality is never a cancellation casualty.
  double value_for(const std::vector<int>& cnt) const {
    const auto& denoms = o_->denoms();
    if (o_->exact()) {
      unsigned __int128 num = 1, den = 1;
      for (std::size_t j = 0; j < cnt.size(); ++j) {
        num *= static_cast<unsigned>(denoms[j] - std::min(cnt[j], denoms[j]));
        den *= static_cast<unsigned>(denoms[j]);
      }
      if (num == 0) return 1.0;
      return 1.0 - static_cast<double>(num) / static_cast<double>(den);
    }
    double prod = 1.0;
    for (std::size_t j = 0; j < cnt.size(); ++j)
      prod *= 1.0 - static_cast<double>(std::min(cnt[j], denoms[j])) / denoms[j];
    return 1.0 - prod;
  }

  const DrdOracle* o_;
  DynBitset acc_;
  std::vector<int> cnt_;
};

std::unique_ptr<OracleEval> DrdOracle::start() const {
  return std::make_unique<DrdEval>(this);
}

DynBitset complement_of(const std::vector<int>& members, int m, const char* what) {
  DynBitset out(m);
  for (int k = 0; k < out.num_words(); ++k) out.words()[k] = ~std::uint64_t{0};
  out.words()[out.num_words() - 1] =
      m % 64 == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (m % 64)) - 1);
  for (int j : members) {
    if (j < 0 || j >= m) throw std::invalid_argument(std::string(what) + " index out of range");
    out.reset(j);
  }
  return out;
}

}  // namespace

// ---------------- Constructors ---------------- //

OraclePtr constant_one(int n) { return std::make_shared<ConstantOneOracle>(n); }

OraclePtr mir_function(int n, std::span<const int> interest_set, int k) {
  return std::make_shared<MirOracle>(n, interest_set, k);
}

OraclePtr odt_function(std::shared_ptr<const CoverageUniverse> universe, int i) {
  int m = universe->num_scenarios();
  if (i < 0 || i >= m) throw std::invalid_argument("scenario index out of range");
  if (m == 1) return constant_one(universe->num_elements());
  if (!universe->identifiable(i))
    throw std::invalid_argument("scenario " + std::to_string(i) +
                                " is not identifiable by the given tests");
  DynBitset mask = complement_of({i}, m, "scenario");
  return std::make_shared<CoverageOracle>(std::move(universe), i, std::move(mask),
                                          m - 1, "odt");
}

OraclePtr generalized_odt_function(std::shared_ptr<const CoverageUniverse> universe,
                                   int i, int t) {
  int m = universe->num_scenarios();
  if (i < 0 || i >= m) throw std::invalid_argument("scenario index out of range");
  if (t < 1 || t > m - 1)
    throw std::invalid_argument("godt threshold t = " + std::to_string(t) +
                                " outside [1, m-1]");
  DynBitset mask = complement_of({i}, m, "scenario");
  return std::make_shared<CoverageOracle>(std::move(universe), i, std::move(mask),
                                          m - t, "godt(t=" + std::to_string(t) + ")");
}

OraclePtr eqclass_function(std::shared_ptr<const CoverageUniverse> universe,
                           const std::vector<std::vector<int>>& parts, int i) {
  int m = universe->num_scenarios();
  if (i < 0 || i >= m) throw std::invalid_argument("scenario index out of range");
  std::vector<int> owner(m, -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (int j : parts[p]) {
      if (j < 0 || j >= m) throw std::invalid_argument("partition index out of range");
      if (owner[j] != -1) throw std::invalid_argument("partition cells overlap");
      owner[j] = static_cast<int>(p);
    }
  }
  for (int j = 0; j < m; ++j)
    if (owner[j] == -1)
      throw std::invalid_argument("partition does not cover scenario " + std::to_string(j));

  const std::vector<int>& own_part = parts[owner[i]];
  if (static_cast<int>(own_part.size()) == m) return constant_one(universe->num_elements());
  DynBitset mask = complement_of(own_part, m, "partition");
  int needed = mask.count();
  return std::make_shared<CoverageOracle>(std::move(universe), i, std::move(mask),
                                          needed, "ecd");
}

OraclePtr drd_function(std::shared_ptr<const CoverageUniverse> universe,
                       const std::vector<std::vector<int>>& regions, int i) {
  int m = universe->num_scenarios();
  if (i < 0 || i >= m) throw std::invalid_argument("scenario index out of range");
  std::vector<DynBitset> masks;
  std::vector<int> denoms;
  bool relevant = false;
  for (const auto& region : regions) {
    if (std::find(region.begin(), region.end(), i) == region.end()) continue;
    relevant = true;
    if (static_cast<int>(region.size()) == m) return constant_one(universe->num_elements());
    DynBitset mask = complement_of(region, m, "region");
    denoms.push_back(mask.count());
    masks.push_back(std::move(mask));
  }
  if (!relevant)
    throw std::invalid_argument("no region contains scenario " + std::to_string(i));
  return std::make_shared<DrdOracle>(std::move(universe), i, std::move(masks),
                                     std::move(denoms));
}

// ---------------- Instance assembly ---------------- //

namespace {

std::shared_ptr<const CoverageUniverse> universe_from(
    int n, const std::vector<std::vector<int>>& sets) {
  return CoverageUniverse::from_sets(n, sets);
}

}  // namespace

Instance make_mir_instance(std::vector<double> costs, std::vector<double> probs,
                           const std::vector<std::vector<int>>& sets,
                           std::vector<int> ks) {
  int n = static_cast<int>(costs.size());
  if (sets.size() != probs.size() || ks.size() != probs.size())
    throw std::invalid_argument("scenario field sizes mismatch");
  std::vector<OraclePtr> oracles;
  oracles.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    oracles.push_back(mir_function(n, sets[i], ks[i]));
  Instance inst(App::mir, std::move(costs), std::move(probs),
                feedback_from_sets(n, sets), 2, std::move(oracles));
  inst.set_mir_k(std::move(ks));
  return inst;
}

Instance make_odt_instance(std::vector<double> costs, std::vector<double> probs,
                           const std::vector<std::vector<int>>& sets) {
  int n = static_cast<int>(costs.size());
  if (sets.size() != probs.size())
    throw std::invalid_argument("scenario field sizes mismatch");
  auto universe = universe_from(n, sets);
  std::vector<OraclePtr> oracles;
  oracles.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    oracles.push_back(odt_function(universe, static_cast<int>(i)));
  return Instance(App::odt, std::move(costs), std::move(probs),
                  feedback_from_sets(n, sets), 2, std::move(oracles));
}

Instance make_godt_instance(std::vector<double> costs, std::vector<double> probs,
                            const std::vector<std::vector<int>>& sets,
                            std::vector<int> ts) {
  int n = static_cast<int>(costs.size());
  if (sets.size() != probs.size() || ts.size() != probs.size())
    throw std::invalid_argument("scenario field sizes mismatch");
  auto universe = universe_from(n, sets);
  std::vector<OraclePtr> oracles;
  oracles.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    oracles.push_back(generalized_odt_function(universe, static_cast<int>(i), ts[i]));
  Instance inst(App::godt, std::move(costs), std::move(probs),
                feedback_from_sets(n, sets), 2, std::move(oracles));
  inst.set_godt_t(std::move(ts));
  return inst;
}

Instance make_multiway_instance(std::vector<double> costs, std::vector<double> probs,
                                const std::vector<std::vector<Symbol>>& rows,
                                Symbol alphabet, std::vector<int> ts) {
  int n = static_cast<int>(costs.size());
  int m = static_cast<int>(probs.size());
  if (rows.size() != probs.size())
    throw std::invalid_argument("scenario field sizes mismatch");
  std::vector<Symbol> fb;
  fb.reserve(std::size_t(n) * m);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("feedback row length mismatch");
    fb.insert(fb.end(), row.begin(), row.end());
  }
  auto universe = std::make_shared<CoverageUniverse>(n, m, alphabet, fb);
  bool plain = ts.empty();
  std::vector<OraclePtr> oracles;
  oracles.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (plain)
      oracles.push_back(odt_function(universe, i));
    else
      oracles.push_back(generalized_odt_function(universe, i, ts[i]));
  }
  Instance inst(plain ? App::odt : App::godt, std::move(costs), std::move(probs),
                std::move(fb), alphabet, std::move(oracles));
  if (!plain) inst.set_godt_t(std::move(ts));
  return inst;
}

Instance make_ecd_instance(std::vector<double> costs, std::vector<double> probs,
                           const std::vector<std::vector<int>>& sets,
                           std::vector<int> classes) {
  int n = static_cast<int>(costs.size());
  int m = static_cast<int>(probs.size());
  if (sets.size() != probs.size() || classes.size() != probs.size())
    throw std::invalid_argument("scenario field sizes mismatch");
  // Group scenarios into cells by class id.
  std::vector<std::vector<int>> parts;
  std::vector<int> cell_of_class;
  for (int i = 0; i < m; ++i) {
    int c = classes[i];
    if (c < 0) throw std::invalid_argument("negative class id");
    if (c >= static_cast<int>(cell_of_class.size())) cell_of_class.resize(c + 1, -1);
    if (cell_of_class[c] == -1) {
      cell_of_class[c] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[cell_of_class[c]].push_back(i);
  }
  auto universe = universe_from(n, sets);
  std::vector<OraclePtr> oracles;
  oracles.reserve(m);
  for (int i = 0; i < m; ++i) oracles.push_back(eqclass_function(universe, parts, i));
  Instance inst(App::ecd, std::move(costs), std::move(probs),
                feedback_from_sets(n, sets), 2, std::move(oracles));
  inst.set_ecd_class(std::move(classes));
  return inst;
}

Instance make_drd_instance(std::vector<double> costs, std::vector<double> probs,
                           const std::vector<std::vector<int>>& sets,
                           std::vector<std::vector<int>> regions) {
  int n = static_cast<int>(costs.size());
  int m = static_cast<int>(probs.size());
  if (sets.size() != probs.size())
    throw std::invalid_argument("scenario field sizes mismatch");
  auto universe = universe_from(n, sets);
  std::vector<OraclePtr> oracles;
  oracles.reserve(m);
  for (int i = 0; i < m; ++i) oracles.push_back(drd_function(universe, regions, i));
  Instance inst(App::drd, std::move(costs), std::move(probs),
                feedback_from_sets(n, sets), 2, std::move(oracles));
  inst.set_drd_regions(std::move(regions));
  return inst;
}

Instance make_ranking_instance(std::vector<double> costs, std::vector<double> weights,
                               std::vector<OraclePtr> oracles) {
  int n = static_cast<int>(costs.size());
  int m = static_cast<int>(weights.size());
  if (oracles.size() != weights.size())
    throw std::invalid_argument("one oracle per weight required");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("negative ranking weight");
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("ranking weights sum to zero");
  std::vector<double> probs(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) probs[i] = weights[i] / total;
  // Every scenario answers yes everywhere: feedback never splits anything.
  std::vector<Symbol> fb(std::size_t(n) * m, kYes);
  return Instance(App::ranking, std::move(costs), std::move(probs), std::move(fb), 2,
                  std::move(oracles));
}

Instance make_custom_instance(std::vector<double> costs, std::vector<double> probs,
                              const std::vector<std::vector<int>>& sets,
                              std::vector<OraclePtr> oracles) {
  int n = static_cast<int>(costs.size());
  if (sets.size() != probs.size() || oracles.size() != probs.size())
    throw std::invalid_argument("scenario field sizes mismatch");
  return Instance(App::none, std::move(costs), std::move(probs),
                  feedback_from_sets(n, sets), 2, std::move(oracles));
}

}  // namespace adrank
