#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "cmf/congruence.hpp"

namespace cmf {

// Sweep identifiers, in output order.
inline constexpr std::array<std::string_view, 12> kTheoremIds{
    "thm1.4", "thm1.8", "thm1.9", "eq2.1", "cor1.2", "cor1.3", "cor1.6",
    "cor1.7", "eq1.2",  "eq1.3",  "oracle-agreement", "counterexample-p2"};

inline bool is_theorem_id(std::string_view id) {
  return std::find(kTheoremIds.begin(), kTheoremIds.end(), id) != kTheoremIds.end();
}

struct SweepConfig {
  std::vector<std::string> theorems;
  std::uint64_t pmax = 100;
  int rmax = 2;
  int mmax = 3;
  std::vector<int> weights{3};
  std::uint64_t nmax = 2000;
  unsigned jobs = 1;

  void validate() const {
    if (theorems.empty()) throw std::invalid_argument("no theorem ids given");
    for (const auto& t : theorems)
      if (!is_theorem_id(t)) throw std::invalid_argument("unknown theorem id '" + t + "'");
    if (pmax < 1 || rmax < 1 || mmax < 1 || nmax < 1 || jobs < 1)
      throw std::invalid_argument("bounds must be positive");
    for (int k : weights)
      if (k < 2) throw std::invalid_argument("weights must be >= 2");
  }
};

/// Which sign of the non-residue branch of the U_M recursion verifies.
struct SignAdjudication {
  std::uint64_t nonresidue_cases = 0;
  std::uint64_t printed_pass = 0;
  std::uint64_t negated_pass = 0;
  std::uint64_t distinguishing_cases = 0;  // cases where exactly one sign passes

  friend bool operator==(const SignAdjudication&, const SignAdjudication&) = default;
};

struct SweepResult {
  std::vector<CongruenceReport> reports;
  std::vector<Witness> witnesses;
  std::vector<std::string> missing_witnesses;  // theorem ids with no witness found
  std::optional<SignAdjudication> adjudication;

  [[nodiscard]] std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; }));
  }
  [[nodiscard]] bool all_pass() const { return failures() == 0 && missing_witnesses.empty(); }
};

namespace detail {

inline std::size_t theorem_rank(std::string_view id) {
  const auto base = id.substr(0, id.find('/'));
  return static_cast<std::size_t>(std::find(kTheoremIds.begin(), kTheoremIds.end(), base) - kTheoremIds.begin());
}

using Task = std::function<std::vector<CongruenceReport>()>;

// Runs tasks on `jobs` workers; results are gathered by task index, so the
// merged output does not depend on scheduling.
inline std::vector<std::vector<CongruenceReport>> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<CongruenceReport>> out(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(hi))
    if (p >= lo) out.push_back(p);
  return out;
}

}  // namespace detail

/// Sorts by (theorem, p, r, m, qualified id).
inline void sort_reports(std::vector<CongruenceReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const CongruenceReport& a, const CongruenceReport& b) {
    return std::make_tuple(detail::theorem_rank(a.theorem_id), a.p, a.r, a.m, std::string_view(a.theorem_id)) <
           std::make_tuple(detail::theorem_rank(b.theorem_id), b.p, b.r, b.m, std::string_view(b.theorem_id));
  });
}

/// Builds one task per (theorem, prime) or (theorem, weight), runs them, and
/// merges the reports in deterministic order.
inline SweepResult run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  using detail::primes_in;
  std::vector<detail::Task> tasks;
  auto want = [&](std::string_view id) { return std::find(cfg.theorems.begin(), cfg.theorems.end(), id) != cfg.theorems.end(); };
  std::vector<int> odd_weights;
  for (int k : cfg.weights)
    if (k % 2 == 1 && k >= 3) odd_weights.push_back(k);

  auto per_r = [&](std::uint64_t p, auto fn) {
    tasks.emplace_back([=, rmax = cfg.rmax] {
      std::vector<CongruenceReport> v;
      for (int r = 1; r <= rmax; ++r) v.push_back(fn(p, r));
      return v;
    });
  };

  if (want("thm1.4"))
    for (auto p : primes_in(5, cfg.pmax)) per_r(p, verify_thm_1_4);
  if (want("thm1.8"))
    for (auto p : primes_in(3, cfg.pmax)) per_r(p, verify_thm_1_8);
  if (want("thm1.9"))
    for (auto p : primes_in(5, cfg.pmax)) per_r(p, verify_thm_1_9);
  if (want("eq2.1")) {
    for (auto p : primes_in(2, cfg.pmax)) {
      tasks.emplace_back([p, &cfg] {
        std::vector<CongruenceReport> v;
        for (int M = 2; M <= 4; ++M) {
          if (M % static_cast<int>(p) == 0) continue;
          for (int m = 1; m <= cfg.mmax; ++m)
            for (int r = 2; r <= cfg.rmax; ++r) v.push_back(verify_bs_congruence(M, m, r, p));
        }
        return v;
      });
    }
  }
  if (want("cor1.2"))
    for (int k : cfg.weights)
      for (auto p : primes_in(3, cfg.pmax)) {
        if (p == 3 && k % 2 == 0) continue;
        per_r(p, [k](std::uint64_t q, int r) { return verify_cor_1_2(k, q, r); });
      }
  if (want("cor1.3"))
    for (int k : cfg.weights)
      for (auto p : primes_in(5, cfg.pmax)) per_r(p, [k](std::uint64_t q, int r) { return verify_cor_1_3(k, q, r); });
  if (want("cor1.6"))
    for (int k : odd_weights)
      for (auto p : primes_in(2, cfg.pmax)) per_r(p, [k](std::uint64_t q, int r) { return verify_cor_1_6(k, q, r); });
  if (want("cor1.7"))
    for (int k : odd_weights)
      for (auto p : primes_in(3, cfg.pmax)) per_r(p, [k](std::uint64_t q, int r) { return verify_cor_1_7(k, q, r); });
  if (want("eq1.2")) {
    tasks.emplace_back([&cfg] {
      std::vector<CongruenceReport> v;
      const PowerSeries eta = eta_product_h(std::max<std::uint64_t>(cfg.pmax, 1));
      for (auto p : primes_in(5, cfg.pmax)) v.push_back(verify_superapery(p, eta));
      return v;
    });
  }
  if (want("eq1.3"))
    for (auto p : primes_in(3, cfg.pmax)) per_r(p, verify_eq_1_3);
  if (want("oracle-agreement")) {
    for (int k : cfg.weights) {
      tasks.emplace_back([k, &cfg] { return std::vector{verify_oracle_agreement(FamilyTag(Family::gamma, k), cfg.nmax)}; });
      if (k % 2 == 1)
        tasks.emplace_back([k, &cfg] { return std::vector{verify_oracle_agreement(FamilyTag(Family::beta, k), cfg.nmax)}; });
      if (k == 3) tasks.emplace_back([&cfg] { return std::vector{verify_eta_agreement(cfg.nmax)}; });
    }
  }

  SweepResult result;
  for (auto& chunk : detail::run_tasks(tasks, cfg.jobs))
    result.reports.insert(result.reports.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  sort_reports(result.reports);

  if (want("eq2.1")) {
    SignAdjudication adj;
    for (const auto& rep : result.reports) {
      if (detail::theorem_rank(rep.theorem_id) != detail::theorem_rank("eq2.1")) continue;
      const int M = rep.theorem_id.back() - '0';
      if (kronecker(-M, static_cast<std::int64_t>(rep.p)) != -1) continue;
      const auto negated = verify_bs_congruence(M, rep.m, rep.r, rep.p, NonresidueSign::negated);
      ++adj.nonresidue_cases;
      adj.printed_pass += rep.pass ? 1 : 0;
      adj.negated_pass += negated.pass ? 1 : 0;
      adj.distinguishing_cases += rep.pass != negated.pass ? 1 : 0;
    }
    result.adjudication = adj;
  }

  if (want("counterexample-p2")) {
    for (auto [which, id] : {std::pair{WitnessTheorem::thm1_4, "thm1.4"}, std::pair{WitnessTheorem::thm1_8, "thm1.8"}}) {
      if (auto w = find_mod_p2_counterexample(which, cfg.pmax))
        result.witnesses.push_back(*w);
      else
        result.missing_witnesses.emplace_back(id);
    }
  }
  return result;
}

}  // namespace cmf
