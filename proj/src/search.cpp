#include "z2e/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "z2e/criterion.hpp"
#include "z2e/delprod.hpp"

namespace z2e {

ConstraintSystem build_system(const Flavor& f) {
  const auto lc = linear_conditions(f);
  ConstraintSystem s;
  s.h = lc.h;
  std::vector<Gf2Vector> rows;
  std::vector<bool> rhs;
  for (std::size_t i = 0; i < lc.independence.size(); ++i) {
    rows.push_back(lc.independence[i]);
    rhs.push_back(false);
    const auto [p, q] = f.disjoint_pairs[i];
    s.labels.push_back("independent " + f.generator_labels[p] + " " + f.generator_labels[q]);
  }
  for (std::size_t x = 0; x < lc.nontriviality.size(); ++x) {
    if (lc.nontriviality[x].empty()) continue;
    rows.push_back(lc.nontriviality[x][0]);
    rhs.push_back(true);
    s.labels.push_back("nontrivial " + f.subobjects[x].label);
  }
  s.equations = Gf2Matrix::from_rows(rows, form_variable_count(s.h));
  s.rhs = Gf2Vector(rows.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) s.rhs.set(i, rhs[i]);
  return s;
}

std::optional<AffineSolution> solve_system(const ConstraintSystem& s) { return solve_affine(s.equations, s.rhs); }

// ---------------------------------------------------------------- coset minimization

namespace {

using Rows = std::array<Word, 64>;

struct Score {
  std::size_t penalty = std::numeric_limits<std::size_t>::max();
  std::size_t value = std::numeric_limits<std::size_t>::max();
  auto operator<=>(const Score&) const = default;
};

std::size_t rank64(const Rows& rows, std::size_t h) {
  std::array<Word, 64> piv{};
  std::size_t r = 0;
  for (std::size_t i = 0; i < h; ++i) {
    Word x = rows[i];
    while (x) {
      const int b = 63 - std::countl_zero(x);
      if (!piv[static_cast<std::size_t>(b)]) {
        piv[static_cast<std::size_t>(b)] = x;
        ++r;
        break;
      }
      x ^= piv[static_cast<std::size_t>(b)];
    }
  }
  return r;
}

class Evaluator {
 public:
  Evaluator(const AffineSolution& coset, std::size_t h, Objective obj) : h_(h), obj_(obj) {
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = i; j < h; ++j) vars_.emplace_back(i, j);
    base_ = to_rows(coset.particular);
    for (const auto& k : coset.kernel) deltas_.push_back(to_rows(k));
  }

  std::size_t dim() const { return deltas_.size(); }
  const Rows& base() const { return base_; }
  const Rows& delta(std::size_t t) const { return deltas_[t]; }

  Score score(const Rows& r) const {
    const std::size_t rk = rank64(r, h_);
    std::size_t diag = 0;
    for (std::size_t i = 0; i < h_; ++i) diag += (r[i] >> i) & 1U;
    const bool alt = diag == 0;
    switch (obj_) {
      case Objective::Rank:
        return {0, rk};
      case Objective::AlternatingRank:
      case Objective::BetaH:
        return {diag, rk};
      case Objective::NonAlternatingRank:
        return {alt ? 1U : 0U, rk};
      case Objective::BetaI:
        return {0, alt ? (rk == 0 ? 0 : rk + 1) : rk};
    }
    return {};
  }

  Gf2Vector variables(const Rows& r) const {
    Gf2Vector v(vars_.size());
    for (std::size_t k = 0; k < vars_.size(); ++k) v.set(k, (r[vars_[k].first] >> vars_[k].second) & 1U);
    return v;
  }

  Gf2Matrix matrix(const Rows& r) const {
    Gf2Matrix m(h_, h_);
    for (std::size_t i = 0; i < h_; ++i)
      for (std::size_t j = 0; j < h_; ++j)
        if ((r[i] >> j) & 1U) m.set(i, j);
    return m;
  }

 private:
  Rows to_rows(const Gf2Vector& v) const {
    Rows r{};
    for (auto k : v.support()) {
      const auto [i, j] = vars_[k];
      r[i] ^= Word{1} << j;
      if (i != j) r[j] ^= Word{1} << i;
    }
    return r;
  }

  std::size_t h_;
  Objective obj_;
  std::vector<std::pair<std::size_t, std::size_t>> vars_;
  Rows base_{};
  std::vector<Rows> deltas_;
};

void xor_into(Rows& a, const Rows& b, std::size_t h) {
  for (std::size_t i = 0; i < h; ++i) a[i] ^= b[i];
}

struct Best {
  Score score;
  Gf2Vector vars;
  Rows rows{};
  std::uint64_t evaluations = 0;

  void offer(const Evaluator& ev, const Rows& r, const Score& s) {
    if (s > score) return;
    auto v = ev.variables(r);
    if (s == score && !(v < vars)) return;
    score = s;
    vars = std::move(v);
    rows = r;
  }
  void merge(const Best& o) {
    evaluations += o.evaluations;
    if (o.score < score || (o.score == score && o.vars < vars)) {
      score = o.score;
      vars = o.vars;
      rows = o.rows;
    }
  }
};

template <class Task>
std::vector<Best> run_parallel(std::size_t tasks, unsigned threads, Task task) {
  std::vector<Best> out(tasks);
  const unsigned t = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
  if (t == 1) {
    for (std::size_t i = 0; i < tasks; ++i) out[i] = task(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < tasks; i += t) out[i] = task(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

Best exhaustive(const Evaluator& ev, std::size_t h, unsigned threads) {
  const std::size_t d = ev.dim();
  const std::uint64_t total = std::uint64_t{1} << d;
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(total, std::uint64_t{threads} * 4));
  auto parts = run_parallel(chunks, threads, [&](std::size_t c) {
    const std::uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
    Best best;
    if (lo >= hi) return best;
    Rows r = ev.base();
    const std::uint64_t g = lo ^ (lo >> 1);
    for (std::size_t t = 0; t < d; ++t)
      if ((g >> t) & 1U) xor_into(r, ev.delta(t), h);
    best.offer(ev, r, ev.score(r));
    for (std::uint64_t i = lo + 1; i < hi; ++i) {
      xor_into(r, ev.delta(static_cast<std::size_t>(std::countr_zero(i))), h);
      best.offer(ev, r, ev.score(r));
    }
    best.evaluations = hi - lo;
    return best;
  });
  Best out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

Best greedy(const Evaluator& ev, std::size_t h, const SearchOptions& o) {
  const std::size_t d = ev.dim();
  const std::size_t restarts = std::max<std::size_t>(1, o.restarts);
  const std::uint64_t share = std::max<std::uint64_t>(1, o.budget / restarts);
  auto parts = run_parallel(restarts, o.threads, [&](std::size_t rs) {
    std::mt19937_64 rng(o.seed * 0x9E3779B97F4A7C15ULL + rs);
    Best best;
    Rows r = ev.base();
    for (std::size_t t = 0; t < d; ++t)
      if (rng() & 1U) xor_into(r, ev.delta(t), h);
    std::uint64_t evals = 0;
    auto descend = [&](Rows& x, Score& cur) {
      bool improved = true;
      while (improved && evals < share) {
        improved = false;
        for (std::size_t t = 0; t < d && evals < share; ++t) {
          xor_into(x, ev.delta(t), h);
          const Score sc = ev.score(x);
          ++evals;
          if (sc < cur) {
            cur = sc;
            improved = true;
          } else {
            xor_into(x, ev.delta(t), h);
          }
        }
      }
    };
    Score cur = ev.score(r);
    ++evals;
    descend(r, cur);
    // iterated local search: kick the best point and descend again
    for (std::size_t stale = 0; d > 0 && stale < 32 && evals < share;) {
      Rows x = r;
      const std::size_t kicks = 1 + rng() % 3;
      for (std::size_t k = 0; k < kicks; ++k) xor_into(x, ev.delta(rng() % d), h);
      Score sc = ev.score(x);
      ++evals;
      descend(x, sc);
      if (sc < cur) {
        cur = sc;
        r = x;
        stale = 0;
      } else {
        ++stale;
      }
    }
    best.offer(ev, r, cur);
    best.evaluations = evals;
    return best;
  });
  Best out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace

CosetMinimum min_over_coset(const AffineSolution& coset, std::size_t h, Objective objective, const SearchOptions& options) {
  if (h > 64) throw std::invalid_argument("coset search supports basis size at most 64");
  const Evaluator ev(coset, h, objective);
  const std::size_t d = ev.dim();
  const bool fits = d < 63 && (std::uint64_t{1} << d) <= options.budget;
  bool full = false;
  switch (options.strategy) {
    case Strategy::Auto:
      full = d <= options.exhaustive_threshold && fits;
      break;
    case Strategy::Exhaustive:
      if (!fits) throw std::invalid_argument("coset too large for exhaustive search within the budget");
      full = true;
      break;
    case Strategy::Greedy:
      break;
  }
  const Best best = full ? exhaustive(ev, h, options.threads) : greedy(ev, h, options);
  CosetMinimum out;
  out.exact = full;
  out.evaluations = best.evaluations;
  if (best.score.penalty == 0) {
    out.form = ev.matrix(best.rows);
    out.value = best.score.value;
  }
  return out;
}

CosetMinimum min_rank_over_coset(const AffineSolution& coset, std::size_t h, std::optional<FormType> type,
                                 const SearchOptions& options) {
  Objective obj = Objective::Rank;
  if (type) obj = *type == FormType::Alternating ? Objective::AlternatingRank : Objective::NonAlternatingRank;
  return min_over_coset(coset, h, obj, options);
}

namespace {

// Equations in reduced row form as masks on the upper triangle of B.
struct ReducedSystem {
  bool consistent = true;
  std::vector<Rows> masks;
  std::vector<bool> target;
};

ReducedSystem reduce_system(const ConstraintSystem& s) {
  const std::size_t h = s.h;
  ReducedSystem out;
  Gf2Matrix aug(s.equations.rows(), s.variable_count() + 1);
  for (std::size_t r = 0; r < s.equations.rows(); ++r) {
    auto row = s.equations.row(r);
    for (std::size_t c = 0; c < s.variable_count(); ++c) aug.set(r, c, row.get(c));
    aug.set(r, s.variable_count(), s.rhs.get(r));
  }
  const auto pivots = reduce_rows(aug);
  for (auto p : pivots)
    if (p == s.variable_count()) out.consistent = false;
  if (!out.consistent) return out;
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j) vars.emplace_back(i, j);
  out.masks.resize(pivots.size());
  out.target.resize(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (aug.get(r, k)) out.masks[r][vars[k].first] |= Word{1} << vars[k].second;
    out.target[r] = aug.get(r, s.variable_count());
  }
  return out;
}

Gf2Matrix rows_to_matrix(const Rows& b, std::size_t h) {
  Gf2Matrix m(h, h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      if ((b[i] >> j) & 1U) m.set(i, j);
  return m;
}

}  // namespace

RealizationSearch find_realization(const ConstraintSystem& s, const OmegaSpec& spec, const SearchOptions& options) {
  const std::size_t h = s.h;
  if (h > 64) throw std::invalid_argument("realization search supports basis size at most 64");
  omega_matrix(spec);
  RealizationSearch out;
  const std::size_t bits = spec.beta * h;
  if (bits >= 63 || (std::uint64_t{1} << bits) > options.budget) return out;
  out.exhausted = true;

  const auto red = reduce_system(s);
  if (!red.consistent) return out;  // nothing to find
  const auto& masks = red.masks;
  const auto& target = red.target;
  auto member = [&](const Rows& b) {
    for (std::size_t r = 0; r < masks.size(); ++r) {
      int par = 0;
      for (std::size_t i = 0; i < h; ++i) par ^= std::popcount(b[i] & masks[r][i]) & 1;
      if ((par != 0) != target[r]) return false;
    }
    return true;
  };

  const bool type_i = spec.kind == OmegaKind::TypeI;
  // flips bit c of row r of Y and updates B = Y^T Omega Y
  auto flip = [&](std::vector<Word>& y, Rows& b, std::size_t r, std::size_t c) {
    const Word partner = type_i ? y[r] : y[r ^ 1U];
    for (Word m = partner; m; m &= m - 1) b[static_cast<std::size_t>(std::countr_zero(m))] ^= Word{1} << c;
    b[c] ^= partner;
    if (type_i) b[c] ^= Word{1} << c;
    y[r] ^= Word{1} << c;
  };

  const std::uint64_t total = std::uint64_t{1} << bits;
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(total, std::uint64_t{options.threads} * 4));
  std::vector<std::optional<Rows>> hits(chunks);
  std::vector<std::uint64_t> evals(chunks);
  auto work = [&](std::size_t ch) {
    const std::uint64_t lo = total * ch / chunks, hi = total * (ch + 1) / chunks;
    if (lo >= hi) return;
    std::vector<Word> y(spec.beta, 0);
    Rows b{};
    const std::uint64_t g = lo ^ (lo >> 1);
    for (std::size_t t = 0; t < bits; ++t)
      if ((g >> t) & 1U) flip(y, b, t / h, t % h);
    std::uint64_t i = lo;
    for (;;) {
      ++evals[ch];
      if (member(b)) {
        hits[ch] = b;
        return;
      }
      if (++i >= hi) return;
      const auto t = static_cast<std::size_t>(std::countr_zero(i));
      flip(y, b, t / h, t % h);
    }
  };
  const unsigned nt = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(chunks)));
  if (nt == 1) {
    for (std::size_t ch = 0; ch < chunks; ++ch) work(ch);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nt; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t ch = w; ch < chunks; ch += nt) work(ch);
      });
    for (auto& th : pool) th.join();
  }
  for (std::size_t ch = 0; ch < chunks; ++ch) {
    out.evaluations += evals[ch];
    if (hits[ch] && !out.form) out.form = rows_to_matrix(*hits[ch], h);
  }
  return out;
}

RealizationSearch local_realization(const ConstraintSystem& s, const OmegaSpec& spec, const SearchOptions& options) {
  const std::size_t h = s.h;
  if (h > 64) throw std::invalid_argument("realization search supports basis size at most 64");
  omega_matrix(spec);
  RealizationSearch out;
  const auto red = reduce_system(s);
  if (!red.consistent) return out;
  const std::size_t eqs = red.masks.size();
  const std::size_t beta = spec.beta, bits = beta * h;
  const bool type_i = spec.kind == OmegaKind::TypeI;

  // touch[c][r]: bit j when variable {c,j} occurs in equation r
  std::vector<std::vector<Word>> touch(h, std::vector<Word>(eqs, 0));
  for (std::size_t r = 0; r < eqs; ++r)
    for (std::size_t i = 0; i < h; ++i)
      for (Word m = red.masks[r][i]; m; m &= m - 1) {
        const auto j = static_cast<std::size_t>(std::countr_zero(m));
        touch[i][r] |= Word{1} << j;
        touch[j][r] |= Word{1} << i;
      }

  std::vector<Word> y(beta, 0);
  std::vector<std::uint8_t> bad(eqs);  // equation r currently violated
  std::size_t violated = 0;
  auto reset = [&](std::mt19937_64& rng) {
    const Word full = h == 64 ? ~Word{0} : (Word{1} << h) - 1;
    for (auto& w : y) w = rng() & full;
    Rows b{};
    for (std::size_t r = 0; r < beta; ++r) {
      const Word partner = type_i ? y[r] : y[r ^ 1U];
      for (Word m = y[r]; m; m &= m - 1) b[static_cast<std::size_t>(std::countr_zero(m))] ^= partner;
    }
    violated = 0;
    for (std::size_t e = 0; e < eqs; ++e) {
      int par = 0;
      for (std::size_t i = 0; i < h; ++i) par ^= std::popcount(b[i] & red.masks[e][i]) & 1;
      bad[e] = (par != 0) != red.target[e];
      violated += bad[e];
    }
  };
  // equations whose parity changes when bit c of row r flips
  auto changed = [&](std::size_t r, std::size_t c, std::size_t e) {
    const Word partner = (type_i ? y[r] : y[r ^ 1U]) & ~(Word{1} << c);
    bool par = std::popcount(touch[c][e] & partner) & 1;
    if (type_i) par ^= (red.masks[e][c] >> c) & 1U;
    return par;
  };
  auto delta = [&](std::size_t r, std::size_t c) {
    long d = 0;
    for (std::size_t e = 0; e < eqs; ++e)
      if (changed(r, c, e)) d += bad[e] ? -1 : 1;
    return d;
  };
  auto apply = [&](std::size_t r, std::size_t c) {
    for (std::size_t e = 0; e < eqs; ++e)
      if (changed(r, c, e)) {
        violated += bad[e] ? -1 : 1;
        bad[e] ^= 1U;
      }
    y[r] ^= Word{1} << c;
  };
  auto finish = [&] {
    Rows b{};
    for (std::size_t r = 0; r < beta; ++r) {
      const Word partner = type_i ? y[r] : y[r ^ 1U];
      for (Word m = y[r]; m; m &= m - 1) b[static_cast<std::size_t>(std::countr_zero(m))] ^= partner;
    }
    out.form = rows_to_matrix(b, h);
  };

  std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  reset(rng);
  if (violated == 0) {
    finish();
    return out;
  }
  if (bits == 0) return out;
  const std::size_t stale_limit = 50 * bits;
  const std::size_t tenure = std::max<std::size_t>(2, bits / 8);
  std::vector<std::uint64_t> tabu_until(bits, 0);
  std::uint64_t step = 0;
  std::size_t best = violated, stale = 0;
  while (out.evaluations < options.local_budget) {
    long best_d = std::numeric_limits<long>::max();
    std::size_t pick = bits, ties = 0;
    for (std::size_t t = 0; t < bits; ++t) {
      const long d = delta(t / h, t % h);
      ++out.evaluations;
      const bool allowed = tabu_until[t] <= step || static_cast<long>(violated) + d == 0;
      if (!allowed) continue;
      if (d < best_d) {
        best_d = d;
        pick = t;
        ties = 1;
      } else if (d == best_d && rng() % ++ties == 0) {
        pick = t;
      }
    }
    ++step;
    if (pick == bits) continue;
    apply(pick / h, pick % h);
    tabu_until[pick] = step + tenure + rng() % (tenure + 1);
    if (violated == 0) {
      finish();
      return out;
    }
    if (violated < best) {
      best = violated;
      stale = 0;
    } else if (++stale > stale_limit) {
      reset(rng);
      best = violated;
      stale = 0;
      std::fill(tabu_until.begin(), tabu_until.end(), 0);
    }
  }
  return out;
}

// ---------------------------------------------------------------- certificates

const char* certificate_columns(FlavorKind k) {
  switch (k) {
    case FlavorKind::Join:
      return "lexicographic-octahedra";
    case FlavorKind::CompleteGraph:
      return "lexicographic-triples";
    case FlavorKind::Graph:
      return "graph-cycles";
  }
  return "";
}

std::string certificate_to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["complex"] = c.complex;
  j["omega"] = {{"kind", to_string(c.omega.kind)}, {"beta", c.omega.beta}};
  j["Y"] = c.y.to_strings();
  j["columns"] = c.columns;
  j["seed"] = c.seed;
  return j.dump(2);
}

Certificate certificate_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    Certificate c;
    c.complex = j.at("complex").get<std::string>();
    const auto kind = j.at("omega").at("kind").get<std::string>();
    if (kind != "I" && kind != "H") throw std::invalid_argument("omega kind must be I or H");
    c.omega.kind = kind == "I" ? OmegaKind::TypeI : OmegaKind::TypeH;
    c.omega.beta = j.at("omega").at("beta").get<std::size_t>();
    const auto rows = j.at("Y").get<std::vector<std::string>>();
    for (const auto& r : rows) {
      if (r.size() != rows[0].size()) throw std::invalid_argument("Y rows differ in length");
      if (r.find_first_not_of("01") != std::string::npos) throw std::invalid_argument("Y rows must be bit strings");
    }
    c.y = rows.empty() ? Gf2Matrix() : Gf2Matrix::from_strings(rows);
    c.columns = j.at("columns").get<std::string>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "";
}

namespace {

std::string join_labels(const Flavor& f, const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " " : "") + f.generator_labels.at(idx[i]);
  return s;
}

}  // namespace

VerifyReport verify_certificate(const Flavor& f, const Certificate& c, const std::vector<std::uint64_t>& seeds) {
  auto fail = [](std::string msg) { return VerifyReport{false, std::move(msg)}; };
  if (c.complex != f.descriptor) return fail("complex " + c.complex + " does not match " + f.descriptor);
  if (c.columns != certificate_columns(f.kind)) return fail("unexpected column order " + c.columns);
  if (f.truncated) return fail("cycle or Kuratowski enumeration hit its limit");
  if (c.omega.kind == OmegaKind::TypeH && c.omega.beta % 2) return fail("TypeH needs even beta");
  const Gf2Matrix y = c.y.rows() == 0 ? Gf2Matrix(0, f.generator_count()) : c.y;
  if (y.rows() != c.omega.beta) return fail("Y has " + std::to_string(y.rows()) + " rows, beta is " + std::to_string(c.omega.beta));
  if (y.cols() != f.generator_count())
    return fail("Y has " + std::to_string(y.cols()) + " columns, expected " + std::to_string(f.generator_count()));

  const auto omega = omega_matrix(c.omega);
  const auto a = gram(y, omega);
  if (const auto r = is_additive(f, a); !r.ok) {
    const auto& v = r.violations[0];
    return fail("not additive: relation " + std::to_string(v[0]) + " against " + f.generator_labels[v[1]]);
  }
  if (const auto r = is_independent(f, a); !r.ok) return fail("not independent: " + join_labels(f, r.violations[0]));
  if (const auto r = is_nontrivial(f, a, NontrivialMode::All); !r.ok) {
    const auto& s = f.subobjects[r.violations[0][0]];
    return fail("trivial: " + s.label + " at " + s.witness_labels[r.violations[0][1]]);
  }
  const auto ctx = r_prime_context(f, seeds);
  const auto verdict = check_R_prime(ctx, face_map_from_values(f, y, omega), omega);
  if (!verdict.ok) {
    const auto& e = verdict.entries[verdict.failing[0]];
    return fail("criterion fails at " + ctx.labels[e.generator] + ": v=" + std::to_string(e.v) + " y2=" + std::to_string(e.y2));
  }
  return {};
}

Decision decide(const Flavor& f, const OmegaSpec& spec, const SearchOptions& options) {
  const auto omega = omega_matrix(spec);
  Decision d;
  if (f.truncated) {
    d.method = "truncated";
    return d;
  }
  const auto sys = build_system(f);
  const auto coset = solve_system(sys);
  if (!coset) {
    d.verdict = Verdict::No;
    d.consistent = false;
    d.exact = true;
    d.method = "inconsistent";
    return d;
  }
  d.coset_dim = coset->kernel.size();
  const auto m = min_over_coset(*coset, sys.h, spec.kind == OmegaKind::TypeI ? Objective::BetaI : Objective::BetaH, options);
  d.exact = m.exact;
  d.evaluations = m.evaluations;
  d.method = m.exact ? "coset-exhaustive" : "coset-greedy";
  if (m.form) d.best_beta = m.value;
  std::optional<Gf2Matrix> chosen;
  if (m.form && m.value <= spec.beta) chosen = m.form;
  if (!chosen && !m.exact) {
    // a realization with a smaller beta also serves this one
    const std::size_t step = spec.kind == OmegaKind::TypeH ? 2 : 1;
    for (std::size_t b = spec.beta + step; b >= step && !chosen;) {
      b -= step;
      const auto r = find_realization(sys, {spec.kind, b}, options);
      d.evaluations += r.evaluations;
      if (!r.exhausted) continue;
      d.method = "realization-enumeration";
      if (r.form) {
        chosen = r.form;
        d.best_beta = min_beta(*r.form, spec.kind);
      } else {
        if (b == spec.beta) d.exact = true;
        break;
      }
    }
  }
  if (!chosen && !d.exact) {
    const auto r = local_realization(sys, spec, options);
    d.evaluations += r.evaluations;
    if (r.form) {
      chosen = r.form;
      d.best_beta = min_beta(*r.form, spec.kind);
      d.method = "realization-local-search";
    }
  }
  if (!chosen) {
    d.verdict = d.exact ? Verdict::No : Verdict::Unknown;
    return d;
  }

  const Gf2Matrix& b = *chosen;
  const auto a = bform_expand(f, b);
  if (rank(a) != rank(b) || form_type(a) != form_type(b)) throw ConsistencyError("expansion changed rank or form type");
  const Gf2Matrix y = construct_Y(b, spec) * Gf2Matrix::from_columns(f.generators, f.basis_size);
  if (gram(y, omega) != a) throw ConsistencyError("certificate Y does not realize the expanded matrix");
  Certificate cert{f.descriptor, spec, y, certificate_columns(f.kind), options.seed};
  const auto report = verify_certificate(f, cert);
  if (!report.ok) throw ConsistencyError("certificate failed verification: " + report.first_violation);
  d.verdict = Verdict::Yes;
  d.certificate = std::move(cert);
  return d;
}

std::vector<TableRow> tabulate_min_beta(const std::vector<Flavor>& family, const std::vector<OmegaKind>& kinds,
                                        const SearchOptions& options) {
  std::vector<TableRow> out;
  for (const auto& f : family) {
    const auto sys = build_system(f);
    const auto coset = solve_system(sys);
    for (auto kind : kinds) {
      TableRow row{f.descriptor, kind, std::nullopt, !f.truncated, 0};
      if (coset && !f.truncated) {
        row.coset_dim = coset->kernel.size();
        const auto m = min_over_coset(*coset, sys.h, kind == OmegaKind::TypeI ? Objective::BetaI : Objective::BetaH, options);
        row.exact = m.exact;
        if (m.form) row.min_beta = m.value;
        // an upper bound is exact once the next smaller beta is ruled out
        const std::size_t step = kind == OmegaKind::TypeH ? 2 : 1;
        while (!row.exact && row.min_beta && *row.min_beta >= step) {
          const OmegaSpec lower{kind, *row.min_beta - step};
          const auto r = find_realization(sys, lower, options);
          if (r.exhausted) {
            if (r.form)
              row.min_beta = lower.beta;
            else
              row.exact = true;
            continue;
          }
          if (!local_realization(sys, lower, options).form) break;
          row.min_beta = lower.beta;
        }
        if (!row.exact && row.min_beta && *row.min_beta < step) row.exact = true;
      }
      out.push_back(row);
    }
  }
  return out;
}

// ---------------------------------------------------------------- descriptors

namespace {

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::invalid_argument("expected an integer, got '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

Flavor flavor_from_descriptor(const std::string& descriptor) {
  if (descriptor == "K33") return join_flavor(JoinComplex({3, 3}));
  if (descriptor == "K5") return complete_graph_flavor(5);
  const auto colon = descriptor.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("unknown complex '" + descriptor + "'");
  const auto head = descriptor.substr(0, colon);
  const auto rest = descriptor.substr(colon + 1);
  if (head == "join") {
    std::vector<int> sizes;
    for (const auto& p : split(rest, ',')) sizes.push_back(parse_int(p));
    if (sizes.size() < 2) throw std::invalid_argument("a join needs at least two factors");
    return join_flavor(JoinComplex(sizes));
  }
  if (head == "Kn") {
    const int n = parse_int(rest);
    if (n < 3) throw std::invalid_argument("Kn needs n >= 3");
    return complete_graph_flavor(n);
  }
  if (head == "tildeK") {
    const int n = parse_int(rest);
    if (n < 3) throw std::invalid_argument("tildeK needs n >= 3");
    return graph_flavor(deleted_graph(n).graph);
  }
  if (head == "graph") {
    const auto c2 = rest.find(':');
    if (c2 == std::string::npos) throw std::invalid_argument("graph descriptor needs 'graph:V:u-v,...'");
    const int v = parse_int(rest.substr(0, c2));
    if (v < 0) throw std::invalid_argument("negative vertex count");
    std::vector<std::pair<int, int>> edges;
    const auto list = rest.substr(c2 + 1);
    if (!list.empty())
      for (const auto& e : split(list, ',')) {
        const auto dash = e.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("edge '" + e + "' is not u-v");
        const int a = parse_int(e.substr(0, dash)), b = parse_int(e.substr(dash + 1));
        if (a < 0 || b < 0 || a >= v || b >= v) throw std::invalid_argument("edge '" + e + "' out of range");
        edges.emplace_back(a, b);
      }
    return graph_flavor(Graph(static_cast<std::size_t>(v), edges));
  }
  throw std::invalid_argument("unknown complex '" + descriptor + "'");
}

}  // namespace z2e
