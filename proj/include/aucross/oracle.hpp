#pragma once

#include <algorithm>
#include <vector>

#include "quantile.hpp"
#include "ranking.hpp"
#include "selection.hpp"
#include "threading.hpp"

namespace aucross {

// Exhaustive search for the score band maximizing selective AUC subject to
// coverage >= c. Evaluation-only: it reads the true labels. Candidates are the
// empty band plus every contiguous run of score tie groups whose total size
// stays within the rejection budget floor(n*(1-c)); any band is equivalent to
// one of these on the observed sample. Ties are broken toward higher coverage,
// then smaller band width, then scan order (lower endpoint first).

struct OracleResult {
  ScoreBandSelector best_selector = ScoreBandSelector::empty();
  double best_auc = 0.0;
  double achieved_coverage = 1.0;
  long long candidates_evaluated = 0;
};

struct OracleOptions {
  bool naive = false;
  int threads = 1;
};

namespace oracle_detail {

struct Groups {
  std::vector<double> value;
  std::vector<long long> size, pos;
  std::vector<long long> cum_all, cum_pos, cum_neg;  // inclusive prefix sums
  std::vector<long long> pref_c2x;                   // tie-credited, groups [0..g]
  std::vector<long long> suf_c2x;                    // groups [g..G-1]
  long long n = 0, n_pos = 0;
};

inline Groups build_groups(const LabeledSample& s) {
  std::vector<std::size_t> order(s.n());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return s.scores()[a] < s.scores()[b]; });
  Groups g;
  g.n = static_cast<long long>(s.n());
  g.n_pos = s.n_pos();
  for (std::size_t k = 0; k < order.size();) {
    double v = s.scores()[order[k]];
    long long sz = 0, p = 0;
    while (k < order.size() && s.scores()[order[k]] == v) {
      ++sz;
      p += s.labels()[order[k]];
      ++k;
    }
    g.value.push_back(v);
    g.size.push_back(sz);
    g.pos.push_back(p);
  }
  std::size_t G = g.value.size();
  g.cum_all.resize(G);
  g.cum_pos.resize(G);
  g.cum_neg.resize(G);
  long long ca = 0, cp = 0;
  for (std::size_t i = 0; i < G; ++i) {
    ca += g.size[i];
    cp += g.pos[i];
    g.cum_all[i] = ca;
    g.cum_pos[i] = cp;
    g.cum_neg[i] = ca - cp;
  }
  g.pref_c2x.resize(G);
  long long c2x = 0, neg_below = 0;
  for (std::size_t i = 0; i < G; ++i) {
    long long m = g.size[i] - g.pos[i];
    c2x += g.pos[i] * (2 * neg_below + m);
    neg_below += m;
    g.pref_c2x[i] = c2x;
  }
  g.suf_c2x.resize(G);
  c2x = 0;
  long long pos_above = 0;
  for (std::size_t i = G; i-- > 0;) {
    long long m = g.size[i] - g.pos[i];
    c2x += m * (2 * pos_above + g.pos[i]);
    pos_above += g.pos[i];
    g.suf_c2x[i] = c2x;
  }
  return g;
}

struct Candidate {
  long long c2x = 0, pos = 0, neg = 0, accepted = 0;
  long long gi = -1, gj = -1;  // rejected group range; -1 marks the empty band
  double width() const { return gi < 0 ? -1.0 : 0.0; }
};

// Exact rational comparison of c2x/(2*pos*neg); positive when a ranks above b.
inline int compare_candidates(const Candidate& a, const Candidate& b) {
  __int128 lhs = static_cast<__int128>(a.c2x) * (static_cast<__int128>(b.pos) * b.neg);
  __int128 rhs = static_cast<__int128>(b.c2x) * (static_cast<__int128>(a.pos) * a.neg);
  if (lhs != rhs) return lhs > rhs ? 1 : -1;
  if (a.accepted != b.accepted) return a.accepted > b.accepted ? 1 : -1;
  return 0;
}

inline bool strictly_better(const Candidate& a, const Candidate& incumbent, const Groups& g) {
  int cmp = compare_candidates(a, incumbent);
  if (cmp != 0) return cmp > 0;
  double wa = a.gi < 0 ? -1.0 : g.value[static_cast<std::size_t>(a.gj)] -
                                    g.value[static_cast<std::size_t>(a.gi)];
  double wb = incumbent.gi < 0 ? -1.0 : g.value[static_cast<std::size_t>(incumbent.gj)] -
                                            g.value[static_cast<std::size_t>(incumbent.gi)];
  return wa < wb;
}

inline long long naive_c2x(const LabeledSample& s, double lo, double hi) {
  std::vector<double> sc;
  std::vector<int> lb;
  for (std::size_t i = 0; i < s.n(); ++i)
    if (s.scores()[i] < lo || s.scores()[i] > hi) {
      sc.push_back(s.scores()[i]);
      lb.push_back(s.labels()[i]);
    }
  return auc_pair_counts(LabeledSample(std::move(sc), std::move(lb))).doubled_concordant;
}

}  // namespace oracle_detail

inline OracleResult oracle_search(const LabeledSample& s, double coverage,
                                  const OracleOptions& opt = {}) {
  require_coverage_target(coverage, "oracle_search");
  s.require_nonempty("oracle_search");
  s.require_both_classes("oracle_search");

  auto g = oracle_detail::build_groups(s);
  std::size_t G = g.value.size();
  long long budget = snapped_floor(static_cast<double>(g.n) * (1.0 - coverage));

  oracle_detail::Candidate empty;
  empty.c2x = g.pref_c2x[G - 1];
  empty.pos = g.n_pos;
  empty.neg = g.n - g.n_pos;
  empty.accepted = g.n;

  oracle_detail::Candidate best = empty;
  long long evaluated = 1;

  std::vector<oracle_detail::Candidate> local_best(G, empty);
  std::vector<long long> local_count(G, 0);
  std::vector<char> local_found(G, 0);

  parallel_chunks(G, static_cast<unsigned>(opt.threads), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i; j < G; ++j) {
        long long before = i == 0 ? 0 : g.cum_all[i - 1];
        long long rejected = g.cum_all[j] - before;
        if (rejected > budget) break;
        oracle_detail::Candidate cand;
        cand.gi = static_cast<long long>(i);
        cand.gj = static_cast<long long>(j);
        cand.accepted = g.n - rejected;
        long long pos_before = i == 0 ? 0 : g.cum_pos[i - 1];
        long long rej_pos = g.cum_pos[j] - pos_before;
        cand.pos = g.n_pos - rej_pos;
        cand.neg = cand.accepted - cand.pos;
        if (cand.pos == 0 || cand.neg == 0) continue;
        if (opt.naive) {
          cand.c2x = oracle_detail::naive_c2x(s, g.value[i], g.value[j]);
        } else {
          long long pref = i == 0 ? 0 : g.pref_c2x[i - 1];
          long long suf = j + 1 < G ? g.suf_c2x[j + 1] : 0;
          long long neg_before = i == 0 ? 0 : g.cum_neg[i - 1];
          cand.c2x = pref + suf + 2 * (g.n_pos - g.cum_pos[j]) * neg_before;
        }
        ++local_count[i];
        if (!local_found[i] || oracle_detail::strictly_better(cand, local_best[i], g)) {
          local_best[i] = cand;
          local_found[i] = 1;
        }
      }
    }
  });

  for (std::size_t i = 0; i < G; ++i) {
    evaluated += local_count[i];
    if (local_found[i] && oracle_detail::strictly_better(local_best[i], best, g)) best = local_best[i];
  }

  OracleResult out;
  out.candidates_evaluated = evaluated;
  out.best_auc = static_cast<double>(best.c2x) / (2.0 * static_cast<double>(best.pos) *
                                                  static_cast<double>(best.neg));
  out.achieved_coverage = static_cast<double>(best.accepted) / static_cast<double>(g.n);
  if (best.gi >= 0)
    out.best_selector = ScoreBandSelector::band(g.value[static_cast<std::size_t>(best.gi)],
                                                g.value[static_cast<std::size_t>(best.gj)]);
  return out;
}

}  // namespace aucross
