#include "logres/coeff.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "logres/config.hpp"

namespace logres {

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.chart != b.chart) throw DimensionMismatch("ideal sum across charts");
  std::vector<Poly> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return Ideal::make(a.chart, std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (a.chart != b.chart) throw DimensionMismatch("ideal product across charts");
  Int count = Int(a.gens.size()) * Int(b.gens.size());
  if (count > limits().graded_generator_bound) {
    throw FactorialBlowup("product expansion exceeds the generator bound");
  }
  std::vector<Poly> gens;
  for (const auto& f : a.gens) {
    for (const auto& g : b.gens) gens.push_back(f * g);
  }
  return Ideal::make(a.chart, std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned e) {
  if (!a.chart) throw DimensionMismatch("ideal without a chart");
  if (e == 0) {
    return Ideal::make(a.chart, {Poly::constant(a.chart, Rat(1))});
  }
  if (a.is_zero()) return a;
  // Multisets of generators of size e.
  const std::size_t g = a.gens.size();
  Int count = 1;
  for (unsigned t = 0; t < e; ++t) count = count * Int(g + t) / Int(t + 1);
  if (count > limits().graded_generator_bound) {
    throw FactorialBlowup("power expansion exceeds the generator bound");
  }
  std::vector<Poly> out;
  std::vector<std::size_t> pick(e, 0);
  for (;;) {
    Poly p = Poly::constant(a.chart, Rat(1));
    for (std::size_t idx : pick) p = p * a.gens[idx];
    out.push_back(std::move(p));
    long j = static_cast<long>(e) - 1;
    while (j >= 0 && pick[j] == g - 1) --j;
    if (j < 0) break;
    std::size_t v = pick[j] + 1;
    for (std::size_t t = static_cast<std::size_t>(j); t < e; ++t) pick[t] = v;
  }
  return Ideal::make(a.chart, std::move(out));
}

std::vector<std::vector<unsigned>> minimal_weight_vectors(
    unsigned a, unsigned s, const std::vector<unsigned>& support) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(a, 0);
  std::vector<bool> allowed(a, false);
  for (unsigned j : support) {
    if (j < a) allowed[j] = true;
  }
  // DFS over levels with the exact remaining bound; a solution is minimal
  // when no positive entry can be decremented without dropping below s.
  // The traversal is budgeted: past the generator bound the expansion could
  // not be used anyway.
  long nodes = 0;
  const long node_budget = std::max(limits().graded_generator_bound, 1000L);
  std::function<void(unsigned, long)> rec = [&](unsigned j, long remaining) {
    if (++nodes > node_budget)
      throw FactorialBlowup("weight vector enumeration exceeds the budget");
    if (j == a) {
      if (remaining > 0) return;
      long total = 0;
      for (unsigned t = 0; t < a; ++t) total += static_cast<long>(a - t) * cur[t];
      for (unsigned t = 0; t < a; ++t) {
        if (cur[t] > 0 && total - static_cast<long>(a - t) >= static_cast<long>(s)) {
          return;
        }
      }
      out.push_back(cur);
      return;
    }
    long w = static_cast<long>(a - j);
    long cap = 0;
    if (allowed[j]) cap = remaining > 0 ? (remaining + w - 1) / w : 0;
    for (long c = 0; c <= cap; ++c) {
      cur[j] = static_cast<unsigned>(c);
      rec(j + 1, remaining - c * w);
      cur[j] = 0;
    }
  };
  rec(0, static_cast<long>(s));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Ideal graded_from_levels(const std::vector<Ideal>& levels, unsigned a,
                         unsigned s, const ChartPtr& chart) {
  std::vector<unsigned> support;
  for (unsigned j = 0; j < a; ++j) {
    if (j < levels.size() && !levels[j].is_zero()) support.push_back(j);
  }
  std::vector<Poly> gens;
  for (const auto& vec : minimal_weight_vectors(a, s, support)) {
    Ideal piece = Ideal::make(chart, {Poly::constant(chart, Rat(1))});
    for (unsigned j = 0; j < a; ++j) {
      for (unsigned c = 0; c < vec[j]; ++c) {
        piece = ideal_product(piece, levels[j]);
      }
    }
    gens.insert(gens.end(), piece.gens.begin(), piece.gens.end());
    if (static_cast<long>(gens.size()) > limits().graded_generator_bound) {
      throw FactorialBlowup("graded piece exceeds the generator bound");
    }
  }
  return Ideal::make(chart, std::move(gens));
}

}  // namespace

Ideal graded_piece(const Ideal& i, unsigned a, unsigned s) {
  if (!i.chart) throw DimensionMismatch("ideal without a chart");
  if (a == 0) throw DimensionMismatch("graded piece needs a positive order");
  std::vector<Ideal> levels = derivative_tower(i, a - 1);
  return graded_from_levels(levels, a, s, i.chart);
}

Ideal graded_piece_restricted(const Ideal& i, unsigned a, unsigned s,
                              long pivot_idx) {
  if (!i.chart) throw DimensionMismatch("ideal without a chart");
  if (a == 0) throw DimensionMismatch("graded piece needs a positive order");
  if (pivot_idx < 0 || pivot_idx >= i.chart->nvars()) {
    throw DimensionMismatch("pivot index out of range");
  }
  const std::string pivot = i.chart->ordinary[pivot_idx];
  std::vector<Ideal> levels = derivative_tower(i, a - 1);
  std::vector<Ideal> cut;
  ChartPtr target;
  for (const auto& lvl : levels) {
    Ideal r = restrict_hypersurface(lvl, pivot);
    if (!target) target = r.chart;
    // Restrictions share one target chart so the products can mix levels.
    if (cut.empty()) {
      cut.push_back(std::move(r));
    } else {
      std::vector<Poly> gens;
      for (const auto& g : r.gens) gens.push_back(embed_poly(g, target));
      cut.push_back(Ideal::make(target, std::move(gens)));
    }
  }
  return graded_from_levels(cut, a, s, target);
}

Ideal coefficient_ideal(const Ideal& i, unsigned a) {
  if (a > limits().literal_coeff_bound) {
    throw FactorialBlowup("coefficient ideal order exceeds the literal bound");
  }
  unsigned s = 1;
  for (unsigned t = 2; t <= a; ++t) s *= t;
  return graded_piece(i, a, s);
}

Ideal coefficient_ideal_restricted(const Ideal& i, unsigned a, long pivot_idx) {
  if (a > limits().literal_coeff_bound) {
    throw FactorialBlowup("coefficient ideal order exceeds the literal bound");
  }
  unsigned s = 1;
  for (unsigned t = 2; t <= a; ++t) s *= t;
  return graded_piece_restricted(i, a, s, pivot_idx);
}

WeightedFamily family_saturate(const WeightedFamily& f) {
  WeightedFamily out;
  std::set<std::string> seen;
  auto key_of = [](const Ideal& j, const Rat& w) {
    std::vector<std::string> parts;
    for (const auto& g : j.gens) parts.push_back(g.monic().str());
    std::sort(parts.begin(), parts.end());
    std::string key = rat_str(w) + "|";
    for (const auto& p : parts) key += p + ";";
    return key;
  };
  std::vector<std::pair<Ideal, Rat>> queue = f.entries;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Ideal j = queue[q].first;
    Rat w = queue[q].second;
    if (w <= 0) throw DimensionMismatch("family weights must be positive");
    if (j.is_zero()) continue;
    if (j.stalk_unit_at_origin()) continue;
    std::string key = key_of(j, w);
    if (!seen.insert(key).second) continue;
    out.entries.emplace_back(j, w);
    if (w - 1 > 0) queue.emplace_back(derivative_ideal(j, 1), w - 1);
  }
  return out;
}

}  // namespace logres
