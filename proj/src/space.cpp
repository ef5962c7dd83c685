#include "ordwalk/space.hpp"

#include <algorithm>
#include <string>

namespace ordwalk {
namespace {

void require_limit(const Ordinal& a, const char* op) {
  if (!a.is_limit()) throw DomainError(std::string(op) + ": " + format(a) + " is not a limit");
}

}  // namespace

BasicOpen::BasicOpen(Ordinal anchor, Natural level) : anchor_(std::move(anchor)), level_(level) {
  require_limit(anchor_, "basic open");
}

void NeighborhoodDescriptor::add(const Ordinal& anchor, Natural level) {
  require_limit(anchor, "descriptor");
  if (!entries_.emplace(anchor, level).second) {
    throw DomainError("descriptor: repeated anchor " + format(anchor));
  }
}

bool member(const Point& p, const BasicOpen& u) {
  const auto* xi = std::get_if<Ordinal>(&p);
  if (!xi) return true;
  if (*xi >= u.anchor()) return true;
  return rho2(*xi, u.anchor()) > u.level();
}

bool member(const Point& p, const NeighborhoodDescriptor& d) {
  const auto* xi = std::get_if<Ordinal>(&p);
  if (!xi) return true;
  for (auto it = d.entries().upper_bound(*xi); it != d.entries().end(); ++it) {
    if (rho2(*xi, it->first) > it->second) return true;
  }
  return false;
}

std::vector<Ordinal> frechet_extract(const std::set<Ordinal>& a, const Ordinal& alpha,
                                     Natural m) {
  require_limit(alpha, "frechet-extract");
  std::vector<std::pair<Ordinal, Natural>> pool;
  for (auto it = a.begin(); it != a.end() && *it < alpha; ++it) {
    pool.emplace_back(*it, rho2(*it, alpha));
  }
  if (pool.empty()) return {};
  // Index n accepts points with rho2 >= n. These sets shrink as n grows, so
  // indices lo..k can be filled iff at least k-j+1 points reach j for each j.
  const Natural top = std::min<Natural>(m, pool.size() - 1);
  std::vector<std::size_t> reach(top + 2, 0);
  for (const auto& entry : pool) ++reach[std::min<Natural>(entry.second, top + 1)];
  for (Natural j = top + 1; j-- > 0;) reach[j] += reach[j + 1];
  const auto fillable = [&](Natural lo, Natural k) {
    for (Natural j = lo; j <= k; ++j) {
      if (reach[j] < k - j + 1) return false;
    }
    return true;
  };
  Natural k = top;
  while (!fillable(0, k)) --k;

  std::vector<bool> used(pool.size(), false);
  std::vector<Ordinal> out;
  for (Natural n = 0; n <= k; ++n) {
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (used[p] || pool[p].second < n) continue;
      const Natural r = std::min<Natural>(pool[p].second, top + 1);
      for (Natural j = 0; j <= r; ++j) --reach[j];
      if (fillable(n + 1, k)) {
        used[p] = true;
        out.push_back(pool[p].first);
        break;
      }
      for (Natural j = 0; j <= r; ++j) ++reach[j];
    }
  }
  return out;
}

std::set<Ordinal> alpha1_merge(const std::vector<std::set<Ordinal>>& families,
                               const Ordinal& alpha) {
  require_limit(alpha, "alpha1-merge");
  std::set<Ordinal> merged;
  for (std::size_t n = 0; n < families.size(); ++n) {
    for (const Ordinal& xi : families[n]) {
      if (xi >= alpha) {
        throw DomainError("alpha1-merge: member " + format(xi) + " not below " + format(alpha));
      }
      if (rho2(xi, alpha) > n) merged.insert(xi);
    }
  }
  return merged;
}

Separation gdelta_separate(const std::set<Ordinal>& b) {
  if (b.empty()) throw DomainError("gdelta-separate: B must be nonempty");
  const auto [mu, finite] = split_finite(*b.rbegin());
  Separation s{GdeltaScheme{mu + Ordinal::omega()}, {}};
  for (const Ordinal& xi : b) s.certificate.emplace(xi, rho2(xi, s.scheme.beta));
  return s;
}

ConvergenceReport convergence_report(const std::vector<Ordinal>& sequence,
                                     const std::vector<Ordinal>& anchors) {
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    if (!(sequence[i - 1] < sequence[i])) {
      throw DomainError("convergence-report: sequence must be strictly increasing");
    }
  }
  ConvergenceReport report{sequence, {}, 0};
  for (const Ordinal& anchor : anchors) {
    require_limit(anchor, "convergence-report");
    AnchorHistogram h{anchor, {}};
    for (const Ordinal& xi : sequence) {
      if (xi < anchor) {
        const std::size_t count = ++h.histogram[rho2(xi, anchor)];
        report.max_fiber = std::max(report.max_fiber, count);
      }
    }
    report.anchors.push_back(std::move(h));
  }
  return report;
}

}  // namespace ordwalk
