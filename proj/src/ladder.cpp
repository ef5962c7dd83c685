#include "ordwalk/ladder.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "ordwalk/csequence.hpp"

namespace ordwalk {
namespace {

void require_limit(const Ordinal& a, const char* op) {
  if (!a.is_limit()) throw DomainError(std::string(op) + ": " + format(a) + " is not a limit");
}

// gamma = delta + w with delta possibly 0.
bool is_delta_plus_omega(const Ordinal& gamma) {
  return gamma.is_limit() && gamma.last_term().exponent == Ordinal::natural(1);
}

Ordinal strip_omega(const Ordinal& gamma) {
  const auto t = gamma.terms();
  std::vector<Term> head(t.begin(), t.end());
  if (--head.back().coefficient == 0) head.pop_back();
  return Ordinal::from_terms(std::move(head));
}

enum class StageKind { finite, successor_of_limit, successor, delta_omega, club };

struct Stage {
  StageKind kind;
  Ordinal next;  // predecessor, delta + 1, or unused for club stages
  std::shared_ptr<const ClubSequence> club;
};

Stage classify(const Ordinal& gamma) {
  if (gamma <= Ordinal::omega()) return {StageKind::finite, {}, nullptr};
  if (gamma.is_successor()) {
    Ordinal b = predecessor(gamma);
    const StageKind kind = b.is_limit() ? StageKind::successor_of_limit : StageKind::successor;
    return {kind, std::move(b), nullptr};
  }
  if (is_delta_plus_omega(gamma)) {
    return {StageKind::delta_omega, successor(strip_omega(gamma)), nullptr};
  }
  return {StageKind::club, {}, std::make_shared<const ClubSequence>(gamma)};
}

}  // namespace

Ordinal ladder(const Ordinal& alpha, Natural i) {
  require_limit(alpha, "ladder");
  return fund_seq(alpha, i);
}

Natural enum_index(const Ordinal& alpha, const Ordinal& xi) {
  require_limit(alpha, "enum-index");
  if (!(xi < alpha)) throw DomainError("enum-index: xi must lie below alpha");
  const Natural i = min_above_index(alpha, xi);
  return fund_seq(alpha, i) == xi ? i : 0;
}

Natural pair(Natural a, Natural b) {
  const unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
  const unsigned __int128 z = s * (s + 1) / 2 + b;
  if (z > ~Natural{0}) throw OverflowError("pair: value exceeds 64 bits");
  return static_cast<Natural>(z);
}

std::pair<Natural, Natural> unpair(Natural z) {
  // Largest w with w(w+1)/2 <= z.
  using u128 = unsigned __int128;
  Natural lo = 0, hi = Natural{1} << 33;
  while (lo < hi) {
    const Natural mid = lo + (hi - lo + 1) / 2;
    if (static_cast<u128>(mid) * (mid + 1) / 2 <= z) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const Natural b = z - static_cast<Natural>(static_cast<u128>(lo) * (lo + 1) / 2);
  return {lo - b, b};
}

ClubSequence::ClubSequence(Ordinal gamma) : gamma_(std::move(gamma)) {
  require_limit(gamma_, "club-of");
  if (is_delta_plus_omega(gamma_)) {
    throw DomainError("club-of: " + format(gamma_) + " has the form delta + w");
  }
}

Ordinal ClubSequence::at(Natural k) const { return fund_seq(gamma_, k); }

Natural ClubSequence::index_above(const Ordinal& xi) const {
  return min_above_index(gamma_, successor(xi));
}

Natural Uniformizer::operator()(const Ordinal& xi) const {
  if (!(xi < club_.gamma())) throw DomainError("uniformize: xi must lie below gamma");
  // Every S_E[k] with k > k0 starts at or above E[k0] > xi, and S_E[k] lies
  // below E[k] <= xi for k < k0, so only k0 can carry xi.
  const Natural k0 = club_.index_above(xi);
  if (k0 >= depth_) return 0;
  const Ordinal top = club_.at(k0);
  const Natural i = min_above_index(top, xi);
  if (fund_seq(top, i) != xi) return 0;
  return pair(k0, i);
}

struct Coloring::Memo {
  std::size_t limit;
  mutable std::mutex mutex;
  std::map<Ordinal, std::shared_ptr<const Stage>> stages;

  std::shared_ptr<const Stage> lookup(const Ordinal& gamma) {
    {
      std::lock_guard lock(mutex);
      if (auto it = stages.find(gamma); it != stages.end()) return it->second;
    }
    auto stage = std::make_shared<const Stage>(classify(gamma));
    std::lock_guard lock(mutex);
    if (stages.size() >= limit) {
      throw ResourceError("coloring: more than " + std::to_string(limit) + " stages");
    }
    return stages.emplace(gamma, std::move(stage)).first->second;
  }
};

Coloring::Coloring(Ordinal gamma, std::size_t stage_limit)
    : gamma_(std::move(gamma)), memo_(std::make_shared<Memo>()) {
  if (gamma_.is_zero()) throw DomainError("build-coloring: gamma must be positive");
  memo_->limit = stage_limit;
  memo_->lookup(gamma_);
}

std::size_t Coloring::stage_count() const {
  std::lock_guard lock(memo_->mutex);
  return memo_->stages.size();
}

Natural Coloring::evaluate(const Ordinal& xi) const {
  if (!(xi < gamma_)) {
    throw DomainError("coloring: " + format(xi) + " is outside the domain " + format(gamma_));
  }
  // Second coordinates of the pairings, outermost first.
  std::vector<Natural> seconds;
  Ordinal current = gamma_;
  Natural value = 0;
  for (;;) {
    const auto stage = memo_->lookup(current);
    if (stage->kind == StageKind::finite) {
      value = *xi.as_natural();
      break;
    }
    if (stage->kind == StageKind::club) {
      const Natural k = stage->club->index_above(xi);
      seconds.push_back(Uniformizer(*stage->club, Uniformizer::kUnbounded)(xi));
      current = stage->club->at(k);
      continue;
    }
    if (stage->kind == StageKind::delta_omega) {
      if (xi >= stage->next) break;
      current = stage->next;
      continue;
    }
    // Successor stages: the new top point gets 0.
    if (xi == stage->next) break;
    if (stage->kind == StageKind::successor_of_limit) {
      seconds.push_back(enum_index(stage->next, xi));
    }
    current = stage->next;
  }
  for (auto it = seconds.rbegin(); it != seconds.rend(); ++it) value = pair(value, *it);
  return value;
}

Natural Coloring::bound(const Ordinal& alpha) const {
  require_limit(alpha, "certificate");
  if (!(alpha < gamma_)) throw DomainError("certificate: ladder is outside the domain");
  Natural extra = 0;
  Ordinal current = gamma_;
  for (;;) {
    const auto stage = memo_->lookup(current);
    switch (stage->kind) {
      case StageKind::finite:
        throw DomainError("certificate: no limit lies below w");
      case StageKind::successor_of_limit:
        if (alpha == stage->next) return checked_add(extra, 1);
        current = stage->next;
        break;
      case StageKind::successor:
      case StageKind::delta_omega:
        current = stage->next;
        break;
      case StageKind::club: {
        const ClubSequence& club = *stage->club;
        const Natural j = min_above_index(club.gamma(), alpha);
        if (club.at(j) == alpha) return checked_add(extra, 1);
        // Ladder points below E[j-1] are colored through earlier club
        // elements; the rest go through E[j].
        if (j > 0) extra = checked_add(extra, min_above_index(alpha, club.at(j - 1)));
        current = club.at(j);
        break;
      }
    }
  }
}

std::map<Natural, std::size_t> fiber_report(const Coloring& coloring, const Ordinal& alpha,
                                            Natural prefix) {
  require_limit(alpha, "fiber-report");
  if (!(alpha < coloring.gamma())) throw DomainError("fiber-report: alpha must lie below gamma");
  std::map<Natural, std::size_t> histogram;
  if (prefix == 0) return histogram;
  const Natural b = coloring.bound(alpha);
  for (Natural i = 0; i < prefix; ++i) {
    const std::size_t count = ++histogram[coloring.evaluate(ladder(alpha, i))];
    if (count > b) {
      throw CertificateViolation("fiber over " + format(alpha) + " exceeds certificate bound " +
                                 std::to_string(b));
    }
  }
  return histogram;
}

}  // namespace ordwalk
