#ifndef PGONAL_WEIGHTED_HPP
#define PGONAL_WEIGHTED_HPP

#include <algorithm>
#include <map>
#include <set>

#include "projective.hpp"

namespace pgonal {

// Weighted point set on the projective line: pairwise distinct points with
// weights in 1..p-1, stored sorted by the canonical point order.
class WeightedPointSet {
  public:
    WeightedPointSet(int prime, std::vector<std::pair<ProjPoint, int>> entries)
        : p_(prime), entries_(std::move(entries)) {
        require(p_ >= 2, "prime must be at least 2");
        for (auto& [pt, w] : entries_)
            require(w >= 1 && w <= p_ - 1, "weight out of range");
        std::sort(entries_.begin(), entries_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
            require(entries_[i].first != entries_[i + 1].first, "points must be pairwise distinct");
    }

    int prime() const { return p_; }
    std::size_t size() const { return entries_.size(); }
    const std::vector<std::pair<ProjPoint, int>>& entries() const { return entries_; }
    const FieldPtr& field() const {
        require(!entries_.empty(), "empty point set has no field");
        return entries_[0].first.field();
    }

    std::multiset<int> weight_multiset() const {
        std::multiset<int> m;
        for (const auto& [pt, w] : entries_) m.insert(w);
        return m;
    }

    // Weight of the given point, or 0 when absent.
    int weight_of(const ProjPoint& pt) const {
        auto it = std::lower_bound(
            entries_.begin(), entries_.end(), pt,
            [](const auto& e, const ProjPoint& q) { return e.first < q; });
        if (it == entries_.end() || it->first != pt) return 0;
        return it->second;
    }

    bool operator==(const WeightedPointSet& o) const {
        return p_ == o.p_ && entries_ == o.entries_;
    }

  private:
    int p_;
    std::vector<std::pair<ProjPoint, int>> entries_;
};

inline WeightedPointSet conjugate_set(int sigma, const WeightedPointSet& s) {
    std::vector<std::pair<ProjPoint, int>> e;
    e.reserve(s.size());
    for (const auto& [pt, w] : s.entries()) e.emplace_back(conjugate_point(sigma, pt), w);
    return WeightedPointSet(s.prime(), std::move(e));
}

// Image of the set under g, with every weight multiplied by the unit t.
inline WeightedPointSet transport_set(const Mobius& g, const WeightedPointSet& s, int t = 1) {
    std::vector<std::pair<ProjPoint, int>> e;
    e.reserve(s.size());
    for (const auto& [pt, w] : s.entries()) {
        int nw = static_cast<int>((static_cast<long long>(w) * t) % s.prime());
        require(nw != 0, "weight transport left the unit range");
        e.emplace_back(g.apply(pt), nw);
    }
    return WeightedPointSet(s.prime(), std::move(e));
}

// All Moebius maps g with g(A) = B where a point of weight w lands on a
// point of weight t*w mod p.  Returns the empty list when the weight
// multisets rule every candidate out.  Requires |A| = |B| >= 3.
inline std::vector<Mobius> match_with_unit(const WeightedPointSet& A, const WeightedPointSet& B,
                                           int t) {
    require(A.prime() == B.prime(), "matching needs a common prime");
    if (A.size() != B.size()) return {};
    require(A.size() >= 3, "matching needs at least three points");
    const int p = A.prime();
    auto tw = [&](int w) { return static_cast<int>((static_cast<long long>(w) * t) % p); };
    {
        std::multiset<int> wa, wb = B.weight_multiset();
        for (const auto& [pt, w] : A.entries()) wa.insert(tw(w));
        if (wa != wb) return {};
    }
    // fixed source triple: the first three points in canonical order
    std::array<ProjPoint, 3> src{A.entries()[0].first, A.entries()[1].first,
                                 A.entries()[2].first};
    std::array<int, 3> src_w{tw(A.entries()[0].second), tw(A.entries()[1].second),
                             tw(A.entries()[2].second)};
    std::size_t n = B.size();
    std::set<Mobius> found;
    for (std::size_t i = 0; i < n; ++i) {
        if (B.entries()[i].second != src_w[0]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || B.entries()[j].second != src_w[1]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j || B.entries()[k].second != src_w[2]) continue;
                std::array<ProjPoint, 3> dst{B.entries()[i].first, B.entries()[j].first,
                                             B.entries()[k].first};
                Mobius g = mobius_through_triples(src, dst);
                bool ok = true;
                for (const auto& [pt, w] : A.entries()) {
                    if (B.weight_of(g.apply(pt)) != tw(w)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) found.insert(g);
            }
        }
    }
    return {found.begin(), found.end()};
}

// Weight-preserving matching; size or weight-multiset mismatches violate the
// contract and are rejected, unlike a legal empty match list.
inline std::vector<Mobius> match_weighted_sets(const WeightedPointSet& A,
                                               const WeightedPointSet& B) {
    require(A.size() == B.size(), "matching contract: sets must have equal size");
    require(A.size() >= 3, "matching contract: need at least three points");
    require(A.weight_multiset() == B.weight_multiset(),
            "matching contract: weight multisets must agree");
    return match_with_unit(A, B, 1);
}

}  // namespace pgonal

#endif
