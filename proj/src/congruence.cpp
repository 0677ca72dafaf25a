#include "magma/congruence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace magma {

Partition generated_congruence(const CayleyTable& t,
                               const std::vector<std::pair<Elem, Elem>>& pairs) {
    for (auto [a, b] : pairs)
        if (a < 0 || a >= t.order() || b < 0 || b >= t.order())
            throw std::invalid_argument("generator pair out of range");
    return detail::congruence_closure(
        t.order(), [&t](int x, int y) { return t.at(x, y); }, pairs);
}

std::optional<CongruenceViolation> congruence_violation(const CayleyTable& t,
                                                        const Partition& p) {
    if (p.universe_size() != t.order())
        throw std::invalid_argument("partition universe does not match table");
    const int n = t.order();
    // x ~ x2 and y ~ y2 implies x*y ~ x2*y ~ x2*y2, so checking one side
    // at a time against an equal partner suffices.
    for (Elem x = 0; x < n; ++x)
        for (Elem x2 = x + 1; x2 < n; ++x2) {
            if (!p.same_class(x, x2))
                continue;
            for (Elem y = 0; y < n; ++y) {
                if (!p.same_class(t.at(x, y), t.at(x2, y)))
                    return CongruenceViolation{x, x2, y, y};
                if (!p.same_class(t.at(y, x), t.at(y, x2)))
                    return CongruenceViolation{y, y, x, x2};
            }
        }
    return std::nullopt;
}

bool is_congruence(const CayleyTable& t, const Partition& p) {
    return !congruence_violation(t, p).has_value();
}

std::vector<Elem> subuniverse_closure(const CayleyTable& t,
                                      const std::vector<Elem>& seed) {
    const int n = t.order();
    std::vector<char> in(n, 0);
    std::vector<Elem> members;
    std::vector<Elem> work;
    auto add = [&](Elem x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
            work.push_back(x);
        }
    };
    for (Elem x : seed) {
        if (x < 0 || x >= n)
            throw std::invalid_argument("seed element out of range");
        add(x);
    }
    while (!work.empty()) {
        Elem x = work.back();
        work.pop_back();
        // `members` can grow while iterating; index loop stays valid.
        for (std::size_t i = 0; i < members.size(); ++i) {
            add(t.at(x, members[i]));
            add(t.at(members[i], x));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

namespace {

std::uint64_t close_mask(const CayleyTable& t, std::uint64_t m) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < t.order(); ++x) {
            if (!(m >> x & 1))
                continue;
            for (int y = 0; y < t.order(); ++y) {
                if (!(m >> y & 1))
                    continue;
                std::uint64_t bit = std::uint64_t{1} << t.at(x, y);
                if (!(m & bit)) {
                    m |= bit;
                    changed = true;
                }
            }
        }
    }
    return m;
}

}  // namespace

SubuniverseFamily all_subuniverses(const CayleyTable& t,
                                   const SubuniverseCaps& caps) {
    SubuniverseFamily fam;
    const int n = t.order();
    if (n > caps.max_order || n > 64) {
        fam.complete = false;
        return fam;
    }
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> queue;
    auto add = [&](std::uint64_t m) {
        if (seen.insert(m).second)
            queue.push_back(m);
    };
    for (int x = 0; x < n; ++x)
        add(close_mask(t, std::uint64_t{1} << x));
    for (std::size_t i = 0; i < queue.size(); ++i) {
        if (seen.size() > caps.max_sets) {
            fam.complete = false;
            break;
        }
        std::uint64_t m = queue[i];
        for (int x = 0; x < n; ++x)
            if (!(m >> x & 1))
                add(close_mask(t, m | std::uint64_t{1} << x));
    }
    fam.sets.reserve(seen.size());
    for (std::uint64_t m : seen) {
        std::vector<Elem> s;
        for (int x = 0; x < n; ++x)
            if (m >> x & 1)
                s.push_back(x);
        fam.sets.push_back(std::move(s));
    }
    std::sort(fam.sets.begin(), fam.sets.end(),
              [](const std::vector<Elem>& a, const std::vector<Elem>& b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a < b;
              });
    return fam;
}

bool is_block_of_some_congruence(const CayleyTable& t,
                                 const std::vector<Elem>& block) {
    if (block.empty())
        throw std::invalid_argument("block must be non-empty");
    if (subuniverse_closure(t, block) != [&] {
            auto s = block;
            std::sort(s.begin(), s.end());
            return s;
        }())
        throw std::invalid_argument("block must be a closed subset");
    // Collapsing block x block is the least congruence with the block
    // inside one class; the block is a block of *some* congruence exactly
    // when that class adds nothing else.
    std::vector<std::pair<Elem, Elem>> pairs;
    for (std::size_t i = 1; i < block.size(); ++i)
        pairs.emplace_back(block[0], block[i]);
    Partition p = generated_congruence(t, pairs);
    std::vector<Elem> cls = p.class_of(block[0]);
    std::vector<Elem> sorted_block = block;
    std::sort(sorted_block.begin(), sorted_block.end());
    return cls == sorted_block;
}

}  // namespace magma
