#include "magma/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace magma {

Partition::Partition(int universe_size) : class_count_(universe_size) {
    if (universe_size < 0)
        throw std::invalid_argument("universe size must be non-negative");
    rep_.resize(universe_size);
    std::iota(rep_.begin(), rep_.end(), 0);
}

Partition Partition::from_classes(int universe_size,
                                  const std::vector<std::vector<int>>& classes) {
    Partition p(universe_size);
    std::vector<char> seen(universe_size, 0);
    int covered = 0;
    for (const auto& cls : classes) {
        if (cls.empty())
            throw std::invalid_argument("partition classes must be non-empty");
        int least = *std::min_element(cls.begin(), cls.end());
        for (int x : cls) {
            if (x < 0 || x >= universe_size)
                throw std::invalid_argument("class element out of universe");
            if (seen[x])
                throw std::invalid_argument("element in two classes");
            seen[x] = 1;
            ++covered;
            p.rep_[x] = least;
        }
    }
    if (covered != universe_size)
        throw std::invalid_argument("classes do not cover the universe");
    p.class_count_ = static_cast<int>(classes.size());
    return p;
}

std::vector<std::vector<int>> Partition::classes() const {
    const int n = universe_size();
    // Representatives are least elements, so scanning ascending emits
    // classes ordered by least element with sorted members.
    std::vector<int> slot(n, -1);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < n; ++x) {
        int r = rep_[x];
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[r]].push_back(x);
    }
    return out;
}

std::vector<int> Partition::class_of(int x) const {
    std::vector<int> out;
    for (int y = 0; y < universe_size(); ++y)
        if (rep_[y] == rep_[x])
            out.push_back(y);
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    if (universe_size() != coarser.universe_size())
        throw std::invalid_argument("partitions over different universes");
    for (int x = 0; x < universe_size(); ++x)
        if (!coarser.same_class(x, rep_[x]))
            return false;
    return true;
}

UnionFind::UnionFind(int n) : parent_(n), size_(n, 1), set_count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
    int root = x;
    while (parent_[root] != root)
        root = parent_[root];
    while (parent_[x] != root) {
        int next = parent_[x];
        parent_[x] = root;
        x = next;
    }
    return root;
}

bool UnionFind::unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry)
        return false;
    if (size_[rx] < size_[ry])
        std::swap(rx, ry);
    parent_[ry] = rx;
    size_[rx] += size_[ry];
    --set_count_;
    return true;
}

Partition UnionFind::to_partition() {
    const int n = static_cast<int>(parent_.size());
    Partition p;
    p.rep_.assign(n, -1);
    // Ascending scan makes the first element seen in each set its least.
    for (int x = 0; x < n; ++x) {
        int r = find(x);
        if (p.rep_[r] < 0)
            p.rep_[r] = x;
        p.rep_[x] = p.rep_[r];
    }
    p.class_count_ = set_count_;
    return p;
}

}  // namespace magma
