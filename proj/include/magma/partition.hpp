#pragma once

/// Partitions of {0, ..., m-1} and the union-find builder used to
/// construct them.

#include <vector>

namespace magma {

/// An immutable partition in canonical form: every element maps to the
/// least element of its class, so equality is plain vector comparison.
class Partition {
  public:
    /// The discrete partition (every element alone).
    explicit Partition(int universe_size);

    /// Builds from explicit classes; they must cover the universe exactly
    /// once. Throws std::invalid_argument otherwise.
    static Partition from_classes(int universe_size,
                                  const std::vector<std::vector<int>>& classes);

    int universe_size() const noexcept {
        return static_cast<int>(rep_.size());
    }
    /// Least element of x's class.
    int representative(int x) const { return rep_[x]; }
    bool same_class(int x, int y) const { return rep_[x] == rep_[y]; }
    int class_count() const noexcept { return class_count_; }
    bool is_discrete() const noexcept {
        return class_count_ == universe_size();
    }

    /// Classes as sorted element lists, ordered by least element.
    std::vector<std::vector<int>> classes() const;
    std::vector<int> class_of(int x) const;

    /// True when every class of this partition lies inside a class of
    /// `coarser`.
    bool refines(const Partition& coarser) const;

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    friend class UnionFind;
    Partition() = default;

    std::vector<int> rep_;
    int class_count_ = 0;
};

/// Mutable disjoint-set structure; normalize with to_partition() when done.
class UnionFind {
  public:
    explicit UnionFind(int n);

    int find(int x);
    /// Joins the classes of x and y; returns true when they were distinct.
    bool unite(int x, int y);
    bool same(int x, int y) { return find(x) == find(y); }
    int set_count() const noexcept { return set_count_; }

    Partition to_partition();

  private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int set_count_;
};

}  // namespace magma
