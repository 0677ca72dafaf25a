#include "magma/oracles.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace magma {

namespace {

void require_associative(const CayleyTable& t, const char* who) {
    if (!is_associative(t))
        throw std::invalid_argument(std::string(who) +
                                    ": operation must be associative");
}

}  // namespace

Truth abelian_oracle(const CayleyTable& t, long max_square) {
    const int n = t.order();
    if (static_cast<long>(n) * n > max_square)
        return Truth::undetermined;
    const int m = n * n;  // pairs (p, q) encoded as p * n + q
    auto mul = [&t, n](int a, int b) {
        return t.at(a / n, b / n) * n + t.at(a % n, b % n);
    };
    std::vector<std::pair<int, int>> seed;
    seed.reserve(n - 1);
    for (int b = 1; b < n; ++b)
        seed.emplace_back(0, b * n + b);  // (0,0) ~ (b,b)
    Partition cong = detail::congruence_closure(m, mul, seed);
    for (int p = 0; p < m; ++p)
        if (cong.same_class(p, 0) != (p / n == p % n))
            return Truth::no;
    return Truth::yes;
}

// --- polynomial terms ------------------------------------------------------

PolynomialTerm PolynomialTerm::variable() {
    PolynomialTerm t;
    t.nodes_.push_back({0, -1, -1});
    t.root_ = 0;
    t.height_ = 1;
    t.uses_x_ = true;
    return t;
}

PolynomialTerm PolynomialTerm::parameter(int k) {
    if (k < 1)
        throw std::invalid_argument("parameter index must be >= 1");
    PolynomialTerm t;
    t.nodes_.push_back({k, -1, -1});
    t.root_ = 0;
    t.height_ = 1;
    t.params_ = k;
    return t;
}

PolynomialTerm PolynomialTerm::product(const PolynomialTerm& l,
                                       const PolynomialTerm& r) {
    PolynomialTerm t;
    t.nodes_ = l.nodes_;
    const int shift = static_cast<int>(t.nodes_.size());
    for (Node node : r.nodes_) {
        if (node.var < 0) {
            node.left += shift;
            node.right += shift;
        }
        t.nodes_.push_back(node);
    }
    t.nodes_.push_back({-1, l.root_, r.root_ + shift});
    t.root_ = static_cast<int>(t.nodes_.size()) - 1;
    t.params_ = std::max(l.params_, r.params_);
    t.height_ = std::max(l.height_, r.height_) + 1;
    t.uses_x_ = l.uses_x_ || r.uses_x_;
    return t;
}

Elem PolynomialTerm::eval(const CayleyTable& t, Elem x,
                          std::span<const Elem> ys) const {
    // Terms are tiny; plain recursion over an explicit lambda suffices.
    auto rec = [&](auto&& self, int idx) -> Elem {
        const Node& node = nodes_[idx];
        if (node.var == 0)
            return x;
        if (node.var > 0)
            return ys[node.var - 1];
        return t.at(self(self, node.left), self(self, node.right));
    };
    return rec(rec, root_);
}

std::string PolynomialTerm::to_string() const {
    auto rec = [&](auto&& self, int idx) -> std::string {
        const Node& node = nodes_[idx];
        if (node.var == 0)
            return "x";
        if (node.var > 0)
            return "y" + std::to_string(node.var);
        return "(* " + self(self, node.left) + " " + self(self, node.right) + ")";
    };
    return rec(rec, root_);
}

bool TCWitness::verify(const CayleyTable& t) const {
    Elem uc = term.eval(t, u, c), ud = term.eval(t, u, d);
    Elem vc = term.eval(t, v, c), vd = term.eval(t, v, d);
    return uc == t_u_c && ud == t_u_d && vc == t_v_c && vd == t_v_d &&
           uc == ud && vc != vd;
}

namespace {

/// All term trees up to the given height whose leaves are labeled with x
/// or y1..y_max_params. Parameter names are canonical: reading leaves left
/// to right, y_k appears only after y_(k-1) has appeared.
std::vector<PolynomialTerm> enumerate_terms(int max_height, int max_params) {
    // shapes[h] = trees of height exactly h, as (leaf-labeled) terms built
    // over a running "fresh parameter" budget. We enumerate shapes and
    // labelings together, tracking how many parameters are already in use.
    // State: a term plus the count of parameters used so far cannot be
    // composed after the fact, so enumerate trees recursively by height
    // with an explicit "used" counter threaded through.
    struct Shape {
        std::vector<int> kind;  // preorder; kind 0 = leaf, 1 = internal
    };
    // Enumerate skeletons of height <= max_height.
    std::vector<std::vector<Shape>> by_height(max_height + 1);
    by_height[1].push_back(Shape{{0}});
    for (int h = 2; h <= max_height; ++h) {
        for (int lh = 1; lh < h; ++lh)
            for (int rh = 1; rh < h; ++rh) {
                if (std::max(lh, rh) != h - 1)
                    continue;
                for (const Shape& l : by_height[lh])
                    for (const Shape& r : by_height[rh]) {
                        Shape s;
                        s.kind.push_back(1);
                        s.kind.insert(s.kind.end(), l.kind.begin(), l.kind.end());
                        s.kind.insert(s.kind.end(), r.kind.begin(), r.kind.end());
                        by_height[h].push_back(std::move(s));
                    }
            }
    }
    // Label leaves left to right with canonical parameter introduction.
    std::vector<PolynomialTerm> out;
    for (int h = 1; h <= max_height; ++h) {
        for (const Shape& s : by_height[h]) {
            const int leaves = static_cast<int>(
                std::count(s.kind.begin(), s.kind.end(), 0));
            std::vector<int> label(leaves);  // 0 = x, k = y_k
            auto emit = [&]() {
                // Build the term from the skeleton + labels.
                int pos = 0, leaf = 0;
                auto rec = [&](auto&& self) -> PolynomialTerm {
                    int k = s.kind[pos++];
                    if (k == 0) {
                        int lab = label[leaf++];
                        return lab == 0 ? PolynomialTerm::variable()
                                        : PolynomialTerm::parameter(lab);
                    }
                    PolynomialTerm l = self(self);
                    PolynomialTerm r = self(self);
                    return PolynomialTerm::product(l, r);
                };
                out.push_back(rec(rec));
            };
            auto assign = [&](auto&& self, int i, int used, bool has_x) -> void {
                if (i == leaves) {
                    if (has_x)
                        emit();
                    return;
                }
                label[i] = 0;
                self(self, i + 1, used, true);
                for (int k = 1; k <= std::min(used + 1, max_params); ++k) {
                    label[i] = k;
                    self(self, i + 1, std::max(used, k), has_x);
                }
            };
            assign(assign, 0, 0, false);
        }
    }
    return out;
}

/// Looks for a violation of the term condition for one term over one pair
/// of parameter tuples: some u with equal values, some v with different.
std::optional<TCWitness> check_tuple(const CayleyTable& t,
                                     const PolynomialTerm& term,
                                     const std::vector<Elem>& c,
                                     const std::vector<Elem>& d,
                                     std::vector<Elem>& fc,
                                     std::vector<Elem>& fd) {
    const int n = t.order();
    for (Elem w = 0; w < n; ++w) {
        fc[w] = term.eval(t, w, c);
        fd[w] = term.eval(t, w, d);
    }
    Elem u = -1, v = -1;
    for (Elem w = 0; w < n; ++w) {
        if (fc[w] == fd[w]) {
            if (u < 0)
                u = w;
        } else if (v < 0) {
            v = w;
        }
        if (u >= 0 && v >= 0) {
            TCWitness wit{term, u, v, c, d, fc[u], fd[u], fc[v], fd[v]};
            if (!wit.verify(t))
                throw std::logic_error("term witness failed verification");
            return wit;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<TCWitness> tc_violation_search(const CayleyTable& t,
                                             const TCSearchOptions& opts) {
    const int n = t.order();
    std::vector<PolynomialTerm> terms =
        enumerate_terms(opts.max_height, opts.max_params);
    std::vector<Elem> fc(n), fd(n);
    std::uint64_t term_index = 0;
    for (const PolynomialTerm& term : terms) {
        ++term_index;
        const int k = term.param_count();
        if (k == 0)
            continue;  // no parameters: t(u,..)=t(u,..) never splits
        // Full scan when the tuple space is affordable, else seeded draws.
        double tuples = 1;
        for (int i = 0; i < 2 * k; ++i)
            tuples *= n;
        if (tuples * n <= static_cast<double>(opts.exhaustive_budget)) {
            std::vector<Elem> c(k, 0), d(k, 0);
            auto advance = [&](std::vector<Elem>& v) {
                int i = k - 1;
                while (i >= 0 && v[i] == n - 1)
                    v[i--] = 0;
                if (i < 0)
                    return false;
                ++v[i];
                return true;
            };
            do {
                d = c;
                while (advance(d)) {  // only c < d lexicographically
                    if (auto w = check_tuple(t, term, c, d, fc, fd))
                        return w;
                }
            } while (advance(c));
        } else {
            std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + term_index);
            std::uniform_int_distribution<int> pick(0, n - 1);
            std::vector<Elem> c(k), d(k);
            for (int s = 0; s < opts.samples; ++s) {
                for (int i = 0; i < k; ++i) {
                    c[i] = pick(rng);
                    d[i] = pick(rng);
                }
                if (c == d)
                    continue;
                if (auto w = check_tuple(t, term, c, d, fc, fd))
                    return w;
            }
        }
    }
    return std::nullopt;
}

HamiltonianResult hamiltonian_oracle(const CayleyTable& t,
                                     const SubuniverseCaps& caps) {
    SubuniverseFamily fam = all_subuniverses(t, caps);
    for (const std::vector<Elem>& sub : fam.sets)
        if (!is_block_of_some_congruence(t, sub))
            return {Truth::no, sub};
    if (!fam.complete)
        return {Truth::undetermined, std::nullopt};
    return {Truth::yes, std::nullopt};
}

std::optional<StationarityWitness> stationarity_witness(const CayleyTable& t) {
    require_associative(t, "stationarity_witness");
    const int n = t.order();
    for (Elem b = 0; b < n; ++b)
        for (Elem c = b + 1; c < n; ++c) {
            Elem left_eq = -1, left_ne = -1, right_eq = -1, right_ne = -1;
            for (Elem w = 0; w < n; ++w) {
                if (t.at(w, b) == t.at(w, c)) {
                    if (left_eq < 0)
                        left_eq = w;
                } else if (left_ne < 0) {
                    left_ne = w;
                }
                if (t.at(b, w) == t.at(c, w)) {
                    if (right_eq < 0)
                        right_eq = w;
                } else if (right_ne < 0) {
                    right_ne = w;
                }
            }
            if (left_eq >= 0 && left_ne >= 0)
                return StationarityWitness{StationarityWitness::Side::left,
                                           left_eq, left_ne, b, c};
            if (right_eq >= 0 && right_ne >= 0)
                return StationarityWitness{StationarityWitness::Side::right,
                                           right_eq, right_ne, b, c};
        }
    return std::nullopt;
}

bool is_stationary(const CayleyTable& t) {
    return !stationarity_witness(t).has_value();
}

std::optional<SandwichViolation> sandwich_violation(const CayleyTable& t) {
    require_associative(t, "sandwich_violation");
    const int n = t.order();
    // For fixed u, bucket the outer pairs (a, b) by the value a*u*b; the
    // implication holds iff for every v the map a*u*b -> a*v*b is
    // well-defined across each bucket.
    std::vector<std::vector<std::pair<Elem, Elem>>> buckets(n);
    for (Elem u = 0; u < n; ++u) {
        for (auto& bucket : buckets)
            bucket.clear();
        for (Elem a = 0; a < n; ++a) {
            const Elem au = t.at(a, u);
            for (Elem b = 0; b < n; ++b)
                buckets[t.at(au, b)].emplace_back(a, b);
        }
        for (Elem v = 0; v < n; ++v)
            for (const auto& bucket : buckets) {
                if (bucket.size() < 2)
                    continue;
                auto [a0, b0] = bucket[0];
                const Elem ref = t.at(t.at(a0, v), b0);
                for (std::size_t i = 1; i < bucket.size(); ++i) {
                    auto [a, b] = bucket[i];
                    if (t.at(t.at(a, v), b) != ref)
                        return SandwichViolation{a0, b0, a, b, u, v};
                }
            }
    }
    return std::nullopt;
}

bool abelian_semigroup_criterion(const CayleyTable& t) {
    return is_stationary(t) && !sandwich_violation(t).has_value();
}

PeriodicityWitness periodicity_witness(const CayleyTable& t, Elem a) {
    require_associative(t, "periodicity_witness");
    if (a < 0 || a >= t.order())
        throw std::invalid_argument("periodicity_witness: element out of range");
    std::vector<int> first_exponent(t.order(), 0);
    Elem power = a;
    for (int exp = 1;; ++exp) {
        if (first_exponent[power])
            return PeriodicityWitness{a, first_exponent[power], exp};
        first_exponent[power] = exp;
        power = t.at(power, a);
    }
}

}  // namespace magma
