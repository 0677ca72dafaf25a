#include "magma/quasigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "magma/oracles.hpp"

namespace magma {

namespace {

std::vector<Elem> invert_permutation(const std::vector<Elem>& p) {
    std::vector<Elem> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        inv[p[i]] = static_cast<Elem>(i);
    return inv;
}

void require_quasigroup(const CayleyTable& t, const char* who) {
    if (!is_quasigroup(t))
        throw std::invalid_argument(std::string(who) +
                                    ": operation must be a quasigroup");
}

}  // namespace

LoopDerivation derive_loop(const CayleyTable& t, Elem base) {
    require_quasigroup(t, "derive_loop");
    const int n = t.order();
    if (base < 0 || base >= n)
        throw std::invalid_argument("derive_loop: base out of range");

    std::vector<Elem> right(n), left(n);
    for (Elem x = 0; x < n; ++x) {
        right[x] = t.at(x, base);
        left[x] = t.at(base, x);
    }
    std::vector<Elem> right_inv = invert_permutation(right);
    std::vector<Elem> left_inv = invert_permutation(left);

    std::vector<Elem> plus_entries(static_cast<std::size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            plus_entries[static_cast<std::size_t>(x) * n + y] =
                t.at(right_inv[x], left_inv[y]);
    CayleyTable plus(n, std::move(plus_entries));
    const Elem zero = t.at(base, base);

    // w -> w + base is a permutation; residuals solve r(x) + base = R^-1(x).
    std::vector<Elem> plus_base(n);
    for (Elem w = 0; w < n; ++w)
        plus_base[w] = plus.at(w, base);
    std::vector<Elem> plus_base_inv = invert_permutation(plus_base);
    std::vector<Elem> res_r(n), res_l(n);
    for (Elem x = 0; x < n; ++x) {
        res_r[x] = plus_base_inv[right_inv[x]];
        res_l[x] = plus_base_inv[left_inv[x]];
    }

    // Reconstruction identities; violations would mean a programming error.
    if (identity_of(plus) != zero)
        throw std::logic_error("derived loop: zero is not the identity of +");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (t.at(x, y) != plus.at(right[x], left[y]))
                throw std::logic_error("derived loop: x*y != R(x) + L(y)");

    return LoopDerivation{base,
                          zero,
                          std::move(right),
                          std::move(left),
                          std::move(right_inv),
                          std::move(left_inv),
                          std::move(res_r),
                          std::move(res_l),
                          std::move(plus)};
}

namespace {

long long permutation_order(const std::vector<Elem>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    long long order = 1;
    for (Elem start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        long long len = 0;
        for (Elem x = start; !seen[x]; x = p[x]) {
            seen[x] = 1;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

}  // namespace

std::pair<long long, long long> translation_inverse_order(const CayleyTable& t,
                                                          Elem base) {
    require_quasigroup(t, "translation_inverse_order");
    const int n = t.order();
    if (base < 0 || base >= n)
        throw std::invalid_argument("translation_inverse_order: base out of range");
    std::vector<Elem> right(n), left(n);
    for (Elem x = 0; x < n; ++x) {
        right[x] = t.at(x, base);
        left[x] = t.at(base, x);
    }
    return {permutation_order(right), permutation_order(left)};
}

const char* to_string(LoopFailure f) {
    switch (f) {
        case LoopFailure::none: return "none";
        case LoopFailure::plus_not_associative: return "plus-not-associative";
        case LoopFailure::plus_not_commutative: return "plus-not-commutative";
        case LoopFailure::right_residual_not_automorphism:
            return "right-residual-not-automorphism";
        default: return "left-residual-not-automorphism";
    }
}

QuasigroupAbelianResult quasigroup_abelian_fast(const CayleyTable& t,
                                                std::optional<Elem> base) {
    const Elem a = base.value_or(0);
    LoopDerivation loop = derive_loop(t, a);
    QuasigroupAbelianResult res;
    res.base = a;
    if (auto w = associativity_witness(loop.plus)) {
        res.failure = LoopFailure::plus_not_associative;
        res.witness = {w->x, w->y, w->z};
        return res;
    }
    if (auto w = commutativity_witness(loop.plus)) {
        res.failure = LoopFailure::plus_not_commutative;
        res.witness = {w->x, w->y};
        return res;
    }
    // + is a commutative group (a finite associative loop); the residual
    // maps are bijections, so homomorphism is all that is left to check.
    const int n = t.order();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const Elem s = loop.add(x, y);
            if (loop.residual_right[s] !=
                loop.add(loop.residual_right[x], loop.residual_right[y])) {
                res.failure = LoopFailure::right_residual_not_automorphism;
                res.witness = {x, y};
                return res;
            }
            if (loop.residual_left[s] !=
                loop.add(loop.residual_left[x], loop.residual_left[y])) {
                res.failure = LoopFailure::left_residual_not_automorphism;
                res.witness = {x, y};
                return res;
            }
        }
    res.abelian = true;
    return res;
}

SquareRootSpectrum square_root_spectrum(const CayleyTable& t) {
    SquareRootSpectrum s;
    s.counts.assign(t.order(), 0);
    for (Elem x = 0; x < t.order(); ++x)
        ++s.counts[t.at(x, x)];
    int nonzero = 0;
    for (int c : s.counts)
        if (c != 0) {
            nonzero = c;
            break;
        }
    s.uniform = std::all_of(s.counts.begin(), s.counts.end(), [&](int c) {
        return c == 0 || c == nonzero;
    });
    return s;
}

RoutedVerdict quasigroup_hamiltonian_fast(const CayleyTable& t,
                                          const SubuniverseCaps& caps) {
    if (quasigroup_abelian_fast(t).abelian)
        return {Truth::yes, Route::quasigroup_theorem, std::nullopt};
    HamiltonianResult oracle = hamiltonian_oracle(t, caps);
    return {oracle.verdict, Route::oracle, oracle.offender};
}

Partition coset_congruence(const CayleyTable& t, const std::vector<Elem>& B,
                           Elem a) {
    if (B.empty())
        throw std::invalid_argument("coset_congruence: B must be non-empty");
    if (std::find(B.begin(), B.end(), a) == B.end())
        throw std::invalid_argument("coset_congruence: a must belong to B");
    std::vector<Elem> sorted = B;
    std::sort(sorted.begin(), sorted.end());
    if (subuniverse_closure(t, B) != sorted)
        throw std::invalid_argument("coset_congruence: B must be closed");
    QuasigroupAbelianResult fast = quasigroup_abelian_fast(t, a);
    if (!fast.abelian)
        throw std::invalid_argument(
            "coset_congruence: operation must be an Abelian quasigroup");
    LoopDerivation loop = derive_loop(t, a);
    // B is closed under * and contains a, hence closed under the derived +;
    // anything else is a programming error.
    for (Elem x : B)
        for (Elem y : B)
            if (!std::binary_search(sorted.begin(), sorted.end(),
                                    loop.add(x, y)))
                throw std::logic_error("coset_congruence: B not closed under +");
    UnionFind uf(t.order());
    for (Elem x = 0; x < t.order(); ++x)
        for (Elem b : B)
            uf.unite(x, loop.add(x, b));
    return uf.to_partition();
}

}  // namespace magma
