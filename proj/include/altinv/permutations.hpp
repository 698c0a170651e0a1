#pragma once

// Permutations of {1..n} and the subgroup machinery used to detect
// invariants of alternating groups: generated subgroups by breadth-first
// closure, the block-bitransposition subgroup, the centralizer of the
// fixed-point-free involution pairing adjacent points, the twisted embedding
// of a symmetric group into a larger alternating group, and brute-force
// conjugacy classes grouped by cycle type.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cycle_types.hpp"

namespace altinv {

using BigInt = boost::multiprecision::cpp_int;

class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n) {
        Permutation p;
        p.img_.resize(n);
        std::iota(p.img_.begin(), p.img_.end(), 0);
        return p;
    }

    static Permutation from_images(std::vector<int> images) {
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
                throw std::invalid_argument("not a bijection");
            seen[v] = true;
        }
        Permutation p;
        p.img_ = std::move(images);
        return p;
    }

    /// Builds from disjoint cycles in 1-based notation, e.g. {{1,2},{3,4}}.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        Permutation p = identity(n);
        for (const auto& cyc : cycles) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int a = cyc[i] - 1, b = cyc[(i + 1) % cyc.size()] - 1;
                if (a < 0 || a >= n || b < 0 || b >= n)
                    throw std::invalid_argument("cycle entry out of range");
                if (p.img_[a] != a) throw std::invalid_argument("cycles are not disjoint");
                p.img_[a] = b;
            }
        }
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; } // 0-based
    const std::vector<int>& images() const { return img_; }

    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
        Permutation r;
        r.img_.resize(p.img_.size());
        for (std::size_t i = 0; i < p.img_.size(); ++i) r.img_[i] = p.img_[q.img_[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
        return r;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    int sign() const {
        std::vector<bool> seen(img_.size(), false);
        int s = 1;
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (std::size_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    CycleType cycle_type() const {
        std::vector<bool> seen(img_.size(), false);
        std::vector<int> parts;
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (std::size_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                ++len;
            }
            parts.push_back(len);
        }
        std::sort(parts.rbegin(), parts.rend());
        return CycleType{std::move(parts)};
    }

    std::vector<int> fixed_points() const { // 1-based
        std::vector<int> out;
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] == static_cast<int>(i)) out.push_back(static_cast<int>(i) + 1);
        return out;
    }

    /// Nibble-packed key; requires degree <= 16.
    std::uint64_t encode() const {
        if (img_.size() > 16) throw std::invalid_argument("encode requires degree <= 16");
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < img_.size(); ++i)
            key |= static_cast<std::uint64_t>(img_[i]) << (4 * i);
        return key;
    }

    static Permutation decode(int n, std::uint64_t key) {
        Permutation p;
        p.img_.resize(n);
        for (int i = 0; i < n; ++i) p.img_[i] = static_cast<int>(key >> (4 * i) & 0xF);
        return p;
    }

    /// Cycle notation with 1-based points; "()" for the identity.
    std::string to_string() const {
        std::vector<bool> seen(img_.size(), false);
        std::string s;
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == static_cast<int>(i)) continue;
            s += "(";
            bool first = true;
            for (std::size_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                if (!first) s += " ";
                s += std::to_string(j + 1);
                first = false;
            }
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

class GeneratedSubgroup {
public:
    static constexpr std::size_t kOrderCap = 10'000'000;

    static GeneratedSubgroup closure(int n, std::vector<Permutation> gens,
                                     std::size_t cap = kOrderCap) {
        GeneratedSubgroup G;
        G.n_ = n;
        for (auto& g : gens)
            if (g.degree() != n) throw std::invalid_argument("generator degree mismatch");
        G.gens_ = std::move(gens);
        std::unordered_set<std::uint64_t> seen;
        std::vector<Permutation> queue{Permutation::identity(n)};
        seen.insert(queue.front().encode());
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Permutation cur = queue[head];
            for (const auto& g : G.gens_) {
                Permutation next = cur * g;
                if (seen.insert(next.encode()).second) {
                    if (seen.size() > cap) throw std::runtime_error("subgroup exceeds the order cap");
                    queue.push_back(std::move(next));
                }
            }
        }
        std::sort(queue.begin(), queue.end());
        G.elements_ = std::move(queue);
        return G;
    }

    int degree() const { return n_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

    bool contains(const Permutation& p) const {
        return std::binary_search(elements_.begin(), elements_.end(), p);
    }

    /// Points (1-based) fixed by every element.
    std::vector<int> fixed_points() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i) {
            bool fixed = true;
            for (const auto& g : gens_)
                if (g(i) != i) { fixed = false; break; }
            if (fixed) out.push_back(i + 1);
        }
        return out;
    }

private:
    int n_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Permutation> elements_;
};

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt alternating_order(int n) { return n < 2 ? 1 : factorial(n) / 2; }

/// prod of the odd integers <= n.
inline BigInt odd_product(int n) {
    BigInt r = 1;
    for (int i = 1; i <= n; i += 2) r *= i;
    return r;
}

/// The elementary abelian subgroup generated by two bitranspositions on each
/// block {4i-3,..,4i}; it fixes the trailing c = n mod 4 points.
inline GeneratedSubgroup bitransposition_block_group(int n) {
    if (n < 4) throw std::invalid_argument("needs n >= 4");
    int m = n / 4;
    std::vector<Permutation> gens;
    for (int i = 1; i <= m; ++i) {
        int a = 4 * i - 3;
        gens.push_back(Permutation::from_cycles(n, {{a, a + 1}, {a + 2, a + 3}}));
        gens.push_back(Permutation::from_cycles(n, {{a, a + 2}, {a + 1, a + 3}}));
    }
    return GeneratedSubgroup::closure(n, std::move(gens));
}

/// The involution (1 2)(3 4)...(n-1 n), acting without fixed points.
inline Permutation adjacent_pairing(int n) {
    if (n % 2) throw std::invalid_argument("needs even n");
    std::vector<std::vector<int>> cycles;
    for (int i = 1; i < n; i += 2) cycles.push_back({i, i + 1});
    return Permutation::from_cycles(n, cycles);
}

/// Centralizer, inside the alternating group, of the adjacent pairing: the
/// even part of the group of signed permutations of the n/2 pairs. Generated
/// by a double pair-flip and the adjacent pair swaps; the closure order is
/// checked against 2^r r!/2, which pins down the full centralizer.
inline GeneratedSubgroup matching_centralizer(int n) {
    if (n % 2 || n < 4) throw std::invalid_argument("needs even n >= 4");
    const int r = n / 2;
    std::vector<Permutation> gens;
    gens.push_back(Permutation::from_cycles(n, {{1, 2}, {3, 4}}));
    for (int i = 1; i < r; ++i)
        gens.push_back(Permutation::from_cycles(n, {{2 * i - 1, 2 * i + 1}, {2 * i, 2 * i + 2}}));
    GeneratedSubgroup D = GeneratedSubgroup::closure(n, std::move(gens));
    BigInt expected = (BigInt(1) << r) * factorial(r) / 2;
    if (BigInt(D.order()) != expected)
        throw std::logic_error("centralizer closure has unexpected order");
    return D;
}

inline BigInt matching_centralizer_index(int n) {
    if (n % 2 || n < 4) throw std::invalid_argument("needs even n >= 4");
    const int r = n / 2;
    return alternating_order(n) / ((BigInt(1) << r) * factorial(r) / 2);
}

/// Embedding of the symmetric group on n-2 points into the alternating group
/// on n points: odd permutations pick up the transposition (n-1 n).
struct TwistedEmbedding {
    int n;

    Permutation apply(const Permutation& sigma) const {
        if (sigma.degree() != n - 2) throw std::invalid_argument("wrong degree");
        std::vector<int> img(n);
        for (int i = 0; i < n - 2; ++i) img[i] = sigma(i);
        img[n - 2] = n - 2;
        img[n - 1] = n - 1;
        if (sigma.sign() < 0) std::swap(img[n - 2], img[n - 1]);
        return Permutation::from_images(std::move(img));
    }

    /// Image of the whole symmetric group.
    GeneratedSubgroup image() const {
        std::vector<Permutation> gens;
        gens.push_back(apply(Permutation::from_cycles(n - 2, {{1, 2}})));
        if (n - 2 >= 3) {
            std::vector<int> cyc(n - 2);
            std::iota(cyc.begin(), cyc.end(), 1);
            gens.push_back(apply(Permutation::from_cycles(n - 2, {cyc})));
        }
        return GeneratedSubgroup::closure(n, std::move(gens));
    }

    /// Image of the maximal elementary abelian subgroup generated by the
    /// disjoint transpositions (1 2), (3 4), ...
    GeneratedSubgroup transposition_cube_image() const {
        std::vector<Permutation> gens;
        for (int i = 1; i + 1 <= n - 2; i += 2)
            gens.push_back(apply(Permutation::from_cycles(n - 2, {{i, i + 1}})));
        return GeneratedSubgroup::closure(n, std::move(gens));
    }
};

inline TwistedEmbedding twisted_embedding(int n) {
    if (n % 4 != 2 && n % 4 != 3)
        throw std::invalid_argument("twisted embedding needs n = 2 or 3 mod 4");
    if (n < 4) throw std::invalid_argument("n too small");
    return TwistedEmbedding{n};
}

// --- brute-force conjugacy classes ------------------------------------------

struct ConjugacyClassCount {
    CycleType type;
    int class_count;
};

/// Conjugacy classes of the symmetric or alternating group, by exhaustive
/// orbit enumeration under conjugation: every element is listed, bucketed by
/// cycle type, and swept into orbits. No splitting rule is consulted.
inline std::vector<ConjugacyClassCount> conjugacy_classes(int n, bool alternating) {
    if (n < 1 || n > 10) throw std::invalid_argument("n out of the supported range [1,10]");

    std::vector<Permutation> gens;
    if (alternating) {
        for (int i = 1; i + 2 <= n; ++i)
            gens.push_back(Permutation::from_cycles(n, {{i, i + 1, i + 2}}));
    } else {
        for (int i = 1; i + 1 <= n; ++i)
            gens.push_back(Permutation::from_cycles(n, {{i, i + 1}}));
    }
    std::vector<Permutation> gen_invs;
    for (const auto& g : gens) gen_invs.push_back(g.inverse());

    // bucket every group element by cycle type
    const auto types = partitions_of(n);
    std::vector<std::vector<std::uint64_t>> buckets(types.size());
    auto type_index = [&](const CycleType& t) {
        return static_cast<std::size_t>(
            std::find(types.begin(), types.end(), t) - types.begin());
    };
    {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        do {
            Permutation p = Permutation::from_images(v);
            if (alternating && p.sign() < 0) continue;
            buckets[type_index(p.cycle_type())].push_back(p.encode());
        } while (std::next_permutation(v.begin(), v.end()));
    }

    std::vector<ConjugacyClassCount> out;
    for (std::size_t t = 0; t < types.size(); ++t) {
        auto& bucket = buckets[t];
        if (bucket.empty()) continue;
        std::sort(bucket.begin(), bucket.end());
        std::vector<bool> visited(bucket.size(), false);
        auto index_of = [&](std::uint64_t key) {
            return static_cast<std::size_t>(
                std::lower_bound(bucket.begin(), bucket.end(), key) - bucket.begin());
        };
        int orbits = 0;
        for (std::size_t start = 0; start < bucket.size(); ++start) {
            if (visited[start]) continue;
            ++orbits;
            std::vector<std::uint64_t> queue{bucket[start]};
            visited[start] = true;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                Permutation cur = Permutation::decode(n, queue[head]);
                for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                    Permutation conj = gens[gi] * cur * gen_invs[gi];
                    std::size_t idx = index_of(conj.encode());
                    if (!visited[idx]) {
                        visited[idx] = true;
                        queue.push_back(conj.encode());
                    }
                }
            }
        }
        out.push_back(ConjugacyClassCount{types[t], orbits});
    }
    return out;
}

} // namespace altinv
