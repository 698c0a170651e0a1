#pragma once

// Cycle types (integer partitions), with the parity and splitting rules for
// permutation classes.

#include <string>
#include <vector>

namespace altinv {

struct CycleType {
    std::vector<int> parts; // weakly decreasing, each >= 1

    int n() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }

    /// Parity of the permutations with this cycle type: even iff n - #parts
    /// is even.
    bool is_even() const { return (n() - static_cast<int>(parts.size())) % 2 == 0; }

    /// The symmetric-group class splits into two alternating-group classes
    /// iff all parts are odd and pairwise distinct. Needs n >= 2: below that
    /// the alternating group is the whole symmetric group and nothing can
    /// split.
    bool splits() const {
        if (n() < 2) return false;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] % 2 == 0) return false;
            if (i && parts[i] == parts[i - 1]) return false;
        }
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += "+";
            s += std::to_string(parts[i]);
        }
        return s;
    }

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend bool operator<(const CycleType& a, const CycleType& b) { return a.parts < b.parts; }
};

/// All partitions of n in descending lexicographic order, [n] first.
inline std::vector<CycleType> partitions_of(int n) {
    std::vector<CycleType> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(CycleType{cur});
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace altinv
