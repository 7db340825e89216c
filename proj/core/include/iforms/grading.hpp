#ifndef IFORMS_GRADING_HPP
#define IFORMS_GRADING_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <vector>

namespace iforms {

/// Finitely supported integer vector indexed by differential slots k >= 1.
/// The single source of truth for all commutation signs lives in
/// parity_pairing / koszul_sign below; no other module hard-codes a sign.
class MultiDegree {
public:
    MultiDegree() = default;
    static MultiDegree basis(int slot);

    int at(int slot) const;
    bool is_zero() const { return entries_.empty(); }
    /// Adds v to the slot entry, dropping it if it becomes zero.
    void add(int slot, int v);

    MultiDegree operator+(const MultiDegree& o) const;
    MultiDegree operator-(const MultiDegree& o) const;
    MultiDegree operator-() const;
    MultiDegree scaled(int m) const;
    MultiDegree& operator+=(const MultiDegree& o);

    const std::map<int, int>& entries() const { return entries_; }

    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

private:
    std::map<int, int> entries_;  // slot -> nonzero entry
};

/// Z2 parity pairing: (sum_k D_k * E_k) mod 2, returned as 0 or 1.
int parity_pairing(const MultiDegree& a, const MultiDegree& b);

/// A finite set of positive slot indices; empty only where explicitly allowed.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> slots);
    explicit IndexSet(std::vector<int> slots);

    bool empty() const { return slots_.empty(); }
    std::size_t size() const { return slots_.size(); }
    bool contains(int k) const;
    IndexSet with(int k) const;
    IndexSet without(int k) const;
    int max() const;  // 0 when empty

    auto begin() const { return slots_.begin(); }
    auto end() const { return slots_.end(); }
    const std::vector<int>& elements() const { return slots_; }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<int> slots_;  // sorted, unique, all >= 1
};

/// Indicator multidegree e_K of an index set.
MultiDegree degree_of_indexset(const IndexSet& K);

/// Sign picked up when the sequence of graded factors with the given degrees is
/// rearranged by `perm` (perm[i] = index in the original sequence of the factor
/// placed at position i): the product of (-1)^{<D_i,D_j>} over inverted pairs.
int koszul_sign(const std::vector<MultiDegree>& degrees, const std::vector<std::size_t>& perm);

}  // namespace iforms

#endif
