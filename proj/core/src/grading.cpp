#include "iforms/grading.hpp"

#include <algorithm>

#include "iforms/error.hpp"

namespace iforms {

MultiDegree MultiDegree::basis(int slot) {
    if (slot < 1) throw Error("differential slots start at 1");
    MultiDegree d;
    d.entries_[slot] = 1;
    return d;
}

int MultiDegree::at(int slot) const {
    auto it = entries_.find(slot);
    return it == entries_.end() ? 0 : it->second;
}

void MultiDegree::add(int slot, int v) {
    if (v == 0) return;
    auto [it, inserted] = entries_.try_emplace(slot, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
    MultiDegree r = *this;
    r += o;
    return r;
}

MultiDegree& MultiDegree::operator+=(const MultiDegree& o) {
    for (auto [k, v] : o.entries_) add(k, v);
    return *this;
}

MultiDegree MultiDegree::operator-() const { return scaled(-1); }

MultiDegree MultiDegree::operator-(const MultiDegree& o) const { return *this + (-o); }

MultiDegree MultiDegree::scaled(int m) const {
    MultiDegree r;
    if (m == 0) return r;
    for (auto [k, v] : entries_) r.entries_[k] = m * v;
    return r;
}

int parity_pairing(const MultiDegree& a, const MultiDegree& b) {
    long acc = 0;
    for (auto [k, v] : a.entries()) acc += static_cast<long>(v) * b.at(k);
    return static_cast<int>(((acc % 2) + 2) % 2);
}

IndexSet::IndexSet(std::initializer_list<int> slots) : IndexSet(std::vector<int>(slots)) {}

IndexSet::IndexSet(std::vector<int> slots) : slots_(std::move(slots)) {
    std::sort(slots_.begin(), slots_.end());
    slots_.erase(std::unique(slots_.begin(), slots_.end()), slots_.end());
    if (!slots_.empty() && slots_.front() < 1) throw Error("differential slots start at 1");
}

bool IndexSet::contains(int k) const {
    return std::binary_search(slots_.begin(), slots_.end(), k);
}

IndexSet IndexSet::with(int k) const {
    std::vector<int> v = slots_;
    v.push_back(k);
    return IndexSet(std::move(v));
}

IndexSet IndexSet::without(int k) const {
    std::vector<int> v;
    v.reserve(slots_.size());
    for (int s : slots_)
        if (s != k) v.push_back(s);
    return IndexSet(std::move(v));
}

int IndexSet::max() const { return slots_.empty() ? 0 : slots_.back(); }

MultiDegree degree_of_indexset(const IndexSet& K) {
    MultiDegree d;
    for (int k : K) d.add(k, 1);
    return d;
}

int koszul_sign(const std::vector<MultiDegree>& degrees, const std::vector<std::size_t>& perm) {
    if (perm.size() != degrees.size()) throw Error("permutation length mismatch");
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j] && parity_pairing(degrees[perm[i]], degrees[perm[j]])) sign = -sign;
    return sign;
}

}  // namespace iforms
