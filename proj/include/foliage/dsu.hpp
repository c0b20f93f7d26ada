#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace foliage {

// Plain union-find, path halving + union by size.
class Dsu {
public:
    explicit Dsu(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // false if already in the same component (a cycle would close)
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    bool same(int a, int b) { return find(a) == find(b); }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

// Union-find with an undo trail for backtracking search. No path compression;
// union by size keeps find at O(log n).
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    bool same(int a, int b) const { return find(a) == find(b); }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        trail_.push_back(b);
        return true;
    }

    size_t mark() const { return trail_.size(); }

    void rollback(size_t mark) {
        while (trail_.size() > mark) {
            int b = trail_.back();
            trail_.pop_back();
            size_[parent_[b]] -= size_[b];
            parent_[b] = b;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> trail_;
};

} // namespace foliage
