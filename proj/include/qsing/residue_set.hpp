#pragma once

#include <cstdint>
#include <vector>

namespace qsing {

/// A subset of Z/n as a bitset. The one nontrivial operation is or_rotated,
/// which folds a cyclically shifted copy of another set into this one; it is
/// the inner step of every reachability computation here.
class ResidueSet {
public:
    explicit ResidueSet(long n) : n_(n), w_((n + 63) / 64, 0) {}

    long modulus() const { return n_; }

    void insert(long r) { w_[r >> 6] |= uint64_t(1) << (r & 63); }

    bool contains(long r) const { return (w_[r >> 6] >> (r & 63)) & 1; }

    // this |= { (s + r) mod n : s in other }, 0 <= r < n
    void or_rotated(const ResidueSet& other, long r) {
        if (n_ <= 64) {
            uint64_t s = other.w_[0];
            uint64_t rot = r == 0 ? s : ((s << r) | (s >> (n_ - r)));
            w_[0] |= rot & mask();
            return;
        }
        for (long i = 0; i < n_; ++i)
            if (other.contains(i)) insert((i + r) % n_);
    }

    std::vector<long> to_vector() const {
        std::vector<long> out;
        for (long i = 0; i < n_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
    uint64_t mask() const { return n_ == 64 ? ~uint64_t(0) : (uint64_t(1) << n_) - 1; }

    long n_;
    std::vector<uint64_t> w_;
};

}  // namespace qsing
