#pragma once

#include "cnr/errors.hpp"

namespace cnr {

// Ambient space tag for an operator given as a finite block: Finite(n) means
// block ⊕ 0_{n-m} on an n-dimensional space, InfiniteZeroTail means block ⊕ 0
// on an infinite-dimensional space (essential spectrum {0}).
class AmbientDim {
public:
    static AmbientDim finite(int n) {
        if (n < 1) throw DimensionError("ambient dimension must be >= 1");
        return AmbientDim(false, n);
    }
    static AmbientDim infinite_zero_tail() { return AmbientDim(true, 0); }

    bool is_infinite() const { return infinite_; }

    int dim() const {
        if (infinite_) throw ContractError("infinite ambient has no finite dimension");
        return n_;
    }

    // true when the ambient dimension strictly exceeds k (always for infinite)
    bool exceeds(int k) const { return infinite_ || n_ > k; }

    friend bool operator==(const AmbientDim&, const AmbientDim&) = default;

private:
    AmbientDim(bool infinite, int n) : infinite_(infinite), n_(n) {}
    bool infinite_;
    int n_;
};

} // namespace cnr
