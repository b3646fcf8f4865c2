#pragma once

#include <cstdint>

#include "cohlen/field.hpp"

namespace cohlen {

/* splitmix64; self-contained so that seeded runs are byte-identical across
   platforms and standard libraries */
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next()
    {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /* uniform in [0, n) */
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

    int64_t range(int64_t lo, int64_t hi) // inclusive
    {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    FieldElem sample(const Field &f)
    {
        switch (f.kind()) {
        case FieldKind::prime:
            return f.from_int(static_cast<int64_t>(below(static_cast<uint64_t>(f.characteristic()))));
        case FieldKind::extension: {
            std::vector<int64_t> c(static_cast<size_t>(f.ext_degree()));
            for (auto &x : c)
                x = static_cast<int64_t>(below(static_cast<uint64_t>(f.characteristic())));
            return f.from_coeffs(std::move(c));
        }
        case FieldKind::rationals:
            return f.from_int(range(-9, 9));
        }
        throw error("unreachable");
    }

    FieldElem sample_nonzero(const Field &f)
    {
        for (;;) {
            FieldElem e = sample(f);
            if (!f.is_zero(e))
                return e;
        }
    }

  private:
    uint64_t state_;
};

} // namespace cohlen
