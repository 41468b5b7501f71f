#ifndef DEBM_RNG_HPP
#define DEBM_RNG_HPP

#include <cmath>
#include <cstdint>

namespace debm {

// Stateless counter-based generator: every variate is a hash of
// (seed, stream, event, slot), so draws are reproducible bit-exactly no
// matter how the work is partitioned, and there is no sequence to exhaust.
class CounterRng {
  public:
    explicit CounterRng(uint64_t seed) : seed_(seed) {}

    uint64_t seed() const { return seed_; }

    static uint64_t mix(uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    uint64_t bits(uint64_t stream, uint64_t event, uint64_t slot) const {
        uint64_t h = mix(seed_);
        h = mix(h ^ stream);
        h = mix(h ^ event);
        h = mix(h ^ slot);
        return h;
    }

    // uniform in [0, 1)
    double uniform(uint64_t stream, uint64_t event, uint64_t slot) const {
        return static_cast<double>(bits(stream, event, slot) >> 11) * 0x1.0p-53;
    }

    // uniform in (0, 1], safe for log()
    double uniform_pos(uint64_t stream, uint64_t event, uint64_t slot) const {
        return (static_cast<double>(bits(stream, event, slot) >> 11) + 1.0) * 0x1.0p-53;
    }

    // standard normal pair via Box-Muller from slots (slot, slot+1)
    void normal_pair(uint64_t stream, uint64_t event, uint64_t slot, double* n1,
                     double* n2) const {
        const double u1 = uniform_pos(stream, event, slot);
        const double u2 = uniform(stream, event, slot + 1);
        const double rad = std::sqrt(-2.0 * std::log(u1));
        *n1 = rad * std::cos(2.0 * M_PI * u2);
        *n2 = rad * std::sin(2.0 * M_PI * u2);
    }
};

}  // namespace debm

#endif
