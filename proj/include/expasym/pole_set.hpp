#ifndef EXPASYM_POLE_SET_HPP
#define EXPASYM_POLE_SET_HPP

#include "expasym/aaa.hpp"

#include <string>
#include <vector>

namespace expasym {

// One conjugate pair, represented by its upper-half-plane member.
struct PolePair {
    Complex pole;     // Im(pole) > 0
    Complex residue;
    int pair_index = 0;  // 1-based, 1 = nearest the real axis
};

struct DiscardedPole {
    Complex pole;
    Complex residue;
    std::string reason;  // "real-axis artefact", "froissart doublet", "unpaired"
};

struct PoleSet {
    std::vector<PolePair> pairs;        // sorted by increasing Im(pole)
    std::vector<DiscardedPole> discarded;
};

// Tolerances (the source text is silent on both).
constexpr double kPairingTolerance = 1e-8;    // |p - conj(p')| absolute
constexpr double kFroissartFactor = 1e-13;    // relative to max |residue|

// Partition raw poles: (1) |Im| < pairing tolerance -> real-axis artefact;
// (2) |residue| < froissart factor * max|residue| -> Froissart doublet;
// (3) match upper poles with lower conjugates; leftovers discarded as
// "unpaired". Pairs sorted by increasing Im.
PoleSet filter_and_pair(const std::vector<std::pair<Complex, Complex>> &raw,
                        const SampleGrid &grid);

// JSON: array "pairs" of {pair_index, pole_re, pole_im, residue_re,
// residue_im} plus a "discarded" array with reasons.
std::string pole_set_json(const PoleSet &ps);
void write_pole_set_json(const PoleSet &ps, const std::string &path,
                         const std::string &config_json = "");

} // namespace expasym

#endif
