#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pangular/bounds.hpp"
#include "pangular/norm.hpp"
#include "pangular/vec.hpp"

namespace pangular {

// Row classification for a bounds sweep:
//   Ok         max ratio within 1 + 1e-9
//   Violation  a non-guaranteed bound exceeded: ips/char on a
//              non-inner-product norm (the certification signal), or
//              char:<q> with q > 1 anywhere (that inequality can fail even
//              on l2, since it sits below the ips bound)
//   Error      a guaranteed bound exceeded: maligranda or dw:<q> on any norm,
//              ips or char:<q<=1> on an inner-product norm (would falsify a
//              theorem)
enum class SweepFlag { Ok, Violation, Error };

std::string to_string(SweepFlag f);

struct SweepRow {
    double p = 0.0;
    std::optional<double> q;
    std::string kind;
    double max_ratio = 0.0;
    Vec argmax_x, argmax_y;
    SweepFlag flag = SweepFlag::Ok;
};

// Max ratio alpha_p / bound per (p, kind) cell over `samples` seeded pairs.
// The same pairs are reused for every cell. Rows are ordered by p ascending,
// then maligranda, dw:<q> (q ascending), ips, char:<q> (q ascending). Pair i
// is drawn from a stream derived from (seed, i), so any partition of the
// sample range across threads produces identical rows; ratio ties resolve to
// the lowest pair index.
std::vector<SweepRow> run_bounds_sweep(const NormSpec& spec, const std::vector<double>& p_grid,
                                       const std::vector<double>& q_set, int samples,
                                       std::uint64_t seed, int threads = 1);

}  // namespace pangular
