#pragma once

#include "emd/resolve.hpp"
#include "emd/silicate.hpp"

#include <vector>

namespace emd {

/// Number of cubic vertices to take from each tetrahedron w_1..w_n.
struct Labeling {
    Family family = Family::chain;
    std::vector<int> values;

    int sum() const;
};

/// Ends get 2, interior tetrahedra alternate 1 (odd i) / 2 (even i).
/// CS_1 and CS_2 are special-cased to (3) and (3, 2) so that the sum matches
/// the dimension formula.
Labeling labeling_chain(int n);

/// Alternates 1 (odd i) / 2 (even i); for odd n the last entry is 2.
Labeling labeling_cyclic(int n);

Labeling labeling_for(Family family, int n);

/// Takes the l(w_i) smallest cubic vertices of every tetrahedron. The
/// result is sorted ascending. Throws Error if a tetrahedron has fewer cubic
/// vertices than requested.
LandmarkSet construct_ers(const LabeledSilicate& sil, const Labeling& lab);

/// The closed-form edge metric dimension of CS_n / CC_n.
int predicted_dimension(Family family, int n);

}  // namespace emd
