#include "emd/construct.hpp"

#include <numeric>

namespace emd {

int Labeling::sum() const
{
    return std::accumulate(values.begin(), values.end(), 0);
}

Labeling labeling_chain(int n)
{
    validate({Family::chain, n, std::nullopt});
    Labeling lab{Family::chain, {}};
    if (n == 1) {
        lab.values = {3};
        return lab;
    }
    if (n == 2) {
        lab.values = {3, 2};
        return lab;
    }
    lab.values.resize(n);
    for (int i = 1; i <= n; ++i) {
        if (i <= 2 || i >= n - 1)
            lab.values[i - 1] = 2;
        else
            lab.values[i - 1] = i % 2 == 1 ? 1 : 2;
    }
    return lab;
}

Labeling labeling_cyclic(int n)
{
    validate({Family::cyclic, n, std::nullopt});
    Labeling lab{Family::cyclic, std::vector<int>(n)};
    for (int i = 1; i <= n; ++i)
        lab.values[i - 1] = i % 2 == 1 ? 1 : 2;
    if (n % 2 == 1)
        lab.values[n - 1] = 2;
    return lab;
}

Labeling labeling_for(Family family, int n)
{
    switch (family) {
    case Family::chain: return labeling_chain(n);
    case Family::cyclic: return labeling_cyclic(n);
    case Family::skeleton: break;
    }
    throw Error("no labeling is defined for skeleton silicates");
}

LandmarkSet construct_ers(const LabeledSilicate& sil, const Labeling& lab)
{
    if (lab.values.size() != sil.tetrahedra.size())
        throw Error("labeling has " + std::to_string(lab.values.size()) + " entries for " +
                    std::to_string(sil.tetrahedra.size()) + " tetrahedra");
    std::vector<VertexId> picked;
    for (std::size_t i = 0; i < sil.tetrahedra.size(); ++i) {
        std::vector<VertexId> cubic;
        for (VertexId v : sil.tetrahedra[i])
            if (sil.graph.degree(v) == 3)
                cubic.push_back(v);
        const auto want = static_cast<std::size_t>(lab.values[i]);
        if (want > cubic.size())
            throw Error("tetrahedron " + std::to_string(i + 1) + " has " +
                        std::to_string(cubic.size()) + " cubic vertices but the labeling asks for " +
                        std::to_string(want));
        picked.insert(picked.end(), cubic.begin(), cubic.begin() + static_cast<std::ptrdiff_t>(want));
    }
    std::sort(picked.begin(), picked.end());
    return LandmarkSet(std::move(picked));
}

int predicted_dimension(Family family, int n)
{
    validate({family, n, std::nullopt});
    switch (family) {
    case Family::chain:
        return n % 2 == 0 ? 3 * n / 2 + 2 : 3 * (n + 1) / 2;
    case Family::cyclic:
        return n % 2 == 0 ? 3 * n / 2 : 3 * (n + 1) / 2 - 1;
    case Family::skeleton:
        break;
    }
    throw Error("no dimension formula for skeleton silicates");
}

}  // namespace emd
