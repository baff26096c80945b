#include "nroots/residue.hpp"

#include <algorithm>

namespace nroots {

ResidueSet residues_wrt(const RootSystem& rs, const std::vector<RootId>& universe,
                        const KRoot& r) {
    ResidueSet out;
    for (RootId g : universe) {
        bool survives = true;
        for (RootId b : r)
            if (!rs.is_positive(rs.reflected(b, g))) {
                survives = false;
                break;
            }
        if (survives) out.residues.push_back(g);
    }
    std::sort(out.residues.begin(), out.residues.end());
    return out;
}

int level_wrt(const RootSystem& rs, const std::vector<RootId>& universe, const KRoot& r) {
    int level = 0;
    for (RootId g : universe) {
        bool survives = true;
        for (RootId b : r)
            if (!rs.is_positive(rs.reflected(b, g))) {
                survives = false;
                break;
            }
        if (survives) ++level;
    }
    return level;
}

ResidueSet internal_residues(const RootSystem& rs, const KRoot& r) {
    std::vector<RootId> psi_pos;
    for (RootId g : span_roots(rs, r))
        if (rs.is_positive(g)) psi_pos.push_back(g);
    return residues_wrt(rs, psi_pos, r);
}

std::vector<RootId> residues_by_height(const RootSystem& rs, const KRoot& h, int i) {
    if (rs.type() != DynkinType(Family::E, 8))
        throw Error("residues_by_height is defined for type E8");
    std::vector<RootId> out;
    for (RootId g : internal_residues(rs, h).residues)
        if (rs.coeffs(g)[7] == i) out.push_back(g);
    return out;
}

} // namespace nroots
