#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nroots/catalog.hpp"
#include "nroots/e_series.hpp"
#include "nroots/poly.hpp"
#include "nroots/qp.hpp"

namespace nroots {

enum class Display { Coeffs, Epsilon };

/// "(1,2,1,1)" or "e1+e2" depending on the display mode.
std::string root_string(const RootSystem& rs, RootId a, Display d);

/// "u{i}{j}" for a root of the form e_i + e_j (types A and D).
std::string u_label(const RootSystem& rs, RootId a);

/// Type-D monomial with couples {e_i+e_j, e_i-e_j} collapsed to u_ij; lone
/// e_i+e_j roots are also written u_ij, as in the matching model.
std::vector<std::string> couple_collapsed_labels(const RootSystem& rs, const Monomial& m);

using LabelFn = std::function<std::string(RootId)>;

/// One line per (q-power, monomial) pair: "<+c|-c> q^<k> l1*l2*...",
/// sorted by q-power then by the label strings.
std::string hafnian_text(const HafnianPoly& h, const LabelFn& label);
std::string hafnian_text_collapsed(const RootSystem& rs, const HafnianPoly& h);

nlohmann::json hafnian_json(const HafnianPoly& h, const LabelFn& label);
nlohmann::json omega_json(const OmegaSet& om, const std::vector<int>& levels);
nlohmann::json verdict_json(const QPVerdict& v);
nlohmann::json table1_json(const std::vector<Table1Row>& rows);

std::string cubic_text(const std::vector<CubicTerm>& terms);
nlohmann::json cubic_json(const std::vector<CubicTerm>& terms);

/// Hasse diagram in DOT, clustered by rank.
std::string hasse_dot(const ScaledInstance& inst, const QPOrder& ord);
std::string gamedag_dot(const RootSystem& rs, const GameDag& dag);

} // namespace nroots
