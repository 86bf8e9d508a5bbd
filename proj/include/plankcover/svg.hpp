#pragma once

// Planar figures for the CLI: fixed 1000x1000 viewBox, fixed role colors,
// coordinates written with fixed precision so identical scenes produce
// identical bytes. Only two-dimensional geometry is drawable.

#include <optional>
#include <string>
#include <vector>

#include "plankcover/contact.hpp"
#include "plankcover/cover.hpp"
#include "plankcover/geom.hpp"
#include "plankcover/types.hpp"

namespace plankcover {

// Container, inscribed copy of lambda * B, and one normal arrow per contact.
std::string svg_contact_scene(const Polytope& C, const Polytope& B, const ContactSystem& sys);

// Covered body, every placed piece, and (when given) the uncovered point.
std::string svg_witness_scene(const CoveringInstance& inst,
                              const std::optional<Vec>& witness);

// Placed sumset pieces and the witness their sum avoids.
std::string svg_sumset_scene(const std::vector<SumsetPiece>& pieces, const Vec& witness);

// Simplex, its placed negative homothets, and the witness.
std::string svg_simplex_scene(const SimplexDemo& demo, const Vec& lambdas,
                              const std::vector<Vec>& shifts);

}  // namespace plankcover
