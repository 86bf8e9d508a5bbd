#pragma once

// JSON readers and writers for every structure the command-line front end
// touches. Readers validate shape and report the offending key; numerical
// validation stays with the library routines. Writers use ordered maps so a
// given input always serializes to the same bytes.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "plankcover/contact.hpp"
#include "plankcover/cover.hpp"
#include "plankcover/geom.hpp"
#include "plankcover/select.hpp"
#include "plankcover/types.hpp"

namespace plankcover {

using Json = nlohmann::ordered_json;

// Throws ArgumentError when the file cannot be opened; malformed content
// raises nlohmann's parse_error, which carries the byte offset.
Json load_json_file(const std::string& path);

// --- readers ---------------------------------------------------------------

Polytope read_polytope(const Json& j, const std::string& where);

SelectionInstance read_selection_instance(const Json& j);

struct BangInput {
    std::vector<Vec> directions;
    Vec widths;
    Vec levels;
};
BangInput read_bang_input(const Json& j);

struct KadetsInput {
    std::vector<std::vector<Vec>> menus;
    Vec radii;
    std::vector<Vec> centers;
};
KadetsInput read_kadets_input(const Json& j);

// For `inradius` and `contact-pairs`: the container C and the inscribed body B.
struct BodyPairInput {
    Polytope C;
    Polytope B;
};
BodyPairInput read_body_pair(const Json& j);

struct WitnessInput {
    CoveringInstance instance;
    std::optional<double> epsilon;
};
WitnessInput read_witness_input(const Json& j);

std::vector<SumsetPiece> read_sumset_input(const Json& j);

struct SimplexInput {
    int dim = 0;
    Vec lambdas;
    std::vector<Vec> shifts;
};
SimplexInput read_simplex_input(const Json& j);

struct VerifyInput {
    CoveringInstance instance;
    int grid = 0;
    std::optional<Vec> probe;
};
VerifyInput read_verify_input(const Json& j);

// --- writers ---------------------------------------------------------------

Json vec_json(const Vec& v);
Json polytope_json(const Polytope& P);
Json selection_result_json(const SelectionResult& r);
Json bang_result_json(const BangResult& r);
Json kadets_result_json(const KadetsResult& r);
Json inscribed_json(const InscribedHomothet& h);
Json contact_system_json(const ContactSystem& s);
Json witness_report_json(const WitnessReport& r);
Json cover_sample_json(const CoverSample& s);
Json sumset_report_json(const SumsetReport& r);
Json simplex_demo_json(const SimplexDemo& d);

}  // namespace plankcover
