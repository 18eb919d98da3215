#pragma once

#include <gmpxx.h>
#include <json.hpp>

#include <optional>

#include "ptl/automata.hpp"
#include "ptl/bicho.hpp"
#include "ptl/flows.hpp"
#include "ptl/oruga.hpp"
#include "ptl/permutree.hpp"
#include "ptl/s_weak_order.hpp"

namespace ptl {

using Json = nlohmann::ordered_json;

// {num, den}; each part is a JSON integer when it fits in 64 bits and a
// decimal string otherwise.
Json to_json(const mpq_class& q);
std::string decimal(const mpq_class& q, int digits);
// "num/den" or "num".
mpq_class parse_rational(const std::string& text);

Json to_json(const Permutree& t);
Json to_json(const RotationLattice& lat);
Json to_json(const FramedGraph& g);
Json flow_json(const Flow& f);
Json to_json(const SHasse& h, const SComp& s);
Json to_json(const TropicalRealization& r, std::optional<int> approx = std::nullopt);
Json to_json(const LidskiiReport& r, const SComp& s);
Json to_json(const SortOutcome& o);
Json to_json(const Automaton& a);
Json to_json(const ConjectureReport& r);
Json to_json(const BichoGraph& b);

}  // namespace ptl
