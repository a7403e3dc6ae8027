#pragma once

#include "lcc/cycles.hpp"
#include "lcc/liere.hpp"
#include "lcc/schottky.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace lcc {

using Json = nlohmann::ordered_json;

// Malformed input; what() starts with the offending field path.
class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json to_json(const Rational& q);  // "p/q" string
Json to_json(const Integer& z);   // number when it fits in 64 bits, else decimal string
Json to_json(const Partition& p);
Json to_json(const SymExpr& e);
Json to_json(const FgAbelianGroup& g);
Json to_json(const GroupRingElement& x);
Json to_json(const ChowVector& x);
Json to_json(const CleanCycleModel& c);
Json to_json(const Character& x);
Json to_json(const WmfEntry& e);
Json to_json(const PpavInput& p);
Json to_json(const GroupDescriptor& d);
Json to_json(const Genus5Record& r);
Json to_json(const FakeJacobianSolution& s);
Json to_json(const SummandBound& b);
Json to_json(const SimplicityRecord& r);
Json to_json(const FourfoldTable& t);

Rational rational_from_json(const Json& j, const std::string& path);
Integer integer_from_json(const Json& j, const std::string& path);
FgAbelianGroup group_from_json(const Json& j, const std::string& path = "group");
GroupRingElement group_ring_from_json(const Json& j, const std::string& path = "$");
ChowVector chow_from_json(const Json& j, int g, const std::string& path);
CleanCycleModel cycle_from_json(const Json& j);  // validated
Character character_from_json(const Json& j);    // validated
TensorConstruction construction_from_json(const Json& j, const std::string& path = "construction");

Json read_json_file(const std::string& path);
CleanCycleModel load_cycle(const std::string& path);
Character load_character(const std::string& path);
void save_json(const std::string& path, const Json& j);

}  // namespace lcc
