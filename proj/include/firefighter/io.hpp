#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "firefighter/graph.hpp"
#include "firefighter/strategy.hpp"

namespace firefighter {

/// A role label attached to a vertex of a generated instance.
struct VertexRole {
    Vertex vertex;
    std::string label;

    friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

/// Graph, ignition vertex and parameters, plus provenance for generated
/// instances.
struct InstanceBundle {
    Graph graph;
    Vertex source = 0;
    std::int64_t k = 0;
    std::optional<std::int64_t> target;  // K
    std::vector<VertexRole> roles;

    friend bool operator==(const InstanceBundle&, const InstanceBundle&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Instance text format:
//   # comments anywhere
//   n m s k [K]
//   u v            (m lines)
// Role annotations are comment lines of the form "# role <vertex> <label>".

InstanceBundle parse_instance(std::istream& in);
InstanceBundle read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const InstanceBundle& inst);
void write_instance_file(const std::string& path, const InstanceBundle& inst);

// Strategy text format: header "variant 1" or "variant 2", then one line
// per round holding "-" (nothing protected) or the protected vertex ids.

using AnyStrategy = std::variant<StrategyI, StrategyII>;

AnyStrategy parse_strategy(std::istream& in);
AnyStrategy read_strategy_file(const std::string& path);
void write_strategy(std::ostream& out, const StrategyI& s);
void write_strategy(std::ostream& out, const StrategyII& s);

}  // namespace firefighter
