#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "coind/lattice.hpp"

namespace coind {

// Exit statuses of run_command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBound = 3;

/// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A lattice demo loaded from JSON: carrier, operator and mode.
struct LatticeSpec {
  Carrier carrier;
  SubsetOperator op;
  std::string operator_name;
  Extremum mode = Extremum::least;
};

/// Throws InvalidDefinition on schema errors.
LatticeSpec lattice_spec_from_json(std::string_view text);

/// Runs the demo and writes its report; returns the exit status.
int run_lattice(const LatticeSpec& spec, std::ostream& out);

}  // namespace coind
