#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsroots/poly.hpp"

namespace bsroots {

enum class Mode { nu, roots, strength, bfunction, crosscheck };
enum class Format { text, structured };

struct RunConfig {
    std::uint64_t p = 3;
    unsigned m = 0;
    std::vector<std::string> variables{"x", "y"};
    std::string poly;
    /// Entries "name:expr" giving h for F(name) = name^p + p*h.
    std::vector<std::string> lift;
    Mode mode = Mode::roots;
    std::optional<unsigned> max_level;
    std::optional<std::int64_t> den_bound;
    std::optional<std::int64_t> num_bound;
    std::optional<std::string> alpha;
    Format format = Format::text;
    bool timing = false;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitEngineError = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitMismatch = 3;

std::string mode_name(Mode mode);

/// Builds the lift from "name:expr" entries; unspecified variables get h = 0.
FrobeniusLift parse_lift(const std::vector<std::string>& entries, const std::vector<std::string>& variables,
                         const ChainRing& ring);

/// Runs one configuration, writing the report to out and text-mode errors to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line entry point.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bsroots
