#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace mbe::cli {

enum class Space { Cycle, Cut };
enum class Command { MinBasis, MinBases, AllBases, Relevant, Verify };
enum class Format { Text, JsonLines };

struct RunConfig {
    std::string input_path = "-"; // "-" reads stdin
    Space space = Space::Cut;
    Command command = Command::MinBasis;
    std::optional<std::uint64_t> max; // output cap, >= 1 when present
    Format format = Format::Text;
    bool fast = false; // min-bases: two-phase driver instead of the plain one
    bool raw = false;  // all-bases: coefficient vectors instead of lifts
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // contract violation / FAIL
inline constexpr int kExitParse = 2;        // malformed or inadmissible input
inline constexpr int kExitDisconnected = 3; // input graph not connected
inline constexpr int kExitGuard = 4;        // verify guard exceeded

/// Parse the graph from `in`, dispatch the command, stream results to `out`.
int run(const RunConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Same, reading from config.input_path ("-" = stdin).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace mbe::cli
