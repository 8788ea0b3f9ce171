#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace isokit::cli {

/// Exit codes shared by every verb.
enum ExitCode : int {
    kOk = 0,
    kMalformed = 1,
    kNotRealizable = 2,
};

/// Runs one command. `args` excludes the program name. `env_format` is the
/// value of ISOKIT_FORMAT, if set; an explicit --format wins over it.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err, const std::optional<std::string>& env_format = std::nullopt);

} // namespace isokit::cli
