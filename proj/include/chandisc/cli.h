// Copyright 2026 The chandisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef CHANDISC_CLI_H
#define CHANDISC_CLI_H

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chandisc/channels.h"

namespace chandisc {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitInputError = 2,
    kExitUnsupportedDimension = 3,
    kExitMisuse = 4,
};

/// Failure that maps onto an exit code; the message is already formatted for
/// standard error.
class CliError : public std::runtime_error {
   public:
    CliError(int exit_code, const std::string &message) : std::runtime_error(message), exit_code_(exit_code) {
    }
    int exit_code() const noexcept {
        return exit_code_;
    }

   private:
    int exit_code_;
};

/// One entry of the "channels" array of a channel-spec file.
///
/// Kinds: kraus {"ops": [matrix, ...]}, pauli {"q": [4 reals]},
/// gpc {"d": int, "q": [d^2 reals]}, named {"name": str, "param": real},
/// unitary {"matrix": matrix}, affine {"m": 3x3 reals, "c": [3 reals]}.
/// A matrix is a list of rows; an entry is [re, im] or a bare real.
struct ChannelSpec {
    std::string kind;
    size_t dim;
    /// Line of the entry in the source text (1-based).
    size_t line;
    /// Absent only for the affine kind.
    std::optional<KrausChannel> kraus;
    std::optional<GpcChannel> gpc;
    std::optional<ComplexMatrix> unitary;
    /// Present for qubit channels.
    std::optional<AffineChannel> affine;
};

struct SpecFile {
    std::string path;
    std::vector<ChannelSpec> channels;
    std::optional<double> p1;
    /// Lowercase hex SHA-256 of the raw file bytes.
    std::string sha256;
};

/// Parses spec-file text. Errors are CliError(kExitInputError) with messages
/// of the form "path:line: ...".
SpecFile parse_spec_text(const std::string &text, const std::string &path);
SpecFile load_spec_file(const std::string &path);

std::string sha256_hex(std::string_view bytes);

/// Runs the command line tool; args excludes the program name. Reports go to
/// out, diagnostics to err. Returns the exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace chandisc

#endif
