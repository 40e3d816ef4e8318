#pragma once

#include "splinedim/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace splinedim::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSizeGuard = 3;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw exactla::FormatError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline cli::Format parse_format(const std::string& name) {
    if (name == "tsv") return cli::Format::Tsv;
    if (name == "json") return cli::Format::Json;
    throw exactla::FormatError("unknown format '" + name + "'");
}

/// Shared wrapper: maps parse/IO problems to exit 2, size-guard refusals to
/// exit 3, verification failures to exit 1.
template <typename Fn>
int run_cli(CLI::App& app, int argc, char** argv, Fn&& body) {
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }
    try {
        return body();
    } catch (const cli::SizeGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSizeGuard;
    } catch (const splinecore::TriangulationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const exactla::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFail;
    }
}

} // namespace splinedim::tools
