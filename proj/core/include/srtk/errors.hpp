#pragma once

#include <stdexcept>
#include <string>

namespace srtk {

enum class Errc {
    empty_input,
    vertex_out_of_range,
    length_mismatch,
    index_out_of_range,
    expansion_impossible,
    lsop_not_found,
    hypothesis_failed,
    unknown_builtin,
    betti_zero,
    invalid_argument,
    parse_error,
    internal_error,
};

/// Library-wide exception carrying a machine-readable error code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::empty_input: return "EmptyInput";
        case Errc::vertex_out_of_range: return "VertexOutOfRange";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::expansion_impossible: return "ExpansionImpossible";
        case Errc::lsop_not_found: return "LsopNotFound";
        case Errc::hypothesis_failed: return "HypothesisFailed";
        case Errc::unknown_builtin: return "UnknownBuiltin";
        case Errc::betti_zero: return "BettiZero";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::parse_error: return "ParseError";
        case Errc::internal_error: return "InternalError";
    }
    return "Error";
}

} // namespace srtk
