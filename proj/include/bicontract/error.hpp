#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicontract {

enum class Errc {
    invalid_edge,
    invalid_vertex,
    invalid_coloring,
    invalid_terminals,
    invalid_argument,
    invalid_decomposition,
    precondition_violated,
    parse_error,
    budget_exceeded,
    dichotomy_failure,
    candidate_invalid,
    not_found,
    unsound_deletion,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace bicontract
