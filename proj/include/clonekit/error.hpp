#pragma once

#include <stdexcept>
#include <string>

namespace clonekit {

enum class errc {
    arity_out_of_range,
    table_length_mismatch,
    unknown_name,
    bad_threshold_params,
    arity_mismatch,
    budget_exceeded,
    degree_cap_exceeded,
    internal_inconsistency,
    syntax_error,
    undeclared_connective,
    unbound_variable,
    too_many_variables,
    unsupported_logic,
    bad_modal_set,
    type_c_unsupported,
    modal_set_mismatch,
    unknown_world,
    kind_mismatch,
    fragment_not_teachable,
    prop_cap_exceeded,
    not_learnable,
    oracle_inconsistent,
    inconsistent_examples,
    not_in_fragment,
    not_in_source_fragment,
    bound_too_small,
    bad_input,
};

// Stable code strings; these appear verbatim in CLI JSON output.
inline const char* errc_name(errc c) {
    switch (c) {
        case errc::arity_out_of_range:      return "ArityOutOfRange";
        case errc::table_length_mismatch:   return "TableLengthMismatch";
        case errc::unknown_name:            return "UnknownName";
        case errc::bad_threshold_params:    return "BadThresholdParams";
        case errc::arity_mismatch:          return "ArityMismatch";
        case errc::budget_exceeded:         return "BudgetExceeded";
        case errc::degree_cap_exceeded:     return "DegreeCapExceeded";
        case errc::internal_inconsistency:  return "InternalInconsistency";
        case errc::syntax_error:            return "SyntaxError";
        case errc::undeclared_connective:   return "UndeclaredConnective";
        case errc::unbound_variable:        return "UnboundVariable";
        case errc::too_many_variables:      return "TooManyVariables";
        case errc::unsupported_logic:       return "UnsupportedLogic";
        case errc::bad_modal_set:           return "BadModalSet";
        case errc::type_c_unsupported:      return "TypeCUnsupported";
        case errc::modal_set_mismatch:      return "ModalSetMismatch";
        case errc::unknown_world:           return "UnknownWorld";
        case errc::kind_mismatch:           return "KindMismatch";
        case errc::fragment_not_teachable:  return "FragmentNotTeachable";
        case errc::prop_cap_exceeded:       return "PropCapExceeded";
        case errc::not_learnable:           return "NotLearnable";
        case errc::oracle_inconsistent:     return "OracleInconsistent";
        case errc::inconsistent_examples:   return "Inconsistent";
        case errc::not_in_fragment:         return "NotInFragment";
        case errc::not_in_source_fragment:  return "NotInSourceFragment";
        case errc::bound_too_small:         return "BoundTooSmall";
        case errc::bad_input:               return "BadInput";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void expect(bool ok, errc c, const std::string& msg) {
    if (!ok) fail(c, msg);
}

} // namespace clonekit
