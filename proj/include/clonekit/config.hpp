#pragma once

#include <cstddef>

#include "clonekit/error.hpp"

namespace clonekit {

// Caps and budgets shared across the toolkit. arity_cap <= 6 keeps every
// truth table inside one machine word; degree_cap <= arity_cap - 1 keeps
// every threshold base constructible.
struct config {
    int arity_cap = 6;
    int degree_cap = 5;
    std::size_t closure_budget = 65536;
    int brute_var_cap = 24;
    int modal_depth_bound = 4;
    int modal_model_bound = 6;

    void validate() const {
        expect(arity_cap >= 1 && arity_cap <= 6, errc::bad_input,
               "arity_cap must be in 1..6");
        expect(degree_cap >= 2 && degree_cap <= arity_cap - 1, errc::bad_input,
               "degree_cap must be in 2..arity_cap-1");
        expect(closure_budget >= 4, errc::bad_input, "closure_budget too small");
        expect(brute_var_cap >= 1 && brute_var_cap <= 30, errc::bad_input,
               "brute_var_cap must be in 1..30");
        expect(modal_depth_bound >= 1, errc::bad_input, "modal_depth_bound must be positive");
        expect(modal_model_bound >= 1, errc::bad_input, "modal_model_bound must be positive");
    }
};

inline const config& default_config() {
    static const config cfg{};
    return cfg;
}

} // namespace clonekit
