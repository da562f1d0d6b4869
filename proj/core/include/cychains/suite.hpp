#pragma once

#include "cychains/config.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cychains {

struct TrialOutcome {
    bool pass = true;
    std::string counterexample; // minimal failing inputs, empty iff pass
    std::string note;           // recorded findings (pinned signs etc.)
    int arity = -1;             // residual metadata, when meaningful
    int u_order = -1;
    int residual_terms = 0;
};

struct Identity {
    std::string id;
    std::string group;
    std::function<TrialOutcome(const SuiteConfig&, uint64_t trial)> run;
    int trials_override = 0; // 0: use the configured trial count
    bool control = false;    // planted defect, expected to fail
};

struct IdentityReport {
    std::string id;
    std::string group;
    bool pass = true;
    bool control = false;
    int trials = 0;
    std::string counterexample;
    std::string note;
    int arity = -1;
    int u_order = -1;
    int residual_terms = 0;
    long elapsed_ms = 0;
};

struct RankRow {
    int d = 0, c = 0, p = 0, dim_cohomology = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<IdentityReport> identities;
    std::vector<RankRow> ranks;

    bool pass() const {
        for (const auto& r : identities)
            if (!r.pass) return false;
        return true;
    }
};

class SuiteRegistry {
public:
    static SuiteRegistry& instance();
    void add(const std::string& suite, Identity ident);
    std::vector<std::string> suite_names() const;
    const std::vector<Identity>* find(const std::string& suite) const;

private:
    std::map<std::string, std::vector<Identity>> suites_;
    std::vector<std::string> order_;
};

// registers every identity; idempotent
void register_all_suites();

// runs one suite (or "all"); throws std::invalid_argument on unknown names
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

std::string report_text(const SuiteReport& rep, const SuiteConfig& cfg);
std::string report_json(const SuiteReport& rep, const SuiteConfig& cfg);

// exact rank table of the symbol complex for the configured dimensions
std::vector<RankRow> koszul_rank_rows(const SuiteConfig& cfg);

// ---- property-check plumbing with greedy term-dropping shrink ----

namespace shrink_detail {

template <class Check, class Tuple, size_t... Is>
bool call_check(const Check& c, const Tuple& t, std::index_sequence<Is...>) {
    return c(std::get<Is>(t).second...);
}

template <class F, size_t... Is>
void for_each_index(F&& f, std::index_sequence<Is...>) {
    (f(std::integral_constant<size_t, Is>{}), ...);
}

} // namespace shrink_detail

// check(...inputs) returns true when the identity holds. On failure the
// inputs are greedily shrunk by dropping terms while the failure persists.
template <class Check, class... Inputs>
TrialOutcome check_with_shrink(const Check& check, std::pair<const char*, Inputs>... named) {
    auto inputs = std::make_tuple(named...);
    constexpr size_t N = sizeof...(Inputs);
    auto seq = std::make_index_sequence<N>{};
    auto call = [&](const auto& tup) { return shrink_detail::call_check(check, tup, seq); };
    if (call(inputs)) return TrialOutcome{};

    bool improved = true;
    while (improved) {
        improved = false;
        shrink_detail::for_each_index(
            [&](auto idx) {
                if (improved) return;
                auto& item = std::get<idx()>(inputs).second;
                size_t n = item.term_count();
                for (size_t k = 0; k < n; ++k) {
                    auto candidate = inputs;
                    std::get<idx()>(candidate).second = item.without_term(k);
                    if (!call(candidate)) {
                        inputs = candidate;
                        improved = true;
                        return;
                    }
                }
            },
            seq);
    }

    TrialOutcome out;
    out.pass = false;
    std::string desc;
    shrink_detail::for_each_index(
        [&](auto idx) {
            if (!desc.empty()) desc += "; ";
            desc += std::get<idx()>(inputs).first;
            desc += " = ";
            desc += std::get<idx()>(inputs).second.str();
        },
        seq);
    out.counterexample = desc;
    return out;
}

} // namespace cychains
