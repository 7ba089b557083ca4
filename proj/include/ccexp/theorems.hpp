#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccexp/cache.hpp"
#include "ccexp/config.hpp"
#include "ccexp/dfa.hpp"
#include "ccexp/dfao.hpp"
#include "ccexp/logic.hpp"
#include "ccexp/rational.hpp"

namespace ccexp {

// The four exponent catalogs. S: exponents realized by prefixes; U: by
// factors; T: least circular exponents per length; V: greatest.
struct ExponentCatalog {
    static const std::vector<Rational>& prefix_set();  // S
    static const std::vector<Rational>& factor_set();  // U
    static const std::vector<Rational>& least_set();   // T
    static const std::vector<Rational>& greatest_set();// V
};

// 12-bit set encoding over U in increasing order: the most significant of the
// 12 bits stands for exponent 1, the least significant for exponent 4.
struct AceEncoding {
    static std::uint32_t bit_for(const Rational& exponent);  // single-bit mask
    static std::uint32_t mask_of(const std::vector<Rational>& exponents);
    static std::vector<Rational> set_of(std::uint32_t mask);
};

struct TheoremReport {
    std::string name;
    enum class Outcome { True, False, Built };
    Outcome outcome = Outcome::Built;
    std::map<std::string, std::size_t> state_counts;
    // per tracked predicate: the first accepted values (tuples flattened)
    std::map<std::string, std::vector<std::vector<std::uint64_t>>> first_accepted;
    std::map<std::string, std::string> extra;  // e.g. distinct_outputs
    double elapsed_ms = 0.0;
    std::vector<std::string> artifacts;  // names stored in the cache
    std::optional<std::vector<std::uint64_t>> counterexample;

    // theorem <name> result=<true|false|built> states=<k> ... elapsed_ms=<t>
    // plus one "states <automaton>: <k>" and "first <pred>: ..." line each
    std::string text() const;
};

class TheoremError : public std::runtime_error {
public:
    TheoremError(const std::string& what, std::vector<std::uint64_t> witness_ = {})
        : std::runtime_error(what), witness(std::move(witness_)) {}
    std::vector<std::uint64_t> witness;
};

struct PredicateTriple {
    Dfa ge, gt, eq;
};

// Builds and caches every named automaton of the development for one
// sequence. All results are canonical, so cached and fresh builds are
// byte-identical.
class TheoremSession {
public:
    explicit TheoremSession(Config config);

    const Config& config() const { return config_; }
    DiskCache& cache() { return cache_; }

    // crep(i,m,n,p,s) for the active sequence
    const Dfa& crep();

    PredicateTriple build_pref(const Rational& e);           // over n
    PredicateTriple build_fac(const Rational& e);            // over (n, s)
    std::pair<Dfa, Dfa> build_fac_small(const Rational& e);  // fac, facsmall over n
    Dfa build_fac_large(const Rational& e);                  // over n

    Dfao build_prefix_dfao();   // 29 states
    Dfao build_factor_dfao();   // 204 states
    Dfao build_lcce_dfao();     // 25 states
    Dfao build_gcce_dfao();     // 9 states
    Dfao build_ace_dfao();      // 49 states, 31 distinct nonzero masks

    static const std::vector<std::string>& theorem_names();
    static bool is_long_running(const std::string& name);  // pf_a..pf_e
    TheoremReport run(const std::string& name);

    // least accepted (n, s): least n with some s accepted, then least such s
    std::pair<std::uint64_t, std::uint64_t> first_occurrence(const Dfa& ns_dfa);

private:
    Dfa compile_cached(const FormulaPtr& f);
    Dfa named_dfa(const std::string& name, const std::function<Dfa()>& build);
    Dfao named_dfao(const std::string& name, const std::function<Dfao()>& build);
    std::string decorate(const std::string& base) const;  // pf- prefix for pf runs
    Dfa domain_n_ge_1();
    bool eval_text(const std::string& text);
    [[noreturn]] void fail_eval(const std::string& name, const std::string& witness_text);
    void run_testpref(TheoremReport& report);
    void run_testfac(TheoremReport& report);
    void run_smallfactest(TheoremReport& report);
    void run_largefactest(TheoremReport& report);
    void run_prop1(TheoremReport& report);
    void run_dfao(TheoremReport& report);

    Config config_;
    DiskCache cache_;
    PredicateStore store_;
    std::optional<Dfa> crep_;
};

// suffix for predicate names: 7/3 -> "73", 2/1 -> "21", 10/3 -> "103"
std::string exponent_tag(const Rational& e);

}  // namespace ccexp
