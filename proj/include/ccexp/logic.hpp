#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ccexp/dfa.hpp"

namespace ccexp {

class DiskCache;  // cache.hpp

// ---------------------------------------------------------------------------
// Terms: Presburger arithmetic over naturals. Scaling only by literal
// constants; differences are rewritten into additions during compilation
// (t1 - t2 = u becomes u + t2 = t1), which keeps semantics total over N.

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { Variable, Constant, Sum, Difference, Scale };

    Kind kind;
    std::string name;           // Variable
    std::uint64_t value = 0;    // Constant value, or Scale coefficient
    TermPtr lhs, rhs;           // Sum/Difference both, Scale rhs only

    static TermPtr var(std::string name);
    static TermPtr nat(std::uint64_t value);
    static TermPtr sum(TermPtr a, TermPtr b);
    static TermPtr diff(TermPtr a, TermPtr b);
    static TermPtr scale(std::uint64_t coefficient, TermPtr t);

    void collect_variables(std::set<std::string>& into) const;
    // canonical s-expression; drives content hashing and determinism checks
    std::string dump() const;
};

enum class Relation { Eq, Ne, Lt, Le, Gt, Ge };
std::string_view relation_symbol(Relation r);

// ---------------------------------------------------------------------------
// Formulas.

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind {
        Compare,      // t1 rel t2
        SeqEq,        // seq1[t1] = seq2[t2]
        SeqEqConst,   // seq1[t1] = letter
        Not, And, Or, Implies, Iff,
        Exists, Forall,
        Call          // $name(args)
    };

    Kind kind;
    Relation rel = Relation::Eq;
    TermPtr t1, t2;
    std::string seq1, seq2;     // sequence ids for SeqEq / SeqEqConst
    int letter = 0;             // SeqEqConst
    FormulaPtr f1, f2;
    std::vector<std::string> vars;   // quantified names
    std::string callee;
    std::vector<TermPtr> args;

    static FormulaPtr compare(TermPtr a, Relation r, TermPtr b);
    static FormulaPtr seq_eq(std::string seq1, TermPtr a, std::string seq2, TermPtr b);
    static FormulaPtr seq_eq_const(std::string seq, TermPtr a, int letter);
    static FormulaPtr negation(FormulaPtr f);
    static FormulaPtr conjunction(FormulaPtr a, FormulaPtr b);
    static FormulaPtr disjunction(FormulaPtr a, FormulaPtr b);
    static FormulaPtr implication(FormulaPtr a, FormulaPtr b);
    static FormulaPtr equivalence(FormulaPtr a, FormulaPtr b);
    static FormulaPtr exists(std::vector<std::string> vars, FormulaPtr f);
    static FormulaPtr forall(std::vector<std::string> vars, FormulaPtr f);
    static FormulaPtr call(std::string callee, std::vector<TermPtr> args);

    std::set<std::string> free_variables() const;
    std::string dump() const;
};

class CompileError : public std::runtime_error {
public:
    explicit CompileError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Stored predicates: name -> compiled automaton + track signature.

class PredicateStore {
public:
    struct Entry {
        Dfa dfa;                       // tracks are the signature, sorted
        std::string source_dump;       // formula dump it was compiled from
    };

    bool contains(const std::string& name) const { return entries_.count(name) != 0; }
    const Entry& at(const std::string& name) const;
    void insert(const std::string& name, Entry entry);  // duplicate name throws
    const std::map<std::string, Entry>& entries() const { return entries_; }
    // hash of all (name, signature, automaton) triples, part of cache keys
    std::string snapshot_hash() const;

private:
    std::map<std::string, Entry> entries_;
};

struct CompileOptions {
    DiskCache* cache = nullptr;  // reuse compiled predicates across runs
};

// Compiles f to a minimal zero-robust automaton over exactly its free
// variables (sorted). Strategy: flatten non-variable terms into fresh
// variables constrained by addition/scale/constant atoms, combine with
// product/complement, eliminate quantifiers by projection (forall as
// not-exists-not), then project the fresh variables.
Dfa compile(const FormulaPtr& f, const PredicateStore& store,
            const CompileOptions& options = {});

// Compiles and stores under `name`; the name must be unused.
void define(PredicateStore& store, const std::string& name, const FormulaPtr& f,
            const CompileOptions& options = {});

// f must be closed; true iff the compiled zero-track automaton accepts.
bool eval_closed(const FormulaPtr& f, const PredicateStore& store,
                 const CompileOptions& options = {});

// Compiler leaves, exposed for the hand-vs-compiler tests.
Dfa equality_automaton(const std::string& x, const std::string& y);
Dfa compare_automaton(const std::string& x, Relation rel, const std::string& y);
Dfa addition_automaton(const std::string& x, const std::string& y, const std::string& z);
Dfa constant_automaton(const std::string& x, std::uint64_t c);
Dfa scale_automaton(std::uint64_t c, const std::string& x, const std::string& y);
Dfa seq_eq_automaton(const std::string& seq1, const std::string& x,
                     const std::string& seq2, const std::string& y);
Dfa seq_eq_const_automaton(const std::string& seq, const std::string& x, int letter);

// FNV-1a over the formula dump and store snapshot; cache key for compiled
// predicates.
std::string formula_content_hash(const FormulaPtr& f, const PredicateStore& store);

}  // namespace ccexp
