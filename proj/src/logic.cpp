#include "ccexp/logic.hpp"

#include <algorithm>
#include <cassert>

#include "ccexp/cache.hpp"
#include "ccexp/sequences.hpp"

namespace ccexp {

// ---------------------------------------------------------------------------
// Terms.

TermPtr Term::var(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Variable;
    t->name = std::move(name);
    return t;
}

TermPtr Term::nat(std::uint64_t value) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Constant;
    t->value = value;
    return t;
}

TermPtr Term::sum(TermPtr a, TermPtr b) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Sum;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
}

TermPtr Term::diff(TermPtr a, TermPtr b) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Difference;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
}

TermPtr Term::scale(std::uint64_t coefficient, TermPtr inner) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Scale;
    t->value = coefficient;
    t->rhs = std::move(inner);
    return t;
}

void Term::collect_variables(std::set<std::string>& into) const {
    switch (kind) {
        case Kind::Variable: into.insert(name); break;
        case Kind::Constant: break;
        case Kind::Sum:
        case Kind::Difference:
            lhs->collect_variables(into);
            rhs->collect_variables(into);
            break;
        case Kind::Scale: rhs->collect_variables(into); break;
    }
}

std::string Term::dump() const {
    switch (kind) {
        case Kind::Variable: return "(var " + name + ")";
        case Kind::Constant: return "(nat " + std::to_string(value) + ")";
        case Kind::Sum: return "(+ " + lhs->dump() + " " + rhs->dump() + ")";
        case Kind::Difference: return "(- " + lhs->dump() + " " + rhs->dump() + ")";
        case Kind::Scale:
            return "(* " + std::to_string(value) + " " + rhs->dump() + ")";
    }
    return "";
}

std::string_view relation_symbol(Relation r) {
    switch (r) {
        case Relation::Eq: return "=";
        case Relation::Ne: return "!=";
        case Relation::Lt: return "<";
        case Relation::Le: return "<=";
        case Relation::Gt: return ">";
        case Relation::Ge: return ">=";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Formulas.

namespace {

std::shared_ptr<Formula> make_formula(Formula::Kind kind) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    return f;
}

std::shared_ptr<Formula> binary(Formula::Kind kind, FormulaPtr a, FormulaPtr b) {
    auto f = make_formula(kind);
    f->f1 = std::move(a);
    f->f2 = std::move(b);
    return f;
}

}  // namespace

FormulaPtr Formula::compare(TermPtr a, Relation r, TermPtr b) {
    auto f = make_formula(Kind::Compare);
    f->rel = r;
    f->t1 = std::move(a);
    f->t2 = std::move(b);
    return f;
}

FormulaPtr Formula::seq_eq(std::string seq1, TermPtr a, std::string seq2, TermPtr b) {
    auto f = make_formula(Kind::SeqEq);
    f->seq1 = std::move(seq1);
    f->seq2 = std::move(seq2);
    f->t1 = std::move(a);
    f->t2 = std::move(b);
    return f;
}

FormulaPtr Formula::seq_eq_const(std::string seq, TermPtr a, int letter) {
    auto f = make_formula(Kind::SeqEqConst);
    f->seq1 = std::move(seq);
    f->t1 = std::move(a);
    f->letter = letter;
    return f;
}

FormulaPtr Formula::negation(FormulaPtr f1) {
    auto f = make_formula(Kind::Not);
    f->f1 = std::move(f1);
    return f;
}

FormulaPtr Formula::conjunction(FormulaPtr a, FormulaPtr b) {
    return binary(Kind::And, std::move(a), std::move(b));
}
FormulaPtr Formula::disjunction(FormulaPtr a, FormulaPtr b) {
    return binary(Kind::Or, std::move(a), std::move(b));
}
FormulaPtr Formula::implication(FormulaPtr a, FormulaPtr b) {
    return binary(Kind::Implies, std::move(a), std::move(b));
}
FormulaPtr Formula::equivalence(FormulaPtr a, FormulaPtr b) {
    return binary(Kind::Iff, std::move(a), std::move(b));
}

FormulaPtr Formula::exists(std::vector<std::string> vars, FormulaPtr body) {
    auto f = make_formula(Kind::Exists);
    f->vars = std::move(vars);
    f->f1 = std::move(body);
    return f;
}

FormulaPtr Formula::forall(std::vector<std::string> vars, FormulaPtr body) {
    auto f = make_formula(Kind::Forall);
    f->vars = std::move(vars);
    f->f1 = std::move(body);
    return f;
}

FormulaPtr Formula::call(std::string callee, std::vector<TermPtr> args) {
    auto f = make_formula(Kind::Call);
    f->callee = std::move(callee);
    f->args = std::move(args);
    return f;
}

std::set<std::string> Formula::free_variables() const {
    std::set<std::string> free;
    switch (kind) {
        case Kind::Compare:
        case Kind::SeqEq:
            t1->collect_variables(free);
            t2->collect_variables(free);
            break;
        case Kind::SeqEqConst: t1->collect_variables(free); break;
        case Kind::Not: return f1->free_variables();
        case Kind::And:
        case Kind::Or:
        case Kind::Implies:
        case Kind::Iff: {
            free = f1->free_variables();
            auto more = f2->free_variables();
            free.insert(more.begin(), more.end());
            break;
        }
        case Kind::Exists:
        case Kind::Forall: {
            free = f1->free_variables();
            for (const auto& v : vars) free.erase(v);
            break;
        }
        case Kind::Call:
            for (const auto& arg : args) arg->collect_variables(free);
            break;
    }
    return free;
}

std::string Formula::dump() const {
    switch (kind) {
        case Kind::Compare:
            return "(cmp " + std::string(relation_symbol(rel)) + " " + t1->dump() + " " +
                   t2->dump() + ")";
        case Kind::SeqEq:
            return "(seqeq " + seq1 + " " + t1->dump() + " " + seq2 + " " + t2->dump() + ")";
        case Kind::SeqEqConst:
            return "(seqeqc " + seq1 + " " + t1->dump() + " " + std::to_string(letter) + ")";
        case Kind::Not: return "(not " + f1->dump() + ")";
        case Kind::And: return "(and " + f1->dump() + " " + f2->dump() + ")";
        case Kind::Or: return "(or " + f1->dump() + " " + f2->dump() + ")";
        case Kind::Implies: return "(=> " + f1->dump() + " " + f2->dump() + ")";
        case Kind::Iff: return "(<=> " + f1->dump() + " " + f2->dump() + ")";
        case Kind::Exists:
        case Kind::Forall: {
            std::string out = kind == Kind::Exists ? "(E (" : "(A (";
            for (std::size_t i = 0; i < vars.size(); ++i)
                out += (i ? " " : "") + vars[i];
            return out + ") " + f1->dump() + ")";
        }
        case Kind::Call: {
            std::string out = "(call " + callee;
            for (const auto& arg : args) out += " " + arg->dump();
            return out + ")";
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// Atom automata. All are built over their (sorted) named tracks, minimized,
// and zero-robust; aliased names degenerate to the right constraints instead
// of failing.

namespace {

// positions of the given names inside the sorted track list
struct TrackLayout {
    std::vector<std::string> tracks;
    int position(const std::string& name) const {
        return int(std::find(tracks.begin(), tracks.end(), name) - tracks.begin());
    }
    int bit(int symbol, const std::string& name) const {
        int k = int(tracks.size());
        return symbol >> (k - 1 - position(name)) & 1;
    }
};

TrackLayout layout_of(std::initializer_list<std::string> names) {
    TrackLayout layout;
    layout.tracks.assign(names.begin(), names.end());
    std::sort(layout.tracks.begin(), layout.tracks.end());
    layout.tracks.erase(std::unique(layout.tracks.begin(), layout.tracks.end()),
                        layout.tracks.end());
    return layout;
}

}  // namespace

Dfa compare_automaton(const std::string& x, Relation rel, const std::string& y) {
    if (x == y) {
        bool truth = rel == Relation::Eq || rel == Relation::Le || rel == Relation::Ge;
        return Dfa::constant(truth, {x});
    }
    TrackLayout layout = layout_of({x, y});
    int nsym = 1 << layout.tracks.size();
    // 0: equal so far, 1: x < y decided, 2: x > y decided
    Dfa a;
    a.tracks = layout.tracks;
    a.next.resize(3 * nsym);
    auto accepting = [&](int state) {
        switch (rel) {
            case Relation::Eq: return state == 0;
            case Relation::Ne: return state != 0;
            case Relation::Lt: return state == 1;
            case Relation::Le: return state != 2;
            case Relation::Gt: return state == 2;
            case Relation::Ge: return state != 1;
        }
        return false;
    };
    for (int state = 0; state < 3; ++state) {
        a.accept.push_back(accepting(state) ? 1 : 0);
        for (int s = 0; s < nsym; ++s) {
            int bx = layout.bit(s, x), by = layout.bit(s, y);
            int target = state;
            if (state == 0 && bx != by) target = bx < by ? 1 : 2;
            a.next[state * nsym + s] = State(target);
        }
    }
    return minimize_dfa(a);
}

Dfa equality_automaton(const std::string& x, const std::string& y) {
    return compare_automaton(x, Relation::Eq, y);
}

Dfa constant_automaton(const std::string& x, std::uint64_t c) {
    std::vector<int> digits;
    for (int b = 63; b >= 0; --b)
        if (c >> b & 1 || !digits.empty()) digits.push_back(int(c >> b & 1));
    std::size_t len = digits.size();
    // states 0..len walk the digit string (state 0 loops on leading zeros),
    // last state is the accept, one extra state is the sink
    Dfa a;
    a.tracks = {x};
    std::size_t n = len + 2;
    State sink = State(len + 1);
    a.next.assign(n * 2, sink);
    a.accept.assign(n, 0);
    a.accept[len] = 1;
    a.next[0 * 2 + 0] = 0;  // leading zeros
    for (std::size_t j = 0; j < len; ++j)
        a.next[j * 2 + digits[j]] = State(j + 1);
    if (len > 0) a.next[len * 2 + 0] = sink;  // nothing may follow the numeral
    a.next[sink * 2 + 0] = sink;
    a.next[sink * 2 + 1] = sink;
    return minimize_dfa(a);
}

Dfa addition_automaton(const std::string& x, const std::string& y, const std::string& z) {
    if (x == y && y == z) return constant_automaton(x, 0);       // x + x = x
    if (x == z) return cylindrify(constant_automaton(y, 0), {x});  // x + y = x
    if (y == z) return cylindrify(constant_automaton(x, 0), {y});
    if (x == y) return scale_automaton(2, x, z);
    TrackLayout layout = layout_of({x, y, z});
    int nsym = 1 << layout.tracks.size();
    // states 0,1: how far the sum of the read prefixes of x and y trails the
    // read prefix of z; state 2 is the sink
    Dfa a;
    a.tracks = layout.tracks;
    a.next.resize(3 * nsym);
    a.accept = {1, 0, 0};
    for (int d = 0; d < 2; ++d)
        for (int s = 0; s < nsym; ++s) {
            int bx = layout.bit(s, x), by = layout.bit(s, y), bz = layout.bit(s, z);
            int nd = 2 * d + bz - bx - by;
            a.next[d * nsym + s] = (nd == 0 || nd == 1) ? State(nd) : State(2);
        }
    for (int s = 0; s < nsym; ++s) a.next[2 * nsym + s] = 2;
    return minimize_dfa(a);
}

Dfa scale_automaton(std::uint64_t c, const std::string& x, const std::string& y) {
    if (c > (1u << 20))
        throw CompileError("scale coefficient too large: " + std::to_string(c));
    if (c == 0) return cylindrify(constant_automaton(y, 0), {x});
    if (x == y) {
        if (c == 1) return Dfa::constant(true, {x});
        return constant_automaton(x, 0);  // c*x = x forces x = 0
    }
    if (c == 1) return equality_automaton(x, y);
    TrackLayout layout = layout_of({x, y});
    int nsym = 1 << layout.tracks.size();
    // state d < c: the read prefix of y exceeds c times the read prefix of x
    // by d; deficits >= c can never return to zero, so they share the sink
    std::size_t n = std::size_t(c) + 1;
    State sink = State(c);
    Dfa a;
    a.tracks = layout.tracks;
    a.next.resize(n * nsym);
    a.accept.assign(n, 0);
    a.accept[0] = 1;
    for (std::uint64_t d = 0; d < c; ++d)
        for (int s = 0; s < nsym; ++s) {
            int bx = layout.bit(s, x), by = layout.bit(s, y);
            std::int64_t nd = 2 * std::int64_t(d) + by - std::int64_t(c) * bx;
            a.next[d * nsym + s] =
                (nd >= 0 && nd < std::int64_t(c)) ? State(nd) : sink;
        }
    for (int s = 0; s < nsym; ++s) a.next[std::size_t(sink) * nsym + s] = sink;
    return minimize_dfa(a);
}

Dfa seq_eq_automaton(const std::string& seq1, const std::string& x,
                     const std::string& seq2, const std::string& y) {
    const Dfao& m1 = sequence_dfao(seq1);
    const Dfao& m2 = sequence_dfao(seq2);
    TrackLayout layout = layout_of({x, y});
    int nsym = 1 << layout.tracks.size();
    std::size_t n1 = m1.num_states();
    std::size_t n2 = m2.num_states();
    Dfa a;
    a.tracks = layout.tracks;
    a.next.resize(n1 * n2 * nsym);
    a.accept.resize(n1 * n2);
    for (std::size_t q1 = 0; q1 < n1; ++q1)
        for (std::size_t q2 = 0; q2 < n2; ++q2) {
            std::size_t id = q1 * n2 + q2;
            a.accept[id] = m1.output[q1] == m2.output[q2] ? 1 : 0;
            for (int s = 0; s < nsym; ++s) {
                State t1 = m1.step(State(q1), layout.bit(s, x));
                State t2 = m2.step(State(q2), layout.bit(s, y));
                a.next[id * nsym + s] = State(t1 * n2 + t2);
            }
        }
    return minimize_dfa(a);
}

Dfa seq_eq_const_automaton(const std::string& seq, const std::string& x, int letter) {
    const Dfao& m = sequence_dfao(seq);
    Dfa a;
    a.tracks = {x};
    a.next = m.next;
    a.accept.reserve(m.num_states());
    std::string wanted(1, char('0' + letter));
    for (const auto& out : m.output) a.accept.push_back(out == wanted ? 1 : 0);
    return minimize_dfa(a);
}

// ---------------------------------------------------------------------------
// The compiler.

namespace {

struct CompileContext {
    const PredicateStore* store = nullptr;
    std::uint64_t fresh_counter = 0;

    std::string fresh() { return "~" + std::to_string(fresh_counter++); }
};

// Flattens a term to a variable name; constraint automata and the fresh
// variables they introduced are appended to the caller's scope. The scope
// owner (and nobody else) projects exactly its own fresh variables.
struct Scope {
    std::vector<Dfa> constraints;
    std::vector<std::string> owned;
};

std::string flatten_term(const TermPtr& t, CompileContext& ctx, Scope& scope) {
    switch (t->kind) {
        case Term::Kind::Variable: return t->name;
        case Term::Kind::Constant: {
            std::string u = ctx.fresh();
            scope.constraints.push_back(constant_automaton(u, t->value));
            scope.owned.push_back(u);
            return u;
        }
        case Term::Kind::Sum: {
            std::string a = flatten_term(t->lhs, ctx, scope);
            std::string b = flatten_term(t->rhs, ctx, scope);
            std::string u = ctx.fresh();
            scope.constraints.push_back(addition_automaton(a, b, u));
            scope.owned.push_back(u);
            return u;
        }
        case Term::Kind::Difference: {
            // total rewrite: a - b = u becomes u + b = a, which is the
            // guarded reading the formulas rely on
            std::string a = flatten_term(t->lhs, ctx, scope);
            std::string b = flatten_term(t->rhs, ctx, scope);
            std::string u = ctx.fresh();
            scope.constraints.push_back(addition_automaton(u, b, a));
            scope.owned.push_back(u);
            return u;
        }
        case Term::Kind::Scale: {
            if (t->value == 1) return flatten_term(t->rhs, ctx, scope);
            std::string a = flatten_term(t->rhs, ctx, scope);
            std::string u = ctx.fresh();
            scope.constraints.push_back(scale_automaton(t->value, a, u));
            scope.owned.push_back(u);
            return u;
        }
    }
    throw CompileError("flatten_term: unreachable");
}

Dfa discharge(Dfa base, Scope& scope) {
    for (const Dfa& c : scope.constraints) base = product(base, c, BoolOp::And);
    for (const std::string& u : scope.owned) base = project(base, u);
    return base;
}

Dfa compile_node(const FormulaPtr& f, CompileContext& ctx);

Dfa compile_call(const Formula& f, CompileContext& ctx) {
    if (!ctx.store->contains(f.callee))
        throw CompileError("call to undefined predicate '" + f.callee + "'");
    const PredicateStore::Entry& entry = ctx.store->at(f.callee);
    const std::vector<std::string>& signature = entry.dfa.tracks;
    if (f.args.size() != signature.size())
        throw CompileError("predicate '" + f.callee + "' expects " +
                           std::to_string(signature.size()) + " arguments, got " +
                           std::to_string(f.args.size()));

    // fast path: distinct plain variables rename straight onto the signature
    bool plain = true;
    std::set<std::string> names;
    for (const auto& arg : f.args) {
        if (arg->kind != Term::Kind::Variable) { plain = false; break; }
        if (!names.insert(arg->name).second) { plain = false; break; }
    }
    if (plain) {
        std::vector<std::pair<std::string, std::string>> renames;
        for (std::size_t j = 0; j < signature.size(); ++j)
            renames.emplace_back(signature[j], f.args[j]->name);
        return rename_tracks(entry.dfa, renames);
    }

    // general path: move the predicate onto fresh tracks, then pin each
    // fresh track to its argument term and project the fresh tracks away
    Scope scope;
    std::vector<std::pair<std::string, std::string>> renames;
    std::vector<std::string> fresh_names;
    for (const auto& sig : signature) {
        std::string w = ctx.fresh();
        renames.emplace_back(sig, w);
        fresh_names.push_back(w);
        scope.owned.push_back(w);
    }
    Dfa result = rename_tracks(entry.dfa, renames);
    for (std::size_t j = 0; j < f.args.size(); ++j) {
        std::string v = flatten_term(f.args[j], ctx, scope);
        scope.constraints.push_back(equality_automaton(fresh_names[j], v));
    }
    return discharge(std::move(result), scope);
}

Dfa compile_node(const FormulaPtr& f, CompileContext& ctx) {
    switch (f->kind) {
        case Formula::Kind::Compare: {
            Scope scope;
            std::string a = flatten_term(f->t1, ctx, scope);
            std::string b = flatten_term(f->t2, ctx, scope);
            return discharge(compare_automaton(a, f->rel, b), scope);
        }
        case Formula::Kind::SeqEq: {
            Scope scope;
            std::string a = flatten_term(f->t1, ctx, scope);
            std::string b = flatten_term(f->t2, ctx, scope);
            return discharge(seq_eq_automaton(f->seq1, a, f->seq2, b), scope);
        }
        case Formula::Kind::SeqEqConst: {
            Scope scope;
            std::string a = flatten_term(f->t1, ctx, scope);
            return discharge(seq_eq_const_automaton(f->seq1, a, f->letter), scope);
        }
        case Formula::Kind::Not: return complement(compile_node(f->f1, ctx));
        case Formula::Kind::And:
            return product(compile_node(f->f1, ctx), compile_node(f->f2, ctx), BoolOp::And);
        case Formula::Kind::Or:
            return product(compile_node(f->f1, ctx), compile_node(f->f2, ctx), BoolOp::Or);
        case Formula::Kind::Implies:
            return product(compile_node(f->f1, ctx), compile_node(f->f2, ctx),
                           BoolOp::Implies);
        case Formula::Kind::Iff:
            return product(compile_node(f->f1, ctx), compile_node(f->f2, ctx), BoolOp::Iff);
        case Formula::Kind::Exists: {
            Dfa body = compile_node(f->f1, ctx);
            for (const auto& v : f->vars) {
                auto it = std::find(body.tracks.begin(), body.tracks.end(), v);
                if (it != body.tracks.end()) body = project(body, v);
            }
            return body;
        }
        case Formula::Kind::Forall: {
            Dfa body = complement(compile_node(f->f1, ctx));
            for (const auto& v : f->vars) {
                auto it = std::find(body.tracks.begin(), body.tracks.end(), v);
                if (it != body.tracks.end()) body = project(body, v);
            }
            return complement(body);
        }
        case Formula::Kind::Call: return compile_call(*f, ctx);
    }
    throw CompileError("compile: unreachable formula kind");
}

}  // namespace

// ---------------------------------------------------------------------------
// Store and entry points.

const PredicateStore::Entry& PredicateStore::at(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end())
        throw CompileError("unknown predicate '" + name + "'");
    return it->second;
}

void PredicateStore::insert(const std::string& name, Entry entry) {
    if (!entries_.emplace(name, std::move(entry)).second)
        throw CompileError("predicate '" + name + "' is already defined");
}

std::string PredicateStore::snapshot_hash() const {
    std::string blob;
    for (const auto& [name, entry] : entries_) {
        blob += name;
        blob += '\x1f';
        blob += entry.source_dump;
        blob += '\x1f';
        for (const auto& t : entry.dfa.tracks) {
            blob += t;
            blob += ',';
        }
        blob += '\x1e';
    }
    return fnv1a_hex(blob);
}

std::string formula_content_hash(const FormulaPtr& f, const PredicateStore& store) {
    return fnv1a_hex(f->dump() + "\x1f" + store.snapshot_hash());
}

Dfa compile(const FormulaPtr& f, const PredicateStore& store,
            const CompileOptions& options) {
    std::string hash;
    if (options.cache) {
        hash = formula_content_hash(f, store);
        if (auto hit = options.cache->load_predicate(hash)) return *hit;
    }
    CompileContext ctx;
    ctx.store = &store;
    Dfa result = compile_node(f, ctx);

    // sanity: the automaton covers exactly the free variables
    auto free = f->free_variables();
    std::vector<std::string> expected(free.begin(), free.end());
    if (result.tracks != expected)
        throw CompileError("compile: track set diverged from free variables");
    if (options.cache) options.cache->store_predicate(hash, result);
    return result;
}

void define(PredicateStore& store, const std::string& name, const FormulaPtr& f,
            const CompileOptions& options) {
    if (store.contains(name))
        throw CompileError("predicate '" + name + "' is already defined");
    PredicateStore::Entry entry;
    entry.dfa = compile(f, store, options);
    entry.source_dump = f->dump();
    store.insert(name, std::move(entry));
}

bool eval_closed(const FormulaPtr& f, const PredicateStore& store,
                 const CompileOptions& options) {
    if (!f->free_variables().empty())
        throw CompileError("eval: formula has free variables");
    Dfa result = compile(f, store, options);
    return result.accept[0] != 0;
}

}  // namespace ccexp
