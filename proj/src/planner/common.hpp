#pragma once

// Shared machinery for the planners. Every procedure takes a start and a
// target colouring of the same instance and returns a plan between them.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "recolor/planner.hpp"

namespace recolor::detail {

constexpr Colour kNone = -1;

struct Ctx {
    std::vector<TraceEntry>* trace = nullptr;
    // Local vertex id -> id in the top-level instance.
    std::vector<Vertex> ids;
    int depth = 0;

    static Ctx root(std::vector<TraceEntry>& t, int n);
    Ctx sub(std::span<const Vertex> to_parent) const;
    void note(std::string lemma, std::span<const Vertex> local) const;
    void note(std::string lemma, std::initializer_list<Vertex> local) const;
    // Trace length, for discarding the entries of an abandoned attempt.
    std::size_t mark() const { return trace ? trace->size() : 0; }
    void rewind(std::size_t m) const {
        if (trace) trace->resize(m);
    }
};

using Solver = std::function<Plan(const Graph&, const ListAssignment&, const Colouring&, const Colouring&, Ctx&)>;

std::string vname(Vertex v);

// Apply steps without validation (callers replay validated plans).
Colouring replay(Colouring c, const Plan& p);
void append(Plan& dst, const Plan& src);
// a -> gamma and b -> gamma combine into a -> b.
Plan meet(const Plan& a_to_gamma, const Colouring& b, const Plan& b_to_gamma);

std::vector<Vertex> all_vertices(int n);
std::vector<Vertex> minus(int n, std::span<const Vertex> removed);
bool is_unfrozen(const Graph& g, const ListAssignment& L, const Colouring& c);
bool has_surplus_two(const Graph& g, const ListAssignment& L);
int union_size(const ListAssignment& L, std::span<const Vertex> W);

// Greedy in ascending id: least colour of L(v) not used on coloured neighbours.
// Throws PlanGap if some vertex cannot be coloured.
Colouring extend(const Graph& g, const ListAssignment& L, Colouring partial);

// Plan making v unfrozen by pushing from the nearest unfrozen vertex.
Plan unfreeze_at(const Graph& g, const ListAssignment& L, const Colouring& c, Vertex v);

// Least colour of a that is missing from b.
std::optional<Colour> least_outside(std::span<const Colour> a, std::span<const Colour> b);

// Recolour `mover` with the first free colour that leaves `target` unfrozen,
// falling back to the least free colour. Returns whether target is unfrozen.
bool free_up(Walker& wk, Vertex mover, Vertex target);

// Restrict to W using `cur`, project `target`, solve, lift.
Plan solve_on(const Graph& g, const ListAssignment& L, const Colouring& cur, std::span<const Vertex> W,
              const Colouring& target, const Ctx& ctx, const Solver& solve);

Plan key_on(const Graph& g, const ListAssignment& L, const Colouring& cur, std::span<const Vertex> W,
           const Colouring& target, const Ctx& ctx);
Plan route_on(const Graph& g, const ListAssignment& L, const Colouring& cur, std::span<const Vertex> W,
             const Colouring& target, const Ctx& ctx);

// Key Lemma on each component; every component needs a surplus-2 vertex.
Plan key_lemma_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx);
// Key Lemma on G - {w1, w2}; a and b agree on w1 and w2.
Plan twomatch(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Vertex w1, Vertex w2,
              const Ctx& ctx);

// Breadth-first search over recolourings of the window only; the rest stays
// fixed. Used where a case is settled by inspecting a handful of states.
Plan local_search(const Graph& g, const ListAssignment& L, const Colouring& cur, std::span<const Vertex> window,
                  const std::function<bool(const Colouring&)>& goal, const Ctx& ctx, const std::string& why);

// First choice of colours for `free` (lexicographic over list order) that is
// proper with the fixed part of `base` and satisfies `accept`.
std::optional<Colouring> first_completion(const Graph& g, const ListAssignment& L, const Colouring& base,
                                          std::span<const Vertex> free,
                                          const std::function<bool(const Colouring&)>& accept);

// Checks the plan reaches b and packages the outcome.
PlanOutcome finish(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Plan plan,
                   std::vector<TraceEntry> trace);
// Shared input validation for the public entry points.
void require_instance(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b);
void require_one_plus(const Graph& g, const ListAssignment& L);

// Dispatcher over every procedure; a and b are unfrozen or equal.
Plan route(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx);

Plan clique_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx);
Plan cycle_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx);
Plan path_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx);
Plan p3_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx);
Plan claw_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx);
Plan paw_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx);
Plan two_connected_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx);
Plan regular_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx);
Plan blocks_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx);

// Shape tests used by the dispatcher.
struct ClawShape {
    Vertex centre;
    Vertex w1, w2, w3;
    std::vector<Vertex> tail;  // centre, w3, ... , leaf
};
struct PawShape {
    Vertex centre;
    Vertex w1, w2, w3;
    std::vector<Vertex> tail;
};
std::optional<ClawShape> as_subdivided_claw(const Graph& g);
std::optional<PawShape> as_subdivided_paw(const Graph& g);
// Vertex order of a path or cycle starting at its least end (or least vertex).
std::vector<Vertex> walk_order(const Graph& g);
std::optional<std::pair<Vertex, Vertex>> two_connected_edge(const Graph& g, const ListAssignment& L);

}  // namespace recolor::detail
