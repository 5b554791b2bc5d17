#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

struct Step {
    Vertex vertex = 0;
    Colour colour = 0;
    friend bool operator==(const Step&, const Step&) = default;
};

using Plan = std::vector<Step>;

struct ColouringStatus {
    bool proper = false;
    std::vector<Vertex> frozen_vertices;
    bool is_frozen = false;
};

ColouringStatus colouring_status(const Graph& g, const ListAssignment& L, const Colouring& c);

// Every colour of L(v) other than c(v) appears on N(v).
bool vertex_frozen(const Graph& g, const ListAssignment& L, const Colouring& c, Vertex v);
bool colouring_proper(const Graph& g, const ListAssignment& L, const Colouring& c);
bool colouring_unfrozen(const Graph& g, const ListAssignment& L, const Colouring& c);

enum class StepFault { vertex_out_of_range, colour_not_in_list, neighbour_conflict, no_op };

const char* to_string(StepFault f) noexcept;

class StepError : public Error {
public:
    StepError(StepFault fault, const std::string& what) : Error(ErrorKind::domain, what), fault_(fault) {}
    StepFault fault() const noexcept { return fault_; }

private:
    StepFault fault_;
};

// Throws StepError without touching c.
Colouring apply_step(const Graph& g, const ListAssignment& L, const Colouring& c, Step s);
// In-place variant used on hot paths.
void apply_step_inplace(const Graph& g, const ListAssignment& L, Colouring& c, Step s);

struct Verification {
    bool ok = false;
    Colouring end;
    std::optional<std::size_t> failing_index;
    std::string reason;
};

Verification verify_plan(const Graph& g, const ListAssignment& L, const Colouring& start, const Plan& plan);

struct Restriction {
    Graph graph;
    ListAssignment lists;
    Colouring colouring;
    // Sub-vertex i corresponds to parent vertex to_parent[i].
    std::vector<Vertex> to_parent;
};

// Lists lose the colours used by c on neighbours outside W.
Restriction restrict(const Graph& g, const ListAssignment& L, const Colouring& c, std::span<const Vertex> W);
Plan lift_plan(const Restriction& r, const Plan& plan);
// Restriction of an arbitrary colouring of the parent onto the sub-instance.
Colouring project(const Restriction& r, const Colouring& parent);

// Inverse plan: replaying it from the end of `plan` returns to `start`.
Plan reverse_plan(const Colouring& start, const Plan& plan);

// Incremental plan builder. Every recorded step is validated.
class Walker {
public:
    Walker(const Graph& g, const ListAssignment& L, Colouring start);

    const Graph& graph() const noexcept { return *g_; }
    const ListAssignment& lists() const noexcept { return *L_; }
    const Colouring& colouring() const noexcept { return c_; }
    Colour operator[](Vertex v) const { return c_[v]; }
    const Plan& plan() const noexcept { return plan_; }
    Plan take() { return std::move(plan_); }

    bool frozen(Vertex v) const { return vertex_frozen(*g_, *L_, c_, v); }
    bool available(Vertex v, Colour col) const;
    // Least colour of L(v) absent from N(v), different from c(v) and from `avoid`.
    std::optional<Colour> least_free(Vertex v, std::optional<Colour> avoid = std::nullopt) const;

    void move(Vertex v, Colour col);
    // Recolour v with its least free colour. Throws when v is frozen.
    Colour recolour_any(Vertex v, std::optional<Colour> avoid = std::nullopt);
    // Replays `p` (already expressed in this instance's ids).
    void append(const Plan& p);

private:
    const Graph* g_;
    const ListAssignment* L_;
    Colouring c_;
    Plan plan_;
};

// Recolour along `path` until its last vertex is unfrozen.
Plan push_unfreeze(const Graph& g, const ListAssignment& L, const Colouring& c, std::span<const Vertex> path);
// Same push rule on any walk whose consecutive vertices are adjacent.
void push_along(Walker& wk, std::span<const Vertex> path);

struct ClearResult {
    Plan plan;
    bool achieved = false;
    std::optional<Vertex> blocker;
};

ClearResult clear_bad_neighbours(const Graph& g, const ListAssignment& L, const Colouring& c, Vertex w,
                                 Colour target);

// Reach a colouring with w coloured target while v (surplus >= 2) stays unfrozen.
Plan fix_leaf(const Graph& g, const ListAssignment& L, const Colouring& c, Vertex v, Vertex w, Colour target);

}  // namespace recolor
