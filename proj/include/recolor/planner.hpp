#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recolor/kernel.hpp"

namespace recolor {

struct TraceEntry {
    std::string lemma;
    std::vector<Vertex> vertices;
};

struct PlanOutcome {
    Plan plan;
    Colouring end;
    std::vector<TraceEntry> trace;
};

// A case of the block induction whose hypotheses did not hold for the
// chosen configuration. The induction retries with the next choice.
class PlanGap : public Error {
public:
    explicit PlanGap(const std::string& what) : Error(ErrorKind::domain, "planner gap: " + what) {}
};

struct GoodPair {
    Vertex centre = 0;
    Vertex w1 = 0;
    Vertex w2 = 0;
    bool very_good = false;
};

PlanOutcome plan_key_lemma(const Graph& g, const ListAssignment& L, const Colouring& alpha, const Colouring& beta);

PlanOutcome plan_clique(const Graph& g, const ListAssignment& L, const Colouring& alpha, const Colouring& beta);

// Vertices 0..n-1 are taken in cyclic order; colours must lie in {1,2,3}.
int winding_number(const Colouring& cycle_colouring);

// Cycles, paths, P3, subdivided claws and subdivided paws.
PlanOutcome plan_small_case(const Graph& g, const ListAssignment& L, const Colouring& alpha, const Colouring& beta);

std::optional<GoodPair> find_very_good_pair(const Graph& g, const Colouring& c, Vertex v);

// Lists are {1..Delta+1} on every vertex.
PlanOutcome plan_regular_two_connected(const Graph& g, const Colouring& alpha, const Colouring& beta);
// Same procedure for any identical lists of size Delta+1.
PlanOutcome plan_regular_two_connected(const Graph& g, const ListAssignment& L, const Colouring& alpha,
                                       const Colouring& beta);

PlanOutcome plan_two_connected(const Graph& g, const ListAssignment& L, const Colouring& alpha,
                               const Colouring& beta);

PlanOutcome plan_main(const Graph& g, const ListAssignment& L, const Colouring& alpha, const Colouring& beta);

int reconf_lower_bound_classes(int n);

}  // namespace recolor
