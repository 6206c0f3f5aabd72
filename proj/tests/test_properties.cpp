#include "doctest.h"
#include "properties.hpp"

using namespace gsm::test;

TEST_CASE("outcome probabilities sum to one") { CHECK(check_probability_conservation(1000) == ""); }

TEST_CASE("masks stay consistent on reachable states") { CHECK(check_mask_invariants(5) == ""); }

TEST_CASE("canonical form matches the brute-force minimal labeling") { CHECK(check_canonical_oracle(6) == ""); }

TEST_CASE("canonical form is invariant under relabeling") { CHECK(check_relabeling_invariance() == ""); }

TEST_CASE("canonization merges only isomorphic states") { CHECK(check_no_false_merges(5) == ""); }

TEST_CASE("relabeling counts") { CHECK(check_relabeling_counts() == ""); }
