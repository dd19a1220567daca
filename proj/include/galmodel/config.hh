#ifndef GALMODEL_CONFIG_HH
#define GALMODEL_CONFIG_HH

namespace galmodel {

/// user-visible caps for every semidecision in the pipeline
struct Budgets {
    int degree_bound = 6;          // membership / symmetrization searches
    long gb_pair_budget = 100000;  // Buchberger S-pair limit
    int factor_degree_cap = 24;    // univariate factorization over Q
    unsigned long seed = 0;        // randomized property suites only
};

} // namespace galmodel

#endif
