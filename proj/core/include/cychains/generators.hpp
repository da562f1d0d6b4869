#pragma once

#include "cychains/chainop.hpp"
#include "cychains/config.hpp"
#include "cychains/hochschild.hpp"

#include <random>
#include <string>

namespace cychains {

// deterministic per-identity, per-trial stream
std::mt19937_64 make_rng(uint64_t seed, const std::string& identity_id, uint64_t trial);

class Gen {
public:
    Gen(std::mt19937_64& rng, const SuiteConfig& cfg) : rng_(rng), cfg_(cfg) {}

    int uniform(int lo, int hi);
    Rational coefficient(); // small nonzero rational
    ExpVec exponent();      // within the window
    LaurentPoly poly(int max_terms = 3);
    LaurentPoly poly_nonconstant(int max_terms = 2);

    MultiVector multivector(int rank, int max_terms = 3);
    DiffForm form(int rank, int max_terms = 3);
    MultiVector multivector_mixed(int max_terms = 3);
    DiffForm form_mixed(int max_terms = 3);

    // homogeneous total degree (u counts +2): components of matching rank
    UMultiVector umultivector(int degree, int max_terms = 3);
    UDiffForm udiffform(int degree, int max_terms = 3);
    UVTop uvtop(const VolumeForm& vol, int degree, int max_terms = 3);

    // degrees that admit at least one (u power, rank) combination
    int umv_degree();
    int uform_degree();

    HochChain chain(int len, int max_terms = 2);
    UHochChain uchain(int degree, int max_terms = 2);

    MultiDiffOp cochain(int arity, int max_terms = 2, int max_order = 2, bool normalized = true);
    MultiDiffOp cochain_top(int arity, int max_terms = 2, int max_order = 2);
    DiffOp diffop(int max_order = 2, int max_terms = 2);
    EElement eelement(int arity, int form_rank, int max_terms = 2, int max_order = 2,
                      bool normalized = true);
    ChainOp chainop(int arity, int max_terms = 2, int max_order = 1);

    std::vector<int> permutation(int n);

private:
    std::mt19937_64& rng_;
    const SuiteConfig& cfg_;
};

} // namespace cychains
