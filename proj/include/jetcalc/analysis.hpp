#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <jetcalc/blowup.hpp>
#include <jetcalc/coefficient_map.hpp>
#include <jetcalc/variety.hpp>

namespace jetcalc {

// Order of vanishing of the Jacobian determinant at a point. Zero means the
// map is a local isomorphism there; infinite means the determinant is the
// zero polynomial (the map is nowhere a local isomorphism).
struct JdValue {
    bool infinite = false;
    int order = 0;
};

JdValue jacobian_multiplicity(const PolyMap& h, const std::vector<Rational>& v);

// A codimension-one locus suspected of being contracted by the map.
struct DivisorCandidate {
    Ideal ideal;
    bool user_supplied = false;
};

// Candidate divisors read off the Jacobian determinant: variable factors from
// the monomial content, then axis-parallel linear factors found by
// specialization, verified symbolically and divided out exactly; a degree-one
// residual joins as well. An unfactored residual of higher degree is noted in
// `residual_note` — no multivariate factorization is attempted.
std::vector<DivisorCandidate> auto_candidates(const PolyMap& g, std::string* residual_note = nullptr);

struct DivisorReport {
    DivisorCandidate candidate;
    bool codimension_one = false;
    int image_dimension = -1; // dim of the closure of g(D)
    bool exceptional = false; // image_dimension <= arity - 2
    bool invariant = false;   // g(D) contained in D
    std::optional<bool> preimage_empty; // filled when a domain-side map is in play
    std::vector<std::string> notes;
};

// Auto candidates plus user candidates, each validated (codimension one),
// with the dimension of the image closure computed by elimination on the
// graph ideal. g must be an endomorphism of affine space. A residual note
// from extraction, if any, is appended to *notes.
std::vector<DivisorReport> exceptional_locus(const PolyMap& g,
                                             const std::vector<DivisorCandidate>& user,
                                             const Limits& limits = {},
                                             std::vector<std::string>* notes = nullptr);

// Every generator of the candidate's ideal pulls back into that ideal.
bool invariance_check(const PolyMap& g, const DivisorCandidate& d, const Limits& limits = {});

// Certifies that no point of x maps into the candidate locus: the ideal
// generated by I(x) and the pullback of the candidate's generators contains 1
// (over the rationals this rules out points over every field extension).
bool preimage_empty(const PolyMap& rho, const AffineVariety& x, const DivisorCandidate& d,
                    const Limits& limits = {});

// The square of maps under analysis: rho intertwines the endomorphism f of X
// with the endomorphism g of Y. All maps are given on ambient coordinates;
// the arrow conditions hold modulo the respective ideals and are validated by
// validate_instance.
struct EndoInstance {
    AffineVariety x;
    AffineVariety y;
    PolyMap rho;
    PolyMap f;
    PolyMap g;
    int s_max = 2;     // iteration budget for the dimension table
    int jet_order = 2; // largest jet order in the dimension table
    std::optional<RationalMap> f_inverse; // optional; verified symbolically
    std::optional<RationalMap> g_inverse;
};

void validate_instance(const EndoInstance& inst, const Limits& limits = {});

// rho composed with f minus g composed with rho vanishes modulo I(X).
bool commutativity_check(const EndoInstance& inst, const Limits& limits = {});

// inverse composed with the map is the identity modulo the given ideal, and
// no denominator vanishes identically modulo it.
bool rational_left_inverse_check(const PolyMap& map, const RationalMap& inverse,
                                 const Ideal& modulo, const Limits& limits = {});

// Generic rank of the order-k jet prolongation of psi.rho.f^s along X at the
// point, against the same for psi.g^s.rho. psi defaults to the identity when
// Y is the full ambient space; embedded Y requires an explicit psi. X must be
// smooth at the point (checked by the Jacobian rank of its generators).
struct ObstructionRow {
    int s = 0;
    int k = 0;
    int dim_f = -1;
    int dim_g = -1;
};

ObstructionRow obstruction_compare(const EndoInstance& inst, const std::vector<Rational>& point,
                                   int s, int k, const std::optional<PolyMap>& psi = {},
                                   const SampleParams& params = {}, const Limits& limits = {});

struct AnalysisReport {
    bool commutativity = false;
    std::vector<DivisorReport> divisors;
    std::vector<ObstructionRow> table;
    std::vector<std::string> notes;
    std::vector<std::string> errors; // attributed "phase: message" entries
    std::uint64_t seed = 0;
};

// Runs the whole pipeline: instance validation, commutativity, candidate
// extraction and per-candidate checks against g, preimage emptiness through
// rho, and the dimension table on the (s, k) grid at X's base point. Errors
// in one phase are recorded and do not stop the others. The report states
// certified facts only; it never concludes that a map is or is not an
// automorphism.
AnalysisReport analyze(const EndoInstance& inst,
                       const std::vector<DivisorCandidate>& user_candidates = {},
                       const SampleParams& params = {}, const Limits& limits = {});

// Stable text rendering (JSON, two-space indent, trailing newline). Identical
// report values render byte-identically.
std::string report_str(const AnalysisReport& report);

} // namespace jetcalc
