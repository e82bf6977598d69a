#ifndef DRCALC_ORACLE_HPP
#define DRCALC_ORACLE_HPP

#include <functional>
#include <stdexcept>
#include <string>

#include "drcalc/decimal_real.hpp"
#include "drcalc/expr.hpp"
#include "drcalc/interval.hpp"

namespace drcalc {

// Reference implementation on rational intervals, deliberately disjoint
// from the digit-scanning arithmetic: constants come from their classical
// series (pi from the Machin formula), operations from outward-rounded
// interval arithmetic. Used to cross-check every digit the streaming side
// emits.

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The expression lies outside the oracle's continuous fragment (digit
// interleaving is not interval-computable).
class OracleUnsupported : public OracleError {
 public:
  using OracleError::OracleError;
};

// A value the oracle can refine on demand: refine(s) has width at most
// 10^-s, and later calls return subsets of earlier ones.
struct IntervalReal {
  std::function<RationalInterval(int)> refine;
};

// Nested refinement chain for an expression. Throws OracleUnsupported for
// pair(...); division whose divisor still straddles zero after the
// refinement cap raises OracleError from refine.
IntervalReal interval_real(ExprPtr e);

// One-shot enclosure with width at most 10^-scale.
RationalInterval interval_eval(const Expr& e, int scale);

enum class CertifyStatus { Certified, Mismatch, Inconclusive };

struct CertifyResult {
  CertifyStatus status = CertifyStatus::Inconclusive;
  int position = -1;  // first refuted digit position when status == Mismatch
};

// Certified when the oracle enclosure, refined to scale k + scale_guard and
// deeper if needed, fits inside [truncation(x,k), truncation(x,k) + 10^-k].
// Mismatch reports the first position whose digit cell the oracle excludes.
// Inconclusive means the enclosure kept straddling a cell edge; no digit was
// refuted.
CertifyResult certify_digits(const DecimalReal& x, const IntervalReal& oracle, int k,
                             int scale_guard = 2);

struct SmallCheckReport {
  long pairs_checked = 0;
  long triples_checked = 0;
  long counterexamples = 0;
  std::string first_counterexample;  // empty when everything held
};

// Brute force over every terminating value with the given scale and
// integer-part bounds: digit agreement of +, -, *, / with independent
// rational arithmetic on all pairs, and commutativity, associativity,
// distributivity, identities and inverses. Triples run on the scale-1
// subgrid to keep the enumeration exhaustive yet affordable.
SmallCheckReport exhaustive_small_check(int max_scale, int max_int);

}  // namespace drcalc

#endif
