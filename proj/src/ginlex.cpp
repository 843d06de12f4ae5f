#include "ginlex/curve.hpp"
#include "ginlex/partial_elim.hpp"
#include "ginlex/oracle.hpp"
#include "ginlex/quotient.hpp"

namespace ginlex {

template GroebnerBasis<PrimeField> buchberger<PrimeField>(const Ideal<PrimeField>&, TermOrder, EngineLimits);
template GroebnerBasis<RationalField> buchberger<RationalField>(const Ideal<RationalField>&, TermOrder, EngineLimits);
template Ideal<PrimeField> saturate<PrimeField>(const Ideal<PrimeField>&, const Ideal<PrimeField>&, EngineLimits, std::size_t);
template Ideal<RationalField> saturate<RationalField>(const Ideal<RationalField>&, const Ideal<RationalField>&, EngineLimits, std::size_t);
template std::uint64_t hilbert_value_oracle<PrimeField>(const Ideal<PrimeField>&, Exponent);
template std::uint64_t hilbert_value_oracle<RationalField>(const Ideal<RationalField>&, Exponent);
template GinResult<PrimeField> gin<PrimeField>(const Ideal<PrimeField>&, TermOrder, const GinOptions&);
template GinResult<RationalField> gin<RationalField>(const Ideal<RationalField>&, TermOrder, const GinOptions&);
template PartialElimLadder<PrimeField> partial_elim_ladder<PrimeField>(const Ideal<PrimeField>&, const GinOptions&);
template PartialElimLadder<RationalField> partial_elim_ladder<RationalField>(const Ideal<RationalField>&, const GinOptions&);
template CurveInvariants curve_invariants<PrimeField>(const Ideal<PrimeField>&, EngineLimits);
template CurveInvariants curve_invariants<RationalField>(const Ideal<RationalField>&, EngineLimits);

}  // namespace ginlex
