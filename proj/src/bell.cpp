#include "lieclosed/bell.hpp"

namespace lieclosed {
template ExactRational bell(unsigned, unsigned, const CoefficientSequence<ExactRational>&);
template ExactRational complete_bell_sum(unsigned, const CoefficientSequence<ExactRational>&);
template ExactRational bell_oracle(unsigned, unsigned, const CoefficientSequence<ExactRational>&);
template Complex bell(unsigned, unsigned, const CoefficientSequence<Complex>&);
template Complex complete_bell_sum(unsigned, const CoefficientSequence<Complex>&);
template Complex bell_oracle(unsigned, unsigned, const CoefficientSequence<Complex>&);
}  // namespace lieclosed
