#include "conradlab/lfraction.hpp"

namespace conradlab {

std::string lf_str(const LFractionT<Int>& a) { return rat_str(lf_value(a)); }

}  // namespace conradlab
