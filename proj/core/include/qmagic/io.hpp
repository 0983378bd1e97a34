#pragma once

// JSON serialization. State schema: {"d":int,"N":int,"amplitudes":[[re,im],...]}.
// Operators use "matrix": row-major [[re,im],...] with "rows" and "cols".

#include <string>
#include <string_view>

#include "qmagic/measures.hpp"
#include "qmagic/operators.hpp"
#include "qmagic/verify.hpp"
#include "qmagic/words.hpp"

namespace qmagic {

// Parse failures throw parse_error with the byte offset in the message.
std::string to_json(const PureState& psi);
PureState state_from_json(std::string_view text);

std::string to_json(const DenseOperator& op);
DenseOperator operator_from_json(std::string_view text);

std::string to_json(const CliffordWord& w, const PrimeDim& dims);
std::string to_json(const MeasureReport& r);
std::string to_json(const VerifyReport& r);

}  // namespace qmagic
