#include "addcomb/error.hpp"

namespace addcomb {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::malformed_description: return "MalformedDescription";
    case ErrorCode::non_associative_table: return "NonAssociativeTable";
    case ErrorCode::element_ambient_mismatch: return "ElementAmbientMismatch";
    case ErrorCode::non_cancellative_ambiguity: return "NonCancellativeAmbiguity";
    case ErrorCode::ambient_mismatch: return "AmbientMismatch";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::empty_set: return "EmptySet";
    case ErrorCode::not_a_unit: return "NotAUnit";
    case ErrorCode::no_witness: return "NoWitness";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::wrong_ambient: return "WrongAmbient";
    case ErrorCode::spec_invalid: return "SpecInvalid";
    case ErrorCode::ceiling_exceeded: return "CeilingExceeded";
    case ErrorCode::malformed_instance: return "MalformedInstance";
  }
  return "Unknown";
}

NonAssociativeTable::NonAssociativeTable(std::array<std::size_t, 3> triple)
    : Error(ErrorCode::non_associative_table,
            "(" + std::to_string(triple[0]) + " + " + std::to_string(triple[1]) +
                ") + " + std::to_string(triple[2]) + " != " +
                std::to_string(triple[0]) + " + (" + std::to_string(triple[1]) +
                " + " + std::to_string(triple[2]) + ")"),
      triple_(triple) {}

}  // namespace addcomb
