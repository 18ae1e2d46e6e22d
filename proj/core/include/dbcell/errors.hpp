#ifndef DBCELL_ERRORS_HPP
#define DBCELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dbcell {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define DBCELL_DEFINE_ERROR(Name)                                    \
  struct Name : Error {                                              \
    explicit Name(const std::string& what = #Name) : Error(what) {}  \
  }

// root data
DBCELL_DEFINE_ERROR(NotGeneralizedCartan);
DBCELL_DEFINE_ERROR(NotSymmetrizable);
DBCELL_DEFINE_ERROR(NotFiniteType);
DBCELL_DEFINE_ERROR(IndexOutOfRange);
DBCELL_DEFINE_ERROR(NotReduced);
DBCELL_DEFINE_ERROR(NotReducedSubword);

// seeds
DBCELL_DEFINE_ERROR(FrozenVertex);
DBCELL_DEFINE_ERROR(NotAnIsomorphism);
DBCELL_DEFINE_ERROR(IntegrityError);
DBCELL_DEFINE_ERROR(UnknownVertex);

// symbolic functions
DBCELL_DEFINE_ERROR(DivisionByZero);
DBCELL_DEFINE_ERROR(UndefinedVariable);
DBCELL_DEFINE_ERROR(PoleAtSubstitution);
DBCELL_DEFINE_ERROR(ZeroFunction);
DBCELL_DEFINE_ERROR(ParseError);

// cluster charts
DBCELL_DEFINE_ERROR(NonIntegerExponent);
DBCELL_DEFINE_ERROR(UnknownVariable);

// tropical
DBCELL_DEFINE_ERROR(NegativeConstant);

// moves / DT engine
DBCELL_DEFINE_ERROR(MoveNotApplicable);
DBCELL_DEFINE_ERROR(SequenceValidationFailed);
DBCELL_DEFINE_ERROR(DifferentPair);
DBCELL_DEFINE_ERROR(SearchBudgetExceeded);
DBCELL_DEFINE_ERROR(ReplayMismatch);
DBCELL_DEFINE_ERROR(InvalidPrefix);

// matrix model
DBCELL_DEFINE_ERROR(ZeroTorusValue);
DBCELL_DEFINE_ERROR(NotGaussianDecomposable);
DBCELL_DEFINE_ERROR(NotInCell);
DBCELL_DEFINE_ERROR(RankMismatch);
DBCELL_DEFINE_ERROR(VanishingMinor);
DBCELL_DEFINE_ERROR(GluingMismatch);
DBCELL_DEFINE_ERROR(DegeneratePattern);
DBCELL_DEFINE_ERROR(IdentityFailed);
DBCELL_DEFINE_ERROR(SingularMatrix);

#undef DBCELL_DEFINE_ERROR

}  // namespace dbcell

#endif
