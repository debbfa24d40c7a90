#pragma once

#include <stdexcept>
#include <string>

namespace hopfcqt {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define HOPFCQT_ERROR(Name)                                                   \
  class Name : public Error {                                                 \
   public:                                                                    \
    explicit Name(const std::string& what = "") : Error(#Name, what) {}       \
  };

HOPFCQT_ERROR(DivisionByZero)
HOPFCQT_ERROR(NotARootOfUnity)
HOPFCQT_ERROR(DimensionMismatch)
HOPFCQT_ERROR(ParseError)
HOPFCQT_ERROR(InfiniteGroup)
HOPFCQT_ERROR(MixedGroups)
HOPFCQT_ERROR(UndefinedGeneratorAction)
HOPFCQT_ERROR(MissingEntry)
HOPFCQT_ERROR(WrongGroup)
HOPFCQT_ERROR(ContextMismatch)
HOPFCQT_ERROR(NotInStabilizer)
HOPFCQT_ERROR(NonAbelianStabilizer)
HOPFCQT_ERROR(NotInSpan)
HOPFCQT_ERROR(LabelNotInST)
HOPFCQT_ERROR(HypothesisNotMet)
HOPFCQT_ERROR(UnknownEntry)
HOPFCQT_ERROR(InvalidArgument)

#undef HOPFCQT_ERROR

class SchemaError : public Error {
 public:
  SchemaError(std::string location, const std::string& what)
      : Error("SchemaError", location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace hopfcqt
