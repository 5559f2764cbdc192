#include "sweepcover/error.hpp"

namespace sweepcover {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::EmptyDocument: return "EmptyDocument";
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::NodeWithTwoParents: return "NodeWithTwoParents";
    case Errc::MultipleRoots: return "MultipleRoots";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::EmptyBlock: return "EmptyBlock";
    case Errc::NotASingletonMember: return "NotASingletonMember";
    case Errc::NotAPartitionOfChildren: return "NotAPartitionOfChildren";
    case Errc::LeafNode: return "LeafNode";
    case Errc::InvalidCover: return "InvalidCover";
    case Errc::BadSelection: return "BadSelection";
    case Errc::InvalidN: return "InvalidN";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NonIntegerResult: return "NonIntegerResult";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

bool Error::is_parse_error() const noexcept {
  switch (code_) {
    case Errc::EmptyDocument:
    case Errc::MalformedLine:
    case Errc::InvalidLabel:
    case Errc::DuplicateEdge:
    case Errc::NodeWithTwoParents:
    case Errc::MultipleRoots:
    case Errc::CycleDetected:
    case Errc::EmptyBlock:
      return true;
    default:
      return false;
  }
}

}  // namespace sweepcover
